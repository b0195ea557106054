//! The cyclotomic field Q(ζ) for ζ a primitive 12th root of unity.
//!
//! Elements are stored on the power basis 1, ζ, ζ², ζ³ with the reduction
//! ζ⁴ = ζ² − 1. This single field contains every complex scalar used in the
//! catalog: the imaginary unit i = ζ³, the primitive cube roots of unity
//! v = ζ² − 1 and w = v², and t = v − w = √−3.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::fmt::{parse_terms, render_terms, Term};
use super::Rational;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycNum {
    /// Coordinates on 1, ζ, ζ², ζ³.
    c: [Rational; 4],
}

/// ζ^p reduced to the power basis, for p = 0..11.
const POWER_TABLE: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

fn from_table(row: &[i64; 4]) -> CycNum {
    CycNum {
        c: std::array::from_fn(|i| Rational::int(row[i])),
    }
}

impl CycNum {
    pub fn from_coords(c: [Rational; 4]) -> Self {
        CycNum { c }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::int(n))
    }

    /// The imaginary unit i = ζ³.
    pub fn i() -> Self {
        from_table(&POWER_TABLE[3])
    }

    /// v = exp(2πi/3) = ζ² − 1.
    pub fn v() -> Self {
        from_table(&POWER_TABLE[4])
    }

    /// w = v² = exp(4πi/3).
    pub fn w() -> Self {
        from_table(&POWER_TABLE[8])
    }

    /// t = v − w = √−3.
    pub fn t() -> Self {
        CycNum {
            c: [
                Rational::int(-1),
                Rational::zero(),
                Rational::int(2),
                Rational::zero(),
            ],
        }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Apply the Galois automorphism ζ ↦ ζ^k; k must be coprime to 12.
    pub fn galois(&self, k: usize) -> Self {
        debug_assert!(matches!(k % 12, 1 | 5 | 7 | 11));
        let mut out = CycNum::zero();
        for (j, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let row = &POWER_TABLE[(j * k) % 12];
            for (slot, entry) in out.c.iter_mut().zip(row) {
                if *entry != 0 {
                    *slot += &(coeff * &Rational::int(*entry));
                }
            }
        }
        out
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(11)
    }

    /// The Galois twist fixing i and swapping v with w.
    pub fn vw_twist(&self) -> Self {
        self.galois(5)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Product of the nontrivial Galois conjugates; a · p is the rational
        // field norm, so the inverse is p / norm.
        let p = self.galois(5).mul_ref(&self.galois(7)).mul_ref(&self.galois(11));
        let norm = self.mul_ref(&p);
        let norm = norm
            .as_rational()
            .expect("field norm must be rational")
            .clone();
        let ninv = norm.inv()?;
        Ok(CycNum {
            c: std::array::from_fn(|i| &p.c[i] * &ninv),
        })
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut acc: [Rational; 7] = std::array::from_fn(|_| Rational::zero());
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += &(a * b);
            }
        }
        // ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ, ζ⁶ = −1
        let mut c: [Rational; 4] = std::array::from_fn(|i| std::mem::take(&mut acc[i]));
        c[2] += &acc[4];
        c[0] -= &acc[4];
        c[3] += &acc[5];
        c[1] -= &acc[5];
        c[0] -= &acc[6];
        CycNum { c }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        CycNum {
            c: std::array::from_fn(|i| &self.c[i] + &other.c[i]),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        CycNum {
            c: std::array::from_fn(|i| &self.c[i] - &other.c[i]),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum {
            c: std::array::from_fn(|i| &self.c[i] * r),
        }
    }

    pub fn parse(input: &str) -> Result<Self, Error> {
        parse_terms(input, |ch| match ch {
            'i' => Some(CycNum::i()),
            'v' => Some(CycNum::v()),
            'w' => Some(CycNum::w()),
            't' => Some(CycNum::t()),
            _ => None,
        })
    }

    /// Coordinates on the display basis 1, t, i, it.
    fn display_coords(&self) -> [Rational; 4] {
        let half = Rational::new(1, 2);
        let c2h = &self.c[2] * &half;
        let c1h = &self.c[1] * &half;
        [
            &self.c[0] + &c2h,
            c2h,
            &c1h + &self.c[3],
            -c1h,
        ]
    }
}

/// Render a + b·t, preferring the p·v + q·w rewriting when it is shorter.
fn half_terms(a: Rational, b: Rational, one_tok: &'static str, t_tok: &'static str,
              v_tok: &'static str, w_tok: &'static str, out: &mut Vec<Term>) {
    let p = &b - &a;
    let q = -(&a + &b);
    let count = |x: &Rational, y: &Rational| (!x.is_zero()) as usize + (!y.is_zero()) as usize;
    let tc = count(&a, &b);
    let vc = count(&p, &q);
    let frac = |x: &Rational, y: &Rational| !x.is_integer() || !y.is_integer();
    let use_vw = vc < tc || (vc == tc && frac(&a, &b) && !frac(&p, &q));
    if use_vw {
        out.push(Term { coeff: p, tokens: v_tok });
        out.push(Term { coeff: q, tokens: w_tok });
    } else {
        out.push(Term { coeff: a, tokens: one_tok });
        out.push(Term { coeff: b, tokens: t_tok });
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl CycNum {
    fn render(&self) -> String {
        let [a, b, c, d] = self.display_coords();
        let mut terms = Vec::with_capacity(4);
        half_terms(a, b, "", "t", "v", "w", &mut terms);
        half_terms(c, d, "i", "ti", "vi", "wi", &mut terms);
        render_terms(&terms)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum {
            c: std::array::from_fn(|_| Rational::zero()),
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::int(1)
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        self.add_ref(&rhs)
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        self.sub_ref(&rhs)
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        self.mul_ref(&rhs)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            c: self.c.map(|r| -r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_relations() {
        let (v, w, t, i) = (CycNum::v(), CycNum::w(), CycNum::t(), CycNum::i());
        assert_eq!(v.mul_ref(&w), CycNum::one());
        assert_eq!(v.mul_ref(&v), w);
        assert_eq!(v.mul_ref(&v).mul_ref(&v), CycNum::one());
        assert_eq!(t.mul_ref(&t), CycNum::int(-3));
        assert_eq!(i.mul_ref(&i), CycNum::int(-1));
        assert!(CycNum::one().add_ref(&v).add_ref(&w).is_zero());
        assert_eq!(v.sub_ref(&w), t);
    }

    #[test]
    fn inverses() {
        assert_eq!(CycNum::v().inv().unwrap(), CycNum::w());
        let t = CycNum::t();
        assert_eq!(
            t.inv().unwrap(),
            t.scale(&Rational::new(-1, 3)),
        );
        assert_eq!(
            CycNum::int(2).inv().unwrap(),
            CycNum::from_rational(Rational::new(1, 2))
        );
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycNum::v().conj(), CycNum::w());
        assert_eq!(CycNum::i().conj(), -CycNum::i());
        assert_eq!(CycNum::t().conj(), -CycNum::t());
        assert_eq!(CycNum::int(5).conj(), CycNum::int(5));
    }

    #[test]
    fn twist_swaps_v_and_w_and_fixes_i() {
        assert_eq!(CycNum::v().vw_twist(), CycNum::w());
        assert_eq!(CycNum::w().vw_twist(), CycNum::v());
        assert_eq!(CycNum::i().vw_twist(), CycNum::i());
        assert_eq!(CycNum::t().vw_twist(), -CycNum::t());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "1", "-1", "v", "-w", "2v", "t", "-t/3", "1/2+i/2", "v+2w", "-it/3", "3/2"] {
            let x = CycNum::parse(s).unwrap();
            let rendered = x.render();
            assert_eq!(CycNum::parse(&rendered).unwrap(), x, "round trip of {s} via {rendered}");
        }
        // product tokens multiply out
        assert_eq!(
            CycNum::parse("vt").unwrap(),
            CycNum::v().mul_ref(&CycNum::t())
        );
        assert_eq!(
            CycNum::parse("wt").unwrap(),
            CycNum::w().mul_ref(&CycNum::t())
        );
    }

    #[test]
    fn display_prefers_short_forms() {
        assert_eq!(CycNum::v().render(), "v");
        assert_eq!(CycNum::w().render(), "w");
        assert_eq!(CycNum::t().render(), "t");
        assert_eq!(CycNum::v().scale(&Rational::int(2)).render(), "2v");
        assert_eq!(CycNum::int(1).render(), "1");
        assert_eq!(CycNum::zero().render(), "0");
    }
}
