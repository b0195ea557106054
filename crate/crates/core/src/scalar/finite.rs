//! The two finite fields the geometry needs, as lookup tables.
//!
//! F4 = {0, 1, v, w} with characteristic 2 and conjugation x ↦ x².
//! F9 = {a + bi : a, b mod 3} with i² = −1 and conjugation x ↦ x³.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;

/// Element of the field of order 4; the repr encodes 0, 1, v, w as 0..3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const V: F4 = F4(2);
    pub const W: F4 = F4(3);

    pub fn all() -> [F4; 4] {
        [F4(0), F4(1), F4(2), F4(3)]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> F4 {
        assert!(i < 4);
        F4(i as u8)
    }

    /// Frobenius x ↦ x², the nontrivial field automorphism.
    pub fn conj(self) -> F4 {
        match self {
            F4::V => F4::W,
            F4::W => F4::V,
            x => x,
        }
    }

    pub fn inv(self) -> Option<F4> {
        match self {
            F4::ZERO => None,
            F4::ONE => Some(F4::ONE),
            F4::V => Some(F4::W),
            F4::W => Some(F4::V),
            _ => unreachable!(),
        }
    }

    pub fn parse(ch: char) -> Result<F4, Error> {
        match ch {
            '0' => Ok(F4::ZERO),
            '1' => Ok(F4::ONE),
            'v' => Ok(F4::V),
            'w' => Ok(F4::W),
            _ => Err(Error::Parse(format!("bad F4 digit `{ch}`"))),
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "v", "w"][self.0 as usize])
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, rhs: F4) -> F4 {
        // With 1, v, w encoded as 1, 2, 3 the char-2 addition is exactly xor:
        // 1 + v = w, v + w = 1, x + x = 0.
        F4(self.0 ^ rhs.0)
    }
}

impl Sub for F4 {
    type Output = F4;
    fn sub(self, rhs: F4) -> F4 {
        self + rhs
    }
}

impl Neg for F4 {
    type Output = F4;
    fn neg(self) -> F4 {
        self
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        const TABLE: [[u8; 4]; 4] = [
            [0, 0, 0, 0],
            [0, 1, 2, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
        ];
        F4(TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl Zero for F4 {
    fn zero() -> Self {
        F4::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for F4 {
    fn one() -> Self {
        F4::ONE
    }
}

/// Element a + b·i of the field of order 9, components mod 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct F9 {
    re: u8,
    im: u8,
}

impl F9 {
    pub fn new(re: i64, im: i64) -> F9 {
        F9 {
            re: re.rem_euclid(3) as u8,
            im: im.rem_euclid(3) as u8,
        }
    }

    pub fn all() -> Vec<F9> {
        (0..3)
            .flat_map(|a| (0..3).map(move |b| F9::new(a, b)))
            .collect()
    }

    /// Frobenius x ↦ x³, i.e. a + bi ↦ a − bi.
    pub fn conj(self) -> F9 {
        F9::new(self.re as i64, -(self.im as i64))
    }

    pub fn inv(self) -> Option<F9> {
        // norm = a² + b² lies in F3; invert by the conjugate over the norm.
        let n = (self.re * self.re + self.im * self.im) % 3;
        let ninv = match n {
            0 => return None,
            1 => 1,
            2 => 2, // 2 · 2 = 4 = 1 mod 3
            _ => unreachable!(),
        };
        let c = self.conj();
        Some(F9::new(c.re as i64 * ninv, c.im as i64 * ninv))
    }
}

impl fmt::Display for F9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => write!(f, "i"),
            (0, m) => write!(f, "{m}i"),
            (r, 1) => write!(f, "{r}+i"),
            (r, m) => write!(f, "{r}+{m}i"),
        }
    }
}

impl Add for F9 {
    type Output = F9;
    fn add(self, rhs: F9) -> F9 {
        F9::new(self.re as i64 + rhs.re as i64, self.im as i64 + rhs.im as i64)
    }
}

impl Sub for F9 {
    type Output = F9;
    fn sub(self, rhs: F9) -> F9 {
        F9::new(self.re as i64 - rhs.re as i64, self.im as i64 - rhs.im as i64)
    }
}

impl Neg for F9 {
    type Output = F9;
    fn neg(self) -> F9 {
        F9::new(-(self.re as i64), -(self.im as i64))
    }
}

impl Mul for F9 {
    type Output = F9;
    fn mul(self, rhs: F9) -> F9 {
        let (a, b) = (self.re as i64, self.im as i64);
        let (c, d) = (rhs.re as i64, rhs.im as i64);
        F9::new(a * c - b * d, a * d + b * c)
    }
}

impl Zero for F9 {
    fn zero() -> Self {
        F9::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl One for F9 {
    fn one() -> Self {
        F9::new(1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_field_axioms() {
        for a in F4::all() {
            for b in F4::all() {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a + b).conj(), a.conj() + b.conj());
                assert_eq!((a * b).conj(), a.conj() * b.conj());
                for c in F4::all() {
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
            assert_eq!(a + a, F4::ZERO);
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F4::ONE);
            }
        }
        assert_eq!(F4::ONE + F4::V, F4::W);
        assert_eq!(F4::V * F4::V, F4::W);
        assert_eq!(F4::V * F4::W, F4::ONE);
        assert_eq!(F4::V.conj(), F4::W);
    }

    #[test]
    fn f9_is_a_field_of_nine_elements() {
        let all = F9::all();
        assert_eq!(all.len(), 9);
        let i = F9::new(0, 1);
        assert_eq!(i * i, F9::new(-1, 0));
        for &a in &all {
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F9::one());
            }
            // conj is the cube map
            assert_eq!(a.conj(), a * a * a);
        }
        // the multiplicative group is cyclic of order 8
        let g = F9::new(1, 1);
        let mut x = g;
        let mut n = 1;
        while x != F9::one() {
            x = x * g;
            n += 1;
        }
        assert_eq!(n, 8);
    }
}
