//! Rational quaternions a + bi + cj + dk with the Hamilton relations
//! i² = j² = k² = −1 and ij = k = −ji.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::fmt::{parse_terms, render_terms, Term};
use super::Rational;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatNum {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl QuatNum {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        QuatNum { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuatNum::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::int(n))
    }

    pub fn i() -> Self {
        QuatNum::new(Rational::zero(), Rational::int(1), Rational::zero(), Rational::zero())
    }

    pub fn j() -> Self {
        QuatNum::new(Rational::zero(), Rational::zero(), Rational::int(1), Rational::zero())
    }

    pub fn k() -> Self {
        QuatNum::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::int(1))
    }

    /// ω = (−1 + i + j + k)/2, a quaternion of multiplicative order 3.
    pub fn omega() -> Self {
        let h = Rational::new(1, 2);
        QuatNum::new(-h.clone(), h.clone(), h.clone(), h)
    }

    pub fn conj(&self) -> Self {
        QuatNum::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// a² + b² + c² + d², zero only at zero.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) + &(&self.b * &self.b)
            + &(&(&self.c * &self.c) + &(&self.d * &self.d))
    }

    pub fn inv(&self) -> Result<Self, Error> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ninv = n.inv()?;
        Ok(self.conj().scale(&ninv))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuatNum::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        QuatNum::new(
            &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
            &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
            &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
            &(&(a1 * d2) + &(b1 * c2)) + &(&(d1 * a2) - &(c1 * b2)),
        )
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        QuatNum::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        QuatNum::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn parse(input: &str) -> Result<Self, Error> {
        parse_terms(input, |ch| match ch {
            'i' => Some(QuatNum::i()),
            'j' => Some(QuatNum::j()),
            'k' => Some(QuatNum::k()),
            _ => None,
        })
    }
}

impl fmt::Display for QuatNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            Term { coeff: self.a.clone(), tokens: "" },
            Term { coeff: self.b.clone(), tokens: "i" },
            Term { coeff: self.c.clone(), tokens: "j" },
            Term { coeff: self.d.clone(), tokens: "k" },
        ];
        f.write_str(&render_terms(&terms))
    }
}

impl fmt::Debug for QuatNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for QuatNum {
    fn from(r: Rational) -> Self {
        QuatNum::from_rational(r)
    }
}

impl Zero for QuatNum {
    fn zero() -> Self {
        QuatNum::int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for QuatNum {
    fn one() -> Self {
        QuatNum::int(1)
    }
}

impl Add for QuatNum {
    type Output = QuatNum;
    fn add(self, rhs: QuatNum) -> QuatNum {
        self.add_ref(&rhs)
    }
}

impl Sub for QuatNum {
    type Output = QuatNum;
    fn sub(self, rhs: QuatNum) -> QuatNum {
        self.sub_ref(&rhs)
    }
}

impl Mul for QuatNum {
    type Output = QuatNum;
    fn mul(self, rhs: QuatNum) -> QuatNum {
        self.mul_ref(&rhs)
    }
}

impl Neg for QuatNum {
    type Output = QuatNum;
    fn neg(self) -> QuatNum {
        QuatNum::new(-self.a, -self.b, -self.c, -self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (QuatNum::i(), QuatNum::j(), QuatNum::k());
        assert_eq!(i.mul_ref(&j), k);
        assert_eq!(j.mul_ref(&i), -k.clone());
        assert_eq!(i.mul_ref(&i), QuatNum::int(-1));
        assert_eq!(j.mul_ref(&j), QuatNum::int(-1));
        assert_eq!(k.mul_ref(&k), QuatNum::int(-1));
    }

    #[test]
    fn omega_has_order_three() {
        let w = QuatNum::omega();
        assert_eq!(w.mul_ref(&w).mul_ref(&w), QuatNum::one());
        assert_ne!(w.mul_ref(&w), QuatNum::one());
    }

    #[test]
    fn norm_and_conjugation() {
        let q = QuatNum::one().add_ref(&QuatNum::i());
        assert_eq!(q.mul_ref(&q.conj()), QuatNum::int(2));
        assert_eq!(q.norm(), Rational::int(2));
        let p = QuatNum::parse("1+i+j+k").unwrap();
        assert_eq!(p.conj(), QuatNum::parse("1-i-j-k").unwrap());
        let q = QuatNum::parse("3/2+k").unwrap();
        assert_eq!(q.conj().conj(), q);
    }

    #[test]
    fn parse_and_display() {
        let w = QuatNum::omega();
        assert_eq!(w.to_string(), "-1/2+i/2+j/2+k/2");
        assert_eq!(QuatNum::parse("-1/2+i/2+j/2+k/2").unwrap(), w);
        // token juxtaposition multiplies in order: ij = k
        assert_eq!(QuatNum::parse("ij").unwrap(), QuatNum::k());
        assert_eq!(QuatNum::parse("ji").unwrap(), -QuatNum::k());
    }
}
