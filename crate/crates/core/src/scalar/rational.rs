//! Arbitrary-precision rationals with an inline `i64` fast path.
//!
//! Every value is kept in lowest terms with a positive denominator, and is
//! demoted to the inline representation whenever both components fit in an
//! `i64`. Equal values therefore always have equal representations, so the
//! derived `Eq`/`Hash` are canonical.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// numerator, denominator: reduced, denominator > 0
    Small(i64, i64),
    /// reduced, denominator > 0, and at least one component outside `i64`
    Big(Box<BigRational>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_i128(a: i128, b: i128) -> i128 {
    num_integer::gcd(a, b)
}

/// Reduce a ratio of `i128`s and demote to `Small` when possible.
fn from_i128(mut n: i128, mut d: i128) -> Rational {
    assert!(d != 0, "rational with zero denominator");
    if d < 0 {
        n = -n;
        d = -d;
    }
    if n == 0 {
        return Rational(Repr::Small(0, 1));
    }
    let g = gcd_i128(n.abs(), d);
    n /= g;
    d /= g;
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
        _ => Rational(Repr::Big(Box::new(BigRational::new(n.into(), d.into())))),
    }
}

fn demote(r: BigRational) -> Rational {
    if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
        Rational(Repr::Small(n, d))
    } else {
        Rational(Repr::Big(Box::new(r)))
    }
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        from_i128(numer as i128, denom as i128)
    }

    pub fn int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    pub fn from_big(r: BigRational) -> Self {
        demote(r)
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// The value as an `i64` if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Small(n, d) => from_i128(*d as i128, *n as i128),
            Repr::Big(r) => demote(r.recip()),
        })
    }

    /// Canonical `numerator/denominator` serialization (always in lowest terms).
    pub fn key(&self, out: &mut String) {
        use std::fmt::Write;
        match &self.0 {
            Repr::Small(n, 1) => write!(out, "{n}").unwrap(),
            Repr::Small(n, d) => write!(out, "{n}/{d}").unwrap(),
            Repr::Big(r) => {
                if r.is_integer() {
                    write!(out, "{}", r.numer()).unwrap()
                } else {
                    write!(out, "{}/{}", r.numer(), r.denom()).unwrap()
                }
            }
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad rational literal `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(demote(BigRational::new(n, d)))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.key(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                (*an as i128 * *bd as i128).cmp(&(*bn as i128 * *ad as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => from_i128(-(n as i128), d as i128),
            Repr::Big(r) => demote(-*r),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $small:expr, $big:expr) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(self, &rhs)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                match (&self.0, &rhs.0) {
                    (Repr::Small(an, ad), Repr::Small(bn, bd)) => {
                        let (an, ad, bn, bd) =
                            (*an as i128, *ad as i128, *bn as i128, *bd as i128);
                        $small(an, ad, bn, bd)
                    }
                    _ => demote($big(self.to_big(), rhs.to_big())),
                }
            }
        }
    };
}

binop!(
    Add,
    add,
    |an, ad, bn, bd| from_i128(an * bd + bn * ad, ad * bd),
    |a: BigRational, b: BigRational| a + b
);
binop!(
    Sub,
    sub,
    |an, ad, bn, bd| from_i128(an * bd - bn * ad, ad * bd),
    |a: BigRational, b: BigRational| a - b
);
binop!(
    Mul,
    mul,
    |an, ad, bn: i128, bd| from_i128(an * bn, ad * bd),
    |a: BigRational, b: BigRational| a * b
);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn reduction_and_sign() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(0, -7), Rational::zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 2), Rational::zero());
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(r(1, 2).inv().unwrap(), r(2, 1));
        assert!(Rational::zero().inv().is_err());
    }

    #[test]
    fn big_promotion_round_trip() {
        let huge = r(i64::MAX, 1) * r(i64::MAX, 1);
        let back = &huge / &r(i64::MAX, 1);
        assert_eq!(back, r(i64::MAX, 1));
        assert!(matches!(back.0, Repr::Small(_, _)));
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(1, 3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-3/4".parse::<Rational>().unwrap(), r(-3, 4));
        assert_eq!(r(-3, 4).to_string(), "-3/4");
        assert_eq!(r(5, 1).to_string(), "5");
    }
}
