//! Exact scalar domains and the trait the generic linear algebra is built on.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;

pub mod fmt;
mod cyclotomic;
mod finite;
mod quaternion;
mod rational;

pub use cyclotomic::CycNum;
pub use finite::{F4, F9};
pub use quaternion::QuatNum;
pub use rational::Rational;

/// Tag identifying a scalar domain in catalog entries and cache files.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Rational,
    Cyclotomic,
    Quaternion,
    F4,
    F9,
}

impl Domain {
    pub fn tag(self) -> &'static str {
        match self {
            Domain::Rational => "rat",
            Domain::Cyclotomic => "cyc",
            Domain::Quaternion => "quat",
            Domain::F4 => "f4",
            Domain::F9 => "f9",
        }
    }
}

/// An exact scalar: a division ring with conjugation, canonical ordering and
/// canonical serialization. Everything is immutable and thread-safe.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    const DOMAIN: Domain;

    fn conj(&self) -> Self;

    /// Multiplicative inverse; `None` exactly at zero.
    fn try_inv(&self) -> Option<Self>;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    /// Canonical serialization: lowest-terms integer coordinates in a fixed
    /// order. This is the stable key used by caches and reports.
    fn key(&self, out: &mut String);

    fn from_key(s: &str) -> Result<Self, Error>;

    /// Parse the human-readable literal grammar (catalog entries).
    fn parse_literal(s: &str) -> Result<Self, Error>;
}

/// Marker for commutative scalar domains (fields), where determinants and
/// ordinary Gaussian elimination make sense without side conventions.
pub trait FieldScalar: Scalar {}

impl Scalar for Rational {
    const DOMAIN: Domain = Domain::Rational;

    fn conj(&self) -> Self {
        self.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn key(&self, out: &mut String) {
        Rational::key(self, out)
    }

    fn from_key(s: &str) -> Result<Self, Error> {
        s.parse()
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        s.trim().parse()
    }
}

impl FieldScalar for Rational {}

impl Scalar for CycNum {
    const DOMAIN: Domain = Domain::Cyclotomic;

    fn conj(&self) -> Self {
        CycNum::conj(self)
    }

    fn try_inv(&self) -> Option<Self> {
        CycNum::inv(self).ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        CycNum::mul_ref(self, other)
    }

    fn add_ref(&self, other: &Self) -> Self {
        CycNum::add_ref(self, other)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        CycNum::sub_ref(self, other)
    }

    fn key(&self, out: &mut String) {
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            c.key(out);
        }
    }

    fn from_key(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("bad cyclotomic key `{s}`")));
        }
        let mut c: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse()?;
        }
        Ok(CycNum::from_coords(c))
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        CycNum::parse(s)
    }
}

impl FieldScalar for CycNum {}

impl Scalar for QuatNum {
    const DOMAIN: Domain = Domain::Quaternion;

    fn conj(&self) -> Self {
        QuatNum::conj(self)
    }

    fn try_inv(&self) -> Option<Self> {
        QuatNum::inv(self).ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        QuatNum::mul_ref(self, other)
    }

    fn add_ref(&self, other: &Self) -> Self {
        QuatNum::add_ref(self, other)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        QuatNum::sub_ref(self, other)
    }

    fn key(&self, out: &mut String) {
        for (i, c) in [&self.a, &self.b, &self.c, &self.d].into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            c.key(out);
        }
    }

    fn from_key(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("bad quaternion key `{s}`")));
        }
        Ok(QuatNum::new(
            parts[0].parse()?,
            parts[1].parse()?,
            parts[2].parse()?,
            parts[3].parse()?,
        ))
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        QuatNum::parse(s)
    }
}

impl Scalar for F4 {
    const DOMAIN: Domain = Domain::F4;

    fn conj(&self) -> Self {
        F4::conj(*self)
    }

    fn try_inv(&self) -> Option<Self> {
        F4::inv(*self)
    }

    fn key(&self, out: &mut String) {
        out.push_str(&self.to_string());
    }

    fn from_key(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => F4::parse(c),
            _ => Err(Error::Parse(format!("bad F4 key `{s}`"))),
        }
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        Self::from_key(s.trim())
    }
}

impl FieldScalar for F4 {}

impl Scalar for F9 {
    const DOMAIN: Domain = Domain::F9;

    fn conj(&self) -> Self {
        F9::conj(*self)
    }

    fn try_inv(&self) -> Option<Self> {
        F9::inv(*self)
    }

    fn key(&self, out: &mut String) {
        out.push_str(&self.to_string());
    }

    fn from_key(s: &str) -> Result<Self, Error> {
        for x in F9::all() {
            if x.to_string() == s {
                return Ok(x);
            }
        }
        Err(Error::Parse(format!("bad F9 key `{s}`")))
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        Self::from_key(s.trim())
    }
}

impl FieldScalar for F9 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        let x = CycNum::v().mul_ref(&CycNum::from_rational(Rational::new(3, 7)));
        let mut k = String::new();
        Scalar::key(&x, &mut k);
        assert_eq!(CycNum::from_key(&k).unwrap(), x);

        let q = QuatNum::omega();
        let mut k = String::new();
        Scalar::key(&q, &mut k);
        assert_eq!(k, "-1/2,1/2,1/2,1/2");
        assert_eq!(QuatNum::from_key(&k).unwrap(), q);
    }
}
