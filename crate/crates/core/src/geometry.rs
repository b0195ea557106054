//! The finite unitary plane over F4, the reduction from characteristic-zero
//! mirrors, and the brute-force finite unitary groups.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::FinMatGroup;
use crate::matrix::Matrix;
use crate::scalar::{CycNum, Scalar, F4, F9};

/// A projective point over F4, canonicalized so the first nonzero coordinate
/// is 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjPoint(pub [F4; 3]);

impl ProjPoint {
    pub fn canonical(v: [F4; 3]) -> Option<ProjPoint> {
        let lead = v.iter().find(|x| !x.is_zero())?;
        let inv = lead.inv().unwrap();
        Some(ProjPoint([inv * v[0], inv * v[1], inv * v[2]]))
    }

    pub fn parse(label: &str) -> Result<ProjPoint> {
        let chars: Vec<char> = label.chars().collect();
        if chars.len() != 3 {
            return Err(Error::Parse(format!("bad point label `{label}`")));
        }
        let v = [
            F4::parse(chars[0])?,
            F4::parse(chars[1])?,
            F4::parse(chars[2])?,
        ];
        ProjPoint::canonical(v).ok_or_else(|| Error::Parse("zero point".into()))
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

/// All 21 projective points, in canonical enumeration order.
pub fn all_points() -> Vec<ProjPoint> {
    let mut pts = Vec::new();
    for a in F4::all() {
        for b in F4::all() {
            for c in F4::all() {
                if let Some(p) = ProjPoint::canonical([a, b, c]) {
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
            }
        }
    }
    pts
}

pub fn is_singular(p: &ProjPoint) -> bool {
    hermitian(&p.0, &p.0).is_zero()
}

/// The Hermitian form h(x, y) = Σ xᵢ·conj(yᵢ), with conjugation x ↦ x².
pub fn hermitian(x: &[F4; 3], y: &[F4; 3]) -> F4 {
    let mut acc = F4::ZERO;
    for i in 0..3 {
        acc = acc + x[i] * y[i].conj();
    }
    acc
}

/// (nonsingular, singular) points; 12 + 9.
pub fn classify_points() -> (Vec<ProjPoint>, Vec<ProjPoint>) {
    all_points().into_iter().partition(|p| !is_singular(p))
}

/// The perpendicular line of a point: all points x with h(x, p) = 0.
pub fn perp_line(p: &ProjPoint) -> Vec<ProjPoint> {
    all_points()
        .into_iter()
        .filter(|x| hermitian(&x.0, &p.0).is_zero())
        .collect()
}

#[derive(Debug)]
pub struct LineProfileReport {
    /// every nonsingular point's perpendicular line has 5 points, 2
    /// nonsingular + 3 singular
    pub nonsingular_profiles_ok: bool,
    /// every singular point's perpendicular line has 5 points, 1 singular +
    /// 4 nonsingular
    pub singular_profiles_ok: bool,
    /// p ∈ p^⊥ exactly when p is singular
    pub self_incidence_ok: bool,
}

pub fn line_profile() -> LineProfileReport {
    let mut nonsingular_profiles_ok = true;
    let mut singular_profiles_ok = true;
    let mut self_incidence_ok = true;
    for p in all_points() {
        let line = perp_line(&p);
        let singular = line.iter().filter(|q| is_singular(q)).count();
        let nonsingular = line.len() - singular;
        if is_singular(&p) {
            if (nonsingular, singular) != (4, 1) {
                singular_profiles_ok = false;
            }
        } else if (nonsingular, singular) != (2, 3) {
            nonsingular_profiles_ok = false;
        }
        if line.contains(&p) != is_singular(&p) {
            self_incidence_ok = false;
        }
    }
    LineProfileReport {
        nonsingular_profiles_ok,
        singular_profiles_ok,
        self_incidence_ok,
    }
}

/// Reduce a rational number with odd denominator modulo 2.
fn rational_mod2(r: &crate::scalar::Rational) -> Result<bool> {
    let mut key = String::new();
    r.key(&mut key);
    let (num, den) = match key.split_once('/') {
        Some((n, d)) => (n.to_string(), d.to_string()),
        None => (key, "1".to_string()),
    };
    let dlast = den.bytes().last().unwrap();
    if (dlast - b'0') % 2 == 0 {
        return Err(Error::NotEisensteinIntegral(format!("{r}")));
    }
    let nlast = num.trim_start_matches('-').bytes().last().unwrap();
    Ok((nlast - b'0') % 2 == 1)
}

/// Reduce one cyclotomic scalar in Z[v] (localized away from 2) to F4:
/// 2 ↦ 0, v ↦ v.
pub fn reduce_scalar_mod2(z: &CycNum) -> Result<F4> {
    let c = z.coords();
    if !c[1].is_zero() || !c[3].is_zero() {
        return Err(Error::NotEisensteinIntegral(format!("{z}")));
    }
    // z = a + b·v with a = c0 + c2, b = c2
    let a = &c[0] + &c[2];
    let b = c[2].clone();
    let am = rational_mod2(&a)?;
    let bm = rational_mod2(&b)?;
    let mut out = F4::ZERO;
    if am {
        out = out + F4::ONE;
    }
    if bm {
        out = out + F4::V;
    }
    Ok(out)
}

/// Reduce a cyclotomic 3-vector with Eisenstein-integral entries to its
/// projective point over F4.
pub fn reduce_mod2(v: &[CycNum]) -> Result<ProjPoint> {
    if v.len() != 3 {
        return Err(Error::DimensionMismatch(v.len(), 3));
    }
    let reduced = [
        reduce_scalar_mod2(&v[0])?,
        reduce_scalar_mod2(&v[1])?,
        reduce_scalar_mod2(&v[2])?,
    ];
    ProjPoint::canonical(reduced)
        .ok_or_else(|| Error::NotEisensteinIntegral("vector reduces to zero".into()))
}

/// Entrywise reduction of a cyclotomic matrix to F4.
pub fn reduce_matrix_mod2(m: &Matrix<CycNum>) -> Result<Matrix<F4>> {
    let n = m.dim();
    let entries = m
        .entries()
        .iter()
        .map(reduce_scalar_mod2)
        .collect::<Result<Vec<F4>>>()?;
    Ok(Matrix::from_entries(n, entries))
}

/// Brute-force scan of all 4⁹ matrices over F4 for M·dagger(M) = I; the
/// unitary group of the plane, independent of any closure computation.
pub fn u3f4_brute_force_elements() -> Vec<Matrix<F4>> {
    let all = F4::all();
    let mut found = Vec::new();
    let mut entries = [F4::ZERO; 9];
    let total = 4usize.pow(9);
    for code in 0..total {
        let mut c = code;
        for slot in entries.iter_mut() {
            *slot = all[c & 3];
            c >>= 2;
        }
        let m = Matrix::from_entries(3, entries.to_vec());
        if m.is_unitary() {
            found.push(m);
        }
    }
    found
}

/// {λ ∈ F4 : λ·conj(λ) = 1}: the scalars of the geometry.
pub fn u1f4_elements() -> Vec<F4> {
    F4::all()
        .into_iter()
        .filter(|x| (*x * x.conj()) == F4::ONE)
        .collect()
}

/// Brute-force scan of all 9⁴ matrices over F9 preserving the Hermitian form
/// with determinant 1, returned as a matrix group.
pub fn su2f9_group() -> Result<FinMatGroup<F9>> {
    let all = F9::all();
    let mut found = Vec::new();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                for &d in &all {
                    let m = Matrix::from_rows(vec![vec![a, b], vec![c, d]]);
                    if !m.is_unitary() {
                        continue;
                    }
                    if m.det() != F9::new(1, 0) {
                        continue;
                    }
                    found.push(m);
                }
            }
        }
    }
    FinMatGroup::from_elements("su2f9", found, 100)
}

/// Action of an F4 matrix on a projective point (column convention).
pub fn point_image(m: &Matrix<F4>, p: &ProjPoint) -> ProjPoint {
    let mut out = [F4::ZERO; 3];
    for (r, slot) in out.iter_mut().enumerate() {
        for k in 0..3 {
            *slot = *slot + *m.get(r, k) * p.0[k];
        }
    }
    ProjPoint::canonical(out).expect("invertible matrix maps points to points")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_one_points_split_twelve_nine() {
        let (non, sing) = classify_points();
        assert_eq!(non.len() + sing.len(), 21);
        assert_eq!(non.len(), 12);
        assert_eq!(sing.len(), 9);
        // a point is singular exactly when it has an even number of nonzero
        // coordinates
        for p in all_points() {
            let nonzero = p.0.iter().filter(|x| !x.is_zero()).count();
            assert_eq!(is_singular(&p), nonzero % 2 == 0, "{}", p.label());
        }
        assert!(!is_singular(&ProjPoint::parse("100").unwrap()));
        assert!(is_singular(&ProjPoint::parse("011").unwrap()));
    }

    #[test]
    fn hermitian_form_is_hermitian() {
        for x in all_points() {
            for y in all_points() {
                assert_eq!(hermitian(&x.0, &y.0).conj(), hermitian(&y.0, &x.0));
            }
        }
    }

    #[test]
    fn line_profiles() {
        let r = line_profile();
        assert!(r.nonsingular_profiles_ok);
        assert!(r.singular_profiles_ok);
        assert!(r.self_incidence_ok);
    }

    #[test]
    fn scalar_reduction() {
        use crate::scalar::Rational;
        assert_eq!(reduce_scalar_mod2(&CycNum::t()).unwrap(), F4::ONE);
        assert_eq!(reduce_scalar_mod2(&CycNum::v()).unwrap(), F4::V);
        assert_eq!(reduce_scalar_mod2(&CycNum::w()).unwrap(), F4::W);
        assert_eq!(reduce_scalar_mod2(&CycNum::int(2)).unwrap(), F4::ZERO);
        // -t/3 reduces to 1 (3 is invertible mod 2)
        let mt3 = CycNum::t().scale(&Rational::new(-1, 3));
        assert_eq!(reduce_scalar_mod2(&mt3).unwrap(), F4::ONE);
        assert!(reduce_scalar_mod2(&CycNum::i()).is_err());
        assert!(reduce_scalar_mod2(&CycNum::from_rational(Rational::new(1, 2))).is_err());
    }

    #[test]
    fn point_reduction_examples() {
        let t = CycNum::t();
        let z = CycNum::zero();
        let p = reduce_mod2(&[t, z.clone(), z.clone()]).unwrap();
        assert_eq!(p.label(), "100");
        let one = CycNum::int(1);
        let p = reduce_mod2(&[one.clone(), one.clone(), one]).unwrap();
        assert_eq!(p.label(), "111");
    }

    #[test]
    fn u1f4_has_order_three() {
        assert_eq!(u1f4_elements().len(), 3);
    }
}
