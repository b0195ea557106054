//! Complex and quaternionic reflections: detection, construction from a root
//! and eigenvalue, and realification of the order-648 mirror configuration to
//! a rational reflection group.
//!
//! A reflection is an invertible matrix with exactly one nontrivial
//! eigenvalue; its root spans the image of M − I and its mirror is the fixed
//! hyperplane.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::FinMatGroup;
use crate::matrix::{canonical_line, hermitian_dot, Matrix};
use crate::scalar::{CycNum, QuatNum, Rational, Scalar};

#[derive(Clone, Debug)]
pub struct ReflectionData {
    /// Group element index.
    pub element: usize,
    /// Eigenvalue on the root line (a root of unity ≠ 1).
    pub eigenvalue: CycNum,
}

#[derive(Clone, Debug)]
pub struct Mirror {
    /// Canonical root: first nonzero coordinate normalized to 1.
    pub root: Vec<CycNum>,
    pub reflections: Vec<ReflectionData>,
}

#[derive(Clone, Debug)]
pub struct MirrorSet {
    pub mirrors: Vec<Mirror>,
}

impl MirrorSet {
    pub fn reflection_count(&self) -> usize {
        self.mirrors.iter().map(|m| m.reflections.len()).sum()
    }

    pub fn mirror_count(&self) -> usize {
        self.mirrors.len()
    }

    pub fn roots(&self) -> Vec<Vec<CycNum>> {
        self.mirrors.iter().map(|m| m.root.clone()).collect()
    }
}

/// Classify every group element by rank(M − I); the rank-1 elements are the
/// reflections, grouped by mirror.
pub fn reflection_scan(g: &FinMatGroup<CycNum>) -> MirrorSet {
    let n = g.dim();
    let id = Matrix::identity(n);
    let mut by_root: BTreeMap<Vec<CycNum>, Vec<ReflectionData>> = BTreeMap::new();
    for e in 1..g.order() {
        let m = g.matrix(e);
        let d = m.sub(&id);
        if n - d.nullspace().len() != 1 {
            continue;
        }
        // the image of M − I is spanned by any nonzero column
        let col = (0..n)
            .find(|&c| (0..n).any(|r| !d.get(r, c).is_zero()))
            .expect("rank-1 matrix has a nonzero column");
        let root_raw: Vec<CycNum> = (0..n).map(|r| d.get(r, col).clone()).collect();
        let root = canonical_line(&root_raw);
        // eigenvalue: M·root = λ·root at the leading (=1) coordinate
        let lead = root.iter().position(|x| !x.is_zero()).unwrap();
        let image: Vec<CycNum> = (0..n)
            .map(|r| {
                let mut acc = CycNum::zero();
                for k in 0..n {
                    acc = acc.add_ref(&m.get(r, k).mul_ref(&root[k]));
                }
                acc
            })
            .collect();
        let lambda = image[lead].clone();
        debug_assert!(
            image
                .iter()
                .zip(&root)
                .all(|(i, r)| *i == lambda.mul_ref(r)),
            "root must be an eigenvector"
        );
        by_root
            .entry(root)
            .or_default()
            .push(ReflectionData {
                element: e,
                eigenvalue: lambda,
            });
    }
    MirrorSet {
        mirrors: by_root
            .into_iter()
            .map(|(root, mut reflections)| {
                reflections.sort_by_key(|r| r.element);
                Mirror { root, reflections }
            })
            .collect(),
    }
}

/// x ↦ x − (x·r)/(r·r) (1−λ) r on column vectors, with the Hermitian pairing
/// x·r = Σ xᵢ conj(rᵢ): the matrix I − ((1−λ)/(r·r)) r r†. λ = 1 collapses to
/// the identity.
pub fn build_complex_reflection(root: &[CycNum], lambda: &CycNum) -> Result<Matrix<CycNum>> {
    if root.iter().all(CycNum::is_zero) {
        return Err(Error::ZeroRoot);
    }
    let n = root.len();
    let norm = hermitian_dot(root, root);
    let scale = CycNum::one()
        .sub_ref(lambda)
        .mul_ref(&norm.inv().expect("nonzero root has nonzero norm"));
    let mut m: Matrix<CycNum> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let term = scale.mul_ref(&root[i]).mul_ref(&root[j].conj());
            m.set(i, j, m.get(i, j).sub_ref(&term));
        }
    }
    Ok(m)
}

/// The quaternionic version acts on row vectors from the right with scalars
/// on the left: M[i][j] = δᵢⱼ − conj(rᵢ)·(1−λ)·rⱼ/(r·r), so that replacing x
/// by μx scales the image by μ on the left.
pub fn build_quaternionic_reflection(
    root: &[QuatNum],
    lambda: &QuatNum,
) -> Result<Matrix<QuatNum>> {
    if root.iter().all(QuatNum::is_zero) {
        return Err(Error::ZeroRoot);
    }
    let n = root.len();
    let norm = hermitian_dot(root, root);
    let ninv = Scalar::try_inv(&norm).expect("nonzero root has nonzero norm");
    let one_minus = QuatNum::one().sub_ref(lambda);
    let mut m: Matrix<QuatNum> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let term = root[i]
                .conj()
                .mul_ref(&one_minus)
                .mul_ref(&root[j])
                .mul_ref(&ninv);
            m.set(i, j, m.get(i, j).sub_ref(&term));
        }
    }
    Ok(m)
}

/// Result of realifying the complex mirror configuration.
pub struct RealifiedMirrors {
    /// The (deduplicated) primitive integer root lines in R⁶.
    pub root_lines: Vec<Vec<Rational>>,
    /// Order-2 reflections, one per root line, orthogonal for the realified
    /// Hermitian form.
    pub reflections: Vec<Matrix<Rational>>,
}

/// Blow each complex mirror line up to its three unit-scalar representatives,
/// write each complex coordinate over the basis {1, v}, and dedupe the
/// resulting real 6-vectors into root lines. Eisenstein-integer roots stay
/// integral; roots of Hermitian norm 1 are rescaled by t to norm 3 first, so
/// all 36 lines carry the same norm.
pub fn realify_mirrors(mirror_roots: &[Vec<CycNum>]) -> Result<RealifiedMirrors> {
    let mut lines: BTreeMap<Vec<Rational>, ()> = BTreeMap::new();
    for root in mirror_roots {
        let scaled = eisenstein_norm3_rep(root)?;
        for unit in [CycNum::one(), CycNum::v(), CycNum::w()] {
            let vec: Vec<CycNum> = scaled.iter().map(|x| x.mul_ref(&unit)).collect();
            let mut real = Vec::with_capacity(vec.len() * 2);
            for z in &vec {
                let (a, b) = eisenstein_coords(z)?;
                real.push(a);
                real.push(b);
            }
            lines.insert(canonical_real_line(&real), ());
        }
    }
    let root_lines: Vec<Vec<Rational>> = lines.into_keys().collect();
    let reflections = root_lines
        .iter()
        .map(|l| real_reflection(l))
        .collect::<Result<_>>()?;
    Ok(RealifiedMirrors {
        root_lines,
        reflections,
    })
}

/// Close the realified reflections into a rational matrix group.
pub fn realified_group(realified: &RealifiedMirrors, max_order: usize) -> Result<FinMatGroup<Rational>> {
    // A small prefix of the reflections already generates the full group;
    // closing over it and then checking membership of every reflection is
    // equivalent to closing over all 36 and much cheaper.
    let total = realified.reflections.len();
    let mut k = 6.min(total);
    loop {
        let gens: Vec<(String, Matrix<Rational>)> = realified.reflections[..k]
            .iter()
            .enumerate()
            .map(|(i, m)| (format!("r{i}"), m.clone()))
            .collect();
        let g = FinMatGroup::closure("weyl_e6", gens, max_order)?;
        if realified
            .reflections
            .iter()
            .all(|m| g.index_of(m).is_some())
        {
            return Ok(g);
        }
        if k == total {
            return Ok(g);
        }
        k = (k + 4).min(total);
    }
}

/// The realified Hermitian form on R⁶: per complex coordinate, the Gram
/// matrix of {1, v} is [[1, -1/2], [-1/2, 1]]; scaled by 2 to stay integral.
fn gram_times(v: &[Rational]) -> Vec<Rational> {
    let two = Rational::int(2);
    let mut out = Vec::with_capacity(v.len());
    for pair in v.chunks(2) {
        out.push(&(&two * &pair[0]) - &pair[1]);
        out.push(&(&two * &pair[1]) - &pair[0]);
    }
    out
}

fn real_reflection(root: &[Rational]) -> Result<Matrix<Rational>> {
    if root.iter().all(Rational::is_zero) {
        return Err(Error::ZeroRoot);
    }
    let n = root.len();
    let b_root = gram_times(root);
    let norm: Rational = root
        .iter()
        .zip(&b_root)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |acc, x| &acc + &x);
    let scale = &Rational::int(2) / &norm;
    let mut m: Matrix<Rational> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let term = &(&scale * &root[i]) * &b_root[j];
            m.set(i, j, m.get(i, j).sub_ref(&term));
        }
    }
    Ok(m)
}

/// (a, b) with z = a + b·v; errors unless z lies in Q(v).
fn eisenstein_coords(z: &CycNum) -> Result<(Rational, Rational)> {
    let c = z.coords();
    if !c[1].is_zero() || !c[3].is_zero() {
        return Err(Error::NotEisensteinIntegral(format!("{z}")));
    }
    // z = c0 + c2·ζ² with ζ² = 1 + v
    Ok((&c[0] + &c[2], c[2].clone()))
}

/// Scale a mirror root to a primitive Eisenstein-integer vector of Hermitian
/// norm 3.
fn eisenstein_norm3_rep(root: &[CycNum]) -> Result<Vec<CycNum>> {
    // clear denominators and divide by the integer content
    let mut denom_lcm: i64 = 1;
    let mut coords = Vec::new();
    for z in root {
        let (a, b) = eisenstein_coords(z)?;
        for r in [&a, &b] {
            let mut key = String::new();
            r.key(&mut key);
            let d: i64 = key.split('/').nth(1).map_or(1, |s| s.parse().unwrap());
            denom_lcm = num_integer::lcm(denom_lcm, d);
        }
        coords.push((a, b));
    }
    let scale = Rational::int(denom_lcm);
    let ints: Vec<(i64, i64)> = coords
        .iter()
        .map(|(a, b)| {
            (
                (a * &scale).to_i64().expect("cleared denominator"),
                (b * &scale).to_i64().expect("cleared denominator"),
            )
        })
        .collect();
    let content = ints
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .fold(0i64, |acc, x| num_integer::gcd(acc, x));
    let content = content.max(1);
    let vec: Vec<CycNum> = ints
        .iter()
        .map(|&(a, b)| {
            CycNum::from_rational(Rational::int(a / content))
                .add_ref(&CycNum::v().scale(&Rational::int(b / content)))
        })
        .collect();
    let norm = hermitian_dot(&vec, &vec);
    if norm == CycNum::int(3) {
        Ok(vec)
    } else if norm == CycNum::int(1) {
        let t = CycNum::t();
        Ok(vec.iter().map(|x| x.mul_ref(&t)).collect())
    } else {
        Err(Error::NotEisensteinIntegral(format!(
            "unexpected primitive root norm {norm}"
        )))
    }
}

/// Canonical representative of a real line: primitive integer vector with
/// positive leading coordinate.
fn canonical_real_line(v: &[Rational]) -> Vec<Rational> {
    let mut denom_lcm: i64 = 1;
    for r in v {
        let mut key = String::new();
        r.key(&mut key);
        let d: i64 = key.split('/').nth(1).map_or(1, |s| s.parse().unwrap());
        denom_lcm = num_integer::lcm(denom_lcm, d);
    }
    let scale = Rational::int(denom_lcm);
    let ints: Vec<i64> = v
        .iter()
        .map(|r| (r * &scale).to_i64().expect("cleared denominator"))
        .collect();
    let content = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x)).max(1);
    let mut out: Vec<i64> = ints.iter().map(|x| x / content).collect();
    if let Some(first) = out.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in &mut out {
                *x = -*x;
            }
        }
    }
    out.into_iter().map(Rational::int).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn cyc(s: &str) -> CycNum {
        CycNum::parse(s).unwrap()
    }

    #[test]
    fn lambda_one_collapses_to_identity() {
        let r = vec![cyc("t"), cyc("0"), cyc("0")];
        let m = build_complex_reflection(&r, &CycNum::one()).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn zero_root_is_rejected() {
        let z = vec![CycNum::zero(); 3];
        assert!(matches!(
            build_complex_reflection(&z, &CycNum::v()),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn diagonal_reflection_from_t_axis() {
        // root (t,0,0) with eigenvalue v gives exactly diag(v,1,1)
        let r = vec![cyc("t"), cyc("0"), cyc("0")];
        let m = build_complex_reflection(&r, &CycNum::v()).unwrap();
        assert_eq!(&m, catalog().cyc_matrix("u1matrix").unwrap());
    }

    #[test]
    fn quaternionic_coordinate_reflection() {
        let r: Vec<QuatNum> = vec![
            QuatNum::int(2),
            QuatNum::zero(),
            QuatNum::zero(),
            QuatNum::zero(),
        ];
        let m = build_quaternionic_reflection(&r, &QuatNum::int(-1)).unwrap();
        let mut want = Matrix::identity(4);
        want.set(0, 0, QuatNum::int(-1));
        assert_eq!(m, want);
    }

    #[test]
    fn order_two_reflection_ignores_root_scaling() {
        let cat = catalog();
        let roots = cat.quat_vectors("quat_mirror_roots").unwrap();
        let lambda = QuatNum::int(-1);
        for root in roots {
            let m = build_quaternionic_reflection(root, &lambda).unwrap();
            let scaled: Vec<QuatNum> = root.iter().map(|x| QuatNum::j().mul_ref(x)).collect();
            let m2 = build_quaternionic_reflection(&scaled, &lambda).unwrap();
            assert_eq!(m, m2);
            assert!(m.mul_unchecked(&m).is_identity());
        }
    }

    #[test]
    fn product_of_first_two_mirror_reflections_is_the_hadamard_generator() {
        let cat = catalog();
        let roots = cat.quat_vectors("quat_mirror_roots").unwrap();
        let lambda = QuatNum::int(-1);
        let r1 = build_quaternionic_reflection(&roots[0], &lambda).unwrap();
        let r2 = build_quaternionic_reflection(&roots[1], &lambda).unwrap();
        assert_eq!(
            r1.mul_unchecked(&r2),
            *cat.quat_matrix("gm4q_1").unwrap()
        );
    }

    #[test]
    fn real_reflections_square_to_identity() {
        let root: Vec<Rational> = [1, 0, 1, 0, 1, 0].iter().map(|&x| Rational::int(x)).collect();
        let m = real_reflection(&root).unwrap();
        assert!(m.mul_unchecked(&m).is_identity());
    }
}
