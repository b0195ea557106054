//! The single source of truth for every literal matrix, vector and generator
//! set, stored as text in `data.cat` and parsed at load. A checksum of the
//! text is pinned in the test suite, so any edit to the literals is loud.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_dot, row_space_rank, Matrix};
use crate::scalar::{CycNum, Domain, QuatNum, Scalar};

pub const CATALOG_TEXT: &str = include_str!("data.cat");

#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub domain: Domain,
    pub dim: usize,
    pub expected_order: Option<usize>,
    pub generator_names: Vec<String>,
}

#[derive(Default)]
pub struct Catalog {
    pub cyc_matrices: BTreeMap<String, Matrix<CycNum>>,
    pub quat_matrices: BTreeMap<String, Matrix<QuatNum>>,
    pub cyc_vectors: BTreeMap<String, Vec<Vec<CycNum>>>,
    pub quat_vectors: BTreeMap<String, Vec<Vec<QuatNum>>>,
    /// Rows of point labels over F4, one row per orbit triple.
    pub point_lists: BTreeMap<String, Vec<Vec<String>>>,
    pub groups: BTreeMap<String, GroupSpec>,
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The parsed catalog (loaded once).
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| Catalog::parse(CATALOG_TEXT).expect("embedded catalog must parse"))
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut cat = Catalog::default();
        let mut lines = text.lines().enumerate().peekable();
        while let Some((lineno, raw)) = lines.next() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut head = line.split_whitespace();
            let kind = head.next().unwrap();
            let err = |msg: &str| Error::Parse(format!("catalog line {}: {msg}", lineno + 1));
            let name = head
                .next()
                .ok_or_else(|| err("missing entry name"))?
                .to_string();
            let mut body = Vec::new();
            for (_, raw) in lines.by_ref() {
                let l = raw.trim();
                if l == "end" {
                    break;
                }
                if !l.is_empty() && !l.starts_with('#') {
                    body.push(l.to_string());
                }
            }
            match kind {
                "matrix" => {
                    let domain = parse_domain(head.next(), &err)?;
                    let dim: usize = head
                        .next()
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| err("missing dimension"))?;
                    if body.len() != dim {
                        return Err(err("row count does not match dimension"));
                    }
                    match domain {
                        Domain::Cyclotomic => {
                            cat.cyc_matrices.insert(name, parse_matrix(dim, &body)?);
                        }
                        Domain::Quaternion => {
                            cat.quat_matrices.insert(name, parse_matrix(dim, &body)?);
                        }
                        _ => return Err(err("unsupported matrix domain")),
                    }
                }
                "vectors" => {
                    let domain = parse_domain(head.next(), &err)?;
                    let dim: usize = head
                        .next()
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| err("missing dimension"))?;
                    match domain {
                        Domain::Cyclotomic => {
                            cat.cyc_vectors.insert(name, parse_vectors(dim, &body)?);
                        }
                        Domain::Quaternion => {
                            cat.quat_vectors.insert(name, parse_vectors(dim, &body)?);
                        }
                        _ => return Err(err("unsupported vector domain")),
                    }
                }
                "points" => {
                    let rows = body
                        .iter()
                        .map(|l| l.split_whitespace().map(str::to_string).collect())
                        .collect();
                    cat.point_lists.insert(name, rows);
                }
                "group" => {
                    let domain = parse_domain(head.next(), &err)?;
                    let dim: usize = head
                        .next()
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| err("missing dimension"))?;
                    let expected_order = head
                        .next()
                        .map(|o| {
                            o.strip_prefix("order=")
                                .and_then(|v| v.parse().ok())
                                .ok_or_else(|| err("bad order attribute"))
                        })
                        .transpose()?;
                    let mut generator_names = Vec::new();
                    for l in &body {
                        let rest = l
                            .strip_prefix("use")
                            .ok_or_else(|| err("group bodies contain only `use` lines"))?;
                        generator_names.extend(rest.split_whitespace().map(str::to_string));
                    }
                    cat.groups.insert(
                        name.clone(),
                        GroupSpec {
                            name,
                            domain,
                            dim,
                            expected_order,
                            generator_names,
                        },
                    );
                }
                other => return Err(err(&format!("unknown entry kind `{other}`"))),
            }
        }
        // Generator references must resolve.
        for spec in cat.groups.values() {
            for g in &spec.generator_names {
                let found = match spec.domain {
                    Domain::Cyclotomic => cat.cyc_matrices.contains_key(g),
                    Domain::Quaternion => cat.quat_matrices.contains_key(g),
                    _ => false,
                };
                if !found {
                    return Err(Error::UnknownName(g.clone()));
                }
            }
        }
        Ok(cat)
    }

    pub fn cyc_matrix(&self, name: &str) -> Result<&Matrix<CycNum>> {
        self.cyc_matrices
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn quat_matrix(&self, name: &str) -> Result<&Matrix<QuatNum>> {
        self.quat_matrices
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn cyc_vectors(&self, name: &str) -> Result<&Vec<Vec<CycNum>>> {
        self.cyc_vectors
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn quat_vectors(&self, name: &str) -> Result<&Vec<Vec<QuatNum>>> {
        self.quat_vectors
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn points(&self, name: &str) -> Result<&Vec<Vec<String>>> {
        self.point_lists
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn group_spec(&self, name: &str) -> Result<&GroupSpec> {
        self.groups
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn cyc_generators(&self, spec: &GroupSpec) -> Result<Vec<(String, Matrix<CycNum>)>> {
        spec.generator_names
            .iter()
            .map(|n| Ok((n.clone(), self.cyc_matrix(n)?.clone())))
            .collect()
    }

    pub fn quat_generators(&self, spec: &GroupSpec) -> Result<Vec<(String, Matrix<QuatNum>)>> {
        spec.generator_names
            .iter()
            .map(|n| Ok((n.clone(), self.quat_matrix(n)?.clone())))
            .collect()
    }

    /// SHA-256 of the catalog text, pinned by the test suite against silent
    /// transcription drift.
    pub fn checksum() -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(CATALOG_TEXT.as_bytes());
        hex_string(&h.finalize())
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_domain(tag: Option<&str>, err: &dyn Fn(&str) -> Error) -> Result<Domain> {
    match tag {
        Some("cyc") => Ok(Domain::Cyclotomic),
        Some("quat") => Ok(Domain::Quaternion),
        Some("rat") => Ok(Domain::Rational),
        Some(other) => Err(err(&format!("unknown domain `{other}`"))),
        None => Err(err("missing domain")),
    }
}

fn parse_matrix<S: Scalar>(dim: usize, body: &[String]) -> Result<Matrix<S>> {
    let rows = parse_vectors(dim, body)?;
    Ok(Matrix::from_rows(rows))
}

fn parse_vectors<S: Scalar>(dim: usize, body: &[String]) -> Result<Vec<Vec<S>>> {
    body.iter()
        .map(|line| {
            let row: Vec<S> = line
                .split(',')
                .map(|cell| S::parse_literal(cell.trim()))
                .collect::<Result<_>>()?;
            if row.len() != dim {
                return Err(Error::Parse(format!(
                    "row `{line}` has {} entries, expected {dim}",
                    row.len()
                )));
            }
            Ok(row)
        })
        .collect()
}

/// Names of the eight unitary basis matrices.
pub fn unitary_basis_names() -> Vec<String> {
    (1..=8).map(|i| format!("ub{i}")).collect()
}

/// Names of the eight Gell-Mann matrices.
pub fn gell_mann_names() -> Vec<String> {
    (1..=8).map(|i| format!("lambda{i}")).collect()
}

#[derive(Debug)]
pub struct GluonBasisReport {
    pub all_traceless: bool,
    pub all_unitary: bool,
    pub all_det_one: bool,
    /// ⟨A,B⟩ = tr(dagger(A)·B) vanishes for every distinct pair.
    pub pairwise_orthogonal: bool,
    /// ⟨M,M⟩ for each member (all equal 3 for unitary 3×3).
    pub norms: Vec<CycNum>,
    pub unitary_span_rank: usize,
    pub gell_mann_span_rank: usize,
    pub joint_span_rank: usize,
}

/// Basis-level checks on the unitary replacement for the Gell-Mann matrices:
/// traceless/unitary/det-1, orthogonality and equal norm under
/// ⟨A,B⟩ = tr(dagger(A)·B), and equality of spans inside the traceless 8-space.
pub fn gluon_basis_check(cat: &Catalog) -> Result<GluonBasisReport> {
    let basis: Vec<&Matrix<CycNum>> = unitary_basis_names()
        .iter()
        .map(|n| cat.cyc_matrix(n))
        .collect::<Result<_>>()?;
    let lambdas: Vec<&Matrix<CycNum>> = gell_mann_names()
        .iter()
        .map(|n| cat.cyc_matrix(n))
        .collect::<Result<_>>()?;

    let all_traceless = basis.iter().all(|m| m.trace().is_zero());
    let all_unitary = basis.iter().all(|m| m.is_unitary());
    let all_det_one = basis.iter().all(|m| m.det() == CycNum::int(1));
    let pair = |a: &Matrix<CycNum>, b: &Matrix<CycNum>| a.dagger().mul_unchecked(b).trace();
    let mut pairwise_orthogonal = true;
    for (x, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(x + 1) {
            if !pair(a, b).is_zero() {
                pairwise_orthogonal = false;
            }
        }
    }
    let norms = basis.iter().map(|m| pair(m, m)).collect();

    let flatten = |ms: &[&Matrix<CycNum>]| -> Vec<Vec<CycNum>> {
        ms.iter().map(|m| m.entries().to_vec()).collect()
    };
    let unitary_rows = flatten(&basis);
    let lambda_rows = flatten(&lambdas);
    let mut joint = unitary_rows.clone();
    joint.extend(lambda_rows.clone());
    Ok(GluonBasisReport {
        all_traceless,
        all_unitary,
        all_det_one,
        pairwise_orthogonal,
        norms,
        unitary_span_rank: row_space_rank(&unitary_rows),
        gell_mann_span_rank: row_space_rank(&lambda_rows),
        joint_span_rank: row_space_rank(&joint),
    })
}

#[derive(Debug)]
pub struct SemidirectReport {
    /// IW = WJ
    pub iw_eq_wj: bool,
    /// JW = WIJ
    pub jw_eq_wij: bool,
    /// IW = WI fails (the extension is not a direct product)
    pub iw_eq_wi: bool,
    /// the commutators of the two order-27 generators, both orders
    pub commutator_scalars: Vec<CycNum>,
    /// g27_perm · vand = vand · g27_diag
    pub intertwine: bool,
}

/// The defining semidirect-product relations, the commutator scalars of the
/// order-27 generators, and the permutation/diagonal intertwining identity.
pub fn semidirect_relation_check(cat: &Catalog) -> Result<SemidirectReport> {
    let i = cat.cyc_matrix("I")?;
    let j = cat.cyc_matrix("J")?;
    let w = cat.cyc_matrix("W")?;
    let iw_eq_wj = i.mul_unchecked(w) == w.mul_unchecked(j);
    let jw_eq_wij = j.mul_unchecked(w) == w.mul_unchecked(i).mul_unchecked(j);
    let iw_eq_wi = i.mul_unchecked(w) == w.mul_unchecked(i);

    let d = cat.cyc_matrix("g27_diag")?;
    let p = cat.cyc_matrix("g27_perm")?;
    let comm = |x: &Matrix<CycNum>, y: &Matrix<CycNum>| -> Result<CycNum> {
        let c = x
            .inverse()?
            .mul_unchecked(&y.inverse()?)
            .mul_unchecked(x)
            .mul_unchecked(y);
        c.as_scalar()
            .cloned()
            .ok_or_else(|| Error::Parse("commutator is not scalar".into()))
    };
    let commutator_scalars = vec![comm(p, d)?, comm(d, p)?];

    let vand = cat.cyc_matrix("vand")?;
    let intertwine = p.mul_unchecked(vand) == vand.mul_unchecked(d);

    Ok(SemidirectReport {
        iw_eq_wj,
        jw_eq_wij,
        iw_eq_wi,
        commutator_scalars,
        intertwine,
    })
}

/// Hermitian squared norm Σ xᵢ·conj(xᵢ) of a vector.
pub fn hermitian_norm<S: Scalar>(v: &[S]) -> S {
    hermitian_dot(v, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn catalog_parses() {
        let cat = catalog();
        assert_eq!(cat.groups.len(), 10);
        assert_eq!(cat.cyc_matrices.len() + cat.quat_matrices.len(), 56);
    }

    #[test]
    fn expected_orders_match_stated_values() {
        let cat = catalog();
        assert_eq!(cat.group_spec("g27").unwrap().expected_order, Some(27));
        assert_eq!(cat.group_spec("e128").unwrap().expected_order, Some(128));
        assert_eq!(
            cat.group_spec("combined82944").unwrap().expected_order,
            Some(82944)
        );
        assert!(matches!(
            cat.group_spec("nonsense"),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn literal_spot_checks() {
        let cat = catalog();
        let k = cat.cyc_matrix("K").unwrap();
        assert_eq!(k.get(0, 1), &CycNum::i());
        assert!(k.get(0, 0).is_zero());
        // K is anti-Hermitian: dagger(K) = -K
        assert_eq!(k.dagger(), k.neg());
        let w = cat.quat_matrix("ext4q_2").unwrap();
        assert_eq!(w.get(0, 0), &QuatNum::omega());
        // tp1 = -t/3 · vandermonde
        let tp1 = cat.cyc_matrix("tp1").unwrap();
        let vand = cat.cyc_matrix("vand").unwrap();
        let scale = CycNum::t().scale(&crate::scalar::Rational::new(-1, 3));
        assert_eq!(*tp1, vand.scale_left(&scale));
    }

    #[test]
    fn semidirect_relations_hold() {
        let r = semidirect_relation_check(catalog()).unwrap();
        assert!(r.iw_eq_wj);
        assert!(r.jw_eq_wij);
        assert!(!r.iw_eq_wi, "direct-product relation must fail");
        // both commutator orderings give a scalar of order 3: {v, w}
        let mut scalars = r.commutator_scalars.clone();
        scalars.sort();
        let mut expected = vec![CycNum::v(), CycNum::w()];
        expected.sort();
        assert_eq!(scalars, expected);
        assert_eq!(r.commutator_scalars[0], CycNum::v());
        assert!(r.intertwine);
    }

    #[test]
    fn gluon_basis_report() {
        let r = gluon_basis_check(catalog()).unwrap();
        assert!(r.all_traceless);
        assert!(r.all_unitary);
        assert!(r.all_det_one);
        assert!(r.pairwise_orthogonal);
        assert!(r.norms.iter().all(|n| *n == CycNum::int(3)));
        assert_eq!(r.unitary_span_rank, 8);
        assert_eq!(r.gell_mann_span_rank, 8);
        assert_eq!(r.joint_span_rank, 8);
    }

    #[test]
    fn gell_mann_matrices_are_not_unitary() {
        let cat = catalog();
        for name in gell_mann_names() {
            assert!(!cat.cyc_matrix(&name).unwrap().is_unitary(), "{name}");
        }
        // lambda8 squares to diag(1/3, 1/3, 4/3) times the identity pattern
        let l8 = cat.cyc_matrix("lambda8").unwrap();
        assert!(l8.dagger() == *l8, "lambda8 is Hermitian");
        assert_eq!(l8.trace(), CycNum::zero());
        // every unitary-basis matrix is unitary but this one is not
        assert!(!l8.is_unitary());
        assert!(CycNum::one() != l8.det());
    }
}
