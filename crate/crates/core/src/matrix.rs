//! Dense square matrices over an exact scalar, with the elimination kernels
//! everything else is built on.
//!
//! Complex (cyclotomic) matrices act on column vectors from the left.
//! Quaternionic matrices act on row vectors from the right, with quaternion
//! scalars multiplying vectors on the left; the elimination routines here
//! respect that convention.

use std::fmt;
use std::hash::Hash;

use crate::error::Error;
use crate::scalar::{FieldScalar, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<S> {
    n: usize,
    e: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_entries(n: usize, e: Vec<S>) -> Self {
        assert_eq!(e.len(), n * n, "entry count must be n²");
        Matrix { n, e }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            e.extend(row);
        }
        Matrix { n, e }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = S::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            e: (0..n * n).map(|_| S::zero()).collect(),
        }
    }

    pub fn scalar(n: usize, s: &S) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = s.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: S) {
        self.e[i * self.n + j] = s;
    }

    pub fn entries(&self) -> &[S] {
        &self.e
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.e[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(self.mul_unchecked(other))
    }

    /// Exact product; quaternionic entry products keep the Hamilton order.
    pub fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &other.e[k * n..(k + 1) * n];
                let orow = &mut out.e[i * n..(i + 1) * n];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = o.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            n: self.n,
            e: self.e.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Left scalar multiple s·M.
    pub fn scale_left(&self, s: &S) -> Self {
        Matrix {
            n: self.n,
            e: self.e.iter().map(|a| s.mul_ref(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.e[j * n + i] = self.e[i * n + j].clone();
            }
        }
        out
    }

    /// Conjugate transpose; entrywise quaternion conjugation in the
    /// quaternionic case, so that dagger(AB) = dagger(B)·dagger(A).
    pub fn dagger(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.e[j * n + i] = self.e[i * n + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.n {
            t = t.add_ref(&self.e[i * self.n + i]);
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Some(s) iff the matrix is s·I.
    pub fn as_scalar(&self) -> Option<&S> {
        let s = self.get(0, 0);
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if i == j {
                    if e != s {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// True iff M·dagger(M) = I exactly.
    pub fn is_unitary(&self) -> bool {
        self.mul_unchecked(&self.dagger()).is_identity()
    }

    /// Inverse over a division ring, by row reduction with left multipliers.
    pub fn inverse(&self) -> Result<Self, Error> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::NotInvertible)?;
            if pivot != col {
                for j in 0..n {
                    a.e.swap(pivot * n + j, col * n + j);
                    inv.e.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = a.get(col, col).try_inv().ok_or(Error::NotInvertible)?;
            for j in 0..n {
                a.e[col * n + j] = pinv.mul_ref(&a.e[col * n + j]);
                inv.e[col * n + j] = pinv.mul_ref(&inv.e[col * n + j]);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let x = factor.mul_ref(&a.e[col * n + j]);
                    a.e[r * n + j] = a.e[r * n + j].sub_ref(&x);
                    let y = factor.mul_ref(&inv.e[col * n + j]);
                    inv.e[r * n + j] = inv.e[r * n + j].sub_ref(&y);
                }
            }
        }
        Ok(inv)
    }

    /// Multiplicative order, or Err if it exceeds `cap`.
    pub fn multiplicative_order(&self, cap: usize) -> Result<usize, Error> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(k);
            }
            p = p.mul_unchecked(self);
        }
        Err(Error::OrderExceeded { limit: cap })
    }

    /// Canonical serialization of the whole matrix.
    pub fn key(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.n.to_string());
        for s in &self.e {
            out.push(';');
            s.key(&mut out);
        }
        out
    }

    pub fn from_key(s: &str) -> Result<Self, Error> {
        let mut parts = s.split(';');
        let n: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad matrix key `{s}`")))?;
        let e: Vec<S> = parts.map(S::from_key).collect::<Result<_, _>>()?;
        if e.len() != n * n {
            return Err(Error::Parse(format!("matrix key has wrong entry count `{s}`")));
        }
        Ok(Matrix { n, e })
    }
}

impl<S: FieldScalar> Matrix<S> {
    /// Cofactor-expansion determinant (commutative scalars only; the
    /// quaternionic case is rejected at compile time by this bound).
    pub fn det(&self) -> S {
        fn go<S: FieldScalar>(n: usize, idx: &[usize], cols: &[usize], m: &Matrix<S>) -> S {
            if n == 1 {
                return m.get(idx[0], cols[0]).clone();
            }
            let mut acc = S::zero();
            let sub_rows = &idx[1..];
            for (pos, &c) in cols.iter().enumerate() {
                let a = m.get(idx[0], c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = go(n - 1, sub_rows, &rest, m);
                let term = a.mul_ref(&minor);
                acc = if pos % 2 == 0 {
                    acc.add_ref(&term)
                } else {
                    acc.sub_ref(&term)
                };
            }
            acc
        }
        let all: Vec<usize> = (0..self.n).collect();
        go(self.n, &all, &all, self)
    }

    /// Exact basis of {x : Ax = 0} (column vectors, left action).
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let n = self.n;
        let mut a: Vec<Vec<S>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pinv = a[r][c].try_inv().unwrap();
            for x in a[r].iter_mut() {
                *x = pinv.mul_ref(x);
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        let x = f.mul_ref(&a[r][j]);
                        a[i][j] = a[i][j].sub_ref(&x);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == n {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v: Vec<S> = (0..n).map(|_| S::zero()).collect();
            v[free] = S::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.n - self.nullspace().len()
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                write!(f, "{}{}", self.get(i, j), if j + 1 < self.n { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}{}", self.get(i, j), if j + 1 < self.n { "\t" } else { "" })?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Σ xᵢ·conj(yᵢ): the Hermitian pairing conjugates its second argument.
pub fn hermitian_dot<S: Scalar>(x: &[S], y: &[S]) -> S {
    let mut acc = S::zero();
    for (a, b) in x.iter().zip(y) {
        acc = acc.add_ref(&a.mul_ref(&b.conj()));
    }
    acc
}

/// Rank of the row span of a rectangular array over a field.
pub fn row_space_rank<S: FieldScalar>(rows: &[Vec<S>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pinv = a[rank][c].try_inv().unwrap();
        for x in a[rank].iter_mut() {
            *x = pinv.mul_ref(x);
        }
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..width {
                    let x = f.mul_ref(&a[rank][j]);
                    a[i][j] = a[i][j].sub_ref(&x);
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Basis of the right fixed module {x : xM = x for every M in `mats`},
/// for row vectors with scalars acting on the left.
pub fn fixed_space_right<S: Scalar>(n: usize, mats: &[Matrix<S>]) -> Vec<Vec<S>> {
    // Constraints x·(M − I) = 0, one per column of each M − I. Assemble them
    // as the columns of a wide array and return its left nullspace, tracking
    // the row operations through an appended identity block.
    let mut constraints: Vec<Vec<S>> = Vec::new();
    for m in mats {
        assert_eq!(m.dim(), n);
        let d = m.sub(&Matrix::identity(n));
        for col in 0..n {
            let c: Vec<S> = (0..n).map(|i| d.get(i, col).clone()).collect();
            if c.iter().any(|x| !x.is_zero()) {
                constraints.push(c);
            }
        }
    }
    let width = constraints.len();
    // rows[i] = [constraint coefficients for xᵢ ..., tracker eᵢ]
    let mut rows: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row: Vec<S> = constraints.iter().map(|c| c[i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pinv = rows[r][c].try_inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = pinv.mul_ref(x);
        }
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..width + n {
                    let x = f.mul_ref(&rows[r][j]);
                    rows[i][j] = rows[i][j].sub_ref(&x);
                }
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }
    rows[r..]
        .iter()
        .map(|row| row[width..].to_vec())
        .collect()
}

/// Canonical representative of a line: left-divide by the first nonzero
/// coordinate so it becomes 1.
pub fn canonical_line<S: Scalar>(v: &[S]) -> Vec<S> {
    let lead = v.iter().find(|x| !x.is_zero()).expect("zero vector has no line");
    let linv = lead.try_inv().expect("leading entry must be invertible");
    v.iter().map(|x| linv.mul_ref(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CycNum, QuatNum, Rational};
    use num_traits::{One, Zero};

    fn cyc(s: &str) -> CycNum {
        CycNum::parse(s).unwrap()
    }

    fn cmat(rows: &[&[&str]]) -> Matrix<CycNum> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| cyc(s)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_multiplication() {
        let a = cmat(&[&["1", "v", "0"], &["w", "0", "t"], &["i", "1", "-1"]]);
        let id = Matrix::<CycNum>::identity(3);
        assert_eq!(id.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&id).unwrap(), a);
    }

    #[test]
    fn dagger_properties() {
        let a = cmat(&[&["1", "i"], &["0", "v"]]);
        let b = cmat(&[&["t", "0"], &["w", "-i"]]);
        assert_eq!(a.dagger().dagger(), a);
        assert_eq!(
            a.mul(&b).unwrap().dagger(),
            b.dagger().mul(&a.dagger()).unwrap()
        );
        assert!(Matrix::<CycNum>::identity(4).dagger().is_identity());
    }

    #[test]
    fn determinant_basics() {
        let id = Matrix::<CycNum>::identity(3);
        assert_eq!(id.det(), CycNum::one());
        let u1 = cmat(&[&["v", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
        assert_eq!(u1.det(), CycNum::v());
    }

    #[test]
    fn nullspace_edges() {
        let id = Matrix::<CycNum>::identity(3);
        assert!(id.nullspace().is_empty());
        let z = Matrix::<CycNum>::zero(3);
        assert_eq!(z.nullspace().len(), 3);
        assert_eq!(z.rank() + z.nullspace().len(), 3);
    }

    #[test]
    fn inverse_over_quaternions() {
        let m = Matrix::from_rows(vec![
            vec![QuatNum::one(), QuatNum::i()],
            vec![QuatNum::j(), QuatNum::omega()],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn fixed_space_of_identity_is_everything() {
        let id = Matrix::<QuatNum>::identity(4);
        let basis = fixed_space_right(4, &[id]);
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn rank_of_row_spans() {
        let rows = vec![
            vec![Rational::int(1), Rational::int(2)],
            vec![Rational::int(2), Rational::int(4)],
        ];
        assert_eq!(row_space_rank(&rows), 1);
    }
}
