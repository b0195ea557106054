//! Finite matrix groups by closure from generators, and the index-level
//! group machinery (classes, subgroups, quotients, isomorphism tests).
//!
//! Every constructed group is immutable. Elements are re-sorted by canonical
//! key after construction (identity pinned at index 0), so indices, class
//! orderings and every derived report are deterministic regardless of thread
//! count.

use std::collections::HashMap;
use std::sync::OnceLock;

use indexmap::IndexMap;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

mod classes;
mod iso;
mod report;
mod subgroup;

pub use classes::{ClassStructure, ConjClass};
pub use iso::{find_isomorphism, is_isomorphic};
pub use report::{group_report, StructureReport};
pub use subgroup::{
    center, conjugation_orbit_count, derived_subgroup, is_normal, is_total_chain, normal_closure,
    normal_subgroups, quotient, subgroup_closure, QuotientGroup, SubgroupHandle, SubgroupView,
};

/// Cap below which a full multiplication table is built on demand.
const MULT_TABLE_LIMIT: usize = 1024;

/// Minimal interface the index-level algorithms run on. Index 0 is always
/// the identity.
pub trait AbstractGroup: Sync {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn generators(&self) -> &[usize];

    fn inv(&self, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        let mut prev = a;
        loop {
            let next = self.mul(prev, a);
            if next == 0 {
                return prev;
            }
            prev = next;
        }
    }

    fn element_order(&self, a: usize) -> usize {
        let mut p = a;
        let mut n = 1;
        while p != 0 {
            p = self.mul(p, a);
            n += 1;
        }
        n
    }

    fn power(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }
}

pub struct FinMatGroup<S: Scalar> {
    name: String,
    dim: usize,
    elements: Vec<Matrix<S>>,
    index: HashMap<Matrix<S>, usize>,
    /// (parent index, generator slot) deriving each element; None for identity.
    words: Vec<Option<(usize, usize)>>,
    gens: Vec<usize>,
    gen_names: Vec<String>,
    inv_table: OnceLock<Vec<usize>>,
    mult_table: OnceLock<Option<Vec<u32>>>,
}

impl<S: Scalar> FinMatGroup<S> {
    /// Breadth-first product closure of `generators`, failing once the order
    /// would exceed `max_order`. Frontier expansion runs in parallel but the
    /// insertion order is the serial one, so the result is identical across
    /// thread counts.
    pub fn closure(
        name: &str,
        generators: Vec<(String, Matrix<S>)>,
        max_order: usize,
    ) -> Result<Self> {
        assert!(!generators.is_empty(), "need at least one generator");
        let dim = generators[0].1.dim();
        for (_, g) in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch(dim, g.dim()));
            }
            g.inverse().map_err(|_| Error::NotInvertible)?;
        }
        let gen_names: Vec<String> = generators.iter().map(|(n, _)| n.clone()).collect();
        let gen_mats: Vec<Matrix<S>> = generators.into_iter().map(|(_, g)| g).collect();

        let mut map: IndexMap<Matrix<S>, Option<(usize, usize)>> = IndexMap::new();
        map.insert(Matrix::identity(dim), None);
        let mut frontier: Vec<usize> = vec![0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for batch in frontier.chunks(2048) {
                let products: Vec<Vec<Matrix<S>>> = if batch.len() * gen_mats.len() >= 64 {
                    batch
                        .par_iter()
                        .map(|&f| {
                            let m = map.get_index(f).unwrap().0;
                            gen_mats.iter().map(|g| m.mul_unchecked(g)).collect()
                        })
                        .collect()
                } else {
                    batch
                        .iter()
                        .map(|&f| {
                            let m = map.get_index(f).unwrap().0;
                            gen_mats.iter().map(|g| m.mul_unchecked(g)).collect()
                        })
                        .collect()
                };
                for (&f, prods) in batch.iter().zip(products) {
                    for (gi, p) in prods.into_iter().enumerate() {
                        let entry = map.entry(p);
                        let idx = entry.index();
                        entry.or_insert_with(|| {
                            next.push(idx);
                            Some((f, gi))
                        });
                    }
                }
                if map.len() > max_order {
                    return Err(Error::OrderExceeded { limit: max_order });
                }
            }
            frontier = next;
        }

        // Canonical reindexing: identity first, the rest by matrix order.
        let n = map.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            let (ma, _) = map.get_index(a).unwrap();
            let (mb, _) = map.get_index(b).unwrap();
            (a != 0, ma).cmp(&(b != 0, mb))
        });
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut elements = Vec::with_capacity(n);
        let mut words = vec![None; n];
        for (new, &old) in order.iter().enumerate() {
            let (m, w) = map.get_index(old).unwrap();
            elements.push(m.clone());
            words[new] = w.map(|(p, g)| (new_of_old[p], g));
        }
        let index: HashMap<Matrix<S>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let gens = gen_mats.iter().map(|g| index[g]).collect();
        Ok(FinMatGroup {
            name: name.to_string(),
            dim,
            elements,
            index,
            words,
            gens,
            gen_names,
            inv_table: OnceLock::new(),
            mult_table: OnceLock::new(),
        })
    }

    /// Rebuild a group from an explicit closed element set (e.g. produced by
    /// a brute-force scan): picks a greedy generating subset, closes it, and
    /// checks the closure reproduces the given set exactly.
    pub fn from_elements(name: &str, mut elems: Vec<Matrix<S>>, max_order: usize) -> Result<Self> {
        elems.sort();
        elems.dedup();
        let dim = elems[0].dim();
        let target: std::collections::HashSet<&Matrix<S>> = elems.iter().collect();
        let mut gens: Vec<(String, Matrix<S>)> = Vec::new();
        let mut current = FinMatGroup::closure(
            name,
            vec![("1".to_string(), Matrix::identity(dim))],
            max_order,
        )?;
        for m in &elems {
            if current.index_of(m).is_none() {
                gens.push((format!("g{}", gens.len()), m.clone()));
                current = FinMatGroup::closure(name, gens.clone(), max_order)?;
                if current.order() == elems.len() {
                    break;
                }
            }
        }
        if current.order() != elems.len()
            || !current.elements.iter().all(|m| target.contains(m))
        {
            return Err(Error::Parse(format!(
                "element set of `{name}` is not closed under multiplication"
            )));
        }
        Ok(current)
    }

    pub(crate) fn from_parts(
        name: String,
        dim: usize,
        elements: Vec<Matrix<S>>,
        words: Vec<Option<(usize, usize)>>,
        gen_names: Vec<String>,
        gen_indices: Vec<usize>,
    ) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        FinMatGroup {
            name,
            dim,
            elements,
            index,
            words,
            gens: gen_indices,
            gen_names,
            inv_table: OnceLock::new(),
            mult_table: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn matrix(&self, i: usize) -> &Matrix<S> {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix<S>] {
        &self.elements
    }

    pub fn index_of(&self, m: &Matrix<S>) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn word(&self, i: usize) -> Option<(usize, usize)> {
        self.words[i]
    }

    /// Generator word for an element, e.g. `K*J*J`; the identity is `1`.
    pub fn word_string(&self, mut i: usize) -> String {
        let mut parts = Vec::new();
        while let Some((parent, gen)) = self.words[i] {
            parts.push(self.gen_names[gen].as_str());
            i = parent;
        }
        if parts.is_empty() {
            return "1".to_string();
        }
        parts.reverse();
        parts.join("*")
    }

    fn build_mult_table(&self) -> Option<Vec<u32>> {
        let n = self.order();
        if n > MULT_TABLE_LIMIT {
            return None;
        }
        let table: Vec<u32> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let row: Vec<u32> = (0..n)
                    .map(|b| {
                        let m = self.elements[a].mul_unchecked(&self.elements[b]);
                        self.index[&m] as u32
                    })
                    .collect();
                row
            })
            .collect();
        Some(table)
    }

    /// Force the multiplication table (small groups only); a no-op above the
    /// size cap.
    pub fn ensure_mult_table(&self) {
        self.mult_table.get_or_init(|| self.build_mult_table());
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        if let Some(Some(t)) = self.mult_table.get() {
            return t[a * self.order() + b] as usize;
        }
        let m = self.elements[a].mul_unchecked(&self.elements[b]);
        *self
            .index
            .get(&m)
            .unwrap_or_else(|| panic!("group `{}` is not closed", self.name))
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        let table = self.inv_table.get_or_init(|| {
            let n = self.order();
            let mut gen_inv = Vec::with_capacity(self.gens.len());
            for &g in &self.gens {
                let m = self.elements[g].inverse().expect("group element");
                gen_inv.push(self.index[&m]);
            }
            let mut inv = vec![usize::MAX; n];
            inv[0] = 0;
            for mut e in 0..n {
                let mut chain = Vec::new();
                while inv[e] == usize::MAX {
                    chain.push(e);
                    e = self.words[e].expect("non-identity has a word").0;
                }
                while let Some(x) = chain.pop() {
                    let (parent, gen) = self.words[x].unwrap();
                    inv[x] = self.mul_idx(gen_inv[gen], inv[parent]);
                }
            }
            inv
        });
        table[i]
    }

    /// Indices of a set of matrices inside this group.
    pub fn locate(&self, mats: &[Matrix<S>]) -> Result<Vec<usize>> {
        mats.iter()
            .map(|m| self.index_of(m).ok_or(Error::ElementNotInAmbient))
            .collect()
    }
}

impl<S: Scalar> AbstractGroup for FinMatGroup<S> {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_idx(a, b)
    }

    fn generators(&self) -> &[usize] {
        &self.gens
    }

    fn inv(&self, a: usize) -> usize {
        self.inv_idx(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycNum;

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

    pub(crate) fn q8() -> FinMatGroup<CycNum> {
        let k = cmat(&[&["0", "i"], &["i", "0"]]);
        let j = cmat(&[&["0", "1"], &["-1", "0"]]);
        FinMatGroup::closure("q8", vec![("K".into(), k), ("J".into(), j)], 100).unwrap()
    }

    #[test]
    fn q8_has_order_eight() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert!(g.matrix(0).is_identity());
    }

    #[test]
    fn closure_is_generator_order_independent() {
        let g1 = q8();
        let k = cmat(&[&["0", "i"], &["i", "0"]]);
        let j = cmat(&[&["0", "1"], &["-1", "0"]]);
        let g2 =
            FinMatGroup::closure("q8", vec![("J".into(), j), ("K".into(), k)], 100).unwrap();
        assert_eq!(g1.elements(), g2.elements());
    }

    #[test]
    fn order_cap_is_enforced() {
        let k = cmat(&[&["0", "i"], &["i", "0"]]);
        let j = cmat(&[&["0", "1"], &["-1", "0"]]);
        let err = FinMatGroup::closure("q8", vec![("K".into(), k), ("J".into(), j)], 7);
        assert!(matches!(err, Err(Error::OrderExceeded { limit: 7 })));
    }

    #[test]
    fn singular_generators_are_rejected() {
        let m = cmat(&[&["0", "1"], &["0", "0"]]);
        assert!(matches!(
            FinMatGroup::closure("bad", vec![("m".into(), m)], 10),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn inverses_and_words() {
        let g = q8();
        for i in 0..g.order() {
            assert_eq!(g.mul_idx(i, g.inv_idx(i)), 0);
        }
        assert_eq!(g.word_string(0), "1");
        let k = g.generator_indices()[0];
        assert_eq!(g.word_string(k), "K");
    }

    #[test]
    fn mult_table_agrees_with_matrix_products() {
        let g = q8();
        let direct: Vec<usize> = (0..8).flat_map(|a| (0..8).map(move |b| (a, b)))
            .map(|(a, b)| g.mul_idx(a, b))
            .collect();
        g.ensure_mult_table();
        let tabled: Vec<usize> = (0..8).flat_map(|a| (0..8).map(move |b| (a, b)))
            .map(|(a, b)| g.mul_idx(a, b))
            .collect();
        assert_eq!(direct, tabled);
    }
}
