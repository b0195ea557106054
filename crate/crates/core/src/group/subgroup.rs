//! Subgroups as index sets inside a parent group, quotient groups as coset
//! tables, and the normal-subgroup search.

use std::collections::{HashMap, HashSet};

use super::{AbstractGroup, ClassStructure};
use crate::error::{Error, Result};

/// Cap for the exhaustive normal-subgroup search.
const NORMAL_SEARCH_LIMIT: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHandle {
    /// Sorted element indices within the parent group.
    pub elems: Vec<usize>,
}

impl SubgroupHandle {
    pub fn new(mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        SubgroupHandle { elems }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }
}

/// Closure of a seed set inside a parent group (always contains the identity).
pub fn subgroup_closure(g: &impl AbstractGroup, seeds: &[usize]) -> SubgroupHandle {
    let mut set = HashSet::new();
    set.insert(0usize);
    let mut frontier = vec![0usize];
    for &s in seeds {
        if set.insert(s) {
            frontier.push(s);
        }
    }
    while let Some(x) = frontier.pop() {
        for &s in seeds {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    SubgroupHandle::new(set.into_iter().collect())
}

/// {z : zg = gz for all g}; commuting with the generators suffices.
pub fn center(g: &impl AbstractGroup) -> SubgroupHandle {
    let gens = g.generators();
    let elems = (0..g.order())
        .filter(|&z| gens.iter().all(|&x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    SubgroupHandle::new(elems)
}

pub fn is_normal(g: &impl AbstractGroup, h: &SubgroupHandle) -> bool {
    g.generators().iter().all(|&x| {
        let xi = g.inv(x);
        h.elems.iter().all(|&e| h.contains(g.mul(xi, g.mul(e, x))))
    })
}

/// Smallest normal subgroup containing the seeds.
pub fn normal_closure(g: &impl AbstractGroup, seeds: &[usize]) -> SubgroupHandle {
    let mut h = subgroup_closure(g, seeds);
    loop {
        let mut extra = Vec::new();
        for &x in g.generators() {
            let xi = g.inv(x);
            for &e in &h.elems {
                let y = g.mul(xi, g.mul(e, x));
                if !h.contains(y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return h;
        }
        let mut seeds: Vec<usize> = h.elems.clone();
        seeds.extend(extra);
        h = subgroup_closure(g, &seeds);
    }
}

/// Derived subgroup: normal closure of the generator commutators.
pub fn derived_subgroup(g: &impl AbstractGroup) -> SubgroupHandle {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for &a in gens {
        for &b in gens {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            seeds.push(c);
        }
    }
    normal_closure(g, &seeds)
}

/// Every normal subgroup, found as closures of unions of conjugacy classes.
/// Deterministically ordered by (order, element list).
pub fn normal_subgroups(
    g: &impl AbstractGroup,
    cs: &ClassStructure,
) -> Result<Vec<SubgroupHandle>> {
    if g.order() > NORMAL_SEARCH_LIMIT {
        return Err(Error::OrderExceeded {
            limit: NORMAL_SEARCH_LIMIT,
        });
    }
    let mut found: Vec<SubgroupHandle> = vec![SubgroupHandle::new(vec![0])];
    let mut keys: HashSet<Vec<usize>> = found.iter().map(|h| h.elems.clone()).collect();
    // Atoms: the subgroup generated by each single class. A class is closed
    // under conjugation, so its closure is normal.
    let mut work: Vec<SubgroupHandle> = Vec::new();
    for c in &cs.classes {
        let h = subgroup_closure(g, &c.members);
        if keys.insert(h.elems.clone()) {
            work.push(h);
        }
    }
    found.extend(work.iter().cloned());
    // Saturate under pairwise joins.
    loop {
        let mut new = Vec::new();
        for a in &found {
            for b in &found {
                if a.order() == g.order() || b.order() == g.order() {
                    continue;
                }
                let mut seeds = a.elems.clone();
                seeds.extend(&b.elems);
                let j = subgroup_closure(g, &seeds);
                if keys.insert(j.elems.clone()) {
                    new.push(j);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        found.extend(new);
    }
    for h in &found {
        debug_assert!(is_normal(g, h));
    }
    found.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
    Ok(found)
}

/// True iff the handles form a chain under inclusion (assumes sorted by order).
pub fn is_total_chain(subs: &[SubgroupHandle]) -> bool {
    subs.windows(2).all(|w| {
        w[0].elems.iter().all(|e| w[1].contains(*e))
    })
}

/// Coset-table quotient group. Index 0 is the coset of the identity.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    /// Minimal parent-element index in each coset.
    pub reps: Vec<usize>,
    /// parent element -> coset index
    pub coset_of: Vec<usize>,
    order: usize,
    table: Vec<u32>,
    gen_images: Vec<usize>,
}

pub fn quotient(g: &impl AbstractGroup, n: &SubgroupHandle) -> Result<QuotientGroup> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let order = g.order() / n.order();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(order);
    for e in 0..g.order() {
        if coset_of[e] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(e);
        for &h in &n.elems {
            let x = g.mul(e, h);
            debug_assert!(coset_of[x] == usize::MAX || coset_of[x] == id);
            coset_of[x] = id;
        }
    }
    assert_eq!(reps.len(), order);
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = coset_of[g.mul(reps[a], reps[b])] as u32;
        }
    }
    let mut gen_images: Vec<usize> = g.generators().iter().map(|&x| coset_of[x]).collect();
    gen_images.sort_unstable();
    gen_images.dedup();
    Ok(QuotientGroup {
        reps,
        coset_of,
        order,
        table,
        gen_images,
    })
}

impl AbstractGroup for QuotientGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.gen_images
    }
}

/// A subgroup viewed as a group in its own right (element indices 0..|H|).
pub struct SubgroupView<'g, G: AbstractGroup> {
    parent: &'g G,
    pub handle: SubgroupHandle,
    pos: HashMap<usize, usize>,
    gens: Vec<usize>,
}

impl<'g, G: AbstractGroup> SubgroupView<'g, G> {
    pub fn new(parent: &'g G, handle: SubgroupHandle) -> Self {
        assert_eq!(handle.elems.first(), Some(&0), "subgroup must contain the identity");
        let pos: HashMap<usize, usize> = handle
            .elems
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        // Greedy generating set, chosen deterministically.
        let mut gens: Vec<usize> = Vec::new();
        let mut sub = subgroup_closure_local(parent, &handle.elems, &gens);
        for &e in &handle.elems {
            if sub.len() == handle.elems.len() {
                break;
            }
            if !sub.contains(&e) {
                gens.push(e);
                sub = subgroup_closure_local(parent, &handle.elems, &gens);
            }
        }
        let gens = gens.iter().map(|e| pos[e]).collect();
        SubgroupView {
            parent,
            handle,
            pos,
            gens,
        }
    }

    pub fn parent_index(&self, local: usize) -> usize {
        self.handle.elems[local]
    }

    pub fn local_index(&self, parent: usize) -> Option<usize> {
        self.pos.get(&parent).copied()
    }
}

fn subgroup_closure_local(
    g: &impl AbstractGroup,
    universe: &[usize],
    seeds: &[usize],
) -> HashSet<usize> {
    let h = subgroup_closure(g, seeds);
    debug_assert!(h.elems.iter().all(|e| universe.contains(e)));
    h.elems.into_iter().collect()
}

impl<'g, G: AbstractGroup> AbstractGroup for SubgroupView<'g, G> {
    fn order(&self) -> usize {
        self.handle.elems.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let p = self
            .parent
            .mul(self.handle.elems[a], self.handle.elems[b]);
        self.pos[&p]
    }

    fn generators(&self) -> &[usize] {
        &self.gens
    }
}

/// Number of distinct conjugates g⁻¹Hg of the element set `h` as g ranges
/// over `acting`; all indices live in the ambient group.
pub fn conjugation_orbit_count(
    ambient: &impl AbstractGroup,
    acting: &[usize],
    h: &[usize],
) -> Result<usize> {
    let n = ambient.order();
    if acting.iter().chain(h).any(|&e| e >= n) {
        return Err(Error::ElementNotInAmbient);
    }
    let mut images = HashSet::new();
    for &g in acting {
        let gi = ambient.inv(g);
        let mut image: Vec<usize> = h
            .iter()
            .map(|&x| ambient.mul(gi, ambient.mul(x, g)))
            .collect();
        image.sort_unstable();
        images.insert(image);
    }
    Ok(images.len())
}

#[cfg(test)]
mod tests {
    use super::super::tests::q8;
    use super::*;
    use crate::group::ClassStructure;

    #[test]
    fn q8_center_and_normal_subgroups() {
        let g = q8();
        let z = center(&g);
        assert_eq!(z.order(), 2);
        let cs = ClassStructure::compute(&g);
        let normals = normal_subgroups(&g, &cs).unwrap();
        // Q8 is Hamiltonian: every subgroup is normal — 1, Z2, three Z4, Q8.
        let orders: Vec<usize> = normals.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn quotient_of_q8_by_center() {
        let g = q8();
        let z = center(&g);
        let q = quotient(&g, &z).unwrap();
        assert_eq!(q.order(), 4);
        // Klein four group: every nontrivial element has order 2.
        for e in 1..4 {
            assert_eq!(q.element_order(e), 2);
        }
        // associativity of the coset table
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(q.mul(q.mul(a, b), c), q.mul(a, q.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn trivial_quotient() {
        let g = q8();
        let whole = SubgroupHandle::new((0..8).collect());
        let q = quotient(&g, &whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn orbit_of_self_conjugation_is_one() {
        let g = q8();
        let all: Vec<usize> = (0..8).collect();
        let count = conjugation_orbit_count(&g, &all, &all).unwrap();
        assert_eq!(count, 1);
    }
}
