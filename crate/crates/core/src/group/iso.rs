//! Brute-force isomorphism testing for small groups.

use std::collections::BTreeMap;

use super::{subgroup_closure, AbstractGroup};
use crate::error::{Error, Result};

/// Cap on the orders accepted by the backtracking search.
const ISO_LIMIT: usize = 256;

/// Generator-image backtracking isomorphism test. Both group orders must be
/// at most 256; larger isomorphism claims are handled by structural
/// fingerprints elsewhere.
pub fn is_isomorphic(a: &impl AbstractGroup, b: &impl AbstractGroup) -> Result<bool> {
    if a.order() > ISO_LIMIT || b.order() > ISO_LIMIT {
        return Err(Error::OrderExceeded { limit: ISO_LIMIT });
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let n = a.order();
    let orders_a: Vec<usize> = (0..n).map(|e| a.element_order(e)).collect();
    let orders_b: Vec<usize> = (0..n).map(|e| b.element_order(e)).collect();
    if histogram(&orders_a) != histogram(&orders_b) {
        return Ok(false);
    }

    // Greedy minimal generating sequence for `a`.
    let mut gens: Vec<usize> = Vec::new();
    let mut reach = subgroup_closure(a, &gens);
    for e in 0..n {
        if reach.order() == n {
            break;
        }
        if !reach.contains(e) {
            gens.push(e);
            reach = subgroup_closure(a, &gens);
        }
    }
    // Orders of the partial subgroups ⟨g₁..gᵢ⟩ for pruning.
    let mut partial_orders = Vec::with_capacity(gens.len());
    for i in 1..=gens.len() {
        partial_orders.push(subgroup_closure(a, &gens[..i]).order());
    }

    let mut images = vec![0usize; gens.len()];
    Ok(assign(
        a, b, &gens, &partial_orders, &orders_a, &orders_b, &mut images, 0,
    ))
}

fn histogram(orders: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &o in orders {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

/// Explicit isomorphism between two groups of equal (possibly large) order,
/// as the image vector of every `a`-element, or None. Candidate generator
/// images are pruned by (element order, class size), so this stays tractable
/// well beyond the `is_isomorphic` cap; both groups should have their
/// multiplication tables forced beforehand when available.
pub fn find_isomorphism(
    a: &impl AbstractGroup,
    b: &impl AbstractGroup,
    cs_a: &crate::group::ClassStructure,
    cs_b: &crate::group::ClassStructure,
) -> Option<Vec<usize>> {
    if a.order() != b.order() || cs_a.count() != cs_b.count() {
        return None;
    }
    let n = a.order();
    let profile_a: Vec<(usize, usize)> = (0..n)
        .map(|e| {
            let c = cs_a.class_of[e];
            (cs_a.classes[c].element_order, cs_a.classes[c].size)
        })
        .collect();
    let profile_b: Vec<(usize, usize)> = (0..n)
        .map(|e| {
            let c = cs_b.class_of[e];
            (cs_b.classes[c].element_order, cs_b.classes[c].size)
        })
        .collect();
    let mut count_b: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &profile_b {
        *count_b.entry(*p).or_insert(0) += 1;
    }
    // Greedy generators chosen to minimize the candidate pool at each step.
    let mut gens: Vec<usize> = Vec::new();
    let mut reach = subgroup_closure(a, &gens);
    while reach.order() < n {
        let e = (0..n)
            .filter(|&e| !reach.contains(e))
            .min_by_key(|&e| (count_b.get(&profile_a[e]).copied().unwrap_or(0), e))?;
        if count_b.get(&profile_a[e]).copied().unwrap_or(0) == 0 {
            return None;
        }
        gens.push(e);
        reach = subgroup_closure(a, &gens);
    }
    let mut partial_orders = Vec::with_capacity(gens.len());
    for i in 1..=gens.len() {
        partial_orders.push(subgroup_closure(a, &gens[..i]).order());
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..n)
                .filter(|&h| profile_b[h] == profile_a[g])
                .collect()
        })
        .collect();
    let mut images = vec![0usize; gens.len()];
    search_with_map(a, b, &gens, &partial_orders, &candidates, &mut images, 0)
}

fn search_with_map(
    a: &impl AbstractGroup,
    b: &impl AbstractGroup,
    gens: &[usize],
    partial_orders: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    pos: usize,
) -> Option<Vec<usize>> {
    if pos == gens.len() {
        return build_homomorphism(a, b, gens, images);
    }
    for &cand in &candidates[pos] {
        images[pos] = cand;
        if subgroup_closure(b, &images[..=pos]).order() != partial_orders[pos] {
            continue;
        }
        if let Some(phi) =
            search_with_map(a, b, gens, partial_orders, candidates, images, pos + 1)
        {
            return Some(phi);
        }
    }
    None
}

/// As `check_homomorphism`, but returning the full image vector.
fn build_homomorphism(
    a: &impl AbstractGroup,
    b: &impl AbstractGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut frontier = vec![0usize];
    let mut covered = 1usize;
    while let Some(x) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(phi[x], img);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                covered += 1;
                frontier.push(y);
            } else if phi[y] != fy {
                return None;
            }
        }
    }
    if covered != n {
        return None;
    }
    let mut seen = vec![false; n];
    for &v in &phi {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    Some(phi)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &impl AbstractGroup,
    b: &impl AbstractGroup,
    gens: &[usize],
    partial_orders: &[usize],
    orders_a: &[usize],
    orders_b: &[usize],
    images: &mut Vec<usize>,
    pos: usize,
) -> bool {
    if pos == gens.len() {
        return check_homomorphism(a, b, gens, images);
    }
    let want = orders_a[gens[pos]];
    for cand in 0..b.order() {
        if orders_b[cand] != want {
            continue;
        }
        images[pos] = cand;
        if subgroup_closure(b, &images[..=pos]).order() != partial_orders[pos] {
            continue;
        }
        if assign(a, b, gens, partial_orders, orders_a, orders_b, images, pos + 1) {
            return true;
        }
    }
    false
}

/// Extend generator images to the whole group along derivation words and
/// verify consistency on every (element, generator) edge. Edge consistency
/// propagates to full multiplicativity by induction on word length.
fn check_homomorphism(
    a: &impl AbstractGroup,
    b: &impl AbstractGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = a.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut frontier = vec![0usize];
    let mut covered = 1usize;
    while let Some(x) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(phi[x], img);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                covered += 1;
                frontier.push(y);
            } else if phi[y] != fy {
                return false;
            }
        }
    }
    if covered != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &phi {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::tests::q8;
    use super::*;
    use crate::group::FinMatGroup;
    use num_traits::{One, Zero};
    use crate::matrix::Matrix;
    use crate::scalar::CycNum;

    fn cyclic(n: usize) -> FinMatGroup<CycNum> {
        // 1×1 matrix group generated by a primitive n-th root of unity (n | 12)
        let z = match n {
            2 => CycNum::int(-1),
            3 => CycNum::v(),
            4 => CycNum::i(),
            _ => panic!("unsupported order"),
        };
        FinMatGroup::closure(
            &format!("z{n}"),
            vec![("z".into(), Matrix::from_rows(vec![vec![z]]))],
            24,
        )
        .unwrap()
    }

    fn klein_four() -> FinMatGroup<CycNum> {
        let a = Matrix::from_rows(vec![
            vec![CycNum::int(-1), CycNum::zero()],
            vec![CycNum::zero(), CycNum::one()],
        ]);
        let b = Matrix::from_rows(vec![
            vec![CycNum::one(), CycNum::zero()],
            vec![CycNum::zero(), CycNum::int(-1)],
        ]);
        FinMatGroup::closure("v4", vec![("a".into(), a), ("b".into(), b)], 8).unwrap()
    }

    #[test]
    fn z4_is_not_klein_four() {
        assert!(!is_isomorphic(&cyclic(4), &klein_four()).unwrap());
    }

    #[test]
    fn groups_are_isomorphic_to_themselves() {
        assert!(is_isomorphic(&q8(), &q8()).unwrap());
        assert!(is_isomorphic(&cyclic(3), &cyclic(3)).unwrap());
    }

    #[test]
    fn q8_is_not_z4() {
        assert!(!is_isomorphic(&q8(), &klein_four()).unwrap());
        assert!(!is_isomorphic(&cyclic(2), &cyclic(3)).unwrap());
    }
}
