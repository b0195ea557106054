//! Structural summary of a finite matrix group.

use std::collections::BTreeMap;

use num_integer::lcm;

use super::{
    center, derived_subgroup, subgroup_closure, AbstractGroup, ClassStructure, FinMatGroup,
};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub order: usize,
    pub exponent: usize,
    pub class_count: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub is_abelian: bool,
    pub is_extraspecial: bool,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    /// rank of G/Z when G/Z is elementary abelian of prime exponent p, else None
    pub central_quotient_rank: Option<u32>,
}

pub fn group_report<S: Scalar>(g: &FinMatGroup<S>, cs: &ClassStructure) -> StructureReport {
    let z = center(g);
    let derived = derived_subgroup(g);
    let mut histogram = BTreeMap::new();
    let mut exponent = 1usize;
    for c in &cs.classes {
        *histogram.entry(c.element_order).or_insert(0) += c.size;
        exponent = lcm(exponent, c.element_order);
    }
    let is_abelian = z.order() == g.order();

    // Extraspecial p-group: center = derived = Frattini of prime order p,
    // with G/Z elementary abelian.
    let p = z.order();
    let is_prime = p > 1 && (2..p).all(|d| p % d != 0);
    let mut is_extraspecial = false;
    let mut central_quotient_rank = None;
    if is_prime && derived.elems == z.elems && !is_abelian {
        let central = |e: usize| z.contains(e);
        let powers_central = (0..g.order()).all(|e| central(g.power(e, p)));
        if powers_central {
            // Frattini subgroup of a p-group: ⟨x^p⟩ together with G'.
            let mut seeds: Vec<usize> = (0..g.order()).map(|e| g.power(e, p)).collect();
            seeds.extend(&derived.elems);
            let frattini = subgroup_closure(g, &seeds);
            if frattini.elems == z.elems {
                is_extraspecial = true;
            }
            let quotient_order = g.order() / p;
            let mut rank = 0u32;
            let mut acc = 1usize;
            while acc < quotient_order {
                acc *= p;
                rank += 1;
            }
            if acc == quotient_order {
                central_quotient_rank = Some(rank);
            }
        }
    }

    StructureReport {
        order: g.order(),
        exponent,
        class_count: cs.count(),
        center_order: z.order(),
        derived_order: derived.order(),
        is_abelian,
        is_extraspecial,
        order_histogram: histogram,
        central_quotient_rank,
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::q8;
    use super::*;

    #[test]
    fn q8_report() {
        let g = q8();
        let cs = ClassStructure::compute(&g);
        let r = group_report(&g, &cs);
        assert_eq!(r.order, 8);
        assert_eq!(r.exponent, 4);
        assert_eq!(r.center_order, 2);
        assert_eq!(r.derived_order, 2);
        assert!(!r.is_abelian);
        // Q8 is the extraspecial group of order 2^{1+2}
        assert!(r.is_extraspecial);
        assert_eq!(r.order_histogram.get(&4), Some(&6));
    }
}
