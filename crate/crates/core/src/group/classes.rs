//! Conjugacy class computation over any [`AbstractGroup`].

use super::AbstractGroup;

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Minimal element index in the class (also the representative).
    pub rep: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    pub size: usize,
    /// |G| / size.
    pub centralizer_order: usize,
    pub element_order: usize,
}

#[derive(Clone, Debug)]
pub struct ClassStructure {
    pub classes: Vec<ConjClass>,
    /// element index -> class index
    pub class_of: Vec<usize>,
    /// class index -> class index of inverses
    pub inverse_class: Vec<usize>,
    pub group_order: usize,
}

impl ClassStructure {
    /// Partition the group into conjugacy classes. Classes are ordered by
    /// (element order, class size, minimal element index) so every report
    /// derived from them is deterministic.
    pub fn compute(g: &impl AbstractGroup) -> ClassStructure {
        let n = g.order();
        let gens: Vec<usize> = g.generators().to_vec();
        let gen_invs: Vec<usize> = gens.iter().map(|&x| g.inv(x)).collect();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for e in 0..n {
            if seen[e] {
                continue;
            }
            let mut members = vec![e];
            seen[e] = true;
            let mut stack = vec![e];
            while let Some(x) = stack.pop() {
                for (&gi, &g_inv) in gens.iter().zip(&gen_invs) {
                    let y = g.mul(g_inv, g.mul(x, gi));
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            let size = members.len();
            assert_eq!(n % size, 0, "class size must divide the group order");
            classes.push(ConjClass {
                rep: members[0],
                members,
                size,
                centralizer_order: n / size,
                element_order: g.element_order(e),
            });
        }
        classes.sort_by(|a, b| {
            (a.element_order, a.size, a.rep).cmp(&(b.element_order, b.size, b.rep))
        });
        let mut class_of = vec![0usize; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        let inverse_class = classes
            .iter()
            .map(|c| class_of[g.inv(c.rep)])
            .collect();
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, n, "class sizes must sum to the group order");
        ClassStructure {
            classes,
            class_of,
            inverse_class,
            group_order: n,
        }
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn centralizer_orders(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.centralizer_order).collect()
    }

    /// Maps each class to the class of k-th powers of its elements.
    pub fn power_class_map(&self, g: &impl AbstractGroup, k: usize) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| {
                let exp = k % c.element_order;
                self.class_of[g.power(c.rep, exp)]
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::q8;
    use super::*;

    #[test]
    fn q8_class_structure() {
        let g = q8();
        let cs = ClassStructure::compute(&g);
        assert_eq!(cs.count(), 5);
        let mut sizes = cs.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        for c in &cs.classes {
            assert_eq!(c.size * c.centralizer_order, 8);
        }
    }

    #[test]
    fn power_maps() {
        let g = q8();
        let cs = ClassStructure::compute(&g);
        // k = 1 is the identity map
        let p1 = cs.power_class_map(&g, 1);
        assert_eq!(p1, (0..cs.count()).collect::<Vec<_>>());
        // k = |G| collapses to the identity class
        let p8 = cs.power_class_map(&g, 8);
        assert!(p8.iter().all(|&c| c == cs.class_of[0]));
        // squaring sends the order-4 classes to the class of -1
        let p2 = cs.power_class_map(&g, 2);
        let minus_one = cs
            .classes
            .iter()
            .position(|c| c.element_order == 2)
            .unwrap();
        for (ci, c) in cs.classes.iter().enumerate() {
            if c.element_order == 4 {
                assert_eq!(p2[ci], minus_one);
            }
        }
    }
}
