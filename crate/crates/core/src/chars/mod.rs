//! Exact character computation and decomposition over conjugacy-class data.
//!
//! Characters are class functions with cyclotomic values, stored in the
//! deterministic class order of a [`ClassStructure`]. The identity class is
//! always index 0.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{AbstractGroup, ClassStructure, FinMatGroup, SubgroupView};
use crate::matrix::Matrix;
use crate::scalar::{CycNum, Rational, Scalar};

mod matching;
pub mod reference;
mod table;

pub use matching::{table_match, MatchReport, RefColumn, RefTable};
pub use table::{build_char_table, CharTable};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Character {
    /// One value per conjugacy class.
    pub values: Vec<CycNum>,
}

impl Character {
    pub fn new(values: Vec<CycNum>) -> Self {
        Character { values }
    }

    pub fn trivial(class_count: usize) -> Self {
        Character {
            values: vec![CycNum::int(1); class_count],
        }
    }

    /// The value at the identity class.
    pub fn degree(&self) -> &CycNum {
        &self.values[0]
    }

    pub fn conj(&self) -> Self {
        Character {
            values: self.values.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn vw_twist(&self) -> Self {
        Character {
            values: self.values.iter().map(|x| x.vw_twist()).collect(),
        }
    }

    /// Pointwise product (the character of the tensor product).
    pub fn tensor(&self, other: &Self) -> Self {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul_ref(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub_scaled(&self, other: &Self, k: usize) -> Self {
        let k = CycNum::int(k as i64);
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.sub_ref(&k.mul_ref(b)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }
}

/// ⟨χ, ψ⟩ = (1/|G|) Σ_classes size · χ(c) · conj(ψ(c)). A rational integer
/// whenever both arguments are characters.
pub fn inner_product(cs: &ClassStructure, a: &Character, b: &Character) -> CycNum {
    let mut acc = CycNum::zero();
    for (ci, c) in cs.classes.iter().enumerate() {
        let term = a.values[ci].mul_ref(&b.values[ci].conj());
        acc = acc.add_ref(&term.scale(&Rational::int(c.size as i64)));
    }
    acc.scale(&Rational::new(1, cs.group_order as i64))
}

/// Inner product coerced to a non-negative integer, as is the case for true
/// characters; errors otherwise.
pub fn inner_product_nat(cs: &ClassStructure, a: &Character, b: &Character) -> Result<usize> {
    let ip = inner_product(cs, a, b);
    let r = ip
        .as_rational()
        .ok_or_else(|| Error::DecompositionResidual(format!("non-rational inner product {ip}")))?;
    r.to_i64()
        .filter(|&n| n >= 0)
        .map(|n| n as usize)
        .ok_or_else(|| Error::DecompositionResidual(format!("non-integral inner product {ip}")))
}

/// Trace of a class representative in the defining matrix representation.
pub fn natural_character(g: &FinMatGroup<CycNum>, cs: &ClassStructure) -> Character {
    Character {
        values: cs.classes.iter().map(|c| g.matrix(c.rep).trace()).collect(),
    }
}

/// Character of the representation sending each group generator to the given
/// image matrix. The assignment is replayed along every derivation word and
/// checked for consistency on every (element, generator) edge, which is
/// equivalent to it extending to a homomorphism.
pub fn hom_character<S: Scalar>(
    g: &FinMatGroup<S>,
    cs: &ClassStructure,
    images: &[Matrix<CycNum>],
) -> Result<Character> {
    let gens = g.generator_indices();
    if images.len() != gens.len() {
        return Err(Error::NotAHomomorphism(format!(
            "{} generator images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    let n = g.order();
    let dim = images.first().map(|m| m.dim()).unwrap_or(1);
    let mut img: Vec<Option<Matrix<CycNum>>> = vec![None; n];
    img[0] = Some(Matrix::identity(dim));
    for mut e in 0..n {
        let mut chain = Vec::new();
        while img[e].is_none() {
            chain.push(e);
            e = g.word(e).expect("non-identity element has a word").0;
        }
        while let Some(x) = chain.pop() {
            let (parent, gi) = g.word(x).unwrap();
            let m = img[parent].as_ref().unwrap().mul_unchecked(&images[gi]);
            img[x] = Some(m);
        }
    }
    for e in 0..n {
        for (gi, &gidx) in gens.iter().enumerate() {
            let target = g.mul_idx(e, gidx);
            let lhs = img[e].as_ref().unwrap().mul_unchecked(&images[gi]);
            if &lhs != img[target].as_ref().unwrap() {
                return Err(Error::NotAHomomorphism(format!(
                    "image inconsistency at element {e}, generator {gi}"
                )));
            }
        }
    }
    Ok(Character {
        values: cs
            .classes
            .iter()
            .map(|c| img[c.rep].as_ref().unwrap().trace())
            .collect(),
    })
}

/// Symmetric-square character: (χ(g)² + χ(g²)) / 2.
pub fn sym2(g: &impl AbstractGroup, cs: &ClassStructure, chi: &Character) -> Character {
    power_square(g, cs, chi, true)
}

/// Antisymmetric-square character: (χ(g)² − χ(g²)) / 2.
pub fn alt2(g: &impl AbstractGroup, cs: &ClassStructure, chi: &Character) -> Character {
    power_square(g, cs, chi, false)
}

fn power_square(
    g: &impl AbstractGroup,
    cs: &ClassStructure,
    chi: &Character,
    plus: bool,
) -> Character {
    let sq = cs.power_class_map(g, 2);
    let half = Rational::new(1, 2);
    Character {
        values: (0..cs.count())
            .map(|ci| {
                let v = &chi.values[ci];
                let vsq = v.mul_ref(v);
                let at_sq = &chi.values[sq[ci]];
                let combined = if plus {
                    vsq.add_ref(at_sq)
                } else {
                    vsq.sub_ref(at_sq)
                };
                combined.scale(&half)
            })
            .collect(),
    }
}

/// Induced character χ↑(g) = (1/|H|) Σ_{x ∈ G, xgx⁻¹ ∈ H} χ_H(xgx⁻¹).
pub fn induce<G: AbstractGroup>(
    g: &G,
    cs: &ClassStructure,
    sub: &SubgroupView<'_, G>,
    sub_cs: &ClassStructure,
    chi_h: &Character,
) -> Character {
    let h_order = Rational::int(sub.order() as i64);
    let values = cs
        .classes
        .iter()
        .map(|c| {
            let mut acc = CycNum::zero();
            for x in 0..g.order() {
                let y = g.mul(g.mul(x, c.rep), g.inv(x));
                if let Some(local) = sub.local_index(y) {
                    acc = acc.add_ref(&chi_h.values[sub_cs.class_of[local]]);
                }
            }
            acc.scale(&h_order.inv().expect("nonempty subgroup"))
        })
        .collect();
    Character { values }
}

/// Restriction of a character to a subgroup, by element membership.
pub fn restrict<G: AbstractGroup>(
    cs: &ClassStructure,
    sub: &SubgroupView<'_, G>,
    sub_cs: &ClassStructure,
    chi: &Character,
) -> Character {
    Character {
        values: sub_cs
            .classes
            .iter()
            .map(|c| chi.values[cs.class_of[sub.parent_index(c.rep)]].clone())
            .collect(),
    }
}

/// Multiplicities of each table row in `chi`; errors unless the residual is
/// exactly zero with non-negative integral multiplicities.
pub fn decompose(
    cs: &ClassStructure,
    table: &CharTable,
    chi: &Character,
) -> Result<Vec<usize>> {
    let mut mults = Vec::with_capacity(table.irreducibles.len());
    let mut residual = chi.clone();
    for irr in &table.irreducibles {
        let m = inner_product_nat(cs, chi, irr)?;
        mults.push(m);
        if m > 0 {
            residual = residual.sub_scaled(irr, m);
        }
    }
    if !residual.is_zero() {
        return Err(Error::DecompositionResidual(
            "nonzero residual after stripping all irreducibles".into(),
        ));
    }
    Ok(mults)
}

fn zeta_pow(z: &CycNum, k: usize) -> CycNum {
    let mut acc = CycNum::int(1);
    for _ in 0..k {
        acc = acc.mul_ref(z);
    }
    acc
}

/// All homomorphisms of an abelian group (exponent dividing 12) into the
/// roots of unity, as element-indexed value vectors, via a greedy
/// direct-product decomposition. Deterministically ordered.
pub fn abelian_linear_values(g: &impl AbstractGroup) -> Result<Vec<Vec<CycNum>>> {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            if g.mul(a, b) != g.mul(b, a) {
                return Err(Error::NotAHomomorphism("group is not abelian".into()));
            }
        }
    }
    // Greedy basis: repeatedly take an element of maximal order outside the
    // current span; validate the direct-product structure afterwards.
    let mut basis: Vec<usize> = Vec::new();
    let mut span = crate::group::subgroup_closure(g, &basis);
    let mut by_order: Vec<usize> = (1..n).collect();
    by_order.sort_by_key(|&e| (std::cmp::Reverse(g.element_order(e)), e));
    for &e in &by_order {
        if span.order() == n {
            break;
        }
        if !span.contains(e) {
            basis.push(e);
            span = crate::group::subgroup_closure(g, &basis);
        }
    }
    let orders: Vec<usize> = basis.iter().map(|&b| g.element_order(b)).collect();
    if orders.iter().product::<usize>() != n {
        return Err(Error::NotAHomomorphism(
            "greedy basis is not a direct-product decomposition".into(),
        ));
    }
    for &o in &orders {
        if 12 % o != 0 {
            return Err(Error::NotAHomomorphism(format!(
                "component order {o} does not divide 12"
            )));
        }
    }
    let zeta = CycNum::from_coords([
        Rational::int(0),
        Rational::int(1),
        Rational::int(0),
        Rational::int(0),
    ]);
    // exponent tuples for every element, by enumerating the product
    let mut tuples = vec![vec![0usize; basis.len()]];
    for (pos, &order) in orders.iter().enumerate() {
        let mut next = Vec::new();
        for t in &tuples {
            for i in 0..order {
                let mut t2 = t.clone();
                t2[pos] = i;
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut exps: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut assigned = vec![false; n];
    for t in tuples {
        let mut e = 0usize;
        for (pos, &i) in t.iter().enumerate() {
            e = g.mul(e, g.power(basis[pos], i));
        }
        if assigned[e] {
            return Err(Error::NotAHomomorphism(
                "basis does not enumerate the group uniquely".into(),
            ));
        }
        assigned[e] = true;
        exps[e] = t;
    }
    let mut mtuples = vec![vec![0usize; basis.len()]];
    for (pos, &o) in orders.iter().enumerate() {
        let mut next = Vec::new();
        for t in &mtuples {
            for m in 0..o {
                let mut t2 = t.clone();
                t2[pos] = m;
                next.push(t2);
            }
        }
        next.sort();
        mtuples = next;
    }
    Ok(mtuples
        .into_iter()
        .map(|m| {
            (0..n)
                .map(|e| {
                    let mut acc = CycNum::int(1);
                    for (pos, &o) in orders.iter().enumerate() {
                        let z = zeta_pow(&zeta, 12 / o);
                        acc = acc.mul_ref(&zeta_pow(&z, (m[pos] * exps[e][pos]) % o));
                    }
                    acc
                })
                .collect()
        })
        .collect())
}

/// Linear characters of G lifted from an abelian quotient G/N.
pub fn abelian_quotient_lifts(
    g: &impl AbstractGroup,
    cs: &ClassStructure,
    n_handle: &crate::group::SubgroupHandle,
) -> Result<Vec<Character>> {
    let q = crate::group::quotient(g, n_handle)?;
    let values = abelian_linear_values(&q)?;
    Ok(values
        .into_iter()
        .map(|vals| Character {
            values: cs
                .classes
                .iter()
                .map(|cl| vals[q.coset_of[cl.rep]].clone())
                .collect(),
        })
        .collect())
}

/// The linear characters of an abelian subgroup, as characters over its own
/// class structure (all classes are singletons).
pub fn abelian_subgroup_characters<G: AbstractGroup>(
    view: &SubgroupView<'_, G>,
    sub_cs: &ClassStructure,
) -> Result<Vec<Character>> {
    let values = abelian_linear_values(view)?;
    Ok(values
        .into_iter()
        .map(|vals| Character {
            values: sub_cs
                .classes
                .iter()
                .map(|c| vals[c.rep].clone())
                .collect(),
        })
        .collect())
}
