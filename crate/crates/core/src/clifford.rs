//! Quaternionic Dirac-algebra verification: Clifford relations and
//! signatures, the extraspecial group censuses, conjugation actions, fixed
//! spaces and the spinor character.

use std::collections::HashSet;

use num_traits::Zero;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::group::{subgroup_closure, FinMatGroup};
use crate::matrix::{canonical_line, fixed_space_right, Matrix};
use crate::scalar::{CycNum, QuatNum, Rational};

/// The named Dirac matrices in the fixed labelling: γ⁰..γ³ recovered from
/// the real matrices iγ^μ by left multiplication with −i.
pub struct GammaSet {
    pub gamma: [Matrix<QuatNum>; 4],
    pub gamma5: Matrix<QuatNum>,
    pub gamma6: Matrix<QuatNum>,
    pub i_gamma: [Matrix<QuatNum>; 4],
}

pub fn gamma_set(cat: &Catalog) -> Result<GammaSet> {
    let ig = [
        cat.quat_matrix("ig0")?.clone(),
        cat.quat_matrix("ig1")?.clone(),
        cat.quat_matrix("ig2")?.clone(),
        cat.quat_matrix("ig3")?.clone(),
    ];
    let minus_i = QuatNum::i().conj();
    let gamma = [
        ig[0].scale_left(&minus_i),
        ig[1].scale_left(&minus_i),
        ig[2].scale_left(&minus_i),
        ig[3].scale_left(&minus_i),
    ];
    Ok(GammaSet {
        gamma,
        gamma5: cat.quat_matrix("gamma5")?.clone(),
        gamma6: cat.quat_matrix("gamma6")?.clone(),
        i_gamma: ig,
    })
}

/// Verify that every pair of generators anticommutes and every square is
/// ±identity; the signature is (#squares = +1, #squares = −1).
pub fn clifford_signature(gens: &[Matrix<QuatNum>]) -> Result<(usize, usize)> {
    let n = gens.first().map(|m| m.dim()).unwrap_or(0);
    let id = Matrix::identity(n);
    let neg_id = id.neg();
    let mut plus = 0;
    let mut minus = 0;
    for (i, a) in gens.iter().enumerate() {
        let sq = a.mul_unchecked(a);
        if sq == id {
            plus += 1;
        } else if sq == neg_id {
            minus += 1;
        } else {
            return Err(Error::NotCliffordSet(format!(
                "generator {i} squares to a non-scalar"
            )));
        }
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let anti = a.mul_unchecked(b).add(&b.mul_unchecked(a));
            if anti.entries().iter().any(|x| !x.is_zero()) {
                return Err(Error::NotCliffordSet(format!(
                    "generators {i} and {j} do not anticommute"
                )));
            }
        }
    }
    Ok((plus, minus))
}

/// g⁻¹·m·g.
pub fn conjugate_action(g: &Matrix<QuatNum>, m: &Matrix<QuatNum>) -> Result<Matrix<QuatNum>> {
    Ok(g.inverse()?.mul_unchecked(m).mul_unchecked(g))
}

/// Entrywise quaternion conjugation: the canonical isomorphism between the
/// two opposite quaternion-product conventions for matrices acting on row
/// vectors. Displayed matrices written in the opposite convention are
/// compared through this bridge.
pub fn entrywise_conj(m: &Matrix<QuatNum>) -> Matrix<QuatNum> {
    Matrix::from_entries(m.dim(), m.entries().iter().map(|q| q.conj()).collect())
}

/// The Bjorken–Drell-convention Dirac generators, reassembled from catalog
/// literals: γ⁰ = −i·(iγ⁰), γ¹ and γ³ are extraspecial generators, γ² from
/// the shared real matrix, γ⁵ = iγ⁰γ¹γ²γ³.
pub fn bjorken_drell_set(cat: &Catalog) -> Result<[Matrix<QuatNum>; 5]> {
    let minus_i = QuatNum::i().conj();
    let g0 = cat.quat_matrix("mixed_1")?.scale_left(&minus_i);
    let g1 = cat.quat_matrix("e128_5")?.clone();
    let g2 = cat.quat_matrix("ig2")?.scale_left(&minus_i);
    let g3 = cat.quat_matrix("e128_2")?.clone();
    let i4 = Matrix::scalar(4, &QuatNum::i());
    let g5 = i4
        .mul_unchecked(&g0)
        .mul_unchecked(&g1)
        .mul_unchecked(&g2)
        .mul_unchecked(&g3);
    Ok([g0, g1, g2, g3, g5])
}

#[derive(Debug, Clone)]
pub struct E128Census {
    pub q8_subgroups: usize,
    pub commuting_triple_factorizations: usize,
    pub commuting_involutions_up_to_sign: usize,
    pub anticommuting_partners_of_fixed: usize,
}

/// Subgroup censuses inside the extraspecial group of order 128.
///
/// The spin quaternion subgroup is ⟨γ¹γ², γ²γ³⟩ and the distinguished
/// involution is γ⁰; censuses "up to sign" quotient by the central −1.
pub fn e128_census(cat: &Catalog, e128: &FinMatGroup<QuatNum>) -> Result<E128Census> {
    let n = e128.order();
    e128.ensure_mult_table();
    let neg: Vec<usize> = (0..n)
        .map(|e| {
            e128.index_of(&e128.matrix(e).neg())
                .expect("closed under negation")
        })
        .collect();
    let minus_one = neg[0];
    let commute = |a: usize, b: usize| e128.mul_idx(a, b) == e128.mul_idx(b, a);
    let anticommute = |a: usize, b: usize| e128.mul_idx(a, b) == neg[e128.mul_idx(b, a)];

    // order-4 elements square to the central involution
    let order4: Vec<usize> = (0..n).filter(|&e| e128.mul_idx(e, e) == minus_one).collect();
    let mut q8s: HashSet<Vec<usize>> = HashSet::new();
    for (i, &x) in order4.iter().enumerate() {
        for &y in order4.iter().skip(i + 1) {
            if !anticommute(x, y) {
                continue;
            }
            let sub = subgroup_closure(e128, &[x, y]);
            assert_eq!(sub.order(), 8);
            q8s.insert(sub.elems);
        }
    }
    let q8s: Vec<Vec<usize>> = {
        let mut v: Vec<_> = q8s.into_iter().collect();
        v.sort();
        v
    };

    // elementwise commuting is equivalent to generator-wise commuting; take
    // two generators per Q8 (first two non-central order-4 members)
    let gens_of: Vec<[usize; 2]> = q8s
        .iter()
        .map(|elems| {
            let o4: Vec<usize> = elems
                .iter()
                .copied()
                .filter(|&e| e128.mul_idx(e, e) == minus_one)
                .collect();
            let a = o4[0];
            let b = *o4.iter().find(|&&b| anticommute(a, b)).unwrap();
            [a, b]
        })
        .collect();
    let pair_commutes = |i: usize, j: usize| {
        gens_of[i]
            .iter()
            .all(|&a| gens_of[j].iter().all(|&b| commute(a, b)))
    };
    let mut commuting_pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..q8s.len() {
        for j in i + 1..q8s.len() {
            if pair_commutes(i, j) {
                commuting_pairs.push((i, j));
            }
        }
    }
    let mut factorizations = 0usize;
    for &(i, j) in &commuting_pairs {
        for k in j + 1..q8s.len() {
            if pair_commutes(i, k) && pair_commutes(j, k) {
                let mut seeds = q8s[i].clone();
                seeds.extend(&q8s[j]);
                seeds.extend(&q8s[k]);
                if subgroup_closure(e128, &seeds).order() == n {
                    factorizations += 1;
                }
            }
        }
    }

    // involutions commuting with the spin Q8
    let spin = [
        e128.locate(&[cat.quat_matrix("g12")?.clone()])?[0],
        e128.locate(&[cat.quat_matrix("g23")?.clone()])?[0],
    ];
    let involutions: Vec<usize> = (0..n)
        .filter(|&e| e != 0 && e != minus_one && e128.mul_idx(e, e) == 0)
        .filter(|&e| spin.iter().all(|&s| commute(e, s)))
        .collect();
    assert!(involutions.iter().all(|&e| involutions.contains(&neg[e])));
    let commuting_involutions_up_to_sign = involutions.len() / 2;

    let fixed = e128.locate(&[gamma_set(cat)?.gamma[0].clone()])?[0];
    assert!(involutions.contains(&fixed), "the fixed involution commutes with spin");
    let anticommuting_partners_of_fixed = involutions
        .iter()
        .filter(|&&e| e != fixed && e != neg[fixed] && anticommute(e, fixed))
        .count()
        / 2;

    Ok(E128Census {
        q8_subgroups: q8s.len(),
        commuting_triple_factorizations: factorizations,
        commuting_involutions_up_to_sign,
        anticommuting_partners_of_fixed,
    })
}

#[derive(Debug)]
pub struct ColumnTripleReport {
    pub column_orders: [usize; 3],
    pub pairwise_commuting: bool,
    pub pairwise_intersections_are_center: bool,
    pub joint_order: usize,
}

/// The three column subgroups of the extraspecial generators: each is a
/// quaternion group, they commute elementwise, intersect in the center, and
/// together generate the whole group.
pub fn column_triple_check(cat: &Catalog, e128: &FinMatGroup<QuatNum>) -> Result<ColumnTripleReport> {
    e128.ensure_mult_table();
    let col = |a: &str, b: &str| -> Result<Vec<usize>> {
        let idx = e128.locate(&[cat.quat_matrix(a)?.clone(), cat.quat_matrix(b)?.clone()])?;
        Ok(subgroup_closure(e128, &idx).elems)
    };
    let cols = [
        col("e128_1", "e128_4")?,
        col("e128_2", "e128_5")?,
        col("e128_3", "e128_6")?,
    ];
    let column_orders = [cols[0].len(), cols[1].len(), cols[2].len()];
    let mut pairwise_commuting = true;
    let mut pairwise_intersections_are_center = true;
    let center: Vec<usize> = crate::group::center(e128).elems;
    for i in 0..3 {
        for j in i + 1..3 {
            for &a in &cols[i] {
                for &b in &cols[j] {
                    if e128.mul_idx(a, b) != e128.mul_idx(b, a) {
                        pairwise_commuting = false;
                    }
                }
            }
            let inter: Vec<usize> = cols[i]
                .iter()
                .copied()
                .filter(|e| cols[j].contains(e))
                .collect();
            if inter != center {
                pairwise_intersections_are_center = false;
            }
        }
    }
    let mut seeds = cols[0].clone();
    seeds.extend(&cols[1]);
    seeds.extend(&cols[2]);
    let joint_order = subgroup_closure(e128, &seeds).order();
    Ok(ColumnTripleReport {
        column_orders,
        pairwise_commuting,
        pairwise_intersections_are_center,
        joint_order,
    })
}

/// Trace of the right action on the quaternionic row 4-space, taken as a
/// complex-linear map for the left complex structure (left multiplication by
/// i): each diagonal quaternion a+bi+cj+dk contributes (a+bi) + conj(a+bi),
/// so the value is 2·Σ a.
pub fn complex_trace(m: &Matrix<QuatNum>) -> CycNum {
    let mut acc = Rational::zero();
    for i in 0..m.dim() {
        acc += &m.get(i, i).a;
    }
    CycNum::from_rational(&acc * &Rational::int(2))
}

/// The spinor character of the order-648 group: values transported through
/// an explicit isomorphism onto its quaternionic image.
pub fn spinor_character(
    _g648: &FinMatGroup<CycNum>,
    cs: &crate::group::ClassStructure,
    gq: &FinMatGroup<QuatNum>,
    phi: &[usize],
) -> crate::chars::Character {
    crate::chars::Character::new(
        cs.classes
            .iter()
            .map(|c| complex_trace(gq.matrix(phi[c.rep])))
            .collect(),
    )
}

/// Canonicalized left-module line spanned by the fixed space of a matrix
/// set, when it is one-dimensional.
pub fn fixed_line(mats: &[Matrix<QuatNum>]) -> Option<Vec<QuatNum>> {
    let n = mats.first()?.dim();
    let basis = fixed_space_right(n, mats);
    if basis.len() != 1 {
        return None;
    }
    Some(canonical_line(&basis[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn gamma_products_match_their_names() {
        let cat = catalog();
        let gs = gamma_set(cat).unwrap();
        let [g0, g1, g2, g3] = &gs.gamma;
        assert_eq!(
            g1.mul_unchecked(g2),
            *cat.quat_matrix("g12").unwrap(),
            "γ¹γ²"
        );
        assert_eq!(
            g2.mul_unchecked(g3),
            *cat.quat_matrix("g23").unwrap(),
            "γ²γ³"
        );
        // the displayed matrix is γ⁵γ⁰ = −γ⁰γ⁵: one central sign of slack in
        // the label, none in the group it generates
        assert_eq!(
            gs.gamma5.mul_unchecked(g0),
            *cat.quat_matrix("g05").unwrap(),
            "γ⁵γ⁰"
        );
        let i4 = Matrix::scalar(4, &QuatNum::i());
        assert_eq!(
            i4.mul_unchecked(g0),
            *cat.quat_matrix("ig0").unwrap(),
            "iγ⁰"
        );
        // iγ¹γ²γ³ in these labels is the negative of the displayed generator
        assert_eq!(
            i4.mul_unchecked(g1).mul_unchecked(g2).mul_unchecked(g3),
            cat.quat_matrix("e128_3").unwrap().neg(),
            "iγ¹γ²γ³"
        );
        // the remaining generator labels refer to the Bjorken-Drell set
        let [b0, b1, b2, b3, _] = bjorken_drell_set(cat).unwrap();
        assert_eq!(
            i4.mul_unchecked(&b0).mul_unchecked(&b2),
            *cat.quat_matrix("e128_6").unwrap(),
            "iγ⁰γ² (BD)"
        );
        assert_eq!(b1, *cat.quat_matrix("e128_5").unwrap());
        assert_eq!(b3, *cat.quat_matrix("e128_2").unwrap());
    }

    #[test]
    fn clifford_signatures() {
        let cat = catalog();
        let gs = gamma_set(cat).unwrap();
        // {iγ⁰..iγ³}: signature (3,1)
        assert_eq!(clifford_signature(&gs.i_gamma).unwrap(), (3, 1));
        // {γ⁰..γ³, γ⁵}: signature (2,3)
        let mut five: Vec<_> = gs.gamma.to_vec();
        five.push(gs.gamma5.clone());
        assert_eq!(clifford_signature(&five).unwrap(), (2, 3));
        // in these labels γ⁶ is the scalar j: it anticommutes with all five
        // generators, squares to −1, and extends to signature (2,4)
        let mut six = five.clone();
        six.push(Matrix::scalar(4, &QuatNum::j()));
        assert_eq!(clifford_signature(&six).unwrap(), (2, 4));
        // signature is invariant under permuting the generator list
        let mut rev = six.clone();
        rev.reverse();
        assert_eq!(clifford_signature(&rev).unwrap(), (2, 4));
        // the displayed γ⁶ matrix plays the same role for the Bjorken-Drell
        // generators
        let bd = bjorken_drell_set(cat).unwrap();
        assert_eq!(clifford_signature(&bd).unwrap(), (2, 3));
        let mut bd6 = bd.to_vec();
        bd6.push(gs.gamma6.clone());
        assert_eq!(clifford_signature(&bd6).unwrap(), (2, 4));
        // negative control: {γ⁰, γ⁰} cannot anticommute
        let bad = vec![gs.gamma[0].clone(), gs.gamma[0].clone()];
        assert!(clifford_signature(&bad).is_err());
    }

    #[test]
    fn conjugation_images_match_displayed_matrices() {
        // The displayed images use the opposite quaternion-product
        // convention; entrywise conjugation carries them onto ours.
        let cat = catalog();
        let p = entrywise_conj(cat.quat_matrix("pauli4q_1").unwrap());
        for (src, img) in [
            ("e128_1", "mixed_1"),
            ("e128_2", "mixed_2"),
            ("e128_3", "mixed_3"),
        ] {
            let m = entrywise_conj(cat.quat_matrix(src).unwrap());
            assert_eq!(
                conjugate_action(&p, &m).unwrap(),
                entrywise_conj(cat.quat_matrix(img).unwrap()),
                "{src} -> {img}"
            );
        }
        // identity conjugation is trivial
        let id = Matrix::identity(4);
        let m = cat.quat_matrix("e128_2").unwrap();
        assert_eq!(conjugate_action(&id, m).unwrap(), *m);
    }

    #[test]
    fn gluon_action_on_spin_and_energy() {
        let cat = catalog();
        let g = cat.quat_matrix("gm4q_1").unwrap();
        assert_eq!(
            conjugate_action(g, cat.quat_matrix("g12").unwrap()).unwrap(),
            *cat.quat_matrix("g23").unwrap()
        );
        assert_eq!(
            conjugate_action(g, cat.quat_matrix("g05").unwrap()).unwrap(),
            *cat.quat_matrix("gm_energy_image").unwrap()
        );
    }

    #[test]
    fn fixed_spaces() {
        let cat = catalog();
        // all eight Gell-Mann matrices (four plus daggers) fix (0,1,ω,ω²)
        let mut gms: Vec<Matrix<QuatNum>> = Vec::new();
        for i in 1..=4 {
            let m = cat.quat_matrix(&format!("gm4q_{i}")).unwrap().clone();
            gms.push(m.dagger());
            gms.push(m);
        }
        let line = fixed_line(&gms).unwrap();
        let want = canonical_line(&cat.quat_vectors("gm_fixed").unwrap()[0]);
        assert_eq!(line, want);
        // the Pauli matrices fix (1,0,0,0)
        let paulis: Vec<Matrix<QuatNum>> = (1..=3)
            .map(|i| cat.quat_matrix(&format!("pauli4q_{i}")).unwrap().clone())
            .collect();
        let line = fixed_line(&paulis).unwrap();
        assert_eq!(line, canonical_line(&cat.quat_vectors("pauli_fixed").unwrap()[0]));
        // the centre element also fixes (0,1,ω,ω²)
        let c = cat.quat_matrix("centre4q").unwrap().clone();
        assert_eq!(fixed_line(&[c]).unwrap(), want);
    }

    #[test]
    fn centre_action() {
        let cat = catalog();
        let c = cat.quat_matrix("centre4q").unwrap();
        assert_eq!(c.multiplicative_order(10).unwrap(), 3);
        for i in 1..=3 {
            let p = cat.quat_matrix(&format!("pauli4q_{i}")).unwrap();
            assert_eq!(c.mul_unchecked(p), p.mul_unchecked(c), "pauli4q_{i}");
        }
        // conjugation cycles the scalar quaternions i -> j -> k -> i exactly
        let scalars = [
            Matrix::scalar(4, &QuatNum::i()),
            Matrix::scalar(4, &QuatNum::j()),
            Matrix::scalar(4, &QuatNum::k()),
        ];
        let scalar_cycle: Vec<usize> = scalars
            .iter()
            .map(|s| {
                let img = conjugate_action(c, s).unwrap();
                scalars.iter().position(|x| *x == img).unwrap()
            })
            .collect();
        assert_eq!(scalar_cycle, vec![1, 2, 0]);
        // and simultaneously cycles the spin planes (as ± pairs) the same
        // way: the x, y, z planes γ²γ³, γ³γ¹, γ¹γ² follow i, j, k
        let gs = gamma_set(cat).unwrap();
        let g31 = gs.gamma[3].mul_unchecked(&gs.gamma[1]);
        let planes = [
            cat.quat_matrix("g23").unwrap().clone(),
            g31,
            cat.quat_matrix("g12").unwrap().clone(),
        ];
        let plane_cycle: Vec<usize> = planes
            .iter()
            .map(|p| {
                let img = conjugate_action(c, p).unwrap();
                planes
                    .iter()
                    .position(|x| *x == img || x.neg() == img)
                    .unwrap()
            })
            .collect();
        assert_eq!(plane_cycle, vec![1, 2, 0]);
    }
}
