//! The registry of verification claims: each claim states an expected value,
//! computes the actual one from the shared store, and the report doubles as
//! a machine-checkable concordance of every structural assertion the library
//! makes about its groups.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::catalog::{self, catalog};
use crate::chars::{self, natural_character, Character};
use crate::clifford;
use crate::error::Result;
use crate::geometry::{self, ProjPoint};
use crate::group::{self, AbstractGroup, ClassStructure, SubgroupHandle, SubgroupView};
use crate::matrix::Matrix;
use crate::reflection;
use crate::scalar::{CycNum, QuatNum};
use crate::store::GroupStore;

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub expected: &'static str,
    run: fn(&GroupStore) -> Result<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub statement: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

pub fn all_claims() -> Vec<Claim> {
    let mut claims = vec![
        // ------------------------------------------------------ orders ----
        Claim {
            id: "orders.q8",
            statement: "closure of the two anti-Hermitian Pauli generators is the quaternion group",
            expected: "8",
            run: |s| Ok(s.q8()?.order().to_string()),
        },
        Claim {
            id: "orders.btg",
            statement: "adjoining the order-3 automorphism gives the binary tetrahedral group",
            expected: "24",
            run: |s| Ok(s.btg()?.order().to_string()),
        },
        Claim {
            id: "orders.g27",
            statement: "the two ternary generators close to the group of order 27",
            expected: "27",
            run: |s| Ok(s.g27()?.order().to_string()),
        },
        Claim {
            id: "orders.g216",
            statement: "adding the quaternionic pair closes to the order-216 group",
            expected: "216",
            run: |s| Ok(s.g216()?.order().to_string()),
        },
        Claim {
            id: "orders.g648",
            statement: "adding the determinant-v reflection closes to the order-648 group",
            expected: "648",
            run: |s| Ok(s.g648()?.order().to_string()),
        },
        Claim {
            id: "orders.e128",
            statement: "the six Dirac-type generators close to the extraspecial group of order 128",
            expected: "128",
            run: |s| Ok(s.e128()?.order().to_string()),
        },
        Claim {
            id: "orders.g27_4q",
            statement: "the quaternionic Gell-Mann matrices generate a group of order 27",
            expected: "27",
            run: |s| Ok(s.g27_4q()?.order().to_string()),
        },
        Claim {
            id: "orders.q8_4q",
            statement: "the quaternionic Pauli matrices generate a quaternion group",
            expected: "8",
            run: |s| Ok(s.q8_4q()?.order().to_string()),
        },
        Claim {
            id: "orders.btg_4q",
            statement: "each of the three extension matrices extends the quaternionic Pauli group to order 24",
            expected: "24, 24, 24",
            run: |_s| {
                let cat = catalog();
                let mut orders = Vec::new();
                for ext in ["ext4q_1", "ext4q_2", "ext4q_3"] {
                    let mut gens = cat.quat_generators(cat.group_spec("q8_4q")?)?;
                    gens.push((ext.to_string(), cat.quat_matrix(ext)?.clone()));
                    let g = group::FinMatGroup::closure("btg_4q", gens, 1000)?;
                    orders.push(g.order().to_string());
                }
                Ok(orders.join(", "))
            },
        },
        Claim {
            id: "orders.g648q",
            statement: "the three quaternionic generators close to an image of the order-648 group",
            expected: "648",
            run: |s| Ok(s.g648q()?.order().to_string()),
        },
        Claim {
            id: "orders.combined82944",
            statement: "the extraspecial and order-648 generators together close to the combined group",
            expected: "82944",
            run: |s| Ok(s.combined()?.order().to_string()),
        },
        // ----------------------------------------------------- catalog ----
        Claim {
            id: "catalog.checksum",
            statement: "the literal catalog text is unchanged",
            expected: "3f276305b81dfd08e56a7e49671641c23cd0e06d1dcdb34151000e81a157a67a",
            run: |_| Ok(catalog::Catalog::checksum()),
        },
        Claim {
            id: "catalog.generators_unitary",
            statement: "every catalog group generator is unitary in its domain",
            expected: "true",
            run: |_| {
                let cat = catalog();
                for spec in cat.groups.values() {
                    for name in &spec.generator_names {
                        let ok = match spec.domain {
                            crate::scalar::Domain::Cyclotomic => {
                                cat.cyc_matrix(name)?.is_unitary()
                            }
                            crate::scalar::Domain::Quaternion => {
                                cat.quat_matrix(name)?.is_unitary()
                            }
                            _ => false,
                        };
                        if !ok {
                            return Ok(format!("false ({name})"));
                        }
                    }
                }
                Ok("true".into())
            },
        },
        Claim {
            id: "catalog.gell_mann_not_unitary",
            statement: "the eight Hermitian Gell-Mann matrices are not unitary",
            expected: "true",
            run: |_| {
                let cat = catalog();
                Ok(catalog::gell_mann_names()
                    .iter()
                    .all(|n| !cat.cyc_matrix(n).unwrap().is_unitary())
                    .to_string())
            },
        },
        Claim {
            id: "catalog.gluon_basis",
            statement: "the unitary basis is traceless/unitary/det-1, orthogonal with norm 3, and spans the same 8-space as the Gell-Mann matrices",
            expected: "traceless, unitary, det 1, orthogonal, norms 3, ranks 8/8/8",
            run: |_| {
                let r = catalog::gluon_basis_check(catalog())?;
                let norms_ok = r.norms.iter().all(|n| *n == CycNum::int(3));
                Ok(format!(
                    "{}{}{}{}{}ranks {}/{}/{}",
                    if r.all_traceless { "traceless, " } else { "not traceless, " },
                    if r.all_unitary { "unitary, " } else { "not unitary, " },
                    if r.all_det_one { "det 1, " } else { "det != 1, " },
                    if r.pairwise_orthogonal { "orthogonal, " } else { "not orthogonal, " },
                    if norms_ok { "norms 3, " } else { "unexpected norms, " },
                    r.unitary_span_rank, r.gell_mann_span_rank, r.joint_span_rank
                ))
            },
        },
        Claim {
            id: "catalog.semidirect_relations",
            statement: "IW = WJ and JW = WIJ hold while the direct-product relation IW = WI fails",
            expected: "true",
            run: |_| {
                let r = catalog::semidirect_relation_check(catalog())?;
                Ok((r.iw_eq_wj && r.jw_eq_wij && !r.iw_eq_wi).to_string())
            },
        },
        Claim {
            id: "catalog.commutator_scalars",
            statement: "the commutators of the order-27 generators are the scalar matrices of order 3",
            expected: "v, w",
            run: |_| {
                let r = catalog::semidirect_relation_check(catalog())?;
                Ok(format!("{}, {}", r.commutator_scalars[0], r.commutator_scalars[1]))
            },
        },
        Claim {
            id: "catalog.intertwine",
            statement: "the ternary matrix converts the permutation generator into the diagonal one",
            expected: "true",
            run: |_| Ok(catalog::semidirect_relation_check(catalog())?.intertwine.to_string()),
        },
        // ----------------------------------------------------- chartab ----
        Claim {
            id: "chartab.btg",
            statement: "the computed binary tetrahedral table matches the 7x7 reference",
            expected: "match",
            run: |s| {
                let t = s.btg_table()?;
                Ok(format!(
                    "match{}",
                    if t.1.twisted { " (v-w twist)" } else { "" }
                ))
            },
        },
        Claim {
            id: "chartab.btg_orthogonality",
            statement: "row and column orthogonality hold exactly for the binary tetrahedral table",
            expected: "true",
            run: |s| {
                let cs = s.btg_classes()?;
                let t = s.btg_table()?;
                Ok((t.0.check_row_orthogonality(&cs) && t.0.check_column_orthogonality(&cs))
                    .to_string())
            },
        },
        Claim {
            id: "chartab.hessian",
            statement: "the descended order-216 table matches the 10x10 reference",
            expected: "match",
            run: |s| {
                let h = s.hessian()?;
                Ok(format!(
                    "match{}",
                    if h.match_report.twisted { " (v-w twist)" } else { "" }
                ))
            },
        },
        Claim {
            id: "chartab.hessian_classes",
            statement: "the order-216 quotient has 10 classes with the stated sizes and centralizers",
            expected: "sizes {1,8,9,12,12,24,24,36,36,54}, centralizers {4,6,6,9,9,18,18,24,27,216}",
            run: |s| {
                let h = s.hessian()?;
                let mut sizes = h.classes.sizes();
                sizes.sort_unstable();
                let mut cents = h.classes.centralizer_orders();
                cents.sort_unstable();
                Ok(format!(
                    "sizes {{{}}}, centralizers {{{}}}",
                    sizes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                    cents.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                ))
            },
        },
        Claim {
            id: "chartab.hessian_orthogonality",
            statement: "row and column orthogonality hold exactly for the order-216 table",
            expected: "true",
            run: |s| {
                let h = s.hessian()?;
                Ok((h.table.check_row_orthogonality(&h.classes)
                    && h.table.check_column_orthogonality(&h.classes))
                .to_string())
            },
        },
        Claim {
            id: "chartab.g648_classes",
            statement: "the order-648 group has 24 conjugacy classes",
            expected: "24",
            run: |s| Ok(s.g648_classes()?.count().to_string()),
        },
        Claim {
            id: "chartab.g648_complete",
            statement: "the order-648 table has 24 irreducible rows with degree squares summing to the order",
            expected: "24 rows, degree squares 648, orthogonal",
            run: |s| {
                let cs = s.g648_classes()?;
                let t = s.g648_table()?;
                let orth = t.check_row_orthogonality(&cs) && t.check_column_orthogonality(&cs);
                Ok(format!(
                    "{} rows, degree squares {}, {}",
                    t.row_count(),
                    t.sum_of_degree_squares(),
                    if orth { "orthogonal" } else { "not orthogonal" }
                ))
            },
        },
        Claim {
            id: "chartab.g648_faithful",
            statement: "the 14 faithful rows match the grouped reference rows and their conjugates",
            expected: "match",
            run: |s| {
                let f = s.faithful_match()?;
                Ok(format!(
                    "match{}",
                    if f.twisted { " (v-w twist)" } else { "" }
                ))
            },
        },
        Claim {
            id: "chartab.natural_is_3b",
            statement: "the defining 3-dimensional character is the first faithful reference row",
            expected: "true",
            run: |s| {
                let g = s.g648()?;
                let cs = s.g648_classes()?;
                let t = s.g648_table()?;
                let f = s.faithful_match()?;
                let nat = natural_character(&g, &cs);
                Ok((t.irreducibles[f.row("3b")] == nat).to_string())
            },
        },
        // ------------------------------------------------------ decomp ----
        Claim {
            id: "decomp.alt2_8a",
            statement: "the antisymmetric square of 8a",
            expected: "2b+2c+8a+8b+8c",
            run: |s| {
                let h = s.hessian()?;
                let chi = &h.table.irreducibles[h.match_report.row("8a")];
                let alt = chars::alt2(&h.quotient, &h.classes, chi);
                decomposition_string(&h.classes, &h.table, &alt, hessian_labels(s)?)
            },
        },
        Claim {
            id: "decomp.sym2_8a",
            statement: "the symmetric square of 8a",
            expected: "1a+3a+2*8a+8b+8c",
            run: |s| {
                let h = s.hessian()?;
                let chi = &h.table.irreducibles[h.match_report.row("8a")];
                let sym = chars::sym2(&h.quotient, &h.classes, chi);
                decomposition_string(&h.classes, &h.table, &sym, hessian_labels(s)?)
            },
        },
        Claim {
            id: "decomp.sym_plus_alt",
            statement: "symmetric plus antisymmetric square equals the tensor square of 8a",
            expected: "true",
            run: |s| {
                let h = s.hessian()?;
                let chi = &h.table.irreducibles[h.match_report.row("8a")];
                let total = chars::sym2(&h.quotient, &h.classes, chi)
                    .add(&chars::alt2(&h.quotient, &h.classes, chi));
                Ok((total == chi.tensor(chi)).to_string())
            },
        },
        Claim {
            id: "decomp.tensor_2a2a",
            statement: "2a tensor 2a",
            expected: "1a+3a",
            run: |s| {
                let h = s.hessian()?;
                let chi = &h.table.irreducibles[h.match_report.row("2a")];
                decomposition_string(&h.classes, &h.table, &chi.tensor(chi), hessian_labels(s)?)
            },
        },
        Claim {
            id: "decomp.tensor_3b3bbar",
            statement: "3b tensor its conjugate",
            expected: "1a+8a",
            run: |s| {
                let t = s.g648_table()?;
                let cs = s.g648_classes()?;
                let f = s.faithful_match()?;
                let chi = &t.irreducibles[f.row("3b")];
                let prod = chi.tensor(&t.irreducibles[f.row("3b~")]);
                decomposition_string(&cs, &t, &prod, labels_648(s)?)
            },
        },
        Claim {
            id: "decomp.table4_rows",
            statement: "each faithful row is 3b tensored with the lifted quotient character",
            expected: "3b:1a 3c:1b 3d:1c 9a:3a 6a:2a 6b:2b 6c:2c",
            run: |s| {
                let t = s.g648_table()?;
                let f = s.faithful_match()?;
                let h = s.hessian()?;
                let three_b = &t.irreducibles[f.row("3b")];
                let mut parts = Vec::new();
                for (faithful_label, lift_label) in chars::reference::faithful_tensor_pairing() {
                    let lift = &t.irreducibles[h.lifted_row(lift_label)];
                    let want = &t.irreducibles[f.row(faithful_label)];
                    if three_b.tensor(lift) == *want {
                        parts.push(format!("{faithful_label}:{lift_label}"));
                    } else {
                        parts.push(format!("{faithful_label}:MISMATCH"));
                    }
                }
                Ok(parts.join(" "))
            },
        },
        Claim {
            id: "chars.monomial_3a",
            statement: "the signed permutation representation through the alternating quotient is the lift of 3a",
            expected: "true",
            run: |s| monomial_rep_claim(s),
        },
        Claim {
            id: "chars.induced_contains_8a",
            statement: "a nontrivial linear character of the order-9 normal image induces up to contain 8a",
            expected: "degree 24, contains 8a",
            run: |s| induction_claim(s),
        },
        Claim {
            id: "chars.frobenius_reciprocity",
            statement: "the induction inner product equals the restriction inner product",
            expected: "true",
            run: |s| frobenius_claim(s),
        },
        Claim {
            id: "chars.restriction_splits",
            statement: "the defining character restricted to a binary tetrahedral subgroup is trivial plus 2-dimensional",
            expected: "1+2",
            run: |s| restriction_claim(s),
        },
        // ------------------------------------------------------ normal ----
        Claim {
            id: "normal.count",
            statement: "the order-648 group has exactly 6 normal subgroups",
            expected: "6",
            run: |s| Ok(s.normal_chain_648()?.subgroups.len().to_string()),
        },
        Claim {
            id: "normal.chain",
            statement: "the normal subgroups form a single chain under inclusion",
            expected: "true",
            run: |s| Ok(s.normal_chain_648()?.is_chain.to_string()),
        },
        Claim {
            id: "normal.orders",
            statement: "the chain has orders 1, 3, 27, 54, 216, 648",
            expected: "1, 3, 27, 54, 216, 648",
            run: |s| {
                Ok(s.normal_chain_648()?
                    .orders
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join(", "))
            },
        },
        Claim {
            id: "normal.abelianization",
            statement: "the quotient by the order-216 member is cyclic of order 3",
            expected: "true",
            run: |s| {
                let g = s.g648()?;
                let chain = s.normal_chain_648()?;
                let n216 = chain.subgroups.iter().find(|h| h.order() == 216).unwrap();
                let q = group::quotient(&*g, n216)?;
                let z3 = s.z3()?;
                Ok(group::is_isomorphic(&q, &*z3)?.to_string())
            },
        },
        Claim {
            id: "normal.a4_quotient",
            statement: "the quotient by the order-54 member is the alternating group on four letters",
            expected: "true",
            run: |s| {
                let g = s.g648()?;
                let chain = s.normal_chain_648()?;
                let n54 = chain.subgroups.iter().find(|h| h.order() == 54).unwrap();
                let q = group::quotient(&*g, n54)?;
                let a4 = s.a4()?;
                Ok(group::is_isomorphic(&q, &*a4)?.to_string())
            },
        },
        Claim {
            id: "normal.q8_is_hamiltonian",
            statement: "every subgroup of the quaternion group is normal",
            expected: "1, 2, 4, 4, 4, 8",
            run: |s| {
                let g = s.q8()?;
                let cs = s.q8_classes()?;
                let subs = group::normal_subgroups(&*g, &cs)?;
                Ok(subs
                    .iter()
                    .map(|h| h.order().to_string())
                    .collect::<Vec<_>>()
                    .join(", "))
            },
        },
        Claim {
            id: "normal.g27_center",
            statement: "the center of the order-27 group is the scalar subgroup of order 3",
            expected: "3, scalars",
            run: |s| {
                let g = s.g27()?;
                let z = group::center(&*g);
                let all_scalar = z
                    .elems
                    .iter()
                    .all(|&e| g.matrix(e).as_scalar().is_some());
                Ok(format!(
                    "{}, {}",
                    z.order(),
                    if all_scalar { "scalars" } else { "not scalars" }
                ))
            },
        },
        // ----------------------------------------------------- reflect ----
        Claim {
            id: "reflect.counts",
            statement: "the order-648 group contains 24 reflections in 12 mirrors",
            expected: "24 reflections in 12 mirrors",
            run: |s| {
                let m = s.mirrors_648()?;
                Ok(format!(
                    "{} reflections in {} mirrors",
                    m.reflection_count(),
                    m.mirror_count()
                ))
            },
        },
        Claim {
            id: "reflect.roots",
            statement: "the canonical mirror roots are exactly the cataloged lines",
            expected: "true",
            run: |s| {
                let m = s.mirrors_648()?;
                let mut expected = catalog().cyc_vectors("mirror_lines")?.clone();
                expected.sort();
                Ok((m.roots() == expected).to_string())
            },
        },
        Claim {
            id: "reflect.eigenvalue_pairs",
            statement: "each mirror carries the two reflections with eigenvalues v and w, inverse to each other",
            expected: "true",
            run: |s| {
                let g = s.g648()?;
                let m = s.mirrors_648()?;
                for mirror in &m.mirrors {
                    let mut evs: Vec<CycNum> =
                        mirror.reflections.iter().map(|r| r.eigenvalue.clone()).collect();
                    evs.sort();
                    let mut want = vec![CycNum::v(), CycNum::w()];
                    want.sort();
                    if evs != want {
                        return Ok("false (eigenvalues)".into());
                    }
                    let prod = g.mul_idx(
                        mirror.reflections[0].element,
                        mirror.reflections[1].element,
                    );
                    if prod != 0 {
                        return Ok("false (not inverse)".into());
                    }
                }
                Ok("true".into())
            },
        },
        Claim {
            id: "reflect.rebuild",
            statement: "rebuilding all 24 reflections from their roots and eigenvalues reproduces the scanned elements",
            expected: "true",
            run: |s| {
                let g = s.g648()?;
                let m = s.mirrors_648()?;
                for mirror in &m.mirrors {
                    for r in &mirror.reflections {
                        let built =
                            reflection::build_complex_reflection(&mirror.root, &r.eigenvalue)?;
                        if g.index_of(&built) != Some(r.element) {
                            return Ok("false".into());
                        }
                    }
                }
                Ok("true".into())
            },
        },
        Claim {
            id: "reflect.real_lines",
            statement: "realifying the 12 mirrors over the basis {1, v} gives 36 real root lines",
            expected: "36",
            run: |s| Ok(s.e6()?.realified.root_lines.len().to_string()),
        },
        Claim {
            id: "reflect.weyl_order",
            statement: "the 36 realified reflections generate a group of order 51840",
            expected: "51840",
            run: |s| Ok(s.e6()?.group_order.to_string()),
        },
        // -------------------------------------------------------- geom ----
        Claim {
            id: "geom.point_split",
            statement: "the 21 projective points split into 12 nonsingular and 9 singular",
            expected: "12 nonsingular, 9 singular",
            run: |_| {
                let (non, sing) = geometry::classify_points();
                Ok(format!("{} nonsingular, {} singular", non.len(), sing.len()))
            },
        },
        Claim {
            id: "geom.point_arrays",
            statement: "the computed point split matches the cataloged arrays",
            expected: "true",
            run: |_| {
                let cat = catalog();
                let (non, sing) = geometry::classify_points();
                let to_set = |pts: &[ProjPoint]| -> BTreeSet<String> {
                    pts.iter().map(|p| p.label()).collect()
                };
                let cat_set = |name: &str| -> Result<BTreeSet<String>> {
                    Ok(cat
                        .points(name)?
                        .iter()
                        .flatten()
                        .map(|l| Ok(ProjPoint::parse(l)?.label()))
                        .collect::<Result<_>>()?)
                };
                Ok((to_set(&non) == cat_set("f4_points_nonsingular")?
                    && to_set(&sing) == cat_set("f4_points_singular")?)
                    .to_string())
            },
        },
        Claim {
            id: "geom.line_profiles",
            statement: "nonsingular perpendicular lines have profile (2,3), singular ones (1,4), with self-incidence exactly at singular points",
            expected: "true",
            run: |_| {
                let r = geometry::line_profile();
                Ok((r.nonsingular_profiles_ok && r.singular_profiles_ok && r.self_incidence_ok)
                    .to_string())
            },
        },
        Claim {
            id: "geom.mirror_reduction",
            statement: "the 12 mirror roots reduce mod 2 onto exactly the 12 nonsingular points",
            expected: "true",
            run: |s| {
                let m = s.mirrors_648()?;
                let reduced: BTreeSet<String> = m
                    .roots()
                    .iter()
                    .map(|r| Ok(geometry::reduce_mod2(r)?.label()))
                    .collect::<Result<_>>()?;
                let (non, _) = geometry::classify_points();
                let nonsingular: BTreeSet<String> = non.iter().map(|p| p.label()).collect();
                Ok((reduced == nonsingular).to_string())
            },
        },
        Claim {
            id: "geom.u3f4_brute",
            statement: "brute force over all 4^9 matrices finds the unitary group of order 648",
            expected: "648",
            run: |_| Ok(geometry::u3f4_brute_force_elements().len().to_string()),
        },
        Claim {
            id: "geom.u3f4_closure",
            statement: "the mod-2 reduction of the 648 generators closes to the same group",
            expected: "648",
            run: |s| Ok(s.u3f4()?.order().to_string()),
        },
        Claim {
            id: "geom.u1f4",
            statement: "the norm-1 scalars form the cyclic group of order 3",
            expected: "3",
            run: |_| Ok(geometry::u1f4_elements().len().to_string()),
        },
        Claim {
            id: "geom.su2f9",
            statement: "the special unitary 2x2 group over the 9-element field has order 24 and is the binary tetrahedral group",
            expected: "24, isomorphic",
            run: |s| {
                let f9 = s.su2f9()?;
                let btg = s.btg()?;
                let iso = group::is_isomorphic(&*f9, &*btg)?;
                Ok(format!(
                    "{}, {}",
                    f9.order(),
                    if iso { "isomorphic" } else { "not isomorphic" }
                ))
            },
        },
        Claim {
            id: "geom.quotient_chain",
            statement: "the quotient chain has orders 648 -> 24 -> 3 with the stated quotients",
            expected: "24 (binary tetrahedral), 3 (cyclic)",
            run: |s| quotient_chain_claim(s),
        },
        Claim {
            id: "geom.orbit_triples",
            statement: "each reduced reflection fixes its own column of nonsingular points and cycles the other three columns",
            expected: "true",
            run: |s| orbit_triples_claim(s),
        },
        // ------------------------------------------------------- dirac ----
        Claim {
            id: "dirac.cl31",
            statement: "the four real generators have Clifford signature (3,1)",
            expected: "(3, 1)",
            run: |_| {
                let gs = clifford::gamma_set(catalog())?;
                Ok(format!("{:?}", clifford::clifford_signature(&gs.i_gamma)?))
            },
        },
        Claim {
            id: "dirac.cl23",
            statement: "the five Dirac generators have Clifford signature (2,3)",
            expected: "(2, 3)",
            run: |_| {
                let gs = clifford::gamma_set(catalog())?;
                let mut five = gs.gamma.to_vec();
                five.push(gs.gamma5.clone());
                Ok(format!("{:?}", clifford::clifford_signature(&five)?))
            },
        },
        Claim {
            id: "dirac.cl24",
            statement: "adjoining the scalar j extends the five generators to signature (2,4)",
            expected: "(2, 4)",
            run: |_| {
                let gs = clifford::gamma_set(catalog())?;
                let mut six = gs.gamma.to_vec();
                six.push(gs.gamma5.clone());
                six.push(Matrix::scalar(4, &QuatNum::j()));
                Ok(format!("{:?}", clifford::clifford_signature(&six)?))
            },
        },
        Claim {
            id: "dirac.cl24_bd",
            statement: "the displayed sixth generator extends the Bjorken-Drell set to signature (2,4)",
            expected: "(2, 4)",
            run: |_| {
                let cat = catalog();
                let gs = clifford::gamma_set(cat)?;
                let mut six = clifford::bjorken_drell_set(cat)?.to_vec();
                six.push(gs.gamma6.clone());
                Ok(format!("{:?}", clifford::clifford_signature(&six)?))
            },
        },
        Claim {
            id: "dirac.e128_extraspecial",
            statement: "the order-128 group is extraspecial with center of order 2 and elementary abelian quotient of rank 6",
            expected: "order 128, extraspecial, center 2, quotient rank 6",
            run: |s| {
                let g = s.e128()?;
                let cs = s.e128_classes()?;
                let r = group::group_report(&*g, &cs);
                Ok(format!(
                    "order {}, {}, center {}, quotient rank {}",
                    r.order,
                    if r.is_extraspecial { "extraspecial" } else { "not extraspecial" },
                    r.center_order,
                    r.central_quotient_rank.map_or("?".into(), |x| x.to_string())
                ))
            },
        },
        Claim {
            id: "dirac.column_triple",
            statement: "the three generator columns are commuting quaternion groups meeting in the center and generating everything",
            expected: "orders [8, 8, 8], commuting, central intersections, joint order 128",
            run: |s| {
                let r = clifford::column_triple_check(catalog(), &*s.e128()?)?;
                Ok(format!(
                    "orders {:?}, {}, {}, joint order {}",
                    r.column_orders,
                    if r.pairwise_commuting { "commuting" } else { "not commuting" },
                    if r.pairwise_intersections_are_center {
                        "central intersections"
                    } else {
                        "bad intersections"
                    },
                    r.joint_order
                ))
            },
        },
        Claim {
            id: "dirac.census_q8",
            statement: "the extraspecial group contains 120 quaternion subgroups",
            expected: "120",
            run: |s| Ok(s.census()?.q8_subgroups.to_string()),
        },
        Claim {
            id: "dirac.census_factorizations",
            statement: "there are 40 factorizations into commuting quaternion triples",
            expected: "40",
            run: |s| Ok(s.census()?.commuting_triple_factorizations.to_string()),
        },
        Claim {
            id: "dirac.census_involutions",
            statement: "nine involutions up to sign commute with the spin quaternion subgroup",
            expected: "9",
            run: |s| Ok(s.census()?.commuting_involutions_up_to_sign.to_string()),
        },
        Claim {
            id: "dirac.census_anticommuting",
            statement: "four of them (up to sign) anticommute with the distinguished one",
            expected: "4",
            run: |s| Ok(s.census()?.anticommuting_partners_of_fixed.to_string()),
        },
        Claim {
            id: "dirac.mixed_images",
            statement: "conjugation by the first Pauli matrix maps the first generator row onto the three displayed images",
            expected: "true, true, true",
            run: |_| {
                let cat = catalog();
                let p = clifford::entrywise_conj(cat.quat_matrix("pauli4q_1")?);
                let mut out = Vec::new();
                for (src, img) in [
                    ("e128_1", "mixed_1"),
                    ("e128_2", "mixed_2"),
                    ("e128_3", "mixed_3"),
                ] {
                    let m = clifford::entrywise_conj(cat.quat_matrix(src)?);
                    let got = clifford::conjugate_action(&p, &m)?;
                    out.push(
                        (got == clifford::entrywise_conj(cat.quat_matrix(img)?)).to_string(),
                    );
                }
                Ok(out.join(", "))
            },
        },
        Claim {
            id: "dirac.gluon_products",
            statement: "the colourless gluon conjugates the spin plane to the displayed matrices",
            expected: "true, true",
            run: |_| {
                let cat = catalog();
                let g = cat.quat_matrix("gm4q_1")?;
                let a = clifford::conjugate_action(g, cat.quat_matrix("g12")?)?
                    == *cat.quat_matrix("g23")?;
                let b = clifford::conjugate_action(g, cat.quat_matrix("g05")?)?
                    == *cat.quat_matrix("gm_energy_image")?;
                Ok(format!("{a}, {b}"))
            },
        },
        Claim {
            id: "dirac.fixed_gellmann",
            statement: "the eight quaternionic Gell-Mann matrices fix a single quaternionic line",
            expected: "0, 1, -1/2+i/2+j/2+k/2, -1/2-i/2-j/2-k/2",
            run: |_| {
                let cat = catalog();
                let mut gms: Vec<Matrix<QuatNum>> = Vec::new();
                for i in 1..=4 {
                    let m = cat.quat_matrix(&format!("gm4q_{i}"))?.clone();
                    gms.push(m.dagger());
                    gms.push(m);
                }
                match clifford::fixed_line(&gms) {
                    Some(line) => Ok(line
                        .iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")),
                    None => Ok("no one-dimensional fixed space".into()),
                }
            },
        },
        Claim {
            id: "dirac.fixed_pauli",
            statement: "the quaternionic Pauli matrices fix the first coordinate line",
            expected: "1, 0, 0, 0",
            run: |_| {
                let cat = catalog();
                let paulis: Vec<Matrix<QuatNum>> = (1..=3)
                    .map(|i| Ok(cat.quat_matrix(&format!("pauli4q_{i}"))?.clone()))
                    .collect::<Result<_>>()?;
                match clifford::fixed_line(&paulis) {
                    Some(line) => Ok(line
                        .iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")),
                    None => Ok("no one-dimensional fixed space".into()),
                }
            },
        },
        Claim {
            id: "dirac.centre_action",
            statement: "the order-3 centre element commutes with the Pauli matrices and cycles generations with spin planes",
            expected: "order 3, commutes, cycles aligned, fixes the Gell-Mann line",
            run: |_| centre_action_claim(),
        },
        Claim {
            id: "dirac.combined_structure",
            statement: "the combined group contains the extraspecial group as a normal subgroup and the 648 image as a subgroup",
            expected: "82944 = 128 * 648, extraspecial normal, 648 image contained",
            run: |s| combined_structure_claim(s),
        },
        Claim {
            id: "dirac.spin_orbit",
            statement: "conjugation by the 648 image moves the spin quaternion subgroup to 12 distinct copies",
            expected: "12",
            run: |s| spin_orbit_claim(s),
        },
        Claim {
            id: "dirac.gm_preserves_columns",
            statement: "the Gell-Mann generators preserve the column factorization and some Pauli generator does not",
            expected: "true",
            run: |s| column_preservation_claim(s),
        },
        Claim {
            id: "dirac.spinor_degree",
            statement: "the spinor character has complex degree 8",
            expected: "8",
            run: |s| Ok(s.spinor()?.character.degree().to_string()),
        },
        Claim {
            id: "dirac.spinor_decomposition",
            statement: "the spinor representation decomposes as 2a plus 3b plus its conjugate",
            expected: "2a+3b+3b~",
            run: |s| {
                let sp = s.spinor()?;
                let cs = s.g648_classes()?;
                let t = s.g648_table()?;
                decomposition_string(&cs, &t, &sp.character, labels_648(s)?)
            },
        },
    ];
    claims.sort_by_key(|c| c.id);
    let mut seen = BTreeSet::new();
    for c in &claims {
        assert!(seen.insert(c.id), "duplicate claim id {}", c.id);
    }
    claims
}

impl Claim {
    pub fn run(&self, store: &GroupStore) -> ClaimOutcome {
        let computed = match (self.run)(store) {
            Ok(v) => v,
            Err(e) => format!("error: {e}"),
        };
        ClaimOutcome {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            expected: self.expected.to_string(),
            computed: computed.clone(),
            pass: computed == self.expected,
        }
    }
}

/// Run the (possibly filtered) claims and collect outcomes ordered by id.
pub fn run_claims(store: &GroupStore, filter: Option<&str>) -> Vec<ClaimOutcome> {
    use rayon::prelude::*;
    let claims: Vec<Claim> = all_claims()
        .into_iter()
        .filter(|c| filter.map_or(true, |f| c.id.starts_with(f)))
        .collect();
    let mut outcomes: Vec<ClaimOutcome> =
        claims.par_iter().map(|c| c.run(store)).collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    outcomes
}

#[derive(Serialize)]
pub struct Report {
    pub claims: Vec<ClaimOutcome>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

pub fn build_report(outcomes: Vec<ClaimOutcome>) -> Report {
    let total = outcomes.len();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    Report {
        total,
        passed,
        failed: total - passed,
        claims: outcomes,
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for o in &report.claims {
        out.push_str(&format!(
            "{} {} | {} | computed: {} | expected: {}\n",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.statement,
            o.computed,
            o.expected
        ));
    }
    out.push_str(&format!(
        "{} claims: {} passed, {} failed\n",
        report.total, report.passed, report.failed
    ));
    out
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

// ---------------------------------------------------------------- helpers --

/// Map from 648-table row index to its reference label.
fn labels_648(s: &GroupStore) -> Result<BTreeMap<usize, String>> {
    let h = s.hessian()?;
    let f = s.faithful_match()?;
    let mut map = BTreeMap::new();
    for (label, &hrow) in h.match_report.labels() {
        map.insert(h.lifted_from[hrow], label.to_string());
    }
    for (label, &row) in &f.labels {
        map.insert(row, label.clone());
    }
    Ok(map)
}

fn hessian_labels(s: &GroupStore) -> Result<BTreeMap<usize, String>> {
    let h = s.hessian()?;
    Ok(h.match_report
        .labels()
        .iter()
        .map(|(l, &r)| (r, l.to_string()))
        .collect())
}

/// Decompose and render as `1a+3a+2*8a`-style sorted label sums.
fn decomposition_string(
    cs: &ClassStructure,
    table: &chars::CharTable,
    chi: &Character,
    labels: BTreeMap<usize, String>,
) -> Result<String> {
    let mults = chars::decompose(cs, table, chi)?;
    let mut parts = Vec::new();
    for (row, &m) in mults.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let label = labels
            .get(&row)
            .cloned()
            .unwrap_or_else(|| format!("row{row}"));
        parts.push((label, m));
    }
    parts.sort();
    Ok(parts
        .iter()
        .map(|(l, m)| {
            if *m == 1 {
                l.clone()
            } else {
                format!("{m}*{l}")
            }
        })
        .collect::<Vec<_>>()
        .join("+"))
}

fn monomial_rep_claim(s: &GroupStore) -> Result<String> {
    let g = s.g648()?;
    let cs = s.g648_classes()?;
    let chain = s.normal_chain_648()?;
    let n54 = chain
        .subgroups
        .iter()
        .find(|h| h.order() == 54)
        .ok_or(crate::error::Error::NotNormal)?;
    let q = group::quotient(&*g, n54)?;
    let qcs = ClassStructure::compute(&q);
    let a4 = s.a4()?;
    let a4cs = ClassStructure::compute(&*a4);
    let phi = group::find_isomorphism(&q, &*a4, &qcs, &a4cs)
        .ok_or_else(|| crate::error::Error::NoMatch("quotient is not alternating".into()))?;
    // image of each generator: the signed permutation matrix of its coset
    let images: Vec<Matrix<CycNum>> = g
        .generator_indices()
        .iter()
        .map(|&gen| {
            let coset = q.coset_of[gen];
            crate::store::rational_to_cyc(a4.matrix(phi[coset]))
        })
        .collect();
    let chi = chars::hom_character(&*g, &cs, &images)?;
    let t = s.g648_table()?;
    let h = s.hessian()?;
    let lift_3a = &t.irreducibles[h.lifted_row("3a")];
    Ok((chi == *lift_3a).to_string())
}

fn induction_claim(s: &GroupStore) -> Result<String> {
    let h = s.hessian()?;
    let g = s.g648()?;
    // the image of the order-27 subgroup in the quotient has order 9
    let g27 = s.g27()?;
    let g27_in_648: Vec<usize> = g27
        .elements()
        .iter()
        .map(|m| g.index_of(m).ok_or(crate::error::Error::ElementNotInAmbient))
        .collect::<Result<_>>()?;
    let mut image: Vec<usize> = g27_in_648.iter().map(|&e| h.quotient.coset_of[e]).collect();
    image.sort_unstable();
    image.dedup();
    let handle = SubgroupHandle::new(image);
    let view = SubgroupView::new(&h.quotient, handle);
    let sub_cs = ClassStructure::compute(&view);
    let linears = chars::abelian_subgroup_characters(&view, &sub_cs)?;
    let nontrivial = linears
        .iter()
        .find(|c| **c != Character::trivial(sub_cs.count()))
        .ok_or_else(|| crate::error::Error::NoMatch("no nontrivial linear character".into()))?;
    let induced = chars::induce(&h.quotient, &h.classes, &view, &sub_cs, nontrivial);
    let mult_8a = chars::inner_product_nat(
        &h.classes,
        &induced,
        &h.table.irreducibles[h.match_report.row("8a")],
    )?;
    Ok(format!(
        "degree {}, {}",
        induced.degree(),
        if mult_8a >= 1 { "contains 8a" } else { "does not contain 8a" }
    ))
}

fn frobenius_claim(s: &GroupStore) -> Result<String> {
    let h = s.hessian()?;
    let g = s.g648()?;
    let g27 = s.g27()?;
    let g27_in_648: Vec<usize> = g27
        .elements()
        .iter()
        .map(|m| g.index_of(m).ok_or(crate::error::Error::ElementNotInAmbient))
        .collect::<Result<_>>()?;
    let mut image: Vec<usize> = g27_in_648.iter().map(|&e| h.quotient.coset_of[e]).collect();
    image.sort_unstable();
    image.dedup();
    let view = SubgroupView::new(&h.quotient, SubgroupHandle::new(image));
    let sub_cs = ClassStructure::compute(&view);
    let linears = chars::abelian_subgroup_characters(&view, &sub_cs)?;
    // both sides of the reciprocity pairing, for every linear character
    // against both 8a and 2a
    for chi in &linears {
        let induced = chars::induce(&h.quotient, &h.classes, &view, &sub_cs, chi);
        for label in ["8a", "2a", "3a"] {
            let psi = &h.table.irreducibles[h.match_report.row(label)];
            let lhs = chars::inner_product(&h.classes, &induced, psi);
            let restricted = chars::restrict(&h.classes, &view, &sub_cs, psi);
            let rhs = chars::inner_product(&sub_cs, chi, &restricted);
            if lhs != rhs {
                return Ok(format!("false ({label})"));
            }
        }
    }
    Ok("true".into())
}

fn restriction_claim(s: &GroupStore) -> Result<String> {
    let g = s.g648()?;
    let cs = s.g648_classes()?;
    let cat = catalog();
    let p1 = g
        .index_of(cat.cyc_matrix("tp1")?)
        .ok_or(crate::error::Error::ElementNotInAmbient)?;
    let p2 = g
        .index_of(cat.cyc_matrix("tp2")?)
        .ok_or(crate::error::Error::ElementNotInAmbient)?;
    // find an order-3 element conjugating the first quaternionic generator
    // to the second, extending the quaternion image to a binary tetrahedral
    // copy
    let mut chosen = None;
    for z in 1..g.order() {
        if g.element_order(z) != 3 {
            continue;
        }
        if g.mul_idx(g.mul_idx(g.inv_idx(z), p1), z) != p2 {
            continue;
        }
        let handle = group::subgroup_closure(&*g, &[p1, p2, z]);
        if handle.order() == 24 {
            chosen = Some(handle);
            break;
        }
    }
    let handle = chosen.ok_or_else(|| {
        crate::error::Error::NoMatch("no binary tetrahedral extension found".into())
    })?;
    let view = SubgroupView::new(&*g, handle);
    let sub_cs = ClassStructure::compute(&view);
    let nat = natural_character(&g, &cs);
    let restricted = chars::restrict(&cs, &view, &sub_cs, &nat);
    // degree is preserved
    if restricted.degree() != nat.degree() {
        return Ok("degree mismatch".into());
    }
    // build the subgroup's own table, seeded by its natural (restricted)
    // character
    let table = crate::store::subgroup_table(&*g, &view, &sub_cs, &restricted)?;
    let mults = chars::decompose(&sub_cs, &table, &restricted)?;
    let mut parts = Vec::new();
    for (row, &m) in mults.iter().enumerate() {
        for _ in 0..m {
            parts.push(
                table.irreducibles[row]
                    .degree()
                    .to_string(),
            );
        }
    }
    parts.sort();
    // the trivial character must be one of the constituents
    let trivial_included = mults
        .iter()
        .enumerate()
        .any(|(row, &m)| m == 1 && table.irreducibles[row] == Character::trivial(sub_cs.count()));
    if !trivial_included {
        return Ok("missing trivial constituent".into());
    }
    Ok(parts.join("+"))
}

fn quotient_chain_claim(s: &GroupStore) -> Result<String> {
    let g = s.g648()?;
    let g27 = s.g27()?;
    let g27_in_648: Vec<usize> = g27
        .elements()
        .iter()
        .map(|m| g.index_of(m).ok_or(crate::error::Error::ElementNotInAmbient))
        .collect::<Result<_>>()?;
    let q1 = group::quotient(&*g, &SubgroupHandle::new(g27_in_648))?;
    let btg = s.btg()?;
    let first = group::is_isomorphic(&q1, &*btg)?;
    // the quaternion image is the unique normal subgroup of order 8
    let q1cs = ClassStructure::compute(&q1);
    let normals = group::normal_subgroups(&q1, &q1cs)?;
    let n8 = normals
        .iter()
        .find(|h| h.order() == 8)
        .ok_or(crate::error::Error::NotNormal)?;
    let q2 = group::quotient(&q1, n8)?;
    let z3 = s.z3()?;
    let second = group::is_isomorphic(&q2, &*z3)?;
    Ok(format!(
        "{} ({}), {} ({})",
        q1.order(),
        if first { "binary tetrahedral" } else { "unexpected" },
        q2.order(),
        if second { "cyclic" } else { "unexpected" }
    ))
}

fn orbit_triples_claim(s: &GroupStore) -> Result<String> {
    let g = s.g648()?;
    let m = s.mirrors_648()?;
    let cat = catalog();
    let triples: Vec<BTreeSet<String>> = cat
        .points("f4_points_nonsingular")?
        .iter()
        .map(|row| {
            row.iter()
                .map(|l| Ok(ProjPoint::parse(l)?.label()))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    for mirror in &m.mirrors {
        let own = geometry::reduce_mod2(&mirror.root)?.label();
        let own_triple = triples
            .iter()
            .position(|t| t.contains(&own))
            .ok_or_else(|| crate::error::Error::NoMatch("mirror outside the triples".into()))?;
        for r in &mirror.reflections {
            let red = geometry::reduce_matrix_mod2(g.matrix(r.element))?;
            // fixes its own column pointwise
            for label in &triples[own_triple] {
                let p = ProjPoint::parse(label)?;
                if geometry::point_image(&red, &p) != p {
                    return Ok(format!("false (own column moved by {own})"));
                }
            }
            // the other three columns are cycled as blocks
            let mut perm = Vec::new();
            for (ti, t) in triples.iter().enumerate() {
                if ti == own_triple {
                    continue;
                }
                let image: BTreeSet<String> = t
                    .iter()
                    .map(|l| Ok(geometry::point_image(&red, &ProjPoint::parse(l)?).label()))
                    .collect::<Result<_>>()?;
                let target = triples.iter().position(|t2| *t2 == image);
                match target {
                    Some(tj) if tj != own_triple => perm.push((ti, tj)),
                    _ => return Ok("false (blocks not preserved)".into()),
                }
            }
            if perm.iter().any(|(a, b)| a == b) {
                return Ok("false (expected a 3-cycle on the other columns)".into());
            }
        }
    }
    Ok("true".into())
}

fn centre_action_claim() -> Result<String> {
    let cat = catalog();
    let c = cat.quat_matrix("centre4q")?;
    let order = c.multiplicative_order(10)?;
    let commutes = (1..=3).all(|i| {
        let p = cat.quat_matrix(&format!("pauli4q_{i}")).unwrap();
        c.mul_unchecked(p) == p.mul_unchecked(c)
    });
    let scalars = [
        Matrix::scalar(4, &QuatNum::i()),
        Matrix::scalar(4, &QuatNum::j()),
        Matrix::scalar(4, &QuatNum::k()),
    ];
    let scalar_cycle: Vec<usize> = scalars
        .iter()
        .map(|m| {
            let img = clifford::conjugate_action(c, m).unwrap();
            scalars.iter().position(|x| *x == img).unwrap_or(99)
        })
        .collect();
    let gs = clifford::gamma_set(cat)?;
    let g31 = gs.gamma[3].mul_unchecked(&gs.gamma[1]);
    let planes = [
        cat.quat_matrix("g23")?.clone(),
        g31,
        cat.quat_matrix("g12")?.clone(),
    ];
    let plane_cycle: Vec<usize> = planes
        .iter()
        .map(|p| {
            let img = clifford::conjugate_action(c, p).unwrap();
            planes
                .iter()
                .position(|x| *x == img || x.neg() == img)
                .unwrap_or(99)
        })
        .collect();
    let aligned = scalar_cycle == vec![1, 2, 0] && plane_cycle == vec![1, 2, 0];
    let fixes = clifford::fixed_line(&[c.clone()])
        .map(|line| {
            line == crate::matrix::canonical_line(&cat.quat_vectors("gm_fixed").unwrap()[0])
        })
        .unwrap_or(false);
    Ok(format!(
        "order {}, {}, {}, {}",
        order,
        if commutes { "commutes" } else { "does not commute" },
        if aligned { "cycles aligned" } else { "cycles not aligned" },
        if fixes { "fixes the Gell-Mann line" } else { "moves the Gell-Mann line" }
    ))
}

fn combined_structure_claim(s: &GroupStore) -> Result<String> {
    let big = s.combined()?;
    let cat = catalog();
    let e128_gens: Vec<usize> = (1..=6)
        .map(|i| {
            big.index_of(cat.quat_matrix(&format!("e128_{i}"))?)
                .ok_or(crate::error::Error::ElementNotInAmbient)
        })
        .collect::<Result<_>>()?;
    let e128_handle = group::subgroup_closure(&*big, &e128_gens);
    let normal = group::is_normal(&*big, &e128_handle);
    let g648q_gens: Vec<usize> = ["gm4q_1", "pauli4q_1", "ext4q_1"]
        .iter()
        .map(|n| {
            big.index_of(cat.quat_matrix(n)?)
                .ok_or(crate::error::Error::ElementNotInAmbient)
        })
        .collect::<Result<_>>()?;
    let image = group::subgroup_closure(&*big, &g648q_gens);
    Ok(format!(
        "{} = {} * {}, {}, {}",
        big.order(),
        e128_handle.order(),
        big.order() / e128_handle.order(),
        if normal && e128_handle.order() == 128 {
            "extraspecial normal"
        } else {
            "unexpected extraspecial image"
        },
        if image.order() == 648 {
            "648 image contained"
        } else {
            "unexpected 648 image"
        }
    ))
}

fn spin_orbit_claim(s: &GroupStore) -> Result<String> {
    let big = s.combined()?;
    let cat = catalog();
    let spin_gens: Vec<usize> = ["g12", "g23"]
        .iter()
        .map(|n| {
            big.index_of(cat.quat_matrix(n)?)
                .ok_or(crate::error::Error::ElementNotInAmbient)
        })
        .collect::<Result<_>>()?;
    let spin = group::subgroup_closure(&*big, &spin_gens);
    if spin.order() != 8 {
        return Ok(format!("spin subgroup order {}", spin.order()));
    }
    let g648q_gens: Vec<usize> = ["gm4q_1", "pauli4q_1", "ext4q_1"]
        .iter()
        .map(|n| {
            big.index_of(cat.quat_matrix(n)?)
                .ok_or(crate::error::Error::ElementNotInAmbient)
        })
        .collect::<Result<_>>()?;
    let image = group::subgroup_closure(&*big, &g648q_gens);
    let count = group::conjugation_orbit_count(&*big, &image.elems, &spin.elems)?;
    Ok(count.to_string())
}

fn column_preservation_claim(s: &GroupStore) -> Result<String> {
    let e128 = s.e128()?;
    let big = s.combined()?;
    let cat = catalog();
    let col = |a: &str, b: &str| -> Result<Vec<Matrix<QuatNum>>> {
        let idx = e128.locate(&[cat.quat_matrix(a)?.clone(), cat.quat_matrix(b)?.clone()])?;
        let h = group::subgroup_closure(&*e128, &idx);
        Ok(h.elems.iter().map(|&e| e128.matrix(e).clone()).collect())
    };
    let columns = [
        col("e128_1", "e128_4")?,
        col("e128_2", "e128_5")?,
        col("e128_3", "e128_6")?,
    ];
    let _ = &big;
    let preserves = |g: &Matrix<QuatNum>, c: &[Matrix<QuatNum>]| -> Result<bool> {
        let image: BTreeSet<String> = c
            .iter()
            .map(|m| Ok(clifford::conjugate_action(g, m)?.key()))
            .collect::<Result<_>>()?;
        let original: BTreeSet<String> = c.iter().map(|m| m.key()).collect();
        Ok(image == original)
    };
    // every Gell-Mann generator (and dagger) stabilizes each column setwise
    for i in 1..=4 {
        let m = cat.quat_matrix(&format!("gm4q_{i}"))?;
        for c in &columns {
            if !preserves(m, c)? || !preserves(&m.dagger(), c)? {
                return Ok(format!("false (gm4q_{i} moves a column)"));
            }
        }
    }
    // some Pauli generator moves some column
    let mut pauli_moves = false;
    for i in 1..=3 {
        let m = cat.quat_matrix(&format!("pauli4q_{i}"))?;
        for c in &columns {
            if !preserves(m, c)? {
                pauli_moves = true;
            }
        }
    }
    Ok(pauli_moves.to_string())
}
