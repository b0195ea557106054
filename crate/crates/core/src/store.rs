//! Lazily-built shared registry of catalog groups and derived data, with an
//! optional on-disk cache for the groups themselves. Every accessor is
//! memoized; errors are memoized too, so a failing construction reports the
//! same way every time.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::cache;
use crate::catalog::{catalog, Catalog};
use crate::chars::{
    self, build_char_table, natural_character, reference, table_match, CharTable, Character,
    MatchReport,
};
use crate::clifford;
use crate::error::{Error, Result};
use crate::geometry;
use crate::group::{
    self, find_isomorphism, AbstractGroup, ClassStructure, FinMatGroup, QuotientGroup,
    SubgroupHandle,
};
use crate::matrix::Matrix;
use crate::reflection::{self, MirrorSet, RealifiedMirrors};
use crate::scalar::{CycNum, FieldScalar, QuatNum, Rational, Scalar, F4, F9};

struct Cell<T>(OnceLock<Result<Arc<T>, String>>);

impl<T> Cell<T> {
    fn new() -> Self {
        Cell(OnceLock::new())
    }

    fn get(&self, build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
        self.0
            .get_or_init(|| build().map(Arc::new).map_err(|e| e.to_string()))
            .clone()
            .map_err(Error::Parse)
    }
}

/// Classes plus the (order, total-chain) normal-subgroup data of a group.
pub struct NormalChain {
    pub subgroups: Vec<SubgroupHandle>,
    pub orders: Vec<usize>,
    pub is_chain: bool,
}

/// The Hessian group of order 216 as the central quotient of the 648 group,
/// with its character table descended from the scalar-kernel rows.
pub struct HessianData {
    pub quotient: QuotientGroup,
    pub classes: ClassStructure,
    pub table: CharTable,
    /// hessian table row -> row index in the 648 table it descended from
    pub lifted_from: Vec<usize>,
    pub match_report: MatchReport,
}

impl HessianData {
    /// 648-table row index lifted from the labeled Hessian row.
    pub fn lifted_row(&self, label: &str) -> usize {
        self.lifted_from[self.match_report.row(label)]
    }
}

/// Labels for the 14 faithful rows of the 648 table ("3b" … plus "~"
/// conjugates), produced by expanding the grouped reference rows.
pub struct FaithfulMatch {
    pub labels: BTreeMap<String, usize>,
    pub twisted: bool,
}

impl FaithfulMatch {
    pub fn row(&self, label: &str) -> usize {
        *self
            .labels
            .get(label)
            .unwrap_or_else(|| panic!("no faithful row labeled `{label}`"))
    }
}

pub struct SpinorData {
    pub character: Character,
    pub multiplicities: Vec<usize>,
}

pub struct E6Data {
    pub mirrors: MirrorSet,
    pub realified: RealifiedMirrors,
    pub group_order: usize,
}

pub struct GroupStore {
    cache_dir: Option<PathBuf>,
    q8: Cell<FinMatGroup<CycNum>>,
    btg: Cell<FinMatGroup<CycNum>>,
    g27: Cell<FinMatGroup<CycNum>>,
    g216: Cell<FinMatGroup<CycNum>>,
    g648: Cell<FinMatGroup<CycNum>>,
    e128: Cell<FinMatGroup<QuatNum>>,
    g27_4q: Cell<FinMatGroup<QuatNum>>,
    q8_4q: Cell<FinMatGroup<QuatNum>>,
    g648q: Cell<FinMatGroup<QuatNum>>,
    combined: Cell<FinMatGroup<QuatNum>>,
    a4: Cell<FinMatGroup<Rational>>,
    z3: Cell<FinMatGroup<CycNum>>,
    u3f4: Cell<FinMatGroup<F4>>,
    su2f9: Cell<FinMatGroup<F9>>,
    classes: ClassCells,
    btg_table: Cell<(CharTable, MatchReport)>,
    g648_table: Cell<CharTable>,
    hessian: Cell<HessianData>,
    faithful: Cell<FaithfulMatch>,
    normal_chain_648: Cell<NormalChain>,
    mirrors_648: Cell<MirrorSet>,
    e6: Cell<E6Data>,
    census: Cell<clifford::E128Census>,
    spinor: Cell<SpinorData>,
    iso_648q: Cell<Vec<usize>>,
}

struct ClassCells {
    q8: Cell<ClassStructure>,
    btg: Cell<ClassStructure>,
    g27: Cell<ClassStructure>,
    g216: Cell<ClassStructure>,
    g648: Cell<ClassStructure>,
    e128: Cell<ClassStructure>,
    g648q: Cell<ClassStructure>,
}

impl GroupStore {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        GroupStore {
            cache_dir,
            q8: Cell::new(),
            btg: Cell::new(),
            g27: Cell::new(),
            g216: Cell::new(),
            g648: Cell::new(),
            e128: Cell::new(),
            g27_4q: Cell::new(),
            q8_4q: Cell::new(),
            g648q: Cell::new(),
            combined: Cell::new(),
            a4: Cell::new(),
            z3: Cell::new(),
            u3f4: Cell::new(),
            su2f9: Cell::new(),
            classes: ClassCells {
                q8: Cell::new(),
                btg: Cell::new(),
                g27: Cell::new(),
                g216: Cell::new(),
                g648: Cell::new(),
                e128: Cell::new(),
                g648q: Cell::new(),
            },
            btg_table: Cell::new(),
            g648_table: Cell::new(),
            hessian: Cell::new(),
            faithful: Cell::new(),
            normal_chain_648: Cell::new(),
            mirrors_648: Cell::new(),
            e6: Cell::new(),
            census: Cell::new(),
            spinor: Cell::new(),
            iso_648q: Cell::new(),
        }
    }

    pub fn catalog(&self) -> &'static Catalog {
        catalog()
    }

    /// Default closure cap per scalar domain.
    pub fn default_max_order<S: Scalar>() -> usize {
        match S::DOMAIN {
            crate::scalar::Domain::Quaternion => 100_000,
            crate::scalar::Domain::Rational => 60_000,
            _ => 1_000,
        }
    }

    fn build_group<S: Scalar>(
        &self,
        name: &str,
        gens: Vec<(String, Matrix<S>)>,
        max_order: usize,
    ) -> Result<FinMatGroup<S>> {
        if let Some(dir) = &self.cache_dir {
            let fp = cache::generator_fingerprint(&gens, max_order);
            if let Some(g) = cache::load_group::<S>(dir, name, &fp)? {
                return Ok(g);
            }
            let g = FinMatGroup::closure(name, gens, max_order)?;
            cache::save_group(dir, &g, &fp)?;
            Ok(g)
        } else {
            FinMatGroup::closure(name, gens, max_order)
        }
    }

    fn catalog_cyc_group(&self, name: &str) -> Result<FinMatGroup<CycNum>> {
        let cat = catalog();
        let spec = cat.group_spec(name)?;
        let g = self.build_group(name, cat.cyc_generators(spec)?, Self::default_max_order::<CycNum>())?;
        if let Some(expect) = spec.expected_order {
            if g.order() != expect {
                return Err(Error::Parse(format!(
                    "{name}: closure order {} does not match the expected {expect}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }

    fn catalog_quat_group(&self, name: &str) -> Result<FinMatGroup<QuatNum>> {
        let cat = catalog();
        let spec = cat.group_spec(name)?;
        let g = self.build_group(name, cat.quat_generators(spec)?, Self::default_max_order::<QuatNum>())?;
        if let Some(expect) = spec.expected_order {
            if g.order() != expect {
                return Err(Error::Parse(format!(
                    "{name}: closure order {} does not match the expected {expect}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }

    pub fn q8(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.q8.get(|| self.catalog_cyc_group("q8"))
    }

    pub fn btg(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.btg.get(|| self.catalog_cyc_group("btg"))
    }

    pub fn g27(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.g27.get(|| self.catalog_cyc_group("g27"))
    }

    pub fn g216(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.g216.get(|| self.catalog_cyc_group("g216"))
    }

    pub fn g648(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.g648.get(|| {
            let g = self.catalog_cyc_group("g648")?;
            g.ensure_mult_table();
            Ok(g)
        })
    }

    pub fn e128(&self) -> Result<Arc<FinMatGroup<QuatNum>>> {
        self.e128.get(|| {
            let g = self.catalog_quat_group("e128")?;
            g.ensure_mult_table();
            Ok(g)
        })
    }

    pub fn g27_4q(&self) -> Result<Arc<FinMatGroup<QuatNum>>> {
        self.g27_4q.get(|| self.catalog_quat_group("g27_4q"))
    }

    pub fn q8_4q(&self) -> Result<Arc<FinMatGroup<QuatNum>>> {
        self.q8_4q.get(|| self.catalog_quat_group("q8_4q"))
    }

    pub fn g648q(&self) -> Result<Arc<FinMatGroup<QuatNum>>> {
        self.g648q.get(|| {
            let g = self.catalog_quat_group("g648q")?;
            g.ensure_mult_table();
            Ok(g)
        })
    }

    pub fn combined(&self) -> Result<Arc<FinMatGroup<QuatNum>>> {
        self.combined.get(|| self.catalog_quat_group("combined82944"))
    }

    /// The alternating group on four letters as its 3-dimensional rotation
    /// representation: signed even permutation matrices.
    pub fn a4(&self) -> Result<Arc<FinMatGroup<Rational>>> {
        self.a4.get(|| {
            let cycle = Matrix::from_rows(vec![
                vec![Rational::int(0), Rational::int(1), Rational::int(0)],
                vec![Rational::int(0), Rational::int(0), Rational::int(1)],
                vec![Rational::int(1), Rational::int(0), Rational::int(0)],
            ]);
            let flip = Matrix::from_rows(vec![
                vec![Rational::int(1), Rational::int(0), Rational::int(0)],
                vec![Rational::int(0), Rational::int(-1), Rational::int(0)],
                vec![Rational::int(0), Rational::int(0), Rational::int(-1)],
            ]);
            let g = FinMatGroup::closure(
                "a4",
                vec![("c".into(), cycle), ("d".into(), flip)],
                24,
            )?;
            if g.order() != 12 {
                return Err(Error::Parse("a4 construction has the wrong order".into()));
            }
            Ok(g)
        })
    }

    /// Cyclic group of order 3 as 1×1 matrices.
    pub fn z3(&self) -> Result<Arc<FinMatGroup<CycNum>>> {
        self.z3.get(|| {
            FinMatGroup::closure(
                "z3",
                vec![("v".into(), Matrix::from_rows(vec![vec![CycNum::v()]]))],
                3,
            )
        })
    }

    /// U(3, F4) built by closing the mod-2 reduction of the 648 generators.
    pub fn u3f4(&self) -> Result<Arc<FinMatGroup<F4>>> {
        self.u3f4.get(|| {
            let cat = catalog();
            let spec = cat.group_spec("g648")?;
            let gens = cat
                .cyc_generators(spec)?
                .into_iter()
                .map(|(n, m)| Ok((n, geometry::reduce_matrix_mod2(&m)?)))
                .collect::<Result<Vec<_>>>()?;
            FinMatGroup::closure("u3f4", gens, 1_000)
        })
    }

    pub fn su2f9(&self) -> Result<Arc<FinMatGroup<F9>>> {
        self.su2f9.get(geometry::su2f9_group)
    }

    pub fn q8_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.q8()?;
        self.classes.q8.get(|| Ok(ClassStructure::compute(&*g)))
    }

    pub fn btg_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.btg()?;
        self.classes.btg.get(|| {
            g.ensure_mult_table();
            Ok(ClassStructure::compute(&*g))
        })
    }

    pub fn g27_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.g27()?;
        self.classes.g27.get(|| Ok(ClassStructure::compute(&*g)))
    }

    pub fn g216_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.g216()?;
        self.classes.g216.get(|| {
            g.ensure_mult_table();
            Ok(ClassStructure::compute(&*g))
        })
    }

    pub fn g648_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.g648()?;
        self.classes.g648.get(|| Ok(ClassStructure::compute(&*g)))
    }

    pub fn e128_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.e128()?;
        self.classes.e128.get(|| Ok(ClassStructure::compute(&*g)))
    }

    pub fn g648q_classes(&self) -> Result<Arc<ClassStructure>> {
        let g = self.g648q()?;
        self.classes.g648q.get(|| Ok(ClassStructure::compute(&*g)))
    }

    /// The binary tetrahedral character table, matched against its reference.
    pub fn btg_table(&self) -> Result<Arc<(CharTable, MatchReport)>> {
        self.btg_table.get(|| {
            let g = self.btg()?;
            let cs = self.btg_classes()?;
            let nat = natural_character(&g, &cs);
            let derived = group::derived_subgroup(&*g);
            let mut seeds = vec![nat.clone(), nat.conj()];
            seeds.extend(chars::abelian_quotient_lifts(&*g, &cs, &derived)?);
            let table = build_char_table(&*g, &cs, &seeds)?;
            let report = table_match(&cs, &table, &reference::btg_table())?;
            Ok((table, report))
        })
    }

    /// The full 24-row table of the order-648 group.
    pub fn g648_table(&self) -> Result<Arc<CharTable>> {
        self.g648_table.get(|| {
            let g = self.g648()?;
            let cs = self.g648_classes()?;
            let nat = natural_character(&g, &cs);
            let derived = group::derived_subgroup(&*g);
            let mut seeds = vec![nat.clone(), nat.conj()];
            seeds.extend(chars::abelian_quotient_lifts(&*g, &cs, &derived)?);
            build_char_table(&*g, &cs, &seeds)
        })
    }

    /// The scalar center {I, vI, wI} of the 648 group.
    pub fn scalar_center_648(&self) -> Result<SubgroupHandle> {
        let g = self.g648()?;
        let v = g
            .index_of(&Matrix::scalar(3, &CycNum::v()))
            .ok_or(Error::ElementNotInAmbient)?;
        let w = g
            .index_of(&Matrix::scalar(3, &CycNum::w()))
            .ok_or(Error::ElementNotInAmbient)?;
        Ok(SubgroupHandle::new(vec![0, v, w]))
    }

    pub fn hessian(&self) -> Result<Arc<HessianData>> {
        self.hessian.get(|| {
            let g = self.g648()?;
            let cs = self.g648_classes()?;
            let table = self.g648_table()?;
            let center = self.scalar_center_648()?;
            let quotient = group::quotient(&*g, &center)?;
            let classes = ClassStructure::compute(&quotient);
            let v_idx = center.elems[1];
            let v_class = cs.class_of[v_idx];
            let mut rows = Vec::new();
            for (ri, chi) in table.irreducibles.iter().enumerate() {
                if chi.values[v_class] == chi.values[0] {
                    let values: Vec<CycNum> = classes
                        .classes
                        .iter()
                        .map(|c| chi.values[cs.class_of[quotient.reps[c.rep]]].clone())
                        .collect();
                    rows.push((ri, Character::new(values)));
                }
            }
            rows.sort_by(|a, b| {
                (a.1.degree().clone(), &a.1.values).cmp(&(b.1.degree().clone(), &b.1.values))
            });
            let lifted_from: Vec<usize> = rows.iter().map(|(ri, _)| *ri).collect();
            let table216 = CharTable {
                irreducibles: rows.into_iter().map(|(_, c)| c).collect(),
            };
            let match_report = table_match(&classes, &table216, &reference::hessian_table())?;
            Ok(HessianData {
                quotient,
                classes,
                table: table216,
                lifted_from,
                match_report,
            })
        })
    }

    /// σ_s on 648 classes: class of (sI)·g for s the order-3 scalar.
    fn scalar_class_maps(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let g = self.g648()?;
        let cs = self.g648_classes()?;
        let center = self.scalar_center_648()?;
        let (zv, zw) = (center.elems[1], center.elems[2]);
        let map = |z: usize| -> Vec<usize> {
            cs.classes
                .iter()
                .map(|c| cs.class_of[g.mul_idx(z, c.rep)])
                .collect()
        };
        Ok((map(zv), map(zw)))
    }

    /// Expand the grouped faithful reference rows against the computed class
    /// structure and match them exactly onto the 14 faithful table rows.
    pub fn faithful_match(&self) -> Result<Arc<FaithfulMatch>> {
        self.faithful.get(|| {
            let g = self.g648()?;
            let cs = self.g648_classes()?;
            let table = self.g648_table()?;
            let hess = self.hessian()?;
            let nat = natural_character(&g, &cs);
            let (sv, sw) = self.scalar_class_maps()?;
            // 648 class -> position of its image among the reference columns
            let ref_col_of_class: Vec<usize> = (0..cs.count())
                .map(|c| {
                    let h = hess.classes.class_of
                        [hess.quotient.coset_of[cs.classes[c].rep]];
                    hess.match_report
                        .class_of_ref_col
                        .iter()
                        .position(|&hc| hc == h)
                        .expect("hessian match covers all classes")
                })
                .collect();
            let hess_twist = hess.match_report.twisted;
            let twists = if hess_twist { [true, false] } else { [false, true] };
            'twist: for twisted in twists {
                let tw = |x: &CycNum| if twisted { x.vw_twist() } else { x.clone() };
                // anchor the per-column base class with the natural character
                let rows_lit = reference::faithful_rows_648();
                let base_vals: Vec<CycNum> = rows_lit[0]
                    .1
                    .iter()
                    .map(|s| tw(&CycNum::parse(s).expect("reference literal")))
                    .collect();
                let mut base_class = vec![usize::MAX; 10];
                for col in 0..10 {
                    let members: Vec<usize> = (0..cs.count())
                        .filter(|&c| ref_col_of_class[c] == col)
                        .collect();
                    let want = &base_vals[col];
                    if want.is_zero() {
                        if members.len() != 1 {
                            continue 'twist;
                        }
                        base_class[col] = members[0];
                    } else {
                        match members.iter().find(|&&c| nat.values[c] == *want) {
                            Some(&c) => base_class[col] = c,
                            None => continue 'twist,
                        }
                    }
                }
                // expand all 14 rows: ω(v) = v for the literal rows, w for
                // conjugates
                let mut expanded: Vec<(String, Vec<CycNum>)> = Vec::new();
                for (label, vals) in &rows_lit {
                    let vals: Vec<CycNum> = vals
                        .iter()
                        .map(|s| tw(&CycNum::parse(s).expect("reference literal")))
                        .collect();
                    let mut row = vec![CycNum::zero(); cs.count()];
                    let mut conj_row = vec![CycNum::zero(); cs.count()];
                    for col in 0..10 {
                        let b = base_class[col];
                        let x = &vals[col];
                        row[b] = x.clone();
                        conj_row[b] = x.conj();
                        if !x.is_zero() {
                            row[sv[b]] = CycNum::v().mul_ref(x);
                            row[sw[b]] = CycNum::w().mul_ref(x);
                            conj_row[sv[b]] = CycNum::w().mul_ref(&x.conj());
                            conj_row[sw[b]] = CycNum::v().mul_ref(&x.conj());
                        }
                    }
                    expanded.push((label.to_string(), row));
                    expanded.push((format!("{label}~"), conj_row));
                }
                // faithful computed rows: scalar center not in the kernel
                let v_class = cs.class_of[self.scalar_center_648()?.elems[1]];
                let faithful_rows: Vec<usize> = (0..table.irreducibles.len())
                    .filter(|&ri| {
                        let chi = &table.irreducibles[ri];
                        chi.values[v_class] != chi.values[0]
                    })
                    .collect();
                if faithful_rows.len() != expanded.len() {
                    continue 'twist;
                }
                let mut computed: Vec<(&Vec<CycNum>, usize)> = faithful_rows
                    .iter()
                    .map(|&ri| (&table.irreducibles[ri].values, ri))
                    .collect();
                let mut wanted: Vec<(Vec<CycNum>, String)> = expanded
                    .into_iter()
                    .map(|(l, v)| (v, l))
                    .collect();
                computed.sort();
                wanted.sort();
                let mut labels = BTreeMap::new();
                let mut ok = true;
                for ((cv, ri), (wv, label)) in computed.iter().zip(&wanted) {
                    if *cv != wv {
                        ok = false;
                        break;
                    }
                    labels.insert(label.clone(), *ri);
                }
                if ok {
                    return Ok(FaithfulMatch { labels, twisted });
                }
            }
            Err(Error::NoMatch(
                "faithful rows of the 648 table do not match the grouped reference".into(),
            ))
        })
    }

    pub fn normal_chain_648(&self) -> Result<Arc<NormalChain>> {
        self.normal_chain_648.get(|| {
            let g = self.g648()?;
            let cs = self.g648_classes()?;
            let subgroups = group::normal_subgroups(&*g, &cs)?;
            let orders: Vec<usize> = subgroups.iter().map(|h| h.order()).collect();
            let is_chain = group::is_total_chain(&subgroups);
            Ok(NormalChain {
                subgroups,
                orders,
                is_chain,
            })
        })
    }

    pub fn mirrors_648(&self) -> Result<Arc<MirrorSet>> {
        let g = self.g648()?;
        self.mirrors_648.get(|| Ok(reflection::reflection_scan(&g)))
    }

    pub fn e6(&self) -> Result<Arc<E6Data>> {
        self.e6.get(|| {
            let mirrors = self.mirrors_648()?;
            let realified = reflection::realify_mirrors(&mirrors.roots())?;
            // fingerprint over all 36 reflections, whatever generating
            // subset the closure ends up using
            let all: Vec<(String, Matrix<Rational>)> = realified
                .reflections
                .iter()
                .enumerate()
                .map(|(i, m)| (format!("r{i}"), m.clone()))
                .collect();
            let group = if let Some(dir) = &self.cache_dir {
                let fp = cache::generator_fingerprint(&all, 60_000);
                match cache::load_group::<Rational>(dir, "weyl_e6", &fp)? {
                    Some(g) => g,
                    None => {
                        let g = reflection::realified_group(&realified, 60_000)?;
                        cache::save_group(dir, &g, &fp)?;
                        g
                    }
                }
            } else {
                reflection::realified_group(&realified, 60_000)?
            };
            Ok(E6Data {
                mirrors: (*mirrors).clone(),
                realified,
                group_order: group.order(),
            })
        })
    }

    pub fn census(&self) -> Result<Arc<clifford::E128Census>> {
        self.census.get(|| {
            let e128 = self.e128()?;
            clifford::e128_census(catalog(), &e128)
        })
    }

    /// Explicit isomorphism from the 648 matrix group onto its quaternionic
    /// image, as the image-index vector.
    pub fn iso_648_to_quat(&self) -> Result<Arc<Vec<usize>>> {
        self.iso_648q.get(|| {
            let a = self.g648()?;
            let b = self.g648q()?;
            let cs_a = self.g648_classes()?;
            let cs_b = self.g648q_classes()?;
            find_isomorphism(&*a, &*b, &cs_a, &cs_b).ok_or_else(|| {
                Error::NoMatch("no isomorphism from the 648 group onto its quaternionic image".into())
            })
        })
    }

    pub fn spinor(&self) -> Result<Arc<SpinorData>> {
        self.spinor.get(|| {
            let g = self.g648()?;
            let cs = self.g648_classes()?;
            let gq = self.g648q()?;
            let phi = self.iso_648_to_quat()?;
            let table = self.g648_table()?;
            let character = clifford::spinor_character(&g, &cs, &gq, &phi);
            let multiplicities = chars::decompose(&cs, &table, &character)?;
            Ok(SpinorData {
                character,
                multiplicities,
            })
        })
    }

    /// Character table for a CLI-visible group name, with its class data.
    pub fn chartab_for(&self, name: &str) -> Result<(Arc<CharTable>, Arc<ClassStructure>)> {
        match name {
            "btg" => Ok((
                Arc::new(self.btg_table()?.0.clone()),
                self.btg_classes()?,
            )),
            "g648" => Ok((self.g648_table()?, self.g648_classes()?)),
            "hessian216" => {
                let h = self.hessian()?;
                Ok((
                    Arc::new(h.table.clone()),
                    Arc::new(h.classes.clone()),
                ))
            }
            "q8" => {
                let g = self.q8()?;
                let cs = self.q8_classes()?;
                let table = self.saturated_table(&*g, &cs)?;
                Ok((Arc::new(table), cs))
            }
            "g27" => {
                let g = self.g27()?;
                let cs = self.g27_classes()?;
                let table = self.saturated_table(&*g, &cs)?;
                Ok((Arc::new(table), cs))
            }
            "g216" => {
                let g = self.g216()?;
                let cs = self.g216_classes()?;
                let table = self.saturated_table(&*g, &cs)?;
                Ok((Arc::new(table), cs))
            }
            other => Err(Error::UnknownName(other.into())),
        }
    }

    fn saturated_table(
        &self,
        g: &FinMatGroup<CycNum>,
        cs: &ClassStructure,
    ) -> Result<CharTable> {
        let nat = natural_character(g, cs);
        let derived = group::derived_subgroup(g);
        let mut seeds = vec![nat.clone(), nat.conj()];
        seeds.extend(chars::abelian_quotient_lifts(g, cs, &derived)?);
        build_char_table(g, cs, &seeds)
    }

    /// Every group name the CLI can describe.
    pub fn group_names() -> &'static [&'static str] {
        &[
            "q8", "btg", "g27", "g216", "g648", "hessian216", "e128", "g27_4q", "q8_4q",
            "g648q", "combined82944", "u3f4", "su2f9", "weyl_e6",
        ]
    }
}

/// Cast a rational matrix into the cyclotomic domain.
pub fn rational_to_cyc(m: &Matrix<Rational>) -> Matrix<CycNum> {
    Matrix::from_entries(
        m.dim(),
        m.entries()
            .iter()
            .map(|r| CycNum::from_rational(r.clone()))
            .collect(),
    )
}

/// Shared helper: build a saturated table for a subgroup view, seeded by the
/// restriction of the natural character and the abelianization lifts.
pub fn subgroup_table<G: AbstractGroup, S: FieldScalar>(
    _parent: &FinMatGroup<S>,
    view: &group::SubgroupView<'_, G>,
    sub_cs: &ClassStructure,
    natural: &Character,
) -> Result<CharTable> {
    let derived = group::derived_subgroup(view);
    let mut seeds = vec![natural.clone(), natural.conj()];
    seeds.extend(chars::abelian_quotient_lifts(view, sub_cs, &derived)?);
    build_char_table(view, sub_cs, &seeds)
}
