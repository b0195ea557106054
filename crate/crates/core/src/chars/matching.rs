//! Matching a computed character table against a reference literal, up to
//! row/column bijection and one global v↔w Galois twist.

use std::collections::BTreeMap;

use super::CharTable;
use crate::error::{Error, Result};
use crate::group::ClassStructure;
use crate::scalar::CycNum;

#[derive(Clone, Debug)]
pub struct RefColumn {
    pub size: usize,
    pub centralizer: usize,
    /// Element order when the reference fixes it; None leaves it free.
    pub element_order: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RefTable {
    pub name: &'static str,
    pub columns: Vec<RefColumn>,
    pub rows: Vec<(&'static str, Vec<CycNum>)>,
}

impl RefTable {
    pub fn from_literals(
        name: &'static str,
        columns: Vec<RefColumn>,
        rows: &[(&'static str, &[&str])],
    ) -> Self {
        let rows = rows
            .iter()
            .map(|(label, vals)| {
                let values = vals
                    .iter()
                    .map(|s| CycNum::parse(s).expect("reference literal"))
                    .collect::<Vec<_>>();
                assert_eq!(values.len(), columns.len());
                (*label, values)
            })
            .collect();
        RefTable {
            name,
            columns,
            rows,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatchReport {
    /// reference row position -> computed table row index
    pub row_of_ref: Vec<usize>,
    /// reference column position -> computed class index
    pub class_of_ref_col: Vec<usize>,
    /// whether the global v↔w twist was applied to the reference
    pub twisted: bool,
    labels: BTreeMap<&'static str, usize>,
}

impl MatchReport {
    /// Computed row index carrying the given reference label.
    pub fn row(&self, label: &str) -> usize {
        *self
            .labels
            .get(label)
            .unwrap_or_else(|| panic!("no reference row labeled `{label}`"))
    }

    pub fn labels(&self) -> &BTreeMap<&'static str, usize> {
        &self.labels
    }
}

/// Find a row and column bijection under which every value agrees exactly,
/// trying the identity and then the global v↔w twist on the reference.
pub fn table_match(
    cs: &ClassStructure,
    table: &CharTable,
    reference: &RefTable,
) -> Result<MatchReport> {
    if table.row_count() != reference.rows.len() || cs.count() != reference.columns.len() {
        return Err(Error::NoMatch(format!(
            "{}: shape mismatch {}x{} vs {}x{}",
            reference.name,
            table.row_count(),
            cs.count(),
            reference.rows.len(),
            reference.columns.len()
        )));
    }
    for twisted in [false, true] {
        let rows: Vec<(&'static str, Vec<CycNum>)> = reference
            .rows
            .iter()
            .map(|(l, vals)| {
                let vals = if twisted {
                    vals.iter().map(|v| v.vw_twist()).collect()
                } else {
                    vals.clone()
                };
                (*l, vals)
            })
            .collect();
        if let Some(report) = try_match(cs, table, &reference.columns, &rows, twisted) {
            return Ok(report);
        }
    }
    Err(Error::NoMatch(format!(
        "{}: no column/row bijection matches (with or without the v-w twist)",
        reference.name
    )))
}

fn try_match(
    cs: &ClassStructure,
    table: &CharTable,
    columns: &[RefColumn],
    rows: &[(&'static str, Vec<CycNum>)],
    twisted: bool,
) -> Option<MatchReport> {
    // Group reference columns and computed classes by their invariants.
    let col_key = |c: &RefColumn| (c.size, c.centralizer, c.element_order);
    let mut blocks: BTreeMap<(usize, usize, Option<usize>), (Vec<usize>, Vec<usize>)> =
        BTreeMap::new();
    for (i, c) in columns.iter().enumerate() {
        blocks.entry(col_key(c)).or_default().0.push(i);
    }
    for (ci, class) in cs.classes.iter().enumerate() {
        // A computed class can serve any reference column whose stated
        // invariants it satisfies; element_order None is a wildcard, so
        // classes are filed under both keys when needed.
        let exact = (class.size, class.centralizer_order, Some(class.element_order));
        let wild = (class.size, class.centralizer_order, None);
        if blocks.contains_key(&exact) {
            blocks.get_mut(&exact).unwrap().1.push(ci);
        } else if blocks.contains_key(&wild) {
            blocks.get_mut(&wild).unwrap().1.push(ci);
        } else {
            return None;
        }
    }
    let blocks: Vec<(Vec<usize>, Vec<usize>)> = blocks.into_values().collect();
    if blocks
        .iter()
        .any(|(cols, classes)| cols.len() != classes.len())
    {
        return None;
    }
    let mut assignment = vec![usize::MAX; columns.len()];
    assign_blocks(cs, table, rows, &blocks, 0, &mut assignment, twisted)
}

fn assign_blocks(
    cs: &ClassStructure,
    table: &CharTable,
    rows: &[(&'static str, Vec<CycNum>)],
    blocks: &[(Vec<usize>, Vec<usize>)],
    at: usize,
    assignment: &mut Vec<usize>,
    twisted: bool,
) -> Option<MatchReport> {
    if at == blocks.len() {
        return check_rows(table, rows, assignment, twisted);
    }
    let (cols, classes) = &blocks[at];
    permute(classes, &mut |perm| {
        for (c, &cls) in cols.iter().zip(perm.iter()) {
            assignment[*c] = cls;
        }
        assign_blocks(cs, table, rows, blocks, at + 1, assignment, twisted)
    })
}

/// Iterate permutations of `items` (lexicographic by construction) until the
/// callback returns Some.
fn permute<T: Copy>(
    items: &[T],
    f: &mut impl FnMut(&[T]) -> Option<MatchReport>,
) -> Option<MatchReport> {
    fn go<T: Copy>(
        chosen: &mut Vec<T>,
        rest: &mut Vec<T>,
        f: &mut impl FnMut(&[T]) -> Option<MatchReport>,
    ) -> Option<MatchReport> {
        if rest.is_empty() {
            return f(chosen);
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            chosen.push(x);
            if let Some(r) = go(chosen, rest, f) {
                return Some(r);
            }
            chosen.pop();
            rest.insert(i, x);
        }
        None
    }
    go(&mut Vec::new(), &mut items.to_vec(), f)
}

fn check_rows(
    table: &CharTable,
    rows: &[(&'static str, Vec<CycNum>)],
    assignment: &[usize],
    twisted: bool,
) -> Option<MatchReport> {
    // Permute each computed row into reference column order, then match rows
    // by sorting; identical value vectors are interchangeable.
    let mut computed: Vec<(Vec<CycNum>, usize)> = table
        .irreducibles
        .iter()
        .enumerate()
        .map(|(ri, chi)| {
            let v: Vec<CycNum> = assignment.iter().map(|&c| chi.values[c].clone()).collect();
            (v, ri)
        })
        .collect();
    let mut wanted: Vec<(Vec<CycNum>, usize)> = rows
        .iter()
        .enumerate()
        .map(|(pos, (_, vals))| (vals.clone(), pos))
        .collect();
    computed.sort();
    wanted.sort();
    let mut row_of_ref = vec![usize::MAX; rows.len()];
    for ((cv, cri), (wv, wpos)) in computed.iter().zip(&wanted) {
        if cv != wv {
            return None;
        }
        row_of_ref[*wpos] = *cri;
    }
    let labels = rows
        .iter()
        .enumerate()
        .map(|(pos, (l, _))| (*l, row_of_ref[pos]))
        .collect();
    Some(MatchReport {
        row_of_ref,
        class_of_ref_col: assignment.to_vec(),
        twisted,
        labels,
    })
}
