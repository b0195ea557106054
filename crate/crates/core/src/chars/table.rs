//! Irreducible character tables by tensor-power saturation.

use std::collections::HashSet;

use num_traits::Zero;

use super::{inner_product, inner_product_nat, Character};
use crate::error::{Error, Result};
use crate::group::{AbstractGroup, ClassStructure};
use crate::scalar::CycNum;

#[derive(Clone, Debug)]
pub struct CharTable {
    /// Rows ordered by (degree, value tuple).
    pub irreducibles: Vec<Character>,
}

impl CharTable {
    pub fn row_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreducibles
            .iter()
            .map(|c| {
                c.degree()
                    .as_rational()
                    .and_then(|r| r.to_i64())
                    .expect("character degrees are integers") as usize
            })
            .collect()
    }

    /// Exact row orthogonality ⟨χᵢ, χⱼ⟩ = δᵢⱼ.
    pub fn check_row_orthogonality(&self, cs: &ClassStructure) -> bool {
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = inner_product(cs, a, b);
                let want = CycNum::int(i64::from(i == j));
                if ip != want {
                    return false;
                }
            }
        }
        true
    }

    /// Exact column orthogonality: Σᵢ χᵢ(c)·conj(χᵢ(c')) = δ_{cc'}·|centralizer(c)|.
    pub fn check_column_orthogonality(&self, cs: &ClassStructure) -> bool {
        let k = cs.count();
        for c in 0..k {
            for cp in 0..k {
                let mut acc = CycNum::zero();
                for chi in &self.irreducibles {
                    acc = acc.add_ref(&chi.values[c].mul_ref(&chi.values[cp].conj()));
                }
                let want = if c == cp {
                    CycNum::int(cs.classes[c].centralizer_order as i64)
                } else {
                    CycNum::zero()
                };
                if acc != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn sum_of_degree_squares(&self) -> usize {
        self.degrees().iter().map(|d| d * d).sum()
    }
}

/// Strip every known irreducible constituent from `chi`.
fn strip(
    cs: &ClassStructure,
    known: &[Character],
    chi: &Character,
) -> Result<Character> {
    let mut r = chi.clone();
    for irr in known {
        let m = inner_product_nat(cs, chi, irr)?;
        if m > 0 {
            r = r.sub_scaled(irr, m);
        }
    }
    Ok(r)
}

/// Tensor-power saturation: keep tensoring seeds and found irreducibles,
/// stripping known constituents and accepting norm-1 residues, until the
/// irreducible count reaches the class count. Reachable from any faithful
/// seed character.
pub fn build_char_table(
    _g: &impl AbstractGroup,
    cs: &ClassStructure,
    seeds: &[Character],
) -> Result<CharTable> {
    let wanted = cs.count();
    let mut known: Vec<Character> = Vec::new();
    let mut seen: HashSet<Vec<CycNum>> = HashSet::new();
    let mut residues: Vec<Character> = Vec::new();
    let mut queue: Vec<Character> = vec![Character::trivial(wanted)];
    queue.extend(seeds.iter().cloned());

    let mut rounds = 0;
    while known.len() < wanted {
        rounds += 1;
        if rounds > 16 {
            return Err(Error::SaturationStalled {
                found: known.len(),
                wanted,
            });
        }
        let mut progress = false;
        let mut new_residues = Vec::new();
        for chi in queue.drain(..) {
            if !seen.insert(chi.values.clone()) {
                continue;
            }
            let mut r = strip(cs, &known, &chi)?;
            while !r.is_zero() {
                if inner_product_nat(cs, &r, &r)? == 1 {
                    known.push(r);
                    progress = true;
                    break;
                }
                // irreducibles found since the first strip may divide r
                let r2 = strip(cs, &known, &r)?;
                if r2 == r {
                    new_residues.push(r);
                    break;
                }
                r = r2;
            }
        }
        residues.extend(new_residues);
        // re-strip stored residues against the enlarged irreducible set
        let mut still = Vec::new();
        for r in residues.drain(..) {
            let r = strip(cs, &known, &r)?;
            if r.is_zero() {
                continue;
            }
            if inner_product_nat(cs, &r, &r)? == 1 {
                known.push(r);
                progress = true;
            } else {
                still.push(r);
            }
        }
        residues = still;
        if known.len() >= wanted {
            break;
        }
        // generate the next tensor layer
        let mut pool: Vec<&Character> = Vec::new();
        pool.extend(seeds);
        pool.extend(known.iter());
        pool.extend(residues.iter());
        let mut next = Vec::new();
        for a in &pool {
            for b in seeds.iter().chain(known.iter()) {
                let t = a.tensor(b);
                if !seen.contains(&t.values) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() && !progress {
            return Err(Error::SaturationStalled {
                found: known.len(),
                wanted,
            });
        }
        queue = next;
    }

    known.sort_by(|a, b| {
        let da = a.degree().clone();
        let db = b.degree().clone();
        (da, &a.values).cmp(&(db, &b.values))
    });
    let table = CharTable {
        irreducibles: known,
    };
    assert_eq!(
        table.sum_of_degree_squares(),
        cs.group_order,
        "degree squares must sum to the group order"
    );
    Ok(table)
}
