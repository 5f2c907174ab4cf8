use serde::Serialize;

use super::CnfFormula;
use crate::bitstring::{id_encode, BitString, Mode};
use crate::crafting::{CraftingInstance, Witness};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StringKind {
    /// `id(i) 0^{r f_i} id(i)` for variable `x_i`.
    VariableSelection(usize),
    /// `id(n + j)` for the `j`-th clause (1-based).
    ClauseVerification(usize),
    /// `1 0^{r-2} 1`.
    Filler,
}

/// Where the block `b^i` of variable `x_i` sits inside `s` (0-based
/// character offsets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VariableBlock {
    pub start: usize,
    /// Offset of `a^{x_i}`.
    pub positive: usize,
    /// Offset of `a^{¬x_i}`.
    pub negative: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatScMap {
    pub q: u32,
    pub r: usize,
    pub num_vars: usize,
    pub num_clauses: usize,
    /// Positive occurrences of each variable.
    pub c: Vec<usize>,
    /// Negative occurrences of each variable.
    pub d: Vec<usize>,
    pub f: Vec<usize>,
    pub blocks: Vec<VariableBlock>,
    /// Clause ids (1-based clause index) in `a^{x_i}`, in order.
    pub positive_clauses: Vec<Vec<usize>>,
    /// Clause ids in `a^{¬x_i}`, in order.
    pub negative_clauses: Vec<Vec<usize>>,
    /// Kind of each `t` string, in instance order.
    pub kinds: Vec<StringKind>,
}

impl SatScMap {
    /// Offsets at which the selection string of `x_i` may sit: the first
    /// covers `a^{x_i}` (meaning false), the second `a^{¬x_i}` (true).
    pub fn selection_slots(&self, var: usize) -> (usize, usize) {
        let b = &self.blocks[var - 1];
        (b.start, b.positive + self.r * self.f[var - 1])
    }
}

fn filler(r: usize) -> BitString {
    let mut f = BitString::from_bits([true]);
    f.extend_from(&BitString::zeros(r - 2));
    f.push(true);
    f
}

/// Builds the String Crafting instance whose answer equals the
/// satisfiability of `cnf`.
pub fn sat_to_sc(cnf: &CnfFormula) -> (CraftingInstance, SatScMap) {
    let n = cnf.num_vars();
    let m = cnf.num_clauses();
    let q = (usize::BITS - (n + m).saturating_sub(1).leading_zeros()).max(1);
    let r = 4 * q as usize + 2;
    let id = |i: usize| id_encode(i, q).expect("ids fit in q bits");
    let pad = filler(r);

    let mut positive_clauses = vec![Vec::new(); n];
    let mut negative_clauses = vec![Vec::new(); n];
    for (j, clause) in cnf.clauses().iter().enumerate() {
        for &l in clause {
            let v = l.unsigned_abs() as usize - 1;
            if l > 0 {
                positive_clauses[v].push(j + 1);
            } else {
                negative_clauses[v].push(j + 1);
            }
        }
    }
    let c: Vec<usize> = positive_clauses.iter().map(Vec::len).collect();
    let d: Vec<usize> = negative_clauses.iter().map(Vec::len).collect();
    let f: Vec<usize> = c.iter().zip(&d).map(|(a, b)| a + b).collect();

    let mut s = BitString::new();
    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let start = s.len();
        let tag = id(i + 1);
        s.extend_from(&tag);
        let positive = s.len();
        for &j in &positive_clauses[i] {
            s.extend_from(&id(n + j));
        }
        for _ in 0..d[i] {
            s.extend_from(&pad);
        }
        s.extend_from(&tag);
        let negative = s.len();
        for &j in &negative_clauses[i] {
            s.extend_from(&id(n + j));
        }
        for _ in 0..c[i] {
            s.extend_from(&pad);
        }
        s.extend_from(&tag);
        blocks.push(VariableBlock {
            start,
            positive,
            negative,
            end: s.len(),
        });
    }

    let mut ts = Vec::with_capacity(2 * n + 3 * m);
    let mut kinds = Vec::with_capacity(2 * n + 3 * m);
    for i in 0..n {
        let tag = id(i + 1);
        ts.push(BitString::concat_all([
            &tag,
            &BitString::zeros(r * f[i]),
            &tag,
        ]));
        kinds.push(StringKind::VariableSelection(i + 1));
    }
    for j in 1..=m {
        ts.push(id(n + j));
        kinds.push(StringKind::ClauseVerification(j));
    }
    for _ in 0..n + 2 * m {
        ts.push(pad.clone());
        kinds.push(StringKind::Filler);
    }

    let inst = CraftingInstance::new(s, ts, Mode::Domination).expect("lengths add up");
    let map = SatScMap {
        q,
        r,
        num_vars: n,
        num_clauses: m,
        c,
        d,
        f,
        blocks,
        positive_clauses,
        negative_clauses,
        kinds,
    };
    (inst, map)
}

/// 0-based offset of every string in `t^Π`, indexed by string.
fn offsets(inst: &CraftingInstance, w: &Witness) -> Vec<usize> {
    let mut out = vec![0; inst.n()];
    let mut at = 0;
    for &k in w.perm() {
        out[k - 1] = at;
        at += inst.t(k).len();
    }
    out
}

/// Reads the truth assignment off the placement of the selection strings.
pub fn decode_assignment(
    map: &SatScMap,
    inst: &CraftingInstance,
    w: &Witness,
) -> Result<Vec<bool>> {
    if w.len() != map.kinds.len() {
        return Err(Error::InvalidWitness(format!(
            "witness orders {} strings, instance has {}",
            w.len(),
            map.kinds.len()
        )));
    }
    let at = offsets(inst, w);
    let mut assignment = vec![false; map.num_vars];
    for (k, kind) in map.kinds.iter().enumerate() {
        if let StringKind::VariableSelection(i) = *kind {
            let (covers_positive, covers_negative) = map.selection_slots(i);
            assignment[i - 1] = if at[k] == covers_positive {
                false
            } else if at[k] == covers_negative {
                true
            } else {
                return Err(Error::Inconsistent(format!(
                    "selection string of x{i} sits at offset {}, expected {covers_positive} or {covers_negative}",
                    at[k]
                )));
            };
        }
    }
    Ok(assignment)
}

/// Builds a crafting witness from a satisfying assignment.
pub fn encode_assignment(map: &SatScMap, cnf: &CnfFormula, assignment: &[bool]) -> Result<Witness> {
    if !cnf.is_satisfied_by(assignment) {
        return Err(Error::Precondition(
            "assignment does not satisfy the formula".into(),
        ));
    }
    let r = map.r;
    let n = map.num_vars;
    // Free r-blocks: (offset, clause id it carries, if any).
    let mut free: Vec<(usize, Option<usize>)> = Vec::new();
    let mut placed: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let b = &map.blocks[i];
        let (first, second) = map.selection_slots(i + 1);
        let block_of =
            |clauses: &[usize], from: usize, len: usize| -> Vec<(usize, Option<usize>)> {
                (0..len)
                    .map(|k| (from + k * r, clauses.get(k).copied()))
                    .collect()
            };
        let f = map.f[i];
        if assignment[i] {
            placed.push((i, second));
            free.push((b.start, None));
            free.extend(block_of(&map.positive_clauses[i], b.positive, f));
        } else {
            placed.push((i, first));
            free.extend(block_of(&map.negative_clauses[i], b.negative, f));
            free.push((b.end - r, None));
        }
    }
    for j in 1..=map.num_clauses {
        let slot = free
            .iter()
            .position(|&(_, c)| c == Some(j))
            .ok_or_else(|| Error::Inconsistent(format!("clause {j} has no free id slot")))?;
        let (offset, _) = free.swap_remove(slot);
        placed.push((n + j - 1, offset));
    }
    free.sort_unstable();
    let first_filler = n + map.num_clauses;
    placed.extend(
        free.iter()
            .enumerate()
            .map(|(k, &(offset, _))| (first_filler + k, offset)),
    );
    placed.sort_unstable_by_key(|&(_, offset)| offset);
    Witness::new(placed.into_iter().map(|(k, _)| k + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crafting::verify_witness;

    #[test]
    fn single_clause_constants() {
        let cnf = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let (inst, map) = sat_to_sc(&cnf);
        assert_eq!((map.q, map.r), (2, 10));
        assert_eq!(inst.s().len(), 150);
        let lens: Vec<usize> = inst.ts().iter().map(BitString::len).collect();
        assert_eq!(lens, [30, 30, 30, 10, 10, 10, 10, 10, 10]);
        for t in inst.ts() {
            assert!(t.is_palindrome());
            assert_eq!((t.get(1), t.get(t.len())), (Some(true), Some(true)));
        }
    }

    #[test]
    fn encode_then_decode() {
        let cnf = CnfFormula::new(3, vec![[1, -2, 3], [-1, -1, 2], [2, 3, -3]]).unwrap();
        let (inst, map) = sat_to_sc(&cnf);
        for bits in 0..8u32 {
            let a: Vec<bool> = (0..3).map(|k| bits >> k & 1 == 1).collect();
            if !cnf.is_satisfied_by(&a) {
                assert!(encode_assignment(&map, &cnf, &a).is_err());
                continue;
            }
            let w = encode_assignment(&map, &cnf, &a).unwrap();
            assert!(verify_witness(&inst, &w).unwrap());
            assert_eq!(decode_assignment(&map, &inst, &w).unwrap(), a);
        }
    }

    #[test]
    fn selection_slots_cover_the_literal_blocks() {
        let cnf = CnfFormula::new(2, vec![[1, 1, -2]]).unwrap();
        let (inst, map) = sat_to_sc(&cnf);
        assert_eq!((map.c.clone(), map.d.clone()), (vec![2, 0], vec![0, 1]));
        let (a, b) = map.selection_slots(1);
        let len = (map.f[0] + 2) * map.r;
        let sel = inst.t(1);
        assert!(inst.s().fits_at(sel, a, Mode::Domination));
        assert!(inst.s().fits_at(sel, b, Mode::Domination));
        assert_eq!(b + len, map.blocks[0].end);
    }
}
