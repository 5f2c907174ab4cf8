//! Exact deciders for crafting instances.
//!
//! All three methods return the lexicographically smallest feasible
//! permutation. Identical strings are interchangeable, so that permutation
//! always uses the lower index of two equal strings first; the DP methods
//! exploit this by choosing, at each step, the smallest unused index whose
//! string fits and whose remaining multiset can still be completed.

use std::collections::HashMap;

use serde::Serialize;

use super::{CraftingInstance, Witness};
use crate::bitstring::{check_pair, BitString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// Every distinct ordering of the multiset, checked only when complete.
    BruteForce,
    /// Memoised over multisets of used strings.
    HeldKarp,
    /// Long strings tracked as an explicit subset, short strings as
    /// multiplicities of each distinct short string.
    Split,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::BruteForce, Method::HeldKarp, Method::Split];
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Orderings examined (brute force) or distinct memoised states (DP).
    pub states: usize,
    /// Strings tracked individually (Split only).
    pub long_strings: usize,
    /// Distinct strings tracked by multiplicity.
    pub counted_classes: usize,
}

pub fn solve(inst: &CraftingInstance, method: Method) -> Option<Witness> {
    solve_with_stats(inst, method).0
}

pub fn solve_with_stats(inst: &CraftingInstance, method: Method) -> (Option<Witness>, SolveStats) {
    match method {
        Method::BruteForce => brute_force(inst),
        Method::HeldKarp => {
            let all: Vec<usize> = (0..inst.n()).collect();
            Dp::new(inst, &[], &all).run()
        }
        Method::Split => {
            let threshold = (inst.s().len() as f64).log2() / 2.0;
            let (long, short): (Vec<usize>, Vec<usize>) =
                (0..inst.n()).partition(|&k| inst.ts()[k].len() as f64 >= threshold);
            Dp::new(inst, &long, &short).run()
        }
    }
}

/// Groups 0-based string indices by content, each group sorted ascending,
/// groups ordered by their first index.
fn classes_of(ts: &[BitString], indices: &[usize]) -> Vec<Vec<usize>> {
    let mut by_content: HashMap<&BitString, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    for k in sorted {
        match by_content.get(&ts[k]) {
            Some(&c) => classes[c].push(k),
            None => {
                by_content.insert(&ts[k], classes.len());
                classes.push(vec![k]);
            }
        }
    }
    classes
}

fn brute_force(inst: &CraftingInstance) -> (Option<Witness>, SolveStats) {
    let n = inst.n();
    let classes = classes_of(inst.ts(), &(0..n).collect::<Vec<_>>());
    let mut class_of = vec![0; n];
    for (c, members) in classes.iter().enumerate() {
        for &k in members {
            class_of[k] = c;
        }
    }

    struct Search<'a> {
        inst: &'a CraftingInstance,
        class_of: Vec<usize>,
        used: Vec<bool>,
        order: Vec<usize>,
        leaves: usize,
    }

    impl Search<'_> {
        fn go(&mut self) -> bool {
            let n = self.inst.n();
            if self.order.len() == n {
                self.leaves += 1;
                let crafted = BitString::concat_all(self.order.iter().map(|&k| &self.inst.ts()[k]));
                return check_pair(self.inst.s(), &crafted, self.inst.mode()).unwrap_or(false);
            }
            let mut tried_class = vec![false; n];
            for k in 0..n {
                // Only the first unused member of each class may go next.
                if self.used[k] || tried_class[self.class_of[k]] {
                    continue;
                }
                tried_class[self.class_of[k]] = true;
                self.used[k] = true;
                self.order.push(k);
                if self.go() {
                    return true;
                }
                self.order.pop();
                self.used[k] = false;
            }
            false
        }
    }

    let mut search = Search {
        inst,
        class_of,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        leaves: 0,
    };
    let found = search.go();
    let stats = SolveStats {
        states: search.leaves,
        long_strings: 0,
        counted_classes: classes.len(),
    };
    let witness = found.then(|| {
        Witness::new(search.order.iter().map(|k| k + 1).collect())
            .expect("search builds a permutation")
    });
    (witness, stats)
}

#[derive(Clone, Copy)]
enum Next {
    Dead,
    Done,
    Long(usize),
    Class(usize),
}

/// Shared engine for the Held-Karp and Split methods. The state is the set
/// of used long strings plus the used multiplicity of every short class;
/// the covered prefix length is implied by it.
struct Dp<'a> {
    inst: &'a CraftingInstance,
    long: Vec<usize>,
    classes: Vec<Vec<usize>>,
    /// `fits[item][offset]` for items `0..long.len()` then the classes.
    fits: Vec<Vec<bool>>,
    lens: Vec<usize>,
    memo: HashMap<Vec<u64>, Next>,
}

impl<'a> Dp<'a> {
    fn new(inst: &'a CraftingInstance, long: &[usize], short: &[usize]) -> Self {
        let mut long = long.to_vec();
        long.sort_unstable();
        let classes = classes_of(inst.ts(), short);
        let s = inst.s();
        let mut fits = Vec::new();
        let mut lens = Vec::new();
        let reps = long.iter().copied().chain(classes.iter().map(|c| c[0]));
        for k in reps {
            let t = &inst.ts()[k];
            lens.push(t.len());
            fits.push(
                (0..s.len())
                    .map(|off| off + t.len() <= s.len() && s.fits_at(t, off, inst.mode()))
                    .collect(),
            );
        }
        Dp {
            inst,
            long,
            classes,
            fits,
            lens,
            memo: HashMap::new(),
        }
    }

    fn mask_words(&self) -> usize {
        self.long.len().div_ceil(64)
    }

    fn run(mut self) -> (Option<Witness>, SolveStats) {
        let mut key = vec![0u64; self.mask_words() + self.classes.len()];
        let feasible = self.feasible(&mut key, 0);
        let witness = feasible.then(|| self.reconstruct());
        let stats = SolveStats {
            states: self.memo.len(),
            long_strings: self.long.len(),
            counted_classes: self.classes.len(),
        };
        (witness, stats)
    }

    /// Candidates for the next string in ascending order of the index that
    /// would be used.
    fn candidates(&self, key: &[u64]) -> Vec<(usize, Next)> {
        let words = self.mask_words();
        let mut out = Vec::new();
        for (b, &k) in self.long.iter().enumerate() {
            if key[b / 64] >> (b % 64) & 1 == 0 {
                out.push((k, Next::Long(b)));
            }
        }
        for (c, members) in self.classes.iter().enumerate() {
            let used = key[words + c] as usize;
            if used < members.len() {
                out.push((members[used], Next::Class(c)));
            }
        }
        out.sort_unstable_by_key(|&(k, _)| k);
        out
    }

    fn item(&self, next: Next) -> usize {
        match next {
            Next::Long(b) => b,
            Next::Class(c) => self.long.len() + c,
            Next::Dead | Next::Done => unreachable!(),
        }
    }

    fn apply(&self, key: &mut [u64], next: Next, on: bool) {
        match next {
            Next::Long(b) => key[b / 64] ^= 1 << (b % 64),
            Next::Class(c) => {
                let slot = self.mask_words() + c;
                if on {
                    key[slot] += 1
                } else {
                    key[slot] -= 1
                }
            }
            Next::Dead | Next::Done => unreachable!(),
        }
    }

    fn feasible(&mut self, key: &mut Vec<u64>, prefix: usize) -> bool {
        if let Some(&next) = self.memo.get(key.as_slice()) {
            return !matches!(next, Next::Dead);
        }
        let result = if prefix == self.inst.s().len() {
            Next::Done
        } else {
            let mut result = Next::Dead;
            for (_, next) in self.candidates(key) {
                let item = self.item(next);
                if !self.fits[item][prefix] {
                    continue;
                }
                self.apply(key, next, true);
                let ok = self.feasible(key, prefix + self.lens[item]);
                self.apply(key, next, false);
                if ok {
                    result = next;
                    break;
                }
            }
            result
        };
        self.memo.insert(key.clone(), result);
        !matches!(result, Next::Dead)
    }

    fn reconstruct(&self) -> Witness {
        let mut key = vec![0u64; self.mask_words() + self.classes.len()];
        let mut perm = Vec::with_capacity(self.inst.n());
        loop {
            match self.memo[&key] {
                Next::Done => break,
                Next::Dead => unreachable!("reconstruction follows feasible states"),
                next => {
                    let index = match next {
                        Next::Long(b) => self.long[b],
                        Next::Class(c) => self.classes[c][key[self.mask_words() + c] as usize],
                        _ => unreachable!(),
                    };
                    perm.push(index + 1);
                    self.apply(&mut key, next, true);
                }
            }
        }
        Witness::new(perm).expect("reconstruction builds a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::Mode;
    use crate::crafting::verify_witness;

    fn inst(s: &str, ts: &[&str], mode: Mode) -> CraftingInstance {
        CraftingInstance::new(
            s.parse().unwrap(),
            ts.iter().map(|t| t.parse().unwrap()).collect(),
            mode,
        )
        .unwrap()
    }

    #[test]
    fn sample_instances_are_yes() {
        let sample_sc = inst("101110101", &["1010", "101", "00"], Mode::Domination);
        let sample_ovc = inst("10110", &["01001"], Mode::Orthogonality);
        for m in Method::ALL {
            let w = solve(&sample_sc, m).unwrap();
            assert!(verify_witness(&sample_sc, &w).unwrap());
            assert_eq!(w.perm(), &[1, 2, 3]);
            assert_eq!(solve(&sample_ovc, m).unwrap().perm(), &[1]);
        }
    }

    #[test]
    fn duplicates_resolve_to_lowest_index_first() {
        let i = inst("010", &["1", "0", "0"], Mode::Domination);
        for m in Method::ALL {
            let w = solve(&i, m).unwrap();
            assert_eq!(w.perm(), &[2, 1, 3], "{m:?}");
            assert_eq!(i.crafted(&w).unwrap().to_string(), "010");
        }
    }

    #[test]
    fn no_instance() {
        let i = inst("000", &["1", "00"], Mode::Domination);
        for m in Method::ALL {
            assert!(solve(&i, m).is_none());
        }
    }

    #[test]
    fn empty_instance_is_trivially_yes() {
        let i = inst("", &[], Mode::Domination);
        for m in Method::ALL {
            assert_eq!(solve(&i, m).unwrap().len(), 0);
        }
    }

    #[test]
    fn split_partitions_on_log_threshold() {
        // |s| = 16, threshold log2(16)/2 = 2.
        let i = inst(
            "1111111111111111",
            &["1", "1", "11", "111", "1", "11111111"],
            Mode::Domination,
        );
        let (w, stats) = solve_with_stats(&i, Method::Split);
        assert!(w.is_some());
        assert_eq!(stats.long_strings, 3);
        assert_eq!(stats.counted_classes, 1);
    }
}
