//! Exhaustive deciders used as ground truth for the reductions.

mod embed;
mod intervalize;
mod mspd_exact;

pub use embed::{embed_bf, verify_embedding, EmbeddingWitness, Relation};
pub use intervalize::intervalize_exact;
pub use mspd_exact::{mspd_exact, Shape};

use crate::reductions::{CnfFormula, X3cInstance};

/// First satisfying assignment in lexicographic order (`false < true`,
/// `x_1` most significant).
pub fn sat_bf(cnf: &CnfFormula) -> Option<Vec<bool>> {
    let n = cnf.num_vars();
    assert!(n < 64, "sat_bf enumerates at most 63 variables");
    (0..1u64 << n)
        .map(|bits| {
            (0..n)
                .map(|i| bits >> (n - 1 - i) & 1 == 1)
                .collect::<Vec<_>>()
        })
        .find(|a| cnf.is_satisfied_by(a))
}

/// First exact cover (1-based set indices) in lexicographic order of index
/// combinations.
pub fn x3c_bf(x: &X3cInstance) -> Option<Vec<usize>> {
    let k = x.n() / 3;
    let m = x.m();
    let mut combo: Vec<usize> = (1..=k).collect();
    if k > m {
        return None;
    }
    loop {
        if x.is_exact_cover(&combo) {
            return Some(combo);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] < m - (k - 1 - i) {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}
