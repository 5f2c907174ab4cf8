//! Seeded random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitstring::{BitString, Mode};
use crate::crafting::CraftingInstance;
use crate::reductions::{CnfFormula, X3cInstance};

/// Environment variable that fixes the seed of every generator.
pub const SEED_VAR: &str = "CRAFTBENCH_SEED";

/// The seed from `CRAFTBENCH_SEED` if it is set and numeric, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

pub fn seeded_rng(default: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env(default))
}

fn random_bits(rng: &mut impl Rng, len: usize) -> BitString {
    BitString::from_bits((0..len).map(|_| rng.gen_bool(0.5)))
}

/// Splits `total` into `parts` positive lengths.
fn composition(rng: &mut impl Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let len = c - prev;
            prev = c;
            len
        })
        .collect()
}

/// A host that some order of `ts` satisfies: the concatenation in a random
/// order, with extra 1s (domination) or extra 0s (orthogonality) sprinkled
/// over the free positions.
fn satisfiable_host(rng: &mut impl Rng, ts: &[BitString], mode: Mode) -> BitString {
    let mut order: Vec<&BitString> = ts.iter().collect();
    order.shuffle(rng);
    let crafted = BitString::concat_all(order);
    BitString::from_bits(crafted.iter().map(|b| match mode {
        Mode::Domination => b || rng.gen_bool(0.3),
        Mode::Orthogonality => !b && rng.gen_bool(0.6),
    }))
}

/// A random instance with `|s|` in `1..=max_len` and at most `max_strings`
/// strings. Half the time the host is built to be satisfiable.
pub fn random_crafting(
    rng: &mut impl Rng,
    mode: Mode,
    max_len: usize,
    max_strings: usize,
) -> CraftingInstance {
    let len = rng.gen_range(1..=max_len);
    let k = rng.gen_range(1..=max_strings.min(len));
    let ts: Vec<BitString> = composition(rng, len, k)
        .into_iter()
        .map(|l| random_bits(rng, l))
        .collect();
    let s = if rng.gen_bool(0.5) {
        satisfiable_host(rng, &ts, mode)
    } else {
        random_bits(rng, len)
    };
    CraftingInstance::new(s, ts, mode).expect("lengths add up")
}

/// A palindrome of length `len`; with `ends_with_one` it also starts and
/// ends with a 1.
pub fn random_palindrome(rng: &mut impl Rng, len: usize, ends_with_one: bool) -> BitString {
    let half: Vec<bool> = (0..len.div_ceil(2)).map(|_| rng.gen_bool(0.5)).collect();
    let mut bits: Vec<bool> = (0..len).map(|i| half[i.min(len - 1 - i)]).collect();
    if ends_with_one {
        bits[0] = true;
        bits[len - 1] = true;
    }
    BitString::from_bits(bits)
}

/// Like [`random_crafting`] but every string is a palindrome, optionally
/// starting and ending with a 1.
pub fn random_palindromic(
    rng: &mut impl Rng,
    mode: Mode,
    max_len: usize,
    max_strings: usize,
    ends_with_one: bool,
) -> CraftingInstance {
    let len = rng.gen_range(1..=max_len);
    let k = rng.gen_range(1..=max_strings.min(len));
    let ts: Vec<BitString> = composition(rng, len, k)
        .into_iter()
        .map(|l| random_palindrome(rng, l, ends_with_one))
        .collect();
    let s = if rng.gen_bool(0.5) {
        satisfiable_host(rng, &ts, mode)
    } else {
        random_bits(rng, len)
    };
    CraftingInstance::new(s, ts, mode).expect("lengths add up")
}

/// An Orthogonal Vector Crafting yes-instance with palindromic strings.
pub fn random_ovc_yes(rng: &mut impl Rng, max_len: usize, max_strings: usize) -> CraftingInstance {
    let len = rng.gen_range(1..=max_len);
    let k = rng.gen_range(1..=max_strings.min(len));
    let ts: Vec<BitString> = composition(rng, len, k)
        .into_iter()
        .map(|l| random_palindrome(rng, l, false))
        .collect();
    let s = satisfiable_host(rng, &ts, Mode::Orthogonality);
    CraftingInstance::new(s, ts, Mode::Orthogonality).expect("lengths add up")
}

/// A 3-CNF formula with `1..=max_vars` variables and `1..=max_clauses`
/// clauses of uniformly random literals.
pub fn random_cnf(rng: &mut impl Rng, max_vars: usize, max_clauses: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            [0; 3].map(|_| {
                let v = rng.gen_range(1..=n) as i32;
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
        })
        .collect();
    CnfFormula::new(n, clauses).expect("literals are in range")
}

/// An X3C instance over `n` elements (a multiple of three) with `m` sets,
/// `m > n / 3`. Half the time an exact cover is planted.
pub fn random_x3c(rng: &mut impl Rng, n: usize, m: usize) -> X3cInstance {
    assert!(
        n.is_multiple_of(3) && m > n / 3,
        "need n divisible by 3 and m > n/3"
    );
    let triple = |rng: &mut ChaCha8Rng| {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(rng);
        let mut t = [all[0], all[1], all[2]];
        t.sort_unstable();
        t
    };
    let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
    let mut sets: Vec<[usize; 3]> = Vec::with_capacity(m);
    if local.gen_bool(0.5) {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(&mut local);
        for c in all.chunks(3) {
            let mut t = [c[0], c[1], c[2]];
            t.sort_unstable();
            sets.push(t);
        }
    }
    while sets.len() < m {
        sets.push(triple(&mut local));
    }
    sets.shuffle(&mut local);
    X3cInstance::new(n, sets).expect("sets are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crafting::{solve, Method};

    #[test]
    fn generators_respect_their_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut yes = 0;
        for _ in 0..200 {
            let inst = random_palindromic(&mut rng, Mode::Domination, 12, 6, true);
            assert!(inst.s().len() <= 12);
            for t in inst.ts() {
                assert!(t.is_palindrome());
                assert_eq!((t.get(1), t.get(t.len())), (Some(true), Some(true)));
            }
            yes += solve(&inst, Method::HeldKarp).is_some() as usize;
            let ovc = random_ovc_yes(&mut rng, 10, 5);
            assert!(solve(&ovc, Method::HeldKarp).is_some());
        }
        assert!(yes > 20 && yes < 180, "yes count {yes}");
        let x = random_x3c(&mut rng, 6, 5);
        assert_eq!((x.n(), x.m()), (6, 5));
        let f = random_cnf(&mut rng, 4, 3);
        assert!(f.num_vars() <= 4 && f.num_clauses() <= 3);
    }
}
