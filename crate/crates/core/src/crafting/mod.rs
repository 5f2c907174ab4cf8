//! String Crafting and Orthogonal Vector Crafting instances and witnesses.

mod solve;

use std::fmt;

use serde::Serialize;

use crate::bitstring::{check_pair, BitString, Mode};
use crate::error::{Error, ParseCode, ParseError, Result};

pub use solve::{solve, solve_with_stats, Method, SolveStats};

/// Host string `s`, the multiset `t_1..t_n` (as an ordered list) and the
/// positionwise relation to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CraftingInstance {
    s: BitString,
    ts: Vec<BitString>,
    mode: Mode,
}

impl CraftingInstance {
    /// Rejects instances whose pieces do not add up to `|s|` or contain an
    /// empty piece.
    pub fn new(s: BitString, ts: Vec<BitString>, mode: Mode) -> Result<Self> {
        if let Some(k) = ts.iter().position(|t| t.is_empty()) {
            return Err(Error::InvalidInstance(format!("t_{} is empty", k + 1)));
        }
        let total: usize = ts.iter().map(BitString::len).sum();
        if total != s.len() {
            return Err(Error::InvalidInstance(format!(
                "sum of |t_i| is {total} but |s| is {}",
                s.len()
            )));
        }
        Ok(CraftingInstance { s, ts, mode })
    }

    pub fn s(&self) -> &BitString {
        &self.s
    }

    pub fn ts(&self) -> &[BitString] {
        &self.ts
    }

    /// The 1-indexed string `t_i`.
    pub fn t(&self, i: usize) -> &BitString {
        &self.ts[i - 1]
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.ts.len()
    }

    /// Same strings under a different host and/or mode.
    pub fn with_host(&self, s: BitString, mode: Mode) -> Result<Self> {
        CraftingInstance::new(s, self.ts.clone(), mode)
    }

    /// `t^Π`, the concatenation in witness order.
    pub fn crafted(&self, w: &Witness) -> Result<BitString> {
        self.check_witness_size(w)?;
        Ok(BitString::concat_all(
            w.perm.iter().map(|&i| &self.ts[i - 1]),
        ))
    }

    fn check_witness_size(&self, w: &Witness) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::InvalidWitness(format!(
                "witness orders {} strings, instance has {}",
                w.len(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Parses the one-instance text format: mode line (`SC` or `OVC`), the
    /// host string, then one `t_i` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, tag) = lines
            .next()
            .ok_or_else(|| ParseError::new(ParseCode::Empty, 1, "missing mode line"))?;
        let mode = match tag {
            "SC" => Mode::Domination,
            "OVC" => Mode::Orthogonality,
            other => {
                return Err(ParseError::new(
                    ParseCode::Mode,
                    lno,
                    format!("unknown mode tag {other:?}"),
                )
                .into())
            }
        };
        let parse_bits = |lno: usize, l: &str| -> Result<BitString> {
            l.parse::<BitString>().map_err(|mut e| {
                e.line = lno;
                e.into()
            })
        };
        let (lno, s_line) = lines
            .next()
            .ok_or_else(|| ParseError::new(ParseCode::Empty, lno + 1, "missing host string"))?;
        let s = parse_bits(lno, s_line)?;
        let mut ts = Vec::new();
        let mut last = lno;
        for (lno, l) in lines {
            ts.push(parse_bits(lno, l)?);
            last = lno;
        }
        let total: usize = ts.iter().map(BitString::len).sum();
        if total != s.len() {
            return Err(ParseError::new(
                ParseCode::LenSum,
                last,
                format!("sum of |t_i| is {total} but |s| is {}", s.len()),
            )
            .into());
        }
        CraftingInstance::new(s, ts, mode)
    }
}

impl fmt::Display for CraftingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.mode {
            Mode::Domination => "SC",
            Mode::Orthogonality => "OVC",
        };
        writeln!(f, "{tag}")?;
        writeln!(f, "{}", self.s)?;
        for t in &self.ts {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A permutation `Π(1), ..., Π(n)` of the 1-based string indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Witness {
    perm: Vec<usize>,
}

impl Witness {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidWitness(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p] = true;
        }
        Ok(Witness { perm })
    }

    pub fn identity(n: usize) -> Self {
        Witness {
            perm: (1..=n).collect(),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let perm = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| ParseError::new(ParseCode::Token, 1, format!("bad index {tok:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Witness::new(perm)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Whether `t^Π` satisfies the instance's mode against `s`.
pub fn verify_witness(inst: &CraftingInstance, w: &Witness) -> Result<bool> {
    let crafted = inst.crafted(w)?;
    check_pair(inst.s(), &crafted, inst.mode())
}

/// Block index `j` (in Π order) and offset `pos` inside `t_{Π(j)}` of the
/// 1-indexed host position `i`; `j` is the least block whose prefix sum of
/// lengths reaches `i`.
pub fn locate(inst: &CraftingInstance, w: &Witness, i: usize) -> Result<(usize, usize)> {
    inst.check_witness_size(w)?;
    if i == 0 || i > inst.s().len() {
        return Err(Error::PositionOutOfRange {
            pos: i,
            len: inst.s().len(),
        });
    }
    let mut before = 0;
    for (j, &k) in w.perm().iter().enumerate() {
        let len = inst.t(k).len();
        if before + len >= i {
            return Ok((j + 1, i - before));
        }
        before += len;
    }
    unreachable!("lengths sum to |s|")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn sample_sc() -> CraftingInstance {
        CraftingInstance::new(
            bs("101110101"),
            vec![bs("1010"), bs("101"), bs("00")],
            Mode::Domination,
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_lengths() {
        assert!(CraftingInstance::new(bs("10"), vec![bs("1")], Mode::Domination).is_err());
        assert!(CraftingInstance::new(bs("1"), vec![bs("1"), bs("")], Mode::Domination).is_err());
    }

    #[test]
    fn verify_examples() {
        let inst = sample_sc();
        assert!(verify_witness(&inst, &Witness::identity(3)).unwrap());
        let sample_ovc =
            CraftingInstance::new(bs("10110"), vec![bs("01001")], Mode::Orthogonality).unwrap();
        assert!(verify_witness(&sample_ovc, &Witness::identity(1)).unwrap());
        let no =
            CraftingInstance::new(bs("000"), vec![bs("1"), bs("00")], Mode::Domination).unwrap();
        for p in [vec![1, 2], vec![2, 1]] {
            assert!(!verify_witness(&no, &Witness::new(p).unwrap()).unwrap());
        }
        assert!(verify_witness(&inst, &Witness::identity(2)).is_err());
    }

    #[test]
    fn witness_must_be_permutation() {
        assert!(Witness::new(vec![1, 1]).is_err());
        assert!(Witness::new(vec![0, 1]).is_err());
        assert!(Witness::new(vec![2, 3, 1]).is_ok());
        assert_eq!(Witness::parse("3 1 2").unwrap().to_string(), "3 1 2");
    }

    #[test]
    fn locate_examples() {
        let inst = sample_sc();
        let w = Witness::identity(3);
        assert_eq!(locate(&inst, &w, 5).unwrap(), (2, 1));
        assert_eq!(locate(&inst, &w, 4).unwrap(), (1, 4));
        assert_eq!(locate(&inst, &w, 9).unwrap(), (3, 2));
        assert_eq!(locate(&inst, &w, 1).unwrap(), (1, 1));
        assert!(locate(&inst, &w, 0).is_err());
        assert!(locate(&inst, &w, 10).is_err());
    }

    #[test]
    fn locate_inverts_concatenation() {
        let inst = sample_sc();
        for perm in [[1, 2, 3], [3, 1, 2], [2, 3, 1]] {
            let w = Witness::new(perm.to_vec()).unwrap();
            let crafted = inst.crafted(&w).unwrap();
            for i in 1..=inst.s().len() {
                let (j, pos) = locate(&inst, &w, i).unwrap();
                assert_eq!(crafted.get(i), inst.t(w.perm()[j - 1]).get(pos));
            }
        }
    }

    #[test]
    fn parse_text_format() {
        let inst = CraftingInstance::parse("SC\n101110101\n1010\n101\n00\n").unwrap();
        assert_eq!(inst, sample_sc());
        assert_eq!(CraftingInstance::parse(&inst.to_string()).unwrap(), inst);
        let ovc = CraftingInstance::parse("OVC\n10110\n01001").unwrap();
        assert_eq!(ovc.mode(), Mode::Orthogonality);
        match CraftingInstance::parse("SC\n10\n1\n") {
            Err(Error::Parse(e)) => assert_eq!(e.code, ParseCode::LenSum),
            other => panic!("expected E_LENSUM, got {other:?}"),
        }
        match CraftingInstance::parse("XY\n1\n1\n") {
            Err(Error::Parse(e)) => assert_eq!(e.code, ParseCode::Mode),
            other => panic!("expected E_MODE, got {other:?}"),
        }
        match CraftingInstance::parse("SC\n1\n2\n") {
            Err(Error::Parse(e)) => {
                assert_eq!(e.code, ParseCode::Bits);
                assert_eq!(e.line, 3);
            }
            other => panic!("expected E_BITS, got {other:?}"),
        }
    }
}
