//! Packed 0/1 strings with 1-indexed position access.
//!
//! Bits are stored little-endian inside 64-bit words; every bit past `len`
//! is kept at zero so that derived equality and hashing are exact.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseCode, ParseError, Result};

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

/// Positionwise relation checked between a host string and a crafted string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Host has a 1 wherever the candidate has a 1 (String Crafting).
    Domination,
    /// Host and candidate never share a 1 (Orthogonal Vector Crafting).
    Orthogonality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Complement,
    Reverse,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = Self::zeros(len);
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut s = Self::new();
        for b in bits {
            s.push(b);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The `i`-th character, 1-indexed. `None` outside `1..=len`.
    pub fn get(&self, i: usize) -> Option<bool> {
        if i == 0 || i > self.len {
            return None;
        }
        Some(self.bit0(i - 1))
    }

    #[inline]
    fn bit0(&self, i: usize) -> bool {
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / WORD] |= 1 << (self.len % WORD);
        }
        self.len += 1;
    }

    pub fn extend_from(&mut self, other: &BitString) {
        for b in other.iter() {
            self.push(b);
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    /// Concatenation of all parts in order.
    pub fn concat_all<'a, I: IntoIterator<Item = &'a BitString>>(parts: I) -> BitString {
        let mut out = BitString::new();
        for p in parts {
            out.extend_from(p);
        }
        out
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.bit0(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> BitString {
        let mut out = BitString {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    pub fn reverse(&self) -> BitString {
        BitString::from_bits(self.iter().rev())
    }

    pub fn transform(&self, op: Transform) -> BitString {
        match op {
            Transform::Complement => self.complement(),
            Transform::Reverse => self.reverse(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len;
        (0..n / 2).all(|i| self.bit0(i) == self.bit0(n - 1 - i))
    }

    /// Substring starting at 1-indexed position `start` with `len` characters.
    pub fn substring(&self, start: usize, len: usize) -> Result<BitString> {
        if start == 0 || start - 1 + len > self.len {
            return Err(Error::PositionOutOfRange {
                pos: start + len.saturating_sub(1),
                len: self.len,
            });
        }
        Ok(BitString::from_bits(
            (start - 1..start - 1 + len).map(|i| self.bit0(i)),
        ))
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// 64 bits starting at 0-indexed bit `offset`; bits past the end read 0.
    #[inline]
    fn word_at(&self, offset: usize) -> u64 {
        let (w, b) = (offset / WORD, offset % WORD);
        let lo = self.words.get(w).copied().unwrap_or(0) >> b;
        if b == 0 {
            lo
        } else {
            lo | (self.words.get(w + 1).copied().unwrap_or(0) << (WORD - b))
        }
    }

    /// Whether `t` satisfies `mode` against the window of `self` that starts
    /// at 0-indexed `offset`. The window must fit inside `self`.
    pub fn fits_at(&self, t: &BitString, offset: usize, mode: Mode) -> bool {
        debug_assert!(offset + t.len <= self.len);
        t.words.iter().enumerate().all(|(k, &tw)| {
            let sw = self.word_at(offset + k * WORD);
            match mode {
                Mode::Domination => tw & !sw == 0,
                Mode::Orthogonality => tw & sw == 0,
            }
        })
    }
}

/// Positionwise check of `t` against host `s`.
pub fn check_pair(s: &BitString, t: &BitString, mode: Mode) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(s.fits_at(t, 0, mode))
}

/// Palindromic tag `1 . nb . ~nb . (~nb)^R . nb^R . 1` of length `4q + 2`,
/// where `nb` is the MSB-first `q`-bit encoding of `i - 1`.
pub fn id_encode(i: usize, q: u32) -> Result<BitString> {
    if q == 0 || q >= usize::BITS || i == 0 || i > (1usize << q) {
        return Err(Error::IdOutOfRange { index: i, width: q });
    }
    let v = i - 1;
    let nb = BitString::from_bits((0..q).rev().map(|k| (v >> k) & 1 == 1));
    let nb_bar = nb.complement();
    let mut out = BitString::from_bits([true]);
    out.extend_from(&nb);
    out.extend_from(&nb_bar);
    out.extend_from(&nb_bar.reverse());
    out.extend_from(&nb.reverse());
    out.push(true);
    Ok(out)
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = ParseError;

    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        let mut s = BitString::new();
        for (k, ch) in text.chars().enumerate() {
            match ch {
                '0' => s.push(false),
                '1' => s.push(true),
                _ => {
                    return Err(ParseError::new(
                        ParseCode::Bits,
                        0,
                        format!("unexpected character {ch:?} at column {}", k + 1),
                    ))
                }
            }
        }
        Ok(s)
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn transform_examples() {
        assert_eq!(bs("100").transform(Transform::Complement), bs("011"));
        assert_eq!(bs("100").transform(Transform::Reverse), bs("001"));
        assert_eq!(BitString::new().complement(), BitString::new());
    }

    #[test]
    fn palindromes() {
        let s = bs("1011001101");
        assert_eq!(s.reverse(), s);
        assert!(s.is_palindrome());
        assert!(!bs("10").is_palindrome());
        assert!(BitString::new().is_palindrome());
    }

    #[test]
    fn id_encoding_examples() {
        assert_eq!(id_encode(1, 2).unwrap(), bs("1001111001"));
        assert_eq!(id_encode(2, 2).unwrap(), bs("1011001101"));
        assert!(id_encode(5, 2).is_err());
        assert!(id_encode(0, 2).is_err());
        assert!(id_encode(1, 0).is_err());
    }

    #[test]
    fn id_encoding_is_injective_palindromic_tag() {
        for q in 1..=8u32 {
            let mut seen = std::collections::HashSet::new();
            for i in 1..=(1usize << q) {
                let id = id_encode(i, q).unwrap();
                assert_eq!(id.len(), 4 * q as usize + 2);
                assert!(id.is_palindrome());
                assert_eq!(id.get(1), Some(true));
                assert_eq!(id.get(id.len()), Some(true));
                assert!(id.count_ones() > 2);
                assert!(seen.insert(id));
            }
        }
    }

    #[test]
    fn pair_checks() {
        assert!(check_pair(&bs("101110101"), &bs("101010100"), Mode::Domination).unwrap());
        assert!(check_pair(&bs("10110"), &bs("01001"), Mode::Orthogonality).unwrap());
        assert!(!check_pair(&bs("10110"), &bs("01001"), Mode::Domination).unwrap());
        assert!(check_pair(&bs("10"), &bs("1"), Mode::Domination).is_err());
    }

    #[test]
    fn fits_across_word_boundaries() {
        let mut s = BitString::zeros(200);
        let t = BitString::ones(70);
        assert!(s.fits_at(&t, 65, Mode::Orthogonality));
        s = BitString::from_bits((0..200).map(|i| (65..135).contains(&i)));
        assert!(s.fits_at(&t, 65, Mode::Domination));
        assert!(!s.fits_at(&t, 64, Mode::Domination));
        assert!(!s.fits_at(&t, 66, Mode::Domination));
    }

    #[test]
    fn one_indexed_access() {
        let s = bs("100");
        assert_eq!(s.get(0), None);
        assert_eq!(s.get(1), Some(true));
        assert_eq!(s.get(3), Some(false));
        assert_eq!(s.get(4), None);
        assert_eq!(s.substring(2, 2).unwrap(), bs("00"));
        assert!(s.substring(3, 2).is_err());
    }

    fn arb_bits(max: usize) -> impl Strategy<Value = BitString> {
        prop::collection::vec(any::<bool>(), 0..=max).prop_map(BitString::from_bits)
    }

    proptest! {
        #[test]
        fn transforms_are_involutions(s in arb_bits(130)) {
            prop_assert_eq!(s.complement().complement(), s.clone());
            prop_assert_eq!(s.reverse().reverse(), s.clone());
            prop_assert_eq!(s.complement().len(), s.len());
            prop_assert_eq!(s.to_string().parse::<BitString>().unwrap(), s);
        }

        #[test]
        fn orthogonality_is_domination_of_complement(
            pair in (0usize..=100).prop_flat_map(|n| (
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), n),
            ))
        ) {
            let s = BitString::from_bits(pair.0);
            let t = BitString::from_bits(pair.1);
            prop_assert_eq!(
                check_pair(&s, &t, Mode::Orthogonality).unwrap(),
                check_pair(&s.complement(), &t, Mode::Domination).unwrap()
            );
            let naive = s.iter().zip(t.iter()).all(|(a, b)| a || !b);
            prop_assert_eq!(check_pair(&s, &t, Mode::Domination).unwrap(), naive);
        }
    }
}
