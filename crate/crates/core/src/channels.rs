// SPDX-License-Identifier: Apache-2.0

//! Single-error models for the binary asymmetric channel Z, the ternary
//! channel T and mixed products of them.
//!
//! A bit may decay 1 -> 0. A trit may move 0 -> 1, 0 -> 2, 1 -> 0 or 2 -> 0;
//! 1 <-> 2 never happens. Two words are compatible when their single-error
//! balls (which include the uncorrupted word) are disjoint.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::code::{ClassicalCode, Verdict};
use crate::error::{Error, Result};
use crate::words::{low_mask, shift_of, Alphabet, SymbolKind, Word};

/// Coordinate kinds of a product channel, in word order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChannelSpec {
    kinds: Vec<SymbolKind>,
}

impl ChannelSpec {
    pub fn new(kinds: Vec<SymbolKind>) -> Result<Self> {
        if kinds.is_empty() || kinds.len() > crate::words::MAX_WORD_LEN {
            return Err(Error::InvalidLength(kinds.len()));
        }
        Ok(ChannelSpec { kinds })
    }

    /// `Z^n`.
    pub fn z(n: usize) -> Result<Self> {
        ChannelSpec::new(vec![SymbolKind::Bit; n])
    }

    /// `T^m`.
    pub fn t(m: usize) -> Result<Self> {
        ChannelSpec::new(vec![SymbolKind::Trit; m])
    }

    /// `Z x T^m`, bit first.
    pub fn zt(m: usize) -> Result<Self> {
        let mut kinds = vec![SymbolKind::Bit];
        kinds.extend(std::iter::repeat(SymbolKind::Trit).take(m));
        ChannelSpec::new(kinds)
    }

    /// The channel that words of `alphabet` and length `len` travel over.
    pub fn for_alphabet(alphabet: Alphabet, len: usize) -> Result<Self> {
        ChannelSpec::new((0..len).map(|i| alphabet.kind_at(i)).collect())
    }

    pub fn kinds(&self) -> &[SymbolKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    pub fn bits(&self) -> usize {
        self.kinds.iter().filter(|k| **k == SymbolKind::Bit).count()
    }

    pub fn trits(&self) -> usize {
        self.len() - self.bits()
    }

    /// Pure trit channel.
    pub fn is_homogeneous_ternary(&self) -> bool {
        self.bits() == 0
    }

    /// Alphabet of words on this channel, if it is one the word type supports.
    pub fn alphabet(&self, bit_origin: usize) -> Option<Alphabet> {
        if self.trits() == 0 {
            Some(Alphabet::Binary)
        } else if self.bits() == 0 {
            Some(Alphabet::Ternary)
        } else if self.bits() == 1 && self.kinds[0] == SymbolKind::Bit {
            Some(Alphabet::GeneralizedTernary {
                bit_origin: u8::try_from(bit_origin).ok()?,
            })
        } else {
            None
        }
    }

    pub fn conforms(&self, word: &Word) -> bool {
        word.len() == self.len()
            && self
                .kinds
                .iter()
                .enumerate()
                .all(|(i, k)| word.kind_at(i) == *k)
    }

    fn check(&self, word: &Word) -> Result<()> {
        if self.conforms(word) {
            Ok(())
        } else {
            Err(Error::ChannelMismatch {
                word: word.to_string(),
                channel: self.to_string(),
            })
        }
    }

    /// Packed `0b01` mask over bit coordinates.
    pub(crate) fn bit_slots(&self) -> u64 {
        let len = self.len();
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == SymbolKind::Bit)
            .fold(0, |m, (i, _)| m | 1 << shift_of(len, i))
    }
}

impl fmt::Display for ChannelSpec {
    /// Run-length form such as `Z1T4` or `T5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.kinds.len() {
            let k = self.kinds[i];
            let run = self.kinds[i..].iter().take_while(|x| **x == k).count();
            let letter = if k == SymbolKind::Bit { 'Z' } else { 'T' };
            write!(f, "{letter}{run}")?;
            i += run;
        }
        Ok(())
    }
}

impl FromStr for ChannelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("malformed channel {s:?}"));
        let mut kinds = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let kind = match c.to_ascii_uppercase() {
                'Z' => SymbolKind::Bit,
                'T' => SymbolKind::Trit,
                _ => return Err(bad()),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let run: usize = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            kinds.extend(std::iter::repeat(kind).take(run));
        }
        ChannelSpec::new(kinds)
    }
}

/// Allowed single-symbol transition.
#[inline]
pub(crate) fn step_allowed(bit: bool, from: u64, to: u64) -> bool {
    if bit {
        from == 1 && to == 0
    } else {
        matches!((from, to), (0, 1) | (0, 2) | (1, 0) | (2, 0))
    }
}

/// Single-error ball of a packed word, the word itself first.
pub(crate) fn ball_packed(packed: u64, len: usize, bit_slots: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 + 2 * len);
    out.push(packed);
    for i in 0..len {
        let shift = shift_of(len, i);
        let bit = (bit_slots >> shift) & 1 == 1;
        let s = (packed >> shift) & 3;
        for to in 0..3u64 {
            if step_allowed(bit, s, to) {
                out.push((packed & !(3 << shift)) | (to << shift));
            }
        }
    }
    out
}

/// Ball-disjointness for two packed words on the same channel.
///
/// Differing in one coordinate is always fatal; three or more differences
/// can never be bridged by two single errors. Two differences at `i`, `j`
/// collide iff one word can step into the other at `i` while the other steps
/// back at `j`.
#[inline]
pub(crate) fn compatible_packed(a: u64, b: u64, len: usize, bit_slots: u64) -> bool {
    let diff = a ^ b;
    let positions = (diff | (diff >> 1)) & low_mask(len);
    match positions.count_ones() {
        0 | 1 => false,
        2 => {
            let lo = positions.trailing_zeros();
            let hi = 63 - positions.leading_zeros();
            let sym = |w: u64, s: u32| (w >> s) & 3;
            let bit = |s: u32| (bit_slots >> s) & 1 == 1;
            let cross = |x: u64, y: u64| {
                step_allowed(bit(lo), sym(x, lo), sym(y, lo))
                    && step_allowed(bit(hi), sym(y, hi), sym(x, hi))
            };
            !(cross(a, b) || cross(b, a))
        }
        _ => true,
    }
}

/// The word plus every word reachable by one allowed crossover, sorted.
pub fn error_ball(word: &Word, channel: &ChannelSpec) -> Result<Vec<Word>> {
    channel.check(word)?;
    let mut out: Vec<Word> = ball_packed(word.packed(), word.len(), channel.bit_slots())
        .into_iter()
        .map(|p| Word::from_packed_unchecked(word.alphabet(), word.len(), p))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// True iff the single-error balls of `a` and `b` are disjoint.
pub fn compatible(a: &Word, b: &Word, channel: &ChannelSpec) -> Result<bool> {
    channel.check(a)?;
    channel.check(b)?;
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: a.alphabet(),
            found: b.alphabet(),
        });
    }
    Ok(compatible_packed(
        a.packed(),
        b.packed(),
        a.len(),
        channel.bit_slots(),
    ))
}

/// Two code words whose balls meet, and a received word both can produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecWitness {
    pub first: Word,
    pub second: Word,
    pub shared: Word,
}

/// Single-error correction over `channel`: all balls pairwise disjoint.
pub fn verify_sec(code: &ClassicalCode, channel: &ChannelSpec) -> Result<Verdict<SecWitness>> {
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let slots = channel.bit_slots();
    for (idx, w) in code.words().iter().enumerate() {
        channel.check(w)?;
        for p in ball_packed(w.packed(), w.len(), slots) {
            match owner.get(&p) {
                Some(&other) if other != idx => {
                    return Ok(Verdict::Fail(SecWitness {
                        first: code.words()[other],
                        second: *w,
                        shared: Word::from_packed_unchecked(w.alphabet(), w.len(), p),
                    }));
                }
                _ => {
                    owner.insert(p, idx);
                }
            }
        }
    }
    Ok(Verdict::Pass)
}
