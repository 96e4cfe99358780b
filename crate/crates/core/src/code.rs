// SPDX-License-Identifier: Apache-2.0

//! Classical codes as duplicate-free sorted word sets, with the structural
//! checks used throughout: self-complementarity, the single-asymmetric-error
//! (1-code) property and ternary form.

use crate::channels::ChannelSpec;
use crate::error::{Error, Result};
use crate::words::{asymmetric_distance_bits, binarize, ternarize, Alphabet, Pairing, Word};

/// Outcome of a check that carries a counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CodeMeta {
    pub construction: String,
    pub channel: Option<ChannelSpec>,
    /// Pairing under which the code has (generalized) ternary form, or which
    /// expands a ternary code.
    pub pairing: Option<Pairing>,
    pub note: Option<String>,
}

/// A finite set of equal-length words, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    alphabet: Alphabet,
    len: usize,
    words: Vec<Word>,
    pub meta: CodeMeta,
}

impl ClassicalCode {
    pub fn new(
        alphabet: Alphabet,
        len: usize,
        words: impl IntoIterator<Item = Word>,
    ) -> Result<Self> {
        let mut words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            if w.len() != len {
                return Err(Error::LengthMismatch(len, w.len()));
            }
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet,
                    found: w.alphabet(),
                });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(ClassicalCode {
            alphabet,
            len,
            words,
            meta: CodeMeta::default(),
        })
    }

    /// Binary code from bitmask words.
    pub fn from_bits(len: usize, bits: impl IntoIterator<Item = u64>) -> Result<Self> {
        if len == 0 || len > crate::words::MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        ClassicalCode::new(
            Alphabet::Binary,
            len,
            bits.into_iter()
                .map(|b| Word::from_bits_unchecked(b & mask, len)),
        )
    }

    /// Parse whitespace-separated digit strings.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let words = text
            .split_whitespace()
            .map(|s| Word::parse(s, alphabet))
            .collect::<Result<Vec<_>>>()?;
        let len = words.first().map_or(0, Word::len);
        ClassicalCode::new(alphabet, len, words)
    }

    pub fn with_meta(mut self, meta: CodeMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn with_construction(mut self, construction: impl Into<String>) -> Self {
        self.meta.construction = construction.into();
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Word length in symbols.
    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }

    /// Bitmask view of a binary code, ascending.
    pub fn bits(&self) -> Option<Vec<u64>> {
        self.words.iter().map(Word::to_bits).collect()
    }

    pub fn check_self_complementary(&self) -> Verdict<Word> {
        match self.words.iter().find(|w| !self.contains(&w.complement())) {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail(*w),
        }
    }

    pub fn is_self_complementary(&self) -> bool {
        self.check_self_complementary().is_pass()
    }

    /// Every distinct pair at asymmetric distance at least 2. Non-binary
    /// codes fail with their first word paired with itself.
    pub fn check_one_code(&self) -> Verdict<(Word, Word)> {
        let Some(bits) = self.bits() else {
            let w = self.words.first().copied();
            return w.map_or(Verdict::Pass, |w| Verdict::Fail((w, w)));
        };
        match first_close_pair(&bits) {
            None => Verdict::Pass,
            Some((i, j)) => Verdict::Fail((self.words[i], self.words[j])),
        }
    }

    pub fn is_one_code(&self) -> bool {
        self.check_one_code().is_pass()
    }

    /// Image of a binary code under the pairwise ternarization.
    pub fn ternarize(&self, pairing: &Pairing) -> Result<ClassicalCode> {
        let words = self
            .words
            .iter()
            .map(|w| ternarize(w, pairing))
            .collect::<Result<Vec<_>>>()?;
        let mut code =
            ClassicalCode::new(pairing.ternary_alphabet(), pairing.ternary_len(), words)?;
        code.meta.pairing = Some(pairing.clone());
        Ok(code)
    }

    /// Full binary expansion of a ternary or generalized-ternary code.
    pub fn binarize(&self, pairing: &Pairing) -> Result<ClassicalCode> {
        let mut words = Vec::new();
        for w in &self.words {
            words.extend(binarize(w, pairing)?);
        }
        let mut code = ClassicalCode::new(Alphabet::Binary, pairing.len(), words)?;
        code.meta = CodeMeta {
            construction: self.meta.construction.clone(),
            channel: None,
            pairing: Some(pairing.clone()),
            note: self.meta.note.clone(),
        };
        Ok(code)
    }

    /// True iff binarizing the ternarized code gives back the code.
    pub fn has_ternary_form(&self, pairing: &Pairing) -> Result<bool> {
        let round = self.ternarize(pairing)?.binarize(pairing)?;
        Ok(round.words == self.words)
    }

    /// Binary expansion size of a (generalized-)ternary code, without
    /// materializing it.
    pub fn expanded_size(&self) -> u64 {
        self.words.iter().map(|w| 1u64 << w.zero_trits()).sum()
    }
}

/// First index pair `(i, j)`, `i < j`, with asymmetric distance below 2.
pub(crate) fn first_close_pair(bits: &[u64]) -> Option<(usize, usize)> {
    // Words with asymmetric distance <= 1 differ in at most two coordinates,
    // so hash lookups over the radius-2 neighbourhood suffice when the code
    // is large.
    if bits.len() < 256 {
        for i in 0..bits.len() {
            for j in i + 1..bits.len() {
                if asymmetric_distance_bits(bits[i], bits[j]) < 2 {
                    return Some((i, j));
                }
            }
        }
        return None;
    }
    let width = 64 - bits.iter().fold(0u64, |a, &b| a | b).leading_zeros() as usize;
    let index: std::collections::HashMap<u64, usize> =
        bits.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut best: Option<(usize, usize)> = None;
    let mut consider = |i: usize, other: u64| {
        if let Some(&j) = index.get(&other) {
            if j != i && asymmetric_distance_bits(bits[i], other) < 2 {
                let pair = (i.min(j), i.max(j));
                if best.map_or(true, |b| pair < b) {
                    best = Some(pair);
                }
            }
        }
    };
    let width = width.max(1);
    for (i, &b) in bits.iter().enumerate() {
        for p in 0..width {
            consider(i, b ^ (1 << p));
            for q in p + 1..width {
                let other = b ^ (1 << p) ^ (1 << q);
                // Distance <= 1 with two flips needs one flip each way.
                if ((b >> p) & 1) != ((b >> q) & 1) {
                    consider(i, other);
                }
            }
        }
    }
    best
}
