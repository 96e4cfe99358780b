// SPDX-License-Identifier: Apache-2.0

//! Words over binary, ternary and mixed bit-by-trit alphabets, coordinate
//! pairings, and the pairwise ternarization maps between binary and ternary
//! words.
//!
//! A [`Word`] is packed two bits per symbol into a `u64`, first symbol in the
//! most significant occupied slot, so that numeric order of the packed value
//! coincides with lexicographic order of the digit string.

use std::fmt;

use crate::error::{Error, Result};

/// Longest word that fits the packed representation.
pub const MAX_WORD_LEN: usize = 32;

/// Kind of a single coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    Bit,
    Trit,
}

impl SymbolKind {
    pub fn radix(self) -> u8 {
        match self {
            SymbolKind::Bit => 2,
            SymbolKind::Trit => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Binary,
    Ternary,
    /// One bit followed by trits. `bit_origin` is the 0-based coordinate of the
    /// binary word the bit was taken from (the unpaired coordinate).
    GeneralizedTernary {
        bit_origin: u8,
    },
}

impl Alphabet {
    pub fn kind_at(self, position: usize) -> SymbolKind {
        match self {
            Alphabet::Binary => SymbolKind::Bit,
            Alphabet::Ternary => SymbolKind::Trit,
            Alphabet::GeneralizedTernary { .. } if position == 0 => SymbolKind::Bit,
            Alphabet::GeneralizedTernary { .. } => SymbolKind::Trit,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Binary => "binary",
            Alphabet::Ternary => "ternary",
            Alphabet::GeneralizedTernary { .. } => "generalized-ternary",
        }
    }
}

/// `0b01` in every occupied symbol slot of a word of length `len`.
#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 32 {
        0x5555_5555_5555_5555
    } else {
        0x5555_5555_5555_5555 & ((1u64 << (2 * len)) - 1)
    }
}

#[inline]
pub(crate) fn shift_of(len: usize, position: usize) -> u32 {
    (2 * (len - 1 - position)) as u32
}

/// A fixed-length string of bits and/or trits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    len: u8,
    packed: u64,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: &[u8]) -> Result<Self> {
        let len = symbols.len();
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        if let Alphabet::GeneralizedTernary { .. } = alphabet {
            if len < 2 {
                return Err(Error::InvalidLength(len));
            }
        }
        let mut packed = 0u64;
        for (position, &symbol) in symbols.iter().enumerate() {
            if symbol >= alphabet.kind_at(position).radix() {
                return Err(Error::InvalidSymbol {
                    symbol,
                    position,
                    alphabet,
                });
            }
            packed = (packed << 2) | symbol as u64;
        }
        Ok(Word {
            alphabet,
            len: len as u8,
            packed,
        })
    }

    pub fn binary(symbols: &[u8]) -> Result<Self> {
        Word::new(Alphabet::Binary, symbols)
    }

    pub fn ternary(symbols: &[u8]) -> Result<Self> {
        Word::new(Alphabet::Ternary, symbols)
    }

    /// Generalized-ternary word, bit first.
    pub fn generalized(bit_origin: usize, symbols: &[u8]) -> Result<Self> {
        let bit_origin = u8::try_from(bit_origin)
            .map_err(|_| Error::InvalidPairing(format!("bit origin {bit_origin} out of range")))?;
        Word::new(Alphabet::GeneralizedTernary { bit_origin }, symbols)
    }

    /// Binary word from the low `len` bits of `bits`, coordinate 0 in bit `len - 1`.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        Ok(Word::from_bits_unchecked(bits, len))
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        let mut packed = 0u64;
        for position in 0..len {
            if (bits >> position) & 1 == 1 {
                packed |= 1 << (2 * position);
            }
        }
        Word {
            alphabet: Alphabet::Binary,
            len: len as u8,
            packed,
        }
    }

    #[inline]
    pub(crate) fn from_packed_unchecked(alphabet: Alphabet, len: usize, packed: u64) -> Self {
        Word {
            alphabet,
            len: len as u8,
            packed,
        }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(position, c)| {
                c.to_digit(10)
                    .and_then(|d| u8::try_from(d).ok())
                    .ok_or(Error::InvalidSymbol {
                        symbol: u8::try_from(c as u32).unwrap_or(u8::MAX),
                        position,
                        alphabet,
                    })
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(alphabet, &symbols)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have at least one symbol.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn packed(&self) -> u64 {
        self.packed
    }

    #[inline]
    pub fn symbol(&self, position: usize) -> u8 {
        ((self.packed >> shift_of(self.len(), position)) & 3) as u8
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.symbol(i))
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.symbols().collect()
    }

    pub fn kind_at(&self, position: usize) -> SymbolKind {
        self.alphabet.kind_at(position)
    }

    /// Bitmask form of a binary word (coordinate 0 in bit `len - 1`).
    pub fn to_bits(&self) -> Option<u64> {
        (self.alphabet == Alphabet::Binary).then(|| {
            let mut bits = 0u64;
            for position in 0..self.len() {
                if (self.packed >> (2 * position)) & 1 == 1 {
                    bits |= 1 << position;
                }
            }
            bits
        })
    }

    /// Packed `0b01` mask over the slots holding bits.
    #[inline]
    pub(crate) fn bit_slots(&self) -> u64 {
        match self.alphabet {
            Alphabet::Binary => low_mask(self.len()),
            Alphabet::Ternary => 0,
            Alphabet::GeneralizedTernary { .. } => 1 << shift_of(self.len(), 0),
        }
    }

    /// Bits flip; trits map d to (3 - d) mod 3.
    pub fn complement(&self) -> Word {
        let bits = self.bit_slots();
        let trits = low_mask(self.len()) & !bits;
        let p = self.packed;
        let swapped = ((p & trits) << 1) | ((p >> 1) & trits);
        Word {
            packed: (p ^ bits) & bits | swapped,
            ..*self
        }
    }

    /// Number of trit coordinates equal to zero.
    pub fn zero_trits(&self) -> u32 {
        let trits = low_mask(self.len()) & !self.bit_slots();
        let nonzero = (self.packed | (self.packed >> 1)) & trits;
        trits.count_ones() - nonzero.count_ones()
    }

    /// Number of coordinates where the two words differ.
    pub fn hamming_distance(&self, other: &Word) -> usize {
        let diff = self.packed ^ other.packed;
        ((diff | (diff >> 1)) & low_mask(self.len())).count_ones() as usize
    }

    pub fn with_symbol(&self, position: usize, symbol: u8) -> Result<Word> {
        if position >= self.len() {
            return Err(Error::LengthMismatch(position, self.len()));
        }
        if symbol >= self.kind_at(position).radix() {
            return Err(Error::InvalidSymbol {
                symbol,
                position,
                alphabet: self.alphabet,
            });
        }
        let shift = shift_of(self.len(), position);
        Ok(Word {
            packed: (self.packed & !(3 << shift)) | ((symbol as u64) << shift),
            ..*self
        })
    }

    /// Cyclic left shift of a binary or pure ternary word by `k` positions.
    pub fn rotate_left(&self, k: usize) -> Word {
        let len = self.len();
        let k = k % len;
        if k == 0 {
            return *self;
        }
        let width = 2 * len as u32;
        let mask = if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        let s = 2 * k as u32;
        Word {
            packed: ((self.packed << s) | (self.packed >> (width - s))) & mask,
            ..*self
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Count of positions with `x_i = 0` and `y_i = 1`.
#[inline]
pub fn one_way_count(x: u64, y: u64) -> u32 {
    (!x & y).count_ones()
}

/// Asymmetric distance of two bitmask words.
#[inline]
pub fn asymmetric_distance_bits(x: u64, y: u64) -> u32 {
    one_way_count(x, y).max(one_way_count(y, x))
}

pub fn asymmetric_distance(x: &Word, y: &Word) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    for w in [x, y] {
        if w.alphabet() != Alphabet::Binary {
            return Err(Error::AlphabetMismatch {
                expected: Alphabet::Binary,
                found: w.alphabet(),
            });
        }
    }
    Ok(asymmetric_distance_bits(
        x.to_bits().unwrap_or_default(),
        y.to_bits().unwrap_or_default(),
    ))
}

/// Disjoint coordinate pairs covering a binary length, with at most one
/// coordinate left over (exactly one for odd lengths). Indices are 0-based;
/// the textual form is 1-based.
///
/// Within a pair `(i, j)` order matters: `x_i x_j = 01` ternarizes to 1 and
/// `10` to 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    len: usize,
    pairs: Vec<(usize, usize)>,
    unpaired: Option<usize>,
}

impl Pairing {
    pub fn new(len: usize, pairs: Vec<(usize, usize)>, unpaired: Option<usize>) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        if unpaired.is_some() != (len % 2 == 1) {
            return Err(Error::InvalidPairing(format!(
                "length {len} needs {} unpaired coordinate",
                if len % 2 == 1 { "one" } else { "no" }
            )));
        }
        let mut seen = vec![false; len];
        for &i in pairs
            .iter()
            .flat_map(|(a, b)| [a, b])
            .chain(unpaired.iter())
        {
            if i >= len {
                return Err(Error::InvalidPairing(format!(
                    "index {} out of range",
                    i + 1
                )));
            }
            if seen[i] {
                return Err(Error::InvalidPairing(format!("index {} used twice", i + 1)));
            }
            seen[i] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPairing(format!(
                "index {} not covered",
                missing + 1
            )));
        }
        Ok(Pairing {
            len,
            pairs,
            unpaired,
        })
    }

    /// `{i, n - i + 1}`, leaving the middle coordinate for odd `n`.
    pub fn canonical(len: usize) -> Result<Self> {
        let pairs = (0..len / 2).map(|i| (i, len - 1 - i)).collect();
        Pairing::new(len, pairs, (len % 2 == 1).then_some(len / 2))
    }

    /// `{1,2},{3,4},...` for even lengths; for odd lengths coordinate 1 is
    /// unpaired and `{2,3},{4,5},...` follow.
    pub fn sequential(len: usize) -> Result<Self> {
        let offset = len % 2;
        let pairs = (0..len / 2)
            .map(|t| (offset + 2 * t, offset + 2 * t + 1))
            .collect();
        Pairing::new(len, pairs, (offset == 1).then_some(0))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn unpaired(&self) -> Option<usize> {
        self.unpaired
    }

    /// Alphabet of the ternarized words.
    pub fn ternary_alphabet(&self) -> Alphabet {
        match self.unpaired {
            None => Alphabet::Ternary,
            Some(u) => Alphabet::GeneralizedTernary {
                bit_origin: u as u8,
            },
        }
    }

    /// Length of the ternarized words.
    pub fn ternary_len(&self) -> usize {
        self.pairs.len() + usize::from(self.unpaired.is_some())
    }

    /// Parse `"1-8,2-7,3-6,4-5"` plus an optional unpaired index, 1-based.
    pub fn parse(len: usize, pairs: &str, unpaired: Option<usize>) -> Result<Self> {
        let mut out = Vec::new();
        for item in pairs.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::InvalidPairing(format!("malformed pair {item:?}")))?;
            let parse = |s: &str| -> Result<usize> {
                match s.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::InvalidPairing(format!("malformed index {s:?}"))),
                }
            };
            out.push((parse(a)?, parse(b)?));
        }
        let unpaired = match unpaired {
            Some(0) => return Err(Error::InvalidPairing("unpaired index is 1-based".into())),
            Some(u) => Some(u - 1),
            None => None,
        };
        Pairing::new(len, out, unpaired)
    }

    /// Pair list in 1-based text form, e.g. `1-8,2-7`.
    pub fn pairs_text(&self) -> String {
        self.pairs
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Ternarize a bitmask word. The bit (if any) is the first symbol.
    pub(crate) fn ternarize_bits(&self, bits: u64) -> u64 {
        let bit = |i: usize| (bits >> (self.len - 1 - i)) & 1;
        let mut packed = self.unpaired.map_or(0, bit);
        for &(i, j) in &self.pairs {
            let trit = match (bit(i), bit(j)) {
                (0, 1) => 1,
                (1, 0) => 2,
                _ => 0,
            };
            packed = (packed << 2) | trit;
        }
        packed
    }

    /// All bitmask expansions of a packed (generalized-)ternary word, ascending.
    pub(crate) fn binarize_packed(&self, packed: u64) -> Vec<u64> {
        let tlen = self.ternary_len();
        let symbol = |t: usize| (packed >> (2 * (tlen - 1 - t))) & 3;
        let set = |bits: &mut u64, i: usize| *bits |= 1 << (self.len - 1 - i);
        let mut base = 0u64;
        let offset = usize::from(self.unpaired.is_some());
        if let Some(u) = self.unpaired {
            if symbol(0) == 1 {
                set(&mut base, u);
            }
        }
        let mut zero_pairs = Vec::new();
        for (t, &(i, j)) in self.pairs.iter().enumerate() {
            match symbol(t + offset) {
                1 => set(&mut base, j),
                2 => set(&mut base, i),
                _ => {
                    let mut both = 0;
                    set(&mut both, i);
                    set(&mut both, j);
                    zero_pairs.push(both);
                }
            }
        }
        let mut out: Vec<u64> = (0u64..1 << zero_pairs.len())
            .map(|choice| {
                zero_pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| (choice >> k) & 1 == 1)
                    .fold(base, |acc, (_, m)| acc | m)
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pairs_text())?;
        if let Some(u) = self.unpaired {
            write!(f, " (unpaired {})", u + 1)?;
        }
        Ok(())
    }
}

/// Map a binary word pairwise: `{00, 11} -> 0`, `01 -> 1`, `10 -> 2`. With an
/// unpaired coordinate the result is generalized-ternary with that bit first.
pub fn ternarize(word: &Word, pairing: &Pairing) -> Result<Word> {
    let bits = word.to_bits().ok_or(Error::AlphabetMismatch {
        expected: Alphabet::Binary,
        found: word.alphabet(),
    })?;
    if word.len() != pairing.len() {
        return Err(Error::InvalidPairing(format!(
            "pairing covers {} coordinates, word has {}",
            pairing.len(),
            word.len()
        )));
    }
    Ok(Word::from_packed_unchecked(
        pairing.ternary_alphabet(),
        pairing.ternary_len(),
        pairing.ternarize_bits(bits),
    ))
}

/// Inverse image of [`ternarize`]: every zero trit expands to both `00` and
/// `11`, so the result has `2^z` words for `z` zero trits.
pub fn binarize(word: &Word, pairing: &Pairing) -> Result<Vec<Word>> {
    if word.alphabet() != pairing.ternary_alphabet() {
        return Err(Error::InvalidPairing(format!(
            "pairing produces {:?} words, got {:?}",
            pairing.ternary_alphabet(),
            word.alphabet()
        )));
    }
    if word.len() != pairing.ternary_len() {
        return Err(Error::InvalidPairing(format!(
            "pairing expects {} symbols, word has {}",
            pairing.ternary_len(),
            word.len()
        )));
    }
    Ok(pairing
        .binarize_packed(word.packed())
        .into_iter()
        .map(|bits| Word::from_bits_unchecked(bits, pairing.len()))
        .collect())
}
