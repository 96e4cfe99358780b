// SPDX-License-Identifier: Apache-2.0

//! Quantum amplitude-damping codes built from self-complementary classical
//! 1-codes, with exact verification of the single-AD-error conditions and the
//! Shor-Laflamme weight enumerator.
//!
//! Codewords are `|u> + |u~>` (unnormalized, squared norm 2). The lowering
//! operator `A = X + iY = 2|0><1|` and `Z` have real integer entries, so every
//! inner product below is an exact integer.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use crate::code::{ClassicalCode, Verdict};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// Default qubit cap for [`kl_verify`].
pub const KL_MAX_QUBITS: usize = 16;

/// Default qubit cap for [`weight_enumerator`].
pub const ENUMERATOR_MAX_QUBITS: usize = 10;

pub type Rational = Ratio<i128>;

/// `sign * sqrt(radicand)` with a non-negative rational radicand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub negative: bool,
    pub radicand: Ratio<i64>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd::sqrt(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Surd::sqrt(Ratio::from_integer(1))
    }

    pub fn sqrt(radicand: Ratio<i64>) -> Self {
        Surd {
            negative: false,
            radicand,
        }
    }

    pub fn mul(self, other: Surd) -> Surd {
        Surd {
            negative: self.negative != other.negative,
            radicand: self.radicand * other.radicand,
        }
    }

    /// Exact value when the radicand is a perfect rational square.
    pub fn to_rational(self) -> Option<Ratio<i64>> {
        let root = |v: i64| -> Option<i64> {
            let r = (v as f64).sqrt().round() as i64;
            (r.checked_mul(r) == Some(v)).then_some(r)
        };
        let num = root(*self.radicand.numer())?;
        let den = root(*self.radicand.denom())?;
        let v = Ratio::new(num, den);
        Some(if self.negative { -v } else { v })
    }

    pub fn to_f64(self) -> f64 {
        let v = (*self.radicand.numer() as f64 / *self.radicand.denom() as f64).sqrt();
        if self.negative {
            -v
        } else {
            v
        }
    }
}

pub type SurdMatrix = [[Surd; 2]; 2];

/// Single-qubit operators of the damping model: `A = X + iY`, its adjoint,
/// `Z`, and the Kraus pair at damping rate `epsilon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliLadderOps {
    pub epsilon: Ratio<i64>,
    pub lowering: [[i64; 2]; 2],
    pub raising: [[i64; 2]; 2],
    pub z: [[i64; 2]; 2],
    /// `diag(1, sqrt(1 - eps))`.
    pub a0: SurdMatrix,
    /// `sqrt(eps) |0><1|`.
    pub a1: SurdMatrix,
}

/// Kraus operators of the amplitude-damping channel at rate `epsilon`.
pub fn kraus(epsilon: Ratio<i64>) -> Result<PauliLadderOps> {
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    if epsilon < zero || epsilon > one {
        return Err(Error::InvalidParameter(format!(
            "damping rate {epsilon} outside [0, 1]"
        )));
    }
    let z = Surd::zero();
    Ok(PauliLadderOps {
        epsilon,
        lowering: [[0, 2], [0, 0]],
        raising: [[0, 0], [2, 0]],
        z: [[1, 0], [0, -1]],
        a0: [[Surd::one(), z], [z, Surd::sqrt(one - epsilon)]],
        a1: [[z, Surd::sqrt(epsilon)], [z, z]],
    })
}

impl PauliLadderOps {
    /// `sum_k A_k^dagger A_k`, evaluated exactly. `None` if some entry is not
    /// rational (cannot happen for real Kraus pairs of this shape).
    pub fn completeness(&self) -> Option<[[Ratio<i64>; 2]; 2]> {
        let mut out = [[Ratio::from_integer(0); 2]; 2];
        for m in [&self.a0, &self.a1] {
            for (r, row) in out.iter_mut().enumerate() {
                for (c, slot) in row.iter_mut().enumerate() {
                    for k in 0..2 {
                        *slot += m[k][r].mul(m[k][c]).to_rational()?;
                    }
                }
            }
        }
        Some(out)
    }

    /// `A^dagger A`, which equals `2 (I - Z)`.
    pub fn number_like(&self) -> [[i64; 2]; 2] {
        mat_mul(&self.raising, &self.lowering)
    }
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = (0..2).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    out
}

/// `(|u> + |u~>)/sqrt 2` for each complement pair of a self-complementary
/// binary 1-code.
#[derive(Clone, Debug)]
pub struct QuantumADCode {
    classical: ClassicalCode,
    n: usize,
    /// Lexicographically smaller member of each pair, as bitmasks.
    representatives: Vec<u64>,
}

impl QuantumADCode {
    pub fn classical(&self) -> &ClassicalCode {
        &self.classical
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Encoded dimension.
    pub fn k(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> Vec<Word> {
        self.representatives
            .iter()
            .map(|&b| Word::from_bits_unchecked(b, self.n))
            .collect()
    }

    /// Build without checking the classical code. Lets the verifier be run on
    /// codes that [`assemble`] would reject.
    pub fn assemble_unchecked(classical: &ClassicalCode) -> Result<Self> {
        let bits = classical.bits().ok_or(Error::AlphabetMismatch {
            expected: Alphabet::Binary,
            found: classical.alphabet(),
        })?;
        let n = classical.word_len();
        let mask = full_mask(n);
        let mut representatives: Vec<u64> = bits.iter().map(|&b| b.min(b ^ mask)).collect();
        representatives.sort_unstable();
        representatives.dedup();
        Ok(QuantumADCode {
            classical: classical.clone(),
            n,
            representatives,
        })
    }
}

impl fmt::Display for QuantumADCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}, 1]]AD", self.n, self.k())
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Check the classical preconditions and pair up codewords.
pub fn assemble(classical: &ClassicalCode) -> Result<QuantumADCode> {
    if classical.alphabet() != Alphabet::Binary {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::Binary,
            found: classical.alphabet(),
        });
    }
    if let Verdict::Fail(w) = classical.check_self_complementary() {
        return Err(Error::NotSelfComplementary(w));
    }
    if let Verdict::Fail((a, b)) = classical.check_one_code() {
        return Err(Error::NotOneCode(a, b));
    }
    QuantumADCode::assemble_unchecked(classical)
}

/// Which error-set product a violation was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KlCondition {
    /// `<psi_i| A_k^dagger A_l |psi_j>`.
    LoweringPair { k: usize, l: usize },
    /// `<psi_i| A_k |psi_j>`.
    Lowering { k: usize },
    /// `<psi_i| Z_k |psi_j>`.
    Phase { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlViolation {
    pub condition: KlCondition,
    /// Codeword indices (into the sorted representatives).
    pub i: usize,
    pub j: usize,
    /// Offending unnormalized value: the off-diagonal entry when `i != j`, or
    /// the diagonal entry that disagrees with codeword 0's.
    pub value: i64,
}

/// Result of [`kl_verify`]. Tables hold codeword 0's diagonal values for the
/// unnormalized states; divide by `norm_sq` for normalized ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KLReport {
    pub pass: bool,
    pub n: usize,
    pub k: usize,
    pub norm_sq: i64,
    pub lowering_pair: Vec<Vec<i64>>,
    pub lowering: Vec<i64>,
    pub phase: Vec<i64>,
    /// Every codeword has `<psi|Z_k|psi> = 0`.
    pub phase_diagonal_zero: bool,
    /// `c_kk = 2 (norm_sq - c'_k)` for every k, from `A^dagger A = 2(I - Z)`.
    pub ladder_identity_holds: bool,
    pub violation: Option<KlViolation>,
}

impl KLReport {
    pub fn normalized_lowering_pair(&self, k: usize, l: usize) -> Ratio<i64> {
        Ratio::new(self.lowering_pair[k][l], self.norm_sq)
    }
}

pub fn kl_verify(code: &QuantumADCode) -> Result<KLReport> {
    kl_verify_with_cap(code, KL_MAX_QUBITS)
}

/// Exact check of `<psi_i|E|psi_j> = c_E delta_ij` for `E` in
/// `{A_k^dagger A_l, A_k, Z_k}`, all `k, l`.
pub fn kl_verify_with_cap(code: &QuantumADCode, cap: usize) -> Result<KLReport> {
    let n = code.n;
    if n > cap {
        return Err(Error::QubitCapExceeded { n, cap });
    }
    let mask = full_mask(n);
    let reps = &code.representatives;
    let members = |u: u64| [u, u ^ mask];
    let bit = |x: u64, k: usize| (x >> (n - 1 - k)) & 1;
    let clear = |x: u64, k: usize| x & !(1 << (n - 1 - k));
    let norm_sq = 2i64;

    // A_l |psi_j> = sum over members y with y_l = 1 of 2 |y - e_l>.
    let lowered = |j: usize, l: usize| {
        members(reps[j])
            .into_iter()
            .filter(move |&y| bit(y, l) == 1)
            .map(move |y| clear(y, l))
    };

    let mut violation: Option<KlViolation> = None;
    let note = |v: KlViolation, slot: &mut Option<KlViolation>| {
        if slot.is_none() {
            *slot = Some(v);
        }
    };

    // (a) Off-diagonal: collect every lowered state by the basis word it hits.
    let mut hits: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
    for j in 0..reps.len() {
        for l in 0..n {
            for y in lowered(j, l) {
                hits.entry(y).or_default().push((j, l));
            }
        }
    }
    let mut off: HashMap<(usize, usize, usize, usize), i64> = HashMap::new();
    for entries in hits.values() {
        for &(i, k) in entries {
            for &(j, l) in entries {
                if i != j {
                    *off.entry((i, j, k, l)).or_default() += 4;
                }
            }
        }
    }
    if let Some((&(i, j, k, l), &value)) = off
        .iter()
        .filter(|(_, v)| **v != 0)
        .min_by_key(|(key, _)| **key)
    {
        note(
            KlViolation {
                condition: KlCondition::LoweringPair { k, l },
                i,
                j,
                value,
            },
            &mut violation,
        );
    }

    // (a) Diagonal, compared against codeword 0.
    let diag = |i: usize| -> Vec<Vec<i64>> {
        let mut t = vec![vec![0i64; n]; n];
        for (k, row) in t.iter_mut().enumerate() {
            for (l, slot) in row.iter_mut().enumerate() {
                let left: Vec<u64> = lowered(i, k).collect();
                *slot = lowered(i, l).filter(|y| left.contains(y)).count() as i64 * 4;
            }
        }
        t
    };
    let lowering_pair = if reps.is_empty() {
        vec![vec![0; n]; n]
    } else {
        diag(0)
    };
    for i in 1..reps.len() {
        if violation.is_some() {
            break;
        }
        let t = diag(i);
        'scan: for k in 0..n {
            for l in 0..n {
                if t[k][l] != lowering_pair[k][l] {
                    note(
                        KlViolation {
                            condition: KlCondition::LoweringPair { k, l },
                            i,
                            j: i,
                            value: t[k][l],
                        },
                        &mut violation,
                    );
                    break 'scan;
                }
            }
        }
    }

    // (b) <psi_i| A_k |psi_j>: lowered states landing on codeword members.
    let index: HashMap<u64, usize> = reps
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| members(u).map(|m| (m, i)))
        .collect();
    let mut single: HashMap<(usize, usize, usize), i64> = HashMap::new();
    for j in 0..reps.len() {
        for k in 0..n {
            for y in lowered(j, k) {
                if let Some(&i) = index.get(&y) {
                    *single.entry((i, j, k)).or_default() += 2;
                }
            }
        }
    }
    let lowering: Vec<i64> = (0..n)
        .map(|k| single.get(&(0, 0, k)).copied().unwrap_or(0))
        .collect();
    let off_single = single
        .iter()
        .filter(|(&(i, j, _), &v)| i != j && v != 0)
        .min_by_key(|(key, _)| **key);
    if let Some((&(i, j, k), &value)) = off_single {
        note(
            KlViolation {
                condition: KlCondition::Lowering { k },
                i,
                j,
                value,
            },
            &mut violation,
        );
    }
    'diag_b: for i in 1..reps.len() {
        for (k, &reference) in lowering.iter().enumerate() {
            let value = single.get(&(i, i, k)).copied().unwrap_or(0);
            if value != reference {
                note(
                    KlViolation {
                        condition: KlCondition::Lowering { k },
                        i,
                        j: i,
                        value,
                    },
                    &mut violation,
                );
                break 'diag_b;
            }
        }
    }

    // (c) <psi_i| Z_k |psi_j>. Distinct codewords have disjoint support, so
    // only the diagonal is nonzero in principle; evaluate it directly.
    let sign = |x: u64, k: usize| 1 - 2 * bit(x, k) as i64;
    let phase_of = |i: usize, k: usize| members(reps[i]).iter().map(|&x| sign(x, k)).sum::<i64>();
    let phase: Vec<i64> = (0..n)
        .map(|k| if reps.is_empty() { 0 } else { phase_of(0, k) })
        .collect();
    let mut phase_diagonal_zero = true;
    for i in 0..reps.len() {
        for k in 0..n {
            let v = phase_of(i, k);
            if v != 0 {
                phase_diagonal_zero = false;
            }
            if v != phase[k] {
                note(
                    KlViolation {
                        condition: KlCondition::Phase { k },
                        i,
                        j: i,
                        value: v,
                    },
                    &mut violation,
                );
            }
        }
    }

    let ladder_identity_holds = (0..n).all(|k| lowering_pair[k][k] == 2 * (norm_sq - phase[k]));

    Ok(KLReport {
        pass: violation.is_none(),
        n,
        k: reps.len(),
        norm_sq,
        lowering_pair,
        lowering,
        phase,
        phase_diagonal_zero,
        ladder_identity_holds,
        violation,
    })
}

/// Nonadditivity evidence from the weight enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Additivity {
    /// Some `A_d` is not an integer, which no stabilizer code allows.
    Nonadditive,
    /// All `A_d` are integers; nothing can be concluded.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub coefficients: Vec<Rational>,
    pub additivity: Additivity,
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

pub fn weight_enumerator(code: &QuantumADCode) -> Result<WeightEnumerator> {
    weight_enumerator_with_cap(code, ENUMERATOR_MAX_QUBITS)
}

/// Shor-Laflamme `A_d = K^-2 sum_{wt(E) = d} |Tr(P E)|^2`.
///
/// For `E = X^a Z^b` only `a = 0` or `a = 1...1` can map a codeword onto
/// itself, and then `Tr(P E) = f(b) = sum_u (-1)^{b.u}` over the pair
/// representatives when `|b|` is even (zero when odd). `a = 0` contributes to
/// weight `|b|`; `a = 1...1` always has weight `n`. `f` is a Walsh-Hadamard
/// transform of the representative indicator.
pub fn weight_enumerator_with_cap(code: &QuantumADCode, cap: usize) -> Result<WeightEnumerator> {
    let n = code.n;
    if n > cap {
        return Err(Error::QubitCapExceeded { n, cap });
    }
    let size = 1usize << n;
    let mut f = vec![0i64; size];
    for &u in &code.representatives {
        f[u as usize] += 1;
    }
    let mut h = 1;
    while h < size {
        for block in (0..size).step_by(2 * h) {
            for x in block..block + h {
                let (a, b) = (f[x], f[x + h]);
                f[x] = a + b;
                f[x + h] = a - b;
            }
        }
        h *= 2;
    }
    let mut sums = vec![0i128; n + 1];
    for (b, &value) in f.iter().enumerate() {
        let w = b.count_ones() as usize;
        if w % 2 == 1 {
            continue;
        }
        let sq = value as i128 * value as i128;
        sums[w] += sq;
        sums[n] += sq;
    }
    let k = code.k() as i128;
    let coefficients: Vec<Rational> = sums.into_iter().map(|s| Ratio::new(s, k * k)).collect();
    let additivity = if coefficients.iter().any(|c| !c.is_integer()) {
        Additivity::Nonadditive
    } else {
        Additivity::Inconclusive
    };
    Ok(WeightEnumerator {
        coefficients,
        additivity,
    })
}

/// Hamming-bound limits on `log2 K`: CSS-derived AD codes
/// `n - 1 - log2(n + 1)`, and depolarizing stabilizer codes `n - log2(3n + 1)`.
pub fn css_bounds(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n={n} < 2")));
    }
    let n = n as f64;
    Ok((n - 1.0 - (n + 1.0).log2(), n - (3.0 * n + 1.0).log2()))
}
