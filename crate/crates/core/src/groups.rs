// SPDX-License-Identifier: Apache-2.0

//! Finite abelian groups as direct sums of cyclic factors, and the
//! group-equation constructions of binary single-asymmetric-error codes:
//! Constantin-Rao codes, Varshamov-Tenengol'ts codes and shortened VT codes.

use std::fmt;

use num_integer::Integer;

use crate::code::{ClassicalCode, CodeMeta};
use crate::error::{Error, Result};
use crate::words::{Pairing, MAX_WORD_LEN};

/// Lengths up to this are built by full enumeration of `2^n` words.
pub const MAX_EAGER_LEN: usize = 20;

/// Direct sum of cyclic groups `Z_{f1} + Z_{f2} + ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

/// Residue tuple, one entry per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u32>);

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("no factors".into()));
        }
        if let Some(f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidGroup(format!("factor {f} < 2")));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &f| acc.checked_mul(f as u64))
            .filter(|&o| o <= u32::MAX as u64);
        if order.is_none() {
            return Err(Error::InvalidGroup("order overflows".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(order: u32) -> Result<Self> {
        AbelianGroup::new(vec![order])
    }

    /// `Z_p` repeated `n_p` times for each prime power `p^{n_p}` dividing
    /// `order`, factors ascending.
    pub fn canonical(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidGroup(format!("order {order} < 2")));
        }
        let mut factors = Vec::new();
        let mut rest = order;
        let mut p = 2;
        while p * p <= rest {
            while rest % p == 0 {
                factors.push(p);
                rest /= p;
            }
            p += 1;
        }
        if rest > 1 {
            factors.push(rest);
        }
        AbelianGroup::new(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> u32 {
        self.factors.iter().product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.factors.len() && g.0.iter().zip(&self.factors).all(|(x, f)| x < f)
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ElementMismatch {
                element: g.0.clone(),
                factors: self.factors.clone(),
            })
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((x, y), f)| (x + y) % f)
                .collect(),
        ))
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(GroupElement(
            g.0.iter()
                .zip(&self.factors)
                .map(|(x, f)| (f - x) % f)
                .collect(),
        ))
    }

    /// Least `k >= 1` with `k * g` the identity.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(g.0
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| (f / x.gcd(&f)) as u64)
            .fold(1, |acc, o| acc.lcm(&o)))
    }

    /// Mixed-radix index, first factor most significant.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        self.check(g)?;
        Ok(g.0
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &f)| acc * f as usize + x as usize))
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut out = vec![0; self.factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index % f as usize) as u32;
            index /= f as usize;
        }
        GroupElement(out)
    }

    /// All elements in lexicographic mixed-radix order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Non-identity elements in lexicographic order: the default coordinate
    /// labels of a CR code.
    pub fn non_identity_elements(&self) -> Vec<GroupElement> {
        self.elements().skip(1).collect()
    }

    /// Sum of every element of the group.
    pub fn sum_of_elements(&self) -> GroupElement {
        // Each residue of Z_f appears order/f times in its component.
        let order = self.order() as u64;
        GroupElement(
            self.factors
                .iter()
                .map(|&f| {
                    let f64_ = f as u64;
                    let per = order / f64_;
                    ((per % f64_) * ((f64_ * (f64_ - 1) / 2) % f64_) % f64_) as u32
                })
                .collect(),
        )
    }

    /// Addition table over element indices.
    fn add_table(&self) -> Vec<u32> {
        let n = self.order() as usize;
        let elems: Vec<GroupElement> = self.elements().collect();
        let mut table = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let s = GroupElement(
                    a.0.iter()
                        .zip(&b.0)
                        .zip(&self.factors)
                        .map(|((x, y), f)| (x + y) % f)
                        .collect(),
                );
                table[i * n + j] = self.index_of(&s).unwrap_or(0) as u32;
            }
        }
        table
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|p| format!("Z{p}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Words `x` of length `weights.len()` with `sum x_i * weights[i] == target`,
/// where addition is given by `table` over `order` element indices. Streams
/// in ascending bitmask order.
struct GroupEquationWords {
    table: Vec<u32>,
    order: usize,
    weights: Vec<u32>,
    target: u32,
    next: u64,
    end: u64,
}

impl Iterator for GroupEquationWords {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let n = self.weights.len();
        while self.next < self.end {
            let x = self.next;
            self.next += 1;
            let mut s = 0u32;
            for (i, &w) in self.weights.iter().enumerate() {
                if (x >> (n - 1 - i)) & 1 == 1 {
                    s = self.table[s as usize * self.order + w as usize];
                }
            }
            if s == self.target {
                return Some(x);
            }
        }
        None
    }
}

fn equation_words(
    table: Vec<u32>,
    order: usize,
    weights: Vec<u32>,
    target: u32,
) -> Result<GroupEquationWords> {
    if weights.is_empty() || weights.len() > MAX_WORD_LEN {
        return Err(Error::InvalidLength(weights.len()));
    }
    Ok(GroupEquationWords {
        end: 1u64 << weights.len(),
        table,
        order,
        weights,
        target,
        next: 0,
    })
}

/// Eager enumeration via subset sums, one table lookup per word.
fn equation_code(table: &[u32], order: usize, weights: &[u32], target: u32) -> Result<Vec<u64>> {
    let n = weights.len();
    if n == 0 || n > MAX_WORD_LEN {
        return Err(Error::InvalidLength(n));
    }
    if n > MAX_EAGER_LEN {
        return Ok(equation_words(table.to_vec(), order, weights.to_vec(), target)?.collect());
    }
    let mut sums = vec![0u32; 1 << n];
    let mut out = Vec::new();
    for x in 1usize..1 << n {
        let low = x.trailing_zeros() as usize;
        let coord = n - 1 - low;
        sums[x] = table[sums[x & (x - 1)] as usize * order + weights[coord] as usize];
    }
    for (x, &s) in sums.iter().enumerate() {
        if s == target {
            out.push(x as u64);
        }
    }
    Ok(out)
}

/// Bitmask words of the CR code `C_g` with coordinate `i` labelled by
/// `elements[i]`, streamed without materializing the code.
pub fn cr_words(
    group: &AbelianGroup,
    elements: &[GroupElement],
    g: &GroupElement,
) -> Result<impl Iterator<Item = u64>> {
    let weights = elements
        .iter()
        .map(|e| group.index_of(e).map(|i| i as u32))
        .collect::<Result<Vec<_>>>()?;
    let target = group.index_of(g)? as u32;
    equation_words(group.add_table(), group.order() as usize, weights, target)
}

/// Constantin-Rao code `C_g = { x : sum x_i g_i = g }` with coordinates
/// labelled by the non-identity elements in lexicographic order.
pub fn cr_code(group: &AbelianGroup, g: &GroupElement) -> Result<ClassicalCode> {
    cr_code_with_elements(group, &group.non_identity_elements(), g)
}

/// CR code with an explicit coordinate labelling. Any labelling by the
/// non-identity elements gives a permutation-equivalent code.
pub fn cr_code_with_elements(
    group: &AbelianGroup,
    elements: &[GroupElement],
    g: &GroupElement,
) -> Result<ClassicalCode> {
    let weights = elements
        .iter()
        .map(|e| group.index_of(e).map(|i| i as u32))
        .collect::<Result<Vec<_>>>()?;
    let target = group.index_of(g)? as u32;
    let bits = equation_code(&group.add_table(), group.order() as usize, &weights, target)?;
    let n = elements.len();
    let code = ClassicalCode::from_bits(n, bits)?;
    let pairing = negation_pairing(group, elements)?;
    Ok(code.with_meta(CodeMeta {
        construction: format!("cr {group} g={}", fmt_element(g)),
        channel: None,
        pairing,
        note: None,
    }))
}

/// Pairing of coordinates whose labels are mutual inverses, when every
/// label's inverse is another label (odd group order). Under it `C_0` has
/// ternary form.
pub fn negation_pairing(
    group: &AbelianGroup,
    elements: &[GroupElement],
) -> Result<Option<Pairing>> {
    if group.order() % 2 == 0 {
        return Ok(None);
    }
    let mut used = vec![false; elements.len()];
    let mut pairs = Vec::new();
    for i in 0..elements.len() {
        if used[i] {
            continue;
        }
        let inv = group.neg(&elements[i])?;
        let Some(j) = (i + 1..elements.len()).find(|&j| !used[j] && elements[j] == inv) else {
            return Ok(None);
        };
        used[i] = true;
        used[j] = true;
        pairs.push((i, j));
    }
    Pairing::new(elements.len(), pairs, None).map(Some)
}

fn fmt_element(g: &GroupElement) -> String {
    let parts: Vec<String> = g.0.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// Varshamov-Tenengol'ts code `{ x : sum i x_i = g mod n+1 }`, 1-based `i`.
pub fn vt_code(n: usize, g: u32) -> Result<ClassicalCode> {
    if !(2..=MAX_WORD_LEN).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "VT length {n} out of range"
        )));
    }
    let modulus = n as u32 + 1;
    if g >= modulus {
        return Err(Error::InvalidParameter(format!(
            "g={g} must be < {modulus}"
        )));
    }
    let table = cyclic_table(modulus);
    let weights: Vec<u32> = (1..=n as u32).collect();
    let bits = equation_code(&table, modulus as usize, &weights, g)?;
    let code = ClassicalCode::from_bits(n, bits)?;
    Ok(code.with_meta(CodeMeta {
        construction: format!("vt n={n} g={g}"),
        channel: None,
        pairing: Some(Pairing::canonical(n)?),
        note: None,
    }))
}

/// VT code of length `n + 1` modulo `n + 2` with odd coordinate `r` deleted:
/// `{ x : sum_{i != r} i x_i = (n + 2 - r) / 2 mod n + 2 }`. For `n = 4k+1`
/// this is self-complementary.
pub fn shortened_vt(n: usize, r: usize) -> Result<ClassicalCode> {
    if !(2..=MAX_WORD_LEN).contains(&n) || n % 4 != 1 {
        return Err(Error::InvalidParameter(format!(
            "shortened VT needs n = 1 mod 4, got {n}"
        )));
    }
    if r % 2 == 0 || r < 1 || r > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "r={r} must be odd and in 1..={}",
            n + 1
        )));
    }
    let modulus = n as u32 + 2;
    let target = ((n + 2 - r) / 2) as u32 % modulus;
    let labels: Vec<u32> = (1..=n as u32 + 1).filter(|&i| i as usize != r).collect();
    let bits = equation_code(&cyclic_table(modulus), modulus as usize, &labels, target)?;
    let code = ClassicalCode::from_bits(n, bits)?;
    // Original coordinate i pairs with n + 2 - i; the partner of r stays a bit.
    let position = |orig: usize| labels.iter().position(|&l| l as usize == orig);
    let mut pairs = Vec::new();
    let mut unpaired = None;
    for orig in 1..=n + 1 {
        if orig == r {
            continue;
        }
        let partner = n + 2 - orig;
        if partner == r {
            unpaired = position(orig);
        } else if orig < partner {
            if let (Some(a), Some(b)) = (position(orig), position(partner)) {
                pairs.push((a, b));
            }
        }
    }
    let pairing = Pairing::new(n, pairs, unpaired).ok();
    Ok(code.with_meta(CodeMeta {
        construction: format!("svt n={n} r={r}"),
        channel: None,
        pairing,
        note: None,
    }))
}

fn cyclic_table(modulus: u32) -> Vec<u32> {
    let m = modulus as usize;
    (0..m * m).map(|k| ((k / m + k % m) % m) as u32).collect()
}

/// Largest self-complementary code the group constructions give at length `n`:
/// even `n` uses `C_0` over the canonical group; `n = 4k+3` takes the larger
/// of that and `V_{(n+1)/4}` (VT on ties); `n = 4k+1` scans every odd deleted
/// coordinate of the shortened VT code (smallest `r` on ties).
pub fn self_complementary_construction(n: usize) -> Result<ClassicalCode> {
    if !(2..=MAX_WORD_LEN - 1).contains(&n) {
        return Err(Error::InvalidParameter(format!("length {n} out of range")));
    }
    let group = AbelianGroup::canonical(n as u32 + 1)?;
    let code = match n % 4 {
        0 | 2 => cr_code(&group, &group.identity())?,
        3 => {
            let cr = cr_code(&group, &group.identity())?;
            let vt = vt_code(n, (n as u32 + 1) / 4)?;
            if vt.size() >= cr.size() {
                vt
            } else {
                cr
            }
        }
        _ => {
            let mut best: Option<ClassicalCode> = None;
            for r in (1..=n + 1).step_by(2) {
                let c = shortened_vt(n, r)?;
                if best.as_ref().map_or(true, |b| c.size() > b.size()) {
                    best = Some(c);
                }
            }
            best.ok_or_else(|| Error::InvalidParameter(format!("no odd coordinate for n={n}")))?
        }
    };
    Ok(code)
}
