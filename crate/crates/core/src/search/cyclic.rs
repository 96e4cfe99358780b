// SPDX-License-Identifier: Apache-2.0

//! Codes closed under cyclic shift and complement.

use std::collections::BTreeSet;

use super::clique::{max_weight_clique_with, CliqueOptions, CliqueResult};
use super::graph::{all_packed, WeightedGraph};
use super::local::greedy_clique;
use super::SearchBudget;
use crate::channels::{compatible_packed, ChannelSpec};
use crate::code::ClassicalCode;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Pairing, Word};

#[derive(Clone, Debug)]
pub struct CyclicSearchResult {
    pub ternary: ClassicalCode,
    pub code: ClassicalCode,
    /// Smallest word of each closure class used.
    pub generators: Vec<Word>,
    pub clique: CliqueResult,
}

impl CyclicSearchResult {
    pub fn k(&self) -> u64 {
        self.clique.weight / 2
    }
}

/// Closure of one ternary word under rotation and complement, sorted.
fn closure_of(word: Word) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for k in 0..word.len() {
        let r = word.rotate_left(k);
        out.insert(r);
        out.insert(r.complement());
    }
    out.into_iter().collect()
}

/// Ternary code generated by `generators` under rotation and complement.
pub fn cyclic_closure(generators: &[Word]) -> Result<ClassicalCode> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidParameter("no generators".into()))?;
    if first.alphabet() != Alphabet::Ternary {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::Ternary,
            found: first.alphabet(),
        });
    }
    let words = generators.iter().flat_map(|&g| closure_of(g));
    ClassicalCode::new(Alphabet::Ternary, first.len(), words)
}

/// Closure classes of `T^m` whose words are pairwise compatible.
pub fn cyclic_classes(channel: &ChannelSpec) -> Result<Vec<Vec<Word>>> {
    if !channel.is_homogeneous_ternary() {
        return Err(Error::InvalidParameter(format!(
            "cyclic search needs a pure ternary channel, got {channel}"
        )));
    }
    let len = channel.len();
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for p in all_packed(channel) {
        if seen.contains(&p) {
            continue;
        }
        let class = closure_of(Word::from_packed_unchecked(Alphabet::Ternary, len, p));
        seen.extend(class.iter().map(Word::packed));
        let ok = class.iter().enumerate().all(|(i, a)| {
            class[i + 1..]
                .iter()
                .all(|b| compatible_packed(a.packed(), b.packed(), len, 0))
        });
        if ok {
            classes.push(class);
        }
    }
    Ok(classes)
}

pub fn cyclic_search(channel: &ChannelSpec, budget: &SearchBudget) -> Result<CyclicSearchResult> {
    let classes = cyclic_classes(channel)?;
    let len = channel.len();
    let weights = classes
        .iter()
        .map(|c| c.iter().map(|w| 1u64 << w.zero_trits()).sum())
        .collect();
    let mut g = WeightedGraph::new(weights);
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let ok = classes[i].iter().all(|a| {
                classes[j]
                    .iter()
                    .all(|b| compatible_packed(a.packed(), b.packed(), len, 0))
            });
            if ok {
                g.add_edge(i, j);
            }
        }
    }
    let options = CliqueOptions {
        initial: Some(greedy_clique(&g)),
        root_orbits: None,
        symmetry: None,
        parts: None,
    };
    let clique = max_weight_clique_with(&g, budget, &options)?;
    log::info!(
        "cyclic search on {channel}: weight {}, K={}, optimal={}",
        clique.weight,
        clique.weight / 2,
        clique.optimal
    );
    let generators: Vec<Word> = clique.vertices.iter().map(|&v| classes[v][0]).collect();
    let words = clique
        .vertices
        .iter()
        .flat_map(|&v| classes[v].iter().copied());
    let pairing = Pairing::canonical(2 * len)?;
    let mut ternary = ClassicalCode::new(Alphabet::Ternary, len, words)?;
    ternary.meta.construction = "search cyclic".into();
    ternary.meta.channel = Some(channel.clone());
    ternary.meta.pairing = Some(pairing.clone());
    let mut code = ternary.binarize(&pairing)?;
    code.meta.channel = Some(ChannelSpec::z(2 * len)?);
    Ok(CyclicSearchResult {
        ternary,
        code,
        generators,
        clique,
    })
}
