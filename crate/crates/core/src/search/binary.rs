// SPDX-License-Identifier: Apache-2.0

//! Direct search over complement pairs of binary words.

use super::clique::{max_weight_clique_with, CliqueOptions, CliqueResult};
use super::graph::WeightedGraph;
use super::local::{greedy_clique, randomized_clique};
use super::symmetry::CellSymmetry;
use super::SearchBudget;
use crate::code::ClassicalCode;
use crate::error::{Error, Result};
use crate::words::{asymmetric_distance_bits, SymbolKind, Word};

/// Largest length the pair graph is built for.
pub const BINARY_MAX_LEN: usize = 14;

#[derive(Clone, Debug)]
pub struct BinarySearchResult {
    pub code: ClassicalCode,
    pub clique: CliqueResult,
}

impl BinarySearchResult {
    pub fn k(&self) -> u64 {
        self.clique.weight / 2
    }
}

/// Vertex `u` is the pair `{u, !u}` for every `u` whose first bit is 0;
/// pairs are adjacent when both cross distances are at least 2.
pub fn binary_selfcomp_graph(n: usize) -> Result<WeightedGraph> {
    if !(3..=BINARY_MAX_LEN).contains(&n) {
        return Err(Error::InvalidLength(n));
    }
    let mask = (1u64 << n) - 1;
    let count = 1usize << (n - 1);
    let mut g = WeightedGraph::new(vec![2; count]);
    for u in 0..count as u64 {
        for v in u + 1..count as u64 {
            if asymmetric_distance_bits(u, v) >= 2 && asymmetric_distance_bits(u, v ^ mask) >= 2 {
                g.add_edge(u as usize, v as usize);
            }
        }
    }
    Ok(g)
}

/// Coordinate permutations, acting on pair vertices.
fn pair_symmetry(n: usize) -> CellSymmetry {
    let mask = (1u64 << n) - 1;
    let packed = |x: u64| Word::from_bits_unchecked(x, n).packed();
    CellSymmetry::new(
        vec![SymbolKind::Bit; n],
        (0..1u64 << (n - 1))
            .map(|u| (packed(u), packed(u ^ mask)))
            .collect(),
    )
}

/// Largest self-complementary 1-code of length `n`, by exact search.
pub fn binary_selfcomp_search(n: usize, budget: &SearchBudget) -> Result<BinarySearchResult> {
    let g = binary_selfcomp_graph(n)?;
    let options = CliqueOptions {
        initial: Some(greedy_clique(&g)),
        root_orbits: None,
        symmetry: Some(pair_symmetry(n)),
        // Weight levels of the lighter word: only neighbouring levels
        // interact, and the light levels hold few words.
        parts: Some(
            (0..g.len())
                .map(|u| (u.count_ones() as usize).min(n - u.count_ones() as usize))
                .collect(),
        ),
    };
    let clique = max_weight_clique_with(&g, budget, &options)?;
    finish(n, clique, "search binary")
}

/// Tabu search for a large self-complementary 1-code of length `n`, stopping
/// early once the quantum dimension reaches `target_k`.
pub fn binary_selfcomp_random(
    n: usize,
    budget: &SearchBudget,
    target_k: Option<u64>,
) -> Result<BinarySearchResult> {
    let g = binary_selfcomp_graph(n)?;
    let clique = randomized_clique(&g, budget, None, target_k.map(|k| 2 * k))?;
    finish(n, clique, "search binary random")
}

fn finish(n: usize, clique: CliqueResult, construction: &str) -> Result<BinarySearchResult> {
    log::info!(
        "binary search n={n}: weight {}, K={}, optimal={}",
        clique.weight,
        clique.weight / 2,
        clique.optimal
    );
    let mask = (1u64 << n) - 1;
    let bits = clique
        .vertices
        .iter()
        .flat_map(|&u| [u as u64, u as u64 ^ mask]);
    let code = ClassicalCode::from_bits(n, bits)?.with_construction(construction);
    Ok(BinarySearchResult { code, clique })
}
