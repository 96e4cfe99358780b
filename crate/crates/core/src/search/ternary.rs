// SPDX-License-Identifier: Apache-2.0

//! Searches for self-complementary 1-codes through their ternary image.

use super::clique::{max_weight_clique_with, CliqueOptions, CliqueResult};
use super::graph::ConflictGraph;
use super::local::{greedy_clique, randomized_clique};
use super::SearchBudget;
use crate::code::ClassicalCode;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Ternary code over the graph's channel.
    pub ternary: ClassicalCode,
    /// Binary expansion: a self-complementary 1-code.
    pub code: ClassicalCode,
    pub clique: CliqueResult,
}

impl SearchResult {
    /// Quantum code dimension, half the classical size.
    pub fn k(&self) -> u64 {
        self.clique.weight / 2
    }

    fn from_clique(
        graph: &ConflictGraph,
        clique: CliqueResult,
        construction: &str,
    ) -> Result<Self> {
        let (mut ternary, mut code) = graph.expand(&clique.vertices)?;
        ternary.meta.construction = construction.to_string();
        code.meta.construction = construction.to_string();
        Ok(SearchResult {
            ternary,
            code,
            clique,
        })
    }
}

/// Heaviest of the greedy clique and the given seed cliques.
fn best_start(graph: &ConflictGraph, seeds: &[Vec<usize>]) -> Vec<usize> {
    let g = graph.graph();
    std::iter::once(greedy_clique(g))
        .chain(seeds.iter().cloned())
        .fold(Vec::new(), |best, c| {
            if g.total_weight(&c) > g.total_weight(&best) {
                c
            } else {
                best
            }
        })
}

/// Exact maximum over the graph, pruned with the channel's symmetries at
/// the root. Seeds are cliques to start from.
pub fn exact_search(
    graph: &ConflictGraph,
    budget: &SearchBudget,
    seeds: &[Vec<usize>],
) -> Result<SearchResult> {
    for s in seeds {
        if !graph.graph().is_clique(s) {
            return Err(crate::error::Error::InvalidSeed(
                "seed is not a clique".into(),
            ));
        }
    }
    let options = CliqueOptions {
        initial: Some(best_start(graph, seeds)),
        root_orbits: None,
        symmetry: Some(graph.cell_symmetry()),
        parts: None,
    };
    let clique = max_weight_clique_with(graph.graph(), budget, &options)?;
    log::info!(
        "exact search on {}: weight {}, K={}, optimal={}",
        graph.channel(),
        clique.weight,
        clique.weight / 2,
        clique.optimal
    );
    SearchResult::from_clique(graph, clique, "search exact")
}

/// Tabu search from `seed`, or from the greedy clique.
pub fn randomized_search(
    graph: &ConflictGraph,
    budget: &SearchBudget,
    seed: Option<&[usize]>,
    target: Option<u64>,
) -> Result<SearchResult> {
    let start = match seed {
        Some(s) => s.to_vec(),
        None => best_start(graph, &[]),
    };
    let clique = randomized_clique(graph.graph(), budget, Some(&start), target)?;
    log::info!(
        "random search on {}: weight {}, K={}",
        graph.channel(),
        clique.weight,
        clique.weight / 2
    );
    SearchResult::from_clique(graph, clique, "search random")
}
