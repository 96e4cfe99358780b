// SPDX-License-Identifier: Apache-2.0

//! Maximum-weight clique search over collision-free word sets.

mod binary;
mod bitset;
mod clique;
mod cyclic;
mod graph;
mod local;
mod symmetry;
mod ternary;

use std::time::Duration;

use crate::error::{Error, Result};

pub use binary::{
    binary_selfcomp_graph, binary_selfcomp_random, binary_selfcomp_search, BinarySearchResult,
    BINARY_MAX_LEN,
};
pub use bitset::Bitset;
pub use clique::{max_weight_clique, max_weight_clique_with, CliqueOptions, CliqueResult};
pub use cyclic::{cyclic_classes, cyclic_closure, cyclic_search, CyclicSearchResult};
pub use graph::{build_conflict_graph, ConflictGraph, Orbit, WeightedGraph};
pub use local::{greedy_clique, randomized_clique};
pub use symmetry::{orbit_partition, CellSymmetry};
pub use ternary::{exact_search, randomized_search, SearchResult};

/// Limits and knobs shared by every search driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
    /// Branch-and-bound nodes, or local-search steps.
    pub node_limit: Option<u64>,
    pub seed: u64,
    pub workers: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            time_limit: None,
            node_limit: None,
            seed: 0,
            workers: 1,
        }
    }
}

impl SearchBudget {
    pub fn new(
        time_limit: Option<Duration>,
        node_limit: Option<u64>,
        seed: u64,
        workers: usize,
    ) -> Result<Self> {
        let budget = SearchBudget {
            time_limit,
            node_limit,
            seed,
            workers,
        };
        budget.validate()?;
        Ok(budget)
    }

    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn seconds(secs: f64) -> Result<Self> {
        if !secs.is_finite() || secs <= 0.0 {
            return Err(Error::InvalidParameter(format!("time budget {secs}")));
        }
        Ok(SearchBudget {
            time_limit: Some(Duration::from_secs_f64(secs)),
            ..SearchBudget::default()
        })
    }

    pub fn nodes(limit: u64) -> Result<Self> {
        SearchBudget::new(None, Some(limit), 0, 1)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Result<Self> {
        self.workers = workers;
        self.validate()?;
        Ok(self)
    }

    pub fn is_limited(&self) -> bool {
        self.time_limit.is_some() || self.node_limit.is_some()
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be positive".into()));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::InvalidParameter(
                "time budget must be positive".into(),
            ));
        }
        if self.node_limit == Some(0) {
            return Err(Error::InvalidParameter(
                "node budget must be positive".into(),
            ));
        }
        Ok(())
    }
}
