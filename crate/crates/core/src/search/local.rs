// SPDX-License-Identifier: Apache-2.0

//! Heuristic cliques: a deterministic greedy pass and a seeded tabu search
//! with add, swap and drop moves.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::clique::CliqueResult;
use super::graph::WeightedGraph;
use super::SearchBudget;
use crate::error::{Error, Result};

/// Repeatedly takes the heaviest candidate, breaking ties by degree and
/// then by index.
pub fn greedy_clique(graph: &WeightedGraph) -> Vec<usize> {
    let mut cand: Vec<usize> = (0..graph.len()).collect();
    let mut clique = Vec::new();
    while let Some(&v) = cand
        .iter()
        .max_by_key(|&&v| (graph.weight(v), graph.degree(v), std::cmp::Reverse(v)))
    {
        clique.push(v);
        cand.retain(|&u| graph.has_edge(u, v));
    }
    clique.sort_unstable();
    clique
}

const RESTART_AFTER: u64 = 4000;

struct Tabu<'a> {
    graph: &'a WeightedGraph,
    non_adj: Vec<Vec<u32>>,
    in_c: Vec<bool>,
    clique: Vec<usize>,
    /// Members of the clique not adjacent to each vertex, counted and xored.
    miss: Vec<u32>,
    culprit: Vec<usize>,
    weight: u64,
    tabu_until: Vec<u64>,
}

impl<'a> Tabu<'a> {
    fn new(graph: &'a WeightedGraph) -> Self {
        let n = graph.len();
        let non_adj = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && !graph.has_edge(u, v))
                    .map(|u| u as u32)
                    .collect()
            })
            .collect();
        Tabu {
            graph,
            non_adj,
            in_c: vec![false; n],
            clique: Vec::new(),
            miss: vec![0; n],
            culprit: vec![0; n],
            weight: 0,
            tabu_until: vec![0; n],
        }
    }

    fn add(&mut self, v: usize) {
        self.in_c[v] = true;
        self.clique.push(v);
        self.weight += self.graph.weight(v);
        for &u in &self.non_adj[v] {
            self.miss[u as usize] += 1;
            self.culprit[u as usize] ^= v;
        }
    }

    fn drop(&mut self, v: usize) {
        self.in_c[v] = false;
        let i = self.clique.iter().position(|&u| u == v).unwrap();
        self.clique.swap_remove(i);
        self.weight -= self.graph.weight(v);
        for &u in &self.non_adj[v] {
            self.miss[u as usize] -= 1;
            self.culprit[u as usize] ^= v;
        }
    }

    fn clear(&mut self) {
        while let Some(&v) = self.clique.last() {
            self.drop(v);
        }
    }
}

enum Move {
    Add(usize),
    Swap(usize, usize),
    Drop(usize),
}

fn run_one(
    graph: &WeightedGraph,
    budget: &SearchBudget,
    seed: u64,
    initial: &[usize],
    target: Option<u64>,
    done: &AtomicBool,
) -> (u64, Vec<usize>, u64) {
    let start = Instant::now();
    let deadline = budget.time_limit.map(|d| start + d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tabu::new(graph);
    for &v in initial {
        t.add(v);
    }
    let mut best_w = t.weight;
    let mut best = t.clique.clone();
    let n = graph.len();
    let mut iter = 0u64;
    let mut stale = 0u64;
    loop {
        if target.is_some_and(|w| best_w >= w) || n == 0 {
            done.store(true, Ordering::Relaxed);
            break;
        }
        if budget.node_limit.is_some_and(|l| iter >= l) {
            break;
        }
        if iter % 1024 == 0
            && (deadline.is_some_and(|d| Instant::now() >= d) || done.load(Ordering::Relaxed))
        {
            break;
        }
        iter += 1;
        if stale > RESTART_AFTER {
            stale = 0;
            t.clear();
            t.add(rng.gen_range(0..n));
        }
        let mut chosen: Option<(i64, Move)> = None;
        let mut ties = 0u32;
        let mut offer = |gain: i64, mv: Move, rng: &mut ChaCha8Rng| match &chosen {
            Some((g, _)) if gain < *g => {}
            Some((g, _)) if gain == *g => {
                ties += 1;
                if rng.gen_range(0..=ties) == 0 {
                    chosen = Some((gain, mv));
                }
            }
            _ => {
                ties = 0;
                chosen = Some((gain, mv));
            }
        };
        for v in 0..n {
            if t.in_c[v] {
                continue;
            }
            let wv = graph.weight(v) as i64;
            let free = t.tabu_until[v] <= iter;
            match t.miss[v] {
                0 if free || t.weight + graph.weight(v) > best_w => {
                    offer(wv, Move::Add(v), &mut rng)
                }
                1 if free => {
                    let u = t.culprit[v];
                    offer(wv - graph.weight(u) as i64, Move::Swap(v, u), &mut rng);
                }
                _ => {}
            }
        }
        for i in 0..t.clique.len() {
            let u = t.clique[i];
            offer(-(graph.weight(u) as i64), Move::Drop(u), &mut rng);
        }
        let Some((_, mv)) = chosen else {
            t.clear();
            t.add(rng.gen_range(0..n));
            continue;
        };
        match mv {
            Move::Add(v) => t.add(v),
            Move::Swap(v, u) => {
                t.drop(u);
                t.add(v);
                t.tabu_until[u] = iter + 7 + rng.gen_range(0..=10);
            }
            Move::Drop(u) => {
                t.drop(u);
                t.tabu_until[u] = iter + 7;
            }
        }
        if t.weight > best_w {
            best_w = t.weight;
            best.clone_from(&t.clique);
            stale = 0;
            log::info!(
                "local search weight {} after {:.3}s (seed {seed})",
                best_w,
                start.elapsed().as_secs_f64()
            );
        } else {
            stale += 1;
        }
    }
    best.sort_unstable();
    (best_w, best, iter)
}

/// Seeded tabu search. Needs a time or step budget; stops early once
/// `target` weight is reached. With one worker, or several and a step
/// budget, the result depends only on the graph, budget and seed.
pub fn randomized_clique(
    graph: &WeightedGraph,
    budget: &SearchBudget,
    initial: Option<&[usize]>,
    target: Option<u64>,
) -> Result<CliqueResult> {
    if !budget.is_limited() && target.is_none() {
        return Err(Error::InvalidParameter(
            "randomized search needs a time or step budget".into(),
        ));
    }
    let initial = initial.unwrap_or(&[]);
    if !graph.is_clique(initial) {
        return Err(Error::InvalidSeed("seed vertex set is not a clique".into()));
    }
    let start = Instant::now();
    let done = AtomicBool::new(false);
    let runs: Vec<(u64, Vec<usize>, u64)> = if budget.workers == 1 {
        vec![run_one(graph, budget, budget.seed, initial, target, &done)]
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        pool.install(|| {
            (0..budget.workers as u64)
                .into_par_iter()
                .map(|i| {
                    run_one(
                        graph,
                        budget,
                        budget.seed.wrapping_add(i),
                        initial,
                        target,
                        &done,
                    )
                })
                .collect()
        })
    };
    let nodes = runs.iter().map(|r| r.2).sum();
    let (weight, vertices, _) = runs
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .unwrap();
    Ok(CliqueResult {
        vertices,
        weight,
        optimal: false,
        nodes,
        elapsed: start.elapsed(),
    })
}
