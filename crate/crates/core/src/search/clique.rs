// SPDX-License-Identifier: Apache-2.0

//! Exact maximum-weight clique by branch and bound.
//!
//! Candidate sets are bitsets. The bound is a greedy colouring in which a
//! vertex may be split across several colour classes, each class charging
//! its largest remaining share. Search is anytime: when the budget runs out
//! the best clique so far comes back with `optimal == false`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::bitset::{blocks_for, iter_blocks};
use super::graph::WeightedGraph;
use super::symmetry::{CellSymmetry, OrbitKey, SymState};
use super::SearchBudget;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueOptions {
    /// Starting incumbent; must be a clique.
    pub initial: Option<Vec<usize>>,
    /// Orbits of a graph automorphism group. Each root task then covers a
    /// whole orbit through one representative.
    pub root_orbits: Option<Vec<Vec<usize>>>,
    /// Automorphisms used at every depth: after branching on a vertex the
    /// rest of its orbit under the current stabilizer is dropped.
    pub symmetry: Option<CellSymmetry>,
    /// A label per vertex. The bound charges each label class at most the
    /// weight of its own maximum clique, and classes with small maxima are
    /// branched on first. Each class is solved exactly up front.
    pub parts: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Ascending vertex indices.
    pub vertices: Vec<usize>,
    pub weight: u64,
    pub optimal: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct Prepared {
    blocks: usize,
    /// Internal index to original vertex.
    order: Vec<usize>,
    weights: Vec<u64>,
    adj: Vec<u64>,
    /// Part of each vertex; parts occupy consecutive indices.
    part: Vec<u32>,
    part_cap: Vec<u64>,
}

impl Prepared {
    /// `parts` gives a rank per vertex and the cap of each rank.
    fn new(graph: &WeightedGraph, parts: Option<(&[u32], &[u64])>) -> Self {
        let n = graph.len();
        let blocks = blocks_for(n);
        let rank = |v: usize| parts.map_or(0, |(r, _)| r[v]);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| {
            (
                rank(v),
                std::cmp::Reverse(graph.weight(v)),
                std::cmp::Reverse(graph.degree(v)),
                v,
            )
        });
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; n * blocks];
        for (i, &v) in order.iter().enumerate() {
            for u in graph.neighbors(v).iter() {
                let j = pos[u];
                adj[i * blocks + j / 64] |= 1 << (j % 64);
            }
        }
        Prepared {
            blocks,
            weights: order.iter().map(|&v| graph.weight(v)).collect(),
            part: order.iter().map(|&v| rank(v)).collect(),
            part_cap: parts.map_or(vec![u64::MAX], |(_, caps)| caps.to_vec()),
            order,
            adj,
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.blocks..(v + 1) * self.blocks]
    }

    fn full(&self) -> Vec<u64> {
        let mut p = vec![0u64; self.blocks];
        for v in 0..self.weights.len() {
            p[v / 64] |= 1 << (v % 64);
        }
        p
    }
}

#[derive(Default)]
struct Scratch {
    p: Vec<u64>,
    list: Vec<(u32, u64)>,
    classes: Vec<u64>,
    caps: Vec<u64>,
    /// Stabilizer of the current clique, if not trivial.
    state: Option<SymState>,
    keyed: Vec<(OrbitKey, u32)>,
    /// Orbit label of each candidate, by internal index.
    orbit: Vec<u32>,
}

/// Colours `p` in index order, each part with its own classes. `list[k]`
/// is the k-th vertex with the bound on the heaviest clique among vertices
/// `0..=k` of the list.
fn color(g: &Prepared, p: &[u64], s: &mut Scratch) -> u64 {
    let b = g.blocks;
    s.list.clear();
    s.classes.clear();
    s.caps.clear();
    let mut done = 0u64;
    let mut part = u32::MAX;
    let mut total = 0u64;
    let mut first = 0;
    let mut bound = 0;
    for v in iter_blocks(p) {
        if g.part[v] != part {
            if part != u32::MAX {
                done += total.min(g.part_cap[part as usize]);
            }
            part = g.part[v];
            total = 0;
            first = s.caps.len();
        }
        let row = g.row(v);
        let mut rest = g.weights[v];
        for c in first..s.caps.len() {
            if rest == 0 {
                break;
            }
            let class = &mut s.classes[c * b..(c + 1) * b];
            if class.iter().zip(row).all(|(x, y)| x & y == 0) {
                rest -= rest.min(s.caps[c]);
                class[v / 64] |= 1 << (v % 64);
            }
        }
        if rest > 0 {
            let start = s.classes.len();
            s.classes.resize(start + b, 0);
            s.classes[start + v / 64] |= 1 << (v % 64);
            s.caps.push(rest);
            total += rest;
        }
        bound = done + total.min(g.part_cap[part as usize]);
        s.list.push((v as u32, bound));
    }
    bound
}

struct Control {
    start: Instant,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    stop: AtomicBool,
    best: AtomicU64,
    /// Several workers: prune only strictly below the shared incumbent so
    /// every task finds the same clique whatever the interleaving.
    strict: bool,
}

impl Control {
    fn charge(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if self.node_limit.is_some_and(|l| total >= l)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

struct Worker<'a> {
    g: &'a Prepared,
    ctl: &'a Control,
    sym: Option<&'a CellSymmetry>,
    best_w: u64,
    best: Vec<u32>,
    clique: Vec<u32>,
    cw: u64,
    pending: u64,
    stopped: bool,
    scratch: Vec<Scratch>,
}

impl<'a> Worker<'a> {
    fn new(
        g: &'a Prepared,
        ctl: &'a Control,
        sym: Option<&'a CellSymmetry>,
        best_w: u64,
        best: Vec<u32>,
    ) -> Self {
        Worker {
            g,
            ctl,
            sym,
            best_w,
            best,
            clique: Vec::new(),
            cw: 0,
            pending: 0,
            stopped: false,
            scratch: Vec::new(),
        }
    }

    #[inline]
    fn pruned(&self, ub: u64) -> bool {
        ub <= self.best_w || (self.ctl.strict && ub < self.ctl.best.load(Ordering::Relaxed))
    }

    fn tick(&mut self) {
        self.pending += 1;
        if self.pending >= 256 {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.ctl.charge(self.pending) {
            self.stopped = true;
        }
        self.pending = 0;
    }

    fn record(&mut self) {
        if self.cw <= self.best_w {
            return;
        }
        self.best_w = self.cw;
        self.best.clone_from(&self.clique);
        let prev = self.ctl.best.fetch_max(self.cw, Ordering::Relaxed);
        if self.cw > prev {
            log::info!(
                "clique weight {} after {:.3}s",
                self.cw,
                self.ctl.start.elapsed().as_secs_f64()
            );
        }
    }

    fn run_task(&mut self, task: &Task) {
        if self.stopped || self.pruned(task.bound) {
            return;
        }
        self.clique.clear();
        self.clique.push(task.vertex);
        self.cw = self.g.weights[task.vertex as usize];
        if task.cand.iter().all(|&x| x == 0) {
            self.record();
            return;
        }
        if self.scratch.is_empty() {
            self.scratch.push(Scratch::default());
        }
        self.scratch[0].p.clone_from(&task.cand);
        self.scratch[0].state =
            self.child_state(self.sym.map(|s| s.root()).as_ref(), task.vertex as usize);
        self.expand(0);
        self.clique.clear();
    }

    fn child_state(&self, state: Option<&SymState>, v: usize) -> Option<SymState> {
        let sym = self.sym?;
        let child = sym.fix(state?, self.g.order[v]);
        (!sym.is_trivial(&child)).then_some(child)
    }

    /// Labels the candidates of `s` by orbit under `s.state`.
    fn label_orbits(&self, s: &mut Scratch) {
        let (Some(sym), Some(state)) = (self.sym, s.state.as_ref()) else {
            return;
        };
        s.keyed.clear();
        s.keyed
            .extend(iter_blocks(&s.p).map(|v| (sym.key(state, self.g.order[v]), v as u32)));
        s.keyed.sort_unstable();
        s.orbit.resize(self.g.weights.len(), 0);
        let mut label = 0;
        for i in 0..s.keyed.len() {
            if i > 0 && s.keyed[i - 1].0 != s.keyed[i].0 {
                label += 1;
            }
            s.orbit[s.keyed[i].1 as usize] = label;
        }
    }

    fn expand(&mut self, depth: usize) {
        self.tick();
        if self.stopped {
            return;
        }
        let mut s = std::mem::take(&mut self.scratch[depth]);
        if self.scratch.len() < depth + 2 {
            self.scratch.resize_with(depth + 2, Scratch::default);
        }
        let p = std::mem::take(&mut s.p);
        color(self.g, &p, &mut s);
        s.p = p;
        self.label_orbits(&mut s);
        for idx in (0..s.list.len()).rev() {
            let (v, ub) = s.list[idx];
            let v = v as usize;
            if s.p[v / 64] >> (v % 64) & 1 == 0 {
                continue;
            }
            if self.pruned(self.cw + ub) {
                break;
            }

            let row = self.g.row(v);
            let child = &mut self.scratch[depth + 1].p;
            child.clear();
            child.extend(s.p.iter().zip(row).map(|(x, y)| x & y));
            let leaf = child.iter().all(|&x| x == 0);
            if !leaf {
                self.scratch[depth + 1].state = self.child_state(s.state.as_ref(), v);
            }
            self.clique.push(v as u32);
            self.cw += self.g.weights[v];
            if leaf {
                self.record();
            } else {
                self.expand(depth + 1);
            }
            self.cw -= self.g.weights[v];
            self.clique.pop();
            if self.stopped {
                break;
            }
            s.p[v / 64] &= !(1 << (v % 64));
            if s.state.is_some() {
                let label = s.orbit[v];
                for &(_, u) in &s.keyed {
                    if s.orbit[u as usize] == label {
                        s.p[u as usize / 64] &= !(1 << (u % 64));
                    }
                }
            }
        }
        self.scratch[depth] = s;
    }
}

struct Task {
    vertex: u32,
    cand: Vec<u64>,
    bound: u64,
}

fn root_tasks(g: &Prepared, orbits: Option<&[Vec<usize>]>) -> Vec<Task> {
    let mut remaining = g.full();
    let mut s = Scratch::default();
    let mut tasks = Vec::new();
    match orbits {
        None => {
            color(g, &remaining, &mut s);
            for &(v, bound) in s.list.iter().rev() {
                let v = v as usize;
                remaining[v / 64] &= !(1 << (v % 64));
                tasks.push(Task {
                    vertex: v as u32,
                    cand: remaining.iter().zip(g.row(v)).map(|(x, y)| x & y).collect(),
                    bound,
                });
            }
        }
        Some(orbits) => {
            // Same order as the plain case: latest vertices first.
            let mut orbits: Vec<&Vec<usize>> = orbits.iter().filter(|o| !o.is_empty()).collect();
            orbits.sort_by_key(|o| std::cmp::Reverse(o.iter().max().copied()));
            for orbit in orbits {
                let bound = color(g, &remaining, &mut s);
                let degree = |v: usize| -> u32 {
                    remaining
                        .iter()
                        .zip(g.row(v))
                        .map(|(x, y)| (x & y).count_ones())
                        .sum()
                };
                let rep = *orbit.iter().min_by_key(|&&v| (degree(v), v)).unwrap();
                tasks.push(Task {
                    vertex: rep as u32,
                    cand: remaining
                        .iter()
                        .zip(g.row(rep))
                        .map(|(x, y)| x & y)
                        .collect(),
                    bound,
                });
                for &v in orbit {
                    remaining[v / 64] &= !(1 << (v % 64));
                }
            }
        }
    }
    tasks
}

/// Ranks parts by decreasing clique weight and returns each vertex's rank
/// with the weight of every rank.
fn part_ranks(graph: &WeightedGraph, labels: &[usize]) -> Result<(Vec<u32>, Vec<u64>)> {
    let mut distinct: Vec<usize> = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut caps = Vec::new();
    for &label in &distinct {
        let members: Vec<usize> = (0..graph.len()).filter(|&v| labels[v] == label).collect();
        let mut sub = WeightedGraph::new(members.iter().map(|&v| graph.weight(v)).collect());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if graph.has_edge(u, v) {
                    sub.add_edge(i, j);
                }
            }
        }
        caps.push((
            max_weight_clique(&sub, &SearchBudget::unlimited())?.weight,
            label,
        ));
    }
    caps.sort_by_key(|&(cap, label)| (std::cmp::Reverse(cap), label));
    let rank_of = |label: usize| caps.iter().position(|c| c.1 == label).unwrap() as u32;
    Ok((
        labels.iter().map(|&l| rank_of(l)).collect(),
        caps.iter().map(|c| c.0).collect(),
    ))
}

pub fn max_weight_clique(graph: &WeightedGraph, budget: &SearchBudget) -> Result<CliqueResult> {
    max_weight_clique_with(graph, budget, &CliqueOptions::default())
}

pub fn max_weight_clique_with(
    graph: &WeightedGraph,
    budget: &SearchBudget,
    options: &CliqueOptions,
) -> Result<CliqueResult> {
    let start = Instant::now();
    let n = graph.len();
    let parts = match &options.parts {
        Some(labels) => {
            if labels.len() != n {
                return Err(Error::InvalidParameter("one part label per vertex".into()));
            }
            Some(part_ranks(graph, labels)?)
        }
        None => None,
    };
    let g = Prepared::new(
        graph,
        parts.as_ref().map(|(r, c)| (r.as_slice(), c.as_slice())),
    );
    let mut pos = vec![0u32; n];
    for (i, &v) in g.order.iter().enumerate() {
        pos[v] = i as u32;
    }
    let initial: Vec<u32> = match &options.initial {
        Some(c) => {
            if !graph.is_clique(c) {
                return Err(Error::InvalidSeed(
                    "initial vertex set is not a clique".into(),
                ));
            }
            c.iter().map(|&v| pos[v]).collect()
        }
        None => Vec::new(),
    };
    let initial_w: u64 = initial.iter().map(|&v| g.weights[v as usize]).sum();
    if let Some(sym) = &options.symmetry {
        if options.root_orbits.is_some() {
            return Err(Error::InvalidParameter(
                "give root orbits or a symmetry, not both".into(),
            ));
        }
        if sym.len() != n {
            return Err(Error::InvalidParameter(
                "symmetry does not match the graph".into(),
            ));
        }
    }
    let root_orbits = options
        .root_orbits
        .clone()
        .or_else(|| options.symmetry.as_ref().map(CellSymmetry::root_orbits));
    let orbits: Option<Vec<Vec<usize>>> = match &root_orbits {
        Some(orbits) => {
            let mut seen = vec![false; n];
            for &v in orbits.iter().flatten() {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidParameter(
                        "root orbits must partition the vertices".into(),
                    ));
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::InvalidParameter(
                    "root orbits must partition the vertices".into(),
                ));
            }
            Some(
                orbits
                    .iter()
                    .map(|o| o.iter().map(|&v| pos[v] as usize).collect())
                    .collect(),
            )
        }
        None => None,
    };
    let ctl = Control {
        start,
        deadline: budget.time_limit.map(|d| start + d),
        node_limit: budget.node_limit,
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        best: AtomicU64::new(initial_w),
        strict: budget.workers > 1,
    };
    let tasks = root_tasks(&g, orbits.as_deref());
    let (best_w, best) = if budget.workers == 1 {
        let mut w = Worker::new(&g, &ctl, options.symmetry.as_ref(), initial_w, initial);
        for t in &tasks {
            w.run_task(t);
            if w.stopped {
                break;
            }
        }
        w.flush();
        (w.best_w, w.best)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        let results: Vec<(u64, Vec<u32>)> = pool.install(|| {
            tasks
                .par_iter()
                .map(|t| {
                    let mut w = Worker::new(&g, &ctl, options.symmetry.as_ref(), 0, Vec::new());
                    w.run_task(t);
                    w.flush();
                    (w.best_w, w.best)
                })
                .collect()
        });
        let mut best = (initial_w, initial);
        for r in results {
            if r.0 > best.0 {
                best = r;
            }
        }
        best
    };
    let mut vertices: Vec<usize> = best.iter().map(|&v| g.order[v as usize]).collect();
    vertices.sort_unstable();
    Ok(CliqueResult {
        vertices,
        weight: best_w,
        optimal: !ctl.stop.load(Ordering::Relaxed),
        nodes: ctl.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}
