// SPDX-License-Identifier: Apache-2.0

//! Vertex-weighted graphs and the orbit graph of a ternary channel.

use std::collections::HashMap;

use super::bitset::Bitset;
use super::symmetry::CellSymmetry;
use crate::channels::{compatible_packed, ChannelSpec};
use crate::code::ClassicalCode;
use crate::error::{Error, Result};
use crate::words::{shift_of, Alphabet, Pairing, Word};

/// Undirected simple graph with non-negative vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    weights: Vec<u64>,
    adj: Vec<Bitset>,
}

impl WeightedGraph {
    pub fn new(weights: Vec<u64>) -> Self {
        let n = weights.len();
        WeightedGraph {
            weights,
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.len()
                && vertices[i + 1..]
                    .iter()
                    .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn total_weight(&self, vertices: &[usize]) -> u64 {
        vertices.iter().map(|&v| self.weights[v]).sum()
    }
}

/// A ternary word together with its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub rep: Word,
    pub complement: Word,
    /// Size of the binary expansion of both words.
    pub weight: u64,
}

impl Orbit {
    pub fn is_self_paired(&self) -> bool {
        self.rep == self.complement
    }

    pub fn members(&self) -> impl Iterator<Item = Word> {
        let second = (!self.is_self_paired()).then_some(self.complement);
        std::iter::once(self.rep).chain(second)
    }
}

/// Complement orbits of a `T^m` or `Z x T^m` channel joined when their union
/// is free of collisions.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    channel: ChannelSpec,
    pairing: Pairing,
    orbits: Vec<Orbit>,
    graph: WeightedGraph,
    index: HashMap<u64, usize>,
}

/// Every packed word of the channel, ascending.
pub(crate) fn all_packed(channel: &ChannelSpec) -> Vec<u64> {
    let len = channel.len();
    let mut out = vec![0u64];
    for (i, kind) in channel.kinds().iter().enumerate() {
        let shift = shift_of(len, i);
        let radix = kind.radix() as u64;
        out = out
            .iter()
            .flat_map(|&p| (0..radix).map(move |s| p | s << shift))
            .collect();
    }
    out.sort_unstable();
    out
}

pub fn build_conflict_graph(channel: &ChannelSpec, pairing: &Pairing) -> Result<ConflictGraph> {
    let alphabet = pairing.ternary_alphabet();
    if pairing.ternary_len() != channel.len()
        || channel.alphabet(pairing.unpaired().unwrap_or(0)) != Some(alphabet)
    {
        return Err(Error::InvalidPairing(format!(
            "pairing {} does not expand channel {channel}",
            pairing.pairs_text()
        )));
    }
    if channel.len() > 16 {
        return Err(Error::InvalidLength(channel.len()));
    }
    let len = channel.len();
    let slots = channel.bit_slots();
    let mut orbits = Vec::new();
    for p in all_packed(channel) {
        let w = Word::from_packed_unchecked(alphabet, len, p);
        let c = w.complement();
        if c.packed() < p {
            continue;
        }
        if c.packed() != p && !compatible_packed(p, c.packed(), len, slots) {
            continue;
        }
        let weight = orbit_weight(&w, &c);
        orbits.push(Orbit {
            rep: w,
            complement: c,
            weight,
        });
    }
    let mut graph = WeightedGraph::new(orbits.iter().map(|o| o.weight).collect());
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            let ok = orbits[i].members().all(|a| {
                orbits[j]
                    .members()
                    .all(|b| compatible_packed(a.packed(), b.packed(), len, slots))
            });
            if ok {
                graph.add_edge(i, j);
            }
        }
    }
    let mut index = HashMap::new();
    for (i, o) in orbits.iter().enumerate() {
        index.insert(o.rep.packed(), i);
        index.insert(o.complement.packed(), i);
    }
    Ok(ConflictGraph {
        channel: channel.clone(),
        pairing: pairing.clone(),
        orbits,
        graph,
        index,
    })
}

fn orbit_weight(word: &Word, complement: &Word) -> u64 {
    let one = 1u64 << word.zero_trits();
    if word == complement {
        one
    } else {
        2 * one
    }
}

impl ConflictGraph {
    pub fn channel(&self) -> &ChannelSpec {
        &self.channel
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    /// Orbit holding a word with the same symbols, whatever its alphabet tag.
    pub fn vertex_of(&self, word: &Word) -> Option<usize> {
        if word.len() != self.channel.len() {
            return None;
        }
        self.index.get(&word.packed()).copied()
    }

    /// Ternary code spanned by a vertex set, and its binary expansion.
    pub fn expand(&self, vertices: &[usize]) -> Result<(ClassicalCode, ClassicalCode)> {
        let alphabet = self.pairing.ternary_alphabet();
        let mut words = Vec::new();
        for &v in vertices {
            let o = self
                .orbits
                .get(v)
                .ok_or_else(|| Error::InvalidParameter(format!("no vertex {v}")))?;
            words.extend(o.members());
        }
        let mut ternary = ClassicalCode::new(alphabet, self.channel.len(), words)?;
        ternary.meta.channel = Some(self.channel.clone());
        ternary.meta.pairing = Some(self.pairing.clone());
        let mut binary = ternary.binarize(&self.pairing)?;
        binary.meta.channel = Some(ChannelSpec::z(self.pairing.len())?);
        Ok((ternary, binary))
    }

    /// Vertex set of a binary code with ternary form under its own pairing.
    pub fn seed_from_code(&self, code: &ClassicalCode) -> Result<Vec<usize>> {
        let pairing = code
            .meta
            .pairing
            .as_ref()
            .ok_or_else(|| Error::InvalidSeed("code carries no pairing".into()))?;
        self.seed_with_pairing(code, pairing)
    }

    pub fn seed_with_pairing(&self, code: &ClassicalCode, pairing: &Pairing) -> Result<Vec<usize>> {
        if code.alphabet() != Alphabet::Binary {
            return Err(Error::InvalidSeed("seed must be a binary code".into()));
        }
        if pairing.ternary_len() != self.channel.len()
            || pairing.unpaired().is_some() != (self.channel.bits() == 1)
        {
            return Err(Error::InvalidSeed(format!(
                "pairing {} does not match channel {}",
                pairing.pairs_text(),
                self.channel
            )));
        }
        if !code.has_ternary_form(pairing)? {
            return Err(Error::InvalidSeed(
                "code has no ternary form under its pairing".into(),
            ));
        }
        let ternary = code.ternarize(pairing)?;
        let mut vertices = Vec::new();
        for w in ternary.words() {
            let v = self.vertex_of(w).ok_or_else(|| {
                Error::InvalidSeed(format!("word {w} is not an admissible orbit"))
            })?;
            vertices.push(v);
        }
        vertices.sort_unstable();
        vertices.dedup();
        let covered: usize = vertices
            .iter()
            .map(|&v| self.orbits[v].members().count())
            .sum();
        if covered != ternary.size() {
            return Err(Error::InvalidSeed(
                "code is not closed under complement".into(),
            ));
        }
        if !self.graph.is_clique(&vertices) {
            return Err(Error::InvalidSeed(
                "seed words collide on the channel".into(),
            ));
        }
        Ok(vertices)
    }

    /// Trit permutations and 1 <-> 2 swaps, which act on the orbits.
    pub fn cell_symmetry(&self) -> CellSymmetry {
        CellSymmetry::new(
            self.channel.kinds().to_vec(),
            self.orbits
                .iter()
                .map(|o| (o.rep.packed(), o.complement.packed()))
                .collect(),
        )
    }
}
