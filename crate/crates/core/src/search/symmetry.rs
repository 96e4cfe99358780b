// SPDX-License-Identifier: Apache-2.0

//! Graph automorphisms used to prune the clique search.
//!
//! The groups handled here permute coordinates within cells and may swap the
//! trit values 1 and 2 on some coordinates. Fixing a word refines the cells
//! by its symbols, so every stabilizer met during the search is again such a
//! group, and its vertex orbits are read off from per-cell symbol counts.

use crate::words::{shift_of, SymbolKind};

/// Orbits of the group generated by `generators`, each a permutation of
/// `0..n` given as an image table. Orbits are sorted, and ordered by their
/// smallest vertex.
pub fn orbit_partition(n: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for g in generators {
        assert_eq!(g.len(), n, "generator length");
        for (v, &image) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, image));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(v);
    }
    orbits
}

/// Cell symmetry of a graph whose vertices are complementary word pairs.
///
/// At the root the bit coordinates form one cell, the trit coordinates
/// another, and every trit may swap 1 and 2. The caller guarantees that this
/// group acts on the graph by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSymmetry {
    kinds: Vec<SymbolKind>,
    /// Packed representative and complement of each vertex.
    words: Vec<(u64, u64)>,
}

pub(crate) type OrbitKey = [u8; 32];

/// A stabilizer: cell of each coordinate, and the coordinates where 1 and 2
/// may still be swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SymState {
    cell: Vec<u8>,
    cells: usize,
    flippable: u32,
}

impl CellSymmetry {
    /// `words[v]` are the two packed words of vertex `v`, 2 bits per symbol.
    pub fn new(kinds: Vec<SymbolKind>, words: Vec<(u64, u64)>) -> Self {
        assert!(
            kinds.len() <= 16,
            "cell symmetry supports at most 16 coordinates"
        );
        CellSymmetry { kinds, words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    #[inline]
    fn symbol(&self, packed: u64, i: usize) -> u8 {
        ((packed >> shift_of(self.kinds.len(), i)) & 3) as u8
    }

    pub(crate) fn root(&self) -> SymState {
        let has_bit = self.kinds.contains(&SymbolKind::Bit);
        let mut flippable = 0;
        let cell = self
            .kinds
            .iter()
            .enumerate()
            .map(|(i, k)| match k {
                SymbolKind::Bit => 0,
                SymbolKind::Trit => {
                    flippable |= 1 << i;
                    u8::from(has_bit)
                }
            })
            .collect::<Vec<_>>();
        let cells = cell.iter().max().map_or(0, |&c| c as usize + 1);
        SymState {
            cell,
            cells,
            flippable,
        }
    }

    /// Subgroup of `state` fixing the representative of `v`.
    pub(crate) fn fix(&self, state: &SymState, v: usize) -> SymState {
        let rep = self.words[v].0;
        let mut ids: Vec<(u8, u8)> = Vec::new();
        let mut flippable = state.flippable;
        let cell = (0..self.kinds.len())
            .map(|i| {
                let s = self.symbol(rep, i);
                if s != 0 {
                    flippable &= !(1 << i);
                }
                let key = (state.cell[i], s);
                match ids.iter().position(|k| *k == key) {
                    Some(p) => p as u8,
                    None => {
                        ids.push(key);
                        (ids.len() - 1) as u8
                    }
                }
            })
            .collect();
        SymState {
            cell,
            cells: ids.len(),
            flippable,
        }
    }

    pub(crate) fn is_trivial(&self, state: &SymState) -> bool {
        state.cells == self.kinds.len() && state.flippable == 0
    }

    fn word_key(&self, state: &SymState, packed: u64) -> OrbitKey {
        let mut key = [0u8; 32];
        for i in 0..self.kinds.len() {
            let c = state.cell[i] as usize;
            match self.symbol(packed, i) {
                0 => key[2 * c] += 1,
                1 if state.flippable >> i & 1 == 0 => key[2 * c + 1] += 1,
                _ => {}
            }
        }
        key
    }

    /// Equal keys exactly when two vertices share an orbit of `state`.
    pub(crate) fn key(&self, state: &SymState, v: usize) -> OrbitKey {
        let (a, b) = self.words[v];
        self.word_key(state, a).min(self.word_key(state, b))
    }

    /// Orbits of the full group, ordered by smallest vertex.
    pub fn root_orbits(&self) -> Vec<Vec<usize>> {
        let root = self.root();
        let mut keyed: Vec<(OrbitKey, usize)> =
            (0..self.len()).map(|v| (self.key(&root, v), v)).collect();
        keyed.sort_unstable();
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for (i, &(k, v)) in keyed.iter().enumerate() {
            if i == 0 || keyed[i - 1].0 != k {
                orbits.push(Vec::new());
            }
            orbits.last_mut().unwrap().push(v);
        }
        orbits.sort_by_key(|o| o[0]);
        orbits
    }
}
