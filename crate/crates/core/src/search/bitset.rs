// SPDX-License-Identifier: Apache-2.0

//! Fixed-capacity vertex sets over `u64` blocks.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bitset {
    blocks: Vec<u64>,
}

#[inline]
pub(crate) fn blocks_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Bitset {
    pub fn new(capacity: usize) -> Self {
        Bitset {
            blocks: vec![0; blocks_for(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Bitset::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        (self.blocks[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bitset) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_blocks(&self.blocks)
    }
}

/// Set members of a block slice, ascending.
pub(crate) fn iter_blocks(blocks: &[u64]) -> impl Iterator<Item = usize> + '_ {
    blocks.iter().enumerate().flat_map(|(i, &b)| {
        let mut rest = b;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + t)
            }
        })
    })
}
