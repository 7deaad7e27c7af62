//! Sub-linear helpers for the fast representation paths.
//!
//! [`RankedSet`] answers "how many stored values are below `x`" over a
//! universe fixed at construction; it is a bitset with Fenwick block counts.
//! [`InsertableSequence`] is an implicit treap: a randomized balanced tree
//! ordered by position, so insertion at an arbitrary index and indexed reads
//! are both `O(log L)` expected.
//!
//! Neither structure supports removal.

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::StructureError;

const WORD_BITS: usize = 64;
const BLOCK_WORDS: usize = 8;
const BLOCK_BITS: usize = WORD_BITS * BLOCK_WORDS;

/// A set of distinct integers from `0..universe` with rank queries.
///
/// Membership is a bitset; a Fenwick tree counts members per 512-bit block.
/// A rank query is a Fenwick prefix over whole blocks plus popcounts inside
/// one block, which keeps the working set small enough to stay in cache.
#[derive(Debug, Clone)]
pub struct RankedSet {
    universe: usize,
    words: Vec<u64>,
    tree: Vec<u32>,
    len: usize,
}

impl RankedSet {
    pub fn new(universe: usize) -> Self {
        let words = universe.div_ceil(WORD_BITS);
        let blocks = universe.div_ceil(BLOCK_BITS);
        RankedSet {
            universe,
            words: vec![0; words],
            tree: vec![0; blocks + 1],
            len: 0,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) -> Result<(), StructureError> {
        let universe = self.universe;
        if x >= universe {
            return Err(StructureError::OutsideUniverse { value: x, universe });
        }
        if self.contains(x) {
            return Err(StructureError::DuplicateInsert(x));
        }
        self.words[x / WORD_BITS] |= 1 << (x % WORD_BITS);
        self.len += 1;
        let mut i = x / BLOCK_BITS + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
        Ok(())
    }

    /// Number of stored values strictly below `x`.
    pub fn count_less(&self, x: usize) -> usize {
        let x = x.min(self.universe);
        let block = x / BLOCK_BITS;
        let mut total = 0usize;
        let mut i = block;
        while i > 0 {
            total += self.tree[i] as usize;
            i &= i - 1;
        }
        let first = block * BLOCK_WORDS;
        let word = x / WORD_BITS;
        total += self.words[first..word]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>();
        let rem = x % WORD_BITS;
        if rem > 0 {
            total += (self.words[word] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        total
    }

    /// The `k`-th smallest (from 0) value of `0..universe` not in the set.
    pub fn select_absent(&self, k: usize) -> Option<usize> {
        if k >= self.universe - self.len {
            return None;
        }
        // Fenwick descent over blocks, counting absent values; blocks past
        // the universe are never reached because `k` is in range.
        let mut block = 0usize;
        let mut left = k;
        let mut step = (self.tree.len() - 1).next_power_of_two();
        while step > 0 {
            let next = block + step;
            if next < self.tree.len() {
                let absent = step * BLOCK_BITS - self.tree[next] as usize;
                if absent <= left {
                    block = next;
                    left -= absent;
                }
            }
            step >>= 1;
        }
        let mut word = block * BLOCK_WORDS;
        loop {
            let free = !self.words[word];
            let count = free.count_ones() as usize;
            if left < count {
                let mut bits = free;
                for _ in 0..left {
                    bits &= bits - 1;
                }
                return Some(word * WORD_BITS + bits.trailing_zeros() as usize);
            }
            left -= count;
            word += 1;
        }
    }

    /// Number of stored values in `lo..hi` (empty when `hi <= lo`).
    pub fn count_range(&self, lo: usize, hi: usize) -> usize {
        if hi <= lo {
            0
        } else {
            self.count_less(hi) - self.count_less(lo)
        }
    }
}

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    value: usize,
    priority: u32,
    size: u32,
    left: u32,
    right: u32,
}

/// A list supporting `insert_at(k, v)` and `get(k)` in logarithmic time.
#[derive(Debug, Clone)]
pub struct InsertableSequence {
    nodes: Vec<Node>,
    root: u32,
    rng: SmallRng,
}

impl Default for InsertableSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl InsertableSequence {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        InsertableSequence {
            nodes: Vec::with_capacity(capacity),
            root: NIL,
            rng: SmallRng::seed_from_u64(0x5eed_7ea9),
        }
    }

    pub fn len(&self) -> usize {
        self.size(self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.root == NIL
    }

    #[inline]
    fn size(&self, t: u32) -> usize {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].size as usize
        }
    }

    #[inline]
    fn update(&mut self, t: u32) {
        let node = &self.nodes[t as usize];
        let size = 1 + self.size(node.left) + self.size(node.right);
        self.nodes[t as usize].size = size as u32;
    }

    /// Splits `t` into the first `k` elements and the rest.
    fn split(&mut self, t: u32, k: usize) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let left = self.nodes[t as usize].left;
        let left_size = self.size(left);
        if k <= left_size {
            let (a, b) = self.split(left, k);
            self.nodes[t as usize].left = b;
            self.update(t);
            (a, t)
        } else {
            let right = self.nodes[t as usize].right;
            let (a, b) = self.split(right, k - left_size - 1);
            self.nodes[t as usize].right = a;
            self.update(t);
            (t, b)
        }
    }

    fn merge(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].priority > self.nodes[b as usize].priority {
            let right = self.nodes[a as usize].right;
            let merged = self.merge(right, b);
            self.nodes[a as usize].right = merged;
            self.update(a);
            a
        } else {
            let left = self.nodes[b as usize].left;
            let merged = self.merge(a, left);
            self.nodes[b as usize].left = merged;
            self.update(b);
            b
        }
    }

    /// Places `value` at index `k`, shifting the suffix right by one.
    pub fn insert_at(&mut self, k: usize, value: usize) -> Result<(), StructureError> {
        let len = self.len();
        if k > len {
            return Err(StructureError::IndexOutOfRange { index: k, len });
        }
        assert!(
            self.nodes.len() < NIL as usize,
            "sequence capacity exhausted"
        );
        let id = self.nodes.len() as u32;
        self.nodes.push(Node {
            value,
            priority: self.rng.gen(),
            size: 1,
            left: NIL,
            right: NIL,
        });
        if k == len {
            self.root = self.merge(self.root, id);
        } else {
            let (a, b) = self.split(self.root, k);
            let left = self.merge(a, id);
            self.root = self.merge(left, b);
        }
        Ok(())
    }

    pub fn get(&self, mut k: usize) -> Result<usize, StructureError> {
        let len = self.len();
        if k >= len {
            return Err(StructureError::IndexOutOfRange { index: k, len });
        }
        let mut t = self.root;
        loop {
            let node = &self.nodes[t as usize];
            let left_size = self.size(node.left);
            if k < left_size {
                t = node.left;
            } else if k == left_size {
                return Ok(node.value);
            } else {
                k -= left_size + 1;
                t = node.right;
            }
        }
    }

    /// All elements in order; linear time.
    pub fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut t = self.root;
        while t != NIL || !stack.is_empty() {
            while t != NIL {
                stack.push(t);
                t = self.nodes[t as usize].left;
            }
            let top = stack.pop().expect("stack is non-empty");
            out.push(self.nodes[top as usize].value);
            t = self.nodes[top as usize].right;
        }
        out
    }
}
