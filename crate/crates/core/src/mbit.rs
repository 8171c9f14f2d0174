//! Binary tree over an integer array with point assignment, prefix sums and
//! minimum prefix sums.
//!
//! The tree is complete, stored in one contiguous array with the root at
//! position 1 and the children of node `x` at `2x` and `2x + 1`. With depth
//! `p = min { s : 2^s >= n }`, logical index `i` (1-based) lives at leaf
//! position `i + 2^p - 1`. Every node keeps two fields:
//!
//! * `sum[x]`: the sum of the leaf values under `x`;
//! * `min_sum[x]`: the minimum running sum over the leaves under `x`,
//!   starting at its leftmost leaf.
//!
//! For an internal node these satisfy
//!
//! ```text
//! sum[x]     = sum[2x] + sum[2x + 1]
//! min_sum[x] = min(min_sum[2x], sum[2x] + min_sum[2x + 1])
//! ```
//!
//! A prefix `[1, i]` decomposes into at most `p + 1` disjoint subtrees,
//! enumerated left to right by [`MinPrefixTree::cover`]; both queries fold
//! over that cover.
//!
//! Indices outside `1..=n` are contract violations and panic.

/// Value type stored in the tree.
///
/// Wide enough for sums of `n` entries of magnitude `n^2 + 1` for every
/// diagram size the crate handles.
pub type Value = i64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPrefixTree {
    capacity: usize,
    depth: u32,
    sum: Vec<Value>,
    min_sum: Vec<Value>,
}

impl MinPrefixTree {
    /// Creates an all-zero tree over logical indices `1..=n`.
    ///
    /// Returns `None` for `n == 0`.
    pub fn new(n: usize) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let depth = n.next_power_of_two().trailing_zeros();
        let slots = 1usize << (depth + 1);
        Some(Self {
            capacity: n,
            depth,
            sum: vec![0; slots],
            min_sum: vec![0; slots],
        })
    }

    /// Number of logical slots `n`.
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Depth `p` of the tree: the smallest `s` with `2^s >= n`.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Number of allocated node slots, `2^(p+1) - 1`.
    pub fn node_count(&self) -> usize {
        self.sum.len() - 1
    }

    /// Tree position of the leaf holding logical index `index`.
    pub fn leaf_position(&self, index: usize) -> usize {
        self.check_index(index);
        index + (1usize << self.depth) - 1
    }

    /// `(sum, min_sum)` of the node at tree position `pos`.
    pub fn node(&self, pos: usize) -> (Value, Value) {
        assert!(
            pos >= 1 && pos <= self.node_count(),
            "tree position {pos} outside 1..={}",
            self.node_count()
        );
        (self.sum[pos], self.min_sum[pos])
    }

    /// Current value of `A[index]`.
    pub fn get(&self, index: usize) -> Value {
        self.sum[self.leaf_position(index)]
    }

    /// Assigns `A[index] = value` and recomputes every ancestor.
    pub fn update(&mut self, index: usize, value: Value) {
        let mut pos = self.leaf_position(index);
        self.sum[pos] = value;
        self.min_sum[pos] = value;
        while pos > 1 {
            // Step to the left sibling so `pos`, `pos + 1` are the children.
            pos &= !1;
            let parent = pos >> 1;
            self.sum[parent] = self.sum[pos] + self.sum[pos + 1];
            self.min_sum[parent] =
                self.min_sum[pos].min(self.sum[pos] + self.min_sum[pos + 1]);
            pos = parent;
        }
    }

    /// Adds `delta` to `A[index]`.
    pub fn add(&mut self, index: usize, delta: Value) {
        let current = self.get(index);
        self.update(index, current + delta);
    }

    /// `A[1] + ... + A[index]`.
    pub fn prefix_sum(&self, index: usize) -> Value {
        self.cover(index).map(|pos| self.sum[pos]).sum()
    }

    /// `min_{1 <= k <= index} (A[1] + ... + A[k])`.
    pub fn min_prefix(&self, index: usize) -> Value {
        let mut partial: Value = 0;
        let mut best = Value::MAX;
        for pos in self.cover(index) {
            best = best.min(partial + self.min_sum[pos]);
            partial += self.sum[pos];
        }
        best
    }

    /// Disjoint subtrees whose leaves are exactly `1..=index`, left to right.
    ///
    /// This is the top-down descent: whenever the target leaf lies in the
    /// right half of the current node, the whole left child is covered.
    pub fn cover(&self, index: usize) -> Cover {
        self.check_index(index);
        Cover {
            node: 1,
            remaining: index,
            half: 1usize << self.depth,
        }
    }

    /// Checks both recurrences at every internal node and the leaf identity
    /// `min_sum == sum`. Returns the first violating position.
    pub fn audit(&self) -> Result<(), usize> {
        let first_leaf = 1usize << self.depth;
        for pos in first_leaf..=self.node_count() {
            if self.min_sum[pos] != self.sum[pos] {
                return Err(pos);
            }
        }
        for pos in 1..first_leaf {
            let (l, r) = (2 * pos, 2 * pos + 1);
            if self.sum[pos] != self.sum[l] + self.sum[r]
                || self.min_sum[pos] != self.min_sum[l].min(self.sum[l] + self.min_sum[r])
            {
                return Err(pos);
            }
        }
        Ok(())
    }

    fn check_index(&self, index: usize) {
        assert!(
            index >= 1 && index <= self.capacity,
            "index {index} outside 1..={}",
            self.capacity
        );
    }
}

/// Iterator returned by [`MinPrefixTree::cover`].
#[derive(Debug, Clone)]
pub struct Cover {
    node: usize,
    remaining: usize,
    // Leaf count of the subtree rooted at `node`.
    half: usize,
}

impl Iterator for Cover {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.remaining > 0 {
            if self.remaining == self.half {
                // Whole subtree requested.
                self.remaining = 0;
                return Some(self.node);
            }
            self.half >>= 1;
            if self.remaining >= self.half {
                let left = 2 * self.node;
                self.node = left + 1;
                self.remaining -= self.half;
                return Some(left);
            }
            self.node *= 2;
        }
        None
    }
}
