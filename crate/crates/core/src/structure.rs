//! Structural checks on intersection graphs: two-colouring, triangles and
//! caterpillar trees, plus an interval diagram for any caterpillar.
//!
//! On trapezoid graphs a two-colouring fails exactly when a triangle exists,
//! and the trees that occur are exactly the caterpillars.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::TrapezoidDiagram;
use crate::graph::IntersectionGraph;

/// Two-colouring; `side[v - 1]` is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    /// Vertices on side `s`, ascending.
    pub fn part(&self, s: u8) -> Vec<usize> {
        (1..=self.side.len()).filter(|&v| self.side[v - 1] == s).collect()
    }
}

/// Closed walk `v_0 v_1 ... v_{k-1}` with odd `k` and no repeated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

/// Breadth-first two-colouring. On failure returns an odd cycle formed by
/// the offending edge and the two tree paths to their common ancestor.
pub fn is_bipartite(g: &IntersectionGraph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut side: Vec<Option<u8>> = vec![None; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![0usize; n + 1];
    let mut queue = VecDeque::new();
    for root in 1..=n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(1 - su);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(odd_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: side[1..].iter().map(|s| s.unwrap()).collect(),
    })
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut p, mut q) = (u, w);
    let mut from_u = vec![p];
    let mut from_w = vec![q];
    while depth[p] > depth[q] {
        p = parent[p];
        from_u.push(p);
    }
    while depth[q] > depth[p] {
        q = parent[q];
        from_w.push(q);
    }
    while p != q {
        p = parent[p];
        q = parent[q];
        from_u.push(p);
        from_w.push(q);
    }
    // Both paths end at the common ancestor; keep it once.
    from_w.pop();
    from_u.extend(from_w.into_iter().rev());
    OddCycle(from_u)
}

/// A triangle `(i, j, k)` with `i < j < k`, if any.
pub fn has_triangle(g: &IntersectionGraph) -> Option<(usize, usize, usize)> {
    for (u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let (mut p, mut q) = (nu.partition_point(|&w| w <= v), nv.partition_point(|&w| w <= v));
        while p < nu.len() && q < nv.len() {
            match nu[p].cmp(&nv[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => return Some((u, v, nu[p])),
            }
        }
    }
    None
}

/// A caterpillar as a spine path `v_0 ... v_d` with the leaves hanging off
/// each spine vertex. `pendants[k]` belongs to `spine[k]`.
///
/// For two or more vertices the spine ends are leaves of the tree, so the
/// spine ends carry no pendants. The spine starts at the smaller end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    pub spine: Vec<usize>,
    pub pendants: Vec<Vec<usize>>,
}

impl CaterpillarDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.spine.len() + self.pendants.iter().map(Vec::len).sum::<usize>()
    }

    /// Spine edges followed by pendant edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self.spine.windows(2).map(|w| (w[0], w[1])).collect();
        for (k, leaves) in self.pendants.iter().enumerate() {
            edges.extend(leaves.iter().map(|&leaf| (self.spine[k], leaf)));
        }
        edges
    }

    pub fn to_graph(&self) -> IntersectionGraph {
        IntersectionGraph::from_edges(self.vertex_count(), self.edges())
    }

    /// Spine reversed along with its pendant lists.
    pub fn reversed(&self) -> Self {
        Self {
            spine: self.spine.iter().rev().copied().collect(),
            pendants: self.pendants.iter().rev().cloned().collect(),
        }
    }

    fn check(&self) {
        let n = self.vertex_count();
        let mut seen = vec![false; n + 1];
        let all = self.spine.iter().chain(self.pendants.iter().flatten());
        for &v in all {
            assert!((1..=n).contains(&v) && !seen[v], "vertex {v} repeated or outside 1..={n}");
            seen[v] = true;
        }
        assert_eq!(self.spine.len(), self.pendants.len(), "one pendant list per spine vertex");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaterpillarRefusal {
    NotATree,
    NotACaterpillar,
}

impl fmt::Display for CaterpillarRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaterpillarRefusal::NotATree => f.write_str("not a tree"),
            CaterpillarRefusal::NotACaterpillar => f.write_str("tree but not caterpillar"),
        }
    }
}

/// Recognizes caterpillars: a tree whose non-leaf vertices induce a path.
pub fn is_caterpillar(g: &IntersectionGraph) -> Result<CaterpillarDecomposition, CaterpillarRefusal> {
    let n = g.n();
    if n == 0 {
        return Ok(CaterpillarDecomposition { spine: vec![], pendants: vec![] });
    }
    if g.m() != n - 1 || !g.is_connected() {
        return Err(CaterpillarRefusal::NotATree);
    }
    if n <= 2 {
        return Ok(CaterpillarDecomposition {
            spine: (1..=n).collect(),
            pendants: vec![vec![]; n],
        });
    }

    let inner: Vec<usize> = (1..=n).filter(|&v| g.degree(v) > 1).collect();
    let is_inner = |v: usize| g.degree(v) > 1;
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| is_inner(w)).count();
    // The inner vertices of a tree induce a subtree; it is a path iff no
    // inner vertex has three inner neighbours.
    if inner.iter().any(|&v| inner_degree(v) > 2) {
        return Err(CaterpillarRefusal::NotACaterpillar);
    }

    let start = *inner
        .iter()
        .find(|&&v| inner_degree(v) <= 1)
        .expect("finite inner path has an end");
    let mut core = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(&next) = g
        .neighbors(cur)
        .iter()
        .find(|&&w| w != prev && is_inner(w))
    {
        core.push(next);
        prev = cur;
        cur = next;
    }

    let leaves_of = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| !is_inner(w)).collect()
    };
    let first_leaves = leaves_of(core[0]);
    let last_leaves = leaves_of(*core.last().unwrap());
    let head = first_leaves[0];
    let tail = if core.len() == 1 {
        first_leaves[1]
    } else {
        last_leaves[0]
    };

    let mut spine = Vec::with_capacity(core.len() + 2);
    spine.push(head);
    spine.extend(&core);
    spine.push(tail);
    let mut pendants = vec![vec![]];
    pendants.extend(
        core.iter()
            .map(|&v| leaves_of(v).into_iter().filter(|&w| w != head && w != tail).collect()),
    );
    pendants.push(vec![]);

    let decomposition = CaterpillarDecomposition { spine, pendants };
    Ok(if tail < head { decomposition.reversed() } else { decomposition })
}

/// Interval diagram whose intersection graph is the caterpillar, with
/// trapezoid `v` representing vertex `v`.
///
/// Spine vertex `k` gets the window `[4k, 4k + 5]`, so consecutive windows
/// overlap in `(4k + 4, 4k + 5)` and windows two apart are disjoint. Its
/// pendants get disjoint intervals inside `(4k + 1, 4k + 4)`, which meets
/// no other window. Both lines carry the same intervals.
pub fn caterpillar_to_diagram(cd: &CaterpillarDecomposition) -> TrapezoidDiagram {
    cd.check();
    let n = cd.vertex_count();
    assert!(n >= 1, "empty caterpillar has no diagram");
    let mut intervals = vec![[0.0f64; 4]; n];
    for (k, &v) in cd.spine.iter().enumerate() {
        let base = 4.0 * k as f64;
        intervals[v - 1] = [base, base + 5.0, base, base + 5.0];
        let count = cd.pendants[k].len() as f64;
        for (j, &leaf) in cd.pendants[k].iter().enumerate() {
            let lo = base + 1.0 + 3.0 * (j as f64 + 0.2) / count;
            let hi = base + 1.0 + 3.0 * (j as f64 + 0.8) / count;
            intervals[leaf - 1] = [lo, hi, lo, hi];
        }
    }
    TrapezoidDiagram::normalize(&intervals).expect("caterpillar intervals are distinct")
}

/// Random caterpillar on `n` vertices with shuffled labels.
pub fn random_caterpillar(n: usize, seed: u64) -> IntersectionGraph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (1..=n).collect();
    rand::seq::SliceRandom::shuffle(labels.as_mut_slice(), &mut rng);
    let spine_len = rng.gen_range(1..=n);
    let mut edges: Vec<(usize, usize)> = (1..spine_len).map(|k| (labels[k - 1], labels[k])).collect();
    for &leaf in &labels[spine_len..] {
        let anchor = labels[rng.gen_range(0..spine_len)];
        edges.push((anchor, leaf));
    }
    IntersectionGraph::from_edges(n, edges)
}
