//! Brute-force reference implementations.
//!
//! Nothing here is fast; everything here is simple enough to trust. The
//! graph-level connectivity is computed two independent ways (vertex-split
//! max-flow and subset enumeration), the cut-line minimum by scanning every
//! line, and the prefix-tree queries by scanning a plain array.

use std::collections::VecDeque;

use crate::connectivity::{n_xy, CutLine};
use crate::diagram::TrapezoidDiagram;
use crate::graph::IntersectionGraph;
use crate::mbit::Value;

/// Largest graph for which [`kappa_bruteforce`] also runs subset
/// enumeration.
pub const SUBSET_LIMIT: usize = 12;

const INF: u32 = u32::MAX;

/// Unit vertex-capacity flow network: vertex `v` becomes `v_in -> v_out`
/// with capacity 1, and every undirected edge `{u, v}` becomes arcs
/// `u_out -> v_in` and `v_out -> u_in` of unbounded capacity.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    // Arc k and k ^ 1 are a forward/residual pair.
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn split(g: &IntersectionGraph) -> Self {
        let n = g.n();
        let mut net = Self {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 1..=n {
            net.arc(Self::vin(v), Self::vout(v), 1);
        }
        for (u, v) in g.edges() {
            net.arc(Self::vout(u), Self::vin(v), INF);
            net.arc(Self::vout(v), Self::vin(u), INF);
        }
        net
    }

    fn vin(v: usize) -> usize {
        2 * (v - 1)
    }

    fn vout(v: usize) -> usize {
        2 * (v - 1) + 1
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally vertex-disjoint `s`-`t` paths for non-adjacent
    /// `s`, `t`, stopping early once `limit` paths are found.
    pub fn disjoint_paths(&self, s: usize, t: usize, limit: usize) -> usize {
        self.max_flow(s, t, limit).0
    }

    /// Minimum set of vertices separating non-adjacent `s` and `t`.
    pub fn min_separator(&self, s: usize, t: usize) -> Vec<usize> {
        let (_, cap) = self.max_flow(s, t, usize::MAX);
        let reach = self.residual_reach(Self::vout(s), &cap);
        (1..=self.out.len() / 2)
            .filter(|&v| reach[Self::vin(v)] != usize::MAX && reach[Self::vout(v)] == usize::MAX)
            .filter(|&v| v != s)
            .collect()
    }

    // BFS over arcs with residual capacity; entry is the arc used to reach
    // each node, `usize::MAX` if unreached.
    fn residual_reach(&self, source: usize, cap: &[u32]) -> Vec<usize> {
        let mut via = vec![usize::MAX; self.out.len()];
        via[source] = usize::MAX - 1;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let w = self.head[e];
                if cap[e] > 0 && via[w] == usize::MAX {
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        via
    }

    fn max_flow(&self, s: usize, t: usize, limit: usize) -> (usize, Vec<u32>) {
        let mut cap = self.cap.clone();
        let (source, sink) = (Self::vout(s), Self::vin(t));
        let mut flow = 0;
        while flow < limit {
            let via = self.residual_reach(source, &cap);
            if via[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let e = via[w];
                if cap[e] != INF {
                    cap[e] -= 1;
                }
                if cap[e ^ 1] != INF {
                    cap[e ^ 1] += 1;
                }
                w = self.head[e ^ 1];
            }
            flow += 1;
        }
        (flow, cap)
    }
}

/// Connectivity as the minimum local connectivity over non-adjacent pairs.
pub fn kappa_flow(g: &IntersectionGraph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let net = FlowNetwork::split(g);
    let mut best = n - 2;
    for s in 1..=n {
        for t in s + 1..=n {
            if !g.has_edge(s, t) {
                best = best.min(net.disjoint_paths(s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// A minimum vertex cut, or `None` for complete graphs.
pub fn min_vertex_cut(g: &IntersectionGraph) -> Option<Vec<usize>> {
    if g.is_complete() {
        return None;
    }
    let net = FlowNetwork::split(g);
    let mut best: Option<(usize, usize, usize)> = None;
    for s in 1..=g.n() {
        for t in s + 1..=g.n() {
            if !g.has_edge(s, t) {
                let limit = best.map_or(usize::MAX, |(k, _, _)| k);
                let k = net.disjoint_paths(s, t, limit);
                if k < limit {
                    best = Some((k, s, t));
                }
            }
        }
    }
    best.map(|(_, s, t)| net.min_separator(s, t))
}

/// Smallest `k` such that removing some `k` vertices disconnects the rest.
/// Exponential in `n`.
pub fn kappa_subsets(g: &IntersectionGraph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0..n)
        .find(|&k| subsets(n, k).any(|removed| g.is_vertex_cut(&removed)))
        .expect("a non-complete graph has a vertex cut")
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |mask| mask.count_ones() as usize == k)
        .map(move |mask| (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect())
}

/// Graph-level connectivity; cross-checked by subset enumeration up to
/// [`SUBSET_LIMIT`] vertices.
pub fn kappa_bruteforce(g: &IntersectionGraph) -> usize {
    assert!(g.n() >= 1);
    let flow = kappa_flow(g);
    if g.n() <= SUBSET_LIMIT {
        let by_subsets = kappa_subsets(g);
        assert_eq!(flow, by_subsets, "flow and subset oracles disagree");
    }
    flow
}

/// Minimum of `N(x, y)` over every line, or `n - 1` when none separates.
pub fn kappa_cutline_bruteforce(dg: &TrapezoidDiagram) -> usize {
    let max = 2 * dg.n() - 1;
    (1..=max)
        .flat_map(|x| (1..=max).map(move |y| CutLine::new(x, y)))
        .filter_map(|line| n_xy(dg, line))
        .min()
        .unwrap_or(dg.n() - 1)
}

/// Operation on a prefix-minimum array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixOp {
    Update(usize, Value),
    PrefixSum(usize),
    MinPrefix(usize),
}

/// Plain array with linear-scan queries, 1-based.
#[derive(Debug, Clone)]
pub struct NaiveMinPrefix {
    values: Vec<Value>,
}

impl NaiveMinPrefix {
    pub fn new(n: usize) -> Self {
        Self { values: vec![0; n] }
    }

    pub fn update(&mut self, index: usize, value: Value) {
        self.values[index - 1] = value;
    }

    pub fn prefix_sum(&self, index: usize) -> Value {
        self.values[..index].iter().sum()
    }

    pub fn min_prefix(&self, index: usize) -> Value {
        let mut running = 0;
        let mut best = Value::MAX;
        for &v in &self.values[..index] {
            running += v;
            best = best.min(running);
        }
        best
    }

    /// Applies `op`; queries return their answer.
    pub fn apply(&mut self, op: PrefixOp) -> Option<Value> {
        match op {
            PrefixOp::Update(i, v) => {
                self.update(i, v);
                None
            }
            PrefixOp::PrefixSum(i) => Some(self.prefix_sum(i)),
            PrefixOp::MinPrefix(i) => Some(self.min_prefix(i)),
        }
    }
}

/// Query answers of `ops` run against a fresh [`NaiveMinPrefix`].
pub fn naive_min_prefix_model(n: usize, ops: &[PrefixOp]) -> Vec<Value> {
    let mut model = NaiveMinPrefix::new(n);
    ops.iter().filter_map(|&op| model.apply(op)).collect()
}

/// Calls `visit` once per simple cycle of length >= 3, each given as a
/// vertex sequence starting at its smallest vertex. Exponential.
pub fn for_each_cycle(g: &IntersectionGraph, mut visit: impl FnMut(&[usize])) {
    let n = g.n();
    let mut on_path = vec![false; n + 1];
    let mut path = Vec::new();
    for start in 1..=n {
        path.push(start);
        on_path[start] = true;
        extend_cycles(g, start, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
    }
}

fn extend_cycles(
    g: &IntersectionGraph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            // Each cycle is reported once: second vertex below the last.
            visit(path);
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycles(g, start, path, on_path, visit);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Whether some simple cycle has odd length.
pub fn has_odd_cycle(g: &IntersectionGraph) -> bool {
    let mut found = false;
    for_each_cycle(g, |c| found |= c.len() % 2 == 1);
    found
}

/// A cycle of length at least `min_len` without a chord.
pub fn chordless_cycle(g: &IntersectionGraph, min_len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_cycle(g, |c| {
        if found.is_none() && c.len() >= min_len && is_chordless(g, c) {
            found = Some(c.to_vec());
        }
    });
    found
}

fn is_chordless(g: &IntersectionGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    (0..k).all(|p| {
        (p + 2..k)
            .filter(|&q| !(p == 0 && q == k - 1))
            .all(|q| !g.has_edge(cycle[p], cycle[q]))
    })
}
