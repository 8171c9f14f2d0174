use std::collections::VecDeque;

/// Simple undirected graph on vertices `1..=n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    // adjacency[v - 1] is the sorted neighbour list of v.
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl IntersectionGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    ///
    /// Panics on self-loops or endpoints outside `1..=n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v, "self-loop at {u}");
            assert!((1..=n).contains(&u) && (1..=n).contains(&v), "edge ({u}, {v}) outside 1..={n}");
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        Self::from_unsorted(adjacency)
    }

    pub(crate) fn from_unsorted(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adjacency, m }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i + 1).map(move |&j| (i + 1, j)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// Connected components of the graph with `removed` vertices deleted.
    /// Returns the component id of each vertex (`None` for removed ones)
    /// and the number of components.
    pub fn components_without(&self, removed: &[usize]) -> (Vec<Option<usize>>, usize) {
        let n = self.n();
        let mut gone = vec![false; n + 1];
        for &v in removed {
            gone[v] = true;
        }
        let mut comp = vec![None; n + 1];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 1..=n {
            if gone[start] || comp[start].is_some() {
                continue;
            }
            comp[start] = Some(count);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !gone[w] && comp[w].is_none() {
                        comp[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        comp.remove(0);
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components_without(&[]).1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Whether deleting `removed` leaves at least two components.
    pub fn is_vertex_cut(&self, removed: &[usize]) -> bool {
        self.components_without(removed).1 >= 2
    }
}
