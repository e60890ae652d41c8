use super::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Validation(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Validation(format!("duplicate edge ({u}, {v})")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v, "self-loop at {u}");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.max_degree() == self.min_degree()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.adj[v].intersection_len(set) == k - 1)
    }

    /// Induced subgraph on `set`; `map[i]` is the original index of new vertex `i`.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut h = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = inv[w];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j);
                }
            }
        }
        (h, map)
    }

    pub fn without(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced(&self.all_vertices().difference(removed))
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Disjoint union followed by all edges between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut h = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                h.add_edge(u, self.n + v);
            }
        }
        h
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut h = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.add_edge(self.n + u, self.n + v);
        }
        h
    }

    /// BFS distances from `sources`; `None` for unreachable vertices.
    pub fn distances_from(&self, sources: &VertexSet) -> Vec<Option<usize>> {
        self.distances_within(sources, &self.all_vertices())
    }

    /// BFS distances inside the subgraph induced by `allowed`.
    pub fn distances_within(&self, sources: &VertexSet, allowed: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in sources.iter().filter(|&s| allowed.contains(s)) {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() && allowed.contains(w) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex set of the component of `v` inside `allowed`.
    pub fn component_within(&self, v: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        if !allowed.contains(v) {
            return seen;
        }
        seen.insert(v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if allowed.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Components of the subgraph induced by `allowed`, ordered by least vertex.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut left = allowed.clone();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_within(v, allowed);
            left.difference_with(&c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all_vertices())
    }

    /// True for n = 1 and every connected graph with n ≥ 1. The empty graph
    /// counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_within(0, &self.all_vertices()).len() == self.n
    }

    pub fn is_connected_within(&self, allowed: &VertexSet) -> bool {
        match allowed.first() {
            None => true,
            Some(v) => self.component_within(v, allowed).len() == allowed.len(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.m == self.n && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.n % 2 == 1 && self.is_cycle()
    }

    /// Two-coloring classes if the graph is bipartite (component roots side 0).
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Vertices of a cycle graph in cyclic order starting at its least
    /// vertex and continuing to its smaller neighbor.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if !self.is_cycle() {
            return None;
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = self.adj[0].first().unwrap();
        while cur != 0 {
            order.push(cur);
            let next = self.adj[cur].iter().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

/// Small named graphs used across tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs n >= 3");
        let mut g = path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v);
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i–(i+5).
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    /// Triangles {0,1,2} and {3,4,5} with the matching i–(i+3).
    pub fn prism() -> Graph {
        let mut g = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)] {
            g.add_edge(u, v);
        }
        g
    }

    /// Two triangles sharing vertex 2.
    pub fn bowtie() -> Graph {
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)] {
            g.add_edge(u, v);
        }
        g
    }

    /// K4 minus the edge 0–2; 1 and 3 are the degree-3 vertices.
    pub fn diamond() -> Graph {
        let mut g = complete(4);
        g.remove_edge(0, 2);
        g
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.min_degree(), 1);
    }

    #[test]
    fn induced_and_components() {
        let g = cycle(6);
        let keep = VertexSet::from_slice(6, &[0, 1, 3, 4]);
        let (h, map) = g.induced(&keep);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(h.components().len(), 2);
        assert!(!h.is_connected());
    }

    #[test]
    fn cycle_recognition_and_order() {
        assert!(cycle(5).is_odd_cycle());
        assert!(!cycle(6).is_odd_cycle());
        assert!(!path(5).is_cycle());
        assert_eq!(cycle(5).cycle_order().unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(petersen().is_regular());
        assert_eq!(petersen().m(), 15);
    }

    #[test]
    fn join_counts() {
        let g = cycle(5).join(&complete(3));
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 5 + 3 + 15);
        assert_eq!(g.max_degree(), 7);
    }

    #[test]
    fn degenerate_sizes() {
        let g0 = Graph::new(0);
        assert!(!g0.is_connected());
        assert_eq!(g0.max_degree(), 0);
        let g1 = Graph::new(1);
        assert!(g1.is_connected());
        assert!(g1.is_complete());
    }
}
