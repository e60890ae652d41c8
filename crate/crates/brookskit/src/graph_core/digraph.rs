use super::bitset::VertexSet;
use super::graph::Graph;
use crate::error::{Error, Result};
use serde::ser::{Serialize, SerializeStruct, Serializer};

/// Directed graph whose underlying undirected graph is simple; an edge may
/// carry one arc or both (a bidirected edge).
///
/// `split` optionally records the independent side A of a kernel-lemma
/// construction: every arc inside V − A is bidirected and A is independent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    pub split: Option<VertexSet>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            out: vec![VertexSet::new(n); n],
            inn: vec![VertexSet::new(n); n],
            split: None,
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::Validation(format!("arc ({u}, {v}) is a loop or out of range")));
            }
            if !d.add_arc(u, v) {
                return Err(Error::Validation(format!("duplicate arc ({u}, {v})")));
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.out[u].insert(v) {
            self.inn[v].insert(u);
            true
        } else {
            false
        }
    }

    pub fn add_bidirected(&mut self, u: usize, v: usize) {
        self.add_arc(u, v);
        self.add_arc(v, u);
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn is_bidirected(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Arcs sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.out[u].iter().map(move |v| (u, v))).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    /// Bidirected edges as `(u, v)` with `u < v`.
    pub fn bidirected_pairs(&self) -> Vec<(usize, usize)> {
        self.arcs().into_iter().filter(|&(u, v)| u < v && self.has_arc(v, u)).collect()
    }

    /// Neighbors in the underlying graph.
    pub fn adjacent(&self, v: usize) -> VertexSet {
        self.out[v].union(&self.inn[v])
    }

    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.arcs() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn induced(&self, set: &VertexSet) -> (Digraph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut d = Digraph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.out[v].iter() {
                if inv[w] != usize::MAX {
                    d.add_arc(i, inv[w]);
                }
            }
        }
        d.split = self.split.as_ref().map(|a| VertexSet::from_iter(map.len(), (0..map.len()).filter(|&i| a.contains(map[i]))));
        (d, map)
    }

    /// `set` is independent in the underlying graph and every vertex of
    /// `within − set` has an out-neighbor in `set`.
    pub fn is_kernel_of(&self, set: &VertexSet, within: &VertexSet) -> bool {
        if !set.is_subset(within) {
            return false;
        }
        if set.iter().any(|v| self.out[v].intersects(set)) {
            return false;
        }
        within.difference(set).iter().all(|v| self.out[v].intersects(set))
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Digraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("arcs", &self.arcs())?;
        st.serialize_field("bidirected", &self.bidirected_pairs())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_pairs() {
        let mut d = Digraph::new(3);
        d.add_bidirected(0, 1);
        d.add_arc(1, 2);
        assert_eq!(d.out_degree(1), 2);
        assert_eq!(d.in_degree(1), 1);
        assert_eq!(d.bidirected_pairs(), vec![(0, 1)]);
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.underlying().m(), 2);
        assert!(Digraph::from_arcs(2, &[(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn kernel_check() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let all = VertexSet::full(3);
        for v in 0..3 {
            assert!(!d.is_kernel_of(&VertexSet::singleton(3, v), &all));
        }
        let p = Digraph::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        assert!(p.is_kernel_of(&VertexSet::singleton(3, 1), &all));
    }
}
