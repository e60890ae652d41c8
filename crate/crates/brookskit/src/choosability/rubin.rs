use crate::error::{Error, Result};
use crate::graph_core::structure::is_two_connected;
use crate::graph_core::{Graph, VertexSet};
use crate::limits;
use serde::Serialize;

/// An induced subgraph that is an even cycle plus at most one chord.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCycle {
    /// Cycle vertices in cyclic order.
    pub order: Vec<usize>,
    pub chord: Option<(usize, usize)>,
}

impl EvenCycle {
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.order)
    }

    /// Re-checks the structure from scratch against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.order.len();
        let set = self.vertex_set(g.n());
        if k < 4 || k % 2 == 1 || set.len() != k {
            return false;
        }
        if !(0..k).all(|i| g.has_edge(self.order[i], self.order[(i + 1) % k])) {
            return false;
        }
        let chords = g.edges_within(&set) - k;
        match self.chord {
            None => chords == 0,
            Some((a, b)) => chords == 1 && g.has_edge(a, b) && set.contains(a) && set.contains(b),
        }
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    path: Vec<usize>,
    on: VertexSet,
    edges: usize,
    nodes: u64,
    budget: u64,
}

impl CycleSearch<'_> {
    /// Extends `path` (starting at its least vertex) to a cycle of length
    /// `len` whose vertex set spans at most one extra edge.
    fn rec(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Scale {
                what: "search nodes for even cycles",
                value: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        if self.path.len() == self.len {
            // Closing edge, and the second vertex below the last avoids
            // visiting each cycle in both directions.
            return Ok(self.g.has_edge(last, start) && self.path[1] < last);
        }
        for w in self.g.neighbors(last).iter() {
            if w <= start || self.on.contains(w) {
                continue;
            }
            let added = self.g.degree_in(w, &self.on);
            // Path edges so far: len(path) - 1; the new one adds one more.
            let extra = self.edges + added - self.path.len();
            let closing = if self.path.len() + 1 == self.len { 1 } else { 0 };
            if extra > 1 + closing {
                continue;
            }
            self.path.push(w);
            self.on.insert(w);
            self.edges += added;
            if self.rec()? {
                return Ok(true);
            }
            self.edges -= added;
            self.on.remove(w);
            self.path.pop();
        }
        Ok(false)
    }
}

/// Finds an induced even cycle with at most one chord in a 2-connected
/// graph that is neither complete nor an odd cycle. Shorter cycles first,
/// then lexicographically by the search order.
pub fn rubin_even_cycle(g: &Graph) -> Result<EvenCycle> {
    if !is_two_connected(g) {
        return Err(Error::precondition("even-cycle search needs a 2-connected graph"));
    }
    if g.is_complete() {
        return Err(Error::precondition_with("graph is complete", (0..g.n()).collect()));
    }
    if g.is_odd_cycle() {
        return Err(Error::precondition_with("graph is an odd cycle", g.cycle_order().unwrap()));
    }
    let budget = limits::current().search_nodes;
    let mut nodes = 0;
    for len in (4..=g.n()).step_by(2) {
        for s in 0..g.n() {
            let mut search = CycleSearch {
                g,
                len,
                path: vec![s],
                on: VertexSet::singleton(g.n(), s),
                edges: 0,
                nodes,
                budget,
            };
            let found = search.rec()?;
            nodes = search.nodes;
            if found {
                let order = search.path;
                let set = VertexSet::from_slice(g.n(), &order);
                let mut chord = None;
                for (i, &a) in order.iter().enumerate() {
                    for &b in order.iter().skip(i + 2) {
                        if g.has_edge(a, b) && !(i == 0 && b == order[len - 1]) {
                            chord = Some((a.min(b), a.max(b)));
                        }
                    }
                }
                let h = EvenCycle { order, chord };
                crate::error::ensure!(h.verify(g) && set.len() == len, "even cycle {h:?} failed its structural check");
                return Ok(h);
            }
        }
    }
    Err(Error::invariant("no induced even cycle with at most one chord in a 2-connected graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;

    #[test]
    fn examples() {
        let h = rubin_even_cycle(&cycle(6)).unwrap();
        assert_eq!(h.order.len(), 6);
        assert_eq!(h.chord, None);
        let h = rubin_even_cycle(&diamond()).unwrap();
        assert_eq!(h.order.len(), 4);
        assert!(h.chord.is_some());
        let p = petersen();
        let h = rubin_even_cycle(&p).unwrap();
        assert_eq!(h.order.len(), 6);
        assert!(h.verify(&p) && h.chord.is_none());
    }

    #[test]
    fn preconditions() {
        assert!(rubin_even_cycle(&complete(4)).is_err());
        assert!(rubin_even_cycle(&cycle(7)).is_err());
        assert!(rubin_even_cycle(&path(4)).is_err());
    }

    #[test]
    fn exhaustive_small() {
        use crate::graph_core::enumerate::connected_graph_classes;
        for n in 4..=7 {
            for g in connected_graph_classes(n) {
                if is_two_connected(&g) && !g.is_complete() && !g.is_odd_cycle() {
                    assert!(rubin_even_cycle(&g).unwrap().verify(&g), "{g:?}");
                }
            }
        }
    }
}
