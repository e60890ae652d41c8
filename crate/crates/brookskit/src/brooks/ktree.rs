use super::trace::{Step, Tracer};
use super::{color_brooks, color_with, two_color, Strategy, StrategyReport};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::bridged_ktree;
use crate::graph_core::{Color, Coloring, Graph, VertexSet};
use serde::Serialize;
use std::collections::VecDeque;

pub fn strategy_ktree(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Ktree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemainingComponent {
    pub vertices: Vec<usize>,
    pub max_degree: usize,
}

/// Vertices removed one per component until every component has maximum
/// degree below k, never leaving a k-tree behind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TverbergSelection {
    pub k: usize,
    pub removed: Vec<usize>,
    pub components: Vec<RemainingComponent>,
}

impl TverbergSelection {
    pub fn verify(&self, g: &Graph) -> bool {
        let removed = VertexSet::from_slice(g.n(), &self.removed);
        let rest = g.all_vertices().difference(&removed);
        g.is_independent(&removed)
            && g.components_within(&rest).iter().all(|c| {
                let (h, _) = g.induced(c);
                h.max_degree() < self.k && !bridged_ktree(&h, self.k)
            })
    }
}

fn no_ktree_left(c: &Graph, v: usize, k: usize) -> bool {
    let mut rest = c.all_vertices();
    rest.remove(v);
    c.components_within(&rest).iter().all(|p| !bridged_ktree(&c.induced(p).0, k))
}

pub fn tverberg_select(g: &Graph, k: usize) -> Result<TverbergSelection> {
    let n = g.n();
    if k < 3 || g.max_degree() != k {
        return Err(Error::precondition(format!(
            "selection needs k = Δ ≥ 3, got k = {k}, Δ = {}",
            g.max_degree()
        )));
    }
    if !g.is_connected() {
        return Err(Error::precondition("selection needs a connected graph"));
    }
    if g.is_complete() && n == k + 1 {
        return Err(Error::precondition_with(format!("graph is K_{}", k + 1), (0..n).collect()));
    }
    if bridged_ktree(g, k) {
        return Err(Error::precondition_with(format!("graph is a {k}-tree"), (0..n).collect()));
    }
    let mut removed = Vec::new();
    let mut components = Vec::new();
    let mut queue = VecDeque::from([g.all_vertices()]);
    while let Some(comp) = queue.pop_front() {
        let (c, map) = g.induced(&comp);
        if c.max_degree() < k {
            components.push(RemainingComponent {
                vertices: comp.to_vec(),
                max_degree: c.max_degree(),
            });
            continue;
        }
        let v = (0..c.n())
            .find(|&v| c.degree(v) == k && no_ktree_left(&c, v, k))
            .ok_or_else(|| Error::invariant("no degree-k vertex avoids leaving a k-tree"))?;
        removed.push(map[v]);
        let mut rest = comp;
        rest.remove(map[v]);
        queue.extend(g.components_within(&rest));
    }
    components.sort_by_key(|c| c.vertices[0]);
    let sel = TverbergSelection { k, removed, components };
    ensure!(sel.verify(g), "selected vertices are not independent or left a k-tree");
    Ok(sel)
}

pub(crate) fn color_regular(g: &Graph, k: usize, t: &mut Tracer) -> Result<Coloring> {
    let sel = tverberg_select(g, k)?;
    for &v in &sel.removed {
        t.push(Step::TverbergRemove { vertex: t.v(v) });
    }
    let removed = VertexSet::from_slice(g.n(), &sel.removed);
    t.push(Step::FreshClass {
        class: t.vs(removed.iter()),
        color: k as Color,
    });
    let (h, map) = g.without(&removed);
    let hc = if k == 3 {
        two_color(&h, &mut t.child(&map))?
    } else {
        color_with(&h, k - 1, Strategy::Ktree, &mut t.child(&map))?
    };
    let mut coloring = Coloring::empty(g.n());
    for (i, &v) in map.iter().enumerate() {
        coloring.set(v, hc.get(i).unwrap());
    }
    for v in removed.iter() {
        coloring.set(v, k as Color);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;

    #[test]
    fn selection_examples() {
        let s = tverberg_select(&complete_bipartite(3, 3), 3).unwrap();
        assert!(s.verify(&complete_bipartite(3, 3)));
        // Two K4s joined by two independent edges.
        let mut g = complete(4).disjoint_union(&complete(4));
        g.add_edge(0, 4);
        g.add_edge(1, 5);
        let s = tverberg_select(&g, 4).unwrap();
        assert!(s.verify(&g));
        let first = s.removed[0];
        assert!((0..8).filter(|&v| g.degree(v) == 4).any(|v| v == first));
    }

    #[test]
    fn selection_preconditions() {
        assert!(tverberg_select(&complete(5), 4).is_err());
        let mut two = complete(4).disjoint_union(&complete(4));
        two.add_edge(0, 4);
        assert!(tverberg_select(&two, 4).is_err());
        assert!(tverberg_select(&cycle(5), 3).is_err());
    }

    #[test]
    fn rejects_vertices_that_leave_a_ktree() {
        // Triangle 0-1-2 hangs off vertex 3 through 2; removing 3 would
        // leave the triangle, an odd cycle.
        let mut g = Graph::new(9);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 6), (3, 7), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8)] {
            g.add_edge(a, b);
        }
        let s = tverberg_select(&g, 3).unwrap();
        assert!(s.verify(&g));
        assert!(!no_ktree_left(&g, 3, 3));
        assert_eq!(s.removed[0], 2);
    }
}
