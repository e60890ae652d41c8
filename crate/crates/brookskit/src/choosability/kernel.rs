use crate::brooks::trace::{Step, TraceStep, Tracer};
use crate::brooks::{color_brooks, Strategy, StrategyReport};
use crate::error::{ensure, Error, Result};
use crate::graph_core::clique::{clique_number, max_independent_set};
use crate::graph_core::structure::order_by_decreasing_distance;
use crate::graph_core::{greedy_color, Color, Coloring, Digraph, Graph, ListAssignment, VertexSet};
use serde::Serialize;

pub fn strategy_kernel(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Kernel)
}

/// Induced subgraph H whose A–B edges form disjoint cycles covering it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCore {
    pub h: Vec<usize>,
    pub a_h: Vec<usize>,
    pub b_h: Vec<usize>,
    /// A–B edges at each vertex of `h`, in the same order.
    pub cross_degree: Vec<usize>,
    /// Vertices deleted while whittling, in order.
    pub deleted: Vec<usize>,
}

impl KernelCore {
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.h)
    }
}

fn cross_degree(g: &Graph, a: &VertexSet, h: &VertexSet, v: usize) -> usize {
    let other = if a.contains(v) { h.difference(a) } else { h.intersection(a) };
    g.degree_in(v, &other)
}

fn cross_edges(g: &Graph, a: &VertexSet, h: &VertexSet) -> usize {
    h.intersection(a).iter().map(|v| g.degree_in(v, h)).sum()
}

/// Shrinks H = G one vertex at a time while the A–B edge count stays at
/// least |H|, until every cross degree is 2.
pub fn kernel_whittle(g: &Graph, a: &VertexSet) -> Result<KernelCore> {
    let n = g.n();
    let delta = g.max_degree();
    if !g.is_connected() || !g.is_regular() || delta < 3 {
        return Err(Error::precondition(format!(
            "whittling needs a connected regular graph with Δ ≥ 3, got Δ = {delta}, δ = {}",
            g.min_degree()
        )));
    }
    if g.is_complete() {
        return Err(Error::precondition_with(format!("graph is K_{}", n), (0..n).collect()));
    }
    if !g.is_independent(a) {
        return Err(Error::precondition("A is not independent"));
    }
    if a.len() * delta < n {
        return Err(Error::BoundViolation(format!(
            "independent set of size {} is below n/Δ = {n}/{delta}",
            a.len()
        )));
    }
    let mut h = g.all_vertices();
    let mut deleted = Vec::new();
    loop {
        let e = cross_edges(g, a, &h);
        ensure!(!h.is_empty() && e >= h.len(), "cross edges {e} fell below |H| = {}", h.len());
        let d: Vec<(usize, usize)> = h.iter().map(|v| (cross_degree(g, a, &h, v), v)).collect();
        let (dmin, vmin) = *d.iter().min().unwrap();
        let dmax = d.iter().map(|p| p.0).max().unwrap();
        let victim = if dmin <= 1 || dmin < dmax {
            vmin
        } else if dmin > 2 {
            h.first().unwrap()
        } else {
            break;
        };
        h.remove(victim);
        deleted.push(victim);
    }
    let cross = h.iter().map(|v| cross_degree(g, a, &h, v)).collect();
    Ok(KernelCore {
        h: h.to_vec(),
        a_h: h.intersection(a).to_vec(),
        b_h: h.difference(a).to_vec(),
        cross_degree: cross,
        deleted,
    })
}

/// Orients G[H]: B–B edges both ways, A–B edges along their cycles, each
/// cycle walked from its lowest vertex toward the smaller cross neighbor.
/// Returns the digraph on local labels 0..|H| and the map to `g`.
pub fn kernel_orient(g: &Graph, core: &KernelCore) -> Result<(Digraph, Vec<usize>)> {
    let n = g.n();
    let hset = core.vertex_set(n);
    let aset = VertexSet::from_slice(n, &core.a_h);
    let (hg, map) = g.induced(&hset);
    let m = hg.n();
    let local_a = VertexSet::from_iter(m, (0..m).filter(|&i| aset.contains(map[i])));
    let mut d = Digraph::new(m);
    let cross = |x: usize| -> Vec<usize> {
        hg.neighbors(x)
            .iter()
            .filter(|&y| local_a.contains(x) != local_a.contains(y))
            .collect()
    };
    for (u, v) in hg.edges() {
        if !local_a.contains(u) && !local_a.contains(v) {
            d.add_bidirected(u, v);
        }
    }
    let mut seen = VertexSet::new(m);
    for start in 0..m {
        if seen.contains(start) {
            continue;
        }
        ensure!(cross(start).len() == 2, "core vertex {} has cross degree {}", map[start], cross(start).len());
        let (mut prev, mut cur) = (start, cross(start)[0]);
        seen.insert(start);
        d.add_arc(start, cur);
        while cur != start {
            seen.insert(cur);
            let nb = cross(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            d.add_arc(cur, next);
            (prev, cur) = (cur, next);
        }
    }
    for v in 0..m {
        ensure!(d.out_degree(v) < hg.degree(v), "vertex {} has out-degree {} ≥ its degree", map[v], d.out_degree(v));
    }
    d.split = Some(local_a);
    Ok((d, map))
}

/// Kernel of D[within] for a digraph with an independent split A whose
/// complement is bidirected: take A ∩ U when every B-vertex points into it;
/// otherwise a B-vertex with no arc into A joins the kernel and its closed
/// neighborhood leaves U.
pub fn kernel_within(d: &Digraph, within: &VertexSet) -> Result<VertexSet> {
    let Some(a) = d.split.as_ref() else {
        return crate::oracle::find_kernel(d, within)?.ok_or_else(|| Error::precondition("subdigraph has no kernel"));
    };
    let mut u = within.clone();
    let mut kernel = VertexSet::new(d.n());
    loop {
        let au = u.intersection(a);
        match u.difference(a).iter().find(|&v| !d.out_neighbors(v).intersects(&au)) {
            None => {
                kernel.union_with(&au);
                break;
            }
            Some(v) => {
                kernel.insert(v);
                u.remove(v);
                u.difference_with(&d.adjacent(v));
            }
        }
    }
    ensure!(d.is_kernel_of(&kernel, within), "constructed set is not a kernel");
    Ok(kernel)
}

/// Colors a digraph from lists with |L(v)| ≥ d⁺(v) + 1: for each color in
/// turn, a kernel of the uncolored vertices holding it takes that color.
pub fn kernel_color(d: &Digraph, lists: &ListAssignment) -> Result<Coloring> {
    Ok(kernel_color_rounds(d, lists)?.0)
}

pub(crate) fn kernel_color_rounds(d: &Digraph, lists: &ListAssignment) -> Result<(Coloring, Vec<(Color, Vec<usize>)>)> {
    let n = d.n();
    if lists.n() != n {
        return Err(Error::precondition("list assignment sized for a different digraph"));
    }
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() < d.out_degree(v) + 1) {
        return Err(Error::precondition_with("a list is shorter than out-degree + 1", vec![v]));
    }
    let mut coloring = Coloring::empty(n);
    let mut uncolored = VertexSet::full(n);
    let mut rounds = Vec::new();
    for c in lists.universe() {
        let s = VertexSet::from_iter(n, uncolored.iter().filter(|&v| lists.contains(v, c)));
        if s.is_empty() {
            continue;
        }
        let k = kernel_within(d, &s)?;
        for v in k.iter() {
            coloring.set(v, c);
            uncolored.remove(v);
        }
        rounds.push((c, k.to_vec()));
    }
    ensure!(uncolored.is_empty(), "kernel rounds left {:?} uncolored", uncolored.to_vec());
    ensure!(coloring.is_proper_total(&d.underlying()) && coloring.respects(lists), "kernel coloring is improper");
    Ok((coloring, rounds))
}

/// List-colors g from lists of size at least max{3, ω, Δ}.
pub fn brooks_list_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    let bound = 3.max(clique_number(g)?).max(g.max_degree());
    if lists.n() != g.n() {
        return Err(Error::precondition("list assignment sized for a different graph"));
    }
    if let Some(v) = (0..g.n()).find(|&v| lists.list(v).len() < bound) {
        return Err(Error::precondition_with(format!("a list has fewer than {bound} colors"), vec![v]));
    }
    let mut trace = Vec::new();
    list_color(g, lists, &mut Tracer::new(&mut trace, g.n()))
}

fn list_color(g: &Graph, lists: &ListAssignment, t: &mut Tracer) -> Result<Coloring> {
    let mut coloring = Coloring::empty(g.n());
    for comp in g.components() {
        let (c, map) = g.induced(&comp);
        let cl = lists.restrict(&map);
        let cc = list_color_component(&c, &cl, &mut t.child(&map))?;
        for (i, &v) in map.iter().enumerate() {
            coloring.set(v, cc.get(i).unwrap());
        }
    }
    Ok(coloring)
}

fn list_color_component(c: &Graph, lists: &ListAssignment, t: &mut Tracer) -> Result<Coloring> {
    let n = c.n();
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() > c.degree(v)) {
        let order = order_by_decreasing_distance(c, &VertexSet::singleton(n, v))?;
        t.push(Step::Greedy {
            reason: "list_exceeds_degree",
            toward: Some(t.v(v)),
            vertices: t.vs(order.iter().copied()),
        });
        return greedy_color(c, &order, None, Some(lists));
    }
    // Every list now has exactly d(v) = Δ colors.
    let a = max_independent_set(c)?;
    let core = kernel_whittle(c, &a)?;
    t.push(Step::KernelCore {
        core: t.vs(core.h.iter().copied()),
        independent: t.vs(core.a_h.iter().copied()),
    });
    let (d, hmap) = kernel_orient(c, &core)?;
    let hset = core.vertex_set(n);
    let (rest, rmap) = c.without(&hset);
    let rc = list_color(&rest, &lists.restrict(&rmap), &mut t.child(&rmap))?;
    let mut coloring = Coloring::empty(n);
    for (i, &v) in rmap.iter().enumerate() {
        coloring.set(v, rc.get(i).unwrap());
    }
    let residual = ListAssignment::new(
        hmap.iter()
            .map(|&v| {
                let blocked = coloring.neighbor_colors(c, v);
                lists.list(v).iter().copied().filter(|x| blocked.binary_search(x).is_err()).collect()
            })
            .collect(),
    );
    let (hc, rounds) = kernel_color_rounds(&d, &residual)?;
    for (color, kernel) in rounds {
        t.push(Step::KernelRound {
            color,
            kernel: kernel.iter().map(|&i| t.v(hmap[i])).collect(),
        });
    }
    for (i, &v) in hmap.iter().enumerate() {
        coloring.set(v, hc.get(i).unwrap());
    }
    ensure!(coloring.is_proper_total(c) && coloring.respects(lists), "kernel list coloring is improper");
    Ok(coloring)
}

/// Kernel strategy: list coloring with every list {1, …, max(3, Δ)}.
pub(crate) fn kernel_strategy_coloring(g: &Graph, trace: &mut Vec<TraceStep>) -> Result<Coloring> {
    let k = g.max_degree().max(3);
    list_color(g, &ListAssignment::uniform(g.n(), k), &mut Tracer::new(trace, g.n()))
}
