//! Orientations toward an even cycle, Eulerian sub-digraph parity counts,
//! and the resulting degree-choosability certificates.

use crate::choosability::rubin::{rubin_even_cycle, EvenCycle};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::is_two_connected;
use crate::graph_core::{Digraph, Graph, VertexSet};
use crate::limits;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianCounts {
    /// Eulerian sub-digraphs with an even number of arcs, the empty one included.
    pub ee: u64,
    pub eo: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordRule {
    /// The chord points the same way around as the cycle arcs between its ends.
    #[default]
    AsCycle,
    Reversed,
}

/// Orients `g` so that every vertex has an in-arc and every directed cycle
/// lies inside the even cycle `h`: the cycle is oriented around, then the
/// other vertices follow by distance to it, arcs pointing away from it.
pub fn at_orient_toward(g: &Graph, h: &EvenCycle, chord_rule: ChordRule) -> Result<Digraph> {
    if !h.verify(g) {
        return Err(Error::precondition_with(
            "target is not an induced even cycle with at most one chord",
            h.order.clone(),
        ));
    }
    if !is_two_connected(g) {
        return Err(Error::precondition("orientation needs a 2-connected graph"));
    }
    let n = g.n();
    let k = h.order.len();
    let hset = h.vertex_set(n);
    let dist = g.distances_from(&hset);
    let mut pos = vec![0usize; n];
    for (i, &v) in h.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut sigma: Vec<usize> = (0..n).filter(|&v| !hset.contains(v)).collect();
    sigma.sort_by_key(|&v| (dist[v], v));
    for (i, &v) in sigma.iter().enumerate() {
        pos[v] = k + i;
    }
    let mut d = Digraph::new(n);
    for i in 0..k {
        d.add_arc(h.order[i], h.order[(i + 1) % k]);
    }
    if let Some((a, b)) = h.chord {
        let (a, b) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        match chord_rule {
            ChordRule::AsCycle => d.add_arc(a, b),
            ChordRule::Reversed => d.add_arc(b, a),
        };
    }
    for (u, v) in g.edges() {
        if hset.contains(u) && hset.contains(v) {
            continue;
        }
        if pos[u] < pos[v] {
            d.add_arc(u, v);
        } else {
            d.add_arc(v, u);
        }
    }
    for v in 0..n {
        ensure!(d.in_degree(v) >= 1, "vertex {v} has no in-arc");
    }
    Ok(d)
}

/// Depth-first choice over arcs; a vertex must balance once its last arc
/// has been decided.
struct Counter<'a> {
    arcs: &'a [(usize, usize)],
    /// Vertices whose last incident arc has index i.
    closes: Vec<Vec<usize>>,
    balance: Vec<i32>,
    chosen: Vec<bool>,
    allowed: Option<&'a VertexSet>,
    counts: EulerianCounts,
    nodes: u64,
    budget: u64,
}

impl Counter<'_> {
    fn rec(&mut self, i: usize, size: usize) -> Result<()> {
        self.nodes += 1;
        limits::check("Eulerian subgraph search nodes", self.nodes as usize, self.budget as usize)?;
        if i == self.arcs.len() {
            if let (Some(h), true) = (self.allowed, size > 0) {
                let outside = (0..self.arcs.len())
                    .filter(|&j| self.chosen[j])
                    .find(|&j| !h.contains(self.arcs[j].0) || !h.contains(self.arcs[j].1));
                ensure!(outside.is_none(), "Eulerian subgraph leaves the target cycle");
            }
            if size.is_multiple_of(2) {
                self.counts.ee += 1;
            } else {
                self.counts.eo += 1;
            }
            return Ok(());
        }
        let (u, v) = self.arcs[i];
        for take in [false, true] {
            if take {
                self.balance[u] += 1;
                self.balance[v] -= 1;
            }
            self.chosen[i] = take;
            if self.closes[i].iter().all(|&x| self.balance[x] == 0) {
                self.rec(i + 1, size + take as usize)?;
            }
            if take {
                self.balance[u] -= 1;
                self.balance[v] += 1;
            }
        }
        self.chosen[i] = false;
        Ok(())
    }
}

fn count(d: &Digraph, allowed: Option<&VertexSet>) -> Result<EulerianCounts> {
    let n = d.n();
    let arcs = d.arcs();
    let mut last = vec![usize::MAX; n];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        last[u] = i;
        last[v] = i;
    }
    let mut closes = vec![Vec::new(); arcs.len()];
    for v in 0..n {
        if last[v] != usize::MAX {
            closes[last[v]].push(v);
        }
    }
    let mut c = Counter {
        arcs: &arcs,
        closes,
        balance: vec![0; n],
        chosen: vec![false; arcs.len()],
        allowed,
        counts: EulerianCounts { ee: 0, eo: 0 },
        nodes: 0,
        budget: limits::current().search_nodes,
    };
    c.rec(0, 0)?;
    Ok(c.counts)
}

/// Exact counts of Eulerian sub-digraphs (in-degree = out-degree
/// everywhere) by arc parity.
pub fn eulerian_counts(d: &Digraph) -> Result<EulerianCounts> {
    limits::check("arcs for Eulerian counting", d.arc_count(), limits::current().euler_arcs)?;
    count(d, None)
}

#[derive(Clone, Debug, Serialize)]
pub struct AtCertificate {
    pub even_cycle: EvenCycle,
    pub chord_rule: ChordRule,
    pub arcs: Vec<(usize, usize)>,
    pub counts: EulerianCounts,
    pub out_degrees: Vec<usize>,
}

impl AtCertificate {
    pub fn digraph(&self, n: usize) -> Result<Digraph> {
        Digraph::from_arcs(n, &self.arcs)
    }

    /// Re-checks the orientation against `g` and recounts.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(d) = self.digraph(g.n()) else {
            return false;
        };
        let oriented = d.underlying() == *g && d.bidirected_pairs().is_empty();
        oriented
            && (0..g.n()).all(|v| d.out_degree(v) < g.degree(v) && d.out_degree(v) == self.out_degrees[v])
            && eulerian_counts(&d).is_ok_and(|c| c == self.counts && c.ee != c.eo)
    }
}

/// Certificate that `g` is degree-choosable: an orientation with
/// d⁺(v) < d(v) and unequal even and odd Eulerian counts.
pub fn at_certify_degree_choosable(g: &Graph) -> Result<AtCertificate> {
    at_certify_with(g, ChordRule::AsCycle)
}

pub fn at_certify_with(g: &Graph, chord_rule: ChordRule) -> Result<AtCertificate> {
    let h = rubin_even_cycle(g)?;
    let d = at_orient_toward(g, &h, chord_rule)?;
    let counts = count(&d, Some(&h.vertex_set(g.n())))?;
    ensure!(counts.ee != counts.eo, "even and odd Eulerian counts agree: {counts:?}");
    let cert = AtCertificate {
        even_cycle: h,
        chord_rule,
        arcs: d.arcs(),
        counts,
        out_degrees: (0..g.n()).map(|v| d.out_degree(v)).collect(),
    };
    ensure!(cert.verify(g), "certificate failed its own check");
    Ok(cert)
}
