//! Δ-coloring strategies, one per constructive proof of Brooks' theorem.
//!
//! Every strategy shares the same front end: exceptional components are
//! certified, graphs with Δ ≤ 2 are 2-colored, and each component is first
//! reduced by the two easy cases (a vertex of degree below k, a cutvertex)
//! before the strategy's own machinery runs on a k-regular 2-connected
//! non-complete graph.

pub mod cubic;
pub mod kempe;
pub mod ktree;
pub mod lovasz;
pub mod partition;
pub mod trace;

pub use cubic::strategy_cubic;
pub use kempe::strategy_kempe;
pub use ktree::{strategy_ktree, tverberg_select, TverbergSelection};
pub use lovasz::{find_good_p3, find_good_p3_brute, strategy_lovasz};
pub use partition::{find_obstruction_free_partition, strategy_partition, Partition2};
pub use trace::{Step, TraceStep};

use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::{blocks_and_cutvertices, is_two_connected, order_by_decreasing_distance};
use crate::graph_core::{greedy_color, Color, Coloring, Graph, VertexSet};
use serde::Serialize;
use trace::Tracer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Lovasz,
    Kempe,
    Cubic,
    Ktree,
    Partition,
    Independency,
    Kernel,
}

impl Strategy {
    pub const ALL: [Strategy; 7] = [
        Strategy::Lovasz,
        Strategy::Kempe,
        Strategy::Cubic,
        Strategy::Ktree,
        Strategy::Partition,
        Strategy::Independency,
        Strategy::Kernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Lovasz => "lovasz",
            Strategy::Kempe => "kempe",
            Strategy::Cubic => "cubic",
            Strategy::Ktree => "ktree",
            Strategy::Partition => "partition",
            Strategy::Independency => "independency",
            Strategy::Kernel => "kernel",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown strategy '{s}'")))
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Colored,
    Exceptional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionKind {
    CompleteGraph,
    OddCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exception {
    pub kind: ExceptionKind,
    /// The offending component.
    pub component: Vec<usize>,
}

impl Exception {
    /// Re-checks the witness: a K_{Δ+1} component, or an odd-cycle
    /// component when Δ = 2.
    pub fn verify(&self, g: &Graph) -> bool {
        let set = VertexSet::from_slice(g.n(), &self.component);
        if set.is_empty() || g.component_within(self.component[0], &g.all_vertices()) != set {
            return false;
        }
        let (h, _) = g.induced(&set);
        match self.kind {
            ExceptionKind::CompleteGraph => h.is_complete() && h.n() == g.max_degree() + 1,
            ExceptionKind::OddCycle => g.max_degree() == 2 && h.is_odd_cycle(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrategyReport {
    pub strategy: Strategy,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Coloring>,
    pub colors_used: usize,
    /// max{3, Δ}; equals max{3, ω, Δ} whenever the outcome is colored.
    pub bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<Exception>,
    pub trace: Vec<TraceStep>,
}

impl StrategyReport {
    /// Checks the report against the graph without trusting any of the
    /// strategy's bookkeeping.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.outcome {
            Outcome::Colored => self.coloring.as_ref().is_some_and(|c| {
                c.is_proper_total(g) && c.distinct_colors() == self.colors_used && c.palette_size() as usize <= self.bound
            }),
            Outcome::Exceptional => self.exception.as_ref().is_some_and(|e| e.verify(g)),
        }
    }
}

/// A K_{Δ+1} component, or an odd-cycle component when Δ = 2.
pub fn find_exception(g: &Graph) -> Option<Exception> {
    let delta = g.max_degree();
    for comp in g.components() {
        let (h, _) = g.induced(&comp);
        if h.is_complete() && h.n() == delta + 1 {
            return Some(Exception {
                kind: ExceptionKind::CompleteGraph,
                component: comp.to_vec(),
            });
        }
        if delta == 2 && h.is_odd_cycle() {
            return Some(Exception {
                kind: ExceptionKind::OddCycle,
                component: comp.to_vec(),
            });
        }
    }
    None
}

pub fn color_brooks(g: &Graph, strategy: Strategy) -> Result<StrategyReport> {
    let delta = g.max_degree();
    let bound = delta.max(3);
    let mut trace = Vec::new();
    if let Some(e) = find_exception(g) {
        return Ok(StrategyReport {
            strategy,
            outcome: Outcome::Exceptional,
            coloring: None,
            colors_used: 0,
            bound,
            exception: Some(e),
            trace,
        });
    }
    let coloring = if delta <= 2 {
        let mut t = Tracer::new(&mut trace, g.n());
        two_color(g, &mut t)?
    } else {
        match strategy {
            Strategy::Independency => crate::choosability::stiebitz::independency_coloring(g, &mut trace)?,
            Strategy::Kernel => crate::choosability::kernel::kernel_strategy_coloring(g, &mut trace)?,
            _ => {
                let mut t = Tracer::new(&mut trace, g.n());
                color_with(g, delta, strategy, &mut t)?
            }
        }
    };
    ensure!(
        coloring.is_proper_total(g) && coloring.palette_size() as usize <= bound,
        "{strategy} produced an improper coloring or more than {bound} colors"
    );
    Ok(StrategyReport {
        strategy,
        outcome: Outcome::Colored,
        colors_used: coloring.distinct_colors(),
        coloring: Some(coloring),
        bound,
        exception: None,
        trace,
    })
}

pub(crate) fn two_color(g: &Graph, t: &mut Tracer) -> Result<Coloring> {
    let side = g
        .bipartition()
        .ok_or_else(|| Error::invariant("graph expected to be bipartite has an odd cycle"))?;
    t.push(Step::Bipartite {
        vertices: t.vs(0..g.n()),
    });
    Ok(Coloring::from_colors(side.iter().map(|&s| s as Color + 1).collect()))
}

/// k-colors a graph with Δ ≤ k, k ≥ 3 and no K_{k+1} component, using the
/// strategy's machinery for the k-regular 2-connected pieces.
pub(crate) fn color_with(g: &Graph, k: usize, strategy: Strategy, t: &mut Tracer) -> Result<Coloring> {
    if g.max_degree() > k || k < 3 {
        return Err(Error::precondition(format!(
            "{k}-coloring needs k ≥ 3 and Δ ≤ k, got Δ = {}",
            g.max_degree()
        )));
    }
    let mut coloring = Coloring::empty(g.n());
    for comp in g.components() {
        let (c, map) = g.induced(&comp);
        let mut ct = t.child(&map);
        ct.push(Step::Component {
            vertices: ct.vs(0..c.n()),
            k,
        });
        let cc = color_component(&c, k, strategy, &mut ct)?;
        ensure!(
            cc.is_proper_total(&c) && cc.palette_size() as usize <= k,
            "component coloring with {strategy} exceeds {k} colors or is improper"
        );
        for (i, &v) in map.iter().enumerate() {
            coloring.set(v, cc.get(i).unwrap());
        }
    }
    Ok(coloring)
}

fn color_component(c: &Graph, k: usize, strategy: Strategy, t: &mut Tracer) -> Result<Coloring> {
    let n = c.n();
    if n == 1 {
        return Ok(Coloring::from_colors(vec![1]));
    }
    if c.max_degree() < k {
        let order: Vec<usize> = (0..n).collect();
        t.push(Step::Greedy {
            reason: "max_degree_below_k",
            toward: None,
            vertices: t.vs(order.iter().copied()),
        });
        return greedy_color(c, &order, None, None);
    }
    if let Some(low) = (0..n).find(|&v| c.degree(v) < k) {
        let order = order_by_decreasing_distance(c, &VertexSet::singleton(n, low))?;
        t.push(Step::Greedy {
            reason: "degree_below_k",
            toward: Some(t.v(low)),
            vertices: t.vs(order.iter().copied()),
        });
        return greedy_color(c, &order, None, None);
    }
    if !is_two_connected(c) {
        return split_at_cutvertex(c, k, strategy, t);
    }
    if c.is_complete() {
        return Err(Error::precondition_with(
            format!("component is K_{}", k + 1),
            t.vs(0..n),
        ));
    }
    match strategy {
        Strategy::Lovasz => lovasz::color_regular(c, k, t),
        Strategy::Kempe => kempe::color_regular(c, k, t),
        Strategy::Cubic => cubic::color_regular(c, k, t),
        Strategy::Ktree => ktree::color_regular(c, k, t),
        Strategy::Partition => partition::color_regular(c, k, t),
        Strategy::Independency | Strategy::Kernel => {
            Err(Error::invariant(format!("{strategy} does not use the shared reduction")))
        }
    }
}

/// Colors each piece H + v at the lowest cutvertex v, then swaps colors on
/// each piece so all agree on v.
fn split_at_cutvertex(c: &Graph, k: usize, strategy: Strategy, t: &mut Tracer) -> Result<Coloring> {
    let bct = blocks_and_cutvertices(c);
    let v = bct.cutvertices[0];
    let mut rest = c.all_vertices();
    rest.remove(v);
    let pieces: Vec<VertexSet> = c
        .components_within(&rest)
        .into_iter()
        .map(|mut p| {
            p.insert(v);
            p
        })
        .collect();
    t.push(Step::CutvertexSplit {
        cutvertex: t.v(v),
        pieces: pieces.iter().map(|p| t.vs(p.iter())).collect(),
    });
    let mut coloring = Coloring::empty(c.n());
    let mut target = None;
    for (pi, piece) in pieces.iter().enumerate() {
        let (h, map) = c.induced(piece);
        let mut pc = {
            let mut ht = t.child(&map);
            color_with(&h, k, strategy, &mut ht)?
        };
        let vi = map.iter().position(|&x| x == v).unwrap();
        let here = pc.get(vi).unwrap();
        let want = *target.get_or_insert(here);
        if here != want {
            pc.permute_colors(|x| if x == here { want } else if x == want { here } else { x });
            t.push(Step::Permute {
                piece: pi,
                swap: (here, want),
            });
        }
        for (i, &x) in map.iter().enumerate() {
            coloring.set(x, pc.get(i).unwrap());
        }
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;

    #[test]
    fn exceptions() {
        let r = color_brooks(&complete(4), Strategy::Lovasz).unwrap();
        assert_eq!(r.outcome, Outcome::Exceptional);
        assert_eq!(r.exception.as_ref().unwrap().kind, ExceptionKind::CompleteGraph);
        assert!(r.verify(&complete(4)));
        let r = color_brooks(&cycle(7), Strategy::Kempe).unwrap();
        assert_eq!(r.exception.unwrap().kind, ExceptionKind::OddCycle);
        let r = color_brooks(&cycle(3), Strategy::Kempe).unwrap();
        assert_eq!(r.exception.unwrap().kind, ExceptionKind::CompleteGraph);
        let r = color_brooks(&Graph::new(0), Strategy::Kempe).unwrap();
        assert_eq!(r.outcome, Outcome::Colored);
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("greedy".parse::<Strategy>().is_err());
    }

    #[test]
    fn even_cycle_plus_path() {
        let g = cycle(6).disjoint_union(&path(3));
        let r = color_brooks(&g, Strategy::Partition).unwrap();
        assert_eq!(r.colors_used, 2);
        assert!(r.verify(&g));
    }

    #[test]
    fn named_graphs_all_strategies() {
        let join = cycle(5).join(&complete(3));
        for s in Strategy::ALL {
            for g in [petersen(), prism(), complete_bipartite(3, 3), join.clone(), bowtie(), diamond()] {
                let r = color_brooks(&g, s).unwrap();
                assert!(r.verify(&g), "{s} on {g:?}");
                assert_eq!(r.outcome, Outcome::Colored);
            }
            assert!(color_brooks(&petersen(), s).unwrap().colors_used <= 3);
            assert!(color_brooks(&join, s).unwrap().colors_used <= 7);
        }
    }
}
