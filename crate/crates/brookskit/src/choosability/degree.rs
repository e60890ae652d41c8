use super::cycle::{cycle_list_color, CycleOutcome};
use super::rubin::{rubin_even_cycle, EvenCycle};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::{
    block_kind, blocks_and_cutvertices, is_gallai_tree, order_by_decreasing_distance_within, BlockKind, StructureClass,
};
use crate::graph_core::{greedy_color, Color, Coloring, Graph, ListAssignment, VertexSet};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DegreeOutcome {
    Colored { coloring: Coloring, cycle: EvenCycle },
    /// The graph is a Gallai tree, so some degree lists defeat it. The
    /// given lists may still be colorable.
    GallaiTree { structure: StructureClass },
}

impl DegreeOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            DegreeOutcome::Colored { coloring, .. } => Some(coloring),
            _ => None,
        }
    }
}

/// An even cycle with at most one chord inside some block that is neither
/// complete nor an odd cycle, in the labels of `g`.
pub fn even_cycle_in_graph(g: &Graph) -> Result<Option<EvenCycle>> {
    let bct = blocks_and_cutvertices(g);
    let Some(block) = bct.blocks.iter().find(|b| block_kind(g, b) == BlockKind::Other) else {
        return Ok(None);
    };
    let (h, map) = g.induced(&VertexSet::from_slice(g.n(), block));
    let c = rubin_even_cycle(&h)?;
    Ok(Some(EvenCycle {
        order: c.order.iter().map(|&v| map[v]).collect(),
        chord: c.chord.map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b]))),
    }))
}

/// Colors a connected non-Gallai-tree from lists with |L(v)| ≥ d(v):
/// greedy toward an even cycle H with at most one chord, then H last.
pub fn degree_choose_color(g: &Graph, lists: &ListAssignment) -> Result<DegreeOutcome> {
    if lists.n() != g.n() {
        return Err(Error::precondition("list assignment sized for a different graph"));
    }
    if let Some(v) = (0..g.n()).find(|&v| lists.list(v).len() < g.degree(v)) {
        return Err(Error::precondition_with("a list is shorter than the degree", vec![v]));
    }
    let structure = is_gallai_tree(g)?;
    let Some(cycle) = even_cycle_in_graph(g)? else {
        return Ok(DegreeOutcome::GallaiTree { structure });
    };
    let n = g.n();
    let hset = cycle.vertex_set(n);
    let outside = g.all_vertices().difference(&hset);
    let order = order_by_decreasing_distance_within(g, &hset, &g.all_vertices())?;
    let order: Vec<usize> = order.into_iter().filter(|&v| outside.contains(v)).collect();
    let mut coloring = greedy_color(g, &order, None, Some(lists))?;

    // Lists on H minus the colors already used outside.
    let residual = |v: usize, col: &Coloring| -> Vec<Color> {
        let blocked = col.neighbor_colors(g, v);
        lists.list(v).iter().copied().filter(|c| blocked.binary_search(c).is_err()).collect()
    };
    let k = cycle.order.len();
    match cycle.chord {
        None => {
            let (h, map) = g.induced(&hset);
            let res = ListAssignment::new(map.iter().map(|&v| residual(v, &coloring).into_iter().take(2).collect()).collect());
            match cycle_list_color(&h, &res)? {
                CycleOutcome::Colored { coloring: hc } => {
                    for (i, &v) in map.iter().enumerate() {
                        coloring.set(v, hc.get(i).unwrap());
                    }
                }
                CycleOutcome::IdenticalLists { .. } => {
                    return Err(Error::invariant("even cycle reported as odd"));
                }
            }
        }
        Some((a, _)) => {
            // v1 = a chord end, v_n = its cycle predecessor.
            let i = cycle.order.iter().position(|&v| v == a).unwrap();
            let seq: Vec<usize> = (0..k).map(|j| cycle.order[(i + j) % k]).collect();
            let vn = seq[k - 1];
            let r1 = residual(a, &coloring);
            let rn = residual(vn, &coloring);
            // With three or more colors left v_n is safe whatever v1 gets.
            let c1 = r1.iter().copied().find(|c| rn.len() >= 3 || !rn.contains(c));
            let Some(c1) = c1 else {
                return Err(Error::invariant("chord vertex has no color missing from its neighbor's list"));
            };
            coloring.set(a, c1);
            coloring = greedy_color(g, &seq, Some(&coloring), Some(lists))?;
        }
    }
    ensure!(coloring.is_proper_total(g) && coloring.respects(lists), "degree list coloring is not a proper list coloring");
    Ok(DegreeOutcome::Colored { coloring, cycle })
}
