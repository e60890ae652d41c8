use super::trace::{Step, Tracer};
use super::{color_brooks, color_with, Strategy, StrategyReport};
use crate::choosability::cycle::{cycle_list_color, CycleOutcome};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::shortest_cycle;
use crate::graph_core::{greedy_color, Color, Coloring, Graph, ListAssignment, VertexSet};

pub fn strategy_cubic(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Cubic)
}

/// First induced diamond by its middle edge cd (lexicographic), returned
/// as (a, b, c, d) with a, b the nonadjacent pair.
pub fn find_induced_diamond(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    for (c, d) in g.edges() {
        let common = g.neighbors(c).intersection(g.neighbors(d)).to_vec();
        for (i, &a) in common.iter().enumerate() {
            if let Some(&b) = common[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Some((a, b, c, d));
            }
        }
    }
    None
}

fn pull_back(coloring: &mut Coloring, sub: &Coloring, map: &[usize]) {
    for (i, &v) in map.iter().enumerate() {
        coloring.set(v, sub.get(i).unwrap());
    }
}

pub(crate) fn color_regular(g: &Graph, k: usize, t: &mut Tracer) -> Result<Coloring> {
    if k == 3 {
        match find_induced_diamond(g) {
            Some(d) => color_diamond(g, d, t),
            None => color_cycle_reduction(g, t),
        }
    } else {
        color_peel_class(g, k, t)
    }
}

fn color_diamond(g: &Graph, (a, b, c, d): (usize, usize, usize, usize), t: &mut Tracer) -> Result<Coloring> {
    let n = g.n();
    let dset = VertexSet::from_slice(n, &[a, b, c, d]);
    t.push(Step::Diamond {
        vertices: t.vs([a, b, c, d]),
    });
    let (h, map) = g.without(&dset);
    let hc = color_with(&h, 3, Strategy::Cubic, &mut t.child(&map))?;
    let mut coloring = Coloring::empty(n);
    pull_back(&mut coloring, &hc, &map);
    let free = |x: usize, col: &Coloring| -> Vec<Color> {
        let blocked = col.neighbor_colors(g, x);
        (1..=3).filter(|c| blocked.binary_search(c).is_err()).collect()
    };
    let fa = free(a, &coloring);
    let fb = free(b, &coloring);
    let common = fa
        .iter()
        .copied()
        .find(|c| fb.contains(c))
        .ok_or_else(|| Error::invariant("the nonadjacent diamond vertices share no free color"))?;
    coloring.set(a, common);
    coloring.set(b, common);
    t.push(Step::Greedy {
        reason: "diamond_middle",
        toward: None,
        vertices: t.vs([c, d]),
    });
    greedy_color(g, &[c, d], Some(&coloring), None)
}

fn color_cycle_reduction(g: &Graph, t: &mut Tracer) -> Result<Coloring> {
    let n = g.n();
    let cyc = shortest_cycle(g).ok_or_else(|| Error::invariant("cubic graph without a cycle"))?;
    let cset = VertexSet::from_slice(n, &cyc);
    let outside: Vec<usize> = cyc
        .iter()
        .map(|&v| {
            let out = g.neighbors(v).difference(&cset);
            ensure!(out.len() == 1, "cycle vertex {v} has {} outside neighbors", out.len());
            Ok(out.first().unwrap())
        })
        .collect::<Result<_>>()?;
    let (x, y) = (0..cyc.len())
        .flat_map(|i| (i + 1..cyc.len()).map(move |j| (i, j)))
        .find(|&(i, j)| outside[i] != outside[j])
        .map(|(i, j)| (outside[i], outside[j]))
        .ok_or_else(|| Error::invariant("every cycle vertex has the same outside neighbor"))?;
    let added_edge = !g.has_edge(x, y);
    t.push(Step::CycleReduction {
        cycle: t.vs(cyc.iter().copied()),
        x: t.v(x),
        y: t.v(y),
        added_edge,
    });
    let (mut h, map) = g.without(&cset);
    if added_edge {
        let hx = map.iter().position(|&v| v == x).unwrap();
        let hy = map.iter().position(|&v| v == y).unwrap();
        h.add_edge(hx, hy);
    }
    let hc = color_with(&h, 3, Strategy::Cubic, &mut t.child(&map))?;
    let mut coloring = Coloring::empty(n);
    pull_back(&mut coloring, &hc, &map);
    ensure!(coloring.get(x) != coloring.get(y), "x and y received the same color");

    let (cg, cmap) = g.induced(&cset);
    let lists = ListAssignment::new(
        cmap.iter()
            .map(|&v| {
                let taken = coloring.neighbor_colors(g, v);
                (1..=3).filter(|c| !taken.contains(c)).collect()
            })
            .collect(),
    );
    match cycle_list_color(&cg, &lists)? {
        CycleOutcome::Colored { coloring: cc } => pull_back(&mut coloring, &cc, &cmap),
        CycleOutcome::IdenticalLists { .. } => {
            return Err(Error::invariant("cycle lists are identical although x and y differ"));
        }
    }
    Ok(coloring)
}

/// Δ ≥ 4: color G − v for an induced path u–v–w. If v is stuck, a color
/// class avoiding u and w, grown to a maximal independent set, gets a
/// fresh color and the rest is colored with one color fewer.
fn color_peel_class(g: &Graph, k: usize, t: &mut Tracer) -> Result<Coloring> {
    let n = g.n();
    let (u, v, w) = (0..n)
        .find_map(|v| {
            let nb = g.neighbors(v).to_vec();
            nb.iter()
                .enumerate()
                .find_map(|(i, &u)| nb[i + 1..].iter().find(|&&w| !g.has_edge(u, w)).map(|&w| (u, v, w)))
        })
        .ok_or_else(|| Error::invariant("non-complete graph without an induced path on three vertices"))?;
    let (h, map) = g.without(&VertexSet::singleton(n, v));
    let hc = color_with(&h, k, Strategy::Cubic, &mut t.child(&map))?;
    let mut coloring = Coloring::empty(n);
    pull_back(&mut coloring, &hc, &map);

    let around = coloring.neighbor_colors(g, v);
    if let Some(c) = (1..=k as Color).find(|c| around.binary_search(c).is_err()) {
        coloring.set(v, c);
        t.push(Step::ColorVertex { vertex: t.v(v), color: c });
        return Ok(coloring);
    }
    let (cu, cw) = (coloring.get(u).unwrap(), coloring.get(w).unwrap());
    let c = (1..=k as Color).find(|&c| c != cu && c != cw).unwrap();
    let mut class = coloring.class(c);
    for x in 0..n {
        if !class.contains(x) && !g.neighbors(x).intersects(&class) {
            class.insert(x);
        }
    }
    ensure!(g.is_independent(&class), "extended color class is not independent");
    t.push(Step::FreshClass {
        class: t.vs(class.iter()),
        color: k as Color,
    });
    let (rest, rmap) = g.without(&class);
    ensure!(rest.max_degree() < k, "removing a maximal independent set left degree {}", rest.max_degree());
    let rc = color_with(&rest, k - 1, Strategy::Cubic, &mut t.child(&rmap))?;
    let mut out = Coloring::empty(n);
    pull_back(&mut out, &rc, &rmap);
    for x in class.iter() {
        out.set(x, k as Color);
    }
    Ok(out)
}
