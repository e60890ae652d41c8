use super::independency::{find_independency_tree, TreeSearch};
use crate::brooks::trace::{Step, TraceStep, Tracer};
use crate::brooks::{color_brooks, Strategy, StrategyReport};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::{classify_basic, StructureTag};
use crate::graph_core::{Color, Coloring, Graph, VertexSet};

pub fn strategy_independency(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Independency)
}

/// A graph, an induced subgraph H with a proper k-coloring, and a spanning
/// forest F such that F is a tree on every component of H and every vertex
/// outside H has d_G(v) ≤ d_F(v) + k − 2.
#[derive(Clone, Debug)]
pub struct ForestExtension {
    pub g: Graph,
    pub forest: Graph,
    pub h: VertexSet,
    /// Colors the vertices of H; entries outside H are ignored.
    pub coloring: Coloring,
    pub k: usize,
}

impl ForestExtension {
    /// Checks the forest, the coloring of H and both conditions.
    pub fn check(&self) -> Result<()> {
        let (g, f, h, k) = (&self.g, &self.forest, &self.h, self.k);
        let n = g.n();
        if k < 3 {
            return Err(Error::precondition(format!("forest extension needs k ≥ 3, got {k}")));
        }
        if f.n() != n || f.edges().iter().any(|&(u, v)| !g.has_edge(u, v)) || f.m() + f.components().len() != n {
            return Err(Error::precondition("F is not a spanning forest of G"));
        }
        for v in h.iter() {
            match self.coloring.get(v) {
                Some(c) if c >= 1 && c as usize <= k => {}
                _ => return Err(Error::precondition_with("H is not k-colored", vec![v])),
            }
            if g.neighbors(v).iter().any(|u| h.contains(u) && self.coloring.get(u) == self.coloring.get(v)) {
                return Err(Error::precondition_with("coloring of H is improper", vec![v]));
            }
        }
        for c in g.components_within(h) {
            if f.edges_within(&c) + 1 != c.len() || !f.is_connected_within(&c) {
                return Err(Error::precondition_with("condition 1: F is not a tree on a component of H", c.to_vec()));
            }
        }
        if let Some(v) = (0..n).find(|&v| !h.contains(v) && g.degree(v) + 2 > f.degree(v) + k) {
            return Err(Error::precondition_with("condition 2: d_G(v) > d_F(v) + k - 2", vec![v]));
        }
        Ok(())
    }
}

pub fn stiebitz_color(ext: &ForestExtension) -> Result<Coloring> {
    ext.check()?;
    let mut trace = Vec::new();
    let mut t = Tracer::new(&mut trace, ext.g.n());
    extend(ext.clone(), &mut t)
}

/// Swaps colors a and b on the vertices of `comp`.
fn swap_on(col: &mut Coloring, comp: &VertexSet, a: Color, b: Color) {
    if a == b {
        return;
    }
    for x in comp.iter() {
        let c = col.get(x).unwrap();
        if c == a {
            col.set(x, b);
        } else if c == b {
            col.set(x, a);
        }
    }
}

fn free_color(g: &Graph, col: &Coloring, v: usize, k: usize) -> Result<Color> {
    let blocked = col.neighbor_colors(g, v);
    (1..=k as Color)
        .find(|c| blocked.binary_search(c).is_err())
        .ok_or_else(|| Error::invariant(format!("vertex {v} sees all {k} colors")))
}

fn extend(mut ext: ForestExtension, t: &mut Tracer) -> Result<Coloring> {
    let n = ext.g.n();
    loop {
        ext.check().map_err(|e| Error::invariant(format!("forest extension broke: {e}")))?;
        let outside: Vec<usize> = (0..n).filter(|&v| !ext.h.contains(v)).collect();
        if outside.is_empty() {
            return Ok(ext.coloring);
        }
        let (g, f, k) = (&ext.g, &ext.forest, ext.k);

        // A vertex with no neighbor in H starts its own component.
        if let Some(&v) = outside.iter().find(|&&v| !g.neighbors(v).intersects(&ext.h)) {
            ext.h.insert(v);
            ext.coloring.set(v, 1);
            t.push(Step::Absorb {
                vertex: t.v(v),
                color: 1,
                reason: "no_neighbor_in_h",
            });
            continue;
        }

        // Adjacent H-components in s distinct trees of F − v with
        // d_G(v) ≤ s + k − 2: identify one neighbor per tree.
        let hcomps = g.components_within(&ext.h);
        let mut contraction = None;
        for &v in &outside {
            let mut rest = g.all_vertices();
            rest.remove(v);
            let mut groups: Vec<(VertexSet, usize)> = Vec::new();
            for (ci, c) in hcomps.iter().enumerate() {
                if !g.neighbors(v).intersects(c) {
                    continue;
                }
                let tree = f.component_within(c.first().unwrap(), &rest);
                if !groups.iter().any(|(t, _)| *t == tree) {
                    groups.push((tree, ci));
                }
            }
            if g.degree(v) + 2 <= groups.len() + k {
                let zs: Vec<(usize, usize)> = groups
                    .iter()
                    .map(|&(_, ci)| (g.neighbors(v).intersection(&hcomps[ci]).first().unwrap(), ci))
                    .collect();
                contraction = Some((v, zs));
                break;
            }
        }
        if let Some((v, mut zs)) = contraction {
            zs.sort_unstable();
            return contract(ext, v, &zs, &hcomps, t);
        }

        // A vertex of F − H whose H-neighbors in F are private.
        let v = private_leaf(&ext, &hcomps)?;
        let hn: Vec<usize> = f.neighbors(v).intersection(&ext.h).to_vec();
        for c in &hcomps {
            ensure!(
                !g.neighbors(v).intersects(c) || f.neighbors(v).intersects(c),
                "vertex {v} is adjacent but not F-adjacent to an H-component"
            );
        }
        if let Some(&z0) = hn.first() {
            let target = ext.coloring.get(z0).unwrap();
            for &z in &hn[1..] {
                let comp = hcomps.iter().find(|c| c.contains(z)).unwrap().clone();
                let here = ext.coloring.get(z).unwrap();
                swap_on(&mut ext.coloring, &comp, here, target);
            }
        }
        let c = free_color(g, &ext.coloring, v, k)?;
        ext.h.insert(v);
        ext.coloring.set(v, c);
        t.push(Step::Absorb {
            vertex: t.v(v),
            color: c,
            reason: "private_leaf",
        });
    }
}

/// In the forest obtained by contracting components of H and of F − H,
/// the first F − H part A with at most one neighbor B of degree ≥ 2; the
/// answer is the lowest leaf of A not F-adjacent to B.
fn private_leaf(ext: &ForestExtension, hcomps: &[VertexSet]) -> Result<usize> {
    let (f, h) = (&ext.forest, &ext.h);
    let outside = ext.g.all_vertices().difference(h);
    let parts = f.components_within(&outside);
    let touches = |a: &VertexSet, b: &VertexSet| a.iter().any(|x| f.neighbors(x).intersects(b));
    let hdeg: Vec<usize> = hcomps.iter().map(|c| parts.iter().filter(|a| touches(a, c)).count()).collect();
    for a in &parts {
        let big: Vec<usize> = (0..hcomps.len()).filter(|&ci| hdeg[ci] >= 2 && touches(a, &hcomps[ci])).collect();
        if big.len() > 1 {
            continue;
        }
        let leaf = a.iter().find(|&x| {
            f.degree_in(x, a) <= 1 && big.first().is_none_or(|&b| !f.neighbors(x).intersects(&hcomps[b]))
        });
        if let Some(v) = leaf {
            ensure!(f.degree_in(v, &outside) == 1, "private leaf {v} has F − H degree {}", f.degree_in(v, &outside));
            return Ok(v);
        }
    }
    Err(Error::invariant("contracted forest has no part with a private leaf"))
}

/// Deletes v and merges the chosen z_i into z_1, after permuting colors so
/// all z_i agree; recurses and colors v last.
fn contract(ext: ForestExtension, v: usize, zs: &[(usize, usize)], hcomps: &[VertexSet], t: &mut Tracer) -> Result<Coloring> {
    let (g, f, k) = (&ext.g, &ext.forest, ext.k);
    let n = g.n();
    let mut coloring = ext.coloring.clone();
    let z1 = zs[0].0;
    let target = coloring.get(z1).unwrap();
    for &(z, ci) in &zs[1..] {
        let here = coloring.get(z).unwrap();
        swap_on(&mut coloring, &hcomps[ci], here, target);
    }
    t.push(Step::Identify {
        vertex: t.v(v),
        merged: t.vs(zs.iter().map(|&(z, _)| z)),
    });
    let merged = VertexSet::from_iter(n, zs[1..].iter().map(|&(z, _)| z));
    // New labels: every old vertex except v and the merged z_i, in order.
    let local: Vec<usize> = (0..n).filter(|&x| x != v && !merged.contains(x)).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &x) in local.iter().enumerate() {
        index[x] = i;
    }
    for x in merged.iter() {
        index[x] = index[z1];
    }
    let m = local.len();
    let relabel = |src: &Graph| {
        let mut out = Graph::new(m);
        for (a, b) in src.edges() {
            if a != v && b != v && index[a] != index[b] {
                out.add_edge(index[a], index[b]);
            }
        }
        out
    };
    let (g2, f2) = (relabel(g), relabel(f));
    ensure!(f2.m() + f.degree(v) == f.m(), "identification merged F-edges");
    let mut c2 = Coloring::empty(m);
    let mut h2 = VertexSet::new(m);
    for (i, &x) in local.iter().enumerate() {
        if ext.h.contains(x) {
            h2.insert(i);
            c2.set(i, coloring.get(x).unwrap());
        }
    }
    let sub = ForestExtension {
        g: g2,
        forest: f2,
        h: h2,
        coloring: c2,
        k,
    };
    let sc = extend(sub, &mut t.child(&local))?;
    let mut out = Coloring::empty(n);
    for x in 0..n {
        if x != v {
            out.set(x, sc.get(index[x]).unwrap());
        }
    }
    let c = free_color(g, &out, v, k)?;
    out.set(v, c);
    t.push(Step::ColorVertex { vertex: t.v(v), color: c });
    Ok(out)
}

/// Independency-tree strategy: leaves form H (one color), the tree is F
/// and k = Δ; the families without such a tree are colored directly.
pub(crate) fn independency_coloring(g: &Graph, trace: &mut Vec<TraceStep>) -> Result<Coloring> {
    let k = g.max_degree();
    ensure!(k >= 3, "independency strategy called with Δ = {k}");
    let mut t = Tracer::new(trace, g.n());
    let mut coloring = Coloring::empty(g.n());
    for comp in g.components() {
        let (c, map) = g.induced(&comp);
        let mut ct = t.child(&map);
        ct.push(Step::Component {
            vertices: ct.vs(0..c.n()),
            k,
        });
        let cc = match classify_basic(&c).tag {
            StructureTag::Complete => Coloring::from_colors((1..=c.n() as Color).collect()),
            StructureTag::OddCycle => {
                let order = c.cycle_order().unwrap();
                let mut col = Coloring::empty(c.n());
                for (i, &x) in order.iter().enumerate() {
                    col.set(x, if i + 1 == order.len() { 3 } else { 1 + (i % 2) as Color });
                }
                col
            }
            StructureTag::EvenCycle | StructureTag::BalancedCompleteBipartite => crate::brooks::two_color(&c, &mut ct)?,
            _ => {
                let TreeSearch::Tree { tree } = find_independency_tree(&c)? else {
                    return Err(Error::invariant("component outside the three families has no independency tree"));
                };
                ct.push(Step::IndependencyTree {
                    edges: tree.edges.iter().map(|&(a, b)| (ct.v(a), ct.v(b))).collect(),
                    leaves: ct.vs(tree.leaves.iter().copied()),
                });
                let leaves = VertexSet::from_slice(c.n(), &tree.leaves);
                let mut start = Coloring::empty(c.n());
                for x in leaves.iter() {
                    start.set(x, 1);
                }
                let ext = ForestExtension {
                    forest: tree.as_graph(c.n()),
                    g: c.clone(),
                    h: leaves,
                    coloring: start,
                    k,
                };
                ext.check()?;
                extend(ext, &mut ct)?
            }
        };
        ensure!(cc.is_proper_total(&c) && cc.palette_size() as usize <= k, "component coloring exceeds {k} colors");
        for (i, &v) in map.iter().enumerate() {
            coloring.set(v, cc.get(i).unwrap());
        }
    }
    Ok(coloring)
}
