use super::trace::{Step, Tracer};
use super::{color_brooks, Strategy, StrategyReport};
use crate::error::{ensure, Error, Result};
use crate::graph_core::structure::order_by_decreasing_distance;
use crate::graph_core::{greedy_color, Color, Coloring, Graph, VertexSet};
use std::collections::VecDeque;

/// Hard bound on repair steps before v is colored.
pub const MAX_CASCADE: usize = 6;

pub fn strategy_kempe(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Kempe)
}

/// Coloring of G − v being repaired so that v can be colored.
pub struct KempeState<'g> {
    g: &'g Graph,
    pub v: usize,
    pub k: usize,
    pub coloring: Coloring,
}

impl<'g> KempeState<'g> {
    /// `coloring` must color every vertex but v with colors 1..=k.
    pub fn new(g: &'g Graph, v: usize, k: usize, coloring: Coloring) -> Self {
        KempeState { g, v, k, coloring }
    }

    fn color(&self, u: usize) -> Color {
        self.coloring.get(u).unwrap()
    }

    /// The neighbor of v using each color 1..=k, when every color appears
    /// exactly once around v.
    pub fn neighbors_by_color(&self) -> Option<Vec<usize>> {
        let mut vi = vec![usize::MAX; self.k + 1];
        for u in self.g.neighbors(self.v).iter() {
            let c = self.color(u) as usize;
            if vi[c] != usize::MAX {
                return None;
            }
            vi[c] = u;
        }
        vi[1..].iter().all(|&u| u != usize::MAX).then_some(vi)
    }

    fn free_colors(&self, u: usize) -> Vec<Color> {
        let blocked = self.coloring.neighbor_colors(self.g, u);
        (1..=self.k as Color).filter(|c| blocked.binary_search(c).is_err()).collect()
    }

    /// The (i, j)-Kempe chain of G − v containing `start`.
    pub fn chain(&self, i: Color, j: Color, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.g.n(), start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in self.g.neighbors(x).iter() {
                if y != self.v && !seen.contains(y) && matches!(self.coloring.get(y), Some(c) if c == i || c == j) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn swap(&mut self, chain: &VertexSet, i: Color, j: Color) {
        for x in chain.iter() {
            let c = self.color(x);
            self.coloring.set(x, if c == i { j } else { i });
        }
    }

    /// The chain vertex of degree ≥ 3 (within the chain) nearest `start`.
    fn nearest_branch(&self, chain: &VertexSet, start: usize) -> Option<usize> {
        let dist = self.g.distances_within(&VertexSet::singleton(self.g.n(), start), chain);
        chain
            .iter()
            .filter(|&x| self.g.degree_in(x, chain) >= 3)
            .min_by_key(|&x| (dist[x], x))
    }
}

/// Greedy toward v = 0 leaves G − v colored; the cascade then repairs the
/// coloring until some color is missing around v.
pub(crate) fn color_regular(g: &Graph, k: usize, t: &mut Tracer) -> Result<Coloring> {
    let v = 0;
    let order: Vec<usize> = order_by_decreasing_distance(g, &VertexSet::singleton(g.n(), v))?
        .into_iter()
        .filter(|&x| x != v)
        .collect();
    t.push(Step::Greedy {
        reason: "toward_center",
        toward: Some(t.v(v)),
        vertices: t.vs(order.iter().copied()),
    });
    let coloring = greedy_color(g, &order, None, None)?;
    ensure!(coloring.palette_size() as usize <= k, "greedy coloring of G - v used more than {k} colors");
    let mut st = KempeState { g, v, k, coloring };
    cascade(&mut st, t)?;
    Ok(st.coloring)
}

fn record(t: &mut Tracer, rule: &'static str, vertex: Option<usize>, colors: Option<(Color, Color)>, chain: Vec<usize>, to: Option<Color>) {
    let step = Step::Kempe {
        rule,
        vertex: vertex.map(|x| t.v(x)),
        colors,
        chain: t.vs(chain),
        to,
    };
    t.push(step);
}

/// Runs rules R0–R4 until v is colored; returns the rules applied.
pub fn run_cascade(st: &mut KempeState) -> Result<Vec<&'static str>> {
    let mut steps = Vec::new();
    cascade(st, &mut Tracer::new(&mut steps, st.g.n()))?;
    Ok(steps
        .into_iter()
        .filter_map(|s| match s.step {
            Step::Kempe { rule, .. } => Some(rule),
            _ => None,
        })
        .collect())
}

pub(crate) fn cascade(st: &mut KempeState, t: &mut Tracer) -> Result<()> {
    let g = st.g;
    let v = st.v;
    let k = st.k as Color;
    for step in 0.. {
        ensure!(step <= MAX_CASCADE, "Kempe cascade exceeded {MAX_CASCADE} steps");
        ensure!(st.coloring.is_proper(g), "Kempe cascade broke properness at step {step}");

        // R0: a color is missing around v.
        let around: Vec<Color> = st.coloring.neighbor_colors(g, v);
        if let Some(c) = (1..=k).find(|c| around.binary_search(c).is_err()) {
            st.coloring.set(v, c);
            record(t, "R0", Some(v), None, vec![], Some(c));
            return Ok(());
        }
        let vi = st
            .neighbors_by_color()
            .ok_or_else(|| Error::invariant("some color repeats around v although every color appears"))?;

        // R0b: some v_i can move to another color.
        if let Some((i, j)) = (1..=k).find_map(|i| {
            let u = vi[i as usize];
            st.free_colors(u).into_iter().find(|&j| j != i).map(|j| (i, j))
        }) {
            let u = vi[i as usize];
            st.coloring.set(u, j);
            record(t, "R0b", Some(u), Some((i, j)), vec![], Some(j));
            continue;
        }

        // R1: v_j outside C_{i,j}; swapping frees color i.
        let mut r1 = None;
        'r1: for i in 1..=k {
            for j in 1..=k {
                if i != j {
                    let c = st.chain(i, j, vi[i as usize]);
                    if !c.contains(vi[j as usize]) {
                        r1 = Some((i, j, c));
                        break 'r1;
                    }
                }
            }
        }
        if let Some((i, j, c)) = r1 {
            st.swap(&c, i, j);
            record(t, "R1", Some(vi[i as usize]), Some((i, j)), c.to_vec(), None);
            continue;
        }

        // R2: C_{i,j} is not a path; recolor its branch vertex nearest v_i.
        let mut r2 = None;
        'r2: for i in 1..=k {
            for j in i + 1..=k {
                let c = st.chain(i, j, vi[i as usize]);
                if let Some(u) = st.nearest_branch(&c, vi[i as usize]) {
                    r2 = Some((i, j, u, c));
                    break 'r2;
                }
            }
        }
        if let Some((i, j, u, c)) = r2 {
            let cu = st.color(u);
            let to = st
                .free_colors(u)
                .into_iter()
                .find(|&x| x != cu)
                .ok_or_else(|| Error::invariant(format!("branch vertex {u} of a chain has no free color")))?;
            st.coloring.set(u, to);
            record(t, "R2", Some(u), Some((i, j)), c.to_vec(), Some(to));
            continue;
        }

        // R3: C_{i,j} and C_{i,l} share a vertex besides v_i.
        let mut r3 = None;
        'r3: for i in 1..=k {
            for j in 1..=k {
                for l in j + 1..=k {
                    if i == j || i == l {
                        continue;
                    }
                    let a = st.chain(i, j, vi[i as usize]);
                    let b = st.chain(i, l, vi[i as usize]);
                    let mut common = a.intersection(&b);
                    common.remove(vi[i as usize]);
                    if let Some(u) = common.first() {
                        r3 = Some((i, j, u, a));
                        break 'r3;
                    }
                }
            }
        }
        if let Some((i, j, u, c)) = r3 {
            let to = st
                .free_colors(u)
                .into_iter()
                .find(|&x| x != i)
                .ok_or_else(|| Error::invariant(format!("chain intersection vertex {u} has no free color")))?;
            st.coloring.set(u, to);
            record(t, "R3", Some(u), Some((i, j)), c.to_vec(), Some(to));
            continue;
        }

        // R4: nonadjacent v_a, v_b; swap C_{a,c}.
        let pair = (1..=k).find_map(|a| {
            (a + 1..=k)
                .find(|&b| !g.has_edge(vi[a as usize], vi[b as usize]))
                .map(|b| (a, b))
        });
        let Some((a, b)) = pair else {
            return Err(Error::invariant("neighbors of v form a clique, so the graph is complete"));
        };
        let c = (1..=k).find(|&c| c != a && c != b).unwrap();
        let chain = st.chain(a, c, vi[a as usize]);
        st.swap(&chain, a, c);
        record(t, "R4", Some(vi[a as usize]), Some((a, c)), chain.to_vec(), None);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::enumerate::connected_regular_classes;
    use crate::graph_core::structure::is_two_connected;

    fn rule_counts(g: &Graph) -> (usize, usize) {
        let r = strategy_kempe(g).unwrap();
        assert!(r.verify(g));
        let rules: Vec<&str> = r
            .trace
            .iter()
            .filter_map(|s| match s.step {
                Step::Kempe { rule, .. } => Some(rule),
                _ => None,
            })
            .collect();
        (rules.iter().filter(|&&r| r == "R4").count(), rules.len())
    }

    #[test]
    fn at_most_one_r4_on_regular_graphs() {
        for n in 4..=8 {
            for d in 3..n {
                for g in connected_regular_classes(n, d) {
                    if !is_two_connected(&g) || g.is_complete() {
                        continue;
                    }
                    let (r4, steps) = rule_counts(&g);
                    assert!(r4 <= 1, "{g:?}");
                    assert!(steps <= MAX_CASCADE + 1);
                }
            }
        }
    }

    /// Every proper k-coloring of G − v, extended by backtracking.
    fn all_colorings(g: &Graph, v: usize, k: Color) -> Vec<Coloring> {
        fn rec(g: &Graph, v: usize, k: Color, x: usize, col: &mut Coloring, out: &mut Vec<Coloring>) {
            if x == g.n() {
                out.push(col.clone());
                return;
            }
            if x == v {
                return rec(g, v, k, x + 1, col, out);
            }
            for c in 1..=k {
                if !col.neighbor_colors(g, x).contains(&c) {
                    col.set(x, c);
                    rec(g, v, k, x + 1, col, out);
                    col.unset(x);
                }
            }
        }
        let mut out = Vec::new();
        rec(g, v, k, 0, &mut Coloring::empty(g.n()), &mut out);
        out
    }

    #[test]
    fn cascade_from_every_start() {
        let mut longest = 0;
        for n in 4..=7 {
            for d in 3..n {
                for g in connected_regular_classes(n, d) {
                    if !is_two_connected(&g) || g.is_complete() {
                        continue;
                    }
                    for c in all_colorings(&g, 0, d as Color) {
                        let mut st = KempeState::new(&g, 0, d, c);
                        let rules = run_cascade(&mut st).unwrap();
                        assert!(st.coloring.is_proper_total(&g));
                        assert!(rules.iter().filter(|&&r| r == "R4").count() <= 1);
                        longest = longest.max(rules.len());
                    }
                }
            }
        }
        assert!(longest >= 2, "no start forced a real repair");
    }
}
