use super::trace::{Step, Tracer};
use super::{color_brooks, color_with, two_color, Strategy, StrategyReport};
use crate::error::{ensure, Error, Result};
use crate::graph_core::{Color, Coloring, Graph, VertexSet};
use crate::limits;
use serde::Serialize;

pub fn strategy_partition(g: &Graph) -> Result<StrategyReport> {
    color_brooks(g, Strategy::Partition)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionMove {
    pub phase: u8,
    pub moved: Vec<usize>,
    /// Measure after the move.
    pub phi: usize,
    pub obstructions: usize,
    pub path_len: usize,
}

/// Two-part partition with potential (Δ−1)‖V1‖ + ‖V2‖.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition2 {
    pub delta: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub phi: usize,
    pub obstructions: Vec<Vec<usize>>,
    pub moves: Vec<PartitionMove>,
    /// Set when local search stalled and exhaustive enumeration was used.
    pub fallback: bool,
}

impl Partition2 {
    /// Recomputes potential, degree bounds and obstructions from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let v1 = VertexSet::from_slice(n, &self.v1);
        let v2 = VertexSet::from_slice(n, &self.v2);
        let st = State::new(g, v1.clone());
        v1.union(&v2) == g.all_vertices()
            && !v1.intersects(&v2)
            && st.phi() == self.phi
            && st.obstructions() == self.obstructions
            && v1.iter().all(|v| g.degree_in(v, &v1) <= 1)
            && v2.iter().all(|v| g.degree_in(v, &v2) < self.delta)
    }
}

#[derive(Clone)]
struct State<'g> {
    g: &'g Graph,
    delta: usize,
    v1: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Measure {
    phi: usize,
    obstructions: usize,
    path_len: usize,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph, v1: VertexSet) -> Self {
        State {
            g,
            delta: g.max_degree(),
            v1,
        }
    }

    fn v2(&self) -> VertexSet {
        self.g.all_vertices().difference(&self.v1)
    }

    fn part_of(&self, v: usize) -> VertexSet {
        if self.v1.contains(v) {
            self.v1.clone()
        } else {
            self.v2()
        }
    }

    fn phi(&self) -> usize {
        (self.delta - 1) * self.g.edges_within(&self.v1) + self.g.edges_within(&self.v2())
    }

    fn flip(&mut self, moved: &[usize]) {
        for &v in moved {
            if !self.v1.remove(v) {
                self.v1.insert(v);
            }
        }
    }

    /// Component index of every vertex in G[V1] ∪ G[V2], plus the components.
    fn components(&self) -> (Vec<usize>, Vec<VertexSet>) {
        let mut comps = self.g.components_within(&self.v1);
        comps.extend(self.g.components_within(&self.v2()));
        comps.sort_by_key(|c| c.first());
        let mut idx = vec![0; self.g.n()];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                idx[v] = i;
            }
        }
        (idx, comps)
    }

    fn is_obstruction(&self, c: &VertexSet) -> bool {
        let v = c.first().unwrap();
        let (h, _) = self.g.induced(c);
        if self.v1.contains(v) {
            h.n() == 2
        } else {
            (h.n() == self.delta && h.is_complete()) || (self.delta == 3 && h.is_odd_cycle())
        }
    }

    fn obstructions(&self) -> Vec<Vec<usize>> {
        self.components()
            .1
            .iter()
            .filter(|c| self.is_obstruction(c))
            .map(|c| c.to_vec())
            .collect()
    }

    /// Lexicographically least among the shortest maximal acceptable paths:
    /// starting in an obstruction, every vertex in its own P-component, and
    /// every neighbor of the last vertex sharing a P-component with the path.
    fn shortest_maximal_path(&self) -> Result<Option<Vec<usize>>> {
        let (idx, comps) = self.components();
        let starts =
            VertexSet::from_iter(self.g.n(), comps.iter().filter(|c| self.is_obstruction(c)).flat_map(|c| c.iter())).to_vec();
        if starts.is_empty() {
            return Ok(None);
        }
        let budget = limits::current().search_nodes;
        let mut nodes = 0u64;
        for len in 1..=comps.len() {
            let mut path = Vec::with_capacity(len);
            let mut used = vec![false; comps.len()];
            for &s in &starts {
                path.push(s);
                used[idx[s]] = true;
                if self.extend(&idx, &mut path, &mut used, len, &mut nodes, budget)? {
                    return Ok(Some(path));
                }
                used[idx[s]] = false;
                path.pop();
            }
        }
        Err(Error::invariant("obstruction present but no maximal acceptable path"))
    }

    fn extend(&self, idx: &[usize], path: &mut Vec<usize>, used: &mut [bool], len: usize, nodes: &mut u64, budget: u64) -> Result<bool> {
        *nodes += 1;
        limits::check("acceptable-path search nodes", *nodes as usize, budget as usize)?;
        let last = *path.last().unwrap();
        let open: Vec<usize> = self.g.neighbors(last).iter().filter(|&u| !used[idx[u]]).collect();
        if path.len() == len {
            return Ok(open.is_empty());
        }
        for u in open {
            path.push(u);
            used[idx[u]] = true;
            if self.extend(idx, path, used, len, nodes, budget)? {
                return Ok(true);
            }
            used[idx[u]] = false;
            path.pop();
        }
        Ok(false)
    }

    fn measure(&self) -> Result<Measure> {
        Ok(Measure {
            phi: self.phi(),
            obstructions: self.obstructions().len(),
            path_len: self.shortest_maximal_path()?.map_or(0, |p| p.len()),
        })
    }

    /// The move repertoire read off a shortest maximal acceptable path, in
    /// the order the existence argument tries them.
    fn repertoire(&self) -> Result<Vec<Vec<usize>>> {
        let Some(path) = self.shortest_maximal_path()? else {
            return Ok(Vec::new());
        };
        let g = self.g;
        let n = g.n();
        let (v1, vk) = (path[0], *path.last().unwrap());
        let a = g.component_within(v1, &self.part_of(v1));
        let b = g.component_within(vk, &self.part_of(vk));
        let x: Vec<usize> = g.neighbors(vk).intersection(&a).to_vec();
        let mut moves = vec![vec![v1]];
        moves.extend(x.iter().map(|&xi| vec![xi]));
        moves.extend(x.iter().filter(|&&xi| xi != vk).map(|&xi| vec![xi, vk]));
        for (i, &x1) in x.iter().enumerate() {
            for &x2 in &x[i + 1..] {
                if !g.has_edge(x1, x2) {
                    moves.push(vec![x1, vk, x2]);
                }
            }
        }
        for &xi in &x {
            let y: Vec<usize> = g.neighbors(xi).intersection(&b).to_vec();
            for (i, &y1) in y.iter().enumerate() {
                for &y2 in &y[i + 1..] {
                    if g.has_edge(y1, y2) {
                        continue;
                    }
                    for &x2 in x.iter().filter(|&&x2| x2 != xi) {
                        moves.push(vec![xi, y1, x2, y2]);
                    }
                }
            }
        }
        moves.push(path.clone());
        if path.len() >= 2 {
            moves.push(vec![path[0], path[1]]);
        }
        // Duplicates within a move would cancel out.
        moves.retain(|m| VertexSet::from_slice(n, m).len() == m.len());
        Ok(moves)
    }

    fn try_move(&self, moved: &[usize], current: Measure) -> Result<Option<(State<'g>, Measure)>> {
        let mut next = self.clone();
        next.flip(moved);
        let m = next.measure()?;
        Ok((m < current).then_some((next, m)))
    }
}

struct Search<'g> {
    st: State<'g>,
    mu: Measure,
    moves: Vec<PartitionMove>,
}

impl<'g> Search<'g> {
    fn accept(&mut self, phase: u8, moved: Vec<usize>, next: State<'g>, m: Measure) -> Result<()> {
        ensure!(m < self.mu, "partition measure did not decrease");
        self.st = next;
        self.mu = m;
        self.moves.push(PartitionMove {
            phase,
            moved,
            phi: m.phi,
            obstructions: m.obstructions,
            path_len: m.path_len,
        });
        Ok(())
    }

    /// One strictly improving step, or false when every rule is exhausted.
    fn step(&mut self) -> Result<bool> {
        let g = self.st.g;
        let n = g.n();
        let d = self.st.delta;
        // Phase 1: a vertex too heavy in its own part.
        for v in 0..n {
            let part = self.st.part_of(v);
            let (here, there) = if self.st.v1.contains(v) {
                ((d - 1) * g.degree_in(v, &part), g.degree(v) - g.degree_in(v, &part))
            } else {
                (g.degree_in(v, &part), (d - 1) * (g.degree(v) - g.degree_in(v, &part)))
            };
            if there < here {
                let mut next = self.st.clone();
                next.flip(&[v]);
                let m = next.measure()?;
                self.accept(1, vec![v], next, m)?;
                return Ok(true);
            }
        }
        if self.mu.obstructions == 0 {
            return Ok(false);
        }
        // Phase 2: the proof's repertoire, then two repertoire moves in a row.
        let rep = self.st.repertoire()?;
        for m in &rep {
            if let Some((next, mu)) = self.st.try_move(m, self.mu)? {
                self.accept(2, m.clone(), next, mu)?;
                return Ok(true);
            }
        }
        for m1 in &rep {
            let mut mid = self.st.clone();
            mid.flip(m1);
            for m2 in mid.repertoire()? {
                if let Some((next, mu)) = mid.try_move(&m2, self.mu)? {
                    let moved = VertexSet::from_slice(n, m1)
                        .difference(&VertexSet::from_slice(n, &m2))
                        .union(&VertexSet::from_slice(n, &m2).difference(&VertexSet::from_slice(n, m1)))
                        .to_vec();
                    self.accept(2, moved, next, mu)?;
                    return Ok(true);
                }
            }
        }
        // Phase 3: any single vertex, then any pair.
        for v in 0..n {
            if let Some((next, mu)) = self.st.try_move(&[v], self.mu)? {
                self.accept(3, vec![v], next, mu)?;
                return Ok(true);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if let Some((next, mu)) = self.st.try_move(&[u, v], self.mu)? {
                    self.accept(3, vec![u, v], next, mu)?;
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Minimum-potential partition without obstructions, by enumerating every
/// V1 ⊆ V.
fn exhaustive(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    limits::check("partition fallback vertices", n, limits::current().partition_n)?;
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u)).collect();
    let d = g.max_degree();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let inside = |mask: u64| -> usize {
        (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    };
    let phi = |mask: u64| (d - 1) * inside(mask) + inside(all & !mask);
    let best = (0..=all).map(phi).min().unwrap();
    for mask in 0..=all {
        if phi(mask) == best {
            let v1 = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if State::new(g, v1.clone()).obstructions().is_empty() {
                return Ok(v1);
            }
        }
    }
    Err(Error::invariant("no normal partition is obstruction-free"))
}

pub fn find_obstruction_free_partition(g: &Graph) -> Result<Partition2> {
    let n = g.n();
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Error::precondition(format!("partition search needs Δ ≥ 3, got {delta}")));
    }
    if let Some(c) = g.components().into_iter().find(|c| c.len() == delta + 1 && g.is_clique(c)) {
        return Err(Error::precondition_with(format!("graph contains K_{}", delta + 1), c.to_vec()));
    }
    let mut v1 = VertexSet::new(n);
    for v in 0..n {
        if !g.neighbors(v).intersects(&v1) {
            v1.insert(v);
        }
    }
    let st = State::new(g, v1);
    let mu = st.measure()?;
    let mut search = Search {
        st,
        mu,
        moves: Vec::new(),
    };
    while search.step()? {}
    let mut fallback = false;
    if search.mu.obstructions > 0 {
        fallback = true;
        search.st = State::new(g, exhaustive(g)?);
    }
    let st = &search.st;
    let p = Partition2 {
        delta,
        v1: st.v1.to_vec(),
        v2: st.v2().to_vec(),
        phi: st.phi(),
        obstructions: st.obstructions(),
        moves: search.moves,
        fallback,
    };
    ensure!(p.obstructions.is_empty() && p.verify(g), "partition search ended with a bad partition");
    Ok(p)
}

/// V1 gets color k; G[V2] has maximum degree below k and no obstruction,
/// so it is colored with k − 1 colors.
pub(crate) fn color_regular(g: &Graph, k: usize, t: &mut Tracer) -> Result<Coloring> {
    let p = find_obstruction_free_partition(g)?;
    ensure!(p.delta == k, "partition computed for Δ = {} instead of {k}", p.delta);
    for mv in &p.moves {
        t.push(Step::PartitionMove {
            phase: mv.phase,
            moved: t.vs(mv.moved.iter().copied()),
            phi: mv.phi,
            obstructions: mv.obstructions,
            path_len: mv.path_len,
        });
    }
    if p.fallback {
        t.push(Step::PartitionFallback);
    }
    let v1 = VertexSet::from_slice(g.n(), &p.v1);
    ensure!(g.is_independent(&v1), "V1 of an obstruction-free partition has an edge");
    t.push(Step::FreshClass {
        class: t.vs(v1.iter()),
        color: k as Color,
    });
    let (h, map) = g.without(&v1);
    let hc = if k == 3 {
        two_color(&h, &mut t.child(&map))?
    } else {
        color_with(&h, k - 1, Strategy::Partition, &mut t.child(&map))?
    };
    let mut coloring = Coloring::empty(g.n());
    for (i, &v) in map.iter().enumerate() {
        coloring.set(v, hc.get(i).unwrap());
    }
    for v in v1.iter() {
        coloring.set(v, k as Color);
    }
    Ok(coloring)
}
