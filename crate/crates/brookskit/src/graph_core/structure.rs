//! Blocks, cutvertices, distance orders, and the Gallai-tree and k-tree
//! recognizers.

use super::bitset::VertexSet;
use super::graph::Graph;
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks, each sorted, ordered lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cutvertices: Vec<usize>,
    /// `(block index, cutvertex)` pairs.
    pub incidence: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Blocks that contain at most one cutvertex.
    pub fn endblocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.incidence.iter().filter(|&&(bb, _)| bb == b).count() <= 1)
            .collect()
    }

    pub fn is_cutvertex(&self, v: usize) -> bool {
        self.cutvertices.binary_search(&v).is_ok()
    }
}

/// Hopcroft–Tarjan biconnected components. Isolated vertices form
/// single-vertex blocks.
pub fn blocks_and_cutvertices(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if nbrs[root].is_empty() {
            blocks.push(vec![root]);
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < nbrs[v].len() {
                let w = nbrs[v][*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        if parent != root {
                            is_cut[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    let cutvertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut incidence = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if is_cut[v] {
                incidence.push((b, v));
            }
        }
    }
    BlockCutTree {
        blocks,
        cutvertices,
        incidence,
    }
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks_and_cutvertices(g).cutvertices.is_empty()
}

/// Vertices sorted by decreasing BFS distance to `targets`, ties by index.
/// Each non-target vertex has a strictly closer neighbor later in the order.
pub fn order_by_decreasing_distance(g: &Graph, targets: &VertexSet) -> Result<Vec<usize>> {
    order_by_decreasing_distance_within(g, targets, &g.all_vertices())
}

/// As [`order_by_decreasing_distance`], restricted to the subgraph induced
/// by `allowed`; only allowed vertices appear in the order.
pub fn order_by_decreasing_distance_within(g: &Graph, targets: &VertexSet, allowed: &VertexSet) -> Result<Vec<usize>> {
    let dist = g.distances_within(targets, allowed);
    let unreachable: Vec<usize> = allowed.iter().filter(|&v| dist[v].is_none()).collect();
    if !unreachable.is_empty() {
        return Err(Error::precondition_with(
            "vertices have no path to the targets",
            unreachable,
        ));
    }
    let mut order: Vec<usize> = allowed.iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(dist[v].unwrap()), v));
    Ok(order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Complete,
    OddCycle,
    Other,
}

pub fn block_kind(g: &Graph, block: &[usize]) -> BlockKind {
    let set = VertexSet::from_slice(g.n(), block);
    let k = block.len();
    if g.is_clique(&set) {
        BlockKind::Complete
    } else if k % 2 == 1 && g.edges_within(&set) == k && block.iter().all(|&v| g.degree_in(v, &set) == 2) {
        BlockKind::OddCycle
    } else {
        BlockKind::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    Complete,
    OddCycle,
    EvenCycle,
    BalancedCompleteBipartite,
    GallaiTree,
    BridgedKtree,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockWitness {
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Order { n: usize },
    Parts { parts: [Vec<usize>; 2] },
    Blocks { blocks: Vec<BlockWitness> },
    KTree { k: usize, units: Vec<Vec<usize>>, bridges: Vec<(usize, usize)> },
}

/// A structural tag plus the data needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub tag: StructureTag,
    pub witness: Option<Witness>,
}

impl StructureClass {
    fn other() -> Self {
        StructureClass {
            tag: StructureTag::Other,
            witness: None,
        }
    }
}

/// Tags a connected graph as complete, a cycle or a balanced complete
/// bipartite graph (the families of the independency-tree lemma).
pub fn classify_basic(g: &Graph) -> StructureClass {
    let n = g.n();
    let order = Some(Witness::Order { n });
    if g.is_complete() {
        return StructureClass {
            tag: StructureTag::Complete,
            witness: order,
        };
    }
    if g.is_cycle() {
        let tag = if n % 2 == 1 { StructureTag::OddCycle } else { StructureTag::EvenCycle };
        return StructureClass { tag, witness: order };
    }
    if let Some(parts) = balanced_complete_bipartite_parts(g) {
        return StructureClass {
            tag: StructureTag::BalancedCompleteBipartite,
            witness: Some(Witness::Parts { parts }),
        };
    }
    StructureClass::other()
}

pub fn balanced_complete_bipartite_parts(g: &Graph) -> Option<[Vec<usize>; 2]> {
    let n = g.n();
    if n < 2 || n % 2 == 1 || g.m() != n * n / 4 {
        return None;
    }
    let side = g.bipartition()?;
    let a: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    (a.len() == b.len()).then_some([a, b])
}

/// Gallai tree test: connected, every block complete or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<StructureClass> {
    if !g.is_connected() {
        return Err(Error::precondition("Gallai-tree recognition needs a connected graph"));
    }
    let bct = blocks_and_cutvertices(g);
    let blocks: Vec<BlockWitness> = bct
        .blocks
        .iter()
        .map(|b| BlockWitness {
            vertices: b.clone(),
            kind: block_kind(g, b),
        })
        .collect();
    let tag = if blocks.iter().all(|b| b.kind != BlockKind::Other) {
        StructureTag::GallaiTree
    } else {
        StructureTag::Other
    };
    Ok(StructureClass {
        tag,
        witness: Some(Witness::Blocks { blocks }),
    })
}

pub fn gallai(g: &Graph) -> bool {
    g.is_connected() && matches!(is_gallai_tree(g), Ok(StructureClass { tag: StructureTag::GallaiTree, .. }))
}

fn is_tk_unit(g: &Graph, block: &[usize], k: usize) -> bool {
    if k >= 4 {
        block.len() == k && block_kind(g, block) == BlockKind::Complete
    } else {
        // A triangle is reported as complete.
        match block_kind(g, block) {
            BlockKind::OddCycle => true,
            BlockKind::Complete => block.len() == 3,
            BlockKind::Other => false,
        }
    }
}

/// Recognizes the recursive "k-tree" of the Tverberg proof: T_k units (odd
/// cycles for k = 3, K_k for k ≥ 4) joined by bridges, each bridge added
/// between two vertices that still had degree k − 1.
///
/// Equivalently: every block is a T_k unit or a bridge, the units are
/// vertex-disjoint and cover V, and every vertex meets at most one bridge.
pub fn is_bridged_ktree(g: &Graph, k: usize) -> StructureClass {
    if k < 3 || !g.is_connected() {
        return StructureClass::other();
    }
    let bct = blocks_and_cutvertices(g);
    let mut units = Vec::new();
    let mut bridges = Vec::new();
    let mut unit_of = vec![usize::MAX; g.n()];
    let mut bridge_count = vec![0usize; g.n()];
    for b in &bct.blocks {
        if is_tk_unit(g, b, k) {
            for &v in b {
                if unit_of[v] != usize::MAX {
                    return StructureClass::other();
                }
                unit_of[v] = units.len();
            }
            units.push(b.clone());
        } else if b.len() == 2 {
            bridges.push((b[0], b[1]));
            bridge_count[b[0]] += 1;
            bridge_count[b[1]] += 1;
        } else {
            return StructureClass::other();
        }
    }
    let ok = (0..g.n()).all(|v| unit_of[v] != usize::MAX && bridge_count[v] <= 1)
        && bridges.iter().all(|&(a, b)| unit_of[a] != unit_of[b]);
    if !ok {
        return StructureClass::other();
    }
    StructureClass {
        tag: StructureTag::BridgedKtree,
        witness: Some(Witness::KTree { k, units, bridges }),
    }
}

pub fn bridged_ktree(g: &Graph, k: usize) -> bool {
    is_bridged_ktree(g, k).tag == StructureTag::BridgedKtree
}

/// Single T_k unit: K_k for k ≥ 4, an odd cycle for k = 3.
pub fn is_tk(g: &Graph, k: usize) -> bool {
    if k >= 4 {
        g.n() == k && g.is_complete()
    } else {
        k == 3 && g.is_odd_cycle()
    }
}

/// Full classification used by the CLI: the basic families first, then
/// Gallai tree, then k-tree with k = Δ.
pub fn classify(g: &Graph) -> StructureClass {
    if !g.is_connected() {
        return StructureClass::other();
    }
    let basic = classify_basic(g);
    if basic.tag != StructureTag::Other {
        return basic;
    }
    if let Ok(c) = is_gallai_tree(g) {
        if c.tag == StructureTag::GallaiTree {
            return c;
        }
    }
    let k = g.max_degree();
    let kt = is_bridged_ktree(g, k);
    if kt.tag == StructureTag::BridgedKtree {
        return kt;
    }
    StructureClass::other()
}

/// Shortest cycle through BFS from every vertex, as a vertex sequence.
/// A shortest cycle is always induced. Ties go to the lexicographically
/// least (length, start, sequence) found by scanning roots in order.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len()) {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && dist[w] >= dist[u] {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        let path_to = |mut x: usize| {
                            let mut p = vec![x];
                            while x != r {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        let pu = path_to(u);
                        let pw = path_to(w);
                        // Paths must meet only at r for a simple cycle.
                        let su = VertexSet::from_slice(n, &pu[..pu.len() - 1]);
                        if pw[..pw.len() - 1].iter().any(|&x| su.contains(x)) {
                            continue;
                        }
                        let mut cyc: Vec<usize> = pu.into_iter().rev().collect();
                        cyc.extend(pw[..pw.len() - 1].iter());
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::graph::named::*;

    #[test]
    fn block_examples() {
        let k4 = blocks_and_cutvertices(&complete(4));
        assert_eq!(k4.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(k4.cutvertices.is_empty());
        let bow = blocks_and_cutvertices(&bowtie());
        assert_eq!(bow.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bow.cutvertices, vec![2]);
        let p4 = blocks_and_cutvertices(&path(4));
        assert_eq!(p4.blocks.len(), 3);
        assert_eq!(p4.cutvertices, vec![1, 2]);
        assert_eq!(p4.endblocks(), vec![0, 2]);
        let iso = blocks_and_cutvertices(&Graph::new(2));
        assert_eq!(iso.blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn distance_order_examples() {
        let p3 = path(3);
        assert_eq!(order_by_decreasing_distance(&p3, &VertexSet::singleton(3, 2)).unwrap(), vec![0, 1, 2]);
        let c4 = cycle(4);
        assert_eq!(order_by_decreasing_distance(&c4, &VertexSet::singleton(4, 0)).unwrap(), vec![2, 1, 3, 0]);
        let s = star(3);
        assert_eq!(order_by_decreasing_distance(&s, &VertexSet::singleton(4, 0)).unwrap(), vec![1, 2, 3, 0]);
        let two = Graph::new(2);
        match order_by_decreasing_distance(&two, &VertexSet::singleton(2, 0)) {
            Err(Error::Precondition { witness: Some(w), .. }) => assert_eq!(w, vec![1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gallai_examples() {
        assert_eq!(is_gallai_tree(&path(5)).unwrap().tag, StructureTag::GallaiTree);
        assert_eq!(is_gallai_tree(&cycle(4)).unwrap().tag, StructureTag::Other);
        assert!(gallai(&bowtie()));
        // C5 and K4 sharing a vertex, plus a pendant triangle: three blocks.
        let mut g = Graph::new(10);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] {
            g.add_edge(u, v);
        }
        for (u, v) in [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)] {
            g.add_edge(u, v);
        }
        for (u, v) in [(7, 8), (8, 9), (9, 7)] {
            g.add_edge(u, v);
        }
        assert!(gallai(&g));
        assert!(is_gallai_tree(&Graph::new(2)).is_err());
    }

    #[test]
    fn ktree_examples() {
        assert!(bridged_ktree(&complete(4), 4));
        let mut two = complete(4).disjoint_union(&complete(4));
        two.add_edge(0, 4);
        assert!(bridged_ktree(&two, 4));
        assert!(!bridged_ktree(&cycle(4), 3));
        assert!(bridged_ktree(&cycle(5), 3));
        // Two bridges at one vertex break the degree condition.
        let mut three = complete(4).disjoint_union(&complete(4)).disjoint_union(&complete(4));
        three.add_edge(0, 4);
        three.add_edge(0, 8);
        assert!(!bridged_ktree(&three, 4));
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(shortest_cycle(&petersen()).unwrap().len(), 5);
        assert_eq!(shortest_cycle(&prism()).unwrap().len(), 3);
        assert_eq!(shortest_cycle(&complete_bipartite(3, 3)).unwrap().len(), 4);
        assert!(shortest_cycle(&path(6)).is_none());
    }
}
