use crate::error::{Error, Result};
use crate::graph_core::structure::{classify_basic, StructureClass, StructureTag};
use crate::graph_core::{Graph, VertexSet};
use crate::limits;
use serde::Serialize;

/// Spanning tree whose leaves are pairwise nonadjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependencyTree {
    pub edges: Vec<(usize, usize)>,
    pub leaves: Vec<usize>,
    /// Visit order of the depth-first construction.
    pub order: Vec<usize>,
}

impl IndependencyTree {
    pub fn as_graph(&self, n: usize) -> Graph {
        let mut t = Graph::new(n);
        for &(u, v) in &self.edges {
            t.add_edge(u, v);
        }
        t
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let t = self.as_graph(n);
        let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
        n >= 2
            && self.edges.len() == n - 1
            && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
            && t.is_connected()
            && leaves == self.leaves
            && g.is_independent(&VertexSet::from_slice(n, &leaves))
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TreeSearch {
    Tree { tree: IndependencyTree },
    /// The graph is a complete graph, a cycle or a balanced complete
    /// bipartite graph, which have no such tree.
    None { structure: StructureClass },
}

impl TreeSearch {
    pub fn tree(&self) -> Option<&IndependencyTree> {
        match self {
            TreeSearch::Tree { tree } => Some(tree),
            TreeSearch::None { .. } => None,
        }
    }
}

struct Dfs<'g> {
    g: &'g Graph,
    visited: VertexSet,
    stack: Vec<usize>,
    leaves: VertexSet,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn has_unvisited(&self, x: usize) -> bool {
        !self.g.neighbors(x).is_subset(&self.visited)
    }

    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        limits::check("independency tree search nodes", self.nodes as usize, self.budget as usize)?;
        let saved = self.stack.clone();
        while let Some(&x) = self.stack.last() {
            if self.has_unvisited(x) {
                break;
            }
            self.stack.pop();
        }
        let Some(&x) = self.stack.last() else {
            self.stack = saved;
            return Ok(self.root_ok());
        };
        let choices: Vec<usize> = self.g.neighbors(x).difference(&self.visited).to_vec();
        for w in choices {
            self.visited.insert(w);
            let leaf = !self.has_unvisited(w);
            if leaf && self.g.neighbors(w).intersects(&self.leaves) {
                self.visited.remove(w);
                continue;
            }
            if leaf {
                self.leaves.insert(w);
            }
            self.stack.push(w);
            self.edges.push((x, w));
            self.order.push(w);
            if self.run()? {
                return Ok(true);
            }
            self.order.pop();
            self.edges.pop();
            self.stack.pop();
            self.leaves.remove(w);
            self.visited.remove(w);
        }
        self.stack = saved;
        Ok(false)
    }

    /// The root is a leaf exactly when it has one child.
    fn root_ok(&mut self) -> bool {
        let root = self.order[0];
        let children = self.edges.iter().filter(|&&(u, _)| u == root).count();
        if children == 1 {
            if self.g.neighbors(root).intersects(&self.leaves) {
                return false;
            }
            self.leaves.insert(root);
        }
        true
    }
}

/// Depth-first independency tree found by backtracking over roots and
/// neighbor choices, or the structural certificate that none exists.
pub fn find_independency_tree(g: &Graph) -> Result<TreeSearch> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::precondition("independency trees need a connected graph"));
    }
    if n >= 3 {
        let mut dfs = Dfs {
            g,
            visited: VertexSet::new(n),
            stack: Vec::new(),
            leaves: VertexSet::new(n),
            edges: Vec::new(),
            order: Vec::new(),
            nodes: 0,
            budget: limits::current().search_nodes,
        };
        for root in 0..n {
            dfs.visited.insert(root);
            dfs.stack.push(root);
            dfs.order.push(root);
            if dfs.run()? {
                let mut edges: Vec<(usize, usize)> = dfs.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
                edges.sort_unstable();
                let tree = IndependencyTree {
                    edges,
                    leaves: dfs.leaves.to_vec(),
                    order: dfs.order.clone(),
                };
                crate::error::ensure!(tree.verify(g), "independency tree search returned a bad tree");
                return Ok(TreeSearch::Tree { tree });
            }
            dfs.visited.remove(root);
            dfs.stack.clear();
            dfs.order.clear();
        }
    }
    let structure = classify_basic(g);
    if structure.tag == StructureTag::Other {
        return Err(Error::invariant("no independency tree, yet the graph is not complete, a cycle or K_{m,m}"));
    }
    Ok(TreeSearch::None { structure })
}
