//! Exact maximum clique and independent set by branch and bound with
//! greedy-coloring bounds.

use super::bitset::VertexSet;
use super::graph::Graph;
use crate::error::Result;
use crate::limits;

/// Candidates sorted by greedy color class, with the class number of each
/// as an upper bound on the clique it can still complete.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut left = cand.clone();
    let mut color = 0;
    while !left.is_empty() {
        color += 1;
        let mut avail = left.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.neighbors(v));
            left.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: VertexSet) {
        let (order, bounds) = color_sort(self.g, &cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = cand.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

pub fn max_clique(g: &Graph) -> Result<VertexSet> {
    limits::check("vertices for clique search", g.n(), limits::current().clique_n)?;
    let mut s = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    s.expand(g.all_vertices());
    Ok(VertexSet::from_slice(g.n(), &s.best))
}

pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    max_clique(&g.complement())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    max_clique(g).map(|c| c.len())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    max_independent_set(g).map(|c| c.len())
}

/// Every clique of size exactly `k`, each as a sorted vertex list.
pub fn cliques_of_size(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, k: usize, cur: &mut Vec<usize>, cand: VertexSet, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if cur.len() + cand.len() < k {
            return;
        }
        for v in cand.iter() {
            let mut next = cand.intersection(g.neighbors(v));
            // Only extend upward to enumerate each clique once.
            for w in 0..=v {
                next.remove(w);
            }
            cur.push(v);
            rec(g, k, cur, next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return vec![Vec::new()];
    }
    rec(g, k, &mut Vec::new(), g.all_vertices(), &mut out);
    out
}
