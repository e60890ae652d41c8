use crate::error::Result;
use crate::graph_core::clique::max_clique;
use crate::graph_core::{Coloring, Graph};
use crate::limits;

const NONE: usize = usize::MAX;

/// Backtracking k-coloring, DSATUR vertex order, with a maximum clique
/// pinned to colors 0..ω and at most one new color opened per step.
struct KSearch<'a> {
    nbrs: Vec<Vec<usize>>,
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // counts[v][c]: colored neighbors of v with color c
    counts: Vec<Vec<u16>>,
    sat: Vec<u64>,
}

impl KSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            self.counts[w][c] += 1;
            if self.counts[w][c] == 1 {
                self.sat[w] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] &= !(1 << c);
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best = None;
        let mut key = (0u32, 0usize);
        for v in 0..self.g.n() {
            if self.color[v] != NONE {
                continue;
            }
            let s = self.sat[v].count_ones();
            let d = self.nbrs[v].iter().filter(|&&w| self.color[w] == NONE).count();
            if best.is_none() || (s, d) > key {
                best = Some(v);
                key = (s, d);
            }
        }
        best
    }

    fn rec(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else { return true };
        let top = (used + 1).min(self.k);
        for c in 0..top {
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.rec(used.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

fn k_coloring(g: &Graph, k: usize, clique: &[usize]) -> Option<Coloring> {
    if clique.len() > k {
        return None;
    }
    let n = g.n();
    let mut s = KSearch {
        nbrs: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        g,
        k,
        color: vec![NONE; n],
        counts: vec![vec![0; k.max(1)]; n],
        sat: vec![0; n],
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i);
    }
    if s.rec(clique.len()) {
        Some(Coloring::from_colors(s.color.iter().map(|&c| c as u32 + 1).collect()))
    } else {
        None
    }
}

fn is_sparse(g: &Graph) -> bool {
    g.max_degree() <= 4 || g.m() <= 2 * g.n()
}

/// Chromatic number with an optimal coloring. The search proves that no
/// coloring with one color fewer exists.
pub fn chi_exact(g: &Graph) -> Result<(usize, Coloring)> {
    let lim = limits::current();
    let bound = if is_sparse(g) { lim.chi_sparse_n } else { lim.chi_n };
    limits::check("vertices for chromatic number", g.n(), bound)?;
    if g.n() == 0 {
        return Ok((0, Coloring::empty(0)));
    }
    let clique = max_clique(g)?.to_vec();
    // 64-bit saturation masks; Δ+1 colors always suffice.
    let top = (g.max_degree() + 1).min(64);
    for k in clique.len()..=top {
        if let Some(c) = k_coloring(g, k, &clique) {
            return Ok((k, c));
        }
    }
    Err(crate::error::Error::invariant("no coloring with Δ+1 colors found"))
}

/// Whether `g` has a proper k-coloring, with one if so.
pub fn k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    let lim = limits::current();
    let bound = if is_sparse(g) { lim.chi_sparse_n } else { lim.chi_n };
    limits::check("vertices for k-colorability", g.n(), bound)?;
    if k >= 64 {
        return Err(crate::error::Error::Scale {
            what: "colors for k-colorability",
            value: k,
            limit: 63,
        });
    }
    let clique = max_clique(g)?.to_vec();
    Ok(k_coloring(g, k, &clique))
}
