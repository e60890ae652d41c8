use crate::error::{Error, Result};
use crate::graph_core::{Color, Coloring, Graph, ListAssignment};
use crate::limits;

const NONE: u8 = u8::MAX;

/// Minimum-remaining-values backtracking over 128-bit color masks.
pub(crate) struct MaskSolver<'a> {
    nbrs: &'a [Vec<usize>],
    avail: Vec<u128>,
    color: Vec<u8>,
    trail: Vec<(usize, u128)>,
}

impl<'a> MaskSolver<'a> {
    /// `active[v]` false means v is ignored (treated as absent).
    pub(crate) fn solve(nbrs: &'a [Vec<usize>], lists: &[u128], active: &[bool]) -> Option<Vec<u8>> {
        let n = nbrs.len();
        let mut s = MaskSolver {
            nbrs,
            avail: lists.to_vec(),
            color: vec![NONE; n],
            trail: Vec::new(),
        };
        let mut left = 0;
        for v in 0..n {
            if active[v] {
                left += 1;
            } else {
                s.color[v] = NONE - 1;
            }
        }
        if s.rec(left) {
            Some(s.color)
        } else {
            None
        }
    }

    fn rec(&mut self, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut best = usize::MAX;
        let mut best_count = u32::MAX;
        for v in 0..self.color.len() {
            if self.color[v] == NONE {
                let c = self.avail[v].count_ones();
                if c == 0 {
                    return false;
                }
                if c < best_count {
                    best = v;
                    best_count = c;
                }
            }
        }
        let v = best;
        let mut opts = self.avail[v];
        while opts != 0 {
            let c = opts.trailing_zeros();
            opts &= opts - 1;
            self.color[v] = c as u8;
            let mark = self.trail.len();
            let bit = 1u128 << c;
            for &w in self.nbrs[v].iter() {
                if self.color[w] == NONE && self.avail[w] & bit != 0 {
                    self.trail.push((w, self.avail[w]));
                    self.avail[w] &= !bit;
                }
            }
            if self.rec(left - 1) {
                return true;
            }
            while self.trail.len() > mark {
                let (w, a) = self.trail.pop().unwrap();
                self.avail[w] = a;
            }
            self.color[v] = NONE;
        }
        false
    }
}

pub(crate) fn neighbor_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// An L-coloring of `g` if one exists.
pub fn is_list_colorable(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    if lists.n() != g.n() {
        return Err(Error::precondition("list assignment sized for a different graph"));
    }
    limits::check("vertices for list coloring", g.n(), limits::current().list_n)?;
    let universe: Vec<Color> = lists.universe();
    limits::check("distinct colors for list coloring", universe.len(), 128)?;
    let masks: Vec<u128> = (0..g.n())
        .map(|v| {
            lists
                .list(v)
                .iter()
                .fold(0u128, |m, c| m | 1 << universe.binary_search(c).unwrap())
        })
        .collect();
    let nbrs = neighbor_lists(g);
    Ok(MaskSolver::solve(&nbrs, &masks, &vec![true; g.n()])
        .map(|cs| Coloring::from_colors(cs.iter().map(|&i| universe[i as usize]).collect())))
}
