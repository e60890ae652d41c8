//! f-choosability by canonical enumeration of list assignments.
//!
//! Only the intersection pattern of the lists matters, so lists are drawn
//! from colors 0..Σf and built vertex by vertex in breadth-first order. The
//! colors not yet distinguished by the assigned prefix split into classes of
//! interchangeable colors; a new list takes a count from each class (always
//! its lowest members) plus fresh colors. Every assignment is equivalent
//! under a color permutation to exactly one such canonical assignment.

use super::lists::{neighbor_lists, MaskSolver};
use crate::error::{Error, Result};
use crate::graph_core::{Graph, ListAssignment, VertexSet};
use crate::limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    /// A list assignment with the requested sizes admitting no proper coloring.
    Bad(ListAssignment),
}

impl Choosability {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Choosability::Choosable)
    }

    pub fn bad_lists(&self) -> Option<&ListAssignment> {
        match self {
            Choosability::Bad(l) => Some(l),
            Choosability::Choosable => None,
        }
    }
}

/// Removes, while possible, a vertex whose list is longer than its degree
/// among the remaining vertices. What survives must be settled by search.
pub(crate) fn greedy_core(g: &Graph, f: &[usize], alive: &VertexSet) -> VertexSet {
    let mut alive = alive.clone();
    loop {
        let Some(v) = alive.iter().find(|&v| f[v] > g.degree_in(v, &alive)) else { return alive };
        alive.remove(v);
    }
}

struct Enumerator<'a> {
    nbrs: Vec<Vec<usize>>,
    f: &'a [usize],
    order: Vec<usize>,
    pos: Vec<usize>,
    lists: Vec<u128>,
    // Class boundaries over colors 0..used; class i is [bounds[i], bounds[i+1]).
    bounds: Vec<u32>,
    // good[v]: G − v is greedily colorable from any f-lists.
    good: Vec<bool>,
    nodes: usize,
    node_limit: usize,
}

impl Enumerator<'_> {
    fn prefix_solvable(&self, k: usize) -> bool {
        let mut active = vec![false; self.nbrs.len()];
        for &v in &self.order[..=k] {
            active[v] = true;
        }
        MaskSolver::solve(&self.nbrs, &self.lists, &active).is_some()
    }

    /// Some vertex around `v` with its whole neighborhood assigned has a color
    /// no neighbor can use; if the rest of the graph is greedily colorable
    /// then so is every completion.
    fn settled(&self, v: usize, k: usize) -> bool {
        std::iter::once(v).chain(self.nbrs[v].iter().copied()).any(|u| {
            self.good[u]
                && self.pos[u] <= k
                && self.nbrs[u].iter().all(|&w| self.pos[w] <= k)
                && self.lists[u] & !self.nbrs[u].iter().fold(0u128, |m, &w| m | self.lists[w]) != 0
        })
    }

    /// Returns true when a bad assignment has been found (left in `lists`).
    fn rec(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::Scale {
                what: "choosability search nodes",
                value: self.nodes,
                limit: self.node_limit,
            });
        }
        let v = self.order[k];
        let classes = self.bounds.len() - 1;
        let mut take = vec![0u32; classes];
        self.choose(k, v, 0, self.f[v] as u32, &mut take)
    }

    fn choose(&mut self, k: usize, v: usize, class: usize, left: u32, take: &mut Vec<u32>) -> Result<bool> {
        if class == take.len() {
            return self.place(k, v, left, take);
        }
        let size = self.bounds[class + 1] - self.bounds[class];
        // Reuse first: overlapping lists are where bad assignments live.
        for t in (0..=size.min(left)).rev() {
            take[class] = t;
            if self.choose(k, v, class + 1, left - t, take)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn place(&mut self, k: usize, v: usize, fresh: u32, take: &[u32]) -> Result<bool> {
        let used = *self.bounds.last().unwrap();
        if used + fresh > 128 {
            return Err(Error::Scale {
                what: "colors in choosability search",
                value: (used + fresh) as usize,
                limit: 128,
            });
        }
        let mut mask = 0u128;
        let mut bounds = Vec::with_capacity(self.bounds.len() * 2 + 1);
        for (i, &t) in take.iter().enumerate() {
            let (lo, hi) = (self.bounds[i], self.bounds[i + 1]);
            bounds.push(lo);
            for c in lo..lo + t {
                mask |= 1 << c;
            }
            if t > 0 && lo + t < hi {
                bounds.push(lo + t);
            }
        }
        bounds.push(used);
        if fresh > 0 {
            for c in used..used + fresh {
                mask |= 1 << c;
            }
            bounds.push(used + fresh);
        }
        let saved = std::mem::replace(&mut self.bounds, bounds);
        self.lists[v] = mask;
        let found = if !self.prefix_solvable(k) {
            true
        } else if self.settled(v, k) {
            false
        } else {
            self.rec(k + 1)?
        };
        if !found {
            self.lists[v] = 0;
            self.bounds = saved;
        }
        Ok(found)
    }
}

/// Search for a bad f-assignment on a connected graph in which no vertex
/// has a list longer than its degree. Returns the bad lists as masks.
fn search_component(g: &Graph, f: &[usize]) -> Result<Option<Vec<u128>>> {
    let n = g.n();
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let dist = g.distances_from(&VertexSet::singleton(n, start));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (dist[v].unwrap_or(usize::MAX), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let good = (0..n)
        .map(|v| {
            let mut rest = g.all_vertices();
            rest.remove(v);
            greedy_core(g, f, &rest).is_empty()
        })
        .collect();
    let mut e = Enumerator {
        nbrs: neighbor_lists(g),
        f,
        order,
        pos,
        lists: vec![0; n],
        bounds: vec![0],
        good,
        nodes: 0,
        node_limit: limits::current().choosable_nodes as usize,
    };
    if e.rec(0)? {
        // Vertices past the failing prefix get fresh colors.
        let mut next = 128 - e.lists.iter().fold(0u128, |m, &l| m | l).leading_zeros();
        for v in 0..n {
            if e.lists[v] == 0 && f[v] > 0 {
                for _ in 0..f[v] {
                    e.lists[v] |= 1 << next;
                    next += 1;
                }
            }
        }
        Ok(Some(e.lists))
    } else {
        Ok(None)
    }
}

fn verdict(g: &Graph, f: &[usize], paint_shortcut: bool) -> Result<Choosability> {
    let n = g.n();
    if f.len() != n {
        return Err(Error::precondition("list sizes given for a different graph"));
    }
    limits::check("vertices for choosability", n, limits::current().choosable_n)?;
    let fresh_lists = |base: Vec<Vec<u32>>| -> ListAssignment {
        let mut next = base.iter().flatten().copied().max().unwrap_or(0) + 1;
        let lists = base
            .into_iter()
            .enumerate()
            .map(|(v, l)| {
                if l.is_empty() && f[v] > 0 {
                    let l: Vec<u32> = (next..next + f[v] as u32).collect();
                    next += f[v] as u32;
                    l
                } else {
                    l
                }
            })
            .collect();
        ListAssignment::new(lists)
    };
    if f.contains(&0) {
        return Ok(Choosability::Bad(fresh_lists(vec![Vec::new(); n])));
    }
    let core = greedy_core(g, f, &g.all_vertices());
    for comp in g.components_within(&core) {
        let (h, map) = g.induced(&comp);
        let fh: Vec<usize> = map.iter().map(|&v| f[v]).collect();
        limits::check("list colors in a component", fh.iter().sum(), 128)?;
        if paint_shortcut {
            match crate::paintability::painter_wins(&h, &fh) {
                Ok(true) => continue,
                Ok(false) => {}
                Err(e) if e.is_scale_refusal() => {}
                Err(e) => return Err(e),
            }
        }
        if let Some(masks) = search_component(&h, &fh)? {
            let mut base = vec![Vec::new(); n];
            for (i, &v) in map.iter().enumerate() {
                base[v] = (0..128u32).filter(|&c| masks[i] >> c & 1 == 1).map(|c| c + 1).collect();
            }
            return Ok(Choosability::Bad(fresh_lists(base)));
        }
    }
    Ok(Choosability::Choosable)
}

/// Whether every assignment of lists with sizes `f` admits a proper
/// coloring. A painter win in the online game certifies choosability
/// outright; everything else is settled by enumeration.
pub fn is_f_choosable(g: &Graph, f: &[usize]) -> Result<Choosability> {
    verdict(g, f, true)
}

/// Same answer as [`is_f_choosable`], by list enumeration alone.
pub fn is_f_choosable_by_enumeration(g: &Graph, f: &[usize]) -> Result<Choosability> {
    verdict(g, f, false)
}

/// Least k such that `g` is k-choosable.
pub fn chi_list_exact(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let (chi, _) = super::chi::chi_exact(g)?;
    for k in chi.max(1)..=g.max_degree() + 1 {
        if is_f_choosable(g, &vec![k; g.n()])?.is_choosable() {
            return Ok(k);
        }
    }
    Err(Error::invariant("graph is not (Δ+1)-choosable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;
    use crate::oracle::is_list_colorable;

    fn check_bad(g: &Graph, f: &[usize], c: &Choosability) {
        let l = c.bad_lists().expect("expected a bad assignment");
        assert_eq!(l.sizes(), f);
        assert!(is_list_colorable(g, l).unwrap().is_none());
    }

    #[test]
    fn known_cases_by_enumeration() {
        let k33 = complete_bipartite(3, 3);
        let c = is_f_choosable_by_enumeration(&k33, &[2; 6]).unwrap();
        check_bad(&k33, &[2; 6], &c);
        assert!(is_f_choosable_by_enumeration(&cycle(6), &[2; 6]).unwrap().is_choosable());
        assert!(is_f_choosable_by_enumeration(&cycle(4), &[2; 4]).unwrap().is_choosable());
        let c = is_f_choosable_by_enumeration(&complete(2), &[1, 1]).unwrap();
        check_bad(&complete(2), &[1, 1], &c);
        let c5 = is_f_choosable_by_enumeration(&cycle(5), &[2; 5]).unwrap();
        check_bad(&cycle(5), &[2; 5], &c5);
    }

    #[test]
    fn degree_lists() {
        // Gallai trees fail, everything else passes.
        for g in [complete(4), cycle(5), bowtie()] {
            let d = g.degrees();
            check_bad(&g, &d, &is_f_choosable_by_enumeration(&g, &d).unwrap());
        }
        for g in [cycle(4), diamond(), complete_bipartite(2, 3)] {
            let d = g.degrees();
            assert!(is_f_choosable_by_enumeration(&g, &d).unwrap().is_choosable());
        }
    }

    #[test]
    fn choice_numbers() {
        assert_eq!(chi_list_exact(&complete_bipartite(3, 3)).unwrap(), 3);
        assert_eq!(chi_list_exact(&cycle(6)).unwrap(), 2);
        assert_eq!(chi_list_exact(&complete(4)).unwrap(), 4);
        assert_eq!(chi_list_exact(&complete_bipartite(2, 3)).unwrap(), 2);
        assert_eq!(chi_list_exact(&complete_bipartite(2, 4)).unwrap(), 3);
    }

    #[test]
    fn zero_lists_and_disconnected() {
        let g = Graph::new(2);
        check_bad(&g, &[0, 1], &is_f_choosable(&g, &[0, 1]).unwrap());
        let two = complete(2).disjoint_union(&cycle(4));
        let c = is_f_choosable(&two, &[1, 1, 2, 2, 2, 2]).unwrap();
        check_bad(&two, &[1, 1, 2, 2, 2, 2], &c);
    }
}
