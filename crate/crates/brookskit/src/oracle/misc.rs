use crate::error::{Error, Result};
use crate::graph_core::clique::{cliques_of_size, max_clique};
use crate::graph_core::{Graph, VertexSet};
use crate::limits;

/// A smallest independent set meeting every maximum clique, if one exists.
pub fn hitting_set_exact(g: &Graph) -> Result<Option<VertexSet>> {
    let omega = max_clique(g)?.len();
    if g.n() == 0 {
        return Ok(Some(VertexSet::new(0)));
    }
    let cliques: Vec<VertexSet> = cliques_of_size(g, omega).iter().map(|c| VertexSet::from_slice(g.n(), c)).collect();
    let mut hits = vec![0usize; g.n()];
    for c in &cliques {
        for v in c.iter() {
            hits[v] += 1;
        }
    }

    fn rec(g: &Graph, cliques: &[VertexSet], hits: &[usize], chosen: &mut VertexSet, size: usize) -> bool {
        let open: Vec<&VertexSet> = cliques.iter().filter(|c| !c.intersects(chosen)).collect();
        if open.is_empty() {
            return true;
        }
        if chosen.len() == size {
            return false;
        }
        let allowed = |v: usize| !g.neighbors(v).intersects(chosen);
        // Branch on the open clique with the fewest usable vertices.
        let clique = open.iter().min_by_key(|c| c.iter().filter(|&v| allowed(v)).count()).unwrap();
        let mut cand: Vec<usize> = clique.iter().filter(|&v| allowed(v)).collect();
        cand.sort_by_key(|&v| (std::cmp::Reverse(hits[v]), v));
        for v in cand {
            chosen.insert(v);
            if rec(g, cliques, hits, chosen, size) {
                return true;
            }
            chosen.remove(v);
        }
        false
    }

    let mut chosen = g.empty_set();
    for size in 1..=g.n() {
        if rec(g, &cliques, &hits, &mut chosen, size) {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

/// The graph has a Hamiltonian path and every Hamiltonian path has adjacent
/// endpoints. Graphs on one vertex count as satisfying it.
pub fn ham_path_in_cycle_property(g: &Graph) -> Result<bool> {
    let n = g.n();
    limits::check("vertices for Hamiltonian path enumeration", n, limits::current().ham_n)?;
    if !g.is_connected() {
        return Err(Error::precondition("graph is not connected"));
    }
    if n == 1 {
        return Ok(true);
    }
    // Returns false on the first Hamiltonian path with nonadjacent ends.
    fn rec(g: &Graph, start: usize, v: usize, seen: &mut VertexSet, depth: usize, found: &mut bool) -> bool {
        if depth == g.n() {
            *found = true;
            return g.has_edge(start, v);
        }
        for w in g.neighbors(v).iter() {
            if seen.contains(w) {
                continue;
            }
            seen.insert(w);
            let ok = rec(g, start, w, seen, depth + 1, found);
            seen.remove(w);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut found = false;
    for s in 0..n {
        let mut seen = VertexSet::singleton(n, s);
        if !rec(g, s, s, &mut seen, 1, &mut found) {
            return Ok(false);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;

    #[test]
    fn hitting_sets() {
        assert!(hitting_set_exact(&cycle(5)).unwrap().is_none());
        let g = complete(3).disjoint_union(&Graph::new(1));
        assert_eq!(hitting_set_exact(&g).unwrap().unwrap().to_vec(), vec![0]);
        assert_eq!(hitting_set_exact(&bowtie()).unwrap().unwrap().to_vec(), vec![2]);
        // Maximum cliques are edges; an independent cover needs a bipartite graph.
        assert!(hitting_set_exact(&petersen()).unwrap().is_none());
        assert!(hitting_set_exact(&cycle(6)).unwrap().is_some());
    }

    #[test]
    fn ham_property() {
        assert!(ham_path_in_cycle_property(&cycle(6)).unwrap());
        assert!(!ham_path_in_cycle_property(&path(4)).unwrap());
        assert!(ham_path_in_cycle_property(&complete(4)).unwrap());
        assert!(ham_path_in_cycle_property(&complete_bipartite(3, 3)).unwrap());
        assert!(!ham_path_in_cycle_property(&complete_bipartite(2, 3)).unwrap());
        assert!(!ham_path_in_cycle_property(&star(3)).unwrap());
        assert!(!ham_path_in_cycle_property(&petersen()).unwrap());
    }
}
