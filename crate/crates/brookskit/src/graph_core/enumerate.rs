//! Exhaustive graph enumeration for sweeps: all labeled graphs, labeled
//! regular graphs, isomorphism testing and class representatives.

use super::graph::Graph;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut p = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            p.push((i, j));
        }
    }
    p
}

/// Graph whose edge set is the bit pattern `mask` over the pairs in
/// graph6 column order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

/// All 2^(n choose 2) labeled graphs on `n` vertices (n ≤ 8).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to n <= 8");
    let bits = n * n.saturating_sub(1) / 2;
    (0..1u64 << bits).map(move |mask| graph_from_mask(n, mask))
}

pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(Graph::is_connected)
}

/// All labeled `d`-regular graphs on `n` vertices.
pub fn labeled_regular_graphs(n: usize, d: usize) -> Vec<Graph> {
    fn rec(n: usize, d: usize, pairs: &[(usize, usize)], k: usize, deg: &mut Vec<usize>, g: &mut Graph, out: &mut Vec<Graph>) {
        if k == pairs.len() {
            if deg.iter().all(|&x| x == d) {
                out.push(g.clone());
            }
            return;
        }
        let (i, j) = pairs[k];
        // Pairs are in lexicographic row order, so (i, n-1) is the last
        // chance for vertex i.
        let last_for_i = j == n - 1;
        if deg[i] < d && deg[j] < d {
            deg[i] += 1;
            deg[j] += 1;
            g.add_edge(i, j);
            if !(last_for_i && deg[i] != d) {
                rec(n, d, pairs, k + 1, deg, g, out);
            }
            g.remove_edge(i, j);
            deg[i] -= 1;
            deg[j] -= 1;
        }
        if !(last_for_i && deg[i] != d) {
            rec(n, d, pairs, k + 1, deg, g, out);
        }
    }
    if n * d % 2 == 1 || d >= n.max(1) {
        return if n == 0 { vec![Graph::new(0)] } else { Vec::new() };
    }
    let mut row_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            row_pairs.push((i, j));
        }
    }
    let mut out = Vec::new();
    rec(n, d, &row_pairs, 0, &mut vec![0; n], &mut Graph::new(n), &mut out);
    out
}

/// Isomorphism-invariant fingerprint used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<(usize, usize, usize)> = (0..g.n())
        .map(|x| {
            let nb = g.neighbors(x);
            let tri = nb.iter().map(|y| g.neighbors(y).intersection_len(nb)).sum::<usize>() / 2;
            let nd = nb.iter().map(|y| g.degree(y)).sum();
            (g.degree(x), tri, nd)
        })
        .collect();
    v.sort_unstable();
    v
}

/// Backtracking isomorphism test with degree and adjacency pruning.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || invariant(g) != invariant(h) {
        return false;
    }
    let n = g.n();
    // Match g's vertices in BFS order so each new vertex has mapped neighbors.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for w in g.neighbors(u).iter() {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    fn rec(g: &Graph, h: &Graph, order: &[usize], k: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for x in 0..h.n() {
            if used[x] || h.degree(x) != g.degree(u) {
                continue;
            }
            let ok = order[..k].iter().all(|&w| g.has_edge(u, w) == h.has_edge(x, map[w]));
            if ok {
                map[u] = x;
                used[x] = true;
                if rec(g, h, order, k + 1, map, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
    rec(g, h, &order, 0, &mut vec![usize::MAX; n], &mut vec![false; n])
}

/// One representative per isomorphism class, in first-seen order.
pub fn nonisomorphic<I: IntoIterator<Item = Graph>>(graphs: I) -> Vec<Graph> {
    let mut buckets: HashMap<(usize, usize, Vec<(usize, usize, usize)>), Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        let key = (g.n(), g.m(), invariant(&g));
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&reps[i], &g)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(g);
    }
    reps
}

/// Connected graphs on `n` vertices up to isomorphism (n ≤ 8).
pub fn connected_graph_classes(n: usize) -> Vec<Graph> {
    graph_classes(n).into_iter().filter(Graph::is_connected).collect()
}

/// All graphs on `n` vertices up to isomorphism (n ≤ 8), built by adding
/// a vertex with every neighborhood to each class on n − 1 vertices.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "class enumeration is limited to n <= 8");
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Graph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let classes = if n <= 1 {
        vec![Graph::new(n)]
    } else {
        let smaller = graph_classes(n - 1);
        nonisomorphic(smaller.iter().flat_map(|h| {
            (0..1u32 << (n - 1)).map(move |nb| {
                let mut g = Graph::new(n);
                for (u, v) in h.edges() {
                    g.add_edge(u, v);
                }
                for u in (0..n - 1).filter(|&u| nb >> u & 1 == 1) {
                    g.add_edge(u, n - 1);
                }
                g
            })
        }))
    };
    cache.lock().unwrap().insert(n, classes.clone());
    classes
}

/// Connected `d`-regular graphs on `n` vertices up to isomorphism.
pub fn connected_regular_classes(n: usize, d: usize) -> Vec<Graph> {
    nonisomorphic(labeled_regular_graphs(n, d).into_iter().filter(Graph::is_connected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::graph::named::*;

    #[test]
    fn class_counts_match_known_tables() {
        // Connected graphs on 1..=6 vertices: 1, 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (1..=6).map(|n| connected_graph_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(graph_classes(5).len(), 34);
        assert_eq!(graph_classes(7).len(), 1044);
        assert_eq!(connected_graph_classes(7).len(), 853);
        assert_eq!(connected_graph_classes(8).len(), 11117);
        // Labeled connected graphs on 5 vertices: 728.
        assert_eq!(connected_labeled_graphs(5).count(), 728);
    }

    #[test]
    fn regular_counts() {
        // Labeled cubic graphs on 6 vertices: 70; classes: K33 and prism.
        assert_eq!(labeled_regular_graphs(6, 3).len(), 70);
        assert_eq!(connected_regular_classes(6, 3).len(), 2);
        // Connected cubic graphs on 8 vertices: 5.
        assert_eq!(connected_regular_classes(8, 3).len(), 5);
        assert_eq!(connected_regular_classes(8, 4).len(), 6);
    }

    #[test]
    fn isomorphism() {
        let c = cycle(6);
        let perm = [3, 0, 4, 1, 5, 2];
        assert!(is_isomorphic(&c, &c.permuted(&perm)));
        assert!(!is_isomorphic(&prism(), &complete_bipartite(3, 3)));
    }
}
