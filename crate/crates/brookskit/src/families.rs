//! Named constructions and the bound checks that go with them.

use crate::error::{ensure, Error, Result};
use crate::graph_core::clique::{clique_number, independence_number};
use crate::graph_core::named::{complete, complete_bipartite, cycle};
use crate::graph_core::structure::gallai;
use crate::graph_core::Graph;
use crate::oracle::chi_exact;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    /// C5 joined with K_m.
    Join,
    Catlin,
    BkFiveTriangles,
    C8Squared,
    C5Doubled,
    GallaiRandom,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete_bipartite" => Family::CompleteBipartite,
            "join" => Family::Join,
            "catlin" => Family::Catlin,
            "bk_five_triangles" => Family::BkFiveTriangles,
            "c8_squared" => Family::C8Squared,
            "c5_doubled" => Family::C5Doubled,
            "gallai_random" => Family::GallaiRandom,
            _ => return Err(Error::precondition(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    #[serde(default)]
    pub t: usize,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, n: 0, m: 0, t: 0, seed: 0 }
    }
}

/// Line graph of C5 with every edge taken t times: t copies per edge
/// slot, slot i meeting slots i ± 1.
pub fn catlin(t: usize) -> Graph {
    let mut g = Graph::new(5 * t);
    let v = |slot: usize, copy: usize| (slot % 5) * t + copy;
    for slot in 0..5 {
        for a in 0..t {
            for b in 0..t {
                if a < b {
                    g.add_edge(v(slot, a), v(slot, b));
                }
                g.add_edge(v(slot, a), v(slot + 1, b));
            }
        }
    }
    g
}

/// Five disjoint triangles D_0..D_4, with D_i complete to D_j when
/// i − j ≡ ±1 (mod 5).
pub fn bk_five_triangles() -> Graph {
    let mut g = Graph::new(15);
    for i in 0..5 {
        for a in 0..3 {
            for b in a + 1..3 {
                g.add_edge(3 * i + a, 3 * i + b);
            }
            for b in 0..3 {
                g.add_edge(3 * i + a, 3 * ((i + 1) % 5) + b);
            }
        }
    }
    g
}

/// C8 with every vertex also joined to the vertices two steps away.
pub fn c8_squared() -> Graph {
    let mut g = Graph::new(8);
    for i in 0..8 {
        g.add_edge(i, (i + 1) % 8);
        g.add_edge(i, (i + 2) % 8);
    }
    g
}

/// Outer 5-cycle 0..4, inner 5-cycle 5..9, outer i joined to inner i,
/// i + 1 and i + 4.
pub fn c5_doubled() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 1) % 5);
        for shift in [0, 1, 4] {
            g.add_edge(i, 5 + (i + shift) % 5);
        }
    }
    g
}

/// Random Gallai tree with about `n` vertices: blocks that are complete
/// graphs or odd cycles, glued one at a time at a random vertex.
pub fn gallai_random(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut size = 1;
    while size < n {
        let room = n - size;
        let at = rng.random_range(0..size);
        // New block on `at` plus k fresh vertices.
        let k = rng.random_range(1..=room.min(5));
        let odd_cycle = k >= 4 && k % 2 == 0 && rng.random_bool(0.5);
        let mut block: Vec<usize> = vec![at];
        block.extend(size..size + k);
        if odd_cycle {
            for i in 0..block.len() {
                edges.push((block[i], block[(i + 1) % block.len()]));
            }
        } else {
            for i in 0..block.len() {
                for j in i + 1..block.len() {
                    edges.push((block[i], block[j]));
                }
            }
        }
        size += k;
    }
    Graph::from_edges(size, &edges).expect("generated edges are in range")
}

/// Builds the graph and re-checks its advertised parameters.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let FamilySpec { n, m, t, seed, .. } = *spec;
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::precondition(format!("{:?} needs {what}", spec.family)))
        }
    };
    let g = match spec.family {
        Family::Cycle => {
            need(n >= 3, "n ≥ 3")?;
            cycle(n)
        }
        Family::Complete => complete(n),
        Family::CompleteBipartite => complete_bipartite(n, m),
        Family::Join => {
            need(m >= 1, "m ≥ 1")?;
            let g = cycle(5).join(&complete(m));
            ensure!(clique_number(&g)? == m + 2, "join(C5, K_{m}) has the wrong clique number");
            ensure!(g.max_degree() == m + 4, "join(C5, K_{m}) has the wrong maximum degree");
            ensure!(chi_exact(&g)?.0 == m + 3, "join(C5, K_{m}) has the wrong chromatic number");
            g
        }
        Family::Catlin => {
            need(t >= 1, "t ≥ 1")?;
            let g = catlin(t);
            ensure!(g.n() == 5 * t && g.is_regular() && g.max_degree() == 3 * t - 1, "catlin({t}) degrees are wrong");
            ensure!(clique_number(&g)? == 2 * t, "catlin({t}) has the wrong clique number");
            if t == 3 {
                ensure!(chi_exact(&g)?.0 == 8, "catlin(3) has the wrong chromatic number");
            }
            g
        }
        Family::BkFiveTriangles => {
            let g = bk_five_triangles();
            ensure!(g.n() == 15 && g.is_regular() && g.max_degree() == 8, "five-triangle graph degrees are wrong");
            ensure!(clique_number(&g)? == 6, "five-triangle graph has the wrong clique number");
            ensure!(chi_exact(&g)?.0 == 8, "five-triangle graph has the wrong chromatic number");
            g
        }
        Family::C8Squared | Family::C5Doubled => {
            let g = if spec.family == Family::C8Squared { c8_squared() } else { c5_doubled() };
            let delta = g.max_degree();
            ensure!(clique_number(&g)? < delta, "{:?} contains K_Δ", spec.family);
            ensure!(independence_number(&g)? * delta == g.n(), "{:?} has α ≠ n/Δ", spec.family);
            g
        }
        Family::GallaiRandom => {
            need(n >= 1, "n ≥ 1")?;
            let g = gallai_random(n, seed);
            ensure!(gallai(&g) && g.is_connected(), "random Gallai tree failed recognition");
            g
        }
    };
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub omega: usize,
    #[serde(rename = "Delta")]
    pub delta: usize,
    pub alpha: usize,
    pub chi: usize,
    /// ⌈(ω + Δ + 1) / 2⌉.
    pub reed_bound: usize,
    pub reed_holds: bool,
    /// Δ ≥ 9 and ω ≤ Δ − 1.
    pub bk_applicable: bool,
    /// χ ≤ Δ − 1 when applicable.
    pub bk_holds: Option<bool>,
    pub fajtlowicz_lhs: usize,
    /// 2n / (ω + Δ + 1).
    pub fajtlowicz_rhs: f64,
    /// Set when the graph is K_{Δ+1}-free with Δ ≥ 3.
    pub alpha_bound_applicable: bool,
    pub alpha_bound_lhs: usize,
    /// n / Δ.
    pub alpha_bound_rhs: f64,
}

impl BoundsReport {
    /// Conjectured bounds that fail here; empty at every size checked so far.
    pub fn conjecture_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.reed_holds {
            out.push("reed");
        }
        if self.bk_holds == Some(false) {
            out.push("borodin_kostochka");
        }
        out
    }
}

/// Every bound recomputed from `g`. A failure of a proven bound is an error.
pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    let n = g.n();
    let omega = clique_number(g)?;
    let delta = g.max_degree();
    let alpha = independence_number(g)?;
    let chi = chi_exact(g)?.0;
    let reed_bound = (omega + delta + 2) / 2;
    let bk_applicable = delta >= 9 && omega < delta;
    let alpha_bound_applicable = delta >= 3 && omega <= delta;
    let r = BoundsReport {
        n,
        omega,
        delta,
        alpha,
        chi,
        reed_bound,
        reed_holds: chi <= reed_bound,
        bk_applicable,
        bk_holds: bk_applicable.then_some(chi < delta),
        fajtlowicz_lhs: alpha,
        fajtlowicz_rhs: 2.0 * n as f64 / (omega + delta + 1) as f64,
        alpha_bound_applicable,
        alpha_bound_lhs: alpha,
        alpha_bound_rhs: if delta == 0 { n as f64 } else { n as f64 / delta as f64 },
    };
    if n > 0 && alpha * (omega + delta + 1) < 2 * n {
        return Err(Error::BoundViolation(format!("α = {alpha} < 2n/(ω+Δ+1) = {}", r.fajtlowicz_rhs)));
    }
    if alpha_bound_applicable && alpha * delta < n {
        return Err(Error::BoundViolation(format!("α = {alpha} < n/Δ = {} without K_(Δ+1)", r.alpha_bound_rhs)));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::enumerate::{connected_graph_classes, graph_classes};

    #[test]
    fn catlin_three_is_the_five_triangle_graph() {
        let a = generate(&FamilySpec { t: 3, ..FamilySpec::new(Family::Catlin) }).unwrap();
        let b = generate(&FamilySpec::new(Family::BkFiveTriangles)).unwrap();
        assert_eq!(a.degree_sequence(), b.degree_sequence());
        assert_eq!(a, b);
        let r = bounds_report(&a).unwrap();
        assert_eq!((r.chi, r.delta, r.omega, r.reed_bound), (8, 8, 6, 8));
        assert!(!r.bk_applicable);
    }

    #[test]
    fn catlin_parameters() {
        for t in 1..=5 {
            let g = generate(&FamilySpec { t, ..FamilySpec::new(Family::Catlin) }).unwrap();
            assert_eq!(g.max_degree(), 3 * t - 1);
        }
    }

    #[test]
    fn joins() {
        for m in 1..=4 {
            let g = generate(&FamilySpec { m, ..FamilySpec::new(Family::Join) }).unwrap();
            assert_eq!(g.n(), 5 + m);
        }
    }

    #[test]
    fn figure_graphs() {
        for f in [Family::C8Squared, Family::C5Doubled] {
            let g = generate(&FamilySpec::new(f)).unwrap();
            let r = bounds_report(&g).unwrap();
            assert_eq!(r.alpha * r.delta, g.n());
            assert!(r.omega < r.delta);
        }
        assert_eq!(c8_squared().max_degree(), 4);
        assert_eq!(c5_doubled().max_degree(), 5);
    }

    #[test]
    fn random_gallai_trees() {
        for seed in 0..50 {
            let g = generate(&FamilySpec { n: 9, seed, ..FamilySpec::new(Family::GallaiRandom) }).unwrap();
            assert!(g.n() <= 9);
            assert_eq!(g, gallai_random(9, seed));
        }
    }

    #[test]
    fn bounds_on_small_graphs() {
        for n in 1..=6 {
            for g in graph_classes(n) {
                let r = bounds_report(&g).unwrap();
                assert!(r.conjecture_violations().is_empty(), "{g:?}");
            }
        }
        for n in 7..=8 {
            for g in connected_graph_classes(n) {
                bounds_report(&g).unwrap();
            }
        }
    }
}
