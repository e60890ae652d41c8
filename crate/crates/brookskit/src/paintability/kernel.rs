//! Painter that answers every reveal with a kernel of the revealed part of
//! a kernel-perfect orientation.

use crate::choosability::kernel::kernel_within;
use crate::error::{ensure, Error, Result};
use crate::graph_core::{Digraph, VertexSet};
use crate::limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::rc::Rc;

/// (reveal, response) masks played so far, newest first.
struct Link {
    reveal: u32,
    response: u32,
    prev: Option<Rc<Link>>,
}

const MAX_N: usize = 16;

#[derive(Clone, Debug)]
pub struct KernelPainter {
    d: Digraph,
    f: Vec<usize>,
}

/// Painter for `d` with tokens `f`; needs f(v) ≥ d⁺(v) + 1.
pub fn painter_kernel_strategy(d: &Digraph, f: &[usize]) -> Result<KernelPainter> {
    if f.len() != d.n() {
        return Err(Error::precondition("token assignment sized for a different digraph"));
    }
    if let Some(v) = (0..d.n()).find(|&v| f[v] < d.out_degree(v) + 1) {
        return Err(Error::precondition_with("tokens below out-degree + 1", vec![v]));
    }
    Ok(KernelPainter { d: d.clone(), f: f.to_vec() })
}

impl KernelPainter {
    pub fn digraph(&self) -> &Digraph {
        &self.d
    }

    pub fn tokens(&self) -> &[usize] {
        &self.f
    }

    /// Kernel of D[S ∩ uncolored].
    pub fn respond(&self, uncolored: &VertexSet, reveal: &VertexSet) -> Result<VertexSet> {
        let s = reveal.intersection(uncolored);
        let k = kernel_within(&self.d, &s)?;
        ensure!(k.is_subset(&s), "painter colored a vertex outside the reveal");
        ensure!(self.d.underlying().is_independent(&k), "painter colored adjacent vertices");
        Ok(k)
    }

    /// Plays every adversary: all reachable (uncolored, tokens) states and
    /// every nonempty reveal in each. Returns the first losing line if any.
    pub fn validate(&self) -> Result<Validation> {
        let n = self.d.n();
        limits::check("vertices for adversary search", n, limits::current().paint_n.min(MAX_N))?;
        let full = (1u32 << n) - 1;
        // The response depends only on the revealed set.
        let mut table = vec![0u32; 1 << n];
        for s in 1..=full {
            let set = VertexSet::from_iter(n, (0..n).filter(|&v| s >> v & 1 == 1));
            table[s as usize] = self.respond(&VertexSet::full(n), &set)?.iter().fold(0, |m, v| m | 1 << v);
        }
        let start: Vec<u8> = self.f.iter().map(|&t| t.min(255) as u8).collect();
        let mut seen: HashSet<(u32, Vec<u8>)> = HashSet::new();
        let mut stack: Vec<(u32, Vec<u8>, Option<Rc<Link>>)> = vec![(full, start, None)];
        let budget = limits::current().paint_states;
        let mut reveals = 0u64;
        while let Some((u, tok, line)) = stack.pop() {
            if u == 0 || !seen.insert((u, tok.clone())) {
                continue;
            }
            limits::check("adversary search states", seen.len(), budget)?;
            // Nonempty subsets of u.
            let mut s = u;
            while s != 0 {
                reveals += 1;
                let i = table[s as usize];
                let mut next = tok.clone();
                let mut lost = None;
                for v in (0..n).filter(|&v| (s & !i) >> v & 1 == 1) {
                    next[v] -= 1;
                    if next[v] == 0 {
                        lost = Some(v);
                    }
                }
                let link = Some(Rc::new(Link {
                    reveal: s,
                    response: i,
                    prev: line.clone(),
                }));
                if let Some(v) = lost {
                    return Ok(Validation {
                        painter_wins: false,
                        states: seen.len(),
                        reveals,
                        losing_line: Some((self.replay(link), v)),
                    });
                }
                stack.push((u & !i, next, link));
                s = (s - 1) & u;
            }
        }
        Ok(Validation {
            painter_wins: true,
            states: seen.len(),
            reveals,
            losing_line: None,
        })
    }

    fn replay(&self, mut link: Option<Rc<Link>>) -> Vec<Round> {
        let mut moves = Vec::new();
        while let Some(l) = link {
            moves.push((l.reveal, l.response));
            link = l.prev.clone();
        }
        let mut tok = self.f.clone();
        let mut u = (1u32 << self.d.n()) - 1;
        moves
            .into_iter()
            .rev()
            .map(|(s, i)| {
                for v in bits(s & !i) {
                    tok[v] = tok[v].saturating_sub(1);
                }
                u &= !i;
                Round {
                    reveal: bits(s),
                    response: bits(i),
                    tokens: bits(u).into_iter().map(|v| tok[v]).collect(),
                }
            })
            .collect()
    }

    /// One game against a scripted adversary.
    pub fn play(&self, adversary: Adversary) -> Result<PlayTrace> {
        let n = self.d.n();
        let mut rng = ChaCha8Rng::seed_from_u64(adversary.seed());
        let mut uncolored = VertexSet::full(n);
        let mut tok = self.f.clone();
        let mut rounds = Vec::new();
        while !uncolored.is_empty() {
            let reveal = match adversary {
                Adversary::RevealAll => uncolored.clone(),
                Adversary::Lowest => VertexSet::singleton(n, uncolored.first().unwrap()),
                Adversary::Random { .. } => {
                    let mut s = VertexSet::from_iter(n, uncolored.iter().filter(|_| rng.random_bool(0.5)));
                    if s.is_empty() {
                        s.insert(uncolored.iter().nth(rng.random_range(0..uncolored.len())).unwrap());
                    }
                    s
                }
            };
            let k = self.respond(&uncolored, &reveal)?;
            for v in reveal.difference(&k).iter() {
                ensure!(tok[v] > 1, "painter ran vertex {v} out of tokens");
                tok[v] -= 1;
            }
            uncolored.difference_with(&k);
            rounds.push(Round {
                reveal: reveal.to_vec(),
                response: k.to_vec(),
                tokens: uncolored.iter().map(|v| tok[v]).collect(),
            });
        }
        Ok(PlayTrace { rounds })
    }
}

fn bits(m: u32) -> Vec<usize> {
    (0..32).filter(|&v| m >> v & 1 == 1).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Adversary {
    RevealAll,
    Lowest,
    Random { seed: u64 },
}

impl Adversary {
    fn seed(&self) -> u64 {
        match self {
            Adversary::Random { seed } => *seed,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    pub reveal: Vec<usize>,
    pub response: Vec<usize>,
    /// Tokens left on the still-uncolored vertices, ascending by vertex.
    pub tokens: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlayTrace {
    pub rounds: Vec<Round>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub painter_wins: bool,
    pub states: usize,
    pub reveals: u64,
    /// Rounds leading to a loss and the vertex that ran out.
    pub losing_line: Option<(Vec<Round>, usize)>,
}
