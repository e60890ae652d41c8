//! Exact solver for the online list coloring game.
//!
//! Each round the adversary reveals a nonempty set S of uncolored vertices;
//! the painter colors an independent I ⊆ S; every vertex of S − I spends a
//! token. The adversary wins when a vertex is left uncolored after spending
//! its last token.

use crate::error::{Error, Result};
use crate::graph_core::{Graph, VertexSet};
use crate::limits;
use serde::Serialize;
use std::collections::HashMap;

const MAX_N: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Painter,
    Adversary,
}

type Tokens = [u8; MAX_N];

/// Memoized minimax over (uncolored set, tokens).
pub struct PaintGame<'g> {
    g: &'g Graph,
    nbr: Vec<u32>,
    f: Vec<usize>,
    memo: HashMap<(u32, u64), bool>,
    state_limit: usize,
}

fn pack(u: u32, tok: &Tokens) -> u64 {
    let mut key = 0u64;
    let mut bits = u;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        key |= (tok[v] as u64 & 0xf) << (4 * v);
    }
    key
}

fn mask_of(set: &VertexSet) -> u32 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

impl<'g> PaintGame<'g> {
    pub fn new(g: &'g Graph, f: &[usize]) -> Result<Self> {
        if f.len() != g.n() {
            return Err(Error::precondition("token assignment sized for a different graph"));
        }
        limits::check("vertices for the paint game", g.n(), limits::current().paint_n.min(MAX_N))?;
        Ok(PaintGame {
            g,
            nbr: (0..g.n()).map(|v| mask_of(g.neighbors(v))).collect(),
            f: f.to_vec(),
            memo: HashMap::new(),
            state_limit: limits::current().paint_states,
        })
    }

    pub fn states(&self) -> usize {
        self.memo.len()
    }

    fn initial(&self) -> (u32, Tokens) {
        let mut tok = [0u8; MAX_N];
        for (v, &t) in self.f.iter().enumerate() {
            tok[v] = t.min(MAX_N) as u8;
        }
        (((1u64 << self.g.n()) - 1) as u32, tok)
    }

    /// Drops vertices with more tokens than uncolored neighbors: the painter
    /// can always color them once their neighbors are settled.
    fn reduce(&self, mut u: u32, tok: &Tokens) -> u32 {
        loop {
            let mut changed = false;
            let mut bits = u;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if tok[v] as u32 > (self.nbr[v] & u).count_ones() {
                    u &= !(1 << v);
                    changed = true;
                }
            }
            if !changed {
                return u;
            }
        }
    }

    fn component(&self, u: u32, start: usize) -> u32 {
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.nbr[v] & u & !comp;
            comp |= new;
            frontier |= new;
        }
        comp
    }

    /// Maximal independent subsets of `s` containing `forced` (assumed
    /// independent), in Bron–Kerbosch order on the complement.
    fn maximal_independent(&self, s: u32, forced: u32) -> Vec<u32> {
        fn rec(nbr: &[u32], i: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
            if p == 0 {
                if x == 0 {
                    out.push(i);
                }
                return;
            }
            while p != 0 {
                let v = p.trailing_zeros() as usize;
                let bit = 1u32 << v;
                let keep = !(nbr[v] | bit);
                rec(nbr, i | bit, p & keep, x & keep, out);
                p &= !bit;
                x |= bit;
            }
        }
        let mut blocked = forced;
        let mut bits = forced;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            blocked |= self.nbr[v];
        }
        let mut out = Vec::new();
        rec(&self.nbr, forced, s & !blocked, 0, &mut out);
        out
    }

    fn after(&self, s: u32, i: u32, tok: &Tokens) -> Tokens {
        let mut t = *tok;
        let mut bits = s & !i;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            t[v] -= 1;
        }
        t
    }

    fn forced(&self, s: u32, tok: &Tokens) -> Option<u32> {
        let mut forced = 0u32;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if tok[v] <= 1 {
                forced |= 1 << v;
            }
        }
        let mut bits = forced;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.nbr[v] & forced != 0 {
                return None;
            }
        }
        Some(forced)
    }

    /// Whether the painter wins with `u` uncolored, painter to respond to
    /// whatever the adversary reveals next.
    fn wins(&mut self, u: u32, tok: &Tokens) -> Result<bool> {
        let u = self.reduce(u, tok);
        if u == 0 {
            return Ok(true);
        }
        if (0..MAX_N).any(|v| u >> v & 1 == 1 && tok[v] == 0) {
            return Ok(false);
        }
        let first = u.trailing_zeros() as usize;
        let comp = self.component(u, first);
        if comp != u {
            let mut rest = u;
            while rest != 0 {
                let c = self.component(rest, rest.trailing_zeros() as usize);
                rest &= !c;
                if !self.wins(c, tok)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let key = (u, pack(u, tok));
        if let Some(&w) = self.memo.get(&key) {
            return Ok(w);
        }
        if self.memo.len() >= self.state_limit {
            return Err(Error::Scale {
                what: "paint game states",
                value: self.memo.len() + 1,
                limit: self.state_limit,
            });
        }
        let win = self.adversary_reply(u, tok)?.is_none();
        self.memo.insert(key, win);
        Ok(win)
    }

    /// A reveal that beats every painter response, if any.
    fn adversary_reply(&mut self, u: u32, tok: &Tokens) -> Result<Option<u32>> {
        // Larger reveals first: they tend to refute quickly.
        let mut s = u;
        while s != 0 {
            if self.painter_reply(u, s, tok)?.is_none() {
                return Ok(Some(s));
            }
            s = (s - 1) & u;
        }
        Ok(None)
    }

    fn painter_reply(&mut self, u: u32, s: u32, tok: &Tokens) -> Result<Option<u32>> {
        let Some(forced) = self.forced(s, tok) else { return Ok(None) };
        for i in self.maximal_independent(s, forced) {
            let t = self.after(s, i, tok);
            if self.wins(u & !i, &t)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn solve(&mut self) -> Result<Winner> {
        let (u, tok) = self.initial();
        Ok(if self.wins(u, &tok)? { Winner::Painter } else { Winner::Adversary })
    }

    fn state(&self, uncolored: &VertexSet, tokens: &[usize]) -> Result<(u32, Tokens)> {
        if tokens.len() != self.g.n() {
            return Err(Error::precondition("token vector sized for a different graph"));
        }
        let mut tok = [0u8; MAX_N];
        for (v, &t) in tokens.iter().enumerate() {
            tok[v] = t.min(MAX_N) as u8;
        }
        Ok((mask_of(uncolored), tok))
    }

    /// Optimal painter response to `reveal`: a winning independent subset if
    /// one exists. Vertices the reduction set aside are added back greedily.
    pub fn painter_move(&mut self, uncolored: &VertexSet, tokens: &[usize], reveal: &VertexSet) -> Result<Option<VertexSet>> {
        let (u, tok) = self.state(uncolored, tokens)?;
        let s = mask_of(reveal) & u;
        let core = self.reduce(u, &tok);
        let Some(mut i) = self.painter_reply(core, s & core, &tok)? else { return Ok(None) };
        let mut spare = s & !core;
        while spare != 0 {
            let v = spare.trailing_zeros() as usize;
            spare &= spare - 1;
            if self.nbr[v] & i == 0 {
                i |= 1 << v;
            }
        }
        Ok(Some(set_of(self.g.n(), i)))
    }

    /// A winning reveal for the adversary, if one exists.
    pub fn adversary_move(&mut self, uncolored: &VertexSet, tokens: &[usize]) -> Result<Option<VertexSet>> {
        let (u, tok) = self.state(uncolored, tokens)?;
        if tok.iter().take(self.g.n()).enumerate().any(|(v, &t)| u >> v & 1 == 1 && t == 0) {
            return Ok(None);
        }
        let core = self.reduce(u, &tok);
        if core == 0 {
            return Ok(None);
        }
        // Play inside the component the painter loses.
        let mut rest = core;
        while rest != 0 {
            let c = self.component(rest, rest.trailing_zeros() as usize);
            rest &= !c;
            if !self.wins(c, &tok)? {
                return Ok(self.adversary_reply(c, &tok)?.map(|s| set_of(self.g.n(), s)));
            }
        }
        Ok(None)
    }

    /// Every memoized state with its value, sorted by (uncolored, tokens).
    pub fn table(&self) -> Vec<TableEntry> {
        let n = self.g.n();
        let mut rows: Vec<TableEntry> = self
            .memo
            .iter()
            .map(|(&(u, key), &w)| TableEntry {
                uncolored: (0..n).filter(|&v| u >> v & 1 == 1).collect(),
                tokens: (0..n).filter(|&v| u >> v & 1 == 1).map(|v| (key >> (4 * v) & 0xf) as usize).collect(),
                winner: if w { Winner::Painter } else { Winner::Adversary },
            })
            .collect();
        rows.sort_by(|a, b| (&a.uncolored, &a.tokens).cmp(&(&b.uncolored, &b.tokens)));
        rows
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableEntry {
    pub uncolored: Vec<usize>,
    /// Tokens of the uncolored vertices, in the same order.
    pub tokens: Vec<usize>,
    pub winner: Winner,
}

/// Root-level strategy: the painter's answer to each opening reveal, or the
/// adversary's winning opening.
#[derive(Clone, Debug, Serialize)]
pub struct PaintSolution {
    pub winner: Winner,
    pub states: usize,
    pub opening: Vec<OpeningMove>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OpeningMove {
    pub reveal: Vec<usize>,
    pub response: Option<Vec<usize>>,
}

pub fn paint_game_solve(g: &Graph, f: &[usize]) -> Result<PaintSolution> {
    let mut game = PaintGame::new(g, f)?;
    let winner = game.solve()?;
    let all = g.all_vertices();
    let opening = match winner {
        Winner::Adversary => {
            let s = game.adversary_move(&all, f)?;
            s.map(|s| OpeningMove {
                reveal: s.to_vec(),
                response: None,
            })
            .into_iter()
            .collect()
        }
        Winner::Painter => {
            let mut moves = Vec::new();
            let full = (1u64 << g.n()) - 1;
            for mask in 1..=full {
                let s = set_of(g.n(), mask as u32);
                let i = game.painter_move(&all, f, &s)?;
                moves.push(OpeningMove {
                    reveal: s.to_vec(),
                    response: i.map(|i| i.to_vec()),
                });
            }
            moves
        }
    };
    Ok(PaintSolution {
        winner,
        states: game.states(),
        opening,
    })
}

pub fn painter_wins(g: &Graph, f: &[usize]) -> Result<bool> {
    Ok(PaintGame::new(g, f)?.solve()? == Winner::Painter)
}

/// Least k such that the painter wins with k tokens everywhere.
pub fn chi_paint_exact(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let omega = crate::graph_core::clique::clique_number(g)?;
    for k in omega.max(1)..=g.max_degree() + 1 {
        if painter_wins(g, &vec![k; g.n()])? {
            return Ok(k);
        }
    }
    Err(Error::invariant("painter loses with Δ+1 tokens"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;

    #[test]
    fn small_games() {
        assert!(!painter_wins(&complete(2), &[1, 1]).unwrap());
        assert!(painter_wins(&cycle(4), &[2; 4]).unwrap());
        assert!(!painter_wins(&cycle(5), &[2; 5]).unwrap());
        assert!(painter_wins(&cycle(5), &[3; 5]).unwrap());
        assert!(painter_wins(&Graph::new(0), &[]).unwrap());
    }

    #[test]
    fn paint_numbers() {
        assert_eq!(chi_paint_exact(&complete(4)).unwrap(), 4);
        assert_eq!(chi_paint_exact(&cycle(6)).unwrap(), 2);
        assert!(chi_paint_exact(&complete_bipartite(3, 3)).unwrap() >= 3);
    }

    #[test]
    fn opening_table_is_consistent() {
        let g = cycle(4);
        let sol = paint_game_solve(&g, &[2; 4]).unwrap();
        assert_eq!(sol.winner, Winner::Painter);
        assert_eq!(sol.opening.len(), 15);
        for m in &sol.opening {
            let i = m.response.as_ref().unwrap();
            let set = VertexSet::from_slice(4, i);
            assert!(g.is_independent(&set));
            assert!(i.iter().all(|v| m.reveal.contains(v)));
        }
        let lose = paint_game_solve(&complete(2), &[1, 1]).unwrap();
        assert_eq!(lose.opening[0].reveal, vec![0, 1]);
    }

    #[test]
    fn deterministic() {
        assert!(PaintGame::new(&petersen(), &[3; 10]).err().unwrap().is_scale_refusal());
        let h = prism();
        let mut g1 = PaintGame::new(&h, &[3; 6]).unwrap();
        let mut g2 = PaintGame::new(&h, &[3; 6]).unwrap();
        assert_eq!(g1.solve().unwrap(), g2.solve().unwrap());
        assert_eq!(g1.table(), g2.table());
    }
}
