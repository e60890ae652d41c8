use crate::error::Result;
use crate::graph_core::{Digraph, VertexSet};
use crate::limits;

/// Kernel search inside the vertex mask `u` by include/exclude branching.
struct KernelSearch {
    out: Vec<u32>,
    adj: Vec<u32>,
}

impl KernelSearch {
    fn find(&self, u: u32) -> Option<u32> {
        self.rec(u, 0, 0)
    }

    fn rec(&self, undecided: u32, kernel: u32, excluded: u32) -> Option<u32> {
        // Every excluded vertex still needs a way into the kernel.
        let mut bits = excluded;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.out[x] & (kernel | undecided) == 0 {
                return None;
            }
        }
        if undecided == 0 {
            return Some(kernel);
        }
        let v = undecided.trailing_zeros() as usize;
        let bit = 1u32 << v;
        let rest = undecided & !bit;
        // v in the kernel: its neighbors leave.
        let gone = self.adj[v] & rest;
        if let Some(k) = self.rec(rest & !gone, kernel | bit, excluded | gone) {
            return Some(k);
        }
        self.rec(rest, kernel, excluded | bit)
    }
}

/// Whether every induced subdigraph has a kernel. On failure returns a
/// smallest vertex set whose induced subdigraph has none.
pub fn is_kernel_perfect_exact(d: &Digraph) -> Result<(bool, Option<VertexSet>)> {
    let n = d.n();
    limits::check("vertices for kernel perfection", n, limits::current().kernel_perfect_n.min(31))?;
    let out: Vec<u32> = (0..n).map(|v| d.out_neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let adj: Vec<u32> = (0..n).map(|v| out[v] | d.in_neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let s = KernelSearch { out, adj };
    let mut masks: Vec<u32> = (1..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for u in masks {
        if s.find(u).is_none() {
            return Ok((false, Some(VertexSet::from_iter(n, (0..n).filter(|&v| u >> v & 1 == 1)))));
        }
    }
    Ok((true, None))
}

/// A kernel of the subdigraph induced on `within`, if any.
pub fn find_kernel(d: &Digraph, within: &VertexSet) -> Result<Option<VertexSet>> {
    let n = d.n();
    limits::check("vertices for kernel search", n, 31)?;
    let out: Vec<u32> = (0..n).map(|v| d.out_neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let adj: Vec<u32> = (0..n).map(|v| out[v] | d.in_neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let u = within.iter().fold(0u32, |m, v| m | 1 << v);
    Ok(KernelSearch { out, adj }.find(u).map(|k| VertexSet::from_iter(n, (0..n).filter(|&v| k >> v & 1 == 1))))
}
