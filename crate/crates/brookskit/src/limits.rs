//! Scale bounds for the exponential routines.
//!
//! Exceeding a bound is a typed refusal (`Error::Scale`), never a silent
//! approximation. The process-wide values can be replaced with [`set`];
//! the CLI does so from flags and the `BROOKSKIT_LIMITS` variable.

use crate::error::{Error, Result};
use serde::Serialize;
use std::sync::RwLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScaleLimits {
    /// Vertex bound for exact clique and independent-set search.
    pub clique_n: usize,
    /// Vertex bound for exact chromatic number on general graphs.
    pub chi_n: usize,
    /// Vertex bound for exact chromatic number when m <= 2n.
    pub chi_sparse_n: usize,
    /// Vertex bound for list-colorability search.
    pub list_n: usize,
    /// Vertex bound for f-choosability.
    pub choosable_n: usize,
    /// Node budget for the bad-assignment enumeration.
    pub choosable_nodes: u64,
    /// Vertex bound for exact kernel-perfection checks.
    pub kernel_perfect_n: usize,
    /// Vertex bound for Hamiltonian path enumeration.
    pub ham_n: usize,
    /// Arc bound for Eulerian subgraph counting.
    pub euler_arcs: usize,
    /// Vertex bound for the paint game solver.
    pub paint_n: usize,
    /// State budget for the paint game solver memo.
    pub paint_states: usize,
    /// Vertex bound for exhaustive partition enumeration.
    pub partition_n: usize,
    /// Node budget for DFS searches (independency trees, cycles).
    pub search_nodes: u64,
}

impl Default for ScaleLimits {
    fn default() -> Self {
        ScaleLimits {
            clique_n: 64,
            chi_n: 24,
            chi_sparse_n: 48,
            list_n: 64,
            choosable_n: 9,
            choosable_nodes: 20_000_000,
            kernel_perfect_n: 16,
            ham_n: 10,
            euler_arcs: 40,
            paint_n: 9,
            paint_states: 4_000_000,
            partition_n: 22,
            search_nodes: 50_000_000,
        }
    }
}

static CURRENT: RwLock<Option<ScaleLimits>> = RwLock::new(None);

pub fn current() -> ScaleLimits {
    CURRENT
        .read()
        .map(|g| g.unwrap_or_default())
        .unwrap_or_default()
}

pub fn set(limits: ScaleLimits) {
    if let Ok(mut g) = CURRENT.write() {
        *g = Some(limits);
    }
}

impl ScaleLimits {
    /// Applies `key=value` overrides separated by commas, e.g.
    /// `chi_n=30,paint_n=8`.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::precondition(format!("limit override '{part}' is not key=value")))?;
            let parsed: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::precondition(format!("limit '{key}' needs an integer, got '{value}'")))?;
            let v = parsed as usize;
            match key.trim() {
                "clique_n" => self.clique_n = v,
                "chi_n" => self.chi_n = v,
                "chi_sparse_n" => self.chi_sparse_n = v,
                "list_n" => self.list_n = v,
                "choosable_n" => self.choosable_n = v,
                "choosable_nodes" => self.choosable_nodes = parsed,
                "kernel_perfect_n" => self.kernel_perfect_n = v,
                "ham_n" => self.ham_n = v,
                "euler_arcs" => self.euler_arcs = v,
                "paint_n" => self.paint_n = v,
                "paint_states" => self.paint_states = v,
                "partition_n" => self.partition_n = v,
                "search_nodes" => self.search_nodes = parsed,
                other => return Err(Error::precondition(format!("unknown limit '{other}'"))),
            }
        }
        Ok(())
    }
}

pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Scale { what, value, limit })
    } else {
        Ok(())
    }
}
