//! Exact exponential-time referees: chromatic number, list coloring,
//! choosability, kernel perfection, hitting sets and Hamiltonian paths.

pub mod chi;
pub mod choosable;
pub mod kernel;
pub mod lists;
pub mod misc;

pub use chi::{chi_exact, k_colorable};
pub use choosable::{chi_list_exact, is_f_choosable, is_f_choosable_by_enumeration, Choosability};
pub use kernel::{find_kernel, is_kernel_perfect_exact};
pub use lists::is_list_colorable;
pub use misc::{ham_path_in_cycle_property, hitting_set_exact};

use crate::error::Result;
use crate::graph_core::clique::{max_clique, max_independent_set};
use crate::graph_core::{Coloring, Graph, VertexSet};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_list: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_paint: Option<usize>,
    pub coloring: Coloring,
    pub max_clique: VertexSet,
    pub max_independent_set: VertexSet,
}

impl OracleReport {
    /// ω ≤ χ ≤ χ_ℓ ≤ χ_OL and χ ≤ Δ+1.
    pub fn chain_holds(&self) -> bool {
        let list = self.chi_list.unwrap_or(self.chi);
        let paint = self.chi_paint.unwrap_or(list);
        self.omega <= self.chi && self.chi <= list && list <= paint && (self.n == 0 || self.chi <= self.delta + 1)
    }
}

pub fn oracle_report(g: &Graph, with_list: bool, with_paint: bool) -> Result<OracleReport> {
    let (chi, coloring) = chi_exact(g)?;
    let clique = max_clique(g)?;
    let indep = max_independent_set(g)?;
    let chi_list = if with_list { Some(chi_list_exact(g)?) } else { None };
    let chi_paint = if with_paint { Some(crate::paintability::chi_paint_exact(g)?) } else { None };
    let report = OracleReport {
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        chi,
        omega: clique.len(),
        alpha: indep.len(),
        chi_list,
        chi_paint,
        coloring,
        max_clique: clique,
        max_independent_set: indep,
    };
    crate::error::ensure!(report.chain_holds(), "oracle values break ω ≤ χ ≤ χ_ℓ ≤ χ_OL");
    Ok(report)
}
