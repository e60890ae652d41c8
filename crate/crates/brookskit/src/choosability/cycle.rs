use crate::error::{Error, Result};
use crate::graph_core::{Color, Coloring, Graph, ListAssignment};
use serde::Serialize;

/// Result of coloring a cycle from lists of size at least two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CycleOutcome {
    Colored { coloring: Coloring },
    /// Odd cycle with every list equal to `list` (of size two).
    IdenticalLists { order: Vec<usize>, list: Vec<Color> },
}

impl CycleOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            CycleOutcome::Colored { coloring } => Some(coloring),
            _ => None,
        }
    }
}

/// Colors the cycle `c` from `lists`, or certifies that it is odd with all
/// lists the same pair of colors.
pub fn cycle_list_color(c: &Graph, lists: &ListAssignment) -> Result<CycleOutcome> {
    let order = c
        .cycle_order()
        .ok_or_else(|| Error::precondition("cycle list coloring needs a cycle"))?;
    if lists.n() != c.n() {
        return Err(Error::precondition("list assignment sized for a different graph"));
    }
    if let Some(v) = (0..c.n()).find(|&v| lists.list(v).len() < 2) {
        return Err(Error::precondition_with("cycle lists need at least two colors", vec![v]));
    }
    let n = order.len();
    let walk = |start: usize| -> Vec<usize> { (0..n).map(|i| order[(start + i) % n]).collect() };

    // A vertex with three colors can go last.
    if let Some(i) = (0..n).find(|&i| lists.list(order[i]).len() >= 3) {
        let seq = walk(i + 1);
        let coloring = crate::graph_core::greedy_color(c, &seq, None, Some(lists))?;
        return Ok(CycleOutcome::Colored { coloring });
    }

    // Adjacent pair with different lists: v1 takes a color v_n lacks.
    for i in 0..n {
        let (last, first) = (order[i], order[(i + 1) % n]);
        if let Some(&col) = lists.list(first).iter().find(|&&x| !lists.contains(last, x)) {
            let mut partial = Coloring::empty(c.n());
            partial.set(first, col);
            let coloring = crate::graph_core::greedy_color(c, &walk(i + 1), Some(&partial), Some(lists))?;
            return Ok(CycleOutcome::Colored { coloring });
        }
    }

    let list = lists.list(order[0]).to_vec();
    if n % 2 == 1 {
        return Ok(CycleOutcome::IdenticalLists { order, list });
    }
    let mut coloring = Coloring::empty(c.n());
    for (i, &v) in order.iter().enumerate() {
        coloring.set(v, list[i % 2]);
    }
    Ok(CycleOutcome::Colored { coloring })
}
