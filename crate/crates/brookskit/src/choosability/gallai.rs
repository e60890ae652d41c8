use crate::error::{Error, Result};
use crate::graph_core::structure::{blocks_and_cutvertices, block_kind, BlockKind};
use crate::graph_core::{Color, Graph, ListAssignment};

/// Degree-sized lists with no coloring on a Gallai tree: each block gets
/// its own pool of colors (two for an odd cycle, k for K_{k+1}) and a
/// vertex's list is the union of the pools of its blocks.
pub fn gallai_bad_lists(g: &Graph) -> Result<ListAssignment> {
    if !g.is_connected() {
        return Err(Error::precondition("bad lists need a connected graph"));
    }
    let bct = blocks_and_cutvertices(g);
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); g.n()];
    let mut next: Color = 1;
    for b in &bct.blocks {
        let size = match block_kind(g, b) {
            BlockKind::Complete => b.len() - 1,
            BlockKind::OddCycle => 2,
            BlockKind::Other => {
                return Err(Error::precondition_with("graph is not a Gallai tree; this block is neither complete nor an odd cycle", b.clone()));
            }
        };
        let pool: Vec<Color> = (next..next + size as Color).collect();
        next += size as Color;
        for &v in b {
            lists[v].extend_from_slice(&pool);
        }
    }
    Ok(ListAssignment::new(lists))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::named::*;
    use crate::oracle::is_list_colorable;

    #[test]
    fn base_cases() {
        assert_eq!(gallai_bad_lists(&complete(4)).unwrap(), ListAssignment::uniform(4, 3));
        assert_eq!(gallai_bad_lists(&cycle(5)).unwrap(), ListAssignment::uniform(5, 2));
    }

    #[test]
    fn bowtie_lists() {
        let g = bowtie();
        let l = gallai_bad_lists(&g).unwrap();
        assert_eq!(l.sizes(), g.degrees());
        assert_eq!(l.list(2), &[1, 2, 3, 4]);
        assert!(is_list_colorable(&g, &l).unwrap().is_none());
    }

    #[test]
    fn rejects_non_gallai() {
        assert!(gallai_bad_lists(&cycle(4)).is_err());
        assert!(gallai_bad_lists(&diamond()).is_err());
    }
}
