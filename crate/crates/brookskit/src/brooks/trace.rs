use crate::graph_core::Color;
use serde::Serialize;

/// One recorded derivation step. Vertex labels are those of the graph
/// handed to the strategy, whatever subgraph the step ran on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    #[serde(flatten)]
    pub step: Step,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Component {
        vertices: Vec<usize>,
        k: usize,
    },
    /// Greedy coloring of `vertices` in the listed order.
    Greedy {
        reason: &'static str,
        toward: Option<usize>,
        vertices: Vec<usize>,
    },
    Bipartite {
        vertices: Vec<usize>,
    },
    CutvertexSplit {
        cutvertex: usize,
        pieces: Vec<Vec<usize>>,
    },
    /// Colors `swap.0` and `swap.1` exchanged on piece `piece`.
    Permute {
        piece: usize,
        swap: (Color, Color),
    },
    GoodP3 {
        u: usize,
        v: usize,
        w: usize,
    },
    Kempe {
        rule: &'static str,
        vertex: Option<usize>,
        colors: Option<(Color, Color)>,
        chain: Vec<usize>,
        to: Option<Color>,
    },
    Diamond {
        vertices: Vec<usize>,
    },
    CycleReduction {
        cycle: Vec<usize>,
        x: usize,
        y: usize,
        added_edge: bool,
    },
    ColorVertex {
        vertex: usize,
        color: Color,
    },
    FreshClass {
        class: Vec<usize>,
        color: Color,
    },
    TverbergRemove {
        vertex: usize,
    },
    PartitionMove {
        phase: u8,
        moved: Vec<usize>,
        phi: usize,
        obstructions: usize,
        path_len: usize,
    },
    PartitionFallback,
    IndependencyTree {
        edges: Vec<(usize, usize)>,
        leaves: Vec<usize>,
    },
    Identify {
        vertex: usize,
        merged: Vec<usize>,
    },
    Absorb {
        vertex: usize,
        color: Color,
        reason: &'static str,
    },
    KernelCore {
        core: Vec<usize>,
        independent: Vec<usize>,
    },
    KernelRound {
        color: Color,
        kernel: Vec<usize>,
    },
}

/// Trace sink that translates local labels of a subgraph to the labels of
/// the top-level graph.
pub(crate) struct Tracer<'a> {
    out: &'a mut Vec<TraceStep>,
    map: Vec<usize>,
    depth: usize,
}

impl<'a> Tracer<'a> {
    pub(crate) fn new(out: &'a mut Vec<TraceStep>, n: usize) -> Self {
        Tracer {
            out,
            map: (0..n).collect(),
            depth: 0,
        }
    }

    /// Tracer for a subgraph whose vertex `i` is local vertex `local[i]`.
    pub(crate) fn child(&mut self, local: &[usize]) -> Tracer<'_> {
        Tracer {
            map: local.iter().map(|&i| self.map[i]).collect(),
            depth: self.depth + 1,
            out: &mut *self.out,
        }
    }

    pub(crate) fn v(&self, x: usize) -> usize {
        self.map[x]
    }

    pub(crate) fn vs<I: IntoIterator<Item = usize>>(&self, xs: I) -> Vec<usize> {
        xs.into_iter().map(|x| self.map[x]).collect()
    }

    pub(crate) fn push(&mut self, step: Step) {
        self.out.push(TraceStep { depth: self.depth, step });
    }
}
