//! Modular decomposition of complete colored graphs.
//!
//! [`decompose`] builds the tree of strong modules. Each inner node carries
//! its quotient graph over the children, with the minimum vertex of every
//! child as its representative.

mod decompose;
mod lca;
mod render;

use serde::Serialize;

use crate::graph::{Color, ColoredGraph, Vertex};

pub use decompose::decompose;
pub use lca::{lca_table, LcaTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MdError {
    #[error("the given children do not partition the module")]
    NotAPartition,
    #[error("vertices {0} and {1} see different colors across the same pair of parts")]
    NonUniform(Vertex, Vertex),
    #[error("a quotient needs at least two vertices to be classified")]
    TooSmall,
}

/// Index of a node in an [`MdTree`]. The root is always node 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NodeId(pub(crate) usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Leaf,
    Series,
    Prime,
}

impl std::fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModuleKind::Leaf => "leaf",
            ModuleKind::Series => "series",
            ModuleKind::Prime => "prime",
        })
    }
}

/// Quotient of a module by its children.
///
/// Vertex `i` of `graph` stands for the child represented by
/// `representatives[i]`; local color `c` is color `palette[c - 1]` of the
/// decomposed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: ColoredGraph,
    pub palette: Vec<Color>,
    pub representatives: Vec<Vertex>,
}

impl Quotient {
    fn of(g: &ColoredGraph, representatives: Vec<Vertex>) -> Self {
        Self {
            graph: g.induced_unchecked(&representatives),
            palette: g.surviving_colors(&representatives),
            representatives,
        }
    }

    /// Color in the decomposed graph of local color `c`.
    pub fn global_color(&self, c: Color) -> Color {
        self.palette[c as usize - 1]
    }

    /// Local color of a color of the decomposed graph, if it occurs here.
    pub fn local_color(&self, global: Color) -> Option<Color> {
        self.palette.binary_search(&global).ok().map(|i| i as Color + 1)
    }
}

#[derive(Debug, Clone)]
pub struct MdNode {
    pub members: Vec<Vertex>,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub kind: ModuleKind,
    pub quotient: Option<Quotient>,
}

/// Inclusion tree of the strong modules of a graph.
///
/// Nodes are numbered breadth-first from the root; children are ordered by
/// their minimum vertex.
#[derive(Debug, Clone)]
pub struct MdTree {
    n: usize,
    nodes: Vec<MdNode>,
    leaf: Vec<NodeId>,
}

impl MdTree {
    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    /// Number of vertices of the decomposed graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn node(&self, id: NodeId) -> &MdNode {
        &self.nodes[id.0]
    }

    pub fn members(&self, id: NodeId) -> &[Vertex] {
        &self.nodes[id.0].members
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id.0].children
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.0].parent
    }

    pub fn kind(&self, id: NodeId) -> ModuleKind {
        self.nodes[id.0].kind
    }

    pub fn quotient(&self, id: NodeId) -> Option<&Quotient> {
        self.nodes[id.0].quotient.as_ref()
    }

    /// The leaf `{v}`.
    pub fn leaf(&self, v: Vertex) -> NodeId {
        self.leaf[v]
    }

    /// Representative (minimum vertex) of a node.
    pub fn representative(&self, id: NodeId) -> Vertex {
        self.nodes[id.0].members[0]
    }

    /// All strong modules as sorted vertex lists, in node order.
    pub fn strong_modules(&self) -> Vec<Vec<Vertex>> {
        self.nodes.iter().map(|m| m.members.clone()).collect()
    }

    /// Inner nodes in node order.
    pub fn inner_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.ids().filter(|&id| self.kind(id) != ModuleKind::Leaf)
    }
}

/// Whether every vertex outside `module` sees all of it in one color.
pub fn is_module(g: &ColoredGraph, module: &[Vertex]) -> bool {
    g.is_module(module)
}

/// Quotient of `module` by a partition into `children`, each of which must be
/// a module of `g`. Representatives are the children's minimum vertices and
/// the quotient's vertices follow the order of `children`.
pub fn quotient(g: &ColoredGraph, module: &[Vertex], children: &[Vec<Vertex>]) -> Result<Quotient, MdError> {
    let mut seen: Vec<Vertex> = children.iter().flatten().copied().collect();
    seen.sort_unstable();
    let mut whole = module.to_vec();
    whole.sort_unstable();
    whole.dedup();
    if seen != whole || children.iter().any(|c| c.is_empty()) || seen.iter().any(|&v| v >= g.n()) {
        return Err(MdError::NotAPartition);
    }
    for (i, a) in children.iter().enumerate() {
        for b in &children[i + 1..] {
            let c = g.color(a[0], b[0]);
            for &x in a {
                for &y in b {
                    if g.color(x, y) != c {
                        return Err(MdError::NonUniform(x, y));
                    }
                }
            }
        }
    }
    let reps: Vec<Vertex> = children.iter().map(|c| *c.iter().min().expect("non-empty")).collect();
    if reps.windows(2).all(|w| w[0] < w[1]) {
        return Ok(Quotient::of(g, reps));
    }
    // keep the caller's child order
    let sub = ColoredGraph::from_fn(reps.len().max(1), |a, b| g.color(reps[a], reps[b]) as u64);
    let mut sorted = reps.clone();
    sorted.sort_unstable();
    let palette = g.surviving_colors(&sorted);
    let labels = palette.iter().map(|&c| g.label_of(c)).collect();
    let graph = if reps.len() == 1 { ColoredGraph::singleton() } else { sub.with_labels(labels) };
    Ok(Quotient { graph, palette, representatives: reps })
}

/// Series if the quotient is one-colored, prime otherwise.
pub fn classify(quotient: &ColoredGraph) -> Result<ModuleKind, MdError> {
    match (quotient.n(), quotient.k()) {
        (0 | 1, _) => Err(MdError::TooSmall),
        (_, 1) => Ok(ModuleKind::Series),
        _ => Ok(ModuleKind::Prime),
    }
}

/// Whether `g` has only trivial modules. Graphs on at most two vertices are
/// primitive.
pub fn is_primitive(g: &ColoredGraph) -> bool {
    if g.n() <= 2 {
        return true;
    }
    let tree = decompose(g);
    tree.kind(tree.root()) == ModuleKind::Prime && tree.children(tree.root()).len() == g.n()
}
