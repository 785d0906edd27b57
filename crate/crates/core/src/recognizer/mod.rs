//! Recognition of complete edge-colored permutation graphs.
//!
//! The pipeline decomposes the graph, rejects prime quotients with three or
//! more colors, realizes every prime quotient as a simple permutation graph,
//! orders the vertices by a depth-first walk of the tree that follows the
//! quotient labelings, and finally sorts the vertices once per color.

pub(crate) mod pipeline;
mod restrict;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, GraphError, SimpleGraph, Triangle, Vertex};
use crate::md::{self, MdTree, NodeId};
use crate::perm::{recognize_simple, Certificate, Labeling};

pub use pipeline::{build_color_order, build_prec};
pub use restrict::{characterization_check, restrict, Characterization, Restriction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizerError {
    #[error("no quotient labeling for node {0:?}")]
    IncompleteLabelings(NodeId),
    #[error("color order {0} is not a strict total order")]
    NotTotalOrder(Color),
    #[error("{0:?} is not a strong module")]
    UnknownModule(Vec<Vertex>),
    #[error("order {order:?} does not list each child representative of {module:?} once")]
    BadOrder { module: Vec<Vertex>, order: Vec<Vertex> },
    #[error("pinned labeling of {0:?} does not realize its quotient")]
    InvalidPin(Vec<Vertex>),
    #[error("certificate does not match the graph")]
    InvalidCertificate,
    #[error("{n} vertices exceed the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A prime module whose quotient uses three or more colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WideQuotient {
    pub module: Vec<Vertex>,
    pub representatives: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl WideQuotient {
    fn validate(&self, g: &ColoredGraph) -> bool {
        let reps = &self.representatives;
        if self.module.len() < 3 || !in_module(g, &self.module, reps) {
            return false;
        }
        let mut seen: Vec<Color> = Vec::new();
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                seen.push(g.color(a, b));
            }
        }
        seen.sort_unstable();
        seen.dedup();
        seen.len() >= 3 && seen == self.colors
    }
}

/// Witness that a graph is not a complete edge-colored permutation graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Three vertices with pairwise distinct colors, optionally with the
    /// wide prime quotient it was lifted from.
    RainbowTriangle {
        triangle: Triangle,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quotient: Option<WideQuotient>,
    },
    WideQuotient(WideQuotient),
    /// A two-colored prime quotient whose class of `color` (a color of the
    /// whole graph) is not a permutation graph.
    NonPermQuotient {
        module: Vec<Vertex>,
        representatives: Vec<Vertex>,
        color: Color,
    },
}

/// Largest quotient validated by exhaustive search rather than the
/// transitive-orientation recognizer.
const BRUTE_FORCE_VALIDATION_LIMIT: usize = 8;

impl Obstruction {
    /// Re-checks the witness against `g` using only raw pair colors and the
    /// definition of a module.
    pub fn validate(&self, g: &ColoredGraph) -> bool {
        match self {
            Obstruction::RainbowTriangle { triangle, quotient } => {
                triangle.is_rainbow_in(g) && quotient.as_ref().is_none_or(|q| q.validate(g))
            }
            Obstruction::WideQuotient(q) => q.validate(g),
            Obstruction::NonPermQuotient { module, representatives, color } => {
                let reps = representatives;
                if reps.len() < 3 || !in_module(g, module, reps) {
                    return false;
                }
                let mut h = SimpleGraph::new(reps.len());
                for (i, &a) in reps.iter().enumerate() {
                    for (j, &b) in reps.iter().enumerate().skip(i + 1) {
                        if g.color(a, b) == *color {
                            h.add_edge(i, j);
                        }
                    }
                }
                let all = reps.len() * (reps.len() - 1) / 2;
                if h.edge_count() == 0 || h.edge_count() == all {
                    return false;
                }
                if reps.len() <= BRUTE_FORCE_VALIDATION_LIMIT {
                    crate::oracle::brute_force_simple(&h).is_none()
                } else {
                    recognize_simple(&h).is_none()
                }
            }
        }
    }
}

/// `module` is a module of `g` and `reps` are distinct members of it.
fn in_module(g: &ColoredGraph, module: &[Vertex], reps: &[Vertex]) -> bool {
    let mut sorted = reps.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == reps.len()
        && module.iter().all(|&v| v < g.n())
        && reps.iter().all(|r| module.contains(r))
        && g.is_module(module)
}

/// Chosen labelings of quotient graphs, keyed by tree node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuotientLabelings(BTreeMap<NodeId, Labeling>);

impl QuotientLabelings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, node: NodeId, labeling: Labeling) {
        self.0.insert(node, labeling);
    }

    pub fn get(&self, node: NodeId) -> Option<&Labeling> {
        self.0.get(&node)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Builds labelings from `(module, order)` pairs, where `order` lists the
    /// representatives (minimum vertices) of the module's children from
    /// label 1 upwards.
    pub fn from_orders(tree: &MdTree, orders: &[(Vec<Vertex>, Vec<Vertex>)]) -> Result<Self, RecognizerError> {
        let mut by_members: BTreeMap<&[Vertex], NodeId> = BTreeMap::new();
        for id in tree.inner_nodes() {
            by_members.insert(tree.members(id), id);
        }
        let mut out = Self::new();
        for (module, order) in orders {
            let mut key = module.clone();
            key.sort_unstable();
            let id = *by_members.get(key.as_slice()).ok_or_else(|| RecognizerError::UnknownModule(key.clone()))?;
            let reps: Vec<Vertex> = tree.children(id).iter().map(|&c| tree.representative(c)).collect();
            let bad = || RecognizerError::BadOrder { module: key.clone(), order: order.clone() };
            if order.len() != reps.len() {
                return Err(bad());
            }
            let mut label_of = vec![0; reps.len()];
            for (pos, r) in order.iter().enumerate() {
                let i = reps.binary_search(r).map_err(|_| bad())?;
                label_of[i] = pos + 1;
            }
            out.insert(id, Labeling::new(label_of).map_err(|_| bad())?);
        }
        Ok(out)
    }

    /// The `(module, order)` form of these labelings, in node order.
    pub fn to_orders(&self, tree: &MdTree) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
        self.0
            .iter()
            .map(|(&id, l)| {
                let kids = tree.children(id);
                let order = l.order().into_iter().map(|i| tree.representative(kids[i])).collect();
                (tree.members(id).to_vec(), order)
            })
            .collect()
    }
}

/// Result of a recognition run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Certificate(Certificate),
    Obstruction(Obstruction),
}

impl Outcome {
    pub fn is_member(&self) -> bool {
        matches!(self, Outcome::Certificate(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Certificate(c) => Some(c),
            Outcome::Obstruction(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            Outcome::Certificate(_) => None,
            Outcome::Obstruction(o) => Some(o),
        }
    }
}

/// Recognizes `g`, returning a verified certificate or an obstruction.
pub fn recognize(g: &ColoredGraph) -> Outcome {
    Recognizer::new().run(g).expect("no pinned labelings to reject")
}

/// Configurable recognition: worker threads for the per-quotient step and
/// pinned quotient labelings.
#[derive(Debug, Clone, Default)]
pub struct Recognizer {
    jobs: usize,
    pins: Vec<(Vec<Vertex>, Vec<Vertex>)>,
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of threads for realizing prime quotients; `0` or `1` runs on
    /// the calling thread. Output does not depend on this.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    /// Pins the labeling of a strong module's quotient: `order` lists the
    /// children's representatives from label 1 upwards.
    pub fn pin(mut self, module: Vec<Vertex>, order: Vec<Vertex>) -> Self {
        self.pins.push((module, order));
        self
    }

    pub fn pins(mut self, pins: impl IntoIterator<Item = (Vec<Vertex>, Vec<Vertex>)>) -> Self {
        self.pins.extend(pins);
        self
    }

    pub fn run(&self, g: &ColoredGraph) -> Result<Outcome, RecognizerError> {
        let tree = md::decompose(g);
        self.run_with_tree(g, &tree)
    }

    pub fn run_with_tree(&self, g: &ColoredGraph, tree: &MdTree) -> Result<Outcome, RecognizerError> {
        let pinned = QuotientLabelings::from_orders(tree, &self.pins)?;
        let opts = pipeline::Options { jobs: self.jobs, pinned: &pinned };
        match pipeline::certify(g, tree, &opts) {
            Ok(cert) => Ok(Outcome::Certificate(cert)),
            Err(pipeline::Failure::Obstruction(o)) => Ok(Outcome::Obstruction(o)),
            Err(pipeline::Failure::BadPin(id)) => Err(RecognizerError::InvalidPin(tree.members(id).to_vec())),
        }
    }
}
