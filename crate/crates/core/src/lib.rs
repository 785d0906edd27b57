//! Recognition of complete edge-colored permutation graphs.
//!
//! A complete graph whose edges are colored `1..=k` is a complete
//! edge-colored permutation graph if one labeling of its vertices makes
//! every color class the inversion graph of its own permutation.
//! [`recognize`] decides membership and returns either a [`Certificate`]
//! (the labeling and one permutation per color) or an [`Obstruction`].
//!
//! ```
//! use ecperm::{recognize, ColoredGraph};
//!
//! let g = ColoredGraph::from_assignments(3, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
//! let cert = recognize(&g).certificate().cloned().unwrap();
//! assert!(cert.verifies(&g));
//! ```

pub mod classes;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod md;
pub mod oracle;
pub mod perm;
pub mod recognizer;

pub use graph::{Color, ColoredGraph, GraphError, SimpleGraph, Triangle, Vertex};
pub use md::{decompose, MdTree, ModuleKind, NodeId};
pub use perm::{generate_colored, recognize_simple, verify, Certificate, Labeling, Permutation};
pub use recognizer::{recognize, Obstruction, Outcome, Recognizer};
