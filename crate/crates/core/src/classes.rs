//! Related graph classes: Gallai colorings, cographs, symbolic ultrametrics
//! and separable permutations.

use thiserror::Error;

use crate::graph::{Color, ColoredGraph, SimpleGraph, Vertex};
use crate::perm::{permutation_graph, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("delta({0}, {1}) differs from delta({1}, {0})")]
    Asymmetric(Vertex, Vertex),
    #[error("delta must be a square matrix with at least one row")]
    Shape,
    #[error("values must be positive, found 0 at ({0}, {1})")]
    NonPositive(Vertex, Vertex),
}

/// A symmetric map on pairs of distinct elements, with values renumbered to
/// `1..=k`. Its graph representation colors `{x, y}` with `δ(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMap {
    graph: ColoredGraph,
}

impl SymbolicMap {
    /// Builds the map from `delta(x, y)` evaluated for `x < y`.
    pub fn from_fn(n: usize, delta: impl FnMut(Vertex, Vertex) -> u64) -> Self {
        Self { graph: ColoredGraph::from_fn(n, delta) }
    }

    /// Builds the map from a full matrix; the diagonal is ignored.
    pub fn from_matrix(rows: &[Vec<u64>]) -> Result<Self, ClassError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(ClassError::Shape);
        }
        for x in 0..n {
            for y in x + 1..n {
                if rows[x][y] != rows[y][x] {
                    return Err(ClassError::Asymmetric(x, y));
                }
                if rows[x][y] == 0 {
                    return Err(ClassError::NonPositive(x, y));
                }
            }
        }
        Ok(Self::from_fn(n, |x, y| rows[x][y]))
    }

    pub fn from_graph(g: &ColoredGraph) -> Self {
        Self { graph: g.clone() }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn delta(&self, x: Vertex, y: Vertex) -> Color {
        self.graph.color(x, y)
    }

    /// The complete colored graph representing this map.
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }
}

/// No rainbow triangle.
pub fn is_gallai(g: &ColoredGraph) -> bool {
    g.find_rainbow_triangle().is_none()
}

/// No induced path on four vertices, decided by recursing into the
/// components of the graph or of its complement.
pub fn is_cograph(h: &SimpleGraph) -> bool {
    let mut stack = vec![h.clone()];
    while let Some(g) = stack.pop() {
        if g.n() <= 3 {
            // every graph on at most three vertices is P4-free
            continue;
        }
        let comps = g.components();
        if comps.len() > 1 {
            stack.extend(comps.iter().map(|c| g.induced(c)));
            continue;
        }
        let co = g.complement();
        let comps = co.components();
        if comps.len() == 1 {
            return false;
        }
        stack.extend(comps.iter().map(|c| g.induced(c)));
    }
    true
}

/// Direct `O(n⁴)` search for an induced `P₄`, as `(a, b, c, d)` with edges
/// `ab`, `bc`, `cd` only.
pub fn find_induced_p4(h: &SimpleGraph) -> Option<[Vertex; 4]> {
    let n = h.n();
    for b in 0..n {
        for c in 0..n {
            if b == c || !h.has_edge(b, c) {
                continue;
            }
            for a in 0..n {
                if a == b || a == c || !h.has_edge(a, b) || h.has_edge(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d != a && d != b && d != c && h.has_edge(c, d) && !h.has_edge(b, d) && !h.has_edge(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Checks the triangle condition (at most two distinct values on any three
/// elements) and the forbidden four-element pattern
/// `δ(x,y) = δ(y,u) = δ(u,v) ≠ δ(v,y) = δ(x,v) = δ(x,u)` by exhaustive scan.
pub fn check_ultrametric_axioms(d: &SymbolicMap) -> bool {
    let n = d.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let (a, b, c) = (d.delta(x, y), d.delta(x, z), d.delta(y, z));
                if a != b && a != c && b != c {
                    return false;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            let p = d.delta(x, y);
            for u in 0..n {
                if u == x || u == y || d.delta(y, u) != p {
                    continue;
                }
                let q = d.delta(x, u);
                if q == p {
                    continue;
                }
                for v in 0..n {
                    if v != x && v != y && v != u && d.delta(u, v) == p && d.delta(v, y) == q && d.delta(x, v) == q {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Rainbow-free and every color class is a cograph.
pub fn is_symbolic_ultrametric_graph(g: &ColoredGraph) -> bool {
    is_gallai(g) && (1..=g.k() as Color).all(|c| is_cograph(&g.monochromatic_subgraph(c).expect("color in range")))
}

/// Whether the permutation graph of `π` is a cograph.
pub fn is_separable(p: &Permutation) -> bool {
    is_cograph(&permutation_graph(p))
}
