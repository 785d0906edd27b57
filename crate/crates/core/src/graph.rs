//! Complete edge-colored graphs and plain undirected graphs.
//!
//! A [`ColoredGraph`] is always complete: every unordered pair of distinct
//! vertices carries exactly one color. Colors are renumbered to `1..=k` at
//! construction by rank of the original label, and the original labels are
//! kept so that files round-trip unchanged.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Vertex identifier, `0..n`.
pub type Vertex = usize;

/// Canonical color, `1..=k`. `0` is reserved for the diagonal.
pub type Color = u32;

/// Largest color label renumbered through a lookup table instead of a map.
const DENSE_RANK_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("color of pair {{{0}, {1}}} must be a positive integer")]
    InvalidColor(Vertex, Vertex),
    #[error("pair {{{0}, {1}}} assigned twice")]
    DuplicatePair(Vertex, Vertex),
    #[error("pair {{{0}, {1}}} has no color; the graph is not complete")]
    MissingPair(Vertex, Vertex),
    #[error("unknown color {color}; graph has {k} colors")]
    UnknownColor { color: Color, k: usize },
    #[error("vertex set is empty")]
    EmptySet,
}

/// A complete `k`-edge-colored graph on vertices `0..n`.
///
/// Equality compares the vertex count and the canonical coloring only; the
/// original color labels are I/O metadata.
#[derive(Clone)]
pub struct ColoredGraph {
    n: usize,
    k: usize,
    table: Vec<Color>,
    labels: Vec<u64>,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for ColoredGraph {}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.pairs().collect();
        f.debug_struct("ColoredGraph").field("n", &self.n).field("k", &self.k).field("edges", &edges).finish()
    }
}

impl ColoredGraph {
    /// Builds a graph from an explicit list of `(u, v, color)` assignments.
    ///
    /// Every unordered pair must be assigned exactly once. Colors may be any
    /// positive integers; they are renumbered to `1..=k` by rank.
    pub fn from_assignments<I>(n: usize, assignments: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u64)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut raw = vec![0u64; n * n];
        for (u, v, c) in assignments {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if c == 0 {
                return Err(GraphError::InvalidColor(u.min(v), u.max(v)));
            }
            if raw[u * n + v] != 0 {
                return Err(GraphError::DuplicatePair(u.min(v), u.max(v)));
            }
            raw[u * n + v] = c;
            raw[v * n + u] = c;
        }
        for u in 0..n {
            for v in u + 1..n {
                if raw[u * n + v] == 0 {
                    return Err(GraphError::MissingPair(u, v));
                }
            }
        }
        Ok(Self::from_raw(n, raw))
    }

    /// Builds a graph by evaluating `color(u, v)` for every pair `u < v`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0` or if `color` returns `0`.
    pub fn from_fn(n: usize, mut color: impl FnMut(Vertex, Vertex) -> u64) -> Self {
        assert!(n > 0, "graph must have at least one vertex");
        let mut raw = vec![0u64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let c = color(u, v);
                assert!(c > 0, "colors must be positive");
                raw[u * n + v] = c;
                raw[v * n + u] = c;
            }
        }
        Self::from_raw(n, raw)
    }

    /// The single-vertex graph `K_1`, which has no colors.
    pub fn singleton() -> Self {
        Self { n: 1, k: 0, table: vec![0], labels: Vec::new() }
    }

    /// The complete graph on `n` vertices with every pair colored `1`.
    pub fn monochromatic(n: usize) -> Self {
        Self::from_fn(n, |_, _| 1)
    }

    fn from_raw(n: usize, raw: Vec<u64>) -> Self {
        let mut labels: Vec<u64> = raw.iter().copied().filter(|&c| c != 0).collect();
        labels.sort_unstable();
        labels.dedup();
        let max = labels.last().copied().unwrap_or(0);
        let table = if max < DENSE_RANK_LIMIT {
            let mut rank = vec![0 as Color; max as usize + 1];
            for (i, &c) in labels.iter().enumerate() {
                rank[c as usize] = i as Color + 1;
            }
            raw.iter().map(|&c| rank[c as usize]).collect()
        } else {
            let rank: BTreeMap<u64, Color> = labels.iter().enumerate().map(|(i, &c)| (c, i as Color + 1)).collect();
            raw.iter().map(|c| if *c == 0 { 0 } else { rank[c] }).collect()
        };
        Self { n, k: labels.len(), table, labels }
    }

    /// Relabels this graph's colors: canonical color `c` gets label
    /// `labels[c - 1]`. The coloring itself is unchanged.
    pub(crate) fn with_labels(mut self, labels: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), self.k);
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Color of the pair `{u, v}`; `0` when `u == v`.
    #[inline]
    pub fn color(&self, u: Vertex, v: Vertex) -> Color {
        self.table[u * self.n + v]
    }

    /// The row of colors seen from `u`, indexed by vertex.
    #[inline]
    pub fn row(&self, u: Vertex) -> &[Color] {
        &self.table[u * self.n..(u + 1) * self.n]
    }

    /// Original label of canonical color `c`.
    pub fn label_of(&self, c: Color) -> u64 {
        self.labels[c as usize - 1]
    }

    /// Original labels, indexed by canonical color minus one.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// All pairs `(u, v, color)` with `u < v` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.color(u, v))))
    }

    /// Number of pairs of each color, indexed by color (index 0 unused).
    pub fn color_class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k + 1];
        for (_, _, c) in self.pairs() {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// The `i`-th monochromatic subgraph `(V, E_i)`.
    pub fn monochromatic_subgraph(&self, i: Color) -> Result<SimpleGraph, GraphError> {
        if i == 0 || i as usize > self.k {
            return Err(GraphError::UnknownColor { color: i, k: self.k });
        }
        let mut h = SimpleGraph::new(self.n);
        for (u, v, c) in self.pairs() {
            if c == i {
                h.add_edge(u, v);
            }
        }
        Ok(h)
    }

    /// The lexicographically smallest triangle `u < v < w` whose three pairs
    /// carry pairwise distinct colors.
    pub fn find_rainbow_triangle(&self) -> Option<Triangle> {
        if self.k < 3 {
            return None;
        }
        for u in 0..self.n {
            let ru = self.row(u);
            for v in u + 1..self.n {
                let cuv = ru[v];
                let rv = self.row(v);
                for w in v + 1..self.n {
                    let (cuw, cvw) = (ru[w], rv[w]);
                    if cuv != cuw && cuv != cvw && cuw != cvw {
                        return Some(Triangle { u, v, w, colors: [cuv, cuw, cvw] });
                    }
                }
            }
        }
        None
    }

    /// The induced subgraph on `vertices`, with colors renumbered by rank of
    /// the surviving colors. Returns the graph together with the sorted list
    /// of old vertex ids; new vertex `i` is old vertex `kept[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(ColoredGraph, Vec<Vertex>), GraphError> {
        let mut kept = vertices.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if let Some(&v) = kept.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok((self.induced_unchecked(&kept), kept))
    }

    /// Induced subgraph on a sorted, deduplicated, in-range vertex list.
    pub(crate) fn induced_unchecked(&self, kept: &[Vertex]) -> ColoredGraph {
        if kept.len() == 1 {
            return ColoredGraph::singleton();
        }
        let sub = ColoredGraph::from_fn(kept.len(), |a, b| self.color(kept[a], kept[b]) as u64);
        // sub's canonical colors are ranks of surviving canonical colors of self
        let mut present: Vec<Color> = sub.labels.iter().map(|&c| c as Color).collect();
        present.sort_unstable();
        let labels = present.iter().map(|&c| self.label_of(c)).collect();
        sub.with_labels(labels)
    }

    /// For the induced subgraph on `kept`, the canonical colors of `self`
    /// that survive, in order; entry `j` is the old color of new color `j + 1`.
    pub(crate) fn surviving_colors(&self, kept: &[Vertex]) -> Vec<Color> {
        let mut seen = vec![false; self.k + 1];
        for (i, &a) in kept.iter().enumerate() {
            for &b in &kept[i + 1..] {
                seen[self.color(a, b) as usize] = true;
            }
        }
        (1..=self.k as Color).filter(|&c| seen[c as usize]).collect()
    }

    /// The smallest color whose monochromatic subgraph is disconnected.
    pub fn disconnected_color(&self) -> Option<Color> {
        if self.n < 2 {
            return None;
        }
        let sizes = self.color_class_sizes();
        // a color class with fewer than n - 1 edges cannot connect n vertices
        let mut dsu: BTreeMap<Color, UnionFind> = (1..=self.k as Color)
            .filter(|&c| sizes[c as usize] >= self.n - 1)
            .map(|c| (c, UnionFind::new(self.n)))
            .collect();
        for (u, v, c) in self.pairs() {
            if let Some(uf) = dsu.get_mut(&c) {
                uf.union(u, v);
            }
        }
        (1..=self.k as Color).find(|c| dsu.get(c).is_none_or(|uf| uf.components > 1))
    }

    /// Whether every vertex outside `module` sees all of `module` in a single
    /// color.
    pub fn is_module(&self, module: &[Vertex]) -> bool {
        let Some(&first) = module.first() else {
            return true;
        };
        let mut inside = vec![false; self.n];
        for &v in module {
            inside[v] = true;
        }
        (0..self.n).filter(|&x| !inside[x]).all(|x| {
            let c = self.color(x, first);
            module.iter().all(|&m| self.color(x, m) == c)
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

/// Three distinct vertices `u < v < w` with the colors of `{u,v}`, `{u,w}`
/// and `{v,w}`, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Triangle {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    pub colors: [Color; 3],
}

impl Triangle {
    /// Checks the witness directly against the raw pair colors of `g`.
    pub fn is_rainbow_in(&self, g: &ColoredGraph) -> bool {
        let (u, v, w) = (self.u, self.v, self.w);
        if u >= g.n() || v >= g.n() || w >= g.n() || u == v || u == w || v == w {
            return false;
        }
        let [a, b, c] = [g.color(u, v), g.color(u, w), g.color(v, w)];
        [a, b, c] == self.colors && a != b && a != c && b != c
    }
}

/// An undirected graph without loops or parallel edges, stored as a dense
/// adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    m: usize,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self { n, adj: vec![false; n * n], m: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Adds `{u, v}`; a no-op if it is already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v);
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.m += 1;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| self.adj[u * self.n + v])
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = Self::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> SimpleGraph {
        let mut g = Self::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The complete 2-colored graph with color 1 on edges and color 2 on
    /// non-edges (fewer colors if `self` is edgeless or complete).
    pub fn to_colored(&self) -> ColoredGraph {
        if self.n == 1 {
            return ColoredGraph::singleton();
        }
        ColoredGraph::from_fn(self.n, |u, v| if self.has_edge(u, v) { 1 } else { 2 })
    }
}
