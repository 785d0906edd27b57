//! Permutations, labelings and permutation-graph certificates.
//!
//! Permutations are 1-indexed sequences over `1..=n`; vertices are 0-indexed.
//! A [`Labeling`] bridges the two by assigning every vertex a label in
//! `1..=n`.

mod realize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, SimpleGraph, Vertex};

pub use realize::recognize_simple;
pub(crate) use realize::{realize_prime, realizing_permutations};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..={0}")]
    NotBijective(usize),
    #[error("permutation must not be empty")]
    Empty,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("pair {{{0}, {1}}} is inverted by no permutation")]
    UncoveredPair(Vertex, Vertex),
    #[error("pair {{{0}, {1}}} is inverted by more than one permutation")]
    OverlapPair(Vertex, Vertex),
    #[error("permutation {0} inverts no pair")]
    EmptyColor(usize),
    #[error("expected {expected} items of length {n}, got {got}")]
    ArityMismatch { expected: usize, got: usize, n: usize },
    #[error("graph is edgeless or complete; the lift would have a single color")]
    DegenerateGraph,
    #[error("labeled graph is not the permutation graph of the given permutation")]
    NotRealized,
}

/// A bijection on `1..=n`, stored as the sequence `(π(1), ..., π(n))`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(seq: Vec<usize>) -> Result<Self, PermError> {
        if seq.is_empty() {
            return Err(PermError::Empty);
        }
        if !is_bijection(&seq) {
            return Err(PermError::NotBijective(seq.len()));
        }
        Ok(Self(seq))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn reversed_identity(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π(i)` for `i` in `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The permutation `r` with `r(j) = i` iff `π(i) = j`.
    pub fn inverse(&self) -> Permutation {
        Permutation(positions(&self.0))
    }

    /// `r(i) = π(n + 1 - i)`.
    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Number of pairs of values `a > b` with `a` placed before `b`.
    pub fn inversion_count(&self) -> usize {
        // Fenwick tree over values
        let n = self.0.len();
        let mut tree = vec![0usize; n + 1];
        let mut count = 0;
        for (seen, &x) in self.0.iter().enumerate() {
            let mut i = x;
            let mut not_greater = 0;
            while i > 0 {
                not_greater += tree[i];
                i &= i - 1;
            }
            count += seen - not_greater;
            let mut i = x;
            while i <= n {
                tree[i] += 1;
                i += i & i.wrapping_neg();
            }
        }
        count
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `(1,5,2)`, `1,5,2` or `(1 5 2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let seq = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| PermError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(seq)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(seq: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(seq)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// A bijection from vertices `0..n` to labels `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Labeling(Vec<usize>);

impl Labeling {
    /// `label_of[v]` is the label of vertex `v`.
    pub fn new(label_of: Vec<usize>) -> Result<Self, PermError> {
        if label_of.is_empty() {
            return Err(PermError::Empty);
        }
        if !is_bijection(&label_of) {
            return Err(PermError::NotBijective(label_of.len()));
        }
        Ok(Self(label_of))
    }

    /// Vertex `v` gets label `v + 1`.
    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// Labels vertices in the given order: `order[0]` gets label 1, and so on.
    pub fn from_order(order: &[Vertex]) -> Result<Self, PermError> {
        let mut label_of = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            if v >= order.len() || label_of[v] != 0 {
                return Err(PermError::NotBijective(order.len()));
            }
            label_of[v] = i + 1;
        }
        Ok(Self(label_of))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn label(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Vertices sorted by label.
    pub fn order(&self) -> Vec<Vertex> {
        let mut order = vec![0; self.0.len()];
        for (v, &l) in self.0.iter().enumerate() {
            order[l - 1] = v;
        }
        order
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, l) in self.0.iter().enumerate() {
            if v > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = PermError;

    /// Parses `v:label` pairs separated by commas or whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PermError::Parse(s.to_string());
        let mut pairs = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (v, l) = tok.split_once(':').ok_or_else(bad)?;
            pairs.push((v.trim().parse::<usize>().map_err(|_| bad())?, l.trim().parse::<usize>().map_err(|_| bad())?));
        }
        let n = pairs.len();
        let mut label_of = vec![0; n];
        for (v, l) in pairs {
            if v >= n || label_of[v] != 0 {
                return Err(PermError::NotBijective(n));
            }
            label_of[v] = l;
        }
        Labeling::new(label_of)
    }
}

impl TryFrom<Vec<usize>> for Labeling {
    type Error = PermError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Labeling::new(v)
    }
}

impl From<Labeling> for Vec<usize> {
    fn from(l: Labeling) -> Self {
        l.0
    }
}

/// A labeling together with one permutation per color; `permutations[i]`
/// belongs to color `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub labeling: Labeling,
    pub permutations: Vec<Permutation>,
}

impl Certificate {
    pub fn new(labeling: Labeling, permutations: Vec<Permutation>) -> Self {
        Self { labeling, permutations }
    }

    /// Whether this certificate realizes `g`.
    pub fn verifies(&self, g: &ColoredGraph) -> bool {
        verify(g, &self.labeling, &self.permutations).unwrap_or(false)
    }
}

fn is_bijection(seq: &[usize]) -> bool {
    let n = seq.len();
    let mut seen = vec![false; n + 1];
    seq.iter().all(|&x| (1..=n).contains(&x) && !std::mem::replace(&mut seen[x], true))
}

/// `pos[v - 1]` is the 1-based position of value `v` in `seq`.
fn positions(seq: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        pos[x - 1] = i + 1;
    }
    pos
}

/// For every vertex, the position of its label in `π`, i.e. `π⁻¹(ℓ(v))`.
fn vertex_positions(labeling: &Labeling, perm: &Permutation) -> Vec<usize> {
    let pos = positions(perm.as_slice());
    labeling.as_slice().iter().map(|&l| pos[l - 1]).collect()
}

/// Whether `π` inverts the pair, given vertex labels and positions.
#[inline]
fn inverts(lu: usize, lv: usize, pu: usize, pv: usize) -> bool {
    (lu > lv) == (pu < pv)
}

/// The permutation graph of `π` under the labeling `ℓ`.
pub fn inversion_graph(labeling: &Labeling, perm: &Permutation) -> Result<SimpleGraph, PermError> {
    let n = labeling.len();
    if perm.len() != n {
        return Err(PermError::ArityMismatch { expected: n, got: perm.len(), n });
    }
    let pos = vertex_positions(labeling, perm);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if inverts(labeling.label(u), labeling.label(v), pos[u], pos[v]) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The permutation graph of `π` with vertex `i` carrying label `i + 1`.
pub fn permutation_graph(perm: &Permutation) -> SimpleGraph {
    inversion_graph(&Labeling::identity(perm.len()), perm).expect("lengths agree")
}

/// The complete colored graph in which `{u, v}` has color `i` iff the `i`-th
/// permutation inverts it. Each pair must be inverted by exactly one
/// permutation and every permutation must invert some pair.
pub fn generate_colored(labeling: &Labeling, perms: &[Permutation]) -> Result<ColoredGraph, PermError> {
    let n = labeling.len();
    if let Some(p) = perms.iter().find(|p| p.len() != n) {
        return Err(PermError::ArityMismatch { expected: n, got: p.len(), n });
    }
    if n == 1 {
        return if perms.is_empty() { Ok(ColoredGraph::singleton()) } else { Err(PermError::EmptyColor(1)) };
    }
    let positions: Vec<Vec<usize>> = perms.iter().map(|p| vertex_positions(labeling, p)).collect();
    let mut table = vec![0u64; n * n];
    let mut used = vec![false; perms.len()];
    for u in 0..n {
        for v in u + 1..n {
            let (lu, lv) = (labeling.label(u), labeling.label(v));
            let mut color = None;
            for (i, pos) in positions.iter().enumerate() {
                if inverts(lu, lv, pos[u], pos[v]) {
                    if color.is_some() {
                        return Err(PermError::OverlapPair(u, v));
                    }
                    color = Some(i);
                }
            }
            let i = color.ok_or(PermError::UncoveredPair(u, v))?;
            used[i] = true;
            table[u * n + v] = i as u64 + 1;
        }
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        return Err(PermError::EmptyColor(i + 1));
    }
    Ok(ColoredGraph::from_fn(n, |u, v| table[u * n + v]))
}

/// Whether `(g, ℓ)` is the complete colored permutation graph of `perms`.
///
/// Runs in `O(n² + k n log n)`: every pair must be inverted by the
/// permutation of its own color, and each permutation must have exactly as
/// many inversions as its color has pairs.
pub fn verify(g: &ColoredGraph, labeling: &Labeling, perms: &[Permutation]) -> Result<bool, PermError> {
    let n = g.n();
    if perms.len() != g.k() {
        return Err(PermError::ArityMismatch { expected: g.k(), got: perms.len(), n });
    }
    if labeling.len() != n {
        return Err(PermError::ArityMismatch { expected: n, got: labeling.len(), n });
    }
    if let Some(p) = perms.iter().find(|p| p.len() != n) {
        return Err(PermError::ArityMismatch { expected: n, got: p.len(), n });
    }
    let positions: Vec<Vec<usize>> = perms.iter().map(|p| vertex_positions(labeling, p)).collect();
    for (u, v, c) in g.pairs() {
        let pos = &positions[c as usize - 1];
        if !inverts(labeling.label(u), labeling.label(v), pos[u], pos[v]) {
            return Ok(false);
        }
    }
    let sizes = g.color_class_sizes();
    Ok(perms.iter().enumerate().all(|(i, p)| p.inversion_count() == sizes[i + 1]))
}

/// Lifts a simple permutation graph `(h, ℓ)` of `π` to the certificate
/// `(ℓ, [π, reverse(π)])` of the complete 2-colored graph with color 1 on the
/// edges of `h` and color 2 on its non-edges.
pub fn two_color_lift(h: &SimpleGraph, labeling: &Labeling, perm: &Permutation) -> Result<Certificate, PermError> {
    let n = h.n();
    if h.edge_count() == 0 || h.edge_count() == n * (n - 1) / 2 {
        return Err(PermError::DegenerateGraph);
    }
    if labeling.len() != n || perm.len() != n {
        return Err(PermError::ArityMismatch { expected: n, got: perm.len().min(labeling.len()), n });
    }
    if inversion_graph(labeling, perm)? != *h {
        return Err(PermError::NotRealized);
    }
    Ok(Certificate::new(labeling.clone(), vec![perm.clone(), perm.reverse()]))
}

/// Sorts `items` with a strict comparator `less`, using a top-down merge
/// sort. Returns `None` if adjacent output elements violate `less`, which
/// signals an intransitive comparator.
pub(crate) fn merge_sort_by<T: Copy>(items: &mut [T], less: &impl Fn(T, T) -> bool) -> Option<()> {
    let mut buf = items.to_vec();
    merge_sort_rec(items, &mut buf, less);
    items.windows(2).all(|w| less(w[0], w[1])).then_some(())
}

fn merge_sort_rec<T: Copy>(items: &mut [T], buf: &mut [T], less: &impl Fn(T, T) -> bool) {
    let n = items.len();
    if n <= 1 {
        return;
    }
    let mid = n / 2;
    merge_sort_rec(&mut items[..mid], &mut buf[..mid], less);
    merge_sort_rec(&mut items[mid..], &mut buf[mid..], less);
    let (mut i, mut j) = (0, mid);
    for slot in buf[..n].iter_mut() {
        if j >= n || (i < mid && !less(items[j], items[i])) {
            *slot = items[i];
            i += 1;
        } else {
            *slot = items[j];
            j += 1;
        }
    }
    items.copy_from_slice(&buf[..n]);
}

/// Full `O(n²)` check that `items` is strictly increasing under `less` for
/// every pair, not just adjacent ones.
pub(crate) fn is_sorted_pairwise<T: Copy>(items: &[T], less: &impl Fn(T, T) -> bool) -> bool {
    items.iter().enumerate().all(|(i, &a)| items[i + 1..].iter().all(|&b| less(a, b) && !less(b, a)))
}

/// The permutation read off a sorted vertex order: `π(j) = ℓ(order[j-1])`.
pub(crate) fn permutation_from_order(labeling: &Labeling, order: &[Vertex]) -> Permutation {
    Permutation(order.iter().map(|&v| labeling.label(v)).collect())
}

/// The per-color order `u ⋖ v` defined directly from pair colors under `ℓ`.
#[inline]
pub(crate) fn color_precedes(g: &ColoredGraph, labeling: &Labeling, color: Color, u: Vertex, v: Vertex) -> bool {
    (labeling.label(u) > labeling.label(v)) == (g.color(u, v) == color)
}
