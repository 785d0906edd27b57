//! Simple permutation graph recognition.
//!
//! A graph is a permutation graph iff both it and its complement are
//! comparability graphs. For a prime graph each of the two has a unique
//! transitive orientation up to reversal, obtained by propagating the forcing
//! relation from a single edge. Given orientations `F` of `H` and `F'` of the
//! complement, `F⁻¹ ∪ F'` ordered gives the labeling and `F ∪ F'` the
//! positions. Non-prime graphs are handled by the modular decomposition
//! pipeline, which calls back into [`realize_prime`] for prime quotients.

use crate::graph::{ColoredGraph, SimpleGraph, Vertex};
use crate::md;
use crate::recognizer::{pipeline, QuotientLabelings};

use super::{color_precedes, merge_sort_by, permutation_from_order, verify, Labeling, Permutation};

/// Largest prime graph for which a failed orientation falls back to
/// exhaustive search over labelings.
const BRUTE_FORCE_LIMIT: usize = 8;

/// Finds `(ℓ, π)` such that `h` is the permutation graph of `π` under `ℓ`, or
/// `None` if `h` is not a permutation graph. The result is deterministic.
pub fn recognize_simple(h: &SimpleGraph) -> Option<(Labeling, Permutation)> {
    let n = h.n();
    if n == 0 {
        return None;
    }
    let all = n * (n - 1) / 2;
    if h.edge_count() == 0 {
        return Some((Labeling::identity(n), Permutation::identity(n)));
    }
    if h.edge_count() == all {
        return Some((Labeling::identity(n), Permutation::reversed_identity(n)));
    }
    let lifted = h.to_colored();
    let tree = md::decompose(&lifted);
    let none = QuotientLabelings::new();
    let cert = pipeline::certify(&lifted, &tree, &pipeline::Options { jobs: 0, pinned: &none }).ok()?;
    // color 1 is the edge set of h
    let perm = cert.permutations.into_iter().next()?;
    Some((cert.labeling, perm))
}

/// Realizes a prime graph as a permutation graph.
///
/// Correct for any input in the sense that a returned pair always realizes
/// `h`; completeness relies on `h` being prime.
pub(crate) fn realize_prime(h: &SimpleGraph) -> Option<(Labeling, Permutation)> {
    let n = h.n();
    if n <= 1 {
        return Some((Labeling::identity(n.max(1)), Permutation::identity(n.max(1))));
    }
    let found = orient_pair(h).filter(|(l, p)| super::inversion_graph(l, p).ok().as_ref() == Some(h));
    if found.is_some() {
        return found;
    }
    if n <= BRUTE_FORCE_LIMIT {
        return brute_force_simple(h);
    }
    None
}

/// Given a labeling of `g`, the permutations making `(g, ℓ)` a complete
/// colored permutation graph, if they exist.
pub(crate) fn realizing_permutations(g: &ColoredGraph, labeling: &Labeling) -> Option<Vec<Permutation>> {
    let mut perms = Vec::with_capacity(g.k());
    for color in 1..=g.k() as u32 {
        let mut order: Vec<Vertex> = (0..g.n()).collect();
        merge_sort_by(&mut order, &|u, v| color_precedes(g, labeling, color, u, v))?;
        perms.push(permutation_from_order(labeling, &order));
    }
    verify(g, labeling, &perms).ok()?.then_some(perms)
}

struct Bits {
    words: usize,
    data: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self { words, data: vec![0; words * n] }
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.data[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.data[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.data[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn count(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn adjacency(h: &SimpleGraph, complement: bool) -> Bits {
    let n = h.n();
    let mut bits = Bits::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && h.has_edge(u, v) != complement {
                bits.set(u, v);
            }
        }
    }
    bits
}

/// Orients every edge of the graph given by `adj` by propagating forcing
/// from one edge per implication class. Returns the out-arc and in-arc
/// bitsets, or `None` if some edge is forced both ways.
fn orient(adj: &Bits, n: usize) -> Option<(Bits, Bits)> {
    let words = adj.words;
    let mut out = Bits::new(n);
    let mut inn = Bits::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let mut scratch = vec![0u64; words];
    for a in 0..n {
        for b in a + 1..n {
            if !adj.get(a, b) || out.get(a, b) || inn.get(a, b) {
                continue;
            }
            out.set(a, b);
            inn.set(b, a);
            queue.push((a, b));
            while let Some((a, b)) = queue.pop() {
                // a -> b and ac ∈ E, bc ∉ E forces a -> c
                for w in 0..words {
                    scratch[w] = adj.row(a)[w] & !adj.row(b)[w];
                }
                clear(&mut scratch, b);
                if intersects(&scratch, inn.row(a)) {
                    return None;
                }
                for c in new_bits(&scratch, out.row(a)) {
                    out.set(a, c);
                    inn.set(c, a);
                    queue.push((a, c));
                }
                // a -> b and cb ∈ E, ca ∉ E forces c -> b
                for w in 0..words {
                    scratch[w] = adj.row(b)[w] & !adj.row(a)[w];
                }
                clear(&mut scratch, a);
                if intersects(&scratch, out.row(b)) {
                    return None;
                }
                for c in new_bits(&scratch, inn.row(b)) {
                    out.set(c, b);
                    inn.set(b, c);
                    queue.push((c, b));
                }
            }
        }
    }
    Some((out, inn))
}

#[inline]
fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Indices set in `a` but not in `b`.
fn new_bits(a: &[u64], b: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, (x, y)) in a.iter().zip(b).enumerate() {
        let mut m = x & !y;
        while m != 0 {
            out.push(w * 64 + m.trailing_zeros() as usize);
            m &= m - 1;
        }
    }
    out
}

/// Ranks vertices by out-degree in a tournament; `None` unless the scores
/// are exactly `0..n`, which characterizes transitive tournaments.
fn transitive_ranks(scores: &[usize]) -> Option<Vec<usize>> {
    let n = scores.len();
    let mut seen = vec![false; n];
    for &s in scores {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return None;
        }
    }
    // out-degree n-1 comes first
    Some(scores.iter().map(|&s| n - s).collect())
}

fn orient_pair(h: &SimpleGraph) -> Option<(Labeling, Permutation)> {
    let n = h.n();
    let (f_out, f_in) = orient(&adjacency(h, false), n)?;
    let (c_out, _) = orient(&adjacency(h, true), n)?;
    let label_scores: Vec<usize> = (0..n).map(|u| f_in.count(u) + c_out.count(u)).collect();
    let pos_scores: Vec<usize> = (0..n).map(|u| f_out.count(u) + c_out.count(u)).collect();
    let labels = transitive_ranks(&label_scores)?;
    let positions = transitive_ranks(&pos_scores)?;
    let mut seq = vec![0; n];
    for u in 0..n {
        seq[positions[u] - 1] = labels[u];
    }
    Some((Labeling::new(labels).ok()?, Permutation::new(seq).ok()?))
}

/// Exhaustive search over all labelings; for each, the pair order
/// `u before v` iff the label order and the edge relation disagree must be a
/// transitive tournament.
fn brute_force_simple(h: &SimpleGraph) -> Option<(Labeling, Permutation)> {
    let n = h.n();
    let mut label_of: Vec<usize> = (1..=n).collect();
    loop {
        let scores: Vec<usize> = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && (label_of[u] > label_of[v]) == h.has_edge(u, v)).count())
            .collect();
        if let Some(pos) = transitive_ranks(&scores) {
            let mut seq = vec![0; n];
            for u in 0..n {
                seq[pos[u] - 1] = label_of[u];
            }
            return Some((Labeling::new(label_of).ok()?, Permutation::new(seq).ok()?));
        }
        if !next_permutation(&mut label_of) {
            return None;
        }
    }
}

/// Advances to the next lexicographic permutation; `false` after the last.
pub(crate) fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{inversion_graph, permutation_graph};

    fn realizes(h: &SimpleGraph, found: &Option<(Labeling, Permutation)>) -> bool {
        let (l, p) = found.as_ref().unwrap();
        inversion_graph(l, p).unwrap() == *h
    }

    #[test]
    fn p4_is_realized_by_an_order_isomorphic_of_3142() {
        let p4 = SimpleGraph::path(4);
        let found = recognize_simple(&p4);
        assert!(realizes(&p4, &found));
        let (_, p) = found.unwrap();
        let shapes = ["(3,1,4,2)", "(2,4,1,3)"];
        assert!(shapes.contains(&p.to_string().as_str()), "{p}");
    }

    #[test]
    fn trivial_graphs() {
        let e = SimpleGraph::new(5);
        assert_eq!(recognize_simple(&e), Some((Labeling::identity(5), Permutation::identity(5))));
        let k = SimpleGraph::complete(5);
        assert_eq!(recognize_simple(&k).unwrap().1, Permutation::reversed_identity(5));
        assert!(recognize_simple(&SimpleGraph::new(1)).is_some());
    }

    #[test]
    fn odd_cycles_are_rejected() {
        assert_eq!(recognize_simple(&SimpleGraph::cycle(5)), None);
        assert_eq!(recognize_simple(&SimpleGraph::cycle(7)), None);
        assert_eq!(brute_force_simple(&SimpleGraph::cycle(5)), None);
    }

    #[test]
    fn c6_is_rejected_but_c4_accepted() {
        // C6's complement is the triangular prism, not a comparability graph
        assert_eq!(recognize_simple(&SimpleGraph::cycle(6)), None);
        let c4 = SimpleGraph::cycle(4);
        assert!(realizes(&c4, &recognize_simple(&c4)));
    }

    #[test]
    fn random_permutation_graphs_are_recovered() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [5, 9, 20, 60, 150] {
            for _ in 0..5 {
                let mut seq: Vec<usize> = (1..=n).collect();
                seq.shuffle(&mut rng);
                let h = permutation_graph(&Permutation::new(seq).unwrap());
                let found = recognize_simple(&h);
                assert!(found.is_some(), "n = {n}");
                assert!(realizes(&h, &found));
            }
        }
    }

    #[test]
    fn next_permutation_enumerates_all() {
        let mut xs = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut xs) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(xs, vec![4, 3, 2, 1]);
    }

    #[test]
    fn realizing_permutations_rejects_bad_labeling() {
        // 2-colored K3 with colors 1,1,2: path 0-1-2 in color 1 needs the
        // middle vertex outside the label order extremes
        let g = ColoredGraph::from_assignments(3, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert!(realizing_permutations(&g, &Labeling::identity(3)).is_none());
        let ok = Labeling::new(vec![1, 3, 2]).unwrap();
        let perms = realizing_permutations(&g, &ok).unwrap();
        assert!(verify(&g, &ok, &perms).unwrap());
    }
}
