//! Exhaustive reference implementations for small graphs, and seeded random
//! instance streams.
//!
//! Nothing here uses the decomposition or the recognition pipeline.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Color, ColoredGraph, SimpleGraph, Vertex};
use crate::perm::{generate_colored, verify, Certificate, Labeling, Permutation};

/// Largest graph accepted by [`brute_force_recognize`].
pub const RECOGNIZE_LIMIT: usize = 9;
/// Largest graph accepted by [`enumerate_modules_naive`].
pub const MODULES_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} vertices exceed the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

fn next_lexicographic(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]).map(|i| i - 1) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Positions (0-based) of the vertices in the order `u before v` iff
/// `ℓ(u) > ℓ(v)` and `{u,v}` has color `c`, or `ℓ(u) < ℓ(v)` and it has not.
/// `None` unless that relation is a strict total order, which for a
/// tournament means all out-degrees are distinct.
fn color_positions(g: &ColoredGraph, label_of: &[usize], c: Color) -> Option<Vec<usize>> {
    let n = g.n();
    let mut taken = vec![false; n];
    let mut pos = vec![0; n];
    for u in 0..n {
        let after = (0..n).filter(|&v| v != u && (label_of[u] > label_of[v]) == (g.color(u, v) == c)).count();
        let p = n - 1 - after;
        if taken[p] {
            return None;
        }
        taken[p] = true;
        pos[u] = p;
    }
    Some(pos)
}

/// Tries every labeling of `g`; returns the first (in lexicographic order of
/// label sequences) for which every color's order is total, together with
/// the permutations read off those orders.
pub fn brute_force_recognize(g: &ColoredGraph) -> Result<Option<Certificate>, OracleError> {
    let n = g.n();
    if n > RECOGNIZE_LIMIT {
        return Err(OracleError::TooLarge { n, limit: RECOGNIZE_LIMIT });
    }
    let mut label_of: Vec<usize> = (1..=n).collect();
    loop {
        let positions: Option<Vec<Vec<usize>>> =
            (1..=g.k() as Color).map(|c| color_positions(g, &label_of, c)).collect();
        if let Some(positions) = positions {
            let perms: Vec<Permutation> = positions
                .iter()
                .map(|pos| {
                    let mut seq = vec![0; n];
                    for u in 0..n {
                        seq[pos[u]] = label_of[u];
                    }
                    Permutation::new(seq).expect("positions are a bijection")
                })
                .collect();
            let labeling = Labeling::new(label_of).expect("bijection");
            debug_assert_eq!(verify(g, &labeling, &perms), Ok(true));
            return Ok(Some(Certificate::new(labeling, perms)));
        }
        if !next_lexicographic(&mut label_of) {
            return Ok(None);
        }
    }
}

/// Exhaustive simple permutation graph test for graphs within
/// [`RECOGNIZE_LIMIT`]; `None` also for larger graphs.
pub fn brute_force_simple(h: &SimpleGraph) -> Option<(Labeling, Permutation)> {
    let n = h.n();
    if h.edge_count() == 0 {
        return Some((Labeling::identity(n), Permutation::identity(n)));
    }
    if h.edge_count() == n * (n - 1) / 2 {
        return Some((Labeling::identity(n), Permutation::reversed_identity(n)));
    }
    let cert = brute_force_recognize(&h.to_colored()).ok()??;
    let perm = cert.permutations.into_iter().next()?;
    Some((cert.labeling, perm))
}

/// All non-empty modules and the strong ones among them, each as a sorted
/// vertex list, ordered by bitmask.
pub fn enumerate_modules_naive(g: &ColoredGraph) -> Result<(Vec<Vec<Vertex>>, Vec<Vec<Vertex>>), OracleError> {
    let n = g.n();
    if n > MODULES_LIMIT {
        return Err(OracleError::TooLarge { n, limit: MODULES_LIMIT });
    }
    let members = |mask: u32| -> Vec<Vertex> { (0..n).filter(|&v| mask >> v & 1 == 1).collect() };
    let modules: Vec<u32> = (1u32..1 << n)
        .filter(|&mask| {
            let inside = members(mask);
            (0..n)
                .filter(|&x| mask >> x & 1 == 0)
                .all(|x| inside.iter().all(|&y| g.color(x, y) == g.color(x, inside[0])))
        })
        .collect();
    let overlaps = |a: u32, b: u32| a & b != 0 && a & !b != 0 && b & !a != 0;
    let strong: Vec<u32> = modules.iter().copied().filter(|&m| modules.iter().all(|&o| !overlaps(m, o))).collect();
    Ok((modules.into_iter().map(members).collect(), strong.into_iter().map(members).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Every pair gets a uniformly random color from `1..=k`.
    Uniform,
    /// Random two-colored complete graphs with random Gallai colorings
    /// substituted into their vertices, recursively.
    GallaiSubstitution,
    /// Random permutation tuples with disjoint inversion sets covering all
    /// pairs, built by inflating small random permutations, then realized.
    FromPermutations,
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Profile::Uniform),
            "gallai-substitution" => Ok(Profile::GallaiSubstitution),
            "from-permutations" => Ok(Profile::FromPermutations),
            other => Err(format!("unknown profile {other:?}")),
        }
    }
}

/// Deterministic stream of random graphs with `n` vertices and at most `k`
/// colors.
pub fn random_instances(seed: u64, n: usize, k: usize, profile: Profile) -> RandomInstances {
    assert!(n >= 1 && k >= 1, "need at least one vertex and one color");
    RandomInstances { rng: ChaCha8Rng::seed_from_u64(seed), n, k, profile }
}

#[derive(Debug, Clone)]
pub struct RandomInstances {
    rng: ChaCha8Rng,
    n: usize,
    k: usize,
    profile: Profile,
}

impl Iterator for RandomInstances {
    type Item = ColoredGraph;

    fn next(&mut self) -> Option<ColoredGraph> {
        let (n, k) = (self.n, self.k);
        let rng = &mut self.rng;
        Some(match self.profile {
            Profile::Uniform => ColoredGraph::from_fn(n, |_, _| rng.gen_range(1..=k as u64)),
            Profile::GallaiSubstitution => gallai_substitution(rng, n, k),
            Profile::FromPermutations => {
                let (labeling, perms) = random_permutation_tuple(rng, n, k);
                if perms.is_empty() {
                    ColoredGraph::singleton()
                } else {
                    generate_colored(&labeling, &perms).expect("inflated tuples partition the pairs")
                }
            }
        })
    }
}

/// Largest number of blocks a node is split into when building instances.
const MAX_BLOCKS: usize = 8;

/// Random split of `m >= 2` into between 2 and `MAX_BLOCKS` positive sizes.
fn random_blocks(rng: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    let b = rng.gen_range(2..=m.min(MAX_BLOCKS));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, m - 1, b - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(m);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let size = c - prev;
            prev = c;
            size
        })
        .collect()
}

fn two_colors(rng: &mut ChaCha8Rng, k: usize) -> (u64, u64) {
    if k == 1 {
        return (1, 1);
    }
    let picked = rand::seq::index::sample(rng, k, 2);
    (picked.index(0) as u64 + 1, picked.index(1) as u64 + 1)
}

fn gallai_substitution(rng: &mut ChaCha8Rng, n: usize, k: usize) -> ColoredGraph {
    let mut raw = vec![0u64; n * n];
    // (first vertex, size) of blocks still to fill
    let mut todo = vec![(0, n)];
    while let Some((start, m)) = todo.pop() {
        if m == 1 {
            continue;
        }
        let sizes = random_blocks(rng, m);
        let (a, b) = two_colors(rng, k);
        let mut starts = Vec::with_capacity(sizes.len());
        let mut s = start;
        for &size in &sizes {
            starts.push(s);
            todo.push((s, size));
            s += size;
        }
        for i in 0..sizes.len() {
            for j in i + 1..sizes.len() {
                let c = if rng.gen_bool(0.5) { a } else { b };
                for x in starts[i]..starts[i] + sizes[i] {
                    for y in starts[j]..starts[j] + sizes[j] {
                        raw[x * n + y] = c;
                        raw[y * n + x] = c;
                    }
                }
            }
        }
    }
    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(rng);
    ColoredGraph::from_fn(n, |u, v| raw[ids[u] * n + ids[v]])
}

/// A random labeling and permutation tuple on `n` elements whose inversion
/// sets partition all pairs, using at most `k` colors. Unused colors are
/// dropped, so the tuple may be shorter than `k`.
///
/// Each node splits its label interval into consecutive blocks, picks a
/// random permutation `σ` of the blocks and two colors: pairs across blocks
/// inverted by `σ` get the first color, the others the second. Blocks are
/// then filled recursively.
pub fn random_permutation_tuple(rng: &mut ChaCha8Rng, n: usize, k: usize) -> (Labeling, Vec<Permutation>) {
    let mut seqs: Vec<Vec<usize>> = vec![(1..=n).collect(); k];
    // (first label, size) of label intervals still to fill
    let mut todo = vec![(1, n)];
    while let Some((start, m)) = todo.pop() {
        if m == 1 {
            continue;
        }
        let sizes = random_blocks(rng, m);
        let b = sizes.len();
        let mut sigma: Vec<usize> = (0..b).collect();
        sigma.shuffle(rng);
        let (first, second) = two_colors(rng, k);
        let mut block_starts = Vec::with_capacity(b);
        let mut s = start;
        for &size in &sizes {
            block_starts.push(s);
            todo.push((s, size));
            s += size;
        }
        for (c, seq) in seqs.iter_mut().enumerate() {
            let c = c as u64 + 1;
            let order: Vec<usize> = if c == first {
                sigma.clone()
            } else if c == second {
                sigma.iter().rev().copied().collect()
            } else {
                (0..b).collect()
            };
            if first == second && c == first {
                // one color only: every cross pair must be inverted
                let rev: Vec<usize> = (0..b).rev().collect();
                place_blocks(seq, start, m, &sizes, &block_starts, &rev);
            } else {
                place_blocks(seq, start, m, &sizes, &block_starts, &order);
            }
        }
    }
    let mut label_of: Vec<usize> = (1..=n).collect();
    label_of.shuffle(rng);
    let perms =
        seqs.into_iter().map(|s| Permutation::new(s).expect("bijection")).filter(|p| p.inversion_count() > 0).collect();
    (Labeling::new(label_of).expect("bijection"), perms)
}

/// Rearranges the segment of `seq` holding labels `start..start + m` so that
/// the label blocks appear in `order`, each block keeping its internal
/// arrangement.
fn place_blocks(seq: &mut [usize], start: usize, m: usize, sizes: &[usize], block_starts: &[usize], order: &[usize]) {
    let pos = seq.iter().position(|&x| x >= start && x < start + m).expect("segment present");
    let segment: Vec<usize> = seq[pos..pos + m].to_vec();
    debug_assert!(segment.iter().all(|&x| x >= start && x < start + m));
    let mut out = Vec::with_capacity(m);
    for &blk in order {
        let lo = block_starts[blk];
        let hi = lo + sizes[blk];
        out.extend(segment.iter().copied().filter(|&x| x >= lo && x < hi));
    }
    seq[pos..pos + m].copy_from_slice(&out);
}
