#![allow(dead_code)]

use ecperm::graph::{ColoredGraph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random symbolic ultrametric on `n` elements: a random hierarchy whose
/// inner nodes carry a color in `1..=k`, with `δ(x, y)` the color where `x`
/// and `y` separate.
pub fn random_ultrametric(rng: &mut ChaCha8Rng, n: usize, k: usize) -> ColoredGraph {
    let mut delta = vec![vec![0u64; n]; n];
    let mut all: Vec<Vertex> = (0..n).collect();
    all.shuffle(rng);
    let mut stack = vec![all];
    while let Some(block) = stack.pop() {
        if block.len() < 2 {
            continue;
        }
        let parts = rng.gen_range(2..=block.len().min(4));
        let mut cuts: Vec<usize> =
            rand::seq::index::sample(rng, block.len() - 1, parts - 1).into_iter().map(|c| c + 1).collect();
        cuts.sort_unstable();
        cuts.push(block.len());
        let color = rng.gen_range(1..=k as u64);
        let mut start = 0;
        let mut pieces = Vec::new();
        for c in cuts {
            pieces.push(block[start..c].to_vec());
            start = c;
        }
        for (i, a) in pieces.iter().enumerate() {
            for b in &pieces[i + 1..] {
                for &x in a {
                    for &y in b {
                        delta[x][y] = color;
                        delta[y][x] = color;
                    }
                }
            }
        }
        stack.extend(pieces);
    }
    ColoredGraph::from_fn(n, |x, y| delta[x][y])
}

/// Every complete colored graph on `n` vertices, one per partition of the
/// pairs into color classes.
pub fn all_colorings(n: usize) -> Vec<ColoredGraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    let mut out = Vec::new();
    // restricted growth strings: a[i] <= 1 + max(a[..i])
    let mut a = vec![1u64; m];
    loop {
        out.push(ColoredGraph::from_assignments(n, pairs.iter().zip(&a).map(|(&(u, v), &c)| (u, v, c))).unwrap());
        let mut i = m;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_before = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= max_before {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}
