//! Decomposition by vertex partitioning.
//!
//! For a set `S` and `v = min S`, the maximal modules of `G[S]` avoiding `v`
//! are found by partition refinement, decomposed recursively, and then
//! assembled into the chain of strong modules containing `v` using the
//! forcing graph on those parts: part `a` forces part `b` when `a` sees `b`
//! in a different color than `v` does, so every module containing `v` and
//! `a` also contains `b`.

use std::collections::VecDeque;

use crate::graph::{Color, ColoredGraph, Vertex};

use super::{MdNode, MdTree, ModuleKind, NodeId, Quotient};

const NONE: usize = usize::MAX;

struct Frame {
    v: Vertex,
    parts: Vec<Vec<Vertex>>,
    /// Frame index of each part with at least two vertices.
    sub: Vec<usize>,
}

struct Raw {
    children: Vec<usize>,
    series: Option<Color>,
    min: Vertex,
}

/// Computes the modular decomposition tree of `g`.
pub fn decompose(g: &ColoredGraph) -> MdTree {
    let n = g.n();
    let mut refiner = Refiner::new(g);
    let mut sets: Vec<Vec<Vertex>> = vec![(0..n).collect()];
    let mut frames: Vec<Frame> = Vec::new();
    let mut f = 0;
    while f < sets.len() {
        let set = std::mem::take(&mut sets[f]);
        let frame = if set.len() == 1 {
            Frame { v: set[0], parts: Vec::new(), sub: Vec::new() }
        } else {
            let v = set[0];
            let parts = refiner.maximal_modules_avoiding(&set, v);
            let mut sub = Vec::with_capacity(parts.len());
            for part in &parts {
                if part.len() > 1 {
                    sub.push(sets.len());
                    sets.push(part.clone());
                } else {
                    sub.push(NONE);
                }
            }
            Frame { v, parts, sub }
        };
        frames.push(frame);
        f += 1;
    }

    let mut raw: Vec<Raw> = Vec::new();
    let mut root_of = vec![NONE; frames.len()];
    for f in (0..frames.len()).rev() {
        root_of[f] = assemble(g, &frames[f], &root_of, &mut raw);
    }
    finalize(g, &raw, root_of[0])
}

fn leaf(raw: &mut Vec<Raw>, v: Vertex) -> usize {
    raw.push(Raw { children: Vec::new(), series: None, min: v });
    raw.len() - 1
}

/// Builds the subtree for one frame from the subtrees of its parts.
fn assemble(g: &ColoredGraph, frame: &Frame, root_of: &[usize], raw: &mut Vec<Raw>) -> usize {
    let v = frame.v;
    if frame.parts.is_empty() {
        return leaf(raw, v);
    }
    let p = frame.parts.len();
    let reps: Vec<Vertex> = frame.parts.iter().map(|x| x[0]).collect();
    let roots: Vec<usize> = (0..p)
        .map(|a| match frame.sub[a] {
            NONE => leaf(raw, reps[a]),
            s => root_of[s],
        })
        .collect();
    let succ: Vec<Vec<usize>> = (0..p)
        .map(|a| (0..p).filter(|&b| b != a && g.color(reps[a], reps[b]) != g.color(v, reps[b])).collect())
        .collect();
    let (comp, ncomp) = tarjan(&succ);
    let boundaries = strong_prefixes(&succ, &comp, ncomp);

    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for a in 0..p {
        by_comp[comp[a]].push(a);
    }
    let mut cur = leaf(raw, v);
    let mut lo = 0;
    for hi in boundaries {
        let layer: Vec<usize> = by_comp[lo..hi].iter().flatten().copied().collect();
        let mut colors = layer.iter().map(|&a| g.color(v, reps[a])).chain(
            layer
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| layer[i + 1..].iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.color(reps[a], reps[b])),
        );
        let first = colors.next().expect("layer is non-empty");
        let series = colors.all(|c| c == first).then_some(first);
        let mut children = vec![cur];
        for &a in &layer {
            let r = roots[a];
            if series.is_some() && raw[r].series == series {
                children.extend_from_slice(&raw[r].children);
            } else {
                children.push(r);
            }
        }
        let min = children.iter().map(|&c| raw[c].min).min().expect("non-empty");
        raw.push(Raw { children, series, min });
        cur = raw.len() - 1;
        lo = hi;
    }
    cur
}

/// Strongly connected components in the order Tarjan's algorithm completes
/// them, so every arc goes from a component to one with a smaller or equal
/// index.
fn tarjan(succ: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let p = succ.len();
    let mut index = vec![NONE; p];
    let mut low = vec![0; p];
    let mut on_stack = vec![false; p];
    let mut comp = vec![NONE; p];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    for start in 0..p {
        if index[start] != NONE {
            continue;
        }
        call.push((start, 0));
        while let Some(&mut (a, ref mut next)) = call.last_mut() {
            if *next == 0 {
                index[a] = counter;
                low[a] = counter;
                counter += 1;
                stack.push(a);
                on_stack[a] = true;
            }
            if *next < succ[a].len() {
                let b = succ[a][*next];
                *next += 1;
                if index[b] == NONE {
                    call.push((b, 0));
                } else if on_stack[b] {
                    low[a] = low[a].min(index[b]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[a]);
            }
            if low[a] == index[a] {
                loop {
                    let b = stack.pop().expect("component on stack");
                    on_stack[b] = false;
                    comp[b] = ncomp;
                    if b == a {
                        break;
                    }
                }
                ncomp += 1;
            }
        }
    }
    (comp, ncomp)
}

/// Lengths `j` such that components `0..j` form a strong module together
/// with `v`: every later component must reach all of them.
fn strong_prefixes(succ: &[Vec<usize>], comp: &[usize], ncomp: usize) -> Vec<usize> {
    let words = ncomp.div_ceil(64);
    let mut reach = vec![0u64; ncomp * words];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (a, &c) in comp.iter().enumerate() {
        members[c].push(a);
    }
    let mut stamp = vec![NONE; ncomp];
    for c in 0..ncomp {
        reach[c * words + c / 64] |= 1 << (c % 64);
        for &a in &members[c] {
            for &b in &succ[a] {
                let d = comp[b];
                if d != c && stamp[d] != c {
                    stamp[d] = c;
                    let (head, tail) = reach.split_at_mut(c * words);
                    for w in 0..words {
                        tail[w] |= head[d * words + w];
                    }
                }
            }
        }
    }
    // number of leading components reached
    let full: Vec<usize> = (0..ncomp)
        .map(|c| {
            let row = &reach[c * words..(c + 1) * words];
            match row.iter().position(|&w| w != u64::MAX) {
                Some(w) => w * 64 + row[w].trailing_ones() as usize,
                None => words * 64,
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut suffix_min = usize::MAX;
    for j in (1..=ncomp).rev() {
        if suffix_min >= j {
            out.push(j);
        }
        suffix_min = suffix_min.min(full[j - 1]);
    }
    out.reverse();
    out
}

/// Renumbers the raw tree breadth-first and attaches quotients.
fn finalize(g: &ColoredGraph, raw: &[Raw], root: usize) -> MdTree {
    let n = g.n();
    let mut order = vec![root];
    let mut parent = vec![None];
    let mut i = 0;
    while i < order.len() {
        let mut kids = raw[order[i]].children.clone();
        kids.sort_unstable_by_key(|&c| raw[c].min);
        for c in kids {
            order.push(c);
            parent.push(Some(NodeId(i)));
        }
        i += 1;
    }
    let count = order.len();
    let mut children: Vec<Vec<NodeId>> = vec![Vec::new(); count];
    for (id, p) in parent.iter().enumerate() {
        if let Some(p) = p {
            children[p.0].push(NodeId(id));
        }
    }
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); count];
    let mut leaf = vec![NodeId(0); n];
    for id in (0..count).rev() {
        if children[id].is_empty() {
            let v = raw[order[id]].min;
            members[id] = vec![v];
            leaf[v] = NodeId(id);
        } else {
            let mut m: Vec<Vertex> = children[id].iter().flat_map(|c| members[c.0].iter().copied()).collect();
            m.sort_unstable();
            members[id] = m;
        }
    }
    let nodes = (0..count)
        .zip(members)
        .zip(children)
        .zip(parent)
        .map(|(((id, members), children), parent)| {
            if children.is_empty() {
                return MdNode { members, parent, children, kind: ModuleKind::Leaf, quotient: None };
            }
            let reps = children.iter().map(|&c| raw[order[c.0]].min).collect();
            let q = Quotient::of(g, reps);
            let kind = if q.graph.k() == 1 { ModuleKind::Series } else { ModuleKind::Prime };
            debug_assert_eq!(kind == ModuleKind::Series, raw[order[id]].series.is_some());
            MdNode { members, parent, children, kind, quotient: Some(q) }
        })
        .collect();
    MdTree { n, nodes, leaf }
}

/// Partition refinement over the vertices of one set.
struct Refiner<'g> {
    g: &'g ColoredGraph,
    part_of: Vec<usize>,
    bucket: Vec<usize>,
    seen: Vec<usize>,
    epoch: usize,
}

impl<'g> Refiner<'g> {
    fn new(g: &'g ColoredGraph) -> Self {
        Self { g, part_of: vec![NONE; g.n()], bucket: vec![NONE; g.k() + 1], seen: Vec::new(), epoch: 0 }
    }

    /// Groups `items` by their color to `x`, in order of first occurrence.
    fn group_by_color(&mut self, items: &[Vertex], x: Vertex) -> Vec<Vec<Vertex>> {
        let row = self.g.row(x);
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        for &y in items {
            let c = row[y] as usize;
            if self.bucket[c] == NONE {
                self.bucket[c] = groups.len();
                groups.push(Vec::new());
            }
            groups[self.bucket[c]].push(y);
        }
        for group in &groups {
            self.bucket[row[group[0]] as usize] = NONE;
        }
        groups
    }

    /// The maximal modules of `G[set]` that do not contain `v`, each sorted.
    fn maximal_modules_avoiding(&mut self, set: &[Vertex], v: Vertex) -> Vec<Vec<Vertex>> {
        let rest: Vec<Vertex> = set.iter().copied().filter(|&x| x != v).collect();
        let mut parts = self.group_by_color(&rest, v);
        for (i, part) in parts.iter().enumerate() {
            for &y in part {
                self.part_of[y] = i;
            }
        }
        let mut events: VecDeque<Vec<Vec<Vertex>>> = VecDeque::new();
        if parts.len() > 1 {
            events.push_back(parts.clone());
        }
        while let Some(pieces) = events.pop_front() {
            for (i, piece) in pieces.iter().enumerate() {
                for &x in piece {
                    for (j, other) in pieces.iter().enumerate() {
                        if i != j {
                            self.pivot(x, other, &mut parts, &mut events);
                        }
                    }
                }
            }
        }
        for part in &mut parts {
            part.sort_unstable();
            for &y in part.iter() {
                self.part_of[y] = NONE;
            }
        }
        parts
    }

    /// Splits every current part inside `piece` by color to `x`.
    fn pivot(
        &mut self,
        x: Vertex,
        piece: &[Vertex],
        parts: &mut Vec<Vec<Vertex>>,
        events: &mut VecDeque<Vec<Vec<Vertex>>>,
    ) {
        self.epoch += 1;
        for &y in piece {
            let q = self.part_of[y];
            if self.seen.len() <= q {
                self.seen.resize(q + 1, 0);
            }
            if self.seen[q] == self.epoch {
                continue;
            }
            self.seen[q] = self.epoch;
            if parts[q].len() < 2 {
                continue;
            }
            let groups = self.group_by_color(&parts[q], x);
            if groups.len() < 2 {
                continue;
            }
            for group in &groups[1..] {
                let id = parts.len();
                for &z in group {
                    self.part_of[z] = id;
                }
                parts.push(group.clone());
            }
            parts[q] = groups[0].clone();
            events.push_back(groups);
        }
    }
}
