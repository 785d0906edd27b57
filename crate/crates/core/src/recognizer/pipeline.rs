use rayon::prelude::*;

use crate::graph::{Color, ColoredGraph, Triangle, Vertex};
use crate::md::{lca_table, LcaTable, MdTree, ModuleKind, NodeId};
use crate::perm::{
    is_sorted_pairwise, merge_sort_by, permutation_from_order, realize_prime, realizing_permutations, verify,
    Certificate, Labeling, Permutation,
};

use super::{Obstruction, QuotientLabelings, RecognizerError, WideQuotient};

/// Largest vertex count for the pairwise re-check of sorted color orders in
/// debug builds.
const PAIRWISE_CHECK_LIMIT: usize = 64;

pub(crate) struct Options<'a> {
    pub jobs: usize,
    pub pinned: &'a QuotientLabelings,
}

pub(crate) enum Failure {
    Obstruction(Obstruction),
    BadPin(NodeId),
}

/// Runs the recognition pipeline on a decomposed graph.
///
/// # Panics
///
/// Panics if the assembled certificate fails verification, which would be a
/// bug in the pipeline rather than a property of the input.
pub(crate) fn certify(g: &ColoredGraph, tree: &MdTree, opts: &Options<'_>) -> Result<Certificate, Failure> {
    for id in tree.inner_nodes() {
        let q = tree.quotient(id).expect("inner node has a quotient");
        if q.graph.k() >= 3 {
            return Err(Failure::Obstruction(wide_obstruction(g, tree, id)));
        }
    }

    let ids: Vec<NodeId> = tree.inner_nodes().collect();
    let mut labelings = QuotientLabelings::new();
    if opts.jobs > 1 && ids.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("thread pool");
        let results: Vec<_> =
            pool.install(|| ids.par_iter().map(|&id| label_quotient(tree, id, opts.pinned)).collect());
        for (&id, r) in ids.iter().zip(results) {
            labelings.insert(id, r?);
        }
    } else {
        for &id in &ids {
            labelings.insert(id, label_quotient(tree, id, opts.pinned)?);
        }
    }

    let labeling = build_prec(tree, &labelings).expect("every inner node is labeled");
    let lca = lca_table(tree);
    let perms: Vec<Permutation> = (1..=g.k() as Color)
        .map(|c| build_color_order(g, tree, &lca, &labeling, c).expect("color orders are total"))
        .collect();
    assert_eq!(verify(g, &labeling, &perms), Ok(true), "assembled certificate must verify");
    Ok(Certificate::new(labeling, perms))
}

/// Lifts a rainbow triangle of a wide prime quotient to `g`.
fn wide_obstruction(g: &ColoredGraph, tree: &MdTree, id: NodeId) -> Obstruction {
    let q = tree.quotient(id).expect("inner node has a quotient");
    let wide = WideQuotient {
        module: tree.members(id).to_vec(),
        representatives: q.representatives.clone(),
        colors: q.palette.clone(),
    };
    match q.graph.find_rainbow_triangle() {
        Some(t) => {
            let mut vs = [q.representatives[t.u], q.representatives[t.v], q.representatives[t.w]];
            vs.sort_unstable();
            let [u, v, w] = vs;
            let triangle = Triangle { u, v, w, colors: [g.color(u, v), g.color(u, w), g.color(v, w)] };
            Obstruction::RainbowTriangle { triangle, quotient: Some(wide) }
        }
        None => Obstruction::WideQuotient(wide),
    }
}

/// Chooses the labeling of one quotient: the pinned one if given, the
/// children in representative order for series nodes, and a realization of
/// the first color class for prime nodes.
fn label_quotient(tree: &MdTree, id: NodeId, pinned: &QuotientLabelings) -> Result<Labeling, Failure> {
    let q = tree.quotient(id).expect("inner node has a quotient");
    let pin = pinned.get(id);
    if tree.kind(id) == ModuleKind::Series {
        return Ok(pin.cloned().unwrap_or_else(|| Labeling::identity(q.graph.n())));
    }
    let h = q.graph.monochromatic_subgraph(1).expect("prime quotient has two colors");
    let failed = || {
        Failure::Obstruction(Obstruction::NonPermQuotient {
            module: tree.members(id).to_vec(),
            representatives: q.representatives.clone(),
            color: q.global_color(1),
        })
    };
    match pin {
        Some(l) if realizing_permutations(&q.graph, l).is_some() => Ok(l.clone()),
        Some(_) if realize_prime(&h).is_none() => Err(failed()),
        Some(_) => Err(Failure::BadPin(id)),
        None => realize_prime(&h).map(|(l, _)| l).ok_or_else(failed),
    }
}

/// The vertex labeling obtained by walking the tree depth-first and visiting
/// the children of every node in increasing order of their quotient labels.
pub fn build_prec(tree: &MdTree, labelings: &QuotientLabelings) -> Result<Labeling, RecognizerError> {
    let mut label_of = vec![0; tree.vertex_count()];
    let mut next = 1;
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let kids = tree.children(id);
        if kids.is_empty() {
            label_of[tree.representative(id)] = next;
            next += 1;
            continue;
        }
        let l = labelings.get(id).filter(|l| l.len() == kids.len()).ok_or(RecognizerError::IncompleteLabelings(id))?;
        for i in l.order().into_iter().rev() {
            stack.push(kids[i]);
        }
    }
    Ok(Labeling::new(label_of).expect("depth-first labels are a bijection"))
}

/// The permutation of color `color`: vertices sorted so that, for
/// `ℓ(u) > ℓ(v)`, `u` precedes `v` exactly when the quotient pair separating
/// them has this color.
pub fn build_color_order(
    g: &ColoredGraph,
    tree: &MdTree,
    lca: &LcaTable,
    labeling: &Labeling,
    color: Color,
) -> Result<Permutation, RecognizerError> {
    let less = |u: Vertex, v: Vertex| {
        if u == v {
            return false;
        }
        let (a, b) = lca.children(u, v);
        let c = g.color(tree.representative(a), tree.representative(b));
        (labeling.label(u) > labeling.label(v)) == (c == color)
    };
    let mut order = labeling.order();
    merge_sort_by(&mut order, &less).ok_or(RecognizerError::NotTotalOrder(color))?;
    if cfg!(debug_assertions) && order.len() <= PAIRWISE_CHECK_LIMIT && !is_sorted_pairwise(&order, &less) {
        return Err(RecognizerError::NotTotalOrder(color));
    }
    Ok(permutation_from_order(labeling, &order))
}
