//! Small named instances shared by tests, examples and the CLI.

use crate::graph::{ColoredGraph, Vertex};
use crate::perm::{generate_colored, Labeling, Permutation};

fn perm(s: &str) -> Permutation {
    s.parse().expect("fixture permutation")
}

fn graph(n: usize, classes: &[&[(Vertex, Vertex)]], rest: Option<u64>) -> ColoredGraph {
    let mut table = vec![0u64; n * n];
    for (i, class) in classes.iter().enumerate() {
        for &(u, v) in *class {
            table[u * n + v] = i as u64 + 1;
            table[v * n + u] = i as u64 + 1;
        }
    }
    ColoredGraph::from_fn(n, |u, v| match table[u * n + v] {
        0 => rest.expect("fixture pair left uncolored"),
        c => c,
    })
}

/// Seven vertices, four colors, strong modules `{0..6}`, `{0,1}`, `{2,3,4}`
/// and `{3,4}`. The root is prime; the others are series.
pub fn nested_modules() -> ColoredGraph {
    let e1: &[_] = &[(0, 5), (1, 5), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)];
    let e2: &[_] = &[(2, 3), (2, 4)];
    let e3: &[_] = &[];
    let e4: &[_] = &[(0, 1)];
    graph(7, &[e1, e2, e3, e4], Some(3))
}

/// Six vertices `a..f`, four colors. `{a,b,c}` is the only non-trivial strong
/// module, `{d,e,f}` is a rainbow triangle and color 1 is disconnected.
pub fn rainbow_with_module() -> ColoredGraph {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    let c1: &[_] = &[(a, d), (b, d), (c, d)];
    let c2: &[_] = &[(a, b), (b, c), (a, c), (d, e), (a, f), (b, f), (c, f)];
    let c3: &[_] = &[(d, f), (a, e), (b, e), (c, e)];
    let c4: &[_] = &[(e, f)];
    graph(6, &[c1, c2, c3, c4], None)
}

/// Labeling of [`eight_vertex_three_colors`]; vertices `a..h` in label order
/// `e, d, b, c, a, h, g, f`.
pub fn eight_vertex_labeling() -> Labeling {
    Labeling::new(vec![5, 3, 4, 2, 1, 8, 7, 6]).expect("bijective")
}

pub fn eight_vertex_permutations() -> Vec<Permutation> {
    vec![perm("(1,3,5,2,4,7,6,8)"), perm("(6,7,1,8,4,2,5,3)"), perm("(2,3,4,5,8,1,6,7)")]
}

/// Eight vertices `a..h`, three colors, generated from
/// [`eight_vertex_labeling`] and [`eight_vertex_permutations`].
pub fn eight_vertex_three_colors() -> ColoredGraph {
    generate_colored(&eight_vertex_labeling(), &eight_vertex_permutations()).expect("fixture generates")
}

/// Quotient labelings that make the pipeline reproduce
/// [`eight_vertex_permutations`] on [`eight_vertex_three_colors`]. Each entry
/// is a strong module and its children's representatives in label order.
pub fn eight_vertex_quotient_orders() -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    QUOTIENT_ORDERS.iter().map(|(m, o)| (m.to_vec(), o.to_vec())).collect()
}

const QUOTIENT_ORDERS: &[(&[Vertex], &[Vertex])] =
    &[(&[0, 1, 2, 3, 4, 5, 6, 7], &[4, 0, 6, 5]), (&[0, 1, 2, 3], &[3, 1, 2, 0]), (&[6, 7], &[7, 6])];

/// Seven vertices, four colors, identity labeling.
pub fn seven_vertex_four_colors_certified() -> (ColoredGraph, Labeling, Vec<Permutation>) {
    let l = Labeling::identity(7);
    let perms =
        vec![perm("(2,1,3,4,7,5,6)"), perm("(4,1,2,3,5,6,7)"), perm("(1,2,3,4,6,5,7)"), perm("(5,6,7,3,1,2,4)")];
    let g = generate_colored(&l, &perms).expect("fixture generates");
    (g, l, perms)
}

/// `K₃` with three distinct colors.
pub fn rainbow_k3() -> ColoredGraph {
    ColoredGraph::from_assignments(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).expect("complete")
}

/// Two-colored `K₄` whose first color class is the path `0-1-2-3`.
pub fn two_colored_p4() -> ColoredGraph {
    crate::graph::SimpleGraph::path(4).to_colored()
}
