//! Gallai colorings, symbolic ultrametrics and separable permutations.

use ecperm::classes::{
    check_ultrametric_axioms, is_cograph, is_gallai, is_separable, is_symbolic_ultrametric_graph, SymbolicMap,
};
use ecperm::{fixtures, recognize, ColoredGraph, Permutation, SimpleGraph};

fn row(name: &str, g: &ColoredGraph) {
    println!(
        "{name:<28} gallai {:<5} ultrametric {:<5} member {}",
        is_gallai(g),
        is_symbolic_ultrametric_graph(g),
        recognize(g).is_member()
    );
}

fn main() {
    row("monochromatic K5", &ColoredGraph::monochromatic(5));
    row("two-colored P4", &fixtures::two_colored_p4());
    row("eight vertices", &fixtures::eight_vertex_three_colors());
    row("rainbow K3", &fixtures::rainbow_k3());

    let d =
        SymbolicMap::from_matrix(&[vec![0, 1, 2, 2], vec![1, 0, 2, 2], vec![2, 2, 0, 1], vec![2, 2, 1, 0]]).unwrap();
    println!("axioms {} / graph test {}", check_ultrametric_axioms(&d), is_symbolic_ultrametric_graph(d.graph()));

    for p in ["(2,1,4,3)", "(3,1,4,2)", "(2,4,1,3)", "(4,3,2,1)"] {
        let p: Permutation = p.parse().unwrap();
        println!("{p} separable {}", is_separable(&p));
    }
    println!("C4 cograph {}, C5 cograph {}", is_cograph(&SimpleGraph::cycle(4)), is_cograph(&SimpleGraph::cycle(5)));
}
