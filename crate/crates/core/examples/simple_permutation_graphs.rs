//! Recognize uncolored permutation graphs and lift them to two colors.

use ecperm::perm::{inversion_graph, two_color_lift};
use ecperm::{recognize_simple, SimpleGraph};

fn main() {
    let graphs = [
        ("P4", SimpleGraph::path(4)),
        ("C4", SimpleGraph::cycle(4)),
        ("C5", SimpleGraph::cycle(5)),
        ("C6", SimpleGraph::cycle(6)),
    ];
    for (name, h) in graphs {
        match recognize_simple(&h) {
            Some((l, p)) => {
                assert_eq!(inversion_graph(&l, &p).unwrap(), h);
                let lift = two_color_lift(&h, &l, &p).unwrap();
                println!("{name}: labeling {l}, permutation {p}, lift {:?}", lift.permutations);
            }
            None => println!("{name}: not a permutation graph"),
        }
    }
}
