//! Modular decomposition: strong modules, their kinds and quotients.
//!
//! ```text
//! cargo run --example decompose            # text tree
//! cargo run --example decompose -- --dot   # Graphviz
//! ```

use ecperm::md::lca_table;
use ecperm::{decompose, fixtures};

fn main() {
    let g = fixtures::nested_modules();
    let tree = decompose(&g);
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", tree.to_dot());
        return;
    }
    print!("{}", tree.to_text());

    for id in tree.inner_nodes() {
        let q = tree.quotient(id).unwrap();
        println!("{:?} {}: representatives {:?}", tree.members(id), tree.kind(id), q.representatives);
    }

    let lca = lca_table(&tree);
    for (u, v) in [(3, 4), (0, 5), (2, 4)] {
        let (a, b) = lca.children(u, v);
        println!(
            "lowest module over {u},{v}: {:?}, split into {:?} and {:?}",
            tree.members(lca.module(u, v)),
            tree.members(a),
            tree.members(b)
        );
    }
}
