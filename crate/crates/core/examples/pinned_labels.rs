//! Fix the quotient labelings by hand and get exactly the certificate they
//! induce.

use ecperm::recognizer::{build_prec, QuotientLabelings};
use ecperm::{decompose, fixtures, Recognizer};

fn main() {
    let g = fixtures::eight_vertex_three_colors();
    let orders = fixtures::eight_vertex_quotient_orders();
    for (module, order) in &orders {
        println!("module {module:?}: children in order {order:?}");
    }

    let tree = decompose(&g);
    let labelings = QuotientLabelings::from_orders(&tree, &orders).unwrap();
    let names = "abcdefgh".as_bytes();
    let prec = build_prec(&tree, &labelings).unwrap();
    let order: String = prec.order().iter().map(|&v| names[v] as char).collect();
    println!("vertex order {order}");

    let outcome = Recognizer::new().pins(orders).run(&g).unwrap();
    let cert = outcome.certificate().unwrap();
    for (i, p) in cert.permutations.iter().enumerate() {
        println!("pi_{} = {p}", i + 1);
    }
    assert_eq!(cert.permutations, fixtures::eight_vertex_permutations());
}
