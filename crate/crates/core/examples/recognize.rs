//! Recognize a graph and print the certificate or obstruction.
//!
//! ```text
//! cargo run --example recognize [FILE]
//! ```
//!
//! Without a file, runs on two built-in graphs: one member and one graph
//! with a rainbow triangle.

use ecperm::{fixtures, io, recognize, ColoredGraph, Obstruction, Outcome};

fn report(name: &str, g: &ColoredGraph) {
    println!("{name}: n = {}, k = {}", g.n(), g.k());
    match recognize(g) {
        Outcome::Certificate(c) => {
            println!("  member, labeling {}", c.labeling);
            for (i, p) in c.permutations.iter().enumerate() {
                println!("  color {}: {p}", g.label_of(i as u32 + 1));
            }
        }
        Outcome::Obstruction(o) => {
            match &o {
                Obstruction::RainbowTriangle { triangle: t, .. } => {
                    println!("  rainbow triangle {}, {}, {}", t.u, t.v, t.w)
                }
                Obstruction::WideQuotient(q) => println!("  quotient of {:?} uses {} colors", q.module, q.colors.len()),
                Obstruction::NonPermQuotient { module, color, .. } => {
                    println!("  color {} is not a permutation graph inside {module:?}", g.label_of(*color))
                }
            }
            assert!(o.validate(g));
        }
    }
}

fn main() {
    match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable file");
            let g = io::read_graph(&text).unwrap_or_else(|e| panic!("{path}: {e}"));
            report(&path, &g);
        }
        None => {
            report("seven vertices, four colors", &fixtures::seven_vertex_four_colors_certified().0);
            report("rainbow with a module", &fixtures::rainbow_with_module());
        }
    }
}
