//! Build the graph of a labeling and one permutation per color, then check
//! that recognition finds it again.

use ecperm::{generate_colored, io, recognize, Labeling, Permutation};

fn main() {
    let perms: Vec<Permutation> = ["(6,3,7,4,2,5,1)", "(1,5,2,4,7,3,6)"].iter().map(|s| s.parse().unwrap()).collect();
    let g = generate_colored(&Labeling::identity(7), &perms).expect("the two inversion sets partition the pairs");
    print!("{}", io::write_ecg(&g));

    let cert = recognize(&g).certificate().cloned().expect("generated graphs are members");
    println!("# recognized with labeling {}", cert.labeling);
    for p in &cert.permutations {
        println!("#   {p}");
    }

    // overlapping inversion sets are rejected
    let bad: Vec<Permutation> = ["(2,1,3)", "(3,1,2)"].iter().map(|s| s.parse().unwrap()).collect();
    println!("# overlapping tuple: {}", generate_colored(&Labeling::identity(3), &bad).unwrap_err());
}
