//! Recognition time on generated members of growing size.
//!
//! ```text
//! cargo run --release --example scaling
//! ```

use std::time::Instant;

use ecperm::oracle::{random_instances, Profile};
use ecperm::recognize;

fn main() {
    let mut prev = None;
    for n in [125, 250, 500, 1000, 2000] {
        let g = random_instances(n as u64, n, 4, Profile::FromPermutations).next().unwrap();
        let start = Instant::now();
        let outcome = recognize(&g);
        let secs = start.elapsed().as_secs_f64();
        assert!(outcome.is_member());
        let ratio = prev.map_or(String::new(), |p: f64| format!("  x{:.2}", secs / p));
        println!("n = {n:>5}  k = {}  {:.4}s{ratio}", g.k(), secs);
        prev = Some(secs);
    }
}
