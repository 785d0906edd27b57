//! Cross-check recognition against exhaustive search on random small graphs.

use ecperm::oracle::{brute_force_recognize, random_instances, Profile};
use ecperm::recognize;

fn main() {
    for profile in [Profile::Uniform, Profile::GallaiSubstitution, Profile::FromPermutations] {
        let (mut members, mut total) = (0, 0);
        for g in random_instances(42, 6, 3, profile).take(500) {
            let fast = recognize(&g).is_member();
            let slow = brute_force_recognize(&g).unwrap().is_some();
            assert_eq!(fast, slow);
            members += fast as usize;
            total += 1;
        }
        println!("{profile:?}: {members}/{total} members, no disagreements");
    }
}
