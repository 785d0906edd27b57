//! Induced subgraphs of members are members, and the certificate restricts
//! along with the graph.

use ecperm::recognizer::restrict;
use ecperm::{fixtures, recognize, Certificate};

fn main() {
    let (g, labeling, perms) = fixtures::seven_vertex_four_colors_certified();
    let cert = Certificate::new(labeling, perms);
    for subset in [vec![0, 1, 2], vec![0, 3, 5, 6], vec![1, 2, 4, 5, 6]] {
        let r = restrict(&g, &cert, &subset).unwrap();
        println!(
            "{subset:?}: k = {}, colors {:?}, labeling {}, verifies {}",
            r.graph.k(),
            r.color_map,
            r.certificate.labeling,
            r.certificate.verifies(&r.graph)
        );
        assert!(recognize(&r.graph).is_member());
    }
}
