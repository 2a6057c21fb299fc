//! Dominator trees and strong articulation points: the linear-style
//! dominator method next to the delete-and-retest definition.
//!
//! ```text
//! cargo run --example dominators
//! ```

use twovsb::connectivity::strong_articulation_points_bruteforce;
use twovsb::dominators::{dominator_tree, strong_articulation_points_fast};
use twovsb::fixtures;
use twovsb::generator::{generate, GenConfig};

fn main() {
    let g = fixtures::diamond();
    let forward = dominator_tree(&g, 0).expect("root in range");
    let backward = dominator_tree(&g.reverse(), 0).expect("root in range");
    println!("DIAMOND {:?}", g.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>());
    for v in 0..g.n() {
        println!(
            "  vertex {v}: idom {:?}, idom in reverse {:?}",
            forward.idom(v),
            backward.idom(v)
        );
    }

    for (name, g) in [
        ("DIAMOND", fixtures::diamond()),
        ("BBOWTIE", fixtures::bbowtie()),
        ("BK4", fixtures::bk4()),
        ("generated n=30", generate(GenConfig::new(30, 3)).expect("n >= 4")),
    ] {
        let fast = strong_articulation_points_fast(&g).expect("strongly connected");
        let brute = strong_articulation_points_bruteforce(&g).expect("strongly connected");
        println!("{name}: strong articulation points {fast:?} (agrees with brute force: {})", fast == brute);
    }
}
