//! Random walk through the good-position moves on the torus.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtrace::check;
use qtrace::state_sum::random::{random_link, RandomParams};
use qtrace::surface::standard;

fn main() -> qtrace::Result<()> {
    let tri = Arc::new(standard::punctured_torus());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = RandomParams { max_arcs_per_face: 2, max_crossings_per_edge: 1, max_boundary_points: 0 };
    let link = random_link(&mut rng, &tri, p);
    println!("{} arcs, crossings per edge {:?}", link.arc_count(), link.crossing_counts());
    for a in check::moves(&link, 5, 15)? {
        println!("{} {}", if a.ok { "ok  " } else { "FAIL" }, a.what);
    }
    Ok(())
}
