//! Leading terms of simple multicurves on the torus.

use std::collections::BTreeMap;
use std::sync::Arc;

use qtrace::quantum_torus::TermOrder;
use qtrace::state_sum::{quantum_trace, BoundaryState, GoodPositionLink};
use qtrace::surface::standard;
use qtrace::triangle::TriangleArc;

fn main() -> qtrace::Result<()> {
    let tri = Arc::new(standard::punctured_torus());
    // corner counts (c12, c23, c13) in each face
    for (c12, c23, c13) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 1, 0), (2, 0, 1)] {
        let mut arcs = Vec::new();
        for f in 0..2 {
            for (n, a, b) in [(c12, 0, 1), (c23, 1, 2), (c13, 0, 2)] {
                for _ in 0..n {
                    arcs.push(TriangleArc::new(f, a, b, arcs.len() as i64)?);
                }
            }
        }
        let link = GoodPositionLink::new(tri.clone(), arcs, BTreeMap::new())?;
        let k = link.leading_intersection_vector()?;
        let t = quantum_trace(&link, &BoundaryState::default())?;
        let lt = t.leading_term(TermOrder::DegLex)?;
        println!("{k:?}: leading {:?} coefficient {} ({} terms)", lt.exps, t.weyl_coeff(&lt.exps), t.len());
    }
    Ok(())
}
