//! Quantum traces of a few links on the triangle, square and torus.

use std::collections::BTreeMap;
use std::sync::Arc;

use qtrace::biangle::Sign;
use qtrace::state_sum::{quantum_trace, BoundaryState, GoodPositionLink};
use qtrace::surface::standard;
use qtrace::triangle::TriangleArc;

fn arc(f: usize, a: usize, b: usize) -> TriangleArc {
    TriangleArc::new(f, a, b, 0).unwrap()
}

fn main() -> qtrace::Result<()> {
    let tri = Arc::new(standard::triangle());
    let corner = GoodPositionLink::new(tri.clone(), vec![arc(0, 0, 1)], BTreeMap::new())?;
    println!("corner arc, all states:");
    for s in BoundaryState::all(&corner) {
        println!("  {:<10} {}", s.describe(&tri), quantum_trace(&corner, &s)?);
    }

    let sq = Arc::new(standard::square());
    let strand = GoodPositionLink::new(sq.clone(), vec![arc(0, 0, 1), arc(1, 0, 2)], BTreeMap::new())?;
    let plus = BoundaryState::constant(&strand, Sign::Plus);
    println!("\nsquare strand s2 -> s4, {}:", plus.describe(&sq));
    println!("  {}", quantum_trace(&strand, &plus)?);

    let torus = Arc::new(standard::punctured_torus());
    let curve = GoodPositionLink::new(torus, vec![arc(0, 0, 1), arc(1, 0, 1)], BTreeMap::new())?;
    let t = quantum_trace(&curve, &BoundaryState::default())?;
    println!("\nsimple closed curve on the torus:\n  {t}");
    println!("  at w = 1: {}", t.specialize_commutative());
    Ok(())
}
