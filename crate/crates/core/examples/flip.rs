//! Flipping the diagonal of the square: transfer vs direct trace.

use std::collections::BTreeMap;
use std::sync::Arc;

use qtrace::flip::{block_trace, reposition_link, transfer_trace, Side};
use qtrace::state_sum::{quantum_trace, BoundaryState, GoodPositionLink};
use qtrace::surface::standard;
use qtrace::triangle::TriangleArc;

fn main() -> qtrace::Result<()> {
    let sq = Arc::new(standard::square());
    let d = sq.edge_index("d").unwrap();
    // s2 -> d -> s4 and a corner arc s5 -> s2 above it
    let arcs = vec![
        TriangleArc::new(0, 0, 1, 0)?,
        TriangleArc::new(0, 2, 0, 1)?,
        TriangleArc::new(1, 0, 2, 0)?,
    ];
    let link = GoodPositionLink::new(sq.clone(), arcs, BTreeMap::new())?;
    let moved = reposition_link(&link, d)?;
    for s in BoundaryState::all(&link) {
        let before = quantum_trace(&link, &s)?;
        let blocks = block_trace(&link, d, &s, Side::Source)?;
        let via = transfer_trace(&link, d, &s)?;
        let direct = quantum_trace(&moved, &s)?;
        let tag = if via == direct && blocks == before { "ok" } else { "MISMATCH" };
        println!("{:<18} {tag:<8} {via}", s.describe(&sq));
    }
    Ok(())
}
