//! Classical trace of a torus curve from shear coordinates.

use qtrace::classical::{classical_state_sum, holonomy_trace, ShearAssignment, Turn, TurnStep};

fn main() -> qtrace::Result<()> {
    let steps = [TurnStep::new(0, Turn::Left), TurnStep::new(1, Turn::Right)];
    let poly = classical_state_sum(&steps, 3);
    println!("state sum: {poly}");

    for x in [[1.0, 1.0, 1.0], [2.0, 0.5, 3.0], [0.1, 7.0, 1.5]] {
        let sh = ShearAssignment::from_slice(&x)?;
        let v = poly.eval(&sh.roots(3)?);
        let h = holonomy_trace(&steps, &sh)?;
        println!("X = {x:?}: {v:.9} (holonomy {h:.9})");
    }
    Ok(())
}
