//! Laurent polynomials in w and products in a quantum torus.

use std::sync::Arc;

use qtrace::omega_ring::OmegaPoly;
use qtrace::quantum_torus::{parse_element, CommutationMatrix, QTElement};

fn main() -> qtrace::Result<()> {
    let a = OmegaPoly::a();
    println!("A            = {a}");
    println!("q            = {}", OmegaPoly::q());
    println!("loop value   = {}", OmegaPoly::loop_value());
    println!("A^2 + A^-2   = {}", &a.pow(2) + &OmegaPoly::w(4));

    // Z1 Z2 = w^4 Z2 Z1
    let comm = Arc::new(CommutationMatrix::from_rows(&[vec![0, 2], vec![-2, 0]])?);
    let z1 = QTElement::weyl(comm.clone(), OmegaPoly::one(), vec![1, 0]);
    let z2 = QTElement::weyl(comm.clone(), OmegaPoly::one(), vec![0, 1]);
    let ab = z1.multiply(&z2)?;
    let ba = z2.multiply(&z1)?;
    println!("Z1 Z2        = {ab}");
    println!("Z2 Z1        = {ba}");

    let x = parse_element("(1*w^0) * [Z1^1] + (1*w^0) * [Z2^-1]", comm)?;
    let sq = x.multiply(&x)?;
    println!("(Z1 + Z2^-1)^2 = {sq}");
    println!("at w = 1       = {}", sq.specialize_commutative());
    Ok(())
}
