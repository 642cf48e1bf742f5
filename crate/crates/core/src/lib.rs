pub mod biangle;
pub mod check;
pub mod classical;
pub mod error;
pub mod flip;
pub mod io;
pub mod omega_ring;
pub mod quantum_torus;
pub mod state_sum;
pub mod surface;
pub mod triangle;

pub use error::{Error, Result};
