//! Classical (omega = 1) oracle: holonomy products over shear coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::quantum_torus::CommPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
    Uturn,
}

/// One step of a curve: cross `edge`, then turn; `t` counts full left turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TurnStep {
    pub edge: usize,
    pub turn: Turn,
    pub t: i32,
}

impl TurnStep {
    pub fn new(edge: usize, turn: Turn) -> Self {
        Self { edge, turn, t: 0 }
    }
}

pub type Mat2 = [[i64; 2]; 2];

/// Rows and columns are indexed `+`, `-`.
pub fn turn_matrix(step: &TurnStep) -> Mat2 {
    let e = if step.t.rem_euclid(2) == 0 { 1 } else { -1 };
    match step.turn {
        Turn::Left => [[e, e], [0, e]],
        Turn::Right => [[e, 0], [e, e]],
        Turn::Uturn => [[0, e], [-e, 0]],
    }
}

/// Positive shear weights per edge.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ShearAssignment(BTreeMap<usize, f64>);

impl ShearAssignment {
    pub fn new(x: BTreeMap<usize, f64>) -> Result<Self> {
        if let Some((e, v)) = x.iter().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(Error::Shear(format!("edge {e} has shear {v}")));
        }
        Ok(Self(x))
    }

    pub fn from_slice(x: &[f64]) -> Result<Self> {
        Self::new(x.iter().copied().enumerate().collect())
    }

    pub fn get(&self, e: usize) -> Result<f64> {
        self.0.get(&e).copied().ok_or_else(|| Error::Shear(format!("no shear for edge {e}")))
    }

    /// `Z_i = X_i^(1/2)` as a dense vector of length `n`.
    pub fn roots(&self, n: usize) -> Result<Vec<f64>> {
        (0..n).map(|e| Ok(self.0.get(&e).copied().unwrap_or(1.0).sqrt())).collect()
    }
}

/// `tr S(X_1) M_1 S(X_2) M_2 ...` with `S(X) = diag(X^1/2, X^-1/2)`.
pub fn holonomy_trace(steps: &[TurnStep], x: &ShearAssignment) -> Result<f64> {
    if steps.is_empty() {
        return Err(Error::Shear("empty turn sequence".into()));
    }
    let mut acc = [[1.0, 0.0], [0.0, 1.0]];
    for s in steps {
        let z = x.get(s.edge)?.sqrt();
        let m = turn_matrix(s);
        let sm = [
            [z * m[0][0] as f64, z * m[0][1] as f64],
            [m[1][0] as f64 / z, m[1][1] as f64 / z],
        ];
        acc = mul(&acc, &sm);
    }
    Ok(acc[0][0] + acc[1][1])
}

fn mul(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let mut c = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// `sum_s prod m_j^(s_j s_j+1) prod Z_(i_j)^(s_j)` over `n_edges` variables.
pub fn classical_state_sum(steps: &[TurnStep], n_edges: usize) -> CommPoly {
    let k = steps.len();
    let mats: Vec<Mat2> = steps.iter().map(turn_matrix).collect();
    let mut out = CommPoly::default();
    if k == 0 {
        return out;
    }
    // transfer over states, tracking the exponent vector
    for first in 0..2usize {
        let mut cur: BTreeMap<(usize, Vec<i32>), BigInt> = BTreeMap::new();
        let mut e0 = vec![0; n_edges];
        e0[steps[0].edge] += if first == 0 { 1 } else { -1 };
        cur.insert((first, e0), BigInt::from(1));
        for j in 0..k {
            let mut next = BTreeMap::new();
            for ((s, ex), c) in &cur {
                for t in 0..2usize {
                    let m = mats[j][*s][t];
                    if m == 0 {
                        continue;
                    }
                    if j + 1 == k {
                        if t != first {
                            continue;
                        }
                        *next.entry((t, ex.clone())).or_insert_with(|| BigInt::from(0)) += c * m;
                    } else {
                        let mut ex = ex.clone();
                        ex[steps[j + 1].edge] += if t == 0 { 1 } else { -1 };
                        *next.entry((t, ex)).or_insert_with(|| BigInt::from(0)) += c * m;
                    }
                }
            }
            cur = next;
        }
        for ((_, ex), c) in cur {
            out.add_term(ex, c);
        }
    }
    out
}
