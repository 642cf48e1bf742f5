//! Traces of constant-elevation arcs in a triangle face.

use std::sync::Arc;

use crate::biangle::Sign;
use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;
use crate::quantum_torus::{weyl_order, CommutationMatrix, QTElement, QTMonomial};
use crate::surface::Slot;

/// Corner orientation switch. With `false`, at the corner between slot `a`
/// and the next slot clockwise, slot `a` is the first side met turning
/// counterclockwise.
pub const CCW_FIRST_IS_NEXT: bool = false;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleArc {
    pub face: usize,
    pub slot_in: usize,
    pub slot_out: usize,
    pub elev: i64,
}

impl TriangleArc {
    pub fn new(face: usize, slot_in: usize, slot_out: usize, elev: i64) -> Result<Self> {
        if slot_in == slot_out || slot_in > 2 || slot_out > 2 {
            return Err(Error::Link(format!(
                "arc in face {} joins slots {} and {}",
                face + 1,
                slot_in + 1,
                slot_out + 1
            )));
        }
        Ok(Self { face, slot_in, slot_out, elev })
    }

    pub fn slot(&self, end: usize) -> Slot {
        Slot::new(self.face, if end == 0 { self.slot_in } else { self.slot_out })
    }

    /// `(first, second)` side positions at the corner cut off by the arc.
    pub fn corner(&self) -> (usize, usize) {
        corner_order(self.slot_in, self.slot_out)
    }

    pub fn touches(&self, pos: usize) -> bool {
        self.slot_in == pos || self.slot_out == pos
    }

    /// The position not touched by the arc.
    pub fn free_side(&self) -> usize {
        3 - self.slot_in - self.slot_out
    }
}

/// Orders two side positions as (counterclockwise-first, other).
pub fn corner_order(a: usize, b: usize) -> (usize, usize) {
    let a_then_b = (a + 1) % 3 == b;
    if a_then_b != CCW_FIRST_IS_NEXT {
        (a, b)
    } else {
        (b, a)
    }
}

/// Trace of one corner arc, as a monomial in the triangle tensor algebra.
pub fn corner_arc_trace(
    arc: &TriangleArc,
    e_in: Sign,
    e_out: Sign,
    comm: &Arc<CommutationMatrix>,
) -> Option<QTMonomial> {
    let (l1, l2) = arc.corner();
    let sign_at = |p: usize| if p == arc.slot_in { e_in } else { e_out };
    let (e1, e2) = (sign_at(l1), sign_at(l2));
    if e1 == Sign::Minus && e2 == Sign::Plus {
        return None;
    }
    let g1 = Slot::new(arc.face, l1).index();
    let g2 = Slot::new(arc.face, l2).index();
    Some(weyl_order(&[(g1, e1.value()), (g2, e2.value())], comm))
}

/// Trace of a U-turn arc; `e1` sits at the higher elevation.
pub fn uturn_arc_trace(e1: Sign, e2: Sign) -> OmegaPoly {
    match (e1, e2) {
        (Sign::Plus, Sign::Minus) => OmegaPoly::term(-1, -5),
        (Sign::Minus, Sign::Plus) => OmegaPoly::w(-1),
        _ => OmegaPoly::zero(),
    }
}

/// Ordered product of arc traces, lowest elevation on the left.
pub fn face_trace(arcs: &[(TriangleArc, Sign, Sign)], comm: &Arc<CommutationMatrix>) -> Result<QTElement> {
    for w in arcs.windows(2) {
        if w[0].0.elev >= w[1].0.elev {
            return Err(Error::Link(format!("elevations not increasing in face {}", w[0].0.face + 1)));
        }
    }
    let mut acc = QTElement::one(comm.clone());
    for (arc, a, b) in arcs {
        match corner_arc_trace(arc, *a, *b, comm) {
            None => return Ok(QTElement::zero(comm.clone())),
            Some(m) => {
                acc = acc.multiply(&QTElement::monomial(comm.clone(), m.coeff, m.exps))?;
            }
        }
    }
    Ok(acc)
}
