//! Random good-position links for property suites.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use super::GoodPositionLink;
use crate::biangle::{Slice, TangleWord};
use crate::surface::IdealTriangulation;
use crate::triangle::TriangleArc;

#[derive(Clone, Copy, Debug)]
pub struct RandomParams {
    pub max_arcs_per_face: usize,
    pub max_crossings_per_edge: usize,
    pub max_boundary_points: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self { max_arcs_per_face: 3, max_crossings_per_edge: 2, max_boundary_points: 2 }
    }
}

/// Random word from `n0` to `n1` strands (same parity).
pub fn random_word<R: Rng>(rng: &mut R, n0: usize, n1: usize, crossings: usize) -> TangleWord {
    let mut slices = Vec::new();
    let mut n = n0;
    let mut left = crossings;
    loop {
        let can_cross = n >= 2 && left > 0;
        let width_moves = n != n1;
        if !can_cross && !width_moves {
            break;
        }
        if can_cross && (!width_moves || rng.gen_bool(0.5)) {
            let p = rng.gen_range(0..n - 1);
            slices.push(if rng.gen_bool(0.5) { Slice::CrossOver(p) } else { Slice::CrossUnder(p) });
            left -= 1;
        } else if n > n1 {
            slices.push(Slice::Cap(rng.gen_range(0..n - 1)));
            n -= 2;
        } else {
            slices.push(Slice::Cup(rng.gen_range(0..=n)));
            n += 2;
        }
    }
    TangleWord::new(n0, slices).expect("widths tracked")
}

/// A random link: arcs first, then words matching the arc ends.
pub fn random_link<R: Rng>(rng: &mut R, tri: &Arc<IdealTriangulation>, p: RandomParams) -> GoodPositionLink {
    loop {
        let mut arcs = Vec::new();
        for f in 0..tri.faces() {
            let k = rng.gen_range(0..=p.max_arcs_per_face);
            for e in 0..k {
                let a = rng.gen_range(0..3);
                let b = (a + rng.gen_range(1..3)) % 3;
                arcs.push(TriangleArc::new(f, a, b, e as i64).expect("distinct sides"));
            }
        }
        let count = |s: crate::surface::Slot| arcs.iter().filter(|a| a.face == s.face && a.touches(s.pos)).count();
        let mut words = BTreeMap::new();
        let mut ok = true;
        for (i, e) in tri.edges().iter().enumerate() {
            let n0 = count(e.slots[0]);
            let n1 = match e.slots.get(1) {
                Some(s) => count(*s),
                None => {
                    let extra = rng.gen_range(0..=p.max_boundary_points / 2) * 2;
                    let n1 = (n0 % 2) + extra.min(p.max_boundary_points);
                    if n1 % 2 != n0 % 2 { n0 % 2 } else { n1 }
                }
            };
            if n0 % 2 != n1 % 2 {
                ok = false;
                break;
            }
            let c = rng.gen_range(0..=p.max_crossings_per_edge);
            words.insert(i, random_word(rng, n0, n1, c));
        }
        if ok {
            return GoodPositionLink::new(tri.clone(), arcs, words).expect("consistent by construction");
        }
    }
}

/// A random link whose word on `edge` is the identity.
pub fn random_link_straight<R: Rng>(
    rng: &mut R,
    tri: &Arc<IdealTriangulation>,
    p: RandomParams,
    edge: usize,
) -> GoodPositionLink {
    loop {
        let l = random_link(rng, tri, p);
        let w = l.word(edge);
        if w.n0() == w.n1() {
            let mut words = l.words().to_vec();
            words[edge] = TangleWord::identity(w.n0());
            return l.with_words(words).expect("same widths");
        }
    }
}
