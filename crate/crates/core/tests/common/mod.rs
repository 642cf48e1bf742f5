#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use qtrace::biangle::{Slice, TangleWord};
use qtrace::io;
use qtrace::omega_ring::OmegaPoly;
use qtrace::quantum_torus::{CommutationMatrix, QTElement};
use qtrace::state_sum::GoodPositionLink;
use qtrace::surface::{standard, IdealTriangulation};
use qtrace::triangle::TriangleArc;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn arc(f: usize, a: usize, b: usize, e: i64) -> TriangleArc {
    TriangleArc::new(f, a, b, e).unwrap()
}

pub fn link(tri: &Arc<IdealTriangulation>, arcs: Vec<TriangleArc>) -> GoodPositionLink {
    GoodPositionLink::new(tri.clone(), arcs, BTreeMap::new()).unwrap()
}

/// Torus multicurve with the same corner counts `(c12, c23, c13)` in both faces.
pub fn torus_multicurve(c12: usize, c23: usize, c13: usize) -> GoodPositionLink {
    let tri = Arc::new(standard::punctured_torus());
    let mut arcs = Vec::new();
    for f in 0..2 {
        let mut e = 0;
        for (n, a, b) in [(c12, 0, 1), (c23, 1, 2), (c13, 0, 2)] {
            for _ in 0..n {
                arcs.push(arc(f, a, b, e));
                e += 1;
            }
        }
    }
    link(&tri, arcs)
}

/// Intersection vector of [`torus_multicurve`], computed by hand.
pub fn torus_counts(c12: usize, c23: usize, c13: usize) -> Vec<i32> {
    vec![(c12 + c13) as i32, (c12 + c23) as i32, (c23 + c13) as i32]
}

/// A closed loop sitting in the biangle of edge `e`.
pub fn small_circle(tri: IdealTriangulation, e: usize) -> GoodPositionLink {
    let tri = Arc::new(tri);
    let mut words = BTreeMap::new();
    words.insert(e, TangleWord::new(0, vec![Slice::Cup(0), Slice::Cap(0)]).unwrap());
    GoodPositionLink::new(tri, vec![], words).unwrap()
}

/// One strand across the square joining sides `a` and `b` (labels 2..5).
pub fn square_strand(a: u8, b: u8) -> (GoodPositionLink, usize) {
    let sq = Arc::new(standard::square());
    let d = 0;
    let data = sq.flip(d).unwrap();
    let sa = data.old_sides[(a - 2) as usize];
    let sb = data.old_sides[(b - 2) as usize];
    let arcs = if sa.face == sb.face {
        vec![arc(sa.face, sa.pos, sb.pos, 0)]
    } else {
        let [p, q] = [sq.edge(d).slots[0], sq.edge(d).slots[1]];
        let (da, db) = if p.face == sa.face { (p, q) } else { (q, p) };
        vec![arc(sa.face, sa.pos, da.pos, 0), arc(sb.face, db.pos, sb.pos, 0)]
    };
    (link(&sq, arcs), d)
}

pub fn fixture_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

pub fn load(surface: &str, link: &str) -> GoodPositionLink {
    let dir = fixture_dir();
    let tri = Arc::new(io::parse_surface(&std::fs::read_to_string(dir.join(surface)).unwrap()).unwrap());
    io::parse_link(&tri, &std::fs::read_to_string(dir.join(link)).unwrap()).unwrap()
}

/// Every link fixture on disk.
pub fn file_fixtures() -> Vec<(String, GoodPositionLink)> {
    [
        ("triangle.surf", "corner.link"),
        ("square.surf", "square_strand.link"),
        ("torus.surf", "torus_110.link"),
        ("torus.surf", "torus_011.link"),
        ("torus.surf", "torus_112.link"),
        ("torus.surf", "torus_crossing.link"),
    ]
    .into_iter()
    .map(|(s, l)| (l.to_string(), load(s, l)))
    .collect()
}

/// Random word with `n0` strands in, at most `max_width` strands anywhere
/// and exactly `crossings` crossing slices.
pub fn random_word<R: Rng>(rng: &mut R, n0: usize, max_width: usize, crossings: usize) -> TangleWord {
    let mut slices = Vec::new();
    let mut n = n0;
    let mut left = crossings;
    let len = crossings + rng.gen_range(0..=4);
    for k in 0..len {
        let must_cross = len - k <= left;
        let pick = if must_cross { 0 } else { rng.gen_range(usize::from(left == 0)..3) };
        let s = match pick {
            0 if n >= 2 => {
                left -= 1;
                let p = rng.gen_range(0..n - 1);
                if rng.gen() { Slice::CrossOver(p) } else { Slice::CrossUnder(p) }
            }
            0 => {
                // make room for a crossing
                n += 2;
                slices.push(Slice::Cup(rng.gen_range(0..=n - 2)));
                left -= 1;
                let p = rng.gen_range(0..n - 1);
                if rng.gen() { Slice::CrossOver(p) } else { Slice::CrossUnder(p) }
            }
            1 if n + 2 <= max_width => {
                let p = rng.gen_range(0..=n);
                n += 2;
                Slice::Cup(p)
            }
            _ if n >= 2 => {
                let p = rng.gen_range(0..n - 1);
                n -= 2;
                Slice::Cap(p)
            }
            _ => Slice::Id,
        };
        slices.push(s);
    }
    TangleWord::new(n0, slices).unwrap()
}

pub fn random_comm(r: &mut ChaCha8Rng, n: usize) -> Arc<CommutationMatrix> {
    let mut c = CommutationMatrix::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            c.set(i, j, r.gen_range(-2..=2));
        }
    }
    Arc::new(c)
}

pub fn random_element(r: &mut ChaCha8Rng, comm: &Arc<CommutationMatrix>) -> QTElement {
    let mut x = QTElement::zero(comm.clone());
    for _ in 0..r.gen_range(1..4) {
        let k: Vec<i32> = (0..comm.n()).map(|_| r.gen_range(-3..=3)).collect();
        let c = OmegaPoly::term(r.gen_range(-3..=3), r.gen_range(-6..=6));
        x.add_term(k, c);
    }
    x
}

/// `sum_{i<j} (x_i y_j - x_j y_i) a_ij`, written out independently.
pub fn pairing(c: &CommutationMatrix, x: &[i32], y: &[i32]) -> i32 {
    let n = x.len();
    let mut s = 0;
    for i in 0..n {
        for j in i + 1..n {
            s += (x[i] * y[j] - x[j] * y[i]) * c.get(i, j);
        }
    }
    s
}
