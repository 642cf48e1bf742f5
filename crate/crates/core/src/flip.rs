//! Diagonal exchange: block substitution for strands crossing the square.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::biangle::Sign;
use crate::error::{Error, Result};
use crate::quantum_torus::{weyl_order, CommutationMatrix, QTElement};
use crate::state_sum::{
    biangle_scalars, BoundaryState, GoodPositionLink, Item, Layout, Network, TraceOptions,
};
use crate::surface::{FlipData, IdealTriangulation, Slot};
use crate::triangle::{corner_arc_trace, TriangleArc};

/// Sides of the square, labelled 2..5; 1 is the diagonal.
pub const SIDES: [u8; 4] = [2, 3, 4, 5];

/// The six connection types `(from, to)`.
pub const CONNECTIONS: [(u8, u8); 6] = [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

// Blocks read `T1 factor | T2 factor`; `-` marks an inverse, `+` sums terms.
const SOURCE: [((u8, u8), &[&str]); 6] = [
    ((2, 3), &["12 11 | 21 23", "12 11 | 21 -23 + 12 -11 | -21 -23", "-12 -11 | -21 -23"]),
    (
        (2, 4),
        &["12 11 | 21 24 + 12 -11 | -21 24", "12 -11 | -21 -24", "-12 -11 | -21 24", "-12 -11 | -21 -24"],
    ),
    ((2, 5), &["12 15 |", "-12 15 |", "-12 -15 |"]),
    ((3, 4), &["| 23 24", "| 23 -24", "| -23 -24"]),
    (
        (3, 5),
        &["15 11 | 21 23", "15 11 | 21 -23", "-15 11 | 21 23", "-15 11 | 21 -23 + -15 -11 | -21 -23"],
    ),
    ((4, 5), &["15 11 | 21 24", "-15 11 | 21 24 + -15 -11 | -21 24", "-15 -11 | -21 -24"]),
];

const TARGET: [((u8, u8), &[&str]); 6] = [
    ((2, 3), &["12 13 |", "12 -13 |", "-12 -13 |"]),
    (
        (2, 4),
        &["12 11 | 21 24", "12 11 | 21 -24", "-12 11 | 21 24", "-12 11 | 21 -24 + -12 -11 | -21 -24"],
    ),
    ((2, 5), &["12 11 | 21 25", "-12 11 | 21 25 + -12 -11 | -21 25", "-12 -11 | -21 -25"]),
    // printed with 12 in place of 13
    ((3, 4), &["13 11 | 21 24", "13 11 | 21 -24 + 13 -11 | -21 -24", "-13 -11 | -21 -24"]),
    // second entry printed without the inverse on 13
    (
        (3, 5),
        &["13 11 | 21 25 + 13 -11 | -21 25", "-13 -11 | -21 25", "13 -11 | -21 -25", "-13 -11 | -21 -25"],
    ),
    ((4, 5), &["| 24 25", "| 24 -25", "| -24 -25"]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Blocks over the original triangulation.
    Source,
    /// Blocks over the flipped triangulation.
    Target,
}

/// One term: generators `(face label, side label, exponent)`.
type Term = Vec<(u8, u8, i32)>;

fn parse_block(s: &str) -> Vec<Term> {
    s.split(" + ")
        .map(|t| {
            let (a, b) = t.split_once('|').expect("block has a bar");
            let mut term = Vec::new();
            for (face, part) in [(1u8, a), (2u8, b)] {
                for g in part.split_whitespace() {
                    let (e, g) = match g.strip_prefix('-') {
                        Some(r) => (-1, r),
                        None => (1, g),
                    };
                    let d: Vec<u8> = g.bytes().map(|c| c - b'0').collect();
                    assert_eq!(d[0], face, "generator {g} in the wrong factor");
                    term.push((d[0], d[1], e));
                }
            }
            term
        })
        .collect()
}

/// Block table: `(connection, (state at from, state at to)) -> terms`.
#[derive(Clone, Debug)]
pub struct FlipBlockTable {
    pub side: Side,
    blocks: BTreeMap<((u8, u8), (Sign, Sign)), Vec<Term>>,
}

impl FlipBlockTable {
    pub fn new(side: Side) -> Self {
        let src = if side == Side::Source { &SOURCE } else { &TARGET };
        let mut blocks = BTreeMap::new();
        for (conn, entries) in src.iter() {
            for e in entries.iter() {
                let terms = parse_block(e);
                let state = |label: u8, t: &Term| {
                    t.iter()
                        .find(|g| g.1 == label)
                        .map(|g| Sign::from_value(g.2))
                        .expect("outer generator present")
                };
                let st = (state(conn.0, &terms[0]), state(conn.1, &terms[0]));
                assert!(terms.iter().all(|t| (state(conn.0, t), state(conn.1, t)) == st));
                let old = blocks.insert((*conn, st), terms);
                assert!(old.is_none(), "duplicate block {conn:?} {st:?}");
            }
        }
        Self { side, blocks }
    }

    /// Number of nonzero blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u8, u8), (Sign, Sign))> + '_ {
        self.blocks.keys().copied()
    }

    /// The block as an element of the triangle algebra; zero if absent.
    pub fn block(&self, data: &FlipData, old: &IdealTriangulation, conn: (u8, u8), st: (Sign, Sign)) -> QTElement {
        let (tri, map) = match self.side {
            Side::Source => (old, source_slots(old, data)),
            Side::Target => (&data.tri, target_slots(data)),
        };
        let comm = Arc::new(tri.triangle_commutation());
        let mut out = QTElement::zero(comm.clone());
        if let Some(terms) = self.blocks.get(&(conn, st)) {
            for t in terms {
                let gens: Vec<(usize, i32)> = t.iter().map(|(f, l, e)| (map[&(*f, *l)].index(), *e)).collect();
                let m = weyl_order(&gens, &comm);
                out.add_term(m.exps, m.coeff);
            }
        }
        out
    }
}

/// `(face label, side label) -> slot` before the flip.
fn source_slots(old: &IdealTriangulation, d: &FlipData) -> BTreeMap<(u8, u8), Slot> {
    let diag = &old.edge(d.diagonal).slots;
    [
        ((1, 1), diag[0]),
        ((1, 2), d.old_sides[0]),
        ((1, 5), d.old_sides[3]),
        ((2, 1), diag[1]),
        ((2, 3), d.old_sides[1]),
        ((2, 4), d.old_sides[2]),
    ]
    .into_iter()
    .collect()
}

/// `(face label, side label) -> slot` after the flip.
fn target_slots(d: &FlipData) -> BTreeMap<(u8, u8), Slot> {
    let diag = &d.tri.edge(d.diagonal).slots;
    [
        ((1, 1), diag[0]),
        ((1, 2), d.new_sides[0]),
        ((1, 3), d.new_sides[1]),
        ((2, 1), diag[1]),
        ((2, 4), d.new_sides[2]),
        ((2, 5), d.new_sides[3]),
    ]
    .into_iter()
    .collect()
}

/// A strand over the square: its two outer ends, lowest label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareStrand {
    pub conn: (u8, u8),
    /// `(face, rank, end)` of the arc end on each outer side.
    pub ends: [(usize, usize, usize); 2],
}

/// Square strands in a common elevation order.
pub fn square_strands(link: &GoodPositionLink, data: &FlipData) -> Result<Vec<SquareStrand>> {
    let tri = link.triangulation();
    let d = data.diagonal;
    if !link.word(d).is_identity() {
        return Err(Error::Flip(format!(
            "the square must hold horizontal arcs only; edge {} carries {}",
            tri.edge(d).name,
            link.word(d)
        )));
    }
    let (p1, p2) = (tri.edge(d).slots[0], tri.edge(d).slots[1]);
    let label = |s: Slot| -> Option<u8> { data.old_sides.iter().position(|x| *x == s).map(|k| SIDES[k]) };
    let outer = |face: usize, arc: &TriangleArc, diag: usize| -> Result<Vec<(u8, usize)>> {
        let mut v = Vec::new();
        for (end, pos) in [(0usize, arc.slot_in), (1, arc.slot_out)] {
            if pos == diag {
                continue;
            }
            let l = label(Slot::new(face, pos)).ok_or_else(|| Error::Flip("arc leaves the square".into()))?;
            v.push((l, end));
        }
        Ok(v)
    };
    let a1 = link.face_arcs(p1.face);
    let a2 = link.face_arcs(p2.face);
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    let mut push = |mut ends: Vec<(u8, (usize, usize, usize))>| {
        ends.sort_by_key(|e| e.0);
        out.push(SquareStrand { conn: (ends[0].0, ends[1].0), ends: [ends[0].1, ends[1].1] });
    };
    while i < a1.len() || j < a2.len() {
        if i < a1.len() && !a1[i].touches(p1.pos) {
            let o = outer(p1.face, &a1[i], p1.pos)?;
            push(o.into_iter().map(|(l, e)| (l, (p1.face, i, e))).collect());
            i += 1;
        } else if j < a2.len() && !a2[j].touches(p2.pos) {
            let o = outer(p2.face, &a2[j], p2.pos)?;
            push(o.into_iter().map(|(l, e)| (l, (p2.face, j, e))).collect());
            j += 1;
        } else if i < a1.len() && j < a2.len() {
            let mut o: Vec<_> = outer(p1.face, &a1[i], p1.pos)?.into_iter().map(|(l, e)| (l, (p1.face, i, e))).collect();
            o.extend(outer(p2.face, &a2[j], p2.pos)?.into_iter().map(|(l, e)| (l, (p2.face, j, e))));
            push(o);
            i += 1;
            j += 1;
        } else {
            return Err(Error::Flip("unmatched diagonal arcs".into()));
        }
    }
    Ok(out)
}

/// The state sum with square strands replaced by blocks of `side`,
/// in the Weyl edge basis of the matching triangulation.
pub fn block_trace(link: &GoodPositionLink, e: usize, s: &BoundaryState, side: Side) -> Result<QTElement> {
    block_trace_with(link, e, s, side, TraceOptions::default())
}

pub fn block_trace_with(
    link: &GoodPositionLink,
    e: usize,
    s: &BoundaryState,
    side: Side,
    opts: TraceOptions,
) -> Result<QTElement> {
    s.check(link)?;
    let old = link.triangulation();
    let data = old.flip(e)?;
    let strands = square_strands(link, &data)?;
    let table = FlipBlockTable::new(side);
    let tri = match side {
        Side::Source => old.as_ref(),
        Side::Target => &data.tri,
    };
    let layout = Layout::new(link);
    if layout.n_points > opts.max_points {
        return Err(Error::TooManyPoints(layout.n_points, opts.max_points));
    }
    let comm = Arc::new(tri.triangle_commutation());
    let (f1, f2) = (data.t1, data.t2);
    let mut items = Vec::new();
    // outer faces keep their slots
    for f in (0..old.faces()).filter(|f| *f != f1 && *f != f2) {
        for (r, arc) in link.face_arcs(f).iter().enumerate() {
            items.push(arc_item(arc, &layout, f, r, &comm));
        }
    }
    for st in &strands {
        let points: Vec<usize> = st.ends.iter().map(|(f, r, end)| layout.point(*f, *r, *end)).collect();
        let mut tab = Vec::new();
        for a in Sign::both() {
            for b in Sign::both() {
                let v = table.block(&data, old, st.conn, (a, b));
                if !v.is_zero() {
                    tab.push((vec![a, b], v));
                }
            }
        }
        items.push(Item { points, table: tab });
    }
    let mut scalars = biangle_scalars(link, &layout, s)?;
    scalars.remove(e);
    let net = Network { n_points: layout.n_points, comm, items, scalars };
    let t = net.evaluate(opts.method);
    tri.tensor_to_edge(&t, Arc::new(tri.sigma_matrix()))
}

fn arc_item(arc: &TriangleArc, layout: &Layout, f: usize, r: usize, comm: &Arc<CommutationMatrix>) -> Item {
    let mut table = Vec::new();
    for a in Sign::both() {
        for b in Sign::both() {
            if let Some(m) = corner_arc_trace(arc, a, b, comm) {
                table.push((vec![a, b], QTElement::monomial(comm.clone(), m.coeff, m.exps)));
            }
        }
    }
    Item { points: vec![layout.point(f, r, 0), layout.point(f, r, 1)], table }
}

/// Quantum trace over the flipped triangulation via target blocks.
pub fn transfer_trace(link: &GoodPositionLink, e: usize, s: &BoundaryState) -> Result<QTElement> {
    block_trace(link, e, s, Side::Target)
}

/// The same link drawn over the flipped triangulation.
pub fn reposition_link(link: &GoodPositionLink, e: usize) -> Result<GoodPositionLink> {
    let old = link.triangulation();
    let data = old.flip(e)?;
    let strands = square_strands(link, &data)?;
    let (f1, f2) = (data.t1, data.t2);
    let new_tri = Arc::new(data.tri.clone());
    let mut arcs: Vec<Vec<TriangleArc>> = link.arcs().to_vec();
    arcs[f1].clear();
    arcs[f2].clear();
    let slot_of = |l: u8| data.new_sides[(l - 2) as usize];
    for st in &strands {
        let (a, b) = (slot_of(st.conn.0), slot_of(st.conn.1));
        if a.face == b.face {
            arcs[a.face].push(TriangleArc::new(a.face, a.pos, b.pos, 0)?);
        } else {
            // through the new diagonal, which sits at position 2 of both faces
            arcs[a.face].push(TriangleArc::new(a.face, a.pos, 2, 0)?);
            arcs[b.face].push(TriangleArc::new(b.face, 2, b.pos, 0)?);
        }
    }
    let mut words = link.words().to_vec();
    let n = arcs[f1].iter().filter(|x| x.touches(2)).count();
    words[e] = crate::biangle::TangleWord::identity(n);
    GoodPositionLink::from_parts(new_tri, arcs, words)
}

/// First-principles value of a block: arcs over the square, diagonal summed.
pub fn block_from_arcs(data: &FlipData, old: &IdealTriangulation, side: Side, conn: (u8, u8), st: (Sign, Sign)) -> QTElement {
    let (tri, map) = match side {
        Side::Source => (old, source_slots(old, data)),
        Side::Target => (&data.tri, target_slots(data)),
    };
    let comm = Arc::new(tri.triangle_commutation());
    // the side's slot and the face labels that contain it
    let find = |l: u8| map.iter().find(|(k, _)| k.1 == l).map(|(k, s)| (k.0, *s)).expect("label");
    let (fa, sa) = find(conn.0);
    let (fb, sb) = find(conn.1);
    let mut out = QTElement::zero(comm.clone());
    if fa == fb {
        let arc = TriangleArc::new(sa.face, sa.pos, sb.pos, 0).expect("distinct");
        if let Some(m) = corner_arc_trace(&arc, st.0, st.1, &comm) {
            out.add_term(m.exps, m.coeff);
        }
        return out;
    }
    let da = map[&(fa, 1)];
    let db = map[&(fb, 1)];
    for x in Sign::both() {
        let a1 = TriangleArc::new(sa.face, sa.pos, da.pos, 0).expect("distinct");
        let a2 = TriangleArc::new(sb.face, db.pos, sb.pos, 0).expect("distinct");
        if let (Some(m1), Some(m2)) =
            (corner_arc_trace(&a1, st.0, x, &comm), corner_arc_trace(&a2, x, st.1, &comm))
        {
            let e1 = QTElement::monomial(comm.clone(), m1.coeff, m1.exps);
            let e2 = QTElement::monomial(comm.clone(), m2.coeff, m2.exps);
            out.add_assign(&e1.multiply(&e2).expect("same torus"));
        }
    }
    out
}

/// Compares every table entry with [`block_from_arcs`]; returns mismatches.
pub fn check_tables(old: &IdealTriangulation, e: usize) -> Result<Vec<String>> {
    let data = old.flip(e)?;
    let mut bad = Vec::new();
    for side in [Side::Source, Side::Target] {
        let table = FlipBlockTable::new(side);
        for conn in CONNECTIONS {
            for a in Sign::both() {
                for b in Sign::both() {
                    let t = table.block(&data, old, conn, (a, b));
                    let f = block_from_arcs(&data, old, side, conn, (a, b));
                    if t != f {
                        bad.push(format!("{side:?} {conn:?} {a}{b}: table {t} vs arcs {f}"));
                    }
                }
            }
        }
    }
    Ok(bad)
}
