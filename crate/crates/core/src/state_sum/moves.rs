//! Local rewrites of good-position links.
//!
//! A move is addressed by a face and an elevation rank; see [`Location`].

use std::fmt;

use super::GoodPositionLink;
use crate::biangle::{Slice, TangleWord};
use crate::error::{Error, Result};
use crate::surface::{IdealTriangulation, Slot};
use crate::triangle::TriangleArc;

/// The surface is drawn seen from below: on wall 0 the upward direction
/// runs clockwise around the adjacent face, and a strand drawn over lies
/// geometrically lower.
pub const SEEN_FROM_BELOW: bool = true;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    I,
    II,
    III,
    IV,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub inverse: bool,
}

impl Move {
    pub const ALL: [Move; 10] = [
        Move::fwd(MoveKind::I),
        Move::inv(MoveKind::I),
        Move::fwd(MoveKind::II),
        Move::inv(MoveKind::II),
        Move::fwd(MoveKind::III),
        Move::inv(MoveKind::III),
        Move::fwd(MoveKind::IV),
        Move::inv(MoveKind::IV),
        Move::fwd(MoveKind::V),
        Move::inv(MoveKind::V),
    ];

    pub const fn fwd(kind: MoveKind) -> Move {
        Move { kind, inverse: false }
    }

    pub const fn inv(kind: MoveKind) -> Move {
        Move { kind, inverse: true }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, if self.inverse { "^-1" } else { "" })
    }
}

/// Where a move acts.
///
/// * I: arcs `rank`, `rank + 1` share a corner and meet in a U-turn at
///   `side`; the U-turn moves to the other side of the corner.
/// * I⁻¹: the biangle strands turning back at wall position `rank` of
///   `side` are pushed into the face as two arcs towards side `to`.
/// * II: arcs `rank`, `rank + 1` meet in a U-turn at their common side and
///   merge into one arc.
/// * II⁻¹: arc `rank` is pushed across its free side; with `flag` the lower
///   new arc keeps the in-end.
/// * III, IV: arcs `rank`, `rank + 1` swap elevations. For III `flag` says
///   the lower arc is the inner one.
/// * V: opposite kinks on both ends of arc `rank`; `flag` puts the over
///   kink at the in-end.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Location {
    pub face: usize,
    pub rank: usize,
    pub side: usize,
    pub to: usize,
    pub flag: bool,
}

fn err(mv: Move, msg: impl Into<String>) -> Error {
    Error::Move { mv: mv.to_string(), msg: msg.into() }
}

/// Whether upward on the wall facing `s` runs clockwise around `s.face`.
fn up_is_cw(tri: &IdealTriangulation, s: Slot) -> bool {
    (tri.wall_of(s).1 == 0) == SEEN_FROM_BELOW
}

/// Crossing slice between wall positions `q`, `q + 1` next to the wall of
/// `s`, with the strand at `q + 1` geometrically over when `upper_over`.
fn crossing_at(tri: &IdealTriangulation, s: Slot, q: usize, upper_over: bool) -> Slice {
    let pic_upper_over = upper_over != SEEN_FROM_BELOW;
    let wall = tri.wall_of(s).1;
    let over = if wall == 0 { !pic_upper_over } else { pic_upper_over };
    if over {
        Slice::CrossOver(q)
    } else {
        Slice::CrossUnder(q)
    }
}

/// Slices at the wall end of a word, listed from the wall inward.
fn push_at_wall(w: &TangleWord, wall: usize, from_wall: &[Slice]) -> Result<TangleWord> {
    let mut w = w.clone();
    for s in from_wall.iter().rev() {
        w = if wall == 0 { w.prepend(*s)? } else { w.append(*s)? };
    }
    Ok(w)
}

/// Removes `from_wall` from the wall end of a word if present.
fn pop_at_wall(w: &TangleWord, wall: usize, from_wall: &[Slice]) -> Option<TangleWord> {
    let mut w = w.clone();
    for s in from_wall {
        let (got, rest) = if wall == 0 { w.pop_front()? } else { w.pop_back()? };
        if got != *s {
            return None;
        }
        w = rest;
    }
    Some(w)
}

/// U-turn joining wall positions `q`, `q + 1`, optionally twisted once.
fn uturn_slices(tri: &IdealTriangulation, s: Slot, q: usize, twist: bool) -> Vec<Slice> {
    let wall = tri.wall_of(s).1;
    let u = if wall == 0 { Slice::Cap(q) } else { Slice::Cup(q) };
    if twist {
        vec![crossing_at(tri, s, q, true), u]
    } else {
        vec![u]
    }
}

/// Turns the biangle strands at `p`, `p + 1` back just before the wall.
fn strand_uturn(tri: &IdealTriangulation, s: Slot, p: usize) -> Slice {
    if tri.wall_of(s).1 == 0 {
        Slice::Cup(p)
    } else {
        Slice::Cap(p)
    }
}

/// Kink on wall position `p`, listed from the wall inward.
fn kink_slices(wall: usize, p: usize, over: bool) -> Vec<Slice> {
    let x = if over { Slice::CrossOver(p) } else { Slice::CrossUnder(p) };
    let seq = vec![Slice::Cup(p + 1), x, Slice::Cap(p + 1)];
    if wall == 0 {
        seq
    } else {
        seq.into_iter().rev().collect()
    }
}

/// The side of the corner `{a, b}` that comes first clockwise at it,
/// i.e. the corner is `(c, c + 1)`.
fn corner_start(a: usize, b: usize) -> usize {
    if (a + 1) % 3 == b {
        a
    } else {
        b
    }
}

/// For two parallel arcs at the corner `{u, v}`: is the lower-elevation
/// arc geometrically lower at `u` once it is lower at `v`?
fn parallel_lower_at(tri: &IdealTriangulation, face: usize, v: usize, u: usize) -> bool {
    let c = corner_start(u, v);
    let cw_early_v = up_is_cw(tri, Slot::new(face, v));
    // the inner arc is clockwise-later on side c and earlier on c + 1
    let inner = if v == c { !cw_early_v } else { cw_early_v };
    let cw_early_u = if u == c { !inner } else { inner };
    cw_early_u == up_is_cw(tri, Slot::new(face, u))
}

/// For arcs at different corners sharing side `u`: is `arc` geometrically
/// lower at `u` than the other one?
fn split_lower_at(tri: &IdealTriangulation, arc: &TriangleArc, u: usize) -> bool {
    let other = if arc.slot_in == u { arc.slot_out } else { arc.slot_in };
    let cw_early = other == (u + 2) % 3;
    cw_early == up_is_cw(tri, Slot::new(arc.face, u))
}

fn shared_sides(a: &TriangleArc, b: &TriangleArc) -> Vec<usize> {
    (0..3).filter(|p| a.touches(*p) && b.touches(*p)).collect()
}

fn same_corner(a: &TriangleArc, b: &TriangleArc) -> bool {
    shared_sides(a, b).len() == 2
}

/// Applies one move; the result carries the same trace.
pub fn apply_move(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    if loc.face >= link.tri.faces() {
        return Err(err(mv, format!("no face {}", loc.face + 1)));
    }
    match (mv.kind, mv.inverse) {
        (MoveKind::I, false) => move_i(link, mv, loc),
        (MoveKind::I, true) => move_i_inv(link, mv, loc),
        (MoveKind::II, false) => move_ii(link, mv, loc),
        (MoveKind::II, true) => move_ii_inv(link, mv, loc),
        (MoveKind::III, inv) | (MoveKind::IV, inv) => swap(link, mv, loc, inv),
        (MoveKind::V, false) => kinks(link, mv, loc),
        (MoveKind::V, true) => unkink(link, mv, loc),
    }
}

fn pair(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<(TriangleArc, TriangleArc)> {
    let arcs = link.face_arcs(loc.face);
    if loc.rank + 1 >= arcs.len() {
        return Err(err(mv, format!("face {} has no arcs at ranks {}, {}", loc.face + 1, loc.rank, loc.rank + 1)));
    }
    Ok((arcs[loc.rank], arcs[loc.rank + 1]))
}

fn move_i(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let tri = link.tri.clone();
    let (l, h) = pair(link, mv, loc)?;
    if !same_corner(&l, &h) || !l.touches(loc.side) {
        return Err(err(mv, "expected two parallel arcs touching the given side"));
    }
    let u = loc.side;
    let v = if l.slot_in == u { l.slot_out } else { l.slot_in };
    let su = Slot::new(loc.face, u);
    let sv = Slot::new(loc.face, v);
    let q = link.end_position(loc.face, loc.rank, u).expect("touches");
    let p = link.end_position(loc.face, loc.rank, v).expect("touches");
    let twist = !parallel_lower_at(&tri, loc.face, v, u);
    let (eu, wu) = tri.wall_of(su);
    let pattern = uturn_slices(&tri, su, q, twist);
    let mut words = link.words.to_vec();
    words[eu] = pop_at_wall(&words[eu], wu, &pattern).ok_or_else(|| {
        err(mv, format!("expected {} at the wall of edge {}", slices_text(&pattern), tri.edge(eu).name))
    })?;
    let (ev, wv) = tri.wall_of(sv);
    words[ev] = push_at_wall(&words[ev], wv, &[strand_uturn(&tri, sv, p)])?;
    let mut arcs = link.arcs.clone();
    arcs[loc.face].drain(loc.rank..loc.rank + 2);
    GoodPositionLink::from_parts(tri, arcs, words)
}

fn move_i_inv(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let tri = link.tri.clone();
    let (v, u, p) = (loc.side, loc.to, loc.rank);
    if v > 2 || u > 2 || u == v {
        return Err(err(mv, "need two distinct sides"));
    }
    let sv = Slot::new(loc.face, v);
    let su = Slot::new(loc.face, u);
    let (ev, wv) = tri.wall_of(sv);
    let mut words = link.words.to_vec();
    let turn = strand_uturn(&tri, sv, p);
    words[ev] = pop_at_wall(&words[ev], wv, &[turn])
        .ok_or_else(|| err(mv, format!("expected {turn} at the wall of edge {}", tri.edge(ev).name)))?;
    let at_v = link.slot_arcs(sv);
    let r = if p == 0 { 0 } else { at_v[p - 1] + 1 };
    let mut arcs = link.arcs.clone();
    let new = TriangleArc::new(loc.face, v, u, 0)?;
    arcs[loc.face].insert(r, new);
    arcs[loc.face].insert(r, new);
    let q = arcs[loc.face][..r].iter().filter(|a| a.touches(u)).count();
    let twist = !parallel_lower_at(&tri, loc.face, v, u);
    let (eu, wu) = tri.wall_of(su);
    words[eu] = push_at_wall(&words[eu], wu, &uturn_slices(&tri, su, q, twist))?;
    GoodPositionLink::from_parts(tri, arcs, words)
}

fn move_ii(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let tri = link.tri.clone();
    let (l, h) = pair(link, mv, loc)?;
    let shared = shared_sides(&l, &h);
    if shared.len() != 1 {
        return Err(err(mv, "expected arcs at different corners sharing one side"));
    }
    let u = shared[0];
    let su = Slot::new(loc.face, u);
    let q = link.end_position(loc.face, loc.rank, u).expect("touches");
    let twist = !split_lower_at(&tri, &l, u);
    let (eu, wu) = tri.wall_of(su);
    let pattern = uturn_slices(&tri, su, q, twist);
    let mut words = link.words.to_vec();
    words[eu] = pop_at_wall(&words[eu], wu, &pattern).ok_or_else(|| {
        err(mv, format!("expected {} at the wall of edge {}", slices_text(&pattern), tri.edge(eu).name))
    })?;
    let x = if l.slot_in == u { l.slot_out } else { l.slot_in };
    let y = if h.slot_in == u { h.slot_out } else { h.slot_in };
    let mut arcs = link.arcs.clone();
    arcs[loc.face][loc.rank] = TriangleArc::new(loc.face, x, y, 0)?;
    arcs[loc.face].remove(loc.rank + 1);
    GoodPositionLink::from_parts(tri, arcs, words)
}

fn move_ii_inv(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let tri = link.tri.clone();
    let arcs_f = link.face_arcs(loc.face);
    let m = *arcs_f.get(loc.rank).ok_or_else(|| err(mv, format!("no arc at rank {}", loc.rank)))?;
    let u = m.free_side();
    let (x, y) = if loc.flag { (m.slot_in, m.slot_out) } else { (m.slot_out, m.slot_in) };
    let l = TriangleArc::new(loc.face, x, u, 0)?;
    let h = TriangleArc::new(loc.face, u, y, 0)?;
    let mut arcs = link.arcs.clone();
    arcs[loc.face][loc.rank] = l;
    arcs[loc.face].insert(loc.rank + 1, h);
    let q = arcs[loc.face][..loc.rank].iter().filter(|a| a.touches(u)).count();
    let su = Slot::new(loc.face, u);
    let twist = !split_lower_at(&tri, &l, u);
    let (eu, wu) = tri.wall_of(su);
    let mut words = link.words.to_vec();
    words[eu] = push_at_wall(&words[eu], wu, &uturn_slices(&tri, su, q, twist))?;
    GoodPositionLink::from_parts(tri, arcs, words)
}

/// Crossings a swap inserts, as `(slot, wall position, slice)`.
fn swap_crossings(
    tri: &IdealTriangulation,
    link: &GoodPositionLink,
    mv: Move,
    loc: Location,
    l: &TriangleArc,
    h: &TriangleArc,
) -> Result<Vec<(Slot, Slice)>> {
    let shared = shared_sides(l, h);
    match (mv.kind, shared.len()) {
        (MoveKind::III, 2) | (MoveKind::IV, 1) => {}
        (MoveKind::III, _) => return Err(err(mv, "expected two arcs at the same corner")),
        _ => return Err(err(mv, "expected arcs at different corners sharing one side")),
    }
    let mut out = Vec::new();
    for &s in &shared {
        let slot = Slot::new(loc.face, s);
        let lower = if shared.len() == 2 {
            // L inner or outer, then geometric order at s
            let c = corner_start(shared[0], shared[1]);
            let cw_early = if s == c { !loc.flag } else { loc.flag };
            cw_early == up_is_cw(tri, slot)
        } else {
            split_lower_at(tri, l, s)
        };
        let ranks = link.slot_arcs(slot);
        let q = ranks.iter().position(|r| *r == loc.rank).expect("touches");
        out.push((slot, crossing_at(tri, slot, q, lower)));
    }
    Ok(out)
}

fn swap(link: &GoodPositionLink, mv: Move, loc: Location, inverse: bool) -> Result<GoodPositionLink> {
    let tri = link.tri.clone();
    let (a, b) = pair(link, mv, loc)?;
    // `l` is the arc that was lower before the swap
    let (l, h) = if inverse { (b, a) } else { (a, b) };
    let xs = swap_crossings(&tri, link, mv, loc, &l, &h)?;
    let mut words = link.words.to_vec();
    for (slot, x) in xs {
        let (e, w) = tri.wall_of(slot);
        words[e] = if inverse {
            pop_at_wall(&words[e], w, &[x])
                .ok_or_else(|| err(mv, format!("expected {x} at the wall of edge {}", tri.edge(e).name)))?
        } else {
            push_at_wall(&words[e], w, &[x])?
        };
    }
    let mut arcs = link.arcs.clone();
    arcs[loc.face].swap(loc.rank, loc.rank + 1);
    GoodPositionLink::from_parts(tri, arcs, words)
}

fn kink_plan(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<Vec<(usize, usize, Vec<Slice>)>> {
    let arc = *link
        .face_arcs(loc.face)
        .get(loc.rank)
        .ok_or_else(|| err(mv, format!("no arc at rank {}", loc.rank)))?;
    let mut out = Vec::new();
    for (end, over) in [(arc.slot_in, loc.flag), (arc.slot_out, !loc.flag)] {
        let slot = Slot::new(loc.face, end);
        let (e, w) = link.tri.wall_of(slot);
        let p = link.end_position(loc.face, loc.rank, end).expect("touches");
        out.push((e, w, kink_slices(w, p, over)));
    }
    Ok(out)
}

fn kinks(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let mut words = link.words.to_vec();
    for (e, w, seq) in kink_plan(link, mv, loc)? {
        words[e] = push_at_wall(&words[e], w, &seq)?;
    }
    link.with_words(words)
}

fn unkink(link: &GoodPositionLink, mv: Move, loc: Location) -> Result<GoodPositionLink> {
    let mut words = link.words.to_vec();
    for (e, w, seq) in kink_plan(link, mv, loc)? {
        words[e] = pop_at_wall(&words[e], w, &seq).ok_or_else(|| {
            err(mv, format!("expected {} at the wall of edge {}", slices_text(&seq), link.tri.edge(e).name))
        })?;
    }
    link.with_words(words)
}

fn slices_text(s: &[Slice]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Every location where `mv` applies.
pub fn applicable(link: &GoodPositionLink, mv: Move) -> Vec<Location> {
    let mut out = Vec::new();
    for face in 0..link.tri.faces() {
        let n = link.face_arcs(face).len();
        for rank in 0..n + 8 {
            for side in 0..3 {
                for to in 0..3 {
                    for flag in [false, true] {
                        let loc = Location { face, rank, side, to, flag };
                        if apply_move(link, mv, loc).is_ok() && !out.contains(&canonical(mv, loc)) {
                            out.push(canonical(mv, loc));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Zeroes the location fields a move ignores.
fn canonical(mv: Move, mut loc: Location) -> Location {
    match (mv.kind, mv.inverse) {
        (MoveKind::I, false) => {
            loc.to = 0;
            loc.flag = false;
        }
        (MoveKind::I, true) => loc.flag = false,
        (MoveKind::II, false) | (MoveKind::IV, _) => {
            loc.side = 0;
            loc.to = 0;
            loc.flag = false;
        }
        (MoveKind::II, true) | (MoveKind::III, _) | (MoveKind::V, _) => {
            loc.side = 0;
            loc.to = 0;
        }
    }
    loc
}
