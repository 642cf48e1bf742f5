//! Links in good position and their quantum trace.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::biangle::{kauffman_resolve, Sign, TangleWord, WallPoint};
use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;
use crate::quantum_torus::{CommutationMatrix, QTElement};
use crate::surface::{IdealTriangulation, Slot};
use crate::triangle::{corner_arc_trace, TriangleArc};

pub mod moves;
pub mod random;

/// Default cap on the number of triangle-side state points.
pub const MAX_POINTS: usize = 24;

/// Per-face constant-elevation arcs plus a tangle word over every edge.
///
/// Words run from wall 0 (first slot of the edge) to wall 1. A boundary
/// edge has its face side on wall 0 and the link endpoints on wall 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPositionLink {
    tri: Arc<IdealTriangulation>,
    arcs: Vec<Vec<TriangleArc>>,
    words: Vec<TangleWord>,
}

impl GoodPositionLink {
    /// Builds a link; arcs are sorted by elevation and renumbered.
    /// Missing words default to the identity of the right width.
    pub fn new(
        tri: Arc<IdealTriangulation>,
        arcs: Vec<TriangleArc>,
        words: BTreeMap<usize, TangleWord>,
    ) -> Result<Self> {
        let mut per_face = vec![Vec::new(); tri.faces()];
        for a in arcs {
            if a.face >= tri.faces() {
                return Err(Error::Link(format!("arc in missing face {}", a.face + 1)));
            }
            per_face[a.face].push(a);
        }
        for (f, list) in per_face.iter_mut().enumerate() {
            list.sort_by_key(|a| a.elev);
            if list.windows(2).any(|w| w[0].elev == w[1].elev) {
                return Err(Error::Link(format!("duplicate elevation in face {}", f + 1)));
            }
            for (r, a) in list.iter_mut().enumerate() {
                a.elev = r as i64;
            }
        }
        let mut link = Self { tri, arcs: per_face, words: Vec::new() };
        let mut ws = Vec::new();
        for e in 0..link.tri.n_edges() {
            let n0 = link.slot_count(link.tri.edge(e).slots[0]);
            ws.push(match words.get(&e) {
                Some(w) => w.clone(),
                None => TangleWord::identity(n0),
            });
        }
        link.words = ws;
        link.validate()?;
        Ok(link)
    }

    pub fn empty(tri: Arc<IdealTriangulation>) -> Self {
        Self::new(tri, Vec::new(), BTreeMap::new()).expect("empty link is valid")
    }

    pub(crate) fn from_parts(
        tri: Arc<IdealTriangulation>,
        arcs: Vec<Vec<TriangleArc>>,
        words: Vec<TangleWord>,
    ) -> Result<Self> {
        // list order is the elevation order
        let all: Vec<TriangleArc> = arcs
            .into_iter()
            .flat_map(|f| f.into_iter().enumerate().map(|(r, a)| TriangleArc { elev: r as i64, ..a }))
            .collect();
        let words = words.into_iter().enumerate().collect();
        Self::new(tri, all, words)
    }

    pub fn validate(&self) -> Result<()> {
        for (e, edge) in self.tri.edges().iter().enumerate() {
            let w = &self.words[e];
            let n0 = self.slot_count(edge.slots[0]);
            if w.n0() != n0 {
                return Err(Error::Link(format!(
                    "edge {}: word has {} strands at wall 0 but the side has {} arc ends",
                    edge.name,
                    w.n0(),
                    n0
                )));
            }
            if let Some(s) = edge.slots.get(1) {
                let n1 = self.slot_count(*s);
                if w.n1() != n1 {
                    return Err(Error::Link(format!(
                        "edge {}: word has {} strands at wall 1 but the side has {} arc ends",
                        edge.name,
                        w.n1(),
                        n1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn triangulation(&self) -> &Arc<IdealTriangulation> {
        &self.tri
    }

    /// Arcs of a face in increasing elevation.
    pub fn face_arcs(&self, f: usize) -> &[TriangleArc] {
        &self.arcs[f]
    }

    pub fn arcs(&self) -> &[Vec<TriangleArc>] {
        &self.arcs
    }

    pub fn word(&self, e: usize) -> &TangleWord {
        &self.words[e]
    }

    pub fn words(&self) -> &[TangleWord] {
        &self.words
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.iter().map(|a| a.len()).sum()
    }

    /// Number of arc ends on a side.
    pub fn slot_count(&self, s: Slot) -> usize {
        self.arcs[s.face].iter().filter(|a| a.touches(s.pos)).count()
    }

    /// Arc ranks touching a side, bottom to top.
    pub fn slot_arcs(&self, s: Slot) -> Vec<usize> {
        (0..self.arcs[s.face].len()).filter(|r| self.arcs[s.face][*r].touches(s.pos)).collect()
    }

    /// Wall position of the end of arc `rank` on side `pos`.
    pub fn end_position(&self, face: usize, rank: usize, pos: usize) -> Option<usize> {
        self.slot_arcs(Slot::new(face, pos)).iter().position(|r| *r == rank)
    }

    /// Number of link endpoints on each boundary edge.
    pub fn boundary_points(&self) -> BTreeMap<usize, usize> {
        self.tri
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_boundary())
            .map(|(i, _)| (i, self.words[i].n1()))
            .collect()
    }

    /// Strand crossings of each edge.
    pub fn crossing_counts(&self) -> Vec<usize> {
        self.tri
            .edges()
            .iter()
            .map(|e| self.slot_count(e.slots[0]))
            .collect()
    }

    /// Stacks `other` above `self`. The trace of the result is
    /// `Tr(self) * Tr(other)`.
    pub fn superpose(&self, other: &GoodPositionLink) -> Result<GoodPositionLink> {
        if self.tri != other.tri {
            return Err(Error::Link("superpose needs the same triangulation".into()));
        }
        let mut arcs = Vec::new();
        for f in 0..self.tri.faces() {
            let base = self.arcs[f].len() as i64;
            arcs.extend(self.arcs[f].iter().copied());
            arcs.extend(other.arcs[f].iter().map(|a| TriangleArc { elev: a.elev + base, ..*a }));
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .enumerate()
            .map(|(e, (a, b))| (e, a.stack(b)))
            .collect();
        GoodPositionLink::new(self.tri.clone(), arcs, words)
    }

    /// True when no word has crossings, cups or caps.
    pub fn is_simple(&self) -> bool {
        self.words.iter().all(|w| w.is_identity())
    }

    /// Intersection numbers with the edges, for simple diagrams.
    pub fn leading_intersection_vector(&self) -> Result<Vec<i32>> {
        if let Some(e) = self.words.iter().position(|w| !w.is_identity()) {
            return Err(Error::NotSimple(format!("edge {} carries {}", self.tri.edge(e).name, self.words[e])));
        }
        Ok(self.crossing_counts().into_iter().map(|c| c as i32).collect())
    }

    pub fn with_words(&self, words: Vec<TangleWord>) -> Result<GoodPositionLink> {
        GoodPositionLink::from_parts(self.tri.clone(), self.arcs.clone(), words)
    }
}

/// Signs of the link endpoints on boundary edges, bottom to top.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryState {
    pub signs: BTreeMap<usize, Vec<Sign>>,
}

impl BoundaryState {
    /// Checks that the state covers exactly the link's boundary points.
    pub fn check(&self, link: &GoodPositionLink) -> Result<()> {
        let need = link.boundary_points();
        for (e, n) in &need {
            let have = self.signs.get(e).map_or(0, |v| v.len());
            if have != *n {
                return Err(Error::State(format!(
                    "edge {} has {} boundary points but {} states",
                    link.tri.edge(*e).name,
                    n,
                    have
                )));
            }
        }
        if let Some(e) = self.signs.keys().find(|e| !need.contains_key(e)) {
            if !self.signs[e].is_empty() {
                return Err(Error::State(format!("edge {e} is not a boundary edge")));
            }
        }
        Ok(())
    }

    /// Every state on the link's boundary points.
    pub fn all(link: &GoodPositionLink) -> Vec<BoundaryState> {
        let need: Vec<(usize, usize)> = link.boundary_points().into_iter().collect();
        let total: usize = need.iter().map(|(_, n)| n).sum();
        crate::biangle::all_signs(total)
            .into_iter()
            .map(|flat| {
                let mut signs = BTreeMap::new();
                let mut k = 0;
                for (e, n) in &need {
                    signs.insert(*e, flat[k..k + n].to_vec());
                    k += n;
                }
                BoundaryState { signs }
            })
            .collect()
    }

    /// The same sign on every boundary point.
    pub fn constant(link: &GoodPositionLink, s: Sign) -> BoundaryState {
        BoundaryState {
            signs: link.boundary_points().into_iter().map(|(e, n)| (e, vec![s; n])).collect(),
        }
    }

    /// `self` below `other`, matching `superpose`.
    pub fn stack(&self, other: &BoundaryState) -> BoundaryState {
        let mut signs = self.signs.clone();
        for (e, v) in &other.signs {
            signs.entry(*e).or_default().extend_from_slice(v);
        }
        BoundaryState { signs }
    }

    pub fn describe(&self, tri: &IdealTriangulation) -> String {
        let parts: Vec<String> = self
            .signs
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(e, v)| format!("{}:{}", tri.edge(*e).name, crate::biangle::signs_to_string(v)))
            .collect();
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Sparse contraction with zero pruning.
    #[default]
    Contract,
    /// Plain enumeration of all 2^P states.
    Naive,
}

#[derive(Clone, Copy, Debug)]
pub struct TraceOptions {
    pub method: Method,
    pub max_points: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self { method: Method::Contract, max_points: MAX_POINTS }
    }
}

/// One factor of the state sum: a table of values over some points.
pub(crate) struct Item {
    pub points: Vec<usize>,
    pub table: Vec<(Vec<Sign>, QTElement)>,
}

/// Scalar factor over some points (a biangle).
pub(crate) struct Scalar {
    pub points: Vec<usize>,
    pub table: HashMap<Vec<Sign>, OmegaPoly>,
}

/// A state sum: items are multiplied in order, scalars multiply in.
pub(crate) struct Network {
    pub n_points: usize,
    pub comm: Arc<CommutationMatrix>,
    pub items: Vec<Item>,
    pub scalars: Vec<Scalar>,
}

impl Network {
    pub fn evaluate(&self, method: Method) -> QTElement {
        match method {
            Method::Contract => self.contract(),
            Method::Naive => self.naive(),
        }
    }

    fn naive(&self) -> QTElement {
        let mut out = QTElement::zero(self.comm.clone());
        let mut signs = vec![Sign::Plus; self.n_points];
        'states: for mask in 0..1u64 << self.n_points {
            for (i, s) in signs.iter_mut().enumerate() {
                *s = if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus };
            }
            let mut scalar = OmegaPoly::one();
            for sc in &self.scalars {
                let key: Vec<Sign> = sc.points.iter().map(|p| signs[*p]).collect();
                match sc.table.get(&key) {
                    Some(v) => scalar = &scalar * v,
                    None => continue 'states,
                }
            }
            let mut acc = QTElement::scalar(self.comm.clone(), scalar);
            for it in &self.items {
                let key: Vec<Sign> = it.points.iter().map(|p| signs[*p]).collect();
                match it.table.iter().find(|(k, _)| *k == key) {
                    Some((_, v)) => acc = acc.multiply(v).expect("same torus"),
                    None => continue 'states,
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    fn contract(&self) -> QTElement {
        // remaining references per point, items and scalars together
        let mut refs = vec![0usize; self.n_points];
        for it in &self.items {
            for p in &it.points {
                refs[*p] += 1;
            }
        }
        for sc in &self.scalars {
            for p in &sc.points {
                refs[*p] += 1;
            }
        }
        let mut applied = vec![false; self.scalars.len()];
        let mut assigned_any = vec![false; self.n_points];
        let mut states: BTreeMap<Vec<i8>, QTElement> = BTreeMap::new();
        let mut scalar0 = OmegaPoly::one();
        for (i, sc) in self.scalars.iter().enumerate() {
            if sc.points.is_empty() {
                applied[i] = true;
                scalar0 = &scalar0 * sc.table.get(&Vec::new()).unwrap_or(&OmegaPoly::zero());
            }
        }
        states.insert(vec![0; self.n_points], QTElement::scalar(self.comm.clone(), scalar0));
        for it in &self.items {
            let mut next: BTreeMap<Vec<i8>, QTElement> = BTreeMap::new();
            for (key, val) in &states {
                if val.is_zero() {
                    continue;
                }
                'entries: for (signs, v) in &it.table {
                    let mut k = key.clone();
                    for (p, s) in it.points.iter().zip(signs) {
                        let sv = s.value() as i8;
                        if k[*p] != 0 && k[*p] != sv {
                            continue 'entries;
                        }
                        k[*p] = sv;
                    }
                    let prod = val.multiply(v).expect("same torus");
                    match next.get_mut(&k) {
                        Some(x) => x.add_assign(&prod),
                        None => {
                            next.insert(k, prod);
                        }
                    }
                }
            }
            for p in &it.points {
                assigned_any[*p] = true;
                refs[*p] -= 1;
            }
            states = next;
            // fold in every scalar whose points are now all assigned
            for (i, sc) in self.scalars.iter().enumerate() {
                if applied[i] || !sc.points.iter().all(|p| assigned_any[*p]) {
                    continue;
                }
                applied[i] = true;
                let mut next = BTreeMap::new();
                for (key, val) in states {
                    let sk: Vec<Sign> = sc.points.iter().map(|p| Sign::from_value(key[*p] as i32)).collect();
                    if let Some(c) = sc.table.get(&sk) {
                        let v = val.scale(c);
                        if !v.is_zero() {
                            next.insert(key, v);
                        }
                    }
                }
                states = next;
                for p in &sc.points {
                    refs[*p] -= 1;
                }
            }
            // forget points nobody needs any more
            let dead: Vec<usize> = (0..self.n_points).filter(|p| assigned_any[*p] && refs[*p] == 0).collect();
            if !dead.is_empty() {
                let mut merged: BTreeMap<Vec<i8>, QTElement> = BTreeMap::new();
                for (mut key, val) in states {
                    for p in &dead {
                        key[*p] = 0;
                    }
                    match merged.get_mut(&key) {
                        Some(x) => x.add_assign(&val),
                        None => {
                            merged.insert(key, val);
                        }
                    }
                }
                states = merged;
            }
        }
        let mut out = QTElement::zero(self.comm.clone());
        for (_, v) in states {
            out.add_assign(&v);
        }
        out
    }
}

/// Nonzero entries `(s0 ++ s1) -> trace` of a word, enumerated per matching.
pub(crate) fn word_table(word: &TangleWord) -> Result<HashMap<Vec<Sign>, OmegaPoly>> {
    let n0 = word.n0();
    let idx = |p: &WallPoint| if p.wall == 0 { p.pos } else { n0 + p.pos };
    let mut out: HashMap<Vec<Sign>, OmegaPoly> = HashMap::new();
    for (w, m) in kauffman_resolve(word)? {
        let k = m.pairs.len();
        let mut signs = vec![Sign::Plus; n0 + word.n1()];
        'choices: for mask in 0..1u32 << k {
            let mut val = w.clone();
            for (j, (a, b)) in m.pairs.iter().enumerate() {
                let s = if mask >> j & 1 == 0 { Sign::Plus } else { Sign::Minus };
                if a.wall != b.wall {
                    signs[idx(a)] = s;
                    signs[idx(b)] = s;
                } else {
                    // b is the higher point
                    signs[idx(b)] = s;
                    signs[idx(a)] = s.flip();
                    let u = crate::biangle::uturn_weight(a.wall, s, s.flip());
                    if u.is_zero() {
                        continue 'choices;
                    }
                    val = &val * &u;
                }
            }
            *out.entry(signs.clone()).or_default() += &val;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Points are arc ends: id `2 * arc + end`, arcs numbered face by face.
pub(crate) struct Layout {
    pub arc_base: Vec<usize>,
    pub n_points: usize,
}

impl Layout {
    pub fn new(link: &GoodPositionLink) -> Self {
        let mut arc_base = Vec::new();
        let mut k = 0;
        for f in 0..link.tri.faces() {
            arc_base.push(k);
            k += link.arcs[f].len();
        }
        Self { arc_base, n_points: 2 * k }
    }

    pub fn point(&self, face: usize, rank: usize, end: usize) -> usize {
        2 * (self.arc_base[face] + rank) + end
    }

    /// Points on a side, bottom to top.
    pub fn slot_points(&self, link: &GoodPositionLink, s: Slot) -> Vec<usize> {
        link.arcs[s.face]
            .iter()
            .enumerate()
            .filter(|(_, a)| a.touches(s.pos))
            .map(|(r, a)| self.point(s.face, r, if a.slot_in == s.pos { 0 } else { 1 }))
            .collect()
    }
}

/// Biangle factors with boundary states substituted.
pub(crate) fn biangle_scalars(
    link: &GoodPositionLink,
    layout: &Layout,
    state: &BoundaryState,
) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    for (e, edge) in link.tri.edges().iter().enumerate() {
        let word = &link.words[e];
        let p0 = layout.slot_points(link, edge.slots[0]);
        let full = word_table(word)?;
        if let Some(s1) = edge.slots.get(1) {
            let mut points = p0;
            points.extend(layout.slot_points(link, *s1));
            out.push(Scalar { points, table: full });
        } else {
            let fixed = state.signs.get(&e).cloned().unwrap_or_default();
            let n0 = p0.len();
            let table = full
                .into_iter()
                .filter(|(k, _)| k[n0..] == fixed[..])
                .map(|(k, v)| (k[..n0].to_vec(), v))
                .collect();
            out.push(Scalar { points: p0, table });
        }
    }
    Ok(out)
}

/// Arc factors in face order, elevation order within each face.
pub(crate) fn arc_items(link: &GoodPositionLink, layout: &Layout, comm: &Arc<CommutationMatrix>) -> Vec<Item> {
    let mut items = Vec::new();
    for f in 0..link.tri.faces() {
        for (r, arc) in link.arcs[f].iter().enumerate() {
            let mut table = Vec::new();
            for a in Sign::both() {
                for b in Sign::both() {
                    if let Some(m) = corner_arc_trace(arc, a, b, comm) {
                        table.push((vec![a, b], QTElement::monomial(comm.clone(), m.coeff, m.exps)));
                    }
                }
            }
            items.push(Item { points: vec![layout.point(f, r, 0), layout.point(f, r, 1)], table });
        }
    }
    items
}

/// The state sum in the triangle tensor algebra, before the change of basis.
pub fn tensor_trace(link: &GoodPositionLink, state: &BoundaryState, opts: TraceOptions) -> Result<QTElement> {
    state.check(link)?;
    let layout = Layout::new(link);
    if layout.n_points > opts.max_points {
        return Err(Error::TooManyPoints(layout.n_points, opts.max_points));
    }
    let comm = Arc::new(link.tri.triangle_commutation());
    let net = Network {
        n_points: layout.n_points,
        items: arc_items(link, &layout, &comm),
        scalars: biangle_scalars(link, &layout, state)?,
        comm,
    };
    Ok(net.evaluate(opts.method))
}

/// Quantum trace in the Weyl edge basis.
pub fn quantum_trace(link: &GoodPositionLink, state: &BoundaryState) -> Result<QTElement> {
    quantum_trace_with(link, state, TraceOptions::default())
}

pub fn quantum_trace_with(link: &GoodPositionLink, state: &BoundaryState, opts: TraceOptions) -> Result<QTElement> {
    let t = tensor_trace(link, state, opts)?;
    let sigma = Arc::new(link.tri.sigma_matrix());
    link.tri.tensor_to_edge(&t, sigma)
}

/// Turn sequences of the closed components of a simple diagram.
pub fn turn_sequences(link: &GoodPositionLink) -> Result<Vec<Vec<crate::classical::TurnStep>>> {
    use crate::classical::{Turn, TurnStep};
    if !link.is_simple() {
        return Err(Error::NotSimple("words must be identities".into()));
    }
    let tri = &link.tri;
    let mut seen: Vec<Vec<bool>> = link.arcs.iter().map(|a| vec![false; a.len()]).collect();
    let mut out = Vec::new();
    for f0 in 0..tri.faces() {
        for r0 in 0..link.arcs[f0].len() {
            if seen[f0][r0] {
                continue;
            }
            // walk forward from the in-end of this arc
            let mut steps = Vec::new();
            let (mut f, mut r, mut from) = (f0, r0, link.arcs[f0][r0].slot_in);
            loop {
                seen[f][r] = true;
                let arc = link.arcs[f][r];
                let to = if arc.slot_in == from { arc.slot_out } else { arc.slot_in };
                let turn = if (from + 1) % 3 == to { Turn::Left } else { Turn::Right };
                steps.push(TurnStep { edge: tri.edge_of(Slot::new(f, from)), turn, t: 0 });
                let exit = Slot::new(f, to);
                let pos = link.end_position(f, r, to).expect("arc touches its side");
                let other = tri
                    .partner(exit)
                    .ok_or_else(|| Error::NotSimple("component reaches the boundary".into()))?;
                let nr = link.slot_arcs(other)[pos];
                if other.face == f0 && nr == r0 {
                    break;
                }
                if seen[other.face][nr] {
                    return Err(Error::NotSimple("inconsistent strand walk".into()));
                }
                f = other.face;
                r = nr;
                from = other.pos;
            }
            // the first step's edge is where the walk re-enters the start arc
            out.push(steps);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::standard;
    use Sign::Plus as P;

    fn arc(f: usize, a: usize, b: usize, e: i64) -> TriangleArc {
        TriangleArc::new(f, a, b, e).unwrap()
    }

    fn state(pairs: &[(usize, &[Sign])]) -> BoundaryState {
        BoundaryState { signs: pairs.iter().map(|(e, s)| (*e, s.to_vec())).collect() }
    }

    #[test]
    fn triangle_corner() {
        let tri = Arc::new(standard::triangle());
        let l = GoodPositionLink::new(tri, vec![arc(0, 0, 1, 0)], BTreeMap::new()).unwrap();
        let t = quantum_trace(&l, &state(&[(0, &[P]), (1, &[P]), (2, &[])])).unwrap();
        assert_eq!(t.to_string(), "(1*w^0) * [Z1^1 Z2^1]");
    }

    #[test]
    fn torus_curve() {
        let tri = Arc::new(standard::punctured_torus());
        let l = GoodPositionLink::new(tri, vec![arc(0, 0, 1, 0), arc(1, 0, 1, 0)], BTreeMap::new()).unwrap();
        let t = quantum_trace(&l, &BoundaryState::default()).unwrap();
        let n = quantum_trace_with(&l, &BoundaryState::default(), TraceOptions { method: Method::Naive, ..Default::default() }).unwrap();
        assert_eq!(t, n);
        assert_eq!(t.len(), 3);
        for k in [[1, 1, 0], [1, -1, 0], [-1, -1, 0]] {
            assert_eq!(t.weyl_coeff(&k), OmegaPoly::one(), "{k:?} in {t}");
        }
        assert_eq!(l.leading_intersection_vector().unwrap(), vec![1, 1, 0]);
    }

    #[test]
    fn square_strand() {
        // strand s2 -> d -> s4
        let tri = Arc::new(standard::square());
        let l = GoodPositionLink::new(tri, vec![arc(0, 0, 1, 0), arc(1, 0, 2, 0)], BTreeMap::new()).unwrap();
        let st = state(&[(1, &[P]), (2, &[]), (3, &[P]), (4, &[])]);
        let t = quantum_trace(&l, &st).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.weyl_coeff(&[1, 1, 0, 1, 0]), OmegaPoly::one());
        assert_eq!(t.weyl_coeff(&[-1, 1, 0, 1, 0]), OmegaPoly::one());
    }

    #[test]
    fn loop_in_biangle() {
        let tri = Arc::new(standard::punctured_torus());
        let words = [(0, crate::biangle::words::small_loop())].into_iter().collect();
        let l = GoodPositionLink::new(tri, vec![], words).unwrap();
        let t = quantum_trace(&l, &BoundaryState::default()).unwrap();
        assert_eq!(t.weyl_coeff(&[0, 0, 0]), OmegaPoly::loop_value());
    }
}
