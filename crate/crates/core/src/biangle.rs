//! Stated tangles in a biangle and their scalar trace.
//!
//! A word is read from wall 0 to wall 1. Positions count from the bottom
//! (lowest elevation), 0-based here and 1-based in text.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;

/// Resolution is refused beyond this many crossings.
pub const MAX_CROSSINGS: usize = 16;

/// Wall whose returning arcs carry the extra `-A^-3` factor. The other
/// wall gets the plain alpha/beta weights.
pub const KINKED_WALL: usize = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i32) -> Sign {
        if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Parses a compact sign string such as `+-+` (whitespace ignored).
pub fn parse_signs(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::State(format!("bad sign `{c}`"))),
        })
        .collect()
}

pub fn signs_to_string(s: &[Sign]) -> String {
    s.iter().map(|x| x.to_string()).collect()
}

/// All sign vectors of length `n`.
pub fn all_signs(n: usize) -> Vec<Vec<Sign>> {
    (0..1u64 << n)
        .map(|m| {
            (0..n)
                .map(|i| if m >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    Id,
    /// The strand entering at `p` passes over the one entering at `p + 1`.
    CrossOver(usize),
    CrossUnder(usize),
    /// Creates two strands at `p`, `p + 1`.
    Cup(usize),
    /// Joins the strands at `p`, `p + 1`.
    Cap(usize),
}

impl Slice {
    fn shifted(self, k: usize) -> Slice {
        match self {
            Slice::Id => Slice::Id,
            Slice::CrossOver(p) => Slice::CrossOver(p + k),
            Slice::CrossUnder(p) => Slice::CrossUnder(p + k),
            Slice::Cup(p) => Slice::Cup(p + k),
            Slice::Cap(p) => Slice::Cap(p + k),
        }
    }

    fn apply(self, count: usize) -> Result<usize> {
        let bad = || Error::Word(format!("{self} invalid with {count} strands"));
        match self {
            Slice::Id => Ok(count),
            Slice::CrossOver(p) | Slice::CrossUnder(p) | Slice::Cap(p) if p + 1 >= count => Err(bad()),
            Slice::Cap(_) => Ok(count - 2),
            Slice::CrossOver(_) | Slice::CrossUnder(_) => Ok(count),
            Slice::Cup(p) if p > count => Err(bad()),
            Slice::Cup(_) => Ok(count + 2),
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Id => write!(f, "id"),
            Slice::CrossOver(p) => write!(f, "x+ {}", p + 1),
            Slice::CrossUnder(p) => write!(f, "x- {}", p + 1),
            Slice::Cup(p) => write!(f, "cup {}", p + 1),
            Slice::Cap(p) => write!(f, "cap {}", p + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleWord {
    n0: usize,
    slices: Vec<Slice>,
}

impl TangleWord {
    pub fn new(n0: usize, slices: Vec<Slice>) -> Result<Self> {
        let w = Self { n0, slices };
        w.n1_checked()?;
        Ok(w)
    }

    pub fn identity(n: usize) -> Self {
        Self { n0: n, slices: Vec::new() }
    }

    /// Parses whitespace-separated tokens `id`, `x+ p`, `x- p`, `cup p`, `cap p`.
    pub fn parse(text: &str, n0: usize) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let mut slices = Vec::new();
        let mut i = 0;
        while i < toks.len() {
            let t = toks[i];
            if t == "id" {
                slices.push(Slice::Id);
                i += 1;
                continue;
            }
            let p: usize = toks
                .get(i + 1)
                .and_then(|x| x.parse().ok())
                .filter(|p| *p >= 1)
                .ok_or_else(|| Error::Word(format!("`{t}` needs a position >= 1")))?;
            let p = p - 1;
            slices.push(match t {
                "x+" => Slice::CrossOver(p),
                "x-" => Slice::CrossUnder(p),
                "cup" => Slice::Cup(p),
                "cap" => Slice::Cap(p),
                _ => return Err(Error::Word(format!("unknown token `{t}`"))),
            });
            i += 2;
        }
        Self::new(n0, slices)
    }

    /// Smallest wall-0 width for which the word is valid.
    pub fn parse_min_width(text: &str) -> Result<Self> {
        for n0 in 0..64 {
            if let Ok(w) = Self::parse(text, n0) {
                return Ok(w);
            }
        }
        Self::parse(text, 0)
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1_checked().expect("validated at construction")
    }

    fn n1_checked(&self) -> Result<usize> {
        let mut c = self.n0;
        for s in &self.slices {
            c = s.apply(c)?;
        }
        Ok(c)
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn crossings(&self) -> usize {
        self.slices
            .iter()
            .filter(|s| matches!(s, Slice::CrossOver(_) | Slice::CrossUnder(_)))
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.slices.iter().all(|s| *s == Slice::Id)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &TangleWord) -> Result<TangleWord> {
        if self.n1() != other.n0 {
            return Err(Error::Word(format!("cannot compose widths {} and {}", self.n1(), other.n0)));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        TangleWord::new(self.n0, slices)
    }

    /// Disjoint union with `other` placed above (higher elevation).
    pub fn stack(&self, other: &TangleWord) -> TangleWord {
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| s.shifted(self.n1())));
        TangleWord { n0: self.n0 + other.n0, slices }
    }

    /// Adds a slice at the wall-0 end.
    pub fn prepend(&self, s: Slice) -> Result<TangleWord> {
        let n0 = match s {
            Slice::Cap(_) => self.n0 + 2,
            Slice::Cup(_) => self
                .n0
                .checked_sub(2)
                .ok_or_else(|| Error::Word("cup at wall 0 needs two strands".into()))?,
            _ => self.n0,
        };
        let mut slices = vec![s];
        slices.extend_from_slice(&self.slices);
        TangleWord::new(n0, slices)
    }

    pub fn append(&self, s: Slice) -> Result<TangleWord> {
        let mut slices = self.slices.clone();
        slices.push(s);
        TangleWord::new(self.n0, slices)
    }

    /// Removes the first slice.
    pub fn pop_front(&self) -> Option<(Slice, TangleWord)> {
        let s = *self.slices.first()?;
        let n0 = match s {
            Slice::Cap(_) => self.n0 - 2,
            Slice::Cup(_) => self.n0 + 2,
            _ => self.n0,
        };
        Some((s, TangleWord { n0, slices: self.slices[1..].to_vec() }))
    }

    pub fn pop_back(&self) -> Option<(Slice, TangleWord)> {
        let s = *self.slices.last()?;
        Some((s, TangleWord { n0: self.n0, slices: self.slices[..self.slices.len() - 1].to_vec() }))
    }

    /// Drops `Id` slices.
    pub fn compact(&self) -> TangleWord {
        TangleWord {
            n0: self.n0,
            slices: self.slices.iter().copied().filter(|s| *s != Slice::Id).collect(),
        }
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.slices.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A boundary point of a biangle: `(wall, position)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WallPoint {
    pub wall: usize,
    pub pos: usize,
}

/// Planar perfect matching of wall points plus a count of closed loops.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossinglessMatching {
    pub pairs: Vec<(WallPoint, WallPoint)>,
    pub loops: usize,
}

/// Matching of a word that contains no crossings.
pub fn matching_of(word: &TangleWord) -> Result<CrossinglessMatching> {
    // nodes: wall points and cup ends; edges join the two ends of each piece
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut kind: Vec<Option<WallPoint>> = Vec::new();
    let mut fresh = |adj: &mut Vec<Vec<usize>>, k: Option<WallPoint>| {
        adj.push(Vec::new());
        kind.push(k);
        adj.len() - 1
    };
    let mut cur: Vec<usize> = (0..word.n0)
        .map(|i| fresh(&mut adj, Some(WallPoint { wall: 0, pos: i })))
        .collect();
    for s in &word.slices {
        match *s {
            Slice::Id => {}
            Slice::Cup(p) => {
                let a = fresh(&mut adj, None);
                let b = fresh(&mut adj, None);
                adj[a].push(b);
                adj[b].push(a);
                cur.splice(p..p, [a, b]);
            }
            Slice::Cap(p) => {
                let (a, b) = (cur[p], cur[p + 1]);
                adj[a].push(b);
                adj[b].push(a);
                cur.drain(p..p + 2);
            }
            Slice::CrossOver(_) | Slice::CrossUnder(_) => {
                return Err(Error::Word("matching_of needs a crossingless word".into()))
            }
        }
    }
    for (i, c) in cur.iter().enumerate() {
        let t = fresh(&mut adj, Some(WallPoint { wall: 1, pos: i }));
        adj[t].push(*c);
        adj[*c].push(t);
    }
    let mut seen = vec![false; adj.len()];
    let mut pairs = Vec::new();
    for start in 0..adj.len() {
        if seen[start] || kind[start].is_none() {
            continue;
        }
        // walk from a boundary node to the other end
        seen[start] = true;
        let (mut prev, mut at) = (start, adj[start][0]);
        seen[at] = true;
        while kind[at].is_none() {
            let next = if adj[at][0] == prev { adj[at][1] } else { adj[at][0] };
            prev = at;
            at = next;
            seen[at] = true;
        }
        let (a, b) = (kind[start].unwrap(), kind[at].unwrap());
        pairs.push(if a < b { (a, b) } else { (b, a) });
    }
    let mut loops = 0;
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if !seen[x] {
                seen[x] = true;
                stack.extend(adj[x].iter().copied());
            }
        }
    }
    pairs.sort();
    Ok(CrossinglessMatching { pairs, loops })
}

/// Resolves every crossing by `[K1] = A^-1 [K0] + A [Kinf]` and removes
/// loops with factor `-A^2 - A^-2`.
pub fn kauffman_resolve(word: &TangleWord) -> Result<Vec<(OmegaPoly, CrossinglessMatching)>> {
    let c = word.crossings();
    if c > MAX_CROSSINGS {
        return Err(Error::TooManyCrossings(c, MAX_CROSSINGS));
    }
    let a = OmegaPoly::a();
    let a_inv = OmegaPoly::w(2);
    let mut acc: BTreeMap<CrossinglessMatching, OmegaPoly> = BTreeMap::new();
    for mask in 0..1u32 << c {
        let mut weight = OmegaPoly::one();
        let mut slices = Vec::with_capacity(word.slices.len() + c);
        let mut k = 0;
        for s in &word.slices {
            match *s {
                Slice::CrossOver(p) | Slice::CrossUnder(p) => {
                    let straight = mask >> k & 1 == 0;
                    k += 1;
                    let over = matches!(s, Slice::CrossOver(_));
                    // over: straight smoothing weighs A^-1; under: A
                    let w = if straight == over { &a_inv } else { &a };
                    weight = &weight * w;
                    if !straight {
                        slices.push(Slice::Cap(p));
                        slices.push(Slice::Cup(p));
                    }
                }
                other => slices.push(other),
            }
        }
        let mut m = matching_of(&TangleWord { n0: word.n0, slices })?;
        weight = &weight * &OmegaPoly::loop_value().pow(m.loops as u32);
        m.loops = 0;
        *acc.entry(m).or_default() += &weight;
    }
    Ok(acc.into_iter().filter(|(_, w)| !w.is_zero()).map(|(m, w)| (w, m)).collect())
}

/// Weight of an arc returning to `wall`, read as (top sign, bottom sign).
pub fn uturn_weight(wall: usize, top: Sign, bottom: Sign) -> OmegaPoly {
    let base = match (top, bottom) {
        (Sign::Plus, Sign::Minus) => OmegaPoly::alpha(),
        (Sign::Minus, Sign::Plus) => OmegaPoly::beta(),
        _ => return OmegaPoly::zero(),
    };
    if wall == KINKED_WALL {
        &base * &OmegaPoly::term(-1, 6)
    } else {
        base
    }
}

/// Closed-form trace of a crossingless matching.
pub fn eval_matching(m: &CrossinglessMatching, s0: &[Sign], s1: &[Sign]) -> OmegaPoly {
    let sign = |p: WallPoint| if p.wall == 0 { s0[p.pos] } else { s1[p.pos] };
    let mut out = OmegaPoly::loop_value().pow(m.loops as u32);
    for (a, b) in &m.pairs {
        let w = if a.wall != b.wall {
            if sign(*a) == sign(*b) {
                OmegaPoly::one()
            } else {
                OmegaPoly::zero()
            }
        } else {
            // a < b, so b is the higher point
            uturn_weight(a.wall, sign(*b), sign(*a))
        };
        if w.is_zero() {
            return w;
        }
        out = &out * &w;
    }
    out
}

/// A tangle word with states on both walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatedTangle {
    pub word: TangleWord,
    pub s0: Vec<Sign>,
    pub s1: Vec<Sign>,
}

impl StatedTangle {
    pub fn new(word: TangleWord, s0: Vec<Sign>, s1: Vec<Sign>) -> Result<Self> {
        if s0.len() != word.n0() || s1.len() != word.n1() {
            return Err(Error::State(format!(
                "word has {} / {} endpoints, states have {} / {}",
                word.n0(),
                word.n1(),
                s0.len(),
                s1.len()
            )));
        }
        Ok(Self { word, s0, s1 })
    }
}

pub fn trace_b(t: &StatedTangle) -> Result<OmegaPoly> {
    let total = |s: &[Sign]| s.iter().map(|x| x.value()).sum::<i32>();
    if total(&t.s0) != total(&t.s1) {
        return Ok(OmegaPoly::zero());
    }
    Ok(trace_resolved(&kauffman_resolve(&t.word)?, &t.s0, &t.s1))
}

/// Sums weighted matchings for one state pair.
pub fn trace_resolved(res: &[(OmegaPoly, CrossinglessMatching)], s0: &[Sign], s1: &[Sign]) -> OmegaPoly {
    let mut out = OmegaPoly::zero();
    for (w, m) in res {
        let v = eval_matching(m, s0, s1);
        if !v.is_zero() {
            out += &(w * &v);
        }
    }
    out
}

/// Every nonzero entry `(s0, s1) -> trace` of a word.
pub fn trace_table(word: &TangleWord) -> Result<BTreeMap<(Vec<Sign>, Vec<Sign>), OmegaPoly>> {
    let res = kauffman_resolve(word)?;
    let mut out = BTreeMap::new();
    let s1s = all_signs(word.n1());
    for s0 in all_signs(word.n0()) {
        let t0: i32 = s0.iter().map(|x| x.value()).sum();
        for s1 in &s1s {
            if s1.iter().map(|x| x.value()).sum::<i32>() != t0 {
                continue;
            }
            let v = trace_resolved(&res, &s0, s1);
            if !v.is_zero() {
                out.insert((s0.clone(), s1.clone()), v);
            }
        }
    }
    Ok(out)
}

/// Small words used by tests and examples.
pub mod words {
    use super::*;

    /// A closed loop.
    pub fn small_loop() -> TangleWord {
        TangleWord::new(0, vec![Slice::Cup(0), Slice::Cap(0)]).expect("valid")
    }

    /// A curl on a single strand made with the given crossing slice at 1.
    pub fn kink(over: bool) -> TangleWord {
        let x = if over { Slice::CrossOver(0) } else { Slice::CrossUnder(0) };
        TangleWord::new(1, vec![Slice::Cup(1), x, Slice::Cap(1)]).expect("valid")
    }

    /// Right half-twist on two strands.
    pub fn right_half_twist() -> TangleWord {
        TangleWord::new(2, vec![Slice::CrossUnder(0)]).expect("valid")
    }
}
