//! Property suites run against a single link.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biangle::{Slice, TangleWord};
use crate::classical::{classical_state_sum, holonomy_trace, ShearAssignment};
use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;
use crate::quantum_torus::{CommPoly, QTElement, TermOrder};
use crate::state_sum::moves::{applicable, apply_move, Move};
use crate::state_sum::{quantum_trace, MAX_POINTS, turn_sequences, BoundaryState, GoodPositionLink};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Moves,
    Skein,
    Classical,
    Leading,
    Balanced,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "moves" => Suite::Moves,
            "skein" => Suite::Skein,
            "classical" => Suite::Classical,
            "leading" => Suite::Leading,
            "balanced" => Suite::Balanced,
            _ => return Err(Error::Parse { line: 0, msg: format!("unknown suite `{s}`") }),
        })
    }
}

/// One reported assertion.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub what: String,
    pub ok: bool,
}

impl Assertion {
    fn new(what: impl Into<String>, ok: bool) -> Self {
        Self { what: what.into(), ok }
    }
}

pub fn run_suite(link: &GoodPositionLink, suite: Suite, seed: u64) -> Result<Vec<Assertion>> {
    match suite {
        Suite::Moves => moves(link, seed, 12),
        Suite::Skein => skein(link),
        Suite::Classical => classical(link, seed),
        Suite::Leading => leading(link),
        Suite::Balanced => balanced(link),
    }
}

/// Traces for every boundary state.
pub fn all_traces(link: &GoodPositionLink) -> Result<Vec<(BoundaryState, QTElement)>> {
    BoundaryState::all(link).into_iter().map(|s| Ok((s.clone(), quantum_trace(link, &s)?))).collect()
}

/// A random walk of moves; every step must keep every trace.
pub fn moves(link: &GoodPositionLink, seed: u64, steps: usize) -> Result<Vec<Assertion>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = all_traces(link)?;
    let mut cur = link.clone();
    let mut out = Vec::new();
    for _ in 0..steps {
        let mut options: Vec<_> = Move::ALL.iter().flat_map(|m| applicable(&cur, *m).into_iter().map(move |l| (*m, l))).collect();
        options.shuffle(&mut rng);
        // skip steps that would push the link past the point cap
        let mut next = None;
        for (mv, loc) in options {
            let l = apply_move(&cur, mv, loc)?;
            if 2 * l.arc_count() <= MAX_POINTS {
                next = Some((mv, loc, l));
                break;
            }
        }
        let Some((mv, loc, l)) = next else { break };
        cur = l;
        let same = all_traces(&cur)? == base;
        out.push(Assertion::new(format!("move {mv} at face {} rank {} preserves the trace", loc.face + 1, loc.rank), same));
    }
    Ok(out)
}

/// The two smoothings of a crossing slice.
fn smoothings(w: &TangleWord, i: usize) -> Result<(TangleWord, TangleWord)> {
    let p = match w.slices()[i] {
        Slice::CrossOver(p) | Slice::CrossUnder(p) => p,
        _ => unreachable!("caller passes crossings"),
    };
    let mut straight = w.slices().to_vec();
    straight[i] = Slice::Id;
    let mut turn = w.slices().to_vec();
    turn.splice(i..=i, [Slice::Cap(p), Slice::Cup(p)]);
    Ok((TangleWord::new(w.n0(), straight)?, TangleWord::new(w.n0(), turn)?))
}

/// Kauffman relation at every crossing of every biangle.
pub fn skein(link: &GoodPositionLink) -> Result<Vec<Assertion>> {
    let a = OmegaPoly::a();
    let a_inv = OmegaPoly::w(2);
    let mut out = Vec::new();
    for e in 0..link.words().len() {
        let w = link.word(e);
        for (i, s) in w.slices().iter().enumerate() {
            let over = match s {
                Slice::CrossOver(_) => true,
                Slice::CrossUnder(_) => false,
                _ => continue,
            };
            let (w0, winf) = smoothings(w, i)?;
            let with = |x: TangleWord| {
                let mut ws = link.words().to_vec();
                ws[e] = x;
                link.with_words(ws)
            };
            let (k0, kinf) = (with(w0)?, with(winf)?);
            let (c0, cinf) = if over { (&a_inv, &a) } else { (&a, &a_inv) };
            let mut ok = true;
            for st in BoundaryState::all(link) {
                let lhs = quantum_trace(link, &st)?;
                let mut rhs = quantum_trace(&k0, &st)?.scale(c0);
                rhs.add_assign(&quantum_trace(&kinf, &st)?.scale(cinf));
                ok &= lhs == rhs;
            }
            out.push(Assertion::new(
                format!("skein relation at slice {} of edge {}", i + 1, link.triangulation().edge(e).name),
                ok,
            ));
        }
    }
    Ok(out)
}

/// Classical specialization against turn sequences and holonomy.
pub fn classical(link: &GoodPositionLink, seed: u64) -> Result<Vec<Assertion>> {
    let n = link.triangulation().n_edges();
    let seqs = turn_sequences(link)?;
    let mut poly = CommPoly::default();
    poly.add_term(vec![0; n], 1.into());
    for s in &seqs {
        poly = poly.mul(&classical_state_sum(s, n));
    }
    let q = quantum_trace(link, &BoundaryState::default())?.specialize_commutative();
    let mut out = vec![Assertion::new(format!("omega = 1 specialization equals the classical state sum {poly}"), q == poly)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..20 {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..10.0)).collect();
        let sh = ShearAssignment::from_slice(&x)?;
        let mut h = 1.0;
        for s in &seqs {
            h *= holonomy_trace(s, &sh)?;
        }
        let v = poly.eval(&sh.roots(n)?);
        let ok = (v - h).abs() <= 1e-9 * h.abs().max(1.0);
        out.push(Assertion::new(format!("shear sample {}: state sum {v:.12} vs holonomy {h:.12}", k + 1), ok));
    }
    Ok(out)
}

/// Leading term of a simple diagram.
pub fn leading(link: &GoodPositionLink) -> Result<Vec<Assertion>> {
    let k = link.leading_intersection_vector()?;
    let t = quantum_trace(link, &BoundaryState::constant(link, crate::biangle::Sign::Plus))?;
    let lt = t.leading_term(TermOrder::DegLex)?;
    let unit = t.weyl_coeff(&lt.exps).as_unit().is_some();
    Ok(vec![
        Assertion::new(format!("leading exponent {:?} equals intersection vector {:?}", lt.exps, k), lt.exps == k),
        Assertion::new("leading coefficient is a unit", unit),
    ])
}

/// Balancedness and parity of every output monomial.
pub fn balanced(link: &GoodPositionLink) -> Result<Vec<Assertion>> {
    let tri = link.triangulation();
    let parity: Vec<i32> = link.crossing_counts().iter().map(|c| (*c % 2) as i32).collect();
    let mut out = Vec::new();
    for (st, t) in all_traces(link)? {
        let mut bal = true;
        let mut par = true;
        for (k, _) in t.terms() {
            bal &= tri.balanced(k).is_some();
            par &= k.iter().zip(&parity).all(|(x, p)| x.rem_euclid(2) == *p);
        }
        let label = if st.signs.values().all(|v| v.is_empty()) { String::new() } else { format!(" for {}", st.describe(tri)) };
        out.push(Assertion::new(format!("monomials balanced{label}"), bal));
        out.push(Assertion::new(format!("exponent parity matches crossing counts{label}"), par));
    }
    Ok(out)
}
