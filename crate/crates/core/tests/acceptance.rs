//! The eleven acceptance criteria, one PASS/FAIL line each. Runs without
//! the test harness so the report is always printed.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtrace::biangle::{all_signs, trace_table, words, Sign, Slice, TangleWord};
use qtrace::check;
use qtrace::classical::{classical_state_sum, Turn, TurnStep};
use qtrace::flip::{check_tables, reposition_link, transfer_trace, FlipBlockTable, Side, CONNECTIONS};
use qtrace::omega_ring::OmegaPoly;
use qtrace::quantum_torus::{weyl_order, QTElement, TermOrder};
use qtrace::state_sum::moves::{applicable, apply_move, Move, MoveKind};
use qtrace::state_sum::random::{random_link, RandomParams};
use qtrace::state_sum::{quantum_trace, tensor_trace, BoundaryState, GoodPositionLink, TraceOptions};
use qtrace::surface::standard;

use common::*;

const SEED: u64 = 20261015;
const WALKS: usize = 80;
/// 10 moves, 2 faces, 3 corners.
const COMBOS_PER_SURFACE: usize = 60;
/// Relative error allowed between the classical state sum and the holonomy.
const CLASSICAL_REL_TOL: f64 = 1e-9;
const LIMIT_SKEIN: Duration = Duration::from_secs(1);
const LIMIT_MOVES: Duration = Duration::from_secs(10);
const LIMIT_FLIP: Duration = Duration::from_secs(5);
const LIMIT_KERNEL: Duration = Duration::from_secs(2);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn within(ok: bool, detail: String, t: Duration, limit: Duration) -> Outcome {
    let fast = t < limit;
    outcome(ok && fast, format!("{detail}, {:.2}s (limit {:.0}s)", t.as_secs_f64(), limit.as_secs_f64()))
}

fn get(m: &BTreeMap<(Vec<Sign>, Vec<Sign>), OmegaPoly>, k: &(Vec<Sign>, Vec<Sign>)) -> OmegaPoly {
    m.get(k).cloned().unwrap_or_else(OmegaPoly::zero)
}

fn same_table(a: &TangleWord, b: &TangleWord) -> bool {
    trace_table(a).unwrap() == trace_table(b).unwrap()
}

fn word(n0: usize, s: &[Slice]) -> TangleWord {
    TangleWord::new(n0, s.to_vec()).unwrap()
}

fn c1_biangle_skein() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (a, ai) = (OmegaPoly::a(), OmegaPoly::w(2));
    let mut bad = 0;
    let n = 200;
    for _ in 0..n {
        let n0 = rng.gen_range(0..=3);
        let c = rng.gen_range(1..=3);
        let w = random_word(&mut rng, n0, 6, c);
        let idx: Vec<usize> = (0..w.slices().len())
            .filter(|i| matches!(w.slices()[*i], Slice::CrossOver(_) | Slice::CrossUnder(_)))
            .collect();
        let i = *idx.choose(&mut rng).unwrap();
        let (over, p) = match w.slices()[i] {
            Slice::CrossOver(p) => (true, p),
            Slice::CrossUnder(p) => (false, p),
            _ => unreachable!(),
        };
        let mut s0 = w.slices().to_vec();
        s0[i] = Slice::Id;
        let mut s8 = w.slices().to_vec();
        s8.splice(i..=i, [Slice::Cap(p), Slice::Cup(p)]);
        let (k1, k0, k8) = (trace_table(&w).unwrap(), trace_table(&word(n0, &s0)).unwrap(), trace_table(&word(n0, &s8)).unwrap());
        let (c0, c8) = if over { (&ai, &a) } else { (&a, &ai) };
        let keys: BTreeSet<_> = k1.keys().chain(k0.keys()).chain(k8.keys()).cloned().collect();
        if keys.iter().any(|k| get(&k1, k) != &(c0 * &get(&k0, k)) + &(c8 * &get(&k8, k))) {
            bad += 1;
        }
    }
    within(bad == 0, format!("{n} random stated tangles, {bad} violations"), t.elapsed(), LIMIT_SKEIN)
}

fn c2_biangle_constants() -> Outcome {
    let one = |w: &TangleWord, s0: &[Sign], s1: &[Sign]| get(&trace_table(w).unwrap(), &(s0.to_vec(), s1.to_vec()));
    let a = OmegaPoly::a();
    let a_inv4 = OmegaPoly::w(8);
    let (al, be) = (OmegaPoly::alpha(), OmegaPoly::beta());
    let mut fails = Vec::new();
    let lp = one(&words::small_loop(), &[], &[]);
    if lp != -(&a.pow(2) + &OmegaPoly::w(4)) {
        fails.push("loop");
    }
    let minus_a_inv3 = -OmegaPoly::w(6);
    let minus_a3 = -a.pow(3);
    for s in Sign::both() {
        if one(&words::kink(true), &[s], &[s]) != minus_a_inv3 {
            fails.push("positive kink");
        }
        if one(&words::kink(false), &[s], &[s]) != minus_a3 {
            fails.push("negative kink");
        }
    }
    // e1 is the upper strand; states are listed bottom to top
    let tw = words::right_half_twist();
    let mut checked = 0;
    for e in all_signs(4) {
        let (e1, e2, f1, f2) = (e[0], e[1], e[2], e[3]);
        let expect = if e1 == f1 && e2 == f2 && e1 == e2 {
            a.clone()
        } else if e1 == f1 && e2 == f2 && e1 == Sign::Plus {
            &a - &(&a_inv4 * &(&al * &al))
        } else if e1 == f1 && e2 == f2 {
            &a - &(&a_inv4 * &(&be * &be))
        } else if e1 == f2 && e2 == f1 && e1 != e2 {
            -(&a_inv4 * &(&al * &be))
        } else {
            OmegaPoly::zero()
        };
        checked += 1;
        if one(&tw, &[e2, e1], &[f2, f1]) != expect {
            fails.push("right half-twist");
        }
    }
    let vanishing = (&a - &(&a_inv4 * &(&al * &al))).is_zero();
    if !vanishing {
        fails.push("A - A^-4 alpha^2 != 0");
    }
    outcome(
        fails.is_empty(),
        format!("loop, 4 kink values, {checked} half-twist states, A - A^-4 alpha^2 = {}; failures {fails:?}", &a - &(&a_inv4 * &(&al * &al))),
    )
}

fn c3_planar_invariance() -> Outcome {
    use Slice::*;
    let cases: Vec<(&str, TangleWord, TangleWord)> = vec![
        ("snake left", word(1, &[Cup(1), Cap(0)]), TangleWord::identity(1)),
        ("snake right", word(1, &[Cup(0), Cap(1)]), TangleWord::identity(1)),
        ("R2 over/under", word(2, &[CrossOver(0), CrossUnder(0)]), TangleWord::identity(2)),
        ("R2 under/over", word(2, &[CrossUnder(0), CrossOver(0)]), TangleWord::identity(2)),
        ("R3 over", word(3, &[CrossOver(0), CrossOver(1), CrossOver(0)]), word(3, &[CrossOver(1), CrossOver(0), CrossOver(1)])),
        ("R3 under", word(3, &[CrossUnder(0), CrossUnder(1), CrossUnder(0)]), word(3, &[CrossUnder(1), CrossUnder(0), CrossUnder(1)])),
        ("R3 mixed", word(3, &[CrossOver(0), CrossOver(1), CrossUnder(0)]), word(3, &[CrossUnder(1), CrossOver(0), CrossOver(1)])),
        ("strand over a cap", word(3, &[CrossUnder(1), CrossUnder(0), Cap(1)]), word(3, &[Cap(0)])),
        ("strand under a cap", word(3, &[CrossOver(1), CrossOver(0), Cap(1)]), word(3, &[Cap(0)])),
        ("strand over a cup", word(1, &[Cup(1), CrossOver(0), CrossOver(1)]), word(1, &[Cup(0)])),
        ("time switch crossings", word(4, &[CrossOver(0), CrossUnder(2)]), word(4, &[CrossUnder(2), CrossOver(0)])),
        ("time switch cup/crossing", word(2, &[CrossOver(0), Cup(2)]), word(2, &[Cup(2), CrossOver(0)])),
        ("time switch cap/cup", word(2, &[Cap(0), Cup(0)]), word(2, &[Cup(2), Cap(0)])),
    ];
    let bad: Vec<&str> = cases.iter().filter(|(_, x, y)| !same_table(x, y)).map(|c| c.0).collect();
    outcome(bad.is_empty(), format!("{} identities over all boundary states; failing {bad:?}", cases.len()))
}

/// Corner of the face touched by a move, as an unordered side pair.
fn move_corner(l: &GoodPositionLink, mv: Move, loc: qtrace::state_sum::moves::Location) -> (usize, usize, usize) {
    let (a, b) = if mv == Move::inv(MoveKind::I) {
        (loc.side.min(loc.to), loc.side.max(loc.to))
    } else {
        let arc = l.face_arcs(loc.face)[loc.rank];
        (arc.slot_in.min(arc.slot_out), arc.slot_in.max(arc.slot_out))
    };
    (loc.face, a, b)
}

fn traces(l: &GoodPositionLink) -> Vec<QTElement> {
    BoundaryState::all(l).iter().map(|s| quantum_trace(l, s).unwrap()).collect()
}

fn c4_moves() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let p = RandomParams { max_arcs_per_face: 2, max_crossings_per_edge: 1, max_boundary_points: 2 };
    let mut pairs = 0;
    let mut bad = 0;
    let mut seen: BTreeSet<(String, String, (usize, usize, usize))> = BTreeSet::new();
    let mut per_surface: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (name, tri) in [("square", standard::square()), ("torus", standard::punctured_torus())] {
        let tri = Arc::new(tri);
        for _ in 0..WALKS {
            if seen.iter().filter(|k| k.0 == name).count() == COMBOS_PER_SURFACE {
                break;
            }
            let mut l = random_link(&mut rng, &tri, p);
            let base = traces(&l);
            for _ in 0..5 {
                let mut options = Vec::new();
                for mv in Move::ALL {
                    for loc in applicable(&l, mv) {
                        let key = (name.to_string(), mv.to_string(), move_corner(&l, mv, loc));
                        options.push((seen.contains(&key), mv, loc, key));
                    }
                }
                if options.is_empty() {
                    break;
                }
                options.shuffle(&mut rng);
                // prefer combinations not met yet
                options.sort_by_key(|o| o.0);
                let (_, mv, loc, key) = options.swap_remove(0);
                let next = apply_move(&l, mv, loc).unwrap();
                if 2 * next.arc_count() > 20 {
                    break;
                }
                l = next;
                pairs += 1;
                if traces(&l) != base {
                    bad += 1;
                }
                per_surface.entry(name.to_string()).or_default().insert(mv.to_string());
                seen.insert(key);
            }
        }
    }
    let mut missing = Vec::new();
    for name in ["square", "torus"] {
        for mv in Move::ALL {
            for f in 0..2 {
                for c in [(0, 1), (0, 2), (1, 2)] {
                    if !seen.contains(&(name.to_string(), mv.to_string(), (f, c.0, c.1))) {
                        missing.push(format!("{name} {mv} face {} corner {}{}", f + 1, c.0 + 1, c.1 + 1));
                    }
                }
            }
        }
    }
    let all = per_surface.values().all(|s| s.len() == Move::ALL.len()) && per_surface.len() == 2;
    let detail = format!(
        "{pairs} before/after pairs, {bad} changed traces, moves per surface {:?}, {}/{} (move, face, corner) combinations, missing {missing:?}",
        per_surface.iter().map(|(k, v)| (k.as_str(), v.len())).collect::<Vec<_>>(),
        seen.len(),
        2 * COMBOS_PER_SURFACE
    );
    within(bad == 0 && pairs >= 30 && all && missing.is_empty(), detail, t.elapsed(), LIMIT_MOVES)
}

fn one_crossing_fixtures() -> Vec<(String, GoodPositionLink)> {
    let mut out = vec![("torus_crossing.link".to_string(), load("torus.surf", "torus_crossing.link"))];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let p = RandomParams { max_arcs_per_face: 2, max_crossings_per_edge: 1, max_boundary_points: 2 };
    for (name, tri) in [("square", standard::square()), ("torus", standard::punctured_torus())] {
        let tri = Arc::new(tri);
        let mut k = 0;
        while k < 4 {
            let l = random_link(&mut rng, &tri, p);
            let c: usize = l.words().iter().map(|w| w.crossings()).sum();
            if c == 1 {
                out.push((format!("random {name} #{k}"), l));
                k += 1;
            }
        }
    }
    out
}

fn c5_global_skein() -> Outcome {
    let fx = one_crossing_fixtures();
    let mut bad = Vec::new();
    for (name, l) in &fx {
        if check::skein(l).unwrap().iter().any(|a| !a.ok) {
            bad.push(name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{} one-crossing fixtures; failing {bad:?}", fx.len()))
}

fn all_fixtures() -> Vec<(String, GoodPositionLink)> {
    let mut fx = file_fixtures();
    fx.extend(one_crossing_fixtures());
    for (a, b) in CONNECTIONS {
        fx.push((format!("square strand {a}-{b}"), square_strand(a, b).0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let p = RandomParams { max_arcs_per_face: 2, max_crossings_per_edge: 2, max_boundary_points: 2 };
    for (name, tri) in [("triangle", standard::triangle()), ("square", standard::square()), ("torus", standard::punctured_torus())] {
        let tri = Arc::new(tri);
        for k in 0..4 {
            fx.push((format!("random {name} #{k}"), random_link(&mut rng, &tri, p)));
        }
    }
    fx
}

fn c6_structure() -> Outcome {
    let fx = all_fixtures();
    let mut bad = Vec::new();
    for (name, l) in &fx {
        if check::balanced(l).unwrap().iter().any(|a| !a.ok) {
            bad.push(format!("{name}: balance/parity"));
        }
        let tri = l.triangulation();
        for s in BoundaryState::all(l) {
            let t = tensor_trace(l, &s, TraceOptions::default()).unwrap();
            let matched = t.terms().all(|(k, _)| {
                tri.edges().iter().filter(|e| e.slots.len() == 2).all(|e| k[e.slots[0].index()] == k[e.slots[1].index()])
            });
            if !matched {
                bad.push(format!("{name}: interior edges"));
                break;
            }
        }
    }
    outcome(bad.is_empty(), format!("{} fixtures, every boundary state; failing {bad:?}", fx.len()))
}

fn c7_classical() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    // (a) state sum vs holonomy, 20 shear tuples per fixture
    let curves: Vec<(usize, usize, usize)> = vec![(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (2, 1, 0)];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut samples = 0;
    let mut worst: f64 = 0.0;
    for &(a, b, c) in &curves {
        let l = torus_multicurve(a, b, c);
        let seqs = qtrace::state_sum::turn_sequences(&l).unwrap();
        for _ in 0..20 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(0.05..20.0)).collect();
            let sh = qtrace::classical::ShearAssignment::from_slice(&x).unwrap();
            let z = sh.roots(3).unwrap();
            for s in &seqs {
                let v = classical_state_sum(s, 3).eval(&z);
                let h = qtrace::classical::holonomy_trace(s, &sh).unwrap();
                worst = worst.max((v - h).abs() / h.abs().max(1.0));
                samples += 1;
            }
        }
    }
    if worst > CLASSICAL_REL_TOL {
        ok = false;
    }
    notes.push(format!("(a) {samples} shear samples, worst relative error {worst:.1e} (tol {CLASSICAL_REL_TOL:.0e})"));

    // (b) omega = 1 specialization vs classical state sum
    let mut exact = 0;
    for &(a, b, c) in &curves {
        let l = torus_multicurve(a, b, c);
        let mut poly = classical_state_sum(&[], 3);
        poly.add_term(vec![0; 3], 1.into());
        for s in qtrace::state_sum::turn_sequences(&l).unwrap() {
            poly = poly.mul(&classical_state_sum(&s, 3));
        }
        let q = quantum_trace(&l, &BoundaryState::default()).unwrap().specialize_commutative();
        if q == poly {
            exact += 1;
        } else {
            ok = false;
            notes.push(format!("({a},{b},{c}) differs"));
        }
    }
    let one_zero = quantum_trace(&torus_multicurve(1, 0, 0), &BoundaryState::default()).unwrap().specialize_commutative();
    // mirror of the commonly quoted Z1Z2 + Z1^-1Z2 + Z1^-1Z2^-1 under the corner convention in use
    let expect = "Z1^-1*Z2^-1 + Z1*Z2^-1 + Z1*Z2";
    if one_zero.to_string() != expect {
        ok = false;
    }
    notes.push(format!("(b) {exact}/{} torus curves exact; (1,0) curve = {one_zero} (mirrored convention)", curves.len()));
    for (name, tri, e) in [("square", standard::square(), 0), ("torus", standard::punctured_torus(), 1)] {
        let n = tri.n_edges();
        let l = small_circle(tri, e);
        let q = quantum_trace(&l, &BoundaryState::default()).unwrap().specialize_commutative();
        let cl = classical_state_sum(&[TurnStep::new(e, Turn::Uturn), TurnStep::new(e, Turn::Uturn)], n);
        if q != cl || q.to_string() != "-2" {
            ok = false;
        }
        notes.push(format!("small circle on {name} = {q}"));
    }
    outcome(ok, notes.join("; "))
}

fn c8_flip() -> Outcome {
    let t = Instant::now();
    let mut identities = 0;
    let mut bad = Vec::new();
    let sq = standard::square();
    let table_bad = check_tables(&sq, 0).unwrap();
    let data = sq.flip(0).unwrap();
    let target = FlipBlockTable::new(Side::Target);
    for (a, b) in CONNECTIONS {
        let (l, d) = square_strand(a, b);
        let moved = reposition_link(&l, d).unwrap();
        for s in BoundaryState::all(&l) {
            let via = transfer_trace(&l, d, &s).unwrap();
            let direct = quantum_trace(&moved, &s).unwrap();
            if via != direct {
                bad.push(format!("{a}-{b} {}", s.describe(&sq)));
            } else if !via.is_zero() {
                identities += 1;
            }
        }
    }
    let nonzero_blocks = CONNECTIONS
        .iter()
        .flat_map(|c| {
            let (target, data, sq) = (&target, &data, &sq);
            Sign::both().into_iter().flat_map(move |x| Sign::both().into_iter().map(move |y| target.block(data, sq, *c, (x, y))))
        })
        .filter(|v| !v.is_zero())
        .count();
    // larger links on the torus
    let l = load("torus.surf", "torus_112.link");
    for e in 0..3 {
        let moved = reposition_link(&l, e).unwrap();
        if transfer_trace(&l, e, &BoundaryState::default()).unwrap() != quantum_trace(&moved, &BoundaryState::default()).unwrap() {
            bad.push(format!("torus_112 edge {e}"));
        }
    }
    let ok = bad.is_empty() && table_bad.is_empty() && identities >= 19;
    within(
        ok,
        format!(
            "6 connection types, {identities} nonzero block identities ({nonzero_blocks} nonzero target blocks), table vs first principles: {} mismatches; failing {bad:?}",
            table_bad.len()
        ),
        t.elapsed(),
        LIMIT_FLIP,
    )
}

fn c9_leading_terms() -> Outcome {
    let counts = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (2, 0, 0),
        (0, 2, 0),
        (0, 0, 2),
        (1, 1, 0),
        (0, 1, 1),
        (1, 0, 1),
        (1, 1, 1),
        (2, 1, 0),
        (0, 1, 2),
    ];
    let mut ok = true;
    let mut leads = Vec::new();
    for (a, b, c) in counts {
        let l = torus_multicurve(a, b, c);
        let k = l.leading_intersection_vector().unwrap();
        let t = quantum_trace(&l, &BoundaryState::default()).unwrap();
        let lt = t.leading_term(TermOrder::DegLex).unwrap();
        let unit = t.weyl_coeff(&lt.exps).as_unit().is_some();
        ok &= k == torus_counts(a, b, c) && lt.exps == k && unit;
        // every other term sits strictly below the leading one
        ok &= t.terms().all(|(e, _)| *e == lt.exps || TermOrder::DegLex.cmp(e, &lt.exps).is_lt());
        leads.push(lt.exps);
    }
    let distinct: BTreeSet<_> = leads.iter().cloned().collect();
    ok &= distinct.len() == leads.len();
    outcome(ok, format!("{} simple multicurves, leading exponents all distinct = {}", counts.len(), distinct.len() == leads.len()))
}

fn c10_homomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let p = RandomParams { max_arcs_per_face: 1, max_crossings_per_edge: 1, max_boundary_points: 1 };
    let mut n = 0;
    let mut bad = 0;
    for k in 0..24 {
        let tri = Arc::new(if k % 2 == 0 { standard::square() } else { standard::punctured_torus() });
        let (k1, k2) = (random_link(&mut rng, &tri, p), random_link(&mut rng, &tri, p));
        let both = k1.superpose(&k2).unwrap();
        for s1 in BoundaryState::all(&k1) {
            for s2 in BoundaryState::all(&k2) {
                let lhs = quantum_trace(&both, &s1.stack(&s2)).unwrap();
                let rhs = quantum_trace(&k1, &s1).unwrap().multiply(&quantum_trace(&k2, &s2).unwrap()).unwrap();
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        n += 1;
    }
    outcome(bad == 0, format!("{n} random pairs, every state pair, {bad} failures"))
}

fn c11_kernel() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let cases = 600;
    let (mut assoc, mut perm, mut law) = (0, 0, 0);
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let comm = random_comm(&mut rng, n);
        let (x, y, z) = (random_element(&mut rng, &comm), random_element(&mut rng, &comm), random_element(&mut rng, &comm));
        if x.multiply(&y).unwrap().multiply(&z).unwrap() != x.multiply(&y.multiply(&z).unwrap()).unwrap() {
            assoc += 1;
        }
        let mut gens: Vec<(usize, i32)> = (0..rng.gen_range(1..6)).map(|_| (rng.gen_range(0..n), rng.gen_range(-3..=3))).collect();
        let m = weyl_order(&gens, &comm);
        gens.shuffle(&mut rng);
        if weyl_order(&gens, &comm) != m {
            perm += 1;
        }
        let a: Vec<i32> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let b: Vec<i32> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let wa = QTElement::weyl(comm.clone(), OmegaPoly::one(), a.clone());
        let wb = QTElement::weyl(comm.clone(), OmegaPoly::one(), b.clone());
        let sum: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        if wa.multiply(&wb).unwrap() != QTElement::weyl(comm.clone(), OmegaPoly::w(pairing(&comm, &a, &b)), sum) {
            law += 1;
        }
    }
    within(
        assoc + perm + law == 0,
        format!("{cases} cases each; failures: associativity {assoc}, permutation {perm}, product law {law}"),
        t.elapsed(),
        LIMIT_KERNEL,
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("biangle skein relation", c1_biangle_skein),
        ("biangle constants", c2_biangle_constants),
        ("snake, Reidemeister II/III, time switch", c3_planar_invariance),
        ("move invariance", c4_moves),
        ("global skein relation", c5_global_skein),
        ("output structure", c6_structure),
        ("classical oracle", c7_classical),
        ("flip consistency", c8_flip),
        ("leading terms", c9_leading_terms),
        ("homomorphism", c10_homomorphism),
        ("algebra kernel", c11_kernel),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("{} {:>2}. {name}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.ok {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria {failed:?}");
        std::process::exit(1);
    }
}
