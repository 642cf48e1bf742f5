//! Line-oriented input files. `#` starts a comment.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;

use crate::biangle::{Sign, TangleWord};
use crate::classical::{ShearAssignment, Turn, TurnStep};
use crate::error::{Error, Result};
use crate::state_sum::{BoundaryState, GoodPositionLink};
use crate::surface::{Edge, IdealTriangulation, Slot};
use crate::triangle::TriangleArc;

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| perr(line, format!("bad {what} `{s}`")))
}

/// `triangles <m>` then `edge <name> <j>.<a> <j'>.<a'>` or `edge <name> <j>.<a> @boundary`.
pub fn parse_surface(text: &str) -> Result<IdealTriangulation> {
    let mut m = None;
    let mut edges = Vec::new();
    for (ln, w) in lines(text) {
        match w.as_slice() {
            ["triangles", n] => m = Some(num::<usize>(ln, n, "triangle count")?),
            ["edge", name, a, b] => {
                let mut slots = vec![slot(ln, a)?];
                if *b != "@boundary" {
                    slots.push(slot(ln, b)?);
                }
                edges.push(Edge { name: name.to_string(), slots });
            }
            _ => return Err(perr(ln, format!("unknown line `{}`", w.join(" ")))),
        }
    }
    let m = m.ok_or_else(|| perr(0, "missing `triangles` line"))?;
    IdealTriangulation::new(m, edges)
}

fn slot(line: usize, s: &str) -> Result<Slot> {
    let (j, a) = s.split_once('.').ok_or_else(|| perr(line, format!("bad slot `{s}`")))?;
    let j: usize = num(line, j, "face")?;
    let a: usize = num(line, a, "slot")?;
    if j == 0 || !(1..=3).contains(&a) {
        return Err(perr(line, format!("slot `{s}` out of range")));
    }
    Ok(Slot::new(j - 1, a - 1))
}

/// Edge by name, or by 1-based index.
fn edge(tri: &IdealTriangulation, line: usize, s: &str) -> Result<usize> {
    if let Some(i) = tri.edge_index(s) {
        return Ok(i);
    }
    match s.parse::<usize>() {
        Ok(i) if (1..=tri.n_edges()).contains(&i) => Ok(i - 1),
        _ => Err(perr(line, format!("unknown edge `{s}`"))),
    }
}

/// `arc <face> <slot_in> <slot_out> <elev>` and `tangle <edge> <word>`.
pub fn parse_link(tri: &Arc<IdealTriangulation>, text: &str) -> Result<GoodPositionLink> {
    let mut arcs = Vec::new();
    let mut tangles = Vec::new();
    for (ln, w) in lines(text) {
        match w.as_slice() {
            ["arc", f, a, b, e] => {
                let f: usize = num(ln, f, "face")?;
                let a: usize = num(ln, a, "slot")?;
                let b: usize = num(ln, b, "slot")?;
                let e: i64 = num(ln, e, "elevation")?;
                if f == 0 || f > tri.faces() || !(1..=3).contains(&a) || !(1..=3).contains(&b) {
                    return Err(perr(ln, "arc out of range"));
                }
                arcs.push(TriangleArc::new(f - 1, a - 1, b - 1, e).map_err(|e| perr(ln, e.to_string()))?);
            }
            ["tangle", e, rest @ ..] => tangles.push((ln, edge(tri, ln, e)?, rest.join(" "))),
            _ => return Err(perr(ln, format!("unknown line `{}`", w.join(" ")))),
        }
    }
    let mut words = BTreeMap::new();
    for (ln, e, text) in tangles {
        let s0 = tri.edge(e).slots[0];
        let n0 = arcs.iter().filter(|a| a.face == s0.face && a.touches(s0.pos)).count();
        let w = TangleWord::parse(&text, n0).map_err(|err| perr(ln, err.to_string()))?;
        if words.insert(e, w).is_some() {
            return Err(perr(ln, format!("second tangle for edge {}", tri.edge(e).name)));
        }
    }
    GoodPositionLink::new(tri.clone(), arcs, words)
}

/// `state <edge> <index-from-bottom> <+|->`.
pub fn parse_state(tri: &IdealTriangulation, text: &str) -> Result<BoundaryState> {
    let mut raw: BTreeMap<usize, BTreeMap<usize, Sign>> = BTreeMap::new();
    for (ln, w) in lines(text) {
        match w.as_slice() {
            ["state", e, i, s] => {
                let e = edge(tri, ln, e)?;
                let i: usize = num(ln, i, "index")?;
                let s = match *s {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    _ => return Err(perr(ln, format!("bad sign `{s}`"))),
                };
                if i == 0 || raw.entry(e).or_default().insert(i, s).is_some() {
                    return Err(perr(ln, format!("bad or repeated index {i}")));
                }
            }
            _ => return Err(perr(ln, format!("unknown line `{}`", w.join(" ")))),
        }
    }
    let mut signs = BTreeMap::new();
    for (e, m) in raw {
        if m.keys().copied().ne(1..=m.len()) {
            return Err(Error::State(format!("edge {} has gaps in its state indices", tri.edge(e).name)));
        }
        signs.insert(e, m.into_values().collect());
    }
    Ok(BoundaryState { signs })
}

/// `step <edge> <L|R|U> <t>`.
pub fn parse_curve(tri: &IdealTriangulation, text: &str) -> Result<Vec<TurnStep>> {
    let mut out = Vec::new();
    for (ln, w) in lines(text) {
        match w.as_slice() {
            ["step", e, k, t] => {
                let turn = match *k {
                    "L" => Turn::Left,
                    "R" => Turn::Right,
                    "U" => Turn::Uturn,
                    _ => return Err(perr(ln, format!("bad turn `{k}`"))),
                };
                out.push(TurnStep { edge: edge(tri, ln, e)?, turn, t: num(ln, t, "turning number")? });
            }
            _ => return Err(perr(ln, format!("unknown line `{}`", w.join(" ")))),
        }
    }
    if out.is_empty() {
        return Err(perr(0, "empty curve"));
    }
    Ok(out)
}

/// `shear <edge> <positive decimal>`.
pub fn parse_shears(tri: &IdealTriangulation, text: &str) -> Result<ShearAssignment> {
    let mut x = BTreeMap::new();
    for (ln, w) in lines(text) {
        match w.as_slice() {
            ["shear", e, v] => {
                let v: f64 = num(ln, v, "shear")?;
                if !(v > 0.0) {
                    return Err(perr(ln, format!("shear must be positive, got {v}")));
                }
                x.insert(edge(tri, ln, e)?, v);
            }
            _ => return Err(perr(ln, format!("unknown line `{}`", w.join(" ")))),
        }
    }
    ShearAssignment::new(x)
}

/// `w=<a>+<b>i`, `w=<a>-<b>i` or `w=<a>`.
pub fn parse_eval_point(s: &str) -> Result<Complex64> {
    let bad = || Error::Parse { line: 0, msg: format!("bad evaluation point `{s}`") };
    let v = s.strip_prefix("w=").ok_or_else(bad)?;
    let v = v.replace(' ', "");
    match v.strip_suffix('i') {
        None => Ok(Complex64::new(v.parse().map_err(|_| bad())?, 0.0)),
        Some(body) => {
            // split at the last sign that is not an exponent sign or the leading one
            let idx = body
                .char_indices()
                .filter(|(i, c)| (*c == '+' || *c == '-') && *i > 0 && !body[..*i].ends_with(['e', 'E']))
                .map(|(i, _)| i)
                .last();
            match idx {
                Some(i) => {
                    let re: f64 = body[..i].parse().map_err(|_| bad())?;
                    let im = &body[i..];
                    let im: f64 = if im == "+" || im == "-" { format!("{im}1").parse().unwrap() } else { im.parse().map_err(|_| bad())? };
                    Ok(Complex64::new(re, im))
                }
                None => {
                    let im: f64 = if body.is_empty() { 1.0 } else { body.parse().map_err(|_| bad())? };
                    Ok(Complex64::new(0.0, im))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_errors() {
        let e = parse_surface("triangles 1\nedge a 1.1 @boundary\nedge b 1.2 @boundary\nedge c 1.2 @boundary\n").unwrap_err();
        assert!(e.to_string().contains("slot (1,2) glued twice"), "{e}");
        let e = parse_surface("triangles 1\nedge a 1.4 @boundary\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn link_and_state() {
        let tri = Arc::new(parse_surface("triangles 1\nedge a 1.1 @boundary\nedge b 1.2 @boundary\nedge c 1.3 @boundary").unwrap());
        let l = parse_link(&tri, "# corner\narc 1 1 2 0\n").unwrap();
        assert_eq!(l.arc_count(), 1);
        let s = parse_state(&tri, "state a 1 +\nstate b 1 -\n").unwrap();
        assert_eq!(s.signs[&1], vec![Sign::Minus]);
        assert!(matches!(parse_link(&tri, "arc 1 1 1 0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn eval_points() {
        assert_eq!(parse_eval_point("w=0.5+0.25i").unwrap(), Complex64::new(0.5, 0.25));
        assert_eq!(parse_eval_point("w=-1-2i").unwrap(), Complex64::new(-1.0, -2.0));
        assert_eq!(parse_eval_point("w=2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_eval_point("w=i").unwrap(), Complex64::new(0.0, 1.0));
        assert!(parse_eval_point("x=1").is_err());
    }
}
