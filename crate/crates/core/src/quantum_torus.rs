//! Quantum tori over `OmegaPoly`: `Y_i Y_j = w^{2 a_ij} Y_j Y_i`.
//!
//! Elements are stored with normal-ordered coefficients (generators in
//! ascending index). Text output uses the Weyl-ordered basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;

/// Antisymmetric integer matrix `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutationMatrix {
    n: usize,
    a: Vec<i32>,
}

impl CommutationMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, a: vec![0; n * n] }
    }

    /// Builds from rows; fails unless antisymmetric.
    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
            for (j, v) in row.iter().enumerate() {
                m.a[i * n + j] = *v;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::Surface(format!("matrix not antisymmetric at ({i},{j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.a[i * self.n + j]
    }

    /// Sets `a_ij = v` and `a_ji = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: i32) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = -v;
    }

    /// `B(x, y) = sum_{i,j} x_i y_j a_ij`.
    pub fn form(&self, x: &[i32], y: &[i32]) -> i32 {
        let mut s = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                s += x[i] * y[j] * self.get(i, j);
            }
        }
        s
    }

    /// Exponent of `w` picked up by `Z^x * Z^y` when normal ordering.
    pub fn product_shift(&self, x: &[i32], y: &[i32]) -> i32 {
        let mut s = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..i {
                s += x[i] * y[j] * self.get(i, j);
            }
        }
        2 * s
    }

    /// `[Z^k] = w^{weyl_shift(k)} Z^k`.
    pub fn weyl_shift(&self, k: &[i32]) -> i32 {
        let mut s = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                s += k[i] * k[j] * self.get(i, j);
            }
        }
        -s
    }
}

/// Coefficient times a normal-ordered monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTMonomial {
    pub coeff: OmegaPoly,
    pub exps: Vec<i32>,
}

/// Finite sum of monomials in a quantum torus.
#[derive(Clone, PartialEq, Eq)]
pub struct QTElement {
    comm: Arc<CommutationMatrix>,
    terms: BTreeMap<Vec<i32>, OmegaPoly>,
}

impl QTElement {
    pub fn zero(comm: Arc<CommutationMatrix>) -> Self {
        Self { comm, terms: BTreeMap::new() }
    }

    pub fn one(comm: Arc<CommutationMatrix>) -> Self {
        let n = comm.n();
        Self::monomial(comm, OmegaPoly::one(), vec![0; n])
    }

    /// `coeff * Z^exps` with `Z^exps` normal ordered.
    pub fn monomial(comm: Arc<CommutationMatrix>, coeff: OmegaPoly, exps: Vec<i32>) -> Self {
        let mut e = Self::zero(comm);
        e.add_term(exps, coeff);
        e
    }

    /// `coeff * [Z^exps]` (Weyl ordered).
    pub fn weyl(comm: Arc<CommutationMatrix>, coeff: OmegaPoly, exps: Vec<i32>) -> Self {
        let s = comm.weyl_shift(&exps);
        Self::monomial(comm, coeff.shift(s), exps)
    }

    pub fn scalar(comm: Arc<CommutationMatrix>, c: OmegaPoly) -> Self {
        let n = comm.n();
        Self::monomial(comm, c, vec![0; n])
    }

    pub fn comm(&self) -> &Arc<CommutationMatrix> {
        &self.comm
    }

    pub fn n(&self) -> usize {
        self.comm.n()
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: OmegaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with normal-ordered coefficients, sorted by exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &OmegaPoly)> {
        self.terms.iter()
    }

    /// Terms with Weyl-basis coefficients.
    pub fn weyl_terms(&self) -> impl Iterator<Item = (&Vec<i32>, OmegaPoly)> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| (k, c.shift(-self.comm.weyl_shift(k))))
    }

    pub fn coeff(&self, exps: &[i32]) -> OmegaPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn weyl_coeff(&self, exps: &[i32]) -> OmegaPoly {
        self.coeff(exps).shift(-self.comm.weyl_shift(exps))
    }

    fn check(&self, other: &QTElement) -> Result<()> {
        if self.comm.n() != other.comm.n() {
            return Err(Error::DimensionMismatch(self.comm.n(), other.comm.n()));
        }
        Ok(())
    }

    pub fn add(&self, other: &QTElement) -> Result<QTElement> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// In-place sum; generator counts must agree.
    pub fn add_assign(&mut self, other: &QTElement) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &OmegaPoly) -> QTElement {
        let mut out = QTElement::zero(self.comm.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn multiply(&self, other: &QTElement) -> Result<QTElement> {
        self.check(other)?;
        let mut out = QTElement::zero(self.comm.clone());
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let shift = self.comm.product_shift(x, y);
                let e: Vec<i32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                out.add_term(e, (cx * cy).shift(shift));
            }
        }
        Ok(out)
    }

    /// Maximal term under the given order.
    pub fn leading_term(&self, order: TermOrder) -> Result<QTMonomial> {
        let (k, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .ok_or(Error::ZeroElement)?;
        Ok(QTMonomial { coeff: c.clone(), exps: k.clone() })
    }

    /// Set `w = 1`.
    pub fn specialize_commutative(&self) -> CommPoly {
        let mut p = CommPoly::default();
        for (k, c) in &self.terms {
            p.add_term(k.clone(), c.specialize_unity());
        }
        p
    }
}

/// Term orders on exponent vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Total degree, then lexicographic.
    #[default]
    DegLex,
    Lex,
}

impl TermOrder {
    pub fn cmp(&self, a: &[i32], b: &[i32]) -> std::cmp::Ordering {
        match self {
            TermOrder::DegLex => {
                let da: i64 = a.iter().map(|x| *x as i64).sum();
                let db: i64 = b.iter().map(|x| *x as i64).sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            TermOrder::Lex => a.cmp(b),
        }
    }
}

/// `[Y_1 ... Y_k]` for factors `Y = Z_g^e`.
pub fn weyl_order(gens: &[(usize, i32)], comm: &Arc<CommutationMatrix>) -> QTMonomial {
    let n = comm.n();
    let mut acc = QTElement::one(comm.clone());
    let mut shift = 0;
    for (i, (gi, ei)) in gens.iter().enumerate() {
        let mut e = vec![0; n];
        e[*gi] = *ei;
        acc = acc
            .multiply(&QTElement::monomial(comm.clone(), OmegaPoly::one(), e))
            .expect("same torus");
        for (gj, ej) in &gens[i + 1..] {
            shift -= ei * ej * comm.get(*gi, *gj);
        }
    }
    let (exps, c) = acc.terms.into_iter().next().expect("monomial product is nonzero");
    QTMonomial { coeff: c.shift(shift), exps }
}

impl fmt::Display for QTElement {
    /// `(<poly>) * [Z1^a Z2^b]` terms joined by ` + `, sorted by exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.weyl_terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) * [{}]", monomial_name(k))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTElement({self})")
    }
}

fn monomial_name(k: &[i32]) -> String {
    let parts: Vec<String> = k
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != 0)
        .map(|(i, e)| format!("Z{}^{}", i + 1, e))
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Parses the `Display` form back into an element of the given torus.
pub fn parse_element(s: &str, comm: Arc<CommutationMatrix>) -> Result<QTElement> {
    let bad = |m: &str| Error::Parse { line: 0, msg: format!("{m} in `{s}`") };
    let n = comm.n();
    let mut out = QTElement::zero(comm.clone());
    let s = s.trim();
    if s == "0" {
        return Ok(out);
    }
    let mut rest = s;
    loop {
        rest = rest.trim_start();
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| bad("expected `)`"))?;
        let coeff: OmegaPoly = body[..close].parse()?;
        let after = body[close + 1..].trim_start();
        let after = after.strip_prefix('*').ok_or_else(|| bad("expected `*`"))?.trim_start();
        let after = after.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
        let close = after.find(']').ok_or_else(|| bad("expected `]`"))?;
        let mut exps = vec![0; n];
        for tok in after[..close].split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (g, e) = tok
                .strip_prefix('Z')
                .and_then(|t| t.split_once('^'))
                .ok_or_else(|| bad("bad generator"))?;
            let g: usize = g.parse().map_err(|_| bad("bad index"))?;
            let e: i32 = e.parse().map_err(|_| bad("bad exponent"))?;
            if g == 0 || g > n {
                return Err(bad("generator out of range"));
            }
            exps[g - 1] += e;
        }
        out.add_assign(&QTElement::weyl(comm.clone(), coeff, exps));
        rest = after[close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix('+').ok_or_else(|| bad("expected `+`"))?;
    }
    Ok(out)
}

/// Commutative Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommPoly {
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl CommPoly {
    pub fn add_term(&mut self, k: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let k = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(k, x * y);
            }
        }
        out
    }

    /// Evaluate with `z[i]` substituted for the i-th variable.
    pub fn eval(&self, z: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(k, c)| {
                let m: f64 = k.iter().zip(z).map(|(e, v)| v.powi(*e)).product();
                c.to_f64().unwrap_or(f64::NAN) * m
            })
            .sum()
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(j, e)| if *e == 1 { format!("Z{}", j + 1) } else { format!("Z{}^{}", j + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == BigInt::from(1) {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> Arc<CommutationMatrix> {
        Arc::new(CommutationMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap())
    }

    fn gen(c: &Arc<CommutationMatrix>, k: Vec<i32>) -> QTElement {
        QTElement::monomial(c.clone(), OmegaPoly::one(), k)
    }

    #[test]
    fn relation() {
        let c = two();
        let p = gen(&c, vec![0, 1]).multiply(&gen(&c, vec![1, 0])).unwrap();
        assert_eq!(p.coeff(&[1, 1]), OmegaPoly::w(-2));
    }

    #[test]
    fn weyl_examples() {
        let c = two();
        let m = weyl_order(&[(0, 1), (1, 1)], &c);
        assert_eq!((m.coeff, m.exps), (OmegaPoly::w(-1), vec![1, 1]));
        let m = weyl_order(&[(0, 1), (1, -1)], &c);
        assert_eq!((m.coeff, m.exps), (OmegaPoly::w(1), vec![1, -1]));
        let m = weyl_order(&[(1, 1), (0, 1)], &c);
        assert_eq!((m.coeff, m.exps), (OmegaPoly::w(-1), vec![1, 1]));
        let y = QTElement::weyl(c.clone(), OmegaPoly::one(), vec![1, 1]);
        let y2 = y.multiply(&y).unwrap();
        assert_eq!(y2, QTElement::weyl(c, OmegaPoly::one(), vec![2, 2]));
        assert_eq!(y2.coeff(&[2, 2]), OmegaPoly::w(-4));
    }

    #[test]
    fn leading() {
        let c = two();
        let mut x = QTElement::weyl(c.clone(), OmegaPoly::one(), vec![1, 1]);
        x.add_assign(&QTElement::weyl(c.clone(), OmegaPoly::one(), vec![-1, 1]));
        x.add_assign(&QTElement::weyl(c.clone(), OmegaPoly::one(), vec![-1, -1]));
        assert_eq!(x.leading_term(TermOrder::DegLex).unwrap().exps, vec![1, 1]);
        assert!(QTElement::zero(c).leading_term(TermOrder::DegLex).is_err());
    }

    #[test]
    fn display_round_trip() {
        let c = two();
        let mut x = QTElement::weyl(c.clone(), OmegaPoly::w(-1), vec![1, 1]);
        x.add_assign(&QTElement::weyl(c.clone(), OmegaPoly::term(-3, 2), vec![0, 0]));
        let s = x.to_string();
        assert_eq!(s, "(-3*w^2) * [1] + (1*w^-1) * [Z1^1 Z2^1]");
        assert_eq!(parse_element(&s, c).unwrap(), x);
    }

    #[test]
    fn specialize() {
        let c = two();
        let mut x = QTElement::monomial(c.clone(), OmegaPoly::w(-1), vec![1, 1]);
        x.add_assign(&QTElement::monomial(c, OmegaPoly::w(1), vec![1, 1]));
        let p = x.specialize_commutative();
        assert_eq!(p.terms().next().unwrap().1, &BigInt::from(2));
    }
}
