//! Exact Laurent polynomials in a formal unit `w` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Element of Z[w, w^-1]. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OmegaPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl OmegaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::w(0)
    }

    /// The monomial `w^k`.
    pub fn w(k: i32) -> Self {
        Self::term(1, k)
    }

    /// The monomial `c * w^k`.
    pub fn term(c: impl Into<BigInt>, k: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), k);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(c, k);
        }
        p
    }

    /// A = w^-2
    pub fn a() -> Self {
        Self::w(-2)
    }

    /// q = w^4
    pub fn q() -> Self {
        Self::w(4)
    }

    /// alpha = -w^-5
    pub fn alpha() -> Self {
        Self::term(-1, -5)
    }

    /// beta = w^-1
    pub fn beta() -> Self {
        Self::w(-1)
    }

    /// Value of a trivial loop, -A^2 - A^-2.
    pub fn loop_value() -> Self {
        Self::term(-1, -4) + Self::term(-1, 4)
    }

    pub fn add_term(&mut self, c: BigInt, k: i32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(k)` when the value is exactly `w^k`.
    pub fn as_power(&self) -> Option<i32> {
        match self.as_unit() {
            Some((true, k)) => Some(k),
            _ => None,
        }
    }

    /// `Some((positive, k))` when the value is `±w^k`.
    pub fn as_unit(&self) -> Option<(bool, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((true, *k))
        } else if (-c).is_one() {
            Some((false, *k))
        } else {
            None
        }
    }

    /// Multiply by `w^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by a unit `±w^k`.
    pub fn div_unit(&self, unit: &OmegaPoly) -> Result<Self> {
        let (pos, k) = unit.as_unit().ok_or(Error::InexactDivision)?;
        let r = self.shift(-k);
        Ok(if pos { r } else { -r })
    }

    /// Evaluation at w = 1.
    pub fn specialize_unity(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval_complex(&self, w: Complex64) -> Result<Complex64> {
        if w.norm() == 0.0 {
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += w.powi(*k) * c;
        }
        Ok(acc)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }
}

impl fmt::Display for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}*w^{k}")?;
            } else if c.is_negative() {
                write!(f, " - {}*w^{k}", -c)?;
            } else {
                write!(f, " + {c}*w^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaPoly({self})")
    }
}

impl FromStr for OmegaPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`, e.g. `-1*w^-5 + 2*w^3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad omega polynomial `{s}`"),
        };
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() {
            return Err(bad());
        }
        let mut out = Self::zero();
        let mut sign = BigInt::one();
        let mut expect_term = true;
        for tok in toks {
            if expect_term {
                let (c, k) = tok.split_once("*w^").ok_or_else(bad)?;
                let c: BigInt = c.parse().map_err(|_| bad())?;
                let k: i32 = k.parse().map_err(|_| bad())?;
                out.add_term(sign.clone() * c, k);
                expect_term = false;
            } else {
                sign = match tok {
                    "+" => BigInt::one(),
                    "-" => -BigInt::one(),
                    _ => return Err(bad()),
                };
                expect_term = true;
            }
        }
        if expect_term {
            return Err(bad());
        }
        Ok(out)
    }
}

impl<'a> Add<&'a OmegaPoly> for &'a OmegaPoly {
    type Output = OmegaPoly;
    fn add(self, rhs: &OmegaPoly) -> OmegaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for OmegaPoly {
    type Output = OmegaPoly;
    fn add(mut self, rhs: OmegaPoly) -> OmegaPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&OmegaPoly> for OmegaPoly {
    fn add_assign(&mut self, rhs: &OmegaPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(c.clone(), *k);
        }
    }
}

impl Neg for OmegaPoly {
    type Output = OmegaPoly;
    fn neg(self) -> OmegaPoly {
        OmegaPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &OmegaPoly {
    type Output = OmegaPoly;
    fn neg(self) -> OmegaPoly {
        -self.clone()
    }
}

impl<'a> Sub<&'a OmegaPoly> for &'a OmegaPoly {
    type Output = OmegaPoly;
    fn sub(self, rhs: &OmegaPoly) -> OmegaPoly {
        self + &(-rhs)
    }
}

impl Sub for OmegaPoly {
    type Output = OmegaPoly;
    fn sub(self, rhs: OmegaPoly) -> OmegaPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a OmegaPoly> for &'a OmegaPoly {
    type Output = OmegaPoly;
    fn mul(self, rhs: &OmegaPoly) -> OmegaPoly {
        let mut out = OmegaPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(a * b, i + j);
            }
        }
        out
    }
}

impl Mul for OmegaPoly {
    type Output = OmegaPoly;
    fn mul(self, rhs: OmegaPoly) -> OmegaPoly {
        &self * &rhs
    }
}
