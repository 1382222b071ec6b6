//! Sparse exact polynomials in two variables, plus the univariate case.
//!
//! Canonical text form lists terms by descending first exponent, then
//! descending second exponent, as `c*x^a*y^b` with unit coefficients and
//! exponents elided: `x^3 + 2*x^2 + x*y + x + y`. Zero prints as `0`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Exponent pair `(x, y)`.
pub type Exponents = (u32, u32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, x_exp: u32, y_exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((x_exp, y_exp), coeff.into());
        p
    }

    /// `(x − 1)^a (y − 1)^b`.
    pub fn shifted_monomial(a: u32, b: u32) -> Self {
        let xm = &Self::x() - &Self::one();
        let ym = &Self::y() - &Self::one();
        &xm.pow(a) * &ym.pow(b)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.terms.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in lex order (x exponent first).
    fn leading(&self) -> Option<(Exponents, &BigInt)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, v)| (e, v * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `p(y, x)`.
    pub fn swap_variables(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(a, b), c)| {
                acc + Rational::from_integer(c.clone()) * pow_rational(x, a) * pow_rational(y, b)
            })
    }

    /// Exact quotient `self / divisor` in `Z[x, y]`.
    ///
    /// Repeatedly cancels the lex-leading term; a leading term that the
    /// divisor's leading term does not divide means the division is inexact.
    pub fn exact_div(&self, divisor: &BivariatePoly) -> Result<BivariatePoly> {
        let ((da, db), dc) = divisor
            .leading()
            .map(|(e, c)| (e, c.clone()))
            .ok_or_else(|| Error::PreconditionFailed("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(((a, b), c)) = rem.leading().map(|(e, c)| (e, c.clone())) {
            if a < da || b < db || !(&c % &dc).is_zero() {
                return Err(Error::InexactDivision(rem.to_string()));
            }
            let t = Self::monomial(&c / &dc, a - da, b - db);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    pub fn to_rational(&self) -> RationalBivariatePoly {
        RationalBivariatePoly::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e, Rational::from_integer(c.clone()))),
        )
    }

    /// Render with custom variable names, e.g. `q` and `t`.
    pub fn display_with(&self, x: &str, y: &str) -> String {
        let terms: Vec<(Exponents, Rational)> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| (e, Rational::from_integer(c.clone())))
            .collect();
        render(&terms, x, y)
    }
}

fn pow_rational(base: &Rational, k: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= base;
    }
    out
}

fn render(terms: &[(Exponents, Rational)], x: &str, y: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || (*a == 0 && *b == 0) {
            factors.push(mag.to_string());
        }
        for (var, exp) in [(x, *a), (y, *b)] {
            match exp {
                0 => {}
                1 => factors.push(var.to_string()),
                k => factors.push(format!("{}^{}", var, k)),
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x", "y"))
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: BivariatePoly) -> BivariatePoly {
        &self + &rhs
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        &self - &rhs
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        &self * &rhs
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly::from_terms(self.terms.iter().map(|(&e, c)| (e, -c.clone())))
    }
}

/// Bivariate polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalBivariatePoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl RationalBivariatePoly {
    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(terms: I) -> Self {
        let mut p = RationalBivariatePoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> Rational {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, v)| (e, v * c)))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(a, b), c)| {
                acc + c * pow_rational(x, a) * pow_rational(y, b)
            })
    }

    /// Substitute `x ↦ sx·x`, `y ↦ sy·y`.
    pub fn rescale_variables(&self, sx: &Rational, sy: &Rational) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), c * pow_rational(sx, a) * pow_rational(sy, b))),
        )
    }
}

impl fmt::Display for RationalBivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        f.write_str(&render(&terms, "x", "y"))
    }
}

/// Integer polynomial in one variable; coefficients in ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<BigInt>,
}

impl UnivariatePoly {
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = UnivariatePoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// `a + b·q`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs([a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c))
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * q + Rational::from_integer(c.clone())
        })
    }

    pub fn display_with(&self, var: &str) -> String {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| ((k as u32, 0), Rational::from_integer(c.clone())))
            .collect();
        render(&terms, var, "")
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::from_coeffs((0..len).map(|i| {
            self.coeffs.get(i).cloned().unwrap_or_default()
                + rhs.coeffs.get(i).cloned().unwrap_or_default()
        }))
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UnivariatePoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::from_coeffs(out)
    }
}
