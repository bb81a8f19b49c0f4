//! Homogeneous polynomials in `x, y, z` with exact rational coefficients.
//!
//! Monomials of a fixed degree are laid out in graded lexicographic order
//! with `x > y > z`; that order fixes every coefficient-vector layout and
//! every serialized term list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratlinalg::{common_denominator, Rational};

/// A point of the plane with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from(x), Rational::from(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial3 {
    pub exp: [u32; 3],
}

impl Monomial3 {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial3 { exp: [i, j, k] }
    }

    pub fn degree(&self) -> u32 {
        self.exp.iter().sum()
    }

    /// Position of this monomial in `graded_monomial_basis(self.degree())`.
    pub fn index(&self) -> usize {
        let d = self.degree() as usize;
        let [i, j, _] = self.exp.map(|e| e as usize);
        (d - i) * (d - i + 1) / 2 + (d - i - j)
    }

    pub fn mul(&self, other: &Monomial3) -> Monomial3 {
        Monomial3 {
            exp: [
                self.exp[0] + other.exp[0],
                self.exp[1] + other.exp[1],
                self.exp[2] + other.exp[2],
            ],
        }
    }

    pub fn divides(&self, other: &Monomial3) -> bool {
        self.exp.iter().zip(other.exp.iter()).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial3 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.exp[0].cmp(&self.exp[0]))
            .then(other.exp[1].cmp(&self.exp[1]))
    }
}

impl PartialOrd for Monomial3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in ["x", "y", "z"].iter().zip(self.exp) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// All monomials of degree `d`, in the fixed order.
pub fn graded_monomial_basis(d: u32) -> Vec<Monomial3> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push(Monomial3::new(i, j, d - i - j));
        }
    }
    out
}

/// Homogeneous polynomial of a fixed degree; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial3, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial3, coef: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        p.add_term(m, coef);
        p
    }

    pub fn one() -> Self {
        Self::monomial(Monomial3::new(0, 0, 0), Rational::one())
    }

    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Monomial3, Rational)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::InvalidArgument(format!(
                    "monomial {m} has degree {} in a degree-{degree} polynomial",
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial3, c: Rational) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial3, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial3) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument(format!(
                "cannot add degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(*m, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial3) -> Self {
        HomogeneousPolynomial {
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sparse coefficient vector over `graded_monomial_basis(self.degree())`.
    pub fn coefficient_vector(&self) -> Vec<(usize, Rational)> {
        let mut v: Vec<(usize, Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.index(), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let t = c * &x.pow(m.exp[0]) * &y.pow(m.exp[1]) * &z.pow(m.exp[2]);
            acc += &t;
        }
        acc
    }

    /// Set `z = 1`.
    pub fn dehomogenize(&self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.exp[0], m.exp[1], c.clone());
        }
        out
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: [u32; 3],
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    degree: u32,
    terms: Vec<TermRepr>,
}

impl Serialize for HomogeneousPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    exp: m.exp,
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        HomogeneousPolynomial::from_terms(
            repr.degree,
            repr.terms.into_iter().map(|t| (Monomial3 { exp: t.exp }, t.coef)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Polynomial in `x, y` of arbitrary total degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }
}

/// Degree-`d` homogenization with respect to `z`.
pub fn homogenize(p: &BivariatePolynomial, d: u32) -> Result<HomogeneousPolynomial> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(Error::InvalidArgument(format!(
                "polynomial of degree {deg} cannot be homogenized to degree {d}"
            )));
        }
    }
    HomogeneousPolynomial::from_terms(
        d,
        p.terms
            .iter()
            .map(|(&(i, j), c)| (Monomial3::new(i, j, d - i - j), c.clone())),
    )
}

/// Linear form `a·x + b·y + c·z`, normalized to coprime integer coefficients
/// whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm3 {
    coef: [Rational; 3],
}

impl LinearForm3 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let coef = [a, b, c];
        if coef.iter().all(|v| v.is_zero()) {
            return Err(Error::InvalidArgument("zero linear form".into()));
        }
        let den = common_denominator(coef.iter());
        let ints: Vec<BigInt> = coef.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let lead_negative = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
        if lead_negative {
            g = -g;
        }
        let n: Vec<Rational> = ints.into_iter().map(|v| Rational::from(v / &g)).collect();
        Ok(LinearForm3 {
            coef: [n[0].clone(), n[1].clone(), n[2].clone()],
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(Rational::from(a), Rational::from(b), Rational::from(c))
    }

    pub fn coefficients(&self) -> &[Rational; 3] {
        &self.coef
    }

    /// Value at the homogenized point `(p.x, p.y, 1)`.
    pub fn eval_point(&self, p: &Point) -> Rational {
        &(&self.coef[0] * &p.x + &self.coef[1] * &p.y) + &self.coef[2]
    }

    pub fn is_proportional(&self, other: &LinearForm3) -> bool {
        // Normalized forms are proportional exactly when equal.
        self == other
    }

    pub fn to_polynomial(&self) -> HomogeneousPolynomial {
        HomogeneousPolynomial::from_terms(
            1,
            [
                (Monomial3::new(1, 0, 0), self.coef[0].clone()),
                (Monomial3::new(0, 1, 0), self.coef[1].clone()),
                (Monomial3::new(0, 0, 1), self.coef[2].clone()),
            ],
        )
        .expect("linear terms have degree one")
    }
}

impl fmt::Display for LinearForm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Determinant of the coefficient matrix of three linear forms.
pub fn determinant3(forms: [&LinearForm3; 3]) -> Rational {
    let m = forms.map(|f| f.coefficients());
    let minor = |a: usize, b: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a]);
    &(&(&m[0][0] * &minor(1, 2)) - &(&m[0][1] * &minor(0, 2))) + &(&m[0][2] * &minor(0, 1))
}

/// Homogenized line through two distinct points.
pub fn edge_linear_form(p1: &Point, p2: &Point) -> Result<LinearForm3> {
    if p1 == p2 {
        return Err(Error::DegenerateEdge(p1.to_string()));
    }
    let a = &p1.y - &p2.y;
    let b = &p2.x - &p1.x;
    let c = &(&p1.x * &p2.y) - &(&p2.x * &p1.y);
    LinearForm3::new(a, b, c)
}

/// A second form through `v̂`, independent of `ell`: `x − v.x·z` unless that
/// is proportional to `ell`, in which case `y − v.y·z`.
pub fn vertex_complement_form(ell: &LinearForm3, v: &Point) -> Result<LinearForm3> {
    if !ell.eval_point(v).is_zero() {
        return Err(Error::InvalidArgument(format!("{ell} does not vanish at {v}")));
    }
    let first = LinearForm3::new(Rational::one(), Rational::zero(), -&v.x)?;
    if !first.is_proportional(ell) {
        return Ok(first);
    }
    LinearForm3::new(Rational::zero(), Rational::one(), -&v.y)
}
