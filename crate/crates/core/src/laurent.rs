//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector under graded
//! lexicographic order, so iteration, equality and printing are canonical.
//! No stored coefficient is ever zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial, ordered graded-lexicographically:
/// first by total degree, then lexicographically with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exponents(Box<[i32]>);

impl Exponents {
    pub fn new(e: impl Into<Box<[i32]>>) -> Self {
        Exponents(e.into())
    }

    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n].into())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponents(e.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&a| a as i64).sum()
    }

    fn combine(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        Exponents(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| f(a, b)).collect())
    }

    fn plus(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.checked_add(b).expect("exponent overflow"))
    }

    fn minus(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.checked_sub(b).expect("exponent overflow"))
    }

    fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Laurent polynomial in `x1..xn` over the integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Exponents::zero(nvars), c)
    }

    /// The single term `c * x^e`.
    pub fn monomial(e: Exponents, c: impl Into<BigInt>) -> Self {
        let nvars = e.len();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// The variable `x_{i+1}`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::monomial(Exponents::unit(nvars, i), 1)
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, E, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<Box<[i32]>>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            let e = Exponents::new(e);
            if e.len() != nvars {
                return Err(Error::VariableCount(nvars, e.len()));
            }
            out.add_term(e, c.into());
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[i32]) -> BigInt {
        self.terms
            .get(&Exponents::new(e.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::VariableCount(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplication by the monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &Exponents, c: &BigInt) -> Self {
        assert_eq!(e.len(), self.nvars, "variable count mismatch");
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(f, d)| (f.plus(e), d * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// The monomial content of both operands is factored out and the
    /// remaining polynomials are divided by long division under graded-lex
    /// order. Any nonzero remainder is reported as [`Error::InexactDivision`].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let num_shift = self.min_exponents()?;
        let den_shift = divisor.min_exponents()?;
        let to_exps = |v: &[i64]| Exponents(v.iter().map(|&a| -(a as i32)).collect());
        let mut remainder = self.mul_monomial(&to_exps(&num_shift), &BigInt::one());
        let den = divisor.mul_monomial(&to_exps(&den_shift), &BigInt::one());

        let (lead_e, lead_c) = den.leading_term().expect("nonzero divisor");
        let (lead_e, lead_c) = (lead_e.clone(), lead_c.clone());
        let mut quotient = Self::zero(self.nvars);
        while let Some((re, rc)) = remainder.leading_term() {
            let shift = re.minus(&lead_e);
            if !shift.is_nonnegative() {
                return Err(Error::InexactDivision);
            }
            let (q, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (e, c) in &den.terms {
                remainder.add_term(e.plus(&shift), -(c * &q));
            }
            quotient.add_term(shift, q);
        }

        // x^{num_shift - den_shift} * quotient
        let offset = Exponents(
            num_shift
                .iter()
                .zip(&den_shift)
                .map(|(&a, &b)| (a - b) as i32)
                .collect(),
        );
        Ok(quotient.mul_monomial(&offset, &BigInt::one()))
    }

    fn fold_exponents(&self, f: impl Fn(i32, i32) -> i32) -> Result<Vec<i64>> {
        let mut iter = self.terms.keys();
        let first = iter.next().ok_or(Error::ZeroPolynomial)?;
        let acc = iter.fold(first.0.to_vec(), |mut acc, e| {
            for (a, &b) in acc.iter_mut().zip(e.0.iter()) {
                *a = f(*a, b);
            }
            acc
        });
        Ok(acc.into_iter().map(i64::from).collect())
    }

    /// Lowest power of each variable over all terms (bottom corner of the
    /// tight bounding box of the Newton polytope).
    pub fn min_exponents(&self) -> Result<Vec<i64>> {
        self.fold_exponents(i32::min)
    }

    /// Highest power of each variable over all terms (top corner of the
    /// tight bounding box).
    pub fn max_exponents(&self) -> Result<Vec<i64>> {
        self.fold_exponents(i32::max)
    }

    /// Sum of coefficients.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    /// Panics on a variable-count mismatch; see [`LaurentPolynomial::checked_add`].
    fn add(self, other: Self) -> LaurentPolynomial {
        self.checked_add(other).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, other: Self) -> LaurentPolynomial {
        self.checked_sub(other).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, other: Self) -> LaurentPolynomial {
        self.checked_mul(other).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponents) -> fmt::Result {
    let mut first = true;
    for (i, &a) in e.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if a == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, a)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPolynomial {
    /// Terms from the leading one down, e.g. `x1^-1*x2 + x1^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.0.iter().all(|&a| a == 0);
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if constant {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<i32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson { e: e.0.to_vec(), c: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolynomialJson::deserialize(d)?;
        let terms = json
            .terms
            .into_iter()
            .map(|t| {
                t.c.parse::<BigInt>()
                    .map(|c| (t.e, c))
                    .map_err(|err| D::Error::custom(format!("bad coefficient {:?}: {err}", t.c)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LaurentPolynomial::from_terms(json.n, terms).map_err(D::Error::custom)
    }
}
