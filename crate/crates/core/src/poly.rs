//! Weighted variables, monomials and sparse polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::vector::IntVector;

/// Largest exponent accepted anywhere (2^31 - 1).
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightingError {
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateName(String),
    #[error("weight of {name:?} has length {found}, expected torus rank {expected}")]
    WeightRank { name: String, expected: usize, found: usize },
    #[error("torus rank must be at least 1")]
    ZeroRank,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: IntVector,
}

/// Ordered variables with their torus weights: a `Z^n`-grading of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableWeighting {
    torus_rank: usize,
    variables: Vec<Variable>,
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

impl VariableWeighting {
    pub fn new(torus_rank: usize, variables: Vec<Variable>) -> Result<Self, WeightingError> {
        if torus_rank == 0 {
            return Err(WeightingError::ZeroRank);
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(&v.name) {
                return Err(WeightingError::InvalidName(v.name.clone()));
            }
            if variables[..i].iter().any(|u| u.name == v.name) {
                return Err(WeightingError::DuplicateName(v.name.clone()));
            }
            if v.weight.len() != torus_rank {
                return Err(WeightingError::WeightRank {
                    name: v.name.clone(),
                    expected: torus_rank,
                    found: v.weight.len(),
                });
            }
        }
        Ok(VariableWeighting { torus_rank, variables })
    }

    /// Convenience constructor from names and small integer weights.
    pub fn from_pairs(torus_rank: usize, pairs: &[(&str, &[i64])]) -> Result<Self, WeightingError> {
        let vars = pairs
            .iter()
            .map(|(n, w)| Variable {
                name: n.to_string(),
                weight: IntVector::from_i64s(w),
            })
            .collect();
        Self::new(torus_rank, vars)
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(|v| v.name.as_str()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn weight(&self, i: usize) -> &IntVector {
        &self.variables[i].weight
    }

    /// Keeps the variables whose index satisfies `keep`, in order.
    pub fn restrict(&self, keep: &[bool]) -> VariableWeighting {
        VariableWeighting {
            torus_rank: self.torus_rank,
            variables: self
                .variables
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(v, _)| v.clone())
                .collect(),
        }
    }

    /// `Σ exponents[i] · weight(x_i)`.
    pub fn weight_of(&self, m: &Monomial) -> Result<IntVector, MonomialLengthError> {
        if m.len() != self.len() {
            return Err(MonomialLengthError {
                expected: self.len(),
                found: m.len(),
            });
        }
        Ok(self.weight_of_unchecked(m))
    }

    pub(crate) fn weight_of_unchecked(&self, m: &Monomial) -> IntVector {
        let mut acc = vec![BigInt::zero(); self.torus_rank];
        for (e, v) in m.exponents().iter().zip(&self.variables) {
            if *e == 0 {
                continue;
            }
            let e = BigInt::from(*e);
            for (a, w) in acc.iter_mut().zip(v.weight.iter()) {
                *a += &e * w;
            }
        }
        IntVector::new(acc)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("monomial has {found} exponents, expected {expected}")]
pub struct MonomialLengthError {
    pub expected: usize,
    pub found: usize,
}

/// Exponent vector, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn uses(&self, var: usize) -> bool {
        self.0[var] > 0
    }

    pub fn restrict(&self, keep: &[bool]) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect(),
        )
    }

    /// Product, or `None` if an exponent would exceed [`MAX_EXPONENT`].
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).filter(|s| *s <= MAX_EXPONENT))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> MonomialDisplay<'a> {
        MonomialDisplay { monomial: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    names: &'a [&'a str],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (e, name) in self.monomial.0.iter().zip(self.names) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial as a list of `(coefficient, monomial)` pairs: distinct monomials,
/// nonzero coefficients, sorted by descending lexicographic order of exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    terms: Vec<(BigRational, Monomial)>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial { terms: Vec::new() }
    }

    /// Merges equal monomials, drops zero coefficients and sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, Monomial)>) -> Self {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        GradedPolynomial { terms }
    }

    pub fn terms(&self) -> &[(BigRational, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> GradedPolynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                GradedPolynomial {
                    terms: self.terms.iter().map(|(c, m)| (c * &inv, m.clone())).collect(),
                }
            }
        }
    }

    /// Sets every variable with `keep[i] == false` to zero and removes it.
    pub fn substitute_zero(&self, keep: &[bool]) -> GradedPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exponents().iter().zip(keep).all(|(&e, &k)| k || e == 0))
            .map(|(c, m)| (c.clone(), m.restrict(keep)))
            .collect();
        // Restriction of distinct surviving monomials stays injective and order-preserving.
        GradedPolynomial { terms }
    }

    pub fn min_total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.total_degree()).min()
    }

    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, names }
    }
}

impl PartialOrd for GradedPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedPolynomial {
    /// Compares term by term: monomials first (descending), then coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        for ((ca, ma), (cb, mb)) in self.terms.iter().zip(&other.terms) {
            let o = mb.cmp(ma).then_with(|| ca.cmp(cb));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a GradedPolynomial,
    names: &'a [&'a str],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{abs}*{}", m.display(self.names))?;
            }
        }
        Ok(())
    }
}
