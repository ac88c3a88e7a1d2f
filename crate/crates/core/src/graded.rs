//! Finitely presented `Z^n`-graded algebras `A = k[x_1..x_r]/I` and their
//! limit and fixed-point presentations.
//!
//! For a toric monoid `S` with zero, the ideal of `X⁺ ⊂ X` is generated by the
//! homogeneous elements whose weight lies outside `S`. In a graded polynomial
//! ring that ideal is generated by the outsider *variables*: a monomial built
//! only from insider variables has insider weight because the saturation of
//! `S` is closed under addition. Every operation here therefore works by
//! substituting zero for a set of variables.

use serde::Serialize;
use thiserror::Error;

use crate::monoid::{AffineMonoid, MonoidError};
use crate::poly::{GradedPolynomial, VariableWeighting};
use crate::vector::IntVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("inhomogeneous polynomial: term {first_term} has weight {first}, term {second_term} has weight {second}")]
pub struct InhomogeneousError {
    pub first_term: usize,
    pub first: IntVector,
    pub second_term: usize,
    pub second: IntVector,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("relation {relation}: {source}")]
    Inhomogeneous {
        relation: usize,
        #[source]
        source: InhomogeneousError,
    },
    #[error("relation {relation} has {found} exponents per monomial, expected {expected}")]
    RelationArity { relation: usize, expected: usize, found: usize },
    #[error("torus rank {torus_rank} does not match monoid rank {monoid_rank}")]
    RankMismatch { torus_rank: usize, monoid_rank: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("relation {relation} has a term of degree at most one; minimize the presentation at the origin first")]
    NotMinimalPresentation { relation: usize },
}

/// Weight shared by all terms of `p`; the zero polynomial and constants have weight zero.
pub fn check_homogeneous(p: &GradedPolynomial, w: &VariableWeighting) -> Result<IntVector, InhomogeneousError> {
    let mut common: Option<(usize, IntVector)> = None;
    for (i, (_, m)) in p.terms().iter().enumerate() {
        let weight = w.weight_of_unchecked(m);
        match &common {
            None => common = Some((i, weight)),
            Some((j, c)) if *c != weight => {
                return Err(InhomogeneousError {
                    first_term: *j,
                    first: c.clone(),
                    second_term: i,
                    second: weight,
                })
            }
            Some(_) => {}
        }
    }
    Ok(common.map_or_else(|| IntVector::zeros(w.torus_rank()), |(_, c)| c))
}

/// `k[variables] / (relations)` with homogeneous relations in canonical form:
/// each relation monic, the list sorted and free of duplicates and zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    weighting: VariableWeighting,
    relations: Vec<GradedPolynomial>,
}

impl GradedPresentation {
    pub fn new(weighting: VariableWeighting, relations: Vec<GradedPolynomial>) -> Result<Self, AlgebraError> {
        for (i, r) in relations.iter().enumerate() {
            if let Some((_, m)) = r.terms().iter().find(|(_, m)| m.len() != weighting.len()) {
                return Err(AlgebraError::RelationArity {
                    relation: i,
                    expected: weighting.len(),
                    found: m.len(),
                });
            }
            check_homogeneous(r, &weighting).map_err(|source| AlgebraError::Inhomogeneous { relation: i, source })?;
        }
        Ok(Self::canonical(weighting, relations))
    }

    fn canonical(weighting: VariableWeighting, relations: Vec<GradedPolynomial>) -> Self {
        let mut relations: Vec<GradedPolynomial> = relations
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.monic())
            .collect();
        relations.sort();
        relations.dedup();
        GradedPresentation { weighting, relations }
    }

    pub fn weighting(&self) -> &VariableWeighting {
        &self.weighting
    }

    pub fn relations(&self) -> &[GradedPolynomial] {
        &self.relations
    }

    pub fn torus_rank(&self) -> usize {
        self.weighting.torus_rank()
    }

    /// Substitutes zero for every variable not kept.
    fn kill_variables(&self, keep: &[bool]) -> GradedPresentation {
        let weighting = self.weighting.restrict(keep);
        let relations = self.relations.iter().map(|r| r.substitute_zero(keep)).collect();
        // Substitution preserves homogeneity, so canonicalization suffices.
        Self::canonical(weighting, relations)
    }

    /// Human-readable relation strings in canonical term order.
    pub fn relation_strings(&self) -> Vec<String> {
        let names = self.weighting.names();
        self.relations.iter().map(|r| r.display(&names).to_string()).collect()
    }
}

fn check_monoid(p: &GradedPresentation, s: &AffineMonoid) -> Result<(), AlgebraError> {
    if p.torus_rank() != s.rank() {
        return Err(AlgebraError::RankMismatch {
            torus_rank: p.torus_rank(),
            monoid_rank: s.rank(),
        });
    }
    Ok(())
}

/// Indices of variables whose weight lies outside the saturation of `s`.
pub fn outsider_indices(w: &VariableWeighting, s: &AffineMonoid) -> Vec<usize> {
    (0..w.len()).filter(|&i| !s.contains_unchecked(w.weight(i))).collect()
}

/// Names of the variables whose weight is an outsider character for `s`.
pub fn outsider_variables(p: &GradedPresentation, s: &AffineMonoid) -> Result<Vec<String>, AlgebraError> {
    check_monoid(p, s)?;
    Ok(outsider_indices(&p.weighting, s)
        .into_iter()
        .map(|i| p.weighting.variables()[i].name.clone())
        .collect())
}

/// Presentation of the limit scheme `X⁺`: outsider variables set to zero.
pub fn bb_plus(p: &GradedPresentation, s: &AffineMonoid) -> Result<GradedPresentation, AlgebraError> {
    check_monoid(p, s)?;
    if !s.has_zero() {
        return Err(MonoidError::MonoidHasUnits.into());
    }
    let mut keep = vec![true; p.weighting.len()];
    for i in outsider_indices(&p.weighting, s) {
        keep[i] = false;
    }
    Ok(p.kill_variables(&keep))
}

/// Presentation of the fixed locus `X^G`: every variable of nonzero weight set to zero.
pub fn fixed_locus(p: &GradedPresentation) -> GradedPresentation {
    let keep: Vec<bool> = (0..p.weighting.len()).map(|i| p.weighting.weight(i).is_zero()).collect();
    p.kill_variables(&keep)
}

/// Verdict of [`open_immersion_check`] with the variables responsible for a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImmersionReport {
    pub open_immersion: bool,
    pub outsider_variables: Vec<String>,
}

/// Whether `X⁺ → X` is an open immersion near the origin, i.e. whether the
/// cotangent space there has no outsider weights. Requires a presentation
/// without terms of degree ≤ 1, so that the variables span the cotangent space.
pub fn open_immersion_check(p: &GradedPresentation, s: &AffineMonoid) -> Result<ImmersionReport, AlgebraError> {
    check_monoid(p, s)?;
    if !s.has_zero() {
        return Err(MonoidError::MonoidHasUnits.into());
    }
    for (i, r) in p.relations.iter().enumerate() {
        if r.min_total_degree().is_some_and(|d| d <= 1) {
            return Err(AlgebraError::NotMinimalPresentation { relation: i });
        }
    }
    let outsiders = outsider_variables(p, s)?;
    Ok(ImmersionReport {
        open_immersion: outsiders.is_empty(),
        outsider_variables: outsiders,
    })
}
