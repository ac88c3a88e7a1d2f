//! JSON documents for monoids, presentations and monomial quotients.
//!
//! Lattice integers are written as decimal strings and accepted either as
//! strings or as JSON numbers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{AlgebraError, GradedPresentation};
use crate::monoid::{AffineMonoid, MonoidError, MonoidSpec};
use crate::parse::{parse_polynomial, ParseError};
use crate::poly::{Variable, VariableWeighting, WeightingError};
use crate::truncation::{MonomialQuotient, TruncationError};
use crate::vector::IntVector;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}[{index}]: {source}")]
    Parse {
        field: &'static str,
        index: usize,
        #[source]
        source: ParseError,
    },
    #[error("monomial_generators[{index}] is not a single monomial")]
    NotAMonomial { index: usize },
    #[error(transparent)]
    Weighting(#[from] WeightingError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Truncation(#[from] TruncationError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    pub weight: IntVector,
}

/// `{"torus_rank": n, "variables": [...], "relations": ["x*y - z^2", ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub torus_rank: usize,
    pub variables: Vec<VariableSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
}

/// `{"torus_rank": n, "variables": [...], "monomial_generators": ["x^2", ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuotientSpec {
    pub torus_rank: usize,
    pub variables: Vec<VariableSpec>,
    #[serde(default)]
    pub monomial_generators: Vec<String>,
}

fn weighting(torus_rank: usize, variables: &[VariableSpec]) -> Result<VariableWeighting, WeightingError> {
    VariableWeighting::new(
        torus_rank,
        variables
            .iter()
            .map(|v| Variable {
                name: v.name.clone(),
                weight: v.weight.clone(),
            })
            .collect(),
    )
}

fn variable_specs(w: &VariableWeighting) -> Vec<VariableSpec> {
    w.variables()
        .iter()
        .map(|v| VariableSpec {
            name: v.name.clone(),
            weight: v.weight.clone(),
        })
        .collect()
}

impl PresentationSpec {
    pub fn build(&self) -> Result<GradedPresentation, IoError> {
        let w = weighting(self.torus_rank, &self.variables)?;
        let names = w.names();
        let relations = self
            .relations
            .iter()
            .enumerate()
            .map(|(index, r)| {
                parse_polynomial(r, &names).map_err(|source| IoError::Parse {
                    field: "relations",
                    index,
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedPresentation::new(w, relations)?)
    }

    pub fn from_presentation(p: &GradedPresentation) -> Self {
        PresentationSpec {
            torus_rank: p.torus_rank(),
            variables: variable_specs(p.weighting()),
            relations: p.relation_strings(),
        }
    }
}

impl QuotientSpec {
    pub fn build(&self) -> Result<MonomialQuotient, IoError> {
        let w = weighting(self.torus_rank, &self.variables)?;
        let names = w.names();
        let mut gens = Vec::with_capacity(self.monomial_generators.len());
        for (index, text) in self.monomial_generators.iter().enumerate() {
            let p = parse_polynomial(text, &names).map_err(|source| IoError::Parse {
                field: "monomial_generators",
                index,
                source,
            })?;
            match p.terms() {
                [(_, m)] => gens.push(m.clone()),
                _ => return Err(IoError::NotAMonomial { index }),
            }
        }
        Ok(MonomialQuotient::new(w, gens)?)
    }

    pub fn from_quotient(q: &MonomialQuotient) -> Self {
        QuotientSpec {
            torus_rank: q.weighting().torus_rank(),
            variables: variable_specs(q.weighting()),
            monomial_generators: q.generator_strings(),
        }
    }
}

pub fn read_monoid(json: &str) -> Result<AffineMonoid, IoError> {
    let spec: MonoidSpec = serde_json::from_str(json)?;
    Ok(AffineMonoid::from_spec(spec)?)
}

pub fn read_presentation(json: &str) -> Result<GradedPresentation, IoError> {
    serde_json::from_str::<PresentationSpec>(json)?.build()
}

pub fn read_quotient(json: &str) -> Result<MonomialQuotient, IoError> {
    serde_json::from_str::<QuotientSpec>(json)?.build()
}
