//! Monomial quotients `k[x]/M` and their formal truncations `A_n = A/J^{n+1}`,
//! where `J` is the ideal of the variables of nonzero weight.
//!
//! For a monoid `S` with zero and weights inside `S`, the Kempf vector `w`
//! gives every variable of nonzero weight a positive degree. A monomial of
//! weight `λ` then has `J`-order at most `⟨w, λ⟩`, so `(A_n)_λ` stops growing
//! once `n ≥ ⟨w, λ⟩` and agrees with `A_λ` from there on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::monoid::{AffineMonoid, KempfVector, MonoidError};
use crate::poly::{Monomial, VariableWeighting};
use crate::vector::IntVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TruncationError {
    #[error("torus rank {torus_rank} does not match monoid rank {monoid_rank}")]
    RankMismatch { torus_rank: usize, monoid_rank: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("weight of variable {variable:?} lies outside the monoid")]
    WeightOutsideMonoid { variable: String },
    #[error("variable {variable:?} has weight zero but no power of it lies in the ideal; weight components are infinite-dimensional")]
    InfiniteComponent { variable: String },
    #[error("generator {generator} has {found} exponents, expected {expected}")]
    GeneratorArity { generator: usize, expected: usize, found: usize },
    #[error("weight has length {found}, expected torus rank {expected}")]
    WeightRank { expected: usize, found: usize },
    #[error("Kempf degree {0} is too large to enumerate")]
    DegreeOverflow(BigInt),
}

/// `k[variables] / M` for a monomial ideal `M` given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialQuotient {
    weighting: VariableWeighting,
    minimal_generators: Vec<Monomial>,
}

impl MonomialQuotient {
    /// Reduces `generators` to the minimal antichain generating the same ideal.
    pub fn new(weighting: VariableWeighting, generators: Vec<Monomial>) -> Result<Self, TruncationError> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != weighting.len() {
                return Err(TruncationError::GeneratorArity {
                    generator: i,
                    expected: weighting.len(),
                    found: g.len(),
                });
            }
        }
        let mut gens = generators;
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(MonomialQuotient {
            weighting,
            minimal_generators: minimal,
        })
    }

    pub fn weighting(&self) -> &VariableWeighting {
        &self.weighting
    }

    pub fn minimal_generators(&self) -> &[Monomial] {
        &self.minimal_generators
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.minimal_generators.iter().any(|g| g.divides(m))
    }

    pub fn generator_strings(&self) -> Vec<String> {
        let names = self.weighting.names();
        self.minimal_generators
            .iter()
            .map(|g| g.display(&names).to_string())
            .collect()
    }
}

/// Per-variable data derived from the Kempf vector.
struct Grading {
    kempf: KempfVector,
    degrees: Vec<BigInt>,
    in_j: Vec<bool>,
    /// For weight-zero variables: exponents must stay below this cap.
    caps: Vec<Option<u32>>,
}

fn grading(q: &MonomialQuotient, s: &AffineMonoid) -> Result<Grading, TruncationError> {
    let w = &q.weighting;
    if w.torus_rank() != s.rank() {
        return Err(TruncationError::RankMismatch {
            torus_rank: w.torus_rank(),
            monoid_rank: s.rank(),
        });
    }
    let kempf = s.kempf_vector()?;
    let mut degrees = Vec::with_capacity(w.len());
    let mut in_j = Vec::with_capacity(w.len());
    let mut caps = Vec::with_capacity(w.len());
    for (i, v) in w.variables().iter().enumerate() {
        if !s.contains_unchecked(&v.weight) {
            return Err(TruncationError::WeightOutsideMonoid { variable: v.name.clone() });
        }
        let zero = v.weight.is_zero();
        let cap = if zero {
            let pure_power = q
                .minimal_generators
                .iter()
                .filter(|g| g.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|g| g.exponents()[i])
                .min();
            match pure_power {
                Some(k) => Some(k),
                None => return Err(TruncationError::InfiniteComponent { variable: v.name.clone() }),
            }
        } else {
            None
        };
        degrees.push(kempf.degree(&v.weight));
        in_j.push(!zero);
        caps.push(cap);
    }
    Ok(Grading {
        kempf,
        degrees,
        in_j,
        caps,
    })
}

/// Visits every standard monomial with `Σ cost_i e_i ≤ budget`. Variables with
/// zero cost must carry a cap.
fn for_each_standard(
    q: &MonomialQuotient,
    costs: &[u64],
    caps: &[Option<u32>],
    budget: u64,
    f: &mut dyn FnMut(&Monomial),
) {
    fn rec(
        q: &MonomialQuotient,
        costs: &[u64],
        caps: &[Option<u32>],
        idx: usize,
        budget: u64,
        exps: &mut Vec<u32>,
        f: &mut dyn FnMut(&Monomial),
    ) {
        if idx == costs.len() {
            let m = Monomial::new(exps.clone());
            if q.is_standard(&m) {
                f(&m);
            }
            return;
        }
        let mut max = match caps[idx] {
            Some(c) => c.saturating_sub(1) as u64,
            None => u64::MAX,
        };
        if let Some(steps) = budget.checked_div(costs[idx]) {
            max = max.min(steps);
        }
        let max = u32::try_from(max).expect("exponent bound fits in u32");
        for e in 0..=max {
            exps[idx] = e;
            rec(q, costs, caps, idx + 1, budget - costs[idx] * e as u64, exps, f);
        }
        exps[idx] = 0;
    }
    let mut exps = vec![0u32; costs.len()];
    rec(q, costs, caps, 0, budget, &mut exps, f);
}

fn to_budget(k: &BigInt) -> Result<u64, TruncationError> {
    k.to_u64().ok_or_else(|| TruncationError::DegreeOverflow(k.clone()))
}

/// Graded dimensions of one or more truncation levels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationTable {
    pub kempf_vector: KempfVector,
    /// Kempf degree of each variable weight.
    pub variable_degrees: Vec<String>,
    #[serde(serialize_with = "serialize_rows")]
    pub rows: BTreeMap<(usize, IntVector), usize>,
}

fn serialize_rows<S: serde::Serializer>(
    rows: &BTreeMap<(usize, IntVector), usize>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row<'a> {
        level: usize,
        weight: &'a IntVector,
        dimension: usize,
    }
    serializer.collect_seq(rows.iter().map(|((level, weight), dimension)| Row {
        level: *level,
        weight,
        dimension: *dimension,
    }))
}

impl TruncationTable {
    pub fn dimension(&self, level: usize, weight: &IntVector) -> usize {
        self.rows.get(&(level, weight.clone())).copied().unwrap_or(0)
    }
}

fn truncation_counts(q: &MonomialQuotient, g: &Grading, level: usize) -> BTreeMap<IntVector, usize> {
    let costs: Vec<u64> = g.in_j.iter().map(|&j| j as u64).collect();
    let mut counts = BTreeMap::new();
    for_each_standard(q, &costs, &g.caps, level as u64, &mut |m| {
        *counts.entry(q.weighting.weight_of_unchecked(m)).or_insert(0) += 1;
    });
    counts
}

/// `dim (P/(M + J^{n+1}))_λ` for every weight `λ` with nonzero dimension at level `n`.
pub fn truncate(q: &MonomialQuotient, s: &AffineMonoid, level: usize) -> Result<TruncationTable, TruncationError> {
    truncate_levels(q, s, level..=level)
}

/// Like [`truncate`] for several levels at once.
pub fn truncate_levels(
    q: &MonomialQuotient,
    s: &AffineMonoid,
    levels: impl IntoIterator<Item = usize>,
) -> Result<TruncationTable, TruncationError> {
    let g = grading(q, s)?;
    let mut rows = BTreeMap::new();
    for level in levels {
        for (weight, dim) in truncation_counts(q, &g, level) {
            rows.insert((level, weight), dim);
        }
    }
    Ok(TruncationTable {
        variable_degrees: g.degrees.iter().map(|d| d.to_string()).collect(),
        kempf_vector: g.kempf,
        rows,
    })
}

/// `dim A_λ` counted directly among standard monomials of Kempf degree `⟨w, λ⟩`.
pub fn component_dimension(q: &MonomialQuotient, s: &AffineMonoid, weight: &IntVector) -> Result<usize, TruncationError> {
    let g = grading(q, s)?;
    check_weight(q, weight)?;
    component_dimension_with(q, &g, weight)
}

fn check_weight(q: &MonomialQuotient, weight: &IntVector) -> Result<(), TruncationError> {
    if weight.len() != q.weighting.torus_rank() {
        return Err(TruncationError::WeightRank {
            expected: q.weighting.torus_rank(),
            found: weight.len(),
        });
    }
    Ok(())
}

fn component_dimension_with(q: &MonomialQuotient, g: &Grading, weight: &IntVector) -> Result<usize, TruncationError> {
    let k = g.kempf.degree(weight);
    if k.is_negative() {
        return Ok(0);
    }
    let budget = to_budget(&k)?;
    let costs = kempf_costs(g)?;
    let mut count = 0;
    for_each_standard(q, &costs, &g.caps, budget, &mut |m| {
        if &q.weighting.weight_of_unchecked(m) == weight {
            count += 1;
        }
    });
    Ok(count)
}

fn kempf_costs(g: &Grading) -> Result<Vec<u64>, TruncationError> {
    g.degrees.iter().map(to_budget).collect()
}

/// Outcome of [`stabilization_check`] for one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub weight: IntVector,
    /// `⟨w, λ⟩`, clamped at zero.
    pub n_lambda: usize,
    /// `dim (A_n)_λ` for `n = 0..=n_max`.
    pub dimensions: Vec<usize>,
    pub monotone: bool,
    /// Whether the sequence is constant from `n_lambda` on (vacuous past `n_max`).
    pub stable: bool,
    /// `dim A_λ`.
    pub limit: usize,
}

pub fn stabilization_check(
    q: &MonomialQuotient,
    s: &AffineMonoid,
    weight: &IntVector,
    n_max: usize,
) -> Result<StabilizationReport, TruncationError> {
    let g = grading(q, s)?;
    check_weight(q, weight)?;
    let k = g.kempf.degree(weight);
    let n_lambda = if k.is_negative() {
        0
    } else {
        k.to_usize().ok_or_else(|| TruncationError::DegreeOverflow(k.clone()))?
    };
    let dimensions: Vec<usize> = (0..=n_max)
        .map(|n| truncation_counts(q, &g, n).get(weight).copied().unwrap_or(0))
        .collect();
    let monotone = dimensions.windows(2).all(|p| p[0] <= p[1]);
    let tail = dimensions.get(n_lambda..).unwrap_or(&[]);
    let stable = tail.windows(2).all(|p| p[0] == p[1]);
    let limit = component_dimension_with(q, &g, weight)?;
    Ok(StabilizationReport {
        weight: weight.clone(),
        n_lambda,
        dimensions,
        monotone,
        stable,
        limit,
    })
}

/// Outcome of [`algebraize_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraizeReport {
    pub weight_bound: usize,
    pub weights_checked: usize,
    pub holds: bool,
    /// Weights where `dim (A_{n_λ})_λ ≠ dim A_λ`.
    pub mismatches: Vec<IntVector>,
}

/// Checks `dim (A_{n_λ})_λ = dim A_λ` for every weight of Kempf degree at most
/// `weight_bound` carried by some standard monomial.
pub fn algebraize_check(
    q: &MonomialQuotient,
    s: &AffineMonoid,
    weight_bound: usize,
) -> Result<AlgebraizeReport, TruncationError> {
    let g = grading(q, s)?;
    let costs = kempf_costs(&g)?;
    let mut direct: BTreeMap<IntVector, usize> = BTreeMap::new();
    for_each_standard(q, &costs, &g.caps, weight_bound as u64, &mut |m| {
        *direct.entry(q.weighting.weight_of_unchecked(m)).or_insert(0) += 1;
    });
    let mut by_level: BTreeMap<usize, BTreeMap<IntVector, usize>> = BTreeMap::new();
    let mut mismatches = Vec::new();
    for (weight, dim) in &direct {
        let n = g.kempf.degree(weight).to_usize().expect("degree within bound");
        let counts = by_level.entry(n).or_insert_with(|| truncation_counts(q, &g, n));
        if counts.get(weight).copied().unwrap_or(0) != *dim {
            mismatches.push(weight.clone());
        }
    }
    Ok(AlgebraizeReport {
        weight_bound,
        weights_checked: direct.len(),
        holds: mismatches.is_empty(),
        mismatches,
    })
}

/// Sum of Kempf degrees, for callers that bound enumerations by degree.
pub fn kempf_degree(s: &AffineMonoid, weight: &IntVector) -> Result<BigInt, TruncationError> {
    if weight.len() != s.rank() {
        return Err(TruncationError::WeightRank {
            expected: s.rank(),
            found: weight.len(),
        });
    }
    Ok(s.kempf_vector()?.degree(weight))
}
