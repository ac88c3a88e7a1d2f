//! Affine semigroups in `Z^n`, their rational cones, and the lattice-level
//! reduction of a monoid with units to a monoid with zero.
//!
//! Membership is always taken in the saturation `cone ∩ Z^n`. The cone is
//! described by facet inequalities `⟨f, x⟩ ≥ 0` together with equations
//! `⟨h, x⟩ = 0` cutting out the linear span of the generators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, QVec};
use crate::vector::IntVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("monoid has nontrivial units; reduce it to a monoid with zero first")]
    MonoidHasUnits,
}

/// A finitely generated subsemigroup of `Z^rank` together with exact data of
/// its cone: irredundant facet normals, equations of its span and a Z-basis
/// of the unit lattice `cone ∩ -cone ∩ Z^rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMonoid {
    rank: usize,
    generators: Vec<IntVector>,
    facet_normals: Vec<IntVector>,
    equations: Vec<IntVector>,
    lineality_basis: Vec<IntVector>,
}

/// Input schema `{"rank": n, "generators": [[...], ...]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct MonoidSpec {
    pub rank: usize,
    pub generators: Vec<IntVector>,
}

impl AffineMonoid {
    /// Builds the monoid and its cone data.
    pub fn from_generators(generators: Vec<IntVector>, rank: usize) -> Result<Self, MonoidError> {
        if rank == 0 {
            return Err(MonoidError::ZeroRank);
        }
        if generators.is_empty() {
            return Err(MonoidError::EmptyGenerators);
        }
        Self::build(generators, rank)
    }

    pub fn from_spec(spec: MonoidSpec) -> Result<Self, MonoidError> {
        Self::from_generators(spec.generators, spec.rank)
    }

    /// `N^rank`, generated by the coordinate vectors.
    pub fn orthant(rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| {
                let mut v = vec![BigInt::zero(); rank];
                v[i] = BigInt::one();
                IntVector::new(v)
            })
            .collect();
        Self::from_generators(gens, rank).expect("orthant of positive rank")
    }

    // Also used for image monoids, which may have rank 0 or no generators.
    fn build(generators: Vec<IntVector>, rank: usize) -> Result<Self, MonoidError> {
        for g in &generators {
            if g.len() != rank {
                return Err(MonoidError::DimensionMismatch {
                    expected: rank,
                    found: g.len(),
                });
            }
        }
        let nonzero: Vec<QVec> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(linalg::to_q)
            .collect();
        let dual = double_description(&nonzero, rank);

        // Equations: integer basis of span(generators)^⊥, the lineality of the dual cone.
        let gen_rows: Vec<IntVector> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        let equations = if dual.lineality.is_empty() {
            Vec::new()
        } else {
            let red = linalg::column_reduce(&gen_rows, rank);
            linalg::row_hermite(&red.kernel_basis(), rank)
        };

        let mut facet_normals: Vec<IntVector> = dual.rays.iter().map(|r| linalg::primitive(r)).collect();
        facet_normals.sort();
        facet_normals.dedup();

        // Unit lattice: integer kernel of all facet normals and equations.
        let mut cut: Vec<IntVector> = facet_normals.clone();
        cut.extend(equations.iter().cloned());
        let red = linalg::column_reduce(&cut, rank);
        let lineality_basis = linalg::row_hermite(&red.kernel_basis(), rank);

        Ok(AffineMonoid {
            rank,
            generators,
            facet_normals,
            equations,
            lineality_basis,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Irredundant inequalities `⟨f, x⟩ ≥ 0`, each primitive and lying in the span of the cone.
    pub fn facet_normals(&self) -> &[IntVector] {
        &self.facet_normals
    }

    /// Equations `⟨h, x⟩ = 0` of the linear span; empty for full-dimensional cones.
    pub fn equations(&self) -> &[IntVector] {
        &self.equations
    }

    pub fn lineality_basis(&self) -> &[IntVector] {
        &self.lineality_basis
    }

    /// Membership in the saturation of the monoid.
    pub fn contains(&self, m: &IntVector) -> Result<bool, MonoidError> {
        self.check_rank(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &IntVector) -> bool {
        self.facet_normals.iter().all(|f| !f.dot(m).is_negative())
            && self.equations.iter().all(|h| h.dot(m).is_zero())
    }

    fn check_rank(&self, m: &IntVector) -> Result<(), MonoidError> {
        if m.len() != self.rank {
            return Err(MonoidError::DimensionMismatch {
                expected: self.rank,
                found: m.len(),
            });
        }
        Ok(())
    }

    /// Z-basis of the unit lattice; empty iff the monoid has a zero.
    pub fn units(&self) -> &[IntVector] {
        &self.lineality_basis
    }

    pub fn has_zero(&self) -> bool {
        self.lineality_basis.is_empty()
    }

    /// The grading vector of minimal max-norm (ties broken lexicographically)
    /// pairing to at least one with every nonzero generator.
    pub fn kempf_vector(&self) -> Result<KempfVector, MonoidError> {
        if !self.has_zero() {
            return Err(MonoidError::MonoidHasUnits);
        }
        let gens: Vec<&IntVector> = self.generators.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(KempfVector(IntVector::zeros(self.rank)));
        }
        // A pointed cone admits a strictly positive functional, so this terminates.
        let mut radius = BigInt::one();
        loop {
            if let Some(w) = lex_first_in_box(&gens, self.rank, &radius) {
                return Ok(KempfVector(w));
            }
            radius += 1;
        }
    }

    /// Projection `Z^rank → Z^rank'` with kernel the unit lattice, and the image monoid.
    pub fn reduce_to_zero(&self) -> LatticeProjection {
        let red = linalg::column_reduce(&self.lineality_orthogonal(), self.rank);
        let matrix = linalg::row_hermite(&red.quotient_rows(), self.rank);
        let target_rank = matrix.len();
        let images: Vec<IntVector> = self
            .generators
            .iter()
            .map(|g| apply(&matrix, g))
            .filter(|v| !v.is_zero())
            .collect();
        let image_monoid = Self::build(images, target_rank).expect("image generators have target rank");
        LatticeProjection {
            source_rank: self.rank,
            target_rank,
            matrix,
            image_monoid,
        }
    }

    // Integer rows spanning the orthogonal complement of the unit lattice.
    fn lineality_orthogonal(&self) -> Vec<IntVector> {
        let mut cut = self.facet_normals.clone();
        cut.extend(self.equations.iter().cloned());
        cut
    }
}

/// Depth-first search over `[-r, r]^n` in lexicographic order, pruning
/// branches where some generator can no longer reach pairing ≥ 1.
fn lex_first_in_box(gens: &[&IntVector], n: usize, radius: &BigInt) -> Option<IntVector> {
    // tails[g][k] = Σ_{j ≥ k} |g_j|
    let tails: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| {
            let mut t = vec![BigInt::zero(); n + 1];
            for k in (0..n).rev() {
                t[k] = &t[k + 1] + g[k].abs();
            }
            t
        })
        .collect();
    let mut partial = vec![BigInt::zero(); gens.len()];
    let mut w = Vec::with_capacity(n);
    if search(gens, &tails, radius, 0, n, &mut partial, &mut w) {
        Some(IntVector::new(w))
    } else {
        None
    }
}

fn search(
    gens: &[&IntVector],
    tails: &[Vec<BigInt>],
    radius: &BigInt,
    k: usize,
    n: usize,
    partial: &mut Vec<BigInt>,
    w: &mut Vec<BigInt>,
) -> bool {
    if k == n {
        return partial.iter().all(|s| s >= &BigInt::one());
    }
    let mut value = -radius.clone();
    while &value <= radius {
        let feasible = gens.iter().enumerate().all(|(i, g)| {
            let s = &partial[i] + &value * &g[k];
            s + radius * &tails[i][k + 1] >= BigInt::one()
        });
        if feasible {
            for (i, g) in gens.iter().enumerate() {
                partial[i] += &value * &g[k];
            }
            w.push(value.clone());
            if search(gens, tails, radius, k + 1, n, partial, w) {
                return true;
            }
            w.pop();
            for (i, g) in gens.iter().enumerate() {
                partial[i] -= &value * &g[k];
            }
        }
        value += 1;
    }
    false
}

fn apply(matrix: &[IntVector], v: &IntVector) -> IntVector {
    IntVector::new(matrix.iter().map(|row| row.dot(v)).collect())
}

/// Grading vector of a one-parameter subgroup with positive pairing on the monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct KempfVector(pub IntVector);

impl KempfVector {
    pub fn degree(&self, m: &IntVector) -> BigInt {
        self.0.dot(m)
    }

    pub fn vector(&self) -> &IntVector {
        &self.0
    }
}

/// Surjection of lattices killing the units of the source monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeProjection {
    pub source_rank: usize,
    pub target_rank: usize,
    /// `target_rank` rows of length `source_rank`, in Hermite normal form.
    pub matrix: Vec<IntVector>,
    pub image_monoid: AffineMonoid,
}

impl LatticeProjection {
    pub fn apply(&self, v: &IntVector) -> Result<IntVector, MonoidError> {
        if v.len() != self.source_rank {
            return Err(MonoidError::DimensionMismatch {
                expected: self.source_rank,
                found: v.len(),
            });
        }
        Ok(apply(&self.matrix, v))
    }

    pub fn is_identity(&self) -> bool {
        self.source_rank == self.target_rank
            && self
                .matrix
                .iter()
                .enumerate()
                .all(|(i, row)| row.iter().enumerate().all(|(j, x)| *x == BigInt::from((i == j) as i64)))
    }
}

struct DualCone {
    lineality: Vec<QVec>,
    rays: Vec<QVec>,
}

/// Double description of `{y : ⟨a, y⟩ ≥ 0 for a in constraints}`, returned as a
/// lineality basis plus extreme rays projected orthogonally to the lineality.
fn double_description(constraints: &[QVec], n: usize) -> DualCone {
    let mut lineality: Vec<QVec> = (0..n)
        .map(|i| {
            let mut v = vec![BigRational::zero(); n];
            v[i] = BigRational::one();
            v
        })
        .collect();
    let mut rays: Vec<QVec> = Vec::new();
    let mut processed: Vec<QVec> = Vec::new();

    for a in constraints {
        if let Some(pos) = lineality.iter().position(|l| !linalg::dot_q(a, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            let mut al0 = linalg::dot_q(a, &l0);
            if al0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                al0 = -al0;
            }
            let shift = |v: &QVec| -> QVec {
                let c = linalg::dot_q(a, v) / &al0;
                v.iter().zip(&l0).map(|(x, y)| x - &c * y).collect()
            };
            lineality = lineality.iter().map(&shift).collect();
            rays = rays.iter().map(&shift).collect();
            rays.push(l0);
        } else {
            let mut next = Vec::new();
            let mut positive = Vec::new();
            let mut negative = Vec::new();
            for r in rays.drain(..) {
                let v = linalg::dot_q(a, &r);
                if v.is_zero() {
                    next.push(r);
                } else if v.is_positive() {
                    positive.push((r, v));
                } else {
                    negative.push((r, v));
                }
            }
            for (p, vp) in &positive {
                for (q, vq) in &negative {
                    let combo: QVec = q.iter().zip(p).map(|(x, y)| vp * x - vq * y).collect();
                    next.push(combo);
                }
            }
            next.extend(positive.into_iter().map(|(r, _)| r));
            rays = next;
        }
        processed.push(a.clone());
        rays = prune_rays(rays, &lineality, &processed, n);
    }
    DualCone { lineality, rays }
}

/// Projects rays orthogonally to the lineality, rescales them to primitive
/// integer form, and keeps only distinct extreme rays.
fn prune_rays(rays: Vec<QVec>, lineality: &[QVec], processed: &[QVec], n: usize) -> Vec<QVec> {
    let full_rank = linalg::rank_q(processed, n);
    let mut seen: Vec<IntVector> = Vec::new();
    let mut out = Vec::new();
    for r in rays {
        let projected = linalg::project_away(&r, lineality);
        if linalg::is_zero_q(&projected) {
            continue;
        }
        let key = linalg::primitive(&projected);
        if seen.contains(&key) {
            continue;
        }
        let tight: Vec<QVec> = processed
            .iter()
            .filter(|a| linalg::dot_q(a, &projected).is_zero())
            .cloned()
            .collect();
        if linalg::rank_q(&tight, n) + 1 != full_rank {
            continue;
        }
        seen.push(key.clone());
        out.push(linalg::to_q(&key));
    }
    out
}
