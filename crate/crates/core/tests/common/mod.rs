#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use bbcells::poly::{GradedPolynomial, Monomial, Variable, VariableWeighting};
use bbcells::IntVector;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

pub fn iv(v: &[i64]) -> IntVector {
    IntVector::from_i64s(v)
}

pub fn random_vector<R: Rng>(rng: &mut R, rank: usize, bound: i64) -> IntVector {
    IntVector::from_i64s(&(0..rank).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

pub fn random_generators<R: Rng>(rng: &mut R, rank: usize, count: usize, bound: i64) -> Vec<IntVector> {
    (0..count).map(|_| random_vector(rng, rank, bound)).collect()
}

/// Solves `Σ λ_i cols[i] = target` exactly when `cols` are independent.
fn solve(cols: &[&IntVector], target: &IntVector) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(c[r].clone())).collect();
            row.push(BigRational::from_integer(target[r].clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let p = (pivot_row..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][c].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != pivot_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..=k {
                    let d = &f * &m[pivot_row][j];
                    m[r][j] -= d;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if (pivot_row..n).any(|r| !m[r][k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// Membership in the rational cone of `gens` by Carathéodory: some independent
/// subset expresses `target` with nonnegative coefficients.
pub fn in_cone_oracle(gens: &[IntVector], target: &IntVector) -> bool {
    if target.is_zero() {
        return true;
    }
    let gens: Vec<&IntVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    let n = target.len();
    let count = gens.len();
    for mask in 1u32..(1 << count) {
        if mask.count_ones() as usize > n {
            continue;
        }
        let subset: Vec<&IntVector> = (0..count).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
        if let Some(coeffs) = solve(&subset, target) {
            if coeffs.iter().all(|c| !c.is_negative()) {
                return true;
            }
        }
    }
    false
}

pub fn rank_of(vectors: &[IntVector], n: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..n {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn random_weighting<R: Rng>(rng: &mut R, torus_rank: usize, nvars: usize, bound: i64) -> VariableWeighting {
    let names = ["x", "y", "z", "u", "v", "t"];
    let vars = (0..nvars)
        .map(|i| Variable {
            name: names[i].to_string(),
            weight: random_vector(rng, torus_rank, bound),
        })
        .collect();
    VariableWeighting::new(torus_rank, vars).unwrap()
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// Homogeneous relations: random monomials grouped by weight, each group
/// combined with random coefficients.
pub fn random_relations<R: Rng>(rng: &mut R, w: &VariableWeighting, count: usize) -> Vec<GradedPolynomial> {
    let mut by_weight: BTreeMap<IntVector, Vec<Monomial>> = BTreeMap::new();
    for _ in 0..count * 3 {
        let m = random_monomial(rng, w.len(), 2);
        by_weight.entry(w.weight_of(&m).unwrap()).or_default().push(m);
    }
    by_weight
        .into_values()
        .take(count)
        .map(|ms| {
            GradedPolynomial::from_terms(ms.into_iter().map(|m| {
                let c = rng.gen_range(-3i64..=3);
                (BigRational::from_integer(BigInt::from(if c == 0 { 1 } else { c })), m)
            }))
        })
        .collect()
}
