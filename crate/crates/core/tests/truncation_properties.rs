mod common;

use std::collections::BTreeMap;

use bbcells::poly::{Monomial, Variable, VariableWeighting};
use bbcells::truncation::{algebraize_check, component_dimension, stabilization_check, truncate, MonomialQuotient};
use bbcells::{AffineMonoid, IntVector};
use common::*;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Case {
    q: MonomialQuotient,
    s: AffineMonoid,
    /// Exponent bound per variable used by the brute-force oracle.
    zero_caps: Vec<Option<u32>>,
}

fn random_case<R: Rng>(rng: &mut R) -> Case {
    let rank = rng.gen_range(1..=2);
    let s = loop {
        let n = rng.gen_range(1..=3);
        let s = AffineMonoid::from_generators(random_generators(rng, rank, n, 2), rank).unwrap();
        if s.has_zero() && s.generators().iter().any(|g| !g.is_zero()) {
            break s;
        }
    };
    let gens: Vec<&IntVector> = s.generators().iter().filter(|g| !g.is_zero()).collect();
    let nvars = rng.gen_range(1..=4);
    let names = ["x", "y", "z", "u"];
    let mut vars = vec![];
    let mut zero_caps = vec![];
    for name in names.iter().take(nvars) {
        let weight = if rng.gen_bool(0.15) {
            IntVector::zeros(rank)
        } else {
            let mut w = IntVector::zeros(rank);
            while w.is_zero() {
                for g in &gens {
                    w = &w + &g.scale(&big(rng.gen_range(0..=2)));
                }
            }
            w
        };
        zero_caps.push(weight.is_zero().then(|| rng.gen_range(1..=3)));
        vars.push(Variable { name: name.to_string(), weight });
    }
    let w = VariableWeighting::new(rank, vars).unwrap();
    let mut generators: Vec<Monomial> = (0..rng.gen_range(0..=3)).map(|_| random_monomial(rng, nvars, 3)).collect();
    generators.retain(|m| !m.is_one());
    for (i, cap) in zero_caps.iter().enumerate() {
        if let Some(c) = cap {
            let mut e = vec![0; nvars];
            e[i] = *c;
            generators.push(Monomial::new(e));
        }
    }
    Case {
        q: MonomialQuotient::new(w, generators).unwrap(),
        s,
        zero_caps,
    }
}

/// Visits every exponent vector in the box `[0, bounds[i]]`.
fn for_box(bounds: &[u32], f: &mut dyn FnMut(&Monomial)) {
    let mut exps = vec![0u32; bounds.len()];
    loop {
        f(&Monomial::new(exps.clone()));
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return;
            }
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn bounds(case: &Case, free: u32) -> Vec<u32> {
    case.zero_caps.iter().map(|c| c.map_or(free, |c| c - 1)).collect()
}

/// `dim (A_n)_λ` for every λ, by enumeration in a box.
fn brute_truncation(case: &Case, level: u32) -> BTreeMap<IntVector, usize> {
    let w = case.q.weighting();
    let mut out = BTreeMap::new();
    for_box(&bounds(case, level), &mut |m| {
        let order: u32 = m.exponents().iter().zip(&case.zero_caps).filter(|(_, c)| c.is_none()).map(|(e, _)| e).sum();
        if order <= level && case.q.is_standard(m) {
            *out.entry(w.weight_of(m).unwrap()).or_insert(0) += 1;
        }
    });
    out
}

/// `dim A_λ` for every λ of Kempf degree at most `bound`.
fn brute_components(case: &Case, bound: u32) -> BTreeMap<IntVector, usize> {
    let w = case.q.weighting();
    let kempf = case.s.kempf_vector().unwrap();
    let mut out = BTreeMap::new();
    for_box(&bounds(case, bound), &mut |m| {
        let weight = w.weight_of(m).unwrap();
        if kempf.degree(&weight) <= big(bound as i64) && case.q.is_standard(m) {
            *out.entry(weight).or_insert(0) += 1;
        }
    });
    out
}

#[test]
fn truncation_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..60 {
        let case = random_case(&mut rng);
        for level in 0..=4 {
            let table = truncate(&case.q, &case.s, level).unwrap();
            let expected = brute_truncation(&case, level as u32);
            let got: BTreeMap<IntVector, usize> = table.rows.iter().map(|((_, w), d)| (w.clone(), *d)).collect();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn truncations_stabilize_at_kempf_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..50 {
        let case = random_case(&mut rng);
        let components = brute_components(&case, 8);
        for (weight, dim) in &components {
            assert_eq!(component_dimension(&case.q, &case.s, weight).unwrap(), *dim);
            let report = stabilization_check(&case.q, &case.s, weight, 10).unwrap();
            assert!(report.monotone && report.stable, "{report:?}");
            assert_eq!(report.limit, *dim);
            assert_eq!(report.dimensions[report.n_lambda], *dim);
            let k = case.s.kempf_vector().unwrap().degree(weight).to_usize().unwrap();
            assert_eq!(report.n_lambda, k);
        }
        let report = algebraize_check(&case.q, &case.s, 8).unwrap();
        assert!(report.holds);
        assert_eq!(report.weights_checked, components.len());
    }
}
