//! Torus-fixed points of the Hilbert scheme of `d` points in the plane and the
//! dimensions of their Białynicki-Birula cells.
//!
//! Convention: `(t1, t2)` scales `x` and `y`, and a tangent vector at `M` of
//! Hom-degree `e` (i.e. `φ(x^a y^b)` has degree `(a, b) + e`) is recorded with
//! weight `-e`. With this sign the single point `(x, y)` has character
//! `{(1, 0), (0, 1)}`. A cell for the weight vector `w` has dimension
//! `#{δ : ⟨w, δ⟩ ≥ 0}`; intersections of two cells at the same fixed point use
//! both inequalities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::linalg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("weight vector must be nonzero")]
    ZeroWeight,
    #[error("weight ({w1}, {w2}) is not generic: tangent weight ({d1}, {d2}) at partition {partition} pairs to zero")]
    NonGenericWeight {
        partition: Partition,
        w1: i64,
        w2: i64,
        d1: i64,
        d2: i64,
    },
}

/// A weakly decreasing list of positive parts. Row `b` of the diagram holds
/// the monomials `x^a y^b` with `a < parts[b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, HilbError> {
        if parts.contains(&0) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(HilbError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|a| self.parts.iter().filter(|&&p| p > a).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_box(&self, a: i64, b: i64) -> bool {
        a >= 0 && b >= 0 && (b as usize) < self.parts.len() && (a as usize) < self.parts[b as usize]
    }

    /// Boxes `(a, b)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| (0..len).map(move |a| (a, b)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `d` in reverse lexicographic order; `d = 0` gives the empty partition.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Monomial ideal of colength `d` in `k[x, y]` with its staircase corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdealPlane {
    partition: Partition,
    /// Exponent pairs `(a, b)`, strictly increasing in `a`, strictly decreasing in `b`.
    minimal_generators: Vec<(usize, usize)>,
}

impl MonomialIdealPlane {
    pub fn from_partition(partition: &Partition) -> Self {
        let rows = partition.parts();
        let mut gens = Vec::new();
        // x^{λ_b} y^b is a corner when row b is strictly shorter than row b-1.
        for b in 0..=rows.len() {
            let len = rows.get(b).copied().unwrap_or(0);
            if b == 0 || len < rows[b - 1] {
                gens.push((len, b));
            }
        }
        gens.reverse();
        MonomialIdealPlane {
            partition: partition.clone(),
            minimal_generators: gens,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn minimal_generators(&self) -> &[(usize, usize)] {
        &self.minimal_generators
    }

    pub fn colength(&self) -> usize {
        self.partition.size()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.minimal_generators
            .iter()
            .map(|&(a, b)| {
                let mut factors = Vec::new();
                match a {
                    0 => {}
                    1 => factors.push("x".to_string()),
                    _ => factors.push(format!("x^{a}")),
                }
                match b {
                    0 => {}
                    1 => factors.push("y".to_string()),
                    _ => factors.push(format!("y^{b}")),
                }
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            })
            .collect()
    }
}

/// Finite multiset of weights in `Z^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedCharacter {
    entries: BTreeMap<(i64, i64), usize>,
}

impl BigradedCharacter {
    pub fn add(&mut self, weight: (i64, i64), multiplicity: usize) {
        if multiplicity > 0 {
            *self.entries.entry(weight).or_insert(0) += multiplicity;
        }
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.entries
    }

    pub fn multiplicity(&self, weight: (i64, i64)) -> usize {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn swapped(&self) -> BigradedCharacter {
        BigradedCharacter {
            entries: self.entries.iter().map(|(&(a, b), &m)| ((b, a), m)).collect(),
        }
    }

    /// Number of weights (with multiplicity) satisfying `keep`.
    pub fn count_where(&self, keep: impl Fn((i64, i64)) -> bool) -> usize {
        self.entries
            .iter()
            .filter(|(&w, _)| keep(w))
            .map(|(_, &m)| m)
            .sum()
    }
}

impl Serialize for BigradedCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (&(a, b), &m) in &self.entries {
            seq.serialize_element(&(a, b, m))?;
        }
        seq.end()
    }
}

/// Nonzero integral weight vector in `Z^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVector2(i64, i64);

impl WeightVector2 {
    pub fn new(w1: i64, w2: i64) -> Result<Self, HilbError> {
        if w1 == 0 && w2 == 0 {
            return Err(HilbError::ZeroWeight);
        }
        Ok(WeightVector2(w1, w2))
    }

    /// `(1, d + 1)`: no nonzero tangent weight at a colength-`d` ideal pairs to zero with it.
    pub fn default_generic(d: usize) -> Self {
        WeightVector2(1, d as i64 + 1)
    }

    pub fn components(&self) -> (i64, i64) {
        (self.0, self.1)
    }

    pub fn pair(&self, delta: (i64, i64)) -> i64 {
        self.0 * delta.0 + self.1 * delta.1
    }
}

/// Character of `Hom_S(M, S/M)` by exact linear algebra in each bidegree.
///
/// A homomorphism of Hom-degree `e` sends the generator `m_i` to a multiple of
/// the standard monomial of degree `deg m_i + e` (or to zero if that degree
/// holds none). The consecutive syzygies `x^{a_{i+1}-a_i} m_i = y^{b_i-b_{i+1}} m_{i+1}`
/// generate all relations, so each one becomes a linear equation whenever
/// their common multiple lands on a standard monomial.
pub fn tangent_character_linalg(ideal: &MonomialIdealPlane) -> BigradedCharacter {
    let lambda = &ideal.partition;
    let gens = &ideal.minimal_generators;
    let width = lambda.parts().first().copied().unwrap_or(0) as i64;
    let height = lambda.parts().len() as i64;
    let mut character = BigradedCharacter::default();
    if lambda.size() == 0 {
        return character;
    }
    let span = lambda.size() as i64;
    for e1 in -(width + span)..=(width + span) {
        for e2 in -(height + span)..=(height + span) {
            let dim = hom_dimension(lambda, gens, (e1, e2));
            character.add((-e1, -e2), dim);
        }
    }
    character
}

fn hom_dimension(lambda: &Partition, gens: &[(usize, usize)], e: (i64, i64)) -> usize {
    // unknown index for each generator whose image degree holds a standard monomial
    let mut unknown = vec![None; gens.len()];
    let mut count = 0;
    for (i, &(a, b)) in gens.iter().enumerate() {
        if lambda.contains_box(a as i64 + e.0, b as i64 + e.1) {
            unknown[i] = Some(count);
            count += 1;
        }
    }
    if count == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..gens.len().saturating_sub(1) {
        let (a_next, b_here) = (gens[i + 1].0, gens[i].1);
        if !lambda.contains_box(a_next as i64 + e.0, b_here as i64 + e.1) {
            continue;
        }
        let mut row = vec![BigRational::zero(); count];
        if let Some(j) = unknown[i] {
            row[j] += BigRational::one();
        }
        if let Some(j) = unknown[i + 1] {
            row[j] -= BigRational::one();
        }
        rows.push(row);
    }
    count - linalg::rank_q(&rows, count)
}

/// Character from arms and legs: each box `c` contributes `(a(c)+1, -l(c))` and `(-a(c), l(c)+1)`.
pub fn tangent_character_armleg(ideal: &MonomialIdealPlane) -> BigradedCharacter {
    let lambda = &ideal.partition;
    let conjugate = lambda.transpose();
    let mut character = BigradedCharacter::default();
    for (a, b) in lambda.boxes() {
        let arm = (lambda.parts()[b] - a - 1) as i64;
        let leg = (conjugate.parts()[a] - b - 1) as i64;
        character.add((arm + 1, -leg), 1);
        character.add((-arm, leg + 1), 1);
    }
    character
}

/// Cell dimension together with whether `w` avoided every tangent weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellDimension {
    pub dimension: usize,
    pub generic: bool,
}

pub fn cell_dimension(ideal: &MonomialIdealPlane, w: WeightVector2) -> CellDimension {
    cell_dimension_of(&tangent_character_linalg(ideal), w)
}

pub fn cell_dimension_of(character: &BigradedCharacter, w: WeightVector2) -> CellDimension {
    CellDimension {
        dimension: character.count_where(|d| w.pair(d) >= 0),
        generic: character.count_where(|d| w.pair(d) == 0) == 0,
    }
}

/// Dimension of the intersection of the cells for `w1` and `w2` at the same fixed point.
pub fn intersection_dimension(ideal: &MonomialIdealPlane, w1: WeightVector2, w2: WeightVector2) -> usize {
    intersection_dimension_of(&tangent_character_linalg(ideal), w1, w2)
}

pub fn intersection_dimension_of(character: &BigradedCharacter, w1: WeightVector2, w2: WeightVector2) -> usize {
    character.count_where(|d| w1.pair(d) >= 0 && w2.pair(d) >= 0)
}

/// Cell dimension of every fixed point of `Hilb^d`.
pub fn cells(d: usize, w: WeightVector2) -> Vec<(Partition, CellDimension)> {
    partitions(d)
        .into_iter()
        .map(|p| {
            let dim = cell_dimension(&MonomialIdealPlane::from_partition(&p), w);
            (p, dim)
        })
        .collect()
}

/// Histogram `dimension → number of cells` for a generic `w`, sorted by dimension.
pub fn poincare_polynomial(d: usize, w: WeightVector2) -> Result<Vec<(usize, usize)>, HilbError> {
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for p in partitions(d) {
        let character = tangent_character_linalg(&MonomialIdealPlane::from_partition(&p));
        if let Some((&delta, _)) = character.entries().iter().find(|(&delta, _)| w.pair(delta) == 0) {
            let (w1, w2) = w.components();
            return Err(HilbError::NonGenericWeight {
                partition: p,
                w1,
                w2,
                d1: delta.0,
                d2: delta.1,
            });
        }
        *histogram.entry(cell_dimension_of(&character, w).dimension).or_insert(0) += 1;
    }
    Ok(histogram.into_iter().collect())
}

/// Partition count by the Euler pentagonal recurrence, exact for any `d`.
pub fn partition_count(d: usize) -> BigInt {
    let mut p = vec![BigInt::one()];
    for n in 1..=d {
        let mut total = BigInt::zero();
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += &p[n - g1] * sign;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += &p[n - g2] * sign;
            }
        }
        p.push(total);
    }
    p.swap_remove(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn ideal(p: &[usize]) -> MonomialIdealPlane {
        MonomialIdealPlane::from_partition(&part(p))
    }

    fn character(entries: &[((i64, i64), usize)]) -> BigradedCharacter {
        let mut c = BigradedCharacter::default();
        for &(w, m) in entries {
            c.add(w, m);
        }
        c
    }

    #[test]
    fn small_partitions() {
        assert_eq!(partitions(1), vec![part(&[1])]);
        assert_eq!(partitions(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions(0), vec![Partition { parts: vec![] }]);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(partition_count(8), BigInt::from(22));
        assert_eq!(partition_count(100).to_string(), "190569292");
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn staircase_generators() {
        assert_eq!(ideal(&[1]).minimal_generators(), &[(0, 1), (1, 0)]);
        assert_eq!(ideal(&[2]).minimal_generators(), &[(0, 1), (2, 0)]);
        assert_eq!(ideal(&[2, 1]).minimal_generators(), &[(0, 2), (1, 1), (2, 0)]);
        assert_eq!(ideal(&[2, 1]).generator_strings(), vec!["y^2", "x*y", "x^2"]);
        assert_eq!(ideal(&[]).generator_strings(), vec!["1"]);
    }

    #[test]
    fn single_point_character() {
        let expected = character(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(tangent_character_linalg(&ideal(&[1])), expected);
        assert_eq!(tangent_character_armleg(&ideal(&[1])), expected);
    }

    #[test]
    fn two_points_in_a_row() {
        let expected = character(&[((2, 0), 1), ((-1, 1), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(tangent_character_linalg(&ideal(&[2])), expected);
        assert_eq!(tangent_character_armleg(&ideal(&[2])), expected);
        assert_eq!(tangent_character_armleg(&ideal(&[1, 1])), expected.swapped());
        assert_eq!(tangent_character_linalg(&ideal(&[1, 1])), expected.swapped());
    }

    #[test]
    fn empty_ideal_has_no_tangents() {
        assert_eq!(tangent_character_linalg(&ideal(&[])).total(), 0);
    }

    #[test]
    fn cell_dimensions() {
        let w = WeightVector2::new(1, 3).unwrap();
        assert_eq!(cell_dimension(&ideal(&[2]), w), CellDimension { dimension: 4, generic: true });
        assert_eq!(cell_dimension(&ideal(&[1, 1]), w).dimension, 3);
        let w2 = WeightVector2::new(3, 1).unwrap();
        assert_eq!(intersection_dimension(&ideal(&[2]), w, w2), 3);
        assert_eq!(intersection_dimension(&ideal(&[2]), w, w), 4);
        assert_eq!(intersection_dimension(&ideal(&[1]), w, w2), 2);
        // (1,1) pairs to zero with (-1,1)
        let flat = WeightVector2::new(1, 1).unwrap();
        assert!(!cell_dimension(&ideal(&[2]), flat).generic);
    }

    #[test]
    fn poincare() {
        let h1 = poincare_polynomial(1, WeightVector2::new(1, 2).unwrap()).unwrap();
        assert_eq!(h1, vec![(2, 1)]);
        let h2 = poincare_polynomial(2, WeightVector2::new(1, 3).unwrap()).unwrap();
        assert_eq!(h2, vec![(3, 1), (4, 1)]);
        let h3 = poincare_polynomial(3, WeightVector2::default_generic(3)).unwrap();
        assert_eq!(h3.iter().find(|(d, _)| *d == 6), Some(&(6, 1)));
        assert_eq!(h3.iter().map(|(_, c)| c).sum::<usize>(), 3);
        assert!(matches!(
            poincare_polynomial(2, WeightVector2::new(1, 1).unwrap()),
            Err(HilbError::NonGenericWeight { .. })
        ));
        assert_eq!(WeightVector2::new(0, 0), Err(HilbError::ZeroWeight));
    }

    #[test]
    fn character_serialization() {
        let c = tangent_character_armleg(&ideal(&[2]));
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[-1,1,1],[0,1,1],[1,0,1],[2,0,1]]");
    }
}
