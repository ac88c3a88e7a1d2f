use bbcells::hilb::*;
use proptest::prelude::*;

/// Partitions as all multisets of positive parts, generated by brute force over
/// compositions and deduplicated after sorting.
fn brute_partition_count(d: usize) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..(1 << d.saturating_sub(1)) {
        let mut parts = vec![];
        let mut run = 1;
        for i in 0..d.saturating_sub(1) {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        if d > 0 {
            parts.push(run);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(parts);
    }
    seen.len()
}

#[test]
fn partition_counts() {
    let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (d, &count) in expected.iter().enumerate() {
        assert_eq!(brute_partition_count(d), count);
        assert_eq!(partitions(d).len(), count);
        assert_eq!(partition_count(d), count.into());
        let mut ps = partitions(d);
        ps.dedup();
        assert_eq!(ps.len(), count);
        assert!(ps.iter().all(|p| p.size() == d));
    }
}

#[test]
fn tangent_characters_agree_and_are_well_formed() {
    for d in 1..=8 {
        for p in partitions(d) {
            let ideal = MonomialIdealPlane::from_partition(&p);
            let lin = tangent_character_linalg(&ideal);
            assert_eq!(lin, tangent_character_armleg(&ideal), "partition {p}");
            assert_eq!(lin.total(), 2 * d);
            assert_eq!(lin.multiplicity((0, 0)), 0);
            let t = MonomialIdealPlane::from_partition(&p.transpose());
            assert_eq!(tangent_character_linalg(&t), lin.swapped());
        }
    }
}

#[test]
fn unique_open_cell_for_default_weight() {
    for d in 1..=8 {
        let w = WeightVector2::default_generic(d);
        let cells = cells(d, w);
        assert!(cells.iter().all(|(_, c)| c.generic));
        assert_eq!(cells.iter().filter(|(_, c)| c.dimension == 2 * d).count(), 1);
        let histogram = poincare_polynomial(d, w).unwrap();
        assert_eq!(histogram.iter().map(|(_, n)| n).sum::<usize>(), partitions(d).len());
        assert_eq!(histogram.last(), Some(&(2 * d, 1)));
    }
}

#[test]
fn spot_values() {
    let two = MonomialIdealPlane::from_partition(&Partition::new(vec![2]).unwrap());
    let w1 = WeightVector2::new(1, 3).unwrap();
    let w2 = WeightVector2::new(3, 1).unwrap();
    assert_eq!(intersection_dimension(&two, w1, w2), 3);
    assert_eq!(cell_dimension(&two, w1).dimension, 4);
    assert_eq!(poincare_polynomial(2, w1).unwrap(), vec![(3, 1), (4, 1)]);
}

fn weight() -> impl Strategy<Value = WeightVector2> {
    (-9i64..=9, -9i64..=9)
        .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
        .prop_map(|(a, b)| WeightVector2::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersections_are_bounded_by_cells(d in 1usize..=6, w1 in weight(), w2 in weight()) {
        for p in partitions(d) {
            let ideal = MonomialIdealPlane::from_partition(&p);
            let both = intersection_dimension(&ideal, w1, w2);
            let c1 = cell_dimension(&ideal, w1).dimension;
            let c2 = cell_dimension(&ideal, w2).dimension;
            prop_assert!(both <= c1.min(c2));
            prop_assert_eq!(intersection_dimension(&ideal, w1, w1), c1);
            let (a, b) = w1.components();
            let swapped = MonomialIdealPlane::from_partition(&p.transpose());
            prop_assert_eq!(cell_dimension(&swapped, WeightVector2::new(b, a).unwrap()).dimension, c1);
        }
    }
}
