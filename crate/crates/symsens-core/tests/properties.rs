//! Property tests pinning the structural invariants: round trips between
//! representations, the two symmetries that preserve sensitivity, agreement
//! between the O(n) profile and the brute-force oracle, and the defining
//! product identity of series expansion.

use proptest::collection::vec as pvec;
use proptest::prelude::*;

use symsens_core::counting::RationalGf;
use symsens_core::symmetric::{compress, CompactTruthTable, CompressOutcome};
use symsens_core::BigInt;

fn compact_table(max_n: usize) -> impl Strategy<Value = CompactTruthTable> {
    (1..=max_n).prop_flat_map(|n| {
        pvec(any::<bool>(), n + 1)
            .prop_map(|values| CompactTruthTable::from_values(&values).unwrap())
    })
}

proptest! {
    #[test]
    fn compress_inverts_expand(c in compact_table(12)) {
        let expanded = c.expand().unwrap();
        prop_assert_eq!(compress(&expanded), CompressOutcome::Symmetric(c));
    }

    #[test]
    fn composition_with_first_value_rebuilds_table(c in compact_table(64)) {
        let comp = c.to_composition();
        prop_assert_eq!(comp.total(), c.n() + 1);
        let rebuilt = CompactTruthTable::from_composition(&comp, c.value_at(0)).unwrap();
        prop_assert_eq!(rebuilt, c);
    }

    #[test]
    fn complement_preserves_composition_and_profile(c in compact_table(64)) {
        let complement = c.complement();
        prop_assert_eq!(complement.to_composition(), c.to_composition());
        prop_assert_eq!(complement.sensitivity_profile(), c.sensitivity_profile());
    }

    #[test]
    fn reversal_reverses_composition_and_profile(c in compact_table(64)) {
        let reversed = c.reversed();
        prop_assert_eq!(reversed.to_composition(), c.to_composition().reversed());
        let forward = c.sensitivity_profile();
        let backward = reversed.sensitivity_profile();
        let mut per_weight: Vec<usize> = forward.per_weight().to_vec();
        per_weight.reverse();
        prop_assert_eq!(backward.per_weight(), per_weight.as_slice());
        prop_assert_eq!(backward.max(), forward.max());
    }

    #[test]
    fn profile_max_matches_brute_force(c in compact_table(10)) {
        prop_assert_eq!(c.sensitivity_profile().max(), c.expand().unwrap().sensitivity());
    }

    #[test]
    fn per_weight_matches_brute_force_at_every_input(c in compact_table(8)) {
        let profile = c.sensitivity_profile();
        let table = c.expand().unwrap();
        for x in 0..table.len() {
            let weight = x.count_ones() as usize;
            prop_assert_eq!(
                table.sensitivity_at(x).unwrap(),
                profile.per_weight()[weight],
                "input {:b}", x
            );
        }
    }

    #[test]
    fn unit_part_criterion_matches_profile(c in compact_table(300)) {
        prop_assert_eq!(
            c.has_max_sensitivity(),
            c.sensitivity_profile().max() == c.n()
        );
    }

    #[test]
    fn brute_complement_pointwise_invariant(c in compact_table(8)) {
        let table = c.expand().unwrap();
        let complement = table.complement();
        for x in 0..table.len() {
            prop_assert_eq!(
                table.sensitivity_at(x).unwrap(),
                complement.sensitivity_at(x).unwrap()
            );
        }
    }

    #[test]
    fn series_times_denominator_is_numerator(
        numer in pvec(-6i64..=6, 0..5),
        denom_tail in pvec(-6i64..=6, 0..4),
        unit in any::<bool>(),
    ) {
        let mut denom = vec![if unit { 1i64 } else { -1 }];
        denom.extend(denom_tail);
        let gf = RationalGf::from_i64(&numer, &denom).unwrap();
        let k = 24;
        let series = gf.expand_series(k).unwrap();
        // convolve back with the denominator
        for j in 0..k {
            let mut acc = BigInt::from(0);
            for (i, q) in gf.denom().iter().enumerate() {
                if i <= j {
                    acc += q * &series[j - i];
                }
            }
            let expected = gf.numer().get(j).cloned().unwrap_or_else(|| BigInt::from(0));
            prop_assert_eq!(acc, expected, "coefficient {}", j);
        }
    }
}
