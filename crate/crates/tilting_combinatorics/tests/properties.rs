use std::collections::BTreeMap;

use proptest::prelude::*;
use root_data::linkage_class;
use tilting_combinatorics::*;

const CONTEXTS: [Option<u32>; 4] = [Some(3), Some(5), Some(7), None];

proptest! {
    #[test]
    fn synthesize_then_decompose_round_trips(
        entries in proptest::collection::btree_map(0i64..=12, 1u64..4, 0..6),
        li in 0usize..3,
    ) {
        let l = Some([3u32, 5, 7][li]);
        let ms = TiltingMultiset { entries };
        let ch = ms.character(l);
        prop_assert_eq!(decompose_tilting(&ch, l).unwrap(), ms);
    }
}

#[test]
fn generic_round_trip() {
    let ms = TiltingMultiset::from_pairs(&[(0, 2), (5, 1), (7, 3)]);
    assert_eq!(decompose_tilting(&ms.character(None), None).unwrap(), ms);
}

#[test]
fn end_dimension_of_tensor_powers_is_catalan() {
    for d in 1..=10 {
        let ch = tensor_power_character(d);
        for l in CONTEXTS {
            let ms = decompose_tilting(&ch, l).unwrap();
            let from_multiset: u64 = ms.weyl_multiplicities(l).values().map(|m| m * m).sum();
            assert_eq!(from_multiset, catalan(d), "d={d} l={l:?}");
            assert_eq!(end_dimension(&ch).unwrap(), catalan(d));
        }
    }
}

#[test]
fn multiplicities_vanish_off_linkage() {
    for l in [3u32, 5, 7] {
        for lambda in 0..=30 {
            let class = linkage_class(lambda, l, lambda);
            for mu in 0..=lambda {
                if !class.contains(&mu) {
                    assert_eq!(tilting_weyl_mult(lambda, mu, Some(l)), 0);
                }
            }
        }
    }
}

#[test]
fn alternating_formula_matches_peeling_at_l3() {
    for d in 1..=8 {
        let ms = decompose_tilting(&tensor_power_character(d), Some(3)).unwrap();
        for (&k, &m) in &ms.entries {
            assert_eq!(simple_dimension_alternating(d, k, 3), m as i64, "d={d} k={k}");
        }
    }
}

#[test]
fn tilting_characters_have_unique_top() {
    for l in CONTEXTS {
        for lambda in 0..25 {
            let ch = tilting_character(lambda, l);
            assert_eq!(ch.max_weight(), Some(lambda));
            assert_eq!(ch.coeff(lambda), 1);
            assert!(ch.is_symmetric());
        }
    }
}

#[test]
fn tensor_of_tiltings_decomposes() {
    let ch = tilting_tensor_character(&[3, 1], Some(3));
    let ms = decompose_tilting(&ch, Some(3)).unwrap();
    assert_eq!(ms.character(Some(3)), ch);
    let dims: BTreeMap<i64, u64> = ms.entries.clone();
    assert!(dims.contains_key(&4));
}
