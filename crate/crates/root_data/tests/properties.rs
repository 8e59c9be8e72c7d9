use proptest::prelude::*;
use root_data::a2::{self, WeightA2};
use root_data::*;

#[test]
fn reflections_are_involutions() {
    for l in [3u32, 5, 7] {
        for r in -3..=6 {
            let s = AffineReflectionA1 { r };
            for lambda in -1..=4 * l as i64 {
                assert_eq!(s.apply(s.apply(lambda, l), l), lambda);
            }
        }
    }
}

#[test]
fn linkage_is_symmetric() {
    for l in [3u32, 5, 7] {
        for lambda in 0..=20 {
            let class = linkage_class(lambda, l, 20);
            assert!(class.contains(&lambda));
            for mu in 0..=20 {
                let forward = class.contains(&mu);
                let backward = linkage_class(mu, l, 20).contains(&lambda);
                assert_eq!(forward, backward, "l={l} lambda={lambda} mu={mu}");
                assert_eq!(forward, linked(lambda, mu, Some(l)));
            }
        }
    }
}

#[test]
fn linkage_matches_brute_force_orbit() {
    // Apply random words in the generating reflections and collect what lands in range.
    for l in [3u32, 5] {
        for lambda in 0..=15i64 {
            let mut orbit = std::collections::BTreeSet::from([lambda]);
            let mut frontier = vec![lambda];
            for _ in 0..12 {
                let mut next = Vec::new();
                for x in frontier {
                    for r in -4..=8 {
                        let y = AffineReflectionA1 { r }.apply(x, l);
                        if (-60..=60).contains(&y) && orbit.insert(y) {
                            next.push(y);
                        }
                    }
                }
                frontier = next;
            }
            let expected: Vec<i64> = orbit.into_iter().filter(|&x| (0..=15).contains(&x)).collect();
            assert_eq!(linkage_class(lambda, l, 15), expected);
        }
    }
}

proptest! {
    #[test]
    fn dominant_weights_are_singular_or_in_one_alcove(lambda in 0i64..200, li in 0usize..3) {
        let l = [3u32, 5, 7][li];
        let on_wall = (0..=lambda / l as i64 + 1).any(|r| AffineReflectionA1 { r }.wall(l) == lambda);
        prop_assert_eq!(is_singular(lambda, l), on_wall);
        if !is_singular(lambda, l) {
            let a = alcove_index(lambda, l);
            let lo = a * l as i64 - 1;
            let hi = (a + 1) * l as i64 - 1;
            prop_assert!(lo < lambda && lambda < hi);
            prop_assert_eq!(in_fundamental_alcove(lambda, l), a == 0);
        }
    }

    #[test]
    fn a2_dominance_is_a_partial_order(a in -6i64..6, b in -6i64..6, c in -6i64..6, d in -6i64..6) {
        let x = WeightA2::new(a, b);
        let y = WeightA2::new(c, d);
        prop_assert!(a2::dominance_le(x, x));
        if a2::dominance_le(x, y) && a2::dominance_le(y, x) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn a2_closed_alcove_partition() {
    use a2::AlcovePosition::*;
    let interior: Vec<_> = (-2..4)
        .flat_map(|a| (-2..4).map(move |b| WeightA2::new(a, b)))
        .filter(|w| a2::alcove_position(*w, 3) == Interior)
        .collect();
    assert_eq!(interior, vec![WeightA2::new(0, 0)]);
    let affine = a2::wall_set(3, AffineWall);
    let nonaffine = a2::wall_set(3, NonAffineWall);
    assert!(affine.is_disjoint(&nonaffine));
    assert_eq!(affine.len() + nonaffine.len() + interior.len(), 10);
}

#[test]
fn a2_report_passes() {
    let report = a2::a2_fixture_checks();
    assert!(report.all_pass(), "{:#?}", report.checks);
}
