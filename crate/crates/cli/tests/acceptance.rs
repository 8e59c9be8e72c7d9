//! One pass/fail line per acceptance criterion. Run with
//! `cargo test -p cli --test acceptance -- --nocapture` to see the report.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cellular_engine::cellmod::semisimplicity_report;
use cellular_engine::verify::verify_cell_axioms_with;
use cellular_engine::{
    assign_degrees, certify_basis_rank, simple_dimensions, tensor_power_datum, tilting_datum, verify_cell_axioms,
    BasisChoice,
};
use cli::{decompose, Target};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_arith::linalg::rank;
use scalar_arith::{Mat, ScalarContext};
use temperley_lieb::jw::sign_vectors;
use temperley_lieb::{
    generalized_jw, jones_wenzl, pullback_cell_datum, rescale_to_idempotents, tl_semisimplicity, SchurWeyl, TLElement,
    TlError,
};
use tilting_combinatorics::{
    catalan, decompose_tilting, end_dimension, simple_dimension_alternating, tensor_power_character,
};
use uq_modules::TiltingCache;

type Outcome = Result<(), String>;
type Case = (ScalarContext, u32, &'static [(i64, u64)]);
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyc(l: u32) -> ScalarContext {
    ScalarContext::cyclotomic(l).unwrap()
}

fn contexts() -> Vec<ScalarContext> {
    vec![ScalarContext::Generic, cyc(3), cyc(5), cyc(7)]
}

fn criterion_1() -> Outcome {
    let cases: [Case; 5] = [
        (cyc(3), 3, &[(3, 1), (1, 1)]),
        (ScalarContext::Generic, 3, &[(3, 1), (1, 2)]),
        (cyc(5), 3, &[(3, 1), (1, 2)]),
        (cyc(3), 4, &[(4, 1), (0, 1), (2, 3)]),
        (ScalarContext::Generic, 2, &[(2, 1), (0, 1)]),
    ];
    for (ctx, d, expected) in cases {
        let start = Instant::now();
        let cache = TiltingCache::new(ctx.clone());
        let m = decompose(
            &Target {
                power: Some(d),
                tensor: None,
            },
            &cache,
        )
        .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let expected: std::collections::BTreeMap<i64, u64> = expected.iter().copied().collect();
        ensure(m.entries == expected, || format!("V^{d} over {ctx}: {:?}", m.entries))?;
        ensure(elapsed < Duration::from_secs(1), || {
            format!("V^{d} over {ctx} took {elapsed:?}")
        })?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for ctx in contexts() {
        let start = Instant::now();
        let cache = TiltingCache::new(ctx.clone());
        for d in 1..=8u32 {
            let ch = tensor_power_character(d);
            let by_formula = end_dimension(&ch).map_err(|e| e.to_string())?;
            ensure(by_formula == catalan(d), || {
                format!("formula d={d} {ctx}: {by_formula}")
            })?;
            let cd = tensor_power_datum(d, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            let cert = certify_basis_rank(&cd, 0);
            ensure(cd.len() as u64 == catalan(d) && cert.rank as u64 == catalan(d), || {
                format!("rank d={d} {ctx}: {} elements, rank {}", cd.len(), cert.rank)
            })?;
            let _ = decompose_tilting(&ch, ctx.order()).map_err(|e| e.to_string())?;
        }
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(60), || format!("{ctx} took {elapsed:?}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let cd = tilting_datum(3, &TiltingCache::new(cyc(3)), BasisChoice::Echelon).map_err(|e| e.to_string())?;
    ensure(cd.len() == 2, || format!("dimension {}", cd.len()))?;
    let c3 = cd.element(3, 0, 0).map_err(|e| e.to_string())?;
    let c1 = cd.element(1, 0, 0).map_err(|e| e.to_string())?;
    ensure(c3.mul(&c3) == c3, || "c3 c3 != c3".into())?;
    ensure(c1.mul(&c3) == c1, || "c1 c3 != c1".into())?;
    ensure(c3.mul(&c1) == c1, || "c3 c1 != c1".into())?;
    ensure(c1.mul(&c1).is_zero(), || "c1 c1 != 0".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for ctx in [ScalarContext::Generic, cyc(3), cyc(5)] {
        let cache = TiltingCache::new(ctx.clone());
        for d in 1..=5u32 {
            let cd = tensor_power_datum(d, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            let report = verify_cell_axioms(&cd);
            ensure(report.pass(), || format!("d={d} {ctx}: {:?}", report.witnesses))?;
            // random integer combinations of the basis also generate
            let basis = cd.elements();
            let n = basis[0].nrows();
            let mut generators = Vec::new();
            for _ in 0..4 {
                let mut x = Mat::zeros(n, n);
                for b in &basis {
                    x = x.axpy(&ctx.int(rng.gen_range(-3..=3)), b);
                }
                generators.push(x);
            }
            let report = verify_cell_axioms_with(&cd, &generators);
            ensure(report.involution_ok && report.expansion_ok, || {
                format!("random generators d={d} {ctx}: {:?}", report.witnesses)
            })?;
        }
    }
    Ok(())
}

fn simple_table(ctx: ScalarContext, d: u32) -> Result<Vec<(u32, usize)>, String> {
    let cd = tensor_power_datum(d, &TiltingCache::new(ctx), BasisChoice::Echelon).map_err(|e| e.to_string())?;
    Ok(simple_dimensions(&cd)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|s| (s.lambda, s.gram_rank))
        .collect())
}

fn criterion_5() -> Outcome {
    let g = simple_table(ScalarContext::Generic, 3)?;
    ensure(g == vec![(3, 1), (1, 2)], || format!("generic d=3: {g:?}"))?;
    let r = simple_table(cyc(3), 3)?;
    ensure(r == vec![(3, 1), (1, 1)], || format!("l=3 d=3: {r:?}"))?;
    for l in [3u32, 5] {
        let cache = TiltingCache::new(cyc(l));
        for d in 1..=6u32 {
            let cd = tensor_power_datum(d, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            for s in simple_dimensions(&cd).map_err(|e| e.to_string())? {
                ensure(s.consistent(), || format!("l={l} d={d}: {s:?}"))?;
            }
        }
    }
    let cache = TiltingCache::new(cyc(3));
    for d in 1..=8u32 {
        let cd = tensor_power_datum(d, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
        for s in simple_dimensions(&cd).map_err(|e| e.to_string())? {
            let alt = simple_dimension_alternating(d, s.lambda as i64, 3);
            ensure(alt == s.gram_rank as i64, || {
                format!("alternating d={d}: {s:?} vs {alt}")
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for l in [3u32, 5] {
        let ctx = cyc(l);
        let cache = TiltingCache::new(ctx.clone());
        for d in 1..=6u32 {
            let cd = tensor_power_datum(d, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            let r = semisimplicity_report(&cd).map_err(|e| e.to_string())?;
            let expected = d < l;
            ensure(r.module_side == expected && r.gram_side == expected, || {
                format!("l={l} d={d}: {r:?}")
            })?;
            ensure(tl_semisimplicity(d as usize, &ctx) == expected, || {
                format!("diagram side l={l} d={d}")
            })?;
        }
    }
    Ok(())
}

fn word(ctx: &ScalarContext, d: usize, w: &[usize]) -> TLElement {
    w.iter().fold(TLElement::identity(ctx, d), |acc, &i| {
        acc.compose(&TLElement::u(ctx, d, i).unwrap()).unwrap()
    })
}

fn criterion_7() -> Outcome {
    let ctx = ScalarContext::Generic;
    let (q2, q3) = (ctx.qint(2), ctx.qint(3));
    let jw2 = word(&ctx, 2, &[])
        .axpy(&q2.inv().unwrap().neg_ref(), &word(&ctx, 2, &[1]))
        .unwrap();
    ensure(jones_wenzl(2, &ctx).unwrap() == jw2, || "JW_2 expansion".into())?;
    let a = q2.div_nonzero(&q3).neg_ref();
    let b = q3.inv().unwrap();
    let jw3 = [
        (a.clone(), vec![1]),
        (a, vec![2]),
        (b.clone(), vec![1, 2]),
        (b, vec![2, 1]),
    ]
    .iter()
    .fold(word(&ctx, 3, &[]), |acc, (c, w)| {
        acc.axpy(c, &word(&ctx, 3, w)).unwrap()
    });
    ensure(jones_wenzl(3, &ctx).unwrap() == jw3, || "JW_3 expansion".into())?;
    for d in 1..=6usize {
        let jw = jones_wenzl(d, &ctx).unwrap();
        ensure(jw.compose(&jw).unwrap() == jw, || format!("JW_{d} not idempotent"))?;
        for i in 1..d {
            let u = TLElement::u(&ctx, d, i).unwrap();
            ensure(
                u.compose(&jw).unwrap().is_zero() && jw.compose(&u).unwrap().is_zero(),
                || format!("U_{i} does not kill JW_{d}"),
            )?;
        }
    }
    for l in [3u32, 5, 7] {
        let ctx = cyc(l);
        for d in 1..=8usize {
            let vanishing = (2..=d).any(|k| ctx.qint(k as i64).is_zero());
            let pole = matches!(jones_wenzl(d, &ctx), Err(TlError::CoefficientPole { .. }));
            ensure(pole == vanishing, || {
                format!("l={l} d={d}: pole {pole}, vanishing {vanishing}")
            })?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let semisimple = [(ScalarContext::Generic, 5usize), (cyc(5), 4), (cyc(7), 5)];
    for (ctx, max_d) in semisimple {
        for d in 1..=max_d {
            let eps = sign_vectors(d);
            let family: Vec<_> = eps.iter().map(|e| generalized_jw(e, &ctx).unwrap()).collect();
            let idems = rescale_to_idempotents(&family).map_err(|e| format!("d={d} {ctx}: {e}"))?;
            let sw = SchurWeyl::new(d, &ctx);
            for (e, x) in eps.iter().zip(&idems) {
                let top: i64 = e.iter().map(|&s| s as i64).sum();
                let r = rank(&sw.image(x));
                ensure(r as i64 == top + 1, || format!("d={d} {ctx} eps={e:?}: image rank {r}"))?;
            }
        }
    }
    let ctx = ScalarContext::Generic;
    ensure(generalized_jw(&[1, -1], &ctx).unwrap() == word(&ctx, 2, &[1]), || {
        "JW_(+1,-1)".into()
    })?;
    let inv2 = ctx.qint(2).inv().unwrap();
    let four = [
        (ctx.one(), vec![2]),
        (inv2.neg_ref(), vec![1, 2]),
        (inv2.neg_ref(), vec![2, 1]),
        (inv2.pow(2), vec![1]),
    ]
    .iter()
    .fold(TLElement::zero(&ctx, 3, 3), |acc, (c, w)| {
        acc.axpy(c, &word(&ctx, 3, w)).unwrap()
    });
    ensure(generalized_jw(&[1, 1, -1], &ctx).unwrap() == four, || {
        "JW_(+1,+1,-1)".into()
    })
}

fn criterion_9() -> Outcome {
    let mut all = contexts();
    all.push(ScalarContext::rational(num_rational::BigRational::from_integer(2.into())).unwrap());
    for ctx in &all {
        for d in 1..=6usize {
            let r = SchurWeyl::new(d, ctx).rank();
            ensure(r as u64 == catalan(d as u32), || {
                format!("rank of the map d={d} {ctx}: {r}")
            })?;
        }
    }
    for (ctx, max_d) in [(ScalarContext::Generic, 6usize), (cyc(7), 6), (cyc(5), 4)] {
        let cache = TiltingCache::new(ctx.clone());
        for d in 1..=max_d {
            let cd = tensor_power_datum(d as u32, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            let top = cd.element(d as u32, 0, 0).map_err(|e| e.to_string())?;
            let image = SchurWeyl::new(d, &ctx).image(&jones_wenzl(d, &ctx).unwrap());
            let (r, c, x) = top.triples().next().map(|(r, c, x)| (r, c, x.clone())).unwrap();
            let ratio = image.entry(r, c, &ctx.zero()).div_nonzero(&x);
            ensure(top.scale(&ratio) == image, || {
                format!("JW_{d} over {ctx} is not a multiple of the top element")
            })?;
        }
    }
    let ctx = cyc(3);
    let cache = TiltingCache::new(ctx.clone());
    let cd = tensor_power_datum(3, &cache, BasisChoice::SummandAdapted).map_err(|e| e.to_string())?;
    let degrees = assign_degrees(&cd, &cache).map_err(|e| e.to_string())?;
    let pb = pullback_cell_datum(&cd, &SchurWeyl::new(3, &ctx)).map_err(|e| e.to_string())?;
    let mut degs: Vec<i64> = pb.labels.iter().map(|l| degrees.element(l)).collect();
    degs.sort();
    ensure(degs == vec![0, 0, 1, 1, 2], || format!("degrees {degs:?}"))?;
    for ctx in [ScalarContext::Generic, cyc(3), cyc(5)] {
        let cache = TiltingCache::new(ctx.clone());
        for d in 2..=5usize {
            let cd = tensor_power_datum(d as u32, &cache, BasisChoice::Echelon).map_err(|e| e.to_string())?;
            let pb = pullback_cell_datum(&cd, &SchurWeyl::new(d, &ctx)).map_err(|e| e.to_string())?;
            ensure(!pb.contains_identity(), || {
                format!("identity in the pulled back basis d={d} {ctx}")
            })?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let report = root_data::a2::a2_fixture_checks();
    let failed: Vec<_> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.clone())
        .collect();
    ensure(failed.is_empty(), || format!("{failed:?}"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("tilting decompositions of tensor powers", criterion_1),
        ("dim End(V^d) = Catalan(d), d <= 8", criterion_2),
        ("multiplication table of End(T(3)) at l = 3", criterion_3),
        ("cell datum axioms, d <= 5", criterion_4),
        ("simple dimensions and Gram ranks", criterion_5),
        ("semisimplicity iff d < l", criterion_6),
        ("Jones-Wenzl projectors", criterion_7),
        ("generalized Jones-Wenzl projectors", criterion_8),
        ("Schur-Weyl transport", criterion_9),
        ("sl3 alcove and KL fixtures at l = 3", criterion_10),
    ];
    let mut failures = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:2}: PASS  {name} ({secs:.1}s)", k + 1),
            Err(e) => {
                println!("criterion {:2}: FAIL  {name} ({secs:.1}s): {e}", k + 1);
                failures.push(k + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
