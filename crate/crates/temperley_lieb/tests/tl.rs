use cellular_engine::cellmod::semisimplicity_report;
use cellular_engine::{assign_degrees, cell_module, tensor_power_datum, verify_cell_axioms, BasisChoice};
use proptest::prelude::*;
use scalar_arith::linalg::rank;
use scalar_arith::{Mat, Scalar, ScalarContext};
use temperley_lieb::gl::standard_tableaux;
use temperley_lieb::jw::sign_vectors;
use temperley_lieb::schur_weyl::{cap_matrix, cup_matrix, u_matrix, SchurWeyl};
use temperley_lieb::*;
use tilting_combinatorics::catalan;
use uq_modules::{is_module_map, natural_module, tensor, weyl_module, TiltingCache};

fn all_contexts() -> Vec<ScalarContext> {
    vec![
        ScalarContext::Generic,
        ScalarContext::cyclotomic(3).unwrap(),
        ScalarContext::cyclotomic(5).unwrap(),
    ]
}

fn u(ctx: &ScalarContext, d: usize, i: usize) -> TLElement {
    TLElement::u(ctx, d, i).unwrap()
}

fn word(ctx: &ScalarContext, d: usize, w: &[usize]) -> TLElement {
    w.iter().fold(TLElement::identity(ctx, d), |acc, &i| {
        acc.compose(&u(ctx, d, i)).unwrap()
    })
}

fn lin(ctx: &ScalarContext, d: usize, terms: &[(Scalar, TLElement)]) -> TLElement {
    terms
        .iter()
        .fold(TLElement::zero(ctx, d, d), |acc, (c, x)| acc.axpy(c, x).unwrap())
}

#[test]
fn basis_sizes() {
    assert_eq!(tl_basis(1).len(), 1);
    assert_eq!(tl_basis(3).len(), 5);
    assert_eq!(tl_basis(4).len(), 14);
    for d in 1..=8 {
        assert_eq!(tl_basis(d).len() as u64, catalan(d as u32));
    }
}

#[test]
fn tl_relations_follow_from_composition() {
    let ctx = ScalarContext::Generic;
    let delta = TLElement::delta(&ctx);
    for d in 2..=6 {
        for i in 1..d {
            let ui = u(&ctx, d, i);
            assert_eq!(ui.compose(&ui).unwrap(), ui.scale(&delta));
            if i + 1 < d {
                let uj = u(&ctx, d, i + 1);
                assert_eq!(ui.compose(&uj).unwrap().compose(&ui).unwrap(), ui);
                assert_eq!(uj.compose(&ui).unwrap().compose(&uj).unwrap(), uj);
            }
            for j in i + 2..d {
                let uj = u(&ctx, d, j);
                assert_eq!(ui.compose(&uj).unwrap(), uj.compose(&ui).unwrap());
            }
        }
    }
}

#[test]
fn stacking_example() {
    let (p, loops) = Tangle::u(3, 2).unwrap().compose(&Tangle::u(3, 1).unwrap()).unwrap();
    assert_eq!(loops, 0);
    assert_eq!(p, Tangle::new(3, 3, [(0, 1), (2, 3), (4, 5)]).unwrap());
    assert_eq!(p.to_text(), "3; (1,2) (3,4) (5,6)");
    let id = TLElement::identity(&ScalarContext::Generic, 3);
    let x = u(&ScalarContext::Generic, 3, 2);
    assert_eq!(id.compose(&x).unwrap(), x);
    assert!(matches!(
        TLElement::identity(&ScalarContext::Generic, 2).compose(&x),
        Err(TlError::StrandMismatch { .. })
    ));
}

#[test]
fn jw2_and_jw3_expansions() {
    let ctx = ScalarContext::Generic;
    let q = |a: i64| ctx.qint(a);
    let one = ctx.one();
    let jw2 = jones_wenzl(2, &ctx).unwrap();
    let expected2 = lin(
        &ctx,
        2,
        &[
            (one.clone(), TLElement::identity(&ctx, 2)),
            (q(2).inv().unwrap().neg_ref(), u(&ctx, 2, 1)),
        ],
    );
    assert_eq!(jw2, expected2);
    let jw3 = jones_wenzl(3, &ctx).unwrap();
    let a = q(2).div_nonzero(&q(3)).neg_ref();
    let b = q(3).inv().unwrap();
    let expected3 = lin(
        &ctx,
        3,
        &[
            (one.clone(), TLElement::identity(&ctx, 3)),
            (a.clone(), u(&ctx, 3, 1)),
            (a, u(&ctx, 3, 2)),
            (b.clone(), word(&ctx, 3, &[1, 2])),
            (b, word(&ctx, 3, &[2, 1])),
        ],
    );
    assert_eq!(jw3, expected3);
    assert_eq!(jones_wenzl(1, &ctx).unwrap(), TLElement::identity(&ctx, 1));
}

#[test]
fn jw_is_an_idempotent_killed_by_caps() {
    let ctx = ScalarContext::Generic;
    for d in 1..=6 {
        let jw = jones_wenzl(d, &ctx).unwrap();
        assert_eq!(jw.compose(&jw).unwrap(), jw, "d={d}");
        for i in 1..d {
            assert!(u(&ctx, d, i).compose(&jw).unwrap().is_zero());
            assert!(jw.compose(&u(&ctx, d, i)).unwrap().is_zero());
        }
    }
}

#[test]
fn jw_pole_exactly_when_a_quantum_integer_vanishes() {
    for l in [3u32, 5, 7] {
        let ctx = ScalarContext::cyclotomic(l).unwrap();
        for d in 1..=8usize {
            let vanishing = (2..=d).find(|&k| ctx.qint(k as i64).is_zero());
            match (jones_wenzl(d, &ctx), vanishing) {
                (Err(TlError::CoefficientPole { k }), Some(k0)) => assert_eq!(k, k0),
                (Ok(jw), None) => assert_eq!(jw.compose(&jw).unwrap(), jw),
                (r, v) => panic!("l={l} d={d}: {r:?} with vanishing {v:?}"),
            }
        }
    }
}

#[test]
fn generalized_jw_examples() {
    let ctx = ScalarContext::Generic;
    let q2 = ctx.qint(2);
    let inv2 = q2.inv().unwrap();
    assert_eq!(generalized_jw(&[1, -1], &ctx).unwrap(), u(&ctx, 2, 1));
    assert_eq!(generalized_jw(&[1, -1, 1], &ctx).unwrap(), u(&ctx, 3, 1));
    let expected = lin(
        &ctx,
        3,
        &[
            (ctx.one(), u(&ctx, 3, 2)),
            (inv2.neg_ref(), word(&ctx, 3, &[1, 2])),
            (inv2.neg_ref(), word(&ctx, 3, &[2, 1])),
            (inv2.pow(2), u(&ctx, 3, 1)),
        ],
    );
    assert_eq!(generalized_jw(&[1, 1, -1], &ctx).unwrap(), expected);
    assert_eq!(generalized_jw(&[1, 1, 1], &ctx).unwrap(), jones_wenzl(3, &ctx).unwrap());
    assert_eq!(generalized_jw(&[1], &ctx).unwrap(), TLElement::identity(&ctx, 1));
    assert!(generalized_jw(&[1, -1, -1], &ctx).is_err());
}

#[test]
fn rescaled_projectors_are_complete_orthogonal_primitive() {
    let ctxs = [
        ScalarContext::Generic,
        ScalarContext::cyclotomic(7).unwrap(),
        ScalarContext::cyclotomic(5).unwrap(),
    ];
    for ctx in &ctxs {
        for d in 1..=5usize {
            if !tl_semisimplicity(d, ctx) {
                continue;
            }
            let eps = sign_vectors(d);
            let family: Vec<_> = eps.iter().map(|e| generalized_jw(e, ctx).unwrap()).collect();
            let idems = rescale_to_idempotents(&family).unwrap();
            let sw = SchurWeyl::new(d, ctx);
            for (e, x) in eps.iter().zip(&idems) {
                assert_eq!(&x.compose(x).unwrap(), x);
                let weight: i64 = e.iter().map(|&s| s as i64).sum();
                assert_eq!(rank(&sw.image(x)) as i64, weight + 1, "d={d} eps={e:?}");
            }
        }
    }
    let ctx = ScalarContext::Generic;
    let idems = rescale_to_idempotents(
        &sign_vectors(3)
            .iter()
            .map(|e| generalized_jw(e, &ctx).unwrap())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let sw = SchurWeyl::new(3, &ctx);
    let mut ranks: Vec<usize> = idems.iter().map(|x| rank(&sw.image(x))).collect();
    ranks.sort();
    assert_eq!(ranks, vec![2, 2, 4]);
}

#[test]
fn cap_and_cup_are_intertwiners() {
    for ctx in all_contexts() {
        let v = natural_module(&ctx);
        let vv = tensor(&v, &v).unwrap();
        let triv = weyl_module(0, &ctx);
        assert!(is_module_map(&cap_matrix(&ctx), &vv, &triv));
        assert!(is_module_map(&cup_matrix(&ctx), &triv, &vv));
        let circle = cap_matrix(&ctx).mul(&cup_matrix(&ctx));
        assert_eq!(circle.entry(0, 0, &ctx.zero()), ctx.qint(2));
    }
}

#[test]
fn cap_cup_constants_solve_the_constraint_system() {
    // search cap = (0, b, a, 0), cup = (0, e, c, 0)^T over small monomials
    let ctx = ScalarContext::Generic;
    let v = natural_module(&ctx);
    let vv = tensor(&v, &v).unwrap();
    let triv = weyl_module(0, &ctx);
    let one = ctx.one();
    let monomials: Vec<Scalar> = [0i64, 1, -1]
        .iter()
        .flat_map(|&k| [ctx.v_pow(k), ctx.v_pow(k).neg_ref()])
        .collect();
    let mut solutions = Vec::new();
    for a in &monomials {
        for b in &monomials {
            let cap = Mat::from_triples(1, 4, [(0, 1, b.clone()), (0, 2, a.clone())]);
            if !is_module_map(&cap, &vv, &triv) {
                continue;
            }
            for c in &monomials {
                for e in &monomials {
                    let cup = Mat::from_triples(4, 1, [(1, 0, e.clone()), (2, 0, c.clone())]);
                    if !is_module_map(&cup, &triv, &vv) || cap.mul(&cup).entry(0, 0, &ctx.zero()) != ctx.qint(2) {
                        continue;
                    }
                    let uu = cup.mul(&cap);
                    let u1 = uu.kron(&Mat::identity(2, &one));
                    let u2 = Mat::identity(2, &one).kron(&uu);
                    if u1.mul(&u2).mul(&u1) == u1 && u2.mul(&u1).mul(&u2) == u2 {
                        solutions.push((cap.clone(), cup));
                    }
                }
            }
        }
    }
    assert!(!solutions.is_empty());
    assert!(solutions.contains(&(cap_matrix(&ctx), cup_matrix(&ctx))));
    assert_eq!(u_matrix(2, 1, &ctx), cup_matrix(&ctx).mul(&cap_matrix(&ctx)));
}

#[test]
fn schur_weyl_is_an_isomorphism() {
    let mut ctxs = all_contexts();
    ctxs.push(ScalarContext::rational(num_rational::BigRational::from_integer(2.into())).unwrap());
    for ctx in &ctxs {
        for d in 1..=6usize {
            let sw = SchurWeyl::new(d, ctx);
            assert_eq!(sw.rank() as u64, catalan(d as u32), "d={d} {}", ctx.label());
            assert!(sw.is_injective());
            assert_eq!(
                sw.image(&TLElement::identity(ctx, d)),
                Mat::identity(1 << d, &ctx.one())
            );
        }
    }
}

#[test]
fn schur_weyl_is_multiplicative_and_intertwines_the_involutions() {
    for ctx in all_contexts() {
        for d in 2..=4usize {
            let sw = SchurWeyl::new(d, &ctx);
            let cache = TiltingCache::new(ctx.clone());
            let cd = tensor_power_datum(d as u32, &cache, BasisChoice::Echelon).unwrap();
            let basis = tl_basis(d);
            for x in basis.iter() {
                let ex = TLElement::from_tangle(&ctx, x.clone());
                assert_eq!(cd.involution(&sw.image(&ex)), sw.image(&ex.flip()));
                assert!(is_module_map(&sw.image(&ex), &cd.module, &cd.module));
                for y in basis.iter().step_by(2) {
                    let ey = TLElement::from_tangle(&ctx, y.clone());
                    assert_eq!(sw.image(&ex.compose(&ey).unwrap()), sw.image(&ex).mul(&sw.image(&ey)));
                }
            }
        }
    }
}

#[test]
fn jw_maps_to_the_top_cell_element() {
    let cases = [
        (ScalarContext::Generic, 6usize),
        (ScalarContext::cyclotomic(5).unwrap(), 4),
        (ScalarContext::cyclotomic(7).unwrap(), 6),
    ];
    for (ctx, max_d) in cases {
        let cache = TiltingCache::new(ctx.clone());
        for d in 1..=max_d {
            let cd = tensor_power_datum(d as u32, &cache, BasisChoice::Echelon).unwrap();
            let top = cd.element(d as u32, 0, 0).unwrap();
            let image = schur_weyl(&jones_wenzl(d, &ctx).unwrap());
            let (r, c, x) = top.triples().next().map(|(r, c, x)| (r, c, x.clone())).unwrap();
            let ratio = image.entry(r, c, &ctx.zero()).div_nonzero(&x);
            assert_eq!(top.scale(&ratio), image, "d={d} {}", ctx.label());
        }
    }
}

#[test]
fn tableau_rule_examples() {
    let s = Tableau::new(vec![1, 2, 3, 6], vec![4, 5]).unwrap();
    let xs = tableau_to_half_diagram(&s);
    assert_eq!(xs.pairs(), &[(0, 6), (1, 4), (2, 3), (5, 7)]);
    let t = Tableau::new(vec![1, 3, 4, 5], vec![2, 6]).unwrap();
    let xt = tableau_to_half_diagram(&t);
    assert_eq!(xt.pairs(), &[(0, 1), (2, 6), (3, 7), (4, 5)]);
    let row = Tableau::new(vec![1, 2, 3], vec![]).unwrap();
    assert_eq!(tableau_to_half_diagram(&row), Tangle::identity(3));
    assert!(Tableau::new(vec![2, 3], vec![1]).is_err());
}

#[test]
fn graham_lehrer_datum() {
    for d in 1..=8usize {
        let gl = graham_lehrer_basis(d);
        let total: usize = gl.cells.iter().map(|(_, ts, _)| ts.len() * ts.len()).sum();
        assert_eq!(total as u64, catalan(d as u32));
        for (k, ts, _) in &gl.cells {
            assert_eq!(ts, &standard_tableaux(d, *k));
        }
        if d <= 5 {
            let report = gl.verify();
            assert!(report.pass(), "d={d}: {:?}", report.witnesses);
        }
    }
    let gl = graham_lehrer_basis(3);
    assert_eq!(gl.elements().len(), 5);
    assert!(gl.elements().contains(&Tangle::identity(3)));
}

#[test]
fn semisimplicity_agrees_with_the_cellular_side() {
    for ctx in all_contexts() {
        for d in 1..=6usize {
            let cd = tensor_power_datum(d as u32, &TiltingCache::new(ctx.clone()), BasisChoice::Echelon).unwrap();
            let report = semisimplicity_report(&cd).unwrap();
            assert_eq!(tl_semisimplicity(d, &ctx), report.module_side);
            assert_eq!(report.module_side, report.gram_side);
        }
    }
    assert!(!tl_semisimplicity(3, &ScalarContext::cyclotomic(3).unwrap()));
    assert!(tl_semisimplicity(2, &ScalarContext::cyclotomic(3).unwrap()));
    assert!(tl_semisimplicity(4, &ScalarContext::Generic));
}

#[test]
fn pullback_basis() {
    for ctx in all_contexts() {
        for d in 2..=5usize {
            let cache = TiltingCache::new(ctx.clone());
            let cd = tensor_power_datum(d as u32, &cache, BasisChoice::Echelon).unwrap();
            let sw = SchurWeyl::new(d, &ctx);
            let pb = pullback_cell_datum(&cd, &sw).unwrap();
            assert!(pb.flip_is_involution(), "d={d} {}", ctx.label());
            assert!(!pb.contains_identity(), "d={d} {}", ctx.label());
        }
    }
}

#[test]
fn pullback_at_d3() {
    // generic: idempotents on the diagonal of the mu-block
    let ctx = ScalarContext::Generic;
    let cache = TiltingCache::new(ctx.clone());
    let cd = tensor_power_datum(3, &cache, BasisChoice::Echelon).unwrap();
    let pb = pullback_cell_datum(&cd, &SchurWeyl::new(3, &ctx)).unwrap();
    let top = pb.element(&(3, 0, 0)).unwrap();
    let jw = jones_wenzl(3, &ctx).unwrap();
    let (t, c) = top.terms().iter().next().unwrap();
    assert_eq!(jw.scale(&c.div_nonzero(&jw.coeff(t))), *top);

    // l = 3: degrees and the nilpotent pattern of the mu-block
    let ctx = ScalarContext::cyclotomic(3).unwrap();
    let cache = TiltingCache::new(ctx.clone());
    let cd = tensor_power_datum(3, &cache, BasisChoice::SummandAdapted).unwrap();
    assert!(verify_cell_axioms(&cd).pass());
    let pb = pullback_cell_datum(&cd, &SchurWeyl::new(3, &ctx)).unwrap();
    assert!(pb.flip_is_involution());
    let degrees = assign_degrees(&cd, &cache).unwrap();
    let mut degs: Vec<i64> = pb.labels.iter().map(|l| degrees.element(l)).collect();
    assert_eq!(degs[0], 0);
    degs.sort();
    assert_eq!(degs, vec![0, 0, 1, 1, 2]);
    let gram = cell_module(&cd, 1).unwrap().gram;
    assert!(gram.entry(0, 0, &ctx.zero()).is_zero());
    assert!(!gram.entry(1, 1, &ctx.zero()).is_zero());
    // the index into T(3) squares to zero modulo the top cell
    let c00 = pb.element(&(1, 0, 0)).unwrap();
    let sq = c00.compose(c00).unwrap();
    let top = pb.element(&(3, 0, 0)).unwrap();
    assert!(sq.is_zero() || sq.terms().keys().all(|t| top.terms().contains_key(t)));
}

fn arb_diagram(d: usize) -> impl Strategy<Value = Tangle> {
    let basis = tl_basis(d);
    (0..basis.len()).prop_map(move |k| basis[k].clone())
}

proptest! {
    #[test]
    fn flip_is_an_anti_involution((x, y) in (3usize..=6).prop_flat_map(|d| (arb_diagram(d), arb_diagram(d)))) {
        let (xy, lx) = x.compose(&y).unwrap();
        let (yx, ly) = y.flip().compose(&x.flip()).unwrap();
        prop_assert_eq!(xy.flip(), yx);
        prop_assert_eq!(lx, ly);
        prop_assert_eq!(x.flip().flip(), x);
    }

    #[test]
    fn composition_is_associative((x, y, z) in (2usize..=6).prop_flat_map(|d| (arb_diagram(d), arb_diagram(d), arb_diagram(d)))) {
        let ctx = ScalarContext::Generic;
        let (x, y, z) = (TLElement::from_tangle(&ctx, x), TLElement::from_tangle(&ctx, y), TLElement::from_tangle(&ctx, z));
        prop_assert_eq!(x.compose(&y).unwrap().compose(&z).unwrap(), x.compose(&y.compose(&z).unwrap()).unwrap());
    }

    #[test]
    fn text_format_round_trips(x in (1usize..=7).prop_flat_map(arb_diagram)) {
        prop_assert_eq!(Tangle::from_text(&x.to_text()).unwrap(), x);
    }
}
