//! Reference examples with their expected values, compared as strings.

use std::path::PathBuf;

use cellular_engine::{
    assign_degrees, simple_dimensions, tensor_power_datum, tilting_datum, verify_cell_axioms, BasisChoice,
};
use scalar_arith::{Scalar, ScalarContext};
use serde::Serialize;
use temperley_lieb::{generalized_jw, jones_wenzl, tableau_to_half_diagram, tl_semisimplicity, TLElement, Tableau};
use uq_modules::TiltingCache;

use crate::{decompose, CliError, Target};

#[derive(Clone, Debug, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl GoldenCheck {
    fn new(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Self {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn line(&self) -> String {
        if self.pass {
            format!("ok   {}: {}", self.name, one_line(&self.actual))
        } else {
            format!(
                "FAIL {}: expected {}, got {}",
                self.name,
                one_line(&self.expected),
                one_line(&self.actual)
            )
        }
    }
}

fn one_line(s: &str) -> String {
    s.lines().collect::<Vec<_>>().join(" + ")
}

struct Caches {
    dir: Option<PathBuf>,
}

impl Caches {
    fn get(&self, ctx: ScalarContext) -> Result<TiltingCache, CliError> {
        Ok(match &self.dir {
            Some(d) => TiltingCache::with_dir(ctx, d)?,
            None => TiltingCache::new(ctx),
        })
    }
}

fn cyc(l: u32) -> ScalarContext {
    ScalarContext::cyclotomic(l).expect("odd l")
}

fn multiset(cache: &TiltingCache, power: u32) -> Result<String, CliError> {
    let m = decompose(
        &Target {
            power: Some(power),
            tensor: None,
        },
        cache,
    )?;
    Ok(serde_json::to_string(&m).expect("serializable"))
}

fn decompositions(c: &Caches, out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let cases: [(&str, ScalarContext, u32, &str); 6] = [
        ("V^3 at l=3", cyc(3), 3, r#"{"1":1,"3":1}"#),
        ("V^3 generic", ScalarContext::Generic, 3, r#"{"1":2,"3":1}"#),
        ("V^3 at l=5", cyc(5), 3, r#"{"1":2,"3":1}"#),
        ("V^1 at l=3", cyc(3), 1, r#"{"1":1}"#),
        ("V^4 at l=3", cyc(3), 4, r#"{"0":1,"2":3,"4":1}"#),
        ("V^2 generic", ScalarContext::Generic, 2, r#"{"0":1,"2":1}"#),
    ];
    for (name, ctx, d, expected) in cases {
        let cache = c.get(ctx)?;
        out.push(GoldenCheck::new(
            format!("decompose {name}"),
            expected,
            multiset(&cache, d)?,
        ));
    }
    Ok(())
}

fn end_t3(c: &Caches, out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let ctx = cyc(3);
    let cd = tilting_datum(3, &c.get(ctx.clone())?, BasisChoice::Echelon)?;
    let c3 = cd.element(3, 0, 0)?;
    let c1 = cd.element(1, 0, 0)?;
    let name = |x: &scalar_arith::Mat| {
        if x.is_zero() {
            "0"
        } else if *x == c3 {
            "c3"
        } else if *x == c1 {
            "c1"
        } else {
            "other"
        }
    };
    let table = [(&c3, &c3), (&c1, &c3), (&c3, &c1), (&c1, &c1)]
        .iter()
        .map(|(a, b)| name(&a.mul(b)))
        .collect::<Vec<_>>()
        .join(",");
    out.push(GoldenCheck::new(
        "End(T(3)) at l=3: c3c3,c1c3,c3c1,c1c1",
        "c3,c1,c1,0",
        table,
    ));
    out.push(GoldenCheck::new(
        "End(T(3)) at l=3: dimension",
        "2",
        cd.len().to_string(),
    ));
    Ok(())
}

fn cell_data(c: &Caches, out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let ctx = cyc(3);
    let cache = c.get(ctx)?;
    let cd = tensor_power_datum(3, &cache, BasisChoice::SummandAdapted)?;
    let degrees = assign_degrees(&cd, &cache)?;
    let mut degs: Vec<i64> = cd.labels().iter().map(|l| degrees.element(l)).collect();
    degs.sort();
    out.push(GoldenCheck::new(
        "cellbasis d=3 l=3: sorted degrees",
        "[0, 0, 1, 1, 2]",
        format!("{degs:?}"),
    ));
    out.push(GoldenCheck::new(
        "cellbasis d=3 l=3: axioms",
        "true",
        verify_cell_axioms(&cd).pass().to_string(),
    ));
    let generic = c.get(ScalarContext::Generic)?;
    let one = tensor_power_datum(1, &generic, BasisChoice::Echelon)?;
    out.push(GoldenCheck::new("cellbasis d=1: size", "1", one.len().to_string()));
    let four = tensor_power_datum(4, &generic, BasisChoice::Echelon)?;
    let blocks: Vec<String> = four
        .index_sets()
        .iter()
        .rev()
        .map(|(_, n)| (n * n).to_string())
        .collect();
    out.push(GoldenCheck::new(
        "cellbasis d=4 generic: blocks",
        "1+9+4",
        blocks.join("+"),
    ));
    Ok(())
}

fn simples(c: &Caches, out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let cases: [(&str, ScalarContext, u32, &str); 3] = [
        ("d=3 generic", ScalarContext::Generic, 3, "(3,1,1,1),(1,2,2,2)"),
        ("d=3 l=3", cyc(3), 3, "(3,1,1,1),(1,2,1,1)"),
        ("d=1 generic", ScalarContext::Generic, 1, "(1,1,1,1)"),
    ];
    for (name, ctx, d, expected) in cases {
        let cd = tensor_power_datum(d, &c.get(ctx)?, BasisChoice::Echelon)?;
        let rows: Vec<String> = simple_dimensions(&cd)?
            .iter()
            .map(|r| format!("({},{},{},{})", r.lambda, r.cell_dim, r.gram_rank, r.multiplicity))
            .collect();
        out.push(GoldenCheck::new(format!("simples {name}"), expected, rows.join(",")));
    }
    for (l, d, expected) in [(3u32, 2usize, true), (3, 3, false), (5, 4, true), (5, 5, false)] {
        out.push(GoldenCheck::new(
            format!("TL_{d} at l={l} semisimple"),
            expected.to_string(),
            tl_semisimplicity(d, &cyc(l)).to_string(),
        ));
    }
    Ok(())
}

fn word(ctx: &ScalarContext, d: usize, w: &[usize]) -> Result<TLElement, CliError> {
    let mut x = TLElement::identity(ctx, d);
    for &i in w {
        x = x.compose(&TLElement::u(ctx, d, i)?)?;
    }
    Ok(x)
}

fn combination(ctx: &ScalarContext, d: usize, terms: &[(Scalar, &[usize])]) -> Result<TLElement, CliError> {
    let mut x = TLElement::zero(ctx, d, d);
    for (c, w) in terms {
        x = x.axpy(c, &word(ctx, d, w)?)?;
    }
    Ok(x)
}

fn projectors(out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let ctx = ScalarContext::Generic;
    let one = ctx.one();
    let q2 = ctx.qint(2);
    let q3 = ctx.qint(3);
    let inv2 = q2.inv().expect("nonzero");
    let jw2 = combination(&ctx, 2, &[(one.clone(), &[]), (inv2.neg_ref(), &[1])])?;
    out.push(GoldenCheck::new("JW_2", jw2.to_text(), jones_wenzl(2, &ctx)?.to_text()));
    let a = q2.div_nonzero(&q3).neg_ref();
    let b = q3.inv().expect("nonzero");
    let jw3 = combination(
        &ctx,
        3,
        &[
            (one.clone(), &[]),
            (a.clone(), &[1]),
            (a, &[2]),
            (b.clone(), &[1, 2]),
            (b, &[2, 1]),
        ],
    )?;
    out.push(GoldenCheck::new("JW_3", jw3.to_text(), jones_wenzl(3, &ctx)?.to_text()));
    out.push(GoldenCheck::new(
        "JW_(+1,-1)",
        word(&ctx, 2, &[1])?.to_text(),
        generalized_jw(&[1, -1], &ctx)?.to_text(),
    ));
    let four = combination(
        &ctx,
        3,
        &[
            (one, &[2]),
            (inv2.neg_ref(), &[1, 2]),
            (inv2.neg_ref(), &[2, 1]),
            (inv2.pow(2), &[1]),
        ],
    )?;
    out.push(GoldenCheck::new(
        "JW_(+1,+1,-1)",
        four.to_text(),
        generalized_jw(&[1, 1, -1], &ctx)?.to_text(),
    ));
    let pole = jones_wenzl(3, &cyc(3)).err().map(|e| e.to_string()).unwrap_or_default();
    out.push(GoldenCheck::new(
        "JW_3 at l=3 has a pole",
        "true",
        (!pole.is_empty()).to_string(),
    ));
    Ok(())
}

fn tableaux(out: &mut Vec<GoldenCheck>) -> Result<(), CliError> {
    let cases: [(&[usize], &[usize], &str); 2] = [
        (&[1, 2, 3, 6], &[4, 5], "6/2; (1,7) (2,5) (3,4) (6,8)"),
        (&[1, 3, 4, 5], &[2, 6], "6/2; (1,2) (3,7) (4,8) (5,6)"),
    ];
    for (first, second, expected) in cases {
        let t = Tableau::new(first.to_vec(), second.to_vec())?;
        out.push(GoldenCheck::new(
            format!("half diagram of {t}"),
            expected,
            tableau_to_half_diagram(&t).to_text(),
        ));
    }
    Ok(())
}

fn a2(out: &mut Vec<GoldenCheck>) {
    for c in root_data::a2::a2_fixture_checks().checks {
        let actual = if c.pass { "holds" } else { "fails" };
        out.push(GoldenCheck::new(format!("sl3 {}", c.name), "holds", actual));
    }
}

/// Run every reference example. Models are shared through `cache_dir` when given.
pub fn run_all(cache_dir: Option<&PathBuf>) -> Result<Vec<GoldenCheck>, CliError> {
    let caches = Caches {
        dir: cache_dir.cloned(),
    };
    let mut out = Vec::new();
    decompositions(&caches, &mut out)?;
    end_t3(&caches, &mut out)?;
    cell_data(&caches, &mut out)?;
    simples(&caches, &mut out)?;
    projectors(&mut out)?;
    tableaux(&mut out)?;
    a2(&mut out);
    Ok(out)
}
