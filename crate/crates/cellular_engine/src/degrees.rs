//! The degree function on indices of a summand-adapted cell datum.

use std::collections::BTreeMap;

use root_data::is_singular;
use scalar_arith::Mat;
use serde::Serialize;
use uq_modules::decompose_module;
use uq_modules::TiltingCache;

use crate::verify::Coordinates;
use crate::{BasisChoice, CellDatum, CellError, Label};

/// Degrees of the indices (lambda, i); deg(c_ij) = deg(i) + deg(j).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degrees {
    pub index: BTreeMap<(u32, usize), i64>,
}

impl Degrees {
    pub fn of(&self, lambda: u32, i: usize) -> i64 {
        self.index.get(&(lambda, i)).copied().unwrap_or(0)
    }

    pub fn element(&self, label: &Label) -> i64 {
        self.of(label.0, label.1) + self.of(label.0, label.2)
    }
}

/// Singular weights are alone in their block, which is then semisimple.
fn semisimple_block(lambda: u32, l: u32) -> bool {
    is_singular(lambda as i64, l)
}

/// Index i of weight lambda has degree 1 when g_i maps into a summand T(mu)
/// with mu > lambda and degree 0 otherwise. All degrees vanish away from
/// roots of unity and in semisimple blocks.
///
/// Summand membership is taken from a summand-adapted datum. For other
/// choices it is decided by the summand idempotents of T, and a basis vector
/// meeting several summands is an error.
pub fn assign_degrees(cd: &CellDatum, cache: &TiltingCache) -> Result<Degrees, CellError> {
    let mut index = BTreeMap::new();
    let Some(l) = cd.ctx().order() else {
        for c in &cd.cells {
            for i in 0..c.size() {
                index.insert((c.lambda, i), 0);
            }
        }
        return Ok(Degrees { index });
    };
    let idempotents: Option<Vec<(u32, Mat)>> = match cd.choice {
        BasisChoice::SummandAdapted => None,
        _ => Some(
            decompose_module(&cd.module, &cd.form.form, cache)?
                .iter()
                .map(|s| (s.mu, s.idempotent()))
                .collect(),
        ),
    };
    for c in &cd.cells {
        for (i, y) in c.primitive.iter().enumerate() {
            let mu = match (&idempotents, c.summand[i]) {
                (None, Some(mu)) => mu,
                (Some(es), _) => {
                    let hits: Vec<u32> = es
                        .iter()
                        .filter(|(_, e)| !e.mul_vec(y).is_empty())
                        .map(|(mu, _)| *mu)
                        .collect();
                    match hits[..] {
                        [mu] => mu,
                        _ => return Err(CellError::AmbiguousSummand { lambda: c.lambda }),
                    }
                }
                (None, None) => return Err(CellError::AmbiguousSummand { lambda: c.lambda }),
            };
            let deg = if semisimple_block(c.lambda, l) || mu <= c.lambda {
                0
            } else {
                1
            };
            index.insert((c.lambda, i), deg);
        }
    }
    Ok(Degrees { index })
}

/// How far the multiplication of the cellular basis is from homogeneous.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub products: usize,
    /// Nonzero structure constants c_a c_b -> c_e with deg e != deg a + deg b.
    pub inhomogeneous_terms: usize,
}

/// Structure constants of all products of basis elements, compared against
/// the degree function. Reported, not asserted.
pub fn grading_diagnostic(cd: &CellDatum, degrees: &Degrees) -> HomogeneityReport {
    let coords = Coordinates::new(cd);
    let labels = cd.labels();
    let elements = cd.elements();
    let mut report = HomogeneityReport::default();
    for (la, a) in labels.iter().zip(&elements) {
        for (lb, b) in labels.iter().zip(&elements) {
            report.products += 1;
            let target = degrees.element(la) + degrees.element(lb);
            if let Some(exp) = coords.expand(&a.mul(b)) {
                report.inhomogeneous_terms += exp.keys().filter(|e| degrees.element(e) != target).count();
            }
        }
    }
    report
}
