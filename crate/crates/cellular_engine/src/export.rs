//! JSON export of a cell datum.

use scalar_arith::text::to_text;
use scalar_arith::Mat;
use serde::Serialize;

use crate::degrees::Degrees;
use crate::CellDatum;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ExportedElement {
    pub lambda: u32,
    /// 1-based indices.
    pub i: usize,
    pub j: usize,
    /// Dense matrix in the standard basis of T, one string per entry.
    pub matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
}

/// Image of a basis element under the anti-involution, as a signed index
/// into `elements`.
#[derive(Clone, Debug, Serialize)]
pub struct InvolutionEntry {
    pub from: usize,
    pub to: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportedDatum {
    pub schema_version: u32,
    pub context: String,
    pub dimension: usize,
    pub poset: Vec<u32>,
    pub index_sets: Vec<(u32, usize)>,
    pub elements: Vec<ExportedElement>,
    /// Present when i permutes the basis up to sign.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<InvolutionEntry>>,
}

fn dense(m: &Mat, zero: &scalar_arith::Scalar) -> Vec<Vec<String>> {
    m.to_dense(zero)
        .iter()
        .map(|row| row.iter().map(to_text).collect())
        .collect()
}

pub fn export(cd: &CellDatum, degrees: Option<&Degrees>) -> ExportedDatum {
    let zero = cd.ctx().zero();
    let labels = cd.labels();
    let elements = cd.elements();
    let exported = labels
        .iter()
        .zip(&elements)
        .map(|(l, m)| ExportedElement {
            lambda: l.0,
            i: l.1 + 1,
            j: l.2 + 1,
            matrix: dense(m, &zero),
            degree: degrees.map(|d| d.element(l)),
        })
        .collect();
    let mut table = Vec::new();
    for (from, m) in elements.iter().enumerate() {
        let im = cd.involution(m);
        let found = elements.iter().enumerate().find_map(|(to, x)| {
            if *x == im {
                Some((to, 1))
            } else if x.neg() == im {
                Some((to, -1))
            } else {
                None
            }
        });
        match found {
            Some((to, sign)) => table.push(InvolutionEntry { from, to, sign }),
            None => {
                table.clear();
                break;
            }
        }
    }
    ExportedDatum {
        schema_version: SCHEMA_VERSION,
        context: cd.ctx().label(),
        dimension: cd.module.dim(),
        poset: cd.poset(),
        index_sets: cd.index_sets().into_iter().collect(),
        elements: exported,
        involution: (!table.is_empty()).then_some(table),
    }
}

pub fn to_json(cd: &CellDatum, degrees: Option<&Degrees>) -> serde_json::Value {
    serde_json::to_value(export(cd, degrees)).expect("serializable")
}
