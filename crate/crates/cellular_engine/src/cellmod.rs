//! Cell modules C(lambda) = Hom(Delta(lambda), T), cellular pairings and the
//! simple modules they produce.

use root_data::weyl_module_is_simple;
use scalar_arith::linalg::{rank, solve};
use scalar_arith::{Mat, Scalar, SparseVec};
use serde::Serialize;

use crate::{CellDatum, CellError};

fn pairing(b: &Mat, x: &SparseVec, y: &SparseVec, zero: &Scalar) -> Scalar {
    let by = b.mul_vec(y);
    let mut acc = zero.clone();
    for (i, a) in x {
        if let Some((_, c)) = by.iter().find(|(j, _)| j == i) {
            acc += &(a * c);
        }
    }
    acc
}

/// The cell module of one weight together with its cellular pairing.
#[derive(Clone, Debug)]
pub struct CellModule {
    pub lambda: u32,
    /// g_i: Delta(lambda) -> T.
    pub basis: Vec<Mat>,
    /// theta(g_i, g_j).
    pub gram: Mat,
    primitive: Vec<SparseVec>,
    dim_t: usize,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The matrix r(phi) of phi acting on C(lambda): phi o g_i = sum_k r_ik
    /// g_k, with column i holding the coefficients of phi o g_i.
    pub fn action(&self, phi: &Mat) -> Option<Mat> {
        let y = Mat::from_columns(self.dim_t, &self.primitive);
        let images: Vec<SparseVec> = self.primitive.iter().map(|v| phi.mul_vec(v)).collect();
        solve(&y, &Mat::from_columns(self.dim_t, &images))
    }

    pub fn gram_rank(&self) -> usize {
        rank(&self.gram)
    }
}

/// theta(g, h) read from i(h) o g = theta(g, h) c^lambda at the top entry.
pub fn cellular_pairing(cd: &CellDatum, g: &SparseVec, h: &SparseVec) -> Scalar {
    pairing(&cd.form.form, h, g, &cd.ctx().zero())
}

pub fn cell_module(cd: &CellDatum, lambda: u32) -> Result<CellModule, CellError> {
    let cell = cd.cell(lambda)?;
    let n = cell.size();
    let zero = cd.ctx().zero();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            triples.push((
                i,
                j,
                pairing(&cd.form.form, &cell.primitive[i], &cell.primitive[j], &zero),
            ));
        }
    }
    let gram = Mat::from_triples(n, n, triples);
    Ok(CellModule {
        lambda,
        basis: cell.g.clone(),
        gram,
        primitive: cell.primitive.clone(),
        dim_t: cd.module.dim(),
    })
}

/// Dimensions attached to one weight of the poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleDimension {
    pub lambda: u32,
    /// dim C(lambda) = (T : nabla(lambda)).
    pub cell_dim: usize,
    /// dim L(lambda), the rank of the cellular pairing.
    pub gram_rank: usize,
    /// Multiplicity of T(lambda) as a summand of T.
    pub multiplicity: u64,
}

impl SimpleDimension {
    pub fn consistent(&self) -> bool {
        self.gram_rank as u64 == self.multiplicity
    }
}

pub fn simple_dimensions(cd: &CellDatum) -> Result<Vec<SimpleDimension>, CellError> {
    let decomposition = cd.decomposition()?;
    cd.poset()
        .into_iter()
        .map(|lambda| {
            let cm = cell_module(cd, lambda)?;
            Ok(SimpleDimension {
                lambda,
                cell_dim: cm.dim(),
                gram_rank: cm.gram_rank(),
                multiplicity: decomposition.get(lambda as i64),
            })
        })
        .collect()
}

/// Is T(lambda) a summand of T? True iff the pairing on C(lambda) is nonzero.
pub fn summand_test(cd: &CellDatum, lambda: u32) -> Result<bool, CellError> {
    Ok(!cell_module(cd, lambda)?.gram.is_zero())
}

/// Both sides of the semisimplicity criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semisimplicity {
    /// Every summand T(lambda) of T is simple.
    pub module_side: bool,
    /// Every cellular pairing is nondegenerate.
    pub gram_side: bool,
}

impl Semisimplicity {
    pub fn agree(&self) -> bool {
        self.module_side == self.gram_side
    }
}

pub fn semisimplicity_report(cd: &CellDatum) -> Result<Semisimplicity, CellError> {
    let decomposition = cd.decomposition()?;
    let l = cd.ctx().order();
    let module_side = decomposition
        .entries
        .iter()
        .all(|(&lambda, &m)| m == 0 || weyl_module_is_simple(lambda, l));
    let mut gram_side = true;
    for lambda in cd.poset() {
        let cm = cell_module(cd, lambda)?;
        gram_side &= cm.gram_rank() == cm.dim();
    }
    Ok(Semisimplicity { module_side, gram_side })
}

/// Is End(T) semisimple? Decided on the module side.
pub fn semisimplicity_test(cd: &CellDatum) -> Result<bool, CellError> {
    Ok(semisimplicity_report(cd)?.module_side)
}
