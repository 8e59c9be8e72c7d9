//! Cellular bases of End(T) for tilting modules T over quantum sl2, their cell
//! modules, cellular pairings and the resulting simple dimensions.
//!
//! For each dominant weight lambda with (T : Delta(lambda)) > 0 a basis
//! g_1, ..., g_n of Hom(Delta(lambda), T) is fixed. Each g_i is lifted to
//! gbar_i: T(lambda) -> T, and fbar_j is the adjoint of gbar_j for the
//! invariant forms. The basis element is c_ij = gbar_i o fbar_j.

pub mod cellmod;
pub mod certificate;
pub mod degrees;
pub mod export;
pub mod verify;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::dominance_le;
use scalar_arith::linalg::sparse_axpy;
use scalar_arith::{Echelon, Mat, ScalarContext, SparseVec};
use tilting_combinatorics::{decompose_tilting, CharacterA1, TiltingMultiset};
use uq_modules::tilting::primitive_vectors;
use uq_modules::{
    decompose_module, natural_module, tensor_power, tensor_power_form, DualityForm, GeneratorData, LiftSolver,
    TiltingCache, TiltingModel, UqError, WeightModule,
};

pub use cellmod::{cell_module, semisimplicity_test, simple_dimensions, summand_test, CellModule, SimpleDimension};
pub use certificate::{certify_basis_rank, RankCertificate};
pub use degrees::{assign_degrees, Degrees};
pub use verify::{verify_cell_axioms, AxiomReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CellError {
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error("no lift exists for g_{index} of weight {lambda}")]
    LiftUnsolvable { lambda: u32, index: usize },
    #[error("a basis vector of Hom(Delta({lambda}), T) meets several summands")]
    AmbiguousSummand { lambda: u32 },
    #[error("weight {0} is not in the poset of the cell datum")]
    UnknownWeight(u32),
    #[error("the character of T does not decompose: {0}")]
    Decomposition(String),
}

/// How the basis G^lambda of Hom(Delta(lambda), T) is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisChoice {
    /// The echelon basis returned by the intertwiner solver.
    Echelon,
    /// Each basis vector lies in the image of a single summand T(mu) of T.
    SummandAdapted,
    /// A seeded random unitriangular recombination of the echelon basis, in
    /// reversed order.
    Scrambled(u64),
}

/// The data attached to one weight of the poset.
#[derive(Clone, Debug)]
pub struct Cell {
    pub lambda: u32,
    /// g_i(m_0), a basis of the primitive vectors of weight lambda.
    pub primitive: Vec<SparseVec>,
    /// g_i: Delta(lambda) -> T.
    pub g: Vec<Mat>,
    /// gbar_i: T(lambda) -> T with gbar_i o iota = g_i.
    pub g_lift: Vec<Mat>,
    /// fbar_j: T -> T(lambda), the adjoint of gbar_j.
    pub f_lift: Vec<Mat>,
    /// For summand-adapted bases, the highest weight of the summand that
    /// contains the image of g_i.
    pub summand: Vec<Option<u32>>,
    pub model: Arc<TiltingModel>,
}

impl Cell {
    pub fn size(&self) -> usize {
        self.g.len()
    }

    pub fn element(&self, i: usize, j: usize) -> Mat {
        self.g_lift[i].mul(&self.f_lift[j])
    }
}

/// A cell datum for End(T): poset, index sets, basis and anti-involution.
#[derive(Clone, Debug)]
pub struct CellDatum {
    pub module: Arc<WeightModule>,
    pub form: DualityForm,
    /// Cells in decreasing order of weight.
    pub cells: Vec<Cell>,
    pub choice: BasisChoice,
}

/// Label (lambda, i, j) of a basis element, with 0-based indices.
pub type Label = (u32, usize, usize);

impl CellDatum {
    pub fn ctx(&self) -> &ScalarContext {
        self.module.ctx()
    }

    pub fn poset(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c.lambda).collect()
    }

    /// mu <= lambda in the poset order.
    pub fn le(&self, mu: u32, lambda: u32) -> bool {
        dominance_le(mu as i64, lambda as i64)
    }

    pub fn cell(&self, lambda: u32) -> Result<&Cell, CellError> {
        self.cells
            .iter()
            .find(|c| c.lambda == lambda)
            .ok_or(CellError::UnknownWeight(lambda))
    }

    pub fn index_sets(&self) -> BTreeMap<u32, usize> {
        self.cells.iter().map(|c| (c.lambda, c.size())).collect()
    }

    /// Number of basis elements, the sum of squared index set sizes.
    pub fn len(&self) -> usize {
        self.cells.iter().map(|c| c.size() * c.size()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Vec<Label> {
        self.cells
            .iter()
            .flat_map(|c| {
                let n = c.size();
                (0..n).flat_map(move |i| (0..n).map(move |j| (c.lambda, i, j)))
            })
            .collect()
    }

    pub fn element(&self, lambda: u32, i: usize, j: usize) -> Result<Mat, CellError> {
        Ok(self.cell(lambda)?.element(i, j))
    }

    /// All basis elements in the order of `labels`.
    pub fn elements(&self) -> Vec<Mat> {
        self.cells
            .iter()
            .flat_map(|c| {
                let n = c.size();
                (0..n).flat_map(move |i| (0..n).map(move |j| c.element(i, j)))
            })
            .collect()
    }

    /// The anti-involution i(phi) = B^-1 phi^T B of End(T).
    pub fn involution(&self, phi: &Mat) -> Mat {
        self.form.involution(phi)
    }

    pub fn character(&self) -> CharacterA1 {
        CharacterA1::from_map(self.module.character())
    }

    /// Multiplicities of indecomposable summands of T, from its character.
    pub fn decomposition(&self) -> Result<TiltingMultiset, CellError> {
        decompose_tilting(&self.character(), self.ctx().order()).map_err(|e| CellError::Decomposition(e.to_string()))
    }
}

/// The map Delta(lambda) -> T sending m_k to F^(k) y.
pub fn weyl_map(t: &WeightModule, lambda: u32, y: &SparseVec) -> Mat {
    let cols: Vec<SparseVec> = (0..=lambda as usize).map(|k| t.f(k).mul_vec(y)).collect();
    Mat::from_columns(t.dim(), &cols)
}

fn scrambled(prims: Vec<SparseVec>, ctx: &ScalarContext, seed: u64) -> Vec<SparseVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = prims.len();
    (0..n)
        .rev()
        .map(|i| {
            (i + 1..n).fold(prims[i].clone(), |acc, k| {
                let c = ctx.int(rng.gen_range(-3..=3));
                sparse_axpy(&acc, &c, &prims[k])
            })
        })
        .collect()
}

/// Re-base the primitive vectors so that each lies in one summand image.
fn summand_adapted(
    t: &WeightModule,
    lambda: u32,
    prims: &[SparseVec],
    summands: &[uq_modules::Summand],
) -> Result<(Vec<SparseVec>, Vec<Option<u32>>), CellError> {
    let mut ech = Echelon::new(t.dim());
    let mut out = Vec::new();
    let mut tags = Vec::new();
    for s in summands {
        let e = s.idempotent();
        for y in prims {
            let z = e.mul_vec(y);
            if !z.is_empty() && ech.insert(&z).is_some() {
                out.push(z);
                tags.push(Some(s.mu));
            }
        }
    }
    if out.len() != prims.len() {
        return Err(CellError::AmbiguousSummand { lambda });
    }
    Ok((out, tags))
}

/// Build the cell datum of End(T) from T and a symmetric nondegenerate
/// invariant form on it.
pub fn cellular_basis(
    t: Arc<WeightModule>,
    form: DualityForm,
    cache: &TiltingCache,
    choice: BasisChoice,
) -> Result<CellDatum, CellError> {
    let ctx = t.ctx().clone();
    if cache.ctx() != &ctx {
        return Err(UqError::ContextMismatch.into());
    }
    let summands = match choice {
        BasisChoice::SummandAdapted => Some(decompose_module(&t, &form.form, cache)?),
        _ => None,
    };
    let top = t.max_weight().unwrap_or(-1);
    let mut cells = Vec::new();
    for lambda in (0..=top.max(-1)).rev() {
        let lambda = lambda as u32;
        if t.block_dim(lambda as i64) == 0 {
            continue;
        }
        let prims = primitive_vectors(&t, lambda)?;
        if prims.is_empty() {
            continue;
        }
        let (prims, summand) = match (&choice, &summands) {
            (BasisChoice::SummandAdapted, Some(s)) => summand_adapted(&t, lambda, &prims, s)?,
            (BasisChoice::Scrambled(seed), _) => {
                let n = prims.len();
                (scrambled(prims, &ctx, seed ^ lambda as u64), vec![None; n])
            }
            _ => {
                let n = prims.len();
                (prims, vec![None; n])
            }
        };
        let model = cache.get(lambda)?;
        let data = GeneratorData::new(&model.module);
        let solver = LiftSolver::new(&model.module, &t, &data)?;
        let mut g = Vec::new();
        let mut g_lift = Vec::new();
        let mut f_lift = Vec::new();
        for (index, y) in prims.iter().enumerate() {
            let lift = solver
                .lift(y)
                .map_err(|_| CellError::LiftUnsolvable { lambda, index })?;
            f_lift.push(model.form_inverse.mul(&lift.transpose()).mul(&form.form));
            g.push(weyl_map(&t, lambda, y));
            g_lift.push(lift);
        }
        cells.push(Cell {
            lambda,
            primitive: prims,
            g,
            g_lift,
            f_lift,
            summand,
            model,
        });
    }
    Ok(CellDatum {
        module: t,
        form,
        cells,
        choice,
    })
}

/// The cell datum of End(V^(x)d).
pub fn tensor_power_datum(d: u32, cache: &TiltingCache, choice: BasisChoice) -> Result<CellDatum, CellError> {
    let ctx = cache.ctx().clone();
    let t = tensor_power(&natural_module(&ctx), d)?;
    let form = DualityForm::new(tensor_power_form(d, &ctx), &ctx)?;
    cellular_basis(Arc::new(t), form, cache, choice)
}

/// The cell datum of End(T(lambda)) for the cached model of T(lambda).
pub fn tilting_datum(lambda: u32, cache: &TiltingCache, choice: BasisChoice) -> Result<CellDatum, CellError> {
    let model = cache.get(lambda)?;
    let form = DualityForm {
        form: model.form.clone(),
        inverse: model.form_inverse.clone(),
    };
    cellular_basis(Arc::new(model.module.clone()), form, cache, choice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn end_of_natural_module_is_the_identity() {
        let ctx = ScalarContext::cyclotomic(3).unwrap();
        let cache = TiltingCache::new(ctx.clone());
        let cd = tensor_power_datum(1, &cache, BasisChoice::Echelon).unwrap();
        assert_eq!(cd.poset(), vec![1]);
        assert_eq!(cd.elements(), vec![Mat::identity(2, &ctx.one())]);
    }

    #[test]
    fn lifts_restrict_to_g() {
        let ctx = ScalarContext::cyclotomic(3).unwrap();
        let cache = TiltingCache::new(ctx.clone());
        let cd = tensor_power_datum(3, &cache, BasisChoice::Echelon).unwrap();
        for c in &cd.cells {
            for (g, gbar) in c.g.iter().zip(&c.g_lift) {
                assert_eq!(&gbar.mul(&c.model.iota), g);
            }
        }
    }
}
