//! Explicit models of the indecomposable tilting modules T(lambda).
//!
//! T(lambda) is a Weyl module when lambda lies in the closed fundamental
//! alcove, is singular, or the parameter is not a root of unity. Otherwise
//! T(lambda-1) (x) V is built and every summand T(mu), mu < lambda, is split
//! off using self-adjoint idempotents for the invariant form.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use root_data::is_singular;
use scalar_arith::linalg::{inverse, rank};
use scalar_arith::{Echelon, Mat, Scalar, ScalarContext, SparseVec};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tilting_combinatorics::tilting_character;

use crate::forms::{tensor_form, weyl_form};
use crate::hom::{hom_space, GeneratorData, LiftSolver};
use crate::module::{natural_module, tensor, weyl_module, WeightModule};
use crate::UqError;

/// A model of T(lambda) in a basis adapted to its generators: basis vectors
/// are F^(k) g_t, ordered by descending weight, with the image of the Weyl
/// module first in each weight space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingModel {
    pub lambda: u32,
    pub module: WeightModule,
    /// Symmetric invariant form with B(top, top) = 1.
    pub form: Mat,
    pub form_inverse: Mat,
    /// Delta(lambda) -> T(lambda), m_0 to the top basis vector.
    pub iota: Mat,
    /// T(lambda) -> nabla(lambda) in the dual basis; pi o iota is the Weyl form.
    pub pi: Mat,
}

impl TiltingModel {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn ctx(&self) -> &ScalarContext {
        self.module.ctx()
    }
}

/// Does T(lambda) coincide with the Weyl module in this context?
pub fn tilting_is_weyl(lambda: u32, ctx: &ScalarContext) -> bool {
    match ctx.order() {
        None => true,
        Some(l) => lambda < l || is_singular(lambda as i64, l),
    }
}

/// Weight-mu vectors killed by every E^(j), as a list spanning that space.
pub fn primitive_vectors(m: &WeightModule, mu: u32) -> Result<Vec<SparseVec>, UqError> {
    let delta = weyl_module(mu, m.ctx());
    Ok(hom_space(&delta, m)?.iter().map(|x| x.column(0)).collect())
}

fn bilinear(b: &Mat, x: &SparseVec, y: &SparseVec) -> Scalar {
    let by = b.mul_vec(y);
    let mut acc = b.trace_zero_like().unwrap_or_else(|| x[0].1.zero_like());
    let mut i = 0;
    for (j, v) in &by {
        while i < x.len() && x[i].0 < *j {
            i += 1;
        }
        if i < x.len() && x[i].0 == *j {
            acc += &(&x[i].1 * v);
        }
    }
    acc
}

fn add_vecs(a: &SparseVec, b: &SparseVec, one: &Scalar) -> SparseVec {
    scalar_arith::linalg::sparse_axpy(a, one, b)
}

/// A primitive vector of weight mu with B(v, v) != 0, if any.
fn splittable_vector(m: &WeightModule, b: &Mat, mu: u32) -> Result<Option<SparseVec>, UqError> {
    let prims = primitive_vectors(m, mu)?;
    for p in &prims {
        if !bilinear(b, p, p).is_zero() {
            return Ok(Some(p.clone()));
        }
    }
    let one = m.ctx().one();
    for (a, p) in prims.iter().enumerate() {
        for q in &prims[a + 1..] {
            if !bilinear(b, p, q).is_zero() {
                return Ok(Some(add_vecs(p, q, &one)));
            }
        }
    }
    Ok(None)
}

/// A direct summand T(mu) of a module with embedding and projection in the
/// original coordinates; projection o embedding = id.
#[derive(Clone, Debug)]
pub struct Summand {
    pub mu: u32,
    pub embed: Mat,
    pub project: Mat,
}

impl Summand {
    pub fn idempotent(&self) -> Mat {
        self.embed.mul(&self.project)
    }
}

/// Working state while splitting summands off a module with a form.
struct Peeler {
    module: WeightModule,
    form: Mat,
    /// Current basis in original coordinates and its left inverse.
    embed: Mat,
    project: Mat,
    summands: Vec<Summand>,
}

impl Peeler {
    fn new(module: WeightModule, form: Mat) -> Self {
        let one = module.ctx().one();
        let n = module.dim();
        Self {
            module,
            form,
            embed: Mat::identity(n, &one),
            project: Mat::identity(n, &one),
            summands: Vec::new(),
        }
    }

    /// Split off one copy of T(mu) through the primitive vector v.
    fn peel(&mut self, model: &TiltingModel, v: &SparseVec) -> Result<(), UqError> {
        let ctx = self.module.ctx().clone();
        let one = ctx.one();
        let stalled = |detail: &str| UqError::PeelingStalled {
            lambda: model.lambda,
            detail: detail.to_string(),
        };
        let data = GeneratorData::new(&model.module);
        let phi = LiftSolver::new(&model.module, &self.module, &data)?.lift(v)?;
        let phi_dag = model.form_inverse.mul(&phi.transpose()).mul(&self.form);
        let a = phi_dag.mul(&phi);
        let a_inv = inverse(&a, &one).ok_or_else(|| stalled("phi^dagger phi is not invertible"))?;
        let psi = a_inv.mul(&phi_dag);
        let e = phi.mul(&psi);
        let n = self.module.dim();
        let p = Mat::identity(n, &one).sub(&e);
        // basis of the complement: greedy independent columns of 1 - e
        let pt = p.transpose();
        let mut ech = Echelon::new(n);
        let mut chosen = Vec::new();
        for i in 0..n {
            if ech.insert(pt.row(i)).is_some() {
                chosen.push(i);
            }
        }
        let c = Mat::from_columns(n, &chosen.iter().map(|&i| pt.row(i).clone()).collect::<Vec<_>>());
        let mut rows_ech = Echelon::new(n);
        for col in &chosen {
            rows_ech.insert(pt.row(*col));
        }
        let pivots = rows_ech.pivots();
        let c_sq = c.submatrix(&pivots, &(0..chosen.len()).collect::<Vec<_>>());
        let c_sq_inv = inverse(&c_sq, &one).ok_or_else(|| stalled("complement basis is singular"))?;
        let select = Mat::from_triples(
            pivots.len(),
            n,
            pivots.iter().enumerate().map(|(k, &r)| (k, r, one.clone())),
        );
        let l = c_sq_inv.mul(&select);
        let weights = chosen.iter().map(|&i| self.module.weight(i)).collect();
        self.summands.push(Summand {
            mu: model.lambda,
            embed: self.embed.mul(&phi),
            project: psi.mul(&self.project),
        });
        let new_module = self.module.restrict(&c, &l, weights);
        self.form = c.transpose().mul(&self.form).mul(&c);
        self.project = l.mul(&p).mul(&self.project);
        self.embed = self.embed.mul(&c);
        self.module = new_module;
        Ok(())
    }

    /// Split off every T(mu) with mu in the given descending range.
    fn peel_range(&mut self, weights: impl Iterator<Item = u32>, cache: &TiltingCache) -> Result<(), UqError> {
        for mu in weights {
            while let Some(v) = splittable_vector(&self.module, &self.form, mu)? {
                let model = cache.get(mu)?;
                self.peel(&model, &v)?;
            }
        }
        Ok(())
    }
}

/// Re-express a model of T(lambda) in its generator-adapted basis and
/// normalize the form.
fn adapt(lambda: u32, module: WeightModule, form: Mat) -> Result<TiltingModel, UqError> {
    let ctx = module.ctx().clone();
    let one = ctx.one();
    let n = module.dim();
    let data = GeneratorData::new(&module);
    let mut columns = Vec::new();
    let mut weights = Vec::new();
    for w in module.weight_list() {
        let span = &data.spans[&w];
        for &b in &span.basis_terms {
            let (t, k) = span.terms[b];
            let g = data.gens[t];
            let col = if k == 0 {
                vec![(g, one.clone())]
            } else {
                module.f_ref(k).expect("divided power in range").column(g)
            };
            columns.push(col);
            weights.push(w);
        }
    }
    let q = Mat::from_columns(n, &columns);
    let q_inv = inverse(&q, &one).expect("generator-adapted basis");
    let module = module.rebase(&q, &q_inv, weights);
    let form = q.transpose().mul(&form).mul(&q);
    let top = form.entry(0, 0, &ctx.zero());
    let form = form.scale(&top.inv().map_err(|_| UqError::DegenerateForm)?);
    let form_inverse = inverse(&form, &one).ok_or(UqError::DegenerateForm)?;
    let iota_cols: Vec<SparseVec> = (0..=lambda as usize).map(|k| module.f(k).column(0)).collect();
    let iota = Mat::from_columns(n, &iota_cols);
    let pi = iota.transpose().mul(&form);
    Ok(TiltingModel {
        lambda,
        module,
        form,
        form_inverse,
        iota,
        pi,
    })
}

fn build_uncached(lambda: u32, ctx: &ScalarContext, cache: &TiltingCache) -> Result<TiltingModel, UqError> {
    if tilting_is_weyl(lambda, ctx) {
        return adapt(lambda, weyl_module(lambda, ctx), weyl_form(lambda, ctx));
    }
    let l = ctx.order().expect("root of unity");
    let prev = cache.get(lambda - 1)?;
    let v = natural_module(ctx);
    let module = tensor(&prev.module, &v)?;
    let form = tensor_form(&prev.form, &weyl_form(1, ctx));
    let mut peeler = Peeler::new(module, form);
    peeler.peel_range((0..lambda).rev(), cache)?;
    let expected = tilting_character(lambda as i64, Some(l));
    if peeler.module.character() != *expected.coeffs() {
        return Err(UqError::PeelingStalled {
            lambda,
            detail: format!("character {:?} after peeling", peeler.module.character()),
        });
    }
    adapt(lambda, peeler.module, peeler.form)
}

/// Decompose a module with a nondegenerate symmetric invariant form into
/// indecomposable tilting summands, highest weights first.
pub fn decompose_module(module: &WeightModule, form: &Mat, cache: &TiltingCache) -> Result<Vec<Summand>, UqError> {
    let top = module.max_weight().unwrap_or(0).max(0) as u32;
    let mut peeler = Peeler::new(module.clone(), form.clone());
    peeler.peel_range((0..=top).rev(), cache)?;
    if peeler.module.dim() != 0 {
        return Err(UqError::PeelingStalled {
            lambda: top,
            detail: format!("{} dimensions left after peeling", peeler.module.dim()),
        });
    }
    Ok(peeler.summands)
}

#[derive(Serialize, Deserialize)]
struct CacheEnvelope {
    digest: String,
    payload: String,
}

/// Write-once store of tilting models for one context, optionally backed by
/// a directory of JSON files guarded by SHA-256 digests.
pub struct TiltingCache {
    ctx: ScalarContext,
    memory: Mutex<BTreeMap<u32, Arc<TiltingModel>>>,
    dir: Option<PathBuf>,
    messages: Mutex<Vec<String>>,
}

impl TiltingCache {
    pub fn new(ctx: ScalarContext) -> Self {
        Self {
            ctx,
            memory: Mutex::new(BTreeMap::new()),
            dir: None,
            messages: Mutex::new(Vec::new()),
        }
    }

    pub fn with_dir(ctx: ScalarContext, dir: impl AsRef<Path>) -> Result<Self, UqError> {
        std::fs::create_dir_all(dir.as_ref()).map_err(|e| UqError::Cache(e.to_string()))?;
        Ok(Self {
            dir: Some(dir.as_ref().to_path_buf()),
            ..Self::new(ctx)
        })
    }

    pub fn ctx(&self) -> &ScalarContext {
        &self.ctx
    }

    /// Diagnostics such as invalidated cache entries.
    pub fn messages(&self) -> Vec<String> {
        self.messages.lock().unwrap().clone()
    }

    pub fn path_for(&self, lambda: u32) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("tilting_{}_{lambda}.json", self.ctx.label())))
    }

    fn load(&self, lambda: u32) -> Option<TiltingModel> {
        let path = self.path_for(lambda)?;
        let text = std::fs::read_to_string(&path).ok()?;
        let parsed = serde_json::from_str::<CacheEnvelope>(&text)
            .ok()
            .filter(|env| env.digest == digest(&env.payload))
            .and_then(|env| serde_json::from_str::<TiltingModel>(&env.payload).ok())
            .filter(|m| m.lambda == lambda && m.ctx() == &self.ctx);
        if parsed.is_none() {
            self.messages.lock().unwrap().push(format!(
                "cache entry {} failed its digest check and was invalidated; rebuilding",
                path.display()
            ));
        }
        parsed
    }

    fn store(&self, model: &TiltingModel) -> Result<(), UqError> {
        let Some(path) = self.path_for(model.lambda) else {
            return Ok(());
        };
        let payload = serde_json::to_string(model).map_err(|e| UqError::Cache(e.to_string()))?;
        let env = CacheEnvelope {
            digest: digest(&payload),
            payload,
        };
        let text = serde_json::to_string(&env).map_err(|e| UqError::Cache(e.to_string()))?;
        std::fs::write(&path, text).map_err(|e| UqError::Cache(e.to_string()))
    }

    /// The model of T(lambda), built on first use.
    pub fn get(&self, lambda: u32) -> Result<Arc<TiltingModel>, UqError> {
        if let Some(m) = self.memory.lock().unwrap().get(&lambda) {
            return Ok(m.clone());
        }
        let model = match self.load(lambda) {
            Some(m) => m,
            None => {
                let m = build_uncached(lambda, &self.ctx, self)?;
                self.store(&m)?;
                m
            }
        };
        let mut memory = self.memory.lock().unwrap();
        Ok(memory.entry(lambda).or_insert_with(|| Arc::new(model)).clone())
    }
}

fn digest(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// Build T(lambda) in the given context using a fresh in-memory cache.
pub fn build_tilting(lambda: u32, ctx: &ScalarContext) -> Result<Arc<TiltingModel>, UqError> {
    TiltingCache::new(ctx.clone()).get(lambda)
}

/// Rank of a family of maps, viewed as vectors.
pub fn span_rank(maps: &[Mat]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let cols = first.nrows() * first.ncols();
    let rows: Vec<SparseVec> = maps.iter().map(Mat::flatten).collect();
    rank(&Mat::from_rows(cols, rows))
}
