//! Finite-dimensional weight modules for the divided-power form of U_q(sl2).

use std::collections::BTreeMap;

use scalar_arith::{Mat, Scalar, ScalarContext, SparseVec};
use serde::{Deserialize, Serialize};

use crate::UqError;

/// A weight module: basis vectors with weights, plus the matrices of
/// E^(j) and F^(j) for j = 1..=maxdp. K acts by v^weight.
///
/// Matrices act on column vectors: entry (r, c) is the coefficient of basis
/// vector r in the image of basis vector c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "ModuleData", into = "ModuleData")]
pub struct WeightModule {
    ctx: ScalarContext,
    weights: Vec<i64>,
    e: Vec<Mat>,
    f: Vec<Mat>,
    blocks: BTreeMap<i64, Vec<usize>>,
    pos: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ModuleData {
    ctx: ScalarContext,
    weights: Vec<i64>,
    e: Vec<Mat>,
    f: Vec<Mat>,
}

impl From<ModuleData> for WeightModule {
    fn from(d: ModuleData) -> Self {
        WeightModule::from_parts(d.ctx, d.weights, d.e, d.f)
    }
}

impl From<WeightModule> for ModuleData {
    fn from(m: WeightModule) -> Self {
        ModuleData {
            ctx: m.ctx,
            weights: m.weights,
            e: m.e,
            f: m.f,
        }
    }
}

impl WeightModule {
    pub fn from_parts(ctx: ScalarContext, weights: Vec<i64>, e: Vec<Mat>, f: Vec<Mat>) -> Self {
        let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut pos = Vec::with_capacity(weights.len());
        for (i, &w) in weights.iter().enumerate() {
            let b = blocks.entry(w).or_default();
            pos.push(b.len());
            b.push(i);
        }
        Self {
            ctx,
            weights,
            e,
            f,
            blocks,
            pos,
        }
    }

    pub fn ctx(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    /// Highest divided power carried.
    pub fn maxdp(&self) -> usize {
        self.e.len()
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.blocks.keys().next_back().copied()
    }

    /// Basis indices of the weight-w space, ascending.
    pub fn block(&self, w: i64) -> &[usize] {
        self.blocks.get(&w).map_or(&[], Vec::as_slice)
    }

    pub fn block_dim(&self, w: i64) -> usize {
        self.block(w).len()
    }

    /// Weights occurring, descending.
    pub fn weight_list(&self) -> Vec<i64> {
        self.blocks.keys().rev().copied().collect()
    }

    /// Position of basis vector i inside its weight block.
    pub fn pos_in_block(&self, i: usize) -> usize {
        self.pos[i]
    }

    /// Matrix of E^(j); the identity for j = 0 and zero beyond maxdp.
    pub fn e(&self, j: usize) -> Mat {
        self.divided(&self.e, j)
    }

    pub fn f(&self, j: usize) -> Mat {
        self.divided(&self.f, j)
    }

    pub fn e_ref(&self, j: usize) -> Option<&Mat> {
        j.checked_sub(1).and_then(|k| self.e.get(k))
    }

    pub fn f_ref(&self, j: usize) -> Option<&Mat> {
        j.checked_sub(1).and_then(|k| self.f.get(k))
    }

    fn divided(&self, mats: &[Mat], j: usize) -> Mat {
        if j == 0 {
            Mat::identity(self.dim(), &self.ctx.one())
        } else {
            mats.get(j - 1)
                .cloned()
                .unwrap_or_else(|| Mat::zeros(self.dim(), self.dim()))
        }
    }

    /// Diagonal matrix of K^n.
    pub fn k_pow(&self, n: i64) -> Mat {
        Mat::diagonal(self.weights.iter().map(|&w| self.ctx.v_pow(n * w)).collect())
    }

    pub fn k_action(&self) -> Mat {
        self.k_pow(1)
    }

    /// Formal character as weight -> multiplicity.
    pub fn character(&self) -> BTreeMap<i64, u64> {
        self.blocks.iter().map(|(&w, b)| (w, b.len() as u64)).collect()
    }

    /// Every defining relation as an exact matrix identity; returns the
    /// first failing relation.
    pub fn check_relations(&self) -> Result<(), String> {
        let n = self.dim();
        let ctx = &self.ctx;
        for j in 1..=self.maxdp() {
            for (name, m, shift) in [("E", self.e(j), 2 * j as i64), ("F", self.f(j), -2 * j as i64)] {
                if m.nrows() != n || m.ncols() != n {
                    return Err(format!("{name}^({j}) has the wrong shape"));
                }
                for (r, c, _) in m.triples() {
                    if self.weights[r] != self.weights[c] + shift {
                        return Err(format!("K {name}^({j}) K^-1 != v^{shift} {name}^({j})"));
                    }
                }
            }
        }
        // [E, F] = (K - K^-1)/(v - v^-1), which is [w] on weight w
        let comm = self.e(1).mul(&self.f(1)).sub(&self.f(1).mul(&self.e(1)));
        let expected = Mat::diagonal(self.weights.iter().map(|&w| ctx.qint(w)).collect());
        if comm != expected {
            return Err("[E, F] != (K - K^-1)/(v - v^-1)".into());
        }
        for a in 1..=self.maxdp() {
            for b in 1..=self.maxdp() {
                let c = ctx.qbinom((a + b) as i64, a as u32);
                if self.e(a).mul(&self.e(b)) != self.e(a + b).scale(&c) {
                    return Err(format!("E^({a}) E^({b}) != [a+b, a] E^({})", a + b));
                }
                if self.f(a).mul(&self.f(b)) != self.f(a + b).scale(&c) {
                    return Err(format!("F^({a}) F^({b}) != [a+b, a] F^({})", a + b));
                }
            }
        }
        let top = self.max_weight().map_or(0, |w| w.unsigned_abs() as usize);
        let bottom = self.blocks.keys().next().map_or(0, |w| w.unsigned_abs() as usize);
        let need = top.max(bottom);
        for j in need + 1..=self.maxdp() {
            if !self.e(j).is_zero() || !self.f(j).is_zero() {
                return Err(format!("divided power {j} beyond the weight range is nonzero"));
            }
        }
        Ok(())
    }

    /// Apply a square matrix to a sparse vector.
    pub fn apply(m: &Mat, v: &SparseVec) -> SparseVec {
        m.mul_vec(v)
    }

    /// Change of basis: columns of `q` are the new basis vectors and `q_inv` its inverse.
    pub fn rebase(&self, q: &Mat, q_inv: &Mat, weights: Vec<i64>) -> Self {
        let conj = |m: &Mat| q_inv.mul(m).mul(q);
        Self::from_parts(
            self.ctx.clone(),
            weights,
            self.e.iter().map(conj).collect(),
            self.f.iter().map(conj).collect(),
        )
    }

    /// The submodule (or subquotient) with basis the columns of `c`, where
    /// `l` is a left inverse of `c` on the span. Columns must be weight vectors.
    pub fn restrict(&self, c: &Mat, l: &Mat, weights: Vec<i64>) -> Self {
        let conj = |m: &Mat| l.mul(m).mul(c);
        Self::from_parts(
            self.ctx.clone(),
            weights,
            self.e.iter().map(conj).collect(),
            self.f.iter().map(conj).collect(),
        )
    }
}

/// Weyl module of highest weight i with basis m_0..m_i:
/// E^(j) m_k = [i-k+j, j] m_{k-j} and F^(j) m_k = [k+j, j] m_{k+j}.
pub fn weyl_module(i: u32, ctx: &ScalarContext) -> WeightModule {
    let n = i as usize + 1;
    let il = i as i64;
    let weights = (0..=il).map(|k| il - 2 * k).collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for j in 1..=i as usize {
        let ji = j as i64;
        e.push(Mat::from_triples(
            n,
            n,
            (j..n).map(|k| (k - j, k, ctx.qbinom(il - k as i64 + ji, j as u32))),
        ));
        f.push(Mat::from_triples(
            n,
            n,
            (0..n - j).map(|k| (k + j, k, ctx.qbinom(k as i64 + ji, j as u32))),
        ));
    }
    WeightModule::from_parts(ctx.clone(), weights, e, f)
}

/// The natural two-dimensional module.
pub fn natural_module(ctx: &ScalarContext) -> WeightModule {
    weyl_module(1, ctx)
}

/// Duality functor D: the dual space with (u f)(m) = f(theta(u) m),
/// theta = omega o S. In the dual basis u acts by the transpose of theta(u):
/// theta(E^(j)) = (-1)^j v^{j(j-1)} K^j F^(j),
/// theta(F^(j)) = (-1)^j v^{-j(j-1)} E^(j) K^{-j}.
pub fn dual_module(m: &WeightModule) -> WeightModule {
    let e = (1..=m.maxdp()).map(|j| theta_e(m, j).transpose()).collect();
    let f = (1..=m.maxdp()).map(|j| theta_f(m, j).transpose()).collect();
    WeightModule::from_parts(m.ctx().clone(), m.weights.clone(), e, f)
}

fn sign(ctx: &ScalarContext, j: usize) -> Scalar {
    if j.is_multiple_of(2) {
        ctx.one()
    } else {
        ctx.int(-1)
    }
}

/// Matrix of theta(E^(j)) = (-1)^j v^{j(j-1)} K^j F^(j) on m.
pub fn theta_e(m: &WeightModule, j: usize) -> Mat {
    let ctx = m.ctx();
    let ji = j as i64;
    let s = sign(ctx, j);
    m.f(j).scale_rows(|r| &s * &ctx.v_pow(ji * (ji - 1) + ji * m.weight(r)))
}

/// Matrix of theta(F^(j)) = (-1)^j v^{-j(j-1)} E^(j) K^{-j} on m.
pub fn theta_f(m: &WeightModule, j: usize) -> Mat {
    let ctx = m.ctx();
    let ji = j as i64;
    let s = sign(ctx, j);
    m.e(j)
        .scale_cols(|c| &s * &ctx.v_pow(-ji * (ji - 1) - ji * m.weight(c)))
}

/// Dual Weyl module nabla(i) = D(Delta(i)).
pub fn dual_weyl_module(i: u32, ctx: &ScalarContext) -> WeightModule {
    dual_module(&weyl_module(i, ctx))
}

/// Tensor product with basis index a * dim(N) + b. Divided powers use
/// Delta(E^(n)) = sum_{a+b=n} v^{ab} E^(a) K^b (x) E^(b) and
/// Delta(F^(n)) = sum_{a+b=n} v^{-ab} F^(a) (x) K^{-a} F^(b).
pub fn tensor(m: &WeightModule, n: &WeightModule) -> Result<WeightModule, UqError> {
    if m.ctx() != n.ctx() {
        return Err(UqError::ContextMismatch);
    }
    let ctx = m.ctx();
    let dn = n.dim();
    let weights: Vec<i64> = m
        .weights
        .iter()
        .flat_map(|&a| n.weights.iter().map(move |&b| a + b))
        .collect();
    let maxdp = weights.iter().map(|w| w.unsigned_abs() as usize).max().unwrap_or(0);
    let dim = weights.len();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for total in 1..=maxdp {
        let mut et = Vec::new();
        let mut ft = Vec::new();
        for a in 0..=total.min(m.maxdp()) {
            let b = total - a;
            if b > n.maxdp() {
                continue;
            }
            let (ma, nb) = (m.e(a), n.e(b));
            let (ai, bi) = (a as i64, b as i64);
            for (r1, c1, x1) in ma.triples() {
                let x1 = x1 * &ctx.v_pow(ai * bi + bi * m.weight(c1));
                for (r2, c2, x2) in nb.triples() {
                    et.push((r1 * dn + r2, c1 * dn + c2, &x1 * x2));
                }
            }
            let (ma, nb) = (m.f(a), n.f(b));
            for (r1, c1, x1) in ma.triples() {
                for (r2, c2, x2) in nb.triples() {
                    let coeff = ctx.v_pow(-ai * bi - ai * n.weight(r2));
                    ft.push((r1 * dn + r2, c1 * dn + c2, &(x1 * x2) * &coeff));
                }
            }
        }
        e.push(Mat::from_triples(dim, dim, et));
        f.push(Mat::from_triples(dim, dim, ft));
    }
    Ok(WeightModule::from_parts(ctx.clone(), weights, e, f))
}

/// V tensored with itself d times (d = 0 gives the trivial module).
pub fn tensor_power(base: &WeightModule, d: u32) -> Result<WeightModule, UqError> {
    let mut acc = weyl_module(0, base.ctx());
    for _ in 0..d {
        acc = tensor(&acc, base)?;
    }
    Ok(acc)
}

/// Divided powers recomputed as E^n / [n]! and F^n / [n]! on a generic
/// module; fails if a quotient leaves Z[v, v^-1].
pub fn divided_powers_by_division(m: &WeightModule) -> Result<(Vec<Mat>, Vec<Mat>), UqError> {
    if !m.ctx().is_generic() {
        return Err(UqError::ContextMismatch);
    }
    let ctx = m.ctx();
    let divide = |g: &Mat| -> Result<Vec<Mat>, UqError> {
        let mut out = Vec::new();
        let mut power = g.clone();
        for n in 1..=m.maxdp() {
            if n > 1 {
                power = power.mul(g);
            }
            let fact = ctx.qfact(n as u32).inv().map_err(|_| UqError::IntegralityFailure)?;
            let q = power.scale(&fact);
            if q.triples().any(|(_, _, x)| x.as_laurent().is_none()) {
                return Err(UqError::IntegralityFailure);
            }
            out.push(q);
        }
        Ok(out)
    };
    Ok((divide(&m.e(1))?, divide(&m.f(1))?))
}

/// Specialize every structure constant of a generic module.
pub fn specialize_module(m: &WeightModule, ctx: &ScalarContext) -> Result<WeightModule, UqError> {
    let sp = |x: &Scalar| ctx.specialize(x).map_err(|_| UqError::IntegralityFailure);
    let e = m.e.iter().map(|a| a.try_map(sp)).collect::<Result<_, _>>()?;
    let f = m.f.iter().map(|a| a.try_map(sp)).collect::<Result<_, _>>()?;
    Ok(WeightModule::from_parts(ctx.clone(), m.weights.clone(), e, f))
}
