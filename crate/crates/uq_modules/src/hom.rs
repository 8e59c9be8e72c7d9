//! Intertwiner spaces, solved through generators of the source module.
//!
//! The source M is spanned by the vectors F^(k) g_t for a set of weight
//! generators g_t. A module map X is determined by the images y_t = X g_t,
//! which must respect (a) every linear relation among the spanning vectors
//! and (b) the expansion of each E^(j) g_t in the spanning vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use scalar_arith::linalg::{inverse, sparse_get};
use scalar_arith::{Echelon, Mat, Scalar, SparseVec};

use crate::module::WeightModule;
use crate::UqError;

/// Spanning data of one weight space of the source.
#[derive(Clone, Debug)]
pub struct WeightSpan {
    /// Spanning vectors F^(k) g_t, as (t, k).
    pub terms: Vec<(usize, usize)>,
    /// Indices into `terms` of a basis of the weight space.
    pub basis_terms: Vec<usize>,
    /// Coordinates: row b gives basis term b in terms of block positions' dual,
    /// i.e. coords * (block vector) = coefficients on the basis terms.
    pub coords: Mat,
    /// Linear relations among the spanning vectors, over term indices.
    pub relations: Vec<SparseVec>,
}

/// Weight generators of a module together with the spanning data.
#[derive(Clone, Debug)]
pub struct GeneratorData {
    pub gens: Vec<usize>,
    pub gen_weights: Vec<i64>,
    pub spans: BTreeMap<i64, WeightSpan>,
    /// For each generator t: (j, coefficients over term indices at weight w_t + 2j).
    pub e_expr: Vec<Vec<(usize, SparseVec)>>,
}

fn to_block(m: &WeightModule, v: &SparseVec) -> SparseVec {
    let mut out: SparseVec = v.iter().map(|(i, x)| (m.pos_in_block(*i), x.clone())).collect();
    out.sort_by_key(|e| e.0);
    out
}

fn from_block(m: &WeightModule, w: i64, v: &SparseVec) -> SparseVec {
    let b = m.block(w);
    v.iter().map(|(s, x)| (b[*s], x.clone())).collect()
}

impl GeneratorData {
    pub fn new(m: &WeightModule) -> Self {
        let one = m.ctx().one();
        let mut gens: Vec<usize> = Vec::new();
        let mut gen_weights: Vec<i64> = Vec::new();
        let mut spans = BTreeMap::new();
        let mut term_vectors: BTreeMap<i64, Vec<SparseVec>> = BTreeMap::new();
        for w in m.weight_list() {
            let dim_w = m.block_dim(w);
            let mut terms = Vec::new();
            let mut vectors: Vec<SparseVec> = Vec::new();
            for (t, (&g, &gw)) in gens.iter().zip(&gen_weights).enumerate() {
                if gw <= w || (gw - w) % 2 != 0 {
                    continue;
                }
                let k = ((gw - w) / 2) as usize;
                let col = m.f_ref(k).map(|f| f.column(g)).unwrap_or_default();
                terms.push((t, k));
                vectors.push(to_block(m, &col));
            }
            let mut ech = Echelon::new(dim_w);
            let mut basis_terms = Vec::new();
            for (i, v) in vectors.iter().enumerate() {
                if ech.insert(v).is_some() {
                    basis_terms.push(i);
                }
            }
            for (s, &i) in m.block(w).iter().enumerate() {
                let e = vec![(s, one.clone())];
                if ech.insert(&e).is_some() {
                    gens.push(i);
                    gen_weights.push(w);
                    basis_terms.push(terms.len());
                    terms.push((gens.len() - 1, 0));
                    vectors.push(e);
                }
            }
            let p = Mat::from_columns(
                dim_w,
                &basis_terms.iter().map(|&i| vectors[i].clone()).collect::<Vec<_>>(),
            );
            let coords = inverse(&p, &one).expect("spanning vectors contain a basis");
            let relations = (0..terms.len())
                .filter(|i| !basis_terms.contains(i))
                .map(|i| {
                    let c = coords.mul_vec(&vectors[i]);
                    let mut rel: BTreeMap<usize, Scalar> = BTreeMap::new();
                    rel.insert(i, one.clone());
                    for (b, x) in c {
                        rel.insert(basis_terms[b], x.neg_ref());
                    }
                    rel.into_iter().collect()
                })
                .collect();
            term_vectors.insert(w, vectors);
            spans.insert(
                w,
                WeightSpan {
                    terms,
                    basis_terms,
                    coords,
                    relations,
                },
            );
        }
        let e_expr = gens
            .iter()
            .zip(&gen_weights)
            .map(|(&g, &gw)| {
                (1..=m.maxdp())
                    .map(|j| {
                        let target = gw + 2 * j as i64;
                        let expr = match (spans.get(&target), m.e_ref(j)) {
                            (Some(span), Some(e)) => {
                                let v = to_block(m, &e.column(g));
                                span.coords
                                    .mul_vec(&v)
                                    .into_iter()
                                    .map(|(b, x)| (span.basis_terms[b], x))
                                    .collect()
                            }
                            _ => Vec::new(),
                        };
                        (j, expr)
                    })
                    .collect()
            })
            .collect();
        Self {
            gens,
            gen_weights,
            spans,
            e_expr,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }
}

/// Linear system for Hom(M, N) in the unknowns y_t, laid out in a chosen generator order.
struct HomSystem<'a> {
    m: &'a WeightModule,
    n: &'a WeightModule,
    data: &'a GeneratorData,
    offsets: Vec<usize>,
    total: usize,
}

impl<'a> HomSystem<'a> {
    fn new(m: &'a WeightModule, n: &'a WeightModule, data: &'a GeneratorData, order: &[usize]) -> Self {
        let mut offsets = vec![0; data.gens.len()];
        let mut total = 0;
        for &t in order {
            offsets[t] = total;
            total += n.block_dim(data.gen_weights[t]);
        }
        Self {
            m,
            n,
            data,
            offsets,
            total,
        }
    }

    fn size(&self, t: usize) -> usize {
        self.n.block_dim(self.data.gen_weights[t])
    }

    /// Add coef * op(y_t) into rows indexed by N_w, where op is E^(j) (raise)
    /// or F^(k) (lower) of N, or the identity.
    fn add(&self, rows: &mut [BTreeMap<usize, Scalar>], w: i64, coef: &Scalar, op: Option<&Mat>, t: usize) {
        let wt = self.data.gen_weights[t];
        let off = self.offsets[t];
        for (r, &row_idx) in self.n.block(w).iter().enumerate() {
            match op {
                None => {
                    if w == wt {
                        add_entry(&mut rows[r], off + r, coef.clone());
                    }
                }
                Some(op) => {
                    for (c, x) in op.row(row_idx) {
                        if self.n.weight(*c) == wt {
                            add_entry(&mut rows[r], off + self.n.pos_in_block(*c), coef * x);
                        }
                    }
                }
            }
        }
    }

    /// Add coef * F^(k) y_t; F^(k) vanishes beyond the divided powers carried by N.
    fn add_lowered(&self, rows: &mut [BTreeMap<usize, Scalar>], w: i64, coef: &Scalar, k: usize, t: usize) {
        match k {
            0 => self.add(rows, w, coef, None, t),
            _ => {
                if let Some(f) = self.n.f_ref(k) {
                    self.add(rows, w, coef, Some(f), t);
                }
            }
        }
    }

    fn equations(&self) -> Vec<SparseVec> {
        let ctx = self.m.ctx();
        let one = ctx.one();
        let mut out = Vec::new();
        let flush = |rows: Vec<BTreeMap<usize, Scalar>>, out: &mut Vec<SparseVec>| {
            for r in rows {
                let v: SparseVec = r.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !v.is_empty() {
                    out.push(v);
                }
            }
        };
        for (&w, span) in &self.data.spans {
            let dim = self.n.block_dim(w);
            if dim == 0 {
                continue;
            }
            for rel in &span.relations {
                let mut rows = vec![BTreeMap::new(); dim];
                for (i, c) in rel {
                    let (t, k) = span.terms[*i];
                    self.add_lowered(&mut rows, w, c, k, t);
                }
                flush(rows, &mut out);
            }
        }
        let empty: SparseVec = Vec::new();
        for (t, exprs) in self.data.e_expr.iter().enumerate() {
            let wt = self.data.gen_weights[t];
            for j in 1..=self.n.maxdp() {
                let target = wt + 2 * j as i64;
                let dim = self.n.block_dim(target);
                if dim == 0 {
                    continue;
                }
                let expr = exprs.get(j - 1).map_or(&empty, |e| &e.1);
                let mut rows = vec![BTreeMap::new(); dim];
                if let Some(e) = self.n.e_ref(j) {
                    self.add(&mut rows, target, &one, Some(e), t);
                }
                for (i, c) in expr {
                    let span = &self.data.spans[&target];
                    let (s, k) = span.terms[*i];
                    self.add_lowered(&mut rows, target, &c.neg_ref(), k, s);
                }
                flush(rows, &mut out);
            }
            // F^(k) g_t = 0 below the weights of M
            for k in 1..=self.n.maxdp() {
                let w = wt - 2 * k as i64;
                let dim = self.n.block_dim(w);
                if dim == 0 || self.data.spans.contains_key(&w) {
                    continue;
                }
                let mut rows = vec![BTreeMap::new(); dim];
                self.add_lowered(&mut rows, w, &one, k, t);
                flush(rows, &mut out);
            }
        }
        out
    }

    /// Build the module map from a full solution vector.
    fn assemble(&self, y: &SparseVec) -> Mat {
        let mut images: Vec<SparseVec> = Vec::new();
        for t in 0..self.data.gens.len() {
            let wt = self.data.gen_weights[t];
            let off = self.offsets[t];
            let size = self.size(t);
            let block: SparseVec = y
                .iter()
                .filter(|(i, _)| *i >= off && *i < off + size)
                .map(|(i, x)| (i - off, x.clone()))
                .collect();
            images.push(from_block(self.n, wt, &block));
        }
        let mut triples = Vec::new();
        for (&w, span) in &self.data.spans {
            let term_images: Vec<SparseVec> = span
                .basis_terms
                .iter()
                .map(|&b| {
                    let (t, k) = span.terms[b];
                    match k {
                        0 => images[t].clone(),
                        _ => self.n.f_ref(k).map(|f| f.mul_vec(&images[t])).unwrap_or_default(),
                    }
                })
                .collect();
            let cols = span.coords.transpose();
            for (s, &col_idx) in self.m.block(w).iter().enumerate() {
                for (b, c) in cols.row(s) {
                    for (r, x) in &term_images[*b] {
                        triples.push((*r, col_idx, c * x));
                    }
                }
            }
        }
        Mat::from_triples(self.n.dim(), self.m.dim(), triples)
    }
}

fn add_entry(row: &mut BTreeMap<usize, Scalar>, col: usize, x: Scalar) {
    if x.is_zero() {
        return;
    }
    match row.get_mut(&col) {
        Some(y) => *y += &x,
        None => {
            row.insert(col, x);
        }
    }
}

/// A module map M -> N.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub source: Arc<WeightModule>,
    pub target: Arc<WeightModule>,
    pub matrix: Mat,
}

impl Intertwiner {
    pub fn is_module_map(&self) -> bool {
        is_module_map(&self.matrix, &self.source, &self.target)
    }
}

/// Does X commute with K and every divided power?
pub fn is_module_map(x: &Mat, m: &WeightModule, n: &WeightModule) -> bool {
    if x.nrows() != n.dim() || x.ncols() != m.dim() {
        return false;
    }
    if x.triples().any(|(r, c, _)| n.weight(r) != m.weight(c)) {
        return false;
    }
    (1..=m.maxdp().max(n.maxdp())).all(|j| n.e(j).mul(x) == x.mul(&m.e(j)) && n.f(j).mul(x) == x.mul(&m.f(j)))
}

/// Ordered basis of Hom(M, N).
pub fn hom_space(m: &WeightModule, n: &WeightModule) -> Result<Vec<Mat>, UqError> {
    hom_space_with(m, n, &GeneratorData::new(m))
}

pub fn hom_space_with(m: &WeightModule, n: &WeightModule, data: &GeneratorData) -> Result<Vec<Mat>, UqError> {
    if m.ctx() != n.ctx() {
        return Err(UqError::ContextMismatch);
    }
    let order: Vec<usize> = (0..data.gens.len()).collect();
    let sys = HomSystem::new(m, n, data, &order);
    let mut ech = Echelon::new(sys.total);
    for row in sys.equations() {
        ech.insert(&row);
    }
    let basis: Vec<Mat> = ech.nullspace(&m.ctx().one()).iter().map(|y| sys.assemble(y)).collect();
    debug_assert!(basis.iter().all(|x| is_module_map(x, m, n)));
    Ok(basis)
}

/// Intertwiners wrapped with their modules.
pub fn hom_space_intertwiners(m: &Arc<WeightModule>, n: &Arc<WeightModule>) -> Result<Vec<Intertwiner>, UqError> {
    Ok(hom_space(m, n)?
        .into_iter()
        .map(|matrix| Intertwiner {
            source: m.clone(),
            target: n.clone(),
            matrix,
        })
        .collect())
}

/// Extends a prescribed image of the first generator of M to a module map
/// M -> N, with all free parameters set to zero.
pub struct LiftSolver<'a> {
    sys: HomSystem<'a>,
    first: usize,
    first_size: usize,
    /// Rows with pivot in the free part: (pivot column, coefficients on y_0).
    solved: Vec<(usize, SparseVec)>,
    /// Conditions on y_0 alone.
    conditions: Vec<SparseVec>,
}

impl<'a> LiftSolver<'a> {
    pub fn new(m: &'a WeightModule, n: &'a WeightModule, data: &'a GeneratorData) -> Result<Self, UqError> {
        if m.ctx() != n.ctx() {
            return Err(UqError::ContextMismatch);
        }
        let mut order: Vec<usize> = (1..data.gens.len()).collect();
        order.push(0);
        let sys = HomSystem::new(m, n, data, &order);
        let first = sys.offsets[0];
        let first_size = sys.size(0);
        let mut ech = Echelon::new(sys.total);
        for row in sys.equations() {
            ech.insert(&row);
        }
        let mut solved = Vec::new();
        let mut conditions = Vec::new();
        for row in ech.sorted_rows() {
            let pivot = row[0].0;
            let tail: SparseVec = row
                .iter()
                .filter(|(j, _)| *j >= first)
                .map(|(j, x)| (j - first, x.clone()))
                .collect();
            if pivot < first {
                solved.push((pivot, tail));
            } else {
                conditions.push(tail);
            }
        }
        Ok(Self {
            sys,
            first,
            first_size,
            solved,
            conditions,
        })
    }

    /// The lift X with X g_0 = target (a vector of N of the first generator's weight).
    pub fn lift(&self, target: &SparseVec) -> Result<Mat, UqError> {
        let w0 = self.sys.data.gen_weights[0];
        if target.iter().any(|(i, _)| self.sys.n.weight(*i) != w0) {
            return Err(UqError::LiftUnsolvable);
        }
        let y0 = to_block(self.sys.n, target);
        debug_assert!(y0.iter().all(|(s, _)| *s < self.first_size));
        let dot = |row: &SparseVec| -> Scalar {
            let mut acc = self.sys.m.ctx().zero();
            for (j, x) in row {
                if let Some(y) = sparse_get(&y0, *j) {
                    acc += &(x * y);
                }
            }
            acc
        };
        if self.conditions.iter().any(|c| !dot(c).is_zero()) {
            return Err(UqError::LiftUnsolvable);
        }
        let mut y: SparseVec = self
            .solved
            .iter()
            .filter_map(|(p, row)| {
                let v = dot(row);
                (!v.is_zero()).then(|| (*p, v.neg_ref()))
            })
            .collect();
        y.extend(y0.iter().map(|(s, x)| (self.first + s, x.clone())));
        y.sort_by_key(|e| e.0);
        let x = self.sys.assemble(&y);
        debug_assert!(is_module_map(&x, self.sys.m, self.sys.n));
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::*;
    use scalar_arith::ScalarContext;

    #[test]
    fn small_hom_dimensions() {
        let g = ScalarContext::Generic;
        let l3 = ScalarContext::cyclotomic(3).unwrap();
        let v3g = tensor_power(&natural_module(&g), 3).unwrap();
        let v3c = tensor_power(&natural_module(&l3), 3).unwrap();
        assert_eq!(hom_space(&weyl_module(1, &g), &v3g).unwrap().len(), 2);
        assert_eq!(hom_space(&weyl_module(3, &l3), &v3c).unwrap().len(), 1);
        assert_eq!(hom_space(&weyl_module(0, &g), &weyl_module(2, &g)).unwrap().len(), 0);
        assert_eq!(
            hom_space(&weyl_module(3, &l3), &dual_weyl_module(3, &l3))
                .unwrap()
                .len(),
            1
        );
        for x in hom_space(&v3c, &v3c).unwrap() {
            assert!(is_module_map(&x, &v3c, &v3c));
        }
        assert_eq!(hom_space(&v3c, &v3c).unwrap().len(), 5);
        assert_eq!(hom_space(&v3g, &v3g).unwrap().len(), 5);
    }

    #[test]
    fn lift_identity() {
        let ctx = ScalarContext::cyclotomic(3).unwrap();
        let v2 = tensor_power(&natural_module(&ctx), 2).unwrap();
        let data = GeneratorData::new(&v2);
        let solver = LiftSolver::new(&v2, &v2, &data).unwrap();
        let top = vec![(data.gens[0], ctx.one())];
        let x = solver.lift(&top).unwrap();
        assert!(is_module_map(&x, &v2, &v2));
    }
}
