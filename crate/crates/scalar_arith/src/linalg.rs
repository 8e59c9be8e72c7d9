//! Exact sparse matrices and reduced row echelon forms.
//!
//! Elimination is deterministic: the pivot of a row is its first nonzero
//! column, pivot rows are scaled to a leading one and kept fully reduced.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Sparse vector: sorted (index, value) pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize, zero: &Scalar) -> Vec<Scalar> {
    let mut out = vec![zero.clone(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparse_scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// a + c * b
pub fn sparse_axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let y = c * &b[j].1;
            if !y.is_zero() {
                out.push((b[j].0, y));
            }
            j += 1;
        } else {
            let y = &a[i].1 + &(c * &b[j].1);
            if !y.is_zero() {
                out.push((a[i].0, y));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_get(v: &SparseVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Option<Scalar> {
    let (mut i, mut j) = (0, 0);
    let mut acc: Option<Scalar> = None;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let t = &a[i].1 * &b[j].1;
                acc = Some(match acc {
                    None => t,
                    Some(s) => &s + &t,
                });
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, one: &Scalar) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        Self {
            rows: n,
            cols: n,
            data: diag
                .into_iter()
                .enumerate()
                .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
                .collect(),
        }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.iter().all(|(j, x)| *j < cols && !x.is_zero())));
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Build from arbitrary (row, col, value) triples; duplicates are summed.
    pub fn from_triples(rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, x) in triples {
            buckets[i].push((j, x));
        }
        let data = buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by_key(|e| e.0);
                let mut out: SparseVec = Vec::with_capacity(b.len());
                for (j, x) in b {
                    match out.last_mut() {
                        Some(last) if last.0 == j => last.1 = &last.1 + &x,
                        _ => out.push((j, x)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        Self { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| sparse_from_dense(r)).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let triples = columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x.clone())));
        Self::from_triples(rows, columns.len(), triples)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseVec> {
        self.data.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        sparse_get(&self.data[i], j)
    }

    pub fn entry(&self, i: usize, j: usize, zero: &Scalar) -> Scalar {
        self.get(i, j).cloned().unwrap_or_else(|| zero.clone())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| sparse_get(r, j).map(|x| (i, x.clone())))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                data[*j].push((i, x.clone()));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut acc: Vec<Option<Scalar>> = vec![None; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let data = self
            .data
            .iter()
            .map(|r| {
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        let t = a * b;
                        match &mut acc[*j] {
                            Some(s) => *s = &*s + &t,
                            slot @ None => {
                                *slot = Some(t);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let row: SparseVec = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|x| !x.is_zero()).map(|x| (j, x)))
                    .collect();
                row
            })
            .collect();
        Self {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            if let Some(x) = sparse_dot(r, v) {
                if !x.is_zero() {
                    out.push((i, x));
                }
            }
        }
        out
    }

    fn zip_rows(&self, other: &Self, c: &Scalar) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix dimension mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| sparse_axpy(a, c, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match other.data.iter().flatten().next() {
            None => self.clone(),
            Some((_, x)) => self.zip_rows(other, &x.one_like()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match other.data.iter().flatten().next() {
            None => self.clone(),
            Some((_, x)) => self.zip_rows(other, &x.one_like().neg_ref()),
        }
    }

    /// self + c * other
    pub fn axpy(&self, c: &Scalar, other: &Self) -> Self {
        self.zip_rows(other, c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| sparse_scale(r, c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg_ref())
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(j, x)| (*j, f(x)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn try_map<E>(&self, f: impl Fn(&Scalar) -> Result<Scalar, E>) -> Result<Self, E> {
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            let mut row = Vec::with_capacity(r.len());
            for (j, x) in r {
                let y = f(x)?;
                if !y.is_zero() {
                    row.push((*j, y));
                }
            }
            data.push(row);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Kronecker product, index (i, j) -> i * other.rows + j.
    pub fn kron(&self, other: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * other.cols + jb, a * b));
                    }
                }
                data.push(row);
            }
        }
        Self {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    /// Rows scaled by the given factors (left multiplication by a diagonal).
    pub fn scale_rows(&self, f: impl Fn(usize) -> Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    if r.is_empty() {
                        return Vec::new();
                    }
                    let c = f(i);
                    sparse_scale(r, &c)
                })
                .collect(),
        }
    }

    pub fn scale_cols(&self, f: impl Fn(usize) -> Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(j, x)| (*j, x * &f(*j)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    /// Submatrix with the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut colmap = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            colmap[c] = k;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut r: SparseVec = self.data[i]
                    .iter()
                    .filter(|(j, _)| colmap[*j] != usize::MAX)
                    .map(|(j, x)| (colmap[*j], x.clone()))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Place this matrix into a larger zero matrix at the given row/column indices.
    pub fn embed(&self, rows: usize, cols: usize, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let triples = self
            .triples()
            .map(|(i, j, x)| (row_idx[i], col_idx[j], x.clone()))
            .collect::<Vec<_>>();
        Self::from_triples(rows, cols, triples)
    }

    pub fn to_dense(&self, zero: &Scalar) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| sparse_to_dense(r, self.cols, zero)).collect()
    }

    /// Row-major flattening as a sparse vector of length rows * cols.
    pub fn flatten(&self) -> SparseVec {
        self.triples().map(|(i, j, x)| (i * self.cols + j, x.clone())).collect()
    }

    pub fn trace_zero_like(&self) -> Option<Scalar> {
        self.data.iter().flatten().next().map(|(_, x)| x.zero_like())
    }
}

/// Incrementally built reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(j, x)| self.pivot_row[*j].map(|r| (r, x.clone())))
            .collect();
        for (r, c) in hits {
            out = sparse_axpy(&out, &c.neg_ref(), &self.rows[r]);
        }
        out
    }

    /// Insert a row; returns the new pivot column if it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let red = self.reduce(v);
        let (pc, lead) = red.first()?.clone();
        let inv = lead.inv().expect("nonzero pivot");
        let red = sparse_scale(&red, &inv);
        for row in self.rows.iter_mut() {
            if let Some(c) = sparse_get(row, pc).cloned() {
                *row = sparse_axpy(row, &c.neg_ref(), &red);
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(red);
        Some(pc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Pivot columns in ascending order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&j| self.pivot_row[j].is_some()).collect()
    }

    /// Rows sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        self.pivots()
            .into_iter()
            .map(|j| self.rows[self.pivot_row[j].unwrap()].clone())
            .collect()
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row[col].map(|r| &self.rows[r])
    }

    /// Basis of the solution space of the homogeneous system whose equations
    /// are the inserted rows, one vector per free column in ascending order.
    pub fn nullspace(&self, one: &Scalar) -> Vec<SparseVec> {
        let free: Vec<usize> = (0..self.ncols).filter(|&j| self.pivot_row[j].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut v: SparseVec = Vec::new();
                for j in 0..self.ncols {
                    if j == f {
                        v.push((j, one.clone()));
                    } else if let Some(r) = self.pivot_row[j] {
                        if let Some(x) = sparse_get(&self.rows[r], f) {
                            v.push((j, x.neg_ref()));
                        }
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank_of_rows(rows: &[SparseVec], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn rank(m: &Mat) -> usize {
    rank_of_rows(&m.data, m.cols)
}

/// Solve A X = B, returning the particular solution with free variables zero.
pub fn solve(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.rows, b.rows);
    let n = a.cols;
    let mut e = Echelon::new(n + b.cols);
    for i in 0..a.rows {
        let mut row = a.data[i].clone();
        row.extend(b.data[i].iter().map(|(j, x)| (n + j, x.clone())));
        e.insert(&row);
    }
    if e.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    let mut data: Vec<SparseVec> = vec![Vec::new(); n];
    for p in e.pivots() {
        data[p] = e
            .pivot_row_of(p)
            .unwrap()
            .iter()
            .filter(|(j, _)| *j >= n)
            .map(|(j, x)| (j - n, x.clone()))
            .collect();
    }
    Some(Mat::from_rows(b.cols, data))
}

pub fn inverse(a: &Mat, one: &Scalar) -> Option<Mat> {
    if a.rows != a.cols {
        return None;
    }
    if rank(a) != a.rows {
        return None;
    }
    solve(a, &Mat::identity(a.rows, one))
}

/// Basis (in echelon form) of the null space of A.
pub fn kernel(a: &Mat, one: &Scalar) -> Vec<SparseVec> {
    let mut e = Echelon::new(a.cols);
    for r in &a.data {
        e.insert(r);
    }
    e.nullspace(one)
}
