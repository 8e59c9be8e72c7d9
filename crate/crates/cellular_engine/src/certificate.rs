//! Rank certificates for the cellular basis that avoid forming c_ij.
//!
//! For random vectors u_k, x_k over F_p the functionals
//! c_ij -> u_k^T c_ij x_k = (u_k^T gbar_i)(fbar_j x_k) are evaluated through
//! the factors. Reduction to F_p is a ring map, so full rank of the reduced
//! functional matrix proves linear independence over the original field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_arith::linalg::rank;
use scalar_arith::modp::{rank_mod_p, ModpMap};
use scalar_arith::Mat;
use serde::Serialize;

use crate::CellDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateMethod {
    /// Full rank of a reduction modulo a prime.
    Modular { prime: u64 },
    /// Exact elimination over the scalar field.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub size: usize,
    pub rank: usize,
    pub method: CertificateMethod,
}

impl RankCertificate {
    pub fn full_rank(&self) -> bool {
        self.rank == self.size
    }
}

fn reduce(m: &Mat, map: &ModpMap) -> Option<Vec<(usize, usize, u64)>> {
    m.triples().map(|(r, c, x)| map.reduce(x).map(|v| (r, c, v))).collect()
}

/// Rank of the reduced functional matrix, or None if some entry has a
/// denominator divisible by p.
fn modular_rank(cd: &CellDatum, seed: u64) -> Option<(usize, u64)> {
    let map = ModpMap::new(cd.ctx(), seed);
    let p = map.p;
    let n = cd.len();
    let dim = cd.module.dim();
    let funcs = n + 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let u: Vec<Vec<u64>> = (0..funcs)
        .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    let x: Vec<Vec<u64>> = (0..funcs)
        .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    let mut rows = Vec::with_capacity(n);
    for cell in &cd.cells {
        let t = cell.model.dim();
        // a[i][k] = u_k^T gbar_i and b[j][k] = fbar_j x_k, vectors of length t
        let mut a = Vec::new();
        for g in &cell.g_lift {
            let g = reduce(g, &map)?;
            a.push(
                (0..funcs)
                    .map(|k| {
                        let mut v = vec![0u64; t];
                        for &(r, c, z) in &g {
                            v[c] = (v[c] + u[k][r] * z % p) % p;
                        }
                        v
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let mut b = Vec::new();
        for f in &cell.f_lift {
            let f = reduce(f, &map)?;
            b.push(
                (0..funcs)
                    .map(|k| {
                        let mut v = vec![0u64; t];
                        for &(r, c, z) in &f {
                            v[r] = (v[r] + z * x[k][c] % p) % p;
                        }
                        v
                    })
                    .collect::<Vec<_>>(),
            );
        }
        for ai in &a {
            for bj in &b {
                rows.push(
                    (0..funcs)
                        .map(|k| ai[k].iter().zip(&bj[k]).fold(0u64, |acc, (s, t)| (acc + s * t % p) % p))
                        .collect(),
                );
            }
        }
    }
    Some((rank_mod_p(rows, p), p))
}

/// Certify that the cellular basis is linearly independent. A few seeds are
/// tried modulo primes; if none certifies full rank the exact rank is used.
pub fn certify_basis_rank(cd: &CellDatum, seed: u64) -> RankCertificate {
    let size = cd.len();
    for attempt in 0..3 {
        if let Some((r, prime)) = modular_rank(cd, seed.wrapping_add(attempt)) {
            if r == size {
                return RankCertificate {
                    size,
                    rank: r,
                    method: CertificateMethod::Modular { prime },
                };
            }
        }
    }
    let dim = cd.module.dim();
    let rows: Vec<_> = cd.elements().iter().map(Mat::flatten).collect();
    RankCertificate {
        size,
        rank: rank(&Mat::from_rows(dim * dim, rows)),
        method: CertificateMethod::Exact,
    }
}
