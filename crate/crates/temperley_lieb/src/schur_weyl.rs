//! The Schur-Weyl map Phi: TL_d(delta) -> End(V^(x)d).
//!
//! Phi(U_i) is cup o cap on the factors i, i+1, with
//! cap(m_1 (x) m_0) = v, cap(m_0 (x) m_1) = -1 and
//! cup(1) = m_1 (x) m_0 - v^-1 m_0 (x) m_1, so that cap o cup = [2].
//! A diagram is sent to the product of the images of a word in the U_i that
//! produces it without closed loops.

use std::collections::{BTreeMap, VecDeque};

use scalar_arith::linalg::inverse;
use scalar_arith::{Echelon, Mat, ScalarContext, SparseVec};

use crate::diagram::{tl_basis, TLDiagram, Tangle};
use crate::element::TLElement;
use crate::TlError;

/// cap: V (x) V -> trivial, as a 1 x 4 matrix.
pub fn cap_matrix(ctx: &ScalarContext) -> Mat {
    Mat::from_triples(1, 4, [(0, 1, ctx.int(-1)), (0, 2, ctx.v())])
}

/// cup: trivial -> V (x) V, as a 4 x 1 matrix.
pub fn cup_matrix(ctx: &ScalarContext) -> Mat {
    Mat::from_triples(4, 1, [(1, 0, ctx.v_pow(-1).neg_ref()), (2, 0, ctx.one())])
}

/// Phi(U_i) on V^(x)d.
pub fn u_matrix(d: usize, i: usize, ctx: &ScalarContext) -> Mat {
    let one = ctx.one();
    let u = cup_matrix(ctx).mul(&cap_matrix(ctx));
    Mat::identity(1 << (i - 1), &one)
        .kron(&u)
        .kron(&Mat::identity(1 << (d - i - 1), &one))
}

/// Images of all diagrams of TL_d.
#[derive(Clone, Debug)]
pub struct SchurWeyl {
    pub d: usize,
    ctx: ScalarContext,
    images: BTreeMap<TLDiagram, Mat>,
    positions: Vec<(usize, usize)>,
    /// Inverse of (image of diagram e at position p), when Phi is injective.
    inv: Option<Mat>,
    order: Vec<TLDiagram>,
}

impl SchurWeyl {
    pub fn new(d: usize, ctx: &ScalarContext) -> Self {
        let n = 1usize << d;
        let mut images = BTreeMap::new();
        images.insert(Tangle::identity(d), Mat::identity(n, &ctx.one()));
        let us: Vec<(Tangle, Mat)> = (1..d)
            .map(|i| (Tangle::u(d, i).expect("valid generator"), u_matrix(d, i, ctx)))
            .collect();
        let mut queue = VecDeque::from([Tangle::identity(d)]);
        while let Some(t) = queue.pop_front() {
            for (u, m) in &us {
                let (next, loops) = u.compose(&t).expect("square diagrams");
                if loops == 0 && !images.contains_key(&next) {
                    let image = m.mul(&images[&t]);
                    images.insert(next.clone(), image);
                    queue.push_back(next);
                }
            }
        }
        let order: Vec<TLDiagram> = tl_basis(d).iter().cloned().collect();
        let mut by_position: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (e, t) in order.iter().enumerate() {
            for (r, c, x) in images[t].triples() {
                by_position.entry((r, c)).or_default().push((e, x.clone()));
            }
        }
        let mut ech = Echelon::new(order.len());
        let mut positions = Vec::new();
        let mut rows = Vec::new();
        for (p, row) in by_position {
            if ech.insert(&row).is_some() {
                positions.push(p);
                rows.push(row);
            }
        }
        let inv = (positions.len() == order.len())
            .then(|| inverse(&Mat::from_rows(order.len(), rows), &ctx.one()))
            .flatten();
        Self {
            d,
            ctx: ctx.clone(),
            images,
            positions,
            inv,
            order,
        }
    }

    pub fn ctx(&self) -> &ScalarContext {
        &self.ctx
    }

    /// Rank of the images of the diagram basis.
    pub fn rank(&self) -> usize {
        self.positions.len()
    }

    pub fn is_injective(&self) -> bool {
        self.inv.is_some()
    }

    pub fn diagram_image(&self, t: &TLDiagram) -> &Mat {
        &self.images[t]
    }

    pub fn image(&self, x: &TLElement) -> Mat {
        let n = 1usize << self.d;
        x.terms()
            .iter()
            .fold(Mat::zeros(n, n), |acc, (t, c)| acc.axpy(c, &self.images[t]))
    }

    /// The element x with Phi(x) = m, for m in the image.
    pub fn preimage(&self, m: &Mat) -> Result<TLElement, TlError> {
        let inv = self.inv.as_ref().ok_or(TlError::NotInImage)?;
        let values: SparseVec = self
            .positions
            .iter()
            .enumerate()
            .filter_map(|(k, &(r, c))| m.get(r, c).map(|v| (k, v.clone())))
            .collect();
        let coords = inv.mul_vec(&values);
        let x = TLElement::from_terms(
            &self.ctx,
            self.d,
            self.d,
            coords.into_iter().map(|(e, c)| (self.order[e].clone(), c)),
        );
        if &self.image(&x) != m {
            return Err(TlError::NotInImage);
        }
        Ok(x)
    }
}

pub fn schur_weyl(x: &TLElement) -> Mat {
    SchurWeyl::new(x.bottom(), x.ctx()).image(x)
}
