//! Linear combinations of tangles with circles evaluated to delta = [2].

use std::collections::BTreeMap;

use scalar_arith::text::to_text;
use scalar_arith::{Scalar, ScalarContext};

use crate::diagram::Tangle;
use crate::TlError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    ctx: ScalarContext,
    bottom: usize,
    top: usize,
    terms: BTreeMap<Tangle, Scalar>,
}

impl TLElement {
    pub fn zero(ctx: &ScalarContext, bottom: usize, top: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            bottom,
            top,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tangle(ctx: &ScalarContext, t: Tangle) -> Self {
        Self::from_terms(ctx, t.bottom(), t.top(), [(t, ctx.one())])
    }

    pub fn from_terms(
        ctx: &ScalarContext,
        bottom: usize,
        top: usize,
        terms: impl IntoIterator<Item = (Tangle, Scalar)>,
    ) -> Self {
        let mut out = Self::zero(ctx, bottom, top);
        for (t, c) in terms {
            assert_eq!((t.bottom(), t.top()), (bottom, top), "tangle boundary mismatch");
            out.add_term(t, &c);
        }
        out
    }

    pub fn identity(ctx: &ScalarContext, d: usize) -> Self {
        Self::from_tangle(ctx, Tangle::identity(d))
    }

    pub fn u(ctx: &ScalarContext, d: usize, i: usize) -> Result<Self, TlError> {
        Ok(Self::from_tangle(ctx, Tangle::u(d, i)?))
    }

    pub fn ctx(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn terms(&self) -> &BTreeMap<Tangle, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, t: &Tangle) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// delta = v + v^-1, the value of a closed circle.
    pub fn delta(ctx: &ScalarContext) -> Scalar {
        ctx.qint(2)
    }

    fn add_term(&mut self, t: Tangle, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.ctx != other.ctx {
            return Err(TlError::ContextMismatch);
        }
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(TlError::StrandMismatch {
                left: self.bottom,
                right: other.bottom,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.axpy(&self.ctx.one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TlError> {
        self.axpy(&self.ctx.int(-1), other)
    }

    /// self + c * other.
    pub fn axpy(&self, c: &Scalar, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), &(c * x));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.ctx, self.bottom, self.top);
        for (t, x) in &self.terms {
            out.add_term(t.clone(), &(c * x));
        }
        out
    }

    /// Stack self on top of x.
    pub fn compose(&self, x: &Self) -> Result<Self, TlError> {
        if self.ctx != x.ctx {
            return Err(TlError::ContextMismatch);
        }
        if self.bottom != x.top {
            return Err(TlError::StrandMismatch {
                left: self.bottom,
                right: x.top,
            });
        }
        let delta = Self::delta(&self.ctx);
        let mut out = Self::zero(&self.ctx, x.bottom, self.top);
        for (ty, cy) in &self.terms {
            for (tx, cx) in &x.terms {
                let (t, loops) = ty.compose(tx)?;
                out.add_term(t, &(&(cy * cx) * &delta.pow(loops as u32)));
            }
        }
        Ok(out)
    }

    pub fn flip(&self) -> Self {
        let mut out = Self::zero(&self.ctx, self.top, self.bottom);
        for (t, x) in &self.terms {
            out.add_term(t.flip(), x);
        }
        out
    }

    /// Place other to the right of self.
    pub fn juxtapose(&self, other: &Self) -> Result<Self, TlError> {
        if self.ctx != other.ctx {
            return Err(TlError::ContextMismatch);
        }
        let mut out = Self::zero(&self.ctx, self.bottom + other.bottom, self.top + other.top);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.juxtapose(b), &(x * y));
            }
        }
        Ok(out)
    }

    /// Lines `coefficient  tangle`, in tangle order.
    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(t, x)| format!("{}\t{}", to_text(x), t))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
