//! Jones-Wenzl projectors and their generalizations.

use scalar_arith::{Scalar, ScalarContext};

use crate::diagram::Tangle;
use crate::element::TLElement;
use crate::TlError;

fn require_nonzero(ctx: &ScalarContext, upto: usize) -> Result<(), TlError> {
    for k in 2..=upto {
        if ctx.qint(k as i64).is_zero() {
            return Err(TlError::CoefficientPole { k });
        }
    }
    Ok(())
}

/// JW_d by the recursion JW_d = JW' - [d-1]/[d] JW' U_{d-1} JW' with
/// JW' = JW_{d-1} (x) 1. JW_0 is the empty diagram.
pub fn jones_wenzl(d: usize, ctx: &ScalarContext) -> Result<TLElement, TlError> {
    require_nonzero(ctx, d)?;
    let mut jw = TLElement::identity(ctx, d.min(1));
    for n in 2..=d {
        let prev = jw.juxtapose(&TLElement::identity(ctx, 1))?;
        let u = TLElement::u(ctx, n, n - 1)?;
        let c = ctx.qint(n as i64 - 1).div_nonzero(&ctx.qint(n as i64));
        let middle = prev.compose(&u)?.compose(&prev)?;
        jw = prev.axpy(&c.neg_ref(), &middle)?;
    }
    Ok(jw)
}

/// Is the sign vector admissible: all partial sums nonnegative?
pub fn admissible(eps: &[i8]) -> bool {
    let mut s = 0i64;
    eps.iter().all(|&e| {
        s += e as i64;
        s >= 0 && (e == 1 || e == -1)
    }) && !eps.is_empty()
}

/// The half diagram t_eps from d bottom points to sum(eps) top points.
pub fn half_projector(eps: &[i8], ctx: &ScalarContext) -> Result<TLElement, TlError> {
    if !admissible(eps) || eps[0] != 1 {
        return Err(TlError::InadmissibleSigns(eps.to_vec()));
    }
    let mut t = TLElement::identity(ctx, 1);
    let mut i = 1usize;
    for &e in &eps[1..] {
        let extended = t.juxtapose(&TLElement::identity(ctx, 1))?;
        if e == 1 {
            t = jones_wenzl(i + 1, ctx)?.compose(&extended)?;
            i += 1;
        } else {
            let cap = TLElement::from_tangle(ctx, Tangle::identity(i - 1).juxtapose(&Tangle::cap()));
            t = jones_wenzl(i - 1, ctx)?.compose(&cap.compose(&extended)?)?;
            i -= 1;
        }
    }
    Ok(t)
}

/// JW_eps = flip(t_eps) o t_eps.
pub fn generalized_jw(eps: &[i8], ctx: &ScalarContext) -> Result<TLElement, TlError> {
    let t = half_projector(eps, ctx)?;
    t.flip().compose(&t)
}

/// All admissible sign vectors of length d starting with +1.
pub fn sign_vectors(d: usize) -> Vec<Vec<i8>> {
    let mut out: Vec<Vec<i8>> = vec![vec![1]];
    for _ in 1..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                let s: i64 = v.iter().map(|&e| e as i64).sum();
                let mut next = Vec::new();
                for e in [1i8, -1] {
                    if s + e as i64 >= 0 {
                        let mut w = v.clone();
                        w.push(e);
                        next.push(w);
                    }
                }
                next
            })
            .collect();
    }
    if d == 0 {
        out.clear();
    }
    out
}

/// Rescale each x with x^2 = c x, c != 0, to the idempotent x / c, and check
/// that the results are pairwise orthogonal and sum to the identity.
pub fn rescale_to_idempotents(family: &[TLElement]) -> Result<Vec<TLElement>, TlError> {
    let Some(first) = family.first() else {
        return Ok(Vec::new());
    };
    let ctx = first.ctx().clone();
    let d = first.bottom();
    let mut out = Vec::new();
    for x in family {
        let sq = x.compose(x)?;
        let (t, c) = x.terms().iter().next().ok_or(TlError::NotIdempotentable)?;
        let ratio: Scalar = sq.coeff(t).div_nonzero(c);
        if ratio.is_zero() || sq != x.scale(&ratio) {
            return Err(TlError::NotIdempotentable);
        }
        out.push(x.scale(&ratio.inv().map_err(|_| TlError::NotIdempotentable)?));
    }
    let mut total = TLElement::zero(&ctx, d, d);
    for (a, e) in out.iter().enumerate() {
        total = total.add(e)?;
        for (b, f) in out.iter().enumerate() {
            if a != b && !e.compose(f)?.is_zero() {
                return Err(TlError::NotOrthogonal { left: a, right: b });
            }
        }
    }
    if total != TLElement::identity(&ctx, d) {
        return Err(TlError::Incomplete);
    }
    Ok(out)
}

/// Is TL_d(delta) semisimple? Generic parameters always; at a root of unity
/// of order l exactly when d < l.
pub fn tl_semisimplicity(d: usize, ctx: &ScalarContext) -> bool {
    match ctx.order() {
        None => true,
        Some(l) => d < l as usize,
    }
}
