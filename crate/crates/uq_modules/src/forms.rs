//! Invariant bilinear forms and the induced anti-involution on endomorphisms.
//!
//! A form B is invariant when B(u x, y) = B(x, theta(u) y) for all u, i.e.
//! U^T B = B Theta(u) as matrices. Such a form is the same thing as a module
//! map T -> D(T), and the adjoint i(phi) = B^-1 phi^T B realizes the duality
//! functor on endomorphisms.

use scalar_arith::linalg::{inverse, kernel, rank};
use scalar_arith::{Mat, ScalarContext};

use crate::hom::hom_space;
use crate::module::{dual_module, theta_e, theta_f, WeightModule};
use crate::UqError;

/// Diagonal invariant form on the Weyl module of highest weight lambda with
/// B(m_0, m_0) = 1: b_k = (-1)^k v^{-k(lambda-k-1)} [lambda, k].
pub fn weyl_form(lambda: u32, ctx: &ScalarContext) -> Mat {
    let l = lambda as i64;
    Mat::diagonal(
        (0..=l)
            .map(|k| {
                let s = if k % 2 == 0 { ctx.one() } else { ctx.int(-1) };
                &(&s * &ctx.v_pow(-k * (l - k - 1))) * &ctx.qbinom(l, k as u32)
            })
            .collect(),
    )
}

/// Diagonal form on the d-th tensor power of the natural module:
/// (-v)^(number of m_1 factors).
pub fn tensor_power_form(d: u32, ctx: &ScalarContext) -> Mat {
    let mv = ctx.v().neg_ref();
    Mat::diagonal((0..1usize << d).map(|i| mv.pow(i.count_ones())).collect())
}

/// Product form on M (x) N; invariant because theta respects the coproduct.
pub fn tensor_form(bm: &Mat, bn: &Mat) -> Mat {
    bm.kron(bn)
}

pub fn is_invariant_form(b: &Mat, m: &WeightModule) -> bool {
    (1..=m.maxdp()).all(|j| {
        m.e(j).transpose().mul(b) == b.mul(&theta_e(m, j)) && m.f(j).transpose().mul(b) == b.mul(&theta_f(m, j))
    })
}

pub fn is_symmetric(b: &Mat) -> bool {
    *b == b.transpose()
}

/// A nondegenerate symmetric invariant form with its inverse.
#[derive(Clone, Debug)]
pub struct DualityForm {
    pub form: Mat,
    pub inverse: Mat,
}

impl DualityForm {
    pub fn new(form: Mat, ctx: &ScalarContext) -> Result<Self, UqError> {
        let inverse = inverse(&form, &ctx.one()).ok_or(UqError::DegenerateForm)?;
        Ok(Self { form, inverse })
    }

    /// i(phi) = B^-1 phi^T B.
    pub fn involution(&self, phi: &Mat) -> Mat {
        self.inverse.mul(&phi.transpose()).mul(&self.form)
    }
}

/// Adjoint of phi: M -> N with respect to forms on M and N; a map N -> M.
pub fn adjoint(phi: &Mat, source_form_inverse: &Mat, target_form: &Mat) -> Mat {
    source_form_inverse.mul(&phi.transpose()).mul(target_form)
}

/// Solve for an isomorphism T -> D(T), keep the symmetric solutions and
/// return a nondegenerate one.
pub fn duality_involution(t: &WeightModule) -> Result<DualityForm, UqError> {
    let ctx = t.ctx();
    let n = t.dim();
    let forms: Vec<Mat> = hom_space(t, &dual_module(t))?.iter().map(Mat::transpose).collect();
    if forms.is_empty() {
        return Err(UqError::AsymmetricForm);
    }
    let antisym: Vec<_> = forms.iter().map(|b| b.sub(&b.transpose()).flatten()).collect();
    let coeffs = kernel(&Mat::from_columns(n * n, &antisym), &ctx.one());
    let symmetric: Vec<Mat> = coeffs
        .iter()
        .map(|c| c.iter().fold(Mat::zeros(n, n), |acc, (k, x)| acc.axpy(x, &forms[*k])))
        .collect();
    let mut candidates: Vec<Mat> = symmetric.clone();
    for scale in 1..=symmetric.len() as i64 + 2 {
        let mut acc = Mat::zeros(n, n);
        for (k, s) in symmetric.iter().enumerate() {
            acc = acc.axpy(&ctx.int(1 + (k as i64 * scale) % 7), s);
        }
        candidates.push(acc);
    }
    for b in candidates {
        if rank(&b) == n {
            debug_assert!(is_invariant_form(&b, t) && is_symmetric(&b));
            return DualityForm::new(b, ctx);
        }
    }
    Err(UqError::AsymmetricForm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::*;

    #[test]
    fn closed_forms_are_invariant() {
        for ctx in [ScalarContext::Generic, ScalarContext::cyclotomic(3).unwrap()] {
            for lambda in 0..6 {
                assert!(is_invariant_form(&weyl_form(lambda, &ctx), &weyl_module(lambda, &ctx)));
            }
            for d in 1..4 {
                let t = tensor_power(&natural_module(&ctx), d).unwrap();
                assert!(is_invariant_form(&tensor_power_form(d, &ctx), &t));
            }
        }
    }

    #[test]
    fn solver_finds_a_form() {
        let ctx = ScalarContext::cyclotomic(3).unwrap();
        let t = tensor_power(&natural_module(&ctx), 3).unwrap();
        let f = duality_involution(&t).unwrap();
        assert!(is_symmetric(&f.form));
        assert!(is_invariant_form(&f.form, &t));
        let id = Mat::identity(8, &ctx.one());
        assert_eq!(f.involution(&id), id);
    }
}
