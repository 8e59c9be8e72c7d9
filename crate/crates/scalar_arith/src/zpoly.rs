//! Dense univariate polynomials over Z, stored lowest degree first with no
//! trailing zeros. The empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[BigInt]) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Multiply by x^k.
pub fn shift_up(a: &[BigInt], k: usize) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

/// Number of low-order zero coefficients (valuation at x = 0).
pub fn low_zeros(a: &[BigInt]) -> usize {
    a.iter().take_while(|c| c.is_zero()).count()
}

pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn divide_by_scalar(a: &[BigInt], c: &BigInt) -> ZPoly {
    a.iter().map(|x| x / c).collect()
}

fn primitive_part(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    if c.is_zero() || c.is_one() {
        a.to_vec()
    } else {
        divide_by_scalar(a, &c)
    }
}

/// Pseudo-remainder of a by b (b nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
        let c = content(&r);
        if !c.is_zero() && !c.is_one() {
            r = divide_by_scalar(&r, &c);
        }
    }
    r
}

/// Greatest common divisor in Z[x], including the content, normalized to a
/// positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = prem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    let g = scale(&primitive_part(&x), &c);
    normalize_sign(g)
}

fn normalize_sign(mut p: ZPoly) -> ZPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Exact division a / b in Z[x]. Panics if b does not divide a.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (q, r) = div_rem_z(a, b).expect("polynomial division is not integral");
    assert!(r.is_empty(), "polynomial division has a remainder");
    q
}

/// Division with remainder in Z[x]; returns None if a non-integral quotient
/// coefficient would be required.
pub fn div_rem_z(a: &[BigInt], b: &[BigInt]) -> Option<(ZPoly, ZPoly)> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    if r.len() <= db {
        return Some((Vec::new(), r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &qc * bc;
        }
        q[off] = qc;
        trim(&mut r);
    }
    trim(&mut q);
    Some((q, r))
}

/// Remainder modulo a monic polynomial m.
pub fn rem_monic(a: &[BigInt], m: &[BigInt]) -> ZPoly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if !lr.is_zero() {
            let off = dr - dm;
            for (i, mc) in m.iter().enumerate() {
                r[off + i] -= &lr * mc;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> ZPoly {
        let mut out: ZPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[5, 3]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_content() {
        assert_eq!(gcd(&p(&[4, 4]), &p(&[6, 6])), p(&[2, 2]));
        assert_eq!(gcd(&p(&[3]), &p(&[0, 5])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[1, 0, 1]), &p(&[-1, 2]));
        assert_eq!(div_exact(&a, &p(&[-1, 2])), p(&[1, 0, 1]));
        assert!(div_rem_z(&p(&[1, 1]), &p(&[0, 2])).is_none());
    }

    #[test]
    fn monic_remainder() {
        // x^3 mod (x^2 + x + 1) = 1
        assert_eq!(rem_monic(&p(&[0, 0, 0, 1]), &p(&[1, 1, 1])), p(&[1]));
    }
}
