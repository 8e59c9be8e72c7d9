//! The cyclotomic field Q(z) with z a primitive l-th root of unity, stored
//! as an integer polynomial of degree < phi(l) reduced modulo the cyclotomic
//! polynomial, over a common positive denominator.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::zpoly::{self, ZPoly};

static PHI_CACHE: OnceLock<RwLock<HashMap<u32, Arc<ZPoly>>>> = OnceLock::new();

/// The n-th cyclotomic polynomial, via x^n - 1 = prod_{d | n} Phi_d.
pub fn cyclotomic_poly(n: u32) -> Arc<ZPoly> {
    let cache = PHI_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p: ZPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = zpoly::div_exact(&p, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(p);
    cache.write().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo {
    l: u32,
    num: ZPoly,
    den: BigInt,
}

impl Cyclo {
    pub fn zero(l: u32) -> Self {
        Self {
            l,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn from_rational(l: u32, r: &BigRational) -> Self {
        Self::normalized(l, vec![r.numer().clone()], r.denom().clone())
    }

    /// z^k for any integer k.
    pub fn z_pow(l: u32, k: i64) -> Self {
        let e = k.rem_euclid(l as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        Self::from_poly(l, num, BigInt::one())
    }

    /// Reduce an arbitrary integer polynomial in z (over den) into canonical form.
    pub fn from_poly(l: u32, num: ZPoly, den: BigInt) -> Self {
        let phi = cyclotomic_poly(l);
        let mut num = num;
        zpoly::trim(&mut num);
        let r = zpoly::rem_monic(&num, &phi);
        Self::normalized(l, r, den)
    }

    fn normalized(l: u32, mut num: ZPoly, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        zpoly::trim(&mut num);
        if num.is_empty() {
            return Self::zero(l);
        }
        if den.is_negative() {
            den = -den;
            num = zpoly::neg(&num);
        }
        let g = zpoly::content(&num).gcd(&den);
        if !g.is_one() {
            num = zpoly::divide_by_scalar(&num, &g);
            den /= &g;
        }
        Self { l, num, den }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn num(&self) -> &[BigInt] {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        zpoly::is_one(&self.num) && self.den.is_one()
    }

    /// Some(r) if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.l, other.l, "mixing cyclotomic fields of different order");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        if self.den == other.den {
            return Self::normalized(self.l, zpoly::add(&self.num, &other.num), self.den.clone());
        }
        let num = zpoly::add(
            &zpoly::scale(&self.num, &other.den),
            &zpoly::scale(&other.num, &self.den),
        );
        Self::normalized(self.l, num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        Self {
            l: self.l,
            num: zpoly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.l);
        }
        Self::from_poly(self.l, zpoly::mul(&self.num, &other.num), &self.den * &other.den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.num.len() == 1 {
            return Some(Self::normalized(self.l, vec![self.den.clone()], self.num[0].clone()));
        }
        let phi = cyclotomic_poly(self.l);
        let a: Vec<BigRational> = self.num.iter().map(|c| BigRational::from(c.clone())).collect();
        let m: Vec<BigRational> = phi.iter().map(|c| BigRational::from(c.clone())).collect();
        let s = qpoly_inverse_mod(&a, &m);
        // self = num/den, so self^-1 = den * s
        let common = s.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: ZPoly = s
            .iter()
            .map(|c| c.numer() * (&common / c.denom()) * &self.den)
            .collect();
        Some(Self::normalized(self.l, num, common))
    }
}

fn qtrim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(&mut out);
    out
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero) - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    qtrim(&mut out);
    out
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / &b[db];
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[dr - db + i] -= t;
        }
        q[dr - db] = c;
        r.pop();
        qtrim(&mut r);
    }
    qtrim(&mut q);
    (q, r)
}

/// Inverse of a modulo m over Q[x], assuming gcd(a, m) = 1.
fn qpoly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let t = qsub(&t0, &qmul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(
        r0.len(),
        1,
        "element is not invertible modulo the cyclotomic polynomial"
    );
    let c = r0[0].clone();
    let mut out: Vec<BigRational> = t0.iter().map(|x| x / &c).collect();
    let (_, rem) = qdivrem(&out, m);
    out = rem;
    out
}
