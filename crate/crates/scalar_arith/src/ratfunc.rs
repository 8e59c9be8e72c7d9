//! Elements of Q(v) stored as v^shift * num(v) / den(v) with num, den in Z[v].
//!
//! Canonical form: num and den have nonzero constant terms, are coprime in
//! Z[v] (including content), and den has a positive constant term. The zero
//! element has an empty numerator, den = 1 and shift = 0.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::zpoly::{self, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i32,
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            shift: 0,
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            shift: 0,
            num: vec![c],
            den: vec![BigInt::one()],
        }
    }

    pub fn v_pow(k: i32) -> Self {
        Self {
            shift: k,
            num: vec![BigInt::one()],
            den: vec![BigInt::one()],
        }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (shift, num) = p.to_shifted_poly();
        Self::normalized(shift, num, vec![BigInt::one()])
    }

    pub fn from_parts(shift: i32, num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_empty(), "zero denominator");
        Self::normalized(shift, num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && zpoly::is_one(&self.num) && zpoly::is_one(&self.den)
    }

    pub fn is_laurent(&self) -> bool {
        zpoly::is_one(&self.den)
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn num(&self) -> &[BigInt] {
        &self.num
    }

    pub fn den(&self) -> &[BigInt] {
        &self.den
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent()
            .then(|| LaurentPoly::from_shifted_poly(self.shift, &self.num))
    }

    /// Numerator as a Laurent polynomial including the shift.
    pub fn num_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_shifted_poly(self.shift, &self.num)
    }

    pub fn den_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_shifted_poly(0, &self.den)
    }

    fn normalized(mut shift: i32, mut num: ZPoly, mut den: ZPoly) -> Self {
        zpoly::trim(&mut num);
        zpoly::trim(&mut den);
        if num.is_empty() {
            return Self::zero();
        }
        let zn = zpoly::low_zeros(&num);
        if zn > 0 {
            num.drain(..zn);
            shift += zn as i32;
        }
        let zd = zpoly::low_zeros(&den);
        if zd > 0 {
            den.drain(..zd);
            shift -= zd as i32;
        }
        if !zpoly::is_one(&den) {
            let g = zpoly::gcd(&num, &den);
            if !zpoly::is_one(&g) {
                num = zpoly::div_exact(&num, &g);
                den = zpoly::div_exact(&den, &g);
            }
            if den[0].is_negative() {
                num = zpoly::neg(&num);
                den = zpoly::neg(&den);
            }
        }
        Self { shift, num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = zpoly::shift_up(&self.num, (self.shift - s) as usize);
        let b = zpoly::shift_up(&other.num, (other.shift - s) as usize);
        if self.den == other.den {
            return Self::normalized(s, zpoly::add(&a, &b), self.den.clone());
        }
        let num = zpoly::add(&zpoly::mul(&a, &other.den), &zpoly::mul(&b, &self.den));
        let den = zpoly::mul(&self.den, &other.den);
        Self::normalized(s, num, den)
    }

    pub fn neg(&self) -> Self {
        Self {
            shift: self.shift,
            num: zpoly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + other.shift;
        if self.is_laurent() && other.is_laurent() {
            return Self {
                shift,
                num: zpoly::mul(&self.num, &other.num),
                den: vec![BigInt::one()],
            };
        }
        let num = zpoly::mul(&self.num, &other.num);
        let den = zpoly::mul(&self.den, &other.den);
        Self::normalized(shift, num, den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(-self.shift, self.den.clone(), self.num.clone()))
    }
}
