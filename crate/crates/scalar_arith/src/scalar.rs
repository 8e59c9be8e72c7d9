//! Field elements in one of three contexts: the generic field Q(v), a
//! cyclotomic field Q(z_l) with l odd, or Q with v specialized to a rational q.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclo;
use crate::laurent::{qbinom_laurent, qfact_laurent, qint_laurent, LaurentPoly};
use crate::ratfunc::RatFunc;
use crate::zpoly::ZPoly;
use crate::ScalarError;

/// Which field the scalars live in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScalarContext {
    Generic,
    Cyclotomic(u32),
    Rational(BigRational),
}

impl ScalarContext {
    pub fn cyclotomic(l: u32) -> Result<Self, ScalarError> {
        if l < 3 || l.is_multiple_of(2) {
            return Err(ScalarError::InvalidOrder(l));
        }
        Ok(Self::Cyclotomic(l))
    }

    pub fn rational(q: BigRational) -> Result<Self, ScalarError> {
        if q.is_zero() {
            return Err(ScalarError::ZeroParameter);
        }
        Ok(Self::Rational(q))
    }

    /// The order l of q^2 when it is finite and relevant (cyclotomic case).
    pub fn order(&self) -> Option<u32> {
        match self {
            Self::Cyclotomic(l) => Some(*l),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Self::Generic => Scalar::Gen(RatFunc::zero()),
            Self::Cyclotomic(l) => Scalar::Cyc(Cyclo::zero(*l)),
            Self::Rational(_) => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, c: i64) -> Scalar {
        self.from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(&self, c: BigInt) -> Scalar {
        self.from_rational(&BigRational::from(c))
    }

    pub fn from_rational(&self, r: &BigRational) -> Scalar {
        match self {
            Self::Generic => {
                let num = RatFunc::from_int(r.numer().clone());
                let den = RatFunc::from_int(r.denom().clone());
                Scalar::Gen(num.mul(&den.inv().expect("nonzero denominator")))
            }
            Self::Cyclotomic(l) => Scalar::Cyc(Cyclo::from_rational(*l, r)),
            Self::Rational(_) => Scalar::Rat(r.clone()),
        }
    }

    /// The image of v^k.
    pub fn v_pow(&self, k: i64) -> Scalar {
        match self {
            Self::Generic => Scalar::Gen(RatFunc::v_pow(k as i32)),
            Self::Cyclotomic(l) => Scalar::Cyc(Cyclo::z_pow(*l, k)),
            Self::Rational(q) => Scalar::Rat(rational_pow(q, k)),
        }
    }

    pub fn v(&self) -> Scalar {
        self.v_pow(1)
    }

    /// Evaluate a Laurent polynomial in this context (v maps to the parameter).
    pub fn lift(&self, p: &LaurentPoly) -> Scalar {
        match self {
            Self::Generic => Scalar::Gen(RatFunc::from_laurent(p)),
            Self::Cyclotomic(l) => {
                let l = *l;
                let mut num: ZPoly = vec![BigInt::zero(); l as usize];
                for (k, c) in p.terms() {
                    num[(k as i64).rem_euclid(l as i64) as usize] += c;
                }
                Scalar::Cyc(Cyclo::from_poly(l, num, BigInt::one()))
            }
            Self::Rational(q) => {
                let mut acc = BigRational::zero();
                for (k, c) in p.terms() {
                    acc += rational_pow(q, k as i64) * BigRational::from(c.clone());
                }
                Scalar::Rat(acc)
            }
        }
    }

    /// Specialize a generic scalar into this context.
    pub fn specialize(&self, x: &Scalar) -> Result<Scalar, ScalarError> {
        let Scalar::Gen(r) = x else {
            return Err(ScalarError::ContextMismatch);
        };
        let num = self.lift(&r.num_laurent());
        let den = self.lift(&r.den_laurent());
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        Ok(num.mul_ref(&den.inv()?))
    }

    pub fn qint(&self, a: i64) -> Scalar {
        self.lift(&qint_laurent(a))
    }

    pub fn qfact(&self, b: u32) -> Scalar {
        self.lift(&qfact_laurent(b))
    }

    pub fn qbinom(&self, a: i64, b: u32) -> Scalar {
        self.lift(&qbinom_laurent(a, b))
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Self::Generic)
    }

    /// Short label used in file names and headers.
    pub fn label(&self) -> String {
        match self {
            Self::Generic => "generic".to_string(),
            Self::Cyclotomic(l) => format!("l{l}"),
            Self::Rational(q) => format!("q{}", q.to_string().replace('/', "_").replace('-', "m")),
        }
    }
}

impl fmt::Display for ScalarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generic => write!(f, "generic"),
            Self::Cyclotomic(l) => write!(f, "cyclotomic(l={l})"),
            Self::Rational(q) => write!(f, "rational(q={q})"),
        }
    }
}

fn rational_pow(q: &BigRational, k: i64) -> BigRational {
    let base = if k < 0 { q.recip() } else { q.clone() };
    let mut out = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        out *= &base;
    }
    out
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Gen(RatFunc),
    Cyc(Cyclo),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Self::Gen(x) => x.is_zero(),
            Self::Cyc(x) => x.is_zero(),
            Self::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Self::Gen(x) => x.is_one(),
            Self::Cyc(x) => x.is_one(),
            Self::Rat(x) => x.is_one(),
        }
    }

    pub fn zero_like(&self) -> Self {
        match self {
            Self::Gen(_) => Self::Gen(RatFunc::zero()),
            Self::Cyc(x) => Self::Cyc(Cyclo::zero(x.l())),
            Self::Rat(_) => Self::Rat(BigRational::zero()),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            Self::Gen(_) => Self::Gen(RatFunc::one()),
            Self::Cyc(x) => Self::Cyc(Cyclo::z_pow(x.l(), 0)),
            Self::Rat(_) => Self::Rat(BigRational::one()),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Gen(a), Self::Gen(b)) => Self::Gen(a.add(b)),
            (Self::Cyc(a), Self::Cyc(b)) => Self::Cyc(a.add(b)),
            (Self::Rat(a), Self::Rat(b)) => Self::Rat(a + b),
            _ => panic!("scalar context mismatch"),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Gen(a), Self::Gen(b)) => Self::Gen(a.sub(b)),
            (Self::Cyc(a), Self::Cyc(b)) => Self::Cyc(a.sub(b)),
            (Self::Rat(a), Self::Rat(b)) => Self::Rat(a - b),
            _ => panic!("scalar context mismatch"),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Gen(a), Self::Gen(b)) => Self::Gen(a.mul(b)),
            (Self::Cyc(a), Self::Cyc(b)) => Self::Cyc(a.mul(b)),
            (Self::Rat(a), Self::Rat(b)) => Self::Rat(a * b),
            _ => panic!("scalar context mismatch"),
        }
    }

    pub fn neg_ref(&self) -> Self {
        match self {
            Self::Gen(a) => Self::Gen(a.neg()),
            Self::Cyc(a) => Self::Cyc(a.neg()),
            Self::Rat(a) => Self::Rat(-a),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let out = match self {
            Self::Gen(a) => a.inv().map(Self::Gen),
            Self::Cyc(a) => a.inv().map(Self::Cyc),
            Self::Rat(a) => (!a.is_zero()).then(|| Self::Rat(a.recip())),
        };
        out.ok_or(ScalarError::DivisionByZero)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Division by a value known to be nonzero.
    pub fn div_nonzero(&self, other: &Self) -> Self {
        self.try_div(other).expect("division by zero")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = self.one_like();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// The exact rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Self::Gen(a) => {
                if a.shift() == 0 && a.num().len() == 1 && a.den().len() == 1 {
                    Some(BigRational::new(a.num()[0].clone(), a.den()[0].clone()))
                } else if a.is_zero() {
                    Some(BigRational::zero())
                } else {
                    None
                }
            }
            Self::Cyc(a) => a.as_rational(),
            Self::Rat(a) => Some(a.clone()),
        }
    }

    /// Laurent polynomial value of a generic scalar with trivial denominator.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        match self {
            Self::Gen(a) => a.to_laurent(),
            _ => None,
        }
    }

    pub fn context(&self) -> ScalarContext {
        match self {
            Self::Gen(_) => ScalarContext::Generic,
            Self::Cyc(a) => ScalarContext::Cyclotomic(a.l()),
            // the parameter q is not recoverable from a rational value
            Self::Rat(_) => ScalarContext::Rational(BigRational::one()),
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}
