//! Exact textual form of scalars.
//!
//! Generic: `(c*v^k + ...)/(c*v^k + ...)`.
//! Cyclotomic: `[l=5] c*z^k + ...` with rational coefficients `p/q`.
//! Rational: a plain rational `p/q` or integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::Cyclo;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;
use crate::zpoly::ZPoly;
use crate::ScalarError;

fn terms_text(var: char, terms: &[(i64, BigRational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(k, c)| format!("{c}*{var}^{k}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn zpoly_terms(shift: i32, p: &[BigInt]) -> Vec<(i64, BigRational)> {
    p.iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift as i64 + i as i64, BigRational::from(c.clone())))
        .collect()
}

pub fn to_text(x: &Scalar) -> String {
    match x {
        Scalar::Gen(r) => format!(
            "({})/({})",
            terms_text('v', &zpoly_terms(r.shift(), r.num())),
            terms_text('v', &zpoly_terms(0, r.den()))
        ),
        Scalar::Cyc(c) => {
            let terms: Vec<(i64, BigRational)> = c
                .num()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i as i64, BigRational::new(a.clone(), c.den().clone())))
                .collect();
            format!("[l={}] {}", c.l(), terms_text('z', &terms))
        }
        Scalar::Rat(q) => q.to_string(),
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

fn parse_terms(s: &str, var: char) -> Result<Vec<(i64, BigRational)>, ScalarError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let marker = format!("*{var}^");
    s.split(" + ")
        .map(|t| {
            let (c, k) = t.split_once(&marker).ok_or_else(|| ScalarError::Parse(t.to_string()))?;
            let k: i64 = k.trim().parse().map_err(|_| ScalarError::Parse(t.to_string()))?;
            Ok((k, parse_rational(c)?))
        })
        .collect()
}

fn integer_poly(terms: &[(i64, BigRational)]) -> Result<(i32, ZPoly), ScalarError> {
    if terms.is_empty() {
        return Ok((0, Vec::new()));
    }
    let lo = terms.iter().map(|t| t.0).min().unwrap();
    let hi = terms.iter().map(|t| t.0).max().unwrap();
    let mut p = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (k, c) in terms {
        if !c.is_integer() {
            return Err(ScalarError::Parse(format!("non-integer coefficient {c}")));
        }
        p[(k - lo) as usize] += c.to_integer();
    }
    Ok((lo as i32, p))
}

pub fn from_text(s: &str) -> Result<Scalar, ScalarError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("[l=") {
        let (l, body) = rest.split_once(']').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let l: u32 = l.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        crate::ScalarContext::cyclotomic(l)?;
        let terms = parse_terms(body, 'z')?;
        let mut acc = Cyclo::zero(l);
        for (k, c) in terms {
            acc = acc.add(&Cyclo::from_rational(l, &c).mul(&Cyclo::z_pow(l, k)));
        }
        return Ok(Scalar::Cyc(acc));
    }
    if let Some(rest) = s.strip_prefix('(') {
        let (num, den) = rest
            .split_once(")/(")
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let den = den.strip_suffix(')').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let (sn, pn) = integer_poly(&parse_terms(num, 'v')?)?;
        let (sd, pd) = integer_poly(&parse_terms(den, 'v')?)?;
        if pd.is_empty() {
            return Err(ScalarError::DivisionByZero);
        }
        return Ok(Scalar::Gen(RatFunc::from_parts(sn - sd, pn, pd)));
    }
    parse_rational(s).map(Scalar::Rat)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_text(self))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        from_text(&s).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", to_text(self))
    }
}

/// Compact human form used in tables: drops trivial denominators.
pub fn pretty(x: &Scalar) -> String {
    match x {
        Scalar::Gen(r) if r.den().len() == 1 && r.den()[0].is_one() => {
            terms_text('v', &zpoly_terms(r.shift(), r.num()))
        }
        Scalar::Cyc(c) => {
            let t = to_text(x);
            match c.as_rational() {
                Some(q) => q.to_string(),
                None => t,
            }
        }
        _ => to_text(x),
    }
}
