//! Character-level computations for quantum sl2.
//!
//! The parameter is passed as `Option<u32>`: `Some(l)` for a primitive root
//! of unity of odd order l, `None` for a generic parameter (where every
//! indecomposable tilting module is a Weyl module).

use std::collections::BTreeMap;

use root_data::{is_singular, linked};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TiltingError {
    #[error("character is not a tilting character: weight {weight} would get multiplicity {value}")]
    InconsistentCharacter { weight: i64, value: i64 },
    #[error("character is not symmetric under mu -> -mu")]
    Asymmetric,
}

/// A finitely supported formal character sum dim(M_mu) e^mu.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharacterA1 {
    coeffs: BTreeMap<i64, u64>,
}

impl CharacterA1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_map(coeffs: BTreeMap<i64, u64>) -> Self {
        Self {
            coeffs: coeffs.into_iter().filter(|(_, m)| *m != 0).collect(),
        }
    }

    pub fn coeff(&self, mu: i64) -> u64 {
        self.coeffs.get(&mu).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, u64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn dim(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&mu, &m)| self.coeff(-mu) == m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (&mu, &m) in &other.coeffs {
            *out.entry(mu).or_insert(0) += m;
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::from_map(self.coeffs.iter().map(|(&mu, &m)| (mu, m * k)).collect())
    }

    /// Character of a tensor product (convolution of weight multisets).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (&a, &m) in &self.coeffs {
            for (&b, &n) in &other.coeffs {
                *out.entry(a + b).or_insert(0) += m * n;
            }
        }
        Self { coeffs: out }
    }
}

/// Character of the Weyl module of highest weight lambda.
pub fn weyl_character(lambda: i64) -> CharacterA1 {
    assert!(lambda >= 0, "weyl_character needs a dominant weight");
    CharacterA1::from_map((0..=lambda).map(|k| (lambda - 2 * k, 1)).collect())
}

/// Character of the natural two-dimensional module raised to the d-th tensor power.
pub fn tensor_power_character(d: u32) -> CharacterA1 {
    (0..d).fold(weyl_character(0), |acc, _| acc.tensor(&weyl_character(1)))
}

/// Multiplicity (T(lambda) : Delta(mu)).
///
/// Weights in the closed fundamental alcove and singular weights give Weyl
/// modules. Otherwise the only other Weyl factor is the reflection of lambda
/// across the wall directly below it.
pub fn tilting_weyl_mult(lambda: i64, mu: i64, l: Option<u32>) -> u64 {
    if lambda == mu {
        return 1;
    }
    let Some(l) = l else { return 0 };
    let li = l as i64;
    if lambda < li || is_singular(lambda, l) {
        return 0;
    }
    let wall = li * ((lambda + 1) / li) - 1;
    u64::from(mu == 2 * wall - lambda)
}

/// Character of the indecomposable tilting module T(lambda).
pub fn tilting_character(lambda: i64, l: Option<u32>) -> CharacterA1 {
    (0..=lambda)
        .filter(|&mu| tilting_weyl_mult(lambda, mu, l) > 0)
        .fold(CharacterA1::zero(), |acc, mu| {
            acc.add(&weyl_character(mu).scale(tilting_weyl_mult(lambda, mu, l)))
        })
}

/// Multiplicities m_lambda of indecomposable tilting summands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TiltingMultiset {
    pub entries: BTreeMap<i64, u64>,
}

impl TiltingMultiset {
    pub fn from_pairs(pairs: &[(i64, u64)]) -> Self {
        Self {
            entries: pairs.iter().copied().filter(|p| p.1 != 0).collect(),
        }
    }

    pub fn get(&self, lambda: i64) -> u64 {
        self.entries.get(&lambda).copied().unwrap_or(0)
    }

    /// Rebuild the character as a sum of tilting characters.
    pub fn character(&self, l: Option<u32>) -> CharacterA1 {
        self.entries.iter().fold(CharacterA1::zero(), |acc, (&lambda, &m)| {
            acc.add(&tilting_character(lambda, l).scale(m))
        })
    }

    /// Weyl-filtration multiplicities (T : Delta(mu)) of the direct sum.
    pub fn weyl_multiplicities(&self, l: Option<u32>) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&lambda, &m) in &self.entries {
            for mu in 0..=lambda {
                let k = tilting_weyl_mult(lambda, mu, l);
                if k > 0 {
                    *out.entry(mu).or_insert(0) += k * m;
                }
            }
        }
        out
    }
}

/// Write a character as a nonnegative sum of Weyl characters.
pub fn weyl_decomposition(ch: &CharacterA1) -> Result<BTreeMap<i64, u64>, TiltingError> {
    if !ch.is_symmetric() {
        return Err(TiltingError::Asymmetric);
    }
    let mut rest: BTreeMap<i64, i64> = ch.coeffs.iter().map(|(&k, &v)| (k, v as i64)).collect();
    let mut out = BTreeMap::new();
    while let Some((&top, &m)) = rest.iter().next_back() {
        if m == 0 {
            rest.remove(&top);
            continue;
        }
        if m < 0 || top < 0 {
            return Err(TiltingError::InconsistentCharacter { weight: top, value: m });
        }
        out.insert(top, m as u64);
        for k in 0..=top {
            *rest.entry(top - 2 * k).or_insert(0) -= m;
        }
    }
    Ok(out)
}

/// Peel tilting characters off from the maximal weight downward.
pub fn decompose_tilting(ch: &CharacterA1, l: Option<u32>) -> Result<TiltingMultiset, TiltingError> {
    let mut rest = weyl_decomposition(ch)?
        .into_iter()
        .map(|(k, v)| (k, v as i64))
        .collect::<BTreeMap<i64, i64>>();
    let mut out = BTreeMap::new();
    while let Some((&top, &m)) = rest.iter().next_back() {
        if m == 0 {
            rest.remove(&top);
            continue;
        }
        if m < 0 {
            return Err(TiltingError::InconsistentCharacter { weight: top, value: m });
        }
        out.insert(top, m as u64);
        for mu in 0..=top {
            let k = tilting_weyl_mult(top, mu, l) as i64;
            if k > 0 {
                *rest.entry(mu).or_insert(0) -= k * m;
            }
        }
    }
    Ok(TiltingMultiset { entries: out })
}

/// Character of T(lambda_1) (x) ... (x) T(lambda_k).
pub fn tilting_tensor_character(weights: &[i64], l: Option<u32>) -> CharacterA1 {
    weights
        .iter()
        .fold(weyl_character(0), |acc, &w| acc.tensor(&tilting_character(w, l)))
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    (0..k).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1))
}

pub fn catalan(d: u32) -> u64 {
    binomial(2 * d as i64, d as i64) / (d as u64 + 1)
}

/// Number of standard tableaux of the two-row shape with d boxes and row
/// difference k; zero unless 0 <= k <= d and k = d mod 2.
pub fn standard_tableaux_count(d: u32, k: i64) -> u64 {
    let d = d as i64;
    if k < 0 || k > d || (d - k) % 2 != 0 {
        return 0;
    }
    let r = (d - k) / 2;
    binomial(d, r) - binomial(d, r - 1)
}

/// dim End(T) = sum over lambda of (T : Delta(lambda)) (T : nabla(lambda)).
/// Both filtration multiplicities of a tilting module agree.
pub fn end_dimension(ch: &CharacterA1) -> Result<u64, TiltingError> {
    Ok(weyl_decomposition(ch)?.values().map(|m| m * m).sum())
}

/// Alternating-sum formula for the dimension of the simple module L(k) of
/// End(V^{(x) d}) at a root of unity of order l. Singular k gives the number
/// of standard tableaux; otherwise sum over linked mu >= k of
/// (-1)^(walls between k and mu) |Std(mu)|.
pub fn simple_dimension_alternating(d: u32, k: i64, l: u32) -> i64 {
    if is_singular(k, l) {
        return standard_tableaux_count(d, k) as i64;
    }
    (k..=d as i64)
        .filter(|&mu| linked(k, mu, Some(l)))
        .map(|mu| {
            let sign = if root_data::walls_between(k, mu, l).is_multiple_of(2) {
                1
            } else {
                -1
            };
            sign * standard_tableaux_count(d, mu) as i64
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(pairs: &[(i64, u64)]) -> TiltingMultiset {
        TiltingMultiset::from_pairs(pairs)
    }

    #[test]
    fn weyl_characters() {
        assert_eq!(weyl_character(0).coeffs, BTreeMap::from([(0, 1)]));
        assert_eq!(
            weyl_character(3).coeffs,
            BTreeMap::from([(3, 1), (1, 1), (-1, 1), (-3, 1)])
        );
        assert_eq!(
            tensor_power_character(2).coeffs,
            BTreeMap::from([(2, 1), (0, 2), (-2, 1)])
        );
    }

    #[test]
    fn closed_form_multiplicities() {
        assert_eq!(tilting_weyl_mult(3, 1, Some(3)), 1);
        assert_eq!(tilting_weyl_mult(3, 3, Some(3)), 1);
        assert_eq!(tilting_weyl_mult(3, 0, Some(3)), 0);
        assert_eq!(tilting_weyl_mult(2, 0, Some(3)), 0);
        for k in 0..20 {
            assert_eq!(tilting_weyl_mult(k, k, Some(5)), 1);
            assert_eq!(tilting_weyl_mult(k, k, None), 1);
        }
    }

    #[test]
    fn decomposition_goldens() {
        let v3 = tensor_power_character(3);
        assert_eq!(decompose_tilting(&v3, Some(3)).unwrap(), ts(&[(3, 1), (1, 1)]));
        assert_eq!(decompose_tilting(&v3, Some(5)).unwrap(), ts(&[(3, 1), (1, 2)]));
        assert_eq!(decompose_tilting(&v3, None).unwrap(), ts(&[(3, 1), (1, 2)]));
        let v4 = tensor_power_character(4);
        assert_eq!(decompose_tilting(&v4, Some(3)).unwrap(), ts(&[(4, 1), (0, 1), (2, 3)]));
        for l in [Some(3), Some(5), Some(7), None] {
            assert_eq!(
                decompose_tilting(&tensor_power_character(2), l).unwrap(),
                ts(&[(2, 1), (0, 1)])
            );
        }
    }

    #[test]
    fn inconsistent_character_is_rejected() {
        // At l = 3, ch(Delta(3)) lacks the Delta(1) factor that T(3) forces.
        let ch = weyl_character(3);
        assert!(matches!(
            decompose_tilting(&ch, Some(3)),
            Err(TiltingError::InconsistentCharacter { .. })
        ));
        let mut lopsided = BTreeMap::new();
        lopsided.insert(1, 1);
        assert_eq!(
            decompose_tilting(&CharacterA1::from_map(lopsided), Some(3)),
            Err(TiltingError::Asymmetric)
        );
    }

    #[test]
    fn standard_tableaux() {
        assert_eq!(standard_tableaux_count(3, 3), 1);
        assert_eq!(standard_tableaux_count(3, 1), 2);
        assert_eq!(standard_tableaux_count(4, 0), 2);
        assert_eq!(standard_tableaux_count(4, 1), 0);
        for d in 1..=10 {
            let total: u64 = (0..=d as i64).map(|k| standard_tableaux_count(d, k).pow(2)).sum();
            assert_eq!(total, catalan(d));
        }
    }

    #[test]
    fn alternating_formula_small() {
        assert_eq!(simple_dimension_alternating(3, 3, 3), 1);
        assert_eq!(simple_dimension_alternating(3, 1, 3), 1);
        assert_eq!(simple_dimension_alternating(8, 0, 3), 1);
    }
}
