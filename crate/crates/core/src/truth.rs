//! Exact truth values and the connectives of Łukasiewicz ∞-valued logic.
//!
//! A [`TruthValue`] is a rational number in the closed unit interval. All
//! arithmetic is carried out on arbitrary-precision rationals, so the algebraic
//! laws of the logic (De Morgan duality, excluded middle, contradiction) hold as
//! exact identities rather than up to rounding.
//!
//! Two families of binary connectives are provided:
//!
//! * the bounded-difference conjunction [`luk_conj`] and bounded-sum
//!   disjunction [`luk_disj`], which together with [`luk_neg`] form a De Morgan
//!   triple satisfying both `p ⊔ ¬p = 1` and `p ⊓ ¬p = 0`;
//! * the lattice connectives [`min_conj`] and [`max_disj`], which are also De
//!   Morgan dual under [`luk_neg`] but violate excluded middle and
//!   contradiction at every non-crisp value.
//!
//! ```
//! use qlogic::truth::{luk_conj, luk_disj, luk_neg, max_disj, TruthValue};
//!
//! let half = TruthValue::half();
//! assert_eq!(luk_disj(&half, &luk_neg(&half)), TruthValue::one());
//! assert_eq!(luk_conj(&half, &luk_neg(&half)), TruthValue::zero());
//! assert_eq!(max_disj(&half, &luk_neg(&half)), half);
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Maximum number of fractional digits accepted in a decimal literal.
pub const MAX_DECIMAL_DIGITS: usize = 9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TruthError {
    #[error("truth value {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot convert non-finite float {0} to a truth value")]
    NonFinite(f64),
    #[error("malformed truth-value literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: &'static str },
    #[error("classical XOR applied to non-crisp truth value {0}")]
    NonCrispOperand(TruthValue),
}

/// A truth value: an exact rational number in `[0, 1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(BigRational);

impl TruthValue {
    pub fn new(numer: i64, denom: i64) -> Result<Self, TruthError> {
        if denom == 0 {
            return Err(TruthError::ZeroDenominator);
        }
        Self::from_ratio(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_ratio(r: BigRational) -> Result<Self, TruthError> {
        if r.is_negative() || r > BigRational::one() {
            return Err(TruthError::OutOfRange(r.to_string()));
        }
        Ok(TruthValue(r))
    }

    /// Exact conversion of a finite double (every finite double is a dyadic
    /// rational).
    pub fn from_f64(x: f64) -> Result<Self, TruthError> {
        let r = BigRational::from_float(x).ok_or(TruthError::NonFinite(x))?;
        Self::from_ratio(r)
    }

    pub fn zero() -> Self {
        TruthValue(BigRational::zero())
    }

    pub fn one() -> Self {
        TruthValue(BigRational::one())
    }

    pub fn half() -> Self {
        TruthValue(BigRational::new(1.into(), 2.into()))
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Nearest double. Exact for dyadic values with short mantissas.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Crisp values are exactly 0 or exactly 1.
    pub fn is_crisp(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Crisp value as a boolean, or `None` for a genuinely many-valued degree.
    pub fn as_bool(&self) -> Option<bool> {
        if self.is_one() {
            Some(true)
        } else if self.is_zero() {
            Some(false)
        } else {
            None
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints integers without a denominator: "0", "1", "3/4".
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthValue({})", self.0)
    }
}

impl FromStr for TruthValue {
    type Err = TruthError;

    /// Accepts `"n/d"`, an integer, or a decimal with at most nine fractional
    /// digits. The conversion is exact.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = |reason| TruthError::BadLiteral {
            literal: s.to_string(),
            reason,
        };
        if t.is_empty() {
            return Err(bad("empty literal"));
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = parse_digits(n.trim()).ok_or_else(|| bad("numerator is not an integer"))?;
            let d: BigInt = parse_digits(d.trim()).ok_or_else(|| bad("denominator is not an integer"))?;
            if d.is_zero() {
                return Err(TruthError::ZeroDenominator);
            }
            return Self::from_ratio(BigRational::new(n, d));
        }
        let (int_part, frac_part) = match t.split_once('.') {
            Some((i, f)) => (i, f),
            None => (t, ""),
        };
        if frac_part.len() > MAX_DECIMAL_DIGITS {
            return Err(bad("more than 9 fractional digits"));
        }
        if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("fractional part is not decimal"));
        }
        let int_part = if int_part.is_empty() { "0" } else { int_part };
        let int: BigInt = parse_digits(int_part).ok_or_else(|| bad("integer part is not decimal"))?;
        let frac: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().map_err(|_| bad("fractional part is not decimal"))?
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let negative = int_part.starts_with('-');
        let magnitude = int.abs() * &scale + frac;
        let numer = if negative { -magnitude } else { magnitude };
        Self::from_ratio(BigRational::new(numer, scale))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Łukasiewicz negation: `1 − v`.
pub fn luk_neg(v: &TruthValue) -> TruthValue {
    TruthValue(BigRational::one() - &v.0)
}

/// Łukasiewicz (bounded-difference) conjunction: `max(v1 + v2 − 1, 0)`.
pub fn luk_conj(v1: &TruthValue, v2: &TruthValue) -> TruthValue {
    let s = &v1.0 + &v2.0 - BigRational::one();
    if s.is_negative() {
        TruthValue::zero()
    } else {
        TruthValue(s)
    }
}

/// Łukasiewicz (bounded-sum) disjunction: `min(v1 + v2, 1)`.
pub fn luk_disj(v1: &TruthValue, v2: &TruthValue) -> TruthValue {
    let s = &v1.0 + &v2.0;
    if s > BigRational::one() {
        TruthValue::one()
    } else {
        TruthValue(s)
    }
}

/// Lattice conjunction `min(v1, v2)`.
pub fn min_conj(v1: &TruthValue, v2: &TruthValue) -> TruthValue {
    v1.min(v2).clone()
}

/// Lattice disjunction `max(v1, v2)`.
pub fn max_disj(v1: &TruthValue, v2: &TruthValue) -> TruthValue {
    v1.max(v2).clone()
}

/// Classical exclusive or. Defined on crisp operands only; there is no
/// many-valued XOR in this kernel.
pub fn xor_crisp(v1: &TruthValue, v2: &TruthValue) -> Result<TruthValue, TruthError> {
    let a = v1.as_bool().ok_or_else(|| TruthError::NonCrispOperand(v1.clone()))?;
    let b = v2.as_bool().ok_or_else(|| TruthError::NonCrispOperand(v2.clone()))?;
    Ok(TruthValue::from_bool(a ^ b))
}

/// Left fold of [`xor_crisp`]; the empty fold is `0`.
///
/// The result is `1` iff an odd number of inputs are `1`.
pub fn xor_fold<'a, I>(values: I) -> Result<TruthValue, TruthError>
where
    I: IntoIterator<Item = &'a TruthValue>,
{
    values
        .into_iter()
        .try_fold(TruthValue::zero(), |acc, v| xor_crisp(&acc, v))
}

/// Degree of membership in the set of bald men for a man with `hairs` hairs:
/// `1` up to 100 hairs, `0` from 1000 on, linear in between.
pub fn bald_membership(hairs: u64) -> TruthValue {
    match hairs {
        0..=100 => TruthValue::one(),
        1000.. => TruthValue::zero(),
        n => TruthValue(BigRational::new(BigInt::from(1000 - n), BigInt::from(900))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(s: &str) -> TruthValue {
        s.parse().unwrap()
    }

    #[test]
    fn negation_examples() {
        assert_eq!(luk_neg(&TruthValue::zero()), TruthValue::one());
        assert_eq!(luk_neg(&TruthValue::half()), TruthValue::half());
        assert_eq!(luk_neg(&tv("0.8")), tv("0.2"));
    }

    #[test]
    fn lukasiewicz_binary_examples() {
        let half = TruthValue::half();
        assert_eq!(luk_conj(&half, &half), TruthValue::zero());
        assert_eq!(luk_disj(&half, &half), TruthValue::one());
        assert_eq!(luk_conj(&tv("0.7"), &tv("0.6")), tv("0.3"));
        assert_eq!(luk_disj(&tv("0.7"), &tv("0.6")), TruthValue::one());
        for x in ["0", "1/3", "0.25", "1"] {
            assert_eq!(luk_conj(&TruthValue::one(), &tv(x)), tv(x));
            assert_eq!(luk_disj(&TruthValue::zero(), &tv(x)), tv(x));
        }
    }

    #[test]
    fn lattice_examples() {
        let half = TruthValue::half();
        assert_eq!(min_conj(&half, &half), half);
        assert_eq!(max_disj(&half, &half), half);
        assert_eq!(min_conj(&tv("0.3"), &tv("0.9")), tv("0.3"));
        assert_eq!(max_disj(&tv("0.3"), &tv("0.9")), tv("0.9"));
        assert_eq!(min_conj(&TruthValue::one(), &tv("2/7")), tv("2/7"));
        assert_eq!(max_disj(&TruthValue::zero(), &tv("2/7")), tv("2/7"));
    }

    #[test]
    fn xor_truth_table_and_errors() {
        let (o, z) = (TruthValue::one(), TruthValue::zero());
        assert_eq!(xor_crisp(&o, &o).unwrap(), z);
        assert_eq!(xor_crisp(&o, &z).unwrap(), o);
        assert_eq!(xor_crisp(&z, &o).unwrap(), o);
        assert_eq!(xor_crisp(&z, &z).unwrap(), z);
        assert_eq!(
            xor_crisp(&TruthValue::half(), &o),
            Err(TruthError::NonCrispOperand(TruthValue::half()))
        );
        assert!(xor_fold([&o, &z, &TruthValue::half()]).is_err());
    }

    #[test]
    fn bald_examples() {
        assert_eq!(bald_membership(0), TruthValue::one());
        assert_eq!(bald_membership(100), TruthValue::one());
        assert_eq!(bald_membership(1000), TruthValue::zero());
        assert_eq!(bald_membership(5000), TruthValue::zero());
        assert_eq!(bald_membership(550), TruthValue::half());
        assert_eq!(bald_membership(101), tv("899/900"));
    }

    #[test]
    fn literals() {
        assert_eq!(tv("1/2"), TruthValue::half());
        assert_eq!(tv("2/4"), TruthValue::half());
        assert_eq!(tv("0.5"), TruthValue::half());
        assert_eq!(tv(".5"), TruthValue::half());
        assert_eq!(tv("1"), TruthValue::one());
        assert_eq!(tv("1.000"), TruthValue::one());
        assert_eq!(tv("0.123456789"), TruthValue::new(123_456_789, 1_000_000_000).unwrap());
        assert!("0.1234567891".parse::<TruthValue>().is_err());
        assert!("3/2".parse::<TruthValue>().is_err());
        assert!("-0.5".parse::<TruthValue>().is_err());
        assert!("1/0".parse::<TruthValue>().is_err());
        assert!("abc".parse::<TruthValue>().is_err());
        assert!("1e-3".parse::<TruthValue>().is_err());
        assert!("".parse::<TruthValue>().is_err());
        assert_eq!(tv("-0/3"), TruthValue::zero());
    }

    #[test]
    fn float_bridge_is_exact() {
        let v = TruthValue::from_f64(0.1).unwrap();
        assert_ne!(v, tv("0.1"));
        assert_eq!(v.to_f64(), 0.1);
        assert!(TruthValue::from_f64(1.5).is_err());
        assert!(TruthValue::from_f64(f64::NAN).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(TruthValue::half().to_string(), "1/2");
        assert_eq!(TruthValue::one().to_string(), "1");
        assert_eq!(TruthValue::zero().to_string(), "0");
    }
}
