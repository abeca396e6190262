//! Scalar abstraction for the plausibility scale.
//!
//! Every operator in the crate is written against [`Scalar`], so the same code
//! runs on exact rationals (the default, see [`crate::Rational`]) and on
//! machine floats. Only the rational instantiation gives exact tie detection;
//! the float instantiations exist for quick experiments.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Scalar: Num + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Converts an exact rational into this scalar, rounding if needed.
    fn from_ratio(value: &BigRational) -> Self;

    /// Exact rational image of this value, when it has one.
    fn to_ratio(&self) -> Option<BigRational>;

    fn max_with(&self, other: &Self) -> Self {
        if other > self {
            other.clone()
        } else {
            self.clone()
        }
    }

    fn min_with(&self, other: &Self) -> Self {
        if other < self {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// `1 - self`, the order-reversing map of the unit scale.
    fn complement(&self) -> Self {
        Self::one() - self.clone()
    }

    fn abs_diff(&self, other: &Self) -> Self {
        if self >= other {
            self.clone() - other.clone()
        } else {
            other.clone() - self.clone()
        }
    }

    fn in_unit_interval(&self) -> bool {
        *self >= Self::zero() && *self <= Self::one()
    }

    fn from_u64(n: u64) -> Self {
        Self::from_ratio(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl Scalar for BigRational {
    fn from_ratio(value: &BigRational) -> Self {
        value.clone()
    }

    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Scalar for f64 {
    fn from_ratio(value: &BigRational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn to_ratio(&self) -> Option<BigRational> {
        BigRational::from_f64(*self)
    }
}

impl Scalar for f32 {
    fn from_ratio(value: &BigRational) -> Self {
        value.to_f32().unwrap_or(f32::NAN)
    }

    fn to_ratio(&self) -> Option<BigRational> {
        BigRational::from_f32(*self)
    }
}

/// Total comparison for scalars; incomparable values (NaN) sort as equal.
pub(crate) fn cmp<S: Scalar>(a: &S, b: &S) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

/// Maximum of a sequence, `0` when empty.
pub(crate) fn max_or_zero<'a, S: Scalar, I: IntoIterator<Item = &'a S>>(values: I) -> S {
    values
        .into_iter()
        .fold(S::zero(), |acc, v| acc.max_with(v))
}

pub(crate) fn check_scale<S: Scalar>(value: &S) -> Result<()> {
    if value.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::OutOfScale(value.to_string()))
    }
}

/// Shorthand for the exact rational `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `a/b`, an integer, or a decimal with at most six fractional digits,
/// exactly.
pub fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = BigInt::from_str_radix(num.trim(), 10).map_err(|_| format!("bad numerator in `{text}`"))?;
        let den = BigInt::from_str_radix(den.trim(), 10).map_err(|_| format!("bad denominator in `{text}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{text}`"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) || (int_part.is_empty() && frac_part.is_empty()) {
        return Err(format!("bad number `{text}`"));
    }
    if frac_part.len() > 6 {
        return Err(format!("`{text}` has more than six fractional digits"));
    }
    let mut numerator = BigInt::zero();
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numerator = numerator * 10 + BigInt::from(b - b'0');
    }
    if negative {
        numerator = -numerator;
    }
    let denominator = num_traits::pow(BigInt::from(10), frac_part.len());
    Ok(BigRational::new(numerator, denominator))
}

/// Renders a scalar with six fractional digits, for human reading only.
pub fn format_decimal<S: Scalar>(value: &S) -> String {
    match value.to_ratio() {
        Some(r) => {
            let scaled = (r.abs() * BigRational::from_integer(BigInt::from(1_000_000))).round();
            let n: BigInt = scaled.to_integer();
            let million = BigInt::from(1_000_000);
            let int = &n / &million;
            let frac = (&n % &million).to_u32().unwrap_or(0);
            let sign = if r.is_negative() && !n.is_zero() { "-" } else { "" };
            format!("{sign}{int}.{frac:06}")
        }
        None => value.to_string(),
    }
}
