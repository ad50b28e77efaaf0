use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A value type on which the toolkit computes exactly.
///
/// Everything the checkers decide rests on exact comparisons, so the scalar
/// must be an ordered field element without rounding: rationals of arbitrary
/// or fixed precision qualify, floating point does not (no total order, no
/// exact sums).
pub trait Scalar:
    Num + Signed + FromPrimitive + ToPrimitive + Ord + Clone + Display + Debug + FromStr + 'static
{
    fn from_int(v: i64) -> Self;

    /// quotient of two integers, exact
    fn from_fraction(num: i64, den: i64) -> Self;

    /// halves the value exactly
    fn half(&self) -> Self;

    /// the value as an i64 when it is exactly an integer in range, else None;
    /// lets serializers emit bare numbers without losing exactness
    fn as_exact_i64(&self) -> Option<i64>;
}

impl<I> Scalar for Ratio<I>
where
    I: num_integer::Integer + Signed + FromPrimitive + ToPrimitive + Clone + Display + Debug + 'static,
    Ratio<I>: FromStr + FromPrimitive + ToPrimitive,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Ratio::new(
            I::from_i64(num).expect("numerator out of range for scalar type"),
            I::from_i64(den).expect("denominator out of range for scalar type"),
        )
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }

    fn as_exact_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Parses a scalar from the serialization dialect: an integer literal or a
/// "p/q" fraction string. Floats are rejected to keep the pipeline exact.
pub fn parse_scalar<T: Scalar>(s: &str) -> Result<T, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty scalar".to_string());
    }
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(format!("non-exact scalar literal {s:?}; use integers or \"p/q\""));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(T::from_fraction(num, den))
    } else {
        let v: i64 = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
        Ok(T::from_int(v))
    }
}

/// Formats a scalar in the serialization dialect: integers bare, everything
/// else as "p/q". `Display` on `Ratio` already does exactly this.
pub fn format_scalar<T: Scalar>(v: &T) -> String {
    v.to_string()
}

pub type Rat = BigRational;
