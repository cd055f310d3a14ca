use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `"3"`, `"-1/2"` or `"+4"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim().trim_start_matches('+');
    if trimmed.is_empty() {
        return Err(Error::Parse(format!("empty rational in {text:?}")));
    }
    let parsed = match trimmed.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Rational::new(num, den)
        }
        None => Rational::from_integer(
            trimmed
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?,
        ),
    };
    Ok(parsed)
}

pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Integer value if `value` is an integer that fits in `i64`.
pub fn as_i64(value: &Rational) -> Option<i64> {
    if value.is_integer() {
        value.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonneg_integer(value: &Rational) -> bool {
    value.is_integer() && !value.is_negative()
}
