//! Helpers for exact rationals: `"p/q"` text form, serde glue and ceilings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serializer;

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Lowest-terms `"p/q"` with `q >= 1`, including integers (`"-2/1"`).
pub fn format(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Smallest integer at least `value`.
pub fn ceil_to_int(value: &BigRational) -> BigInt {
    value.ceil().to_integer()
}

pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        assert_eq!(format(&ratio(4, -6)), "-2/3");
        assert_eq!(format(&int(-2)), "-2/1");
        assert_eq!(parse("-2/3"), Some(ratio(-2, 3)));
        assert_eq!(parse(" 6/4 "), Some(ratio(3, 2)));
        assert_eq!(parse("5"), Some(int(5)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("a/2"), None);
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_to_int(&ratio(7, 2)), BigInt::from(4));
        assert_eq!(ceil_to_int(&ratio(-7, 2)), BigInt::from(-3));
        assert_eq!(ceil_to_int(&int(3)), BigInt::from(3));
    }
}
