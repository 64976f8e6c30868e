//! Exact rational scalars for coordinates and directions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {0:?} as a rational number")]
pub struct ParseScalarError(pub String);

/// Parses `3`, `-3/4`, `0.125` or `1e-3` exactly. Decimal strings become the
/// rational they denote, not the nearest binary float.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(s.to_string());
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse::<BigInt>().map_err(|_| err())? / 10;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

/// Exact rational value of a finite float.
pub fn from_f64(x: f64) -> Scalar {
    BigRational::from_f64(x).expect("finite float")
}

pub fn from_int(x: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(x))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn max_abs(xs: &[Scalar]) -> Scalar {
    xs.iter().map(|x| x.abs()).max().unwrap_or_else(Scalar::zero)
}

/// Shortest text that parses back to the same value.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exactly() {
        assert_eq!(parse_scalar("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_scalar("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_scalar("12").unwrap(), from_int(12));
        assert_eq!(parse_scalar("2.5e2").unwrap(), from_int(250));
        assert_eq!(parse_scalar("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_scalar(".5").unwrap(), ratio(1, 2));
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["7", "-3/4", "0.001"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        }
    }
}
