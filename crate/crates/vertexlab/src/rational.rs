//! Arbitrary-precision rational scalars and their wire format.
//!
//! Rationals serialize as strings: `"3/4"` keeps the slash form, plain
//! integers and decimal strings (`"1.25"`) are accepted on input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

#[derive(Debug, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct RatParseError(pub String);

/// Parse `"p/q"`, `"-3"`, or a decimal string like `"0.125"`.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| RatParseError(s.into()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| RatParseError(s.into()))?;
        if d.is_zero() {
            return Err(RatParseError(s.into()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" {
            "0"
        } else {
            int_part
        };
        let i = BigInt::from_str(int_part).map_err(|_| RatParseError(s.into()))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RatParseError(s.into()));
        }
        let f = BigInt::from_str(frac_part).map_err(|_| RatParseError(s.into()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = Rat::from(i.abs()) + Rat::new(f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n = BigInt::from_str(s).map_err(|_| RatParseError(s.into()))?;
    Ok(Rat::from(n))
}

/// `"p/q"` when the denominator is nontrivial, otherwise the plain integer.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Good enough for the magnitudes used here; exact paths never round-trip
    // through this.
    let n = r.numer();
    let d = r.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) => nf / df,
        _ => f64::NAN,
    }
}

/// Exact determinant by fraction-free Gaussian elimination.
pub fn det_rat(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    if n == 0 {
        return Rat::one();
    }
    assert!(matrix.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<Rat>> = matrix.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let d = a[col][col].clone();
        det *= d.clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &d;
            for k in col..n {
                let sub = &factor * &a[col][k];
                a[row][k] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(format_rat(&r("3/4")), "3/4");
        assert_eq!(format_rat(&r("-6/4")), "-3/2");
        assert_eq!(format_rat(&r("5")), "5");
        assert_eq!(r("1.25"), r("5/4"));
        assert_eq!(r("-0.5"), r("-1/2"));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn exact_determinant() {
        let m = vec![
            vec![r("1"), r("1/2")],
            vec![r("1/3"), r("1/4")],
        ];
        assert_eq!(det_rat(&m), r("1/12"));
        let singular = vec![vec![r("1"), r("2")], vec![r("2"), r("4")]];
        assert!(det_rat(&singular).is_zero());
    }
}
