//! Exact rationals, backed by `num_rational::BigRational`.

use alloc::format;
use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"-0.5"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = frac_part.len() as u32;
        let whole = BigInt::from_str(if int_part.is_empty() || int_part == "-" { "0" } else { int_part })
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        let frac = BigInt::from_str(frac_part).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let mut value = Rational::new(whole.abs() * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    Rational::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Integer power with negative exponents allowed (for nonzero base).
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Generalized binomial coefficient `C(k, j)` for any integer `k` and `j >= 0`.
pub fn binomial(k: i64, j: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j as i64 {
        acc = acc * int(k - i) / int(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("1.25").unwrap(), rat(5, 4));
        assert!(parse("1/0x").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = rat(4, -6);
        assert_eq!(format(&r), "-2/3");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-2, 2), int(3));
        assert_eq!(binomial(2, 3), int(0));
    }
}
