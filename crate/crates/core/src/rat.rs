//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Everything in this crate is computed with it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Builds an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rats(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat(v)).collect()
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Binomial coefficient `C(n, k)` for signed `n`; zero when `k < 0`, or when
/// `n >= 0` and `k > n`. Negative upper arguments follow the usual
/// `C(n, k) = n(n-1)...(n-k+1)/k!` extension.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: i64, k: i64) -> Rat {
    Rat::from_integer(binomial(n, k))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct RatParseError(pub String);

/// Parses `p` or `p/q` with an optional sign and `q > 0`.
pub fn parse_rat(text: &str) -> Result<Rat, RatParseError> {
    let err = || RatParseError(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    if num.is_empty() || num.starts_with("+-") || num.starts_with("-+") {
        return Err(err());
    }
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = match den {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(err());
            }
            let d = BigInt::from_str(d).map_err(|_| err())?;
            if !d.is_positive() {
                return Err(err());
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rat::new(num, den))
}

/// Renders as `p` when integral, otherwise `p/q`.
pub fn format_rat(value: &Rat) -> String {
    value.to_string()
}

pub(crate) fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Helper for `Display` impls that print rational lists.
pub(crate) struct RatList<'a>(pub &'a [Rat]);

impl fmt::Display for RatList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rat(" +4/2 ").unwrap(), rat(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-2").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow(&rat(0), 0), rat(1));
        assert_eq!(pow(&ratio(1, 2), 3), ratio(1, 8));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rat(&ratio(6, 4)), "3/2");
        assert_eq!(format_rat(&rat(-7)), "-7");
    }
}
