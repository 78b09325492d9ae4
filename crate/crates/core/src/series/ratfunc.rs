use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Result, Series, SeriesError};
use crate::rat::{lcm_of_denominators, Rat};

/// Dense integer polynomial, low degree first, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Poly(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Number of leading zero coefficients (the power of `x` dividing it).
    fn valuation(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly(self.0[k.min(self.0.len())..].to_vec())
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An exact rational function `num/den` with integer coefficients and
/// `den(0) != 0`, so that it has a Taylor expansion at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(SeriesError::ZeroDenominatorConstant);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    /// Builds from rational coefficient lists by clearing denominators.
    pub fn from_rats(num: &[Rat], den: &[Rat]) -> Result<Self> {
        let l = lcm_of_denominators(num.iter().chain(den));
        let to_int = |v: &Rat| (v * Rat::from_integer(l.clone())).to_integer();
        Self::new(
            Poly::new(num.iter().map(to_int).collect()),
            Poly::new(den.iter().map(to_int).collect()),
        )
    }

    pub fn polynomial(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::constant(BigInt::one()),
        }
    }

    /// Reduces `num/den` when both share a power of `x`, then checks `den(0)`.
    /// Used by parsers where `x/x` style inputs may appear.
    pub fn from_quotient(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(SeriesError::ZeroDenominatorConstant);
        }
        let k = if num.is_zero() {
            den.valuation()
        } else {
            num.valuation().min(den.valuation())
        };
        Self::new(num.shift_down(k), den.shift_down(k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn value_at_zero(&self) -> Rat {
        Rat::new(self.num.coeff(0), self.den.coeff(0))
    }

    /// Taylor coefficients of `num/den` through `x^(n-1)`.
    pub fn expand(&self, n: usize) -> Result<Series> {
        if n == 0 {
            return Err(SeriesError::Empty);
        }
        let d0 = Rat::from_integer(self.den.coeff(0));
        let den: Vec<Rat> = self.den.coeffs().iter().cloned().map(Rat::from_integer).collect();
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Rat::from_integer(self.num.coeff(i));
            for j in 1..den.len().min(i + 1) {
                acc -= &den[j] * &out[i - j];
            }
            out.push(acc / &d0);
        }
        Series::new(out)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Self::from_quotient(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn pow(&self, k: usize) -> RatFunc {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// `self(inner(x))`, exact. Requires `inner(0) = 0`.
    ///
    /// With `self = p/q`, `inner = r/s` and `d = max(deg p, deg q)`, the
    /// result is `sum p_i r^i s^(d-i) / sum q_i r^i s^(d-i)`.
    pub fn compose(&self, inner: &RatFunc) -> Result<RatFunc> {
        if !inner.num.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let d = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let r_pows: Vec<Poly> = (0..=d).map(|i| inner.num.pow(i)).collect();
        let s_pows: Vec<Poly> = (0..=d).map(|i| inner.den.pow(i)).collect();
        let homogenize = |p: &Poly| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::default(), |acc, (i, c)| {
                    acc.add(&r_pows[i].mul(&s_pows[d - i]).scale(c))
                })
        };
        Self::new(homogenize(&self.num), homogenize(&self.den))
    }

    /// Equality as functions: `a/b == c/d` iff `a d == b c`.
    pub fn equivalent(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Divides numerator and denominator by their common integer content and
    /// makes `den(0)` positive. Does not cancel polynomial factors.
    pub fn normalized(&self) -> RatFunc {
        let g = self.num.content().gcd(&self.den.content());
        let sign = if self.den.coeff(0).is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let div = |p: &Poly| Poly::new(p.coeffs().iter().map(|c| c / &g * &sign).collect());
        RatFunc {
            num: div(&self.num),
            den: div(&self.den),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den == Poly::constant(BigInt::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
