//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] knows exactly `order()` leading coefficients. Binary
//! operations truncate to the smaller order of their operands and never
//! report coefficients past what the inputs determine.

mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rat::{rat, Rat};

pub use ratfunc::{Poly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("a series needs at least one known coefficient")]
    Empty,
    #[error("denominator has zero constant term")]
    ZeroDenominatorConstant,
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("reversion needs f(0) = 0 and f'(0) != 0 (with at least two known coefficients)")]
    NotRevertible,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("dividing by x needs a zero constant term and order >= 2")]
    NotDivisibleByX,
    #[error("{requested} coefficients requested but only {available} are known")]
    InsufficientOrder { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// A formal power series known modulo `x^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Series { coeffs })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    /// The exact polynomial `coeffs`, known to `order` terms (zero padded).
    pub fn from_poly(coeffs: &[Rat], order: usize) -> Result<Self> {
        if order == 0 {
            return Err(SeriesError::Empty);
        }
        let mut c: Vec<Rat> = coeffs.iter().take(order).cloned().collect();
        c.resize(order, Rat::zero());
        Ok(Series { coeffs: c })
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::from_poly(&[], order)
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::from_poly(&[Rat::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Result<Self> {
        Self::from_poly(&[Rat::zero(), Rat::one()], order)
    }

    /// `1/(1 - c x)`.
    pub fn geometric(c: &Rat, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(SeriesError::Empty);
        }
        let mut coeffs = Vec::with_capacity(order);
        let mut term = Rat::one();
        for _ in 0..order {
            coeffs.push(term.clone());
            term *= c;
        }
        Ok(Series { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// `[x^i]`, or `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Rat> {
        self.coeffs.get(i)
    }

    /// Keeps the first `min(n, order)` coefficients. `n == 0` is clamped to 1.
    pub fn truncate(&self, n: usize) -> Series {
        let n = n.clamp(1, self.order());
        Series {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Exactly the first `n` coefficients, failing if fewer are known.
    pub fn prefix(&self, n: usize) -> Result<Series> {
        if n == 0 {
            return Err(SeriesError::Empty);
        }
        if n > self.order() {
            return Err(SeriesError::InsufficientOrder {
                requested: n,
                available: self.order(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..n].to_vec(),
        })
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: mul_trunc(&self.coeffs, &other.coeffs, n),
        }
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order()).expect("order >= 1");
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse via `b_0 = 1/a_0`,
    /// `b_n = -(1/a_0) * sum_{j=1..n} a_j b_{n-j}`.
    pub fn reciprocal(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(Series {
            coeffs: recip_trunc(&self.coeffs, self.order()),
        })
    }

    /// `self / other`, both known to the smaller order.
    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        Ok(Series {
            coeffs: compose_trunc(&self.coeffs, &inner.coeffs, n),
        })
    }

    /// Compositional inverse by Newton iteration on `f(g) = x`.
    ///
    /// The result has the same order as `self`: `[x^n] f̄` depends on
    /// `f_1..f_n` only.
    pub fn revert(&self) -> Result<Series> {
        let n = self.order();
        if n < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotRevertible);
        }
        let f = &self.coeffs;
        let df: Vec<Rat> = (1..n).map(|i| &f[i] * rat(i as i64)).collect();
        let mut g = vec![Rat::zero(), Rat::one() / &f[1]];
        let mut prec = 2;
        while prec < n {
            let next = (2 * prec).min(n);
            g.resize(next, Rat::zero());
            let mut residual = compose_trunc(f, &g, next);
            residual[1] -= Rat::one();
            // residual = O(x^prec), so f'(g) is only needed to next - 1 terms.
            let slope = compose_trunc(&df, &g, next - 1);
            let correction = mul_trunc(&residual, &recip_trunc(&slope, next), next);
            for (gi, ci) in g.iter_mut().zip(&correction) {
                *gi -= ci;
            }
            prec = next;
        }
        g.truncate(n);
        Ok(Series { coeffs: g })
    }

    /// Square root with constant term 1, by Newton iteration `s <- (s + a/s)/2`.
    pub fn sqrt(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm);
        }
        let n = self.order();
        let half = Rat::new(1.into(), 2.into());
        let mut s = vec![Rat::one()];
        let mut prec = 1;
        while prec < n {
            let next = (2 * prec).min(n);
            let quotient = mul_trunc(&self.coeffs, &recip_trunc(&s, next), next);
            s.resize(next, Rat::zero());
            for (si, qi) in s.iter_mut().zip(&quotient) {
                *si = (&*si + qi) * &half;
            }
            prec = next;
        }
        Ok(Series { coeffs: s })
    }

    /// `self / x`; requires a zero constant term. The order drops by one.
    pub fn div_x(&self) -> Result<Series> {
        if self.order() < 2 || !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotDivisibleByX);
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `x * self`; the order grows by one.
    pub fn mul_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Termwise derivative; the order drops by one (clamped at 1).
    pub fn derivative(&self) -> Series {
        if self.order() == 1 {
            return Series {
                coeffs: vec![Rat::zero()],
            };
        }
        Series {
            coeffs: (1..self.order())
                .map(|i| &self.coeffs[i] * rat(i as i64))
                .collect(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + O(x^{})", crate::rat::RatList(&self.coeffs), self.order())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

/// The first `n` Taylor coefficients of `rf`.
pub fn expand(rf: &RatFunc, n: usize) -> Result<Series> {
    rf.expand(n)
}

// Raw helpers. Coefficients past a slice's end are treated as zero; callers
// are responsible for only trusting the first `n` outputs.

fn get(a: &[Rat], i: usize) -> Option<&Rat> {
    a.get(i).filter(|v| !v.is_zero())
}

pub(crate) fn mul_trunc(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, ai) in a.iter().take(n).enumerate() {
        if ai.is_zero() {
            continue;
        }
        for j in 0..(n - i) {
            if let Some(bj) = get(b, j) {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

pub(crate) fn recip_trunc(a: &[Rat], n: usize) -> Vec<Rat> {
    let inv0 = Rat::one() / &a[0];
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    out.push(inv0.clone());
    for k in 1..n {
        let mut acc = Rat::zero();
        for j in 1..=k {
            if let Some(aj) = get(a, j) {
                acc += aj * &out[k - j];
            }
        }
        out.push(-(acc * &inv0));
    }
    out
}

pub(crate) fn compose_trunc(outer: &[Rat], inner: &[Rat], n: usize) -> Vec<Rat> {
    let m = outer.len().min(n);
    let mut acc = vec![Rat::zero(); n];
    for i in (0..m).rev() {
        acc = mul_trunc(&acc, inner, n);
        acc[0] += &outer[i];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ratio, rats};

    fn s(v: &[i64]) -> Series {
        Series::from_ints(v).unwrap()
    }

    #[test]
    fn geometric_expansion() {
        let rf = RatFunc::from_ints(&[1], &[1, -1]).unwrap();
        assert_eq!(rf.expand(5).unwrap(), s(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn schroeder_first_column() {
        let rf = RatFunc::from_ints(&[1, -1], &[1, 1]).unwrap();
        assert_eq!(rf.expand(6).unwrap(), s(&[1, -2, 2, -2, 2, -2]));
    }

    #[test]
    fn squared_ratio_expansion() {
        // (1-x)^2/(1+x)^2 by long division: 1, -4, 8, -12
        let rf = RatFunc::from_ints(&[1, -2, 1], &[1, 2, 1]).unwrap();
        assert_eq!(rf.expand(4).unwrap(), s(&[1, -4, 8, -12]));
    }

    #[test]
    fn expand_rejects_zero_denominator_constant() {
        assert_eq!(
            RatFunc::from_ints(&[1], &[0, 1]).unwrap_err(),
            SeriesError::ZeroDenominatorConstant
        );
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 1, 1]).mul(&s(&[1, -1, 0])), s(&[1, 0, 0]));
        let a = RatFunc::from_ints(&[1, -1], &[1, 1]).unwrap().expand(4).unwrap();
        let b = RatFunc::from_ints(&[1, 1], &[1, -1]).unwrap().expand(4).unwrap();
        assert_eq!(&a * &b, s(&[1, 0, 0, 0]));
        let schroeder = s(&[1, 2, 6, 22]);
        assert_eq!(&schroeder * &schroeder, s(&[1, 4, 16, 68]));
    }

    #[test]
    fn mismatched_orders_truncate_to_minimum() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a - &b), s(&[0, 1]));
    }

    #[test]
    fn reciprocals() {
        assert_eq!(s(&[1, 1]).reciprocal().unwrap(), s(&[1, -1]));
        assert_eq!(
            s(&[2, 0, 0]).reciprocal().unwrap(),
            Series::new(vec![ratio(1, 2), rat(0), rat(0)]).unwrap()
        );
        assert_eq!(s(&[0, 1]).reciprocal(), Err(SeriesError::ZeroConstantTerm));
        // A-sequence of the alpha = beta = 1 array; B*A = 1 gives the moments.
        assert_eq!(
            s(&[1, -2, -2, -6, -22]).reciprocal().unwrap(),
            s(&[1, 2, 6, 22, 90])
        );
    }

    #[test]
    fn compositions() {
        let a = s(&[3, 1, 4, 1, 5]);
        assert_eq!(a.compose(&Series::x(5).unwrap()).unwrap(), a);
        assert_eq!(s(&[1, 1, 1, 1]).compose(&s(&[0, 1, 1, 0])).unwrap(), s(&[1, 1, 2, 3]));
        let geo = RatFunc::from_ints(&[1], &[1, -1]).unwrap().expand(5).unwrap();
        let inner = RatFunc::from_ints(&[0, 1], &[1, 1]).unwrap().expand(5).unwrap();
        assert_eq!(geo.compose(&inner).unwrap(), s(&[1, 1, 0, 0, 0]));
        assert_eq!(a.compose(&s(&[1, 1])), Err(SeriesError::NonzeroInnerConstant));
    }

    #[test]
    fn reversions() {
        let f = RatFunc::from_ints(&[0, 1], &[1, -1]).unwrap().expand(8).unwrap();
        let expected = RatFunc::from_ints(&[0, 1], &[1, 1]).unwrap().expand(8).unwrap();
        assert_eq!(f.revert().unwrap(), expected);

        let f = RatFunc::from_ints(&[0, 1, -1], &[1, 1]).unwrap().expand(7).unwrap();
        assert_eq!(f.revert().unwrap(), s(&[0, 1, 2, 6, 22, 90, 394]));

        assert_eq!(s(&[1, 1]).revert(), Err(SeriesError::NotRevertible));
        assert_eq!(s(&[0, 0, 1]).revert(), Err(SeriesError::NotRevertible));
        assert_eq!(s(&[0]).revert(), Err(SeriesError::NotRevertible));
        assert_eq!(
            s(&[0, 2]).revert().unwrap(),
            Series::new(vec![rat(0), ratio(1, 2)]).unwrap()
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(s(&[1, 0, 0, 0]).sqrt().unwrap(), s(&[1, 0, 0, 0]));
        let a = s(&[1, -6, 1, 0, 0]);
        let r = a.sqrt().unwrap();
        assert_eq!(&r.coeffs()[..4], rats(&[1, -3, -4, -12]).as_slice());
        assert_eq!(&r * &r, a);
        assert_eq!(s(&[2, 1]).sqrt(), Err(SeriesError::SqrtConstantTerm));
    }

    #[test]
    fn schroeder_from_radical() {
        // (1 - x - sqrt(1 - 6x + x^2)) / (2x)
        let n = 6;
        let root = s(&[1, -6, 1, 0, 0, 0, 0]).sqrt().unwrap();
        let top = s(&[1, -1, 0, 0, 0, 0, 0]).sub(&root);
        let g = top.div_x().unwrap().scale(&ratio(1, 2));
        assert_eq!(g.prefix(n).unwrap(), s(&[1, 2, 6, 22, 90, 394]));
    }

    #[test]
    fn shifts_and_derivative() {
        assert_eq!(s(&[0, 1, 2]).div_x().unwrap(), s(&[1, 2]));
        assert_eq!(s(&[1, 2]).div_x(), Err(SeriesError::NotDivisibleByX));
        assert_eq!(s(&[1, 2]).mul_x(), s(&[0, 1, 2]));
        assert_eq!(s(&[5, 1, 1, 1]).derivative(), s(&[1, 2, 3]));
    }

    #[test]
    fn prefix_refuses_to_invent_coefficients() {
        assert_eq!(
            s(&[1, 2]).prefix(3),
            Err(SeriesError::InsufficientOrder { requested: 3, available: 2 })
        );
        assert_eq!(s(&[1, 2, 3]).truncate(10).order(), 3);
    }
}
