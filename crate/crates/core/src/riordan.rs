//! The Riordan group.
//!
//! A Riordan array `(g, f)` is the lower-triangular matrix whose column `k`
//! is generated by `g f^k`. Arrays here are normalized: `g(0) = 1`,
//! `f(0) = 0` and `f'(0) = 1`, so every materialized triangle has a unit
//! diagonal.

use num_traits::{One, Zero};

use crate::linalg::hessenberg_char_polys;
use crate::rat::Rat;
use crate::series::{RatFunc, Series, SeriesError};
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RiordanError {
    #[error("g(0) must be 1, found {0}")]
    GConstant(Rat),
    #[error("f(0) must be 0, found {0}")]
    FConstant(Rat),
    #[error("f'(0) must be 1, found {0}")]
    FLinear(Rat),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("entry ({n}, {k}) lies outside the order-{order} triangle")]
    IndexOutOfRange { n: usize, k: usize, order: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, RiordanError>;

/// A generating function: exact when given as a rational function,
/// otherwise a truncated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Rational(RatFunc),
    Series(Series),
}

impl Generator {
    /// The first `n` coefficients.
    pub fn expand(&self, n: usize) -> std::result::Result<Series, SeriesError> {
        match self {
            Generator::Rational(rf) => rf.expand(n),
            Generator::Series(s) => s.prefix(n),
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            Generator::Rational(rf) => Some(rf),
            Generator::Series(_) => None,
        }
    }
}

impl From<RatFunc> for Generator {
    fn from(rf: RatFunc) -> Self {
        Generator::Rational(rf)
    }
}

impl From<Series> for Generator {
    fn from(s: Series) -> Self {
        Generator::Series(s)
    }
}

/// The A- and Z-sequences of an array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqPair {
    pub a: Vec<Rat>,
    pub z: Vec<Rat>,
}

/// A validated Riordan array with a materialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    g: Generator,
    f: Generator,
    order: usize,
}

impl RiordanArray {
    /// Validates `g(0) = 1`, `f(0) = 0`, `f'(0) = 1`, and that both
    /// generators are known to `order` terms.
    pub fn make(g: impl Into<Generator>, f: impl Into<Generator>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(RiordanError::ZeroOrder);
        }
        let (g, f) = (g.into(), f.into());
        let gs = g.expand(order)?;
        let fs = f.expand(order.max(2))?;
        if !gs.coeffs()[0].is_one() {
            return Err(RiordanError::GConstant(gs.coeffs()[0].clone()));
        }
        if !fs.coeffs()[0].is_zero() {
            return Err(RiordanError::FConstant(fs.coeffs()[0].clone()));
        }
        if !fs.coeffs()[1].is_one() {
            return Err(RiordanError::FLinear(fs.coeffs()[1].clone()));
        }
        Ok(RiordanArray { g, f, order })
    }

    /// `(1, x)`.
    pub fn identity(order: usize) -> Result<Self> {
        Self::make(
            RatFunc::from_ints(&[1], &[1])?,
            RatFunc::from_ints(&[0, 1], &[1])?,
            order,
        )
    }

    /// `B^m = (1/(1 - m x), x/(1 - m x))`, with entries `C(n,k) m^(n-k)`.
    pub fn binomial_power(m: &Rat, order: usize) -> Result<Self> {
        let den = [Rat::one(), -m.clone()];
        Self::make(
            RatFunc::from_rats(&[Rat::one()], &den)?,
            RatFunc::from_rats(&[Rat::zero(), Rat::one()], &den)?,
            order,
        )
    }

    pub fn g(&self) -> &Generator {
        &self.g
    }

    pub fn f(&self) -> &Generator {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Same generators, different materialization order.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        Self::make(self.g.clone(), self.f.clone(), order)
    }

    fn g_series(&self, n: usize) -> Result<Series> {
        Ok(self.g.expand(n)?)
    }

    fn f_series(&self, n: usize) -> Result<Series> {
        Ok(self.f.expand(n.max(2))?)
    }

    /// `[x^n] g f^k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rat> {
        if k > n || n >= self.order {
            return Err(RiordanError::IndexOutOfRange {
                n,
                k,
                order: self.order,
            });
        }
        let col = self.g_series(n + 1)?.mul(&self.f_series(n + 1)?.truncate(n + 1).pow(k));
        Ok(col.coeffs()[n].clone())
    }

    /// All entries with `k <= n < order`.
    pub fn triangle(&self) -> Result<Triangle> {
        let n = self.order;
        let f = self.f_series(n)?.truncate(n);
        let mut col = self.g_series(n)?;
        let mut rows: Vec<Vec<Rat>> = (0..n).map(|r| Vec::with_capacity(r + 1)).collect();
        for k in 0..n {
            for (r, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeffs()[r].clone());
            }
            col = col.mul(&f);
        }
        Ok(Triangle::from_rows(rows).expect("rows built with n + 1 entries"))
    }

    /// Group product `(g, f)(h, l) = (g (h∘f), l∘f)`.
    ///
    /// Stays exact when all four generators are rational functions.
    pub fn mul(&self, other: &RiordanArray) -> Result<RiordanArray> {
        let order = self.order.min(other.order);
        if let (Some(g), Some(f), Some(h), Some(l)) = (
            self.g.as_ratfunc(),
            self.f.as_ratfunc(),
            other.g.as_ratfunc(),
            other.f.as_ratfunc(),
        ) {
            let new_g = g.mul(&h.compose(f)?);
            let new_f = l.compose(f)?;
            return Self::make(new_g, new_f, order);
        }
        let n = order.max(2);
        let f = self.f_series(n)?;
        let new_g = self.g_series(order)?.mul(&other.g_series(order)?.compose(&f)?);
        let new_f = other.f_series(n)?.compose(&f)?;
        Self::make(new_g, new_f, order)
    }

    /// Group inverse `(1/(g∘f̄), f̄)`.
    pub fn inv(&self) -> Result<RiordanArray> {
        let n = self.order.max(2);
        let fbar = self.f_series(n)?.revert()?;
        let g = self.g_series(n)?.compose(&fbar)?.reciprocal()?;
        Self::make(g.truncate(self.order), fbar, self.order)
    }

    /// The action `g(x) s(f(x))` on a series, to `min(order, s.order())` terms.
    pub fn act(&self, s: &Series) -> Result<Series> {
        let n = self.order.min(s.order());
        let f = self.f_series(n)?.truncate(n);
        Ok(self.g_series(n)?.mul(&s.truncate(n).compose(&f)?))
    }

    /// First `n` terms of `A(x) = x / f̄(x)`.
    pub fn a_sequence(&self, n: usize) -> Result<Vec<Rat>> {
        Ok(self.a_series(n)?.into_coeffs())
    }

    fn a_series(&self, n: usize) -> Result<Series> {
        let fbar = self.f_series(n + 1)?.truncate(n + 1).revert()?;
        Ok(fbar.div_x()?.reciprocal()?)
    }

    /// First `n` terms of `Z(x) = (1/f̄(x)) (1 - 1/g(f̄(x)))`.
    pub fn z_sequence(&self, n: usize) -> Result<Vec<Rat>> {
        let fbar = self.f_series(n + 1)?.truncate(n + 1).revert()?;
        let g_fbar = self.g_series(n + 1)?.compose(&fbar)?;
        let u = Series::one(n + 1)?.sub(&g_fbar.reciprocal()?);
        let a = fbar.div_x()?.reciprocal()?;
        Ok(u.div_x()?.mul(&a).into_coeffs())
    }

    pub fn sequences(&self, n: usize) -> Result<SeqPair> {
        Ok(SeqPair {
            a: self.a_sequence(n)?,
            z: self.z_sequence(n)?,
        })
    }

    /// The `n × n` production matrix: column 0 holds the Z-sequence and
    /// column `j >= 1` holds the A-sequence shifted so that `a_0` sits on
    /// the superdiagonal.
    pub fn production_matrix(&self, n: usize) -> Result<ProductionMatrix> {
        let SeqPair { a, z } = self.sequences(n.max(1))?;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match j {
                        0 => z[i].clone(),
                        j if j <= i + 1 => a[i + 1 - j].clone(),
                        _ => Rat::zero(),
                    })
                    .collect()
            })
            .collect();
        Ok(ProductionMatrix { entries })
    }
}

/// A square lower-Hessenberg matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductionMatrix {
    entries: Vec<Vec<Rat>>,
}

impl ProductionMatrix {
    /// Accepts a square matrix with zeros above the superdiagonal.
    pub fn from_entries(entries: Vec<Vec<Rat>>) -> Option<Self> {
        let n = entries.len();
        let ok = entries.iter().enumerate().all(|(i, row)| {
            row.len() == n && row.iter().skip(i + 2).all(Zero::is_zero)
        });
        ok.then_some(ProductionMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    /// Coefficients of `det(x I_k - P_k)` for `k = 0..=size`, where `P_k`
    /// is the order-`k` leading principal submatrix.
    pub fn char_polys(&self) -> Vec<Vec<Rat>> {
        hessenberg_char_polys(&self.entries, self.size())
    }
}
