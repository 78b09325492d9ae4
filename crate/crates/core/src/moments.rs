//! Moment sequences, continued fractions and Hankel transforms.
//!
//! The moments of a family are the first column of the inverse of its
//! coefficient array. For the Bell variant they have the generating function
//! `(1 - αx - sqrt(1 - 2(α+2β)x + α²x²)) / (2βx)` and the J-fraction with
//! `b_0 = α+β`, `b_n = α+2β`, `λ_n = β(α+β)`.

use num_traits::{One, Zero};

use crate::families::{lbp_array, FamilyError, FamilyKind, FamilyParams, Variant};
use crate::linalg::bareiss_det;
use crate::rat::{binomial_rat, pow, rat, Rat};
use crate::series::{Series, SeriesError};
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MomentsError {
    #[error("{needed} continued-fraction levels are needed, {available} given")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("{needed} moments are needed, {available} given")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("moment sequence must start with 1")]
    NotNormalized,
    #[error("Hankel determinant of order {order} vanishes")]
    VanishingHankelMinor { order: usize },
    #[error("continued fraction has {b} b-coefficients and {lam} weights; weights must number one fewer")]
    ShapeMismatch { b: usize, lam: usize },
    #[error("T-fraction has {c} c-coefficients and {d} d-coefficients")]
    TShapeMismatch { c: usize, d: usize },
    #[error("the bivariate identity holds for the variant with P_1 = x - α - β only")]
    UnsupportedVariant,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, MomentsError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeq {
    terms: Vec<Rat>,
}

impl MomentSeq {
    pub fn new(terms: Vec<Rat>) -> Self {
        MomentSeq { terms }
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Rat> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelSeq {
    terms: Vec<Rat>,
}

impl HankelSeq {
    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Rat> {
        self.terms
    }
}

/// `1 / (1 - c_0 x - d_0 x / (1 - c_1 x - d_1 x / (1 - ...)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TFraction {
    c: Vec<Rat>,
    d: Vec<Rat>,
}

impl TFraction {
    pub fn new(c: Vec<Rat>, d: Vec<Rat>) -> Result<Self> {
        if c.len() != d.len() {
            return Err(MomentsError::TShapeMismatch {
                c: c.len(),
                d: d.len(),
            });
        }
        Ok(TFraction { c, d })
    }

    /// Constant coefficients at every level; `1/(1-αx-βx/(1-αx-...))` is the
    /// moment fraction of the Laurent biorthogonal family.
    pub fn constant(c: &Rat, d: &Rat, depth: usize) -> Self {
        TFraction {
            c: vec![c.clone(); depth],
            d: vec![d.clone(); depth],
        }
    }

    pub fn c(&self) -> &[Rat] {
        &self.c
    }

    pub fn d(&self) -> &[Rat] {
        &self.d
    }

    pub fn depth(&self) -> usize {
        self.c.len()
    }
}

/// `1 / (1 - b_0 x - λ_1 x² / (1 - b_1 x - λ_2 x² / (1 - ...)))`.
///
/// `lam[i]` holds `λ_{i+1}`, so there is one fewer weight than levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFraction {
    b: Vec<Rat>,
    lam: Vec<Rat>,
}

impl JFraction {
    pub fn new(b: Vec<Rat>, lam: Vec<Rat>) -> Result<Self> {
        if b.is_empty() || lam.len() + 1 != b.len() {
            return Err(MomentsError::ShapeMismatch {
                b: b.len(),
                lam: lam.len(),
            });
        }
        Ok(JFraction { b, lam })
    }

    /// `b_0 = first`, `b_n = rest`, `λ_n = weight`.
    pub fn constant_tail(first: Rat, rest: &Rat, weight: &Rat, depth: usize) -> Self {
        let depth = depth.max(1);
        let mut b = vec![rest.clone(); depth];
        b[0] = first;
        JFraction {
            b,
            lam: vec![weight.clone(); depth - 1],
        }
    }

    /// The moment fraction of the Laurent biorthogonal family.
    pub fn lbp(alpha: &Rat, beta: &Rat, depth: usize) -> Self {
        Self::bivariate(alpha, beta, &Rat::zero(), depth)
    }

    /// `b_0 = α+β+y`; its expansion is `sum_n (sum_k d̄_{n,k} y^k) x^n` where
    /// `d̄` is the inverse coefficient array.
    pub fn bivariate(alpha: &Rat, beta: &Rat, y: &Rat, depth: usize) -> Self {
        let s = alpha + beta;
        Self::constant_tail(&s + y, &(&s + beta), &(beta * &s), depth)
    }

    pub fn b(&self) -> &[Rat] {
        &self.b
    }

    pub fn lam(&self) -> &[Rat] {
        &self.lam
    }

    pub fn depth(&self) -> usize {
        self.b.len()
    }
}

/// First `n` moments, read from the inverse of the family's array.
pub fn moments(family: &FamilyKind, n: usize) -> Result<MomentSeq> {
    let inverse = family.array(n.max(1))?.inv().map_err(FamilyError::from)?;
    let g = inverse.g().expand(n.max(1))?;
    Ok(MomentSeq::new(g.into_coeffs().into_iter().take(n).collect()))
}

/// `sum_k C(n+k, 2k) C_k α^(n-k) β^k` for the Bell variant; the plain
/// variant's moments are `α` times the Bell moments shifted by one.
pub fn moment_closed_form(n: usize, p: &FamilyParams) -> Rat {
    match p.variant {
        Variant::Bell => bell_moment(n, &p.alpha, &p.beta),
        Variant::Plain if n == 0 => Rat::one(),
        Variant::Plain => &p.alpha * bell_moment(n - 1, &p.alpha, &p.beta),
    }
}

fn bell_moment(n: usize, alpha: &Rat, beta: &Rat) -> Rat {
    let n = n as i64;
    (0..=n)
        .map(|k| {
            let catalan = binomial_rat(2 * k, k) / rat(k + 1);
            binomial_rat(n + k, 2 * k)
                * catalan
                * pow(alpha, (n - k) as usize)
                * pow(beta, k as usize)
        })
        .sum()
}

/// `1/(n+1) sum_j C(n+1, j) C(2n-j, n-j) α^j β^(n-j)`, the Bell moment
/// obtained by Lagrange inversion.
pub fn moment_lagrange_form(n: usize, alpha: &Rat, beta: &Rat) -> Rat {
    let n = n as i64;
    let sum: Rat = (0..=n)
        .map(|j| {
            binomial_rat(n + 1, j)
                * binomial_rat(2 * n - j, n - j)
                * pow(alpha, j as usize)
                * pow(beta, (n - j) as usize)
        })
        .sum();
    sum / rat(n + 1)
}

/// First `n` coefficients of the moment generating function.
pub fn moment_gf(p: &FamilyParams, n: usize) -> Result<Series> {
    match p.variant {
        Variant::Bell => bell_moment_gf(&p.alpha, &p.beta, n),
        Variant::Plain => {
            let bell = bell_moment_gf(&p.alpha, &p.beta, n.max(1))?;
            let shifted = bell.mul_x().scale(&p.alpha);
            Ok(Series::one(n.max(1))?.add(&shifted))
        }
    }
}

fn bell_moment_gf(alpha: &Rat, beta: &Rat, n: usize) -> Result<Series> {
    let n = n.max(1);
    if beta.is_zero() {
        return Ok(Series::geometric(alpha, n)?);
    }
    let radicand = Series::from_poly(
        &[
            Rat::one(),
            -(rat(2) * (alpha + rat(2) * beta)),
            alpha * alpha,
        ],
        n + 1,
    )?;
    let numerator = Series::from_poly(&[Rat::one(), -alpha.clone()], n + 1)?.sub(&radicand.sqrt()?);
    Ok(numerator.div_x()?.scale(&(Rat::one() / (rat(2) * beta))))
}

/// First `n` coefficients of a T-fraction evaluated from depth `n` upward.
pub fn tfraction_series(t: &TFraction, n: usize) -> Result<Series> {
    if t.depth() < n {
        return Err(MomentsError::InsufficientDepth {
            needed: n,
            available: t.depth(),
        });
    }
    let order = n.max(1);
    let mut tail = Series::one(order)?;
    for i in (0..n).rev() {
        let level = Series::from_poly(&[Rat::one(), -t.c[i].clone()], order)?
            .sub(&tail.mul_x().scale(&t.d[i]));
        tail = level.reciprocal()?;
    }
    Ok(tail)
}

/// First `n` coefficients of a J-fraction evaluated from depth `ceil(n/2)`.
pub fn jfraction_series(j: &JFraction, n: usize) -> Result<Series> {
    let needed = n.div_ceil(2);
    if j.depth() < needed {
        return Err(MomentsError::InsufficientDepth {
            needed,
            available: j.depth(),
        });
    }
    let order = n.max(1);
    let mut tail = Series::zero(order)?;
    for i in (0..needed).rev() {
        // tail = λ_{i+1} x² K_{i+1}; level i is 1/(1 - b_i x - tail).
        let level = Series::from_poly(&[Rat::one(), -j.b[i].clone()], order)?.sub(&tail);
        let k = level.reciprocal()?;
        tail = if i == 0 {
            k
        } else {
            k.mul_x().mul_x().scale(&j.lam[i - 1])
        };
    }
    if needed == 0 {
        tail = Series::one(order)?;
    }
    Ok(tail)
}

fn functional(poly: &[Rat], mu: &[Rat], shift: usize) -> Rat {
    poly.iter()
        .enumerate()
        .map(|(i, c)| c * &mu[i + shift])
        .sum()
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Recovers `b` and `λ` from a normalized moment sequence by building the
/// monic orthogonal polynomials of the moment functional. From `m` moments
/// this yields `floor(m/2)` b-coefficients.
pub fn jfraction_from_moments(m: &MomentSeq) -> Result<JFraction> {
    let mu = m.terms();
    if mu.len() < 2 {
        return Err(MomentsError::InsufficientMoments {
            needed: 2,
            available: mu.len(),
        });
    }
    if !mu[0].is_one() {
        return Err(MomentsError::NotNormalized);
    }
    let levels = mu.len() / 2;
    let mut b = Vec::with_capacity(levels);
    let mut lam = Vec::with_capacity(levels - 1);
    let mut prev: Vec<Rat> = Vec::new();
    let mut cur = vec![Rat::one()];
    let mut prev_norm = Rat::one();
    for k in 0..levels {
        let square = poly_mul(&cur, &cur);
        let norm = functional(&square, mu, 0);
        if norm.is_zero() {
            return Err(MomentsError::VanishingHankelMinor { order: k + 1 });
        }
        let bk = functional(&square, mu, 1) / &norm;
        let lk = &norm / &prev_norm;
        if k > 0 {
            lam.push(lk.clone());
        }
        let mut next = vec![Rat::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &bk;
        }
        if k > 0 {
            for (i, c) in prev.iter().enumerate() {
                next[i] -= c * &lk;
            }
        }
        b.push(bk);
        prev = std::mem::replace(&mut cur, next);
        prev_norm = norm;
    }
    JFraction::new(b, lam)
}

/// `h_k = det(μ_{i+j})_{0 <= i,j <= k}` for `k < n`; needs `2n - 1` moments.
pub fn hankel_transform(m: &MomentSeq, n: usize) -> Result<HankelSeq> {
    let needed = (2 * n).saturating_sub(1);
    if m.len() < needed {
        return Err(MomentsError::InsufficientMoments {
            needed,
            available: m.len(),
        });
    }
    let mu = m.terms();
    let terms = (0..n)
        .map(|k| {
            let matrix: Vec<Vec<Rat>> = (0..=k)
                .map(|i| (0..=k).map(|j| mu[i + j].clone()).collect())
                .collect();
            bareiss_det(&matrix)
        })
        .collect();
    Ok(HankelSeq { terms })
}

/// `t_n = sum_k C(n, k) m^(n-k) s_k`.
pub fn binomial_transform(s: &[Rat], m: &Rat) -> Vec<Rat> {
    (0..s.len())
        .map(|n| {
            s.iter()
                .take(n + 1)
                .enumerate()
                .map(|(k, v)| binomial_rat(n as i64, k as i64) * pow(m, n - k) * v)
                .sum()
        })
        .collect()
}

pub fn row_sums(t: &Triangle) -> Vec<Rat> {
    t.row_sums()
}

/// Where the triangle and the bivariate J-fraction first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateMismatch {
    pub y: Rat,
    pub index: usize,
    pub from_triangle: Rat,
    pub from_fraction: Rat,
}

/// Sample points used by [`bivariate_check`].
pub fn default_sample_points() -> Vec<Rat> {
    use crate::rat::ratio;
    vec![rat(0), rat(1), rat(2), rat(-1), ratio(1, 2), ratio(-3, 7)]
}

/// Checks the bivariate generating function of the inverse coefficient array
/// against its J-fraction for the first `n` coefficients at the default
/// sample points. `None` means every point agreed.
pub fn bivariate_check(p: &FamilyParams, n: usize) -> Result<Option<BivariateMismatch>> {
    bivariate_check_at(p, n, &default_sample_points())
}

pub fn bivariate_check_at(p: &FamilyParams, n: usize, ys: &[Rat]) -> Result<Option<BivariateMismatch>> {
    if p.variant != Variant::Bell {
        return Err(MomentsError::UnsupportedVariant);
    }
    if n == 0 {
        return Ok(None);
    }
    let inverse = lbp_array(p, n)?
        .inv()
        .and_then(|a| a.triangle())
        .map_err(FamilyError::from)?;
    for y in ys {
        let cf = jfraction_series(&JFraction::bivariate(&p.alpha, &p.beta, y, n.div_ceil(2)), n)?;
        for r in 0..n {
            let expected: Rat = inverse
                .row(r)
                .iter()
                .enumerate()
                .map(|(k, d)| d * pow(y, k))
                .sum();
            if cf.coeffs()[r] != expected {
                return Ok(Some(BivariateMismatch {
                    y: y.clone(),
                    index: r,
                    from_triangle: expected,
                    from_fraction: cf.coeffs()[r].clone(),
                }));
            }
        }
    }
    Ok(None)
}
