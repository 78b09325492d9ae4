//! Polynomial families with constant recurrence coefficients.
//!
//! * Laurent biorthogonal families `P_n = (x - α) P_{n-1} - β x P_{n-2}`,
//!   whose coefficient arrays are the Riordan arrays
//!   `(1/(1+αx), x(1-βx)/(1+αx))` ([`Variant::Plain`], `P_1 = x - α`) and
//!   `((1-βx)/(1+αx), x(1-βx)/(1+αx))` ([`Variant::Bell`], `P_1 = x - α - β`).
//! * Their associated orthogonal families.
//! * Generalized families `P_n = (x - α) P_{n-1} - β (x - γ) P_{n-2}` and
//!   their associated orthogonal families.
//! * Derivative arrays and Hessenberg determinant representations.
//!
//! Triangles are built from the recurrences; the Riordan arrays are exposed
//! separately so the two constructions can be checked against each other.

use num_traits::{One, Zero};

use crate::rat::{binomial_rat, pow, rat, Rat};
use crate::riordan::{RiordanArray, RiordanError};
use crate::series::{RatFunc, SeriesError};
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("at least one row is required")]
    ZeroRows,
    #[error("entry ({n}, {k}) is not in the lower triangle")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("α + β = γ is the excluded degenerate case for the associated orthogonal family")]
    DegenerateOrthogonal,
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

impl From<SeriesError> for FamilyError {
    fn from(e: SeriesError) -> Self {
        FamilyError::Riordan(e.into())
    }
}

pub type Result<T> = std::result::Result<T, FamilyError>;

/// Which first polynomial starts the Laurent biorthogonal recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// `P_1 = x - α`; array `(1/(1+αx), x(1-βx)/(1+αx))`.
    Plain,
    /// `P_1 = x - (α+β)`; array `((1-βx)/(1+αx), x(1-βx)/(1+αx))`, an
    /// element of the Bell subgroup.
    #[default]
    Bell,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub variant: Variant,
}

impl FamilyParams {
    /// Parameters with the [`Variant::Bell`] start.
    pub fn new(alpha: Rat, beta: Rat) -> Self {
        FamilyParams {
            alpha,
            beta,
            variant: Variant::Bell,
        }
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn ints(alpha: i64, beta: i64) -> Self {
        Self::new(rat(alpha), rat(beta))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenFamilyParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

impl GenFamilyParams {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        GenFamilyParams { alpha, beta, gamma }
    }

    pub fn ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(rat(alpha), rat(beta), rat(gamma))
    }

    /// `β(α+β-γ)`, the Hankel ratio and J-fraction weight.
    pub fn weight(&self) -> Rat {
        &self.beta * (&self.alpha + &self.beta - &self.gamma)
    }
}

/// Identifies a polynomial family and its coefficient array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Lbp(FamilyParams),
    Orthogonal(FamilyParams),
    Generalized(GenFamilyParams),
    GeneralizedOrthogonal(GenFamilyParams),
}

impl FamilyKind {
    /// The Riordan array whose triangle is this family's coefficient array.
    pub fn array(&self, order: usize) -> Result<RiordanArray> {
        match self {
            FamilyKind::Lbp(p) => lbp_array(p, order),
            FamilyKind::Orthogonal(p) => assoc_orthogonal_array(p, order),
            FamilyKind::Generalized(p) => gen_array(p, order),
            FamilyKind::GeneralizedOrthogonal(p) => gen_assoc_array(p, order),
        }
    }

    /// Coefficient triangle with `rows` rows, from the recurrence.
    pub fn family(&self, rows: usize) -> Result<PolyFamily> {
        match self {
            FamilyKind::Lbp(p) => lbp_triangle(p, rows),
            FamilyKind::Orthogonal(p) => assoc_orthogonal(p, rows),
            FamilyKind::Generalized(p) => gen_triangle(p, rows),
            FamilyKind::GeneralizedOrthogonal(p) => gen_assoc_orthogonal(p, rows),
        }
    }
}

/// A monic polynomial family: row `n` of `coeffs` holds `P_n`, low degree
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFamily {
    kind: FamilyKind,
    coeffs: Triangle,
}

impl PolyFamily {
    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn coeffs(&self) -> &Triangle {
        &self.coeffs
    }

    pub fn into_triangle(self) -> Triangle {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn polynomial(&self, n: usize) -> &[Rat] {
        self.coeffs.row(n)
    }

    /// `[P_0(t), ..., P_{len-1}(t)]` by Horner's rule.
    pub fn eval(&self, t: &Rat) -> Vec<Rat> {
        self.coeffs.rows().iter().map(|row| horner(row, t)).collect()
    }
}

pub fn horner(coeffs: &[Rat], t: &Rat) -> Rat {
    coeffs
        .iter()
        .rev()
        .fold(Rat::zero(), |acc, c| acc * t + c)
}

/// Coefficients of `p(x + c)`.
pub fn shift_poly(coeffs: &[Rat], c: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); coeffs.len()];
    for (i, a) in coeffs.iter().enumerate() {
        // a (x + c)^i = a sum_j C(i, j) c^(i-j) x^j
        for (j, o) in out.iter_mut().enumerate().take(i + 1) {
            *o += a * binomial_rat(i as i64, j as i64) * pow(c, i - j);
        }
    }
    out
}

/// Rows of `P_0 = 1`, `P_1 = x - start`,
/// `P_n = (x - shift) P_{n-1} - (slope x + offset) P_{n-2}`.
fn recurrence_triangle(rows: usize, start: &Rat, shift: &Rat, slope: &Rat, offset: &Rat) -> Result<Triangle> {
    if rows == 0 {
        return Err(FamilyError::ZeroRows);
    }
    let mut polys: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    if rows > 1 {
        polys.push(vec![-start.clone(), Rat::one()]);
    }
    for n in 2..rows {
        let (p1, p2) = (&polys[n - 1], &polys[n - 2]);
        let mut next = vec![Rat::zero(); n + 1];
        for (i, c) in p1.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * shift;
        }
        for (i, c) in p2.iter().enumerate() {
            next[i + 1] -= c * slope;
            next[i] -= c * offset;
        }
        polys.push(next);
    }
    Ok(Triangle::from_rows(polys).expect("row n has n + 1 coefficients"))
}

fn f_over_x(p: &FamilyParams) -> Result<RatFunc> {
    Ok(RatFunc::from_rats(
        &[Rat::one(), -p.beta.clone()],
        &[Rat::one(), p.alpha.clone()],
    )?)
}

/// The Riordan array of the Laurent biorthogonal family.
pub fn lbp_array(p: &FamilyParams, order: usize) -> Result<RiordanArray> {
    let den = [Rat::one(), p.alpha.clone()];
    let g = match p.variant {
        Variant::Plain => RatFunc::from_rats(&[Rat::one()], &den)?,
        Variant::Bell => f_over_x(p)?,
    };
    let f = RatFunc::from_rats(&[Rat::zero(), Rat::one(), -p.beta.clone()], &den)?;
    Ok(RiordanArray::make(g, f, order)?)
}

/// Coefficient triangle of the Laurent biorthogonal family, rows `0..rows`.
pub fn lbp_triangle(p: &FamilyParams, rows: usize) -> Result<PolyFamily> {
    let start = match p.variant {
        Variant::Plain => p.alpha.clone(),
        Variant::Bell => &p.alpha + &p.beta,
    };
    let coeffs = recurrence_triangle(rows, &start, &p.alpha, &p.beta, &Rat::zero())?;
    Ok(PolyFamily {
        kind: FamilyKind::Lbp(p.clone()),
        coeffs,
    })
}

/// `[x^n] g f^k` of the Laurent biorthogonal array in closed form:
/// `(-1)^(n-k) sum_j C(e, j) C(n-j, n-k-j) α^(n-k-j) β^j`, where `e = k+1`
/// for the Bell variant and `e = k` for the plain one.
pub fn coeff_closed_form(n: usize, k: usize, p: &FamilyParams) -> Result<Rat> {
    if k > n {
        return Err(FamilyError::IndexOutOfRange { n, k });
    }
    let e = match p.variant {
        Variant::Plain => k,
        Variant::Bell => k + 1,
    } as i64;
    let (n, k) = (n as i64, k as i64);
    let mut sum = Rat::zero();
    for j in 0..=e.min(n - k) {
        sum += binomial_rat(e, j)
            * binomial_rat(n - j, n - k - j)
            * pow(&p.alpha, (n - k - j) as usize)
            * pow(&p.beta, j as usize);
    }
    Ok(if (n - k) % 2 == 0 { sum } else { -sum })
}

/// The associated orthogonal array `(1/(1+(α+β)x), x/((1+βx)(1+(α+β)x)))`.
pub fn assoc_orthogonal_array(p: &FamilyParams, order: usize) -> Result<RiordanArray> {
    let s = &p.alpha + &p.beta;
    let den = [Rat::one(), &p.alpha + &p.beta * rat(2), &p.beta * &s];
    let g = RatFunc::from_rats(&[Rat::one()], &[Rat::one(), s])?;
    let f = RatFunc::from_rats(&[Rat::zero(), Rat::one()], &den)?;
    Ok(RiordanArray::make(g, f, order)?)
}

/// The associated orthogonal family
/// `P̃_n = (x - (α+2β)) P̃_{n-1} - β(α+β) P̃_{n-2}`, `P̃_1 = x - (α+β)`.
pub fn assoc_orthogonal(p: &FamilyParams, rows: usize) -> Result<PolyFamily> {
    let s = &p.alpha + &p.beta;
    let coeffs = recurrence_triangle(
        rows,
        &s,
        &(&s + &p.beta),
        &Rat::zero(),
        &(&p.beta * &s),
    )?;
    Ok(PolyFamily {
        kind: FamilyKind::Orthogonal(p.clone()),
        coeffs,
    })
}

/// Direction of a connection-coefficient matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connection {
    /// `P_n = sum_k C(n-1, n-k) β^(n-k) P̃_k`.
    OrthogonalToLbp,
    /// `P̃_n = sum_k C(n-1, n-k) (-β)^(n-k) P_k`.
    LbpToOrthogonal,
}

/// Connection matrix `C` with `coeffs(target) = C · coeffs(source)`.
/// It is the triangle of `(1, x/(1 ∓ βx))`; row 0 is `[1]`.
pub fn connection(p: &FamilyParams, rows: usize, direction: Connection) -> Result<Triangle> {
    if rows == 0 {
        return Err(FamilyError::ZeroRows);
    }
    let b = match direction {
        Connection::OrthogonalToLbp => p.beta.clone(),
        Connection::LbpToOrthogonal => -p.beta.clone(),
    };
    Ok(Triangle::from_fn(rows, |n, k| {
        if n == 0 {
            return Rat::one();
        }
        binomial_rat(n as i64 - 1, (n - k) as i64) * pow(&b, n - k)
    }))
}

/// `[P_0(t), ..., P_{rows-1}(t)]` for the Laurent biorthogonal family.
pub fn family_eval(p: &FamilyParams, t: &Rat, rows: usize) -> Result<Vec<Rat>> {
    Ok(lbp_triangle(p, rows)?.eval(t))
}

fn gen_den(p: &GenFamilyParams) -> [Rat; 3] {
    [Rat::one(), p.alpha.clone(), -(&p.beta * &p.gamma)]
}

/// `((1-βx)/(1+αx-βγx²), x(1-βx)/(1+αx-βγx²))`.
pub fn gen_array(p: &GenFamilyParams, order: usize) -> Result<RiordanArray> {
    let den = gen_den(p);
    let g = RatFunc::from_rats(&[Rat::one(), -p.beta.clone()], &den)?;
    let f = RatFunc::from_rats(&[Rat::zero(), Rat::one(), -p.beta.clone()], &den)?;
    Ok(RiordanArray::make(g, f, order)?)
}

/// `P_n = (x - α) P_{n-1} - β (x - γ) P_{n-2}`, `P_1 = x - α - β`.
pub fn gen_triangle(p: &GenFamilyParams, rows: usize) -> Result<PolyFamily> {
    let coeffs = recurrence_triangle(
        rows,
        &(&p.alpha + &p.beta),
        &p.alpha,
        &p.beta,
        &-(&p.beta * &p.gamma),
    )?;
    Ok(PolyFamily {
        kind: FamilyKind::Generalized(p.clone()),
        coeffs,
    })
}

/// `((1+βx)/D, x/D)` with `D = 1 + (α+2β)x + β(α+β-γ)x²`.
pub fn gen_assoc_array(p: &GenFamilyParams, order: usize) -> Result<RiordanArray> {
    check_gen_assoc(p)?;
    let den = [Rat::one(), &p.alpha + &p.beta * rat(2), p.weight()];
    let g = RatFunc::from_rats(&[Rat::one(), p.beta.clone()], &den)?;
    let f = RatFunc::from_rats(&[Rat::zero(), Rat::one()], &den)?;
    Ok(RiordanArray::make(g, f, order)?)
}

fn check_gen_assoc(p: &GenFamilyParams) -> Result<()> {
    if &p.alpha + &p.beta == p.gamma {
        return Err(FamilyError::DegenerateOrthogonal);
    }
    Ok(())
}

/// `P̃_n = (x - (α+2β)) P̃_{n-1} - β(α+β-γ) P̃_{n-2}`, `P̃_1 = x - (α+β)`.
pub fn gen_assoc_orthogonal(p: &GenFamilyParams, rows: usize) -> Result<PolyFamily> {
    check_gen_assoc(p)?;
    let coeffs = recurrence_triangle(
        rows,
        &(&p.alpha + &p.beta),
        &(&p.alpha + &p.beta * rat(2)),
        &Rat::zero(),
        &p.weight(),
    )?;
    Ok(PolyFamily {
        kind: FamilyKind::GeneralizedOrthogonal(p.clone()),
        coeffs,
    })
}

/// `P_n(x + γ; α, β, γ) = P_n(x; α - γ, β)`.
pub fn shift_params(p: &GenFamilyParams) -> FamilyParams {
    FamilyParams::new(&p.alpha - &p.gamma, p.beta.clone())
}

/// `B̃ = (1, x/(1 - βx))`.
pub fn beta_binomial_array(beta: &Rat, order: usize) -> Result<RiordanArray> {
    let g = RatFunc::from_ints(&[1], &[1])?;
    let f = RatFunc::from_rats(&[Rat::zero(), Rat::one()], &[Rat::one(), -beta.clone()])?;
    Ok(RiordanArray::make(g, f, order)?)
}

/// Coefficients `e_{n,k}` of `R_n = d/dx P_{n+1}` for `n < rows`, computed as
/// `(k+1) [x^n] (g f/x) f^k` from the family's array `(g, f)`.
pub fn derivative_triangle(p: &FamilyParams, rows: usize) -> Result<Triangle> {
    if rows == 0 {
        return Err(FamilyError::ZeroRows);
    }
    let base = lbp_array(p, rows)?;
    let g = base.g().as_ratfunc().expect("family arrays are rational");
    let f = base.f().as_ratfunc().expect("family arrays are rational");
    let scaled = RiordanArray::make(g.mul(&f_over_x(p)?), f.clone(), rows)?.triangle()?;
    Ok(Triangle::from_fn(rows, |n, k| scaled.get(n, k) * rat(k as i64 + 1)))
}

/// `det(x I_n - P_n)` where `P_n` is the order-`n` principal submatrix of the
/// production matrix of the inverse coefficient array.
pub fn det_representation(p: &FamilyParams, n: usize) -> Result<Vec<Rat>> {
    Ok(det_representations(p, n)?.pop().expect("n + 1 polynomials"))
}

/// The determinant representations for every size `0..=n`.
pub fn det_representations(p: &FamilyParams, n: usize) -> Result<Vec<Vec<Rat>>> {
    // Reverting f needs at least two known coefficients, even for n = 0.
    let inverse = lbp_array(p, n.max(1) + 1)?.inv()?;
    Ok(inverse.production_matrix(n)?.char_polys())
}
