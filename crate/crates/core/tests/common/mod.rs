//! Independent reference computations used to check the library.
#![allow(dead_code, clippy::needless_range_loop)]

use lbp_core::rat::{rat, ratio, Rat};
use lbp_core::Triangle;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Rationals with numerator in `-5..=5` and denominator in `1..=5`.
pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-5i64..=5, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_small_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// Schoolbook product truncated to `n` terms.
pub fn naive_mul(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reciprocal by solving the triangular system `a · b = 1` one coefficient
/// at a time.
pub fn naive_recip(a: &[Rat], n: usize) -> Vec<Rat> {
    let mut b = vec![Rat::zero(); n];
    for k in 0..n {
        let mut rhs = if k == 0 { Rat::one() } else { Rat::zero() };
        for j in 1..=k.min(a.len() - 1) {
            rhs -= &a[j] * &b[k - j];
        }
        b[k] = rhs / &a[0];
    }
    b
}

pub fn naive_pow(a: &[Rat], k: usize, n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    out[0] = Rat::one();
    for _ in 0..k {
        out = naive_mul(&out, a, n);
    }
    out
}

/// `sum_i a_i inner^i`, expanding each power separately.
pub fn naive_compose(a: &[Rat], inner: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate().take(n) {
        let p = naive_pow(inner, i, n);
        for (o, v) in out.iter_mut().zip(p) {
            *o += c * v;
        }
    }
    out
}

/// Compositional inverse by Lagrange inversion:
/// `[x^n] f̄ = (1/n) [x^(n-1)] (x/f)^n`.
pub fn lagrange_revert(f: &[Rat], n: usize) -> Vec<Rat> {
    let h: Vec<Rat> = f[1..].to_vec();
    let x_over_f = naive_recip(&h, n);
    let mut out = vec![Rat::zero(); n];
    for m in 1..n {
        let p = naive_pow(&x_over_f, m, m);
        out[m] = &p[m - 1] / rat(m as i64);
    }
    out
}

/// Entry `[x^n] g f^k` computed term by term.
pub fn riordan_entry(g: &[Rat], f: &[Rat], n: usize, k: usize) -> Rat {
    let col = naive_mul(g, &naive_pow(f, k, n + 1), n + 1);
    col[n].clone()
}

pub fn riordan_matrix(g: &[Rat], f: &[Rat], size: usize) -> Triangle {
    Triangle::from_fn(size, |n, k| riordan_entry(g, f, n, k))
}

/// Inverse of a unit lower-triangular matrix by forward substitution.
pub fn triangle_inverse(t: &Triangle) -> Triangle {
    let n = t.len();
    let mut inv: Vec<Vec<Rat>> = (0..n).map(|r| vec![Rat::zero(); r + 1]).collect();
    for c in 0..n {
        inv[c][c] = Rat::one() / t.get(c, c);
        for r in c + 1..n {
            let mut s = Rat::zero();
            for m in c..r {
                s += t.get(r, m) * &inv[m][c];
            }
            inv[r][c] = -s / t.get(r, r);
        }
    }
    Triangle::from_rows(inv).unwrap()
}

/// Plain matrix product of square matrices.
pub fn matmul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|m| &a[i][m] * &b[m][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination over the rationals.
pub fn gauss_det(m: &[Vec<Rat>]) -> Rat {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            let factor = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &factor * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Termwise derivative of a coefficient list.
pub fn poly_derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect()
}

/// Value of `sum c_i t^i`.
pub fn eval_poly(p: &[Rat], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    let mut power = Rat::one();
    for c in p {
        acc += c * &power;
        power *= t;
    }
    acc
}

/// `sum_k c_k Q_k` where row `k` of `basis` holds `Q_k`.
pub fn combine(basis: &Triangle, weights: &[Rat], degree: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); degree + 1];
    for (k, w) in weights.iter().enumerate() {
        for (i, c) in basis.row(k).iter().enumerate() {
            out[i] += w * c;
        }
    }
    out
}

/// Large Schröder numbers, twice the small ones after the first term.
pub fn schroeder(n: usize) -> Vec<Rat> {
    // small Schröder s: (n+1) s_n = 3(2n-1) s_{n-1} - (n-2) s_{n-2}, s_0 = s_1 = 1
    let mut s = vec![rat(1), rat(1)];
    for m in 2..n.max(2) {
        let m_i = m as i64;
        let v = (rat(3 * (2 * m_i - 1)) * &s[m - 1] - rat(m_i - 2) * &s[m - 2]) / rat(m_i + 1);
        s.push(v);
    }
    (0..n)
        .map(|i| if i == 0 { rat(1) } else { &s[i] * rat(2) })
        .collect()
}
