//! Exact determinants.

use num_traits::{One, Zero};

use crate::rat::Rat;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// The empty matrix has determinant 1.
pub fn bareiss_det(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = Rat::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { Rat::one() } else { m[n - 1][n - 1].clone() };
    if negate {
        -det
    } else {
        det
    }
}

/// Characteristic polynomials `det(x I_k - H_k)` of the leading principal
/// submatrices of a lower-Hessenberg matrix `h` (zero above the
/// superdiagonal), for `k = 0..=n`. Coefficients are low degree first.
pub fn hessenberg_char_polys(h: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let mut polys: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    for t in 0..n {
        // (x - h[t][t]) p_t
        let prev = &polys[t];
        let mut next = vec![Rat::zero(); t + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &h[t][t];
        }
        // - sum_i h[t][i] * prod_{m=i}^{t-1} h[m][m+1] * p_i
        for i in 0..t {
            if h[t][i].is_zero() {
                continue;
            }
            let chain = (i..t).fold(h[t][i].clone(), |acc, m| acc * &h[m][m + 1]);
            if chain.is_zero() {
                continue;
            }
            for (j, c) in polys[i].iter().enumerate() {
                next[j] -= &chain * c;
            }
        }
        polys.push(next);
    }
    polys
}
