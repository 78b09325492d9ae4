//! Dense lower-triangular matrices of rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{rat, Rat, RatList};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("row {row} has {found} entries, expected {expected}")]
pub struct TriangleShapeError {
    pub row: usize,
    pub found: usize,
    pub expected: usize,
}

/// Rows `0..len()`, where row `n` holds columns `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Triangle {
    rows: Vec<Vec<Rat>>,
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, TriangleShapeError> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(TriangleShapeError {
                    row: n,
                    found: row.len(),
                    expected: n + 1,
                });
            }
        }
        Ok(Triangle { rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, TriangleShapeError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    /// Builds row `n` from `entry(n, k)` for `k <= n`.
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> Rat) -> Self {
        Triangle {
            rows: (0..size)
                .map(|n| (0..=n).map(|k| entry(n, k)).collect())
                .collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |n, k| if n == k { Rat::one() } else { Rat::zero() })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        if k > n {
            Rat::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn column(&self, k: usize) -> Vec<Rat> {
        (k..self.len()).map(|n| self.rows[n][k].clone()).collect()
    }

    pub fn truncate(&self, size: usize) -> Triangle {
        Triangle {
            rows: self.rows.iter().take(size).cloned().collect(),
        }
    }

    /// Matrix product, truncated to the smaller size.
    pub fn mul(&self, other: &Triangle) -> Triangle {
        let size = self.len().min(other.len());
        Self::from_fn(size, |n, k| {
            (k..=n).fold(Rat::zero(), |acc, j| acc + &self.rows[n][j] * &other.rows[j][k])
        })
    }

    /// Full square matrix with explicit zeros above the diagonal.
    pub fn to_square(&self) -> Vec<Vec<Rat>> {
        (0..self.len())
            .map(|n| (0..self.len()).map(|k| self.get(n, k)).collect())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<Rat> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(Rat::zero(), |acc, v| acc + v))
            .collect()
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, r)| r[n].is_one())
    }

    pub fn into_rows(self) -> Vec<Vec<Rat>> {
        self.rows
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{}", RatList(row))?;
        }
        Ok(())
    }
}
