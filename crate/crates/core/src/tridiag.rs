//! Tridiagonal systems and Thomas elimination.

use crate::error::{Error, Result};

/// `lower[i]` couples row `i + 1` to column `i`, `upper[i]` couples row `i`
/// to column `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    pub lower: Vec<f64>,
    pub diagonal: Vec<f64>,
    pub upper: Vec<f64>,
}

impl TridiagonalSystem {
    pub fn new(lower: Vec<f64>, diagonal: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let n = diagonal.len();
        if n == 0 || lower.len() + 1 != n || upper.len() + 1 != n {
            return Err(Error::InvalidArgument(format!(
                "band lengths {}/{}/{} do not form a tridiagonal matrix",
                lower.len(),
                n,
                upper.len()
            )));
        }
        Ok(Self {
            lower,
            diagonal,
            upper,
        })
    }

    pub fn size(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.lower == self.upper
    }

    /// `|d_i| > |l_i| + |u_i|` on every row.
    pub fn is_strictly_diagonally_dominant(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            let off = if i > 0 { self.lower[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.upper[i].abs() } else { 0.0 };
            self.diagonal[i].abs() > off
        })
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size();
        (0..n)
            .map(|i| {
                let mut y = self.diagonal[i] * x[i];
                if i > 0 {
                    y += self.lower[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.upper[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.size();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            a[i][i] = self.diagonal[i];
            if i + 1 < n {
                a[i][i + 1] = self.upper[i];
                a[i + 1][i] = self.lower[i];
            }
        }
        a
    }
}

/// Thomas elimination without pivoting. Safe for diagonally dominant
/// systems; a vanishing pivot is reported rather than divided through.
pub fn thomas_solve(system: &TridiagonalSystem, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = system.size();
    if rhs.len() != n {
        return Err(Error::InvalidArgument(format!(
            "right-hand side has length {}, system has {n} rows",
            rhs.len()
        )));
    }
    let mut c_prime = vec![0.0; n];
    let mut x = vec![0.0; n];

    let mut pivot = system.diagonal[0];
    if pivot == 0.0 {
        return Err(Error::ZeroPivot { row: 0 });
    }
    if n > 1 {
        c_prime[0] = system.upper[0] / pivot;
    }
    x[0] = rhs[0] / pivot;
    for i in 1..n {
        let a = system.lower[i - 1];
        pivot = system.diagonal[i] - a * c_prime[i - 1];
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(Error::ZeroPivot { row: i });
        }
        if i + 1 < n {
            c_prime[i] = system.upper[i] / pivot;
        }
        x[i] = (rhs[i] - a * x[i - 1]) / pivot;
    }
    for i in (0..n - 1).rev() {
        x[i] -= c_prime[i] * x[i + 1];
    }
    Ok(x)
}
