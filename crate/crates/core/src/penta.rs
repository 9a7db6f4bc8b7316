//! Five-diagonal symmetric systems from the 2D stencil and a
//! Jacobi-preconditioned conjugate gradient solver.

use crate::error::{Error, Result};

/// Symmetric matrix over a row-major grid of `row_len × rows` unknowns.
/// Only the diagonal and the two upper couplings are stored, so symmetry
/// holds by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaSparseSystem {
    row_len: usize,
    /// Main diagonal.
    pub diagonal: Vec<f64>,
    /// `east[r]` couples unknown `r` with `r + 1`; zero at the end of a grid row.
    pub east: Vec<f64>,
    /// `north[r]` couples unknown `r` with `r + row_len`; zero in the last row.
    pub north: Vec<f64>,
}

impl PentaSparseSystem {
    pub fn new(row_len: usize, diagonal: Vec<f64>, east: Vec<f64>, north: Vec<f64>) -> Result<Self> {
        let n = diagonal.len();
        if row_len == 0 || n == 0 || !n.is_multiple_of(row_len) || east.len() != n || north.len() != n {
            return Err(Error::InvalidArgument(format!(
                "inconsistent five-diagonal layout: row length {row_len}, bands {n}/{}/{}",
                east.len(),
                north.len()
            )));
        }
        let mut system = Self {
            row_len,
            diagonal,
            east,
            north,
        };
        // couplings that would wrap around the grid are not part of the stencil
        for r in 0..n {
            if (r + 1) % row_len == 0 {
                system.east[r] = 0.0;
            }
            if r + row_len >= n {
                system.north[r] = 0.0;
            }
        }
        Ok(system)
    }

    pub fn size(&self) -> usize {
        self.diagonal.len()
    }

    pub fn row_len(&self) -> usize {
        self.row_len
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.size()];
        self.apply_into(x, &mut y);
        y
    }

    pub fn apply_into(&self, x: &[f64], y: &mut [f64]) {
        let n = self.size();
        let w = self.row_len;
        for r in 0..n {
            let mut acc = self.diagonal[r] * x[r];
            if r + 1 < n {
                acc += self.east[r] * x[r + 1];
            }
            if r >= 1 {
                acc += self.east[r - 1] * x[r - 1];
            }
            if r + w < n {
                acc += self.north[r] * x[r + w];
            }
            if r >= w {
                acc += self.north[r - w] * x[r - w];
            }
            y[r] = acc;
        }
    }

    /// Row-wise `|a_rr| > Σ_{c≠r} |a_rc|` with a positive diagonal.
    pub fn is_strictly_diagonally_dominant(&self) -> bool {
        let n = self.size();
        let w = self.row_len;
        (0..n).all(|r| {
            let mut off = self.east[r].abs() + self.north[r].abs();
            if r >= 1 {
                off += self.east[r - 1].abs();
            }
            if r >= w {
                off += self.north[r - w].abs();
            }
            self.diagonal[r] > off
        })
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.size();
        let w = self.row_len;
        let mut a = vec![vec![0.0; n]; n];
        for r in 0..n {
            a[r][r] = self.diagonal[r];
            if r + 1 < n {
                a[r][r + 1] = self.east[r];
                a[r + 1][r] = self.east[r];
            }
            if r + w < n {
                a[r][r + w] = self.north[r];
                a[r + w][r] = self.north[r];
            }
        }
        a
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Result of a conjugate gradient run.
#[derive(Debug, Clone, PartialEq)]
pub struct CgOutcome {
    pub solution: Vec<f64>,
    pub iterations: usize,
    /// Final `||b - Ax|| / ||b||`.
    pub relative_residual: f64,
}

/// Solves `Ax = rhs` from a zero initial guess until
/// `||Ax - rhs||₂ ≤ tol · ||rhs||₂`.
pub fn cg_solve(system: &PentaSparseSystem, rhs: &[f64], tol: f64, max_iters: usize) -> Result<Vec<f64>> {
    cg_solve_from(system, rhs, None, tol, max_iters).map(|o| o.solution)
}

/// Jacobi-preconditioned CG with an optional warm start.
pub fn cg_solve_from(
    system: &PentaSparseSystem,
    rhs: &[f64],
    guess: Option<&[f64]>,
    tol: f64,
    max_iters: usize,
) -> Result<CgOutcome> {
    let n = system.size();
    if rhs.len() != n || guess.is_some_and(|g| g.len() != n) {
        return Err(Error::InvalidArgument(format!(
            "vector length does not match system of size {n}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let b_norm = norm(rhs);
    if b_norm == 0.0 {
        return Ok(CgOutcome {
            solution: vec![0.0; n],
            iterations: 0,
            relative_residual: 0.0,
        });
    }
    let inv_diag: Vec<f64> = system.diagonal.iter().map(|d| 1.0 / d).collect();

    let mut x = guess.map_or_else(|| vec![0.0; n], <[f64]>::to_vec);
    let mut ap = vec![0.0; n];
    let mut r = rhs.to_vec();
    if guess.is_some() {
        system.apply_into(&x, &mut ap);
        r.iter_mut().zip(&ap).for_each(|(ri, a)| *ri -= a);
    }
    let mut residual = norm(&r) / b_norm;
    let mut iterations = 0;

    while residual > tol {
        // (re)start from the current residual
        let mut z: Vec<f64> = r.iter().zip(&inv_diag).map(|(ri, d)| ri * d).collect();
        let mut p = z.clone();
        let mut rz = dot(&r, &z);
        loop {
            if iterations >= max_iters {
                return Err(Error::NotConverged {
                    iterations,
                    residual,
                });
            }
            iterations += 1;
            system.apply_into(&p, &mut ap);
            let step = rz / dot(&p, &ap);
            for k in 0..n {
                x[k] += step * p[k];
                r[k] -= step * ap[k];
            }
            residual = norm(&r) / b_norm;
            if residual <= tol {
                break;
            }
            for k in 0..n {
                z[k] = r[k] * inv_diag[k];
            }
            let rz_next = dot(&r, &z);
            let beta = rz_next / rz;
            rz = rz_next;
            for k in 0..n {
                p[k] = z[k] + beta * p[k];
            }
        }
        // guard against drift between the recurrence and the true residual
        system.apply_into(&x, &mut ap);
        for k in 0..n {
            r[k] = rhs[k] - ap[k];
        }
        residual = norm(&r) / b_norm;
    }

    Ok(CgOutcome {
        solution: x,
        iterations,
        relative_residual: residual,
    })
}
