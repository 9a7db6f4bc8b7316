//! Uniform space/time meshes, grid functions, discrete norms and the
//! observed-order arithmetic used by the convergence studies.
//!
//! Norms run over interior nodes only; Dirichlet nodes are stored in a
//! [`GridFunction`] but never weighted.

use crate::error::{Error, Result};
use crate::kernel::FractionalOrder;

/// Node layout shared by the 1D and 2D meshes.
pub trait Mesh: Clone {
    /// Total number of stored nodes, boundary included.
    fn node_count(&self) -> usize;
    /// Quadrature weight of one node in the discrete inner product.
    fn cell_measure(&self) -> f64;
    /// Indices of the interior nodes in storage order.
    fn interior(&self) -> Box<dyn Iterator<Item = usize> + '_>;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh1D {
    length: f64,
    n: usize,
    h: f64,
}

impl Mesh1D {
    pub fn new(length: f64, n: usize) -> Result<Self> {
        if !length.is_finite() || length <= 0.0 {
            return Err(Error::InvalidArgument(format!("domain length must be positive, got {length}")));
        }
        if n < 2 {
            return Err(Error::InvalidArgument(format!("need at least 2 intervals, got {n}")));
        }
        Ok(Self {
            length,
            n,
            h: length / n as f64,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Number of intervals `N`.
    pub fn intervals(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn x(&self, i: usize) -> f64 {
        i as f64 * self.h
    }

    /// Half-point `x_{i+1/2}`.
    pub fn x_half(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.h
    }

    pub fn interior_count(&self) -> usize {
        self.n - 1
    }
}

impl Mesh for Mesh1D {
    fn node_count(&self) -> usize {
        self.n + 1
    }

    fn cell_measure(&self) -> f64 {
        self.h
    }

    fn interior(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        Box::new(1..self.n)
    }
}

/// Rectangle `[0, Lx] × [0, Ly]`; nodes are stored row-major with `x`
/// varying fastest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh2D {
    lx: f64,
    ly: f64,
    nx: usize,
    ny: usize,
    hx: f64,
    hy: f64,
}

impl Mesh2D {
    pub fn new(lx: f64, ly: f64, nx: usize, ny: usize) -> Result<Self> {
        for (name, len) in [("Lx", lx), ("Ly", ly)] {
            if !len.is_finite() || len <= 0.0 {
                return Err(Error::InvalidArgument(format!("{name} must be positive, got {len}")));
            }
        }
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 intervals per direction, got {nx} x {ny}"
            )));
        }
        Ok(Self {
            lx,
            ly,
            nx,
            ny,
            hx: lx / nx as f64,
            hy: ly / ny as f64,
        })
    }

    pub fn lx(&self) -> f64 {
        self.lx
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn hx(&self) -> f64 {
        self.hx
    }

    pub fn hy(&self) -> f64 {
        self.hy
    }

    pub fn x(&self, i: usize) -> f64 {
        i as f64 * self.hx
    }

    pub fn y(&self, l: usize) -> f64 {
        l as f64 * self.hy
    }

    /// Storage index of node `(x_i, y_l)`.
    pub fn index(&self, i: usize, l: usize) -> usize {
        l * (self.nx + 1) + i
    }

    /// Number of interior unknowns `(Nx-1)(Ny-1)`.
    pub fn interior_count(&self) -> usize {
        (self.nx - 1) * (self.ny - 1)
    }

    /// Position of interior node `(i, l)` in the unknown vector.
    pub fn unknown(&self, i: usize, l: usize) -> usize {
        (l - 1) * (self.nx - 1) + (i - 1)
    }
}

impl Mesh for Mesh2D {
    fn node_count(&self) -> usize {
        (self.nx + 1) * (self.ny + 1)
    }

    fn cell_measure(&self) -> f64 {
        self.hx * self.hy
    }

    fn interior(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        Box::new((1..self.ny).flat_map(move |l| (1..self.nx).map(move |i| self.index(i, l))))
    }
}

/// Uniform time levels `t_j = jτ` plus the offset points `t_{j+σ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    final_time: f64,
    m: usize,
    tau: f64,
    sigma: f64,
}

impl TimeGrid {
    pub fn new(final_time: f64, m: usize, order: FractionalOrder) -> Result<Self> {
        if !final_time.is_finite() || final_time <= 0.0 {
            return Err(Error::InvalidArgument(format!("final time must be positive, got {final_time}")));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("need at least one time step".into()));
        }
        Ok(Self {
            final_time,
            m,
            tau: final_time / m as f64,
            sigma: order.sigma(),
        })
    }

    pub fn final_time(&self) -> f64 {
        self.final_time
    }

    pub fn steps(&self) -> usize {
        self.m
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn t(&self, j: usize) -> f64 {
        j as f64 * self.tau
    }

    /// `t_{j+σ} = (j + σ)τ`.
    pub fn t_offset(&self, j: usize) -> f64 {
        (j as f64 + self.sigma) * self.tau
    }
}

/// Nodal values over a whole mesh, boundary included.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<M: Mesh> {
    mesh: M,
    values: Vec<f64>,
}

impl<M: Mesh> GridFunction<M> {
    pub fn new(mesh: M, values: Vec<f64>) -> Result<Self> {
        if values.len() != mesh.node_count() {
            return Err(Error::InvalidArgument(format!(
                "grid function has {} values, mesh has {} nodes",
                values.len(),
                mesh.node_count()
            )));
        }
        Ok(Self { mesh, values })
    }

    pub fn zeros(mesh: M) -> Self {
        let values = vec![0.0; mesh.node_count()];
        Self { mesh, values }
    }

    pub fn mesh(&self) -> &M {
        &self.mesh
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            mesh: self.mesh.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Pointwise `self - other`; both must live on the same mesh.
    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.values.len(), other.values.len());
        Self {
            mesh: self.mesh.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl GridFunction<Mesh1D> {
    pub fn from_fn(mesh: Mesh1D, f: impl Fn(f64) -> f64) -> Self {
        let values = (0..=mesh.intervals()).map(|i| f(mesh.x(i))).collect();
        Self { mesh, values }
    }
}

impl GridFunction<Mesh2D> {
    pub fn from_fn(mesh: Mesh2D, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = Vec::with_capacity(mesh.node_count());
        for l in 0..=mesh.ny() {
            for i in 0..=mesh.nx() {
                values.push(f(mesh.x(i), mesh.y(l)));
            }
        }
        Self { mesh, values }
    }

    pub fn at(&self, i: usize, l: usize) -> f64 {
        self.values[self.mesh.index(i, l)]
    }
}

/// Discrete L2 norm over interior nodes, `sqrt(h Σ f_i²)` in 1D and
/// `sqrt(hx hy Σ f_il²)` in 2D.
pub fn l2_norm<M: Mesh>(f: &GridFunction<M>) -> f64 {
    let sum: f64 = f.mesh.interior().map(|k| f.values[k] * f.values[k]).sum();
    (f.mesh.cell_measure() * sum).sqrt()
}

/// Largest absolute interior value.
pub fn max_norm<M: Mesh>(f: &GridFunction<M>) -> f64 {
    f.mesh
        .interior()
        .map(|k| f.values[k].abs())
        .fold(0.0, f64::max)
}

/// Observed order `log(e_coarse / e_fine) / log(r_coarse / r_fine)`.
pub fn convergence_rate(e_coarse: f64, e_fine: f64, r_coarse: f64, r_fine: f64) -> Result<f64> {
    if !(e_coarse > 0.0 && e_fine > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "errors must be positive to form a rate, got {e_coarse:e} and {e_fine:e}"
        )));
    }
    if !(r_coarse > 0.0 && r_fine > 0.0) || r_coarse == r_fine {
        return Err(Error::InvalidArgument(format!(
            "resolutions must be positive and distinct, got {r_coarse} and {r_fine}"
        )));
    }
    Ok((e_coarse / e_fine).ln() / (r_coarse / r_fine).ln())
}
