//! Two-dimensional scheme on a rectangle. Unknowns are numbered row-major
//! with `x` fastest, so the scaled step matrix
//!
//! ```text
//! S^{j+1} = [(2σ+1)hx²hy² + g c_0] I - 2στ(hy² Ã + hx² B̃ - hx²hy² Q̃)
//! ```
//!
//! (`g = 2τ^{1-α}hx²hy²/Γ(2-α)`) is block tridiagonal with tridiagonal
//! x-blocks `Ã` and diagonal y-couplings `B̃`. Each step is solved with
//! Jacobi-preconditioned conjugate gradients, warm-started from `u^j`.

use crate::error::Result;
use crate::kernel::WeightCache;
use crate::mesh::{GridFunction, Mesh2D, TimeGrid};
use crate::penta::{cg_solve_from, PentaSparseSystem};
use crate::problem::{nonnegative, positive, Problem2D};
use crate::report::{LevelErrors, SolveReport};

/// Coefficients frozen at one offset time.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients2D {
    nx: usize,
    /// `d(x_{i+1/2}, y_l)` at `i + l·Nx`, `i = 0 … Nx-1`, `l = 0 … Ny`.
    d_half: Vec<f64>,
    /// `k(x_i, y_{l+1/2})` at `i + l·(Nx+1)`, `i = 0 … Nx`, `l = 0 … Ny-1`.
    k_half: Vec<f64>,
    /// `q(x_i, y_l)` at the node storage index; boundary entries unused.
    q: Vec<f64>,
}

impl Coefficients2D {
    /// `d_{i+1/2, l}`
    pub fn d_east(&self, i: usize, l: usize) -> f64 {
        self.d_half[l * self.nx + i]
    }

    /// `k_{i, l+1/2}`
    pub fn k_north(&self, i: usize, l: usize) -> f64 {
        self.k_half[l * (self.nx + 1) + i]
    }

    pub fn q(&self, mesh: &Mesh2D, i: usize, l: usize) -> f64 {
        self.q[mesh.index(i, l)]
    }
}

pub fn sample_coefficients(problem: &Problem2D, mesh: &Mesh2D, t: f64) -> Result<Coefficients2D> {
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let (hx, hy) = (mesh.hx(), mesh.hy());
    let at = |x: f64, y: f64| move || format!("(x = {x}, y = {y}, t = {t})");

    let mut d_half = vec![0.0; nx * (ny + 1)];
    for l in 1..ny {
        for i in 0..nx {
            let (x, y) = ((i as f64 + 0.5) * hx, mesh.y(l));
            d_half[l * nx + i] = positive("d", (problem.diffusion_x)(x, y, t), at(x, y))?;
        }
    }
    let mut k_half = vec![0.0; (nx + 1) * ny];
    for l in 0..ny {
        for i in 1..nx {
            let (x, y) = (mesh.x(i), (l as f64 + 0.5) * hy);
            k_half[l * (nx + 1) + i] = positive("k", (problem.diffusion_y)(x, y, t), at(x, y))?;
        }
    }
    let mut q = vec![0.0; (nx + 1) * (ny + 1)];
    for l in 1..ny {
        for i in 1..nx {
            let (x, y) = (mesh.x(i), mesh.y(l));
            q[mesh.index(i, l)] = nonnegative("q", (problem.reaction)(x, y, t), at(x, y))?;
        }
    }
    Ok(Coefficients2D { nx, d_half, k_half, q })
}

/// Interior values of `Λ̃u^j` with `d`, `k`, `q` sampled at `t_{j+σ}`.
pub fn apply_lambda2d(
    problem: &Problem2D,
    mesh: &Mesh2D,
    level_values: &GridFunction<Mesh2D>,
    j: usize,
    time: &TimeGrid,
) -> Result<GridFunction<Mesh2D>> {
    let c = sample_coefficients(problem, mesh, time.t_offset(j))?;
    let u = level_values.values();
    let (hx2, hy2) = (mesh.hx() * mesh.hx(), mesh.hy() * mesh.hy());
    let mut out = GridFunction::zeros(*mesh);
    let values = out.values_mut();
    for l in 1..mesh.ny() {
        for i in 1..mesh.nx() {
            let (dm, dp) = (c.d_east(i - 1, l), c.d_east(i, l));
            let (km, kp) = (c.k_north(i, l - 1), c.k_north(i, l));
            let at = |i, l| u[mesh.index(i, l)];
            let centre = at(i, l);
            values[mesh.index(i, l)] = (dm * at(i - 1, l) - (dm + dp) * centre + dp * at(i + 1, l)) / hx2
                + (km * at(i, l - 1) - (km + kp) * centre + kp * at(i, l + 1)) / hy2
                - c.q(mesh, i, l) * centre;
        }
    }
    Ok(out)
}

/// Face values at time `t`; interior entries are zero. Corners take the
/// x-face data.
fn boundary_level(problem: &Problem2D, mesh: &Mesh2D, t: f64) -> Vec<f64> {
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let mut v = vec![0.0; (nx + 1) * (ny + 1)];
    for i in 1..nx {
        let x = mesh.x(i);
        v[mesh.index(i, 0)] = (problem.south)(x, t);
        v[mesh.index(i, ny)] = (problem.north)(x, t);
    }
    for l in 0..=ny {
        let y = mesh.y(l);
        v[mesh.index(0, l)] = (problem.west)(y, t);
        v[mesh.index(nx, l)] = (problem.east)(y, t);
    }
    v
}

/// Scaled system `S^{j+1}` and right-hand side for the step `j -> j+1`,
/// `levels` holding `u^0 … u^j` on the full grid.
pub fn assemble_step_2d(
    problem: &Problem2D,
    mesh: &Mesh2D,
    time: &TimeGrid,
    levels: &[GridFunction<Mesh2D>],
) -> Result<(PentaSparseSystem, Vec<f64>)> {
    let raw: Vec<&[f64]> = levels.iter().map(|g| g.values()).collect();
    let mut cache = WeightCache::new(problem.order);
    let next_boundary = boundary_level(problem, mesh, time.t(levels.len()));
    assemble(problem, mesh, time, &mut cache, &raw, &next_boundary)
}

fn assemble(
    problem: &Problem2D,
    mesh: &Mesh2D,
    time: &TimeGrid,
    cache: &mut WeightCache,
    levels: &[&[f64]],
    next_boundary: &[f64],
) -> Result<(PentaSparseSystem, Vec<f64>)> {
    assert!(!levels.is_empty(), "need at least the initial level");
    let j = levels.len() - 1;
    let (nx, ny) = (mesh.nx(), mesh.ny());
    let order = problem.order;
    let sigma = order.sigma();
    let tau = time.tau();
    let (hx2, hy2) = (mesh.hx() * mesh.hx(), mesh.hy() * mesh.hy());
    let area2 = hx2 * hy2;
    let t_sigma = time.t_offset(j);

    let coeffs = sample_coefficients(problem, mesh, t_sigma)?;
    let weights = cache.weights(j);
    let c = weights.as_slice();

    let g = 2.0 * tau.powf(1.0 - order.alpha()) * area2 / order.gamma_2_minus_alpha();
    let lhs_shift = (2.0 * sigma + 1.0) * area2 + g * c[0];
    let rhs_shift = 4.0 * sigma * area2 + g * c[0];
    let implicit = 2.0 * sigma * tau;
    let explicit = 2.0 * (1.0 - sigma) * tau;

    let n = mesh.interior_count();
    let mut diagonal = Vec::with_capacity(n);
    let mut east = Vec::with_capacity(n);
    let mut north = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);

    let u = levels[j];
    let u_prev = levels[j.saturating_sub(1)];
    for l in 1..ny {
        let y = mesh.y(l);
        for i in 1..nx {
            let (dm, dp) = (coeffs.d_east(i - 1, l), coeffs.d_east(i, l));
            let (km, kp) = (coeffs.k_north(i, l - 1), coeffs.k_north(i, l));
            let q = coeffs.q(mesh, i, l);
            let centre_weight = hy2 * (dm + dp) + hx2 * (km + kp) + area2 * q;
            diagonal.push(lhs_shift + implicit * centre_weight);
            east.push(-implicit * hy2 * dp);
            north.push(-implicit * hx2 * kp);

            // (hy² Ã + hx² B̃ - hx²hy² Q̃)u over interior neighbours; the
            // face values enter through the boundary vectors below.
            let at = |v: &[f64], i, l| v[mesh.index(i, l)];
            let mut op = -centre_weight * at(u, i, l);
            let blend = |i, l| sigma * next_boundary[mesh.index(i, l)] + (1.0 - sigma) * at(u, i, l);
            let mut faces = 0.0;
            if i > 1 {
                op += hy2 * dm * at(u, i - 1, l);
            } else {
                faces += hy2 * dm * blend(0, l);
            }
            if i < nx - 1 {
                op += hy2 * dp * at(u, i + 1, l);
            } else {
                faces += hy2 * dp * blend(nx, l);
            }
            if l > 1 {
                op += hx2 * km * at(u, i, l - 1);
            } else {
                faces += hx2 * km * blend(i, 0);
            }
            if l < ny - 1 {
                op += hx2 * kp * at(u, i, l + 1);
            } else {
                faces += hx2 * kp * blend(i, ny);
            }

            let x = mesh.x(i);
            rhs.push(
                rhs_shift * at(u, i, l) + explicit * op - (2.0 * sigma - 1.0) * area2 * at(u_prev, i, l)
                    + 2.0 * tau * area2 * (problem.source)(x, y, t_sigma)
                    + 2.0 * tau * faces,
            );
        }
    }

    for s in 0..j {
        let weight = g * c[j - s];
        let (lo, hi) = (levels[s], levels[s + 1]);
        let mut r = 0;
        for l in 1..ny {
            let row = mesh.index(0, l);
            for i in 1..nx {
                rhs[r] -= weight * (hi[row + i] - lo[row + i]);
                r += 1;
            }
        }
    }

    let system = PentaSparseSystem::new(nx - 1, diagonal, east, north)?;
    Ok((system, rhs))
}

/// Linear-solver settings for [`solve2d_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solver2dOptions {
    /// Relative residual target of each CG solve.
    pub tolerance: f64,
    /// Iteration cap per step; `None` means ten times the unknown count.
    pub max_iters: Option<usize>,
}

impl Default for Solver2dOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_iters: None,
        }
    }
}

pub fn solve2d(
    problem: &Problem2D,
    nx: usize,
    ny: usize,
    m: usize,
    keep_history: bool,
) -> Result<SolveReport<Mesh2D>> {
    solve2d_with(problem, nx, ny, m, keep_history, &Solver2dOptions::default())
}

pub fn solve2d_with(
    problem: &Problem2D,
    nx: usize,
    ny: usize,
    m: usize,
    keep_history: bool,
    options: &Solver2dOptions,
) -> Result<SolveReport<Mesh2D>> {
    let mesh = Mesh2D::new(problem.lx, problem.ly, nx, ny)?;
    let time = TimeGrid::new(problem.final_time, m, problem.order)?;
    let xs: Vec<f64> = (0..=nx).map(|i| mesh.x(i)).collect();
    let ys: Vec<f64> = (0..=ny).map(|l| mesh.y(l)).collect();
    problem.check_compatibility_at(&xs, &ys)?;

    let mut cache = WeightCache::new(problem.order);
    let max_iters = options.max_iters.unwrap_or(10 * mesh.interior_count());
    let exact_at = |t: f64| {
        problem
            .exact
            .as_ref()
            .map(|u| GridFunction::<Mesh2D>::from_fn(mesh, |x, y| u(x, y, t)))
    };

    let initial = GridFunction::<Mesh2D>::from_fn(mesh, |x, y| (problem.initial)(x, y));
    let mut errors = problem.exact.as_ref().map(|_| LevelErrors::default());
    if let (Some(errs), Some(exact)) = (errors.as_mut(), exact_at(0.0)) {
        errs.record(&initial, &exact);
    }

    let interior: Vec<usize> = (1..ny)
        .flat_map(|l| (1..nx).map(move |i| (i, l)))
        .map(|(i, l)| mesh.index(i, l))
        .collect();

    let mut levels: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    levels.push(initial.into_values());
    for j in 0..m {
        let t_next = time.t(j + 1);
        let mut next = boundary_level(problem, &mesh, t_next);
        let views: Vec<&[f64]> = levels.iter().map(Vec::as_slice).collect();
        let (system, rhs) = assemble(problem, &mesh, &time, &mut cache, &views, &next)?;
        debug_assert!(system.is_strictly_diagonally_dominant());

        let guess: Vec<f64> = interior.iter().map(|&k| levels[j][k]).collect();
        let outcome = cg_solve_from(&system, &rhs, Some(&guess), options.tolerance, max_iters)?;
        for (&k, v) in interior.iter().zip(outcome.solution) {
            next[k] = v;
        }
        let next = GridFunction::new(mesh, next)?;
        if let (Some(errs), Some(exact)) = (errors.as_mut(), exact_at(t_next)) {
            errs.record(&next, &exact);
        }
        levels.push(next.into_values());
    }

    let final_state = GridFunction::new(mesh, levels[m].clone())?;
    let history = keep_history.then(|| {
        levels
            .into_iter()
            .map(|v| GridFunction::new(mesh, v).expect("level length matches mesh"))
            .collect()
    });
    Ok(SolveReport {
        final_state,
        history,
        errors,
    })
}
