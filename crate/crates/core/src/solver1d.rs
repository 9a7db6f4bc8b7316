//! One-dimensional scheme. Every step solves the symmetric tridiagonal
//! system obtained by multiplying the scheme through by `2τh²`:
//!
//! ```text
//! M^{j+1} u^{j+1} = B^j u^j - h²(2σ-1) u^{j-1}
//!                   - g Σ_{s=0}^{j-1} c_{j-s} (u^{s+1} - u^s) + 2τh² f^{j+σ} + η^{j+σ}
//! ```
//!
//! with `g = 2τ^{1-α}h²/Γ(2-α)`, `M = [h²(2σ+1) + g c_0] I - 2στ(A - h²Q)` and
//! `B = [4σh² + g c_0] I + 2(1-σ)τ(A - h²Q)`. The first step uses
//! `u^{-1} = u^0`, which assumes `u_t(x, 0) = u_tt(x, 0) = 0`.

use crate::error::Result;
use crate::kernel::WeightCache;
use crate::mesh::{GridFunction, Mesh1D, TimeGrid};
use crate::problem::{nonnegative, positive, Problem1D};
use crate::report::{LevelErrors, SolveReport};
use crate::tridiag::{thomas_solve, TridiagonalSystem};

/// Coefficients frozen at one offset time `t_{j+σ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients1D {
    /// `k_half[i] = k(x_{i+1/2}, t)` for `i = 0 … N-1`.
    pub k_half: Vec<f64>,
    /// `q[i] = q(x_i, t)` for `i = 0 … N`; the boundary entries are unused.
    pub q: Vec<f64>,
}

pub fn sample_coefficients(problem: &Problem1D, mesh: &Mesh1D, t: f64) -> Result<Coefficients1D> {
    let n = mesh.intervals();
    let k_half = (0..n)
        .map(|i| {
            let x = mesh.x_half(i);
            positive("k", (problem.diffusion)(x, t), || format!("(x = {x}, t = {t})"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut q = vec![0.0; n + 1];
    for (i, qi) in q.iter_mut().enumerate().take(n).skip(1) {
        let x = mesh.x(i);
        *qi = nonnegative("q", (problem.reaction)(x, t), || format!("(x = {x}, t = {t})"))?;
    }
    Ok(Coefficients1D { k_half, q })
}

/// Interior values of `Λu^j`, coefficients sampled at `t_{j+σ}`. The
/// boundary entries of the result are zero.
pub fn apply_lambda(
    problem: &Problem1D,
    mesh: &Mesh1D,
    level_values: &GridFunction<Mesh1D>,
    j: usize,
    time: &TimeGrid,
) -> Result<GridFunction<Mesh1D>> {
    let coeffs = sample_coefficients(problem, mesh, time.t_offset(j))?;
    let u = level_values.values();
    let h2 = mesh.h() * mesh.h();
    let mut out = GridFunction::zeros(*mesh);
    let values = out.values_mut();
    for i in 1..mesh.intervals() {
        let (km, kp) = (coeffs.k_half[i - 1], coeffs.k_half[i]);
        values[i] = (kp * u[i + 1] - (kp + km) * u[i] + km * u[i - 1]) / h2 - coeffs.q[i] * u[i];
    }
    Ok(out)
}

/// Scaled system and right-hand side for the step `j -> j+1`, where
/// `levels` holds `u^0 … u^j` (boundary included).
pub fn assemble_step(
    problem: &Problem1D,
    mesh: &Mesh1D,
    time: &TimeGrid,
    levels: &[GridFunction<Mesh1D>],
) -> Result<(TridiagonalSystem, Vec<f64>)> {
    let raw: Vec<&[f64]> = levels.iter().map(|g| g.values()).collect();
    let mut cache = WeightCache::new(problem.order);
    assemble(problem, mesh, time, &mut cache, &raw)
}

fn assemble(
    problem: &Problem1D,
    mesh: &Mesh1D,
    time: &TimeGrid,
    cache: &mut WeightCache,
    levels: &[&[f64]],
) -> Result<(TridiagonalSystem, Vec<f64>)> {
    assert!(!levels.is_empty(), "need at least the initial level");
    let j = levels.len() - 1;
    let n = mesh.intervals();
    let order = problem.order;
    let sigma = order.sigma();
    let tau = time.tau();
    let h2 = mesh.h() * mesh.h();
    let t_sigma = time.t_offset(j);

    let coeffs = sample_coefficients(problem, mesh, t_sigma)?;
    let k = &coeffs.k_half;
    let q = &coeffs.q;
    let weights = cache.weights(j);
    let c = weights.as_slice();

    let g = 2.0 * tau.powf(1.0 - order.alpha()) * h2 / order.gamma_2_minus_alpha();
    let lhs_shift = h2 * (2.0 * sigma + 1.0) + g * c[0];
    let rhs_shift = 4.0 * sigma * h2 + g * c[0];
    let implicit = 2.0 * sigma * tau;
    let explicit = 2.0 * (1.0 - sigma) * tau;

    let diagonal: Vec<f64> = (1..n)
        .map(|i| lhs_shift + implicit * (k[i - 1] + k[i] + h2 * q[i]))
        .collect();
    let off: Vec<f64> = (1..n - 1).map(|i| -implicit * k[i]).collect();

    let u = levels[j];
    let u_prev = levels[j.saturating_sub(1)];
    let mut rhs: Vec<f64> = (1..n)
        .map(|i| {
            // (A - h²Q)u over interior neighbours only; boundary values enter via η.
            let mut au = -(k[i - 1] + k[i]) * u[i] - h2 * q[i] * u[i];
            if i > 1 {
                au += k[i - 1] * u[i - 1];
            }
            if i < n - 1 {
                au += k[i] * u[i + 1];
            }
            let x = mesh.x(i);
            rhs_shift * u[i] + explicit * au - h2 * (2.0 * sigma - 1.0) * u_prev[i]
                + 2.0 * tau * h2 * (problem.source)(x, t_sigma)
        })
        .collect();

    for s in 0..j {
        let weight = g * c[j - s];
        let (lo, hi) = (levels[s], levels[s + 1]);
        for (i, r) in (1..n).zip(rhs.iter_mut()) {
            *r -= weight * (hi[i] - lo[i]);
        }
    }

    let t_next = time.t(j + 1);
    let left = sigma * (problem.left)(t_next) + (1.0 - sigma) * u[0];
    let right = sigma * (problem.right)(t_next) + (1.0 - sigma) * u[n];
    rhs[0] += 2.0 * tau * k[0] * left;
    rhs[n - 2] += 2.0 * tau * k[n - 1] * right;

    let system = TridiagonalSystem::new(off.clone(), diagonal, off)?;
    Ok((system, rhs))
}

/// March `M` steps on `N` intervals.
pub fn solve(problem: &Problem1D, n: usize, m: usize, keep_history: bool) -> Result<SolveReport<Mesh1D>> {
    problem.check_compatibility()?;
    let mesh = Mesh1D::new(problem.length, n)?;
    let time = TimeGrid::new(problem.final_time, m, problem.order)?;
    let mut cache = WeightCache::new(problem.order);

    let exact_at = |t: f64| {
        problem
            .exact
            .as_ref()
            .map(|u| GridFunction::<Mesh1D>::from_fn(mesh, |x| u(x, t)))
    };

    let initial = GridFunction::<Mesh1D>::from_fn(mesh, |x| (problem.initial)(x));
    let mut errors = problem.exact.as_ref().map(|_| LevelErrors::default());
    if let (Some(errs), Some(exact)) = (errors.as_mut(), exact_at(0.0)) {
        errs.record(&initial, &exact);
    }

    let mut levels: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    levels.push(initial.into_values());
    for j in 0..m {
        let views: Vec<&[f64]> = levels.iter().map(Vec::as_slice).collect();
        let (system, rhs) = assemble(problem, &mesh, &time, &mut cache, &views)?;
        debug_assert!(system.is_strictly_diagonally_dominant());
        let interior = thomas_solve(&system, &rhs)?;

        let t_next = time.t(j + 1);
        let mut next = Vec::with_capacity(n + 1);
        next.push((problem.left)(t_next));
        next.extend_from_slice(&interior);
        next.push((problem.right)(t_next));
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
