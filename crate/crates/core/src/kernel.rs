//! L2-1σ quadrature for the Caputo derivative and the three-level drift
//! stencil, both evaluated at the offset time point `t_{j+σ} = (j + σ)τ`.
//!
//! The discrete Caputo operator at level `j` is
//!
//! ```text
//! τ^{-α} / Γ(2-α) · Σ_{s=0}^{j} c_{j-s} (y_{s+1} - y_s)
//! ```
//!
//! with `c_0 = a_0` for `j = 0` and, for `j ≥ 1`,
//! `c_0 = a_0 + b_1`, `c_s = a_s + b_{s+1} - b_s`, `c_j = a_j - b_j`.

use crate::error::{Error, Result};
use crate::special::gamma;

/// Fractional order `α ∈ (0, 1)` together with its offset `σ = 1 - α/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    alpha: f64,
    sigma: f64,
    gamma_2_minus_alpha: f64,
}

impl FractionalOrder {
    /// Rejects anything outside the open unit interval, including the
    /// Crank-Nicolson limit `α = 1` where every `a_l` with `l ≥ 1` vanishes.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidOrder(alpha));
        }
        Ok(Self {
            alpha,
            sigma: 1.0 - alpha / 2.0,
            gamma_2_minus_alpha: gamma(2.0 - alpha),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `Γ(2 - α)`.
    pub fn gamma_2_minus_alpha(&self) -> f64 {
        self.gamma_2_minus_alpha
    }

    /// Prefactor `τ^{-α} / Γ(2 - α)` of the discrete Caputo sum.
    pub fn caputo_scale(&self, tau: f64) -> f64 {
        tau.powf(-self.alpha) / self.gamma_2_minus_alpha
    }
}

/// `(l + σ)^p - (l - 1 + σ)^p` without cancellation for large `l`.
fn power_difference(l: usize, sigma: f64, p: f64) -> f64 {
    let base = l as f64 - 1.0 + sigma;
    base.powf(p) * (p * (1.0 / base).ln_1p()).exp_m1()
}

pub fn a_coeff(order: FractionalOrder, l: usize) -> f64 {
    let p = 1.0 - order.alpha;
    if l == 0 {
        order.sigma.powf(p)
    } else {
        power_difference(l, order.sigma, p)
    }
}

/// `b_l = [(l+σ)^{2-α} - (l-1+σ)^{2-α}]/(2-α) - [(l+σ)^{1-α} + (l-1+σ)^{1-α}]/2`,
/// the trapezoidal-rule defect of `∫ s^{1-α} ds` over `[l-1+σ, l+σ]`.
/// Only defined for `l ≥ 1`.
pub fn b_coeff(order: FractionalOrder, l: usize) -> Result<f64> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "b coefficient requires l >= 1".into(),
        ));
    }
    let alpha = order.alpha;
    let sigma = order.sigma;
    let (lo, hi) = (l as f64 - 1.0 + sigma, l as f64 + sigma);
    Ok(power_difference(l, sigma, 2.0 - alpha) / (2.0 - alpha)
        - 0.5 * (hi.powf(1.0 - alpha) + lo.powf(1.0 - alpha)))
}

/// The weights `c_0 … c_j` used at time level `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct L21SigmaWeights {
    order: FractionalOrder,
    level: usize,
    c: Vec<f64>,
}

impl L21SigmaWeights {
    pub fn order(&self) -> FractionalOrder {
        self.order
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    pub fn get(&self, s: usize) -> f64 {
        self.c[s]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

pub fn c_weights(order: FractionalOrder, j: usize) -> L21SigmaWeights {
    WeightCache::new(order).weights(j)
}

/// Incrementally cached `a_l` and `b_l` (both independent of the level),
/// from which the level-dependent `c` vector is rebuilt on demand.
#[derive(Debug, Clone)]
pub struct WeightCache {
    order: FractionalOrder,
    a: Vec<f64>,
    // b[0] is a placeholder; b_l lives at index l.
    b: Vec<f64>,
}

impl WeightCache {
    pub fn new(order: FractionalOrder) -> Self {
        Self {
            order,
            a: vec![a_coeff(order, 0)],
            b: vec![0.0],
        }
    }

    pub fn order(&self) -> FractionalOrder {
        self.order
    }

    fn extend_to(&mut self, l: usize) {
        while self.a.len() <= l {
            let next = self.a.len();
            self.a.push(a_coeff(self.order, next));
        }
        while self.b.len() <= l {
            let next = self.b.len();
            self.b.push(b_coeff(self.order, next).expect("l >= 1"));
        }
    }

    pub fn weights(&mut self, j: usize) -> L21SigmaWeights {
        let c = if j == 0 {
            vec![self.a[0]]
        } else {
            self.extend_to(j);
            let (a, b) = (&self.a, &self.b);
            let mut c = Vec::with_capacity(j + 1);
            c.push(a[0] + b[1]);
            c.extend((1..j).map(|s| a[s] + b[s + 1] - b[s]));
            c.push(a[j] - b[j]);
            c
        };
        L21SigmaWeights {
            order: self.order,
            level: j,
            c,
        }
    }
}

/// Discrete Caputo derivative at `t_{j+σ}` from samples `y_0 … y_{j+1}`.
pub fn discrete_caputo(history: &[f64], order: FractionalOrder, tau: f64) -> Result<f64> {
    if history.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "discrete Caputo operator needs at least two samples, got {}",
            history.len()
        )));
    }
    if tau.is_nan() || tau <= 0.0 {
        return Err(Error::InvalidArgument(format!("time step must be positive, got {tau}")));
    }
    let j = history.len() - 2;
    let weights = c_weights(order, j);
    let sum: f64 = history
        .windows(2)
        .enumerate()
        .map(|(s, w)| weights.get(j - s) * (w[1] - w[0]))
        .sum();
    Ok(order.caputo_scale(tau) * sum)
}

/// Second-order approximation of `du/dt` at `t_{j+σ}`:
/// `[(2σ+1) y_{j+1} - 4σ y_j + (2σ-1) y_{j-1}] / (2τ)`.
pub fn drift_stencil(
    y_prev: f64,
    y_curr: f64,
    y_next: f64,
    order: FractionalOrder,
    tau: f64,
) -> f64 {
    let sigma = order.sigma;
    ((2.0 * sigma + 1.0) * y_next - 4.0 * sigma * y_curr + (2.0 * sigma - 1.0) * y_prev)
        / (2.0 * tau)
}
