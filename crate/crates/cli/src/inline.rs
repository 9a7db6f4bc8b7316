//! Problems written as expression strings.
//!
//! Expressions use the `evalexpr` syntax with the variables `x`, `y`, `t`,
//! `alpha` and `pi`; functions are called as `math::sin(x)`, `math::exp(t)`,
//! `math::pow(t, 3)`. Integer literals divide as integers, so write `0.5`
//! rather than `1/2`.

use std::sync::Arc;

use evalexpr::{build_operator_tree, ContextWithMutableVariables, DefaultNumericTypes, HashMapContext, Node, Value};
use serde::{Deserialize, Serialize};
use tfrde::{Problem1D, Problem2D};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineProblem {
    /// `[L]` for a 1D problem on `(0, L)` or `[Lx, Ly]` for 2D.
    pub domain: Vec<f64>,
    #[serde(default = "unit")]
    pub final_time: f64,
    /// `k(x, t)` in 1D; in 2D the default for both directions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffusion: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffusion_x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffusion_y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reaction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// `u(x[, y], 0)`; `t` evaluates to zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<String>,
    /// Dirichlet data on the whole boundary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

fn unit() -> f64 {
    1.0
}

/// A compiled expression in `x`, `y`, `t` and `alpha`.
#[derive(Clone)]
pub struct Expr {
    source: String,
    node: Arc<Node<DefaultNumericTypes>>,
    alpha: f64,
}

impl Expr {
    pub fn compile(source: &str, alpha: f64) -> CliResult<Self> {
        let node = build_operator_tree::<DefaultNumericTypes>(source)
            .map_err(|e| CliError::Config(format!("cannot parse expression '{source}': {e}")))?;
        let expr = Self {
            source: source.to_owned(),
            node: Arc::new(node),
            alpha,
        };
        expr.try_eval(0.5, 0.5, 0.5)?;
        Ok(expr)
    }

    pub fn try_eval(&self, x: f64, y: f64, t: f64) -> CliResult<f64> {
        let mut ctx = HashMapContext::<DefaultNumericTypes>::new();
        for (name, v) in [("x", x), ("y", y), ("t", t), ("alpha", self.alpha), ("pi", std::f64::consts::PI)] {
            ctx.set_value(name.into(), Value::Float(v)).expect("fresh context accepts variables");
        }
        self.node
            .eval_number_with_context(&ctx)
            .map_err(|e| CliError::Config(format!("cannot evaluate '{}': {e}", self.source)))
    }

    /// Evaluation failures surface as NaN, which the solvers reject.
    pub fn eval(&self, x: f64, y: f64, t: f64) -> f64 {
        self.try_eval(x, y, t).unwrap_or(f64::NAN)
    }
}

impl InlineProblem {
    pub fn dimension(&self) -> usize {
        self.domain.len()
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn validate(&self) -> CliResult<()> {
        if !matches!(self.domain.len(), 1 | 2) {
            return Err(CliError::Config(format!(
                "'domain' must have one or two lengths, got {}",
                self.domain.len()
            )));
        }
        if self.domain.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
            return Err(CliError::Config(format!("domain lengths must be positive, got {:?}", self.domain)));
        }
        if !(self.final_time > 0.0 && self.final_time.is_finite()) {
            return Err(CliError::Config(format!("'final_time' must be positive, got {}", self.final_time)));
        }
        if self.dimension() == 1 && (self.diffusion_x.is_some() || self.diffusion_y.is_some()) {
            return Err(CliError::Config(
                "'diffusion_x'/'diffusion_y' apply to 2D problems; use 'diffusion' in 1D".into(),
            ));
        }
        self.compiled(0.5).map(|_| ())
    }

    fn compiled(&self, alpha: f64) -> CliResult<Compiled> {
        let get = |e: &Option<String>, default: &str| Expr::compile(e.as_deref().unwrap_or(default), alpha);
        let diffusion = self.diffusion.as_deref().unwrap_or("1");
        Ok(Compiled {
            dx: Expr::compile(self.diffusion_x.as_deref().unwrap_or(diffusion), alpha)?,
            dy: Expr::compile(self.diffusion_y.as_deref().unwrap_or(diffusion), alpha)?,
            q: get(&self.reaction, "0")?,
            f: get(&self.source, "0")?,
            u0: get(&self.initial, "0")?,
            g: get(&self.boundary, "0")?,
            exact: self.exact.as_deref().map(|e| Expr::compile(e, alpha)).transpose()?,
        })
    }

    pub fn build_1d(&self, alpha: f64) -> CliResult<Problem1D> {
        let c = self.compiled(alpha)?;
        let length = self.domain[0];
        let (k, q, f, u0) = (c.dx, c.q, c.f, c.u0);
        let (gl, gr) = (c.g.clone(), c.g);
        let mut problem = Problem1D::new(alpha, length, self.final_time)?
            .with_diffusion(move |x, t| k.eval(x, 0.0, t))
            .with_reaction(move |x, t| q.eval(x, 0.0, t))
            .with_source(move |x, t| f.eval(x, 0.0, t))
            .with_initial(move |x| u0.eval(x, 0.0, 0.0))
            .with_boundaries(move |t| gl.eval(0.0, 0.0, t), move |t| gr.eval(length, 0.0, t));
        if let Some(u) = c.exact {
            problem = problem.with_exact(move |x, t| u.eval(x, 0.0, t));
        }
        Ok(problem)
    }

    pub fn build_2d(&self, alpha: f64) -> CliResult<Problem2D> {
        let c = self.compiled(alpha)?;
        let (d, k, q, f, u0, g) = (c.dx, c.dy, c.q, c.f, c.u0, c.g);
        let mut problem = Problem2D::new(alpha, self.domain[0], self.domain[1], self.final_time)?
            .with_diffusion_x(move |x, y, t| d.eval(x, y, t))
            .with_diffusion_y(move |x, y, t| k.eval(x, y, t))
            .with_reaction(move |x, y, t| q.eval(x, y, t))
            .with_source(move |x, y, t| f.eval(x, y, t))
            .with_initial(move |x, y| u0.eval(x, y, 0.0))
            .with_boundary(move |x, y, t| g.eval(x, y, t));
        if let Some(u) = c.exact {
            problem = problem.with_exact(move |x, y, t| u.eval(x, y, t));
        }
        Ok(problem)
    }
}

struct Compiled {
    dx: Expr,
    dy: Expr,
    q: Expr,
    f: Expr,
    u0: Expr,
    g: Expr,
    exact: Option<Expr>,
}
