use crate::mesh::{l2_norm, max_norm, GridFunction, Mesh};

/// Outcome of one march from `t = 0` to `T`.
#[derive(Debug, Clone)]
pub struct SolveReport<M: Mesh> {
    /// Solution at `t_M = T`, boundary included.
    pub final_state: GridFunction<M>,
    /// All levels `0 … M` when history retention was requested.
    pub history: Option<Vec<GridFunction<M>>>,
    /// Per-level errors against the exact solution, when one is known.
    pub errors: Option<LevelErrors>,
}

impl<M: Mesh> SolveReport<M> {
    /// `max_j max_i |e_i^j|`.
    pub fn error_max(&self) -> Option<f64> {
        self.errors.as_ref().map(LevelErrors::max_over_levels)
    }

    /// `max_j ||e^j||` in the discrete L2 norm.
    pub fn error_l2(&self) -> Option<f64> {
        self.errors.as_ref().map(LevelErrors::l2_over_levels)
    }
}

/// Max-norm and L2-norm error of every time level.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LevelErrors {
    pub max: Vec<f64>,
    pub l2: Vec<f64>,
}

impl LevelErrors {
    pub fn record<M: Mesh>(&mut self, numerical: &GridFunction<M>, exact: &GridFunction<M>) {
        let e = numerical.difference(exact);
        self.max.push(max_norm(&e));
        self.l2.push(l2_norm(&e));
    }

    pub fn levels(&self) -> usize {
        self.max.len()
    }

    pub fn max_over_levels(&self) -> f64 {
        self.max.iter().copied().fold(0.0, f64::max)
    }

    pub fn l2_over_levels(&self) -> f64 {
        self.l2.iter().copied().fold(0.0, f64::max)
    }
}
