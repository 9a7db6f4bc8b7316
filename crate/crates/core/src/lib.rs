//! Implicit L2-1σ finite-difference solvers for time-fractional
//! reaction-diffusion equations with variable coefficients and a time
//! drift term, in one and two space dimensions:
//!
//! ```text
//! ∂u/∂t + D^α_{0,t} u = ∇·(K ∇u) - q u + f,   0 < α < 1
//! ```
//!
//! with Dirichlet data on every face. Both schemes are second order in
//! time and space.

pub mod error;
pub mod kernel;
pub mod manufactured;
pub mod mesh;
pub mod penta;
pub mod problem;
pub mod report;
pub mod solver1d;
pub mod solver2d;
pub mod special;
pub mod tridiag;

pub use error::{Error, Result};
pub use kernel::{FractionalOrder, L21SigmaWeights, WeightCache};
pub use mesh::{GridFunction, Mesh1D, Mesh2D, TimeGrid};
pub use problem::{Problem1D, Problem2D};
pub use report::SolveReport;
