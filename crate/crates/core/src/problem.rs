//! Problem descriptions. Every data field is an opaque evaluator, and sign
//! conditions are checked where the fields are sampled.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernel::FractionalOrder;

/// `(x, t) -> value`
pub type Field1D = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
/// `(x, y, t) -> value`
pub type Field2D = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;
/// `t -> value`
pub type TimeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// `x -> value`
pub type Profile1D = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// `(x, y) -> value`
pub type Profile2D = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
/// Face data `(s, t) -> value`, `s` being the coordinate along the face.
pub type FaceFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

const COMPATIBILITY_TOL: f64 = 1e-10;

/// `u_t + D^α u = (k u_x)_x - q u + f` on `[0, L] × [0, T]` with
/// `u(0, t) = φ₁(t)`, `u(L, t) = φ₂(t)`, `u(x, 0) = u₀(x)`.
#[derive(Clone)]
pub struct Problem1D {
    pub order: FractionalOrder,
    pub length: f64,
    pub final_time: f64,
    pub diffusion: Field1D,
    pub reaction: Field1D,
    pub source: Field1D,
    pub initial: Profile1D,
    pub left: TimeFn,
    pub right: TimeFn,
    pub exact: Option<Field1D>,
}

impl Problem1D {
    /// Unit diffusion, no reaction, zero source and zero data.
    pub fn new(alpha: f64, length: f64, final_time: f64) -> Result<Self> {
        let order = FractionalOrder::new(alpha)?;
        if !(length > 0.0 && final_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "domain length and final time must be positive, got {length} and {final_time}"
            )));
        }
        Ok(Self {
            order,
            length,
            final_time,
            diffusion: Arc::new(|_, _| 1.0),
            reaction: Arc::new(|_, _| 0.0),
            source: Arc::new(|_, _| 0.0),
            initial: Arc::new(|_| 0.0),
            left: Arc::new(|_| 0.0),
            right: Arc::new(|_| 0.0),
            exact: None,
        })
    }

    pub fn with_diffusion(mut self, k: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.diffusion = Arc::new(k);
        self
    }

    pub fn with_reaction(mut self, q: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.reaction = Arc::new(q);
        self
    }

    pub fn with_source(mut self, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.source = Arc::new(f);
        self
    }

    pub fn with_initial(mut self, u0: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.initial = Arc::new(u0);
        self
    }

    pub fn with_boundaries(
        mut self,
        left: impl Fn(f64) -> f64 + Send + Sync + 'static,
        right: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.left = Arc::new(left);
        self.right = Arc::new(right);
        self
    }

    pub fn with_exact(mut self, u: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.exact = Some(Arc::new(u));
        self
    }

    /// `u₀(0) = φ₁(0)` and `u₀(L) = φ₂(0)`.
    pub fn check_compatibility(&self) -> Result<()> {
        let pairs = [
            ("x = 0", (self.initial)(0.0), (self.left)(0.0)),
            ("x = L", (self.initial)(self.length), (self.right)(0.0)),
        ];
        for (location, initial, boundary) in pairs {
            if (initial - boundary).abs().is_nan() || (initial - boundary).abs() > COMPATIBILITY_TOL {
                return Err(Error::Incompatible {
                    location: location.into(),
                    initial,
                    boundary,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Problem1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem1D")
            .field("alpha", &self.order.alpha())
            .field("length", &self.length)
            .field("final_time", &self.final_time)
            .field("has_exact", &self.exact.is_some())
            .finish_non_exhaustive()
    }
}

/// `u_t + D^α u = (d u_x)_x + (k u_y)_y - q u + f` on
/// `[0, Lx] × [0, Ly] × [0, T]`. Faces: `ψ₁(y, t)` at `x = 0`, `ψ₂(y, t)`
/// at `x = Lx`, `g₁(x, t)` at `y = 0`, `g₂(x, t)` at `y = Ly`.
#[derive(Clone)]
pub struct Problem2D {
    pub order: FractionalOrder,
    pub lx: f64,
    pub ly: f64,
    pub final_time: f64,
    pub diffusion_x: Field2D,
    pub diffusion_y: Field2D,
    pub reaction: Field2D,
    pub source: Field2D,
    pub initial: Profile2D,
    pub west: FaceFn,
    pub east: FaceFn,
    pub south: FaceFn,
    pub north: FaceFn,
    pub exact: Option<Field2D>,
}

impl Problem2D {
    pub fn new(alpha: f64, lx: f64, ly: f64, final_time: f64) -> Result<Self> {
        let order = FractionalOrder::new(alpha)?;
        if !(lx > 0.0 && ly > 0.0 && final_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "domain extents and final time must be positive, got {lx}, {ly}, {final_time}"
            )));
        }
        Ok(Self {
            order,
            lx,
            ly,
            final_time,
            diffusion_x: Arc::new(|_, _, _| 1.0),
            diffusion_y: Arc::new(|_, _, _| 1.0),
            reaction: Arc::new(|_, _, _| 0.0),
            source: Arc::new(|_, _, _| 0.0),
            initial: Arc::new(|_, _| 0.0),
            west: Arc::new(|_, _| 0.0),
            east: Arc::new(|_, _| 0.0),
            south: Arc::new(|_, _| 0.0),
            north: Arc::new(|_, _| 0.0),
            exact: None,
        })
    }

    /// `d(x, y, t)`, the coefficient of the x-flux.
    pub fn with_diffusion_x(mut self, d: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.diffusion_x = Arc::new(d);
        self
    }

    /// `k(x, y, t)`, the coefficient of the y-flux.
    pub fn with_diffusion_y(mut self, k: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.diffusion_y = Arc::new(k);
        self
    }

    pub fn with_reaction(mut self, q: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.reaction = Arc::new(q);
        self
    }

    pub fn with_source(mut self, f: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.source = Arc::new(f);
        self
    }

    pub fn with_initial(mut self, u0: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.initial = Arc::new(u0);
        self
    }

    /// Sets all four faces from one evaluator `(x, y, t) -> value`.
    pub fn with_boundary(mut self, g: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        let g: Field2D = Arc::new(g);
        let (lx, ly) = (self.lx, self.ly);
        let w = g.clone();
        self.west = Arc::new(move |y, t| w(0.0, y, t));
        let e = g.clone();
        self.east = Arc::new(move |y, t| e(lx, y, t));
        let s = g.clone();
        self.south = Arc::new(move |x, t| s(x, 0.0, t));
        self.north = Arc::new(move |x, t| g(x, ly, t));
        self
    }

    pub fn with_faces(mut self, west: FaceFn, east: FaceFn, south: FaceFn, north: FaceFn) -> Self {
        self.west = west;
        self.east = east;
        self.south = south;
        self.north = north;
        self
    }

    pub fn with_exact(mut self, u: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.exact = Some(Arc::new(u));
        self
    }

    /// Initial data must agree with the face data at `t = 0` on the given
    /// boundary sample points.
    pub fn check_compatibility_at(&self, xs: &[f64], ys: &[f64]) -> Result<()> {
        let check = |location: String, initial: f64, boundary: f64| {
            if (initial - boundary).abs() <= COMPATIBILITY_TOL {
                Ok(())
            } else {
                Err(Error::Incompatible {
                    location,
                    initial,
                    boundary,
                })
            }
        };
        for &y in ys {
            check(format!("(0, {y})"), (self.initial)(0.0, y), (self.west)(y, 0.0))?;
            check(format!("({}, {y})", self.lx), (self.initial)(self.lx, y), (self.east)(y, 0.0))?;
        }
        for &x in xs {
            check(format!("({x}, 0)"), (self.initial)(x, 0.0), (self.south)(x, 0.0))?;
            check(format!("({x}, {})", self.ly), (self.initial)(x, self.ly), (self.north)(x, 0.0))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Problem2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem2D")
            .field("alpha", &self.order.alpha())
            .field("lx", &self.lx)
            .field("ly", &self.ly)
            .field("final_time", &self.final_time)
            .field("has_exact", &self.exact.is_some())
            .finish_non_exhaustive()
    }
}

pub(crate) fn positive(name: &'static str, value: f64, location: impl FnOnce() -> String) -> Result<f64> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::CoefficientSign {
            name,
            value,
            location: location(),
        })
    }
}

pub(crate) fn nonnegative(name: &'static str, value: f64, location: impl FnOnce() -> String) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::CoefficientSign {
            name,
            value,
            location: location(),
        })
    }
}
