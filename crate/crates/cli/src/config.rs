//! JSON run configuration.
//!
//! ```json
//! {
//!   "example": "example1",
//!   "alpha": [0.1, 0.5],
//!   "mode": "refine-time",
//!   "ladder": [8, 16, 32, 64, 128],
//!   "fixed": { "h": "1/2000" },
//!   "format": "csv",
//!   "output": "table1.csv"
//! }
//! ```
//!
//! `ladder` lists the number of divisions along the refined axis. The
//! `fixed` step (`h` for `refine-time`, `tau` for `refine-space`) is given
//! as `"1/N"` or as a number and must divide its interval evenly.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tfrde::manufactured::ExampleId;

use crate::error::{CliError, CliResult};
use crate::inline::InlineProblem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LadderMode {
    /// Ladder over `M`, spatial step fixed.
    RefineTime,
    /// Ladder over `N` (`N_x = N_y = N` in 2D), time step fixed.
    RefineSpace,
    /// `M = N` along the ladder.
    RefineBoth,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A step size written either as `"p/q"` or as a plain number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Step {
    Fraction(String),
    Value(f64),
}

impl Step {
    pub fn value(&self) -> CliResult<f64> {
        let bad = || CliError::Config(format!("step {self:?} is not a positive number or fraction p/q"));
        let v = match self {
            Step::Value(v) => *v,
            Step::Fraction(s) => match s.split_once('/') {
                Some((p, q)) => {
                    let p = f64::from_str(p.trim()).map_err(|_| bad())?;
                    let q = f64::from_str(q.trim()).map_err(|_| bad())?;
                    p / q
                }
                None => f64::from_str(s.trim()).map_err(|_| bad())?,
            },
        };
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    }

    /// Number of steps of this size that tile `extent`.
    pub fn divisions(&self, extent: f64) -> CliResult<usize> {
        let ratio = extent / self.value()?;
        let n = ratio.round();
        if n < 1.0 || (ratio - n).abs() > 1e-9 * n {
            return Err(CliError::Config(format!(
                "step {self:?} does not divide the interval of length {extent}"
            )));
        }
        Ok(n as usize)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedStep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Step>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Step>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Name of a built-in example (`example1` … `example4`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
    /// Problem given by expression strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inline: Option<InlineProblem>,
    pub alpha: Vec<f64>,
    pub mode: LadderMode,
    pub ladder: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed: Option<FixedStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub keep_history: bool,
    /// Where `solve` writes the grid values; ignored by `convergence`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshot: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration is always serializable")
    }

    pub fn example_id(&self) -> CliResult<Option<ExampleId>> {
        self.example
            .as_deref()
            .map(|name| ExampleId::from_str(name).map_err(|e| CliError::Config(e.to_string())))
            .transpose()
    }

    pub fn validate(&self) -> CliResult<()> {
        let config_err = |msg: String| Err(CliError::Config(msg));
        match (&self.example, &self.inline) {
            (Some(_), Some(_)) => return config_err("give either 'example' or 'inline', not both".into()),
            (None, None) => return config_err("one of 'example' or 'inline' is required".into()),
            _ => {}
        }
        self.example_id()?;
        if let Some(inline) = &self.inline {
            inline.validate()?;
        }
        if self.alpha.is_empty() {
            return config_err("'alpha' needs at least one value".into());
        }
        if let Some(a) = self.alpha.iter().find(|a| !(**a > 0.0 && **a < 1.0)) {
            return config_err(format!("alpha must lie in (0, 1), got {a}"));
        }
        if self.ladder.is_empty() {
            return config_err("'ladder' needs at least one entry".into());
        }
        if self.ladder.windows(2).any(|w| w[0] >= w[1]) {
            return config_err(format!("'ladder' must be strictly increasing, got {:?}", self.ladder));
        }
        let min = if self.mode == LadderMode::RefineTime { 1 } else { 2 };
        if self.ladder[0] < min {
            return config_err(format!("ladder entries must be at least {min} in {:?} mode", self.mode));
        }
        let fixed = self.fixed.clone().unwrap_or_default();
        let (needs_h, needs_tau) = match self.mode {
            LadderMode::RefineTime => (true, false),
            LadderMode::RefineSpace => (false, true),
            LadderMode::RefineBoth => (false, false),
        };
        if needs_h != fixed.h.is_some() || needs_tau != fixed.tau.is_some() {
            return config_err(match self.mode {
                LadderMode::RefineTime => "'refine-time' requires exactly 'fixed.h'".into(),
                LadderMode::RefineSpace => "'refine-space' requires exactly 'fixed.tau'".into(),
                LadderMode::RefineBoth => "'refine-both' takes no 'fixed' step".into(),
            });
        }
        for step in [&fixed.h, &fixed.tau].into_iter().flatten() {
            step.value()?;
        }
        Ok(())
    }
}
