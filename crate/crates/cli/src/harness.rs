//! Convergence ladders and single solves driven by a [`RunConfig`].

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;
use tfrde::manufactured::ExampleProblem;
use tfrde::mesh::{convergence_rate, max_norm, Mesh};
use tfrde::report::SolveReport;
use tfrde::solver1d::solve;
use tfrde::solver2d::solve2d;
use tfrde::{Mesh1D, Mesh2D, Problem1D, Problem2D, TimeGrid};

use crate::config::{LadderMode, RunConfig};
use crate::error::{CliError, CliResult};

/// A problem ready to solve at one fractional order.
#[derive(Debug, Clone)]
pub enum ResolvedProblem {
    OneD(Problem1D),
    TwoD(Problem2D),
}

impl ResolvedProblem {
    pub fn has_exact(&self) -> bool {
        match self {
            Self::OneD(p) => p.exact.is_some(),
            Self::TwoD(p) => p.exact.is_some(),
        }
    }

    fn space_extents(&self) -> (f64, f64) {
        match self {
            Self::OneD(p) => (p.length, p.length),
            Self::TwoD(p) => (p.lx, p.ly),
        }
    }

    fn final_time(&self) -> f64 {
        match self {
            Self::OneD(p) => p.final_time,
            Self::TwoD(p) => p.final_time,
        }
    }
}

pub fn resolve(config: &RunConfig, alpha: f64) -> CliResult<ResolvedProblem> {
    if let Some(id) = config.example_id()? {
        return Ok(match id.build(alpha)?.problem {
            ExampleProblem::OneD(p) => ResolvedProblem::OneD(p),
            ExampleProblem::TwoD(p) => ResolvedProblem::TwoD(p),
        });
    }
    let inline = config.inline.as_ref().expect("validated config names a problem");
    Ok(match inline.dimension() {
        1 => ResolvedProblem::OneD(inline.build_1d(alpha)?),
        _ => ResolvedProblem::TwoD(inline.build_2d(alpha)?),
    })
}

/// Grid sizes of one ladder entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resolution {
    pub nx: usize,
    pub ny: usize,
    pub steps: usize,
    /// Step along the refined axis.
    pub step: f64,
    /// Length of the refined axis.
    pub extent: f64,
    pub divisions: usize,
}

impl Resolution {
    pub fn label(&self) -> String {
        if self.extent == 1.0 {
            format!("1/{}", self.divisions)
        } else {
            format!("{}/{}", self.extent, self.divisions)
        }
    }
}

pub fn resolutions(config: &RunConfig, problem: &ResolvedProblem) -> CliResult<Vec<Resolution>> {
    let (lx, ly) = problem.space_extents();
    let t_end = problem.final_time();
    let fixed = config.fixed.clone().unwrap_or_default();
    config
        .ladder
        .iter()
        .map(|&n| {
            Ok(match config.mode {
                LadderMode::RefineTime => {
                    let h = fixed.h.as_ref().expect("validated");
                    Resolution {
                        nx: h.divisions(lx)?,
                        ny: h.divisions(ly)?,
                        steps: n,
                        step: t_end / n as f64,
                        extent: t_end,
                        divisions: n,
                    }
                }
                LadderMode::RefineSpace => Resolution {
                    nx: n,
                    ny: n,
                    steps: fixed.tau.as_ref().expect("validated").divisions(t_end)?,
                    step: lx / n as f64,
                    extent: lx,
                    divisions: n,
                },
                LadderMode::RefineBoth => Resolution {
                    nx: n,
                    ny: n,
                    steps: n,
                    step: lx / n as f64,
                    extent: lx,
                    divisions: n,
                },
            })
        })
        .collect()
}

pub enum Report {
    OneD(SolveReport<Mesh1D>),
    TwoD(SolveReport<Mesh2D>),
}

impl Report {
    fn errors(&self) -> (Option<f64>, Option<f64>, Option<f64>) {
        let errors = match self {
            Self::OneD(r) => r.errors.as_ref(),
            Self::TwoD(r) => r.errors.as_ref(),
        };
        match errors {
            Some(e) => (Some(e.max_over_levels()), Some(e.l2_over_levels()), e.max.last().copied()),
            None => (None, None, None),
        }
    }

    fn solution_max(&self) -> f64 {
        match self {
            Self::OneD(r) => max_norm(&r.final_state),
            Self::TwoD(r) => max_norm(&r.final_state),
        }
    }
}

pub fn solve_entry(problem: &ResolvedProblem, res: &Resolution, keep_history: bool) -> CliResult<Report> {
    Ok(match problem {
        ResolvedProblem::OneD(p) => Report::OneD(solve(p, res.nx, res.steps, keep_history)?),
        ResolvedProblem::TwoD(p) => Report::TwoD(solve2d(p, res.nx, res.ny, res.steps, keep_history)?),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub alpha: f64,
    pub resolution: String,
    pub step: f64,
    pub error_max: f64,
    pub rate_max: Option<f64>,
    pub error_l2: f64,
    pub rate_l2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// Rows of one `alpha` block, in ladder order.
    pub fn block(&self, alpha: f64) -> Vec<&ConvergenceRow> {
        self.rows.iter().filter(|r| r.alpha == alpha).collect()
    }
}

/// One solve per ladder entry and `alpha`; rates from consecutive entries.
pub fn run_convergence(config: &RunConfig) -> CliResult<ConvergenceTable> {
    config.validate()?;
    let problems: Vec<ResolvedProblem> = config.alpha.iter().map(|&a| resolve(config, a)).collect::<CliResult<_>>()?;
    if !problems[0].has_exact() {
        return Err(CliError::Config(
            "convergence mode needs an exact solution ('exact' in the inline problem)".into(),
        ));
    }
    let ladders: Vec<Vec<Resolution>> = problems.iter().map(|p| resolutions(config, p)).collect::<CliResult<_>>()?;
    let jobs: Vec<(usize, usize)> = (0..problems.len())
        .flat_map(|a| (0..config.ladder.len()).map(move |k| (a, k)))
        .collect();
    let outcomes: Vec<(f64, f64)> = jobs
        .par_iter()
        .map(|&(a, k)| {
            let report = solve_entry(&problems[a], &ladders[a][k], false)?;
            let (max, l2, _) = report.errors();
            Ok((max.expect("exact solution present"), l2.expect("exact solution present")))
        })
        .collect::<CliResult<_>>()?;

    let mut rows = Vec::with_capacity(jobs.len());
    for (&(a, k), &(error_max, error_l2)) in jobs.iter().zip(&outcomes) {
        let res = &ladders[a][k];
        let (rate_max, rate_l2) = if k == 0 {
            (None, None)
        } else {
            let (prev_max, prev_l2) = outcomes[jobs.iter().position(|&j| j == (a, k - 1)).expect("previous entry")];
            let prev_step = ladders[a][k - 1].step;
            (
                convergence_rate(prev_max, error_max, prev_step, res.step).ok(),
                convergence_rate(prev_l2, error_l2, prev_step, res.step).ok(),
            )
        };
        rows.push(ConvergenceRow {
            alpha: config.alpha[a],
            resolution: res.label(),
            step: res.step,
            error_max,
            rate_max,
            error_l2,
            rate_l2,
        });
    }
    Ok(ConvergenceTable { rows })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingleRun {
    pub alpha: f64,
    pub resolution: String,
    pub nx: usize,
    pub ny: Option<usize>,
    pub steps: usize,
    pub error_max: Option<f64>,
    pub error_l2: Option<f64>,
    /// Max-norm error of the last level.
    pub final_error_max: Option<f64>,
    pub solution_max: f64,
    pub snapshot: Option<PathBuf>,
}

/// One solve at the single `alpha` and ladder entry of `config`, writing
/// the grid values to `config.snapshot` when set.
pub fn run_single(config: &RunConfig) -> CliResult<SingleRun> {
    config.validate()?;
    if config.alpha.len() != 1 || config.ladder.len() != 1 {
        return Err(CliError::Config(
            "'solve' takes exactly one alpha and one ladder entry".into(),
        ));
    }
    let alpha = config.alpha[0];
    let problem = resolve(config, alpha)?;
    let res = resolutions(config, &problem)?[0];
    let keep = config.keep_history || config.snapshot.is_some();
    let report = solve_entry(&problem, &res, keep)?;
    if let Some(path) = &config.snapshot {
        let text = snapshot_csv(&problem, &report, res.steps, config.keep_history);
        fs::write(path, text).map_err(|e| CliError::io(path, e))?;
    }
    let (error_max, error_l2, final_error_max) = report.errors();
    Ok(SingleRun {
        alpha,
        resolution: res.label(),
        nx: res.nx,
        ny: matches!(problem, ResolvedProblem::TwoD(_)).then_some(res.ny),
        steps: res.steps,
        error_max,
        error_l2,
        final_error_max,
        solution_max: report.solution_max(),
        snapshot: config.snapshot.clone(),
    })
}

/// Grid values as CSV rows `x[,y],value[,exact,error]`, final level only
/// or, with `all_levels`, every level prefixed by `t`.
pub fn snapshot_csv(problem: &ResolvedProblem, report: &Report, steps: usize, all_levels: bool) -> String {
    let mut out = String::new();
    let order = match problem {
        ResolvedProblem::OneD(p) => p.order,
        ResolvedProblem::TwoD(p) => p.order,
    };
    let time = TimeGrid::new(problem.final_time(), steps, order).expect("grid was valid for the solve");
    let t_of = |j: usize| time.t(j);
    match (problem, report) {
        (ResolvedProblem::OneD(p), Report::OneD(r)) => {
            let levels = levels(&r.history, &r.final_state, all_levels);
            header(&mut out, all_levels, &["x"], p.exact.is_some());
            for (j, level) in levels {
                let t = t_of(j.unwrap_or(steps));
                let mesh = level.mesh();
                for (i, &v) in level.values().iter().enumerate() {
                    let x = mesh.x(i);
                    let coords = [x];
                    let exact = p.exact.as_ref().map(|u| u(x, t));
                    row(&mut out, all_levels.then_some(t), &coords, v, exact);
                }
            }
        }
        (ResolvedProblem::TwoD(p), Report::TwoD(r)) => {
            let levels = levels(&r.history, &r.final_state, all_levels);
            header(&mut out, all_levels, &["x", "y"], p.exact.is_some());
            for (j, level) in levels {
                let t = t_of(j.unwrap_or(steps));
                let mesh = level.mesh();
                for l in 0..=mesh.ny() {
                    for i in 0..=mesh.nx() {
                        let (x, y) = (mesh.x(i), mesh.y(l));
                        let exact = p.exact.as_ref().map(|u| u(x, y, t));
                        row(&mut out, all_levels.then_some(t), &[x, y], level.at(i, l), exact);
                    }
                }
            }
        }
        _ => unreachable!("report dimension follows the problem"),
    }
    out
}

fn levels<'a, M: Mesh>(
    history: &'a Option<Vec<tfrde::GridFunction<M>>>,
    last: &'a tfrde::GridFunction<M>,
    all: bool,
) -> Vec<(Option<usize>, &'a tfrde::GridFunction<M>)> {
    match (all, history) {
        (true, Some(h)) => h.iter().enumerate().map(|(j, g)| (Some(j), g)).collect(),
        _ => vec![(None, last)],
    }
}

fn header(out: &mut String, with_t: bool, coords: &[&str], with_exact: bool) {
    let mut cols: Vec<&str> = Vec::new();
    if with_t {
        cols.push("t");
    }
    cols.extend_from_slice(coords);
    cols.push("value");
    if with_exact {
        cols.extend(["exact", "error"]);
    }
    out.push_str(&cols.join(","));
    out.push('\n');
}

fn row(out: &mut String, t: Option<f64>, coords: &[f64], value: f64, exact: Option<f64>) {
    let mut cells: Vec<String> = Vec::new();
    cells.extend(t.map(|t| t.to_string()));
    cells.extend(coords.iter().map(f64::to_string));
    cells.push(value.to_string());
    if let Some(u) = exact {
        cells.push(u.to_string());
        cells.push((value - u).abs().to_string());
    }
    writeln!(out, "{}", cells.join(",")).expect("writing to a String cannot fail");
}
