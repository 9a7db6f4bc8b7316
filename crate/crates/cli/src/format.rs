//! Text output: table-style scientific notation plus CSV and JSON rendering.

use std::fmt::Write as _;

use crate::harness::{ConvergenceTable, SingleRun};

pub const CONVERGENCE_HEADER: &str = "alpha,resolution,error_max,rate_max,error_l2,rate_l2";
pub const SINGLE_HEADER: &str = "alpha,resolution,steps,error_max,error_l2,final_error_max,solution_max";

/// Five significant digits with a signed two-digit exponent: `6.9433e-05`.
pub fn sci(value: f64) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    let raw = format!("{value:.4e}");
    let (mantissa, exponent) = raw.split_once('e').expect("exponent notation");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let sign = if exponent < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exponent.abs())
}

pub fn rate(value: f64) -> String {
    format!("{value:.4}")
}

fn opt(value: Option<f64>, render: fn(f64) -> String) -> String {
    value.map(render).unwrap_or_default()
}

pub fn convergence_csv(table: &ConvergenceTable) -> String {
    let mut out = String::from(CONVERGENCE_HEADER);
    out.push('\n');
    for row in &table.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.alpha,
            row.resolution,
            sci(row.error_max),
            opt(row.rate_max, rate),
            sci(row.error_l2),
            opt(row.rate_l2, rate)
        )
        .expect("writing to a String cannot fail");
    }
    out
}

pub fn convergence_json(table: &ConvergenceTable) -> String {
    let mut text = serde_json::to_string_pretty(table).expect("table is serializable");
    text.push('\n');
    text
}

pub fn single_csv(run: &SingleRun) -> String {
    format!(
        "{SINGLE_HEADER}\n{},{},{},{},{},{},{}\n",
        run.alpha,
        run.resolution,
        run.steps,
        opt(run.error_max, sci),
        opt(run.error_l2, sci),
        opt(run.final_error_max, sci),
        sci(run.solution_max)
    )
}

pub fn single_json(run: &SingleRun) -> String {
    let mut text = serde_json::to_string_pretty(run).expect("summary is serializable");
    text.push('\n');
    text
}
