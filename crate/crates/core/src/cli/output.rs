//! Text renderings of solutions, sweep tables and stability maps.
//!
//! Everything here is a pure function of its input, with fixed float
//! formatting and row order, so identical inputs give identical bytes.

use std::fmt::Write as _;

use crate::analysis::{Norm, Solution, SweepTable};
use crate::problems::ProblemKind;
use crate::stability::{StabilityMap, StabilityVariant};

/// Scientific notation, 6 significant digits.
pub fn sci6(v: f64) -> String {
    format!("{v:.5e}")
}

/// Scientific notation, 2 significant digits, e.g. `1.8E-4`.
pub fn sci2(v: f64) -> String {
    format!("{v:.1E}")
}

pub const DIVERGED: &str = "DIVERGED";

pub fn solution_csv(solution: &Solution) -> String {
    let grid = solution.numerical.grid();
    let mut out = String::from("x,u_num,u_ref,error\n");
    for (j, (u, r)) in solution
        .numerical
        .values()
        .iter()
        .zip(solution.reference.values())
        .enumerate()
    {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            sci6(grid.x(j)),
            sci6(*u),
            sci6(*r),
            sci6(u - r)
        );
    }
    out
}

pub fn sweep_csv(table: &SweepTable, norm: Norm) -> String {
    let mut out = format!("scheme,resolution,{},order\n", norm.name());
    for column in &table.columns {
        let label = column.scheme.label();
        for row in &column.rows {
            let value = row
                .norms
                .map(|n| sci6(n.get(norm)))
                .unwrap_or_else(|| DIVERGED.to_string());
            let order = row
                .orders
                .and_then(|o| o.get(norm))
                .map(sci6)
                .unwrap_or_default();
            let _ = writeln!(out, "{label},{},{value},{order}", row.label);
        }
    }
    out
}

pub fn sweep_markdown(table: &SweepTable, norm: Norm) -> String {
    let kind = table.problem.kind();
    let mut out = format!(
        "### {} norm, {} problem, t = {}\n\n",
        norm.name(),
        kind.name(),
        table.t_final
    );
    let first = if kind == ProblemKind::Burgers { "dt" } else { "N" };
    out.push_str(&format!("| {first} |"));
    for c in &table.columns {
        let _ = write!(out, " {} {} | order |", c.scheme.label(), norm.name());
    }
    out.push_str("\n|---|");
    for _ in &table.columns {
        out.push_str("---|---|");
    }
    out.push('\n');

    let rows = table.columns.first().map_or(0, |c| c.rows.len());
    for r in 0..rows {
        let _ = write!(out, "| {} |", table.columns[0].rows[r].label);
        for c in &table.columns {
            let row = &c.rows[r];
            let value = row
                .norms
                .map(|n| sci2(n.get(norm)))
                .unwrap_or_else(|| DIVERGED.to_string());
            let order = row
                .orders
                .and_then(|o| o.get(norm))
                .map(|o| format!("{o:.1}"))
                .unwrap_or_default();
            let _ = write!(out, " {value} | {order} |");
        }
        out.push('\n');
    }
    out
}

pub fn stability_csv(map: &StabilityMap) -> String {
    let mut out = String::from("theta,beta,g_modulus,stable\n");
    for (i, &theta) in map.theta_axis.iter().enumerate() {
        for (j, &beta) in map.beta_axis.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                sci6(theta),
                sci6(beta),
                sci6(map.modulus[i][j]),
                map.stable_mask[i][j]
            );
        }
    }
    out
}

/// Gray level for a modulus: `round(255 * min(|g|, 2) / 2)`.
pub fn gray_level(modulus: f64) -> u8 {
    (255.0 * modulus.min(2.0) / 2.0).round() as u8
}

/// Plain-ASCII P2 image: one column per θ sample, one row per β sample,
/// top row at the largest β.
pub fn stability_pgm(map: &StabilityMap) -> String {
    let width = map.theta_axis.len();
    let height = map.beta_axis.len();
    let variant = match map.variant {
        StabilityVariant::Ga => "ga",
        StabilityVariant::Aa => "aa",
    };
    let mut out = format!("P2\n# {variant} |g|, theta across, beta up\n{width} {height}\n255\n");
    for j in (0..height).rev() {
        let line: Vec<String> = (0..width)
            .map(|i| gray_level(map.modulus[i][j]).to_string())
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
