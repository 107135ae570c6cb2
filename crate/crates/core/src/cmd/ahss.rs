use clap::Subcommand;
use serde_json::json;

use super::{CmdResult, Output};
use zm_forms::ahss::{spin_line_report, steenrod_square, CohomologyClass, Monomial};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the line `p + q = 6` of the spin bordism spectral sequence.
    Report {
        #[arg(long)]
        m: usize,
        /// Twist by the bundle with nonzero `w₂`.
        #[arg(long)]
        twisted: bool,
    },
    /// `Sqᵏ` of a monomial such as `x^3` or `xy^2`.
    Sq {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: u32,
        #[arg(long = "class")]
        class: String,
    },
}

pub fn run(command: Command, out: &Output) -> CmdResult {
    match command {
        Command::Report { m, twisted } => {
            let r = spin_line_report(m, twisted).map_err(|e| e.to_string())?;
            let mut differentials = r.e2.differentials.clone();
            differentials.extend(r.cited.iter().cloned());
            let value = json!({
                "m": r.m,
                "twisted": r.twisted,
                "entries": { "e2": &r.e2, "e3": &r.e3 },
                "line": &r.line,
                "differentials": differentials,
                "steps": &r.steps,
                "conclusion": if r.conclusion_zero { "zero" } else { "nonzero" },
                "provenance": r.provenance,
                "bibliography": &r.bibliography,
            });
            out.emit(&value, || {
                let mut lines = vec![format!("m = {m}, twisted = {twisted}")];
                for e in &r.line {
                    lines.push(format!(
                        "  ({}, {}): E² {:?}  E³ {:?}  final {:?}  [{:?}]",
                        e.p, e.q, e.e2, e.e3, e.final_group, e.provenance
                    ));
                }
                for s in &r.steps {
                    lines.push(format!("  [{:?}] {}", s.provenance, s.description));
                }
                lines.join("\n")
            });
            Ok(0)
        }
        Command::Sq { m, k, class } => {
            let mono: Monomial = class.parse().map_err(|e: zm_forms::ahss::AhssError| e.to_string())?;
            let c = CohomologyClass::monomial(m, mono).map_err(|e| e.to_string())?;
            let sq = steenrod_square(k, &c).map_err(|e| e.to_string())?;
            out.emit(&json!({ "input": c.to_string(), "k": k, "result": sq.to_string(), "degree": sq.degree, "class": sq }), || {
                format!("Sq^{k}({c}) = {sq}")
            });
            Ok(0)
        }
    }
}
