use clap::Subcommand;
use serde::Deserialize;

use super::{check_modulus, read_json_arg, CmdResult, Output};
use zm_forms::lagrangian::{run_sweep, solve, Branch, EmbeddingSpec, SearchBudget};
use zm_forms::ring::GroupRingElement;

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one embedding `v₂ = a₁e₁ + a₂e₂ + c·f₁ + b₂f₂` and print the trace.
    Solve {
        #[arg(long)]
        branch: Branch,
        #[arg(long)]
        m: usize,
        /// `{"a1": …, "a2": …, "b2": …}` as a JSON string, `@file` or `-`.
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Solve random valid embeddings and tally the outcomes.
    Sweep {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Restrict to one branch; default is every branch defined for `m`.
        #[arg(long)]
        branch: Option<Branch>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(clap::Args, Debug)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = 4)]
    word_length: usize,
    /// Coefficient bound for the correction search; default `2m`.
    #[arg(long)]
    height: Option<i64>,
    #[arg(long, default_value_t = 100_000)]
    max_attempts: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget { word_length: self.word_length, height: self.height, max_attempts: self.max_attempts }
    }
}

#[derive(Deserialize)]
struct SpecInput {
    a1: GroupRingElement,
    a2: GroupRingElement,
    b2: GroupRingElement,
}

pub fn run(command: Command, seed: u64, out: &Output) -> CmdResult {
    match command {
        Command::Solve { branch, m, spec, budget } => {
            let input: SpecInput = read_json_arg(&spec)?;
            for x in [&input.a1, &input.a2, &input.b2] {
                check_modulus(m, x.modulus())?;
            }
            if !branch.accepts(m) {
                return Err(format!("branch {branch} is not defined for m = {m}"));
            }
            let spec = EmbeddingSpec::new(branch, input.a1, input.a2, input.b2).map_err(|e| e.to_string())?;
            let trace = solve(&spec, &budget.budget()).map_err(|e| e.to_string())?;
            out.emit(&trace, || {
                let mut lines = vec![format!("{branch}, m = {m}: certified")];
                for s in &trace.steps {
                    lines.push(format!("  step {}", s.name));
                }
                for (i, w) in trace.u.iter().enumerate() {
                    let coords: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
                    lines.push(format!("  w{} = ({})", i + 1, coords.join(", ")));
                }
                lines.join("\n")
            });
            Ok(0)
        }
        Command::Sweep { m, count, branch, budget } => {
            let branches: Vec<Branch> = match branch {
                Some(b) if b.accepts(m) => vec![b],
                Some(b) => return Err(format!("branch {b} is not defined for m = {m}")),
                None => Branch::ALL.into_iter().filter(|b| b.accepts(m)).collect(),
            };
            let reports: Vec<_> = branches.iter().map(|&b| run_sweep(b, m, count, seed, &budget.budget())).collect();
            out.emit(&reports, || {
                let mut lines = vec![format!("{:<8} {:>3} {:>6} {:>9} {:>9} {:>8} {:>6}", "branch", "m", "count", "certified", "exhausted", "not-comp", "failed")];
                for r in &reports {
                    lines.push(format!(
                        "{:<8} {:>3} {:>6} {:>9} {:>9} {:>8} {:>6}",
                        r.branch.to_string(),
                        r.m,
                        r.count,
                        r.certified,
                        r.search_exhausted,
                        r.not_complement,
                        r.failed
                    ));
                }
                lines.join("\n")
            });
            let bad = reports.iter().any(|r| r.not_complement > 0 || r.failed > 0);
            Ok(u8::from(bad))
        }
    }
}
