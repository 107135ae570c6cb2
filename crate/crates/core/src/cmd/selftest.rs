use super::{CmdResult, Output};
use zm_forms::selftest::{selftest, Scope};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// ring, forms, lagrangian, ahss, census or all.
    #[arg(long, default_value = "all")]
    scope: Scope,
}

pub fn run(args: Args, seed: u64, out: &Output) -> CmdResult {
    let summary = selftest(args.scope, seed);
    out.emit(&summary, || {
        let mut lines = vec![format!("{:<11} {:>6} {:>5} {:>8}", "suite", "pass", "fail", "skipped")];
        for s in &summary.suites {
            lines.push(format!("{:<11} {:>6} {:>5} {:>8}", s.suite.to_string(), s.pass, s.fail, s.skipped));
            lines.extend(s.failures.iter().map(|f| format!("  FAIL {f}")));
        }
        lines.push(format!("total {} in {:.0} ms", summary.total, summary.elapsed_ms));
        lines.join("\n")
    });
    Ok(u8::from(!summary.ok()))
}
