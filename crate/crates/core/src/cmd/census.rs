use super::{CmdResult, Output};
use zm_forms::census::{classification, ActionQuery, ClassCount};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u64,
    /// Number of `Sⁿ×Sⁿ` summands.
    #[arg(long = "g")]
    genus: u64,
    /// Pontryagin residues mod `m`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pontryagin: Option<Vec<u64>>,
}

pub fn run(args: Args, out: &Output) -> CmdResult {
    let mut q = ActionQuery::new(args.n, args.m, args.genus);
    q.pontryagin = args.pontryagin;
    let report = classification(&q).map_err(|e| e.to_string())?;
    out.emit(&report, || {
        let count = match &report.class_count {
            None => "none".to_string(),
            Some(ClassCount::Exact { count, parameterization }) => format!("{count} ({parameterization})"),
            Some(ClassCount::OutOfRange { reason }) => format!("OUT_OF_RANGE: {reason}"),
        };
        let mut lines = vec![
            format!("exists: {} ({})", report.exists, report.reason),
            format!("classes: {count}, {:?}", report.conjugation_kind),
        ];
        lines.extend(report.quotient_descriptors.iter().map(|d| format!("  {d}")));
        if let Some(m) = &report.realizable_module {
            lines.push(format!("module: {m}"));
        }
        lines.join("\n")
    });
    Ok(report.exit_code() as u8)
}
