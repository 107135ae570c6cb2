use clap::ValueEnum;
use serde::Deserialize;
use serde_json::json;

use super::{check_modulus, read_stdin_json, CmdResult, Output};
use zm_forms::forms::{ring_det, verify_lagrangian_complement, QuadraticModule, RingMatrix, RingVector, Sign};
use zm_forms::ring::{is_unit, FormParameterKind};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Op {
    /// `[x, y]` ↦ `λ(x, y)`.
    Eval,
    /// `x` ↦ `μ(x)` as a parameter class.
    Mu,
    /// `x` ↦ whether its coordinates generate `Λ`.
    Primitive,
    /// Matrix ↦ whether `M·G·M† = G`.
    Isometry,
    /// Matrix ↦ determinant and its inverse if it is a unit.
    Det,
    /// `{"s": [...], "u": [...]}` ↦ complement certificate.
    Verify,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(value_enum)]
    op: Op,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    rank: usize,
    /// `+1` or `-1`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
    sign: Sign,
    /// TILDE, PLUS or MINUS.
    #[arg(long)]
    param: FormParameterKind,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" | "+" | "plus" => Ok(Sign::Plus),
        "-1" | "-" | "minus" => Ok(Sign::Minus),
        other => Err(format!("sign must be +1 or -1, got {other:?}")),
    }
}

#[derive(Deserialize)]
struct Pair {
    s: Vec<RingVector>,
    u: Vec<RingVector>,
}

fn vector(q: &QuadraticModule, v: RingVector) -> Result<RingVector, String> {
    check_modulus(q.m, v.modulus())?;
    Ok(v)
}

pub fn run(args: Args, out: &Output) -> CmdResult {
    let q = QuadraticModule::new(args.m, args.rank, args.sign, args.param).map_err(|e| e.to_string())?;
    match args.op {
        Op::Eval => {
            let [x, y]: [RingVector; 2] = read_stdin_json()?;
            let l = q.lambda(&vector(&q, x)?, &vector(&q, y)?).map_err(|e| e.to_string())?;
            out.emit(&l, || format!("λ = {l}"));
        }
        Op::Mu => {
            let x = vector(&q, read_stdin_json()?)?;
            let c = q.mu(&x).map_err(|e| e.to_string())?;
            out.emit(&c, || format!("μ = [{}] in Λ/{}", c.representative(), c.kind));
        }
        Op::Primitive => {
            let x = vector(&q, read_stdin_json()?)?;
            let p = q.is_primitive(&x).map_err(|e| e.to_string())?;
            out.emit(&json!({ "primitive": p }), || format!("primitive: {p}"));
        }
        Op::Isometry => {
            let mat: RingMatrix = read_stdin_json()?;
            check_modulus(q.m, mat.modulus())?;
            let ok = q.isometry_check(&mat).map_err(|e| e.to_string())?;
            out.emit(&json!({ "isometry": ok }), || format!("isometry: {ok}"));
        }
        Op::Det => {
            let mat: RingMatrix = read_stdin_json()?;
            check_modulus(q.m, mat.modulus())?;
            let d = ring_det(&mat);
            let inv = is_unit(&d);
            out.emit(&json!({ "det": d, "unit": inv.is_some(), "inverse": inv }), || {
                format!("det = {d}{}", if inv.is_some() { " (unit)" } else { "" })
            });
        }
        Op::Verify => {
            let pair: Pair = read_stdin_json()?;
            match verify_lagrangian_complement(&q, &pair.s, &pair.u) {
                Ok(cert) => out.emit(&json!({ "ok": true, "certificate": cert }), || "U is a Lagrangian complement of S".into()),
                Err(e) => {
                    out.emit(&json!({ "ok": false, "reason": e.to_string() }), || format!("not a complement: {e}"));
                    return Ok(1);
                }
            }
        }
    }
    Ok(0)
}
