use clap::ValueEnum;
use serde::Deserialize;
use serde_json::json;

use super::{check_modulus, read_stdin_json, CmdResult, Output};
use zm_forms::ring::{exact_divide, ideal_normalize, GroupRingElement};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Op {
    /// Product of the elements in order.
    Mul,
    /// `g ↦ g⁻¹`.
    Conj,
    /// Sum of coefficients.
    Aug,
    /// `[x, d]` ↦ some `q` with `q·d = x`.
    Divide,
    /// Generators of an ideal `A` with `A + (s) = Λ` ↦ `u`, `v`, `l`, `a`, `b`.
    Normalize,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(value_enum)]
    op: Op,
    #[arg(long)]
    m: usize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Input {
    One(GroupRingElement),
    Many(Vec<GroupRingElement>),
}

fn expect_count(xs: &[GroupRingElement], n: usize, op: &str) -> Result<(), String> {
    if xs.len() != n {
        return Err(format!("{op} expects {n} element(s), got {}", xs.len()));
    }
    Ok(())
}

pub fn run(args: Args, out: &Output) -> CmdResult {
    let xs = match read_stdin_json::<Input>()? {
        Input::One(x) => vec![x],
        Input::Many(xs) => xs,
    };
    for x in &xs {
        check_modulus(args.m, x.modulus())?;
    }
    match args.op {
        Op::Mul => {
            let p = xs.iter().fold(GroupRingElement::one(args.m), |acc, x| &acc * x);
            out.emit(&p, || format!("{p}"));
        }
        Op::Conj => {
            expect_count(&xs, 1, "conj")?;
            let c = xs[0].involution();
            out.emit(&c, || format!("{c}"));
        }
        Op::Aug => {
            expect_count(&xs, 1, "aug")?;
            let a = xs[0].augmentation();
            out.emit(&json!({ "augmentation": a.to_string() }), || a.to_string());
        }
        Op::Divide => {
            expect_count(&xs, 2, "divide")?;
            let d = exact_divide(&xs[0], &xs[1]).map_err(|e| e.to_string())?;
            out.emit(&d, || format!("quotient {}{}", d.quotient, if d.ambiguous { " (one of several)" } else { "" }));
        }
        Op::Normalize => {
            let n = ideal_normalize(&xs).map_err(|e| e.to_string())?;
            out.emit(&n, || format!("u = {}, v = {}, l = {}, a = {}, b = {}", n.u, n.v, n.l, n.a, n.b));
        }
    }
    Ok(0)
}
