use clap::Args;
use m06_core::m2::{hassett_keel_alpha, hassett_keel_divisor, m2_chamber, M2Divisor};
use m06_core::Rational;
use serde_json::json;

use crate::output::{yes_no, CliError, CliResult, Output};

fn rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct M2Args {
    /// Coefficient of lambda.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    /// Coefficient of delta_0 on the stack.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub delta0: Option<Rational>,
    /// Coefficient of delta_1 on the stack.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub delta1: Option<Rational>,
    /// Coefficient of Delta_0 on the coarse space.
    #[arg(long = "Delta0", value_parser = rational, allow_hyphen_values = true)]
    pub coarse_delta0: Option<Rational>,
    /// Coefficient of Delta_1 on the coarse space.
    #[arg(long = "Delta1", value_parser = rational, allow_hyphen_values = true)]
    pub coarse_delta1: Option<Rational>,
    /// Use K + alpha*delta on the stack.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, conflicts_with_all = ["lambda", "delta0", "delta1", "coarse_delta0", "coarse_delta1"])]
    pub alpha: Option<Rational>,
}

fn divisor(args: &M2Args) -> CliResult<M2Divisor> {
    if let Some(alpha) = &args.alpha {
        return Ok(hassett_keel_divisor(alpha));
    }
    let stack = args.delta0.is_some() || args.delta1.is_some();
    let coarse = args.coarse_delta0.is_some() || args.coarse_delta1.is_some();
    if stack && coarse {
        return Err(CliError::Usage(
            "use either --delta0/--delta1 (stack) or --Delta0/--Delta1 (coarse space), not both".into(),
        ));
    }
    if !stack && !coarse && args.lambda.is_none() {
        return Err(CliError::Usage(
            "give a divisor with --lambda/--delta0/--delta1/--Delta0/--Delta1, or --alpha".into(),
        ));
    }
    let z = |v: &Option<Rational>| v.clone().unwrap_or_default();
    Ok(if coarse {
        M2Divisor::coarse(z(&args.lambda), z(&args.coarse_delta0), z(&args.coarse_delta1))
    } else {
        M2Divisor::stack(z(&args.lambda), z(&args.delta0), z(&args.delta1))
    })
}

pub fn run(args: &M2Args) -> CliResult {
    let d = divisor(args)?;
    let report = m2_chamber(&d)?;
    let stack = d.to_stack();
    let alpha = hassett_keel_alpha(&d);
    let mut text = String::new();
    if let Some(a) = &args.alpha {
        text.push_str(&format!("input: K + {a}*delta\n"));
    } else {
        text.push_str(&format!("input: {d}\n"));
    }
    text.push_str(&format!("stack boundary form: {stack}\n"));
    text.push_str(&format!("coarse boundary form: {}\n", d.to_coarse()));
    text.push_str(&format!("pullback to M06: {}\n", report.pullback));
    text.push_str(&format!("model: {}\n", report.model));
    text.push_str(&format!("boundary case: {}\n", yes_no(report.boundary_case)));
    match &alpha {
        Some(a) => text.push_str(&format!("alpha: {a}")),
        None if d.is_effective() => text.push_str(
            "alpha: none (the ray lies in [delta0, delta0 + delta1], which no K + alpha*delta reaches)",
        ),
        None => text.push_str("alpha: none (not effective)"),
    }
    let json = json!({
        "input": d,
        "stack": stack,
        "coarse": d.to_coarse(),
        "pullback": report.pullback.to_string(),
        "model": report.model,
        "boundaryCase": report.boundary_case,
        "alpha": alpha,
    });
    Ok(Output::new(text, json))
}
