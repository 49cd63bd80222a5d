use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use m06_core::divisor::{
    intersect_cj, intersect_f_curve, is_F_nonnegative, mori_model, to_K_psi, FCurveClass,
    SpecialCurveCj, SymmetricDivisor, Wall,
};
use m06_core::Rational;
use serde::Serialize;

use crate::expr::{self, Value};
use crate::output::{combination, yes_no, CliError, CliResult, Output};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DivisorAction {
    /// Expand an expression in the boundary basis.
    Eval,
    /// Intersection numbers with F-curves and the curves C_j.
    Intersect,
    /// Birational model of the divisor (n = 6).
    Chamber,
    /// Stable base locus of the divisor (n = 6).
    Baselocus,
}

#[derive(Debug, Args)]
pub struct DivisorArgs {
    pub action: DivisorAction,
    /// Expression in B2.., B, K, psi and DA, e.g. "K + 1/3*psi".
    #[arg(long, allow_hyphen_values = true)]
    pub expr: String,
    /// Number of marked points.
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    /// A single curve: `F:a,b,c,d` or `C:j`.
    #[arg(long)]
    pub curve: Option<String>,
}

#[derive(Clone, Debug)]
enum Curve {
    F(FCurveClass),
    C(SpecialCurveCj),
}

impl Curve {
    fn name(&self) -> String {
        match self {
            Curve::F(f) => f.to_string(),
            Curve::C(c) => c.to_string(),
        }
    }

    fn intersect(&self, d: &SymmetricDivisor) -> m06_core::Result<Rational> {
        match self {
            Curve::F(f) => intersect_f_curve(d, f),
            Curve::C(c) => intersect_cj(d, c),
        }
    }
}

fn parse_curve(spec: &str, n: usize) -> CliResult<Curve> {
    let bad = || CliError::Usage(format!("curve `{spec}` is not of the form F:a,b,c,d or C:j"));
    let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
    match kind.trim() {
        "F" | "f" => {
            let parts = rest
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            let parts: [usize; 4] = parts.try_into().map_err(|_| bad())?;
            let f = FCurveClass::new(parts)?;
            if f.n() != n {
                return Err(m06_core::Error::InvalidPartition(f.parts().to_vec(), n).into());
            }
            Ok(Curve::F(f))
        }
        "C" | "c" => {
            let j = rest.trim().parse::<usize>().map_err(|_| bad())?;
            Ok(Curve::C(SpecialCurveCj::new(n, j)?))
        }
        _ => Err(bad()),
    }
}

fn basis(n: usize) -> Vec<String> {
    (2..=n / 2).map(|i| format!("B{i}")).collect()
}

pub fn wall_name(w: Wall) -> &'static str {
    match w {
        Wall::Apex => "0",
        Wall::B2 => "B2",
        Wall::MinusK => "-K",
        Wall::KPlusThirdPsi => "K + 1/3*psi",
        Wall::B3 => "B3",
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EvalJson<'a> {
    expr: &'a str,
    n: usize,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<&'a [Rational]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_psi: Option<KPsi>,
    #[serde(skip_serializing_if = "Option::is_none")]
    effective: Option<bool>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KPsi {
    k: Rational,
    psi: Rational,
}

#[derive(Serialize)]
struct IntersectionJson {
    curve: String,
    intersection: Rational,
}

pub fn run(args: &DivisorArgs) -> CliResult {
    let value = expr::parse(&args.expr, args.n)?;
    let d = match (&value, args.action) {
        (Value::Scalar(q), DivisorAction::Eval) => {
            let json = EvalJson {
                expr: &args.expr,
                n: args.n,
                value: q.to_string(),
                basis: None,
                coefficients: None,
                k_psi: None,
                effective: None,
            };
            return Ok(Output::new(format!("value: {q}"), json));
        }
        (Value::Scalar(q), _) => {
            return Err(CliError::Usage(format!("expression is the number {q}, not a divisor class")))
        }
        (Value::Divisor(d), _) => d,
    };
    match args.action {
        DivisorAction::Eval => eval(args, d),
        DivisorAction::Intersect => intersect(args, d),
        DivisorAction::Chamber | DivisorAction::Baselocus => chamber(args, d),
    }
}

fn eval(args: &DivisorArgs, d: &SymmetricDivisor) -> CliResult {
    let names = basis(args.n);
    let k_psi = to_K_psi(d)?.map(|(k, psi)| KPsi { k, psi });
    let mut text = String::new();
    let _ = writeln!(text, "divisor: {d}");
    let terms: Vec<String> =
        names.iter().zip(d.coeffs()).map(|(b, c)| format!("{b} = {c}")).collect();
    let _ = writeln!(text, "coefficients: {}", terms.join(", "));
    if let Some(kp) = &k_psi {
        let _ = writeln!(text, "in K, psi: {}", combination(&[(&kp.k, "K"), (&kp.psi, "psi")]));
    }
    let _ = write!(text, "effective: {}", yes_no(d.is_effective()));
    let json = EvalJson {
        expr: &args.expr,
        n: args.n,
        value: d.to_string(),
        basis: Some(names),
        coefficients: Some(d.coeffs()),
        k_psi,
        effective: Some(d.is_effective()),
    };
    Ok(Output::new(text, json))
}

fn intersect(args: &DivisorArgs, d: &SymmetricDivisor) -> CliResult {
    let curves = match &args.curve {
        Some(spec) => vec![parse_curve(spec, args.n)?],
        None => FCurveClass::all(args.n)
            .into_iter()
            .map(Curve::F)
            .chain((2..=args.n - 2).map(|j| Curve::C(SpecialCurveCj::new(args.n, j).expect("valid j"))))
            .collect(),
    };
    let rows = curves
        .iter()
        .map(|c| Ok(IntersectionJson { curve: c.name(), intersection: c.intersect(d)? }))
        .collect::<CliResult<Vec<_>>>()?;
    let mut text = String::new();
    let _ = writeln!(text, "divisor: {d}");
    for r in &rows {
        let _ = writeln!(text, "{} . D = {}", r.curve, r.intersection);
    }
    if args.curve.is_some() {
        let json = serde_json::json!({
            "expr": args.expr,
            "n": args.n,
            "divisor": d.to_string(),
            "curve": rows[0].curve,
            "intersection": rows[0].intersection,
        });
        return Ok(Output::new(text.trim_end().to_string(), json));
    }
    let nonneg = is_F_nonnegative(d);
    let _ = write!(text, "nonnegative on all F-curves: {}", yes_no(nonneg.nonnegative));
    let json = serde_json::json!({
        "expr": args.expr,
        "n": args.n,
        "divisor": d.to_string(),
        "intersections": rows,
        "fNonnegative": nonneg.nonnegative,
    });
    Ok(Output::new(text, json))
}

fn chamber(args: &DivisorArgs, d: &SymmetricDivisor) -> CliResult {
    let report = mori_model(d)?;
    let mut text = String::new();
    let _ = writeln!(text, "divisor: {d}");
    if matches!(args.action, DivisorAction::Chamber) {
        let _ = writeln!(text, "model: {}", report.model);
    }
    let _ = writeln!(text, "stable base locus: {}", report.stable_base_locus);
    match report.wall {
        Some(w) => {
            let _ = write!(text, "boundary case: yes (ray of {})", wall_name(w));
        }
        None => {
            let _ = write!(text, "boundary case: no");
        }
    }
    let json = serde_json::json!({
        "expr": args.expr,
        "divisor": d.to_string(),
        "report": report,
    });
    Ok(Output::new(text, json))
}
