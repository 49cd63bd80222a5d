use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use m06_core::git::{
    classify, lies_on_conic, ops_limit, orbit_dimension, parse_config, polystable_degeneration,
    stabilizer_dimension, stability_status, stratum_signature, OneParameterSubgroup,
    PointConfiguration, StabilityVerdict, Table1Label, WeightVector, Witness, WitnessKind,
};
use serde_json::json;

use crate::output::{yes_no, CliError, CliResult, Output};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GitAction {
    /// Stability of the configuration for the given weights.
    Stability,
    /// Which strictly semistable stratum of six points in P^2 it lies in.
    Stratum,
    /// Limit along a diagonal one-parameter subgroup (needs --ops).
    Limit,
    /// Degenerate to the closed orbit in its fibre.
    Degenerate,
    /// Whether the points lie on a conic.
    Conic,
    /// Dimension of the stabilizer in SL(d+1).
    Stabilizer,
}

#[derive(Debug, Args)]
pub struct GitArgs {
    pub action: GitAction,
    /// Configuration file: one point per line, homogeneous coordinates.
    #[arg(long)]
    pub config: PathBuf,
    /// Comma-separated weights (default: symmetric).
    #[arg(long)]
    pub weights: Option<String>,
    /// Expected ambient dimension d of P^d.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Integer weights of the one-parameter subgroup, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub ops: Option<String>,
}

fn load(args: &GitArgs) -> CliResult<(PointConfiguration, WeightVector)> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.config.display())))?;
    let c = parse_config(&text, args.dim).map_err(|e| match e {
        m06_core::Error::Parse { .. } => {
            CliError::Usage(format!("{}: {e}", args.config.display()))
        }
        other => other.into(),
    })?;
    let w = match &args.weights {
        Some(csv) => WeightVector::parse(csv, c.d())?,
        None => WeightVector::symmetric(c.n(), c.d())?,
    };
    if w.n() != c.n() {
        return Err(CliError::Usage(format!("{} weights for {} points", w.n(), c.n())));
    }
    Ok((c, w))
}

fn subspace_name(dim: usize) -> String {
    match dim {
        0 => "point".into(),
        1 => "line".into(),
        2 => "plane".into(),
        k => format!("{k}-plane"),
    }
}

fn witness_line(w: &Witness) -> String {
    let pts: Vec<String> = w.points.iter().map(ToString::to_string).collect();
    let rel = match w.kind {
        WitnessKind::Tight => "=",
        WitnessKind::Violated => ">",
    };
    format!(
        "{} through points {{{}}}: weight {} {} {}",
        subspace_name(w.dim),
        pts.join(","),
        w.weight,
        rel,
        w.dim + 1
    )
}

fn verdict_text(v: &StabilityVerdict, text: &mut String) {
    let _ = writeln!(text, "status: {:?}", v.status);
    for w in &v.witnesses {
        let _ = writeln!(text, "  {}", witness_line(w));
    }
}

pub fn run(args: &GitArgs) -> CliResult {
    let (c, w) = load(args)?;
    match args.action {
        GitAction::Stability => {
            let v = stability_status(&c, &w)?;
            let mut text = String::new();
            verdict_text(&v, &mut text);
            Ok(Output::new(text.trim_end().to_string(), json!({ "weights": w.weights(), "verdict": v })))
        }
        GitAction::Stratum => stratum(&c, &w),
        GitAction::Limit => {
            let spec = args
                .ops
                .as_deref()
                .ok_or_else(|| CliError::Usage("`git limit` needs --ops w0,w1,...".into()))?;
            let weights = spec
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage(format!("--ops `{spec}` is not a list of integers")))?;
            let lambda = OneParameterSubgroup::new(weights)?;
            let lim = ops_limit(&c, &lambda)?;
            let v = stability_status(&lim, &w)?;
            let mut text = format!("limit:\n{}", lim.to_file_format());
            verdict_text(&v, &mut text);
            let json = json!({ "ops": lambda.weights(), "limit": lim, "verdict": v });
            Ok(Output::new(text.trim_end().to_string(), json))
        }
        GitAction::Degenerate => {
            let deg = polystable_degeneration(&c)?;
            let mut text = format!("start: {}\n", deg.start);
            for step in &deg.steps {
                let _ = writeln!(
                    text,
                    "  along {} -> {} (stabilizer dimension {})",
                    witness_line(&step.witness),
                    step.label,
                    step.stabilizer_dimension
                );
            }
            let _ = write!(text, "closed orbit: {}\n{}", deg.label, deg.configuration.to_file_format());
            Ok(Output::new(text.trim_end().to_string(), &deg))
        }
        GitAction::Conic => {
            let on = lies_on_conic(&c)?;
            Ok(Output::new(format!("lies on a conic: {}", yes_no(on)), json!({ "liesOnConic": on })))
        }
        GitAction::Stabilizer => {
            let s = stabilizer_dimension(&c);
            let o = orbit_dimension(&c);
            let text = format!("stabilizer dimension: {s}\norbit dimension: {o}");
            Ok(Output::new(text, json!({ "stabilizerDimension": s, "orbitDimension": o })))
        }
    }
}

fn stratum(c: &PointConfiguration, w: &WeightVector) -> CliResult {
    if !w.is_symmetric() {
        return Err(CliError::Usage("strata are defined for symmetric weights".into()));
    }
    let v = stability_status(c, w)?;
    let label = classify(c)?;
    let sig = stratum_signature(c)?;
    let stab = stabilizer_dimension(c);
    let mut text = String::new();
    verdict_text(&v, &mut text);
    let _ = writeln!(text, "stratum: {label}");
    let classes: Vec<String> = sig
        .coincidence_partition
        .iter()
        .map(|cl| format!("{{{}}}", cl.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(text, "coincidences: {}", classes.join(" "));
    for l in &sig.lines {
        let on: Vec<String> = l.classes.iter().map(|&i| classes[i].clone()).collect();
        let _ = writeln!(text, "  line through {} ({} points)", on.join(" "), l.point_count);
    }
    let _ = writeln!(text, "stabilizer dimension: {stab}");
    let mut json = json!({
        "verdict": v,
        "stratum": label,
        "signature": sig,
        "stabilizerDimension": stab,
        "orbitDimension": orbit_dimension(c),
    });
    if let Table1Label::Stratum(s) = label {
        let _ = writeln!(text, "tabulated stratum dimension: {}", s.tabulated_dimension());
        let _ = write!(text, "orbit closure contains: {}", s.closed_orbit());
        json["tabulatedDimension"] = json!(s.tabulated_dimension());
        json["closedOrbit"] = json!(s.closed_orbit().roman());
    }
    Ok(Output::new(text.trim_end().to_string(), json))
}
