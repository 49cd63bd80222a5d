use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use m06_core::hypersurface::{
    duality_sample_check, evaluate, gradient, is_singular_point, lies_on, line_incidence,
    search_segre_singularities, segre_nodes, HypersurfaceId, P5Point,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::output::{yes_no, CliError, CliResult, Output};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HypersurfaceAction {
    /// Values of the defining forms at --point.
    Eval,
    /// Whether --point is a singular point.
    Singular,
    /// The fifteen singular lines of the quartic and how they meet.
    Lines,
    /// The ten nodes of the cubic; with --samples, also search for others.
    Nodes,
    /// Check that the Gauss map of the cubic lands on the quartic.
    Duality,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Surface {
    Segre,
    Igusa,
}

impl From<Surface> for HypersurfaceId {
    fn from(s: Surface) -> Self {
        match s {
            Surface::Segre => HypersurfaceId::SegreCubic,
            Surface::Igusa => HypersurfaceId::IgusaQuartic,
        }
    }
}

#[derive(Debug, Args)]
pub struct HypersurfaceArgs {
    pub action: HypersurfaceAction,
    #[arg(long, value_enum)]
    pub surface: Option<Surface>,
    /// Six comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Number of random samples (duality default 100; nodes default 0).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Tolerance for floating-point residuals.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

fn surface_and_point(args: &HypersurfaceArgs) -> CliResult<(HypersurfaceId, P5Point)> {
    let s = args
        .surface
        .ok_or_else(|| CliError::Usage("--surface segre|igusa is required".into()))?;
    let spec = args
        .point
        .as_deref()
        .ok_or_else(|| CliError::Usage("--point x1,...,x6 is required".into()))?;
    let p = spec
        .parse::<P5Point>()
        .map_err(|e| CliError::Usage(format!("--point: {e}")))?;
    Ok((s.into(), p))
}

pub fn run(args: &HypersurfaceArgs, seed: u64) -> CliResult {
    match args.action {
        HypersurfaceAction::Eval => {
            let (h, p) = surface_and_point(args)?;
            let (linear, form) = evaluate(h, &p);
            let on = lies_on(h, &p);
            let text = format!(
                "{h} at {p}\nlinear form: {linear}\ndegree form: {form}\non the hypersurface: {}",
                yes_no(on)
            );
            let json = json!({
                "surface": h,
                "point": p,
                "linear": linear,
                "form": form,
                "onHypersurface": on,
            });
            Ok(Output::new(text, json))
        }
        HypersurfaceAction::Singular => {
            let (h, p) = surface_and_point(args)?;
            let singular = is_singular_point(h, &p)?;
            let g = gradient(h, &p);
            let gs: Vec<String> = g.iter().map(ToString::to_string).collect();
            let text = format!(
                "{h} at {p}\ngradient of degree form: ({})\nsingular: {}",
                gs.join(", "),
                yes_no(singular)
            );
            let json = json!({ "surface": h, "point": p, "gradient": g, "singular": singular });
            Ok(Output::new(text, json))
        }
        HypersurfaceAction::Lines => {
            let inc = line_incidence();
            let mut text = format!("{} lines:\n", inc.lines.len());
            for (i, l) in inc.lines.iter().enumerate() {
                let _ = writeln!(text, "  L{:<2} {l}", i + 1);
            }
            let _ = writeln!(text, "{} intersection points:", inc.points.len());
            for ip in &inc.points {
                let names: Vec<String> = ip.lines.iter().map(|l| format!("L{}", l + 1)).collect();
                let _ = writeln!(text, "  {} on {}", ip.point, names.join(", "));
            }
            let per_line = uniform(&inc.points_per_line);
            let per_point = uniform(&inc.lines_per_point());
            let _ = write!(
                text,
                "each line meets the others at {} points; each intersection point lies on {} lines",
                per_line.map_or("varying".into(), |k| k.to_string()),
                per_point.map_or("varying".into(), |k| k.to_string()),
            );
            let json = json!({
                "lines": inc.lines,
                "points": inc.points,
                "pointsPerLine": inc.points_per_line,
                "linesPerPoint": inc.lines_per_point(),
            });
            Ok(Output::new(text, json))
        }
        HypersurfaceAction::Nodes => {
            let nodes = segre_nodes();
            let mut all_singular = true;
            let mut text = format!("{} nodes of the Segre cubic:\n", nodes.len());
            for p in &nodes {
                let s = is_singular_point(HypersurfaceId::SegreCubic, p)?;
                all_singular &= s;
                let _ = writeln!(text, "  {p}{}", if s { "" } else { "  NOT SINGULAR" });
            }
            let mut json = json!({ "nodes": nodes, "allSingular": all_singular });
            let mut ok = all_singular;
            if let Some(samples) = args.samples.filter(|&s| s > 0) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let search = search_segre_singularities(&mut rng, samples)?;
                let _ = writeln!(
                    text,
                    "random search (seed {seed}): {} points, {} landed on nodes, {} other singular points",
                    search.samples,
                    search.nodes_hit,
                    search.other_singular.len()
                );
                for p in &search.other_singular {
                    let _ = writeln!(text, "  {p}");
                }
                ok &= search.pass();
                json["seed"] = json!(seed);
                json["search"] = json!(search);
            }
            let out = Output::new(text.trim_end().to_string(), json);
            Ok(if ok { out } else { out.failed() })
        }
        HypersurfaceAction::Duality => {
            let samples = args.samples.unwrap_or(100);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = duality_sample_check(&mut rng, samples, args.tol)?;
            let text = format!(
                "seed: {seed}\nsamples: {} ({} solved exactly, {} skipped)\nmax residual: {:e} (tolerance {:e})\n\
                 pair-pattern samples: {} (exact residual {})\npass: {}",
                r.samples,
                r.exact_samples,
                r.skipped,
                r.max_residual,
                r.tolerance,
                r.pair_pattern_samples,
                r.exact_residual,
                yes_no(r.pass)
            );
            let mut json = json!(r);
            json["seed"] = json!(seed);
            let out = Output::new(text, json);
            Ok(if r.pass { out } else { out.failed() })
        }
    }
}

fn uniform(v: &[usize]) -> Option<usize> {
    match v.split_first() {
        Some((first, rest)) if rest.iter().all(|x| x == first) => Some(*first),
        _ => None,
    }
}
