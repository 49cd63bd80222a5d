use rand::Rng;
use serde::Serialize;

use super::forms::{evaluate, evaluate_f64, lies_on, HypersurfaceId, P5Point};
use super::segre::random_pair_pattern;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Image of a point of the cubic under its Gauss map, moved into `ΣY = 0`:
/// `Y_i = X_i² − (1/6)ΣX²`. `None` at the nodes, where the image is zero.
pub fn gauss_image(x: &P5Point) -> Option<P5Point> {
    let sq: Vec<Rational> = x.coords().iter().map(|v| v.pow(2)).collect();
    let mean = sq.iter().sum::<Rational>() / Rational::from(6);
    P5Point::from_vec(sq.iter().map(|v| v - &mean).collect()).ok()
}

pub fn gauss_image_f64(x: &[f64; 6]) -> [f64; 6] {
    let mean = x.iter().map(|v| v * v).sum::<f64>() / 6.0;
    x.map(|v| v * v - mean)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DualityReport {
    /// Generic points of the cubic drawn.
    pub samples: usize,
    /// Samples whose image vanished.
    pub skipped: usize,
    /// Samples whose coordinates came out rational and were checked exactly.
    pub exact_samples: usize,
    /// Largest `|quartic(Y)|` with `Y` scaled to unit length.
    pub max_residual: f64,
    pub tolerance: f64,
    /// Points `(a,b,c,-a,-b,-c)`, shuffled, checked exactly.
    pub pair_pattern_samples: usize,
    /// Largest exact residual over all exactly checked samples.
    pub exact_residual: Rational,
    pub pass: bool,
}

enum Sample {
    Exact(P5Point),
    Float([f64; 6]),
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

/// Draws `X₁..X₄` at random and solves `ΣX = 0, ΣX³ = 0` for `X₅, X₆`: with
/// `u = X₅ + X₆` and `c = X₁³ + .. + X₄³` the product is `P = (u³ + c)/(3u)`,
/// so `X₅, X₆` are the roots of `t² − u t + P`.
fn draw<R: Rng + ?Sized>(rng: &mut R) -> Sample {
    loop {
        let head: [Rational; 4] = std::array::from_fn(|_| random_rational(rng));
        let u = -head.iter().sum::<Rational>();
        if u.is_zero() {
            continue;
        }
        let c: Rational = head.iter().map(|v| v.pow(3)).sum();
        let product = (u.pow(3) + c) / (Rational::from(3) * &u);
        let disc = u.pow(2) - Rational::from(4) * product;
        if disc.is_negative() {
            continue;
        }
        let half = Rational::frac(1, 2);
        if let Some(root) = disc.sqrt_exact() {
            let x5 = (&u + &root) * &half;
            let x6 = (&u - &root) * &half;
            let [a, b, c, d] = head;
            let p = P5Point::new([a, b, c, d, x5, x6]).expect("X5 + X6 = u is nonzero");
            return Sample::Exact(p);
        }
        let (uf, rf) = (u.to_f64(), disc.to_f64().sqrt());
        let h = head.each_ref().map(Rational::to_f64);
        return Sample::Float([h[0], h[1], h[2], h[3], (uf + rf) / 2.0, (uf - rf) / 2.0]);
    }
}

/// Checks that the Gauss image of random points of the Segre cubic lies on the
/// Igusa quartic. Rational samples and shuffled pair-pattern points are checked
/// exactly; the rest in double precision against `tolerance`.
pub fn duality_sample_check<R: Rng + ?Sized>(
    rng: &mut R,
    samples: usize,
    tolerance: f64,
) -> Result<DualityReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
    }
    let pair_pattern_samples = (samples / 5).max(20);
    let mut report = DualityReport {
        samples,
        skipped: 0,
        exact_samples: 0,
        max_residual: 0.0,
        tolerance,
        pair_pattern_samples,
        exact_residual: Rational::zero(),
        pass: false,
    };
    let exact_check = |x: &P5Point, report: &mut DualityReport| -> bool {
        debug_assert!(lies_on(HypersurfaceId::SegreCubic, x));
        let Some(y) = gauss_image(x) else { return false };
        let (_, residual) = evaluate(HypersurfaceId::IgusaQuartic, &y);
        if residual.abs() > report.exact_residual {
            report.exact_residual = residual.abs();
        }
        true
    };
    for _ in 0..samples {
        match draw(rng) {
            Sample::Exact(x) => {
                report.exact_samples += 1;
                if !exact_check(&x, &mut report) {
                    report.skipped += 1;
                }
            }
            Sample::Float(x) => {
                let y = gauss_image_f64(&x);
                let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
                let scale = x.iter().map(|v| v * v).sum::<f64>();
                if norm <= 1e-12 * scale {
                    report.skipped += 1;
                    continue;
                }
                let (_, residual) = evaluate_f64(HypersurfaceId::IgusaQuartic, &y.map(|v| v / norm));
                report.max_residual = report.max_residual.max(residual.abs());
            }
        }
    }
    for _ in 0..pair_pattern_samples {
        let x = random_pair_pattern(rng, 20);
        exact_check(&x, &mut report);
    }
    report.pass = report.max_residual <= tolerance && report.exact_residual.is_zero();
    Ok(report)
}
