use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{canonicalize, Rational};
use crate::error::{Error, Result};

/// A point of `P⁵` in homogeneous coordinates `X₁..X₆`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct P5Point {
    coords: [Rational; 6],
}

impl P5Point {
    pub fn new(coords: [Rational; 6]) -> Result<Self> {
        if coords.iter().all(Rational::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(P5Point { coords })
    }

    pub fn from_i64(coords: [i64; 6]) -> Result<Self> {
        Self::new(coords.map(Rational::from))
    }

    pub fn from_vec(coords: Vec<Rational>) -> Result<Self> {
        let coords: [Rational; 6] = coords.try_into().map_err(|v: Vec<Rational>| {
            Error::DimensionMismatch(format!("P^5 point needs 6 coordinates, got {}", v.len()))
        })?;
        Self::new(coords)
    }

    pub fn coords(&self) -> &[Rational; 6] {
        &self.coords
    }

    /// Coordinate `i` of the result is coordinate `sigma[i]` of `self`.
    pub fn permuted(&self, sigma: &[usize; 6]) -> Self {
        P5Point { coords: sigma.map(|i| self.coords[i].clone()) }
    }

    /// Integer representative with content 1 and first nonzero entry positive,
    /// so that projectively equal points compare equal.
    pub fn normalized(&self) -> Self {
        let v = canonicalize(&self.coords);
        P5Point { coords: v.try_into().expect("six coordinates") }
    }

    pub fn projectively_eq(&self, other: &P5Point) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn to_f64(&self) -> [f64; 6] {
        self.coords.each_ref().map(Rational::to_f64)
    }
}

impl fmt::Display for P5Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated rationals, e.g. `1,1,-2,-2,1,1`.
impl FromStr for P5Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_vec(coords)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HypersurfaceId {
    /// `ΣX = 0, ΣX³ = 0`.
    SegreCubic,
    /// `ΣX = 0, (ΣX²)² − 4ΣX⁴ = 0`.
    IgusaQuartic,
}

impl HypersurfaceId {
    pub fn name(self) -> &'static str {
        match self {
            HypersurfaceId::SegreCubic => "Segre cubic",
            HypersurfaceId::IgusaQuartic => "Igusa quartic",
        }
    }
}

impl fmt::Display for HypersurfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypersurfaceId::SegreCubic => "SegreCubic",
            HypersurfaceId::IgusaQuartic => "IgusaQuartic",
        })
    }
}

fn power_sum(x: &[Rational; 6], k: u32) -> Rational {
    x.iter().map(|v| v.pow(k)).sum()
}

/// Values of the linear form and of the cubic or quartic form at `p`.
pub fn evaluate(h: HypersurfaceId, p: &P5Point) -> (Rational, Rational) {
    let x = &p.coords;
    let linear = power_sum(x, 1);
    let form = match h {
        HypersurfaceId::SegreCubic => power_sum(x, 3),
        HypersurfaceId::IgusaQuartic => power_sum(x, 2).pow(2) - Rational::from(4) * power_sum(x, 4),
    };
    (linear, form)
}

/// Gradient of the cubic or quartic form.
pub fn gradient(h: HypersurfaceId, p: &P5Point) -> [Rational; 6] {
    let x = &p.coords;
    match h {
        HypersurfaceId::SegreCubic => x.each_ref().map(|v| Rational::from(3) * v.pow(2)),
        HypersurfaceId::IgusaQuartic => {
            let s2 = power_sum(x, 2);
            x.each_ref()
                .map(|v| Rational::from(4) * v * &s2 - Rational::from(16) * v.pow(3))
        }
    }
}

pub fn lies_on(h: HypersurfaceId, p: &P5Point) -> bool {
    let (l, f) = evaluate(h, p);
    l.is_zero() && f.is_zero()
}

/// Whether `p` is a singular point of the surface cut out in `P⁵` by the linear
/// form and the degree form: the Jacobian of the pair has rank below 2, i.e. the
/// gradient of the degree form is a multiple of the all-ones vector.
pub fn is_singular_point(h: HypersurfaceId, p: &P5Point) -> Result<bool> {
    if !lies_on(h, p) {
        return Err(Error::NotOnHypersurface(h.name()));
    }
    let g = gradient(h, p);
    Ok(g.iter().all(|v| *v == g[0]))
}

/// Floating-point evaluation, used by the duality sampler.
pub fn evaluate_f64(h: HypersurfaceId, x: &[f64; 6]) -> (f64, f64) {
    let sum = |k: i32| x.iter().map(|v| v.powi(k)).sum::<f64>();
    let form = match h {
        HypersurfaceId::SegreCubic => sum(3),
        HypersurfaceId::IgusaQuartic => sum(2).powi(2) - 4.0 * sum(4),
    };
    (sum(1), form)
}
