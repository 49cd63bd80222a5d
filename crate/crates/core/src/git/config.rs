use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{canonicalize, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// An ordered configuration of `n` points in `Pᵈ`.
///
/// Coordinates are stored canonically scaled: integer entries, content 1,
/// first nonzero entry positive. Two points are equal as projective points
/// exactly when their stored vectors are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PointConfiguration {
    d: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(d: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::DimensionMismatch("ambient dimension must be positive".into()));
        }
        let mut canonical = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != d + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "point {} has {} coordinates, expected {}",
                    i + 1,
                    p.len(),
                    d + 1
                )));
            }
            if p.iter().all(Rational::is_zero) {
                return Err(Error::ZeroVector);
            }
            canonical.push(canonicalize(p));
        }
        Ok(PointConfiguration { d, points: canonical })
    }

    pub fn from_i64(d: usize, points: &[&[i64]]) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| p.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Self::new(d, points)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    /// Applies the projective transformation `g` (a `(d+1) x (d+1)` invertible
    /// matrix acting on column vectors).
    pub fn transform(&self, g: &RationalMatrix) -> Result<Self> {
        if g.rows() != self.d + 1 || g.cols() != self.d + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} transformation on P^{}",
                g.rows(),
                g.cols(),
                self.d
            )));
        }
        let points = self
            .points
            .iter()
            .map(|p| g.mul_vec(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.d, points)
    }

    /// Reorders the points: entry `k` of the result is point `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PointConfiguration {
            d: self.d,
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Renders the configuration in the text file format read by
    /// [`parse_config`].
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let row: Vec<String> = p.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// Parses a configuration file: one point per line as `d+1` whitespace
/// separated rationals (`p/q` or integers), `#` starts a comment, blank lines
/// are ignored. When `dim` is given it must match the coordinate count.
pub fn parse_config(text: &str, dim: Option<usize>) -> Result<PointConfiguration> {
    let mut points: Vec<Vec<Rational>> = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let coords = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{tok}` is not a rational number"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        match width {
            None => width = Some((coords.len(), line)),
            Some((w, first)) if w != coords.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!(
                        "{} coordinates, but line {first} has {w}",
                        coords.len()
                    ),
                })
            }
            Some(_) => {}
        }
        if coords.iter().all(Rational::is_zero) {
            return Err(Error::Parse {
                line,
                message: "zero vector is not a projective point".into(),
            });
        }
        points.push(coords);
    }
    let Some((w, _)) = width else {
        return Err(Error::Parse { line: 0, message: "no points in configuration".into() });
    };
    if w < 2 {
        return Err(Error::Parse {
            line: 1,
            message: "a point needs at least two homogeneous coordinates".into(),
        });
    }
    let d = w - 1;
    if let Some(expected) = dim {
        if expected != d {
            return Err(Error::DimensionMismatch(format!(
                "configuration lives in P^{d}, expected P^{expected}"
            )));
        }
    }
    PointConfiguration::new(d, points)
}

/// A linearization `A = (a_1, ..., a_n)` normalized into the hypersimplex
/// `Δ(d+1, n)`: `0 < a_i ≤ 1` and `Σ a_i = d + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector {
    d: usize,
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(d: usize, weights: Vec<Rational>) -> Result<Self> {
        if let Some((i, a)) = weights
            .iter()
            .enumerate()
            .find(|(_, a)| !a.is_positive() || **a > Rational::one())
        {
            return Err(Error::WeightsOutsideHypersimplex(format!(
                "a_{} = {a} is not in (0, 1]",
                i + 1
            )));
        }
        let total: Rational = weights.iter().sum();
        if total != Rational::from(d as i64 + 1) {
            return Err(Error::WeightsOutsideHypersimplex(format!(
                "weights sum to {total}, expected {}",
                d + 1
            )));
        }
        Ok(WeightVector { d, weights })
    }

    /// The symmetric linearization `a_i = (d+1)/n`.
    pub fn symmetric(n: usize, d: usize) -> Result<Self> {
        let a = Rational::frac(d as i64 + 1, n as i64);
        Self::new(d, vec![a; n])
    }

    /// Parses comma-separated rationals.
    pub fn parse(csv: &str, d: usize) -> Result<Self> {
        let weights = csv
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, weights)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_symmetric(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        WeightVector {
            d: self.d,
            weights: perm.iter().map(|&i| self.weights[i].clone()).collect(),
        }
    }
}
