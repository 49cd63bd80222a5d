//! Limits along one-parameter subgroups and degeneration to closed orbits.

use serde::Serialize;

use super::config::{PointConfiguration, WeightVector};
use super::stabilizer::stabilizer_dimension;
use super::stability::{stability_status, StabilityStatus, Witness};
use super::stratum::{classify, Stratum, Table1Label};
use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// A diagonal one-parameter subgroup `t ↦ diag(t^{w_0}, ..., t^{w_d})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OneParameterSubgroup {
    weights: Vec<i64>,
}

impl OneParameterSubgroup {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.len() < 2 || weights.windows(2).all(|w| w[0] == w[1]) {
            return Err(Error::TrivialSubgroup);
        }
        Ok(OneParameterSubgroup { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

/// `lim_{t→0} λ(t)·x_i` for every point: keep the coordinates of minimal
/// weight among the nonzero ones and zero the rest.
pub fn ops_limit(c: &PointConfiguration, lambda: &OneParameterSubgroup) -> Result<PointConfiguration> {
    if lambda.weights.len() != c.d() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for P^{}",
            lambda.weights.len(),
            c.d()
        )));
    }
    let points = c
        .points()
        .iter()
        .map(|p| {
            let min = p
                .iter()
                .zip(&lambda.weights)
                .filter(|(x, _)| !x.is_zero())
                .map(|(_, &w)| w)
                .min()
                .expect("points are nonzero");
            p.iter()
                .zip(&lambda.weights)
                .map(|(x, &w)| if w == min { x.clone() } else { Rational::zero() })
                .collect()
        })
        .collect();
    PointConfiguration::new(c.d(), points)
}

/// Limit along the 1-PS adapted to a tight subspace `W`.
///
/// Coordinates are chosen so that `W` is spanned by the first `k+1` basis
/// vectors, which get weight `d-k`; the remaining ones get `-(k+1)`. Points of
/// `W` are fixed, the others are sent into the complementary subspace: for a
/// point in `P²` this projects from it onto a line, for a line it collapses
/// everything off the line to a single point.
pub fn adapted_limit(c: &PointConfiguration, witness: &Witness) -> Result<PointConfiguration> {
    let d = c.d();
    let k = witness.dim;
    if k >= d {
        return Err(Error::DimensionMismatch(format!("subspace of dimension {k} in P^{d}")));
    }
    // basis: k+1 independent witness points, then standard vectors
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let candidates = witness
        .points
        .iter()
        .map(|&i| c.point(i - 1).to_vec())
        .chain((0..=d).map(|j| {
            (0..=d)
                .map(|l| if l == j { Rational::one() } else { Rational::zero() })
                .collect()
        }));
    for v in candidates {
        let mut trial = basis.clone();
        trial.push(v);
        if RationalMatrix::from_rows(&trial)?.rank() == trial.len() {
            basis = trial;
        }
        if basis.len() == d + 1 {
            break;
        }
    }
    let change = RationalMatrix::from_rows(&basis)?.transpose();
    let to_standard = change.inverse()?.expect("basis is invertible");
    let high = (d - k) as i64;
    let low = -(k as i64 + 1);
    let weights = (0..=d).map(|j| if j <= k { high } else { low }).collect();
    let lambda = OneParameterSubgroup::new(weights)?;
    ops_limit(&c.transform(&to_standard)?, &lambda)?.transform(&change)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegenerationStep {
    pub witness: Witness,
    pub label: Table1Label,
    pub stabilizer_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Degeneration {
    pub start: Table1Label,
    pub configuration: PointConfiguration,
    pub label: Table1Label,
    pub steps: Vec<DegenerationStep>,
}

/// Degenerates a strictly semistable configuration of six points in `P²`
/// (symmetric weights) to a configuration with closed orbit.
///
/// Tight subspaces are tried points first, then lines, each by lowest point
/// index. A limit is accepted when it is still semistable and its stabilizer
/// is strictly larger, i.e. it left the orbit. Iteration stops at strata I and
/// VII or when no tight subspace makes progress.
pub fn polystable_degeneration(c: &PointConfiguration) -> Result<Degeneration> {
    if c.d() != 2 || c.n() != 6 {
        return Err(Error::DimensionMismatch(format!(
            "expected 6 points in P^2, got {} points in P^{}",
            c.n(),
            c.d()
        )));
    }
    let weights = WeightVector::symmetric(6, 2)?;
    if stability_status(c, &weights)?.status != StabilityStatus::StrictlySemistable {
        return Err(Error::NotStrictlySemistable);
    }
    let start = classify(c)?;
    let mut current = c.clone();
    let mut label = start;
    let mut steps = Vec::new();
    loop {
        if matches!(label, Table1Label::Stratum(s) if s.is_closed()) {
            break;
        }
        let stab = stabilizer_dimension(&current);
        let verdict = stability_status(&current, &weights)?;
        let mut next = None;
        for w in verdict.tight() {
            let lim = adapted_limit(&current, w)?;
            if stability_status(&lim, &weights)?.status == StabilityStatus::Unstable {
                continue;
            }
            let lim_stab = stabilizer_dimension(&lim);
            if lim_stab > stab {
                next = Some((w.clone(), lim, lim_stab));
                break;
            }
        }
        let Some((witness, lim, lim_stab)) = next else {
            break;
        };
        current = lim;
        label = classify(&current)?;
        steps.push(DegenerationStep { witness, label, stabilizer_dimension: lim_stab });
    }
    Ok(Degeneration { start, configuration: current, label, steps })
}

/// Convenience: the closed-orbit stratum the degeneration lands in, if any.
pub fn degeneration_target(c: &PointConfiguration) -> Result<Option<Stratum>> {
    Ok(match polystable_degeneration(c)?.label {
        Table1Label::Stratum(s) if s.is_closed() => Some(s),
        _ => None,
    })
}
