use std::collections::BTreeMap;

use serde::Serialize;

use super::config::{PointConfiguration, WeightVector};
use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WitnessKind {
    /// Weight equals `dim W + 1`.
    Tight,
    /// Weight exceeds `dim W + 1`.
    Violated,
}

/// A proper linear subspace `W` where the weight inequality is tight or fails.
/// `points` lists every marked point (1-based) lying in `W`, and `W` is their
/// span.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub dim: usize,
    pub points: Vec<usize>,
    pub weight: Rational,
    pub kind: WitnessKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    /// Sorted by `(dim, points)`.
    pub witnesses: Vec<Witness>,
}

impl StabilityVerdict {
    pub fn tight(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.kind == WitnessKind::Tight)
    }
}

/// GIT (semi)stability of `c` with respect to `A`: `c` is semistable (stable)
/// iff every proper linear subspace `W` carries weight `≤ (<) dim W + 1`.
///
/// Only spans of subsets of the points are examined; any other subspace can be
/// shrunk to the span of the points it contains without lowering its weight or
/// raising its dimension.
pub fn stability_status(c: &PointConfiguration, a: &WeightVector) -> Result<StabilityVerdict> {
    if c.n() != a.n() || c.d() != a.d() {
        return Err(Error::DimensionMismatch(format!(
            "{} points in P^{} with {} weights for P^{}",
            c.n(),
            c.d(),
            a.n(),
            a.d()
        )));
    }
    let n = c.n();
    if n >= usize::BITS as usize {
        return Err(Error::DimensionMismatch(format!("{n} points is too many to enumerate")));
    }
    let ranks: Vec<usize> = (0u64..(1u64 << n))
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            rank_of(c, &members)
        })
        .collect::<Result<_>>()?;
    // contained-point mask -> dim of its span
    let mut subspaces: BTreeMap<u64, usize> = BTreeMap::new();
    for mask in 1u64..(1u64 << n) {
        let rank = ranks[mask as usize];
        if rank > c.d() {
            continue;
        }
        let closure = (0..n)
            .filter(|j| ranks[(mask | 1 << j) as usize] == rank)
            .fold(mask, |acc, j| acc | 1 << j);
        subspaces.entry(closure).or_insert(rank - 1);
    }

    let mut witnesses = Vec::new();
    for (mask, dim) in subspaces {
        let points: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let weight: Rational = points.iter().map(|&i| &a.weights()[i]).sum();
        let bound = Rational::from(dim as i64 + 1);
        let kind = match weight.cmp(&bound) {
            std::cmp::Ordering::Less => continue,
            std::cmp::Ordering::Equal => WitnessKind::Tight,
            std::cmp::Ordering::Greater => WitnessKind::Violated,
        };
        witnesses.push(Witness {
            dim,
            points: points.iter().map(|i| i + 1).collect(),
            weight,
            kind,
        });
    }
    witnesses.sort_by(|x, y| (x.dim, &x.points).cmp(&(y.dim, &y.points)));

    let status = if witnesses.iter().any(|w| w.kind == WitnessKind::Violated) {
        StabilityStatus::Unstable
    } else if witnesses.is_empty() {
        StabilityStatus::Stable
    } else {
        StabilityStatus::StrictlySemistable
    };
    Ok(StabilityVerdict { status, witnesses })
}

fn rank_of(c: &PointConfiguration, members: &[usize]) -> Result<usize> {
    if members.is_empty() {
        return Ok(0);
    }
    let rows: Vec<Vec<Rational>> = members.iter().map(|&i| c.point(i).to_vec()).collect();
    Ok(RationalMatrix::from_rows(&rows)?.rank())
}

/// For six points in `P²` with symmetric weights: strictly semistable, and every
/// tight subspace is either a point carrying exactly two marked points or a
/// line carrying exactly four.
pub fn is_strictly_semistable_pattern(c: &PointConfiguration) -> Result<bool> {
    if c.d() != 2 || c.n() != 6 {
        return Ok(false);
    }
    let verdict = stability_status(c, &WeightVector::symmetric(6, 2)?)?;
    Ok(verdict.status == StabilityStatus::StrictlySemistable
        && verdict
            .tight()
            .all(|w| matches!((w.dim, w.points.len()), (0, 2) | (1, 4))))
}
