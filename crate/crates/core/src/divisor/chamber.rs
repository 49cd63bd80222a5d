//! Stable base loci and birational models for symmetric divisors on M̄₀,₆.
//!
//! Write `D = x B_2 + y B_3`. The effective cone is the quadrant `x, y ≥ 0`
//! and the two interior walls are the rays of `-K` (slope `y/x = 1/2`) and
//! `K + ψ/3` (slope `3`). All comparisons are done by cross-multiplication,
//! so wall membership is exact.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::class::SymmetricDivisor;
use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoriModel {
    /// M̄₀,₆ itself (ample chamber).
    #[serde(rename = "AmpleModel_M06")]
    AmpleModelM06,
    /// `(P¹)⁶ // SL₂`, the Segre cubic.
    SegreCubic,
    /// The Veronese quotient `V²_A`, the Igusa quartic.
    IgusaQuartic,
    Point,
    OutsideEffectiveCone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StableBaseLocus {
    Empty,
    B2,
    B3,
    /// Non-effective classes have no sections at all.
    WholeDivisor,
}

impl fmt::Display for MoriModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoriModel::AmpleModelM06 => f.write_str("AmpleModel_M06"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

impl fmt::Display for StableBaseLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The rays where the chamber structure changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Wall {
    Apex,
    B2,
    MinusK,
    KPlusThirdPsi,
    B3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChamberReport {
    pub model: MoriModel,
    pub stable_base_locus: StableBaseLocus,
    pub boundary_case: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall: Option<Wall>,
}

/// Where `(x, y)` sits relative to the walls, for effective `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Region {
    Apex,
    RayB2,
    /// `0 < y/x < 1/2`
    IgusaOpen,
    RayMinusK,
    /// `1/2 < y/x < 3`
    Ample,
    RayKPlusThirdPsi,
    /// `3 < y/x`
    SegreOpen,
    RayB3,
}

fn coords(d: &SymmetricDivisor) -> Result<(Rational, Rational)> {
    if d.n() != 6 {
        return Err(Error::UnsupportedN { expected: 6, got: d.n() });
    }
    Ok((d.coeffs()[0].clone(), d.coeffs()[1].clone()))
}

fn region(x: &Rational, y: &Rational) -> Region {
    match (x.is_zero(), y.is_zero()) {
        (true, true) => return Region::Apex,
        (false, true) => return Region::RayB2,
        (true, false) => return Region::RayB3,
        _ => {}
    }
    let two = Rational::from(2);
    let three = Rational::from(3);
    match ((&two * y).cmp(x), y.cmp(&(&three * x))) {
        (Ordering::Less, _) => Region::IgusaOpen,
        (Ordering::Equal, _) => Region::RayMinusK,
        (Ordering::Greater, Ordering::Less) => Region::Ample,
        (Ordering::Greater, Ordering::Equal) => Region::RayKPlusThirdPsi,
        (Ordering::Greater, Ordering::Greater) => Region::SegreOpen,
    }
}

/// Stable base locus of an effective symmetric divisor on M̄₀,₆: empty on
/// `[-K, K + ψ/3]`, `B_3` on `(K + ψ/3, B_3]`, `B_2` on `[B_2, -K)`.
pub fn stable_base_locus(d: &SymmetricDivisor) -> Result<StableBaseLocus> {
    let (x, y) = coords(d)?;
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(match region(&x, &y) {
        Region::Apex | Region::RayMinusK | Region::Ample | Region::RayKPlusThirdPsi => {
            StableBaseLocus::Empty
        }
        Region::SegreOpen | Region::RayB3 => StableBaseLocus::B3,
        Region::RayB2 | Region::IgusaOpen => StableBaseLocus::B2,
    })
}

/// The model `Proj ⊕ H⁰(mD)` for a symmetric divisor on M̄₀,₆.
///
/// Endpoint conventions: `-K` belongs to the Igusa chamber, `K + ψ/3` to the
/// Segre chamber, the rays of `B_2` and `B_3` give a point. The zero class is
/// reported as a point with the boundary flag set.
pub fn mori_model(d: &SymmetricDivisor) -> Result<ChamberReport> {
    let (x, y) = coords(d)?;
    if !d.is_effective() {
        return Ok(ChamberReport {
            model: MoriModel::OutsideEffectiveCone,
            stable_base_locus: StableBaseLocus::WholeDivisor,
            boundary_case: false,
            wall: None,
        });
    }
    let base = stable_base_locus(d)?;
    let (model, wall) = match region(&x, &y) {
        Region::Apex => (MoriModel::Point, Some(Wall::Apex)),
        Region::RayB2 => (MoriModel::Point, Some(Wall::B2)),
        Region::IgusaOpen => (MoriModel::IgusaQuartic, None),
        Region::RayMinusK => (MoriModel::IgusaQuartic, Some(Wall::MinusK)),
        Region::Ample => (MoriModel::AmpleModelM06, None),
        Region::RayKPlusThirdPsi => (MoriModel::SegreCubic, Some(Wall::KPlusThirdPsi)),
        Region::SegreOpen => (MoriModel::SegreCubic, None),
        Region::RayB3 => (MoriModel::Point, Some(Wall::B3)),
    };
    Ok(ChamberReport {
        model,
        stable_base_locus: base,
        boundary_case: wall.is_some(),
        wall,
    })
}
