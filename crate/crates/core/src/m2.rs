//! Divisors on M̄₂ in terms of `λ` and the boundary classes, their pullback
//! to symmetric divisors on M̄₀,₆, and the M̄₂ chamber lookup.
//!
//! On the stack the basis is `λ, δ₀, δ₁`; on the coarse space it is
//! `λ, Δ₀, Δ₁` with `δ₀ = Δ₀` and `δ₁ = ½Δ₁`. On the coarse space
//! `λ = (Δ₀ + Δ₁)/10`, so every class reduces to two boundary coefficients.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::arith::Rational;
use crate::divisor::{mori_model, MoriModel, SymmetricDivisor};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum M2Space {
    Stack,
    CoarseSpace,
}

/// `lambda·λ + d0·δ₀ + d1·δ₁` on the stack, or `lambda·λ + d0·Δ₀ + d1·Δ₁` on
/// the coarse space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct M2Divisor {
    pub space: M2Space,
    pub lambda: Rational,
    pub d0: Rational,
    pub d1: Rational,
}

impl M2Divisor {
    pub fn stack(lambda: Rational, d0: Rational, d1: Rational) -> Self {
        M2Divisor { space: M2Space::Stack, lambda, d0, d1 }
    }

    pub fn coarse(lambda: Rational, d0: Rational, d1: Rational) -> Self {
        M2Divisor { space: M2Space::CoarseSpace, lambda, d0, d1 }
    }

    /// The same class with `λ` eliminated.
    pub fn reduced(&self) -> Self {
        let tenth = &self.lambda * Rational::frac(1, 10);
        let (d0, d1) = match self.space {
            // λ = (δ₀ + 2δ₁)/10
            M2Space::Stack => (&self.d0 + &tenth, &self.d1 + Rational::from(2) * &tenth),
            // λ = (Δ₀ + Δ₁)/10
            M2Space::CoarseSpace => (&self.d0 + &tenth, &self.d1 + &tenth),
        };
        M2Divisor { space: self.space, lambda: Rational::zero(), d0, d1 }
    }

    /// Reduced class in the stack basis `δ₀, δ₁`.
    pub fn to_stack(&self) -> Self {
        let r = self.reduced();
        match self.space {
            M2Space::Stack => r,
            M2Space::CoarseSpace => M2Divisor::stack(r.lambda, r.d0, Rational::from(2) * r.d1),
        }
    }

    /// Reduced class in the coarse basis `Δ₀, Δ₁`.
    pub fn to_coarse(&self) -> Self {
        let r = self.reduced();
        match self.space {
            M2Space::CoarseSpace => r,
            M2Space::Stack => M2Divisor::coarse(r.lambda, r.d0, r.d1 * Rational::frac(1, 2)),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        M2Divisor {
            space: self.space,
            lambda: &self.lambda * s,
            d0: &self.d0 * s,
            d1: &self.d1 * s,
        }
    }

    pub fn is_effective(&self) -> bool {
        let r = self.reduced();
        !r.d0.is_negative() && !r.d1.is_negative()
    }
}

impl fmt::Display for M2Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = match self.space {
            M2Space::Stack => ["lambda", "delta0", "delta1"],
            M2Space::CoarseSpace => ["lambda", "Delta0", "Delta1"],
        };
        let mut first = true;
        for (c, name) in [&self.lambda, &self.d0, &self.d1].into_iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{a}*{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for M2Divisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (d0, d1) = match self.space {
            M2Space::Stack => ("delta0", "delta1"),
            M2Space::CoarseSpace => ("Delta0", "Delta1"),
        };
        let mut st = s.serialize_struct("M2Divisor", 4)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field(d0, &self.d0)?;
        st.serialize_field(d1, &self.d1)?;
        st.end()
    }
}

/// `Δ₀ ↦ 2B₂`, `Δ₁ ↦ B₃`, hence `δ₀ ↦ 2B₂`, `δ₁ ↦ ½B₃` and
/// `λ ↦ B₂/5 + B₃/10`.
pub fn pullback_to_m06(d: &M2Divisor) -> SymmetricDivisor {
    let c = d.to_coarse();
    SymmetricDivisor::from_coeffs(6, vec![Rational::from(2) * c.d0, c.d1]).expect("n = 6")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum M2Model {
    M2CoarseSpace,
    P6QuotientSL2,
    SatakeA2,
    Point,
    OutsideEffectiveCone,
}

impl fmt::Display for M2Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct M2ChamberReport {
    pub model: M2Model,
    pub boundary_case: bool,
    pub pullback: SymmetricDivisor,
}

/// Chamber lookup on M̄₂: `(δ₀, λ]` gives the Satake compactification,
/// `(λ, δ₀+12δ₁)` M̄₂ itself, `[δ₀+12δ₁, δ₁)` the quotient `P⁶//SL₂`, and
/// the rays `δ₀`, `δ₁` a point. Classes outside the effective cone are
/// reported as such.
pub fn m2_chamber(d: &M2Divisor) -> Result<M2ChamberReport> {
    let pullback = pullback_to_m06(d);
    let m06 = mori_model(&pullback)?;
    let model = match m06.model {
        MoriModel::AmpleModelM06 => M2Model::M2CoarseSpace,
        MoriModel::SegreCubic => M2Model::P6QuotientSL2,
        MoriModel::IgusaQuartic => M2Model::SatakeA2,
        MoriModel::Point => M2Model::Point,
        MoriModel::OutsideEffectiveCone => M2Model::OutsideEffectiveCone,
    };
    let (direct, direct_wall) = slope_model(d);
    assert_eq!(
        (model, m06.boundary_case),
        (direct, direct_wall),
        "pullback and slope test disagree on {d}"
    );
    Ok(M2ChamberReport { model, boundary_case: m06.boundary_case, pullback })
}

/// The same lookup done directly on `a·δ₀ + b·δ₁`: walls at `b = 2a` (`λ`)
/// and `b = 12a`.
fn slope_model(d: &M2Divisor) -> (M2Model, bool) {
    let s = d.to_stack();
    let (a, b) = (&s.d0, &s.d1);
    if a.is_negative() || b.is_negative() {
        return (M2Model::OutsideEffectiveCone, false);
    }
    if a.is_zero() || b.is_zero() {
        return (M2Model::Point, true);
    }
    match (b.cmp(&(Rational::from(2) * a)), b.cmp(&(Rational::from(12) * a))) {
        (Ordering::Less, _) => (M2Model::SatakeA2, false),
        (Ordering::Equal, _) => (M2Model::SatakeA2, true),
        (_, Ordering::Less) => (M2Model::M2CoarseSpace, false),
        (_, Ordering::Equal) => (M2Model::P6QuotientSL2, true),
        (_, Ordering::Greater) => (M2Model::P6QuotientSL2, false),
    }
}

/// `K + α·δ` on the stack with `K = 13λ − 2δ₀ − 2δ₁`, reduced to
/// `(α − 7/10)δ₀ + (α + 3/5)δ₁`.
pub fn hassett_keel_divisor(alpha: &Rational) -> M2Divisor {
    let k = M2Divisor::stack(Rational::from(13), Rational::from(-2), Rational::from(-2));
    M2Divisor::stack(k.lambda, &k.d0 + alpha, &k.d1 + alpha).reduced()
}

/// The `α ≥ 7/10` whose log canonical class spans the ray of `d`, if there is
/// one. Rays in `[δ₀, δ₀ + δ₁]` and non-effective classes have none.
pub fn hassett_keel_alpha(d: &M2Divisor) -> Option<Rational> {
    let s = d.to_stack();
    let (a, b) = (&s.d0, &s.d1);
    if a.is_negative() || b.is_negative() || b <= a {
        return None;
    }
    // (α + 3/5) / (α − 7/10) = b/a  ⟺  α = 7/10 + (13/10)·a/(b − a)
    Some(Rational::frac(7, 10) + Rational::frac(13, 10) * a / (b - a))
}
