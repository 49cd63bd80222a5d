use std::fmt;

use serde::Serialize;

use super::class::{fold_index, SymmetricDivisor};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Numerical class of an F-curve. Only the sizes of the four parts matter when
/// intersecting with symmetric divisors, so the class is a sorted 4-partition
/// of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FCurveClass {
    parts: [usize; 4],
}

impl FCurveClass {
    pub fn new(mut parts: [usize; 4]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts.to_vec(), parts.iter().sum()));
        }
        parts.sort_unstable();
        Ok(FCurveClass { parts })
    }

    pub fn parts(&self) -> [usize; 4] {
        self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every 4-part partition of `n` into positive parts, in lexicographic order.
    pub fn all(n: usize) -> Vec<FCurveClass> {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a..=n {
                for c in b..=n {
                    if a + b + c >= n {
                        break;
                    }
                    let d = n - a - b - c;
                    if d >= c {
                        out.push(FCurveClass { parts: [a, b, c, d] });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for FCurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.parts;
        write!(f, "F{a},{b},{c},{d}")
    }
}

/// The curve `C_j`: a node moving along a fixed `j`-pointed component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SpecialCurveCj {
    j: usize,
}

impl SpecialCurveCj {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        if n < 4 || j < 2 || j + 2 > n {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 2,
                hi: n.saturating_sub(2),
            });
        }
        Ok(SpecialCurveCj { j })
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

impl fmt::Display for SpecialCurveCj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.j)
    }
}

/// `F · Σ r_i B_i = -r_{a1} - r_{a2} - r_{a3} - r_{a4} + r_{a1+a2} + r_{a1+a3} + r_{a1+a4}`
/// with `r_1 = 0` and `r_k = r_{n-k}`.
pub fn intersect_f_curve(d: &SymmetricDivisor, f: &FCurveClass) -> Result<Rational> {
    if f.n() != d.n() {
        return Err(Error::InvalidPartition(f.parts.to_vec(), d.n()));
    }
    let [a1, a2, a3, a4] = f.parts;
    let r = |i: usize| d.coeff(i);
    Ok(-r(a1) - r(a2) - r(a3) - r(a4) + r(a1 + a2) + r(a1 + a3) + r(a1 + a4))
}

/// `C_j · B_i` is `j` for `i = j-1`, `-(j-2)` for `i = j`, zero otherwise.
///
/// Both `j-1` and `j` are folded to their canonical class before lookup, so a
/// class hit by both cases (n = 2j-1) picks up both contributions exactly once.
pub fn intersect_cj(d: &SymmetricDivisor, c: &SpecialCurveCj) -> Result<Rational> {
    let n = d.n();
    let j = c.j;
    if j < 2 || j + 2 > n {
        return Err(Error::IndexOutOfRange { index: j, lo: 2, hi: n - 2 });
    }
    let term = |i: usize, weight: Rational| match fold_index(n, i) {
        Some(k) => weight * d.coeff(k),
        None => Rational::zero(),
    };
    Ok(term(j - 1, Rational::from(j as i64)) + term(j, -Rational::from(j as i64 - 2)))
}

/// Outcome of the F-curve test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FNonnegativity {
    pub nonnegative: bool,
    pub violations: Vec<FCurveClass>,
}

/// Checks `F · D ≥ 0` for every F-curve class.
///
/// On n = 6 this characterizes nef divisors. For other `n` it is reported only
/// as a necessary condition for nefness.
#[allow(non_snake_case)]
pub fn is_F_nonnegative(d: &SymmetricDivisor) -> FNonnegativity {
    let violations: Vec<FCurveClass> = FCurveClass::all(d.n())
        .into_iter()
        .filter(|f| {
            intersect_f_curve(d, f)
                .map(|x| x.is_negative())
                .unwrap_or(false)
        })
        .collect();
    FNonnegativity {
        nonnegative: violations.is_empty(),
        violations,
    }
}
