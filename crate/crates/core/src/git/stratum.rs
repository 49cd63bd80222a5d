//! Coincidence/collinearity signatures of six points in `P²` and the eleven
//! strictly semistable strata for the symmetric linearization.
//!
//! A stratum is identified by the number of doubled points together with the
//! multiset of "heavy" lines, each described by how many doubled points and
//! how many single points it carries.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::config::{PointConfiguration, WeightVector};
use super::stability::{stability_status, StabilityStatus, StabilityVerdict};
use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// A line through at least two distinct support points that either contains
/// three or more distinct support points or carries at least four marked
/// points counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LineRecord {
    /// Indices into [`StratumSignature::coincidence_partition`].
    pub classes: Vec<usize>,
    /// Number of marked points on the line, counted with multiplicity.
    pub point_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StratumSignature {
    /// Classes of coinciding marked points (1-based), ordered by first member.
    pub coincidence_partition: Vec<Vec<usize>>,
    pub lines: Vec<LineRecord>,
}

impl StratumSignature {
    /// `(doubled classes on the line, single classes on the line)` for every
    /// recorded line, sorted.
    fn line_types(&self) -> Vec<(usize, usize)> {
        let mut types: Vec<(usize, usize)> = self
            .lines
            .iter()
            .map(|l| {
                let sizes = l.classes.iter().map(|&k| self.coincidence_partition[k].len());
                let (mut doubled, mut single) = (0, 0);
                for s in sizes {
                    match s {
                        1 => single += 1,
                        _ => doubled += 1,
                    }
                }
                (doubled, single)
            })
            .collect();
        types.sort_unstable();
        types
    }

    fn doubled_count(&self) -> usize {
        self.coincidence_partition.iter().filter(|c| c.len() == 2).count()
    }
}

/// Signature of a configuration in `P²`.
pub fn stratum_signature(c: &PointConfiguration) -> Result<StratumSignature> {
    if c.d() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "stratum signatures are defined in P^2, got P^{}",
            c.d()
        )));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut supports: Vec<&[Rational]> = Vec::new();
    for (i, p) in c.points().iter().enumerate() {
        match supports.iter().position(|s| *s == p.as_slice()) {
            Some(k) => classes[k].push(i + 1),
            None => {
                supports.push(p);
                classes.push(vec![i + 1]);
            }
        }
    }

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut lines = Vec::new();
    for a in 0..supports.len() {
        for b in a + 1..supports.len() {
            let m = RationalMatrix::from_rows(&[supports[a].to_vec(), supports[b].to_vec()])?;
            let normal = m.kernel_basis().pop().expect("two distinct points span a line");
            let on_line: Vec<usize> = (0..supports.len())
                .filter(|&k| {
                    supports[k]
                        .iter()
                        .zip(&normal)
                        .map(|(x, y)| x * y)
                        .sum::<Rational>()
                        .is_zero()
                })
                .collect();
            if !seen.insert(on_line.clone()) {
                continue;
            }
            let point_count: usize = on_line.iter().map(|&k| classes[k].len()).sum();
            if on_line.len() >= 3 || point_count >= 4 {
                lines.push(LineRecord { classes: on_line, point_count });
            }
        }
    }
    Ok(StratumSignature { coincidence_partition: classes, lines })
}

/// The eleven strictly semistable strata of `(P²)⁶` for symmetric weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl Stratum {
    pub const ALL: [Stratum; 11] = [
        Stratum::I,
        Stratum::II,
        Stratum::III,
        Stratum::IV,
        Stratum::V,
        Stratum::VI,
        Stratum::VII,
        Stratum::VIII,
        Stratum::IX,
        Stratum::X,
        Stratum::XI,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            Stratum::I => "I",
            Stratum::II => "II",
            Stratum::III => "III",
            Stratum::IV => "IV",
            Stratum::V => "V",
            Stratum::VI => "VI",
            Stratum::VII => "VII",
            Stratum::VIII => "VIII",
            Stratum::IX => "IX",
            Stratum::X => "X",
            Stratum::XI => "XI",
        }
    }

    /// `(doubled points, sorted line types)`; a line type is
    /// `(doubled points on it, single points on it)`.
    fn template(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            Stratum::I => (3, &[(2, 0), (2, 0), (2, 0)]),
            Stratum::II => (2, &[(1, 2), (2, 0)]),
            Stratum::III => (2, &[(2, 0)]),
            Stratum::IV => (1, &[(1, 2), (1, 2)]),
            Stratum::V => (1, &[(0, 3), (1, 2)]),
            Stratum::VI => (1, &[(1, 2)]),
            Stratum::VII => (1, &[(0, 4)]),
            Stratum::VIII => (1, &[(0, 3)]),
            Stratum::IX => (1, &[]),
            Stratum::X => (0, &[(0, 3), (0, 4)]),
            Stratum::XI => (0, &[(0, 4)]),
        }
    }

    /// Dimension of the stabilizer in `SL₃`.
    pub fn stabilizer_dimension(self) -> usize {
        match self {
            Stratum::I => 2,
            Stratum::II | Stratum::VII => 1,
            _ => 0,
        }
    }

    /// Stratum dimension inside `(P²)⁶` as tabulated. Recorded for reference
    /// only; nothing computes it.
    pub fn tabulated_dimension(self) -> usize {
        match self {
            Stratum::I => 6,
            Stratum::II => 7,
            Stratum::III | Stratum::IV | Stratum::VII => 8,
            Stratum::V | Stratum::VI | Stratum::VIII | Stratum::X => 9,
            Stratum::IX | Stratum::XI => 10,
        }
    }

    /// The closed-orbit stratum reached by degenerating within the
    /// semistable locus.
    pub fn closed_orbit(self) -> Stratum {
        match self {
            Stratum::I | Stratum::II | Stratum::III | Stratum::IV | Stratum::V | Stratum::VI => {
                Stratum::I
            }
            _ => Stratum::VII,
        }
    }

    pub fn is_closed(self) -> bool {
        self.closed_orbit() == self
    }

    /// A representative configuration in homogeneous coordinates. Doubled
    /// points come first.
    pub fn representative(self) -> PointConfiguration {
        let pts: [[i64; 3]; 6] = match self {
            Stratum::I => [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1], [0, 0, 1]],
            // second 4-line is x = 0 through (0:1:0)
            Stratum::II => [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1]],
            Stratum::III => [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
            // 4-lines x = 0 and y = 0 through the doubled point
            Stratum::IV => [[0, 0, 1], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1]],
            // 4-line x = 0; (0:1:0), (1:0:1), (1:2:1) on z = x
            Stratum::V => [[0, 0, 1], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 1], [1, 2, 1]],
            Stratum::VI => [[0, 0, 1], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 1], [2, 1, 1]],
            Stratum::VII => [[0, 0, 1], [0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]],
            Stratum::VIII => [[0, 0, 1], [0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 1]],
            Stratum::IX => [[0, 0, 1], [0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 1], [1, 2, 3]],
            // (0:1:0) on z = 0 is collinear with the two off-line points
            Stratum::X => [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [0, 0, 1], [0, 1, 1]],
            Stratum::XI => [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [0, 0, 1], [1, 3, 1]],
        };
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        PointConfiguration::from_i64(2, &refs).expect("valid representative")
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

/// Classification of six points in `P²` against the strictly semistable strata.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table1Label {
    Stratum(Stratum),
    Stable,
    Unstable,
    Unrecognized,
}

impl fmt::Display for Table1Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table1Label::Stratum(s) => write!(f, "{s}"),
            Table1Label::Stable => f.write_str("Stable"),
            Table1Label::Unstable => f.write_str("Unstable"),
            Table1Label::Unrecognized => f.write_str("Unrecognized"),
        }
    }
}

impl Serialize for Table1Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Matches a signature and its verdict (for symmetric weights on six points)
/// against the stratum templates.
pub fn match_table1(sig: &StratumSignature, verdict: &StabilityVerdict) -> Table1Label {
    match verdict.status {
        StabilityStatus::Stable => return Table1Label::Stable,
        StabilityStatus::Unstable => return Table1Label::Unstable,
        StabilityStatus::StrictlySemistable => {}
    }
    let n: usize = sig.coincidence_partition.iter().map(Vec::len).sum();
    if n != 6 || sig.coincidence_partition.iter().any(|c| c.len() > 2) {
        return Table1Label::Unrecognized;
    }
    let key = (sig.doubled_count(), sig.line_types());
    Stratum::ALL
        .into_iter()
        .find(|s| {
            let (k, lines) = s.template();
            k == key.0 && lines == key.1.as_slice()
        })
        .map_or(Table1Label::Unrecognized, Table1Label::Stratum)
}

/// Signature, verdict and label for six points in `P²` with symmetric weights.
pub fn classify(c: &PointConfiguration) -> Result<Table1Label> {
    if c.n() != 6 {
        return Err(Error::DimensionMismatch(format!("expected 6 points, got {}", c.n())));
    }
    let sig = stratum_signature(c)?;
    let verdict = stability_status(c, &WeightVector::symmetric(6, 2)?)?;
    Ok(match_table1(&sig, &verdict))
}
