use std::fmt;

use serde::Serialize;

use super::forms::P5Point;
use crate::arith::{Rational, RationalMatrix};

/// The line `{X constant on each pair, a + b + c = 0}` where `a, b, c` are the
/// values on the three pairs of a perfect matching of `{1..6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartitionLine {
    /// 0-based; each pair increasing, pairs sorted by first entry.
    pairs: [(usize, usize); 3],
}

impl PairPartitionLine {
    pub fn pairs(&self) -> [(usize, usize); 3] {
        self.pairs
    }

    /// The point with value `a` on the first pair, `b` on the second and
    /// `-a-b` on the third.
    pub fn point(&self, a: &Rational, b: &Rational) -> Option<P5Point> {
        let c = -(a + b);
        let mut coords: [Rational; 6] = Default::default();
        for ((i, j), v) in self.pairs.iter().zip([a, b, &c]) {
            coords[*i] = v.clone();
            coords[*j] = v.clone();
        }
        P5Point::new(coords).ok()
    }

    /// Two vectors spanning the line.
    pub fn basis(&self) -> [Vec<Rational>; 2] {
        let one = Rational::one();
        let zero = Rational::zero();
        [&(&one, &zero), &(&zero, &one)].map(|(a, b)| {
            self.point(a, b).expect("basis points are nonzero").coords().to_vec()
        })
    }

    /// The common point of two distinct lines, if they meet.
    pub fn intersection(&self, other: &PairPartitionLine) -> Option<P5Point> {
        let [u1, u2] = self.basis();
        let [v1, v2] = other.basis();
        let rows: Vec<Vec<Rational>> = (0..6)
            .map(|i| vec![u1[i].clone(), u2[i].clone(), -&v1[i], -&v2[i]])
            .collect();
        let kernel = RationalMatrix::from_rows(&rows).expect("4 columns").kernel_basis();
        if kernel.len() != 1 {
            return None;
        }
        let s = &kernel[0];
        let coords: Vec<Rational> = (0..6).map(|i| &s[0] * &u1[i] + &s[1] * &u2[i]).collect();
        P5Point::from_vec(coords).ok().map(|p| p.normalized())
    }
}

impl fmt::Display for PairPartitionLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.pairs {
            write!(f, "{{{}{}}}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

impl Serialize for PairPartitionLine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The 15 lines, one per perfect matching of `{1..6}`, in lexicographic order
/// of their pairs.
pub fn pair_partition_lines() -> Vec<PairPartitionLine> {
    fn matchings(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<PairPartitionLine>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(PairPartitionLine { pairs: [acc[0], acc[1], acc[2]] });
            return;
        };
        for (k, &partner) in tail.iter().enumerate() {
            let remaining: Vec<usize> =
                tail.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &v)| v).collect();
            acc.push((first, partner));
            matchings(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::with_capacity(15);
    matchings(&[0, 1, 2, 3, 4, 5], &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IntersectionPoint {
    pub point: P5Point,
    /// Indices into the line list.
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LineIncidence {
    pub lines: Vec<PairPartitionLine>,
    pub points: Vec<IntersectionPoint>,
    /// For each line, the number of distinct points where it meets the others.
    pub points_per_line: Vec<usize>,
}

impl LineIncidence {
    pub fn lines_per_point(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.lines.len()).collect()
    }
}

/// Intersects every pair of the 15 lines exactly and collects the distinct
/// intersection points with the lines through each.
pub fn line_incidence() -> LineIncidence {
    let lines = pair_partition_lines();
    let mut points: Vec<IntersectionPoint> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let Some(p) = lines[i].intersection(&lines[j]) else { continue };
            match points.iter_mut().find(|q| q.point == p) {
                Some(q) => {
                    for l in [i, j] {
                        if !q.lines.contains(&l) {
                            q.lines.push(l);
                        }
                    }
                }
                None => points.push(IntersectionPoint { point: p, lines: vec![i, j] }),
            }
        }
    }
    for p in &mut points {
        p.lines.sort_unstable();
    }
    points.sort_by(|a, b| a.lines.cmp(&b.lines));
    let points_per_line = (0..lines.len())
        .map(|l| points.iter().filter(|p| p.lines.contains(&l)).count())
        .collect();
    LineIncidence { lines, points, points_per_line }
}
