use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::forms::{is_singular_point, lies_on, HypersurfaceId, P5Point};
use crate::arith::Rational;
use crate::error::Result;

/// The ten points `±1` with three `+1` and three `-1`, up to sign; the
/// representative has `X₁ = 1`.
pub fn segre_nodes() -> Vec<P5Point> {
    let mut nodes = Vec::with_capacity(10);
    for j in 1..6 {
        for k in j + 1..6 {
            let coords = std::array::from_fn(|i| if i == 0 || i == j || i == k { 1 } else { -1 });
            nodes.push(P5Point::from_i64(coords).expect("nonzero"));
        }
    }
    nodes
}

pub fn is_segre_node(p: &P5Point) -> bool {
    let n = p.normalized();
    segre_nodes().iter().any(|q| *q == n)
}

/// A point `(a,b,c,-a,-b,-c)` with coordinates shuffled; it lies on the cubic.
pub fn random_pair_pattern<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> P5Point {
    loop {
        let v: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        let mut coords = [v[0], v[1], v[2], -v[0], -v[1], -v[2]];
        coords.shuffle(rng);
        if let Ok(p) = P5Point::from_i64(coords) {
            return p;
        }
    }
}

/// The third intersection of the line through `p` and `q` with the cubic, when
/// both lie on it and the line is not contained in it.
pub fn third_point(p: &P5Point, q: &P5Point) -> Option<P5Point> {
    let (x, y) = (p.coords(), q.coords());
    let three = Rational::from(3);
    let b: Rational = (0..6).map(|i| &three * x[i].pow(2) * &y[i]).sum();
    let c: Rational = (0..6).map(|i| &three * &x[i] * y[i].pow(2)).sum();
    // f(s p + t q) = s t (b s + c t), so the third root is (s, t) = (c, -b)
    let coords: Vec<Rational> = (0..6).map(|i| &c * &x[i] - &b * &y[i]).collect();
    P5Point::from_vec(coords).ok().map(|r| r.normalized())
}

/// A rational point of the cubic obtained from two chord constructions
/// through random points of the form `(a,b,c,-a,-b,-c)`.
pub fn random_segre_point<R: Rng + ?Sized>(rng: &mut R) -> P5Point {
    loop {
        let p = random_pair_pattern(rng, 6);
        let q = random_pair_pattern(rng, 6);
        let Some(r) = third_point(&p, &q) else { continue };
        let s = random_pair_pattern(rng, 6);
        if let Some(t) = third_point(&r, &s) {
            if !t.projectively_eq(&r) && !t.projectively_eq(&s) {
                return t;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SingularSearch {
    pub samples: usize,
    /// Sampled points that happened to be nodes.
    pub nodes_hit: usize,
    /// Singular points that are not among the ten nodes.
    pub other_singular: Vec<P5Point>,
}

impl SingularSearch {
    pub fn pass(&self) -> bool {
        self.other_singular.is_empty()
    }
}

/// Samples rational points of the cubic and checks that every singular one is
/// a node.
pub fn search_segre_singularities<R: Rng + ?Sized>(rng: &mut R, samples: usize) -> Result<SingularSearch> {
    let mut report = SingularSearch { samples, nodes_hit: 0, other_singular: Vec::new() };
    for _ in 0..samples {
        let p = random_segre_point(rng);
        debug_assert!(lies_on(HypersurfaceId::SegreCubic, &p));
        if is_singular_point(HypersurfaceId::SegreCubic, &p)? {
            if is_segre_node(&p) {
                report.nodes_hit += 1;
            } else {
                report.other_singular.push(p);
            }
        }
    }
    Ok(report)
}
