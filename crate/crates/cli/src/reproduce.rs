//! Every headline computation, each checked against its known value.

use std::fmt::{Display, Write as _};

use m06_core::divisor::{
    canonical_divisor, canonical_polarization, from_K_psi, intersect_cj, intersect_f_curve,
    mori_model, psi_divisor, stable_base_locus, FCurveClass, SpecialCurveCj, SymmetricDivisor,
};
use m06_core::git::{
    polystable_degeneration, stabilizer_dimension, stability_status, Stratum, WeightVector,
};
use m06_core::hypersurface::{
    duality_sample_check, evaluate, is_singular_point, line_incidence, pair_partition_lines,
    segre_nodes, HypersurfaceId,
};
use m06_core::m2::{hassett_keel_divisor, m2_chamber, pullback_to_m06, M2Divisor};
use m06_core::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::Output;

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Section {
    pub name: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
pub struct Report {
    pub pass: bool,
    pub seed: u64,
    pub sections: Vec<Section>,
}

struct Builder {
    name: &'static str,
    checks: Vec<Check>,
}

impl Builder {
    fn new(name: &'static str) -> Self {
        Builder { name, checks: Vec::new() }
    }

    fn eq(&mut self, name: impl Into<String>, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.checks.push(Check { name: name.into(), expected, computed, pass });
    }

    fn done(self) -> Section {
        let pass = self.checks.iter().all(|c| c.pass);
        Section { name: self.name, pass, checks: self.checks }
    }
}

fn q(a: i64, b: i64) -> Rational {
    Rational::frac(a, b)
}

fn d6(x: Rational, y: Rational) -> SymmetricDivisor {
    SymmetricDivisor::from_coeffs(6, vec![x, y]).expect("n = 6")
}

fn k() -> SymmetricDivisor {
    canonical_divisor(6).expect("n = 6")
}

fn psi() -> SymmetricDivisor {
    psi_divisor(6).expect("n = 6")
}

fn segre_wall() -> SymmetricDivisor {
    &k() + &psi().scale(&q(1, 3))
}

fn classes() -> Section {
    let mut s = Builder::new("canonical class and psi");
    s.eq("K in the boundary basis", "-2/5*B2 - 1/5*B3", k());
    s.eq("psi in the boundary basis", "8/5*B2 + 9/5*B3", psi());
    s.eq("-9/2*K - 1/2*psi", "B2", from_K_psi(6, &q(-9, 2), &q(-1, 2)).expect("n = 6"));
    s.eq("4*K + psi", "B3", from_K_psi(6, &q(4, 1), &q(1, 1)).expect("n = 6"));
    s.done()
}

fn intersections() -> Section {
    let mut s = Builder::new("intersection numbers with F1113, F1122, C4");
    let columns = [("psi", psi()), ("K", k()), ("B2", d6(q(1, 1), q(0, 1))), ("B3", d6(q(0, 1), q(1, 1)))];
    let f1113 = FCurveClass::new([1, 1, 1, 3]).expect("partition");
    let f1122 = FCurveClass::new([1, 1, 2, 2]).expect("partition");
    let c4 = SpecialCurveCj::new(6, 4).expect("j = 4");
    let rows: [(&str, [i64; 4], Box<dyn Fn(&SymmetricDivisor) -> Rational>); 3] = [
        ("F1,1,1,3", [3, -1, 3, -1], Box::new(move |d| intersect_f_curve(d, &f1113).expect("n = 6"))),
        ("F1,1,2,2", [2, 0, -1, 2], Box::new(move |d| intersect_f_curve(d, &f1122).expect("n = 6"))),
        ("C4", [4, 0, -2, 4], Box::new(move |d| intersect_cj(d, &c4).expect("n = 6"))),
    ];
    for (row, expected, f) in &rows {
        for ((col, d), e) in columns.iter().zip(expected) {
            s.eq(format!("{row} . {col}"), e, f(d));
        }
    }
    s.done()
}

fn polarization() -> Section {
    let mut s = Builder::new("symmetric polarization D_A");
    let da = canonical_polarization();
    let f1113 = FCurveClass::new([1, 1, 1, 3]).expect("partition");
    let f1122 = FCurveClass::new([1, 1, 2, 2]).expect("partition");
    s.eq("F1,1,1,3 . D_A", "1/2", intersect_f_curve(&da, &f1113).expect("n = 6"));
    s.eq("F1,1,2,2 . D_A", "0", intersect_f_curve(&da, &f1122).expect("n = 6"));
    s.eq("D_A in the boundary basis", "1/5*B2 + 1/10*B3", &da);
    s.eq("D_A = -1/2*K", "true", da == k().scale(&q(-1, 2)));
    s.done()
}

fn chambers() -> Section {
    let mut s = Builder::new("stable base loci and models of M06");
    let minus_k = -&k();
    let b2 = d6(q(1, 1), q(0, 1));
    let b3 = d6(q(0, 1), q(1, 1));
    let segre_open = d6(q(1, 1), q(4, 1));
    let igusa_open = d6(q(4, 1), q(1, 1));
    let base = [
        ("-K", &minus_k, "Empty"),
        ("K + 1/3*psi", &segre_wall(), "Empty"),
        ("psi", &psi(), "Empty"),
        ("B2 + 4*B3", &segre_open, "B3"),
        ("B3", &b3, "B3"),
        ("4*B2 + B3", &igusa_open, "B2"),
        ("B2", &b2, "B2"),
    ];
    for (name, d, expected) in base {
        s.eq(format!("stable base locus of {name}"), expected, stable_base_locus(d).expect("effective"));
    }
    let models = [
        ("B2", &b2, "Point, wall"),
        ("4*B2 + B3", &igusa_open, "IgusaQuartic"),
        ("-K", &minus_k, "IgusaQuartic, wall"),
        ("psi", &psi(), "AmpleModel_M06"),
        ("K + 1/3*psi", &segre_wall(), "SegreCubic, wall"),
        ("B2 + 4*B3", &segre_open, "SegreCubic"),
        ("B3", &b3, "Point, wall"),
    ];
    for (name, d, expected) in models {
        let r = mori_model(d).expect("n = 6");
        let computed = if r.boundary_case { format!("{}, wall", r.model) } else { r.model.to_string() };
        s.eq(format!("model of {name}"), expected, computed);
    }
    s.eq("model of K", "OutsideEffectiveCone", mori_model(&k()).expect("n = 6").model);
    s.done()
}

fn strata() -> Section {
    let mut s = Builder::new("strictly semistable configurations of six points in P2");
    let w = WeightVector::symmetric(6, 2).expect("weights");
    for st in Stratum::ALL {
        let c = st.representative();
        let status = stability_status(&c, &w).expect("matching sizes").status;
        let stab = stabilizer_dimension(&c);
        let closure = match polystable_degeneration(&c) {
            Ok(deg) => deg.label.to_string(),
            Err(e) => e.to_string(),
        };
        s.eq(
            format!("stratum {st}: status, stabilizer, closed orbit"),
            format!("StrictlySemistable, {}, {}", st.stabilizer_dimension(), st.closed_orbit()),
            format!("{status:?}, {stab}, {closure}"),
        );
    }
    s.done()
}

fn singular_lines() -> Section {
    let mut s = Builder::new("singular lines of the Igusa quartic");
    let lines = pair_partition_lines();
    s.eq("number of lines", 15, lines.len());
    let params = [(1, 1), (1, 2), (2, -5), (3, 7), (-4, 1)];
    let mut on = 0;
    let mut singular = 0;
    for l in &lines {
        for (a, b) in params {
            let p = l.point(&a.into(), &b.into()).expect("nonzero");
            let (x, y) = evaluate(HypersurfaceId::IgusaQuartic, &p);
            if x.is_zero() && y.is_zero() {
                on += 1;
                singular += usize::from(is_singular_point(HypersurfaceId::IgusaQuartic, &p).expect("on it"));
            }
        }
    }
    let total = lines.len() * params.len();
    s.eq("sampled line points on the quartic", total, on);
    s.eq("sampled line points singular", total, singular);
    let inc = line_incidence();
    s.eq("intersection points on each line", "3", uniform(&inc.points_per_line));
    s.eq("lines through each intersection point", "3", uniform(&inc.lines_per_point()));
    s.done()
}

fn uniform(v: &[usize]) -> String {
    match v.split_first() {
        Some((first, rest)) if rest.iter().all(|x| x == first) => first.to_string(),
        _ => format!("{v:?}"),
    }
}

fn nodes() -> Section {
    let mut s = Builder::new("nodes of the Segre cubic");
    let nodes = segre_nodes();
    s.eq("number of nodes", 10, nodes.len());
    let singular = nodes
        .iter()
        .filter(|p| is_singular_point(HypersurfaceId::SegreCubic, p).unwrap_or(false))
        .count();
    s.eq("nodes that are singular points", 10, singular);
    s.done()
}

fn duality(seed: u64) -> Section {
    let mut s = Builder::new("Gauss map of the Segre cubic lands on the Igusa quartic");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match duality_sample_check(&mut rng, 100, 1e-9) {
        Ok(r) => {
            s.eq(
                format!("max residual over {} samples within 1e-9", r.samples),
                "true",
                r.max_residual <= r.tolerance,
            );
            s.eq(
                format!("exact residual over {} pair-pattern and rational samples", r.pair_pattern_samples + r.exact_samples),
                "0",
                &r.exact_residual,
            );
        }
        Err(e) => s.eq("duality sampler", "ok", e),
    }
    s.done()
}

fn m2() -> Section {
    let mut s = Builder::new("divisors on M2 and their models");
    let z = Rational::zero;
    let lambda = M2Divisor::stack(Rational::one(), z(), z());
    s.eq("pullback of lambda", "1/5*B2 + 1/10*B3", pullback_to_m06(&lambda));
    let coarse_wall = M2Divisor::coarse(z(), Rational::one(), Rational::from(6));
    s.eq("pullback of Delta0 + 6*Delta1", "2*B2 + 6*B3", pullback_to_m06(&coarse_wall));
    s.eq("pullback of Delta0 + 6*Delta1 = 15*(K + 1/3*psi)", "true", pullback_to_m06(&coarse_wall) == segre_wall().scale(&q(15, 1)));
    let stack_wall = M2Divisor::stack(z(), Rational::one(), Rational::from(12));
    s.eq("pullback of delta0 + 12*delta1", "2*B2 + 6*B3", pullback_to_m06(&stack_wall));
    let show = |d: &M2Divisor| {
        let r = m2_chamber(d).expect("n = 6");
        if r.boundary_case {
            format!("{}, wall", r.model)
        } else {
            r.model.to_string()
        }
    };
    s.eq("model of lambda", "SatakeA2, wall", show(&lambda));
    s.eq("model of delta0 + 12*delta1", "P6QuotientSL2, wall", show(&stack_wall));
    s.eq("model of delta0 + 5*delta1", "M2CoarseSpace", show(&M2Divisor::stack(z(), Rational::one(), Rational::from(5))));
    s.eq("model of delta0", "Point, wall", show(&M2Divisor::stack(z(), Rational::one(), z())));
    s.eq("model of delta1", "Point, wall", show(&M2Divisor::stack(z(), z(), Rational::one())));
    s.eq("K + 9/11*delta", "13/110*delta0 + 78/55*delta1", hassett_keel_divisor(&q(9, 11)));
    for (alpha, expected) in [
        (q(7, 10), "Point, wall"),
        (q(3, 4), "P6QuotientSL2"),
        (q(9, 11), "P6QuotientSL2, wall"),
        (q(1, 1), "M2CoarseSpace"),
        (q(2, 1), "SatakeA2, wall"),
        (q(3, 1), "SatakeA2"),
    ] {
        s.eq(format!("model of K + {alpha}*delta"), expected, show(&hassett_keel_divisor(&alpha)));
    }
    s.done()
}

pub fn report(seed: u64) -> Report {
    let sections = vec![
        classes(),
        intersections(),
        polarization(),
        chambers(),
        strata(),
        singular_lines(),
        nodes(),
        duality(seed),
        m2(),
    ];
    let pass = sections.iter().all(|s| s.pass);
    Report { pass, seed, sections }
}

pub fn run(seed: u64) -> Output {
    let r = report(seed);
    let mut text = String::new();
    let mut total = 0;
    let mut passed = 0;
    for sec in &r.sections {
        let _ = writeln!(text, "{}", sec.name);
        for c in &sec.checks {
            total += 1;
            if c.pass {
                passed += 1;
                let _ = writeln!(text, "  [ok]   {}: {}", c.name, c.computed);
            } else {
                let _ = writeln!(text, "  [FAIL] {}: expected {}, computed {}", c.name, c.expected, c.computed);
            }
        }
    }
    let _ = write!(text, "{passed}/{total} checks passed");
    let ok = r.pass;
    let out = Output::new(text, &r);
    if ok {
        out
    } else {
        out.failed()
    }
}
