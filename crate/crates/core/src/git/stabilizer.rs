use super::config::PointConfiguration;
use crate::arith::{Rational, RationalMatrix};

/// Dimension of the stabilizer of `c` in `SL_{d+1}`, computed on the Lie
/// algebra: traceless `M` with `M x_i ∧ x_i = 0` for every point.
pub fn stabilizer_dimension(c: &PointConfiguration) -> usize {
    let m = c.d() + 1;
    let unknowns = m * m;
    let idx = |row: usize, col: usize| row * m + col;
    let mut equations: Vec<Vec<Rational>> = Vec::new();
    for x in c.points() {
        // (Mx)_a x_b - (Mx)_b x_a = 0 for a < b
        for a in 0..m {
            for b in a + 1..m {
                let mut eq = vec![Rational::zero(); unknowns];
                for col in 0..m {
                    eq[idx(a, col)] += &x[col] * &x[b];
                    eq[idx(b, col)] -= &(&x[col] * &x[a]);
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    equations.push(eq);
                }
            }
        }
    }
    let mut trace = vec![Rational::zero(); unknowns];
    for i in 0..m {
        trace[idx(i, i)] = Rational::one();
    }
    equations.push(trace);
    let system = RationalMatrix::from_rows(&equations).expect("rows share the unknown count");
    unknowns - system.rank()
}

/// Dimension of the `SL_{d+1}`-orbit of `c`.
pub fn orbit_dimension(c: &PointConfiguration) -> usize {
    let m = c.d() + 1;
    m * m - 1 - stabilizer_dimension(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_vertices_have_a_two_torus() {
        let c = PointConfiguration::from_i64(
            2,
            &[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 1]],
        )
        .unwrap();
        assert_eq!(stabilizer_dimension(&c), 2);
        assert_eq!(orbit_dimension(&c), 6);
    }

    #[test]
    fn doubled_point_off_a_four_point_line() {
        let c = PointConfiguration::from_i64(
            2,
            &[&[0, 0, 1], &[0, 0, 1], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0]],
        )
        .unwrap();
        assert_eq!(stabilizer_dimension(&c), 1);
    }

    #[test]
    fn points_on_a_smooth_conic_have_finite_stabilizer() {
        let pts: Vec<Vec<i64>> = (0..6).map(|t| vec![1, t, t * t]).collect();
        let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
        let c = PointConfiguration::from_i64(2, &refs).unwrap();
        assert_eq!(stabilizer_dimension(&c), 0);
    }

    #[test]
    fn single_point_stabilizer_is_parabolic() {
        // Matrices fixing (1:0:0): first column is a multiple of e1 -> 9 - 2 - 1 = 6.
        let c = PointConfiguration::from_i64(2, &[&[1, 0, 0]]).unwrap();
        assert_eq!(stabilizer_dimension(&c), 6);
    }
}
