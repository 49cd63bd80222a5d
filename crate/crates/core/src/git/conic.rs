use super::config::PointConfiguration;
use crate::arith::RationalMatrix;
use crate::error::{Error, Result};

/// Whether some conic, possibly degenerate, passes through every point of a
/// configuration in `P²`: the matrix of degree-two monomials
/// `(x², xy, xz, y², yz, z²)` evaluated at the points has rank below 6.
pub fn lies_on_conic(c: &PointConfiguration) -> Result<bool> {
    if c.d() != 2 {
        return Err(Error::DimensionMismatch(format!("conics live in P^2, got P^{}", c.d())));
    }
    Ok(veronese_matrix(c).rank() < 6)
}

pub(crate) fn veronese_matrix(c: &PointConfiguration) -> RationalMatrix {
    let rows: Vec<_> = c
        .points()
        .iter()
        .map(|p| {
            let (x, y, z) = (&p[0], &p[1], &p[2]);
            vec![x * x, x * y, x * z, y * y, y * z, z * z]
        })
        .collect();
    RationalMatrix::from_rows(&rows).expect("six columns per row")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::git::stratum::Stratum;

    #[test]
    fn moment_curve_points_lie_on_a_conic() {
        let pts: Vec<Vec<i64>> = (0..6).map(|t| vec![1, t, t * t]).collect();
        let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
        assert!(lies_on_conic(&PointConfiguration::from_i64(2, &refs).unwrap()).unwrap());
    }

    #[test]
    fn doubled_vertices_lie_on_a_line_pair() {
        let c = Stratum::I.representative();
        assert!(lies_on_conic(&c).unwrap());
        // the conics through the three vertices are a y z + b x z + c x y: kernel of rank 3
        assert_eq!(veronese_matrix(&c).rank(), 3);
    }

    #[test]
    fn explicit_sextuple_off_any_conic() {
        let c = PointConfiguration::from_i64(
            2,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3], &[1, 3, 2]],
        )
        .unwrap();
        assert_eq!(veronese_matrix(&c).rank(), 6);
        assert!(!lies_on_conic(&c).unwrap());
    }
}
