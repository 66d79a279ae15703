//! Exact univariate interpolation over the rationals.

use num_traits::{One, Zero};
use poly_core::Coeff;

/// Coefficients, ascending in degree, of the unique polynomial of degree
/// below `points.len()` through the given `(node, value)` pairs. Nodes must
/// be pairwise distinct.
pub fn lagrange_fit(points: &[(Coeff, Coeff)]) -> Vec<Coeff> {
    let n = points.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![Coeff::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis_i(x) = prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![Coeff::zero(); n];
        basis[0] = Coeff::one();
        let mut deg = 0usize;
        let mut denom = Coeff::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            for k in (0..=deg + 1).rev() {
                let shifted = if k >= 1 { basis[k - 1].clone() } else { Coeff::zero() };
                let scaled = if k <= deg { &basis[k] * xj } else { Coeff::zero() };
                basis[k] = shifted - scaled;
            }
            deg += 1;
            denom *= xi - xj;
        }
        let scale = yi / &denom;
        for (o, b) in out.iter_mut().zip(basis) {
            *o += b * &scale;
        }
    }
    while out.last().is_some_and(Coeff::is_zero) {
        out.pop();
    }
    out
}

/// Horner evaluation of ascending coefficients at `x`.
pub fn eval_poly(coeffs: &[Coeff], x: &Coeff) -> Coeff {
    let mut acc = Coeff::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use poly_core::{coeff_int, coeff_ratio};

    fn int_points(pts: &[(i64, i64)]) -> Vec<(Coeff, Coeff)> {
        pts.iter()
            .map(|&(x, y)| (coeff_int(x), coeff_int(y)))
            .collect()
    }

    #[test]
    fn squares_give_the_square_polynomial() {
        let fit = lagrange_fit(&int_points(&[(1, 1), (2, 4), (3, 9)]));
        assert_eq!(fit, vec![coeff_int(0), coeff_int(0), coeff_int(1)]);
    }

    #[test]
    fn single_point_gives_a_constant() {
        let fit = lagrange_fit(&int_points(&[(5, 7)]));
        assert_eq!(fit, vec![coeff_int(7)]);
        assert!(lagrange_fit(&[]).is_empty());
    }

    #[test]
    fn low_degree_data_drops_trailing_zeros() {
        // Five points on a line fit a degree-1 polynomial, not degree 4.
        let fit = lagrange_fit(&int_points(&[(0, 3), (1, 5), (2, 7), (3, 9), (7, 17)]));
        assert_eq!(fit, vec![coeff_int(3), coeff_int(2)]);
    }

    #[test]
    fn rational_nodes_and_values_stay_exact() {
        let pts = vec![
            (coeff_ratio(1, 2), coeff_ratio(1, 4)),
            (coeff_int(1), coeff_int(1)),
            (coeff_int(2), coeff_int(4)),
        ];
        let fit = lagrange_fit(&pts);
        assert_eq!(fit, vec![coeff_int(0), coeff_int(0), coeff_int(1)]);
    }

    #[test]
    fn held_out_nodes_evaluate_consistently() {
        // Fit x^3 - 2x + 1 through four points, evaluate at two more.
        let f = |x: i64| x * x * x - 2 * x + 1;
        let fit = lagrange_fit(&int_points(&[
            (0, f(0)),
            (1, f(1)),
            (2, f(2)),
            (3, f(3)),
        ]));
        for x in [4i64, -5] {
            assert_eq!(eval_poly(&fit, &coeff_int(x)), coeff_int(f(x)));
        }
    }
}
