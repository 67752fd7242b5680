//! The linear system `L(m)` of Laurent polynomials supported on the lattice
//! points of a polygon with all partials of order `< m` vanishing at `(1,1)`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::laurent::{Exponent, LaurentPolynomial};
use crate::linalg::{kernel, primitive_integer_vector, rref};
use crate::num::{falling_factorial, Q, Z};
use crate::polygon::{LatticePoint, LatticePolygon};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub polygon: LatticePolygon,
    pub multiplicity: u32,
    /// Reduced echelon basis, integer coefficients, content one.
    pub basis: Vec<LaurentPolynomial>,
    /// Exponent carrying the leading (positive) coefficient of each basis
    /// element; distinct, which certifies independence.
    pub pivots: Vec<Exponent>,
    pub ambient_points: usize,
    pub conditions: usize,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.ambient_points - self.basis.len()
    }
}

/// Number of conditions `m(m+1)/2`.
pub fn condition_count(m: u32) -> usize {
    (m as usize * (m as usize + 1)) / 2
}

/// Column order used for the basis: exponents in decreasing lexicographic
/// order.
pub fn column_order(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = points.to_vec();
    pts.sort_unstable_by(|a, b| b.cmp(a));
    pts
}

/// Rows indexed by `(a, b)`, `a + b < m`; entry `p^(a) q^(b)` (falling
/// factorials) in the column of `(p, q)`.
pub fn condition_matrix(columns: &[LatticePoint], m: u32) -> Vec<Vec<Z>> {
    let mut rows = Vec::with_capacity(condition_count(m));
    for d in 0..m {
        for a in 0..=d {
            let b = d - a;
            rows.push(
                columns
                    .iter()
                    .map(|w| falling_factorial(w.x, a) * falling_factorial(w.y, b))
                    .collect(),
            );
        }
    }
    rows
}

pub fn compute_system(polygon: &LatticePolygon, m: u32) -> LinearSystem {
    let columns = column_order(&polygon.lattice_points());
    let n = columns.len();
    let mat = condition_matrix(&columns, m);
    let ker = kernel(&mat, n);
    let (red, piv) = rref(&ker, n);
    let basis: Vec<LaurentPolynomial> = red
        .iter()
        .map(|row| {
            let iv = primitive_integer_vector(row);
            LaurentPolynomial::from_terms(
                columns
                    .iter()
                    .zip(iv)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(w, c)| ((w.x, w.y), Q::from_integer(c))),
            )
        })
        .collect();
    LinearSystem {
        polygon: polygon.clone(),
        multiplicity: m,
        basis,
        pivots: piv.iter().map(|&c| (columns[c].x, columns[c].y)).collect(),
        ambient_points: n,
        conditions: condition_count(m),
    }
}

/// `|polygon ∩ Z^2| > m(m+1)/2`.
pub fn is_expected(polygon: &LatticePolygon, m: u32) -> bool {
    polygon.lattice_counts().total as usize > condition_count(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[((i64, i64), i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(terms)
    }

    #[test]
    fn unit_segment() {
        let seg = LatticePolygon::from_coords(&[(0, 0), (1, 0)]);
        let sys = compute_system(&seg, 1);
        assert_eq!(sys.basis, alloc::vec![lp(&[((1, 0), 1), ((0, 0), -1)])]);
        assert!(is_expected(&seg, 1));
    }

    #[test]
    fn smallest_triangle() {
        let tri = LatticePolygon::from_coords(&[(0, 0), (2, 1), (1, 2)]);
        let sys = compute_system(&tri, 2);
        assert_eq!(
            sys.basis,
            alloc::vec![lp(&[((0, 0), 1), ((2, 1), 1), ((1, 2), 1), ((1, 1), -3)])]
        );
        assert_eq!(sys.conditions, 3);
        assert_eq!(sys.ambient_points, 4);
    }

    #[test]
    fn multiplicity_zero_is_everything() {
        let sq = LatticePolygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let sys = compute_system(&sq, 0);
        assert_eq!(sys.dimension(), 4);
        assert!(sys.basis.iter().all(|b| b.is_monomial()));
    }

    #[test]
    fn negative_exponents() {
        let tri = LatticePolygon::from_coords(&[(-3, -2), (-1, -1), (-2, 0)]);
        let sys = compute_system(&tri, 2);
        assert_eq!(sys.dimension(), 1);
        assert_eq!(sys.basis[0].multiplicity_at_identity(), Ok(2));
    }

    #[test]
    fn basis_vanishes_to_order() {
        let p = LatticePolygon::from_coords(&[(0, 0), (4, 1), (2, 4), (1, 3)]);
        for m in 1..5 {
            let sys = compute_system(&p, m);
            assert!(sys.dimension() + condition_count(m) >= sys.ambient_points);
            for b in &sys.basis {
                assert!(b.multiplicity_at_identity().unwrap() >= m);
            }
        }
    }
}
