use alloc::vec;
use alloc::vec::Vec;

use super::{convex_hull, LatticePoint, LatticePolygon};
use crate::error::{Error, Result};
use crate::num::{q_int, Q};

/// Default cap on the number of edge splittings examined by
/// [`LatticePolygon::minkowski_decompositions`].
pub const DEFAULT_DECOMPOSITION_LIMIT: u64 = 1 << 22;

impl LatticePolygon {
    pub fn minkowski_sum(&self, other: &LatticePolygon) -> LatticePolygon {
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for &a in &self.vertices {
            for &b in &other.vertices {
                pts.push(a + b);
            }
        }
        convex_hull(&pts).expect("nonempty")
    }

    /// All nontrivial decompositions `self = A + B` into lattice polygons,
    /// each unordered pair reported once, with `A + B` equal to `self`
    /// exactly (not only up to translation).
    ///
    /// Each boundary edge splits as `g = c + (g - c)` primitive steps; a
    /// choice of `c` per edge gives a summand iff the chosen steps close up.
    pub fn minkowski_decompositions(&self, limit: u64) -> Result<Vec<(LatticePolygon, LatticePolygon)>> {
        let edges: Vec<(LatticePoint, i64)> =
            self.edges().into_iter().map(|(_, e)| (e.primitive(), e.lattice_length())).collect();
        if edges.is_empty() {
            return Ok(Vec::new());
        }
        let mut work: u64 = 1;
        for &(_, g) in &edges {
            work = work.saturating_mul(g as u64 + 1);
        }
        if work > limit {
            return Err(Error::DecompositionLimit(limit));
        }

        let mut out = Vec::new();
        let mut choice = vec![0i64; edges.len()];
        search(&edges, 0, LatticePoint::ORIGIN, &mut choice, &mut |c| {
            let full: Vec<i64> = edges.iter().map(|e| e.1).collect();
            let rest: Vec<i64> = full.iter().zip(c).map(|(g, ci)| g - ci).collect();
            let trivial = c.iter().all(|&x| x == 0) || rest.iter().all(|&x| x == 0);
            if trivial || c > rest.as_slice() {
                return;
            }
            let a = walk(&edges, c, self.vertices[0]);
            let b = walk(&edges, &rest, LatticePoint::ORIGIN);
            out.push((a, b));
        });
        Ok(out)
    }
}

fn search(
    edges: &[(LatticePoint, i64)],
    i: usize,
    sum: LatticePoint,
    choice: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if i == edges.len() {
        if sum == LatticePoint::ORIGIN {
            emit(choice);
        }
        return;
    }
    let (u, g) = edges[i];
    for c in 0..=g {
        choice[i] = c;
        search(edges, i + 1, sum + u.scale(c), choice, emit);
    }
    choice[i] = 0;
}

fn walk(edges: &[(LatticePoint, i64)], counts: &[i64], start: LatticePoint) -> LatticePolygon {
    let mut pts = vec![start];
    let mut cur = start;
    for (&(u, _), &c) in edges.iter().zip(counts) {
        cur = cur + u.scale(c);
        pts.push(cur);
    }
    convex_hull(&pts).expect("nonempty")
}

/// `(vol(A + B) - vol(A) - vol(B)) / 2`.
pub fn mixed_volume(a: &LatticePolygon, b: &LatticePolygon) -> Q {
    let s = a.minkowski_sum(b).normalized_volume() - a.normalized_volume() - b.normalized_volume();
    q_int(s) / q_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn red_pieces() -> (LatticePolygon, LatticePolygon, LatticePolygon) {
        (
            LatticePolygon::from_coords(&[(0, 0), (3, 1), (7, 3), (7, 4), (6, 5), (3, 7), (2, 5)]),
            LatticePolygon::from_coords(&[(0, 0), (2, 1), (1, 2)]),
            LatticePolygon::from_coords(&[(0, 0), (3, 1), (5, 2), (5, 3), (2, 5)]),
        )
    }

    #[test]
    fn sum_with_point_translates() {
        let (big, _, _) = red_pieces();
        let pt = LatticePolygon::from_coords(&[(2, -1)]);
        assert_eq!(big.minkowski_sum(&pt), big.translate(LatticePoint::new(2, -1)));
    }

    #[test]
    fn segments_sum_to_square() {
        let h = LatticePolygon::from_coords(&[(0, 0), (1, 0)]);
        let v = LatticePolygon::from_coords(&[(0, 0), (0, 1)]);
        assert_eq!(h.minkowski_sum(&v), LatticePolygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(mixed_volume(&h, &v), q_int(1));
    }

    #[test]
    fn red_decomposition() {
        let (big, d1, d2) = red_pieces();
        assert_eq!(d1.minkowski_sum(&d2), big);
        assert_eq!(big.normalized_volume(), 48);
        assert_eq!(d2.normalized_volume(), 25);
        assert_eq!(mixed_volume(&d1, &d2), q_int(10));
        let decs = big.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT).unwrap();
        assert!(decs.iter().any(|(a, b)| {
            (a.equals_up_to_translation(&d1) && b.equals_up_to_translation(&d2))
                || (a.equals_up_to_translation(&d2) && b.equals_up_to_translation(&d1))
        }));
        for (a, b) in &decs {
            assert_eq!(&a.minkowski_sum(b), &big);
        }
    }

    #[test]
    fn indecomposables() {
        let seg = LatticePolygon::from_coords(&[(0, 0), (1, 0)]);
        assert!(seg.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT).unwrap().is_empty());
        let tri = LatticePolygon::from_coords(&[(0, 0), (2, 1), (1, 2)]);
        assert!(tri.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT).unwrap().is_empty());
    }

    #[test]
    fn segment_and_square_decompose() {
        let seg = LatticePolygon::from_coords(&[(0, 0), (4, 2)]);
        let decs = seg.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT).unwrap();
        assert_eq!(decs.len(), 1);
        let sq = LatticePolygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(sq.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn limit_is_enforced() {
        let big = LatticePolygon::from_coords(&[(0, 0), (40, 0), (40, 40), (0, 40)]);
        assert_eq!(big.minkowski_decompositions(1000), Err(Error::DecompositionLimit(1000)));
    }

    #[test]
    fn mixed_volume_diagonal() {
        let sq = LatticePolygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(mixed_volume(&sq, &sq), q_int(2));
    }
}
