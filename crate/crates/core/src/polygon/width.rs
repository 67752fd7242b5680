//! Lattice width.
//!
//! The width function `w(v) = max_{p,q} (p - q) . v` is a norm on `R^2` for a
//! two-dimensional polygon, so every direction with `w(v) <= W` lies in the
//! parallelogram `|d1 . v| <= W, |d2 . v| <= W` for any two independent
//! vertex differences `d1, d2`. Taking `W` from the coordinate axes and the
//! pair of differences with the largest determinant gives a small, exhaustive
//! search box.

use super::{LatticePoint, LatticePolygon};
use crate::num::gcd_i64;

/// Directions are identified up to sign: first nonzero coordinate positive.
pub(crate) fn canonical_sign(v: LatticePoint) -> LatticePoint {
    if v.x < 0 || (v.x == 0 && v.y < 0) {
        -v
    } else {
        v
    }
}

/// Tie-break key: smallest `(|a|+|b|, a, b)` wins.
pub(crate) fn direction_key(v: LatticePoint) -> (i64, i64, i64) {
    (v.x.abs() + v.y.abs(), v.x, v.y)
}

impl LatticePolygon {
    /// Lattice width and one minimizing primitive direction.
    pub fn lattice_width(&self) -> (i64, LatticePoint) {
        match self.vertices.len() {
            1 => (0, LatticePoint::new(0, 1)),
            2 => {
                let d = (self.vertices[1] - self.vertices[0]).primitive();
                (0, canonical_sign(d.rotate_left()))
            }
            _ => self.lattice_width_2d(),
        }
    }

    fn lattice_width_2d(&self) -> (i64, LatticePoint) {
        let ex = LatticePoint::new(1, 0);
        let ey = LatticePoint::new(0, 1);
        let bound = self.width_in(ex).min(self.width_in(ey)) as i128;

        let vs = &self.vertices;
        let mut best_pair = (LatticePoint::ORIGIN, LatticePoint::ORIGIN, 0i128);
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let d1 = vs[j] - vs[i];
                for k in 0..vs.len() {
                    for l in k + 1..vs.len() {
                        let d2 = vs[l] - vs[k];
                        let det = (d1.x as i128 * d2.y as i128 - d1.y as i128 * d2.x as i128).abs();
                        if det > best_pair.2 {
                            best_pair = (d1, d2, det);
                        }
                    }
                }
            }
        }
        let (d1, d2, det) = best_pair;
        let ax = (bound * (d1.y.abs() as i128 + d2.y.abs() as i128) / det) as i64;
        let ay = (bound * (d1.x.abs() as i128 + d2.x.abs() as i128) / det) as i64;

        let mut best: Option<(i64, LatticePoint)> = None;
        for a in 0..=ax {
            let b_lo = if a == 0 { 1 } else { -ay };
            for b in b_lo..=ay {
                if gcd_i64(a, b) != 1 {
                    continue;
                }
                let v = LatticePoint::new(a, b);
                let w = self.width_in(v);
                let better = match best {
                    None => true,
                    Some((bw, bv)) => w < bw || (w == bw && direction_key(v) < direction_key(bv)),
                };
                if better {
                    best = Some((w, v));
                }
            }
        }
        best.expect("search box contains the coordinate axes")
    }
}
