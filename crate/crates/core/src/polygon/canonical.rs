//! Normal forms under affine unimodular equivalence.
//!
//! Every (vertex, incident edge) flag of a two-dimensional polygon determines
//! a unique affine map sending the vertex to the origin, the edge direction to
//! `(1,0)`, the polygon into the upper half-plane, and the other edge at the
//! vertex into the strip `0 <= x < y`. The normal form is the smallest image
//! over all flags. Equivalent polygons have the same set of flag images, so
//! they share a normal form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{convex_hull, LatticePoint, LatticePolygon};
use crate::num::ext_gcd;

/// `w -> linear * w + translation` with `det(linear) = +-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    pub linear: [[i64; 2]; 2],
    pub translation: LatticePoint,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap =
        UnimodularMap { linear: [[1, 0], [0, 1]], translation: LatticePoint::ORIGIN };

    /// `None` unless `|det(linear)| = 1`.
    pub fn new(linear: [[i64; 2]; 2], translation: LatticePoint) -> Option<Self> {
        let m = UnimodularMap { linear, translation };
        (m.determinant().abs() == 1).then_some(m)
    }

    pub fn determinant(&self) -> i64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply_linear(&self, w: LatticePoint) -> LatticePoint {
        let l = &self.linear;
        LatticePoint::new(l[0][0] * w.x + l[0][1] * w.y, l[1][0] * w.x + l[1][1] * w.y)
    }

    pub fn apply(&self, w: LatticePoint) -> LatticePoint {
        self.apply_linear(w) + self.translation
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let a = &self.linear;
        let b = &other.linear;
        let linear = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        UnimodularMap { linear, translation: self.apply(other.translation) }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let d = self.determinant();
        let l = &self.linear;
        let inv = [[l[1][1] * d, -l[0][1] * d], [-l[1][0] * d, l[0][0] * d]];
        let lin = UnimodularMap { linear: inv, translation: LatticePoint::ORIGIN };
        UnimodularMap { linear: inv, translation: -lin.apply_linear(self.translation) }
    }
}

impl LatticePolygon {
    pub fn map(&self, g: &UnimodularMap) -> LatticePolygon {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&v| g.apply(v)).collect();
        convex_hull(&pts).expect("image of a nonempty polygon")
    }

    /// Deterministic representative of the unimodular equivalence class,
    /// together with a map sending `self` onto it.
    pub fn canonical_form(&self) -> (LatticePolygon, UnimodularMap) {
        let vs = &self.vertices;
        if vs.len() == 1 {
            let g = UnimodularMap { linear: [[1, 0], [0, 1]], translation: -vs[0] };
            return (self.map(&g), g);
        }
        let n = vs.len();
        let mut best: Option<(LatticePolygon, UnimodularMap)> = None;
        for i in 0..n {
            let next = vs[(i + 1) % n];
            let prev = vs[(i + n - 1) % n];
            for (edge_end, other_end, flip) in [(next, prev, false), (prev, next, true)] {
                let g = flag_map(vs[i], edge_end - vs[i], other_end - vs[i], flip, n == 2);
                let image = self.map(&g);
                if best.as_ref().map_or(true, |(b, _)| image.vertices < b.vertices) {
                    best = Some((image, g));
                }
            }
        }
        best.expect("polygon has a vertex")
    }

    pub fn is_equivalent(&self, other: &LatticePolygon) -> bool {
        self.vertices.len() == other.vertices.len()
            && self.normalized_volume() == other.normalized_volume()
            && self.canonical_form().0 == other.canonical_form().0
    }
}

fn flag_map(
    origin: LatticePoint,
    edge: LatticePoint,
    other: LatticePoint,
    flip: bool,
    segment: bool,
) -> UnimodularMap {
    let e = edge.primitive();
    let (_, s, t) = ext_gcd(e.x, e.y);
    // [[s, t], [-e.y, e.x]] sends e to (1, 0) and has determinant 1.
    let mut linear = [[s, t], [-e.y, e.x]];
    if flip {
        linear[1] = [-linear[1][0], -linear[1][1]];
    }
    let mut g = UnimodularMap { linear, translation: LatticePoint::ORIGIN };
    if !segment {
        let o = g.apply_linear(other);
        debug_assert!(o.y > 0);
        // shear (x, y) -> (x + k y, y) placing the other edge in 0 <= x < y
        let k = -o.x.div_euclid(o.y);
        let shear = UnimodularMap { linear: [[1, k], [0, 1]], translation: LatticePoint::ORIGIN };
        g = shear.compose(&g);
    } else {
        // Any shear fixes a segment on the x-axis; pick the identity.
        let _ = other;
    }
    g.translation = -g.apply_linear(origin);
    g
}

/// Hulls of all nonempty subsets of `[0, side]^2` with normalized volume at
/// most `max_volume`, one per equivalence class, sorted by normal form.
///
/// Subsets are taken over the point set lazily: each hull is grown from
/// smaller hulls, so the search visits every polygon of the box once.
pub fn enumerate_small_polygons(side: i64, max_volume: i64) -> Vec<LatticePolygon> {
    let grid: Vec<LatticePoint> = (0..=side)
        .flat_map(|x| (0..=side).map(move |y| LatticePoint::new(x, y)))
        .collect();
    let mut seen: BTreeSet<LatticePolygon> = BTreeSet::new();
    let mut frontier: Vec<LatticePolygon> = Vec::new();
    for &p in &grid {
        let poly = LatticePolygon::point(p);
        if seen.insert(poly.clone()) {
            frontier.push(poly);
        }
    }
    while let Some(poly) = frontier.pop() {
        for &p in &grid {
            if poly.contains(p) {
                continue;
            }
            let mut pts = poly.vertices.clone();
            pts.push(p);
            let grown = convex_hull(&pts).expect("nonempty");
            if grown.normalized_volume() <= max_volume && seen.insert(grown.clone()) {
                frontier.push(grown);
            }
        }
    }
    let classes: BTreeSet<LatticePolygon> = seen.iter().map(|p| p.canonical_form().0).collect();
    classes.into_iter().collect()
}
