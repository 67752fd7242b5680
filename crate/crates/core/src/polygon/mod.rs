//! Lattice polygons in the plane.
//!
//! A [`LatticePolygon`] stores the exact vertex set of its convex hull in
//! counterclockwise order, starting at the lexicographically smallest vertex.
//! Points and segments are valid (degenerate) polygons with volume zero.

mod canonical;
mod fan;
mod minkowski;
mod width;

pub use canonical::{enumerate_small_polygons, UnimodularMap};
pub use fan::NormalFanRay;
pub use minkowski::{mixed_volume, DEFAULT_DECOMPOSITION_LIMIT};

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::num::gcd_i64;

/// A point (or vector) of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn dot(self, other: LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product.
    pub fn cross(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Lattice length of the vector: gcd of the components.
    pub fn lattice_length(self) -> i64 {
        gcd_i64(self.x, self.y)
    }

    pub fn primitive(self) -> LatticePoint {
        let g = self.lattice_length();
        if g == 0 {
            self
        } else {
            LatticePoint::new(self.x / g, self.y / g)
        }
    }

    pub fn scale(self, k: i64) -> LatticePoint {
        LatticePoint::new(self.x * k, self.y * k)
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn rotate_left(self) -> LatticePoint {
        LatticePoint::new(-self.y, self.x)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Lattice point counts of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCounts {
    pub total: i64,
    pub boundary: i64,
    pub interior: i64,
}

/// Integer-vertex convex polygon, possibly a point or a segment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// Convex hull of a nonempty point set, in canonical storage order.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(LatticePolygon { vertices: pts });
    }
    // Andrew's monotone chain; strict turns drop collinear points.
    let turn = |o: LatticePoint, a: LatticePoint, b: LatticePoint| -> i128 {
        let (a, b) = (a - o, b - o);
        a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
    };
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(LatticePolygon { vertices: hull })
}

impl LatticePolygon {
    /// Hull of the given points. Panics on an empty slice.
    pub fn from_coords(coords: &[(i64, i64)]) -> Self {
        let pts: Vec<LatticePoint> = coords.iter().map(|&c| c.into()).collect();
        convex_hull(&pts).expect("nonempty point list")
    }

    pub fn point(p: LatticePoint) -> Self {
        LatticePolygon { vertices: alloc::vec![p] }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Boundary edges as `(start, edge vector)` in counterclockwise order.
    /// A segment has two opposite edges, a point none.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                (a, b - a)
            })
            .collect()
    }

    /// Twice the Euclidean area.
    pub fn normalized_volume(&self) -> i64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0;
        }
        let twice: i128 = (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
            })
            .sum();
        i64::try_from(twice).expect("volume fits in i64")
    }

    pub fn boundary_count(&self) -> i64 {
        match self.vertices.len() {
            1 => 1,
            2 => (self.vertices[1] - self.vertices[0]).lattice_length() + 1,
            _ => self.edges().iter().map(|(_, e)| e.lattice_length()).sum(),
        }
    }

    /// Total, boundary and interior lattice point counts. The interior count
    /// comes from Pick's identity `vol = 2 i + b - 2`.
    pub fn lattice_counts(&self) -> LatticeCounts {
        let boundary = self.boundary_count();
        let interior = if self.is_degenerate() {
            0
        } else {
            (self.normalized_volume() - boundary + 2) / 2
        };
        LatticeCounts { total: boundary + interior, boundary, interior }
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.len() {
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                (b - a).cross(p - a) == 0 && (p - a).dot(b - a) >= 0 && (p - b).dot(a - b) >= 0
            }
            _ => self.edges().iter().all(|&(s, e)| e.cross(p - s) >= 0),
        }
    }

    /// `(xmin, ymin, xmax, ymax)`.
    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (
            xs.clone().min().unwrap(),
            ys.clone().min().unwrap(),
            xs.max().unwrap(),
            ys.max().unwrap(),
        )
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (x0, y0, x1, y1) = self.bounding_box();
        let mut out = Vec::new();
        if self.is_degenerate() {
            for x in x0..=x1 {
                for y in y0..=y1 {
                    let p = LatticePoint::new(x, y);
                    if self.contains(p) {
                        out.push(p);
                    }
                }
            }
            return out;
        }
        let edges = self.edges();
        for x in x0..=x1 {
            // Intersect the column with every edge half-plane.
            let (mut lo, mut hi) = (y0, y1);
            for &(s, e) in &edges {
                // e.x * (y - s.y) - e.y * (x - s.x) >= 0
                let rhs = e.y * (x - s.x);
                if e.x > 0 {
                    lo = lo.max(s.y + div_ceil(rhs, e.x));
                } else if e.x < 0 {
                    hi = hi.min(s.y + div_floor(rhs, e.x));
                } else if rhs > 0 {
                    lo = hi + 1;
                }
            }
            for y in lo..=hi {
                out.push(LatticePoint::new(x, y));
            }
        }
        out
    }

    pub fn translate(&self, v: LatticePoint) -> LatticePolygon {
        LatticePolygon { vertices: self.vertices.iter().map(|&p| p + v).collect() }
    }

    /// Same polygon after moving the first vertex to the origin.
    pub fn normalize_translation(&self) -> LatticePolygon {
        self.translate(-self.vertices[0])
    }

    pub fn equals_up_to_translation(&self, other: &LatticePolygon) -> bool {
        self.normalize_translation() == other.normalize_translation()
    }

    /// Extremes of `w -> w . dir` over the polygon.
    pub fn support_range(&self, dir: LatticePoint) -> (i64, i64) {
        let vals = self.vertices.iter().map(|v| v.dot(dir));
        (vals.clone().min().unwrap(), vals.max().unwrap())
    }

    /// Width of the polygon along the linear form `dir`.
    pub fn width_in(&self, dir: LatticePoint) -> i64 {
        let (lo, hi) = self.support_range(dir);
        hi - lo
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{},{}", v.x, v.y)?;
        }
        f.write_str("]")
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}
