//! JSON encodings of polygons and Laurent polynomials.
//!
//! Polygons are `{"vertices": [[x, y], ...]}` in counterclockwise order.
//! Polynomials are `{"terms": [{"e": [i, j], "c": "p/q"}, ...]}` with terms
//! sorted by exponent; integer coefficients are written without a
//! denominator.

use intrinsic_core::polygon::convex_hull;
use intrinsic_core::{LatticePoint, LatticePolygon, LaurentPolynomial, Q};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: [i64; 2],
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

impl From<&LatticePolygon> for PolygonJson {
    fn from(p: &LatticePolygon) -> Self {
        PolygonJson { vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect() }
    }
}

impl PolygonJson {
    /// Hull of the listed points; any point set is accepted.
    pub fn to_polygon(&self) -> Result<LatticePolygon> {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&[x, y]| LatticePoint::new(x, y)).collect();
        Ok(convex_hull(&pts)?)
    }
}

impl From<&LaurentPolynomial> for LaurentJson {
    fn from(f: &LaurentPolynomial) -> Self {
        LaurentJson {
            terms: f.terms().map(|(&(i, j), c)| TermJson { e: [i, j], c: c.to_string() }).collect(),
        }
    }
}

impl LaurentJson {
    pub fn to_polynomial(&self) -> Result<LaurentPolynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c: Q = t.c.trim().parse().map_err(|_| {
                intrinsic_core::Error::RangeError { what: "coefficient", detail: format!("cannot parse {:?}", t.c) }
            })?;
            terms.push(((t.e[0], t.e[1]), c));
        }
        Ok(LaurentPolynomial::from_terms(terms))
    }
}

pub fn polygon_to_string(p: &LatticePolygon) -> String {
    serde_json::to_string(&PolygonJson::from(p)).expect("polygon json")
}

pub fn polygon_from_str(s: &str) -> Result<LatticePolygon> {
    serde_json::from_str::<PolygonJson>(s)?.to_polygon()
}

pub fn polynomial_to_string(f: &LaurentPolynomial) -> String {
    serde_json::to_string(&LaurentJson::from(f)).expect("polynomial json")
}

pub fn polynomial_from_str(s: &str) -> Result<LaurentPolynomial> {
    serde_json::from_str::<LaurentJson>(s)?.to_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use intrinsic_core::num::q_frac;

    #[test]
    fn polygon_round_trip() {
        let p = LatticePolygon::from_coords(&[(0, 0), (2, 1), (1, 2)]);
        let s = polygon_to_string(&p);
        assert_eq!(s, r#"{"vertices":[[0,0],[2,1],[1,2]]}"#);
        assert_eq!(polygon_from_str(&s).unwrap(), p);
    }

    #[test]
    fn polynomial_round_trip() {
        let f = LaurentPolynomial::from_terms([((-1, 2), q_frac(-3, 4)), ((0, 0), q_frac(5, 1))]);
        let s = polynomial_to_string(&f);
        assert_eq!(s, r#"{"terms":[{"e":[-1,2],"c":"-3/4"},{"e":[0,0],"c":"5"}]}"#);
        assert_eq!(polynomial_from_str(&s).unwrap(), f);
    }

    #[test]
    fn bad_coefficient() {
        assert!(polynomial_from_str(r#"{"terms":[{"e":[0,0],"c":"x"}]}"#).is_err());
    }
}
