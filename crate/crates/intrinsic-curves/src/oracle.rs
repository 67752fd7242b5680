//! Irreducibility annotations.
//!
//! A JSON list of `{"polygon": {...}, "m": 2, "verdict": "reducible",
//! "factors": [{...}, ...]}`. Verdicts are `irreducible` or `reducible`;
//! reducible entries must list factors whose product is, up to a unit, the
//! unique member of `L(m)` for that polygon. This is checked on load.

use std::path::Path;

use intrinsic_core::classify::{OracleTable, OracleVerdict};
use intrinsic_core::laurent::verify_factorization;
use intrinsic_core::linsys::compute_system;
use intrinsic_core::LatticePolygon;
use serde::{Deserialize, Serialize};

use crate::codec::{LaurentJson, PolygonJson};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAnnotation {
    pub polygon: PolygonJson,
    pub m: u32,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<LaurentJson>>,
}

fn check(index: usize, a: &OracleAnnotation) -> Result<(LatticePolygon, OracleVerdict)> {
    let bad = |msg: String| Error::Oracle { index, msg };
    let polygon = a.polygon.to_polygon()?;
    match a.verdict {
        Verdict::Irreducible => {
            if a.factors.is_some() {
                return Err(bad("irreducible entry lists factors".into()));
            }
            Ok((polygon, OracleVerdict::Irreducible))
        }
        Verdict::Reducible => {
            let factors = a
                .factors
                .as_ref()
                .ok_or_else(|| bad("reducible entry without factors".into()))?
                .iter()
                .map(LaurentJson::to_polynomial)
                .collect::<Result<Vec<_>>>()?;
            let sys = compute_system(&polygon, a.m);
            if sys.dimension() != 1 {
                return Err(bad(format!("L({}) has dimension {}, not 1", a.m, sys.dimension())));
            }
            if !verify_factorization(&sys.basis[0], &factors) {
                return Err(bad(format!("factors do not multiply to {}", sys.basis[0])));
            }
            Ok((polygon, OracleVerdict::Reducible(factors)))
        }
    }
}

pub fn parse_oracle(json: &str) -> Result<OracleTable> {
    let entries: Vec<OracleAnnotation> = serde_json::from_str(json)?;
    let mut table = OracleTable::default();
    for (i, a) in entries.iter().enumerate() {
        let (p, v) = check(i, a)?;
        table.insert(&p, a.m, v);
    }
    Ok(table)
}

pub fn load_oracle(path: impl AsRef<Path>) -> Result<OracleTable> {
    let path = path.as_ref();
    let s = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_oracle(&s)
}
