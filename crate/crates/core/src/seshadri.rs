//! Bounds for the Seshadri constant of toric pairs at the general point.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{family_polygon, Family, FamilySpec};
use crate::linsys::{compute_system, is_expected};
use crate::num::{q_frac, q_int, Q};
use crate::polygon::LatticePolygon;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `eps <= lw`
    WidthBound(Q),
    /// `vol > lw^2`, so `eps` is rational.
    InteriorClassRational,
    /// `vol <= m^2` and `L(m)` nonempty: `eps <= vol/m` and `eps` rational.
    VolOverM(Q),
    /// An irreducible member of `L(m)` gives `eps = vol/m`.
    IrreducibleEquality(Q),
    /// A lattice segment of length `lw` inside the polygon gives `eps >= lw`.
    SegmentEquality(Q),
    /// Fiber bound `eps >= m - 1/m` for the family I triangle.
    ItoFamilyI(Q),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriEstimate {
    pub lower: Q,
    pub upper: Q,
    pub exact: Option<Q>,
    pub certificates: Vec<Certificate>,
}

fn require_2d(p: &LatticePolygon) -> Result<()> {
    if p.is_degenerate() {
        Err(Error::DegeneratePolygon)
    } else {
        Ok(())
    }
}

pub fn width_upper_bound(p: &LatticePolygon) -> Result<Q> {
    require_2d(p)?;
    Ok(q_int(p.lattice_width().0))
}

/// Nonemptiness of `L(m)`; expected pairs are nonempty by a dimension count.
pub fn system_nonempty(p: &LatticePolygon, m: u32) -> bool {
    is_expected(p, m) || !compute_system(p, m).is_empty()
}

pub fn rationality_certificates(p: &LatticePolygon, m: Option<u32>) -> Result<Vec<Certificate>> {
    require_2d(p)?;
    let vol = p.normalized_volume();
    let lw = p.lattice_width().0;
    let mut out = Vec::new();
    if vol > lw * lw {
        out.push(Certificate::InteriorClassRational);
    }
    if let Some(m) = m {
        if !system_nonempty(p, m) {
            return Err(Error::EmptySystem);
        }
        let mi = m as i64;
        if vol <= mi * mi {
            out.push(Certificate::VolOverM(q_frac(vol, mi)));
        }
    }
    Ok(out)
}

/// Lattice points `a`, `a + lw * v` in the polygon for a primitive `v`.
pub fn segment_equality(p: &LatticePolygon) -> Result<Option<Q>> {
    require_2d(p)?;
    let lw = p.lattice_width().0;
    let pts = p.lattice_points();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if (*b - *a).lattice_length() >= lw {
                return Ok(Some(q_int(lw)));
            }
        }
    }
    Ok(None)
}

pub fn ito_family_i_lower(m: u32) -> Result<Q> {
    if m < 2 {
        return Err(Error::RangeError { what: "m", detail: String::from("m >= 2 required") });
    }
    let mi = m as i64;
    Ok(q_int(mi) - q_frac(1, mi))
}

/// `min h_i / m_i`.
pub fn component_minimum(components: &[(Q, Q)]) -> Result<Q> {
    if components.iter().any(|(_, m)| !m.is_positive()) {
        return Err(Error::PreconditionFailure(String::from("multiplicities must be positive")));
    }
    components
        .iter()
        .map(|(h, m)| h / m)
        .min()
        .ok_or(Error::EmptyList)
}

pub fn estimate(p: &LatticePolygon, m: u32, irreducible: bool) -> Result<SeshadriEstimate> {
    require_2d(p)?;
    let vol = p.normalized_volume();
    let lw = p.lattice_width().0;
    let mi = m as i64;
    if m == 0 {
        return Err(Error::PreconditionFailure(String::from("m >= 1")));
    }
    if vol > mi * mi {
        return Err(Error::PreconditionFailure(String::from("vol(P) <= m^2")));
    }
    if mi > lw {
        return Err(Error::PreconditionFailure(String::from("m <= lw(P)")));
    }
    if !system_nonempty(p, m) {
        return Err(Error::EmptySystem);
    }
    let upper = q_frac(vol, mi);
    let mut certificates = alloc::vec![
        Certificate::WidthBound(q_int(lw)),
        Certificate::VolOverM(upper.clone()),
    ];
    let mut lower = Q::zero();
    if let Some(s) = segment_equality(p)? {
        certificates.push(Certificate::SegmentEquality(s.clone()));
        lower = lower.max(s);
    }
    if m >= 2 {
        let tri = family_polygon(FamilySpec { family: Family::I, m });
        if p.is_equivalent(&tri) {
            let b = ito_family_i_lower(m)?;
            certificates.push(Certificate::ItoFamilyI(b.clone()));
            lower = lower.max(b);
        }
    }
    let exact = if irreducible {
        certificates.push(Certificate::IrreducibleEquality(upper.clone()));
        lower = lower.max(upper.clone());
        Some(upper.clone())
    } else if lower == upper {
        Some(upper.clone())
    } else {
        None
    };
    Ok(SeshadriEstimate { lower, upper, exact, certificates })
}
