use alloc::vec::Vec;

use super::{LatticePoint, LatticePolygon};
use crate::error::{Error, Result};

/// Inward primitive normal of an edge together with the edge's lattice length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalFanRay {
    pub direction: LatticePoint,
    pub edge_lattice_length: i64,
}

impl LatticePolygon {
    /// One ray per edge, in counterclockwise edge order starting at the first
    /// vertex.
    pub fn normal_fan(&self) -> Result<Vec<NormalFanRay>> {
        if self.is_degenerate() {
            return Err(Error::DegeneratePolygon);
        }
        Ok(self
            .edges()
            .into_iter()
            .map(|(_, e)| NormalFanRay {
                direction: e.primitive().rotate_left(),
                edge_lattice_length: e.lattice_length(),
            })
            .collect())
    }

    /// Coefficients `a_i = -min_{w in polygon} w . v_i` of the toric very
    /// ample divisor, in fan order.
    pub fn ample_coefficients(&self) -> Result<Vec<(NormalFanRay, i64)>> {
        Ok(self
            .normal_fan()?
            .into_iter()
            .map(|ray| (ray, -self.support_range(ray.direction).0))
            .collect())
    }
}
