//! Numeric invariants of pairs `(polygon, m)` and the classification of
//! intrinsic curves over a polygon dataset.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{irreducibility_with_witness, IrreducibilityCertificate, LaurentPolynomial};
use crate::linsys::{compute_system, condition_count};
use crate::num::{q_frac, q_int, Q};
use crate::polygon::{mixed_volume, LatticePolygon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairTag {
    NumericallyNegative,
    NumericallyNonPositive,
    MinusNPair(i64),
    Expected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntrinsicPair {
    pub polygon: LatticePolygon,
    pub m: u32,
    pub self_intersection: i64,
    pub arithmetic_genus: Q,
    pub tags: Vec<PairTag>,
}

impl IntrinsicPair {
    pub fn has_tag(&self, tag: PairTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn is_expected(&self) -> bool {
        self.has_tag(PairTag::Expected)
    }
}

/// `C^2 = vol - m^2` and `p_a = (vol - b + m - m^2)/2 + 1`, with tags.
pub fn numeric_invariants(polygon: &LatticePolygon, m: u32) -> Result<IntrinsicPair> {
    if m == 0 {
        return Err(Error::RangeError { what: "m", detail: format!("{} < 1", m) });
    }
    let counts = polygon.lattice_counts();
    let vol = polygon.normalized_volume();
    let mi = m as i64;
    let c2 = vol - mi * mi;
    let pa = q_frac(vol - counts.boundary + mi - mi * mi, 2) + q_int(1);
    let mut tags = Vec::new();
    if c2 < 0 {
        tags.push(PairTag::NumericallyNegative);
    }
    if c2 <= 0 {
        tags.push(PairTag::NumericallyNonPositive);
    }
    if c2 < 0 && pa.is_zero() {
        tags.push(PairTag::MinusNPair(-c2));
    }
    if counts.total as usize > condition_count(m) {
        tags.push(PairTag::Expected);
    }
    Ok(IntrinsicPair {
        polygon: polygon.clone(),
        m,
        self_intersection: c2,
        arithmetic_genus: pa,
        tags,
    })
}

/// The three solutions `(b, i)` for expected non-positive pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedCase {
    /// `vol = m^2`, `b = m`
    SquareBoundaryM,
    /// `vol = m^2`, `b = m + 2`
    SquareBoundaryM2,
    /// `vol = m^2 - 1`, `b = m + 1`
    MinusOne,
    NotApplicable,
}

pub fn expected_case(polygon: &LatticePolygon, m: u32) -> ExpectedCase {
    let Ok(pair) = numeric_invariants(polygon, m) else {
        return ExpectedCase::NotApplicable;
    };
    if !pair.is_expected() || pair.self_intersection > 0 || pair.arithmetic_genus.is_negative() {
        return ExpectedCase::NotApplicable;
    }
    let c = polygon.lattice_counts();
    let mi = m as i64;
    let base = (mi * mi - mi) / 2;
    match (c.boundary - mi, c.interior - base) {
        (0, 1) => ExpectedCase::SquareBoundaryM,
        (2, 0) => ExpectedCase::SquareBoundaryM2,
        (1, 0) => ExpectedCase::MinusOne,
        _ => ExpectedCase::NotApplicable,
    }
}

/// `vol(D1, D2) - m1 m2`.
pub fn intersection_product(a: &IntrinsicPair, b: &IntrinsicPair) -> i64 {
    let mv = mixed_volume(&a.polygon, &b.polygon);
    assert!(mv.is_integer(), "mixed volume of lattice polygons is integral");
    let mv: i64 = num_traits::ToPrimitive::to_i64(&mv.to_integer()).expect("fits");
    mv - a.m as i64 * b.m as i64
}

/// Externally supplied verdict on the unique member of `L(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Irreducible,
    Reducible(Vec<LaurentPolynomial>),
}

/// Lookup of annotations; implementations match polygons up to translation.
pub trait IrreducibilityOracle {
    fn verdict(&self, polygon: &LatticePolygon, m: u32) -> Option<&OracleVerdict>;
}

/// The empty oracle.
pub struct NoOracle;

impl IrreducibilityOracle for NoOracle {
    fn verdict(&self, _: &LatticePolygon, _: u32) -> Option<&OracleVerdict> {
        None
    }
}

/// Annotations keyed by translation-normalized polygon and `m`.
#[derive(Debug, Clone, Default)]
pub struct OracleTable {
    entries: BTreeMap<(LatticePolygon, u32), OracleVerdict>,
}

impl OracleTable {
    pub fn insert(&mut self, polygon: &LatticePolygon, m: u32, verdict: OracleVerdict) {
        self.entries.insert((polygon.normalize_translation(), m), verdict);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl IrreducibilityOracle for OracleTable {
    fn verdict(&self, polygon: &LatticePolygon, m: u32) -> Option<&OracleVerdict> {
        self.entries.get(&(polygon.normalize_translation(), m))
    }
}

/// Certificate for `f`, consulting the oracle when the polygon test abstains.
pub fn certify(
    f: &LaurentPolynomial,
    polygon: &LatticePolygon,
    m: u32,
    oracle: &dyn IrreducibilityOracle,
) -> Result<IrreducibilityCertificate> {
    let verdict = oracle.verdict(polygon, m);
    let witness = match verdict {
        Some(OracleVerdict::Reducible(factors)) => Some(factors.as_slice()),
        _ => None,
    };
    let cert = irreducibility_with_witness(f, witness)?;
    if cert == IrreducibilityCertificate::Inconclusive && verdict == Some(&OracleVerdict::Irreducible) {
        return Ok(IrreducibilityCertificate::IrreducibleByOracle);
    }
    Ok(cert)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationHit {
    pub pair: IntrinsicPair,
    pub system_dimension: usize,
    pub unique: bool,
    pub polynomial: LaurentPolynomial,
    pub newton_polygon_equals_input: bool,
    pub irreducibility: IrreducibilityCertificate,
    pub canonical: LatticePolygon,
}

impl ClassificationHit {
    /// Set when irreducibility could not be decided.
    pub fn warning(&self) -> bool {
        self.irreducibility == IrreducibilityCertificate::Inconclusive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyParams {
    pub m_max: u32,
    pub volume_max: i64,
}

/// The `(polygon, m)` jobs passing the volume filters, in input order.
pub fn classification_jobs(polygons: &[LatticePolygon], params: ClassifyParams) -> Vec<(usize, u32)> {
    let mut jobs = Vec::new();
    for (i, p) in polygons.iter().enumerate() {
        let vol = p.normalized_volume();
        if vol > params.volume_max {
            continue;
        }
        for m in 1..=params.m_max {
            if vol - (m as i64) * (m as i64) <= 0 {
                jobs.push((i, m));
            }
        }
    }
    jobs
}

/// Evaluates one job; `Some` iff it is a hit.
pub fn classify_pair(
    polygon: &LatticePolygon,
    m: u32,
    oracle: &dyn IrreducibilityOracle,
) -> Result<Option<ClassificationHit>> {
    let sys = compute_system(polygon, m);
    if sys.dimension() != 1 {
        return Ok(None);
    }
    let f = sys.basis[0].clone();
    let equals = f.newton_polygon()? == *polygon;
    if !equals {
        return Ok(None);
    }
    let cert = certify(&f, polygon, m, oracle)?;
    if cert.is_reducible() {
        return Ok(None);
    }
    Ok(Some(ClassificationHit {
        pair: numeric_invariants(polygon, m)?,
        system_dimension: 1,
        unique: true,
        polynomial: f,
        newton_polygon_equals_input: true,
        irreducibility: cert,
        canonical: polygon.canonical_form().0,
    }))
}

/// Deduplicates hits by `(canonical form, m)`, keeping the first occurrence,
/// and sorts by `(m, canonical form)`.
pub fn merge_hits(hits: impl IntoIterator<Item = ClassificationHit>) -> Vec<ClassificationHit> {
    let mut seen: BTreeMap<(u32, LatticePolygon), ClassificationHit> = BTreeMap::new();
    for h in hits {
        seen.entry((h.pair.m, h.canonical.clone())).or_insert(h);
    }
    seen.into_values().collect()
}

pub fn classify_dataset(
    polygons: &[LatticePolygon],
    params: ClassifyParams,
    oracle: &dyn IrreducibilityOracle,
) -> Result<Vec<ClassificationHit>> {
    if params.m_max == 0 {
        return Err(Error::RangeError { what: "m_max", detail: format!("{} < 1", params.m_max) });
    }
    let mut hits = Vec::new();
    for (i, m) in classification_jobs(polygons, params) {
        if let Some(h) = classify_pair(&polygons[i], m, oracle)? {
            hits.push(h);
        }
    }
    Ok(merge_hits(hits))
}
