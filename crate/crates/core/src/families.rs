//! The five infinite families of intrinsic curves: polygons,
//! parametrizations and end-to-end checks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, ToPrimitive};

use crate::classify::numeric_invariants;
use crate::error::{Error, Hypothesis, Result};
use crate::num::{q_frac, q_int, Q};
use crate::polygon::LatticePolygon;
use crate::resultant::{implicitize, ord_profile, Normalization, OrdPoint};
use crate::univariate::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::I, Family::II, Family::III, Family::IV, Family::V];

    /// Smallest admissible `m`.
    pub fn min_m(self) -> u32 {
        match self {
            Family::I => 2,
            Family::II | Family::IV => 4,
            Family::III => 8,
            Family::V => 6,
        }
    }

    pub fn even_only(self) -> bool {
        matches!(self, Family::III | Family::V)
    }

    /// `(C^2, genus)` from the table.
    pub fn table_values(self) -> (i64, i64) {
        match self {
            Family::I | Family::II => (-1, 0),
            Family::III => (-2, 0),
            Family::IV => (0, 0),
            Family::V => (0, 1),
        }
    }

    /// Admissible `m` in `[lo, hi]`.
    pub fn range(self, hi: u32) -> impl Iterator<Item = u32> {
        let step = if self.even_only() { 2 } else { 1 };
        (self.min_m()..=hi).step_by(step)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
            Family::V => "V",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Family::I,
            "II" | "2" => Family::II,
            "III" | "3" => Family::III,
            "IV" | "4" => Family::IV,
            "V" | "5" => Family::V,
            _ => return Err(Error::RangeError { what: "family", detail: String::from(s) }),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
}

impl FamilySpec {
    pub fn new(family: Family, m: u32) -> Result<Self> {
        if m < family.min_m() || (family.even_only() && m % 2 == 1) {
            return Err(Error::RangeError {
                what: "m",
                detail: format!("{} is not admissible for family {}", m, family),
            });
        }
        Ok(FamilySpec { family, m })
    }
}

pub fn family_polygon(spec: FamilySpec) -> LatticePolygon {
    let m = spec.m as i64;
    let v: Vec<(i64, i64)> = match spec.family {
        Family::I => [(0, 0), (m, 1), (1, m)].to_vec(),
        Family::II => [(0, 0), (m - 3, 0), (m, 1), (m - 1, m), (m - 2, m - 1)].to_vec(),
        Family::III => [
            (0, 0),
            (0, 1),
            (2, m),
            (m - 4, m),
            (m - 1, m - 1),
            (m, m - 2),
            (m - 1, m - 3),
        ]
        .to_vec(),
        Family::IV => [(0, 0), (m - 2, 0), (m, 1), (m - 1, m), (m - 2, m - 1)].to_vec(),
        Family::V => [(0, 0), (m - 4, 0), (m, 1), (m - 2, m), (m - 3, m - 1)].to_vec(),
    };
    LatticePolygon::from_coords(&v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub self_intersection: i64,
    pub genus: i64,
    pub lattice_width: i64,
}

/// Recomputed from the polygon, not read off the table.
pub fn family_invariants(spec: FamilySpec) -> FamilyInvariants {
    let poly = family_polygon(spec);
    let pair = numeric_invariants(&poly, spec.m).expect("m >= 2");
    assert!(pair.arithmetic_genus.is_integer());
    FamilyInvariants {
        self_intersection: pair.self_intersection,
        genus: pair.arithmetic_genus.to_integer().to_i64().expect("fits"),
        lattice_width: poly.lattice_width().0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub f1: UniPoly,
    pub f2: UniPoly,
    pub f3: UniPoly,
    pub f4: UniPoly,
}

impl Parametrization {
    /// Completes with `f4 = f1 - f2 + f3`.
    pub fn from_three(f1: UniPoly, f2: UniPoly, f3: UniPoly) -> Self {
        let f4 = &(&f1 - &f2) + &f3;
        Parametrization { f1, f2, f3, f4 }
    }
}

fn t_minus(c: Q) -> UniPoly {
    &UniPoly::t() - &UniPoly::constant(c)
}

fn powers(lo: usize, hi: usize, coeff: impl Fn(usize) -> Q) -> UniPoly {
    (lo..=hi).fold(UniPoly::zero(), |acc, i| &acc + &UniPoly::monomial(coeff(i), i))
}

pub fn family_parametrization(spec: FamilySpec) -> Result<Parametrization> {
    let m = spec.m as usize;
    let mi = spec.m as i64;
    let t = UniPoly::t();
    let one = || Q::one();
    let tm1 = t_minus(one());
    let (f1, f2, f3) = match spec.family {
        Family::I => (
            UniPoly::constant(q_int(-1)),
            powers(1, m, |_| one()),
            UniPoly::monomial(one(), m),
        ),
        Family::II => {
            let f1 = UniPoly::from_i64(&[-(mi - 2), mi - 1]);
            let f2 = -&(&tm1 * &UniPoly::monomial(one(), m - 1));
            let inner = &UniPoly::monomial(one(), m - 3) + &powers(0, m - 4, |i| q_int(mi - 2 - i as i64));
            let f3 = -&(&tm1.pow(3) * &inner);
            (f1, f2, f3)
        }
        Family::III => {
            let k = mi / 2;
            let a = q_frac(k - 1, k - 2);
            let a2 = &a * &a;
            let f1 = tm1.scale(&num_traits::pow(a.clone(), (2 * k - 2) as usize));
            let quad = &(&t * &t) - &UniPoly::constant(a2.clone());
            let f2 = (&(&UniPoly::monomial(one(), (2 * k - 3) as usize) * &t_minus(a2.clone())) * &quad)
                .scale(&a2.recip());
            let f3 = (&UniPoly::monomial(one(), (2 * k - 1) as usize) * &t_minus(a2.clone())).scale(&a2.recip());
            (f1, f2, f3)
        }
        Family::IV => {
            let f1 = UniPoly::from_i64(&[-1, 2]);
            let f2 = &UniPoly::from_i64(&[1, -1]) * &UniPoly::monomial(one(), m - 1);
            let inner = &powers(1, m - 2, |_| one()) - &UniPoly::one();
            let f3 = -&(&tm1.pow(2) * &inner);
            (f1, f2, f3)
        }
        Family::V => return Err(Error::NoParametrization),
    };
    Ok(Parametrization::from_three(f1, f2, f3))
}

/// Checks the hypotheses of the multiplicity lemma and returns
/// `m = deg(f1 - f2)`.
pub fn verify_multiplicity_lemma(p: &Parametrization) -> Result<u32> {
    if !p.f1.is_coprime(&p.f2) {
        return Err(Error::HypothesisFailure(Hypothesis::Coprime));
    }
    let d12 = &p.f1 - &p.f2;
    if d12 != &p.f4 - &p.f3 {
        return Err(Error::HypothesisFailure(Hypothesis::DifferenceIdentity));
    }
    let max = [&p.f1, &p.f2, &p.f3, &p.f4].iter().filter_map(|f| f.degree()).max();
    match d12.degree() {
        Some(d) if Some(d) == max => Ok(d as u32),
        _ => Err(Error::HypothesisFailure(Hypothesis::DegreeOfDifference)),
    }
}

/// Default ceiling on `m` for resultant-based checks.
pub const DEFAULT_RESULTANT_BUDGET: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub polygon: LatticePolygon,
    pub implicit_newton_polygon: LatticePolygon,
    pub polygon_matches: bool,
    pub lemma_multiplicity: u32,
    pub multiplicity: u32,
    pub multiplicity_matches: bool,
    pub invariants: FamilyInvariants,
    pub invariants_match: bool,
    pub ord_zero: Option<(i64, i64)>,
    pub ord_infinity: Option<(i64, i64)>,
    pub ord_matches: Option<bool>,
    pub normalization: Normalization,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.polygon_matches
            && self.multiplicity_matches
            && self.invariants_match
            && self.ord_matches.unwrap_or(true)
    }
}

pub fn verify_family_end_to_end(spec: FamilySpec, budget: u32) -> Result<FamilyReport> {
    if spec.m > budget {
        return Err(Error::RangeError {
            what: "m",
            detail: format!("{} exceeds the resultant budget {}", spec.m, budget),
        });
    }
    let p = family_parametrization(spec)?;
    let lemma_multiplicity = verify_multiplicity_lemma(&p)?;
    let imp = implicitize(&p.f1, &p.f2, &p.f3, &p.f4)?;
    let polygon = family_polygon(spec);
    let np = imp.equation.newton_polygon()?;
    let multiplicity = imp.equation.multiplicity_at_identity()?;
    let invariants = family_invariants(spec);
    let (c2, g) = spec.family.table_values();
    let mi = spec.m as i64;
    let (ord_zero, ord_infinity, ord_matches) = if spec.family == Family::I {
        let z = ord_profile(&p.f1, &p.f2, &p.f3, &p.f4, OrdPoint::Zero)?;
        let i = ord_profile(&p.f1, &p.f2, &p.f3, &p.f4, OrdPoint::Infinity)?;
        (Some(z), Some(i), Some(z == (-1, mi) && i == (mi, -1)))
    } else {
        (None, None, None)
    };
    Ok(FamilyReport {
        spec,
        polygon_matches: np.equals_up_to_translation(&polygon),
        implicit_newton_polygon: np,
        polygon,
        lemma_multiplicity,
        multiplicity,
        multiplicity_matches: multiplicity == spec.m && lemma_multiplicity == spec.m,
        invariants,
        invariants_match: invariants.self_intersection == c2
            && invariants.genus == g
            && invariants.lattice_width == mi,
        ord_zero,
        ord_infinity,
        ord_matches,
        normalization: imp.normalization,
    })
}
