//! Divisor classes on the blow-up `X` of the fixed toric surface with rays
//! given by the columns of `P`, in the basis `D_1..D_6, E`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::classify::{numeric_invariants, PairTag};
use crate::error::{Error, Result};
use crate::linalg::in_row_lattice;
use crate::num::{q_frac, q_int, Q, Z};
use crate::polygon::LatticePolygon;
use crate::univariate::UniPoly;

pub const RANK: usize = 7;

/// Coefficients over `(D_1, ..., D_6, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass(pub [i64; RANK]);

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass([0; RANK]);

    pub fn basis(i: usize) -> Self {
        let mut c = [0; RANK];
        c[i] = 1;
        DivisorClass(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(other.0) {
            *x += y;
        }
        DivisorClass(c)
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass(self.0.map(|x| x * k))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }
}

/// The rays `v_1..v_6` as rows `x` and `y`.
pub const P: [[i64; 6]; 2] = [[-1, -2, -1, -2, 5, 1], [2, 3, 1, -5, -1, 0]];

pub const C: DivisorClass = DivisorClass([0, 1, 2, 32, 1, 0, -6]);
pub const C1: DivisorClass = DivisorClass([0, 0, 0, 5, 1, 0, -1]);
pub const C2: DivisorClass = DivisorClass([0, 0, 0, 0, 5, 1, -1]);
pub const K: DivisorClass = DivisorClass([-1, -1, -1, -1, -1, -1, 1]);
pub const E: DivisorClass = DivisorClass([0, 0, 0, 0, 0, 0, 1]);

const GRAM: [[(i64, i64); RANK]; RANK] = [
    [(-3, 2), (1, 1), (0, 1), (0, 1), (0, 1), (1, 2), (0, 1)],
    [(1, 1), (-1, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
    [(0, 1), (1, 1), (-16, 7), (1, 7), (0, 1), (0, 1), (0, 1)],
    [(0, 1), (0, 1), (1, 7), (4, 189), (1, 27), (0, 1), (0, 1)],
    [(0, 1), (0, 1), (0, 1), (1, 27), (-5, 27), (1, 1), (0, 1)],
    [(1, 2), (0, 1), (0, 1), (0, 1), (1, 1), (-9, 2), (0, 1)],
    [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 1)],
];

pub fn gram() -> Vec<Vec<Q>> {
    GRAM.iter().map(|r| r.iter().map(|&(n, d)| q_frac(n, d)).collect()).collect()
}

/// Rows of `P` extended by zero in the `E` slot: classes of principal
/// divisors.
pub fn relations() -> [DivisorClass; 2] {
    let row = |r: [i64; 6]| DivisorClass([r[0], r[1], r[2], r[3], r[4], r[5], 0]);
    [row(P[0]), row(P[1])]
}

pub fn pair(a: &DivisorClass, b: &DivisorClass) -> Q {
    let g = gram();
    let mut s = Q::zero();
    for i in 0..RANK {
        if a.0[i] == 0 {
            continue;
        }
        for j in 0..RANK {
            if b.0[j] != 0 {
                s += &g[i][j] * q_int(a.0[i] * b.0[j]);
            }
        }
    }
    s
}

pub fn gram_is_symmetric() -> bool {
    let g = gram();
    (0..RANK).all(|i| (0..RANK).all(|j| g[i][j] == g[j][i]))
}

/// Both relation rows pair to zero with every basis class.
pub fn relations_numerically_trivial() -> bool {
    relations()
        .iter()
        .all(|r| (0..RANK).all(|i| pair(r, &DivisorClass::basis(i)).is_zero()))
}

/// Integer combination of the relation rows.
pub fn is_principal(a: &DivisorClass) -> bool {
    let rows: Vec<Vec<Z>> = relations().iter().map(|r| r.0.iter().map(|&x| Z::from(x)).collect()).collect();
    let v: Vec<Z> = a.0.iter().map(|&x| Z::from(x)).collect();
    in_row_lattice(&rows, &v)
}

/// `K + C - a C1 - b C2`.
pub fn kxc_class(a: i64, b: i64) -> DivisorClass {
    K.add(&C).sub(&C1.scale(a)).sub(&C2.scale(b))
}

pub fn kxc_decomposition_check() -> bool {
    is_principal(&kxc_class(3, 2))
}

/// Coefficients of `E_k` as polynomials `[c0, c1, c2]` in `k`.
const EK: [[i64; 3]; RANK] = [
    [0, 0, 0],
    [0, 0, 0],
    [-1, 0, 7],
    [-9, -49, 161],
    [9, -53, 70],
    [2, -12, 14],
    [0, 19, -42],
];

pub fn e_k_class(k: i64) -> Result<DivisorClass> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(DivisorClass(EK.map(|[a, b, c]| a + b * k + c * k * k)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkReport {
    pub k: i64,
    pub class: DivisorClass,
    pub self_intersection: Q,
    pub dot_k: Q,
    pub dot_c1: Q,
    pub dot_c2: Q,
    /// `E_k . D_i` is an integer for every `i`.
    pub integral: bool,
}

impl EkReport {
    pub fn passed(&self) -> bool {
        let m1 = -Q::one();
        self.self_intersection == m1
            && self.dot_k == m1
            && self.dot_c1.is_zero()
            && self.dot_c2.is_zero()
            && self.integral
    }
}

pub fn verify_ek(k: i64) -> Result<EkReport> {
    let e = e_k_class(k)?;
    Ok(EkReport {
        k,
        class: e,
        self_intersection: pair(&e, &e),
        dot_k: pair(&e, &K),
        dot_c1: pair(&e, &C1),
        dot_c2: pair(&e, &C2),
        integral: (0..6).all(|i| pair(&e, &DivisorClass::basis(i)).is_integer()),
    })
}

fn const_poly(c: i64) -> UniPoly {
    UniPoly::constant(q_int(c))
}

fn ek_symbolic() -> Vec<UniPoly> {
    EK.iter().map(|c| UniPoly::from_i64(c)).collect()
}

fn pair_symbolic(a: &[UniPoly], b: &[UniPoly]) -> UniPoly {
    let g = gram();
    let mut s = UniPoly::zero();
    for i in 0..RANK {
        for j in 0..RANK {
            s = &s + &(&a[i] * &b[j]).scale(&g[i][j]);
        }
    }
    s
}

/// The four `E_k` identities as polynomial identities in `k`.
pub fn verify_ek_symbolic() -> bool {
    let e = ek_symbolic();
    let lift = |c: &DivisorClass| c.0.iter().map(|&x| const_poly(x)).collect::<Vec<_>>();
    let m1 = const_poly(-1);
    pair_symbolic(&e, &e) == m1
        && pair_symbolic(&e, &lift(&K)) == m1
        && pair_symbolic(&e, &lift(&C1)).is_zero()
        && pair_symbolic(&e, &lift(&C2)).is_zero()
}

pub fn rr_m(k: i64) -> i64 {
    42 * k * k - 19 * k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrReport {
    pub k: i64,
    pub m: i64,
    pub volume: i64,
    pub boundary: i64,
    pub lattice_width: i64,
    pub minus_one_pair: bool,
}

impl RrReport {
    pub fn passed(&self) -> bool {
        let m = self.m;
        self.volume == m * m - 1
            && self.boundary == m + 1
            && self.lattice_width == m
            && self.minus_one_pair
    }
}

pub fn rr_polygon(k: i64) -> Result<(LatticePolygon, RrReport)> {
    if k < 1 {
        return Err(Error::RangeError { what: "k", detail: format!("{} < 1", k) });
    }
    let k2 = k * k;
    let cols = [
        (0, 0),
        (0, 7 * k2 + k),
        (7 * k2 - 4 * k, 42 * k2 - 19 * k),
        (14 * k2 - 12 * k + 2, 7 * k2 - 6 * k + 1),
        (35 * k2 - 12 * k - 1, 21 * k2 - 6 * k - 1),
        (42 * k2 - 19 * k, 28 * k2 - 13 * k),
    ];
    let poly = LatticePolygon::from_coords(&cols);
    let m = rr_m(k);
    let pair = numeric_invariants(&poly, m as u32)?;
    let report = RrReport {
        k,
        m,
        volume: poly.normalized_volume(),
        boundary: poly.boundary_count(),
        lattice_width: poly.lattice_width().0,
        minus_one_pair: pair.has_tag(PairTag::MinusNPair(1)),
    };
    Ok((poly, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_basics() {
        assert!(gram_is_symmetric());
        assert!(relations_numerically_trivial());
        assert_eq!(pair(&E, &E), q_int(-1));
        assert_eq!(pair(&C, &C), q_int(0));
        assert_eq!(pair(&C1, &C2), q_int(0));
        assert_eq!(pair(&C, &C1), q_int(0));
        assert_eq!(pair(&C, &C2), q_int(0));
    }

    #[test]
    fn principal_classes() {
        assert!(is_principal(&DivisorClass::ZERO));
        assert!(is_principal(&DivisorClass([-1, 0, 1, 16, -13, -3, 0])));
        assert!(!is_principal(&E));
        assert_eq!(kxc_class(3, 2), DivisorClass([-1, 0, 1, 16, -13, -3, 0]));
        assert!(kxc_decomposition_check());
        assert!(!is_principal(&kxc_class(4, 2)));
    }

    #[test]
    fn ek_values() {
        assert_eq!(e_k_class(1), Ok(DivisorClass([0, 0, 6, 103, 26, 4, -23])));
        assert_eq!(e_k_class(-1), Ok(DivisorClass([0, 0, 6, 201, 132, 28, -61])));
        assert_eq!(e_k_class(2), Ok(DivisorClass([0, 0, 27, 537, 183, 34, -130])));
        assert_eq!(e_k_class(0), Err(Error::ZeroK));
        assert!(verify_ek(1).unwrap().passed());
        assert!(verify_ek(-3).unwrap().passed());
        assert!(verify_ek_symbolic());
    }

    #[test]
    fn rr_small() {
        let (p, r) = rr_polygon(1).unwrap();
        assert_eq!(p.vertices().len(), 6);
        assert_eq!((r.m, r.volume, r.boundary), (23, 528, 24));
        assert!(r.passed(), "{:?}", r);
        assert_eq!(rr_polygon(2).unwrap().1.volume, 16899);
        assert!(rr_polygon(0).is_err());
    }
}
