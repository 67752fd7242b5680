//! Resultants in `t` of polynomials with Laurent coefficients, and
//! implicitization of rational plane curves `t -> (f1/f2, f3/f4)`.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{irreducibility_certificate, LaurentPolynomial};
use crate::linalg::determinant;
use crate::num::{q_int, Q};
use crate::univariate::UniPoly;

/// Polynomial in `t` with Laurent coefficients in `u, v`, lowest degree
/// first.
pub type TPoly = Vec<LaurentPolynomial>;

/// Sylvester matrix of `a` (degree n) and `b` (degree m): m shifted rows of
/// `a` followed by n shifted rows of `b`, highest coefficient first.
pub fn sylvester<T: Clone>(a: &[T], b: &[T], zero: T) -> Vec<Vec<T>> {
    let n = a.len() - 1;
    let m = b.len() - 1;
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (src, count) in [(a, m), (b, n)] {
        for i in 0..count {
            let mut row = vec![zero.clone(); size];
            for (j, c) in src.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn check_degree(p: &[LaurentPolynomial]) -> Result<()> {
    if p.len() < 2 {
        return Err(Error::DegenerateInput("t-degree must be at least one"));
    }
    if p.last().unwrap().is_zero() {
        return Err(Error::DegenerateInput("leading t-coefficient is zero"));
    }
    Ok(())
}

fn min_exponents(p: &[LaurentPolynomial]) -> (i64, i64) {
    p.iter()
        .filter_map(|c| c.exponent_box())
        .fold((i64::MAX, i64::MAX), |(a, b), (p0, q0, _, _)| (a.min(p0), b.min(q0)))
}

fn max_exponents(p: &[LaurentPolynomial]) -> (i64, i64) {
    p.iter()
        .filter_map(|c| c.exponent_box())
        .fold((0, 0), |(a, b), (_, _, p1, q1)| (a.max(p1), b.max(q1)))
}

/// `Res_t(a, b)` by evaluation at integer points of the a-priori degree box
/// and tensor Newton interpolation.
pub fn uni_resultant(a: &[LaurentPolynomial], b: &[LaurentPolynomial]) -> Result<LaurentPolynomial> {
    check_degree(a)?;
    check_degree(b)?;
    let (n, m) = ((a.len() - 1) as i64, (b.len() - 1) as i64);
    // Clear negative exponents: Res(x^e a, b) = x^(e m) Res(a, b).
    let (pa, qa) = min_exponents(a);
    let (pb, qb) = min_exponents(b);
    let a: TPoly = a.iter().map(|c| c.shift(-pa, -qa)).collect();
    let b: TPoly = b.iter().map(|c| c.shift(-pb, -qb)).collect();
    let (ua, va) = max_exponents(&a);
    let (ub, vb) = max_exponents(&b);
    let du = (m * ua + n * ub) as usize;
    let dv = (m * va + n * vb) as usize;

    let xs: Vec<Q> = (0..=du as i64).map(q_int).collect();
    let ys: Vec<Q> = (0..=dv as i64).map(q_int).collect();
    // rows[i][j] = coefficient of v^j in R(x_i, v)
    let mut by_x: Vec<Vec<Q>> = Vec::with_capacity(xs.len());
    for x in &xs {
        let vals: Vec<Q> = ys
            .iter()
            .map(|y| {
                let ea: Vec<Q> = a.iter().map(|c| c.eval(x, y)).collect();
                let eb: Vec<Q> = b.iter().map(|c| c.eval(x, y)).collect();
                determinant(&sylvester(&ea, &eb, Q::zero()))
            })
            .collect();
        let poly = UniPoly::interpolate(&ys, &vals);
        by_x.push((0..=dv).map(|j| poly.coeff(j)).collect());
    }
    let mut terms = Vec::new();
    for j in 0..=dv {
        let col: Vec<Q> = by_x.iter().map(|r| r[j].clone()).collect();
        let poly = UniPoly::interpolate(&xs, &col);
        for (i, c) in poly.coeffs().iter().enumerate() {
            terms.push(((i as i64, j as i64), c.clone()));
        }
    }
    Ok(LaurentPolynomial::from_terms(terms).shift(pa * m + pb * n, qa * m + qb * n))
}

/// Which branch of the normalization in [`implicitize`] fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Content-free resultant, certified irreducible.
    Irreducible,
    /// The resultant was `g^k`; `g` is returned.
    RootExtracted(u32),
    /// Content-free resultant returned unchanged without a certificate.
    NotNormalized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implicitization {
    pub equation: LaurentPolynomial,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdPoint {
    Zero,
    Infinity,
}

enum MapShape {
    Constant,
    /// u is constant
    Vertical(Q),
    /// v is constant
    Horizontal(Q),
    General,
}

fn check_map(f1: &UniPoly, f2: &UniPoly, f3: &UniPoly, f4: &UniPoly) -> Result<MapShape> {
    if f2.is_zero() || f4.is_zero() {
        return Err(Error::DegenerateInput("zero denominator"));
    }
    if !f1.is_coprime(f2) || !f3.is_coprime(f4) {
        return Err(Error::SharedRoot);
    }
    let const_u = f1.degree().unwrap_or(0) == 0 && f2.degree() == Some(0);
    let const_v = f3.degree().unwrap_or(0) == 0 && f4.degree() == Some(0);
    Ok(match (const_u, const_v) {
        (true, true) => MapShape::Constant,
        (true, false) => MapShape::Vertical(f1.coeff(0) / f2.coeff(0)),
        (false, true) => MapShape::Horizontal(f3.coeff(0) / f4.coeff(0)),
        _ => MapShape::General,
    })
}

fn edge_length_gcd(g: &LaurentPolynomial) -> u32 {
    let Ok(np) = g.newton_polygon() else { return 1 };
    np.edges().iter().fold(0i64, |acc, (_, e)| acc.gcd(&e.lattice_length())) as u32
}

/// Implicit equation of the closure of the image of `t -> (f1/f2, f3/f4)`.
pub fn implicitize(f1: &UniPoly, f2: &UniPoly, f3: &UniPoly, f4: &UniPoly) -> Result<Implicitization> {
    let line = |c: Q, p: i64, q: i64| {
        (LaurentPolynomial::monomial(Q::one(), p, q) - LaurentPolynomial::constant(c)).normalized()
    };
    let raw = match check_map(f1, f2, f3, f4)? {
        MapShape::Constant => return Err(Error::ConstantMap),
        MapShape::Vertical(c) => line(c, 1, 0),
        MapShape::Horizontal(c) => line(c, 0, 1),
        MapShape::General => {
            let a = tpoly(f1, f2, (1, 0));
            let b = tpoly(f3, f4, (0, 1));
            uni_resultant(&a, &b)?.normalized()
        }
    };
    let g = edge_length_gcd(&raw);
    let mut divisors: Vec<u32> = (2..=g).filter(|d| g % d == 0).collect();
    divisors.reverse();
    for k in divisors {
        let minus = raw.scale(&-Q::one());
        if let Some(root) = raw.exact_root(k).or_else(|| minus.exact_root(k)) {
            return Ok(Implicitization {
                equation: root.normalized(),
                normalization: Normalization::RootExtracted(k),
            });
        }
    }
    let normalization = if irreducibility_certificate(&raw)?.is_irreducible() {
        Normalization::Irreducible
    } else {
        Normalization::NotNormalized
    };
    Ok(Implicitization { equation: raw, normalization })
}

/// `num - x * den` as a polynomial in `t`, `x` being the monomial `e`.
fn tpoly(num: &UniPoly, den: &UniPoly, e: (i64, i64)) -> TPoly {
    let n = num.coeffs().len().max(den.coeffs().len());
    let mut out: TPoly = (0..n)
        .map(|i| {
            LaurentPolynomial::constant(num.coeff(i))
                - LaurentPolynomial::monomial(den.coeff(i), e.0, e.1)
        })
        .collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Orders of `(f1/f2, f3/f4)` at `t = 0` or `t = infinity`.
pub fn ord_profile(
    f1: &UniPoly,
    f2: &UniPoly,
    f3: &UniPoly,
    f4: &UniPoly,
    at: OrdPoint,
) -> Result<(i64, i64)> {
    if let MapShape::Constant = check_map(f1, f2, f3, f4)? {
        return Err(Error::ConstantMap);
    }
    if f1.is_zero() || f3.is_zero() {
        return Err(Error::DegenerateInput("zero numerator"));
    }
    let ord = |p: &UniPoly| -> i64 {
        match at {
            OrdPoint::Zero => p.valuation().unwrap() as i64,
            OrdPoint::Infinity => -(p.degree().unwrap() as i64),
        }
    };
    Ok((ord(f1) - ord(f2), ord(f3) - ord(f4)))
}
