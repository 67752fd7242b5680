//! Laurent polynomials in two variables `u, v` with exact rational
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{binomial, content, falling_factorial, q_int, Q, Z};
use crate::polygon::{convex_hull, LatticePoint, LatticePolygon, DEFAULT_DECOMPOSITION_LIMIT};

/// Exponent pair `(p, q)` of the monomial `u^p v^q`.
pub type Exponent = (i64, i64);

/// A finitely supported map `Z^2 -> Q`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Exponent, Q>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Q, p: i64, q: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        LaurentPolynomial { terms }
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(Q::one(), 1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(Q::one(), 0, 1)
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Q)>) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn from_int_terms(terms: &[((i64, i64), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, q_int(c))))
    }

    fn add_term(&mut self, e: Exponent, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: i64, q: i64) -> Q {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().map(|&(p, q)| LatticePoint::new(p, q)).collect()
    }

    /// `(pmin, qmin, pmax, qmax)` of the support.
    pub fn exponent_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(p0, q0) = it.next()?;
        let mut b = (p0, q0, p0, q0);
        for &(p, q) in it {
            b = (b.0.min(p), b.1.min(q), b.2.max(p), b.3.max(q));
        }
        Some(b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplication by the monomial `u^dp v^dq`.
    pub fn shift(&self, dp: i64, dq: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&(p, q), c)| ((p + dp, q + dq), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a point of the torus. Panics if a zero coordinate meets
    /// a negative exponent.
    pub fn eval(&self, u: &Q, v: &Q) -> Q {
        self.terms
            .iter()
            .map(|(&(p, q), c)| c * qpow(u, p) * qpow(v, q))
            .fold(Q::zero(), |a, b| a + b)
    }

    pub fn newton_polygon(&self) -> Result<LatticePolygon> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        convex_hull(&self.support())
    }

    /// Representative of `self` modulo monomial units and nonzero scalars:
    /// smallest exponents shifted to zero, primitive integer coefficients,
    /// and a positive coefficient on the lexicographically smallest exponent.
    pub fn normalized(&self) -> Self {
        let Some((p0, q0, _, _)) = self.exponent_box() else {
            return Self::zero();
        };
        let shifted = self.shift(-p0, -q0);
        let mut c = content(shifted.terms.values());
        if shifted.terms.values().next().map_or(false, |x| x.is_negative()) {
            c = -c;
        }
        shifted.scale(&c.recip())
    }

    /// Equality up to a monomial unit times a nonzero rational.
    pub fn equals_up_to_unit(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `d^{a+b} f / du^a dv^b` at `(1,1)`, via falling factorials.
    pub fn derivative_at_identity(&self, a: u32, b: u32) -> Q {
        self.terms
            .iter()
            .map(|(&(p, q), c)| {
                c * Q::from_integer(falling_factorial(p, a) * falling_factorial(q, b))
            })
            .fold(Q::zero(), |x, y| x + y)
    }

    /// Order of vanishing at `(1,1)`: the least total degree in the expansion
    /// of `f(1+s, 1+t)` after shifting `f` into the first quadrant.
    pub fn multiplicity_at_identity(&self) -> Result<u32> {
        let (p0, q0, p1, q1) = self.exponent_box().ok_or(Error::ZeroPolynomial)?;
        let g = self.shift(-p0, -q0);
        let max_degree = ((p1 - p0) + (q1 - q0)) as u32;
        for d in 0..=max_degree {
            for a in 0..=d {
                let b = d - a;
                let coeff = g
                    .terms
                    .iter()
                    .map(|(&(p, q), c)| c * Q::from_integer(binomial(p, a) * binomial(q, b)))
                    .fold(Q::zero(), |x, y| x + y);
                if !coeff.is_zero() {
                    return Ok(d);
                }
            }
        }
        unreachable!("a nonzero polynomial has finite multiplicity")
    }

    /// The polynomial `g` with `g^k = self`, if one exists.
    ///
    /// Works on the Kronecker image `x^(p*N + q)`, where no carries occur,
    /// extracts a power-series k-th root and verifies it exactly.
    pub fn exact_root(&self, k: u32) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if k == 1 {
            return Some(self.clone());
        }
        let (p0, q0, p1, q1) = self.exponent_box()?;
        let kk = k as i64;
        if p0.rem_euclid(kk) != 0 || q0.rem_euclid(kk) != 0 {
            return None;
        }
        let g = self.shift(-p0, -q0);
        let n = q1 - q0 + 1;
        let len = ((p1 - p0) * n + (q1 - q0) + 1) as usize;
        let mut dense = alloc::vec![Q::zero(); len];
        for (&(p, q), c) in &g.terms {
            dense[(p * n + q) as usize] = c.clone();
        }
        let s = dense.iter().position(|c| !c.is_zero())?;
        let h = &dense[s..];
        let deg = h.len() - 1;
        if s % k as usize != 0 || deg % k as usize != 0 {
            return None;
        }
        let alpha = Q::new(Z::one(), Z::from(k));
        let h0 = h[0].clone();
        let d = deg / k as usize;
        let mut root = alloc::vec![crate::num::exact_root_q(&h0, k)?];
        for i in 1..=d {
            let mut acc = Q::zero();
            for j in 1..=i.min(deg) {
                if h[j].is_zero() {
                    continue;
                }
                let w = &alpha * q_int(j as i64) - q_int((i - j) as i64);
                acc += w * &h[j] * &root[i - j];
            }
            root.push(acc / (q_int(i as i64) * &h0));
        }
        let base = (s / k as usize) as i64;
        let cand = LaurentPolynomial::from_terms(root.into_iter().enumerate().map(|(i, c)| {
            let e = base + i as i64;
            ((e.div_euclid(n) + p0 / kk, e.rem_euclid(n) + q0 / kk), c)
        }));
        (cand.pow(k) == *self).then_some(cand)
    }

    /// Integer coefficients (when all coefficients are integers).
    pub fn integer_terms(&self) -> Option<Vec<(Exponent, Z)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| (*e, c.to_integer())))
            .collect()
    }
}

fn qpow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&(p, q), c) in &self.terms {
            for (&(r, s), d) in &rhs.terms {
                out.add_term((p + r, q + s), c * d);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-Q::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(p, q), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = p == 0 && q == 0;
            if constant || !abs.is_one() {
                write!(f, "{}", abs)?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            let mut wrote = false;
            for (name, e) in [("u", p), ("v", q)] {
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                if e == 1 {
                    f.write_str(name)?;
                } else {
                    write!(f, "{}^{}", name, e)?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

/// True iff the product of `factors` equals `f` up to a monomial unit and a
/// nonzero rational.
pub fn verify_factorization(f: &LaurentPolynomial, factors: &[LaurentPolynomial]) -> bool {
    let product = factors.iter().fold(LaurentPolynomial::one(), |acc, g| &acc * g);
    if f.is_zero() || product.is_zero() {
        return f.is_zero() && product.is_zero();
    }
    f.equals_up_to_unit(&product)
}

/// Outcome of the irreducibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// The Newton polygon admits no nontrivial lattice Minkowski
    /// decomposition, so no factorization can exist.
    IrreducibleByIndecomposability,
    /// An external annotation asserts irreducibility.
    IrreducibleByOracle,
    /// An external annotation supplied nonunit factors whose product is the
    /// polynomial.
    ReducibleByWitness(Vec<LaurentPolynomial>),
    Inconclusive,
}

impl IrreducibilityCertificate {
    pub fn is_reducible(&self) -> bool {
        matches!(self, IrreducibilityCertificate::ReducibleByWitness(_))
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            IrreducibilityCertificate::IrreducibleByIndecomposability
                | IrreducibilityCertificate::IrreducibleByOracle
        )
    }
}

/// Sufficient irreducibility criterion: an integrally indecomposable Newton
/// polygon. Never claims reducibility on its own.
pub fn irreducibility_certificate(f: &LaurentPolynomial) -> Result<IrreducibilityCertificate> {
    irreducibility_with_witness(f, None)
}

/// As [`irreducibility_certificate`], also accepting a factorization witness.
/// The witness is used only if it has at least two nonunit factors and
/// multiplies back to `f`.
pub fn irreducibility_with_witness(
    f: &LaurentPolynomial,
    witness: Option<&[LaurentPolynomial]>,
) -> Result<IrreducibilityCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_monomial() {
        return Err(Error::MonomialInput);
    }
    if let Some(factors) = witness {
        let nonunits = factors.iter().filter(|g| !g.is_monomial() && !g.is_zero()).count();
        if nonunits >= 2 && verify_factorization(f, factors) {
            return Ok(IrreducibilityCertificate::ReducibleByWitness(factors.to_vec()));
        }
    }
    let np = f.newton_polygon()?;
    match np.minkowski_decompositions(DEFAULT_DECOMPOSITION_LIMIT) {
        Ok(d) if d.is_empty() => Ok(IrreducibilityCertificate::IrreducibleByIndecomposability),
        _ => Ok(IrreducibilityCertificate::Inconclusive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn lp(terms: &[((i64, i64), i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(terms)
    }

    fn cubic() -> LaurentPolynomial {
        lp(&[((0, 0), 1), ((2, 1), 1), ((1, 2), 1), ((1, 1), -3)])
    }

    #[test]
    fn ring_identities() {
        let f = cubic();
        assert_eq!(&f * &LaurentPolynomial::one(), f);
        let um1 = &LaurentPolynomial::u() - &LaurentPolynomial::one();
        let vm1 = &LaurentPolynomial::v() - &LaurentPolynomial::one();
        assert_eq!(&um1 * &vm1, lp(&[((1, 1), 1), ((1, 0), -1), ((0, 1), -1), ((0, 0), 1)]));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn newton_polygons() {
        let mono = LaurentPolynomial::monomial(q_int(3), 2, -1);
        assert!(mono.newton_polygon().unwrap().is_point());
        assert_eq!(
            cubic().newton_polygon().unwrap(),
            LatticePolygon::from_coords(&[(0, 0), (2, 1), (1, 2)])
        );
        assert_eq!(LaurentPolynomial::zero().newton_polygon(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn multiplicities() {
        let um1 = &LaurentPolynomial::u() - &LaurentPolynomial::one();
        assert_eq!(um1.multiplicity_at_identity(), Ok(1));
        assert_eq!(cubic().multiplicity_at_identity(), Ok(2));
        assert_eq!(LaurentPolynomial::one().multiplicity_at_identity(), Ok(0));
        assert_eq!(
            LaurentPolynomial::zero().multiplicity_at_identity(),
            Err(Error::ZeroPolynomial)
        );
        // negative exponents: u^-1 - 1 vanishes to order one
        let inv = lp(&[((-1, 0), 1), ((0, 0), -1)]);
        assert_eq!(inv.multiplicity_at_identity(), Ok(1));
    }

    #[test]
    fn multiplicity_agrees_with_derivatives() {
        let f = &cubic().pow(2) * &lp(&[((-2, 1), 1), ((0, 0), -1)]);
        let m = f.multiplicity_at_identity().unwrap();
        assert_eq!(m, 5);
        for d in 0..m {
            for a in 0..=d {
                assert!(f.derivative_at_identity(a, d - a).is_zero());
            }
        }
        assert!((0..=m).any(|a| !f.derivative_at_identity(a, m - a).is_zero()));
    }

    #[test]
    fn factorization_checks() {
        let f = cubic();
        assert!(verify_factorization(&f, &[f.clone()]));
        let g = lp(&[((1, 0), 1), ((0, 0), -1)]);
        let h = lp(&[((0, 1), 1), ((0, 0), 2)]);
        let prod = (&g * &h).shift(3, -2).scale(&q_int(-5));
        assert!(verify_factorization(&prod, &[g.clone(), h.clone()]));
        let h1 = &h + &LaurentPolynomial::one();
        assert!(!verify_factorization(&prod, &[g, h1]));
    }

    #[test]
    fn certificates() {
        assert_eq!(
            irreducibility_certificate(&cubic()),
            Ok(IrreducibilityCertificate::IrreducibleByIndecomposability)
        );
        let um1 = &LaurentPolynomial::u() - &LaurentPolynomial::one();
        let vm1 = &LaurentPolynomial::v() - &LaurentPolynomial::one();
        let prod = &um1 * &vm1;
        assert_eq!(irreducibility_certificate(&prod), Ok(IrreducibilityCertificate::Inconclusive));
        let with = irreducibility_with_witness(&prod, Some(&[um1.clone(), vm1.clone()])).unwrap();
        assert!(with.is_reducible());
        assert_eq!(
            irreducibility_certificate(&LaurentPolynomial::u()),
            Err(Error::MonomialInput)
        );
        // a unit factor is not a witness
        let bogus = irreducibility_with_witness(&um1, Some(&[um1.clone(), LaurentPolynomial::u()]));
        assert_eq!(bogus, Ok(IrreducibilityCertificate::IrreducibleByIndecomposability));
    }

    #[test]
    fn roots() {
        let f = cubic().shift(-1, 2);
        assert_eq!(f.pow(3).exact_root(3), Some(f.clone()));
        let sq = f.pow(2);
        assert!(sq.exact_root(3).is_none());
        assert!(cubic().exact_root(2).is_none());
        let neg = sq.scale(&q_int(-4));
        assert!(neg.exact_root(2).is_none());
        let r = neg.scale(&q_int(-1)).exact_root(2).unwrap();
        assert_eq!(r.pow(2), sq.scale(&q_int(4)));
    }

    #[test]
    fn display() {
        assert_eq!(cubic().to_string(), "1 - 3*u*v + u*v^2 + u^2*v");
        let f = LaurentPolynomial::from_terms(vec![((-1, 0), Q::new(Z::from(-1), Z::from(2)))]);
        assert_eq!(f.to_string(), "-1/2*u^-1");
    }

    #[test]
    fn eval_with_negative_exponents() {
        let f = lp(&[((-1, 2), 3), ((0, 0), -1)]);
        assert_eq!(f.eval(&q_int(2), &q_int(3)), Q::new(Z::from(25), Z::from(2)));
    }
}
