//! Scalar helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision integers.
pub type Z = BigInt;
/// Arbitrary precision rationals.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// `n (n-1) ... (n-k+1)`, valid for negative `n`.
pub fn falling_factorial(n: i64, k: u32) -> Z {
    let mut acc = Z::one();
    for j in 0..k as i64 {
        acc *= Z::from(n - j);
    }
    acc
}

/// Generalized binomial `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: i64, k: u32) -> Z {
    let mut den = Z::one();
    for j in 1..=k as i64 {
        den *= Z::from(j);
    }
    falling_factorial(n, k) / den
}

/// gcd of the numerators over lcm of the denominators, so that dividing every
/// entry by the result leaves a primitive integer vector.
pub fn content<'a>(values: impl IntoIterator<Item = &'a Q>) -> Q {
    let mut num = Z::zero();
    let mut den = Z::one();
    for v in values {
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Q::one()
    } else {
        Q::new(num, den)
    }
}

/// Exact integer `k`-th root, if `n` is a perfect `k`-th power.
pub fn exact_root(n: &Z, k: u32) -> Option<Z> {
    if k == 1 {
        return Some(n.clone());
    }
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational `k`-th root, if one exists.
pub fn exact_root_q(x: &Q, k: u32) -> Option<Q> {
    let n = exact_root(x.numer(), k)?;
    let d = exact_root(x.denom(), k)?;
    Some(Q::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout() {
        for (a, b) in [(3, 5), (-4, 6), (0, 7), (7, 0), (-9, -12), (1, -1)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(g, gcd_i64(a, b));
            assert_eq!(a * x + b * y, g);
        }
    }

    #[test]
    fn falling_factorial_negative_base() {
        assert_eq!(falling_factorial(-2, 3), Z::from(-24));
        assert_eq!(falling_factorial(5, 0), Z::one());
        assert_eq!(falling_factorial(3, 4), Z::zero());
        assert_eq!(binomial(-1, 3), Z::from(-1));
        assert_eq!(binomial(6, 2), Z::from(15));
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&Z::from(-27), 3), Some(Z::from(-3)));
        assert_eq!(exact_root(&Z::from(16), 2), Some(Z::from(4)));
        assert_eq!(exact_root(&Z::from(15), 2), None);
        assert_eq!(exact_root_q(&q_frac(9, 4), 2), Some(q_frac(3, 2)));
    }
}
