//! Exact linear algebra over `Z` and `Q`.
//!
//! Kernels of integer matrices are computed with a multimodular scheme:
//! RREF modulo word-size primes, Chinese remaindering, rational
//! reconstruction, then an exact check of every candidate vector against the
//! original matrix. The check makes the result independent of prime choice:
//! `n - rank_p` independent verified kernel vectors pin the rank over `Q`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::num::{Q, Z};

// ---------------------------------------------------------------- modular

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    core::iter::from_fn(move || {
        while !is_prime_u64(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

fn reduce(z: &Z, p: u64) -> u64 {
    let r = z.mod_floor(&Z::from(p));
    r.to_u64().expect("residue fits")
}

/// RREF modulo `p`; returns pivot columns and the reduced pivot rows.
fn rref_mod(rows: &[Vec<u64>], ncols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (pivots, m)
}

/// Rational `a/b` with `a = x b mod n` and `|a|, |b| <= sqrt(n/2)`.
pub fn rational_reconstruction(x: &Z, n: &Z) -> Option<Q> {
    let bound = (n / Z::from(2u8)).sqrt();
    let (mut r0, mut r1) = (n.clone(), x.mod_floor(n));
    let (mut t0, mut t1) = (Z::zero(), Z::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Q::new(r1, t1))
}

fn crt_step(acc: &mut Z, modulus: &Z, r: u64, p: u64) {
    // acc' = acc + modulus * ((r - acc) / modulus mod p)
    let a = reduce(acc, p);
    let m = reduce(modulus, p);
    let diff = (r + p - a) % p;
    let k = mul_mod(diff, inv_mod(m, p), p);
    *acc += modulus * Z::from(k);
}

/// True iff `mat * v = 0` exactly.
pub fn is_kernel_vector(mat: &[Vec<Z>], v: &[Q]) -> bool {
    let den = v.iter().fold(Z::one(), |l, x| l.lcm(x.denom()));
    let iv: Vec<Z> = v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    mat.iter().all(|row| {
        row.iter()
            .zip(iv.iter())
            .fold(Z::zero(), |s, (a, b)| s + a * b)
            .is_zero()
    })
}

const MAX_PRIMES: usize = 400;

/// Basis of the right kernel of an integer matrix with `ncols` columns.
/// Each vector has a 1 in one free column and 0 in the others.
pub fn kernel(mat: &[Vec<Z>], ncols: usize) -> Vec<Vec<Q>> {
    if mat.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
    }
    let mut best: Option<(Vec<usize>, Vec<Vec<Z>>, Z)> = None;
    for (count, p) in primes().enumerate() {
        if count >= MAX_PRIMES {
            break;
        }
        let rows: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|z| reduce(z, p)).collect()).collect();
        let (pivots, red) = rref_mod(&rows, ncols, p);
        if pivots.len() == ncols {
            return Vec::new();
        }
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        let residues: Vec<Vec<u64>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u64; ncols];
                v[f] = 1;
                for (row, &pc) in red.iter().zip(pivots.iter()) {
                    v[pc] = (p - row[f]) % p;
                }
                v
            })
            .collect();
        let better = match &best {
            None => true,
            Some((bp, _, _)) => {
                pivots.len() > bp.len() || (pivots.len() == bp.len() && pivots < *bp)
            }
        };
        if better {
            let acc = residues
                .iter()
                .map(|v| v.iter().map(|&x| Z::from(x)).collect())
                .collect();
            best = Some((pivots, acc, Z::from(p)));
        } else if best.as_ref().map_or(false, |b| b.0 == pivots) {
            let (_, acc, modulus) = best.as_mut().unwrap();
            for (va, vr) in acc.iter_mut().zip(residues.iter()) {
                for (a, &r) in va.iter_mut().zip(vr.iter()) {
                    crt_step(a, modulus, r, p);
                }
            }
            *modulus *= Z::from(p);
        } else {
            continue;
        }
        let (_, acc, modulus) = best.as_ref().unwrap();
        let candidate: Option<Vec<Vec<Q>>> = acc
            .iter()
            .map(|v| v.iter().map(|x| rational_reconstruction(x, modulus)).collect())
            .collect();
        if let Some(cand) = candidate {
            if cand.iter().all(|v| is_kernel_vector(mat, v)) {
                return cand;
            }
        }
    }
    kernel_bareiss(mat, ncols)
}

// ------------------------------------------------------------- exact, slow

/// Fraction-free row echelon form (Bareiss). Returns the echelon rows and
/// their pivot columns.
pub fn bareiss_echelon(mat: &[Vec<Z>], ncols: usize) -> (Vec<Vec<Z>>, Vec<usize>) {
    let mut m: Vec<Vec<Z>> = mat.to_vec();
    let mut pivots = Vec::new();
    let mut prev = Z::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = Z::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Kernel via Bareiss elimination and back substitution over `Q`; same
/// normalization as [`kernel`].
pub fn kernel_bareiss(mat: &[Vec<Z>], ncols: usize) -> Vec<Vec<Q>> {
    let (ech, pivots) = bareiss_echelon(mat, ncols);
    let qrows: Vec<Vec<Q>> =
        ech.iter().map(|r| r.iter().map(|z| Q::from_integer(z.clone())).collect()).collect();
    let (red, piv) = rref(&qrows, ncols);
    debug_assert_eq!(piv, pivots);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in red.iter().zip(piv.iter()) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Reduced row echelon form over `Q`, zero rows dropped.
pub fn rref(mat: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = mat.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(mat: &[Vec<Q>], ncols: usize) -> usize {
    rref(mat, ncols).1.len()
}

/// Determinant over `Q` by Gaussian elimination.
pub fn determinant(mat: &[Vec<Q>]) -> Q {
    let n = mat.len();
    let mut m = mat.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if pr != c {
            m.swap(pr, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Q]) -> Vec<Z> {
    let den = v.iter().fold(Z::one(), |l, x| l.lcm(x.denom()));
    let mut iv: Vec<Z> = v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    let g = iv.iter().fold(Z::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        let neg = iv.iter().find(|x| !x.is_zero()).map_or(false, |x| x.sign() == Sign::Minus);
        let g = if neg { -g } else { g };
        for x in iv.iter_mut() {
            *x = &*x / &g;
        }
    }
    iv
}

// ---------------------------------------------------------------- lattices

/// Row-style Hermite normal form of the integer row span: strictly
/// increasing pivot columns, positive pivots, entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let Some(ncols) = rows.first().map(|r| r.len()) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<Z>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let &k = nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, k);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * y;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = m[r].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in m[i].iter_mut().zip(pivot_row.iter()) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Membership of `v` in the integer row span of `rows`.
pub fn in_row_lattice(rows: &[Vec<Z>], v: &[Z]) -> bool {
    let hnf = hermite_normal_form(rows);
    let mut t: Vec<Z> = v.to_vec();
    for row in &hnf {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        let (q, rem) = t[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (x, y) in t.iter_mut().zip(row.iter()) {
            *x -= &q * y;
        }
    }
    t.iter().all(|x| x.is_zero())
}
