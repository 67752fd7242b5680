//! Slopes of classes `d H - m E` on blow-ups of weighted projective planes
//! `P(a, b, c)`, compared exactly against `sqrt(abc)`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::num::{gcd_i64, q_frac, q_int, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WppContext {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl WppContext {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        for (x, y) in [(a, b), (a, c), (b, c)] {
            if x == 0 || y == 0 || gcd_i64(x as i64, y as i64) != 1 {
                return Err(Error::NotCoprime(x, y));
            }
        }
        Ok(WppContext { a, b, c })
    }

    pub fn abc(&self) -> i128 {
        self.a as i128 * self.b as i128 * self.c as i128
    }
}

/// One row of a generator table; the optional columns are carried verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassEntry {
    pub d: i64,
    pub m: i64,
    pub intrinsic_c2: Option<i64>,
    pub intrinsic_genus: Option<i64>,
}

impl ClassEntry {
    pub fn new(d: i64, m: i64) -> Self {
        ClassEntry { d, m, intrinsic_c2: None, intrinsic_genus: None }
    }

    /// Rows whose intrinsic curve is a (-1)-curve: `C^2 = -1`, genus 0.
    pub fn is_intrinsic_minus_one(&self) -> bool {
        self.intrinsic_c2 == Some(-1) && self.intrinsic_genus == Some(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slope {
    Below,
    On,
    Above,
}

/// Sign of `d^2 - abc m^2`.
pub fn slope_compare(ctx: &WppContext, e: &ClassEntry) -> Slope {
    let d = e.d as i128;
    let m = e.m as i128;
    match (d * d).cmp(&(ctx.abc() * m * m)) {
        Ordering::Less => Slope::Below,
        Ordering::Equal => Slope::On,
        Ordering::Greater => Slope::Above,
    }
}

/// `d^2/abc - m^2`.
pub fn self_intersection_on_x(ctx: &WppContext, e: &ClassEntry) -> Q {
    let d = e.d as i64;
    q_frac(d * d, ctx.abc() as i64) - q_int(e.m * e.m)
}

/// The `Above` entry with slope closest to `sqrt(abc)`, i.e. with the
/// smallest `d/m`; ties go to the smaller `m`.
pub fn best_approximation(
    ctx: &WppContext,
    entries: &[ClassEntry],
    filter: Option<&dyn Fn(&ClassEntry) -> bool>,
) -> Result<ClassEntry> {
    let kept: Vec<&ClassEntry> = entries
        .iter()
        .filter(|e| filter.map_or(true, |f| f(e)))
        .filter(|e| slope_compare(ctx, e) == Slope::Above)
        .collect();
    kept.into_iter()
        .min_by(|x, y| {
            let lhs = x.d as i128 * y.m as i128;
            let rhs = y.d as i128 * x.m as i128;
            lhs.cmp(&rhs).then(x.m.cmp(&y.m))
        })
        .copied()
        .ok_or(Error::EmptyAfterFilter)
}
