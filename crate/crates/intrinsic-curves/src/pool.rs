//! Bounded parallel classification. Output order does not depend on the
//! number of workers: results are collected in job order and then merged.

use intrinsic_core::classify::{
    classification_jobs, classify_pair, merge_hits, ClassificationHit, ClassifyParams, IrreducibilityOracle,
};
use intrinsic_core::LatticePolygon;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const JOBS_VAR: &str = "INTRINSIC_CURVES_JOBS";

/// `requested` (or the machine's parallelism) capped by `INTRINSIC_CURVES_JOBS`.
pub fn worker_count(requested: Option<usize>) -> Result<usize> {
    let mut n = requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if let Ok(v) = std::env::var(JOBS_VAR) {
        let cap: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Error::Env { var: JOBS_VAR, msg: format!("expected a positive integer, got {:?}", v) })?;
        n = n.min(cap);
    }
    Ok(n.max(1))
}

pub fn classify_parallel(
    polygons: &[LatticePolygon],
    params: ClassifyParams,
    oracle: &(dyn IrreducibilityOracle + Sync),
    workers: usize,
) -> Result<Vec<ClassificationHit>> {
    if params.m_max == 0 {
        return Err(Error::flag("m-max", "must be at least 1"));
    }
    let jobs = classification_jobs(polygons, params);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<_> = pool.install(|| {
        jobs.par_iter().map(|&(i, m)| classify_pair(&polygons[i], m, oracle)).collect()
    });
    let mut hits = Vec::new();
    for r in results {
        if let Some(h) = r? {
            hits.push(h);
        }
    }
    Ok(merge_hits(hits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use intrinsic_core::classify::{classify_dataset, NoOracle};
    use intrinsic_core::polygon::enumerate_small_polygons;

    #[test]
    fn matches_sequential() {
        let polys = enumerate_small_polygons(2, 4);
        let params = ClassifyParams { m_max: 3, volume_max: 4 };
        let seq = classify_dataset(&polys, params, &NoOracle).unwrap();
        for w in [1, 3] {
            assert_eq!(classify_parallel(&polys, params, &NoOracle, w).unwrap(), seq);
        }
    }
}
