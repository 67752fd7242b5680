//! Command definitions and dispatch. Every command produces a JSON value;
//! `--pretty` only changes how it is printed.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use intrinsic_core::classify::{
    expected_case, numeric_invariants, ClassificationHit, ClassifyParams, IntrinsicPair, NoOracle, OracleTable,
};
use intrinsic_core::families::{
    family_invariants, family_polygon, verify_family_end_to_end, Family, FamilySpec, DEFAULT_RESULTANT_BUDGET,
};
use intrinsic_core::linsys::compute_system;
use intrinsic_core::seshadri::{estimate, rationality_certificates, Certificate};
use intrinsic_core::surface::{self, DivisorClass};
use intrinsic_core::num_traits::Zero;
use intrinsic_core::wpp::{best_approximation, self_intersection_on_x, slope_compare, ClassEntry, WppContext};
use intrinsic_core::{LatticePolygon, LaurentPolynomial, Q};
use serde_json::{json, Value};

use crate::codec::{LaurentJson, PolygonJson};
use crate::dataset::{ingest_polygon_dataset, parse_points};
use crate::error::{Error, Result};
use crate::{oracle, pool, table};

#[derive(Debug, Parser)]
#[command(name = "intrinsic-curves", version, about = "Intrinsic curves on blow-ups of toric surfaces")]
pub struct Cli {
    /// Render output as an indented table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volume, lattice counts, width and normal form of a polygon.
    PolygonInfo(PolygonArg),
    /// Basis of the curves with the polygon as support and multiplicity m at (1,1).
    Linsys {
        #[command(flatten)]
        polygon: PolygonArg,
        #[arg(long)]
        m: u32,
    },
    /// Search a polygon dataset for intrinsic pairs.
    Classify {
        #[arg(long)]
        dataset: PathBuf,
        /// Irreducibility annotations (JSON list).
        #[arg(long)]
        oracle: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long, default_value_t = 15)]
        volume_max: i64,
        /// Worker count; INTRINSIC_CURVES_JOBS caps it.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Invariants of one of the five families, optionally checked end to end.
    Family {
        #[arg(long)]
        id: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        verify: bool,
        /// Largest m for which the implicit equation is computed.
        #[arg(long, default_value_t = DEFAULT_RESULTANT_BUDGET)]
        budget: u32,
    },
    /// Intersection checks on the rank-7 surface.
    Surface {
        /// E_k is checked for 0 < |k| <= this.
        #[arg(long, default_value_t = 50)]
        k_max: i64,
        /// The polygon series is checked for k = 1..=this.
        #[arg(long, default_value_t = 10)]
        rr_max: i64,
    },
    /// Bounds on the Seshadri constant of the toric surface at (1,1).
    Seshadri {
        #[command(flatten)]
        polygon: PolygonArg,
        #[arg(long)]
        m: u32,
        /// Assert that the unique member of L(m) is irreducible.
        #[arg(long)]
        irreducible: bool,
    },
    /// Slopes of a generator table against sqrt(abc).
    Wpp {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        table: PathBuf,
        /// Report only the best approximation.
        #[arg(long)]
        best: bool,
        /// Restrict to rows whose intrinsic curve is a (-1)-curve.
        #[arg(long)]
        minus_one: bool,
    },
}

#[derive(Debug, Args)]
pub struct PolygonArg {
    /// Points as "x1,y1 x2,y2 ..."; the polygon is their convex hull.
    #[arg(long)]
    pub vertices: String,
}

impl PolygonArg {
    fn polygon(&self) -> Result<LatticePolygon> {
        let pts = parse_points(&self.vertices).map_err(|m| Error::flag("vertices", m))?;
        intrinsic_core::polygon::convex_hull(&pts).map_err(|e| Error::flag("vertices", e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Outcome { code: 0, output }
    }

    fn checked(passed: bool, output: Value) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, output }
    }
}

fn q(x: &Q) -> Value {
    Value::String(x.to_string())
}

fn polygon_json(p: &LatticePolygon) -> Value {
    serde_json::to_value(PolygonJson::from(p)).expect("polygon")
}

fn poly_json(f: &LaurentPolynomial) -> Value {
    json!({ "text": f.to_string(), "terms": serde_json::to_value(LaurentJson::from(f)).expect("poly")["terms"] })
}

fn pair_json(p: &IntrinsicPair) -> Value {
    json!({
        "m": p.m,
        "self_intersection": p.self_intersection,
        "arithmetic_genus": q(&p.arithmetic_genus),
        "tags": p.tags.iter().map(|t| format!("{:?}", t)).collect::<Vec<_>>(),
    })
}

pub fn hit_json(h: &ClassificationHit) -> Value {
    json!({
        "m": h.pair.m,
        "polygon": polygon_json(&h.pair.polygon),
        "canonical": polygon_json(&h.canonical),
        "volume": h.pair.polygon.normalized_volume(),
        "boundary": h.pair.polygon.boundary_count(),
        "pair": pair_json(&h.pair),
        "polynomial": poly_json(&h.polynomial),
        "irreducibility": format!("{:?}", h.irreducibility),
        "warning": h.warning(),
    })
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::WidthBound(x) => json!({ "WidthBound": q(x) }),
        Certificate::InteriorClassRational => json!("InteriorClassRational"),
        Certificate::VolOverM(x) => json!({ "VolOverM": q(x) }),
        Certificate::IrreducibleEquality(x) => json!({ "IrreducibleEquality": q(x) }),
        Certificate::SegmentEquality(x) => json!({ "SegmentEquality": q(x) }),
        Certificate::ItoFamilyI(x) => json!({ "ItoFamilyI": q(x) }),
    }
}

fn polygon_info(p: &LatticePolygon) -> Value {
    let c = p.lattice_counts();
    let (lw, dir) = p.lattice_width();
    json!({
        "polygon": polygon_json(p),
        "degenerate": p.is_degenerate(),
        "vol": p.normalized_volume(),
        "b": c.boundary,
        "i": c.interior,
        "lw": lw,
        "lw_direction": [dir.x, dir.y],
        "canonical": polygon_json(&p.canonical_form().0),
    })
}

fn linsys(p: &LatticePolygon, m: u32) -> Result<Value> {
    let sys = compute_system(p, m);
    let pair = if p.is_degenerate() { Value::Null } else { pair_json(&numeric_invariants(p, m)?) };
    Ok(json!({
        "polygon": polygon_json(p),
        "m": m,
        "ambient_points": sys.ambient_points,
        "conditions": sys.conditions,
        "rank": sys.rank(),
        "dimension": sys.dimension(),
        "expected_case": format!("{:?}", expected_case(p, m)),
        "pair": pair,
        "basis": sys.basis.iter().map(poly_json).collect::<Vec<_>>(),
    }))
}

fn classify(
    dataset: &PathBuf,
    oracle_path: Option<&PathBuf>,
    params: ClassifyParams,
    jobs: Option<usize>,
) -> Result<Value> {
    let entries = ingest_polygon_dataset(dataset)?;
    let polygons: Vec<LatticePolygon> = entries.into_iter().map(|e| e.polygon).collect();
    let workers = pool::worker_count(jobs)?;
    let hits = match oracle_path {
        Some(path) => {
            let table: OracleTable = oracle::load_oracle(path)?;
            pool::classify_parallel(&polygons, params, &table, workers)?
        }
        None => pool::classify_parallel(&polygons, params, &NoOracle, workers)?,
    };
    let mut per_m = vec![0usize; params.m_max as usize];
    for h in &hits {
        per_m[h.pair.m as usize - 1] += 1;
    }
    Ok(json!({
        "polygons": polygons.len(),
        "m_max": params.m_max,
        "volume_max": params.volume_max,
        "hits_per_m": per_m,
        "warnings": hits.iter().filter(|h| h.warning()).count(),
        "hits": hits.iter().map(hit_json).collect::<Vec<_>>(),
    }))
}

fn family(id: Family, m: u32, verify: bool, budget: u32) -> Result<Outcome> {
    let spec = FamilySpec::new(id, m)?;
    let inv = family_invariants(spec);
    let (c2, g) = id.table_values();
    let mut out = json!({
        "family": id.to_string(),
        "m": m,
        "polygon": polygon_json(&family_polygon(spec)),
        "self_intersection": inv.self_intersection,
        "genus": inv.genus,
        "lattice_width": inv.lattice_width,
        "table": { "self_intersection": c2, "genus": g },
    });
    let mut passed = inv.self_intersection == c2 && inv.genus == g && inv.lattice_width == m as i64;
    if verify && id != Family::V {
        let r = verify_family_end_to_end(spec, budget)?;
        passed &= r.passed();
        out["verification"] = json!({
            "implicit_newton_polygon": polygon_json(&r.implicit_newton_polygon),
            "polygon_matches": r.polygon_matches,
            "multiplicity": r.multiplicity,
            "lemma_multiplicity": r.lemma_multiplicity,
            "ord_zero": r.ord_zero.map(|(a, b)| [a, b]),
            "ord_infinity": r.ord_infinity.map(|(a, b)| [a, b]),
            "normalization": format!("{:?}", r.normalization),
        });
    } else if verify {
        out["verification"] = json!("no parametrization is known for this family; invariants only");
    }
    out["passed"] = json!(passed);
    Ok(Outcome::checked(passed, out))
}

fn surface_report(k_max: i64, rr_max: i64) -> Result<Outcome> {
    let dot = |a: &DivisorClass, b: &DivisorClass| surface::pair(a, b);
    let c_c = dot(&surface::C, &surface::C);
    let c_c1 = dot(&surface::C, &surface::C1);
    let c_c2 = dot(&surface::C, &surface::C2);
    let c1_c2 = dot(&surface::C1, &surface::C2);
    let mut ek_failures = Vec::new();
    for k in (-k_max..=k_max).filter(|&k| k != 0) {
        if !surface::verify_ek(k)?.passed() {
            ek_failures.push(k);
        }
    }
    let mut rr = Vec::new();
    let mut rr_ok = true;
    for k in 1..=rr_max {
        let (_, r) = surface::rr_polygon(k)?;
        rr_ok &= r.passed();
        rr.push(json!({
            "k": k, "m": r.m, "vol": r.volume, "b": r.boundary, "lw": r.lattice_width, "passed": r.passed(),
        }));
    }
    let checks = [
        ("gram_symmetric", surface::gram_is_symmetric()),
        ("relations_trivial", surface::relations_numerically_trivial()),
        ("c_squared_zero", c_c.is_zero()),
        ("c_disjoint_from_c1_c2", c_c1.is_zero() && c_c2.is_zero() && c1_c2.is_zero()),
        ("kxc_decomposition", surface::kxc_decomposition_check()),
        ("ek_range", ek_failures.is_empty()),
        ("ek_symbolic", surface::verify_ek_symbolic()),
        ("rr_polygons", rr_ok),
    ];
    let passed = checks.iter().all(|c| c.1);
    let mut out = json!({
        "intersections": { "C.C": q(&c_c), "C.C1": q(&c_c1), "C.C2": q(&c_c2), "C1.C2": q(&c1_c2) },
        "ek_failures": ek_failures,
        "rr": rr,
        "passed": passed,
    });
    for (name, ok) in checks {
        out[name] = json!(ok);
    }
    Ok(Outcome::checked(passed, out))
}

fn seshadri(p: &LatticePolygon, m: u32, irreducible: bool) -> Result<Value> {
    let e = estimate(p, m, irreducible)?;
    Ok(json!({
        "polygon": polygon_json(p),
        "m": m,
        "lower": q(&e.lower),
        "upper": q(&e.upper),
        "exact": e.exact.as_ref().map(q),
        "certificates": e.certificates.iter().map(certificate_json).collect::<Vec<_>>(),
        "rational": rationality_certificates(p, Some(m))?.iter().map(certificate_json).collect::<Vec<_>>(),
    }))
}

fn entry_json(ctx: &WppContext, e: &ClassEntry) -> Value {
    json!({
        "d": e.d,
        "m": e.m,
        "slope": format!("{}/{}", e.d, e.m),
        "side": format!("{:?}", slope_compare(ctx, e)),
        "self_intersection_on_x": q(&self_intersection_on_x(ctx, e)),
        "intrinsic_c2": e.intrinsic_c2,
        "intrinsic_genus": e.intrinsic_genus,
    })
}

fn wpp(a: u64, b: u64, c: u64, path: &PathBuf, best: bool, minus_one: bool) -> Result<Value> {
    let ctx = WppContext::new(a, b, c)?;
    let entries = table::ingest_table(path)?;
    let minus_one_filter = |e: &ClassEntry| e.is_intrinsic_minus_one();
    let filter: Option<&dyn Fn(&ClassEntry) -> bool> = if minus_one { Some(&minus_one_filter) } else { None };
    let best_entry = best_approximation(&ctx, &entries, filter)?;
    if best {
        return Ok(entry_json(&ctx, &best_entry));
    }
    Ok(json!({
        "abc": ctx.abc() as i64,
        "entries": entries.iter().filter(|e| filter.map_or(true, |f| f(e))).map(|e| entry_json(&ctx, e)).collect::<Vec<_>>(),
        "best": entry_json(&ctx, &best_entry),
        "note": "intrinsic_c2 and intrinsic_genus are table data and are not recomputed",
    }))
}

/// Dispatches a parsed command. `Err` means bad input (exit code 2).
pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::PolygonInfo(p) => Ok(Outcome::ok(polygon_info(&p.polygon()?))),
        Command::Linsys { polygon, m } => Ok(Outcome::ok(linsys(&polygon.polygon()?, *m)?)),
        Command::Classify { dataset, oracle, m_max, volume_max, jobs } => {
            let params = ClassifyParams { m_max: *m_max, volume_max: *volume_max };
            Ok(Outcome::ok(classify(dataset, oracle.as_ref(), params, *jobs)?))
        }
        Command::Family { id, m, verify, budget } => family(*id, *m, *verify, *budget),
        Command::Surface { k_max, rr_max } => surface_report(*k_max, *rr_max),
        Command::Seshadri { polygon, m, irreducible } => Ok(Outcome::ok(seshadri(&polygon.polygon()?, *m, *irreducible)?)),
        Command::Wpp { a, b, c, table, best, minus_one } => Ok(Outcome::ok(wpp(*a, *b, *c, table, *best, *minus_one)?)),
    }
}
