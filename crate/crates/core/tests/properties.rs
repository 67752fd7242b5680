mod common;

use common::*;
use intrinsic_core::classify::{
    classify_pair, expected_case, intersection_product, numeric_invariants, ExpectedCase, NoOracle,
};
use intrinsic_core::families::{
    family_invariants, family_parametrization, family_polygon, verify_multiplicity_lemma, Family, FamilySpec,
};
use intrinsic_core::linsys::{compute_system, condition_count};
use intrinsic_core::num::{q_frac, q_int};
use intrinsic_core::num_traits::Zero;
use intrinsic_core::polygon::{convex_hull, mixed_volume, UnimodularMap};
use intrinsic_core::resultant::implicitize;
use intrinsic_core::seshadri::{component_minimum, estimate, segment_equality, width_upper_bound};
use intrinsic_core::surface::verify_ek;
use intrinsic_core::wpp::{self_intersection_on_x, slope_compare, ClassEntry, Slope, WppContext};
use intrinsic_core::{LatticePoint, LatticePolygon, LaurentPolynomial, Q, Z};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_polygon(rng: &mut ChaCha8Rng, side: i64) -> LatticePolygon {
    loop {
        let n = rng.gen_range(3..8);
        let pts: Vec<LatticePoint> =
            (0..n).map(|_| LatticePoint::new(rng.gen_range(-side..=side), rng.gen_range(-side..=side))).collect();
        let p = convex_hull(&pts).unwrap();
        if !p.is_degenerate() {
            return p;
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng) -> UnimodularMap {
    let mut g = UnimodularMap::IDENTITY;
    for _ in 0..rng.gen_range(1..5) {
        let k = rng.gen_range(-3..=3);
        let step = match rng.gen_range(0..3) {
            0 => [[1, k], [0, 1]],
            1 => [[1, 0], [k, 1]],
            _ => [[0, 1], [1, 0]],
        };
        let t = LatticePoint::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        g = UnimodularMap::new(step, t).unwrap().compose(&g);
    }
    g
}

#[test]
fn hulls_and_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let p = random_polygon(&mut rng, 8);
        let c = p.lattice_counts();
        assert_eq!(p.normalized_volume(), 2 * c.interior + c.boundary - 2);
        assert_eq!(convex_hull(&p.lattice_points()).unwrap(), p);
        let g = random_map(&mut rng);
        let q = p.map(&g);
        assert_eq!(q.normalized_volume(), p.normalized_volume());
        assert_eq!(q.lattice_counts(), c);
        assert_eq!(q.canonical_form().0, p.canonical_form().0);
        assert_eq!(q.lattice_width().0, p.lattice_width().0);
        assert_eq!(p.canonical_form().0.lattice_width().0, p.lattice_width().0);
    }
}

#[test]
fn fans_close_and_decompositions_sum_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let p = random_polygon(&mut rng, 4);
        let closing = p.normal_fan().unwrap().iter().fold(LatticePoint::ORIGIN, |acc, r| {
            acc + r.direction.rotate_left().scale(-r.edge_lattice_length)
        });
        assert_eq!(closing, LatticePoint::ORIGIN);
        for (a, b) in p.minkowski_decompositions(1 << 20).unwrap() {
            assert!(a.minkowski_sum(&b).equals_up_to_translation(&p));
        }
    }
}

#[test]
fn mixed_volume_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let (a, b, c) = (random_polygon(&mut rng, 4), random_polygon(&mut rng, 4), random_polygon(&mut rng, 4));
        assert_eq!(mixed_volume(&a, &b), mixed_volume(&b, &a));
        assert_eq!(mixed_volume(&a.minkowski_sum(&b), &c), mixed_volume(&a, &c) + mixed_volume(&b, &c));
        assert_eq!(mixed_volume(&a, &a), q_int(a.normalized_volume()));
    }
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPolynomial {
    loop {
        let n = rng.gen_range(1..6);
        let f = LaurentPolynomial::from_terms((0..n).map(|_| {
            let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            ((rng.gen_range(-3..=3), rng.gen_range(-3..=3)), Q::from_integer(Z::from(c)))
        }));
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn newton_polygons_and_multiplicities_of_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let vanishing = [poly("u - 1"), poly("v - 1"), poly(EX_RED_F1)];
    for _ in 0..150 {
        let mut f = random_laurent(&mut rng);
        let mut g = random_laurent(&mut rng);
        if rng.gen_bool(0.5) {
            f = &f * &vanishing[rng.gen_range(0..3)];
        }
        if rng.gen_bool(0.5) {
            g = &g * &vanishing[rng.gen_range(0..3)];
        }
        let fg = &f * &g;
        assert_eq!(
            fg.newton_polygon().unwrap(),
            f.newton_polygon().unwrap().minkowski_sum(&g.newton_polygon().unwrap())
        );
        let (mf, mg) = (f.multiplicity_at_identity().unwrap(), g.multiplicity_at_identity().unwrap());
        assert_eq!(fg.multiplicity_at_identity().unwrap(), mf + mg);
        assert_eq!(f.shift(rng.gen_range(-4..4), rng.gen_range(-4..4)).multiplicity_at_identity().unwrap(), mf);
    }
}

#[test]
fn implicit_equations_vanish_on_samples() {
    for (fam, m) in [(Family::I, 5), (Family::II, 5), (Family::IV, 6)] {
        let p = family_parametrization(FamilySpec::new(fam, m).unwrap()).unwrap();
        let eq = implicitize(&p.f1, &p.f2, &p.f3, &p.f4).unwrap().equation;
        let mut used = 0;
        for i in 0..80i64 {
            let t = q_frac(i - 37, 7);
            let (d2, d4) = (p.f2.eval(&t), p.f4.eval(&t));
            let (n1, n3) = (p.f1.eval(&t), p.f3.eval(&t));
            if d2.is_zero() || d4.is_zero() || n1.is_zero() || n3.is_zero() {
                continue;
            }
            assert!(eq.eval(&(n1 / d2), &(n3 / d4)).is_zero());
            used += 1;
            if used == 50 {
                break;
            }
        }
        assert_eq!(used, 50);
    }
}

#[test]
fn systems_have_order_and_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let p = random_polygon(&mut rng, 3);
        let m = rng.gen_range(1..=4);
        let sys = compute_system(&p, m);
        assert!(sys.rank() <= condition_count(m));
        assert!(sys.dimension() + sys.conditions >= sys.ambient_points);
        for b in &sys.basis {
            assert!(b.multiplicity_at_identity().unwrap() >= m);
            assert!(b.support().iter().all(|w| p.contains(*w)));
        }
        let q = p.map(&random_map(&mut rng));
        let sq = compute_system(&q, m);
        assert_eq!(sq.dimension(), sys.dimension());
    }
}

#[test]
fn pair_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let p = random_polygon(&mut rng, 4);
        let m = rng.gen_range(1..=6u32);
        let pair = numeric_invariants(&p, m).unwrap();
        let (vol, b) = (p.normalized_volume(), p.boundary_count());
        let mi = m as i64;
        assert_eq!(pair.self_intersection, vol - mi * mi);
        assert_eq!(pair.arithmetic_genus, q_frac(vol - b + mi - mi * mi, 2) + q_int(1));
        if expected_case(&p, m) != ExpectedCase::NotApplicable {
            let c = p.lattice_counts();
            assert!(2 * c.interior + 2 * c.boundary >= mi * (mi + 1));
            assert!(2 * c.interior + c.boundary - 2 <= mi * mi);
            assert!(2 * c.interior - mi * mi + mi >= 0);
        }
        let q = random_polygon(&mut rng, 4);
        let m2 = rng.gen_range(1..=6u32);
        let pq = numeric_invariants(&q, m2).unwrap();
        assert_eq!(intersection_product(&pair, &pq), intersection_product(&pq, &pair));
        let r = random_polygon(&mut rng, 4);
        let pr = numeric_invariants(&r, 2).unwrap();
        let sum = numeric_invariants(&p.minkowski_sum(&q), m + m2).unwrap();
        assert_eq!(
            intersection_product(&sum, &pr),
            intersection_product(&pair, &pr) + intersection_product(&pq, &pr)
        );
    }
}

#[test]
fn hits_regenerate() {
    for (m, p) in classification_polygons() {
        let hit = classify_pair(&p, m, &NoOracle).unwrap().unwrap();
        assert_eq!(compute_system(&p, m).basis, vec![hit.polynomial.clone()]);
    }
}

#[test]
fn family_closed_forms() {
    for fam in Family::ALL {
        for m in fam.range(40) {
            let spec = FamilySpec::new(fam, m).unwrap();
            let p = family_polygon(spec);
            let mi = m as i64;
            let c = p.lattice_counts();
            let (vol, b) = match fam {
                Family::I | Family::II => (mi * mi - 1, mi + 1),
                Family::III => (mi * mi - 2, mi),
                Family::IV => (mi * mi, mi + 2),
                Family::V => (mi * mi, mi),
            };
            assert_eq!((p.normalized_volume(), c.boundary), (vol, b), "{} {}", fam, m);
            let inv = family_invariants(spec);
            assert_eq!((inv.self_intersection, inv.genus), fam.table_values());
            assert_eq!(inv.lattice_width, mi);
            if fam != Family::V {
                let par = family_parametrization(spec).unwrap();
                assert_eq!(verify_multiplicity_lemma(&par), Ok(m));
            }
        }
    }
}

#[test]
fn ek_identities_over_range() {
    for k in -50..=50 {
        if k != 0 {
            assert!(verify_ek(k).unwrap().passed(), "k = {}", k);
        }
    }
}

#[test]
fn seshadri_consistency() {
    for fam in Family::ALL {
        for m in fam.range(20) {
            let spec = FamilySpec::new(fam, m).unwrap();
            let p = family_polygon(spec);
            let e = estimate(&p, m, true).unwrap();
            let inv = family_invariants(spec);
            let mi = m as i64;
            assert_eq!(e.exact, Some(q_int(mi) + q_frac(inv.self_intersection, mi)));
            assert!(e.lower <= e.upper);
            let single = component_minimum(&[(q_int(p.normalized_volume()), q_int(mi))]).unwrap();
            assert_eq!(single, e.upper);
            if let Some(s) = segment_equality(&p).unwrap() {
                assert_eq!(s, width_upper_bound(&p).unwrap());
            }
        }
    }
}

#[test]
fn slope_and_self_intersection_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ctx = WppContext::new(9, 10, 13).unwrap();
    for _ in 0..500 {
        let e = ClassEntry::new(rng.gen_range(1..2000), rng.gen_range(1..60));
        let s = self_intersection_on_x(&ctx, &e);
        let expect = match s.cmp(&Q::zero()) {
            std::cmp::Ordering::Less => Slope::Below,
            std::cmp::Ordering::Equal => Slope::On,
            std::cmp::Ordering::Greater => Slope::Above,
        };
        assert_eq!(slope_compare(&ctx, &e), expect);
    }
}
