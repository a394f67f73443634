use nullcone::exactgeom::{in_hull, int, min_norm_point_hull, satisfies_optimality, QVec, Rational};
use nullcone::strata::analyze;
use nullcone::{weight_system, weyl_dim, EnumOptions, RootDatum, RootSystemType, Series};
use num_traits::Signed;
use proptest::prelude::*;

fn points(dim: usize) -> impl Strategy<Value = Vec<QVec>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, dim), 1..8)
        .prop_map(|pts| pts.iter().map(|p| QVec::from_ints(p)).collect())
}

fn signed_perm(dim: usize) -> impl Strategy<Value = (Vec<usize>, Vec<bool>)> {
    (Just((0..dim).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), dim))
}

fn apply(v: &QVec, perm: &[usize], flip: &[bool]) -> QVec {
    QVec::new(
        perm.iter()
            .zip(flip)
            .map(|(&i, &f)| if f { -v.coords()[i].clone() } else { v.coords()[i].clone() })
            .collect(),
    )
}

const TYPES: [(Series, usize); 10] = [
    (Series::A, 1),
    (Series::A, 2),
    (Series::A, 3),
    (Series::B, 3),
    (Series::C, 2),
    (Series::C, 3),
    (Series::D, 4),
    (Series::G, 2),
    (Series::F, 4),
    (Series::E, 6),
];

fn datum(k: usize) -> RootDatum {
    let (s, r) = TYPES[k];
    RootDatum::build(RootSystemType::new(s, r).unwrap()).unwrap()
}

fn small_weight(d: &RootDatum, raw: &[i64]) -> Vec<i64> {
    (0..d.rank()).map(|i| raw[i % raw.len()]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_point_is_certified(pts in (1usize..=4).prop_flat_map(points)) {
        let q = min_norm_point_hull(&pts).unwrap();
        prop_assert!(satisfies_optimality(&q, &pts));
        prop_assert!(in_hull(&q, &pts).unwrap());
    }

    #[test]
    fn hull_point_ignores_order_and_repeats(pts in points(3), extra in 0usize..8) {
        let q = min_norm_point_hull(&pts).unwrap();
        let mut more: Vec<QVec> = pts.iter().rev().cloned().collect();
        more.push(pts[extra % pts.len()].clone());
        prop_assert_eq!(min_norm_point_hull(&more).unwrap(), q);
    }

    #[test]
    fn hull_point_is_equivariant(pts in points(3), (perm, flip) in signed_perm(3)) {
        let q = min_norm_point_hull(&pts).unwrap();
        let moved: Vec<QVec> = pts.iter().map(|p| apply(p, &perm, &flip)).collect();
        prop_assert_eq!(min_norm_point_hull(&moved).unwrap(), apply(&q, &perm, &flip));
    }

    #[test]
    fn scaling_points_scales_hull_point(pts in points(2), k in 1i64..5) {
        let t = int(k);
        let q = min_norm_point_hull(&pts).unwrap();
        let scaled: Vec<QVec> = pts.iter().map(|p| p.scale(&t)).collect();
        prop_assert_eq!(min_norm_point_hull(&scaled).unwrap(), q.scale(&t));
    }

    #[test]
    fn dominant_rep_is_dominant_in_orbit(k in 0usize..TYPES.len(), raw in prop::collection::vec(-3i64..=3, 1..8)) {
        let d = datum(k);
        let v = d.weight(&small_weight(&d, &raw)).unwrap().euclid;
        let dom = d.dominant_rep(&v);
        prop_assert!(d.is_dominant(&dom));
        prop_assert_eq!(dom.norm2(), v.norm2());
        prop_assert_eq!(d.dominant_rep(&d.simple_reflection(0, &v)), dom);
    }

    #[test]
    fn simple_reflections_are_involutions(k in 0usize..TYPES.len(), raw in prop::collection::vec(-3i64..=3, 1..8), i in 0usize..8) {
        let d = datum(k);
        let i = i % d.rank();
        let v = d.weight(&small_weight(&d, &raw)).unwrap().euclid;
        prop_assert_eq!(d.simple_reflection(i, &d.simple_reflection(i, &v)), v.clone());
        let pairing: Rational = d.coroot_pairing(i, &d.simple_reflection(i, &v));
        prop_assert_eq!(pairing, -d.coroot_pairing(i, &v));
    }

    #[test]
    fn positive_roots_permuted_up_to_sign(k in 0usize..TYPES.len(), i in 0usize..8) {
        let d = datum(k);
        let i = i % d.rank();
        let alpha = &d.simple_roots()[i];
        for beta in d.positive_roots() {
            let img = d.simple_reflection(i, beta);
            if beta == alpha {
                prop_assert_eq!(img, beta.scale(&int(-1)));
            } else {
                prop_assert!(d.positive_roots().contains(&img));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn freudenthal_matches_weyl(k in 0usize..TYPES.len() - 2, raw in prop::collection::vec(0i64..=2, 1..5)) {
        let d = datum(k);
        let l = d.weight(&small_weight(&d, &raw)).unwrap();
        let dim = weyl_dim(&d, &l).unwrap();
        prop_assume!(dim <= 400);
        let ws = weight_system(&d, &l, 400).unwrap();
        prop_assert_eq!(ws.dim(), dim);
        prop_assert!(ws.is_weyl_stable());
        prop_assert!(ws.weighted_sum().is_zero());
        let dual = weight_system(&d, &d.dual_weight(&l).unwrap(), 400).unwrap();
        let neg = ws.negated();
        prop_assert_eq!(dual.entries(), neg.entries());
    }

    #[test]
    fn strata_scale_invariant(k in 0usize..TYPES.len() - 3, raw in prop::collection::vec(0i64..=2, 1..4), t in 2i64..4) {
        let d = datum(k);
        let l = d.weight(&small_weight(&d, &raw)).unwrap();
        prop_assume!(!l.is_zero() && weyl_dim(&d, &l).unwrap() <= 30);
        let ws = weight_system(&d, &l, 30).unwrap();
        let a = analyze(&ws, &EnumOptions::default()).unwrap();
        let b = analyze(&ws.scaled(&int(t)), &EnumOptions::default()).unwrap();
        prop_assert_eq!(a.dim_nullcone, b.dim_nullcone);
        prop_assert_eq!(a.num_components, b.num_components);
        let dims = |r: &nullcone::NullconeReport| r.strata.iter().map(|s| (s.dim_l, s.dim_flag)).collect::<Vec<_>>();
        prop_assert_eq!(dims(&a), dims(&b));
        prop_assert!(a.strata.iter().all(|s| s.candidate.norm2.is_positive()));
    }

    #[test]
    fn dual_module_has_same_nullcone(k in 0usize..TYPES.len() - 3, raw in prop::collection::vec(0i64..=2, 1..4)) {
        let d = datum(k);
        let l = d.weight(&small_weight(&d, &raw)).unwrap();
        prop_assume!(!l.is_zero() && weyl_dim(&d, &l).unwrap() <= 30);
        let ws = weight_system(&d, &l, 30).unwrap();
        let a = analyze(&ws, &EnumOptions::default()).unwrap();
        let b = analyze(&ws.negated(), &EnumOptions::default()).unwrap();
        prop_assert_eq!((a.dim_nullcone, a.num_components), (b.dim_nullcone, b.num_components));
        prop_assert!(a.dim_nullcone <= a.dim_module);
    }
}
