mod common;

use std::sync::Arc;

use orbitwist_core::catalog::{standard_cocycle, StandardType};
use orbitwist_core::cochain::solve_coboundary;
use orbitwist_core::drinfeld::DoubleAlgebra;
use orbitwist_core::io::{cocycle_to_json, parse_cocycle};
use orbitwist_core::modp::{bockstein, parse_poly, GradedPoly, Monomial};
use orbitwist_core::projrep::irreducibles;
use orbitwist_core::{Cochain, Group};
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        Just(Group::cyclic(4).unwrap()),
        Just(Group::elementary_abelian(2, 2).unwrap()),
        Just(Group::symmetric(3).unwrap()),
        Just(Group::dihedral(4).unwrap()),
        Just(Group::quaternion().unwrap()),
    ]
}

fn cochain(degree: usize, modulus: u32) -> impl Strategy<Value = Cochain> {
    small_group().prop_flat_map(move |g| {
        let n = g.order().pow(degree as u32);
        let g = Arc::new(g);
        prop::collection::vec(0..modulus, n)
            .prop_map(move |e| Cochain::new(g.clone(), degree, modulus, e).unwrap())
    })
}

/// A cocycle on (Z_2)^3 assembled from the standard types.
fn z2cube_cocycle() -> impl Strategy<Value = Cochain> {
    let kinds = [
        StandardType::I(1),
        StandardType::I(2),
        StandardType::I(3),
        StandardType::II(1, 2),
        StandardType::II(2, 3),
        StandardType::II(1, 3),
        StandardType::III(1, 2, 3),
    ];
    prop::collection::vec(any::<bool>(), kinds.len()).prop_map(move |pick| {
        kinds
            .iter()
            .zip(pick)
            .filter(|(_, p)| *p)
            .map(|(k, _)| standard_cocycle(&[2, 2, 2], *k).unwrap())
            .fold(Cochain::trivial(Arc::new(Group::elementary_abelian(2, 3).unwrap()), 3), |a, b| {
                a.mul(&b).unwrap()
            })
    })
}

fn poly(p: u64, n: usize, degree_cap: u32) -> impl Strategy<Value = GradedPoly> {
    let term = (prop::collection::vec(0..degree_cap, n), 0u32..(1 << n), 1i64..p as i64);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut q = GradedPoly::zero(p, n).unwrap();
        for (x, y, c) in terms {
            q = q.add(&GradedPoly::monomial(p, n, Monomial { x, y }, c).unwrap());
        }
        q
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundaries_are_cocycles_and_are_recognised(mu in cochain(2, 6)) {
        let d = mu.coboundary();
        prop_assert!(d.is_cocycle().is_ok());
        prop_assert!(d.coboundary().is_trivial());
        let sol = solve_coboundary(&d);
        let w = sol.witness().expect("coboundary must be solvable");
        prop_assert!(w.coboundary().same_values(&d));
    }

    #[test]
    fn normalization_stays_in_the_class(omega in z2cube_cocycle(), mu in prop::collection::vec(0u32..2, 64)) {
        let g = omega.group().clone();
        let mu = Cochain::new(g, 2, 2, mu).unwrap();
        let moved = omega.mul(&mu.coboundary()).unwrap();
        let normal = moved.normalize().unwrap();
        prop_assert!(normal.is_normalized());
        prop_assert!(normal.is_cocycle().is_ok());
        prop_assert!(solve_coboundary(&normal.div(&omega).unwrap()).is_trivial());
    }

    #[test]
    fn pentagon_oracle_agrees_with_library(omega in cochain(3, 2)) {
        let oracle = common::pentagon_counterexample(&omega).is_none();
        prop_assert_eq!(oracle, omega.is_cocycle().is_ok());
    }

    #[test]
    fn twisted_double_is_associative_on_random_triples(
        omega in z2cube_cocycle(),
        t in prop::collection::vec(0usize..64, 6),
    ) {
        let alg = DoubleAlgebra::new(&omega).unwrap();
        let (a, b, c) = ((t[0], t[1]), (t[2], t[3]), (t[4], t[5]));
        let (a, b, c) = ((a.0 % 8, a.1 % 8), (b.0 % 8, b.1 % 8), (c.0 % 8, c.1 % 8));
        prop_assert!(alg.associative_at(a, b, c).is_ok());
    }

    #[test]
    fn sector_irreducibles_match_the_regular_class_count(omega in z2cube_cocycle(), g in 0usize..8) {
        let alg = DoubleAlgebra::new(&omega).unwrap();
        let fam = alg.family();
        let sub = fam.centralizer(g);
        let basis = irreducibles(sub.group().clone(), fam.sector_cocycle(g), 3).unwrap();
        prop_assert_eq!(basis.len(), common::sector_rank(&omega, g));
        prop_assert_eq!(basis.dims().iter().map(|d| d * d).sum::<usize>(), 8);
    }

    #[test]
    fn cocycle_files_round_trip(omega in z2cube_cocycle()) {
        let back = parse_cocycle(&cocycle_to_json(&omega), "mem", omega.group().clone()).unwrap();
        prop_assert!(back.same_values(&omega));
    }

    #[test]
    fn bockstein_is_a_square_zero_derivation(a in poly(5, 3, 2), b in poly(5, 3, 2)) {
        let ba = bockstein(&a).unwrap();
        prop_assert!(bockstein(&ba).unwrap().is_zero());
        // homogeneous pieces only: the sign depends on deg a
        if let Some(da) = a.degree() {
            if a.terms().keys().all(|m| m.degree() == da) {
                let sign = if da % 2 == 0 { 1 } else { -1 };
                let lhs = bockstein(&a.mul(&b)).unwrap();
                let rhs = ba.mul(&b).add(&a.mul(&bockstein(&b).unwrap()).scale(sign));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn polynomials_round_trip_through_text(q in poly(3, 3, 3)) {
        prop_assert_eq!(parse_poly(3, 3, &q.to_string()).unwrap(), q);
    }
}
