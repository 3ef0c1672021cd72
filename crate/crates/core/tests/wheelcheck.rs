use macvertex::exactnum::CyclotomicNumber as Cyclo;
use macvertex::polyring::MultiPoly;
use macvertex::vertex::fused_determinant;
use macvertex::wheelcheck::{
    check_vn_membership, check_wheel, is_fully_symmetric, restrict, uniqueness_check, wheel_chains, WheelError,
    WheelMode,
};
use proptest::prelude::*;

fn zeta(m: u32) -> Cyclo {
    Cyclo::zeta(m, 1).unwrap()
}

#[test]
fn chain_examples() {
    let c = wheel_chains(1, 2, 3).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!((c[0].indices.clone(), c[0].shifts.clone()), (vec![1, 2, 3], vec![0, 0]));
    let mut pats: Vec<Vec<u32>> = wheel_chains(2, 2, 3).unwrap().into_iter().map(|c| c.shifts).collect();
    pats.sort();
    assert_eq!(pats, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
}

#[test]
fn pattern_counts_are_triangular() {
    for ell in 1..=4 {
        assert_eq!(wheel_chains(ell, 2, 3).unwrap().len(), ell * (ell + 1) / 2);
    }
    // C(4,3) index sets times three patterns
    assert_eq!(wheel_chains(2, 2, 4).unwrap().len(), 12);
}

#[test]
fn too_few_variables_is_vacuous() {
    assert!(wheel_chains(2, 2, 2).unwrap().is_empty());
    assert!(wheel_chains(0, 2, 4).is_err());
    let q = zeta(5);
    let r = check_wheel(&MultiPoly::one(2, 5), 2, 2, &q.pow(2).unwrap(), &q, WheelMode::Symbolic, false).unwrap();
    assert!(r.passed());
    assert_eq!(r.total_chains, 0);
}

#[test]
fn mismatched_fields_are_rejected() {
    let r = check_wheel(&MultiPoly::one(3, 3), 1, 2, &zeta(3), &zeta(5), WheelMode::Symbolic, true);
    assert!(matches!(r, Err(WheelError::InvalidInput(_))));
}

#[test]
fn restriction_follows_the_chain() {
    let q = zeta(3);
    let c = &wheel_chains(1, 2, 3).unwrap()[0];
    // z2 - q z1 vanishes on z2 = q z1
    let f = &MultiPoly::var(3, 3, 1) - &MultiPoly::var(3, 3, 0).scale(&q);
    assert!(restrict(&f, c, &q.pow(2).unwrap(), &q).unwrap().is_zero());
}

#[test]
fn partition_functions_lie_in_the_space() {
    for (n, ell) in [(2, 1), (2, 2), (1, 3)] {
        let q = zeta(2 * ell as u32 + 1);
        let z = fused_determinant(n, ell, &q).unwrap();
        let r = check_vn_membership(&z, n, ell, &q).unwrap();
        assert!(r.all(), "({n},{ell}): {r:?}");
    }
}

#[test]
fn membership_failures_are_reported_per_condition() {
    let q = zeta(3);
    let v = |i| MultiPoly::var(4, 3, i);
    // x1 x2 is symmetric in x but not under x <-> y
    let r = check_vn_membership(&(&v(0) * &v(1)), 2, 1, &q).unwrap();
    assert!(r.x_symmetric && r.y_symmetric && r.total_degree && r.partial_degree);
    assert!(!r.swap_xy);
    let r = check_vn_membership(&(&v(0) * &v(0)), 2, 1, &q).unwrap();
    assert!(!r.partial_degree && !r.x_symmetric);
    let r = check_vn_membership(&(&v(0) + &v(1)), 2, 1, &q).unwrap();
    assert!(r.homogeneous && !r.total_degree);
    let e2 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        .iter()
        .fold(MultiPoly::zero(4, 3), |a, &(i, j)| &a + &(&v(i) * &v(j)));
    // e2 is the only candidate left, and it is the partition function
    assert!(is_fully_symmetric(&e2));
    assert!(check_vn_membership(&e2, 2, 1, &q).unwrap().all());
    assert_eq!(e2, fused_determinant(2, 1, &q).unwrap());
    assert!(check_vn_membership(&e2, 3, 1, &q).is_err());
}

#[test]
fn uniqueness_of_the_partition_function() {
    let q = zeta(5);
    let z = fused_determinant(2, 2, &q).unwrap();
    let b = z.scale(&(&q + &Cyclo::from_int(5, 3)));
    let r = uniqueness_check(&z, &b, 2, 2, &q, 11).unwrap();
    assert!(r.a_member && r.b_member && r.proportional);
    let w = MultiPoly::var(4, 5, 0).pow(4);
    let r = uniqueness_check(&z, &w, 2, 2, &q, 11).unwrap();
    assert!(!r.b_member && !r.proportional);
}

#[test]
fn random_mode_is_reproducible() {
    let q = zeta(3);
    let p = q.pow(2).unwrap();
    let f = &MultiPoly::var(4, 3, 0) + &MultiPoly::var(4, 3, 3);
    let run = |seed| {
        let r = check_wheel(&f, 1, 2, &p, &q, WheelMode::Random { trials: 2, seed }, false).unwrap();
        r.failures.iter().map(|x| x.witness.clone().unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(run(5), run(5));
    assert_ne!(run(5), run(6));
}

fn poly4() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0i32..3, 4), -4i64..=4, -2i64..=2), 0..5).prop_map(|terms| {
        let z = zeta(3);
        MultiPoly::from_terms(
            4,
            3,
            terms
                .into_iter()
                .map(|(e, a, b)| (e, &Cyclo::from_int(3, a) + &(&z * &Cyclo::from_int(3, b)))),
        )
    })
}

/// `prod_{i<j} (z_j - q z_i)`, which vanishes on every chain through its
/// first link.
fn first_link_vanisher(q: &Cyclo) -> MultiPoly {
    let mut acc = MultiPoly::one(4, 3);
    for i in 0..4 {
        for j in i + 1..4 {
            acc = &acc * &(&MultiPoly::var(4, 3, j) - &MultiPoly::var(4, 3, i).scale(q));
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symbolic_and_random_modes_agree(f in poly4(), seed in any::<u64>()) {
        let q = zeta(3);
        let p = q.pow(2).unwrap();
        let sym = check_wheel(&f, 1, 2, &p, &q, WheelMode::Symbolic, false).unwrap();
        let rnd = check_wheel(&f, 1, 2, &p, &q, WheelMode::Random { trials: 3, seed }, false).unwrap();
        let chains = |r: &macvertex::wheelcheck::WheelReport| {
            r.failures.iter().map(|x| x.chain.clone()).collect::<Vec<_>>()
        };
        prop_assert_eq!(chains(&sym), chains(&rnd));
    }

    #[test]
    fn ideal_elements_pass(f in poly4()) {
        let q = zeta(3);
        let g = &f * &first_link_vanisher(&q);
        let r = check_wheel(&g, 1, 2, &q.pow(2).unwrap(), &q, WheelMode::Symbolic, false).unwrap();
        prop_assert!(r.passed());
    }
}
