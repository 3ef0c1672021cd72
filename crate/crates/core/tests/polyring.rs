use macvertex::exactnum::{CyclotomicNumber as Cyclo, Rational};
use macvertex::polyring::{
    det_fraction_free, interpolate_tensor, univariate_pole_order, vandermonde_factors, vandermonde_product,
    MultiPoly, PolyError, PolyMatrix, RationalFunction,
};
use macvertex::vertex::{coefficient_extract, extend_spectral, fused_determinant};
use num_bigint::BigInt;
use proptest::prelude::*;

fn x(nvars: usize, i: usize) -> MultiPoly {
    MultiPoly::var(nvars, 1, i)
}

fn int(nvars: usize, n: i64) -> MultiPoly {
    MultiPoly::from_int(nvars, 1, n)
}

fn c(order: u32, n: i64) -> Cyclo {
    Cyclo::from_int(order, n)
}

#[test]
fn evaluation_examples() {
    let z3 = Cyclo::zeta(3, 1).unwrap();
    let p = &MultiPoly::var(2, 3, 0) * &MultiPoly::var(2, 3, 1);
    assert_eq!(p.eval(&[z3.clone(), z3.pow(2).unwrap()]).unwrap(), Cyclo::one(3));
    let seven = MultiPoly::from_int(2, 3, 7);
    assert_eq!(seven.eval(&[z3.clone(), Cyclo::zero(3)]).unwrap(), c(3, 7));
    let vals: Vec<Cyclo> = (1..=3).map(|k| c(1, k)).collect();
    let v: Vec<MultiPoly> = (0..3).map(|i| x(3, i)).collect();
    assert_eq!(vandermonde_product(&v).unwrap().eval(&vals).unwrap(), c(1, 2));
}

#[test]
fn negative_exponent_at_zero_is_an_error() {
    let p = MultiPoly::monomial(1, 1, vec![-1], Cyclo::one(1));
    assert!(matches!(p.eval(&[Cyclo::zero(1)]), Err(PolyError::Eval(_))));
    assert_eq!(p.eval(&[c(1, 4)]).unwrap(), Cyclo::from_frac(1, 1, 4));
}

#[test]
fn exact_division_examples() {
    let (a, b) = (x(2, 0), x(2, 1));
    let num = &(&a * &a) - &(&b * &b);
    assert_eq!(num.div_exact(&(&a - &b)).unwrap(), &a + &b);
    assert_eq!(num.div_exact(&int(2, 1)).unwrap(), num);
    assert!(matches!((&num + &int(2, 1)).div_exact(&(&a - &b)), Err(PolyError::NotDivisible(_))));
    assert!(matches!(num.div_exact(&MultiPoly::zero(2, 1)), Err(PolyError::DivisionByZero)));
}

#[test]
fn cleared_determinant_is_divisible_for_n2() {
    // The whole elimination route raises on an inexact division.
    let q = Cyclo::zeta(5, 1).unwrap();
    assert!(fused_determinant(2, 1, &q).is_ok());
    assert!(fused_determinant(2, 2, &q).is_ok());
}

fn rf(p: MultiPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

#[test]
fn determinant_examples() {
    let m = PolyMatrix::from_rows(vec![vec![rf(int(1, 1)), rf(int(1, 2))], vec![rf(int(1, 3)), rf(int(1, 4))]]).unwrap();
    assert_eq!(det_fraction_free(&m).unwrap(), rf(int(1, -2)));
    let rows = (1..=3)
        .map(|v| (0..3).map(|k| rf(int(1, (v as i64).pow(k)))).collect())
        .collect();
    let vdm = PolyMatrix::from_rows(rows).unwrap();
    assert_eq!(det_fraction_free(&vdm).unwrap(), rf(int(1, 2)));
}

#[test]
fn one_by_one_block_has_the_expected_inverse_product() {
    // 1 / ((x - q y)(x - y/q)) with q = 5/2, as a 1x1 determinant.
    let q = Cyclo::from_frac(1, 5, 2);
    let (a, b) = (x(2, 0), x(2, 1));
    let den = &(&a - &b.scale(&q)) * &(&a - &b.scale(&q.invert().unwrap()));
    let entry = RationalFunction::new(int(2, 1), den.clone()).unwrap();
    let m = PolyMatrix::from_rows(vec![vec![entry.clone()]]).unwrap();
    assert_eq!(det_fraction_free(&m).unwrap(), entry);
}

#[test]
fn vandermonde_examples() {
    assert_eq!(vandermonde_product(&[x(1, 0)]).unwrap(), int(1, 1));
    assert_eq!(vandermonde_product(&[x(2, 0), x(2, 1)]).unwrap(), &x(2, 1) - &x(2, 0));
    assert_eq!(vandermonde_factors(&[x(2, 0), x(2, 1)]).unwrap().len(), 1);
}

#[test]
fn vandermonde_of_extended_variables_factorises() {
    let q = Cyclo::zeta(5, 1).unwrap();
    let (x1, x2) = (MultiPoly::var(2, 5, 0), MultiPoly::var(2, 5, 1));
    let qm = MultiPoly::constant(2, q.clone());
    let ext = extend_spectral(&[x1.clone(), x2.clone()], 2, &qm);
    assert_eq!(ext.len(), 4);
    let q2 = q.pow(2).unwrap();
    let one = Cyclo::one(5);
    // (q^2 - 1)^2 q^2 x1 x2 (x2 - x1)^2 (q^2 x2 - x1)(x2 - q^2 x1), multiplied out.
    let pref = (&q2 - &one).pow(2).unwrap();
    let pref = &pref * &q2;
    let d = &x2 - &x1;
    let expect = [
        MultiPoly::constant(2, pref),
        &x1 * &x2,
        &d * &d,
        &x2.scale(&q2) - &x1,
        &x2 - &x1.scale(&q2),
    ]
    .iter()
    .fold(MultiPoly::one(2, 5), |acc, f| &acc * f);
    assert_eq!(vandermonde_product(&ext).unwrap(), expect);
}

#[test]
fn coefficient_extraction_examples() {
    let (a, b) = (x(2, 0), x(2, 1));
    let p = &(&a * &a) + &(&(&a * &b).scale(&c(1, 3)));
    assert_eq!(coefficient_extract(&p, &[1, 1]), c(1, 3));
    assert!(coefficient_extract(&p, &[0, 5]).is_zero());
    let z = fused_determinant(2, 1, &Cyclo::zeta(3, 1).unwrap()).unwrap();
    // x2 y2 in the ordering (x1, x2, y1, y2)
    assert_eq!(coefficient_extract(&z, &[0, 1, 0, 1]), Cyclo::one(3));
}

#[test]
fn pole_order_examples() {
    let u0 = Cyclo::zeta(15, 4).unwrap();
    let u = MultiPoly::var(1, 15, 0);
    let lin = &u - &MultiPoly::constant(1, u0.clone());
    let f = RationalFunction::new(&lin * &lin, &u + &MultiPoly::one(1, 15)).unwrap();
    assert_eq!(univariate_pole_order(&f, &u0).unwrap(), 2);
    let g = RationalFunction::new(MultiPoly::one(1, 15), lin).unwrap();
    assert_eq!(univariate_pole_order(&g, &u0).unwrap(), -1);
    assert!(matches!(
        univariate_pole_order(&RationalFunction::zero(1, 15), &u0),
        Err(PolyError::UndefinedOrder)
    ));
}

#[test]
fn rational_functions_normalise() {
    let (a, b) = (x(2, 0), x(2, 1));
    let f = RationalFunction::new(&(&a * &a) - &(&b * &b), &a - &b).unwrap();
    assert_eq!(f.as_polynomial(), Some(&a + &b));
    assert!(RationalFunction::new(a.clone(), MultiPoly::zero(2, 1)).is_err());
}

#[test]
fn tensor_interpolation_recovers_a_polynomial() {
    let (a, b) = (x(2, 0), x(2, 1));
    let p = &(&(&a * &a) * &b) - &b.scale(&c(1, 7));
    let nodes: Vec<Vec<Rational>> = vec![
        (0..3).map(|k| Rational::from_integer(BigInt::from(k + 1))).collect(),
        (0..2).map(|k| Rational::from_integer(BigInt::from(2 * k - 1))).collect(),
    ];
    let back = interpolate_tensor(1, &nodes, |pt| p.eval(pt)).unwrap();
    assert_eq!(back, p);
}

#[test]
fn serialization_round_trip() {
    let z = fused_determinant(2, 2, &Cyclo::zeta(5, 1).unwrap()).unwrap();
    let s = serde_json::to_string(&z).unwrap();
    let back: MultiPoly = serde_json::from_str(&s).unwrap();
    assert_eq!(back, z);
    assert_eq!(serde_json::to_string(&back).unwrap(), s);
}

fn laplace(m: &[Vec<MultiPoly>]) -> MultiPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].nvars(), m[0][0].order());
    for j in 0..m.len() {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let t = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn sparse_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0i32..3, nvars), -5i64..=5, -3i64..=3), 0..5).prop_map(
        move |terms| {
            let z = Cyclo::zeta(5, 1).unwrap();
            MultiPoly::from_terms(
                nvars,
                5,
                terms
                    .into_iter()
                    .map(|(e, a, b)| (e, &Cyclo::from_int(5, a) + &(&z * &Cyclo::from_int(5, b)))),
            )
        },
    )
}

fn point(nvars: usize) -> impl Strategy<Value = Vec<Cyclo>> {
    prop::collection::vec((-9i64..=9, 1i64..=9), nvars)
        .prop_map(|v| v.into_iter().map(|(n, d)| Cyclo::from_frac(5, n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_division_inverts_multiplication(a in sparse_poly(3), b in sparse_poly(3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in sparse_poly(3), b in sparse_poly(3), w in point(3)) {
        let (ea, eb) = (a.eval(&w).unwrap(), b.eval(&w).unwrap());
        prop_assert_eq!((&a * &b).eval(&w).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&w).unwrap(), &ea + &eb);
    }

    #[test]
    fn homogeneity_detector_matches_term_degrees(a in sparse_poly(3), d in 0i64..7) {
        let expect = a.terms().all(|(e, _)| e.degree() == d);
        prop_assert_eq!(a.is_homogeneous_of_degree(d), expect);
    }

    #[test]
    fn fraction_free_determinant_matches_cofactor_expansion(
        entries in prop::collection::vec(sparse_poly(2), 9)
    ) {
        let m: Vec<Vec<MultiPoly>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        let pm = PolyMatrix::from_rows(
            m.iter().map(|r| r.iter().cloned().map(RationalFunction::from_poly).collect()).collect(),
        ).unwrap();
        prop_assert_eq!(det_fraction_free(&pm).unwrap(), RationalFunction::from_poly(laplace(&m)));
    }
}
