mod common;

use core::f64::consts::{PI, TAU};

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use common::shrink_to_valid;
use tripartite_discord::discord::CaseId;
use tripartite_discord::measure::{
    bloch_from_ty, branch_params, branch_params_scheme, cond_entropies_matrix, cond_entropy_b_given_a,
    cond_entropy_c_given_ab, entropy_h, measured_branches, objective_gf, projector, su2_from_ty, MeasurementScheme,
};
use tripartite_discord::{build_state, BlochVector, ComplexMatrix, ParamSet, Weighting, C64};

const WEIGHTINGS: [Weighting; 2] = [Weighting::Joint, Weighting::PerOutcome];

fn coef() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-0.5f64..=0.5)
}

fn family_31() -> impl Strategy<Value = ParamSet> {
    (-0.5f64..=0.5, -0.5f64..=0.5, coef(), coef(), coef(), coef()).prop_map(|(a3, b3, c, r, s, t)| {
        shrink_to_valid(ParamSet { a: [0.0, 0.0, a3], b: [0.0, 0.0, b3], c, r, s, t, ..ParamSet::zero() })
    })
}

fn family_327() -> impl Strategy<Value = ParamSet> {
    prop::array::uniform7(coef()).prop_map(|[a, b, c, r, s, v, t]| shrink_to_valid(ParamSet { a, b, c, r, s, v, t }))
}

fn axis() -> impl Strategy<Value = BlochVector> {
    (0.0..=PI, 0.0..TAU).prop_map(|(t, p)| BlochVector::from_angles(t, p))
}

fn check_against_matrix(p: &ParamSet, scheme: &MeasurementScheme) -> Result<(), TestCaseError> {
    let rho = build_state(p);
    let bp = branch_params_scheme(p, scheme);
    for w in WEIGHTINGS {
        let (sb, sc) = cond_entropies_matrix(&rho, scheme, w).unwrap();
        prop_assert!((bp.cond_b().unwrap() - sb).abs() <= 1e-9, "S_B {w:?}: {} vs {sb}", bp.cond_b().unwrap());
        prop_assert!((bp.cond_c(w).unwrap() - sc).abs() <= 1e-9, "S_C {w:?}: {} vs {sc}", bp.cond_c(w).unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn analytic_matches_matrix_on_family_31(p in family_31(), za in axis(), zb in axis()) {
        check_against_matrix(&p, &MeasurementScheme::shared(za, zb))?;
        let w = Weighting::PerOutcome;
        prop_assert_eq!(cond_entropy_b_given_a(&p, &za).unwrap(), branch_params(&p, &za, &zb).cond_b().unwrap());
        prop_assert_eq!(cond_entropy_c_given_ab(&p, &za, &zb, w).unwrap(), branch_params(&p, &za, &zb).cond_c(w).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn analytic_matches_matrix_on_family_327(p in family_327(), za in axis(), zb in axis()) {
        check_against_matrix(&p, &MeasurementScheme::shared(za, zb))?;
    }

    #[test]
    fn analytic_matches_matrix_with_conditional_b(p in family_327(), za in axis(), zb0 in axis(), zb1 in axis()) {
        check_against_matrix(&p, &MeasurementScheme::conditional(za, [zb0, zb1]))?;
    }

    #[test]
    fn objective_is_sign_flip_invariant(p in family_327(), za in axis(), zb in axis()) {
        for w in WEIGHTINGS {
            let v = objective_gf(&p, &za, &zb, w).unwrap();
            prop_assert!((objective_gf(&p, &-za, &zb, w).unwrap() - v).abs() <= 1e-10);
            prop_assert!((objective_gf(&p, &za, &-zb, w).unwrap() - v).abs() <= 1e-10);
            prop_assert!((objective_gf(&p, &-za, &-zb, w).unwrap() - v).abs() <= 1e-10);
        }
    }

    #[test]
    fn branch_probabilities_are_normalized(p in family_327(), za in axis(), zb in axis()) {
        let (bc, c) = measured_branches(&build_state(&p), &MeasurementScheme::shared(za, zb)).unwrap();
        prop_assert!((bc.total_probability() - 1.0).abs() <= 1e-12);
        prop_assert!((c.total_probability() - 1.0).abs() <= 1e-12);
        prop_assert!(bc.probabilities.iter().chain(&c.probabilities).all(|&q| (0.0..=1.0).contains(&q)));
    }

    #[test]
    fn conditional_entropies_stay_in_range(p in family_327(), za in axis(), zb in axis()) {
        let bp = branch_params(&p, &za, &zb);
        let sb = bp.cond_b().unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&sb));
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&bp.cond_c(Weighting::Joint).unwrap()));
        prop_assert!((-1e-12..=2.0 + 1e-12).contains(&bp.cond_c(Weighting::PerOutcome).unwrap()));
    }

    #[test]
    fn branch_bias_is_the_mean_of_alpha(p in family_327(), za in axis(), zb in axis()) {
        let bp = branch_params(&p, &za, &zb);
        prop_assert!((bp.eps - 0.5 * (bp.alpha[0][0] + bp.alpha[0][1])).abs() <= 1e-15);
        prop_assert!((bp.eps + 0.5 * (bp.alpha[1][0] + bp.alpha[1][1])).abs() <= 1e-15);
    }

    #[test]
    fn entropy_h_is_even(eps in -0.9f64..0.9, x in -0.1f64..0.1) {
        prop_assert_eq!(entropy_h(eps, x).unwrap(), entropy_h(eps, -x).unwrap());
    }

    #[test]
    fn unitary_axes_match_projectors(q in prop::array::uniform4(-1.0f64..1.0)) {
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(n > 1e-3);
        let [t, y1, y2, y3] = q.map(|x| x / n);
        let z = BlochVector::new(bloch_from_ty(t, [y1, y2, y3])).unwrap();
        let v = su2_from_ty(t, [y1, y2, y3]);
        for j in 0..2 {
            let mut ket = ComplexMatrix::zeros(2);
            ket[(j, j)] = C64::new(1.0, 0.0);
            prop_assert!(ket.conjugate_by(&v).max_abs_diff(&projector(&z, j)) <= 1e-14);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_is_monotone_in_the_pole_component(seed in any::<u64>()) {
        let p = common::sample_case(&mut common::rng(seed), CaseId::T2_1);
        for w in WEIGHTINGS {
            let f = |z3: f64| {
                let zb = BlochVector::new([(1.0 - z3 * z3).max(0.0).sqrt(), 0.0, z3]).unwrap();
                branch_params(&p, &BlochVector::Z, &zb).f(w).unwrap()
            };
            let values: Vec<f64> = (0..=100).map(|i| f(i as f64 / 100.0)).collect();
            for pair in values.windows(2) {
                prop_assert!(pair[1] - pair[0] >= -1e-10, "{p:?} {w:?}");
            }
        }
    }
}

#[test]
fn pole_component_alone_determines_f_on_family_31() {
    let p = common::example1();
    let zb = BlochVector::from_angles(0.7, 0.0);
    let zb_rot = BlochVector::from_angles(0.7, 2.3);
    for w in WEIGHTINGS {
        let f = |z: &BlochVector| branch_params(&p, &BlochVector::Z, z).f(w).unwrap();
        assert_abs_diff_eq!(f(&zb), f(&zb_rot), epsilon = 1e-14);
    }
}

#[test]
fn empty_correlations_leave_c_maximally_mixed() {
    let p = ParamSet { a: [0.0, 0.0, 0.2], b: [0.0, 0.0, -0.3], r: [0.1, -0.2, 0.25], ..ParamSet::zero() };
    let (za, zb) = (BlochVector::from_angles(0.3, 1.0), BlochVector::from_angles(1.2, 4.0));
    assert_abs_diff_eq!(cond_entropy_c_given_ab(&p, &za, &zb, Weighting::Joint).unwrap(), 1.0, epsilon = 1e-14);
    assert_abs_diff_eq!(cond_entropy_c_given_ab(&p, &za, &zb, Weighting::PerOutcome).unwrap(), 2.0, epsilon = 1e-14);
    let q = ParamSet { a: [0.0, 0.0, 0.4], ..ParamSet::zero() };
    assert_abs_diff_eq!(cond_entropy_b_given_a(&q, &za).unwrap(), 1.0, epsilon = 1e-14);
}

#[test]
fn maximally_mixed_objective() {
    let (za, zb) = (BlochVector::from_angles(0.3, 1.0), BlochVector::from_angles(1.2, 4.0));
    assert_abs_diff_eq!(
        objective_gf(&ParamSet::zero(), &za, &zb, Weighting::PerOutcome).unwrap(),
        0.0,
        epsilon = 1e-15
    );
    assert_abs_diff_eq!(objective_gf(&ParamSet::zero(), &za, &zb, Weighting::Joint).unwrap(), 1.0, epsilon = 1e-15);
}

#[test]
fn example1_pole_branch_lengths() {
    let bp = branch_params(&common::example1(), &BlochVector::Z, &BlochVector::Z);
    assert_abs_diff_eq!(bp.b_len[0], 0.05, epsilon = 1e-15);
    assert_abs_diff_eq!(bp.b_len[1], 0.55, epsilon = 1e-15);
}
