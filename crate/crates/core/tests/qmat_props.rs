mod common;

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use tripartite_discord::qmat::{eig_hermitian, kron, partial_trace, von_neumann_entropy};
use tripartite_discord::{ComplexMatrix, Subsystems};

fn unitary(rng: &mut impl rand::Rng, qubits: usize) -> ComplexMatrix {
    (1..qubits).fold(common::unitary2(rng), |u, _| kron(&u, &common::unitary2(rng)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn spectrum_is_invariant_under_local_unitaries(seed in any::<u64>(), qubits in 1usize..=3) {
        let mut rng = common::rng(seed);
        let rho = common::random_density(&mut rng, qubits);
        let u = unitary(&mut rng, qubits);
        let (s0, s1) = (eig_hermitian(&rho).unwrap(), eig_hermitian(&rho.conjugate_by(&u)).unwrap());
        for (x, y) in s0.iter().zip(s1.iter()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
        prop_assert!((s0.sum() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn entropy_is_additive_on_products(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (a, bc) = (common::random_density(&mut rng, 1), common::random_density(&mut rng, 2));
        let joint = von_neumann_entropy(&kron(&a, &bc)).unwrap();
        let sum = von_neumann_entropy(&a).unwrap() + von_neumann_entropy(&bc).unwrap();
        prop_assert!((joint - sum).abs() <= 1e-10);
    }

    #[test]
    fn partial_traces_compose(seed in any::<u64>()) {
        let rho = common::random_density(&mut common::rng(seed), 3);
        let direct = partial_trace(&rho, Subsystems::A).unwrap();
        let ab = partial_trace(&rho, Subsystems::A | Subsystems::B).unwrap();
        prop_assert!(partial_trace(&ab, Subsystems::A).unwrap().max_abs_diff(&direct) <= 1e-15);
        let c = partial_trace(&rho, Subsystems::C).unwrap();
        let bc = partial_trace(&rho, Subsystems::B | Subsystems::C).unwrap();
        // On the BC space, C is the second qubit.
        prop_assert!(partial_trace(&bc, Subsystems::B).unwrap().max_abs_diff(&c) <= 1e-15);
    }

    #[test]
    fn partial_trace_of_a_product_returns_the_factor(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (ab, c) = (common::random_density(&mut rng, 2), common::random_density(&mut rng, 1));
        let rho = kron(&ab, &c);
        prop_assert!(partial_trace(&rho, Subsystems::A | Subsystems::B).unwrap().max_abs_diff(&ab) <= 1e-15);
        prop_assert!(partial_trace(&rho, Subsystems::C).unwrap().max_abs_diff(&c) <= 1e-15);
    }

    #[test]
    fn entropy_is_bounded_by_dimension(seed in any::<u64>(), qubits in 1usize..=3) {
        let rho = common::random_density(&mut common::rng(seed), qubits);
        let s = von_neumann_entropy(&rho).unwrap();
        prop_assert!(s >= -1e-12 && s <= qubits as f64 + 1e-12);
    }
}

#[test]
fn maximally_mixed_entropy() {
    for q in 1..=3 {
        let d = 1 << q;
        let s = von_neumann_entropy(&ComplexMatrix::identity(d).scale(1.0 / d as f64)).unwrap();
        assert_abs_diff_eq!(s, q as f64, epsilon = 1e-14);
    }
}
