//! Random states and axes shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use tripartite_discord::discord::{premises_hold, CaseId};
use tripartite_discord::qmat::{kron, partial_trace};
use tripartite_discord::states::build_valid_state;
use tripartite_discord::{BlochVector, ComplexMatrix, ParamSet, Subsystems, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform3(rng: &mut impl Rng, scale: f64) -> [f64; 3] {
    [0; 3].map(|_| rng.gen_range(-scale..=scale))
}

pub fn unit(rng: &mut impl Rng) -> BlochVector {
    loop {
        let g: [f64; 3] = [0; 3].map(|_| rng.sample(StandardNormal));
        if let Ok(z) = BlochVector::normalize(g) {
            return z;
        }
    }
}

/// Halves every coefficient until the state is positive.
pub fn shrink_to_valid(mut p: ParamSet) -> ParamSet {
    while build_valid_state(&p).is_err() {
        for f in p.fields_mut() {
            for x in f.iter_mut() {
                *x *= 0.5;
            }
        }
    }
    p
}

pub fn random_family_31(rng: &mut impl Rng) -> ParamSet {
    let mut p = ParamSet {
        c: uniform3(rng, 0.5),
        r: uniform3(rng, 0.5),
        s: uniform3(rng, 0.5),
        t: uniform3(rng, 0.5),
        ..ParamSet::zero()
    };
    p.a[2] = rng.gen_range(-0.5..=0.5);
    p.b[2] = rng.gen_range(-0.5..=0.5);
    shrink_to_valid(p)
}

pub fn random_family_327(rng: &mut impl Rng) -> ParamSet {
    let mut p = ParamSet::zero();
    for f in p.fields_mut() {
        *f = uniform3(rng, 0.4);
    }
    shrink_to_valid(p)
}

/// A valid state satisfying the premises of `case`, by rejection.
pub fn sample_case(rng: &mut impl Rng, case: CaseId) -> ParamSet {
    let sc = 0.3;
    loop {
        let mut p = ParamSet::zero();
        match case {
            CaseId::T2_1 | CaseId::T2_2a | CaseId::T2_2b => {
                p.a[2] = rng.gen_range(-sc..=sc);
                if case == CaseId::T2_1 {
                    p.b[2] = rng.gen_range(-sc..=sc);
                }
                p.c = uniform3(rng, sc);
                p.r = uniform3(rng, sc);
                p.s = uniform3(rng, sc);
                p.t = uniform3(rng, sc);
            }
            CaseId::T3_1 => {
                p.b = uniform3(rng, sc);
                p.c = uniform3(rng, sc);
                p.r = iso(rng, sc);
                p.s = uniform3(rng, sc);
            }
            CaseId::T3_2 => {
                p.a = uniform3(rng, sc);
                p.c = uniform3(rng, sc);
                p.r = iso(rng, sc);
                p.s = uniform3(rng, sc);
            }
            CaseId::T3_3 => {
                p.a = uniform3(rng, sc);
                p.b = uniform3(rng, sc);
                p.c = uniform3(rng, sc);
                p.s = uniform3(rng, sc);
            }
            CaseId::T3_4 => {
                p.b = uniform3(rng, sc);
                p.r = iso(rng, sc);
                p.v = iso(rng, sc);
            }
            CaseId::T3_5 => {
                p.a = uniform3(rng, sc);
                p.b = uniform3(rng, sc);
                p.v = iso(rng, sc);
            }
            CaseId::T3_6 => {
                p.a = uniform3(rng, sc);
                p.r = iso(rng, sc);
                p.v = iso(rng, sc);
            }
        }
        if premises_hold(&p, case) && build_valid_state(&p).is_ok() {
            return p;
        }
    }
}

fn iso(rng: &mut impl Rng, scale: f64) -> [f64; 3] {
    [rng.gen_range(-scale..=scale); 3]
}

/// Haar-random single-qubit unitary.
pub fn unitary2(rng: &mut impl Rng) -> ComplexMatrix {
    let q: [f64; 4] = loop {
        let g: [f64; 4] = [0; 4].map(|_| rng.sample(StandardNormal));
        let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            break g.map(|x| x / n);
        }
    };
    let [t, x, y, z] = q;
    ComplexMatrix::from_rows([[C64::new(t, z), C64::new(y, x)], [C64::new(-y, x), C64::new(t, -z)]])
}

/// Random full-rank density matrix on `qubits` qubits (Ginibre ensemble).
pub fn random_density(rng: &mut impl Rng, qubits: usize) -> ComplexMatrix {
    let d = 1 << qubits;
    let g = ComplexMatrix::from_fn(d, |_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale(1.0 / tr).hermitian_part()
}

pub fn random_product(rng: &mut impl Rng) -> ComplexMatrix {
    let (a, b, c) = (random_density(rng, 1), random_density(rng, 1), random_density(rng, 1));
    kron(&kron(&a, &b), &c)
}

/// `(ρ_AB ⊗ ρ_C, ρ_AB)` for random factors.
pub fn random_ab_times_c(rng: &mut impl Rng) -> (ComplexMatrix, ComplexMatrix) {
    let ab = random_density(rng, 2);
    let c = random_density(rng, 1);
    (kron(&ab, &c), ab)
}

pub fn marginal(rho: &ComplexMatrix, keep: Subsystems) -> ComplexMatrix {
    partial_trace(rho, keep).unwrap()
}

pub fn example1() -> ParamSet {
    ParamSet {
        a: [0.0, 0.0, 0.03],
        b: [0.0, 0.0, 0.25],
        c: [0.12, 0.12, 0.01],
        r: [0.1, 0.1, -0.3],
        s: [0.13, 0.13, -0.26],
        v: [0.0; 3],
        t: [-0.02, -0.02, -0.36],
    }
}

pub fn example2() -> ParamSet {
    ParamSet { b: [0.2, 0.05, 0.1], c: [0.04, 0.06, 0.11], r: [0.17; 3], s: [0.08, 0.15, 0.25], ..ParamSet::zero() }
}
