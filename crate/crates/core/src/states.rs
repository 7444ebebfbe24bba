//! Three-qubit density matrices in the Pauli basis.
//!
//! A [`ParamSet`] holds the 21 real coefficients of
//!
//! ```text
//! ρ = 1/8 ( I₈ + Σ aᵢ σᵢ⊗I⊗I + Σ bᵢ I⊗σᵢ⊗I + Σ cᵢ I⊗I⊗σᵢ
//!             + Σ rᵢ σᵢ⊗σᵢ⊗I + Σ sᵢ σᵢ⊗I⊗σᵢ + Σ vᵢ I⊗σᵢ⊗σᵢ + Σ Tᵢ σᵢ⊗σᵢ⊗σᵢ )
//! ```
//!
//! The fourteen-parameter sub-family keeps only `a₃`, `b₃` among the local
//! `A`/`B` terms and drops `v` entirely (see [`ParamSet::is_family_31`]).

use crate::error::{Error, Result};
use crate::qmat::{eig_hermitian, pauli_string, ComplexMatrix, Spectrum, C64, HERMITIAN_TOL, NEG_EIG_TOL};

pub type DensityMatrix = ComplexMatrix;

pub const TRACE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ParamSet {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub c: [f64; 3],
    pub r: [f64; 3],
    pub s: [f64; 3],
    pub v: [f64; 3],
    pub t: [f64; 3],
}

impl ParamSet {
    pub const FIELDS: [&'static str; 7] = ["a", "b", "c", "r", "s", "v", "T"];

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn fields(&self) -> [&[f64; 3]; 7] {
        [&self.a, &self.b, &self.c, &self.r, &self.s, &self.v, &self.t]
    }

    pub fn fields_mut(&mut self) -> [&mut [f64; 3]; 7] {
        [&mut self.a, &mut self.b, &mut self.c, &mut self.r, &mut self.s, &mut self.v, &mut self.t]
    }

    /// True iff `a₁ = a₂ = b₁ = b₂ = v₁ = v₂ = v₃ = 0` exactly.
    pub fn is_family_31(&self) -> bool {
        self.a[0] == 0.0 && self.a[1] == 0.0 && self.b[0] == 0.0 && self.b[1] == 0.0 && self.v.iter().all(|&x| x == 0.0)
    }

    pub fn check_range(&self) -> Result<()> {
        for (field, values) in Self::FIELDS.iter().zip(self.fields()) {
            for (index, &value) in values.iter().enumerate() {
                if !(-1.0..=1.0).contains(&value) {
                    return Err(Error::ParameterOutOfRange { field, index, value });
                }
            }
        }
        Ok(())
    }

    /// Pauli-basis terms as `(coefficient, [k_A, k_B, k_C])`.
    pub fn terms(&self) -> impl Iterator<Item = (f64, [usize; 3])> + '_ {
        (0..3).flat_map(move |i| {
            let k = i + 1;
            [
                (self.a[i], [k, 0, 0]),
                (self.b[i], [0, k, 0]),
                (self.c[i], [0, 0, k]),
                (self.r[i], [k, k, 0]),
                (self.s[i], [k, 0, k]),
                (self.v[i], [0, k, k]),
                (self.t[i], [k, k, k]),
            ]
        })
    }
}

/// The density matrix of a parameter set. Positivity is not checked here; see
/// [`validate_state`].
pub fn build_state(p: &ParamSet) -> DensityMatrix {
    let mut m = ComplexMatrix::identity(8);
    for (coef, ks) in p.terms() {
        if coef == 0.0 {
            continue;
        }
        let sigma = pauli_string(ks);
        for i in 0..8 {
            for j in 0..8 {
                m[(i, j)] += sigma[(i, j)] * coef;
            }
        }
    }
    m.scale(0.125)
}

/// `c |ψ⟩⟨ψ| + (1 − c) I/8` with `|ψ⟩ = (|000⟩ + |111⟩)/√2`.
pub fn build_werner_ghz(c: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::MixingOutOfRange(c));
    }
    let mut m = ComplexMatrix::identity(8).scale((1.0 - c) / 8.0);
    let half = C64::new(c / 2.0, 0.0);
    for (i, j) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
        m[(i, j)] += half;
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    pub hermitian_ok: bool,
    pub max_asymmetry: f64,
    pub trace_dev: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    /// `|a| + |b| + |r| ≤ 1`, evaluated only when a parameter set is supplied.
    /// Advisory: positivity is decided by `min_eigenvalue`.
    pub norm_bound_ok: Option<bool>,
    pub valid: bool,
}

pub fn validate_state(rho: &DensityMatrix, p: Option<&ParamSet>) -> ValidationReport {
    let (_, _, max_asymmetry) = rho.max_asymmetry();
    let hermitian_ok = max_asymmetry <= HERMITIAN_TOL;
    let trace_dev = rho.trace().re - 1.0;
    let min_eigenvalue = eig_hermitian(&rho.hermitian_part()).map(|s: Spectrum| s.min()).unwrap_or(f64::NAN);
    let norm_bound_ok = p.map(|p| norm3(&p.a) + norm3(&p.b) + norm3(&p.r) <= 1.0);
    let valid = hermitian_ok && trace_dev.abs() <= TRACE_TOL && min_eigenvalue >= -NEG_EIG_TOL;
    ValidationReport { hermitian_ok, max_asymmetry, trace_dev, min_eigenvalue, norm_bound_ok, valid }
}

/// Builds and validates in one step, as every discord routine needs.
pub fn build_valid_state(p: &ParamSet) -> Result<DensityMatrix> {
    p.check_range()?;
    let rho = build_state(p);
    let report = validate_state(&rho, None);
    if !report.valid {
        return Err(Error::InvalidState { min_eigenvalue: report.min_eigenvalue, trace_dev: report.trace_dev });
    }
    Ok(rho)
}

pub(crate) fn norm3(x: &[f64; 3]) -> f64 {
    libm::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])
}
