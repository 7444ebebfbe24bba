//! Measurement-conditional entropies `S_{B|Π^A}` and `S_{C|Π^{AB}}`.
//!
//! Two independent routes are provided: closed expressions in the Bloch
//! variables of the measurement axes ([`analytic`]), valid for any
//! [`ParamSet`](crate::ParamSet), and explicit projection of an arbitrary
//! density matrix ([`matrix`]).

pub mod analytic;
pub mod matrix;

pub use analytic::{
    branch_params, branch_params_conditional, branch_params_scheme, cond_entropy_b_given_a, cond_entropy_c_given_ab,
    objective_gf, BranchParams,
};
pub use matrix::{bloch_from_ty, cond_entropies_matrix, measured_branches, projector, su2_from_ty, BranchEnsemble};

use crate::error::{Error, Result};
use crate::qmat::xlog2x;
use crate::sphere::BlochVector;

/// Tolerance below zero for the operands `1 + ε ± x` of [`entropy_h`].
pub const H_DOMAIN_TOL: f64 = 1e-12;

/// How the entropies of the four post-measurement `C` states are combined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Weighting {
    /// `Σ_jk p_jk S(ρ_jk)`, the von Neumann conditional entropy of the
    /// measured ensemble.
    #[default]
    Joint,
    /// `Σ_j Σ_k p_{k|j} S(ρ_jk)`: each outcome of `A` contributes its own
    /// conditional entropy of `C` given `B`, unweighted by `p_j`.
    PerOutcome,
}

impl Weighting {
    pub fn name(self) -> &'static str {
        match self {
            Weighting::Joint => "joint",
            Weighting::PerOutcome => "per-outcome",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "joint" => Some(Weighting::Joint),
            "per-outcome" | "per_outcome" | "perOutcome" => Some(Weighting::PerOutcome),
            _ => None,
        }
    }
}

/// Projective measurement on `A`, then on `B`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementScheme {
    pub za: BlochVector,
    pub zb: BMeasurement,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BMeasurement {
    /// One axis for `B` regardless of the outcome on `A`.
    Shared(BlochVector),
    /// Axis `zb[j]` after outcome `j` on `A`.
    Conditional([BlochVector; 2]),
}

impl MeasurementScheme {
    pub fn shared(za: BlochVector, zb: BlochVector) -> Self {
        Self { za, zb: BMeasurement::Shared(zb) }
    }

    pub fn conditional(za: BlochVector, zb: [BlochVector; 2]) -> Self {
        Self { za, zb: BMeasurement::Conditional(zb) }
    }

    /// The axis measured on `B` after outcome `j` on `A`.
    pub fn zb_for(&self, j: usize) -> BlochVector {
        match self.zb {
            BMeasurement::Shared(z) => z,
            BMeasurement::Conditional(zs) => zs[j],
        }
    }
}

/// `H_ε(x) = ½[(1+ε+x)log₂(1+ε+x) + (1+ε−x)log₂(1+ε−x)]`, with `0 log 0 = 0`.
///
/// Operands down to `−1e-12` are treated as zero; anything lower is an error.
pub fn entropy_h(eps: f64, x: f64) -> Result<f64> {
    let (u, w) = (1.0 + eps + x, 1.0 + eps - x);
    if u < -H_DOMAIN_TOL || w < -H_DOMAIN_TOL || !u.is_finite() || !w.is_finite() {
        return Err(Error::EntropyDomain { eps, x });
    }
    Ok(h_eps(eps, x))
}

/// `H(x) = H₀(x)`.
pub fn entropy_h0(x: f64) -> Result<f64> {
    entropy_h(0.0, x)
}

/// Unchecked `H_ε(x)`; negative operands count as zero.
#[inline]
pub(crate) fn h_eps(eps: f64, x: f64) -> f64 {
    0.5 * (xlog2x(1.0 + eps + x) + xlog2x(1.0 + eps - x))
}
