//! Conditional entropies by explicit projection, for any three-qubit state.

use super::analytic::ZERO_PROB;
use super::{MeasurementScheme, Weighting};
use crate::error::{Error, Result};
use crate::qmat::{kron, partial_trace, pauli, von_neumann_entropy, ComplexMatrix, Subsystems, C64};
use crate::sphere::BlochVector;
use crate::states::DensityMatrix;

/// Post-measurement states with their probabilities.
#[derive(Clone, Copy, Debug)]
pub struct BranchEnsemble<const N: usize> {
    pub probabilities: [f64; N],
    /// Normalized branch states; a zero-probability branch holds `I/d`.
    pub states: [DensityMatrix; N],
}

impl<const N: usize> BranchEnsemble<N> {
    pub fn total_probability(&self) -> f64 {
        self.probabilities.iter().sum()
    }
}

/// `Π_j = ½(I + (−1)ʲ z·σ)`.
pub fn projector(z: &BlochVector, j: usize) -> ComplexMatrix {
    let sgn = if j == 0 { 0.5 } else { -0.5 };
    let mut m = ComplexMatrix::identity(2).scale(0.5);
    for (k, &zk) in z.z.iter().enumerate() {
        let s = pauli(k + 1);
        for r in 0..2 {
            for c in 0..2 {
                m[(r, c)] += s[(r, c)] * (sgn * zk);
            }
        }
    }
    m
}

/// Normalizes `unnormalized` and reports its trace, or a placeholder `I/d`
/// with probability 0 if the trace vanishes.
fn normalize(unnormalized: ComplexMatrix) -> (f64, ComplexMatrix) {
    let p = unnormalized.trace().re;
    if p <= ZERO_PROB {
        let d = unnormalized.dim();
        (0.0, ComplexMatrix::identity(d).scale(1.0 / d as f64))
    } else {
        (p, unnormalized.scale(1.0 / p))
    }
}

/// The `BC` ensemble after measuring `A`, and the `C` ensemble after
/// measuring `A` then `B` (branch `jk` at index `2j + k`, joint probabilities).
pub fn measured_branches(
    rho: &DensityMatrix,
    scheme: &MeasurementScheme,
) -> Result<(BranchEnsemble<2>, BranchEnsemble<4>)> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch { expected: 8, found: rho.dim() });
    }
    let i2 = ComplexMatrix::identity(2);
    let i4 = ComplexMatrix::identity(4);
    let mut bc = BranchEnsemble { probabilities: [0.0; 2], states: [i4.scale(0.25); 2] };
    let mut c = BranchEnsemble { probabilities: [0.0; 4], states: [i2.scale(0.5); 4] };

    for j in 0..2 {
        let pa = kron(&projector(&scheme.za, j), &i4);
        let (pj, rho_bc) = normalize(partial_trace(&rho.sandwich(&pa), Subsystems::B | Subsystems::C)?);
        bc.probabilities[j] = pj;
        bc.states[j] = rho_bc;
        let zb = scheme.zb_for(j);
        for k in 0..2 {
            let pb = kron(&projector(&zb, k), &i2);
            // On the two-qubit BC space, qubit 1 is C.
            let (pk, rho_c) = normalize(partial_trace(&rho_bc.sandwich(&pb), Subsystems::B)?);
            c.probabilities[2 * j + k] = pj * pk;
            c.states[2 * j + k] = rho_c;
        }
    }
    Ok((bc, c))
}

/// `(S_{B|Π^A}, S_{C|Π^{AB}})` computed from the measured ensembles.
pub fn cond_entropies_matrix(
    rho: &DensityMatrix,
    scheme: &MeasurementScheme,
    weighting: Weighting,
) -> Result<(f64, f64)> {
    let (bc, c) = measured_branches(rho, scheme)?;
    let mut sb = 0.0;
    let mut sc = 0.0;
    for j in 0..2 {
        let pj = bc.probabilities[j];
        if pj == 0.0 {
            continue;
        }
        sb += pj * von_neumann_entropy(&partial_trace(&bc.states[j], Subsystems::A)?)?;
        for k in 0..2 {
            let pjk = c.probabilities[2 * j + k];
            let w = match weighting {
                Weighting::Joint => pjk,
                Weighting::PerOutcome => pjk / pj,
            };
            if w > 0.0 {
                sc += w * von_neumann_entropy(&c.states[2 * j + k])?;
            }
        }
    }
    Ok((sb, sc))
}

/// `t I + i Σ y_k σ_k` for a unit `(t, y)`.
pub fn su2_from_ty(t: f64, y: [f64; 3]) -> ComplexMatrix {
    let mut v = ComplexMatrix::identity(2).scale(t);
    for (k, &yk) in y.iter().enumerate() {
        let s = pauli(k + 1);
        for r in 0..2 {
            for c in 0..2 {
                v[(r, c)] += s[(r, c)] * C64::new(0.0, yk);
            }
        }
    }
    v
}

/// The measurement axis of `{V|j⟩⟨j|V†}` in terms of `(t, y)`.
pub fn bloch_from_ty(t: f64, y: [f64; 3]) -> [f64; 3] {
    let [y1, y2, y3] = y;
    [2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3), t * t + y3 * y3 - y1 * y1 - y2 * y2]
}
