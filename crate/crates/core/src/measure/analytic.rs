//! Conditional entropies in closed form.
//!
//! Measuring `A` along `z^A` with outcome `j` (sign `e = (−1)ʲ`) and then `B`
//! along `z^B` with outcome `k` (sign `f = (−1)ᵏ`) leaves
//!
//! ```text
//! ρ^b_j  ∝ (1 + eε) I + (b + e r∘z^A)·σ                       ε = a·z^A
//! ρ^c_jk ∝ (1 + α_jk) I + (c + e s∘z^A + f v∘z^B + ef T∘z^A∘z^B)·σ
//! α_jk   = eε + f b·z^B + ef r·(z^A∘z^B)
//! ```
//!
//! so every entropy is a sum of [`entropy_h`](super::entropy_h) terms in the
//! branch biases `α` and Bloch lengths `γ = |…|`. [`BranchParams`] holds
//! exactly those numbers; the closed-form cases construct it directly.

use super::{entropy_h, h_eps, MeasurementScheme, Weighting};
use crate::error::Result;
use crate::sphere::{dot, norm, BlochVector};
use crate::states::ParamSet;

/// Branches with `p_j` at or below this carry no weight.
pub const ZERO_PROB: f64 = 1e-13;

/// The scalars that determine both conditional entropies.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchParams {
    /// `a·z^A`; outcome `j` of `A` has probability `½(1 + (−1)ʲε)`.
    pub eps: f64,
    /// Bloch length of `ρ^b_j` times `(1 + (−1)ʲε)`: `A₊`, `A₋`.
    pub b_len: [f64; 2],
    /// `α_jk`; row 0 is `α_k`, row 1 is `β_k`.
    pub alpha: [[f64; 2]; 2],
    /// Unnormalized Bloch lengths of `ρ^c_jk`; row 0 is `γ_k`, row 1 is `δ_k`.
    pub gamma: [[f64; 2]; 2],
}

impl BranchParams {
    pub fn probability(&self, j: usize) -> f64 {
        0.5 * (1.0 + sign(j) * self.eps)
    }

    /// `S_{B|Π^A} = 1 + H(ε) − ½[H_ε(A₊) + H_{−ε}(A₋)]`.
    pub fn cond_b(&self) -> Result<f64> {
        let e = self.eps;
        Ok(1.0 + entropy_h(0.0, e)? - 0.5 * (entropy_h(e, self.b_len[0])? + entropy_h(-e, self.b_len[1])?))
    }

    /// Conditional entropy of `C` in the branch `j` of `A`:
    /// `1 − [H_{α_j0}(γ_j0) + H_{α_j1}(γ_j1) − 2H_{eε}((α_j0 − α_j1)/2)] / (2(1 + eε))`.
    pub fn cond_c_branch(&self, j: usize) -> Result<f64> {
        let ee = sign(j) * self.eps;
        if 0.5 * (1.0 + ee) <= ZERO_PROB {
            return Ok(0.0);
        }
        let [a0, a1] = self.alpha[j];
        let [g0, g1] = self.gamma[j];
        let bracket = entropy_h(a0, g0)? + entropy_h(a1, g1)? - 2.0 * entropy_h(ee, 0.5 * (a0 - a1))?;
        Ok(1.0 - bracket / (2.0 * (1.0 + ee)))
    }

    pub fn cond_c(&self, weighting: Weighting) -> Result<f64> {
        let mut s = 0.0;
        for j in 0..2 {
            let p = self.probability(j);
            if p <= ZERO_PROB {
                continue;
            }
            let w = match weighting {
                Weighting::Joint => p,
                Weighting::PerOutcome => 1.0,
            };
            s += w * self.cond_c_branch(j)?;
        }
        Ok(s)
    }

    pub fn g(&self) -> Result<f64> {
        Ok(1.0 - self.cond_b()?)
    }

    pub fn f(&self, weighting: Weighting) -> Result<f64> {
        Ok(2.0 - self.cond_c(weighting)?)
    }

    /// `(G, F)`.
    pub fn objective(&self, weighting: Weighting) -> Result<(f64, f64)> {
        Ok((self.g()?, self.f(weighting)?))
    }
}

#[inline]
fn sign(j: usize) -> f64 {
    if j == 0 {
        1.0
    } else {
        -1.0
    }
}

#[inline]
fn hadamard(x: &[f64; 3], y: &[f64; 3]) -> [f64; 3] {
    [x[0] * y[0], x[1] * y[1], x[2] * y[2]]
}

/// Branch parameters for `A` along `za` and `B` along `zb[j]` after outcome `j`.
pub fn branch_params_conditional(p: &ParamSet, za: &BlochVector, zb: [&BlochVector; 2]) -> BranchParams {
    let za = &za.z;
    let eps = dot(&p.a, za);
    let rz = hadamard(&p.r, za);
    let sz = hadamard(&p.s, za);
    let tz = hadamard(&p.t, za);

    let mut out = BranchParams { eps, b_len: [0.0; 2], alpha: [[0.0; 2]; 2], gamma: [[0.0; 2]; 2] };
    for j in 0..2 {
        let e = sign(j);
        out.b_len[j] = norm(&[p.b[0] + e * rz[0], p.b[1] + e * rz[1], p.b[2] + e * rz[2]]);
        let zb = &zb[j].z;
        let bz = dot(&p.b, zb);
        let rzz = dot(&rz, zb);
        for k in 0..2 {
            let f = sign(k);
            out.alpha[j][k] = e * eps + f * bz + e * f * rzz;
            let mut cv = [0.0; 3];
            for i in 0..3 {
                cv[i] = p.c[i] + e * sz[i] + f * p.v[i] * zb[i] + e * f * tz[i] * zb[i];
            }
            out.gamma[j][k] = norm(&cv);
        }
    }
    out
}

/// Branch parameters for a shared `B` axis.
pub fn branch_params(p: &ParamSet, za: &BlochVector, zb: &BlochVector) -> BranchParams {
    branch_params_conditional(p, za, [zb, zb])
}

pub fn branch_params_scheme(p: &ParamSet, scheme: &MeasurementScheme) -> BranchParams {
    let (z0, z1) = (scheme.zb_for(0), scheme.zb_for(1));
    branch_params_conditional(p, &scheme.za, [&z0, &z1])
}

/// `S_{B|Π^A}` for the state of `p` with `A` measured along `za`.
pub fn cond_entropy_b_given_a(p: &ParamSet, za: &BlochVector) -> Result<f64> {
    // The B entropy does not depend on the B axis.
    branch_params(p, za, &BlochVector::Z).cond_b()
}

/// `S_{C|Π^{AB}}` for the state of `p` under the shared scheme `(za, zb)`.
pub fn cond_entropy_c_given_ab(p: &ParamSet, za: &BlochVector, zb: &BlochVector, weighting: Weighting) -> Result<f64> {
    branch_params(p, za, zb).cond_c(weighting)
}

/// `G + F = 3 − S_{B|Π^A} − S_{C|Π^{AB}}`.
pub fn objective_gf(p: &ParamSet, za: &BlochVector, zb: &BlochVector, weighting: Weighting) -> Result<f64> {
    let (g, f) = branch_params(p, za, zb).objective(weighting)?;
    Ok(g + f)
}

/// Everything about the objective that depends only on `z^A`, for scanning
/// many `z^B` cheaply. Entropy operands are clamped rather than checked.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PreparedA {
    eps_j: [f64; 2],
    g: f64,
    c_off: [[f64; 3]; 2],
    b: [f64; 3],
    v: [f64; 3],
    rz: [f64; 3],
    tz: [f64; 3],
    weight: [f64; 2],
    inv: [f64; 2],
}

impl PreparedA {
    pub(crate) fn new(p: &ParamSet, za: &BlochVector, weighting: Weighting) -> Self {
        let z = &za.z;
        let eps = dot(&p.a, z);
        let rz = hadamard(&p.r, z);
        let sz = hadamard(&p.s, z);
        let mut c_off = [[0.0; 3]; 2];
        let mut eps_j = [0.0; 2];
        let mut weight = [0.0; 2];
        let mut inv = [0.0; 2];
        let mut hb = 0.0;
        for j in 0..2 {
            let e = sign(j);
            eps_j[j] = e * eps;
            for i in 0..3 {
                c_off[j][i] = p.c[i] + e * sz[i];
            }
            let bl = norm(&[p.b[0] + e * rz[0], p.b[1] + e * rz[1], p.b[2] + e * rz[2]]);
            hb += h_eps(e * eps, bl);
            let pj = 0.5 * (1.0 + e * eps);
            if pj > ZERO_PROB {
                weight[j] = match weighting {
                    Weighting::Joint => pj,
                    Weighting::PerOutcome => 1.0,
                };
                inv[j] = 1.0 / (2.0 * (1.0 + e * eps));
            }
        }
        let g = 1.0 - (1.0 + h_eps(0.0, eps) - 0.5 * hb);
        Self { eps_j, g, c_off, b: p.b, v: p.v, rz, tz: hadamard(&p.t, z), weight, inv }
    }

    #[inline]
    pub(crate) fn g(&self) -> f64 {
        self.g
    }

    /// `F` at `z^B`.
    #[inline]
    pub(crate) fn f(&self, zb: &BlochVector) -> f64 {
        2.0 - self.branch_entropy(0, zb) - self.branch_entropy(1, zb)
    }

    /// Weighted entropy of `C` in branch `j` with `B` measured along `zb`.
    #[inline]
    pub(crate) fn branch_entropy(&self, j: usize, zb: &BlochVector) -> f64 {
        if self.weight[j] == 0.0 {
            return 0.0;
        }
        let z = &zb.z;
        let e = sign(j);
        let ee = self.eps_j[j];
        let bz = dot(&self.b, z);
        let rzz = dot(&self.rz, z);
        let mut hs = 0.0;
        for k in 0..2 {
            let f = sign(k);
            let alpha = ee + f * bz + e * f * rzz;
            let mut g2 = 0.0;
            for (i, zi) in z.iter().enumerate() {
                let x = self.c_off[j][i] + f * self.v[i] * zi + e * f * self.tz[i] * zi;
                g2 += x * x;
            }
            hs += h_eps(alpha, libm::sqrt(g2));
        }
        let d = bz + e * rzz;
        let s = 1.0 - (hs - 2.0 * h_eps(ee, d)) * self.inv[j];
        self.weight[j] * s
    }
}
