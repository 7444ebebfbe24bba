//! Brute-force discord for arbitrary three-qubit (and two-qubit) states.
//!
//! Self-contained on top of [`crate::qmat`]: measurement axes are polar angles,
//! projectors are the rank-one eigenvectors of `z·σ`, branch states come from
//! direct index contraction, and refinement is Nelder–Mead on the angles.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use crate::discord::{DiscordResult, Method};
use crate::error::{Error, Result};
use crate::measure::Weighting;
use crate::qmat::{eig_hermitian, partial_trace, xlog2x, ComplexMatrix, Subsystems, C64, NEG_EIG_TOL};
use crate::sphere::BlochVector;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleOptions {
    pub grid_theta: usize,
    pub grid_phi: usize,
    /// Let the `B` axis depend on the outcome at `A`.
    pub conditional_b: bool,
    pub refine: bool,
    pub weighting: Weighting,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { grid_theta: 48, grid_phi: 24, conditional_b: false, refine: true, weighting: Weighting::Joint }
    }
}

impl OracleOptions {
    fn validate(&self) -> Result<()> {
        if self.grid_theta == 0 || self.grid_phi == 0 {
            return Err(Error::InvalidOptions("grid sizes must be positive"));
        }
        Ok(())
    }
}

const TRACE_TOL: f64 = 1e-12;
const NM_MAX_ITERS: usize = 4000;
const NM_XTOL: f64 = 1e-11;
const NM_FTOL: f64 = 1e-15;
const SEEDS: usize = 3;

type Ket = [C64; 2];

/// `(|+z⟩, |−z⟩)` for the axis at polar angle `theta`, azimuth `phi`.
fn kets(theta: f64, phi: f64) -> [Ket; 2] {
    let (s, c) = (libm::sin(theta / 2.0), libm::cos(theta / 2.0));
    let ph = C64::new(libm::cos(phi), libm::sin(phi));
    [[C64::new(c, 0.0), ph * s], [C64::new(s, 0.0), -ph * c]]
}

fn axis(theta: f64, phi: f64) -> BlochVector {
    let st = libm::sin(theta);
    BlochVector { z: [st * libm::cos(phi), st * libm::sin(phi), libm::cos(theta)] }.canonical()
}

/// `⟨u| ⊗ I` applied on both sides to the leading qubit of an operator of
/// dimension `2n`: returns the unnormalized `n×n` block.
fn contract_first(m: &ComplexMatrix, u: &Ket) -> ComplexMatrix {
    let n = m.dim() / 2;
    ComplexMatrix::from_fn(n, |x, y| {
        let mut acc = C64::new(0.0, 0.0);
        for a in 0..2 {
            for b in 0..2 {
                acc += u[a].conj() * m[(a * n + x, b * n + y)] * u[b];
            }
        }
        acc
    })
}

/// `(trace, entropy of the normalized state)` for an unnormalized 2×2 block.
fn qubit_entropy(m: &ComplexMatrix) -> (f64, f64) {
    let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
    let t = a + d;
    if t <= 1e-15 {
        return (t.max(0.0), 0.0);
    }
    let disc = libm::sqrt((a - d) * (a - d) + 4.0 * m[(0, 1)].norm_sqr());
    let (l0, l1) = ((t + disc) / (2.0 * t), (t - disc) / (2.0 * t));
    (t, -(xlog2x(l0) + xlog2x(l1.max(0.0))))
}

fn trace_out_last(m: &ComplexMatrix) -> ComplexMatrix {
    // 4×4 → 2×2 over the second qubit.
    ComplexMatrix::from_fn(2, |x, y| m[(2 * x, 2 * y)] + m[(2 * x + 1, 2 * y + 1)])
}

fn spectrum_entropy(values: &[f64]) -> f64 {
    -values.iter().map(|&l| xlog2x(l.max(0.0))).sum::<f64>()
}

fn check_state(rho: &ComplexMatrix, dim: usize) -> Result<f64> {
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: rho.dim() });
    }
    let spectrum = eig_hermitian(rho)?;
    let trace_dev = rho.trace().re - 1.0;
    if spectrum.min() < -NEG_EIG_TOL || trace_dev.abs() > TRACE_TOL {
        return Err(Error::InvalidState { min_eigenvalue: spectrum.min(), trace_dev });
    }
    Ok(spectrum_entropy(&spectrum))
}

/// Angles `(θ, φ)` covering the upper hemisphere, pole first.
fn angle_grid(n_theta: usize, n_phi: usize) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, 0.0)];
    for i in 1..=n_theta {
        let theta = FRAC_PI_2 * i as f64 / n_theta as f64;
        out.extend((0..n_phi).map(|j| (theta, TAU * j as f64 / n_phi as f64)));
    }
    out
}

/// The state after measuring `A` along `(θ, φ)`, split by outcome.
struct AfterA {
    /// Unnormalized `BC` blocks.
    blocks: [ComplexMatrix; 2],
    p: [f64; 2],
    s_b: f64,
}

impl AfterA {
    fn new(rho: &ComplexMatrix, theta: f64, phi: f64) -> Self {
        let us = kets(theta, phi);
        let blocks = [contract_first(rho, &us[0]), contract_first(rho, &us[1])];
        let mut p = [0.0; 2];
        let mut s_b = 0.0;
        for j in 0..2 {
            let (pj, sj) = qubit_entropy(&trace_out_last(&blocks[j]));
            p[j] = pj;
            s_b += pj * sj;
        }
        Self { blocks, p, s_b }
    }

    /// Weighted entropy of `C` in branch `j` with `B` measured along `(θ, φ)`.
    fn branch_c(&self, j: usize, theta: f64, phi: f64, weighting: Weighting) -> f64 {
        if self.p[j] <= 1e-15 {
            return 0.0;
        }
        let us = kets(theta, phi);
        let mut s = 0.0;
        for u in &us {
            let (pjk, sjk) = qubit_entropy(&contract_first(&self.blocks[j], u));
            let w = match weighting {
                Weighting::Joint => pjk,
                Weighting::PerOutcome => pjk / self.p[j],
            };
            s += w * sjk;
        }
        s
    }
}

/// `S_{B|Π^A} + S_{C|Π^{AB}}` at angles `[θA, φA, θB0, φB0, (θB1, φB1)]`.
fn measured_sum(rho: &ComplexMatrix, x: &[f64], weighting: Weighting) -> (f64, f64) {
    let after = AfterA::new(rho, x[0], x[1]);
    let (t1, p1) = if x.len() >= 6 { (x[4], x[5]) } else { (x[2], x[3]) };
    let s_c = after.branch_c(0, x[2], x[3], weighting) + after.branch_c(1, t1, p1, weighting);
    (after.s_b, s_c)
}

/// Discord by exhaustive search over measurement axes.
pub fn oracle_discord(rho: &ComplexMatrix, opts: &OracleOptions) -> Result<DiscordResult> {
    opts.validate()?;
    let s_abc = check_state(rho, 8)?;
    let rho_a = partial_trace(rho, Subsystems::A)?;
    let s_a = spectrum_entropy(&eig_hermitian(&rho_a)?);

    let grid = angle_grid(opts.grid_theta, opts.grid_phi);
    let w = opts.weighting;

    // Candidate starting points: (value, angles).
    let mut candidates: Vec<(f64, Vec<f64>)> = Vec::with_capacity(grid.len());
    for &(ta, pa) in &grid {
        let after = AfterA::new(rho, ta, pa);
        if opts.conditional_b {
            let mut best = [(f64::INFINITY, 0usize); 2];
            for (ib, &(tb, pb)) in grid.iter().enumerate() {
                for (j, b) in best.iter_mut().enumerate() {
                    let v = after.branch_c(j, tb, pb, w);
                    if v < b.0 {
                        *b = (v, ib);
                    }
                }
            }
            let (b0, b1) = (grid[best[0].1], grid[best[1].1]);
            candidates.push((after.s_b + best[0].0 + best[1].0, vec![ta, pa, b0.0, b0.1, b1.0, b1.1]));
        } else {
            let mut best = (f64::INFINITY, 0usize);
            for (ib, &(tb, pb)) in grid.iter().enumerate() {
                let v = after.branch_c(0, tb, pb, w) + after.branch_c(1, tb, pb, w);
                if v < best.0 {
                    best = (v, ib);
                }
            }
            let (tb, pb) = grid[best.1];
            candidates.push((after.s_b + best.0, vec![ta, pa, tb, pb]));
        }
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0));

    let objective = |x: &[f64]| {
        let (sb, sc) = measured_sum(rho, x, w);
        sb + sc
    };
    let (mut best_x, mut best_v) = (candidates[0].1.clone(), candidates[0].0);
    if opts.refine {
        let step = FRAC_PI_2 / opts.grid_theta as f64;
        for (v0, x0) in candidates.iter().take(SEEDS) {
            let (mut x, mut v) = nelder_mead(&objective, x0, step);
            // One restart shakes loose a collapsed simplex.
            let (x2, v2) = nelder_mead(&objective, &x, step / 4.0);
            if v2 < v {
                x = x2;
                v = v2;
            }
            if v < best_v && v <= *v0 {
                best_x = x;
                best_v = v;
            }
        }
    }

    let (s_b, s_c) = measured_sum(rho, &best_x, w);
    let za = axis(best_x[0], best_x[1]);
    let zb = axis(best_x[2], best_x[3]);
    let zb_given_a = if opts.conditional_b { Some([zb, axis(best_x[4], best_x[5])]) } else { None };
    Ok(DiscordResult {
        q: s_b + s_c - (s_abc - s_a),
        za,
        zb,
        zb_given_a,
        g_max: 1.0 - s_b,
        f_max: 2.0 - s_c,
        s_abc,
        s_a,
        method: Method::Oracle,
        weighting: w,
        verify_delta: None,
        printed_q: None,
    })
}

/// Two-qubit discord with the measurement on the first qubit.
pub fn bipartite_discord(rho4: &ComplexMatrix, opts: &OracleOptions) -> Result<f64> {
    opts.validate()?;
    let s_ab = check_state(rho4, 4)?;
    let rho_a = partial_trace(rho4, Subsystems::A)?;
    let s_a = spectrum_entropy(&eig_hermitian(&rho_a)?);

    let cond = |x: &[f64]| {
        let us = kets(x[0], x[1]);
        us.iter()
            .map(|u| {
                let (p, s) = qubit_entropy(&contract_first(rho4, u));
                p * s
            })
            .sum::<f64>()
    };
    let grid = angle_grid(opts.grid_theta, opts.grid_phi);
    let mut best: (f64, [f64; 2]) = (f64::INFINITY, [0.0; 2]);
    for &(t, p) in &grid {
        let v = cond(&[t, p]);
        if v < best.0 {
            best = (v, [t, p]);
        }
    }
    if opts.refine {
        let (_, v) = nelder_mead(&cond, &best.1, FRAC_PI_2 / opts.grid_theta as f64);
        best.0 = best.0.min(v);
    }
    Ok(best.0 - s_ab + s_a)
}

/// Nelder–Mead minimisation from `x0` with an axis-aligned initial simplex.
fn nelder_mead(f: &impl Fn(&[f64]) -> f64, x0: &[f64], step: f64) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let v = f(&x);
        simplex.push((x, v));
    }

    for _ in 0..NM_MAX_ITERS {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[n].1 - simplex[0].1;
        let size = simplex[1..]
            .iter()
            .map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if spread <= NM_FTOL && size <= NM_XTOL {
            break;
        }

        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / n as f64;
            }
        }
        let toward =
            |t: f64| -> Vec<f64> { centroid.iter().zip(&simplex[n].0).map(|(c, w)| c + t * (w - c)).collect() };

        let xr = toward(-1.0);
        let vr = f(&xr);
        if vr < simplex[0].1 {
            let xe = toward(-2.0);
            let ve = f(&xe);
            simplex[n] = if ve < vr { (xe, ve) } else { (xr, vr) };
        } else if vr < simplex[n - 1].1 {
            simplex[n] = (xr, vr);
        } else {
            let (xc, vc) = if vr < simplex[n].1 {
                let x = toward(-0.5);
                let v = f(&x);
                (x, v)
            } else {
                let x = toward(0.5);
                let v = f(&x);
                (x, v)
            };
            if vc < simplex[n].1.min(vr) {
                simplex[n] = (xc, vc);
            } else {
                let best = simplex[0].0.clone();
                for (x, v) in simplex.iter_mut().skip(1) {
                    for (xi, bi) in x.iter_mut().zip(&best) {
                        *xi = bi + 0.5 * (*xi - bi);
                    }
                    *v = f(x);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, v) = simplex.swap_remove(0);
    (x, v)
}
