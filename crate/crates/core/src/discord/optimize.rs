//! Maximisation of `G + F` over pairs of measurement axes.
//!
//! A deterministic scan over a hemisphere grid for each axis, followed by a
//! compass pattern search in tangent-plane charts from the best few grid
//! points. Sign flips of either axis only relabel outcomes, so hemispheres
//! suffice.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::measure::analytic::PreparedA;
use crate::measure::Weighting;
use crate::sphere::{hemisphere_grid, BlochVector};
use crate::states::{build_valid_state, ParamSet};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimizerOptions {
    /// Polar steps over `[0, π/2]`.
    pub grid_theta: usize,
    /// Azimuthal steps over `[0, 2π)`.
    pub grid_phi: usize,
    /// Pattern search stops once its step falls below this (radians), and
    /// grid values within it of the maximum count as ties.
    pub refine_tol: f64,
    /// Upper bound on pattern-search polls per seed.
    pub max_refine_iters: usize,
    pub weighting: Weighting,
    /// Number of well-separated grid maxima refined.
    pub refine_seeds: usize,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self {
            grid_theta: 64,
            grid_phi: 32,
            refine_tol: 1e-10,
            max_refine_iters: 500,
            weighting: Weighting::PerOutcome,
            refine_seeds: 4,
        }
    }
}

impl OptimizerOptions {
    /// A `n`-step polar grid with `n / 2` azimuthal steps.
    pub fn with_grid(n: usize) -> Self {
        Self { grid_theta: n, grid_phi: (n / 2).max(1), ..Self::default() }
    }

    pub fn weighting(self, weighting: Weighting) -> Self {
        Self { weighting, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_theta == 0 || self.grid_phi == 0 {
            return Err(Error::InvalidOptions("grid sizes must be positive"));
        }
        if self.refine_tol.is_nan() || self.refine_tol <= 0.0 {
            return Err(Error::InvalidOptions("refine_tol must be positive"));
        }
        if self.refine_seeds == 0 {
            return Err(Error::InvalidOptions("refine_seeds must be positive"));
        }
        Ok(())
    }

    fn grid(&self) -> Vec<BlochVector> {
        hemisphere_grid(self.grid_theta, self.grid_phi)
    }

    fn initial_step(&self) -> f64 {
        FRAC_PI_2 / self.grid_theta as f64
    }
}

/// Maximum of `G + F` over both axes: `(z^A, z^B, max)`.
pub fn maximize_objective(p: &ParamSet, opts: &OptimizerOptions) -> Result<(BlochVector, BlochVector, f64)> {
    opts.validate()?;
    build_valid_state(p)?;
    Ok(maximize_pair(p, opts))
}

/// Maximum of `G` alone: `(z^A, max G)`.
pub fn maximize_g(p: &ParamSet, opts: &OptimizerOptions) -> Result<(BlochVector, f64)> {
    opts.validate()?;
    build_valid_state(p)?;
    let g = |z: &[BlochVector; 1]| PreparedA::new(p, &z[0], opts.weighting).g();
    let ([za], v) = maximize_single(g, opts);
    Ok((za, v))
}

/// Maximum of `F` over `z^B` at fixed `z^A`: `(z^B, max F)`.
pub fn maximize_f(p: &ParamSet, za: &BlochVector, opts: &OptimizerOptions) -> Result<(BlochVector, f64)> {
    opts.validate()?;
    build_valid_state(p)?;
    let prep = PreparedA::new(p, za, opts.weighting);
    let ([zb], v) = maximize_single(|z: &[BlochVector; 1]| prep.f(&z[0]), opts);
    Ok((zb, v))
}

fn maximize_single(f: impl Fn(&[BlochVector; 1]) -> f64, opts: &OptimizerOptions) -> ([BlochVector; 1], f64) {
    let grid = opts.grid();
    let values: Vec<f64> = grid.iter().map(|z| f(&[*z])).collect();
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mut seeds: Vec<usize> = Vec::new();
    if let Some(first) = values.iter().position(|&v| v >= max - opts.refine_tol) {
        seeds.push(first);
    }
    for i in ranked(&values) {
        if seeds.len() >= opts.refine_seeds {
            break;
        }
        if separated(&grid[i], seeds.iter().map(|&s| &grid[s]), opts) {
            seeds.push(i);
        }
    }

    let mut best: Option<([BlochVector; 1], f64)> = None;
    for s in seeds {
        let (z, v) = pattern_search(&f, [grid[s]], values[s], opts);
        if best.map_or(true, |(_, b)| v > b + opts.refine_tol) {
            best = Some((z, v));
        }
    }
    let (z, v) = best.expect("grid is never empty");
    ([z[0].canonical()], v)
}

pub(crate) fn maximize_pair(p: &ParamSet, opts: &OptimizerOptions) -> (BlochVector, BlochVector, f64) {
    let grid = opts.grid();
    let n = grid.len();
    let tol = opts.refine_tol;

    // Row `a` holds the maximum over z^B at z^A = grid[a] and its first argmax.
    let mut rows: Vec<(f64, usize)> = Vec::with_capacity(n);
    for za in &grid {
        let prep = PreparedA::new(p, za, opts.weighting);
        let g = prep.g();
        let mut best = (f64::NEG_INFINITY, 0);
        for (ib, zb) in grid.iter().enumerate() {
            let v = g + prep.f(zb);
            if v > best.0 {
                best = (v, ib);
            }
        }
        rows.push(best);
    }
    let max = rows.iter().map(|r| r.0).fold(f64::NEG_INFINITY, f64::max);

    // Lexicographically first grid pair within `tol` of the maximum.
    let ia = rows.iter().position(|r| r.0 >= max - tol).expect("grid is never empty");
    let prep = PreparedA::new(p, &grid[ia], opts.weighting);
    let ib = grid.iter().position(|zb| prep.g() + prep.f(zb) >= max - tol).unwrap_or(rows[ia].1);

    let mut seeds = Vec::with_capacity(opts.refine_seeds);
    seeds.push((ia, ib));
    let row_values: Vec<f64> = rows.iter().map(|r| r.0).collect();
    for a in ranked(&row_values) {
        if seeds.len() >= opts.refine_seeds {
            break;
        }
        if separated(&grid[a], seeds.iter().map(|&(s, _)| &grid[s]), opts) {
            seeds.push((a, rows[a].1));
        }
    }

    let objective = |z: &[BlochVector; 2]| {
        let prep = PreparedA::new(p, &z[0], opts.weighting);
        prep.g() + prep.f(&z[1])
    };
    let mut best: Option<([BlochVector; 2], f64)> = None;
    for (a, b) in seeds {
        let start = [grid[a], grid[b]];
        let (z, v) = pattern_search(objective, start, objective(&start), opts);
        if best.map_or(true, |(_, bv)| v > bv + tol) {
            best = Some((z, v));
        }
    }
    let (z, v) = best.expect("at least one seed");
    (z[0].canonical(), z[1].canonical(), v)
}

/// Indices sorted by decreasing value, ties by index.
fn ranked(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    idx
}

fn separated<'a>(z: &BlochVector, mut chosen: impl Iterator<Item = &'a BlochVector>, opts: &OptimizerOptions) -> bool {
    let min_angle = 4.0 * opts.initial_step();
    chosen.all(|c| z.axis_angle(c) > min_angle)
}

/// Compass search over `N` axes. Each poll moves one axis by `±step` along one
/// of its two tangent directions; the best improving move is taken, otherwise
/// the step halves.
pub(crate) fn pattern_search<const N: usize>(
    f: impl Fn(&[BlochVector; N]) -> f64,
    start: [BlochVector; N],
    start_value: f64,
    opts: &OptimizerOptions,
) -> ([BlochVector; N], f64) {
    let mut z = start;
    let mut value = start_value;
    let mut step = opts.initial_step();
    let mut polls = 0;
    while step >= opts.refine_tol && polls < opts.max_refine_iters {
        polls += 1;
        let mut best: Option<([BlochVector; N], f64)> = None;
        for axis in 0..N {
            let basis = z[axis].tangent_basis();
            for (dx, dy) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let mut cand = z;
                cand[axis] = z[axis].chart(&basis, dx, dy);
                let v = f(&cand);
                if v > best.map_or(value, |b| b.1) {
                    best = Some((cand, v));
                }
            }
        }
        match best {
            Some((cand, v)) => {
                z = cand;
                value = v;
            }
            None => step *= 0.5,
        }
    }
    (z, value)
}
