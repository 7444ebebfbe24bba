//! Closed-form discord for structured parameter families.
//!
//! Each case fixes the measurement axes at which `G + F` is claimed to be
//! maximal (coordinate poles for the fourteen-parameter family, the
//! directions `â = a/|a|`, `b̂ = b/|b|` for the general family). At those axes
//! the branch parameters collapse to a handful of scalars, assembled here into
//! [`BranchParams`].
//!
//! Every case also carries its reference formula, which is
//! evaluated literally and reported as [`DiscordResult::printed_q`]. Where the
//! reference formula disagrees with the collapsed branch parameters, the latter
//! is the primary value.

use core::fmt;

use super::optimize::OptimizerOptions;
use super::{discord_numeric, entropy_summary, DiscordResult, Method};
use crate::error::{Error, Result};
use crate::measure::{h_eps, BranchParams, Weighting};
use crate::qmat::xlog2x;
use crate::sphere::{norm, BlochVector};
use crate::states::{build_valid_state, ParamSet};

/// Tolerance for the equalities and inequalities in case premises.
pub const CASE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// Fourteen-parameter family, both axes at `(0, 0, 1)`.
    T2_1,
    /// Fourteen-parameter family with `b₃ = 0`, both axes at `(1, 0, 0)`.
    T2_2a,
    /// Fourteen-parameter family with `b₃ = 0`, both axes at `(0, 1, 0)`.
    T2_2b,
    /// `a = v = T = 0`, isotropic `r`; axes `b̂, b̂`.
    T3_1,
    /// `b = v = T = 0`, isotropic `r`; axes `â, â`.
    T3_2,
    /// `r = v = T = 0`; axes `â, b̂`.
    T3_3,
    /// `a = c = s = T = 0`, isotropic `r` and `v`; axes `b̂, b̂`.
    T3_4,
    /// `r = c = s = T = 0`, isotropic `v`; axes `â, b̂`.
    T3_5,
    /// `b = c = s = T = 0`, isotropic `r` and `v`; axes `â, â`.
    T3_6,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::T2_1,
        CaseId::T2_2a,
        CaseId::T2_2b,
        CaseId::T3_1,
        CaseId::T3_2,
        CaseId::T3_3,
        CaseId::T3_4,
        CaseId::T3_5,
        CaseId::T3_6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::T2_1 => "T2.1",
            CaseId::T2_2a => "T2.2a",
            CaseId::T2_2b => "T2.2b",
            CaseId::T3_1 => "T3.1",
            CaseId::T3_2 => "T3.2",
            CaseId::T3_3 => "T3.3",
            CaseId::T3_4 => "T3.4",
            CaseId::T3_5 => "T3.5",
            CaseId::T3_6 => "T3.6",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn zero(x: f64) -> bool {
    x.abs() <= CASE_TOL
}

fn all_zero(x: &[f64; 3]) -> bool {
    x.iter().all(|&v| zero(v))
}

fn isotropic(x: &[f64; 3]) -> bool {
    zero(x[0] - x[1]) && zero(x[1] - x[2])
}

fn family_31(p: &ParamSet) -> bool {
    zero(p.a[0]) && zero(p.a[1]) && zero(p.b[0]) && zero(p.b[1]) && all_zero(&p.v)
}

fn nonzero_norm(x: &[f64; 3]) -> bool {
    norm(x) > CASE_TOL
}

/// The vanishing/isotropy pattern a case's formula is built on, without its
/// inequalities.
pub fn structure_matches(p: &ParamSet, case: CaseId) -> bool {
    match case {
        CaseId::T2_1 => family_31(p),
        CaseId::T2_2a | CaseId::T2_2b => family_31(p) && zero(p.b[2]),
        CaseId::T3_1 => all_zero(&p.a) && all_zero(&p.v) && all_zero(&p.t) && isotropic(&p.r) && nonzero_norm(&p.b),
        CaseId::T3_2 => all_zero(&p.b) && all_zero(&p.v) && all_zero(&p.t) && isotropic(&p.r) && nonzero_norm(&p.a),
        CaseId::T3_3 => all_zero(&p.r) && all_zero(&p.t) && all_zero(&p.v) && nonzero_norm(&p.a) && nonzero_norm(&p.b),
        CaseId::T3_4 => {
            all_zero(&p.a)
                && all_zero(&p.c)
                && all_zero(&p.s)
                && all_zero(&p.t)
                && isotropic(&p.r)
                && isotropic(&p.v)
                && nonzero_norm(&p.b)
        }
        CaseId::T3_5 => {
            all_zero(&p.r)
                && all_zero(&p.t)
                && all_zero(&p.s)
                && all_zero(&p.c)
                && isotropic(&p.v)
                && nonzero_norm(&p.a)
                && nonzero_norm(&p.b)
        }
        CaseId::T3_6 => {
            all_zero(&p.b)
                && all_zero(&p.s)
                && all_zero(&p.c)
                && all_zero(&p.t)
                && isotropic(&p.r)
                && isotropic(&p.v)
                && nonzero_norm(&p.a)
        }
    }
}

/// Structure plus the case's inequalities.
pub fn premises_hold(p: &ParamSet, case: CaseId) -> bool {
    if !structure_matches(p, case) {
        return false;
    }
    let t = CASE_TOL;
    match case {
        CaseId::T2_1 => {
            let [a3, b3, r3] = [p.a[2], p.b[2], p.r[2]];
            let r = p.r[0].abs().max(p.r[1].abs());
            a3 * b3 * r3 <= t && r3 * r3 - r * r >= a3 * b3 * r3 - t && (b3 + r3) * (p.c[2] + p.s[2]) <= t
        }
        CaseId::T2_2a | CaseId::T2_2b => {
            let i = if case == CaseId::T2_2a { 0 } else { 1 };
            let rmax = p.r.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            p.c[0] * p.s[0] <= t && p.s[0] <= p.c[0].abs() + t && p.r[i].abs() >= rmax - t
        }
        _ => true,
    }
}

/// The first case whose premises `p` satisfies.
pub fn classify_case(p: &ParamSet) -> Option<CaseId> {
    CaseId::ALL.into_iter().find(|&c| premises_hold(p, c))
}

fn unit(x: &[f64; 3]) -> BlochVector {
    BlochVector::normalize(*x).unwrap_or(BlochVector::Z)
}

/// The axes `(z^A, z^B)` at which a case evaluates `G + F`.
pub fn case_maximizer(p: &ParamSet, case: CaseId) -> (BlochVector, BlochVector) {
    match case {
        CaseId::T2_1 => (BlochVector::Z, BlochVector::Z),
        CaseId::T2_2a => (BlochVector::X, BlochVector::X),
        CaseId::T2_2b => (BlochVector::Y, BlochVector::Y),
        CaseId::T3_1 | CaseId::T3_4 => (unit(&p.b), unit(&p.b)),
        CaseId::T3_2 | CaseId::T3_6 => (unit(&p.a), unit(&p.a)),
        CaseId::T3_3 | CaseId::T3_5 => (unit(&p.a), unit(&p.b)),
    }
}

fn add_scaled(x: &[f64; 3], k: f64, y: &[f64; 3]) -> [f64; 3] {
    [x[0] + k * y[0], x[1] + k * y[1], x[2] + k * y[2]]
}

fn along(x: &[f64; 3], z: &[f64; 3]) -> [f64; 3] {
    [x[0] * z[0], x[1] * z[1], x[2] * z[2]]
}

/// Branch parameters at the case's axes, from the collapsed scalar formulas.
/// Assumes [`structure_matches`].
pub fn case_branch_params(p: &ParamSet, case: CaseId) -> BranchParams {
    let sgn = |k: usize| if k == 0 { 1.0 } else { -1.0 };
    let mut bp = BranchParams { eps: 0.0, b_len: [0.0; 2], alpha: [[0.0; 2]; 2], gamma: [[0.0; 2]; 2] };
    match case {
        CaseId::T2_1 => {
            let [a3, b3, r3] = [p.a[2], p.b[2], p.r[2]];
            bp.eps = a3;
            bp.b_len = [(b3 + r3).abs(), (b3 - r3).abs()];
            let (c1, c2, c3, s3, t3) = (p.c[0], p.c[1], p.c[2], p.s[2], p.t[2]);
            for k in 0..2 {
                let f = sgn(k);
                bp.alpha[0][k] = a3 + f * (b3 + r3);
                bp.alpha[1][k] = -a3 + f * (b3 - r3);
                let up = c3 + s3 + f * t3;
                let down = c3 - s3 - f * t3;
                bp.gamma[0][k] = libm::sqrt(c1 * c1 + c2 * c2 + up * up);
                bp.gamma[1][k] = libm::sqrt(c1 * c1 + c2 * c2 + down * down);
            }
        }
        CaseId::T2_2a | CaseId::T2_2b => {
            let i = if case == CaseId::T2_2a { 0 } else { 1 };
            let ri = p.r[i];
            bp.b_len = [ri.abs(); 2];
            for k in 0..2 {
                let f = sgn(k);
                bp.alpha[0][k] = f * ri;
                bp.alpha[1][k] = -f * ri;
                let mut up = p.c;
                let mut down = p.c;
                up[i] += p.s[i] + f * p.t[i];
                down[i] -= p.s[i] + f * p.t[i];
                bp.gamma[0][k] = norm(&up);
                bp.gamma[1][k] = norm(&down);
            }
        }
        CaseId::T3_1 | CaseId::T3_4 => {
            let b = norm(&p.b);
            let r = p.r[0];
            let bhat = unit(&p.b).z;
            bp.b_len = [(b + r).abs(), (b - r).abs()];
            let (g0, g1) = if case == CaseId::T3_1 {
                let sb = along(&p.s, &bhat);
                (norm(&add_scaled(&p.c, 1.0, &sb)), norm(&add_scaled(&p.c, -1.0, &sb)))
            } else {
                (p.v[0].abs(), p.v[0].abs())
            };
            for k in 0..2 {
                let f = sgn(k);
                bp.alpha[0][k] = f * (b + r);
                bp.alpha[1][k] = f * (b - r);
                bp.gamma[0][k] = g0;
                bp.gamma[1][k] = g1;
            }
        }
        CaseId::T3_2 | CaseId::T3_6 => {
            let a = norm(&p.a);
            let r = p.r[0];
            let ahat = unit(&p.a).z;
            bp.eps = a;
            bp.b_len = [r.abs(); 2];
            let (g0, g1) = if case == CaseId::T3_2 {
                let sa = along(&p.s, &ahat);
                (norm(&add_scaled(&p.c, 1.0, &sa)), norm(&add_scaled(&p.c, -1.0, &sa)))
            } else {
                (p.v[0].abs(), p.v[0].abs())
            };
            for k in 0..2 {
                let f = sgn(k);
                bp.alpha[0][k] = a + f * r;
                bp.alpha[1][k] = -a - f * r;
                bp.gamma[0][k] = g0;
                bp.gamma[1][k] = g1;
            }
        }
        CaseId::T3_3 | CaseId::T3_5 => {
            let a = norm(&p.a);
            let b = norm(&p.b);
            let ahat = unit(&p.a).z;
            bp.eps = a;
            bp.b_len = [b; 2];
            let (g0, g1) = if case == CaseId::T3_3 {
                let sa = along(&p.s, &ahat);
                (norm(&add_scaled(&p.c, 1.0, &sa)), norm(&add_scaled(&p.c, -1.0, &sa)))
            } else {
                (p.v[0].abs(), p.v[0].abs())
            };
            for k in 0..2 {
                let f = sgn(k);
                bp.alpha[0][k] = a + f * b;
                bp.alpha[1][k] = -a + f * b;
                bp.gamma[0][k] = g0;
                bp.gamma[1][k] = g1;
            }
        }
    }
    bp
}

/// The case formula exactly as printed, given `Σλ log₂λ` over the spectrum
/// of the state. `None` if a printed square root has a negative radicand.
pub fn printed_q(p: &ParamSet, case: CaseId, sum_lambda_log_lambda: f64) -> Option<f64> {
    let h = h_eps;
    let h0 = |x: f64| h_eps(0.0, x);
    let sl = sum_lambda_log_lambda;
    let sqrt = |x: f64| if x >= 0.0 { Some(libm::sqrt(x)) } else { None };
    let sgn = |k: usize| if k == 0 { 1.0 } else { -1.0 };
    let csq = p.c.iter().map(|x| x * x).sum::<f64>();

    // T2 cases give G and F; Q follows from the two-outcome spectrum of A.
    let assemble = |a3: f64, g: f64, f: f64| {
        let la = 0.5 * (1.0 + a3);
        let lb = 0.5 * (1.0 - a3);
        3.0 + sl - xlog2x(la) - xlog2x(lb) - (g + f)
    };

    match case {
        CaseId::T2_1 => {
            let [a3, b3, r3] = [p.a[2], p.b[2], p.r[2]];
            let (c3, s3, t3) = (p.c[2], p.s[2], p.t[2]);
            let g = 0.5 * (h(a3, (b3 + r3).abs()) + h(-a3, (b3 - r3).abs()) - 2.0 * h0(a3));
            let mut al = [0.0; 2];
            let mut be = [0.0; 2];
            let mut ga = [0.0; 2];
            let mut de = [0.0; 2];
            for k in 0..2 {
                let f = sgn(k);
                al[k] = a3 + f * (b3 + r3);
                be[k] = -a3 + f * (b3 - r3);
                ga[k] = sqrt(csq + s3 * s3 + t3 * t3 + 2.0 * (c3 * s3 + f * (c3 * t3 + s3 * t3)))?;
                de[k] = sqrt(csq + s3 * s3 + t3 * t3 + 2.0 * (-c3 * s3 + f * (s3 * t3 - c3 * t3)))?;
            }
            let f = (h(al[0], ga[0]) + h(al[1], ga[1]) - 2.0 * h(a3, b3 + r3)) / (2.0 * (1.0 + a3))
                + (h(be[0], de[0]) + h(be[1], de[1]) - 2.0 * h(-a3, b3 - r3)) / (2.0 * (1.0 - a3));
            Some(assemble(a3, g, f))
        }
        CaseId::T2_2a => {
            let (a3, r1) = (p.a[2], p.r[0]);
            let (c1, s1, t1) = (p.c[0], p.s[0], p.t[0]);
            let g = 0.5 * (h(a3, r1) + h(-a3, r1) - 2.0 * h0(a3));
            let base = csq + s1 * s1 + t1 * t1;
            let mut ga = [0.0; 2];
            let mut de = [0.0; 2];
            for k in 0..2 {
                let f = sgn(k);
                ga[k] = sqrt(base + 2.0 * (c1 * s1 + f * (c1 * t1 + s1 * t1)))?;
                de[k] = sqrt(base + 2.0 * (-c1 * s1 + f * (c1 * t1 - s1 * t1)))?;
            }
            let f = 0.5 * (h(r1, ga[0]) + h(-r1, ga[1]) + h(r1, de[0]) + h(-r1, de[1]) - 4.0 * h0(r1));
            Some(assemble(a3, g, f))
        }
        CaseId::T2_2b => {
            let (a3, r2) = (p.a[2], p.r[1]);
            let (c2, s2, t2) = (p.c[1], p.s[1], p.t[1]);
            let g = 0.5 * (h(a3, r2) + h(-a3, r2) - 2.0 * h0(a3));
            let base = csq + s2 * s2 + t2 * t2;
            let mut ga = [0.0; 2];
            let mut de = [0.0; 2];
            for k in 0..2 {
                let f = sgn(k);
                ga[k] = sqrt(base + 2.0 * (c2 * s2 + f * c2 * t2 + s2 * t2))?;
                de[k] = sqrt(base + 2.0 * (-c2 * s2 + f * c2 * t2 - s2 * t2))?;
            }
            let f = 0.5 * (h(r2, ga[0]) + h(-r2, ga[1]) + h(r2, de[0]) + h(-r2, de[1]) - 4.0 * h0(r2));
            Some(assemble(a3, g, f))
        }
        CaseId::T3_1 => {
            let b = norm(&p.b);
            let r = p.r[0];
            let bb = norm(&add_scaled(&p.c, 1.0, &along(&p.s, &unit(&p.b).z)));
            Some(
                sl + 4.0 + h(b, r) + h(-b, r)
                    - h0((b + r).abs())
                    - 0.5 * (h(b + bb, r) + h(b - bb, r) + h(-b + bb, r) + h(-b - bb, r)),
            )
        }
        CaseId::T3_2 | CaseId::T3_6 => {
            let a = norm(&p.a);
            let r = p.r[0];
            let x =
                if case == CaseId::T3_2 { norm(&add_scaled(&p.c, 1.0, &along(&p.s, &unit(&p.a).z))) } else { p.v[0] };
            Some(
                sl + 3.0
                    - h0(a * a)
                    - 0.5 * (h(a, r) + h(-a, r) - 2.0 * h0(a))
                    - (h(a + x, r) + h(a - x, r) - 2.0 * h(a, r)) / (2.0 * (1.0 + a))
                    - (h(-a + x, r) + h(-a - x, r) - 2.0 * h(-a, r)) / (2.0 * (1.0 - a)),
            )
        }
        CaseId::T3_3 => {
            let a = norm(&p.a);
            let b = norm(&p.b);
            let aa = norm(&add_scaled(&p.c, 1.0, &along(&p.s, &unit(&p.a).z)));
            Some(
                sl + 3.0
                    - h0(a * a)
                    - 0.5 * (h(b, a) + h(-b, a) - 2.0 * h0(a))
                    - (h(a + aa, b) + h(a - aa, b) - 2.0 * h(a, b)) / (2.0 * (1.0 + a))
                    - (h(b + aa, b) + h(-a - aa, b) - 2.0 * h(-a, b)) / (2.0 * (1.0 - a)),
            )
        }
        CaseId::T3_4 => {
            let b = norm(&p.b);
            let (r, v) = (p.r[0], p.v[0]);
            Some(
                sl + h(b, r) + h(-b, r) + 4.0
                    - h0((b + r).abs())
                    - 0.5 * (h(b + v, r) + h(b - v, r) + h(-b + v, r) * h(-b - v, r)),
            )
        }
        CaseId::T3_5 => {
            let a = norm(&p.a);
            let b = norm(&p.b);
            let v = p.v[0];
            Some(
                sl + 3.0
                    - h0(a * a)
                    - 0.5 * (h(b, a) + h(-b, a) - 2.0 * h0(a))
                    - (h(a + v, b) + h(a - v, b) - 2.0 * h(a, b)) / (2.0 * (1.0 + a))
                    - (h(-a + v, b) + h(-a - v, b) - 2.0 * h(-a, b)) / (2.0 * (1.0 - a)),
            )
        }
    }
}

/// Closed-form discord for a case chosen by the caller; only the case's
/// structural pattern is required, not its inequalities. With `verify`, the
/// numerical optimum is computed too and `verify_delta` reports the gap.
pub fn closed_form_for_case(
    p: &ParamSet,
    case: CaseId,
    weighting: Weighting,
    verify: Option<&OptimizerOptions>,
) -> Result<DiscordResult> {
    if !structure_matches(p, case) {
        return Err(Error::CaseNotApplicable(case.name()));
    }
    let rho = build_valid_state(p)?;
    let (s_abc, s_a, sum_ll) = entropy_summary(p, &rho)?;
    let bp = case_branch_params(p, case);
    let (g, f) = bp.objective(weighting)?;
    let (za, zb) = case_maximizer(p, case);
    let mut result = DiscordResult {
        q: 3.0 - s_abc + s_a - (g + f),
        za,
        zb,
        zb_given_a: None,
        g_max: g,
        f_max: f,
        s_abc,
        s_a,
        method: Method::ClosedForm(case),
        weighting,
        verify_delta: None,
        printed_q: printed_q(p, case, sum_ll),
    };
    if let Some(opts) = verify {
        let numeric = discord_numeric(p, &opts.weighting(weighting))?;
        result.verify_delta = Some((result.q - numeric.q).abs());
    }
    Ok(result)
}

/// Closed-form discord if `p` satisfies some case's premises.
pub fn discord_closed_form(
    p: &ParamSet,
    weighting: Weighting,
    verify: Option<&OptimizerOptions>,
) -> Result<Option<DiscordResult>> {
    match classify_case(p) {
        Some(case) => closed_form_for_case(p, case, weighting, verify).map(Some),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::branch_params;

    fn example1() -> ParamSet {
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

    fn example2() -> ParamSet {
        ParamSet { b: [0.2, 0.05, 0.1], c: [0.04, 0.06, 0.11], r: [0.17; 3], s: [0.08, 0.15, 0.25], ..ParamSet::zero() }
    }

    /// One representative per case, satisfying its structure.
    fn representative(case: CaseId) -> ParamSet {
        let z = ParamSet::zero();
        match case {
            CaseId::T2_1 => example1(),
            CaseId::T2_2a => ParamSet {
                a: [0.0, 0.0, 0.1],
                r: [0.3, 0.1, -0.2],
                c: [0.1, 0.05, 0.0],
                s: [-0.1, 0.0, 0.1],
                t: [0.1, 0.0, 0.05],
                ..z
            },
            CaseId::T2_2b => ParamSet {
                a: [0.0, 0.0, 0.1],
                r: [0.1, 0.3, -0.2],
                c: [0.1, 0.05, 0.0],
                s: [-0.1, 0.04, 0.1],
                t: [0.1, 0.05, 0.05],
                ..z
            },
            CaseId::T3_1 => example2(),
            CaseId::T3_2 => {
                ParamSet { a: [0.1, 0.2, -0.1], r: [0.15; 3], c: [0.05, 0.0, 0.1], s: [0.1, -0.1, 0.05], ..z }
            }
            CaseId::T3_3 => {
                ParamSet { a: [0.1, 0.2, -0.1], b: [0.0, 0.1, 0.2], c: [0.05, 0.0, 0.1], s: [0.1, -0.1, 0.05], ..z }
            }
            CaseId::T3_4 => ParamSet { b: [0.1, 0.2, 0.0], r: [0.1; 3], v: [0.15; 3], ..z },
            CaseId::T3_5 => ParamSet { a: [0.1, -0.2, 0.0], b: [0.0, 0.1, 0.2], v: [0.15; 3], ..z },
            CaseId::T3_6 => ParamSet { a: [0.1, -0.2, 0.05], r: [-0.1; 3], v: [0.15; 3], ..z },
        }
    }

    #[test]
    fn case_names_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(CaseId::parse(c.name()), Some(c));
        }
        assert_eq!(CaseId::parse("t3.4"), Some(CaseId::T3_4));
        assert_eq!(CaseId::parse("T4"), None);
    }

    #[test]
    fn collapsed_parameters_equal_general_ones_at_the_case_axes() {
        for case in CaseId::ALL {
            let p = representative(case);
            assert!(structure_matches(&p, case), "{case}");
            let (za, zb) = case_maximizer(&p, case);
            let general = branch_params(&p, &za, &zb);
            let collapsed = case_branch_params(&p, case);
            let close = |x: f64, y: f64| (x - y).abs() <= 1e-14;
            assert!(close(general.eps, collapsed.eps), "{case}: {general:?} vs {collapsed:?}");
            for j in 0..2 {
                assert!(close(general.b_len[j], collapsed.b_len[j]), "{case} b_len");
                for k in 0..2 {
                    assert!(close(general.alpha[j][k], collapsed.alpha[j][k]), "{case} alpha");
                    assert!(close(general.gamma[j][k], collapsed.gamma[j][k]), "{case} gamma");
                }
            }
        }
    }

    #[test]
    fn example2_is_t31() {
        assert_eq!(classify_case(&example2()), Some(CaseId::T3_1));
    }

    #[test]
    fn example1_fails_the_third_premise() {
        let p = example1();
        assert!(structure_matches(&p, CaseId::T2_1));
        assert!((p.b[2] + p.r[2]) * (p.c[2] + p.s[2]) > 0.0);
        assert_eq!(classify_case(&p), None);
    }

    #[test]
    fn no_case_for_generic_state() {
        let p = ParamSet {
            a: [0.0, 0.0, 0.1],
            b: [0.0, 0.0, 0.2],
            c: [0.1, 0.1, 0.1],
            r: [0.3, 0.0, 0.1],
            ..ParamSet::zero()
        };
        assert!(p.r[2] * p.r[2] - 0.09 < p.a[2] * p.b[2] * p.r[2]);
        assert_eq!(classify_case(&p), None);
    }

    #[test]
    fn override_requires_structure() {
        assert!(matches!(
            closed_form_for_case(&example2(), CaseId::T2_1, Weighting::PerOutcome, None),
            Err(Error::CaseNotApplicable("T2.1"))
        ));
    }

    #[test]
    fn t21_printed_equals_collapsed_per_outcome() {
        let r = closed_form_for_case(&example1(), CaseId::T2_1, Weighting::PerOutcome, None).unwrap();
        assert!((r.q - r.printed_q.unwrap()).abs() <= 1e-12, "{r:?}");
    }

    #[test]
    fn example2_printed_formula() {
        let r = closed_form_for_case(&example2(), CaseId::T3_1, Weighting::PerOutcome, None).unwrap();
        // Direct evaluation of the printed expression.
        assert!((r.printed_q.unwrap() - 0.996_964_571_489_475_3).abs() <= 1e-12, "{r:?}");
    }
}
