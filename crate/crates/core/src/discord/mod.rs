//! Discord assembly, numerical maximisation and closed forms.

mod closed_form;
mod optimize;

pub use closed_form::{
    case_branch_params, case_maximizer, classify_case, closed_form_for_case, discord_closed_form, premises_hold,
    printed_q, structure_matches, CaseId, CASE_TOL,
};
pub use optimize::{maximize_f, maximize_g, maximize_objective, OptimizerOptions};

use core::fmt;

use crate::error::{Error, Result};
use crate::measure::{branch_params, h_eps, Weighting};
use crate::qmat::{eig_hermitian, entropy_of_spectrum, xlog2x};
use crate::sphere::{norm, BlochVector};
use crate::states::{build_valid_state, DensityMatrix, ParamSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm(CaseId),
    Numeric,
    WernerGhz,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::ClosedForm(case) => write!(f, "closed-form {case}"),
            Method::Numeric => f.write_str("numeric"),
            Method::WernerGhz => f.write_str("werner-ghz"),
            Method::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordResult {
    /// Discord in bits.
    pub q: f64,
    pub za: BlochVector,
    /// Axis on `B` (for a shared scheme; the branch-0 axis otherwise).
    pub zb: BlochVector,
    /// Per-outcome axes on `B`, when the scheme is conditional.
    pub zb_given_a: Option<[BlochVector; 2]>,
    /// `G` at the reported axes.
    pub g_max: f64,
    /// `F` at the reported axes.
    pub f_max: f64,
    pub s_abc: f64,
    pub s_a: f64,
    pub method: Method,
    pub weighting: Weighting,
    /// `|closed − numeric|`, when a cross-check was run.
    pub verify_delta: Option<f64>,
    /// A closed-form case's formula evaluated as printed.
    pub printed_q: Option<f64>,
}

impl DiscordResult {
    pub const VERIFY_TOL: f64 = 1e-6;

    /// `None` when no cross-check was run.
    pub fn verified(&self) -> Option<bool> {
        self.verify_delta.map(|d| d <= Self::VERIFY_TOL)
    }

    /// `S_{BC|A} = S_ABC − S_A`.
    pub fn s_bc_given_a(&self) -> f64 {
        self.s_abc - self.s_a
    }
}

/// `(S_ABC, S_A, Σλ log₂λ)`, with `S_A = 1 − H(|a|)`.
pub(crate) fn entropy_summary(p: &ParamSet, rho: &DensityMatrix) -> Result<(f64, f64, f64)> {
    let spectrum = eig_hermitian(rho)?;
    let s_abc = entropy_of_spectrum(&spectrum)?;
    let sum_ll = spectrum.iter().map(|&l| xlog2x(l.max(0.0))).sum::<f64>();
    Ok((s_abc, 1.0 - h_eps(0.0, norm(&p.a)), sum_ll))
}

/// Discord from the numerically maximised `G + F`.
pub fn discord_numeric(p: &ParamSet, opts: &OptimizerOptions) -> Result<DiscordResult> {
    opts.validate()?;
    let rho = build_valid_state(p)?;
    let (s_abc, s_a, _) = entropy_summary(p, &rho)?;
    let (za, zb, _) = optimize::maximize_pair(p, opts);
    let (g, f) = branch_params(p, &za, &zb).objective(opts.weighting)?;
    Ok(DiscordResult {
        q: 3.0 - s_abc + s_a - (g + f),
        za,
        zb,
        zb_given_a: None,
        g_max: g,
        f_max: f,
        s_abc,
        s_a,
        method: Method::Numeric,
        weighting: opts.weighting,
        verify_delta: None,
        printed_q: None,
    })
}

/// Discord of `c|GHZ⟩⟨GHZ| + (1 − c) I/8`:
/// `⅛(1−c)log₂(1−c) + ⅛(1+7c)log₂(1+7c) − ¼(1+3c)log₂(1+3c)`.
pub fn discord_werner_ghz(c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::MixingOutOfRange(c));
    }
    Ok((xlog2x(1.0 - c) + xlog2x(1.0 + 7.0 * c)) / 8.0 - xlog2x(1.0 + 3.0 * c) / 4.0)
}

/// The Werner-GHZ closed form packaged as a result. Both axes lie along `z`,
/// where `S_{B|Π^A} = 1 − H(c)` and, with joint weighting,
/// `S_{C|Π^{AB}} = ½(1+c) h((1+3c)/(2(1+c))) + ½(1−c)` for the binary entropy `h`.
pub fn werner_ghz_result(c: f64) -> Result<DiscordResult> {
    let q = discord_werner_ghz(c)?;
    let s_abc = -(7.0 * xlog2x((1.0 - c) / 8.0) + xlog2x((1.0 + 7.0 * c) / 8.0));
    let s_b = 1.0 - h_eps(0.0, c);
    let l = (1.0 + 3.0 * c) / (2.0 * (1.0 + c));
    let s_c = 0.5 * (1.0 + c) * -(xlog2x(l) + xlog2x(1.0 - l)) + 0.5 * (1.0 - c);
    Ok(DiscordResult {
        q,
        za: BlochVector::Z,
        zb: BlochVector::Z,
        zb_given_a: None,
        g_max: 1.0 - s_b,
        f_max: 2.0 - s_c,
        s_abc,
        s_a: 1.0,
        method: Method::WernerGhz,
        weighting: Weighting::Joint,
        verify_delta: None,
        printed_q: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn werner_ghz_reference_values() {
        assert_eq!(discord_werner_ghz(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(discord_werner_ghz(1.0).unwrap(), 1.0, epsilon = 1e-15);
        // −0.0625 + 0.5625·log₂4.5 − 0.625·log₂2.5
        assert_abs_diff_eq!(discord_werner_ghz(0.5).unwrap(), 0.331_877_754_006_699_06, epsilon = 1e-14);
        assert!(matches!(discord_werner_ghz(1.01), Err(Error::MixingOutOfRange(_))));
    }

    #[test]
    fn werner_ghz_result_is_self_consistent() {
        for c in [0.0, 0.2, 0.5, 0.9, 1.0] {
            let r = werner_ghz_result(c).unwrap();
            let assembled = 3.0 - r.s_abc + r.s_a - (r.g_max + r.f_max);
            assert_abs_diff_eq!(r.q, assembled, epsilon = 1e-12);
        }
    }

    #[test]
    fn maximally_mixed_state() {
        let opts = OptimizerOptions::with_grid(8);
        let r = discord_numeric(&ParamSet::zero(), &opts.weighting(Weighting::Joint)).unwrap();
        assert_abs_diff_eq!(r.q, 0.0, epsilon = 1e-12);
        // Per-outcome weighting counts S(C|B) once per outcome of A.
        let r = discord_numeric(&ParamSet::zero(), &opts.weighting(Weighting::PerOutcome)).unwrap();
        assert_abs_diff_eq!(r.q, 1.0, epsilon = 1e-12);
        assert_eq!(r.method, Method::Numeric);
        assert_eq!(r.method.to_string(), "numeric");
        assert_eq!(Method::ClosedForm(CaseId::T3_1).to_string(), "closed-form T3.1");
    }
}
