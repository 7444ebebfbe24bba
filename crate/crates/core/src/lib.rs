//! Generalized quantum discord of three-qubit states.
//!
//! The discord of a state `ρ` on `A ⊗ B ⊗ C` is computed with sequential
//! projective measurements, first on `A` and then on `B` (possibly conditioned
//! on the outcome at `A`):
//!
//! ```text
//! Q(ρ) = min_{Π^AB} [ S_{B|Π^A} + S_{C|Π^AB} ] − S(ρ) + S(ρ_A)
//!      = 3 − S(ρ) + S(ρ_A) − max (G + F)
//! ```
//!
//! with `G = 1 − S_{B|Π^A}` and `F = 2 − S_{C|Π^AB}`.
//!
//! The crate provides three independent routes to `Q`:
//!
//! * [`discord::discord_closed_form`]: closed-form expressions for the
//!   structured parameter families in [`states::ParamSet`], dispatched by
//!   [`discord::classify_case`];
//! * [`discord::discord_numeric`]: grid scan plus pattern search over both
//!   Bloch spheres using the analytic objective from [`measure`];
//! * [`oracle::oracle_discord`]: brute-force minimisation over raw projectors
//!   for an arbitrary 8×8 density matrix.
//!
//! Everything is `no_std` (with `alloc` for grid buffers) and allocation-free
//! in the inner loops; matrices never exceed 8×8.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod discord;
mod error;
pub mod measure;
pub mod oracle;
pub mod qmat;
pub mod sphere;
pub mod states;

pub use discord::{
    classify_case, closed_form_for_case, discord_closed_form, discord_numeric, discord_werner_ghz, maximize_objective,
    CaseId, DiscordResult, Method, OptimizerOptions,
};
pub use error::{Error, Result};
pub use measure::Weighting;
pub use oracle::{bipartite_discord, oracle_discord, OracleOptions};
pub use qmat::{ComplexMatrix, Spectrum, Subsystems, C64};
pub use sphere::BlochVector;
pub use states::{build_state, build_werner_ghz, validate_state, DensityMatrix, ParamSet, ValidationReport};
