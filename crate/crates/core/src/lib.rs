//! Near braces and the set-theoretic braid-equation solutions they
//! generate.
//!
//! A *near brace* is a set with two group structures `(B, +)` and `(B, ∘)`
//! tied together by the law `a∘(b + c) = a∘b − a∘0 + a∘c`, where `0` is the
//! additive neutral element. Every such structure, together with a triple
//! of parameters `(z₁, z₂, ξ)` satisfying mild closure and constancy
//! conditions, yields a non-degenerate solution of the braid equation
//!
//! ```text
//! σ_a(b) = a∘b∘z₁ − a∘ξ + z₂,        τ_b(a) = σ_a(b)⁻¹∘a∘b
//! ```
//!
//! on the same carrier, along with a companion solution inverting it.
//!
//! The crate provides, all exhaustively verified at small orders:
//!
//! * validated multiplication tables for standard finite groups and
//!   arbitrary user tables ([`group`]);
//! * construction, validation, structural reporting, reconstruction from
//!   σ-families, and shift correspondences for near braces ([`brace`]);
//! * exhaustive enumeration of all near braces over a fixed multiplicative
//!   group at small orders ([`enumerate`]);
//! * admissible and weakly admissible parameter triples with their
//!   constants ([`params`]);
//! * the parametric solutions, their companion inverses, full braid and
//!   non-degeneracy analysis, conjugation-style maps on skew structures,
//!   the classical involutive map on braces, and the twist search
//!   ([`solution`]);
//! * factorization of the partial braid compositions through the group
//!   product ([`pbraid`]);
//! * an exact infinite example over Gaussian rationals with odd parity,
//!   verified by deterministic sampling ([`qoi`]);
//! * JSON interchange for every object above ([`codec`]).

pub mod brace;
pub mod codec;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod params;
pub mod pbraid;
pub mod qoi;
pub mod solution;

pub use brace::{
    addition_from_sigma, sigma_family_of, structural_report, trivial_near_brace, Check, NearBrace,
    SigmaFamily, StructuralReport,
};
pub use enumerate::{enumerate_near_braces, enumerate_with_zero, MAX_ENUM_ORDER};
pub use error::Error;
pub use group::{
    build_standard, standard_groups, validate_table, Diagnostics, Elem, GroupSpec, GroupTable,
};
pub use params::{
    admissible_params, inverse_params, right_distributive_set, sigma_coincidence_check,
    weakly_admissible_params, InverseParams, ParamTriple,
};
pub use pbraid::{check_p_braiding, closed_form_fg, PBraidingReport};
pub use qoi::{
    catalogued_examples, qoi_braid_sides, qoi_check, qoi_inverse_identities_hold, qoi_sample,
    qoi_sigma, qoi_tau, QGauss, QoiParams, QoiReport, QoiSampler,
};
pub use solution::{
    analyze_solution, build_inverse, build_solution, gv_solution, rump_check, twist_search,
    verify_inverse_pair, yang_baxter_form, BraidMap, SolutionReport,
};
