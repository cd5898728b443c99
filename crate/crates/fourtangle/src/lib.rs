//! Geometric SLOCC invariants of four-qubit pure states.
//!
//! A four-qubit state is read as four points in complex projective
//! 3-space (the columns of its 4×4 amplitude matrix). Exterior algebra
//! over those points — with the metric induced by the two-qubit
//! epsilon form — yields four independent polynomial invariants
//! `I1, I2, I3, I4` of the SLOCC group, the 2×2×2×2 hyperdeterminant
//! `D4` along three independent routes, and a tetrahedron picture in
//! which degeneration (vanishing `D4`, collapsing point rank,
//! vanishing Plücker lines) is directly visible.
//!
//! Everything is generic over the scalar: `num_complex::Complex64` for
//! fast floating-point work and [`scalar::GaussianRational`]
//! (`Complex<BigRational>`) for exact arithmetic, where every identity
//! holds with zero residual.
//!
//! Entry points:
//! - [`state::FourQubitState`] / [`state::ThreeQubitState`] — amplitude
//!   containers with SLOCC and qubit-permutation actions.
//! - [`invariants::full_invariant_set`] — `I1..I4` plus the auxiliary
//!   determinants and sextic covariant values, cross-checked internally.
//! - [`hyperdet::hyperdeterminant_report`] — `D4` via Schläfli-style
//!   `S, T` composition, via the resolvent-quartic discriminant, and via
//!   the discriminant of the determinant pencil of the two biquadratic
//!   half-forms.
//! - [`canonical::recover_parameters`] — canonical-form parameters
//!   `(a, b, c, d)` back from the invariants, including degenerate
//!   multiplicity patterns and an exact-arithmetic path.
//! - [`tetrahedron::tetrahedron_report`] — point rank, vanishing
//!   lines/planes, and the line-incidence matrix.
//! - [`geometry::line_quadric_classify`] — three-qubit classification by
//!   the position of a projective line relative to the invariant quadric.
//! - [`suite`] — seeded randomized verification of every identity the
//!   crate relies on, in both arithmetic modes.
//!
//! The `fourtangle` binary (see [`cli`]) exposes all of the above as
//! subcommands over JSON state files.

#![forbid(unsafe_code)]

pub mod canonical;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod hyperdet;
pub mod invariants;
pub mod io;
pub mod scalar;
pub mod state;
pub mod suite;
pub mod tetrahedron;

pub use canonical::{
    canonical_report, canonical_report_exact, g_state, orbit_invariants, recover_parameters,
    recover_parameters_exact, vandermonde_d4, CanonicalReport, RecoveryOutcome,
};
pub use error::{Error, Result};
pub use geometry::{
    bivector_dot, bracket, dot, dual_points, hodge_dual, line_quadric_classify, pluecker_set,
    trivector_dot, wedge2, wedge3, Bivector, LineLabel, LineQuadricClass, PlaneLabel, PlueckerSet,
    Trivector, Vector4,
};
pub use hyperdet::{
    concurrence, hyperdeterminant_report, quartic_discriminant, three_qubit_report, three_tangle,
    HyperdetReport, QuarticPolynomial, ThreeQubitReport,
};
pub use invariants::{full_invariant_set, InvariantSet, IDENTITY_RTOL};
pub use scalar::{GaussianRational, Scalar};
pub use state::{
    apply_slocc, apply_slocc3, permute_qubits, random_rational_state_with, random_state,
    random_state_with, FourQubitState, LocalOperation, QubitPermutation, ThreeQubitState,
};
pub use suite::{
    identity_suite_exact, identity_suite_float, permutation_suite, slocc_suite_exact,
    slocc_suite_float, CheckSummary, IdentityCheck, SuiteReport, SuiteTolerances,
};
pub use tetrahedron::{point_rank, tetrahedron_report, TetrahedronReport};
