//! Numerical evaluation of exponentially weighted zeta-type series and
//! the quantum-statistics integrals built from them.
//!
//! The library is layered:
//!
//! * [`numerics`]: compensated summation, Euler series acceleration,
//!   generalized Gauss-Laguerre quadrature, and Mellin/Weyl transforms.
//! * [`special`]: gamma, Riemann zeta, and the Hurwitz-Lerch
//!   transcendent on their complex domains.
//!
//! Every evaluation takes an [`EvalConfig`] (tolerances, term and node
//! budgets, method policy) and returns an [`EvalResult`] carrying the
//! value, an error estimate, the effort spent, and which method ran.
//! Failures are typed [`Error`]s; no operation panics on bad input.

// Convergence checks are written `!(err < tol)` on purpose: the negated
// form fails on NaN, where `err >= tol` would silently accept it.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference constants are kept at full printed precision.
#![allow(clippy::excessive_precision)]

pub mod error;
pub mod eval;
pub mod gamma_zeta;
pub mod numerics;
pub mod special;
pub mod statmech;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{ComplexScalar, EvalConfig, EvalResult, Method, MethodPolicy};
pub use gamma_zeta::{
    duplication_residual, phi, phi_negative_order, phi_via_lerch, psi, psi_from_phi_shift,
    psi_negative_order, psi_via_lerch, weyl_semigroup_residual, GammaZetaPoint,
};
pub use statmech::{
    anyon_integral, be_convolution_residual, be_fd_relation_residual, bose_einstein_integral,
    bose_occupancy, fd_convolution_residual, fermi_dirac_integral, fermi_occupancy,
    maxwell_occupancy, AnyonWeights, ExponentVariant, ThermoState,
};
pub use verify::{
    default_grid, oracle_phi, run_identity_suite, summarize, IdentityCase, IdentityId,
    IdentityReport, OracleMode, SuiteSummary,
};
