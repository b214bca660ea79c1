//! Classical special functions: gamma, Riemann zeta, and the
//! Hurwitz-Lerch transcendent.

pub mod gamma;
pub mod lerch;
pub mod zeta;

pub use gamma::{gamma, log_gamma};
pub use lerch::{lerch_phi, LerchParams};
pub use zeta::{riemann_zeta, riemann_zeta_result};
