//! Numerical kernels: compensated summation, series acceleration,
//! Gauss-Laguerre quadrature, and Mellin/Weyl transforms.

pub mod accel;
pub mod integrate;
pub mod laguerre;
pub mod sum;
pub mod transform;

pub use accel::euler_accelerate;
pub use integrate::integrate_semi_infinite;
pub use laguerre::gauss_laguerre;
pub use sum::{sum_series, Compensated, CompensatedComplex};
pub use transform::{mellin_convolution, mellin_transform, weyl_transform, RealFunction};
