//! Exact arithmetic: big integers, Gaussian integers and Gaussian rationals.

mod combinat;
mod gaussian;
mod gaussian_int;
pub(crate) mod text;

pub use combinat::{binom, sign_pow};
pub use gaussian::GaussianRational;
pub use gaussian_int::GaussianInteger;
pub use num_bigint::BigInt;
