//! Certified evaluation of trigonometric remainder series, the sharp
//! constants they produce, and grid certification of the associated
//! inequalities.
pub mod arith;
pub mod best_constants;
pub mod error;
pub mod exact_numbers;
pub mod inequality_verifier;
pub mod polygamma;
pub mod remainder_series;
pub mod zeta_sums;

pub use arith::{BigFloat, Enclosure, TailBound};
pub use error::{Error, Result};
pub use exact_numbers::ExactRational;
