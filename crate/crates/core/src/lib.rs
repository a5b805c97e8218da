//! Computational engine for the simple formally real Jordan algebras
//! `h_n(R)`, `h_n(C)`, `h_n(H)`, `h_3(O)`, the spin factors, and the complex
//! exceptional algebra `h_3(C⊗O)`.
//!
//! - [`division`]: octonion and bioctonion arithmetic.
//! - [`jordan`], [`spin`]: Jordan and Freudenthal products, characteristic
//!   data, invariant forms, block splits.
//! - [`spectral`]: eigenvalues and eigenprojections in `h_3`.
//! - [`projective`]: points, lines, incidence, join and meet.
//! - [`matrix_model`]: the triality cycle `ρ` and the cubic matrix-model
//!   actions.
//! - [`verify`]: seeded property suites over all of the above.

pub mod division;
pub mod error;
pub mod io;
pub mod jordan;
pub mod matrix_model;
pub mod projective;
pub mod random;
pub mod spectral;
pub mod spin;
pub mod verify;

pub use division::{Bioctonion, Conjugation, Octonion};
pub use error::{Error, Result};
pub use jordan::{Characteristic, Ground, HermitianElement};
pub use matrix_model::{GaugeAlgebra, GaugeConfiguration};
pub use projective::{Incidence, ProjectiveLine, ProjectivePoint};
pub use spectral::SpectralFrame;
pub use spin::SpinFactorElement;

/// Complex scalars used throughout the public API.
pub use num_complex::Complex64;

/// Absolute floor under every scaled tolerance.
pub const ABS_TOLERANCE_FLOOR: f64 = 1e-12;

/// `rel · scale`, never below [`ABS_TOLERANCE_FLOOR`].
pub fn scaled_tolerance(rel: f64, scale: f64) -> f64 {
    (rel * scale).max(ABS_TOLERANCE_FLOOR)
}
