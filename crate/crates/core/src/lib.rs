//! Exact zero counts for diagonal cubic forms over finite fields.
//!
//! For `q = p^k` this crate counts the solutions of
//!
//! ```text
//! N_s(z):  x_1^3 + ... + x_s^3 = z
//! T_s(y):  x_1^3 + ... + x_{s-1}^3 + y x_s^3 = 0
//! ```
//!
//! through closed-form rational generating functions whose coefficients obey
//! the recurrence `u_s = 3q u_{s-2} + qc u_{s-3}`, and checks every closed form
//! against a brute-force convolution oracle and numeric character sums.
//!
//! The ring code is generic over its scalar: [`Eisenstein`] over any integer
//! type implementing [`IntScalar`] and the numeric character sums over any
//! [`RealScalar`]. The aliases below pin the concrete types used by the exact
//! pipeline and the CLI.

pub mod constants;
pub mod counting;
pub mod eisenstein;
pub mod error;
pub mod field;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod verify;

pub use constants::{
    cd_search, cubic_data, theta_exact, theta_paper, CubicData, Sign, ThetaSource,
};
pub use counting::{CountingModel, SeriesTarget, SeriesWindow, USeeds};
pub use eisenstein::{jacobi_sum_cubic, Eisenstein, RPair};
pub use error::{Error, ErrorKind, Result};
pub use field::{CubicClass, FieldDescriptor, FieldElement};
pub use scalar::{IntScalar, RealScalar};

/// Exact Eisenstein integer with arbitrary-precision coefficients.
pub type EisensteinInt = Eisenstein<num_bigint::BigInt>;

/// Eisenstein integer for small, overflow-free workloads.
pub type EisensteinI64 = Eisenstein<i64>;

/// Double-precision complex value used by the numeric oracle.
pub type ComplexVal = num_complex::Complex<f64>;
