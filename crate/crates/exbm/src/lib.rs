//! Density of the integral of exponential Brownian motion.
//!
//! For a standard Brownian motion `B`, the functional
//!
//! ```text
//! A_t = ∫₀ᵗ e^{2 B(s)} ds
//! ```
//!
//! has an absolutely continuous law whose density `f(λ, t)` admits a rapidly
//! convergent double series built from Hermite-kernel and error-function
//! kernel inverse Laplace transforms. This crate evaluates that series with
//! explicit truncation-error control, and ships two independent verification
//! paths: numerical inversion (fixed-Talbot) of the closed-form Laplace
//! transform of the density, and direct Monte Carlo simulation of the
//! functional.
//!
//! Module map:
//!
//! - [`special`]: scalar special functions (log-Gamma, erfc/erfcx, Hermite
//!   polynomials, integer zeta values, reciprocal-Gamma Taylor coefficients).
//! - [`coeffs`]: partial-fraction rows `a_k^(n)` of the rational Gamma-ratio
//!   factor that splits each outer term.
//! - [`kernels`]: the Hermite kernel `h_m` and the erfc kernels `Φ_m`.
//! - [`density`]: series assembly, adaptive truncation, grid tabulation.
//! - [`oracle`]: closed-form transform, fixed-Talbot inversion, Monte Carlo.
//! - [`quad`]: adaptive Simpson quadrature used by consistency checks.
//! - [`reference`]: embedded 200-point reference table for `f(λ, 1)`.

// Negated comparisons like `!(x > 0.0)` are load-bearing: they reject NaN,
// which the unnegated form lets through. Published coefficient sets and
// reference values are kept verbatim, digits beyond f64 included.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod coeffs;
mod dd;
pub mod density;
pub mod kernels;
pub mod oracle;
pub mod quad;
pub mod reference;
pub mod special;

pub use density::{density, tabulate, DensityResult, EvalPoint, ToleranceSpec};
pub use error::{Error, Result};

mod error {
    use std::fmt;

    /// Errors produced by series evaluation and the verification oracles.
    #[derive(Debug, Clone, PartialEq)]
    pub enum Error {
        /// Input outside the mathematical domain of the operation.
        Domain(String),
        /// A truncation cap was reached before the tail bound met the
        /// tolerance share. Carries the partial value and the error bound
        /// actually achieved, when a partial result exists.
        TruncationCap {
            what: String,
            partial: Option<f64>,
            achieved: Option<f64>,
        },
        /// An iterative expansion failed to converge within its term cap.
        Convergence(String),
        /// Input outside an oracle's validated envelope; the oracle abstains
        /// rather than guessing.
        Envelope(String),
    }

    impl fmt::Display for Error {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match self {
                Error::Domain(msg) => write!(f, "domain error: {msg}"),
                Error::TruncationCap {
                    what,
                    partial,
                    achieved,
                } => {
                    write!(f, "truncation cap exceeded: {what}")?;
                    if let Some(v) = partial {
                        write!(f, " (partial value {v:.6e}")?;
                        if let Some(e) = achieved {
                            write!(f, ", achieved bound {e:.3e}")?;
                        }
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                Error::Convergence(msg) => write!(f, "convergence failure: {msg}"),
                Error::Envelope(msg) => write!(f, "outside validated envelope: {msg}"),
            }
        }
    }

    impl std::error::Error for Error {}

    pub type Result<T> = std::result::Result<T, Error>;
}
