//! Independent verification paths for the density series.
//!
//! Two oracles, deliberately built from machinery the series never touches:
//!
//! - the closed-form Laplace transform in `t` of the density,
//!
//!   ```text
//!   w(λ, q) = (1/2λ) e^{-1/(2λ)} (2λ)^{-√(2q)/2} Γ(√(2q)/2)/Γ(√(2q)+1)
//!             · ₁F₁(√(2q)/2; √(2q)+1; 1/(2λ))
//!   ```
//!
//!   evaluated with complex Stirling log-Gamma and the Kummer series, then
//!   inverted numerically on the fixed-Talbot contour;
//!
//! - direct Monte Carlo simulation of `∫₀ᵗ e^{2B(s)} ds` with deterministic
//!   per-path substreams and analytic moment checks.

mod cgamma;
mod mc;
mod talbot;

pub use cgamma::{kummer_1f1, lgamma_complex, w_closed_form};
pub use mc::{mc_cdf_check, mc_functional, CdfPoint, McConfig, McEstimate};
pub use talbot::{talbot_density, talbot_invert, talbot_kernel_invert, TalbotConfig};

#[cfg(test)]
pub(crate) use talbot::talbot_density_unbounded;
