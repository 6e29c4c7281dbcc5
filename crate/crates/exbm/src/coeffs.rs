//! Partial-fraction rows of the rational Gamma-ratio factor.
//!
//! Each outer series term carries the rational function
//!
//! ```text
//! r_n(w) = √π 2^{-(n+1)} (w + n/2 + 1/2)^{-1} Π_{j=1}^n (w+j-1/2)/(w+j/2) · (2w+1)/w
//! ```
//!
//! whose only singularities are simple poles at `w = 0, -1, ..., -kmax` with
//! `kmax = ⌊(n-1)/2⌋ + 1`. The residues split `r_n` into elementary
//! fractions `Σ_k a_k^(n)/(w+k)`; the `k = 0` residue pairs with the Hermite
//! kernel and the `k >= 1` residues with the `Φ` kernels.
//!
//! The residues are those of `φ_n(w) Γ(w+1)` where
//! `φ_n(w) = 2^{2w} Γ(w+n+1/2)/Γ(2w+n+2) · (2w+1)/w`, giving
//!
//! ```text
//! a_0^(n) = Γ(n+1/2) / Γ(n+2)
//! a_k^(n) = 2^{-2k} (-1)^{k-1}/(k-1)! · (2k-1)/k · Γ(n-k+1/2) / Γ(n-2k+2)
//! ```
//!
//! The `(2k-1)/k` factor is the value of `(2w+1)/w` at the pole `w = -k`; it
//! is 1 at `k = 1` and must not be dropped for `k >= 2` (doing so breaks the
//! partial-fraction identity, which the tests check against `r_n` directly).

use crate::special::{lgamma_half_unchecked, LgammaHalfTable, SQRT_PI};
use crate::{Error, Result};

/// Number of elementary fractions beyond `k = 0` for outer index `n`.
#[inline]
pub fn kmax(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (n - 1) / 2 + 1
    }
}

/// One row of partial-fraction coefficients `a_0^(n) .. a_kmax^(n)`.
#[derive(Debug, Clone)]
pub struct AkRow {
    n: usize,
    coeffs: Vec<f64>,
}

impl AkRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    /// `Σ_k |a_k^(n)|`, the l1 weight the truncation controller applies to
    /// the shared inner-tail bound.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|a| a.abs()).sum()
    }
}

fn ak_row_with(n: usize, lg: &LgammaHalfTable) -> AkRow {
    let km = kmax(n);
    let mut coeffs = Vec::with_capacity(km + 1);
    // a_0 = Γ(n+1/2)/Γ(n+2); twice-args 2n+1 and 2n+4
    coeffs.push((lg.get(2 * n + 1) - lg.get(2 * n + 4)).exp());
    for k in 1..=km {
        // Gamma arguments stay off the poles: n-k+1/2 >= 1/2, n-2k+2 >= 1.
        debug_assert!(2 * (n - k) + 1 >= 1);
        debug_assert!(n + 2 >= 2 * k && 2 * (n + 2 - 2 * k) >= 2);
        let ln_ratio = lg.get(2 * (n - k) + 1) - lg.get(2 * (n + 2 - 2 * k));
        let ln_front = -((2 * k) as f64) * std::f64::consts::LN_2
            - lgamma_half_unchecked(2 * k as u64)
            + ((2 * k - 1) as f64 / k as f64).ln();
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        coeffs.push(sign * (ln_front + ln_ratio).exp());
    }
    AkRow { n, coeffs }
}

/// Partial-fraction row for outer index `n >= 1`.
///
/// All Gamma ratios are evaluated in log space and exponentiated with the
/// sign applied separately, so rows stay finite far past the point where
/// `Γ(n+2)` itself would overflow.
pub fn ak_row(n: usize) -> Result<AkRow> {
    if n == 0 {
        return Err(Error::Domain(
            "ak_row requires n >= 1 (the n = 0 term has its own single-residue row)".into(),
        ));
    }
    let lg = LgammaHalfTable::new(2 * n + 4);
    Ok(ak_row_with(n, &lg))
}

/// Frozen rows `0..=n_max`. Row 0 is the internal single-coefficient row
/// `{√π}` used by the series assembly; `ak_row` itself starts at `n = 1`.
pub struct AkRows {
    rows: Vec<AkRow>,
}

impl AkRows {
    pub fn up_to(n_max: usize) -> Self {
        let lg = LgammaHalfTable::new(2 * n_max + 4);
        let mut rows = Vec::with_capacity(n_max + 1);
        rows.push(AkRow {
            n: 0,
            coeffs: vec![SQRT_PI],
        });
        for n in 1..=n_max {
            rows.push(ak_row_with(n, &lg));
        }
        AkRows { rows }
    }

    pub fn row(&self, n: usize) -> &AkRow {
        &self.rows[n]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }
}

/// The rational factor `r_n(w)`, evaluated as written.
///
/// `w` must avoid the simple poles `0, -1, ..., -kmax`. The in-between
/// half-integer points cancel algebraically but evaluate as 0/0 in this
/// product form, so keep test points off the half-integer lattice.
pub fn r_n_eval(n: usize, w: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("r_n_eval requires n >= 1".into()));
    }
    let km = kmax(n) as f64;
    if w == w.floor() && w <= 0.0 && w >= -km {
        return Err(Error::Domain(format!("r_{n} has a simple pole at w = {w}")));
    }
    let nf = n as f64;
    let mut prod = 1.0_f64;
    for j in 1..=n {
        let jf = j as f64;
        prod *= (w + jf - 0.5) / (w + jf / 2.0);
    }
    Ok(SQRT_PI * 2.0_f64.powi(-(n as i32 + 1)) / (w + nf / 2.0 + 0.5) * prod * (2.0 * w + 1.0) / w)
}
