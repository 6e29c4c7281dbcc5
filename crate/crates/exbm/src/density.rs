//! Series assembly for the density `f(λ, t)` of `∫₀ᵗ e^{2B(s)} ds`.
//!
//! The density is
//!
//! ```text
//! f(λ, t) = (2λ)^{-3/2} e^{-1/(2λ)} e^{t/2} Σ_{n>=0} f_n(λ,t) / (n! (2λ)^n)
//! ```
//!
//! where, with `a = 8λ e^{-2t}`, `α = ln a` and `τ = 2t`,
//!
//! ```text
//! f_n = Σ_{m>=0} d_m [ a_0^(n) h_m(α, τ) + Σ_{k=1}^{kmax} a_k^(n) Φ_m(α, k, τ) ]
//! ```
//!
//! The `n = 0` term is the same shape with the single coefficient
//! `a_0^(0) = √π` and no `Φ` part. Because the kernels do not depend on `n`,
//! the inner sums `Σ_m d_m h_m` and `Σ_m d_m Φ_m(·, k, ·)` are shared across
//! all outer terms; each `f_n` is a short linear combination of their
//! prefixes.
//!
//! Truncation control pairs two rigorous ingredients:
//!
//! - every kernel obeys the Hankel-contour bound
//!   `|h_m|, |Φ_m| <= Γ((m+1)/2) / (π τ^{(m+1)/2})` (collapse the inversion
//!   contour onto the negative real axis; the oscillatory factor has
//!   modulus one there), and
//! - `|d_m| <= b_m`, the calibrated majorant from [`special::dm_decay_bound`].
//!
//! The inner tails are summed from those products; the outer tail uses the
//! factorial envelope `C/((2λ)^N N!)` with `C` the largest computed `|f_n|`.
//! Everything is deterministic: fixed iteration order, compensated
//! summation, no data-dependent parallelism.

use crate::coeffs::{kmax, AkRows};
use crate::kernels::{h_sequence, phi_sequence_with, PhiArgs, PHI_RECURSION_CAP};
use crate::special::{dm_decay_bound_ln, shared_dm_table, LgammaHalfTable};
use crate::{Error, Result};

/// Smallest λ the series supports in double precision. Below this the outer
/// sum needs so many terms before factorial decay wins that intermediate
/// terms drown the result; that regime belongs to small-argument asymptotic
/// expansions, not to this series.
pub const MIN_LAMBDA: f64 = 0.05;

/// A point (λ, t) with λ, t > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    lambda: f64,
    t: f64,
}

impl EvalPoint {
    pub fn new(lambda: f64, t: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() || !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!(
                "density point needs lambda > 0 and t > 0, got lambda={lambda}, t={t}"
            )));
        }
        let pt = EvalPoint { lambda, t };
        if !pt.alpha().is_finite() {
            return Err(Error::Domain(format!(
                "ln(8 lambda) - 2t not finite at lambda={lambda}, t={t}"
            )));
        }
        Ok(pt)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `a = 8 λ e^{-2t}`.
    pub fn a(&self) -> f64 {
        8.0 * self.lambda * (-2.0 * self.t).exp()
    }

    /// `α = ln a`, evaluated as `ln(8λ) - 2t` to keep the subtraction exact
    /// for large `t`.
    pub fn alpha(&self) -> f64 {
        (8.0 * self.lambda).ln() - 2.0 * self.t
    }

    /// Kernel time parameter `τ = 2t`.
    pub fn tau(&self) -> f64 {
        2.0 * self.t
    }
}

/// Target absolute tolerance plus hard caps on the truncation depths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceSpec {
    abs_tol: f64,
    max_outer_n: usize,
    max_inner_m: usize,
}

impl ToleranceSpec {
    pub fn new(abs_tol: f64) -> Result<Self> {
        Self::with_caps(abs_tol, 160, PHI_RECURSION_CAP)
    }

    pub fn with_caps(abs_tol: f64, max_outer_n: usize, max_inner_m: usize) -> Result<Self> {
        if !(abs_tol >= 1e-14) || !abs_tol.is_finite() {
            return Err(Error::Domain(format!(
                "abs_tol must be >= 1e-14, got {abs_tol}"
            )));
        }
        if max_outer_n == 0 || max_inner_m == 0 {
            return Err(Error::Domain("truncation caps must be >= 1".into()));
        }
        if max_inner_m > PHI_RECURSION_CAP {
            return Err(Error::Domain(format!(
                "max_inner_m exceeds the kernel recursion cap {PHI_RECURSION_CAP}"
            )));
        }
        Ok(ToleranceSpec {
            abs_tol,
            max_outer_n,
            max_inner_m,
        })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_outer_n(&self) -> usize {
        self.max_outer_n
    }

    pub fn max_inner_m(&self) -> usize {
        self.max_inner_m
    }
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec::new(1e-9).unwrap()
    }
}

/// A computed density value with its achieved error bound and the truncation
/// depths that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityResult {
    pub value: f64,
    pub err_estimate: f64,
    pub n_used: usize,
    pub m_used: usize,
    pub prefactor: f64,
}

#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    #[inline]
    fn add(&mut self, v: f64) {
        let y = v - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    fn value(&self) -> f64 {
        self.sum
    }
}

/// Suffix sums of the inner-tail majorant `b_m Γ((m+1)/2) / (π τ^{(m+1)/2})`
/// at a fixed `τ`, so `tail(M) = Σ_{m>M} (majorant term)` is an O(1) lookup.
struct InnerTailBound {
    tails: Vec<f64>,
}

/// Extra majorant terms summed past the cap before closing the tail
/// geometrically.
const TAIL_EXTRA: usize = 64;

impl InnerTailBound {
    fn new(tau: f64, max_inner_m: usize) -> Self {
        let m_hi = max_inner_m + TAIL_EXTRA;
        let lg = LgammaHalfTable::new(m_hi + 2);
        let ln_pi = std::f64::consts::PI.ln();
        let ln_tau = tau.ln();
        let term = |m: usize| -> f64 {
            let ln = dm_decay_bound_ln(m) + lg.get(m + 1) - ln_pi - 0.5 * (m as f64 + 1.0) * ln_tau;
            ln.exp()
        };
        let mut terms: Vec<f64> = (0..=m_hi).map(term).collect();
        // Close the tail beyond m_hi with a geometric bound when the term
        // ratio has settled below 1; otherwise the tail is unbounded at this
        // τ and stays infinite. Terms that underflow to zero close for free.
        let ratio = terms[m_hi] / terms[m_hi - 1];
        let closure = if terms[m_hi] == 0.0 {
            0.0
        } else if ratio.is_finite() && ratio < 0.95 {
            terms[m_hi] * ratio / (1.0 - ratio)
        } else {
            f64::INFINITY
        };
        if terms.iter().any(|t| !t.is_finite()) {
            // An overflowing majorant term poisons every tail below it.
            for t in terms.iter_mut() {
                *t = f64::INFINITY;
            }
        }
        let mut tails = vec![0.0; m_hi + 1];
        let mut acc = closure;
        tails[m_hi] = acc;
        for m in (0..m_hi).rev() {
            acc += terms[m + 1];
            tails[m] = acc;
        }
        InnerTailBound { tails }
    }

    /// Bound on `|Σ_{m>M} d_m (kernel)_m|` for any single kernel family.
    fn tail(&self, m_trunc: usize) -> f64 {
        self.tails[m_trunc.min(self.tails.len() - 1)]
    }

    /// Smallest truncation index with `tail(M) <= budget`, if one exists
    /// within the cap.
    fn smallest_m(&self, budget: f64, cap: usize) -> Option<usize> {
        let limit = cap.min(self.tails.len() - 1);
        let idx = self.tails[..=limit].partition_point(|&t| !(t <= budget));
        if idx <= limit {
            Some(idx)
        } else {
            None
        }
    }
}

/// Shared kernel prefix sums for one evaluation point: `dh[m] = Σ_{j<=m}
/// d_j h_j` and `dphi[k-1][m] = Σ_{j<=m} d_j Φ_j(α, k, τ)`.
struct KernelSums {
    dh: Vec<f64>,
    dphi: Vec<Vec<f64>>,
    m_built: usize,
}

impl KernelSums {
    fn build(pt: &EvalPoint, m_max: usize, k_max: usize) -> KernelSums {
        let dm = shared_dm_table();
        let alpha = pt.alpha();
        let tau = pt.tau();
        let h = h_sequence(m_max, alpha, tau);
        let prefix = |vals: &[f64]| -> Vec<f64> {
            let mut acc = Kahan::default();
            vals.iter()
                .enumerate()
                .map(|(m, &v)| {
                    acc.add(dm.coeff(m) * v);
                    acc.value()
                })
                .collect()
        };
        let dh = prefix(&h);
        let mut dphi = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let args = PhiArgs::new(alpha, k as u32, tau).expect("validated point");
            let phi = phi_sequence_with(&h, &args);
            dphi.push(prefix(&phi));
        }
        KernelSums {
            dh,
            dphi,
            m_built: m_max,
        }
    }

    fn ensure(&mut self, pt: &EvalPoint, m_need: usize, k_need: usize) {
        if m_need > self.m_built || k_need > self.dphi.len() {
            // round up in blocks, but never past the shared coefficient table
            let m_new = m_need
                .max(self.m_built)
                .next_multiple_of(32)
                .min(crate::special::DM_TABLE_DEPTH);
            let k_new = k_need.max(self.dphi.len()).max(4);
            *self = KernelSums::build(pt, m_new, k_new);
        }
    }
}

/// The `n = 0` inner sum truncated at `m_trunc`, with its tail bound.
///
/// Returns `(value, tail)` where `value = √π Σ_{m<=M} d_m h_m(α, 2t)` — the
/// `1/√(2t)`-prefactored Hermite series — and `tail` bounds the magnitude of
/// the discarded remainder.
pub fn f0_term(pt: &EvalPoint, m_trunc: usize) -> Result<(f64, f64)> {
    fn_term_impl(0, pt, m_trunc)
}

/// The `n >= 1` inner sum truncated at `m_trunc`, with its tail bound.
pub fn fn_term(n: usize, pt: &EvalPoint, m_trunc: usize) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::Domain("fn_term requires n >= 1; use f0_term".into()));
    }
    fn_term_impl(n, pt, m_trunc)
}

fn fn_term_impl(n: usize, pt: &EvalPoint, m_trunc: usize) -> Result<(f64, f64)> {
    if m_trunc > PHI_RECURSION_CAP {
        return Err(Error::TruncationCap {
            what: format!("inner truncation {m_trunc} exceeds cap {PHI_RECURSION_CAP}"),
            partial: None,
            achieved: None,
        });
    }
    let rows = AkRows::up_to(n);
    let sums = KernelSums::build(pt, m_trunc, kmax(n));
    let tails = InnerTailBound::new(pt.tau(), m_trunc);
    let row = rows.row(n);
    let value = assemble_fn(row.coeffs(), &sums, m_trunc);
    let tail = row.l1_norm() * tails.tail(m_trunc);
    Ok((value, tail))
}

#[inline]
fn assemble_fn(row: &[f64], sums: &KernelSums, m_trunc: usize) -> f64 {
    let mut acc = Kahan::default();
    acc.add(row[0] * sums.dh[m_trunc]);
    for (k, &a) in row.iter().enumerate().skip(1) {
        acc.add(a * sums.dphi[k - 1][m_trunc]);
    }
    acc.value()
}

/// Density `f(λ, t)` with adaptive truncation of both series.
///
/// The outer sum stops once three consecutive weighted terms fall below a
/// tenth of the tolerance (pre-prefactor) and the combined remainder bound —
/// outer factorial envelope plus the propagated inner tails — meets
/// `tol.abs_tol`. Inner truncation depths are chosen per outer index from
/// the majorant suffix table, weighted by each row's l1 norm.
pub fn density(pt: &EvalPoint, tol: &ToleranceSpec) -> Result<DensityResult> {
    if pt.lambda() < MIN_LAMBDA {
        return Err(Error::TruncationCap {
            what: format!(
                "lambda = {} is below the supported minimum {MIN_LAMBDA}; the outer series needs \
                 N >> 1/(2 lambda) terms there and loses all significance in double precision \
                 (small-lambda asymptotics are out of scope)",
                pt.lambda()
            ),
            partial: None,
            achieved: None,
        });
    }

    let two_lambda = 2.0 * pt.lambda();
    let ln_two_lambda = two_lambda.ln();
    let ln_pref = -1.5 * ln_two_lambda - 1.0 / two_lambda + pt.t() / 2.0;
    let prefactor = ln_pref.exp();
    if !prefactor.is_finite() {
        return Err(Error::Domain(format!(
            "prefactor overflows double precision at (lambda={}, t={})",
            pt.lambda(),
            pt.t()
        )));
    }

    let tails = InnerTailBound::new(pt.tau(), tol.max_inner_m);
    let rows = AkRows::up_to(tol.max_outer_n + 1);
    let mut sums = KernelSums::build(pt, 48.min(tol.max_inner_m), 4);

    let mut outer = Kahan::default();
    let mut inner_err = Kahan::default();
    let mut ln_weight = 0.0_f64; // ln of 1/(n! (2λ)^n)
    let mut largest_fn = 0.0_f64;
    let mut m_used = 0usize;
    let mut consecutive_small = 0u32;
    let small_thresh = tol.abs_tol / (10.0 * prefactor);

    let mut n = 0usize;
    loop {
        let weight = ln_weight.exp();
        let row = rows.row(n);
        let l1 = row.l1_norm();
        let budget = tol.abs_tol / (10.0 * (n as f64 + 1.0) * prefactor * weight * l1);
        let m_n = match tails.smallest_m(budget, tol.max_inner_m) {
            Some(m) => m,
            None => {
                return Err(Error::TruncationCap {
                    what: format!(
                        "inner tail bound cannot reach {budget:.3e} within {} terms at \
                         (lambda={}, t={}); smaller t needs more inner terms than double \
                         precision supports at this tolerance",
                        tol.max_inner_m,
                        pt.lambda(),
                        pt.t()
                    ),
                    partial: Some(prefactor * outer.value()),
                    achieved: None,
                });
            }
        };
        sums.ensure(pt, m_n, kmax(n));
        let f_n = assemble_fn(row.coeffs(), &sums, m_n);
        m_used = m_used.max(m_n);
        largest_fn = largest_fn.max(f_n.abs());
        let term = f_n * weight;
        outer.add(term);
        inner_err.add(l1 * tails.tail(m_n) * weight);

        if term.abs() < small_thresh {
            consecutive_small += 1;
        } else {
            consecutive_small = 0;
        }

        // outer tail envelope: C Σ_{j>n} 1/(j!(2λ)^j) <= C w_{n+1}/(1-ρ)
        let ratio = 1.0 / ((n as f64 + 2.0) * two_lambda);
        if consecutive_small >= 3 && ratio < 0.9 {
            let ln_w_next = ln_weight - ((n + 1) as f64).ln() - ln_two_lambda;
            let outer_tail = largest_fn * ln_w_next.exp() / (1.0 - ratio);
            let err = prefactor * (outer_tail + inner_err.value());
            if err <= tol.abs_tol {
                return Ok(DensityResult {
                    value: prefactor * outer.value(),
                    err_estimate: err,
                    n_used: n,
                    m_used,
                    prefactor,
                });
            }
        }

        n += 1;
        if n > tol.max_outer_n {
            let err_now = prefactor * inner_err.value();
            return Err(Error::TruncationCap {
                what: format!(
                    "outer series did not settle within {} terms at (lambda={}, t={})",
                    tol.max_outer_n,
                    pt.lambda(),
                    pt.t()
                ),
                partial: Some(prefactor * outer.value()),
                achieved: Some(err_now),
            });
        }
        ln_weight -= (n as f64).ln() + ln_two_lambda;
    }
}

/// One grid entry of [`tabulate`]: the point and its outcome.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub lambda: f64,
    pub t: f64,
    pub result: Result<DensityResult>,
}

/// Evaluate the density on a strictly increasing λ grid at fixed `t`.
///
/// Per-point failures are collected in the output rather than aborting the
/// grid. `workers` bounds the number of evaluation threads; results are
/// assembled by grid index, so the output is byte-identical for every
/// worker count.
pub fn tabulate(
    lambda_grid: &[f64],
    t: f64,
    tol: &ToleranceSpec,
    workers: usize,
) -> Result<Vec<GridPoint>> {
    if lambda_grid.is_empty() {
        return Err(Error::Domain("tabulate needs a nonempty grid".into()));
    }
    if lambda_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain(
            "tabulate needs a strictly increasing grid".into(),
        ));
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("tabulate needs t > 0, got {t}")));
    }

    let eval_one = |&lambda: &f64| -> GridPoint {
        let result = EvalPoint::new(lambda, t).and_then(|pt| density(&pt, tol));
        GridPoint { lambda, t, result }
    };

    let workers = workers.max(1).min(lambda_grid.len());
    if workers == 1 {
        return Ok(lambda_grid.iter().map(eval_one).collect());
    }

    let mut out: Vec<Option<GridPoint>> = vec![None; lambda_grid.len()];
    let chunk = lambda_grid.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for (slot_chunk, lambda_chunk) in out.chunks_mut(chunk).zip(lambda_grid.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, lambda) in slot_chunk.iter_mut().zip(lambda_chunk) {
                    *slot = Some(eval_one(lambda));
                }
            });
        }
    });
    Ok(out
        .into_iter()
        .map(|p| p.expect("all chunks filled"))
        .collect())
}
