//! Scalar q-arithmetic and basic hypergeometric series with controlled
//! truncation. IEEE doubles throughout; [`phi_series_hp`] provides a
//! double-double path for parameter ranges where alternating q-series lose
//! digits to cancellation.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::math;
use alloc::format;
use alloc::vec::Vec;

/// Below this distance from 1, q-formulas switch to their q = 1 branches.
pub const Q_ONE_THRESHOLD: f64 = 1e-12;

/// Hard cap on infinite-product factors.
const MAX_PRODUCT_FACTORS: usize = 1_000_000;

/// Default term cap for tolerance-mode series.
pub const MAX_SERIES_TERMS: usize = 100_000;

/// Consecutive small terms required before a tolerance-mode sum stops.
const STOP_STREAK: usize = 3;

/// Symmetric q-number `[a]_q = (q^a - q^{-a}) / (q - q^{-1})`, with the
/// q = 1 branch returning `a`.
pub fn q_bracket(a: f64, q: f64) -> f64 {
    if (q - 1.0).abs() < Q_ONE_THRESHOLD {
        return a;
    }
    (math::powf(q, a) - math::powf(q, -a)) / (q - 1.0 / q)
}

/// Finite q-shifted factorial `(a; q)_n = (1-a)(1-aq)...(1-aq^{n-1})`.
pub fn q_poch(a: f64, q: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut aq = a;
    for _ in 0..n {
        acc *= 1.0 - aq;
        aq *= q;
    }
    acc
}

/// Infinite q-shifted factorial `(a; q)_inf` for `0 < q < 1`.
///
/// The product is truncated after factor `m` once `|a| q^m < tol * (1 - q)`,
/// which bounds the relative tail error by `2 |a| q^m / (1 - q)`.
pub fn q_poch_inf(a: f64, q: f64, tol: f64) -> Result<f64> {
    if !(0.0 < q && q < 1.0) {
        return Err(Error::Domain(format!(
            "infinite product undefined for q >= 1 (q = {q})"
        )));
    }
    let cutoff = tol * (1.0 - q);
    let mut acc = 1.0;
    let mut aq = a;
    for _ in 0..MAX_PRODUCT_FACTORS {
        if aq.abs() < cutoff {
            return Ok(acc);
        }
        acc *= 1.0 - aq;
        aq *= q;
    }
    Err(Error::NonConvergent {
        terms: MAX_PRODUCT_FACTORS,
    })
}

/// `(a; q)_inf` at the default 1e-16 tail tolerance.
pub fn q_poch_inf_def(a: f64, q: f64) -> Result<f64> {
    q_poch_inf(a, q, 1e-16)
}

/// Ratio of infinite q-shifted factorials `(a; q)_inf / (b; q)_inf`,
/// accumulated factor-by-factor so the quotient stays representable even
/// when both products underflow (q close to 1).
pub fn q_poch_inf_ratio(a: f64, b: f64, q: f64, tol: f64) -> Result<f64> {
    if !(0.0 < q && q < 1.0) {
        return Err(Error::Domain(format!(
            "infinite product undefined for q >= 1 (q = {q})"
        )));
    }
    let cutoff = tol * (1.0 - q);
    let mut acc = 1.0;
    let mut aq = a;
    let mut bq = b;
    for j in 0..MAX_PRODUCT_FACTORS {
        if aq.abs() < cutoff && bq.abs() < cutoff {
            return Ok(acc);
        }
        let den = 1.0 - bq;
        if den == 0.0 {
            return Err(Error::VanishedDenominator {
                parameter: b,
                index: j,
            });
        }
        acc *= (1.0 - aq) / den;
        aq *= q;
        bq *= q;
    }
    Err(Error::NonConvergent {
        terms: MAX_PRODUCT_FACTORS,
    })
}

/// `(a; q)_inf / (b; q)_inf` at the default tail tolerance.
pub fn q_poch_inf_ratio_def(a: f64, b: f64, q: f64) -> Result<f64> {
    q_poch_inf_ratio(a, b, q, 1e-16)
}

/// How a series run is ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Termination {
    /// Sum exactly `n + 1` terms (a numerator parameter `q^{-N}` vanishes
    /// beyond that point).
    AtIndex(u32),
    /// Sum until the term is below `tol` relative to the partial sum for
    /// three consecutive terms.
    Tolerance(f64),
}

/// A basic hypergeometric series `sum_n prod_i (a_i; Q)_n / prod_j (b_j; Q)_n
/// * z^n / (Q; Q)_n` in base `Q`.
///
/// A literal `0.0` among the parameters contributes the constant factor 1,
/// matching `(0; Q)_n = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub numerator_params: Vec<f64>,
    pub denominator_params: Vec<f64>,
    pub base: f64,
    pub argument: f64,
    pub termination: Termination,
}

impl SeriesSpec {
    pub fn terminating(
        numerator_params: Vec<f64>,
        denominator_params: Vec<f64>,
        base: f64,
        argument: f64,
        n: u32,
    ) -> Self {
        Self {
            numerator_params,
            denominator_params,
            base,
            argument,
            termination: Termination::AtIndex(n),
        }
    }
}

/// Evaluate a basic hypergeometric series per its [`SeriesSpec`].
///
/// Terminating mode sums exactly to the terminating index; tolerance mode
/// applies the three-consecutive-small-terms rule with a term cap.
pub fn phi_series(spec: &SeriesSpec) -> Result<f64> {
    let q = spec.base;
    let z = spec.argument;
    let mut sum = 0.0;
    let mut term = 1.0;
    let mut qn = 1.0; // q^n
    let mut streak = 0usize;
    let max_n = match spec.termination {
        Termination::AtIndex(n) => n as usize,
        Termination::Tolerance(_) => MAX_SERIES_TERMS,
    };
    for n in 0..=max_n {
        sum += term;
        if n == max_n {
            if let Termination::Tolerance(_) = spec.termination {
                return Err(Error::NonConvergent { terms: max_n });
            }
            break;
        }
        // Update term: multiply by the n-th factors.
        let mut ratio = z / (1.0 - q * qn);
        for &a in &spec.numerator_params {
            ratio *= 1.0 - a * qn;
        }
        for &b in &spec.denominator_params {
            let factor = 1.0 - b * qn;
            if factor == 0.0 {
                return Err(Error::VanishedDenominator {
                    parameter: b,
                    index: n,
                });
            }
            ratio /= factor;
        }
        term *= ratio;
        qn *= q;
        if let Termination::Tolerance(tol) = spec.termination {
            if term.abs() < tol * sum.abs().max(f64::MIN_POSITIVE) {
                streak += 1;
                if streak >= STOP_STREAK {
                    return Ok(sum + term);
                }
            } else {
                streak = 0;
            }
        }
    }
    Ok(sum)
}

/// Double-double basic hypergeometric series with dd-native parameters.
///
/// The high-precision path is only as good as its inputs: callers must build
/// the parameters (powers of q) in double-double themselves; promoting
/// f64-rounded parameters would reintroduce the error this path removes.
pub fn phi_series_dd(
    numerator_params: &[Dd],
    denominator_params: &[Dd],
    base: Dd,
    argument: Dd,
    termination: Termination,
) -> Result<Dd> {
    let mut sum = Dd::ZERO;
    let mut term = Dd::ONE;
    let mut qn = Dd::ONE;
    let mut streak = 0usize;
    let max_n = match termination {
        Termination::AtIndex(n) => n as usize,
        Termination::Tolerance(_) => MAX_SERIES_TERMS,
    };
    for n in 0..=max_n {
        sum = sum.add(term);
        if n == max_n {
            if let Termination::Tolerance(_) = termination {
                return Err(Error::NonConvergent { terms: max_n });
            }
            break;
        }
        let mut ratio = argument.div(Dd::ONE.sub(base.mul(qn)));
        for &a in numerator_params {
            ratio = ratio.mul(Dd::ONE.sub(a.mul(qn)));
        }
        for &b in denominator_params {
            let factor = Dd::ONE.sub(b.mul(qn));
            if factor.hi == 0.0 {
                return Err(Error::VanishedDenominator {
                    parameter: b.to_f64(),
                    index: n,
                });
            }
            ratio = ratio.div(factor);
        }
        term = term.mul(ratio);
        qn = qn.mul(base);
        if let Termination::Tolerance(tol) = termination {
            if term.hi.abs() < tol * sum.hi.abs().max(f64::MIN_POSITIVE) {
                streak += 1;
                if streak >= STOP_STREAK {
                    return Ok(sum.add(term));
                }
            } else {
                streak = 0;
            }
        }
    }
    Ok(sum)
}

/// [`phi_series`] evaluated through the double-double accumulator.
///
/// Parameters are promoted from the spec's f64 fields, so this removes
/// summation cancellation only; use [`phi_series_dd`] with dd-built
/// parameters when the series is also ill-conditioned in them.
pub fn phi_series_hp(spec: &SeriesSpec) -> Result<f64> {
    let nums: Vec<Dd> = spec.numerator_params.iter().map(|&a| Dd::from(a)).collect();
    let dens: Vec<Dd> = spec
        .denominator_params
        .iter()
        .map(|&b| Dd::from(b))
        .collect();
    phi_series_dd(
        &nums,
        &dens,
        Dd::from(spec.base),
        Dd::from(spec.argument),
        spec.termination,
    )
    .map(Dd::to_f64)
}

/// Ordinary hypergeometric series `sum_n prod (a_i)_n / prod (b_j)_n * z^n / n!`
/// using shifted factorials.
///
/// Terminates when some numerator is a non-positive integer; otherwise runs
/// in tolerance mode at 1e-16.
pub fn f_series(numerators: &[f64], denominators: &[f64], z: f64) -> Result<f64> {
    let term_cap = numerators
        .iter()
        .filter_map(|&a| math::near_nonpositive_int(a, 1e-9))
        .min();
    let tol = 1e-16;
    let max_n = match term_cap {
        Some(cap) => cap as usize,
        None => MAX_SERIES_TERMS,
    };
    let mut sum = 0.0;
    let mut term = 1.0;
    let mut streak = 0usize;
    for n in 0..=max_n {
        sum += term;
        if n == max_n {
            if term_cap.is_none() {
                return Err(Error::NonConvergent { terms: max_n });
            }
            break;
        }
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for &a in numerators {
            ratio *= a + nf;
        }
        for &b in denominators {
            let factor = b + nf;
            if factor == 0.0 {
                return Err(Error::VanishedDenominator {
                    parameter: b,
                    index: n,
                });
            }
            ratio /= factor;
        }
        term *= ratio;
        if term_cap.is_none() {
            if term.abs() < tol * sum.abs().max(f64::MIN_POSITIVE) {
                streak += 1;
                if streak >= STOP_STREAK {
                    return Ok(sum + term);
                }
            } else {
                streak = 0;
            }
        }
    }
    Ok(sum)
}

/// q-Gamma function `(q; q)_inf / (q^alpha; q)_inf * (1-q)^{1-alpha}` for
/// `0 < q < 1`. The product quotient is accumulated pairwise, which keeps it
/// finite arbitrarily close to q = 1.
pub fn q_gamma(alpha: f64, q: f64) -> Result<f64> {
    if !(0.0 < q && q < 1.0) {
        return Err(Error::Domain(format!("q-Gamma needs 0 < q < 1 (q = {q})")));
    }
    let ratio = q_poch_inf_ratio_def(q, math::powf(q, alpha), q).map_err(|e| match e {
        Error::VanishedDenominator { .. } => {
            Error::Domain(format!("q-Gamma pole at alpha = {alpha}"))
        }
        other => other,
    })?;
    Ok(ratio * math::powf(1.0 - q, 1.0 - alpha))
}

/// `mu_rho = (q^rho + q^{-rho}) / (q^{-1} - q)`.
pub fn mu_rho(rho: f64, q: f64) -> f64 {
    (math::powf(q, rho) + math::powf(q, -rho)) / (1.0 / q - q)
}
