//! Small statistics helpers: regularized incomplete gamma and the chi-square
//! tail probability used by the stationarity checks.

use crate::error::{Error, Result};
use crate::math;
use alloc::format;

/// Regularized lower incomplete gamma P(a, x) by series (x < a + 1) or
/// continued fraction (x >= a + 1).
pub fn gamma_p(a: f64, x: f64) -> Result<f64> {
    if a <= 0.0 || x < 0.0 {
        return Err(Error::Domain(format!("gamma_p needs a > 0, x >= 0 (a={a}, x={x})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        // Series: P(a,x) = x^a e^{-x} / Gamma(a) * sum_n x^n / (a)_{n+1}.
        let mut ap = a;
        let mut sum = 1.0 / a;
        let mut del = sum;
        for _ in 0..500 {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if del.abs() < sum.abs() * 1e-16 {
                let ln_pref = a * math::ln(x) - x - math::lgamma(a);
                return Ok(sum * math::exp(ln_pref));
            }
        }
        Err(Error::NonConvergent { terms: 500 })
    } else {
        Ok(1.0 - gamma_q_cf(a, x)?)
    }
}

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
pub fn gamma_q(a: f64, x: f64) -> Result<f64> {
    if a <= 0.0 || x < 0.0 {
        return Err(Error::Domain(format!("gamma_q needs a > 0, x >= 0 (a={a}, x={x})")));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x < a + 1.0 {
        Ok(1.0 - gamma_p(a, x)?)
    } else {
        gamma_q_cf(a, x)
    }
}

/// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
fn gamma_q_cf(a: f64, x: f64) -> Result<f64> {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            let ln_pref = a * math::ln(x) - x - math::lgamma(a);
            return Ok(math::exp(ln_pref) * h);
        }
    }
    Err(Error::NonConvergent { terms: 500 })
}

/// Upper-tail p-value of a chi-square statistic with `df` degrees of freedom.
pub fn chi_square_p_value(stat: f64, df: f64) -> Result<f64> {
    gamma_q(df / 2.0, stat / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_plus_q_is_one() {
        for &(a, x) in &[(0.5, 0.2), (2.0, 3.0), (7.5, 4.0), (3.0, 12.0)] {
            let p = gamma_p(a, x).unwrap();
            let q = gamma_q(a, x).unwrap();
            assert!((p + q - 1.0).abs() < 1e-12, "a={a} x={x}");
        }
    }

    #[test]
    fn chi_square_df2_closed_form() {
        // df = 2: Q = exp(-x/2).
        for &x in &[0.5, 2.0, 7.0] {
            let p = chi_square_p_value(x, 2.0).unwrap();
            assert!((p - math::exp(-x / 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn gamma_p_integer_a_closed_form() {
        // a = 3: P(3,x) = 1 - e^{-x}(1 + x + x^2/2).
        let x = 2.7;
        let expect = 1.0 - math::exp(-x) * (1.0 + x + x * x / 2.0);
        assert!((gamma_p(3.0, x).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn monotone_in_x() {
        let mut last = 0.0;
        for i in 1..40 {
            let x = i as f64 * 0.5;
            let p = gamma_p(4.0, x).unwrap();
            assert!(p >= last);
            last = p;
        }
    }
}
