//! Thin wrappers over `libm` so the rest of the crate can stay `no_std`.

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

#[inline]
pub fn acosh(x: f64) -> f64 {
    libm::acosh(x)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

#[inline]
pub fn fma(a: f64, b: f64, c: f64) -> f64 {
    libm::fma(a, b, c)
}

/// `x^y` for real exponent.
#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// `x^n` by binary exponentiation.
pub fn powi(x: f64, n: i64) -> f64 {
    if n < 0 {
        return 1.0 / powi(x, -n);
    }
    let mut acc = 1.0;
    let mut base = x;
    let mut e = n as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Gamma function.
#[inline]
pub fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Natural log of |Gamma(x)|.
#[inline]
pub fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn rising(a: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..n {
        acc *= a + j as f64;
    }
    acc
}

/// True when `x` is within `tol` of a non-positive integer.
pub fn near_nonpositive_int(x: f64, tol: f64) -> Option<u32> {
    if x > tol {
        return None;
    }
    let r = round(-x);
    if (x + r).abs() <= tol {
        Some(r as u32)
    } else {
        None
    }
}
