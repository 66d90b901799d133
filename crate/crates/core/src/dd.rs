//! Double-double arithmetic: an unevaluated sum of two `f64`s giving roughly
//! 31 significant decimal digits.
//!
//! Used as the high-precision evaluation path for q-series whose terms
//! alternate in sign, where plain doubles lose digits to cancellation
//! (q close to 1, large terminating indices).

use crate::math;

/// A number represented as `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = math::fma(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// ln 2 to double-double precision.
    pub const LN_2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let e = e + self.lo + rhs.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from(q1)));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul(Dd::from(q2)));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from(q3))
    }

    #[inline]
    pub fn scale(self, s: f64) -> Dd {
        self.mul(Dd::from(s))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// Integer power by binary exponentiation.
    pub fn powi(self, n: i64) -> Dd {
        if n < 0 {
            return Dd::ONE.div(self.powi(-n));
        }
        let mut acc = Dd::ONE;
        let mut base = self;
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// exp(x); argument reduction x = k ln2 + r followed by a Taylor series.
    pub fn exp(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ONE;
        }
        if self.hi > 709.0 || self.hi < -709.0 {
            return Dd::from(math::exp(self.hi));
        }
        let k = math::round(self.hi / Dd::LN_2.hi);
        let r = self.sub(Dd::LN_2.scale(k));
        // |r| <= ln2/2; Taylor to machine-dd precision.
        let mut sum = Dd::ONE;
        let mut term = Dd::ONE;
        for j in 1..30 {
            term = term.mul(r).div(Dd::from(j as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        let scale = math::powi(2.0, k as i64);
        Dd {
            hi: sum.hi * scale,
            lo: sum.lo * scale,
        }
    }

    /// ln(x) for x > 0; Newton refinement of the f64 seed.
    pub fn ln(self) -> Dd {
        let seed = Dd::from(math::ln(self.hi));
        // y -> y + x e^{-y} - 1, quadratic convergence; two steps suffice.
        let mut y = seed;
        for _ in 0..2 {
            let e = y.neg().exp();
            y = y.add(self.mul(e)).sub(Dd::ONE);
        }
        y
    }

    /// x^e for real exponent, x > 0.
    pub fn powf(self, e: f64) -> Dd {
        if self.hi <= 0.0 {
            if e == 0.0 {
                return Dd::ONE;
            }
            // Negative bases only arise with integer exponents here.
            let n = math::round(e) as i64;
            return self.powi(n);
        }
        self.ln().scale(e).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_tracks_cancellation() {
        let a = Dd::from(1.0).add(Dd::from(1e-25));
        let b = a.sub(Dd::from(1.0));
        assert!((b.to_f64() - 1e-25).abs() < 1e-40);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::from(3.1415926535897931).mul(Dd::from(2.7182818284590452));
        let b = a.div(Dd::from(2.7182818284590452));
        assert!((b.to_f64() - 3.1415926535897931).abs() < 1e-30);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[0.3, 1.0, 4.7, 120.0, 1e-3] {
            let y = Dd::from(x).ln().exp();
            assert!(
                (y.to_f64() - x).abs() / x < 1e-29,
                "roundtrip failed at {x}: {}",
                y.to_f64()
            );
        }
    }

    #[test]
    fn exp_known_value() {
        let e = Dd::from(1.0).exp();
        let e_hi = 2.718281828459045;
        let e_lo = 1.4456468917292502e-16;
        let diff = e.sub(Dd { hi: e_hi, lo: e_lo }).abs();
        assert!(diff.to_f64() < 5e-30, "diff = {}", diff.to_f64());
    }

    #[test]
    fn powf_matches_squares() {
        let x = Dd::from(0.97).powf(2.0);
        let y = Dd::from(0.97).mul(Dd::from(0.97));
        assert!(x.sub(y).abs().to_f64() < 1e-28);
    }

    #[test]
    fn powi_negative_exponent() {
        let x = Dd::from(0.5).powi(-3);
        assert!((x.to_f64() - 8.0).abs() < 1e-28);
    }
}

#[cfg(test)]
mod fma_probe {
    #[test]
    fn libm_fma_is_fused() {
        let a = 0.1f64;
        let b = 0.7f64;
        let p = a * b;
        let err = libm::fma(a, b, -p);
        let split = |x: f64| {
            let t = 134217729.0 * x;
            let hi = t - (t - x);
            (hi, x - hi)
        };
        let (ah, al) = split(a);
        let (bh, bl) = split(b);
        let err2 = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
        assert_eq!(err, err2, "libm fma err {err:e} vs dekker {err2:e}");
        assert!(err != 0.0, "err should be nonzero for this pair");
    }
}
