//! Numerical engine for inclusion-type interacting particle systems, their
//! diffusion limits, and the q-hypergeometric duality functions and reversible
//! measures that tie them together.
//!
//! The crate is organised in layers:
//!
//! - [`qkernel`]: scalar q-arithmetic and (basic) hypergeometric series with
//!   controlled truncation, plus a double-double high-precision path.
//! - [`duality`]: height functions, one-site polynomial families
//!   (Al-Salam–Chihara up to Askey-Wilson and their q → 1 relatives), nested
//!   multivariate duality functions, reversible-measure weights and the
//!   non-local cosh transformation between energy processes.
//! - [`process`]: jump rates and generator application for the discrete
//!   processes, diffusion coefficients and generator application for the
//!   continuous ones.
//! - [`algebra`]: truncated matrix realisations of the underlying
//!   quantum-algebra representation and the identities it satisfies.
//! - [`verify`]: the identity-checking harness (duality residuals, detailed
//!   balance, orthogonality sums, symmetry and limit checks, grid sweeps).
//! - [`simulate`]: Gillespie and Euler-Maruyama trajectories, exact sampling
//!   from reversible measures, Monte-Carlo duality checks.
//!
//! Everything is pure and reentrant; the crate is `no_std` (with `alloc`) and
//! does no IO. A companion crate provides the command-line driver and file
//! formats.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod algebra;
pub mod dd;
pub mod duality;
pub mod error;
pub mod math;
pub mod process;
pub mod qkernel;
pub mod simulate;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};

/// Particle occupation vector on a finite lattice.
///
/// Components are non-negative integers; membership in the restricted state
/// spaces used by the dynamic processes is decided by
/// [`process::state_space_contains`], not by this type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscreteConfig(pub alloc::vec::Vec<u32>);

/// Energy vector on a finite lattice; components are non-negative reals.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuousConfig(pub alloc::vec::Vec<f64>);

impl DiscreteConfig {
    pub fn new(eta: alloc::vec::Vec<u32>) -> Self {
        Self(eta)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total particle number.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&n| n as u64).sum()
    }

    /// State with the particle at `from` moved to `to`, or `None` when
    /// `from` is empty.
    pub fn moved(&self, from: usize, to: usize) -> Option<Self> {
        if self.0[from] == 0 {
            return None;
        }
        let mut next = self.clone();
        next.0[from] -= 1;
        next.0[to] += 1;
        Some(next)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Self(v)
    }
}

impl ContinuousConfig {
    pub fn new(x: alloc::vec::Vec<f64>) -> Self {
        Self(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total energy.
    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Self(v)
    }
}

/// Boundary value(s) attached to a model: the dynamic parameter lives on the
/// left (`lambda`), on the right (`rho`), on both sides, or is absent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    None,
    Left(f64),
    Right(f64),
    Both { lambda: f64, rho: f64 },
}

impl Boundary {
    pub fn lambda(&self) -> Option<f64> {
        match *self {
            Boundary::Left(l) | Boundary::Both { lambda: l, .. } => Some(l),
            _ => None,
        }
    }

    pub fn rho(&self) -> Option<f64> {
        match *self {
            Boundary::Right(r) | Boundary::Both { rho: r, .. } => Some(r),
            _ => None,
        }
    }
}

/// Model parameters shared by every process and duality function: the
/// intensity parameter `q`, the per-site parameters `k`, an optional boundary
/// value, the free parameter `v` of the two-parameter duality families and
/// the diffusion asymmetry `sigma`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub q: f64,
    pub k: alloc::vec::Vec<f64>,
    pub boundary: Boundary,
    pub v: Option<f64>,
    pub sigma: Option<f64>,
}

impl ModelParams {
    pub fn new(q: f64, k: alloc::vec::Vec<f64>) -> Self {
        Self {
            q,
            k,
            boundary: Boundary::None,
            v: None,
            sigma: None,
        }
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn with_v(mut self, v: f64) -> Self {
        self.v = Some(v);
        self
    }

    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = Some(sigma);
        self
    }

    pub fn sites(&self) -> usize {
        self.k.len()
    }

    /// Sum of the per-site parameters.
    pub fn k_total(&self) -> f64 {
        self.k.iter().sum()
    }

    /// Parameters for the site-reversed lattice.
    pub fn reversed(&self) -> Self {
        let mut k = self.k.clone();
        k.reverse();
        let boundary = match self.boundary {
            Boundary::Left(l) => Boundary::Right(l),
            Boundary::Right(r) => Boundary::Left(r),
            Boundary::Both { lambda, rho } => Boundary::Both {
                lambda: rho,
                rho: lambda,
            },
            Boundary::None => Boundary::None,
        };
        Self {
            q: self.q,
            k,
            boundary,
            v: self.v,
            sigma: self.sigma,
        }
    }

    pub fn lambda(&self) -> Result<f64> {
        self.boundary
            .lambda()
            .ok_or(Error::MissingParameter("lambda"))
    }

    pub fn rho(&self) -> Result<f64> {
        self.boundary.rho().ok_or(Error::MissingParameter("rho"))
    }

    pub fn v(&self) -> Result<f64> {
        self.v.ok_or(Error::MissingParameter("v"))
    }

    pub fn sigma(&self) -> Result<f64> {
        self.sigma.ok_or(Error::MissingParameter("sigma"))
    }
}
