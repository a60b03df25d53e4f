//! Harmonic-oscillator eigenstates: Hermite polynomials, normalized
//! wavefunctions ψ_n and probability densities |ψ_n|².

use serde::{Deserialize, Serialize};

use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::exec;
use crate::pendulum::{ensure_positive, PendulumSpec};

/// Guard for the raw Hermite recurrence; H_n overflows f64 well before the
/// normalized wavefunction path does.
pub const HERMITE_MAX_N: u32 = 200;

/// One eigenstate ψ_n of a 1-D harmonic oscillator of mass `mass` and angular
/// frequency `omega`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorState {
    /// Oscillating mass M (kg).
    #[serde(rename = "mass_kg")]
    pub mass: f64,
    /// Angular frequency ω (rad/s).
    #[serde(rename = "omega_rad_s")]
    pub omega: f64,
    /// Eigenstate index n ≥ 0.
    #[serde(rename = "level_n")]
    pub level: u32,
}

impl OscillatorState {
    pub fn new(mass: f64, omega: f64, level: u32) -> Result<Self> {
        let state = Self { mass, omega, level };
        state.validate()?;
        Ok(state)
    }

    /// The effective centre-of-mass oscillator of a rigid pendulum in its
    /// nth eigenstate.
    pub fn from_pendulum(spec: &PendulumSpec, level: u32) -> Result<Self> {
        Self::new(spec.mass, spec.angular_frequency()?, level)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("oscillator mass M", self.mass)?;
        ensure_positive("angular frequency omega", self.omega)?;
        Ok(())
    }

    /// Eigenenergy E_n = (n + ½)ħω (J).
    pub fn energy(&self) -> f64 {
        (self.level as f64 + 0.5) * HBAR * self.omega
    }

    /// Characteristic length a = √(ħ/(Mω)) (m); ξ = x/a.
    pub fn length_scale(&self) -> f64 {
        (HBAR / (self.mass * self.omega)).sqrt()
    }

    /// Classical turning point x_max = a·√(2n+1) (m).
    pub fn turning_point(&self) -> f64 {
        self.length_scale() * (2.0 * self.level as f64 + 1.0).sqrt()
    }

    /// Wavefunction ψ_n(x) (m^-1/2), real by convention.
    ///
    /// Evaluated with the normalized recurrence (the 1/√(2ⁿn!) factor and the
    /// Gaussian are folded into the iterates), which stays bounded inside the
    /// classically allowed region for any n instead of overflowing like the
    /// raw H_n route.
    pub fn psi(&self, x: f64) -> f64 {
        let a = self.length_scale();
        let xi = x / a;
        hermite_function(self.level, xi) / a.sqrt()
    }

    /// Probability density |ψ_n(x)|² (1/m).
    pub fn density(&self, x: f64) -> f64 {
        let p = self.psi(x);
        p * p
    }
}

/// Physicists' Hermite polynomial H_n(ξ) by the three-term recurrence
/// H_{n+1} = 2ξH_n − 2nH_{n−1}.
///
/// Guarded at n ≤ [`HERMITE_MAX_N`]; use [`OscillatorState::psi`] for
/// wavefunction values, which stay finite far beyond that.
pub fn hermite(n: u32, xi: f64) -> Result<f64> {
    if n > HERMITE_MAX_N {
        return Err(Error::invalid(format!(
            "hermite degree {n} exceeds guard limit {HERMITE_MAX_N}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * xi;
    for k in 1..n {
        let next = 2.0 * xi * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Dimensionless Hermite function h_n(ξ)·π^{-1/4}·e^{-ξ²/2} with
/// h_n = H_n/√(2ⁿn!), so ψ_n(x) = hermite_function(n, x/a)/√a.
fn hermite_function(n: u32, xi: f64) -> f64 {
    let w0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * xi * xi).exp();
    if n == 0 {
        return w0;
    }
    let mut prev = w0;
    let mut cur = std::f64::consts::SQRT_2 * xi * w0;
    for k in 1..n {
        let kf = k as f64;
        let next = xi * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// One row of a tabulated wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionSample {
    pub x_m: f64,
    pub psi: f64,
    pub density_per_m: f64,
}

/// Tabulates ψ_n and |ψ_n|² on `grid_points` evenly spaced points spanning
/// |x| ≤ `span`·x_max.
pub fn wavefunction_table(
    state: &OscillatorState,
    grid_points: usize,
    span: f64,
) -> Result<Vec<WavefunctionSample>> {
    state.validate()?;
    if grid_points < 2 {
        return Err(Error::invalid("grid must have at least 2 points"));
    }
    ensure_positive("span", span)?;
    let half = span * state.turning_point();
    let step = 2.0 * half / (grid_points - 1) as f64;
    let state = *state;
    Ok(exec::map_indexed(grid_points, move |i| {
        let x = -half + i as f64 * step;
        let psi = state.psi(x);
        WavefunctionSample { x_m: x, psi, density_per_m: psi * psi }
    }))
}
