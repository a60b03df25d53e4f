//! Classical ideal-gas entropy and its low-temperature breakdown.
//!
//! S(T) = (5/2)Nk_B + 3Nk_B·ln(d̄/λ_T) turns negative at low temperature,
//! which signals that the classical description has left its domain. Two
//! markers are computed and kept distinct: the temperature T* where the
//! thermal wavelength reaches the mean free path (S = (5/2)Nk_B there, not
//! zero), and the exact zero-entropy temperature T*·e^(−5/3).

use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, PLANCK};
use crate::error::{Error, Result};
use crate::pendulum::{ensure_positive, ThermalSystem};

/// Entropy S of the system (J/K).
pub fn entropy(sys: &ThermalSystem) -> Result<f64> {
    sys.validate()?;
    let n = sys.count_n as f64;
    let lam = sys.thermal_wavelength()?;
    Ok(n * BOLTZMANN * (2.5 + 3.0 * (sys.mean_free_path / lam).ln()))
}

/// Entropy per particle in units of k_B: S/(N·k_B), dimensionless.
pub fn entropy_per_particle_kb(sys: &ThermalSystem) -> Result<f64> {
    sys.validate()?;
    let lam = sys.thermal_wavelength()?;
    Ok(2.5 + 3.0 * (sys.mean_free_path / lam).ln())
}

/// Temperature T* = h²/(2π·m·k_B·d̄²) at which λ_T = d̄ (K).
pub fn critical_temperature(particle_mass: f64, mean_free_path: f64) -> Result<f64> {
    ensure_positive("particle mass m", particle_mass)?;
    ensure_positive("mean free path d-bar", mean_free_path)?;
    Ok(PLANCK * PLANCK
        / (2.0 * std::f64::consts::PI
            * particle_mass
            * BOLTZMANN
            * mean_free_path
            * mean_free_path))
}

/// Exact root of S(T) = 0: T*·e^(−5/3) (K).
pub fn zero_entropy_temperature(particle_mass: f64, mean_free_path: f64) -> Result<f64> {
    Ok(critical_temperature(particle_mass, mean_free_path)? * (-5.0 / 3.0f64).exp())
}

/// Tabulated entropy curve with its two marker temperatures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyProfile {
    /// Sample temperatures, strictly increasing (K).
    pub temperatures: Vec<f64>,
    /// S at each temperature (J/K).
    pub entropies: Vec<f64>,
    /// S/(N·k_B) at each temperature.
    pub entropies_per_particle_kb: Vec<f64>,
    /// λ_T = d̄ marker (K).
    pub t_star: f64,
    /// Exact S = 0 root (K).
    pub t_zero: f64,
}

/// Evaluates the entropy curve of `count_n` particles of mass
/// `particle_mass` and mean free path `mean_free_path` on a uniform
/// temperature grid.
pub fn entropy_profile(
    particle_mass: f64,
    count_n: u64,
    mean_free_path: f64,
    t_min: f64,
    t_max: f64,
    points: usize,
) -> Result<EntropyProfile> {
    ensure_positive("t_min", t_min)?;
    if t_max.is_nan() || t_max <= t_min {
        return Err(Error::invalid(format!(
            "temperature range must satisfy t_min < t_max, got [{t_min:e}, {t_max:e}]"
        )));
    }
    if points < 2 {
        return Err(Error::invalid("profile needs at least 2 points"));
    }
    let step = (t_max - t_min) / (points - 1) as f64;
    let mut temperatures = Vec::with_capacity(points);
    let mut entropies = Vec::with_capacity(points);
    let mut per_particle = Vec::with_capacity(points);
    for i in 0..points {
        let t = if i == points - 1 { t_max } else { t_min + i as f64 * step };
        let sys = ThermalSystem::new(particle_mass, count_n, mean_free_path, t)?;
        temperatures.push(t);
        entropies.push(entropy(&sys)?);
        per_particle.push(entropy_per_particle_kb(&sys)?);
    }
    Ok(EntropyProfile {
        temperatures,
        entropies,
        entropies_per_particle_kb: per_particle,
        t_star: critical_temperature(particle_mass, mean_free_path)?,
        t_zero: zero_entropy_temperature(particle_mass, mean_free_path)?,
    })
}
