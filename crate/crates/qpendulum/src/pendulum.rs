//! Rigid-pendulum kinematics and de Broglie wavelengths.
//!
//! The pendulum is a uniform rod of mass `M` and length `l` pivoted at one
//! end, treated through its centre of mass as a 1-D harmonic oscillator with
//! angular frequency √(3g/2l).

use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, G_DEFAULT, HBAR, PLANCK};
use crate::error::{Error, Result};

/// Geometry and mass of a rigid physical pendulum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PendulumSpec {
    /// Arm length l (m).
    #[serde(rename = "arm_length_m")]
    pub arm_length: f64,
    /// Total mass M (kg).
    #[serde(rename = "mass_kg")]
    pub mass: f64,
    /// Transverse size D (m), e.g. the tube diameter. May be zero for an
    /// idealized point body.
    #[serde(rename = "size_d_m")]
    pub size_d: f64,
    /// Local gravitational acceleration g (m/s²).
    #[serde(rename = "gravity_m_s2")]
    pub gravity: f64,
}

impl PendulumSpec {
    pub fn new(arm_length: f64, mass: f64, size_d: f64, gravity: f64) -> Result<Self> {
        let spec = Self { arm_length, mass, size_d, gravity };
        spec.validate()?;
        Ok(spec)
    }

    /// Builds a spec with [`G_DEFAULT`] gravity.
    pub fn with_default_gravity(arm_length: f64, mass: f64, size_d: f64) -> Result<Self> {
        Self::new(arm_length, mass, size_d, G_DEFAULT)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("arm length l", self.arm_length)?;
        ensure_positive("mass M", self.mass)?;
        ensure_positive("gravity g", self.gravity)?;
        if !self.size_d.is_finite() || self.size_d < 0.0 {
            return Err(Error::invalid(format!(
                "size D must be finite and >= 0, got {:e}",
                self.size_d
            )));
        }
        Ok(())
    }

    /// Small-angle angular frequency ω = √(3g/2l) (rad/s).
    pub fn angular_frequency(&self) -> Result<f64> {
        self.validate()?;
        Ok((3.0 * self.gravity / (2.0 * self.arm_length)).sqrt())
    }

    /// Classical oscillation period 2π/ω (s). Depends only on l and g.
    pub fn classical_period(&self) -> Result<f64> {
        Ok(2.0 * std::f64::consts::PI / self.angular_frequency()?)
    }

    /// Maximum centre-of-mass momentum in the nth eigenstate,
    /// p_max = √((2n+1)·M·ħ·ω) (kg·m/s).
    pub fn max_momentum(&self, level: u32) -> Result<f64> {
        let omega = self.angular_frequency()?;
        Ok(((2.0 * level as f64 + 1.0) * self.mass * HBAR * omega).sqrt())
    }

    /// Minimum de Broglie wavelength λ_min = h/p_max (m) in the nth
    /// eigenstate. Equivalent to 2π·√(ħ/((2n+1)M)·√(2l/3g)).
    pub fn lambda_min(&self, level: u32) -> Result<f64> {
        Ok(PLANCK / self.max_momentum(level)?)
    }

    /// Classical turning point of the centre of mass in the nth eigenstate,
    /// x_max = √((2n+1)·ħ/(M·ω)) (m), where E_n = ½Mω²x_max².
    ///
    /// The free end of the rod swings twice as far (centre of mass sits at
    /// l/2); see [`PendulumSpec::free_end_amplitude`].
    pub fn turning_point(&self, level: u32) -> Result<f64> {
        let omega = self.angular_frequency()?;
        Ok(((2.0 * level as f64 + 1.0) * HBAR / (self.mass * omega)).sqrt())
    }

    /// Displacement amplitude of the rod's free end, 2·x_max (m).
    pub fn free_end_amplitude(&self, level: u32) -> Result<f64> {
        Ok(2.0 * self.turning_point(level)?)
    }
}

/// A gas of `count_n` ideal particles characterized by mass, mean free path
/// and temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalSystem {
    /// Mass of one particle (kg).
    #[serde(rename = "particle_mass_kg")]
    pub particle_mass: f64,
    /// Number of particles.
    pub count_n: u64,
    /// Mean free path d̄ (m).
    #[serde(rename = "mean_free_path_m")]
    pub mean_free_path: f64,
    /// Temperature T (K).
    #[serde(rename = "temperature_k")]
    pub temperature: f64,
}

impl ThermalSystem {
    pub fn new(particle_mass: f64, count_n: u64, mean_free_path: f64, temperature: f64) -> Result<Self> {
        let sys = Self { particle_mass, count_n, mean_free_path, temperature };
        sys.validate()?;
        Ok(sys)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("particle mass m", self.particle_mass)?;
        ensure_positive("mean free path d-bar", self.mean_free_path)?;
        ensure_positive("temperature T", self.temperature)?;
        if self.count_n == 0 {
            return Err(Error::invalid("particle count N must be >= 1"));
        }
        Ok(())
    }

    /// Thermal de Broglie wavelength of one particle at the system
    /// temperature (m).
    pub fn thermal_wavelength(&self) -> Result<f64> {
        thermal_wavelength(self.particle_mass, self.temperature)
    }
}

/// Thermal de Broglie wavelength λ_T = h/√(2π·m·k_B·T) (m).
///
/// Rejects non-positive mass or temperature: outside that domain the formula
/// itself is meaningless, which is distinct from any regime verdict.
pub fn thermal_wavelength(mass: f64, temperature: f64) -> Result<f64> {
    ensure_positive("mass m", mass)?;
    ensure_positive("temperature T", temperature)?;
    Ok(PLANCK / (2.0 * std::f64::consts::PI * mass * BOLTZMANN * temperature).sqrt())
}

pub(crate) fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} must be finite and > 0, got {value:e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // The five (l, M) reference rows; n = 5, D = 0.4 nm throughout.
    pub(crate) fn row(l: f64, m: f64) -> PendulumSpec {
        PendulumSpec::with_default_gravity(l, m, 0.4e-9).unwrap()
    }

    #[test]
    fn angular_frequency_reference_values() {
        // Direct formula oracle; cross-checked against the printed periods.
        let w1 = row(1.5e-2, 2.01e-17).angular_frequency().unwrap();
        assert_relative_eq!(w1, 31.304951684997057, max_relative = 1e-12);
        assert_relative_eq!(2.0 * std::f64::consts::PI / w1, 0.20, max_relative = 5e-3);

        let w3 = row(9e-7, 6.04e-21).angular_frequency().unwrap();
        assert_relative_eq!(w3, 4041.451884327381, max_relative = 1e-12);
        assert_relative_eq!(2.0 * std::f64::consts::PI / w3, 1.55e-3, max_relative = 5e-3);
    }

    #[test]
    fn angular_frequency_quarter_length_scaling() {
        let base = row(1e-3, 1e-20);
        let longer = row(4e-3, 1e-20);
        let ratio = base.angular_frequency().unwrap() / longer.angular_frequency().unwrap();
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn angular_frequency_rejects_bad_inputs() {
        assert!(PendulumSpec::new(0.0, 1.0, 0.0, 9.8).is_err());
        assert!(PendulumSpec::new(1.0, 1.0, 0.0, 0.0).is_err());
        assert!(PendulumSpec::new(1.0, -1.0, 0.0, 9.8).is_err());
        assert!(PendulumSpec::new(1.0, 1.0, -1e-9, 9.8).is_err());
        let mut s = row(1.0, 1.0);
        s.arm_length = f64::NAN;
        assert!(s.angular_frequency().is_err());
    }

    #[test]
    fn classical_period_printed_rows() {
        assert_relative_eq!(row(1.5e-2, 2.01e-17).classical_period().unwrap(), 0.20, max_relative = 5e-3);
        assert_relative_eq!(row(7e-8, 7e-22).classical_period().unwrap(), 4.33e-4, max_relative = 5e-3);
        assert_relative_eq!(row(1.3e-8, 1.7e-22).classical_period().unwrap(), 1.87e-4, max_relative = 5e-3);
    }

    #[test]
    fn classical_period_ignores_mass_and_size() {
        let a = PendulumSpec::new(1e-3, 1e-20, 0.0, 9.8).unwrap();
        let b = PendulumSpec::new(1e-3, 5e-18, 3e-9, 9.8).unwrap();
        assert_eq!(a.classical_period().unwrap(), b.classical_period().unwrap());
    }

    #[test]
    fn lambda_min_printed_rows() {
        // Rows 3 and 5 match the printed wavelengths.
        assert_relative_eq!(row(9e-7, 6.04e-21).lambda_min(5).unwrap(), 3.95e-9, max_relative = 5e-3);
        assert_relative_eq!(row(1.3e-8, 1.7e-22).lambda_min(5).unwrap(), 8.16e-9, max_relative = 5e-3);
        // Row 1 evaluates to 0.776 nm; the printed 0.25 nm is smaller by ~π.
        let lam1 = row(1.5e-2, 2.01e-17).lambda_min(5).unwrap();
        assert_relative_eq!(lam1, 7.755629583135451e-10, max_relative = 1e-12);
        assert_relative_eq!(lam1 / 0.25e-9, std::f64::consts::PI, max_relative = 0.02);
    }

    #[test]
    fn lambda_min_closed_form_agrees() {
        let spec = row(9e-7, 6.04e-21);
        for n in [0u32, 1, 5, 20] {
            let lam = spec.lambda_min(n).unwrap();
            let closed = 2.0
                * std::f64::consts::PI
                * (HBAR / ((2.0 * n as f64 + 1.0) * spec.mass)
                    * (2.0 * spec.arm_length / (3.0 * spec.gravity)).sqrt())
                .sqrt();
            assert_relative_eq!(lam, closed, max_relative = 1e-14);
        }
    }

    #[test]
    fn lambda_times_momentum_is_planck() {
        let spec = row(9e-7, 6.04e-21);
        for n in [0u32, 3, 5, 50] {
            let product = spec.lambda_min(n).unwrap() * spec.max_momentum(n).unwrap();
            assert_relative_eq!(product, PLANCK, max_relative = 1e-15);
        }
    }

    #[test]
    fn omega_squared_recovers_gravity() {
        for l in [1.3e-8, 9e-7, 1.5e-2, 2.0] {
            let spec = row(l, 1e-20);
            let w = spec.angular_frequency().unwrap();
            assert_relative_eq!(w * w * (2.0 * l / 3.0), spec.gravity, max_relative = 1e-12);
        }
    }

    #[test]
    fn turning_point_row3() {
        // Oracle: numerically solve E_n = ½Mω²x² for x.
        let spec = row(9e-7, 6.04e-21);
        let n = 5u32;
        let omega = spec.angular_frequency().unwrap();
        let energy = (n as f64 + 0.5) * HBAR * omega;
        let v = |x: f64| 0.5 * spec.mass * omega * omega * x * x - energy;
        let solved = crate::numerics::bisect(&v, 0.0, 1e-6, 1e-14).unwrap();
        let x_max = spec.turning_point(n).unwrap();
        assert_relative_eq!(x_max, solved, max_relative = 1e-10);
        assert_relative_eq!(x_max, 6.893618530409234e-9, max_relative = 1e-12);
    }

    #[test]
    fn turning_point_ground_state_and_mass_scaling() {
        let spec = row(9e-7, 6.04e-21);
        let omega = spec.angular_frequency().unwrap();
        assert_relative_eq!(
            spec.turning_point(0).unwrap(),
            (HBAR / (spec.mass * omega)).sqrt(),
            max_relative = 1e-14
        );
        // Quadrupling M at fixed omega halves x_max. Fixed omega means l and
        // g unchanged, so compare against a heavier copy directly.
        let heavy = PendulumSpec { mass: 4.0 * spec.mass, ..spec };
        assert_relative_eq!(
            spec.turning_point(5).unwrap() / heavy.turning_point(5).unwrap(),
            2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn thermal_wavelength_values() {
        // Unit construction: 2π·m·k_B·T = h² gives λ_T = 1 m.
        let t = 1.0;
        let m = PLANCK * PLANCK / (2.0 * std::f64::consts::PI * BOLTZMANN * t);
        assert_relative_eq!(thermal_wavelength(m, t).unwrap(), 1.0, max_relative = 1e-14);

        // Quadrupling T halves the wavelength.
        let lam = thermal_wavelength(4.65e-26, 300.0).unwrap();
        let lam4 = thermal_wavelength(4.65e-26, 1200.0).unwrap();
        assert_relative_eq!(lam / lam4, 2.0, max_relative = 1e-12);

        // N2 at room temperature.
        assert_relative_eq!(lam, 1.9047472263841786e-11, max_relative = 1e-12);
    }

    #[test]
    fn thermal_wavelength_rejects_domain_violations() {
        assert!(thermal_wavelength(1e-26, 0.0).is_err());
        assert!(thermal_wavelength(1e-26, -1.0).is_err());
        assert!(thermal_wavelength(0.0, 300.0).is_err());
    }

    #[test]
    fn thermal_system_validation() {
        assert!(ThermalSystem::new(1e-26, 0, 1e-9, 300.0).is_err());
        assert!(ThermalSystem::new(1e-26, 10, 1e-9, 300.0).is_ok());
    }
}
