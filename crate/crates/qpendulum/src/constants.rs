//! Physical constants (CODATA 2018) and unit conventions.
//!
//! Every quantity in this crate is SI internally; display conversions such as
//! nanometres or 10⁻²¹ kg belong to the CLI layer.

use std::f64::consts::PI;

/// Reduced Planck constant ħ (J·s), CODATA 2018.
pub const HBAR: f64 = 1.054571817e-34;

/// Planck constant h (J·s), defined as 2πħ so that `PLANCK == 2.0 * PI * HBAR`
/// holds to the last bit.
pub const PLANCK: f64 = 2.0 * PI * HBAR;

/// Boltzmann constant k_B (J/K), exact by the 2019 SI definition.
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Default gravitational acceleration (m/s²).
///
/// 9.8 rather than standard gravity 9.80665; gravity stays an explicit field
/// on every pendulum so callers can override it.
pub const G_DEFAULT: f64 = 9.8;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planck_is_two_pi_hbar() {
        assert_eq!(PLANCK, 2.0 * PI * HBAR);
    }

    #[test]
    #[allow(clippy::assertions_on_constants)]
    fn constants_are_positive() {
        assert!(HBAR > 0.0 && PLANCK > 0.0 && BOLTZMANN > 0.0 && G_DEFAULT > 0.0);
    }
}
