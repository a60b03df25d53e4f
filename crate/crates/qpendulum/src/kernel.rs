//! Free-particle propagator, two-point composite kernels and the phase error
//! of the effective centre-of-mass (ECM) reduction.
//!
//! A body is modeled as two non-interacting mass points m at R ± d whose
//! centre moves from R to R′ over Δt while the half-separation changes from
//! d to d′ (D = d′ − d is the size proxy). Comparing the composite kernel
//! phase with the single-particle phase of total mass 2m gives the exact ECM
//! error m·D²/(ħΔt): negligible exactly when |ΔR| ≫ |D|.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::pendulum::ensure_positive;

/// A two-mass-point kernel evaluation request.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelQuery {
    /// Mass of each constituent point (kg); total mass is 2m.
    #[serde(rename = "point_mass_kg")]
    pub point_mass: f64,
    /// Centre-of-mass start position R (m).
    #[serde(rename = "r_start_m")]
    pub r_start: f64,
    /// Centre-of-mass end position R′ (m).
    #[serde(rename = "r_end_m")]
    pub r_end: f64,
    /// Half separation d at the start (m), ≥ 0.
    #[serde(rename = "half_sep_start_m")]
    pub half_sep_start: f64,
    /// Half separation d′ at the end (m), ≥ 0.
    #[serde(rename = "half_sep_end_m")]
    pub half_sep_end: f64,
    /// Elapsed time Δt (s), > 0.
    #[serde(rename = "delta_t_s")]
    pub delta_t: f64,
}

impl KernelQuery {
    pub fn new(
        point_mass: f64,
        r_start: f64,
        r_end: f64,
        half_sep_start: f64,
        half_sep_end: f64,
        delta_t: f64,
    ) -> Result<Self> {
        let q = Self { point_mass, r_start, r_end, half_sep_start, half_sep_end, delta_t };
        q.validate()?;
        Ok(q)
    }

    /// Builds a query directly from the displacement ΔR and size D, placing
    /// R at the origin. A negative D maps to (d, d′) = (−D, 0).
    pub fn from_deltas(point_mass: f64, delta_r: f64, size_d: f64, delta_t: f64) -> Result<Self> {
        let (d, d_prime) = if size_d >= 0.0 { (0.0, size_d) } else { (-size_d, 0.0) };
        Self::new(point_mass, 0.0, delta_r, d, d_prime, delta_t)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("point mass m", self.point_mass)?;
        ensure_positive("delta t", self.delta_t)?;
        for (name, v) in [
            ("R", self.r_start),
            ("R'", self.r_end),
            ("half separation d", self.half_sep_start),
            ("half separation d'", self.half_sep_end),
        ] {
            if !v.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite, got {v:e}")));
            }
        }
        if self.half_sep_start < 0.0 || self.half_sep_end < 0.0 {
            return Err(Error::invalid("half separations must be >= 0"));
        }
        Ok(())
    }

    /// Centre-of-mass displacement ΔR = R′ − R (m).
    pub fn delta_r(&self) -> f64 {
        self.r_end - self.r_start
    }

    /// Size proxy D = d′ − d (m); may be negative.
    pub fn size_d(&self) -> f64 {
        self.half_sep_end - self.half_sep_start
    }
}

/// Phase comparison between the composite and ECM kernels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelComparison {
    /// Exponent phase of the two-point kernel (rad).
    pub composite_phase: f64,
    /// Exponent phase of the single-particle kernel of mass 2m (rad).
    pub ecm_phase: f64,
    /// composite − ecm, evaluated in closed form m·D²/(ħΔt) (rad).
    pub exact_error: f64,
    /// Error of the alternative composite form 2m(ΔR+D)²/(2ħΔt), which
    /// lumps the size change into the displacement before squaring:
    /// (m/ħΔt)(2·ΔR·D + D²) (rad). Reported alongside the exact error so the
    /// difference between the two algebraic routes stays visible.
    pub lumped_form_error: f64,
    /// |ΔR|/|D|; +∞ when D = 0. ECM is trustworthy when this is large.
    pub validity_ratio: f64,
}

/// Exponent phase m(q′−q)²/(2ħΔt) of a free particle (rad).
pub fn free_phase(mass: f64, q: f64, q_prime: f64, delta_t: f64) -> Result<f64> {
    ensure_positive("mass m", mass)?;
    ensure_positive("delta t", delta_t)?;
    let dq = q_prime - q;
    Ok(mass * dq * dq / (2.0 * HBAR * delta_t))
}

/// Free-particle propagator √(m/(2πiħΔt))·exp[im(q′−q)²/(2ħΔt)].
///
/// The branch of √i is fixed as e^{iπ/4}, so the prefactor contributes a
/// constant phase of −π/4.
pub fn free_propagator(mass: f64, q: f64, q_prime: f64, delta_t: f64) -> Result<Complex64> {
    let phase = free_phase(mass, q, q_prime, delta_t)?;
    let modulus = (mass / (2.0 * std::f64::consts::PI * HBAR * delta_t)).sqrt();
    Ok(Complex64::from_polar(modulus, phase - std::f64::consts::FRAC_PI_4))
}

/// Summed exponent phase of the two constituent propagators:
/// (m/2ħΔt)·[(ΔR+D)² + (ΔR−D)²] (rad).
///
/// Phases accumulate unreduced in double precision; wrap modulo 2π at the
/// call site if needed.
pub fn composite_phase(query: &KernelQuery) -> Result<f64> {
    query.validate()?;
    let dr = query.delta_r();
    let d = query.size_d();
    let plus = dr + d;
    let minus = dr - d;
    Ok(query.point_mass * (plus * plus + minus * minus) / (2.0 * HBAR * query.delta_t))
}

/// Exponent phase 2m·ΔR²/(2ħΔt) of the ECM kernel (single particle of total
/// mass 2m) (rad).
pub fn ecm_phase(query: &KernelQuery) -> Result<f64> {
    query.validate()?;
    let dr = query.delta_r();
    Ok(query.point_mass * dr * dr / (HBAR * query.delta_t))
}

/// Builds the full phase comparison for one query.
pub fn compare(query: &KernelQuery) -> Result<KernelComparison> {
    let composite = composite_phase(query)?;
    let ecm = ecm_phase(query)?;
    let dr = query.delta_r();
    let d = query.size_d();
    let scale = query.point_mass / (HBAR * query.delta_t);
    let exact_error = scale * d * d;
    let lumped_form_error = scale * (2.0 * dr * d + d * d);
    let validity_ratio = if d == 0.0 { f64::INFINITY } else { (dr / d).abs() };
    Ok(KernelComparison {
        composite_phase: composite,
        ecm_phase: ecm,
        exact_error,
        lumped_form_error,
        validity_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn propagator_modulus_ignores_displacement() {
        let m = 1e-20;
        let dt = 1e-3;
        let expected = (m / (2.0 * std::f64::consts::PI * HBAR * dt)).sqrt();
        for qp in [0.0, 1e-9, 5e-7, -3e-4] {
            let k = free_propagator(m, 0.0, qp, dt).unwrap();
            assert_relative_eq!(k.norm(), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn propagator_zero_displacement_phase() {
        let k = free_propagator(1e-20, 2e-9, 2e-9, 1e-3).unwrap();
        assert_relative_eq!(k.arg(), -std::f64::consts::FRAC_PI_4, max_relative = 1e-13);
    }

    #[test]
    fn free_phase_reference_values() {
        // Direct arithmetic oracle: m(Δq)²/(2ħΔt) for m = 1e-20 kg,
        // Δq = 1 nm.
        assert_relative_eq!(
            free_phase(1e-20, 0.0, 1e-9, 1.0).unwrap(),
            4.741260784138706e-5,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            free_phase(1e-20, 0.0, 1e-9, 1e-3).unwrap(),
            4.741260784138706e-2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn propagator_rejects_bad_time() {
        assert!(free_propagator(1e-20, 0.0, 1e-9, 0.0).is_err());
        assert!(free_propagator(1e-20, 0.0, 1e-9, -1e-3).is_err());
    }

    #[test]
    fn composite_reference_value() {
        // Direct arithmetic for m = 1e-25 kg, ΔR = 1e-7 m, D = 1e-9 m,
        // Δt = 1e-12 s; cross-checked by evaluating the two single-particle
        // phases independently.
        let q = KernelQuery::from_deltas(1e-25, 1e-7, 1e-9, 1e-12).unwrap();
        let composite = composite_phase(&q).unwrap();
        assert_relative_eq!(composite, 9483469.82043424, max_relative = 1e-12);
        let two_factor = free_phase(1e-25, q.r_start + q.half_sep_start, q.r_end + q.half_sep_end, 1e-12)
            .unwrap()
            + free_phase(1e-25, q.r_start - q.half_sep_start, q.r_end - q.half_sep_end, 1e-12)
                .unwrap();
        assert_relative_eq!(composite, two_factor, max_relative = 1e-12);
    }

    #[test]
    fn ecm_reference_value() {
        let q = KernelQuery::from_deltas(1e-25, 1e-7, 1e-9, 1e-12).unwrap();
        assert_relative_eq!(ecm_phase(&q).unwrap(), 9482521.568277413, max_relative = 1e-12);
    }

    #[test]
    fn composite_equals_ecm_for_pointlike_body() {
        let q = KernelQuery::new(1e-22, -2e-8, 7e-8, 3e-9, 3e-9, 1e-6).unwrap();
        assert_eq!(q.size_d(), 0.0);
        assert_relative_eq!(
            composite_phase(&q).unwrap(),
            ecm_phase(&q).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn pure_internal_rearrangement() {
        // ΔR = 0, D ≠ 0 leaves only the internal term (m/ħΔt)·D².
        let q = KernelQuery::new(1e-22, 5e-8, 5e-8, 0.0, 2e-9, 1e-6).unwrap();
        let expected = 1e-22 * 4e-18 / (HBAR * 1e-6);
        assert_relative_eq!(composite_phase(&q).unwrap(), expected, max_relative = 1e-12);
        assert_eq!(ecm_phase(&q).unwrap(), 0.0);
    }

    #[test]
    fn compare_reference_values() {
        let q = KernelQuery::from_deltas(1e-25, 1e-7, 1e-9, 1e-12).unwrap();
        let c = compare(&q).unwrap();
        assert_relative_eq!(c.exact_error, 948.2521568277414, max_relative = 1e-12);
        assert_relative_eq!(c.lumped_form_error, 190598.683522376, max_relative = 1e-12);
        assert_relative_eq!(c.validity_ratio, 100.0, max_relative = 1e-14);
        // The closed form is the difference of the two phases.
        assert_relative_eq!(
            c.exact_error,
            c.composite_phase - c.ecm_phase,
            max_relative = 1e-9
        );
    }

    #[test]
    fn compare_zero_size() {
        let q = KernelQuery::from_deltas(1e-25, 1e-7, 0.0, 1e-6).unwrap();
        let c = compare(&q).unwrap();
        assert_eq!(c.exact_error, 0.0);
        assert_eq!(c.lumped_form_error, 0.0);
        assert!(c.validity_ratio.is_infinite());
    }

    #[test]
    fn exact_error_independent_of_displacement() {
        let mut previous = None;
        for dr in [-1e-3, -1e-7, 0.0, 2e-9, 5e-5] {
            let q = KernelQuery::from_deltas(1e-24, dr, 3e-10, 1e-9).unwrap();
            let e = compare(&q).unwrap().exact_error;
            if let Some(p) = previous {
                assert_relative_eq!(e, p, max_relative = 1e-14);
            }
            previous = Some(e);
        }
    }

    #[test]
    fn negative_size_proxy_allowed() {
        // d' < d gives D < 0; the error term depends on D² only.
        let shrink = KernelQuery::new(1e-24, 0.0, 1e-7, 2e-9, 1e-9, 1e-9).unwrap();
        let grow = KernelQuery::new(1e-24, 0.0, 1e-7, 1e-9, 2e-9, 1e-9).unwrap();
        assert_eq!(shrink.size_d(), -grow.size_d());
        assert_relative_eq!(
            compare(&shrink).unwrap().exact_error,
            compare(&grow).unwrap().exact_error,
            max_relative = 1e-14
        );
    }

    #[test]
    fn semigroup_property_by_trapezoid_convolution() {
        // ∫K(q1→q; t1)·K(q→q2; t2) dq should reproduce K(q1→q2; t1+t2).
        // Benign configuration: m numerically equal to ħ so m/ħ = 1, window
        // wide enough that the truncated Fresnel tails are ~7e-4 relative.
        let m = HBAR;
        let (t1, t2) = (0.7, 1.3);
        let (q1, q2) = (0.1, -0.2);
        let q_star = (q1 / t1 + q2 / t2) / (1.0 / t1 + 1.0 / t2);
        let alpha = m * (1.0 / t1 + 1.0 / t2) / (2.0 * HBAR);
        let half_width = 800.0 / alpha.sqrt();
        let n = 12_000_000usize;
        let h = 2.0 * half_width / n as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..=n {
            let q = q_star - half_width + i as f64 * h;
            let term = free_propagator(m, q1, q, t1).unwrap()
                * free_propagator(m, q, q2, t2).unwrap();
            let w = if i == 0 || i == n { 0.5 } else { 1.0 };
            sum += w * term;
        }
        let integral = sum * h;
        let exact = free_propagator(m, q1, q2, t1 + t2).unwrap();
        let rel = (integral - exact).norm() / exact.norm();
        assert!(rel < 1e-3, "semigroup relative error {rel}");
    }

    #[test]
    fn from_deltas_negative_size() {
        let q = KernelQuery::from_deltas(1e-24, 1e-7, -2e-9, 1e-9).unwrap();
        assert_abs_diff_eq!(q.size_d(), -2e-9, epsilon = 1e-24);
        assert!(q.half_sep_start >= 0.0 && q.half_sep_end >= 0.0);
    }
}
