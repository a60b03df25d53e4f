//! Quantum-vs-classical regime classification per spatial degree of freedom.
//!
//! The decision compares a de Broglie wavelength λ against the body's
//! transverse size D. λ well above D means the motion must be treated
//! quantum mechanically and the effective centre of mass is a valid
//! description; λ well below D means classical mechanics applies. "Well
//! above/below" is quantified by explicit thresholds with a crossover band
//! in between, so the convention is visible instead of baked in.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pendulum::PendulumSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeLabel {
    QuantumEcm,
    Classical,
    Crossover,
}

impl std::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RegimeLabel::QuantumEcm => "quantum-ecm",
            RegimeLabel::Classical => "classical",
            RegimeLabel::Crossover => "crossover",
        })
    }
}

/// Ratio thresholds quantifying "much larger" / "much smaller".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// λ/D at or above this is quantum-ecm. Must exceed 1.
    pub quantum: f64,
    /// λ/D at or below this is classical. Must sit in (0, 1).
    pub classical: f64,
}

impl Default for Thresholds {
    /// Symmetric decade: 10 and 0.1.
    fn default() -> Self {
        Self { quantum: 10.0, classical: 0.1 }
    }
}

impl Thresholds {
    pub fn new(quantum: f64, classical: f64) -> Result<Self> {
        let t = Self { quantum, classical };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.quantum > 1.0 && self.classical > 0.0 && self.classical < 1.0 {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "thresholds must satisfy quantum > 1 > classical > 0, got quantum={} classical={}",
                self.quantum, self.classical
            )))
        }
    }
}

/// One wavelength-vs-size comparison along a named degree of freedom.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeQuery {
    /// de Broglie wavelength λ (m).
    #[serde(rename = "wavelength_m")]
    pub wavelength: f64,
    /// Particle size D along this freedom (m); zero for a point body.
    #[serde(rename = "size_d_m")]
    pub size_d: f64,
    /// Label of the spatial freedom, e.g. "tangential" or "radial".
    pub freedom: String,
}

/// Classification outcome with its margins.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub freedom: String,
    /// λ/D; +∞ when D = 0.
    pub ratio: f64,
    pub label: RegimeLabel,
    pub quantum_threshold: f64,
    pub classical_threshold: f64,
    pub notes: String,
}

/// Classifies one degree of freedom.
///
/// D = 0 yields ratio +∞ and the quantum-ecm label.
pub fn classify(query: &RegimeQuery, thresholds: &Thresholds) -> Result<RegimeReport> {
    thresholds.validate()?;
    if !query.wavelength.is_finite() || query.wavelength <= 0.0 {
        return Err(Error::invalid(format!(
            "wavelength must be finite and > 0, got {:e}",
            query.wavelength
        )));
    }
    if !query.size_d.is_finite() || query.size_d < 0.0 {
        return Err(Error::invalid(format!(
            "size D must be finite and >= 0, got {:e}",
            query.size_d
        )));
    }
    let ratio = if query.size_d == 0.0 { f64::INFINITY } else { query.wavelength / query.size_d };
    let label = if ratio >= thresholds.quantum {
        RegimeLabel::QuantumEcm
    } else if ratio <= thresholds.classical {
        RegimeLabel::Classical
    } else {
        RegimeLabel::Crossover
    };
    Ok(RegimeReport {
        freedom: query.freedom.clone(),
        ratio,
        label,
        quantum_threshold: thresholds.quantum,
        classical_threshold: thresholds.classical,
        notes: format!(
            "thresholds {}/{} quantify 'much greater/smaller'; \
             a mass-based classicality rule is deliberately not applied",
            thresholds.quantum, thresholds.classical
        ),
    })
}

/// Classifies a pendulum's tangential motion in its nth eigenstate:
/// λ = λ_min(spec, n) against D = spec.size_d.
pub fn classify_pendulum(
    spec: &PendulumSpec,
    level: u32,
    thresholds: &Thresholds,
) -> Result<RegimeReport> {
    let query = RegimeQuery {
        wavelength: spec.lambda_min(level)?,
        size_d: spec.size_d,
        freedom: "tangential".to_string(),
    };
    classify(&query, thresholds)
}
