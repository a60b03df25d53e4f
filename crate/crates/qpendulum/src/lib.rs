//! Quantum-vs-classical regime analysis for rigid pendulums.
//!
//! A small mechanical pendulum — a suspended carbon nanotube is the working
//! example throughout — either swings classically or, once its minimum
//! de Broglie wavelength exceeds its transverse size, must be treated as a
//! quantum oscillator whose centre of mass jumps between positions drawn
//! from |ψ_n|². This crate computes the quantities on both sides of that
//! comparison and simulates the two-probe experiment that would tell the
//! regimes apart:
//!
//! - [`pendulum`]: rod kinematics, ω = √(3g/2l), periods, minimum and
//!   thermal de Broglie wavelengths, turning points;
//! - [`oscillator`]: Hermite polynomials and normalized eigenfunctions ψ_n;
//! - [`sampling`]: reproducible draws from |ψ_n|² (inverse-CDF and
//!   rejection);
//! - [`regime`]: the λ-vs-D classification with explicit thresholds;
//! - [`kernel`]: free-particle propagators and the phase error of the
//!   effective centre-of-mass reduction;
//! - [`entropy`]: the classical ideal-gas entropy and the temperatures
//!   where it degenerates;
//! - [`experiment`]: classical/quantum event series, microprobe counts and
//!   autocorrelation period detection;
//! - [`table`]: the reference nanotube table, crossover search and sweeps.
//!
//! Everything is SI internally. Computation-heavy paths fan out over rayon
//! when the default `parallel` feature is enabled and fall back to
//! sequential loops otherwise; results are bit-identical either way.

pub mod constants;
pub mod entropy;
pub mod error;
pub mod exec;
pub mod experiment;
pub mod kernel;
pub mod numerics;
pub mod oscillator;
pub mod pendulum;
pub mod regime;
pub mod sampling;
pub mod table;

pub use error::{Error, Result};
pub use experiment::{
    detect_period, detector_counts, simulate, EventSeries, ExperimentConfig, Mode,
    PeriodOptions, PeriodReport, Probe, ReportPoint,
};
pub use kernel::{compare, ecm_phase, free_propagator, KernelComparison, KernelQuery};
pub use oscillator::{hermite, OscillatorState};
pub use pendulum::{thermal_wavelength, PendulumSpec, ThermalSystem};
pub use regime::{classify, classify_pendulum, RegimeLabel, RegimeQuery, RegimeReport, Thresholds};
pub use sampling::{sample_positions, SampleMethod, SamplerConfig};
pub use table::{build_table1, crossover_length, sweep, MassModel, SweepSpec, Table1Row};
