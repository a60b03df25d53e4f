//! Two-probe pendulum experiment simulation.
//!
//! Classical mode samples the deterministic trajectory A·cos(ωt) at the
//! observation rate; quantum mode treats each observation as an ideal
//! stroboscopic position measurement of the stationary eigenstate, i.i.d.
//! from |ψ_n|². A periodicity test on the resulting event series is what
//! operationally tells the two apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::oscillator::OscillatorState;
use crate::pendulum::{ensure_positive, PendulumSpec};
use crate::sampling::{sample_positions, sample_positions_seq, SamplerConfig};

/// Memory guard: at most this many events per simulation.
pub const MAX_EVENTS: f64 = 1e8;

/// Minimum series length for period detection.
pub const MIN_PERIOD_SAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classical,
    Quantum,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Classical => "classical",
            Mode::Quantum => "quantum",
        })
    }
}

/// Which point of the rod positions refer to. The centre of mass sits at
/// l/2, so the free end moves exactly twice as far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportPoint {
    CentreOfMass,
    FreeEnd,
}

/// Full description of one simulated observation run.
///
/// Serializes to the replay envelope format (`mode`, `seed`,
/// `observation_rate_hz`, `duration_s`, `level_n`, ...).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub pendulum: PendulumSpec,
    pub level_n: u32,
    pub mode: Mode,
    #[serde(rename = "observation_rate_hz")]
    pub observation_rate: f64,
    #[serde(rename = "duration_s")]
    pub duration: f64,
    pub seed: u64,
    pub report_point: ReportPoint,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.pendulum.validate()?;
        ensure_positive("observation rate", self.observation_rate)?;
        ensure_positive("duration", self.duration)?;
        if self.duration * self.observation_rate > MAX_EVENTS {
            return Err(Error::invalid(format!(
                "duration x observation_rate = {:e} exceeds the {MAX_EVENTS:e} event guard",
                self.duration * self.observation_rate
            )));
        }
        Ok(())
    }
}

/// Timestamped position samples from one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EventSeries {
    /// Observation times (s), strictly increasing.
    pub times: Vec<f64>,
    /// Observed positions (m), one per time.
    pub positions: Vec<f64>,
    pub mode: Mode,
    pub seed: u64,
}

impl EventSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// A microprobe detector: counts events inside
/// [center − aperture/2, center + aperture/2].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Probe {
    /// Probe centre (m).
    pub center: f64,
    /// Full aperture width (m), > 0.
    pub aperture: f64,
}

/// Runs one simulation. Deterministic: identical configs (seed included)
/// produce bit-identical series.
pub fn simulate(config: &ExperimentConfig) -> Result<EventSeries> {
    run_simulation(config, false)
}

/// Single-threaded reference version of [`simulate`]; bit-identical output.
pub fn simulate_seq(config: &ExperimentConfig) -> Result<EventSeries> {
    run_simulation(config, true)
}

fn run_simulation(config: &ExperimentConfig, force_seq: bool) -> Result<EventSeries> {
    config.validate()?;
    let rate = config.observation_rate;
    // Number of whole sampling steps inside the duration; snap to the nearest
    // integer when duration*rate is integral up to rounding so an endpoint
    // meant to land on the grid is not dropped.
    let steps_f = config.duration * rate;
    let steps = if (steps_f - steps_f.round()).abs() <= 1e-9 * steps_f.max(1.0) {
        steps_f.round()
    } else {
        steps_f.floor()
    } as usize;
    let count = steps + 1;
    let times: Vec<f64> = (0..count).map(|i| i as f64 / rate).collect();

    let scale = match config.report_point {
        ReportPoint::CentreOfMass => 1.0,
        ReportPoint::FreeEnd => 2.0,
    };

    let positions = match config.mode {
        Mode::Classical => {
            let amplitude = config.pendulum.turning_point(config.level_n)?;
            let omega = config.pendulum.angular_frequency()?;
            let f = move |i: usize| scale * amplitude * (omega * (i as f64 / rate)).cos();
            if force_seq {
                exec::map_indexed_seq(count, f)
            } else {
                exec::map_indexed(count, f)
            }
        }
        Mode::Quantum => {
            let state = OscillatorState::from_pendulum(&config.pendulum, config.level_n)?;
            let sampler = SamplerConfig::new(config.seed);
            let raw = if force_seq {
                sample_positions_seq(&state, &sampler, count)?
            } else {
                sample_positions(&state, &sampler, count)?
            };
            raw.into_iter().map(|x| scale * x).collect()
        }
    };

    Ok(EventSeries { times, positions, mode: config.mode, seed: config.seed })
}

/// Counts events inside each probe's aperture. Order-insensitive in the
/// events and independent of timestamps.
pub fn detector_counts(series: &EventSeries, probes: &[Probe]) -> Result<Vec<u64>> {
    if series.is_empty() {
        return Err(Error::invalid("event series is empty"));
    }
    for p in probes {
        ensure_positive("probe aperture", p.aperture)?;
    }
    Ok(probes
        .iter()
        .map(|p| {
            let lo = p.center - 0.5 * p.aperture;
            let hi = p.center + 0.5 * p.aperture;
            series.positions.iter().filter(|&&x| x >= lo && x <= hi).count() as u64
        })
        .collect())
}

/// Sample autocorrelation ρ(k) for k = 1..=max_lag, normalized by the lag-0
/// autocovariance (so each value lies in [-1, 1] up to noise).
pub fn autocorrelation(values: &[f64], max_lag: usize) -> Vec<f64> {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let centered: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let c0: f64 = centered.iter().map(|d| d * d).sum();
    let max_lag = max_lag.min(n.saturating_sub(1));
    if c0 == 0.0 {
        return vec![0.0; max_lag];
    }
    (1..=max_lag)
        .map(|k| {
            let mut acc = 0.0;
            for i in 0..n - k {
                acc += centered[i] * centered[i + k];
            }
            acc / c0
        })
        .collect()
}

/// Options for [`detect_period`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodOptions {
    /// Minimum autocorrelation peak value to call a period.
    pub threshold: f64,
    /// Largest lag scanned; defaults to min(N/2, 512) so the white-noise
    /// band stays meaningful for long i.i.d. series.
    pub max_lag: Option<usize>,
}

impl Default for PeriodOptions {
    fn default() -> Self {
        Self { threshold: 0.5, max_lag: None }
    }
}

/// A detected period.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodEstimate {
    /// Dominant period (s).
    pub period_s: f64,
    /// Sub-sample peak position in lag units.
    pub lag: f64,
    /// Autocorrelation value at the peak.
    pub score: f64,
}

/// Outcome of the periodicity test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodReport {
    /// The detected period, or None when no significant peak exists.
    pub estimate: Option<PeriodEstimate>,
    /// White-noise baseline 3/√N.
    pub noise_band: f64,
    pub threshold: f64,
    /// Number of lags scanned.
    pub max_lag: usize,
    /// max |ρ(k)| over the scanned lags.
    pub max_abs_autocorr: f64,
}

/// Finds the first significant autocorrelation peak of a uniformly sampled
/// series and converts it to a period.
///
/// A peak must be a local maximum, reach `threshold` and clear the
/// white-noise band; its position is refined by parabolic interpolation of
/// the three surrounding autocorrelation values.
pub fn detect_period(series: &EventSeries, options: &PeriodOptions) -> Result<PeriodReport> {
    let n = series.len();
    if n < MIN_PERIOD_SAMPLES {
        return Err(Error::TooFewSamples { got: n, need: MIN_PERIOD_SAMPLES });
    }
    if series.positions.len() != n {
        return Err(Error::invalid("times and positions must have equal lengths"));
    }
    let dt = (series.times[n - 1] - series.times[0]) / (n - 1) as f64;
    if dt.is_nan() || dt <= 0.0 {
        return Err(Error::invalid("times must be strictly increasing"));
    }
    for w in series.times.windows(2) {
        if (w[1] - w[0] - dt).abs() > 1e-6 * dt {
            return Err(Error::invalid("period detection requires uniform sampling"));
        }
    }

    let max_lag = options.max_lag.unwrap_or_else(|| (n / 2).min(512)).min(n - 1);
    if max_lag < 2 {
        return Err(Error::TooFewSamples { got: n, need: MIN_PERIOD_SAMPLES });
    }
    let acf = autocorrelation(&series.positions, max_lag);
    let noise_band = 3.0 / (n as f64).sqrt();
    let max_abs = acf.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut estimate = None;
    // acf[j] holds lag j+1; interior peaks need both neighbours.
    for j in 1..acf.len().saturating_sub(1) {
        let (left, mid, right) = (acf[j - 1], acf[j], acf[j + 1]);
        if mid >= left && mid >= right && mid >= options.threshold && mid > noise_band {
            let denom = left - 2.0 * mid + right;
            let shift = if denom.abs() > f64::EPSILON { 0.5 * (left - right) / denom } else { 0.0 };
            let lag = (j + 1) as f64 + shift.clamp(-0.5, 0.5);
            estimate = Some(PeriodEstimate { period_s: lag * dt, lag, score: mid });
            break;
        }
    }

    Ok(PeriodReport {
        estimate,
        noise_band,
        threshold: options.threshold,
        max_lag,
        max_abs_autocorr: max_abs,
    })
}
