//! Reference-table reproduction, crossover search and parameter sweeps.
//!
//! The five-row carbon-nanotube pendulum table is rebuilt end to end from
//! its (l, M) inputs at n = 5 and D = 0.4 nm, then compared column by column
//! against the printed values shipped in `data/table1_printed.csv`.

use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::pendulum::{ensure_positive, PendulumSpec};
use crate::regime::{classify_pendulum, RegimeLabel, Thresholds};

/// Eigenstate index used by the reference table.
pub const REFERENCE_LEVEL: u32 = 5;
/// Tube diameter used by the reference table (m).
pub const REFERENCE_DIAMETER: f64 = 0.4e-9;

/// One printed reference row, stored in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrintedRow {
    pub arm_length_m: f64,
    pub mass_kg: f64,
    pub lambda_min_m: f64,
    /// Printed under an undocumented amplitude definition; reference only.
    pub amplitude_m: f64,
    pub angle_deg: f64,
    pub period_s: f64,
}

static PRINTED: LazyLock<Vec<PrintedRow>> = LazyLock::new(|| {
    let raw = include_str!("../data/table1_printed.csv");
    raw.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#') && !l.starts_with("arm_"))
        .map(|line| {
            let f: Vec<f64> = line
                .split(',')
                .map(|v| v.trim().parse().expect("malformed reference data"))
                .collect();
            assert_eq!(f.len(), 6, "malformed reference data row");
            PrintedRow {
                arm_length_m: f[0],
                mass_kg: f[1],
                lambda_min_m: f[2],
                amplitude_m: f[3],
                angle_deg: f[4],
                period_s: f[5],
            }
        })
        .collect()
});

/// The printed reference rows.
pub fn printed_rows() -> &'static [PrintedRow] {
    &PRINTED
}

/// The canonical (l, M) input pairs of the reference table.
pub fn reference_inputs() -> Vec<(f64, f64)> {
    printed_rows().iter().map(|r| (r.arm_length_m, r.mass_kg)).collect()
}

/// Relative differences (computed − printed)/printed for the populated
/// printed columns, plus any flags raised while comparing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowDeltas {
    pub lambda_min: f64,
    pub period: f64,
    /// Printed amplitude against our free-end amplitude (2·x_max).
    pub amplitude_free_end: f64,
    pub angle_deg: f64,
    pub flags: Vec<String>,
}

/// One fully computed table row with optional printed-value comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub arm_length_m: f64,
    pub mass_kg: f64,
    pub level_n: u32,
    pub size_d_m: f64,
    pub omega_rad_s: f64,
    pub lambda_min_m: f64,
    /// Centre-of-mass turning point (m).
    pub amplitude_cm_m: f64,
    /// Free-end amplitude, exactly 2·amplitude_cm (m).
    pub amplitude_free_end_m: f64,
    /// Free-end arc displacement over the full arm length, in degrees. The
    /// printed column's definition is undocumented; this one is stated.
    pub angle_deg: f64,
    pub period_s: f64,
    pub printed_values: Option<PrintedRow>,
    pub deltas: Option<RowDeltas>,
}

/// Computes every derived column for the given (l, M) pairs and attaches
/// printed values plus deltas where an input pair matches a reference row.
pub fn build_table1(
    rows: &[(f64, f64)],
    level: u32,
    size_d: f64,
    gravity: f64,
) -> Result<Vec<Table1Row>> {
    let computed = exec::map_indexed(rows.len(), |i| -> Result<Table1Row> {
        let (l, m) = rows[i];
        let spec = PendulumSpec::new(l, m, size_d, gravity)?;
        let omega = spec.angular_frequency()?;
        let lambda = spec.lambda_min(level)?;
        let amplitude_cm = spec.turning_point(level)?;
        let amplitude_free_end = 2.0 * amplitude_cm;
        let angle_deg = (amplitude_free_end / l).to_degrees();
        let period = spec.classical_period()?;

        let printed = printed_rows().iter().find(|r| {
            relative_close(r.arm_length_m, l, 1e-9) && relative_close(r.mass_kg, m, 1e-9)
        });
        let deltas = printed.map(|p| {
            let mut flags = Vec::new();
            let lambda_ratio = lambda / p.lambda_min_m;
            if (lambda_ratio / std::f64::consts::PI - 1.0).abs() < 0.05 {
                flags.push(format!(
                    "computed lambda_min is {lambda_ratio:.3}x the printed value; \
                     suspected factor-pi typo in the printed number"
                ));
            }
            RowDeltas {
                lambda_min: (lambda - p.lambda_min_m) / p.lambda_min_m,
                period: (period - p.period_s) / p.period_s,
                amplitude_free_end: (amplitude_free_end - p.amplitude_m) / p.amplitude_m,
                angle_deg: (angle_deg - p.angle_deg) / p.angle_deg,
                flags,
            }
        });

        Ok(Table1Row {
            arm_length_m: l,
            mass_kg: m,
            level_n: level,
            size_d_m: size_d,
            omega_rad_s: omega,
            lambda_min_m: lambda,
            amplitude_cm_m: amplitude_cm,
            amplitude_free_end_m: amplitude_free_end,
            angle_deg,
            period_s: period,
            printed_values: printed.copied(),
            deltas,
        })
    });
    computed.into_iter().collect()
}

fn relative_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// How the pendulum mass varies with arm length during a crossover search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MassModel {
    /// Mass independent of length (kg).
    Fixed(f64),
    /// Mass proportional to length: M = density · l (kg/m).
    LinearDensity(f64),
}

impl MassModel {
    pub fn mass_at(&self, arm_length: f64) -> f64 {
        match self {
            MassModel::Fixed(m) => *m,
            MassModel::LinearDensity(rho) => rho * arm_length,
        }
    }
}

/// Finds the arm length where λ_min/D crosses `threshold` by bisection over
/// `bracket`, to 1e-6 relative tolerance.
///
/// The ratio must be monotone over the bracket; a bracket that does not
/// straddle the threshold fails with [`Error::NoSignChange`].
pub fn crossover_length(
    model: &MassModel,
    level: u32,
    size_d: f64,
    gravity: f64,
    threshold: f64,
    bracket: (f64, f64),
) -> Result<f64> {
    ensure_positive("size D", size_d)?;
    ensure_positive("threshold", threshold)?;
    let ratio_minus_threshold = |l: f64| -> f64 {
        let spec = PendulumSpec { arm_length: l, mass: model.mass_at(l), size_d, gravity };
        match spec.lambda_min(level) {
            Ok(lam) => lam / size_d - threshold,
            Err(_) => f64::NAN,
        }
    };
    crate::numerics::bisect(&ratio_minus_threshold, bracket.0, bracket.1, 1e-6)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVariable {
    Length,
    Mass,
    Level,
}

/// A one-dimensional parameter sweep around a base pendulum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    /// Inclusive [min, max] range of the swept variable.
    pub range: (f64, f64),
    /// Number of evaluation points, ≥ 2.
    pub points: usize,
    /// Base geometry; the swept field is overridden per point.
    pub base: PendulumSpec,
    /// Base eigenstate index.
    pub level: u32,
}

/// One sweep evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    /// Value of the swept variable at this point.
    pub value: f64,
    pub lambda_min_m: f64,
    pub period_s: f64,
    pub ratio: f64,
    pub label: RegimeLabel,
}

/// Evaluates λ_min, period and regime label across the sweep range.
pub fn sweep(spec: &SweepSpec, thresholds: &Thresholds) -> Result<Vec<SweepRow>> {
    spec.base.validate()?;
    thresholds.validate()?;
    if spec.points < 2 {
        return Err(Error::invalid("sweep needs at least 2 points"));
    }
    let (lo, hi) = spec.range;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::invalid(format!(
            "sweep range must be finite with min < max, got [{lo:e}, {hi:e}]"
        )));
    }
    let step = (hi - lo) / (spec.points - 1) as f64;
    let rows = exec::map_indexed(spec.points, |i| -> Result<SweepRow> {
        let value = if i == spec.points - 1 { hi } else { lo + i as f64 * step };
        let mut pendulum = spec.base;
        let mut level = spec.level;
        match spec.variable {
            SweepVariable::Length => pendulum.arm_length = value,
            SweepVariable::Mass => pendulum.mass = value,
            SweepVariable::Level => level = value.round().max(0.0) as u32,
        }
        let report = classify_pendulum(&pendulum, level, thresholds)?;
        Ok(SweepRow {
            value,
            lambda_min_m: pendulum.lambda_min(level)?,
            period_s: pendulum.classical_period()?,
            ratio: report.ratio,
            label: report.label,
        })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use crate::constants::G_DEFAULT;

    #[test]
    fn printed_data_loads_five_rows() {
        let rows = printed_rows();
        assert_eq!(rows.len(), 5);
        assert_relative_eq!(rows[0].arm_length_m, 1.5e-2, max_relative = 1e-12);
        assert_relative_eq!(rows[4].mass_kg, 1.7e-22, max_relative = 1e-12);
        assert_relative_eq!(rows[1].period_s, 0.01, max_relative = 1e-12);
    }

    fn reference_table() -> Vec<Table1Row> {
        build_table1(&reference_inputs(), REFERENCE_LEVEL, REFERENCE_DIAMETER, G_DEFAULT).unwrap()
    }

    #[test]
    fn row3_period_and_row4_lambda_match_printed() {
        let table = reference_table();
        assert_relative_eq!(table[2].period_s, 1.55e-3, max_relative = 5e-3);
        assert!(table[2].deltas.as_ref().unwrap().period.abs() < 5e-3);
        assert_relative_eq!(table[3].lambda_min_m, 6.12e-9, max_relative = 5e-3);
        assert!(table[3].deltas.as_ref().unwrap().lambda_min.abs() < 5e-3);
    }

    #[test]
    fn row1_lambda_flagged_with_pi_discrepancy() {
        let table = reference_table();
        // Independent evaluation puts row 1 at 0.776 nm, not the printed
        // 0.25 nm; the discrepancy is surfaced, not suppressed.
        assert_relative_eq!(table[0].lambda_min_m, 0.776e-9, max_relative = 0.01);
        let deltas = table[0].deltas.as_ref().unwrap();
        assert_relative_eq!(
            1.0 + deltas.lambda_min,
            std::f64::consts::PI,
            max_relative = 0.02
        );
        assert!(!deltas.flags.is_empty());
        // No other row raises the flag.
        for row in &table[1..] {
            assert!(row.deltas.as_ref().unwrap().flags.is_empty());
        }
    }

    #[test]
    fn row_invariants_hold() {
        for row in reference_table() {
            assert_eq!(row.amplitude_free_end_m, 2.0 * row.amplitude_cm_m);
            let omega = (3.0 * G_DEFAULT / (2.0 * row.arm_length_m)).sqrt();
            assert_relative_eq!(
                row.period_s,
                2.0 * std::f64::consts::PI / omega,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn unmatched_inputs_have_no_printed_values() {
        let table = build_table1(&[(1e-3, 1e-20)], 5, 0.4e-9, G_DEFAULT).unwrap();
        assert!(table[0].printed_values.is_none());
        assert!(table[0].deltas.is_none());
    }

    #[test]
    fn crossover_fixed_point() {
        // Setting the threshold to the ratio at a probed length makes that
        // length the root.
        let model = MassModel::Fixed(1.84e-19);
        let probe = 5.5e-5;
        let spec = PendulumSpec::with_default_gravity(probe, 1.84e-19, 0.4e-9).unwrap();
        let threshold = spec.lambda_min(5).unwrap() / 0.4e-9;
        let root =
            crossover_length(&model, 5, 0.4e-9, G_DEFAULT, threshold, (1e-6, 1e-2)).unwrap();
        assert_relative_eq!(root, probe, max_relative = 1e-5);
    }

    #[test]
    fn crossover_matches_grid_scan_oracle() {
        let model = MassModel::Fixed(1.84e-19);
        let threshold = 10.0;
        let bracket = (1e-5, 1e-1);
        let root =
            crossover_length(&model, 5, 0.4e-9, G_DEFAULT, threshold, bracket).unwrap();

        // Dense-grid oracle: scan for the sign change, then a fine local
        // linear solve between the two straddling grid points.
        let ratio = |l: f64| {
            PendulumSpec::with_default_gravity(l, 1.84e-19, 0.4e-9)
                .unwrap()
                .lambda_min(5)
                .unwrap()
                / 0.4e-9
                - threshold
        };
        let n = 4_000_000usize;
        let step = (bracket.1 - bracket.0) / n as f64;
        let mut oracle = None;
        let mut prev = ratio(bracket.0);
        for i in 1..=n {
            let l = bracket.0 + i as f64 * step;
            let cur = ratio(l);
            if prev.signum() != cur.signum() {
                let l_prev = l - step;
                oracle = Some(l_prev + step * prev / (prev - cur));
                break;
            }
            prev = cur;
        }
        let oracle = oracle.expect("grid scan must find the crossing");
        assert_relative_eq!(root, oracle, max_relative = 1e-6);
    }

    #[test]
    fn crossover_reports_missing_sign_change() {
        let model = MassModel::Fixed(1.84e-19);
        // Entire bracket sits below threshold 1000.
        match crossover_length(&model, 5, 0.4e-9, G_DEFAULT, 1000.0, (1e-6, 1e-2)) {
            Err(Error::NoSignChange { .. }) => {}
            other => panic!("expected NoSignChange, got {other:?}"),
        }
    }

    #[test]
    fn linear_density_model_shortens_to_quantum() {
        // With M ∝ l the ratio grows as the tube shrinks, so the quantum
        // side of the root is at short lengths.
        let rho = 1.84e-19 / 5.5e-5; // kg per metre, row-2 implied density
        let model = MassModel::LinearDensity(rho);
        let root = crossover_length(&model, 5, 0.4e-9, G_DEFAULT, 10.0, (1e-8, 1e-2)).unwrap();
        let shorter = PendulumSpec::with_default_gravity(0.5 * root, model.mass_at(0.5 * root), 0.4e-9)
            .unwrap();
        let longer = PendulumSpec::with_default_gravity(2.0 * root, model.mass_at(2.0 * root), 0.4e-9)
            .unwrap();
        assert!(shorter.lambda_min(5).unwrap() / 0.4e-9 > 10.0);
        assert!(longer.lambda_min(5).unwrap() / 0.4e-9 < 10.0);
    }

    #[test]
    fn two_point_sweep_equals_direct_evaluations() {
        let base = PendulumSpec::with_default_gravity(5.5e-5, 1.84e-19, 0.4e-9).unwrap();
        let spec = SweepSpec {
            variable: SweepVariable::Mass,
            range: (1e-20, 1e-18),
            points: 2,
            base,
            level: 5,
        };
        let rows = sweep(&spec, &Thresholds::default()).unwrap();
        assert_eq!(rows.len(), 2);
        for (row, mass) in rows.iter().zip([1e-20, 1e-18]) {
            let mut p = base;
            p.mass = mass;
            assert_eq!(row.lambda_min_m, p.lambda_min(5).unwrap());
            assert_eq!(row.period_s, p.classical_period().unwrap());
        }
    }

    #[test]
    fn mass_sweep_lambda_strictly_decreasing() {
        let base = PendulumSpec::with_default_gravity(5.5e-5, 1.84e-19, 0.4e-9).unwrap();
        let spec = SweepSpec {
            variable: SweepVariable::Mass,
            range: (1e-21, 1e-17),
            points: 64,
            base,
            level: 5,
        };
        let rows = sweep(&spec, &Thresholds::default()).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].lambda_min_m < w[0].lambda_min_m);
        }
    }

    #[test]
    fn monotone_sweep_changes_label_at_most_once() {
        let base = PendulumSpec::with_default_gravity(5.5e-5, 1.84e-19, 0.4e-9).unwrap();
        let spec = SweepSpec {
            variable: SweepVariable::Mass,
            range: (1e-22, 1e-16),
            points: 200,
            base,
            level: 5,
        };
        let rows = sweep(&spec, &Thresholds::default()).unwrap();
        // Labels must march monotonically toward classical: each label forms
        // one contiguous run, so each regime boundary is crossed at most once.
        let rank = |l: RegimeLabel| match l {
            RegimeLabel::QuantumEcm => 2,
            RegimeLabel::Crossover => 1,
            RegimeLabel::Classical => 0,
        };
        for w in rows.windows(2) {
            assert!(rank(w[1].label) <= rank(w[0].label));
            assert!(w[1].ratio < w[0].ratio);
        }
        let changes = rows.windows(2).filter(|w| w[0].label != w[1].label).count();
        assert!(changes <= 2);
    }

    #[test]
    fn sweep_validation() {
        let base = PendulumSpec::with_default_gravity(5.5e-5, 1.84e-19, 0.4e-9).unwrap();
        let mut spec = SweepSpec {
            variable: SweepVariable::Length,
            range: (1e-3, 1e-6),
            points: 8,
            base,
            level: 5,
        };
        assert!(sweep(&spec, &Thresholds::default()).is_err());
        spec.range = (1e-6, 1e-3);
        spec.points = 1;
        assert!(sweep(&spec, &Thresholds::default()).is_err());
    }
}
