//! Batch CLI for the qpendulum library.
//!
//! Exit codes: 0 success, 2 input validation failure, 3 numerical failure
//! (no sign change, sampler stall).

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qpendulum::constants::G_DEFAULT;
use qpendulum::entropy::{entropy_profile, EntropyProfile};
use qpendulum::experiment::{
    detect_period, simulate, EventSeries, ExperimentConfig, Mode, PeriodOptions, ReportPoint,
};
use qpendulum::kernel::{compare, KernelQuery};
use qpendulum::oscillator::{wavefunction_table, OscillatorState};
use qpendulum::regime::{classify, classify_pendulum, RegimeQuery, Thresholds};
use qpendulum::sampling::{sample_positions, SampleMethod, SamplerConfig};
use qpendulum::table::{
    build_table1, crossover_length, reference_inputs, sweep, MassModel, SweepSpec, SweepVariable,
    Table1Row, REFERENCE_DIAMETER, REFERENCE_LEVEL,
};
use qpendulum::PendulumSpec;

#[derive(Parser)]
#[command(
    name = "qpendulum",
    version,
    about = "Quantum-vs-classical regime analysis for rigid pendulums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild the reference nanotube table and compare against printed values
    Table1 {
        /// Emit the full report as JSON
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit the full report as CSV
        #[arg(long)]
        csv: bool,
        /// Gravitational acceleration (m/s²)
        #[arg(long, default_value_t = G_DEFAULT)]
        g: f64,
    },
    /// Classify one wavelength-vs-size comparison
    Classify {
        /// de Broglie wavelength (m)
        #[arg(long)]
        lambda: f64,
        /// Particle size D (m)
        #[arg(long)]
        size: f64,
        /// Quantum,classical ratio thresholds, e.g. "10,0.1"
        #[arg(long, value_parser = parse_thresholds)]
        thresholds: Option<Thresholds>,
        /// Label of the spatial freedom
        #[arg(long, default_value = "tangential")]
        freedom: String,
        #[arg(long)]
        json: bool,
    },
    /// Full report for one pendulum: frequency, period, wavelength, energy,
    /// turning points and regime
    Pendulum {
        /// Arm length l (m)
        #[arg(long)]
        length: f64,
        /// Mass M (kg)
        #[arg(long)]
        mass: f64,
        /// Transverse size D (m)
        #[arg(long)]
        diameter: f64,
        /// Eigenstate index n
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = G_DEFAULT)]
        g: f64,
        #[arg(long, value_parser = parse_thresholds)]
        thresholds: Option<Thresholds>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate ψ_n and |ψ_n|² on a grid (CSV)
    Eigenstate {
        #[arg(long)]
        level: u32,
        /// Oscillating mass (kg)
        #[arg(long)]
        mass: f64,
        /// Angular frequency (rad/s)
        #[arg(long)]
        omega: f64,
        /// Grid points
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// Half-span in units of the turning point
        #[arg(long, default_value_t = 6.0)]
        span: f64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw random positions from |ψ_n|² (CSV)
    Sample {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::InverseCdf)]
        method: MethodArg,
        #[arg(long, default_value_t = 8192)]
        grid_points: usize,
        #[arg(long, default_value_t = 6.0)]
        cutoff: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ideal-gas entropy curve S(T)/Nk_B (CSV)
    Entropy {
        /// Particle mass (kg)
        #[arg(long)]
        mass: f64,
        /// Mean free path d-bar (m)
        #[arg(long)]
        dbar: f64,
        #[arg(long)]
        tmin: f64,
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Particle count N (affects J/K values only)
        #[arg(long, default_value_t = 1)]
        count_n: u64,
        /// Emit the full profile (including J/K values) as JSON
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare composite and effective-centre-of-mass kernel phases
    Kernel {
        /// Constituent point mass (kg)
        #[arg(long)]
        m: f64,
        /// Centre-of-mass displacement ΔR (m)
        #[arg(long = "dR")]
        d_r: f64,
        /// Size proxy D = d' − d (m)
        #[arg(long = "D", allow_hyphen_values = true)]
        size_d: f64,
        /// Elapsed time Δt (s)
        #[arg(long)]
        dt: f64,
        #[arg(long)]
        json: bool,
    },
    /// Simulate the two-probe observation run and write the event log
    Simulate {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        length: f64,
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        diameter: f64,
        #[arg(long)]
        level: u32,
        /// Observation rate (Hz); default 37.1 samples per pendulum period
        #[arg(long)]
        rate: Option<f64>,
        /// Run duration (s)
        #[arg(long)]
        duration: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = G_DEFAULT)]
        g: f64,
        #[arg(long, value_enum, default_value_t = ReportPointArg::FreeEnd)]
        report_point: ReportPointArg,
        /// Event CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the JSON replay envelope here
        #[arg(long)]
        envelope: Option<PathBuf>,
    },
    /// Periodicity test on an event CSV
    Periodtest {
        /// Event CSV with time_s,position_m columns
        #[arg(long = "in")]
        input: PathBuf,
        /// Autocorrelation peak threshold
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        /// Largest lag scanned (default min(N/2, 512))
        #[arg(long)]
        max_lag: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Sweep length, mass or level and tabulate wavelength/period/regime (CSV)
    Sweep {
        #[arg(long, value_enum)]
        variable: SweepVariableArg,
        #[arg(long)]
        min: f64,
        #[arg(long)]
        max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[command(flatten)]
        base: PendulumArgs,
        #[arg(long)]
        level: u32,
        #[arg(long, value_parser = parse_thresholds)]
        thresholds: Option<Thresholds>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the arm length where λ_min/D crosses a threshold
    Crossover {
        /// Fixed mass (kg); mutually exclusive with --density
        #[arg(long, conflicts_with = "density")]
        mass: Option<f64>,
        /// Linear mass density (kg/m)
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        diameter: f64,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 10.0)]
        threshold: f64,
        /// Bracket lower end (m)
        #[arg(long)]
        lo: f64,
        /// Bracket upper end (m)
        #[arg(long)]
        hi: f64,
        #[arg(long, default_value_t = G_DEFAULT)]
        g: f64,
    },
}

#[derive(Args)]
struct PendulumArgs {
    /// Arm length l (m)
    #[arg(long)]
    length: f64,
    /// Mass M (kg)
    #[arg(long)]
    mass: f64,
    /// Transverse size D (m)
    #[arg(long)]
    diameter: f64,
    #[arg(long, default_value_t = G_DEFAULT)]
    g: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Quantum,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Classical => Mode::Classical,
            ModeArg::Quantum => Mode::Quantum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportPointArg {
    CentreOfMass,
    FreeEnd,
}

impl From<ReportPointArg> for ReportPoint {
    fn from(r: ReportPointArg) -> Self {
        match r {
            ReportPointArg::CentreOfMass => ReportPoint::CentreOfMass,
            ReportPointArg::FreeEnd => ReportPoint::FreeEnd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rejection,
    InverseCdf,
}

impl From<MethodArg> for SampleMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Rejection => SampleMethod::Rejection,
            MethodArg::InverseCdf => SampleMethod::InverseCdf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepVariableArg {
    Length,
    Mass,
    Level,
}

impl From<SweepVariableArg> for SweepVariable {
    fn from(v: SweepVariableArg) -> Self {
        match v {
            SweepVariableArg::Length => SweepVariable::Length,
            SweepVariableArg::Mass => SweepVariable::Mass,
            SweepVariableArg::Level => SweepVariable::Level,
        }
    }
}

fn parse_thresholds(s: &str) -> Result<Thresholds, String> {
    let (q, c) = s
        .split_once(',')
        .ok_or_else(|| "expected two comma-separated values, e.g. 10,0.1".to_string())?;
    let quantum: f64 = q.trim().parse().map_err(|e| format!("bad quantum threshold: {e}"))?;
    let classical: f64 = c.trim().parse().map_err(|e| format!("bad classical threshold: {e}"))?;
    Thresholds::new(quantum, classical).map_err(|e| e.to_string())
}

enum CliError {
    Core(qpendulum::Error),
    Io(String),
}

impl From<qpendulum::Error> for CliError {
    fn from(e: qpendulum::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Die quietly on SIGPIPE (e.g. when piped into `head`) instead of
/// panicking on a failed stdout write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            std::process::exit(if e.is_validation() { 2 } else { 3 });
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

/// Opens `--out` or falls back to stdout.
fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout())),
    })
}

/// 17 significant digits, the CSV contract.
fn csv_num(v: f64) -> String {
    format!("{v:.16e}")
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Table1 { json, csv, g } => {
            let rows = build_table1(&reference_inputs(), REFERENCE_LEVEL, REFERENCE_DIAMETER, g)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else if csv {
                print_table1_csv(&mut io::stdout().lock(), &rows)?;
            } else {
                print_table1_human(&rows);
            }
            Ok(())
        }
        Command::Classify { lambda, size, thresholds, freedom, json } => {
            let report = classify(
                &RegimeQuery { wavelength: lambda, size_d: size, freedom },
                &thresholds.unwrap_or_default(),
            )?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "{}: ratio lambda/D = {} -> {} (quantum >= {}, classical <= {})",
                    report.freedom,
                    report.ratio,
                    report.label,
                    report.quantum_threshold,
                    report.classical_threshold
                );
            }
            Ok(())
        }
        Command::Pendulum { length, mass, diameter, level, g, thresholds, json } => {
            let spec = PendulumSpec::new(length, mass, diameter, g)?;
            let report = pendulum_report(&spec, level, &thresholds.unwrap_or_default())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_pendulum_human(&report);
            }
            Ok(())
        }
        Command::Eigenstate { level, mass, omega, grid, span, out } => {
            let state = OscillatorState::new(mass, omega, level)?;
            let table = wavefunction_table(&state, grid, span)?;
            let mut w = writer(&out)?;
            writeln!(w, "x_m,psi,density_per_m")?;
            for s in table {
                writeln!(w, "{},{},{}", csv_num(s.x_m), csv_num(s.psi), csv_num(s.density_per_m))?;
            }
            Ok(())
        }
        Command::Sample { level, mass, omega, count, seed, method, grid_points, cutoff, out } => {
            let state = OscillatorState::new(mass, omega, level)?;
            let config = SamplerConfig {
                seed,
                method: method.into(),
                grid_points,
                support_cutoff: cutoff,
            };
            let positions = sample_positions(&state, &config, count)?;
            let mut w = writer(&out)?;
            writeln!(w, "position_m")?;
            for x in positions {
                writeln!(w, "{}", csv_num(x))?;
            }
            Ok(())
        }
        Command::Entropy { mass, dbar, tmin, tmax, points, count_n, json, out } => {
            let profile = entropy_profile(mass, count_n, dbar, tmin, tmax, points)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&profile)?);
            } else {
                let mut w = writer(&out)?;
                write_entropy_csv(&mut w, &profile)?;
            }
            Ok(())
        }
        Command::Kernel { m, d_r, size_d, dt, json } => {
            let query = KernelQuery::from_deltas(m, d_r, size_d, dt)?;
            let comparison = compare(&query)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&comparison)?);
            } else {
                println!("composite_phase_rad   = {}", comparison.composite_phase);
                println!("ecm_phase_rad         = {}", comparison.ecm_phase);
                println!("exact_error_rad       = {}", comparison.exact_error);
                println!("lumped_form_error_rad = {}", comparison.lumped_form_error);
                println!("validity_ratio        = {}", comparison.validity_ratio);
            }
            Ok(())
        }
        Command::Simulate {
            mode,
            length,
            mass,
            diameter,
            level,
            rate,
            duration,
            seed,
            g,
            report_point,
            out,
            envelope,
        } => {
            let pendulum = PendulumSpec::new(length, mass, diameter, g)?;
            let rate = match rate {
                Some(r) => r,
                None => 37.1 / pendulum.classical_period()?,
            };
            let config = ExperimentConfig {
                pendulum,
                level_n: level,
                mode: mode.into(),
                observation_rate: rate,
                duration,
                seed,
                report_point: report_point.into(),
            };
            let series = simulate(&config)?;
            if let Some(path) = &envelope {
                let mut w = io::BufWriter::new(File::create(path)?);
                writeln!(w, "{}", serde_json::to_string_pretty(&config)?)?;
            }
            let mut w = writer(&out)?;
            writeln!(w, "time_s,position_m")?;
            for (t, x) in series.times.iter().zip(&series.positions) {
                writeln!(w, "{},{}", csv_num(*t), csv_num(*x))?;
            }
            w.flush()?;
            if out.is_some() {
                eprintln!("wrote {} events", series.len());
            }
            Ok(())
        }
        Command::Periodtest { input, threshold, max_lag, json } => {
            let series = read_event_csv(&input)?;
            let report = detect_period(&series, &PeriodOptions { threshold, max_lag })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                match &report.estimate {
                    Some(est) => println!(
                        "period {} s (lag {:.2}, score {:.3}, threshold {}, noise band {:.4})",
                        est.period_s, est.lag, est.score, report.threshold, report.noise_band
                    ),
                    None => println!(
                        "no period (max |autocorr| {:.4} over {} lags, noise band {:.4})",
                        report.max_abs_autocorr, report.max_lag, report.noise_band
                    ),
                }
            }
            Ok(())
        }
        Command::Sweep { variable, min, max, points, base, level, thresholds, out } => {
            let spec = SweepSpec {
                variable: variable.into(),
                range: (min, max),
                points,
                base: PendulumSpec::new(base.length, base.mass, base.diameter, base.g)?,
                level,
            };
            let rows = sweep(&spec, &thresholds.unwrap_or_default())?;
            let mut w = writer(&out)?;
            writeln!(w, "value,lambda_min_m,period_s,ratio,label")?;
            for r in rows {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    csv_num(r.value),
                    csv_num(r.lambda_min_m),
                    csv_num(r.period_s),
                    csv_num(r.ratio),
                    r.label
                )?;
            }
            Ok(())
        }
        Command::Crossover { mass, density, diameter, level, threshold, lo, hi, g } => {
            let model = match (mass, density) {
                (Some(m), None) => MassModel::Fixed(m),
                (None, Some(rho)) => MassModel::LinearDensity(rho),
                _ => {
                    return Err(CliError::Core(qpendulum::Error::InvalidInput(
                        "provide exactly one of --mass or --density".into(),
                    )))
                }
            };
            let root = crossover_length(&model, level, diameter, g, threshold, (lo, hi))?;
            println!("crossover_length_m = {root}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct PendulumReport {
    spec: PendulumSpec,
    level_n: u32,
    omega_rad_s: f64,
    period_s: f64,
    lambda_min_m: f64,
    energy_j: f64,
    turning_point_cm_m: f64,
    amplitude_free_end_m: f64,
    regime: qpendulum::RegimeReport,
}

fn pendulum_report(
    spec: &PendulumSpec,
    level: u32,
    thresholds: &Thresholds,
) -> Result<PendulumReport, qpendulum::Error> {
    let state = OscillatorState::from_pendulum(spec, level)?;
    Ok(PendulumReport {
        spec: *spec,
        level_n: level,
        omega_rad_s: spec.angular_frequency()?,
        period_s: spec.classical_period()?,
        lambda_min_m: spec.lambda_min(level)?,
        energy_j: state.energy(),
        turning_point_cm_m: spec.turning_point(level)?,
        amplitude_free_end_m: spec.free_end_amplitude(level)?,
        regime: classify_pendulum(spec, level, thresholds)?,
    })
}

fn print_pendulum_human(r: &PendulumReport) {
    println!("arm length        : {:e} m", r.spec.arm_length);
    println!("mass              : {:e} kg", r.spec.mass);
    println!("size D            : {:e} m", r.spec.size_d);
    println!("gravity           : {} m/s^2", r.spec.gravity);
    println!("level n           : {}", r.level_n);
    println!("omega             : {:e} rad/s", r.omega_rad_s);
    println!("period            : {:e} s", r.period_s);
    println!("lambda_min        : {:e} m", r.lambda_min_m);
    println!("E_n               : {:e} J", r.energy_j);
    println!("turning point (CM): {:e} m", r.turning_point_cm_m);
    println!("free-end amplitude: {:e} m", r.amplitude_free_end_m);
    println!(
        "regime            : {} (ratio {:.4}, thresholds {}/{})",
        r.regime.label, r.regime.ratio, r.regime.quantum_threshold, r.regime.classical_threshold
    );
}

fn print_table1_human(rows: &[Table1Row]) {
    println!(
        "{:>10} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "l(nm)", "M(1e-21kg)", "lam_min(nm)", "amp_cm(nm)", "amp_end(nm)", "angle(deg)", "period(s)"
    );
    for r in rows {
        println!(
            "{:>10.4e} {:>12.4} {:>12.4} {:>12.4} {:>12.4} {:>12.4e} {:>12.4e}",
            r.arm_length_m * 1e9,
            r.mass_kg * 1e21,
            r.lambda_min_m * 1e9,
            r.amplitude_cm_m * 1e9,
            r.amplitude_free_end_m * 1e9,
            r.angle_deg,
            r.period_s
        );
        if let (Some(p), Some(d)) = (&r.printed_values, &r.deltas) {
            println!(
                "{:>10} printed: lam {:.4} nm ({:+.2}%), amp {:.4} nm ({:+.2}% vs free end), period {:.4e} s ({:+.2}%)",
                "",
                p.lambda_min_m * 1e9,
                d.lambda_min * 100.0,
                p.amplitude_m * 1e9,
                d.amplitude_free_end * 100.0,
                p.period_s,
                d.period * 100.0
            );
            for flag in &d.flags {
                println!("{:>10} flag: {}", "", flag);
            }
        }
    }
}

fn print_table1_csv(w: &mut dyn Write, rows: &[Table1Row]) -> Result<(), CliError> {
    writeln!(
        w,
        "arm_length_m,mass_kg,level_n,size_d_m,omega_rad_s,lambda_min_m,amplitude_cm_m,\
         amplitude_free_end_m,angle_deg,period_s,printed_lambda_min_m,printed_amplitude_m,\
         printed_angle_deg,printed_period_s,delta_lambda_min,delta_period,flags"
    )?;
    for r in rows {
        let printed = r
            .printed_values
            .map(|p| {
                format!(
                    "{},{},{},{}",
                    csv_num(p.lambda_min_m),
                    csv_num(p.amplitude_m),
                    csv_num(p.angle_deg),
                    csv_num(p.period_s)
                )
            })
            .unwrap_or_else(|| ",,,".to_string());
        let deltas = r
            .deltas
            .as_ref()
            .map(|d| {
                format!(
                    "{},{},\"{}\"",
                    csv_num(d.lambda_min),
                    csv_num(d.period),
                    d.flags.join("; ")
                )
            })
            .unwrap_or_else(|| ",,".to_string());
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            csv_num(r.arm_length_m),
            csv_num(r.mass_kg),
            r.level_n,
            csv_num(r.size_d_m),
            csv_num(r.omega_rad_s),
            csv_num(r.lambda_min_m),
            csv_num(r.amplitude_cm_m),
            csv_num(r.amplitude_free_end_m),
            csv_num(r.angle_deg),
            csv_num(r.period_s),
            printed,
            deltas
        )?;
    }
    Ok(())
}

fn write_entropy_csv(w: &mut dyn Write, profile: &EntropyProfile) -> Result<(), CliError> {
    writeln!(w, "T_K,S_over_NkB")?;
    for (t, s) in profile.temperatures.iter().zip(&profile.entropies_per_particle_kb) {
        writeln!(w, "{},{}", csv_num(*t), csv_num(*s))?;
    }
    Ok(())
}

fn read_event_csv(path: &Path) -> Result<EventSeries, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Io(format!("cannot open {}: {e}", path.display())))?;
    let mut times = Vec::new();
    let mut positions = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if lineno == 0 && trimmed.chars().next().is_some_and(|c| c.is_alphabetic()) {
            continue; // header
        }
        let (t, x) = trimmed.split_once(',').ok_or_else(|| {
            CliError::Io(format!("{}:{}: expected time,position", path.display(), lineno + 1))
        })?;
        let t: f64 = t.trim().parse().map_err(|e| {
            CliError::Io(format!("{}:{}: bad time: {e}", path.display(), lineno + 1))
        })?;
        let x: f64 = x.trim().parse().map_err(|e| {
            CliError::Io(format!("{}:{}: bad position: {e}", path.display(), lineno + 1))
        })?;
        times.push(t);
        positions.push(x);
    }
    Ok(EventSeries { times, positions, mode: Mode::Classical, seed: 0 })
}
