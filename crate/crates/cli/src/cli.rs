//! Argument parsing and command dispatch for the `bfpower` binary.
//!
//! The whole interface funnels through [`run_with`], which takes the
//! argument vector, the config-file environment override, and explicit
//! output/error writers, and returns the process exit code: 0 on success,
//! 1 for domain failures (a model rejected the inputs, a file was
//! unreadable), 2 for usage errors from the argument parser. Tests drive
//! it in-process with byte-captured writers; `main` hands it the real
//! streams.
//!
//! Human-readable results print with a configurable number of significant
//! digits (4 by default); `--exact` switches every number to Rust's
//! shortest round-trip form so outputs can be compared bit-for-bit.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use bfpower_core::crossover::{
    asymptotic_bandwidth_star, asymptotic_bits_star, bandwidth_star, bits_star, CrossoverQuery,
};
use bfpower_core::power_model::{total_power, ReceiverDesign};
use bfpower_core::quantization::{min_adequate_bits, SnrPoint};
use bfpower_core::scalar::{db_to_linear, linear_to_db};
use bfpower_core::sweep::{figure_dataset, run_sweep, tradeoff_dataset, FigureOverrides};
use bfpower_core::{Architecture, FigureId};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{parse_config, parse_sweep_spec, RunConfig};
use crate::csv::emit_csv;
use crate::units::parse_frequency;

#[derive(Debug, Parser)]
#[command(
    name = "bfpower",
    version,
    about = "Total-power models and break-even analysis for analog, hybrid, and digital beamforming receivers"
)]
struct Cli {
    /// Configuration file (overrides BFPOWER_CONFIG and ./bfpower.conf).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write primary output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Print numbers at full precision instead of rounded for display.
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total power of one receiver design.
    Power(PowerArgs),
    /// Where digital and hybrid receivers trade places.
    #[command(subcommand)]
    Crossover(CrossoverCommand),
    /// Effective SNR after ADC quantization.
    SnrEff(SnrEffArgs),
    /// Smallest resolution whose SNR loss fits a budget.
    Bmin(BminArgs),
    /// Evaluate a sweep-specification file to CSV.
    Sweep(SweepArgs),
    /// Reproduce one of the predefined reference datasets as CSV.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArchArg {
    Abf,
    Hbf,
    Dbf,
}

impl From<ArchArg> for Architecture {
    fn from(arch: ArchArg) -> Self {
        match arch {
            ArchArg::Abf => Architecture::Abf,
            ArchArg::Hbf => Architecture::Hbf,
            ArchArg::Dbf => Architecture::Dbf,
        }
    }
}

#[derive(Debug, Args)]
struct PowerArgs {
    /// Beamforming architecture.
    #[arg(long, value_enum)]
    arch: ArchArg,
    /// Number of antennas.
    #[arg(long)]
    n_ant: u32,
    /// Number of RF chains (hybrid only; analog and digital fix their own).
    #[arg(long, required_if_eq("arch", "hbf"))]
    n_rf: Option<u32>,
    /// ADC resolution in bits.
    #[arg(long)]
    bits: u32,
    /// Bandwidth with unit, e.g. "100 MHz" or "1 GHz".
    #[arg(long, value_name = "FREQ")]
    bandwidth: String,
    /// ADC profile name from the configuration.
    #[arg(long)]
    adc: String,
    /// Also print the per-component power groups.
    #[arg(long)]
    breakdown: bool,
}

#[derive(Debug, Subcommand)]
enum CrossoverCommand {
    /// Break-even ADC resolution b* at a fixed bandwidth.
    Bits(CrossoverBitsArgs),
    /// Break-even bandwidth B* at a fixed resolution.
    Bandwidth(CrossoverBandwidthArgs),
}

#[derive(Debug, Args)]
struct CrossoverBitsArgs {
    /// Number of antennas (ignored by --asymptotic).
    #[arg(long)]
    n_ant: u32,
    /// Number of hybrid RF chains.
    #[arg(long)]
    n_rf: u32,
    /// Bandwidth with unit, e.g. "1 GHz".
    #[arg(long, value_name = "FREQ")]
    bandwidth: String,
    /// ADC profile name from the configuration.
    #[arg(long)]
    adc: String,
    /// Evaluate the large-array limit instead of the finite array.
    #[arg(long)]
    asymptotic: bool,
}

#[derive(Debug, Args)]
struct CrossoverBandwidthArgs {
    /// Number of antennas (ignored by --asymptotic).
    #[arg(long)]
    n_ant: u32,
    /// Number of hybrid RF chains.
    #[arg(long)]
    n_rf: u32,
    /// ADC resolution in bits.
    #[arg(long)]
    bits: u32,
    /// ADC profile name from the configuration.
    #[arg(long)]
    adc: String,
    /// Evaluate the large-array limit instead of the finite array.
    #[arg(long)]
    asymptotic: bool,
}

#[derive(Debug, Args)]
struct SnrEffArgs {
    /// Channel SNR in dB.
    #[arg(long, allow_hyphen_values = true)]
    gamma_db: f64,
    /// ADC resolution in bits.
    #[arg(long)]
    bits: u32,
}

#[derive(Debug, Args)]
struct BminArgs {
    /// Channel SNR in dB.
    #[arg(long, allow_hyphen_values = true)]
    gamma_db: f64,
    /// SNR-loss budget in dB (default from the configuration).
    #[arg(long)]
    epsilon_db: Option<f64>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Sweep-specification file.
    spec: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureArg {
    #[value(name = "ptot-vs-bits-100MHz")]
    PtotVsBits100MHz,
    #[value(name = "ptot-vs-bits-1GHz")]
    PtotVsBits1GHz,
    #[value(name = "bstar-vs-bandwidth")]
    BitsStarVsBandwidth,
    #[value(name = "bwstar-vs-bits")]
    BandwidthStarVsBits,
    #[value(name = "snr-eff-vs-bits")]
    SnrEffVsBits,
    #[value(name = "power-vs-snreff-lpadc")]
    PowerVsSnrEffLpadc,
    #[value(name = "power-vs-snreff-hpadc")]
    PowerVsSnrEffHpadc,
}

impl From<FigureArg> for FigureId {
    fn from(figure: FigureArg) -> Self {
        match figure {
            FigureArg::PtotVsBits100MHz => FigureId::PtotVsBits100MHz,
            FigureArg::PtotVsBits1GHz => FigureId::PtotVsBits1GHz,
            FigureArg::BitsStarVsBandwidth => FigureId::BitsStarVsBandwidth,
            FigureArg::BandwidthStarVsBits => FigureId::BandwidthStarVsBits,
            FigureArg::SnrEffVsBits => FigureId::SnrEffVsBits,
            FigureArg::PowerVsSnrEffLpadc => FigureId::PowerVsSnrEffLpadc,
            FigureArg::PowerVsSnrEffHpadc => FigureId::PowerVsSnrEffHpadc,
        }
    }
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Which dataset to produce.
    #[arg(value_enum)]
    id: FigureArg,
}

/// Formats with `sig` significant digits, choosing positional or scientific
/// notation by the value's decimal exponent, the way `%g` does.
pub fn format_sig(value: f64, sig: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let digits = sig.max(1);
    let scientific = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("e-format always has an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    if (-4..=5).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{:.*}", decimals, value)
    } else {
        format!("{mantissa}e{exponent}")
    }
}

/// Runs the CLI against explicit streams and returns the exit code.
/// `env_config` is the value of `BFPOWER_CONFIG`, passed in so tests can
/// exercise the lookup order without touching the process environment.
pub fn run_with<I, S>(
    argv: I,
    env_config: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(error) => {
            let rendered = error.render().to_string();
            let target: &mut dyn Write = if error.use_stderr() { err } else { out };
            let _ = write!(target, "{rendered}");
            return error.exit_code();
        }
    };
    match execute(cli, env_config, out, err) {
        Ok(()) => 0,
        Err(error) => {
            // A reader that hung up (e.g. `bfpower figure ... | head`) is
            // not worth a diagnostic.
            let broken_pipe = error
                .chain()
                .filter_map(|cause| cause.downcast_ref::<std::io::Error>())
                .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if !broken_pipe {
                let _ = writeln!(err, "error: {error:#}");
            }
            1
        }
    }
}

// Config lookup order: --config, then BFPOWER_CONFIG, then ./bfpower.conf
// if present, then the built-in defaults.
fn load_config(cli_path: Option<&Path>, env_path: Option<&Path>) -> anyhow::Result<RunConfig> {
    let local = Path::new("bfpower.conf");
    let chosen = cli_path
        .or(env_path)
        .or_else(|| local.exists().then_some(local));
    match chosen {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config `{}`", path.display()))?;
            parse_config(&text).map_err(|e| anyhow!("config `{}`: {e}", path.display()))
        }
        None => Ok(RunConfig::default()),
    }
}

fn execute(
    cli: Cli,
    env_config: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<()> {
    let config = load_config(cli.config.as_deref(), env_config.as_deref())?;
    let output_path = cli.output.or_else(|| config.defaults.output.clone());
    let mut file_sink = match &output_path {
        Some(path) => Some(BufWriter::new(File::create(path).with_context(|| {
            format!("cannot create output file `{}`", path.display())
        })?)),
        None => None,
    };
    let sink: &mut dyn Write = match file_sink.as_mut() {
        Some(file) => file,
        None => out,
    };
    let precision = config.defaults.precision;
    let exact = cli.exact;
    let fmt = move |value: f64| {
        if exact {
            format!("{value}")
        } else {
            format_sig(value, precision)
        }
    };

    match cli.command {
        Command::Power(args) => {
            let bandwidth =
                parse_frequency(&args.bandwidth).map_err(|e| anyhow!("--bandwidth: {e}"))?;
            let adc = config.adc_model(&args.adc).map_err(|e| anyhow!(e))?;
            let design = ReceiverDesign::new(
                args.arch.into(),
                args.n_ant,
                args.n_rf.unwrap_or(1),
                args.bits,
                bandwidth,
            )?;
            let breakdown = total_power(&design, &config.components, &adc)?;
            writeln!(sink, "total = {} W", fmt(breakdown.total()))?;
            if args.breakdown {
                for (label, watts) in breakdown.per_component() {
                    writeln!(sink, "  {label} = {} W", fmt(*watts))?;
                }
            }
        }
        Command::Crossover(CrossoverCommand::Bits(args)) => {
            let bandwidth =
                parse_frequency(&args.bandwidth).map_err(|e| anyhow!("--bandwidth: {e}"))?;
            let adc = config.adc_model(&args.adc).map_err(|e| anyhow!(e))?;
            let result = if args.asymptotic {
                asymptotic_bits_star(args.n_rf, &config.components, &adc, bandwidth)?
            } else {
                let query =
                    CrossoverQuery::new(args.n_ant, args.n_rf, config.components.clone(), adc)?;
                bits_star(&query, bandwidth)?
            };
            match result.bits() {
                Some(bits) => writeln!(sink, "b* = {bits}")?,
                None => writeln!(sink, "b* = none")?,
            }
            let ratio = result
                .raw_levels()
                .expect("resolution queries always carry the level ratio");
            writeln!(sink, "R = {}", fmt(ratio))?;
        }
        Command::Crossover(CrossoverCommand::Bandwidth(args)) => {
            let adc = config.adc_model(&args.adc).map_err(|e| anyhow!(e))?;
            let result = if args.asymptotic {
                asymptotic_bandwidth_star(args.n_rf, &config.components, &adc, args.bits)?
            } else {
                let query =
                    CrossoverQuery::new(args.n_ant, args.n_rf, config.components.clone(), adc)?;
                bandwidth_star(&query, args.bits)?
            };
            match result.bandwidth_hz() {
                Some(bandwidth) => writeln!(sink, "B* = {} Hz", fmt(bandwidth))?,
                None => writeln!(sink, "B* = none")?,
            }
        }
        Command::SnrEff(args) => {
            let point = SnrPoint::evaluate(db_to_linear(args.gamma_db), args.bits)?;
            writeln!(sink, "gamma_ef = {} dB", fmt(linear_to_db(point.gamma_ef())))?;
        }
        Command::Bmin(args) => {
            let epsilon = args.epsilon_db.unwrap_or(config.defaults.epsilon_db);
            let bits = min_adequate_bits(db_to_linear(args.gamma_db), epsilon)?;
            writeln!(sink, "b_m = {bits}")?;
        }
        Command::Sweep(args) => {
            let text = std::fs::read_to_string(&args.spec)
                .with_context(|| format!("cannot read sweep spec `{}`", args.spec.display()))?;
            let spec = parse_sweep_spec(&text, &config)
                .map_err(|e| anyhow!("sweep spec `{}`: {e}", args.spec.display()))?;
            let run = run_sweep(&spec, &config.components)?;
            for skip in &run.skipped {
                writeln!(err, "skipped: {skip}")?;
            }
            emit_csv(&tradeoff_dataset(&run), sink)?;
        }
        Command::Figure(args) => {
            let dataset = figure_dataset(
                args.id.into(),
                &config.components,
                &FigureOverrides::default(),
            )?;
            emit_csv(&dataset, sink)?;
        }
    }

    if let Some(file) = file_sink.as_mut() {
        file.flush().context("flushing output file")?;
    }
    Ok(())
}
