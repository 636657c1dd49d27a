//! Deterministic design-space sweeps, trade-off curves, Pareto frontiers,
//! and the predefined plot datasets.
//!
//! [`run_sweep`] walks the Cartesian product of a [`SweepSpec`]'s axes and
//! evaluates total power (and, when a channel SNR is given, effective SNR)
//! at every design point. Output ordering is part of the contract: points
//! come out sorted by (architecture, ADC label, n_ant, bandwidth, bits,
//! n_rf) no matter how the axes were listed, so two runs of the same spec
//! are identical. Grid points that cannot be evaluated — an array size the
//! ratio rule cannot divide, or a domain error — are recorded in a skip
//! list, never silently dropped and never fatal to the rest of the sweep.
//!
//! [`pareto_front`] reduces a trade-off cloud to its undominated frontier
//! under (minimize power, maximize effective SNR), and [`figure_dataset`]
//! reproduces the seven predefined datasets behind the crate's reference
//! plots, each overridable axis by axis.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::crossover::{bandwidth_star, bits_star, CrossoverQuery};
use crate::dataset::{Dataset, Value};
use crate::error::ModelError;
use crate::power_model::{total_power, AdcModel, Architecture, ComponentPowerTable, ReceiverDesign};
use crate::quantization::effective_snr;
use crate::scalar::{db_to_linear, linear_to_db, lit, Scalar};

// ---------------------------------------------------------------------------
// Sweep specification and results
// ---------------------------------------------------------------------------

/// How a sweep picks the hybrid chain count for each array size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NRfRule {
    /// Evaluate each listed chain count at every array size.
    Explicit(Vec<u32>),
    /// Scale with the array: `n_rf = n_ant / k`. Array sizes not divisible
    /// by `k` are skipped and recorded.
    Ratio(u32),
}

/// A parameter grid to evaluate.
///
/// All value lists are treated as sets: they are sorted and deduplicated
/// before evaluation, so listing order never changes the output. ABF and
/// DBF designs ignore the chain-count rule (their chain count is fixed by
/// the architecture), so they contribute one point per grid cell however
/// many chain counts the rule yields.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec<T: Scalar> {
    pub architectures: Vec<Architecture>,
    pub n_ant_values: Vec<u32>,
    pub n_rf_rule: NRfRule,
    pub bits_range: RangeInclusive<u32>,
    pub bandwidth_values: Vec<T>,
    pub adc_models: Vec<AdcModel<T>>,
    /// Channel SNR in dB; when present every point also carries its
    /// post-quantization effective SNR.
    pub gamma_db: Option<T>,
}

/// One evaluated design point.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffPoint<T: Scalar> {
    pub design: ReceiverDesign<T>,
    /// The ADC profile the point was evaluated with, kept so the point is
    /// re-derivable from its own fields.
    pub adc: AdcModel<T>,
    pub total_power_w: T,
    /// Present exactly when the sweep was given a channel SNR.
    pub gamma_ef_db: Option<T>,
}

/// A grid point the sweep could not evaluate, and why.
#[derive(Debug, Clone, PartialEq)]
pub enum SkippedPoint<T: Scalar> {
    /// The ratio rule cannot produce an integer chain count for this array
    /// size, so the whole array size drops out of the grid.
    IndivisibleRatio { n_ant: u32, ratio: u32 },
    /// A single design point failed validation or evaluation.
    DomainError {
        architecture: Architecture,
        n_ant: u32,
        n_rf: u32,
        bits: u32,
        bandwidth_hz: T,
        error: ModelError,
    },
}

impl<T: Scalar> fmt::Display for SkippedPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkippedPoint::IndivisibleRatio { n_ant, ratio } => write!(
                f,
                "n_ant = {n_ant} dropped: not divisible by the n_rf ratio {ratio}"
            ),
            SkippedPoint::DomainError {
                architecture,
                n_ant,
                n_rf,
                bits,
                bandwidth_hz,
                error,
            } => write!(
                f,
                "{architecture} n_ant={n_ant} n_rf={n_rf} bits={bits} bandwidth={bandwidth_hz} Hz dropped: {error}"
            ),
        }
    }
}

/// Everything a sweep produced: the evaluated points in contract order plus
/// the skip list.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRun<T: Scalar> {
    pub points: Vec<TradeoffPoint<T>>,
    pub skipped: Vec<SkippedPoint<T>>,
    /// The channel SNR the sweep ran with, if any (drives whether datasets
    /// built from this run carry an effective-SNR column).
    pub gamma_db: Option<T>,
}

fn cmp_scalar<T: Scalar>(a: T, b: T) -> std::cmp::Ordering {
    a.partial_cmp(&b)
        .expect("sweep quantities are finite and comparable")
}

/// Evaluates the full grid a spec describes. See the module docs for the
/// ordering and skip contracts.
pub fn run_sweep<T: Scalar>(
    spec: &SweepSpec<T>,
    table: &ComponentPowerTable<T>,
) -> Result<SweepRun<T>, ModelError> {
    table.validate()?;
    if spec.architectures.is_empty() {
        return Err(ModelError::EmptySweepAxis("architectures"));
    }
    if spec.n_ant_values.is_empty() {
        return Err(ModelError::EmptySweepAxis("n_ant_values"));
    }
    if spec.bits_range.is_empty() {
        return Err(ModelError::EmptySweepAxis("bits_range"));
    }
    if spec.bandwidth_values.is_empty() {
        return Err(ModelError::EmptySweepAxis("bandwidth_values"));
    }
    if spec.adc_models.is_empty() {
        return Err(ModelError::EmptySweepAxis("adc_models"));
    }
    for &bandwidth in &spec.bandwidth_values {
        // Nonpositive bandwidths are per-point domain errors below, but a
        // NaN would poison the axis sort, so it is rejected up front.
        if bandwidth.is_nan() {
            return Err(ModelError::InvalidBandwidth(format!("{bandwidth}")));
        }
    }
    let explicit_chain_counts = match &spec.n_rf_rule {
        NRfRule::Explicit(values) => {
            if values.is_empty() {
                return Err(ModelError::EmptySweepAxis("n_rf"));
            }
            let mut values = values.clone();
            values.sort_unstable();
            values.dedup();
            values
        }
        NRfRule::Ratio(0) => return Err(ModelError::ZeroRatio),
        NRfRule::Ratio(_) => Vec::new(),
    };
    let gamma_linear = match spec.gamma_db {
        Some(gamma_db) => {
            let linear = db_to_linear(gamma_db);
            if !gamma_db.is_finite() || !linear.is_finite() {
                return Err(ModelError::InvalidSnr(format!("{gamma_db} dB")));
            }
            Some(linear)
        }
        None => None,
    };

    // Axes are sorted copies so evaluation order — and therefore output
    // order — is independent of how the spec listed things.
    let mut architectures = spec.architectures.clone();
    architectures.sort_unstable();
    architectures.dedup();
    let mut adc_models = spec.adc_models.clone();
    adc_models.sort_by(|a, b| a.label().cmp(b.label()));
    let mut n_ant_values = spec.n_ant_values.clone();
    n_ant_values.sort_unstable();
    n_ant_values.dedup();
    let mut bandwidth_values = spec.bandwidth_values.clone();
    bandwidth_values.sort_by(|a, b| cmp_scalar(*a, *b));
    bandwidth_values.dedup_by(|a, b| a == b);

    let mut skipped = Vec::new();
    let n_ant_values: Vec<u32> = match spec.n_rf_rule {
        NRfRule::Ratio(ratio) => n_ant_values
            .into_iter()
            .filter(|&n_ant| {
                let divisible = n_ant % ratio == 0;
                if !divisible {
                    skipped.push(SkippedPoint::IndivisibleRatio { n_ant, ratio });
                }
                divisible
            })
            .collect(),
        NRfRule::Explicit(_) => n_ant_values,
    };

    let mut points = Vec::new();
    for &arch in &architectures {
        for adc in &adc_models {
            for &n_ant in &n_ant_values {
                let chain_counts: Vec<u32> = match arch {
                    // ABF/DBF normalize the chain count away; one point per cell.
                    Architecture::Abf | Architecture::Dbf => vec![1],
                    Architecture::Hbf => match spec.n_rf_rule {
                        NRfRule::Ratio(ratio) => vec![n_ant / ratio],
                        NRfRule::Explicit(_) => explicit_chain_counts.clone(),
                    },
                };
                for &bandwidth_hz in &bandwidth_values {
                    for bits in spec.bits_range.clone() {
                        for &n_rf in &chain_counts {
                            let skip = |error: ModelError| SkippedPoint::DomainError {
                                architecture: arch,
                                n_ant,
                                n_rf,
                                bits,
                                bandwidth_hz,
                                error,
                            };
                            let design =
                                match ReceiverDesign::new(arch, n_ant, n_rf, bits, bandwidth_hz) {
                                    Ok(design) => design,
                                    Err(error) => {
                                        skipped.push(skip(error));
                                        continue;
                                    }
                                };
                            let breakdown = match total_power(&design, table, adc) {
                                Ok(breakdown) => breakdown,
                                Err(error) => {
                                    skipped.push(skip(error));
                                    continue;
                                }
                            };
                            let gamma_ef_db = match gamma_linear {
                                Some(linear) => match effective_snr(linear, bits) {
                                    Ok(ef) => Some(linear_to_db(ef)),
                                    Err(error) => {
                                        skipped.push(skip(error));
                                        continue;
                                    }
                                },
                                None => None,
                            };
                            points.push(TradeoffPoint {
                                design,
                                adc: adc.clone(),
                                total_power_w: breakdown.total(),
                                gamma_ef_db,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(SweepRun {
        points,
        skipped,
        gamma_db: spec.gamma_db,
    })
}

// ---------------------------------------------------------------------------
// Pareto frontier
// ---------------------------------------------------------------------------

/// The undominated subset of a trade-off cloud, sorted by ascending power.
///
/// Along the sorted points the effective SNR is strictly increasing: no
/// member spends more power than another without buying more SNR, and exact
/// (power, SNR) duplicates collapse to one representative.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoSet<T: Scalar> {
    points: Vec<TradeoffPoint<T>>,
}

impl<T: Scalar> ParetoSet<T> {
    pub fn points(&self) -> &[TradeoffPoint<T>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<TradeoffPoint<T>> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Filters a trade-off cloud down to its Pareto frontier under (minimize
/// power, maximize effective SNR).
///
/// Ties are broken deterministically: at equal (power, SNR) the point with
/// fewer bits wins, then the alphabetically earlier architecture, then ADC
/// label, array size, bandwidth, and chain count. Errors if any point lacks
/// an effective SNR.
pub fn pareto_front<T: Scalar>(points: &[TradeoffPoint<T>]) -> Result<ParetoSet<T>, ModelError> {
    let mut entries = Vec::with_capacity(points.len());
    for point in points {
        if point.gamma_ef_db.is_none() {
            return Err(ModelError::MissingEffectiveSnr);
        }
        entries.push(point);
    }
    let gamma = |p: &TradeoffPoint<T>| p.gamma_ef_db.expect("checked above");
    entries.sort_by(|a, b| {
        cmp_scalar(a.total_power_w, b.total_power_w)
            .then_with(|| cmp_scalar(gamma(b), gamma(a)))
            .then_with(|| a.design.bits().cmp(&b.design.bits()))
            .then_with(|| a.design.arch().cmp(&b.design.arch()))
            .then_with(|| a.adc.label().cmp(b.adc.label()))
            .then_with(|| a.design.n_ant().cmp(&b.design.n_ant()))
            .then_with(|| cmp_scalar(a.design.bandwidth_hz(), b.design.bandwidth_hz()))
            .then_with(|| a.design.n_rf().cmp(&b.design.n_rf()))
    });
    let mut kept: Vec<TradeoffPoint<T>> = Vec::new();
    let mut best_gamma: Option<T> = None;
    for point in entries {
        let g = gamma(point);
        if best_gamma.map_or(true, |best| g > best) {
            kept.push(point.clone());
            best_gamma = Some(g);
        }
    }
    Ok(ParetoSet { points: kept })
}

// ---------------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------------

/// Flattens a sweep into a plot-ready table. Columns are `architecture,
/// adc, n_ant, n_rf, bandwidth_hz, bits, [gamma_ef_db,] total_power_w`; the
/// effective-SNR column appears exactly when the sweep ran with a channel
/// SNR.
pub fn tradeoff_dataset<T: Scalar>(run: &SweepRun<T>) -> Dataset<T> {
    let with_gamma = run.gamma_db.is_some();
    let mut columns = vec!["architecture", "adc", "n_ant", "n_rf", "bandwidth_hz", "bits"];
    if with_gamma {
        columns.push("gamma_ef_db");
    }
    columns.push("total_power_w");
    let mut dataset = Dataset::new(&columns);
    for point in &run.points {
        let mut row = vec![
            Value::Text(point.design.arch().to_string()),
            Value::Text(point.adc.label().to_owned()),
            Value::Int(i64::from(point.design.n_ant())),
            Value::Int(i64::from(point.design.n_rf())),
            Value::Num(point.design.bandwidth_hz()),
            Value::Int(i64::from(point.design.bits())),
        ];
        if with_gamma {
            row.push(match point.gamma_ef_db {
                Some(gamma) => Value::Num(gamma),
                None => Value::Empty,
            });
        }
        row.push(Value::Num(point.total_power_w));
        dataset.push_row(row);
    }
    dataset
}

/// The seven predefined reference datasets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Total power vs resolution at 100 MHz, all architectures.
    PtotVsBits100MHz,
    /// Total power vs resolution at 1 GHz, all architectures.
    PtotVsBits1GHz,
    /// Break-even resolution vs bandwidth, both reference ADCs.
    BitsStarVsBandwidth,
    /// Break-even bandwidth vs resolution, both reference ADCs.
    BandwidthStarVsBits,
    /// Effective SNR vs resolution across channel SNRs.
    SnrEffVsBits,
    /// Power vs effective SNR trade-off, low-power ADC.
    PowerVsSnrEffLpadc,
    /// Power vs effective SNR trade-off, high-performance ADC.
    PowerVsSnrEffHpadc,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::PtotVsBits100MHz,
        FigureId::PtotVsBits1GHz,
        FigureId::BitsStarVsBandwidth,
        FigureId::BandwidthStarVsBits,
        FigureId::SnrEffVsBits,
        FigureId::PowerVsSnrEffLpadc,
        FigureId::PowerVsSnrEffHpadc,
    ];

    /// Stable text id, as accepted on the command line.
    pub fn id(self) -> &'static str {
        match self {
            FigureId::PtotVsBits100MHz => "ptot-vs-bits-100MHz",
            FigureId::PtotVsBits1GHz => "ptot-vs-bits-1GHz",
            FigureId::BitsStarVsBandwidth => "bstar-vs-bandwidth",
            FigureId::BandwidthStarVsBits => "bwstar-vs-bits",
            FigureId::SnrEffVsBits => "snr-eff-vs-bits",
            FigureId::PowerVsSnrEffLpadc => "power-vs-snreff-lpadc",
            FigureId::PowerVsSnrEffHpadc => "power-vs-snreff-hpadc",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FigureId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|figure| figure.id() == s)
            .ok_or_else(|| ModelError::UnknownFigureId(s.to_owned()))
    }
}

/// Axis overrides for [`figure_dataset`]. Every field defaults to `None`,
/// meaning "use the figure's documented default"; fields irrelevant to a
/// figure are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureOverrides<T: Scalar> {
    pub n_ant_values: Option<Vec<u32>>,
    pub n_rf_rule: Option<NRfRule>,
    pub bits_range: Option<RangeInclusive<u32>>,
    pub bandwidth_values: Option<Vec<T>>,
    pub adc_models: Option<Vec<AdcModel<T>>>,
    /// Channel SNR for the power-vs-SNR trade-off figures.
    pub gamma_db: Option<T>,
    /// Channel SNR grid for the effective-SNR figure.
    pub gamma_db_values: Option<Vec<T>>,
}

impl<T: Scalar> Default for FigureOverrides<T> {
    fn default() -> Self {
        Self {
            n_ant_values: None,
            n_rf_rule: None,
            bits_range: None,
            bandwidth_values: None,
            adc_models: None,
            gamma_db: None,
            gamma_db_values: None,
        }
    }
}

/// Builds the dataset behind one predefined figure.
///
/// Defaults per figure:
///
/// * `ptot-vs-bits-*`: all architectures, `n_ant ∈ {16, 64}`, `n_rf = 4`,
///   `bits 1..=10`, low-power ADC, at 100 MHz and 1 GHz respectively.
/// * `bstar-vs-bandwidth`: `n_ant ∈ {64, 128, 256}` with `n_rf = n_ant/8`,
///   bandwidths 100 MHz to 2 GHz in 100 MHz steps, both reference ADCs.
/// * `bwstar-vs-bits`: same arrays and ADCs, `bits 1..=10`.
/// * `snr-eff-vs-bits`: channel SNR ∈ {−10, 0, 10, 20} dB, `bits 1..=10`.
/// * `power-vs-snreff-{lpadc,hpadc}`: all architectures, `n_ant = 16`,
///   `n_rf = 4`, 100 MHz and 1 GHz, channel SNR 10 dB, `bits 1..=6` for the
///   low-power ADC and `1..=5` for the high-performance one.
///
/// The break-even figures keep array sizes the ratio rule cannot divide out
/// of the table (there is nothing to plot for them); break-evens that do not
/// exist render as empty cells.
pub fn figure_dataset<T: Scalar>(
    figure: FigureId,
    table: &ComponentPowerTable<T>,
    overrides: &FigureOverrides<T>,
) -> Result<Dataset<T>, ModelError> {
    match figure {
        FigureId::PtotVsBits100MHz => ptot_dataset(table, overrides, 1e8),
        FigureId::PtotVsBits1GHz => ptot_dataset(table, overrides, 1e9),
        FigureId::BitsStarVsBandwidth => bits_star_dataset(table, overrides),
        FigureId::BandwidthStarVsBits => bandwidth_star_dataset(table, overrides),
        FigureId::SnrEffVsBits => snr_eff_dataset(overrides),
        FigureId::PowerVsSnrEffLpadc => {
            trade_off_dataset(table, overrides, AdcModel::lpadc(), 1..=6)
        }
        FigureId::PowerVsSnrEffHpadc => {
            trade_off_dataset(table, overrides, AdcModel::hpadc(), 1..=5)
        }
    }
}

fn ptot_dataset<T: Scalar>(
    table: &ComponentPowerTable<T>,
    overrides: &FigureOverrides<T>,
    default_bandwidth_hz: f64,
) -> Result<Dataset<T>, ModelError> {
    let spec = SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: overrides.n_ant_values.clone().unwrap_or_else(|| vec![16, 64]),
        n_rf_rule: overrides
            .n_rf_rule
            .clone()
            .unwrap_or(NRfRule::Explicit(vec![4])),
        bits_range: overrides.bits_range.clone().unwrap_or(1..=10),
        bandwidth_values: overrides
            .bandwidth_values
            .clone()
            .unwrap_or_else(|| vec![lit(default_bandwidth_hz)]),
        adc_models: overrides
            .adc_models
            .clone()
            .unwrap_or_else(|| vec![AdcModel::lpadc()]),
        gamma_db: None,
    };
    Ok(tradeoff_dataset(&run_sweep(&spec, table)?))
}

fn trade_off_dataset<T: Scalar>(
    table: &ComponentPowerTable<T>,
    overrides: &FigureOverrides<T>,
    default_adc: AdcModel<T>,
    default_bits: RangeInclusive<u32>,
) -> Result<Dataset<T>, ModelError> {
    let spec = SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: overrides.n_ant_values.clone().unwrap_or_else(|| vec![16]),
        n_rf_rule: overrides
            .n_rf_rule
            .clone()
            .unwrap_or(NRfRule::Explicit(vec![4])),
        bits_range: overrides.bits_range.clone().unwrap_or(default_bits),
        bandwidth_values: overrides
            .bandwidth_values
            .clone()
            .unwrap_or_else(|| vec![lit(1e8), lit(1e9)]),
        adc_models: overrides
            .adc_models
            .clone()
            .unwrap_or_else(|| vec![default_adc]),
        gamma_db: Some(overrides.gamma_db.unwrap_or_else(|| lit(10.0))),
    };
    Ok(tradeoff_dataset(&run_sweep(&spec, table)?))
}

// Default axes shared by the two break-even figures.
fn break_even_arrays<T: Scalar>(
    overrides: &FigureOverrides<T>,
) -> (Vec<u32>, NRfRule, Vec<AdcModel<T>>) {
    (
        overrides
            .n_ant_values
            .clone()
            .unwrap_or_else(|| vec![64, 128, 256]),
        overrides.n_rf_rule.clone().unwrap_or(NRfRule::Ratio(8)),
        overrides
            .adc_models
            .clone()
            .unwrap_or_else(|| vec![AdcModel::lpadc(), AdcModel::hpadc()]),
    )
}

// Chain counts for one array under a rule; `None` means the ratio does not
// divide this array size.
fn chain_counts_for(rule: &NRfRule, n_ant: u32) -> Option<Vec<u32>> {
    match rule {
        NRfRule::Explicit(values) => Some(values.clone()),
        NRfRule::Ratio(ratio) => {
            if *ratio == 0 || n_ant % ratio != 0 {
                None
            } else {
                Some(vec![n_ant / ratio])
            }
        }
    }
}

fn bits_star_dataset<T: Scalar>(
    table: &ComponentPowerTable<T>,
    overrides: &FigureOverrides<T>,
) -> Result<Dataset<T>, ModelError> {
    let (n_ant_values, rule, adc_models) = break_even_arrays(overrides);
    let bandwidths: Vec<T> = overrides
        .bandwidth_values
        .clone()
        .unwrap_or_else(|| (1..=20).map(|step| lit(step as f64 * 1e8)).collect());
    let mut dataset = Dataset::new(&["adc", "n_ant", "n_rf", "bandwidth_hz", "bits_star"]);
    for adc in &adc_models {
        for &n_ant in &n_ant_values {
            let Some(chain_counts) = chain_counts_for(&rule, n_ant) else {
                continue;
            };
            for n_rf in chain_counts {
                let query = CrossoverQuery::new(n_ant, n_rf, table.clone(), adc.clone())?;
                for &bandwidth_hz in &bandwidths {
                    let result = bits_star(&query, bandwidth_hz)?;
                    dataset.push_row(vec![
                        Value::Text(adc.label().to_owned()),
                        Value::Int(i64::from(n_ant)),
                        Value::Int(i64::from(n_rf)),
                        Value::Num(bandwidth_hz),
                        match result.bits() {
                            Some(bits) => Value::Int(i64::from(bits)),
                            None => Value::Empty,
                        },
                    ]);
                }
            }
        }
    }
    Ok(dataset)
}

fn bandwidth_star_dataset<T: Scalar>(
    table: &ComponentPowerTable<T>,
    overrides: &FigureOverrides<T>,
) -> Result<Dataset<T>, ModelError> {
    let (n_ant_values, rule, adc_models) = break_even_arrays(overrides);
    let bits_range = overrides.bits_range.clone().unwrap_or(1..=10);
    let mut dataset = Dataset::new(&["adc", "n_ant", "n_rf", "bits", "bandwidth_star_hz"]);
    for adc in &adc_models {
        for &n_ant in &n_ant_values {
            let Some(chain_counts) = chain_counts_for(&rule, n_ant) else {
                continue;
            };
            for n_rf in chain_counts {
                let query = CrossoverQuery::new(n_ant, n_rf, table.clone(), adc.clone())?;
                for bits in bits_range.clone() {
                    let result = bandwidth_star(&query, bits)?;
                    dataset.push_row(vec![
                        Value::Text(adc.label().to_owned()),
                        Value::Int(i64::from(n_ant)),
                        Value::Int(i64::from(n_rf)),
                        Value::Int(i64::from(bits)),
                        match result.bandwidth_hz() {
                            Some(bandwidth) => Value::Num(bandwidth),
                            None => Value::Empty,
                        },
                    ]);
                }
            }
        }
    }
    Ok(dataset)
}

fn snr_eff_dataset<T: Scalar>(overrides: &FigureOverrides<T>) -> Result<Dataset<T>, ModelError> {
    let gamma_db_values: Vec<T> = overrides
        .gamma_db_values
        .clone()
        .unwrap_or_else(|| vec![lit(-10.0), lit(0.0), lit(10.0), lit(20.0)]);
    let bits_range = overrides.bits_range.clone().unwrap_or(1..=10);
    let mut dataset = Dataset::new(&["gamma_db", "bits", "gamma_ef_db"]);
    for &gamma_db in &gamma_db_values {
        let linear = db_to_linear(gamma_db);
        if !gamma_db.is_finite() || !linear.is_finite() {
            return Err(ModelError::InvalidSnr(format!("{gamma_db} dB")));
        }
        for bits in bits_range.clone() {
            let effective = effective_snr(linear, bits)?;
            dataset.push_row(vec![
                Value::Num(gamma_db),
                Value::Int(i64::from(bits)),
                Value::Num(linear_to_db(effective)),
            ]);
        }
    }
    Ok(dataset)
}
