//! Receiver front-end power model: per-component draw and the total power of
//! analog, hybrid, and fully digital beamforming receivers.
//!
//! The model is additive over components. Every receiver runs one low-noise
//! amplifier per antenna; the architectures differ in where combining happens
//! and therefore in how many phase shifters, RF chains (mixer + local
//! oscillator + low-pass filter + baseband amplifier), and ADC pairs they
//! carry:
//!
//! * **ABF** phase-shifts and combines in the RF domain, so a single RF chain
//!   and one I/Q ADC pair serve the whole array;
//! * **HBF** splits each antenna toward `n_rf` chains, each with its own
//!   phase-shifter bank, combiner, RF chain, and ADC pair;
//! * **DBF** gives every antenna its own RF chain and ADC pair and combines
//!   digitally.
//!
//! ADC power scales as `c · B · 2^b` — energy per conversion step, times
//! bandwidth, times quantization levels — which is what eventually prices the
//! digital architecture out at high resolution or bandwidth.

use std::fmt;
use std::str::FromStr;

use crate::error::ModelError;
use crate::scalar::{lit, Scalar};

/// Largest supported ADC resolution in bits. Far beyond any physical ADC,
/// and small enough that 2^bits stays exactly representable.
pub const MAX_BITS: u32 = 20;

// ---------------------------------------------------------------------------
// Component constants
// ---------------------------------------------------------------------------

/// Per-component power draw in watts.
///
/// Fields are public on purpose: the table is plain data, and sweeps are
/// expected to perturb individual entries. [`Default`] yields the reference
/// mmWave component values used throughout the documentation: a 39 mW LNA,
/// 19.5 mW phase shifter, 19.5 mW splitter and combiner, and a 40.8 mW RF
/// chain (16.8 mW mixer, 5 mW local oscillator, 14 mW low-pass filter, 5 mW
/// baseband amplifier).
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPowerTable<T: Scalar> {
    /// Low-noise amplifier, one per antenna.
    pub p_lna: T,
    /// A single phase shifter.
    pub p_ps: T,
    /// A combiner feeding one RF chain.
    pub p_combiner: T,
    /// A per-antenna splitter (hybrid arrays only).
    pub p_splitter: T,
    /// Downconversion mixer, one per RF chain.
    pub p_mixer: T,
    /// Local oscillator, one per RF chain.
    pub p_lo: T,
    /// Low-pass filter, one per RF chain.
    pub p_lpf: T,
    /// Baseband amplifier, one per RF chain.
    pub p_bb_amp: T,
}

impl<T: Scalar> Default for ComponentPowerTable<T> {
    fn default() -> Self {
        Self {
            p_lna: lit(0.039),
            p_ps: lit(0.0195),
            p_combiner: lit(0.0195),
            p_splitter: lit(0.0195),
            p_mixer: lit(0.0168),
            p_lo: lit(0.005),
            p_lpf: lit(0.014),
            p_bb_amp: lit(0.005),
        }
    }
}

impl<T: Scalar> ComponentPowerTable<T> {
    /// Checks that every entry is finite and non-negative.
    pub fn validate(&self) -> Result<(), ModelError> {
        let fields: [(&'static str, T); 8] = [
            ("p_lna", self.p_lna),
            ("p_ps", self.p_ps),
            ("p_combiner", self.p_combiner),
            ("p_splitter", self.p_splitter),
            ("p_mixer", self.p_mixer),
            ("p_lo", self.p_lo),
            ("p_lpf", self.p_lpf),
            ("p_bb_amp", self.p_bb_amp),
        ];
        for (name, value) in fields {
            if !value.is_finite() || value < T::zero() {
                return Err(ModelError::InvalidComponentPower {
                    name,
                    value: format!("{value}"),
                });
            }
        }
        Ok(())
    }
}

/// Power of one complete RF chain: mixer + local oscillator + low-pass
/// filter + baseband amplifier.
pub fn rf_chain_power<T: Scalar>(table: &ComponentPowerTable<T>) -> T {
    table.p_mixer + table.p_lo + table.p_lpf + table.p_bb_amp
}

// ---------------------------------------------------------------------------
// ADC model
// ---------------------------------------------------------------------------

/// An ADC profile: a label plus the energy spent per conversion step.
///
/// Two reference profiles ship with the crate: [`AdcModel::lpadc`], a
/// low-power design at 494 fJ per step, and [`AdcModel::hpadc`], a
/// high-performance design at 12.5 pJ per step.
#[derive(Debug, Clone, PartialEq)]
pub struct AdcModel<T: Scalar> {
    label: String,
    energy_per_step: T,
}

impl<T: Scalar> AdcModel<T> {
    /// Low-power reference ADC: c = 494 fJ per conversion step.
    pub fn lpadc() -> Self {
        Self {
            label: "LPADC".to_owned(),
            energy_per_step: lit(494e-15),
        }
    }

    /// High-performance reference ADC: c = 12.5 pJ per conversion step.
    pub fn hpadc() -> Self {
        Self {
            label: "HPADC".to_owned(),
            energy_per_step: lit(12.5e-12),
        }
    }

    /// A caller-defined profile. The energy per step must be positive and
    /// finite.
    pub fn custom(label: impl Into<String>, energy_per_step: T) -> Result<Self, ModelError> {
        if !energy_per_step.is_finite() || energy_per_step <= T::zero() {
            return Err(ModelError::InvalidEnergyPerStep(format!("{energy_per_step}")));
        }
        Ok(Self {
            label: label.into(),
            energy_per_step,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Energy per conversion step in joules.
    pub fn energy_per_step(&self) -> T {
        self.energy_per_step
    }
}

/// ADC power at Nyquist sampling: `c · bandwidth · 2^bits` watts.
pub fn adc_power<T: Scalar>(
    adc: &AdcModel<T>,
    bandwidth_hz: T,
    bits: u32,
) -> Result<T, ModelError> {
    check_bits(bits)?;
    check_bandwidth(bandwidth_hz)?;
    let levels = T::from_u64(1u64 << bits).expect("2^bits fits the scalar type for bits <= 20");
    Ok(adc.energy_per_step * bandwidth_hz * levels)
}

fn check_bits(bits: u32) -> Result<(), ModelError> {
    if bits == 0 || bits > MAX_BITS {
        return Err(ModelError::BitsOutOfRange(bits));
    }
    Ok(())
}

fn check_bandwidth<T: Scalar>(bandwidth_hz: T) -> Result<(), ModelError> {
    if !bandwidth_hz.is_finite() || bandwidth_hz <= T::zero() {
        return Err(ModelError::InvalidBandwidth(format!("{bandwidth_hz}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Receiver designs
// ---------------------------------------------------------------------------

/// The three beamforming architectures.
///
/// Variants are declared in the lexicographic order of their names; sweep
/// output ordering relies on the derived `Ord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Architecture {
    /// Analog beamforming: one RF chain behind an RF-domain combiner.
    Abf,
    /// Fully digital beamforming: one RF chain per antenna.
    Dbf,
    /// Hybrid beamforming: `n_rf` chains behind per-chain analog combining.
    Hbf,
}

impl Architecture {
    /// All variants, in sort order.
    pub const ALL: [Architecture; 3] = [Architecture::Abf, Architecture::Dbf, Architecture::Hbf];
}

impl fmt::Display for Architecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Architecture::Abf => "ABF",
            Architecture::Dbf => "DBF",
            Architecture::Hbf => "HBF",
        })
    }
}

impl FromStr for Architecture {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "abf" => Ok(Architecture::Abf),
            "dbf" => Ok(Architecture::Dbf),
            "hbf" => Ok(Architecture::Hbf),
            _ => Err(ModelError::UnknownArchitecture(s.to_owned())),
        }
    }
}

/// One fully specified receiver design point.
///
/// Construction validates everything once, so evaluation never re-checks:
/// `n_ant >= 1`, `1 <= bits <= 20`, positive finite bandwidth, and for
/// hybrid designs `1 <= n_rf <= n_ant`. ABF and DBF ignore the chain count
/// and normalize it to 1, which lets sweeps vary the architecture without
/// per-architecture plumbing.
#[derive(Debug, Clone, PartialEq)]
pub struct ReceiverDesign<T: Scalar> {
    arch: Architecture,
    n_ant: u32,
    n_rf: u32,
    bits: u32,
    bandwidth_hz: T,
}

impl<T: Scalar> ReceiverDesign<T> {
    pub fn new(
        arch: Architecture,
        n_ant: u32,
        n_rf: u32,
        bits: u32,
        bandwidth_hz: T,
    ) -> Result<Self, ModelError> {
        if n_ant == 0 {
            return Err(ModelError::ZeroAntennas);
        }
        check_bits(bits)?;
        check_bandwidth(bandwidth_hz)?;
        let n_rf = match arch {
            Architecture::Abf | Architecture::Dbf => 1,
            Architecture::Hbf => {
                if n_rf == 0 {
                    return Err(ModelError::ZeroChains);
                }
                if n_rf > n_ant {
                    return Err(ModelError::TooManyChains { n_rf, n_ant });
                }
                n_rf
            }
        };
        Ok(Self {
            arch,
            n_ant,
            n_rf,
            bits,
            bandwidth_hz,
        })
    }

    /// Analog beamforming design (single RF chain).
    pub fn abf(n_ant: u32, bits: u32, bandwidth_hz: T) -> Result<Self, ModelError> {
        Self::new(Architecture::Abf, n_ant, 1, bits, bandwidth_hz)
    }

    /// Hybrid beamforming design with `n_rf` chains.
    pub fn hbf(n_ant: u32, n_rf: u32, bits: u32, bandwidth_hz: T) -> Result<Self, ModelError> {
        Self::new(Architecture::Hbf, n_ant, n_rf, bits, bandwidth_hz)
    }

    /// Fully digital design (one RF chain per antenna).
    pub fn dbf(n_ant: u32, bits: u32, bandwidth_hz: T) -> Result<Self, ModelError> {
        Self::new(Architecture::Dbf, n_ant, 1, bits, bandwidth_hz)
    }

    pub fn arch(&self) -> Architecture {
        self.arch
    }

    pub fn n_ant(&self) -> u32 {
        self.n_ant
    }

    /// Chain count. Always 1 for ABF and DBF designs.
    pub fn n_rf(&self) -> u32 {
        self.n_rf
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn bandwidth_hz(&self) -> T {
        self.bandwidth_hz
    }

    /// Quantization levels 2^bits, derived rather than stored.
    pub fn quantization_levels(&self) -> u64 {
        1u64 << self.bits
    }
}

// ---------------------------------------------------------------------------
// Total power
// ---------------------------------------------------------------------------

/// Total receiver power with a per-group decomposition.
///
/// Groups appear in the order their terms appear in the architecture's power
/// expression, and the total is the sum of the groups, so the breakdown is
/// additive by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerBreakdown<T: Scalar> {
    total: T,
    per_component: Vec<(String, T)>,
}

impl<T: Scalar> PowerBreakdown<T> {
    fn from_groups(groups: Vec<(&'static str, T)>) -> Self {
        let mut total = T::zero();
        let mut per_component = Vec::with_capacity(groups.len());
        for (label, watts) in groups {
            total = total + watts;
            per_component.push((label.to_owned(), watts));
        }
        Self {
            total,
            per_component,
        }
    }

    /// Total power in watts.
    pub fn total(&self) -> T {
        self.total
    }

    /// `(label, watts)` groups in expression order.
    pub fn per_component(&self) -> &[(String, T)] {
        &self.per_component
    }

    /// Watts drawn by one labeled group, if the architecture has it.
    pub fn component(&self, label: &str) -> Option<T> {
        self.per_component
            .iter()
            .find(|(name, _)| name == label)
            .map(|&(_, watts)| watts)
    }
}

/// Total power of a receiver design, grouped by component.
///
/// With `n = n_ant`, `m = n_rf`, `p_rf = rf_chain_power(table)`, and
/// `p_adc = adc_power(adc, bandwidth, bits)`:
///
/// * ABF: `n·(p_lna + p_ps) + p_rf + p_combiner + 2·p_adc`
/// * HBF: `n·(p_lna + p_splitter + m·p_ps) + m·(p_rf + p_combiner + 2·p_adc)`
/// * DBF: `n·(p_lna + p_rf + 2·p_adc)`
///
/// The factor 2 is the I/Q ADC pair behind each chain.
pub fn total_power<T: Scalar>(
    design: &ReceiverDesign<T>,
    table: &ComponentPowerTable<T>,
    adc: &AdcModel<T>,
) -> Result<PowerBreakdown<T>, ModelError> {
    table.validate()?;
    let p_adc = adc_power(adc, design.bandwidth_hz, design.bits)?;
    let n = T::from_u32(design.n_ant).expect("antenna count fits the scalar type");
    let two = lit::<T>(2.0);
    let groups = match design.arch {
        Architecture::Abf => vec![
            ("lna", n * table.p_lna),
            ("phase_shifter", n * table.p_ps),
            ("rf_chain", rf_chain_power(table)),
            ("combiner", table.p_combiner),
            ("adc", two * p_adc),
        ],
        Architecture::Hbf => {
            let m = T::from_u32(design.n_rf).expect("chain count fits the scalar type");
            vec![
                ("lna", n * table.p_lna),
                ("splitter", n * table.p_splitter),
                ("phase_shifter", n * m * table.p_ps),
                ("rf_chain", m * rf_chain_power(table)),
                ("combiner", m * table.p_combiner),
                ("adc", m * two * p_adc),
            ]
        }
        Architecture::Dbf => vec![
            ("lna", n * table.p_lna),
            ("rf_chain", n * rf_chain_power(table)),
            ("adc", n * two * p_adc),
        ],
    };
    Ok(PowerBreakdown::from_groups(groups))
}
