//! Error type shared by all modeling modules.

use thiserror::Error;

/// Everything that can go wrong while building designs or evaluating models.
///
/// Offending numeric values are carried as preformatted strings so the error
/// type stays independent of the scalar type parameter (and therefore `Eq`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    /// ADC resolution outside the supported range of 1 through 20 bits.
    #[error("ADC resolution must be between 1 and 20 bits, got {0}")]
    BitsOutOfRange(u32),

    /// Bandwidth that is zero, negative, or not finite.
    #[error("bandwidth must be positive and finite, got {0} Hz")]
    InvalidBandwidth(String),

    /// A component power entry that is negative or not finite.
    #[error("component power `{name}` must be finite and non-negative, got {value} W")]
    InvalidComponentPower { name: &'static str, value: String },

    /// ADC energy per conversion step that is zero, negative, or not finite.
    #[error("ADC energy per conversion step must be positive and finite, got {0} J")]
    InvalidEnergyPerStep(String),

    /// An array must have at least one antenna.
    #[error("antenna count must be at least 1")]
    ZeroAntennas,

    /// A chain count of zero never describes a working receiver.
    #[error("RF-chain count must be at least 1")]
    ZeroChains,

    /// Hybrid receivers cannot drive more chains than they have antennas.
    #[error("hybrid designs require n_rf <= n_ant, got n_rf = {n_rf} with n_ant = {n_ant}")]
    TooManyChains { n_rf: u32, n_ant: u32 },

    /// The break-even formulas divide by (n_ant - n_rf) and are only
    /// meaningful while the hybrid receiver actually has fewer chains.
    #[error("break-even queries are valid only for n_rf < n_ant, got n_rf = {n_rf}, n_ant = {n_ant}")]
    NotFewerChains { n_rf: u32, n_ant: u32 },

    /// A linear SNR that is negative or not finite.
    #[error("SNR must be non-negative and finite, got {0}")]
    InvalidSnr(String),

    /// A loss tolerance that is zero, negative, or not finite.
    #[error("SNR loss tolerance must be positive and finite, got {0} dB")]
    InvalidTolerance(String),

    /// No resolution in the supported range meets the requested loss bound.
    #[error("no resolution up to 20 bits keeps the SNR loss within {0} dB")]
    ToleranceNotMet(String),

    /// A sweep axis was left empty.
    #[error("sweep axis `{0}` must not be empty")]
    EmptySweepAxis(&'static str),

    /// The ratio rule n_rf = n_ant / k needs a positive divisor.
    #[error("n_rf ratio divisor must be at least 1")]
    ZeroRatio,

    /// Pareto frontiers trade power against effective SNR, so every point
    /// must carry one.
    #[error("Pareto frontier needs an effective SNR on every point; run the sweep with a channel SNR")]
    MissingEffectiveSnr,

    /// An architecture name other than abf, hbf, or dbf.
    #[error("unknown architecture `{0}`; expected one of: abf, hbf, dbf")]
    UnknownArchitecture(String),

    /// A figure id that is not one of the predefined datasets.
    #[error("unknown figure id `{0}`; known ids: ptot-vs-bits-100MHz, ptot-vs-bits-1GHz, \
             bstar-vs-bandwidth, bwstar-vs-bits, snr-eff-vs-bits, power-vs-snreff-lpadc, \
             power-vs-snreff-hpadc")]
    UnknownFigureId(String),
}
