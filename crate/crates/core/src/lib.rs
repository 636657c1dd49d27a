//! Power modeling for analog, hybrid, and fully digital mmWave receiver
//! front ends.
//!
//! The crate answers one family of questions: given an antenna count, a
//! chain count, an ADC resolution, and a bandwidth, how much power does each
//! beamforming architecture burn — and where do the architectures trade
//! places? It provides:
//!
//! * additive component power models for the three architectures, with ADC
//!   power scaling as `c · B · 2^b` ([`power_model`]);
//! * closed-form digital-vs-hybrid break-even resolution and bandwidth,
//!   their large-array asymptotes, and a brute-force cross-check
//!   ([`crossover`]);
//! * the additive-noise quantization model mapping channel SNR to effective
//!   SNR at a given resolution, and the smallest resolution meeting an SNR
//!   loss budget ([`quantization`]);
//! * a deterministic sweep engine with Pareto filtering and the reference
//!   plot datasets ([`sweep`]).
//!
//! Everything numeric is generic over the [`scalar::Scalar`] float type;
//! the crate root re-exports `f64` aliases under the same names, so
//! `bfpower_core::ComponentPowerTable` is `ComponentPowerTable<f64>` while
//! `power_model::ComponentPowerTable<f32>` remains available for callers
//! that want single precision.

pub mod crossover;
pub mod dataset;
mod error;
pub mod power_model;
pub mod quantization;
pub mod scalar;
pub mod sweep;

pub use error::ModelError;
pub use power_model::{Architecture, MAX_BITS};
pub use sweep::{FigureId, NRfRule};

/// `f64` alias for [`power_model::ComponentPowerTable`].
pub type ComponentPowerTable = power_model::ComponentPowerTable<f64>;
/// `f64` alias for [`power_model::AdcModel`].
pub type AdcModel = power_model::AdcModel<f64>;
/// `f64` alias for [`power_model::ReceiverDesign`].
pub type ReceiverDesign = power_model::ReceiverDesign<f64>;
/// `f64` alias for [`power_model::PowerBreakdown`].
pub type PowerBreakdown = power_model::PowerBreakdown<f64>;
/// `f64` alias for [`quantization::EtaTable`].
pub type EtaTable = quantization::EtaTable<f64>;
/// `f64` alias for [`quantization::SnrPoint`].
pub type SnrPoint = quantization::SnrPoint<f64>;
/// `f64` alias for [`crossover::CrossoverQuery`].
pub type CrossoverQuery = crossover::CrossoverQuery<f64>;
/// `f64` alias for [`crossover::CrossoverResult`].
pub type CrossoverResult = crossover::CrossoverResult<f64>;
/// `f64` alias for [`crossover::CrossoverValue`].
pub type CrossoverValue = crossover::CrossoverValue<f64>;
/// `f64` alias for [`sweep::SweepSpec`].
pub type SweepSpec = sweep::SweepSpec<f64>;
/// `f64` alias for [`sweep::SweepRun`].
pub type SweepRun = sweep::SweepRun<f64>;
/// `f64` alias for [`sweep::TradeoffPoint`].
pub type TradeoffPoint = sweep::TradeoffPoint<f64>;
/// `f64` alias for [`sweep::SkippedPoint`].
pub type SkippedPoint = sweep::SkippedPoint<f64>;
/// `f64` alias for [`sweep::ParetoSet`].
pub type ParetoSet = sweep::ParetoSet<f64>;
/// `f64` alias for [`sweep::FigureOverrides`].
pub type FigureOverrides = sweep::FigureOverrides<f64>;
/// `f64` alias for [`dataset::Dataset`].
pub type Dataset = dataset::Dataset<f64>;
/// `f64` alias for [`dataset::Value`].
pub type Value = dataset::Value<f64>;
