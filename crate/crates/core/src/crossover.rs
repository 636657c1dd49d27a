//! Break-even points between fully digital and hybrid receivers.
//!
//! Setting the DBF and HBF total-power expressions equal and solving for the
//! ADC term gives the quantization-level count R at which the two draw the
//! same power:
//!
//! ```text
//! R = (n_ant·(n_rf·p_ps + p_splitter) + n_rf·p_combiner − (n_ant − n_rf)·p_rf)
//!     ────────────────────────────────────────────────────────────────────────
//!                      2·(n_ant − n_rf)·c·bandwidth
//! ```
//!
//! The digital receiver stays within the hybrid's power for every resolution
//! `b ≤ b* = ⌊log2 R⌋`, and — at fixed resolution — for every bandwidth up to
//! the analogous `B*`. Both formulas require `n_rf < n_ant`; ties count in
//! favor of the digital architecture.
//!
//! As the array grows with the chain count fixed, R falls toward the limit
//! `(n_rf·p_ps + p_splitter − p_rf) / (2·c·bandwidth)`, which is therefore a
//! lower bound on every finite-array break-even point.
//!
//! [`brute_force_bits_star`] re-derives b* by direct evaluation of the two
//! power totals and exists purely as an independent cross-check on the closed
//! form. It scans the physical 1..=20 resolution range, so the two agree
//! wherever the closed-form answer lands inside that range; beyond it the
//! oracle saturates at 20 while the closed form keeps counting.

use crate::error::ModelError;
use crate::power_model::{rf_chain_power, AdcModel, ComponentPowerTable, ReceiverDesign, MAX_BITS};
use crate::scalar::{lit, pow2, Scalar};

/// A validated DBF-vs-HBF comparison setup: array size, chain count, and the
/// component/ADC models. The varying axis (bandwidth or resolution) is passed
/// to the query functions.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverQuery<T: Scalar> {
    n_ant: u32,
    n_rf: u32,
    table: ComponentPowerTable<T>,
    adc: AdcModel<T>,
}

impl<T: Scalar> CrossoverQuery<T> {
    /// Builds a query, enforcing `1 <= n_rf < n_ant` and a valid table.
    pub fn new(
        n_ant: u32,
        n_rf: u32,
        table: ComponentPowerTable<T>,
        adc: AdcModel<T>,
    ) -> Result<Self, ModelError> {
        if n_rf == 0 {
            return Err(ModelError::ZeroChains);
        }
        if n_rf >= n_ant {
            return Err(ModelError::NotFewerChains { n_rf, n_ant });
        }
        table.validate()?;
        Ok(Self {
            n_ant,
            n_rf,
            table,
            adc,
        })
    }

    pub fn n_ant(&self) -> u32 {
        self.n_ant
    }

    pub fn n_rf(&self) -> u32 {
        self.n_rf
    }

    pub fn table(&self) -> &ComponentPowerTable<T> {
        &self.table
    }

    pub fn adc(&self) -> &AdcModel<T> {
        &self.adc
    }
}

/// The quantity a break-even query solves for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CrossoverValue<T: Scalar> {
    /// Largest ADC resolution in bits.
    Bits(u32),
    /// Largest bandwidth in hertz (real-valued; bandwidth is continuous).
    BandwidthHz(T),
}

/// Outcome of a break-even query.
///
/// `value` is absent when no physical break-even exists (for resolution
/// queries: when even a 1-bit ADC already prices the digital receiver out,
/// i.e. R < 2). Resolution queries solved in closed form also expose the
/// unfloored level count R via [`raw_levels`](CrossoverResult::raw_levels);
/// the brute-force oracle has no closed form and leaves it empty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverResult<T: Scalar> {
    value: Option<CrossoverValue<T>>,
    raw_levels: Option<T>,
}

impl<T: Scalar> CrossoverResult<T> {
    pub fn exists(&self) -> bool {
        self.value.is_some()
    }

    /// Break-even resolution, if this was a resolution query and one exists.
    pub fn bits(&self) -> Option<u32> {
        match self.value {
            Some(CrossoverValue::Bits(b)) => Some(b),
            _ => None,
        }
    }

    /// Break-even bandwidth, if this was a bandwidth query and one exists.
    pub fn bandwidth_hz(&self) -> Option<T> {
        match self.value {
            Some(CrossoverValue::BandwidthHz(b)) => Some(b),
            _ => None,
        }
    }

    /// Unfloored quantization-level solution R for closed-form resolution
    /// queries (present even when no break-even exists, where it is < 2).
    pub fn raw_levels(&self) -> Option<T> {
        self.raw_levels
    }

    pub fn value(&self) -> Option<CrossoverValue<T>> {
        self.value
    }
}

// Shared numerator of the finite-array break-even formulas.
fn finite_numerator<T: Scalar>(query: &CrossoverQuery<T>) -> T {
    let n = T::from_u32(query.n_ant).expect("antenna count fits the scalar type");
    let m = T::from_u32(query.n_rf).expect("chain count fits the scalar type");
    let t = &query.table;
    n * (m * t.p_ps + t.p_splitter) + m * t.p_combiner - (n - m) * rf_chain_power(t)
}

// Numerator of the large-array limits.
fn asymptotic_numerator<T: Scalar>(n_rf: u32, table: &ComponentPowerTable<T>) -> T {
    let m = T::from_u32(n_rf).expect("chain count fits the scalar type");
    m * table.p_ps + table.p_splitter - rf_chain_power(table)
}

// ⌊log2 raw⌋ for raw >= 2, with an integer-side correction so power-of-two
// inputs never fall victim to the float log rounding either way.
fn floor_log2<T: Scalar>(raw: T) -> u32 {
    let mut exp = raw.log2().floor().to_i32().unwrap_or(1).max(1);
    while pow2::<T>(exp + 1) <= raw {
        exp += 1;
    }
    while exp > 1 && pow2::<T>(exp) > raw {
        exp -= 1;
    }
    exp as u32
}

fn bits_result_from_levels<T: Scalar>(raw: T) -> CrossoverResult<T> {
    let value = if raw.is_finite() && raw >= lit(2.0) {
        Some(CrossoverValue::Bits(floor_log2(raw)))
    } else {
        None
    };
    CrossoverResult {
        value,
        raw_levels: Some(raw),
    }
}

fn check_bandwidth<T: Scalar>(bandwidth_hz: T) -> Result<(), ModelError> {
    if !bandwidth_hz.is_finite() || bandwidth_hz <= T::zero() {
        return Err(ModelError::InvalidBandwidth(format!("{bandwidth_hz}")));
    }
    Ok(())
}

fn check_bits(bits: u32) -> Result<(), ModelError> {
    if bits == 0 || bits > MAX_BITS {
        return Err(ModelError::BitsOutOfRange(bits));
    }
    Ok(())
}

/// Largest ADC resolution at which the digital receiver's total power does
/// not exceed the hybrid's, at a fixed bandwidth. Closed form: b* = ⌊log2 R⌋,
/// with no break-even reported when R < 2.
pub fn bits_star<T: Scalar>(
    query: &CrossoverQuery<T>,
    bandwidth_hz: T,
) -> Result<CrossoverResult<T>, ModelError> {
    check_bandwidth(bandwidth_hz)?;
    let gap = T::from_u32(query.n_ant - query.n_rf).expect("count fits the scalar type");
    let denominator = lit::<T>(2.0) * gap * query.adc.energy_per_step() * bandwidth_hz;
    Ok(bits_result_from_levels(finite_numerator(query) / denominator))
}

/// Largest bandwidth at which the digital receiver's total power does not
/// exceed the hybrid's, at a fixed resolution. Real-valued; no flooring.
pub fn bandwidth_star<T: Scalar>(
    query: &CrossoverQuery<T>,
    bits: u32,
) -> Result<CrossoverResult<T>, ModelError> {
    check_bits(bits)?;
    let gap = T::from_u32(query.n_ant - query.n_rf).expect("count fits the scalar type");
    let levels = T::from_u64(1u64 << bits).expect("2^bits fits the scalar type");
    let denominator = lit::<T>(2.0) * gap * query.adc.energy_per_step() * levels;
    let bw = finite_numerator(query) / denominator;
    let value = if bw.is_finite() && bw > T::zero() {
        Some(CrossoverValue::BandwidthHz(bw))
    } else {
        None
    };
    Ok(CrossoverResult {
        value,
        raw_levels: None,
    })
}

/// Independent oracle for [`bits_star`]: scans b = 1..=20 and keeps the
/// largest resolution where direct evaluation gives a DBF total at or below
/// the HBF total. No closed form is involved anywhere.
pub fn brute_force_bits_star<T: Scalar>(
    query: &CrossoverQuery<T>,
    bandwidth_hz: T,
) -> Result<CrossoverResult<T>, ModelError> {
    check_bandwidth(bandwidth_hz)?;
    let mut best = None;
    for bits in 1..=MAX_BITS {
        let dbf = crate::power_model::total_power(
            &ReceiverDesign::dbf(query.n_ant, bits, bandwidth_hz)?,
            &query.table,
            &query.adc,
        )?;
        let hbf = crate::power_model::total_power(
            &ReceiverDesign::hbf(query.n_ant, query.n_rf, bits, bandwidth_hz)?,
            &query.table,
            &query.adc,
        )?;
        if dbf.total() <= hbf.total() {
            best = Some(bits);
        }
    }
    Ok(CrossoverResult {
        value: best.map(CrossoverValue::Bits),
        raw_levels: None,
    })
}

/// Large-array limit of [`bits_star`]: the break-even resolution as
/// `n_ant → ∞` with the chain count fixed. No break-even exists when
/// `n_rf·p_ps + p_splitter ≤ p_rf`.
pub fn asymptotic_bits_star<T: Scalar>(
    n_rf: u32,
    table: &ComponentPowerTable<T>,
    adc: &AdcModel<T>,
    bandwidth_hz: T,
) -> Result<CrossoverResult<T>, ModelError> {
    if n_rf == 0 {
        return Err(ModelError::ZeroChains);
    }
    table.validate()?;
    check_bandwidth(bandwidth_hz)?;
    let denominator = lit::<T>(2.0) * adc.energy_per_step() * bandwidth_hz;
    Ok(bits_result_from_levels(
        asymptotic_numerator(n_rf, table) / denominator,
    ))
}

/// Large-array limit of [`bandwidth_star`], the bandwidth analogue of
/// [`asymptotic_bits_star`].
pub fn asymptotic_bandwidth_star<T: Scalar>(
    n_rf: u32,
    table: &ComponentPowerTable<T>,
    adc: &AdcModel<T>,
    bits: u32,
) -> Result<CrossoverResult<T>, ModelError> {
    if n_rf == 0 {
        return Err(ModelError::ZeroChains);
    }
    table.validate()?;
    check_bits(bits)?;
    let levels = T::from_u64(1u64 << bits).expect("2^bits fits the scalar type");
    let denominator = lit::<T>(2.0) * adc.energy_per_step() * levels;
    let bw = asymptotic_numerator(n_rf, table) / denominator;
    let value = if bw.is_finite() && bw > T::zero() {
        Some(CrossoverValue::BandwidthHz(bw))
    } else {
        None
    };
    Ok(CrossoverResult {
        value,
        raw_levels: None,
    })
}
