//! Additive quantization noise: how ADC resolution erodes SNR.
//!
//! A b-bit quantizer is modeled as a source of additive noise whose power,
//! relative to the signal, is the distortion factor η(b). Under that model a
//! channel SNR γ shrinks to the effective value
//!
//! ```text
//! γ_ef = (1 − η) · γ / (1 + η · γ)
//! ```
//!
//! η comes from the tabulated optimal-quantizer values for b ≤ 5 and from the
//! closed-form approximation η = (π·√3/2)·2^(−2b) above that. The table is
//! authoritative at the seam: η(5) is the tabulated 0.002499, not the
//! slightly larger formula value.
//!
//! [`min_adequate_bits`] inverts the relation pragmatically: the smallest
//! resolution whose SNR loss stays within a dB tolerance, after which extra
//! bits buy almost nothing.

use crate::error::ModelError;
use crate::power_model::MAX_BITS;
use crate::scalar::{linear_to_db, lit, Scalar};

/// Tabulated distortion factors for 1 through 5 bits.
///
/// Values are exact as published for the optimal scalar quantizer and are
/// strictly decreasing in resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaTable<T: Scalar> {
    entries: [T; 5],
}

impl<T: Scalar> Default for EtaTable<T> {
    fn default() -> Self {
        Self {
            entries: [
                lit(0.3634),
                lit(0.1175),
                lit(0.03454),
                lit(0.009497),
                lit(0.002499),
            ],
        }
    }
}

impl<T: Scalar> EtaTable<T> {
    /// Tabulated η for `bits` in 1..=5, `None` outside the table.
    pub fn get(&self, bits: u32) -> Option<T> {
        match bits {
            1..=5 => Some(self.entries[(bits - 1) as usize]),
            _ => None,
        }
    }

    pub fn entries(&self) -> &[T; 5] {
        &self.entries
    }
}

/// Distortion factor η for a b-bit quantizer: tabulated for b ≤ 5, the
/// closed-form approximation `(π·√3/2)·2^(−2b)` for 6 ≤ b ≤ 20.
pub fn eta<T: Scalar>(bits: u32) -> Result<T, ModelError> {
    if bits == 0 || bits > MAX_BITS {
        return Err(ModelError::BitsOutOfRange(bits));
    }
    if let Some(value) = EtaTable::default().get(bits) {
        return Ok(value);
    }
    let coefficient = lit::<T>(std::f64::consts::PI) * lit::<T>(3.0).sqrt() / lit(2.0);
    let levels_squared =
        T::from_u64(1u64 << (2 * bits)).expect("2^(2·bits) fits the scalar type for bits <= 20");
    Ok(coefficient / levels_squared)
}

/// Effective SNR after quantization: `(1 − η)·γ / (1 + η·γ)`, linear in and
/// linear out.
pub fn effective_snr<T: Scalar>(gamma: T, bits: u32) -> Result<T, ModelError> {
    if !gamma.is_finite() || gamma < T::zero() {
        return Err(ModelError::InvalidSnr(format!("{gamma}")));
    }
    let eta = eta::<T>(bits)?;
    Ok((T::one() - eta) * gamma / (T::one() + eta * gamma))
}

/// A channel SNR paired with its post-quantization value, both linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrPoint<T: Scalar> {
    gamma: T,
    gamma_ef: T,
}

impl<T: Scalar> SnrPoint<T> {
    /// Evaluates the quantization model at one (γ, b) point.
    pub fn evaluate(gamma: T, bits: u32) -> Result<Self, ModelError> {
        let gamma_ef = effective_snr(gamma, bits)?;
        Ok(Self { gamma, gamma_ef })
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn gamma_ef(&self) -> T {
        self.gamma_ef
    }

    /// SNR loss in dB, `10·log10(γ/γ_ef)`; zero for a zero-SNR channel.
    pub fn loss_db(&self) -> T {
        if self.gamma == T::zero() {
            T::zero()
        } else {
            linear_to_db(self.gamma / self.gamma_ef)
        }
    }
}

/// Smallest resolution whose quantization loss stays within `epsilon_db`.
///
/// Scans b = 1..=20 and returns the first resolution with
/// `10·log10(γ) − 10·log10(γ_ef) ≤ epsilon_db`. Errors if even 20 bits
/// cannot meet the bound, which happens only at extreme channel SNRs.
pub fn min_adequate_bits<T: Scalar>(gamma: T, epsilon_db: T) -> Result<u32, ModelError> {
    if !gamma.is_finite() || gamma <= T::zero() {
        return Err(ModelError::InvalidSnr(format!("{gamma}")));
    }
    if !epsilon_db.is_finite() || epsilon_db <= T::zero() {
        return Err(ModelError::InvalidTolerance(format!("{epsilon_db}")));
    }
    for bits in 1..=MAX_BITS {
        let point = SnrPoint::evaluate(gamma, bits)?;
        if point.loss_db() <= epsilon_db {
            return Ok(bits);
        }
    }
    Err(ModelError::ToleranceNotMet(format!("{epsilon_db}")))
}
