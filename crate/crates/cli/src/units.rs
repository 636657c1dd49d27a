//! Unit-suffixed number parsing for config files and command-line values.
//!
//! Values are written the way datasheets write them — `39 mW`, `494 fJ`,
//! `1.5 GHz` — and parsed to base SI units. The conversion shifts the
//! number's decimal exponent *textually* before the one and only float
//! parse, so `39 mW` yields bit-for-bit the same `f64` as the literal
//! `0.039`: no multiply, no rounding step of its own.

use thiserror::Error;

/// A value that could not be read as a unit-suffixed number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct UnitError(String);

const POWER_SUFFIXES: &[(&str, i32)] = &[("mW", -3), ("W", 0)];
const ENERGY_SUFFIXES: &[(&str, i32)] = &[("fJ", -15), ("pJ", -12), ("J", 0)];
const FREQUENCY_SUFFIXES: &[(&str, i32)] = &[("GHz", 9), ("MHz", 6), ("Hz", 0)];

/// Parses a power in watts. Accepted suffixes: `W`, `mW`.
pub fn parse_power(input: &str) -> Result<f64, UnitError> {
    parse_with(input, POWER_SUFFIXES, "power")
}

/// Parses an energy in joules. Accepted suffixes: `J`, `pJ`, `fJ`.
pub fn parse_energy(input: &str) -> Result<f64, UnitError> {
    parse_with(input, ENERGY_SUFFIXES, "energy")
}

/// Parses a frequency in hertz. Accepted suffixes: `Hz`, `MHz`, `GHz`.
pub fn parse_frequency(input: &str) -> Result<f64, UnitError> {
    parse_with(input, FREQUENCY_SUFFIXES, "frequency")
}

fn suffix_list(suffixes: &[(&str, i32)]) -> String {
    suffixes
        .iter()
        .map(|(name, _)| *name)
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_with(input: &str, suffixes: &[(&str, i32)], kind: &str) -> Result<f64, UnitError> {
    let trimmed = input.trim();
    // Longest suffix first, so the `W` of `mW` never matches early.
    let (number, shift) = suffixes
        .iter()
        .find_map(|(suffix, shift)| {
            trimmed
                .strip_suffix(suffix)
                .map(|rest| (rest.trim_end(), *shift))
        })
        .ok_or_else(|| {
            UnitError(format!(
                "`{input}` is missing a {kind} unit (expected one of: {})",
                suffix_list(suffixes)
            ))
        })?;
    if number.is_empty() {
        return Err(UnitError(format!("`{input}` has a unit but no number")));
    }
    let shifted = shift_decimal_exponent(number, shift);
    let value: f64 = shifted
        .parse()
        .map_err(|_| UnitError(format!("`{number}` is not a number")))?;
    if !value.is_finite() {
        return Err(UnitError(format!("`{input}` is not a finite {kind}")));
    }
    Ok(value)
}

// Applies the unit's power of ten by editing the exponent text, leaving the
// mantissa untouched for the final parse.
fn shift_decimal_exponent(number: &str, shift: i32) -> String {
    if shift == 0 {
        return number.to_owned();
    }
    match number.find(['e', 'E']) {
        Some(pos) => {
            let (mantissa, tail) = number.split_at(pos);
            match tail[1..].parse::<i64>() {
                Ok(exp) => format!("{mantissa}e{}", exp + i64::from(shift)),
                // Malformed exponent: let the final parse report it.
                Err(_) => number.to_owned(),
            }
        }
        None => format!("{number}e{shift}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffixed_values_equal_their_base_unit_literals() {
        // Bit-exact, not merely close: the same decimal is parsed once.
        assert_eq!(parse_power("39 mW").unwrap(), 0.039);
        assert_eq!(parse_power("19.5 mW").unwrap(), 0.0195);
        assert_eq!(parse_power("0.0408 W").unwrap(), 0.0408);
        assert_eq!(parse_energy("494 fJ").unwrap(), 494e-15);
        assert_eq!(parse_energy("12.5 pJ").unwrap(), 12.5e-12);
        assert_eq!(parse_energy("4.94e-13 J").unwrap(), 494e-15);
        assert_eq!(parse_frequency("100 MHz").unwrap(), 1e8);
        assert_eq!(parse_frequency("1.5 GHz").unwrap(), 1.5e9);
        assert_eq!(parse_frequency("0.1 GHz").unwrap(), 1e8);
        assert_eq!(parse_frequency("250000 Hz").unwrap(), 2.5e5);
    }

    #[test]
    fn whitespace_between_number_and_unit_is_optional() {
        assert_eq!(parse_power("39mW").unwrap(), 0.039);
        assert_eq!(parse_frequency("  2 GHz ").unwrap(), 2e9);
    }

    #[test]
    fn exponent_forms_shift_correctly() {
        assert_eq!(parse_energy("4.94e2 fJ").unwrap(), 4.94e-13);
        assert_eq!(parse_frequency("1E3 MHz").unwrap(), 1e9);
        assert_eq!(parse_power("-5e0 mW").unwrap(), -0.005);
    }

    #[test]
    fn missing_or_unknown_suffixes_are_rejected() {
        assert!(parse_power("39").is_err());
        assert!(parse_power("39 kW").is_err());
        assert!(parse_frequency("10 THz").is_err());
        let message = parse_energy("1 W").unwrap_err().to_string();
        assert!(message.contains("fJ, pJ, J"), "got: {message}");
    }

    #[test]
    fn garbage_numbers_are_rejected() {
        assert!(parse_power("3.9.9 W").is_err());
        assert!(parse_power("W").is_err());
        assert!(parse_power("fast W").is_err());
        assert!(parse_frequency("1e Hz").is_err());
    }

    #[test]
    fn non_finite_values_are_rejected() {
        assert!(parse_power("inf W").is_err());
        assert!(parse_power("NaN mW").is_err());
        assert!(parse_energy("1e400 J").is_err());
    }
}
