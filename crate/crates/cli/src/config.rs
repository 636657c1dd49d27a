//! Run configuration: component powers, named ADC profiles, and display
//! defaults, plus the sweep-specification file format.
//!
//! Both file formats are the same small INI dialect: `[section]` headers,
//! `key = value` lines, `#` comments (whole-line or trailing). Parsing is
//! strict — unknown sections, unknown keys, and duplicates are errors that
//! name the offender and its line — because a silently ignored typo in a
//! power table produces plausible-looking wrong numbers.
//!
//! A config renders back to text with [`RunConfig::render`], and rendering
//! then parsing reproduces the config exactly (numbers are written in
//! shortest round-trip form); the property test at the bottom hammers that.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use bfpower_core::sweep::NRfRule;
use bfpower_core::{AdcModel, Architecture, ComponentPowerTable, SweepSpec};
use thiserror::Error;

use crate::units::{parse_energy, parse_frequency, parse_power};

/// A parse failure, pointing at the 1-based line that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl ConfigError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Display and lookup defaults from the `[defaults]` section.
#[derive(Debug, Clone, PartialEq)]
pub struct Defaults {
    /// ADC profile used when a command does not pick one.
    pub adc: String,
    /// SNR-loss budget in dB for the minimum-resolution query.
    pub epsilon_db: f64,
    /// Significant digits for human-readable output.
    pub precision: usize,
    /// Where primary output goes; `None` means standard output.
    pub output: Option<PathBuf>,
}

impl Default for Defaults {
    fn default() -> Self {
        Self {
            adc: "lpadc".to_owned(),
            epsilon_db: 0.3,
            precision: 4,
            output: None,
        }
    }
}

/// Everything a run needs besides the command line itself.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub components: ComponentPowerTable,
    /// ADC profiles by name: energy per conversion step per level, joules.
    /// `lpadc` and `hpadc` are always present; files may add or override.
    pub adc_profiles: BTreeMap<String, f64>,
    pub defaults: Defaults,
}

impl Default for RunConfig {
    fn default() -> Self {
        let mut adc_profiles = BTreeMap::new();
        adc_profiles.insert("lpadc".to_owned(), AdcModel::lpadc().energy_per_step());
        adc_profiles.insert("hpadc".to_owned(), AdcModel::hpadc().energy_per_step());
        Self {
            components: ComponentPowerTable::default(),
            adc_profiles,
            defaults: Defaults::default(),
        }
    }
}

/// Upper-cases the two built-in profile names the way the reference tables
/// spell them; any other profile keeps its configured name verbatim.
pub fn canonical_label(name: &str) -> String {
    match name {
        "lpadc" => "LPADC".to_owned(),
        "hpadc" => "HPADC".to_owned(),
        other => other.to_owned(),
    }
}

impl RunConfig {
    /// Resolves a profile name to a model the core crate accepts.
    pub fn adc_model(&self, name: &str) -> Result<AdcModel, String> {
        match self.adc_profiles.get(name) {
            Some(&energy) => AdcModel::custom(canonical_label(name), energy)
                .map_err(|e| format!("adc profile `{name}`: {e}")),
            None => Err(format!(
                "unknown adc profile `{name}` (available: {})",
                self.adc_profiles
                    .keys()
                    .cloned()
                    .collect::<Vec<_>>()
                    .join(", ")
            )),
        }
    }

    /// Renders the config as text that [`parse_config`] reads back
    /// identically.
    pub fn render(&self) -> String {
        let mut text = String::new();
        let c = &self.components;
        text.push_str("[components]\n");
        for (key, value) in [
            ("p_lna", c.p_lna),
            ("p_ps", c.p_ps),
            ("p_combiner", c.p_combiner),
            ("p_splitter", c.p_splitter),
            ("p_mixer", c.p_mixer),
            ("p_lo", c.p_lo),
            ("p_lpf", c.p_lpf),
            ("p_bb_amp", c.p_bb_amp),
        ] {
            text.push_str(&format!("{key} = {value} W\n"));
        }
        for (name, energy) in &self.adc_profiles {
            text.push_str(&format!("\n[adc.{name}]\nc = {energy:e} J\n"));
        }
        text.push_str("\n[defaults]\n");
        text.push_str(&format!("adc = {}\n", self.defaults.adc));
        text.push_str(&format!("epsilon_db = {}\n", self.defaults.epsilon_db));
        text.push_str(&format!("precision = {}\n", self.defaults.precision));
        match &self.defaults.output {
            Some(path) => text.push_str(&format!("output = {}\n", path.display())),
            None => text.push_str("output = stdout\n"),
        }
        text
    }
}

// ---------------------------------------------------------------------------
// INI-dialect scanning shared by both file formats
// ---------------------------------------------------------------------------

enum Line<'a> {
    Section(&'a str),
    Pair(&'a str, &'a str),
}

// Strips comments/blank lines and classifies the rest, with line numbers.
fn scan_lines(text: &str) -> Result<Vec<(usize, Line<'_>)>, ConfigError> {
    let mut lines = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let number = index + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(inner) = line.strip_prefix('[') {
            let Some(name) = inner.strip_suffix(']') else {
                return Err(ConfigError::new(number, format!("unterminated section header `{line}`")));
            };
            let name = name.trim();
            if name.is_empty() {
                return Err(ConfigError::new(number, "empty section name"));
            }
            lines.push((number, Line::Section(name)));
        } else if let Some((key, value)) = line.split_once('=') {
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() {
                return Err(ConfigError::new(number, "missing key before `=`"));
            }
            if value.is_empty() {
                return Err(ConfigError::new(number, format!("key `{key}` has no value")));
            }
            lines.push((number, Line::Pair(key, value)));
        } else {
            return Err(ConfigError::new(
                number,
                format!("expected `[section]` or `key = value`, found `{line}`"),
            ));
        }
    }
    Ok(lines)
}

// One key = value occurrence with duplicate tracking.
struct Seen {
    keys: Vec<String>,
}

impl Seen {
    fn new() -> Self {
        Self { keys: Vec::new() }
    }

    fn check(&mut self, line: usize, key: &str) -> Result<(), ConfigError> {
        if self.keys.iter().any(|k| k == key) {
            return Err(ConfigError::new(line, format!("duplicate key `{key}`")));
        }
        self.keys.push(key.to_owned());
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Run configuration files
// ---------------------------------------------------------------------------

const COMPONENT_KEYS: &[&str] = &[
    "p_lna",
    "p_ps",
    "p_combiner",
    "p_splitter",
    "p_mixer",
    "p_lo",
    "p_lpf",
    "p_bb_amp",
];

/// Parses a run-configuration file. Sections: `[components]`,
/// `[adc.<name>]`, `[defaults]`, all optional; anything a file omits keeps
/// its built-in default.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    enum Section {
        None,
        Components,
        Adc { name: String, line: usize, c: Option<f64> },
        Defaults,
    }

    let mut config = RunConfig::default();
    let mut section = Section::None;
    let mut seen_sections: Vec<String> = Vec::new();
    let mut component_seen = Seen::new();
    let mut defaults_seen = Seen::new();
    let mut adc_key_seen = false;
    // The line that chose defaults.adc, for the existence check at the end.
    let mut default_adc_line: Option<usize> = None;

    let finish_adc = |section: &Section| -> Result<Option<(String, f64)>, ConfigError> {
        if let Section::Adc { name, line, c } = section {
            match c {
                Some(energy) => return Ok(Some((name.clone(), *energy))),
                None => {
                    return Err(ConfigError::new(
                        *line,
                        format!("adc profile `{name}` is missing its `c` key"),
                    ))
                }
            }
        }
        Ok(None)
    };

    for (line, item) in scan_lines(text)? {
        match item {
            Line::Section(name) => {
                if let Some((profile, energy)) = finish_adc(&section)? {
                    config.adc_profiles.insert(profile, energy);
                }
                if seen_sections.iter().any(|s| s == name) {
                    return Err(ConfigError::new(line, format!("section `[{name}]` given twice")));
                }
                seen_sections.push(name.to_owned());
                section = match name {
                    "components" => Section::Components,
                    "defaults" => Section::Defaults,
                    other => match other.strip_prefix("adc.") {
                        Some(profile) if !profile.is_empty() && !profile.contains(char::is_whitespace) => {
                            adc_key_seen = false;
                            Section::Adc {
                                name: profile.to_owned(),
                                line,
                                c: None,
                            }
                        }
                        Some(_) => {
                            return Err(ConfigError::new(line, "invalid adc profile name"))
                        }
                        None => {
                            return Err(ConfigError::new(
                                line,
                                format!(
                                    "unknown section `[{other}]` (expected [components], \
                                     [adc.<name>], or [defaults])"
                                ),
                            ))
                        }
                    },
                };
            }
            Line::Pair(key, value) => match &mut section {
                Section::None => {
                    return Err(ConfigError::new(
                        line,
                        format!("key `{key}` appears before any section header"),
                    ))
                }
                Section::Components => {
                    if !COMPONENT_KEYS.contains(&key) {
                        return Err(ConfigError::new(
                            line,
                            format!(
                                "unknown component `{key}` (expected one of: {})",
                                COMPONENT_KEYS.join(", ")
                            ),
                        ));
                    }
                    component_seen.check(line, key)?;
                    let watts = parse_power(value).map_err(|e| ConfigError::new(line, e.to_string()))?;
                    let c = &mut config.components;
                    *match key {
                        "p_lna" => &mut c.p_lna,
                        "p_ps" => &mut c.p_ps,
                        "p_combiner" => &mut c.p_combiner,
                        "p_splitter" => &mut c.p_splitter,
                        "p_mixer" => &mut c.p_mixer,
                        "p_lo" => &mut c.p_lo,
                        "p_lpf" => &mut c.p_lpf,
                        "p_bb_amp" => &mut c.p_bb_amp,
                        _ => unreachable!("key membership checked above"),
                    } = watts;
                }
                Section::Adc { c, .. } => {
                    if key != "c" {
                        return Err(ConfigError::new(
                            line,
                            format!("unknown adc key `{key}` (expected `c`)"),
                        ));
                    }
                    if adc_key_seen {
                        return Err(ConfigError::new(line, "duplicate key `c`"));
                    }
                    adc_key_seen = true;
                    *c = Some(parse_energy(value).map_err(|e| ConfigError::new(line, e.to_string()))?);
                }
                Section::Defaults => {
                    defaults_seen.check(line, key)?;
                    match key {
                        "adc" => {
                            config.defaults.adc = value.to_owned();
                            default_adc_line = Some(line);
                        }
                        "epsilon_db" => {
                            config.defaults.epsilon_db = value.parse().map_err(|_| {
                                ConfigError::new(line, format!("`{value}` is not a number"))
                            })?;
                        }
                        "precision" => {
                            config.defaults.precision = value.parse().map_err(|_| {
                                ConfigError::new(line, format!("`{value}` is not a digit count"))
                            })?;
                        }
                        "output" => {
                            config.defaults.output = if value == "stdout" {
                                None
                            } else {
                                Some(PathBuf::from(value))
                            };
                        }
                        other => {
                            return Err(ConfigError::new(
                                line,
                                format!(
                                    "unknown default `{other}` (expected one of: adc, \
                                     epsilon_db, precision, output)"
                                ),
                            ))
                        }
                    }
                }
            },
        }
    }
    if let Some((profile, energy)) = finish_adc(&section)? {
        config.adc_profiles.insert(profile, energy);
    }
    if !config.adc_profiles.contains_key(&config.defaults.adc) {
        return Err(ConfigError::new(
            default_adc_line.unwrap_or(1),
            format!("default adc `{}` names no profile", config.defaults.adc),
        ));
    }
    Ok(config)
}

// ---------------------------------------------------------------------------
// Sweep specification files
// ---------------------------------------------------------------------------

fn parse_list<T, E: fmt::Display>(
    line: usize,
    value: &str,
    parse: impl Fn(&str) -> Result<T, E>,
) -> Result<Vec<T>, ConfigError> {
    value
        .split(',')
        .map(str::trim)
        .map(|item| parse(item).map_err(|e| ConfigError::new(line, format!("`{item}`: {e}"))))
        .collect()
}

// "4", "1..6", and "1..=6" all denote inclusive ranges.
fn parse_bits_range(line: usize, value: &str) -> Result<std::ops::RangeInclusive<u32>, ConfigError> {
    let bad = |what: &str| ConfigError::new(line, format!("`{value}`: {what}"));
    let parse_end = |text: &str, what| -> Result<u32, ConfigError> {
        text.trim()
            .parse()
            .map_err(|_| bad(&format!("{what} is not a bit count")))
    };
    if let Some((low, high)) = value.split_once("..") {
        let high = high.strip_prefix('=').unwrap_or(high);
        let low = parse_end(low, "range start")?;
        let high = parse_end(high, "range end")?;
        if low > high {
            return Err(bad("range is empty"));
        }
        Ok(low..=high)
    } else {
        let single = parse_end(value, "bit count")?;
        Ok(single..=single)
    }
}

/// Parses a sweep-specification file against a config (for ADC profile
/// lookup and the default profile). One `[sweep]` section; required keys
/// `architectures`, `n_ant`, `bits`, `bandwidth`; optional `n_rf` or
/// `n_rf_ratio` (not both; default is one chain), `adc` (default from the
/// config), `gamma_db`.
pub fn parse_sweep_spec(text: &str, config: &RunConfig) -> Result<SweepSpec, ConfigError> {
    let mut in_sweep = false;
    let mut seen = Seen::new();
    let mut architectures: Option<Vec<Architecture>> = None;
    let mut n_ant: Option<Vec<u32>> = None;
    let mut n_rf: Option<(usize, Vec<u32>)> = None;
    let mut n_rf_ratio: Option<(usize, u32)> = None;
    let mut bits: Option<std::ops::RangeInclusive<u32>> = None;
    let mut bandwidth: Option<Vec<f64>> = None;
    let mut adc_names: Option<Vec<String>> = None;
    let mut adc_line = 1;
    let mut gamma_db: Option<f64> = None;

    for (line, item) in scan_lines(text)? {
        match item {
            Line::Section("sweep") => {
                if in_sweep {
                    return Err(ConfigError::new(line, "section `[sweep]` given twice"));
                }
                in_sweep = true;
            }
            Line::Section(other) => {
                return Err(ConfigError::new(
                    line,
                    format!("unknown section `[{other}]` (a sweep file has one [sweep] section)"),
                ))
            }
            Line::Pair(key, value) => {
                if !in_sweep {
                    return Err(ConfigError::new(
                        line,
                        format!("key `{key}` appears before the [sweep] section"),
                    ));
                }
                seen.check(line, key)?;
                match key {
                    "architectures" => {
                        architectures = Some(parse_list(line, value, str::parse::<Architecture>)?)
                    }
                    "n_ant" => n_ant = Some(parse_list(line, value, str::parse::<u32>)?),
                    "n_rf" => n_rf = Some((line, parse_list(line, value, str::parse::<u32>)?)),
                    "n_rf_ratio" => {
                        n_rf_ratio = Some((
                            line,
                            value.parse().map_err(|_| {
                                ConfigError::new(line, format!("`{value}` is not a ratio"))
                            })?,
                        ))
                    }
                    "bits" => bits = Some(parse_bits_range(line, value)?),
                    "bandwidth" => bandwidth = Some(parse_list(line, value, parse_frequency)?),
                    "adc" => {
                        adc_line = line;
                        adc_names =
                            Some(value.split(',').map(|s| s.trim().to_owned()).collect());
                    }
                    "gamma_db" => {
                        gamma_db = Some(value.parse().map_err(|_| {
                            ConfigError::new(line, format!("`{value}` is not a number"))
                        })?)
                    }
                    other => {
                        return Err(ConfigError::new(
                            line,
                            format!(
                                "unknown sweep key `{other}` (expected one of: architectures, \
                                 n_ant, n_rf, n_rf_ratio, bits, bandwidth, adc, gamma_db)"
                            ),
                        ))
                    }
                }
            }
        }
    }
    if !in_sweep {
        return Err(ConfigError::new(1, "missing [sweep] section"));
    }
    let require = |name: &str| ConfigError::new(1, format!("missing required sweep key `{name}`"));
    let n_rf_rule = match (n_rf, n_rf_ratio) {
        (Some((line, _)), Some(_)) => {
            return Err(ConfigError::new(
                line,
                "`n_rf` and `n_rf_ratio` are mutually exclusive",
            ))
        }
        (Some((_, values)), None) => NRfRule::Explicit(values),
        (None, Some((_, ratio))) => NRfRule::Ratio(ratio),
        (None, None) => NRfRule::Explicit(vec![1]),
    };
    let adc_names = adc_names.unwrap_or_else(|| vec![config.defaults.adc.clone()]);
    let adc_models = adc_names
        .iter()
        .map(|name| {
            config
                .adc_model(name)
                .map_err(|message| ConfigError::new(adc_line, message))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepSpec {
        architectures: architectures.ok_or_else(|| require("architectures"))?,
        n_ant_values: n_ant.ok_or_else(|| require("n_ant"))?,
        n_rf_rule,
        bits_range: bits.ok_or_else(|| require("bits"))?,
        bandwidth_values: bandwidth.ok_or_else(|| require("bandwidth"))?,
        adc_models,
        gamma_db,
    })
}
