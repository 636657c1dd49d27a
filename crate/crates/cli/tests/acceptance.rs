//! Acceptance gate: ten checks pinning the toolkit's headline numbers and
//! laws. Each check is one test that prints a single `A<n> PASS` line when
//! it holds (visible with `--nocapture`); a failure message carries the
//! matching `A<n> FAIL` tag. Tolerances are stated inline — everything not
//! explicitly toleranced is exact.

use std::path::Path;

use bfpower_core::crossover::{
    asymptotic_bits_star, bandwidth_star, bits_star, brute_force_bits_star, CrossoverQuery,
};
use bfpower_core::power_model::{
    total_power, AdcModel, Architecture, ComponentPowerTable, ReceiverDesign,
};
use bfpower_core::quantization::{effective_snr, eta, min_adequate_bits};
use bfpower_core::scalar::db_to_linear;
use bfpower_core::sweep::{figure_dataset, FigureId, FigureOverrides};
use bfpower_cli::csv::emit_csv;

fn defaults() -> ComponentPowerTable<f64> {
    ComponentPowerTable::default()
}

fn query(n_ant: u32, n_rf: u32, adc: AdcModel<f64>) -> CrossoverQuery<f64> {
    CrossoverQuery::new(n_ant, n_rf, defaults(), adc).unwrap()
}

fn star(n_ant: u32, n_rf: u32, adc: AdcModel<f64>, bandwidth_hz: f64) -> Option<u32> {
    bits_star(&query(n_ant, n_rf, adc), bandwidth_hz).unwrap().bits()
}

#[test]
fn a01_break_even_resolutions_for_the_64_antenna_reference_array() {
    assert_eq!(
        star(64, 4, AdcModel::lpadc(), 1e9),
        Some(6),
        "A1 FAIL: 64/4 LPADC at 1 GHz must break even at 6 bits"
    );
    assert_eq!(
        star(64, 4, AdcModel::lpadc(), 1e8),
        Some(9),
        "A1 FAIL: 64/4 LPADC at 100 MHz must break even at 9 bits"
    );
    println!("A1 PASS: 64-antenna break-even resolutions are 6 bits at 1 GHz and 9 bits at 100 MHz");
}

#[test]
fn a02_break_even_resolutions_for_the_256_antenna_array() {
    assert_eq!(
        star(256, 32, AdcModel::lpadc(), 1.5e9),
        Some(8),
        "A2 FAIL: 256/32 LPADC at 1.5 GHz must break even at 8 bits"
    );
    assert_eq!(
        star(256, 32, AdcModel::hpadc(), 1.5e9),
        Some(4),
        "A2 FAIL: 256/32 HPADC at 1.5 GHz must break even at 4 bits"
    );
    println!("A2 PASS: 256-antenna break-evens are 8 bits (low-power ADC) and 4 bits (high-performance ADC)");
}

#[test]
fn a03_small_array_high_performance_adc_points_and_their_sensitivity() {
    assert_eq!(
        star(16, 4, AdcModel::hpadc(), 1e8),
        Some(5),
        "A3 FAIL: 16/4 HPADC at 100 MHz must break even at 5 bits"
    );
    let at_1ghz = star(16, 4, AdcModel::hpadc(), 1e9);
    assert!(
        at_1ghz == Some(1) || at_1ghz == Some(2),
        "A3 FAIL: 16/4 HPADC at 1 GHz must land at 1 or 2 bits, got {at_1ghz:?}"
    );
    // The point sits on a knife's edge in the step energy: nudging c from
    // 12.5 pJ down to 11.9 pJ must push it to exactly 2 bits.
    let cheaper = AdcModel::custom("HPADC-11.9pJ", 11.9e-12).unwrap();
    assert_eq!(
        star(16, 4, cheaper, 1e9),
        Some(2),
        "A3 FAIL: lowering c to 11.9 pJ must give exactly 2 bits"
    );
    println!("A3 PASS: small-array break-evens are 5 bits at 100 MHz and 1 bit at 1 GHz, moving to 2 bits at c = 11.9 pJ");
}

#[test]
fn a04_minimum_adequate_resolution_for_reference_channel_snrs() {
    assert_eq!(
        min_adequate_bits(db_to_linear(-10.0), 0.3),
        Ok(3),
        "A4 FAIL: a -10 dB channel must need 3 bits at a 0.3 dB loss budget"
    );
    assert_eq!(
        min_adequate_bits(db_to_linear(20.0), 0.3),
        Ok(6),
        "A4 FAIL: a 20 dB channel must need 6 bits at a 0.3 dB loss budget"
    );
    println!("A4 PASS: minimum adequate resolution is 3 bits at -10 dB and 6 bits at 20 dB channel SNR");
}

#[test]
fn a05_digital_costs_about_thirty_percent_more_than_analog_at_the_operating_point() {
    // Channel SNR 10 dB picks b = 5 as the operating resolution via the
    // adequate-resolution rule; the power ratio itself depends only on the
    // design. Both totals also confirm the effective SNR is defined there.
    let adc = AdcModel::lpadc();
    assert!(effective_snr(db_to_linear(10.0), 5).is_ok());
    let dbf = total_power(&ReceiverDesign::dbf(16, 5, 1e8).unwrap(), &defaults(), &adc)
        .unwrap()
        .total();
    let abf = total_power(&ReceiverDesign::abf(16, 5, 1e8).unwrap(), &defaults(), &adc)
        .unwrap()
        .total();
    let ratio = dbf / abf;
    assert!(
        (1.25..=1.40).contains(&ratio),
        "A5 FAIL: digital/analog power ratio must sit near 1.3, got {ratio}"
    );
    println!("A5 PASS: digital spends {:.1}% more than analog at 16 antennas, 5 bits, 100 MHz", (ratio - 1.0) * 100.0);
}

#[test]
fn a06_closed_form_break_even_equals_brute_force_power_comparison() {
    let mut points = 0usize;
    let mut mismatches = 0usize;
    for n_ant in [8u32, 16, 32, 64, 128, 256] {
        let mut n_rf = 1u32;
        while n_rf < n_ant {
            for bandwidth in [1e8, 5e8, 1e9, 1.5e9, 2e9] {
                for adc in [AdcModel::lpadc(), AdcModel::hpadc()] {
                    let q = query(n_ant, n_rf, adc);
                    let closed = bits_star(&q, bandwidth).unwrap().bits();
                    let brute = brute_force_bits_star(&q, bandwidth).unwrap().bits();
                    points += 1;
                    if closed != brute {
                        mismatches += 1;
                        eprintln!(
                            "A6 mismatch at n_ant={n_ant} n_rf={n_rf} B={bandwidth}: \
                             closed {closed:?} vs brute {brute:?}"
                        );
                    }
                }
            }
            n_rf *= 2;
        }
    }
    assert!(points >= 300, "A6 FAIL: grid too small ({points} points)");
    assert_eq!(mismatches, 0, "A6 FAIL: {mismatches} of {points} points disagree");
    println!("A6 PASS: closed-form and brute-force break-evens agree at all {points} grid points");
}

#[test]
fn a07_monotonicity_laws_hold_across_the_design_space() {
    let adc = AdcModel::lpadc();
    let archs = [
        (Architecture::Abf, 1u32),
        (Architecture::Hbf, 4),
        (Architecture::Dbf, 1),
    ];
    let total = |arch, n_ant, n_rf, bits, bw| {
        total_power(
            &ReceiverDesign::new(arch, n_ant, n_rf, bits, bw).unwrap(),
            &defaults(),
            &adc,
        )
        .unwrap()
        .total()
    };
    for (arch, n_rf) in archs {
        let mut prev = f64::NEG_INFINITY;
        for n_ant in [4u32, 8, 16, 32, 64, 128, 256] {
            let p = total(arch, n_ant, n_rf, 4, 1e9);
            assert!(p > prev, "A7 FAIL: {arch} power not increasing in antennas");
            prev = p;
        }
        let mut prev = f64::NEG_INFINITY;
        for bits in 1..=12 {
            let p = total(arch, 16, n_rf, bits, 1e9);
            assert!(p > prev, "A7 FAIL: {arch} power not increasing in bits");
            prev = p;
        }
        let mut prev = f64::NEG_INFINITY;
        for step in 1..=20 {
            let p = total(arch, 16, n_rf, 6, step as f64 * 1e8);
            assert!(p > prev, "A7 FAIL: {arch} power not increasing in bandwidth");
            prev = p;
        }
    }
    let mut prev = 0.0;
    for bits in 1..=20 {
        let ef = effective_snr(10.0, bits).unwrap();
        assert!(ef > prev, "A7 FAIL: effective SNR not increasing in bits");
        prev = ef;
    }
    let q = query(64, 4, AdcModel::lpadc());
    let mut prev = u32::MAX;
    for step in 1..=30 {
        let level = bits_star(&q, step as f64 * 1e8).unwrap().bits().unwrap_or(0);
        assert!(level <= prev, "A7 FAIL: break-even resolution grew with bandwidth");
        prev = level;
    }
    let mut prev: Option<f64> = None;
    for bits in 1..=20 {
        let bw = bandwidth_star(&q, bits).unwrap().bandwidth_hz().unwrap();
        if let Some(p) = prev {
            let relative = (bw - p / 2.0).abs() / (p / 2.0);
            assert!(
                relative <= 1e-12,
                "A7 FAIL: break-even bandwidth not halving per bit (rel {relative})"
            );
        }
        prev = Some(bw);
    }
    println!("A7 PASS: power/SNR monotonicity and break-even scaling laws hold");
}

#[test]
fn a08_distortion_table_is_pinned_and_meets_its_high_resolution_formula() {
    let table = [0.3634, 0.1175, 0.03454, 0.009497, 0.002499];
    for (bits, expected) in (1u32..=5).zip(table) {
        let got: f64 = eta(bits).unwrap();
        assert_eq!(got, expected, "A8 FAIL: eta({bits}) must be exactly {expected}");
    }
    let formula = std::f64::consts::PI * 3f64.sqrt() / 2.0 / f64::from(1u32 << 12);
    let got: f64 = eta(6).unwrap();
    let relative = (got - formula).abs() / formula;
    assert!(
        relative <= 1e-7,
        "A8 FAIL: eta(6) must match its formula within 1e-7 relative, off by {relative}"
    );
    println!("A8 PASS: tabulated distortion factors are exact and the 6-bit value matches the formula");
}

#[test]
fn a09_figure_datasets_are_byte_identical_to_their_goldens() {
    let table = defaults();
    let overrides = FigureOverrides::default();
    for figure in FigureId::ALL {
        let dataset = figure_dataset(figure, &table, &overrides).unwrap();
        let mut rendered = Vec::new();
        emit_csv(&dataset, &mut rendered).unwrap();
        let path = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(format!("{figure}.csv"));
        let golden = std::fs::read(&path)
            .unwrap_or_else(|e| panic!("A9 FAIL: cannot read {}: {e}", path.display()));
        assert_eq!(
            rendered, golden,
            "A9 FAIL: figure {figure} no longer matches its golden CSV"
        );
    }
    println!("A9 PASS: all seven figure datasets are byte-identical to their golden CSVs");
}

#[test]
fn a10_large_array_asymptote_is_a_tight_lower_bound() {
    let table = defaults();
    for n_ant in [8u32, 16, 32, 64, 128, 256] {
        let mut n_rf = 1u32;
        while n_rf < n_ant {
            for bandwidth in [1e8, 5e8, 1e9, 1.5e9, 2e9] {
                for adc in [AdcModel::lpadc(), AdcModel::hpadc()] {
                    let finite = bits_star(&query(n_ant, n_rf, adc.clone()), bandwidth)
                        .unwrap()
                        .raw_levels()
                        .unwrap();
                    let limit = asymptotic_bits_star(n_rf, &table, &adc, bandwidth)
                        .unwrap()
                        .raw_levels()
                        .unwrap();
                    assert!(
                        finite >= limit,
                        "A10 FAIL: asymptote exceeds the finite ratio at \
                         n_ant={n_ant} n_rf={n_rf} B={bandwidth}"
                    );
                }
            }
            n_rf *= 2;
        }
    }
    // Tightness at 256 antennas per chain, wherever the limit exists (a
    // single chain has a negative limit numerator and no break-even).
    for n_rf in [2u32, 4, 8, 16, 32] {
        let adc = AdcModel::lpadc();
        let finite = bits_star(&query(256 * n_rf, n_rf, adc.clone()), 1e9)
            .unwrap()
            .raw_levels()
            .unwrap();
        let limit = asymptotic_bits_star(n_rf, &table, &adc, 1e9)
            .unwrap()
            .raw_levels()
            .unwrap();
        assert!(limit > 0.0, "A10 FAIL: limit should exist for n_rf={n_rf}");
        let gap = (finite - limit) / limit;
        assert!(
            gap < 0.02,
            "A10 FAIL: gap at 256 antennas per chain must be under 2%, got {gap} (n_rf={n_rf})"
        );
    }
    println!("A10 PASS: the large-array limit lower-bounds every finite break-even and is within 2% at 256 antennas per chain");
}
