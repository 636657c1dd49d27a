//! End-to-end invariants of the sweep engine: determinism, point
//! re-derivability, skip accounting, Pareto correctness against a
//! quadratic oracle, and consistency between sweep output and the
//! closed-form break-even predictions.

use bfpower_core::crossover::{bits_star, CrossoverQuery};
use bfpower_core::dataset::Value;
use bfpower_core::power_model::{
    total_power, AdcModel, Architecture, ComponentPowerTable, ReceiverDesign,
};
use bfpower_core::quantization::effective_snr;
use bfpower_core::scalar::{db_to_linear, linear_to_db};
use bfpower_core::sweep::{
    figure_dataset, pareto_front, run_sweep, tradeoff_dataset, FigureId, FigureOverrides, NRfRule,
    SkippedPoint, SweepSpec, TradeoffPoint,
};
use bfpower_core::ModelError;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn defaults() -> ComponentPowerTable<f64> {
    ComponentPowerTable::default()
}

fn wide_spec() -> SweepSpec<f64> {
    SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: vec![8, 16, 32, 64],
        n_rf_rule: NRfRule::Explicit(vec![2, 4]),
        bits_range: 1..=8,
        bandwidth_values: vec![1e8, 1e9],
        adc_models: vec![AdcModel::lpadc(), AdcModel::hpadc()],
        gamma_db: Some(10.0),
    }
}

// ---------------------------------------------------------------------------
// Determinism and re-derivability
// ---------------------------------------------------------------------------

#[test]
fn identical_specs_produce_identical_runs() {
    let table = defaults();
    let first = run_sweep(&wide_spec(), &table).unwrap();
    let second = run_sweep(&wide_spec(), &table).unwrap();
    assert_eq!(first, second);

    // Re-listing every axis in scrambled order (with duplicates) must not
    // change a single point.
    let mut scrambled = wide_spec();
    scrambled.architectures = vec![
        Architecture::Hbf,
        Architecture::Dbf,
        Architecture::Abf,
        Architecture::Dbf,
    ];
    scrambled.n_ant_values = vec![64, 8, 32, 16, 8];
    scrambled.n_rf_rule = NRfRule::Explicit(vec![4, 2, 4]);
    scrambled.bandwidth_values = vec![1e9, 1e8, 1e9];
    scrambled.adc_models = vec![AdcModel::hpadc(), AdcModel::lpadc()];
    let third = run_sweep(&scrambled, &table).unwrap();
    assert_eq!(first, third);
}

#[test]
fn every_sampled_point_rederives_from_its_own_fields() {
    let table = defaults();
    let run = run_sweep(&wide_spec(), &table).unwrap();
    assert!(!run.points.is_empty());
    let gamma_linear = db_to_linear(run.gamma_db.unwrap());

    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..100 {
        let point = &run.points[rng.random_range(0..run.points.len())];
        let recomputed = total_power(&point.design, &table, &point.adc).unwrap();
        // Bit-exact: the sweep must evaluate the same arithmetic a caller
        // would reach by hand from the point's own fields.
        assert_eq!(point.total_power_w, recomputed.total());
        let gamma_ef = effective_snr(gamma_linear, point.design.bits()).unwrap();
        assert_eq!(point.gamma_ef_db.unwrap(), linear_to_db(gamma_ef));
    }
}

#[test]
fn dataset_rows_rederive_against_direct_evaluation() {
    let table = defaults();
    let run = run_sweep(&wide_spec(), &table).unwrap();
    let ds = tradeoff_dataset(&run);
    assert_eq!(ds.len(), run.points.len());
    for (row, point) in ds.rows().iter().zip(&run.points) {
        assert_eq!(row[0], Value::Text(point.design.arch().to_string()));
        assert_eq!(row[1], Value::Text(point.adc.label().to_owned()));
        assert_eq!(row[2], Value::Int(i64::from(point.design.n_ant())));
        assert_eq!(row[3], Value::Int(i64::from(point.design.n_rf())));
        assert_eq!(row[4], Value::Num(point.design.bandwidth_hz()));
        assert_eq!(row[5], Value::Int(i64::from(point.design.bits())));
        assert_eq!(row[6], Value::Num(point.gamma_ef_db.unwrap()));
        assert_eq!(row[7], Value::Num(point.total_power_w));
    }
}

// ---------------------------------------------------------------------------
// Skip accounting
// ---------------------------------------------------------------------------

#[test]
fn indivisible_arrays_are_reported_once_each() {
    let mut spec = wide_spec();
    spec.n_ant_values = vec![8, 12, 20, 64];
    spec.n_rf_rule = NRfRule::Ratio(8);
    let run = run_sweep(&spec, &defaults()).unwrap();
    assert_eq!(
        run.skipped,
        vec![
            SkippedPoint::IndivisibleRatio { n_ant: 12, ratio: 8 },
            SkippedPoint::IndivisibleRatio { n_ant: 20, ratio: 8 },
        ],
        "each indivisible array size is recorded exactly once"
    );
    assert!(run
        .points
        .iter()
        .all(|p| p.design.n_ant() == 8 || p.design.n_ant() == 64));
}

#[test]
fn bad_bandwidth_skips_points_without_aborting_the_sweep() {
    let mut spec = wide_spec();
    spec.bandwidth_values = vec![-5.0, 1e8];
    let run = run_sweep(&spec, &defaults()).unwrap();
    assert!(!run.points.is_empty());
    assert!(!run.skipped.is_empty());
    assert!(run.points.iter().all(|p| p.design.bandwidth_hz() == 1e8));
    for skip in &run.skipped {
        match skip {
            SkippedPoint::DomainError {
                bandwidth_hz,
                error: ModelError::InvalidBandwidth(_),
                ..
            } => assert_eq!(*bandwidth_hz, -5.0),
            other => panic!("unexpected skip: {other:?}"),
        }
    }
    // The healthy half of the grid is fully present.
    let healthy = run_sweep(
        &SweepSpec {
            bandwidth_values: vec![1e8],
            ..wide_spec()
        },
        &defaults(),
    )
    .unwrap();
    assert_eq!(run.points.len(), healthy.points.len());
}

#[test]
fn explicit_chain_lists_apply_only_to_hybrid() {
    let spec = SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: vec![16],
        n_rf_rule: NRfRule::Explicit(vec![2, 4, 8]),
        bits_range: 1..=2,
        bandwidth_values: vec![1e8],
        adc_models: vec![AdcModel::lpadc()],
        gamma_db: None,
    };
    let run = run_sweep(&spec, &defaults()).unwrap();
    let count = |arch: Architecture| run.points.iter().filter(|p| p.design.arch() == arch).count();
    assert_eq!(count(Architecture::Abf), 2, "one ABF point per bits value");
    assert_eq!(count(Architecture::Dbf), 2, "one DBF point per bits value");
    assert_eq!(count(Architecture::Hbf), 6, "three chain counts per bits value");
    let hbf_chains: Vec<u32> = run
        .points
        .iter()
        .filter(|p| p.design.arch() == Architecture::Hbf)
        .map(|p| p.design.n_rf())
        .collect();
    assert_eq!(hbf_chains, [2, 4, 8, 2, 4, 8]);
}

// ---------------------------------------------------------------------------
// Pareto frontier vs a quadratic oracle
// ---------------------------------------------------------------------------

fn sort_key(p: &TradeoffPoint<f64>) -> impl Ord {
    (
        p.total_power_w.to_bits() as i64,
        -(p.gamma_ef_db.unwrap().to_bits() as i64),
        p.design.bits(),
        p.design.arch(),
        p.adc.label().to_owned(),
        p.design.n_ant(),
        p.design.bandwidth_hz().to_bits(),
        p.design.n_rf(),
    )
}

// Independent O(n²) frontier: keep a point iff nothing strictly dominates
// it, then collapse exact (power, SNR) duplicates to the tie-break winner.
fn oracle_front(points: &[TradeoffPoint<f64>]) -> Vec<TradeoffPoint<f64>> {
    let mut kept: Vec<TradeoffPoint<f64>> = points
        .iter()
        .filter(|p| {
            !points.iter().any(|q| {
                q.total_power_w <= p.total_power_w
                    && q.gamma_ef_db.unwrap() >= p.gamma_ef_db.unwrap()
                    && (q.total_power_w < p.total_power_w
                        || q.gamma_ef_db.unwrap() > p.gamma_ef_db.unwrap())
            })
        })
        .cloned()
        .collect();
    kept.sort_by_key(sort_key);
    kept.dedup_by(|a, b| {
        a.total_power_w == b.total_power_w && a.gamma_ef_db == b.gamma_ef_db
    });
    kept
}

#[test]
fn pareto_front_matches_quadratic_oracle_on_sweep_output() {
    let run = run_sweep(&wide_spec(), &defaults()).unwrap();
    let front = pareto_front(&run.points).unwrap();
    assert_eq!(front.points(), oracle_front(&run.points).as_slice());
    assert!(!front.is_empty());
    assert!(front.len() < run.points.len(), "the cloud is not all frontier");
}

#[test]
fn pareto_front_matches_quadratic_oracle_on_synthetic_clouds() {
    // Seeds chosen arbitrarily; sizes keep the O(n²) oracle quick.
    for (seed, size) in [(7u64, 4000usize), (19, 500), (23, 500)] {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut points: Vec<TradeoffPoint<f64>> = Vec::with_capacity(size);
        for i in 0..size {
            let mut point = TradeoffPoint {
                design: ReceiverDesign::dbf(rng.random_range(1..=64), rng.random_range(1..=20), 1e8)
                    .unwrap(),
                adc: AdcModel::lpadc(),
                total_power_w: rng.random_range(0.0..10.0),
                gamma_ef_db: Some(rng.random_range(0.0..30.0)),
            };
            if i % 10 == 3 {
                // Exact duplicate of an earlier point.
                point = points[rng.random_range(0..i)].clone();
            } else if i % 7 == 2 {
                // Power tie with an earlier point, different SNR.
                point.total_power_w = points[rng.random_range(0..i)].total_power_w;
            }
            points.push(point);
        }
        let front = pareto_front(&points).unwrap();
        assert_eq!(
            front.points(),
            oracle_front(&points).as_slice(),
            "seed {seed}"
        );
    }
}

#[test]
fn identical_points_collapse_to_a_single_frontier_member() {
    let base = TradeoffPoint {
        design: ReceiverDesign::dbf(16, 4, 1e8).unwrap(),
        adc: AdcModel::lpadc(),
        total_power_w: 1.0,
        gamma_ef_db: Some(9.0),
    };
    let cloud = vec![base.clone(); 50];
    let front = pareto_front(&cloud).unwrap();
    assert_eq!(front.len(), 1);
    assert_eq!(front.points()[0], base);
}

// ---------------------------------------------------------------------------
// Sweep output vs closed-form break-even
// ---------------------------------------------------------------------------

#[test]
fn power_curves_cross_exactly_where_the_break_even_says() {
    let table = defaults();
    let spec = SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: vec![16, 64],
        n_rf_rule: NRfRule::Explicit(vec![4]),
        bits_range: 1..=10,
        bandwidth_values: vec![1e8, 1e9],
        adc_models: vec![AdcModel::lpadc()],
        gamma_db: None,
    };
    let run = run_sweep(&spec, &table).unwrap();
    let lookup = |arch: Architecture, n_ant: u32, bits: u32, bw: f64| {
        run.points
            .iter()
            .find(|p| {
                p.design.arch() == arch
                    && p.design.n_ant() == n_ant
                    && p.design.bits() == bits
                    && p.design.bandwidth_hz() == bw
            })
            .map(|p| p.total_power_w)
            .unwrap()
    };
    for n_ant in [16u32, 64] {
        for bw in [1e8, 1e9] {
            let query =
                CrossoverQuery::new(n_ant, 4, table.clone(), AdcModel::lpadc()).unwrap();
            let star = bits_star(&query, bw).unwrap().bits().unwrap();
            for bits in 1..=10 {
                let abf = lookup(Architecture::Abf, n_ant, bits, bw);
                let dbf = lookup(Architecture::Dbf, n_ant, bits, bw);
                let hbf = lookup(Architecture::Hbf, n_ant, bits, bw);
                assert!(abf < dbf, "analog must undercut digital everywhere");
                if bits <= star {
                    assert!(
                        dbf <= hbf,
                        "digital must win at b={bits} <= b*={star} (n_ant={n_ant}, bw={bw})"
                    );
                } else {
                    assert!(
                        dbf > hbf,
                        "hybrid must win at b={bits} > b*={star} (n_ant={n_ant}, bw={bw})"
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

#[test]
fn figure_datasets_are_reproducible_and_rederivable() {
    let table = defaults();
    let overrides = FigureOverrides::default();
    for figure in FigureId::ALL {
        let first = figure_dataset(figure, &table, &overrides).unwrap();
        let second = figure_dataset(figure, &table, &overrides).unwrap();
        assert_eq!(first, second, "{figure} must be deterministic");
    }

    // Every row of the 100 MHz power figure reproduces a direct evaluation.
    let ds = figure_dataset(FigureId::PtotVsBits100MHz, &table, &overrides).unwrap();
    for row in ds.rows() {
        let (Value::Text(arch), Value::Int(n_ant), Value::Int(n_rf), Value::Int(bits)) =
            (&row[0], &row[2], &row[3], &row[5])
        else {
            panic!("unexpected row shape: {row:?}");
        };
        let design = ReceiverDesign::new(
            arch.parse().unwrap(),
            *n_ant as u32,
            (*n_rf) as u32,
            *bits as u32,
            1e8,
        )
        .unwrap();
        let direct = total_power(&design, &table, &AdcModel::lpadc()).unwrap();
        assert_eq!(row[6], Value::Num(direct.total()));
    }
}

#[test]
fn single_precision_sweep_agrees_with_double() {
    let spec32: SweepSpec<f32> = SweepSpec {
        architectures: Architecture::ALL.to_vec(),
        n_ant_values: vec![16, 64],
        n_rf_rule: NRfRule::Explicit(vec![4]),
        bits_range: 1..=6,
        bandwidth_values: vec![1e8],
        adc_models: vec![AdcModel::lpadc()],
        gamma_db: Some(10.0f32),
    };
    let run32 = run_sweep(&spec32, &ComponentPowerTable::<f32>::default()).unwrap();
    let mut spec64 = wide_spec();
    spec64.n_rf_rule = NRfRule::Explicit(vec![4]);
    spec64.bits_range = 1..=6;
    spec64.bandwidth_values = vec![1e8];
    spec64.adc_models = vec![AdcModel::lpadc()];
    spec64.n_ant_values = vec![16, 64];
    let run64 = run_sweep(&spec64, &defaults()).unwrap();
    assert_eq!(run32.points.len(), run64.points.len());
    for (p32, p64) in run32.points.iter().zip(&run64.points) {
        let total32 = f64::from(p32.total_power_w);
        assert!(
            (total32 - p64.total_power_w).abs() <= 1e-4 * p64.total_power_w,
            "f32 and f64 sweeps diverged: {total32} vs {}",
            p64.total_power_w
        );
    }
}
