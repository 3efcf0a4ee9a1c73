use spinnet::bench::{
    error_stats, read_records, run_campaign, sample_cell, sample_nine_j, scaling_fit, CampaignConfig, Cell, Formula,
    SampleConfig, CSV_HEADER, RNG_NAME,
};

fn grid(j_values: Vec<u32>, twice_jm_values: Vec<u32>, formulas: Vec<Formula>, count: usize) -> CampaignConfig {
    CampaignConfig { j_values, twice_jm_values, formulas, count, seed: 11 }
}

#[test]
fn exact_formula_has_no_error() {
    let cell = Cell { big_j: 15, twice_jm: 4, count: 30, seed: 2, formula: Formula::Exact };
    let s = sample_cell(&cell).unwrap();
    let r = error_stats(&s, Formula::Exact, 15, 4, 2).unwrap();
    assert_eq!(r.rms_dev, 0.0);
    assert_eq!(r.frac_err, 0.0);
    assert_eq!(r.zero_frac, 0.0);
}

#[test]
fn samples_are_admissible_nonzero_and_repeatable() {
    let cfg = SampleConfig { j_values: vec![10, 20], twice_jm: 3, count: 25, seed: 9, formula: Formula::Asym63 };
    let a = sample_nine_j(&cfg).unwrap();
    assert_eq!(a, sample_nine_j(&cfg).unwrap());
    for (cell, big_j) in a.iter().zip([10u32, 20]) {
        assert_eq!(cell.len(), 25);
        for s in cell {
            assert!(s.labels.is_admissible());
            assert!(s.exact != 0.0);
            let t = s.labels.twice();
            for i in [1, 2, 3, 5, 6, 7] {
                assert!((2 * big_j..=2 * big_j + 3).contains(&t[i]));
            }
            for i in [0, 4, 8] {
                assert!(t[i] <= 3);
            }
        }
    }
    let parities: Vec<u32> = a.iter().flatten().map(|s| s.labels.twice()[0] % 2).collect();
    assert!(parities.contains(&0) && parities.contains(&1));
}

#[test]
fn campaign_grid_shapes() {
    let empty = run_campaign(&grid(vec![], vec![4], vec![Formula::Asym63], 5), None).unwrap();
    assert!(empty.records.is_empty());
    let data: Vec<&str> = empty.csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data, [CSV_HEADER]);
    assert!(empty.csv.contains(RNG_NAME));

    let one = run_campaign(&grid(vec![12], vec![4], vec![Formula::Asym45], 5), None).unwrap();
    assert_eq!(one.csv.lines().filter(|l| !l.starts_with('#')).count(), 2);
    assert_eq!(read_records(&one.csv).unwrap(), one.records);
}

#[test]
fn campaign_is_thread_independent() {
    let cfg = grid(vec![10, 25], vec![2, 5], vec![Formula::Asym63, Formula::Asym45], 15);
    let a = run_campaign(&cfg, Some(1)).unwrap();
    let b = run_campaign(&cfg, Some(4)).unwrap();
    let c = run_campaign(&cfg, None).unwrap();
    assert_eq!(a.csv, b.csv);
    assert_eq!(a.csv, c.csv);
    assert!(a.records.iter().filter(|r| r.formula == Formula::Asym63).all(|r| r.zero_frac == 0.0));
    assert!(a.records.iter().all(|r| r.frac_err >= 0.0 && (0.0..=1.0).contains(&r.zero_frac)));
}

#[test]
fn formula_names_parse() {
    for (s, f) in [("asym63", Formula::Asym63), ("45", Formula::Asym45), ("exact", Formula::Exact)] {
        assert_eq!(s.parse::<Formula>().unwrap(), f);
    }
    assert!("asym99".parse::<Formula>().is_err());
}

fn cell_record(formula: Formula, big_j: u32, twice_jm: u32, count: usize) -> spinnet::bench::BenchRecord {
    let cell = Cell { big_j, twice_jm, count, seed: 2024, formula };
    error_stats(&sample_cell(&cell).unwrap(), formula, big_j, twice_jm, 2024).unwrap()
}

#[test]
fn jm_squared_scaling_at_j100() {
    for f in [Formula::Asym63, Formula::Asym45] {
        let small = cell_record(f, 100, 4, 200).frac_err;
        let big = cell_record(f, 100, 9, 200).frac_err;
        let ratio = big / small;
        let nominal = (4.5f64 / 2.0).powi(2);
        assert!(ratio > nominal / 2.0 && ratio < nominal * 2.0, "{f:?}: {ratio}");
    }
}

#[test]
fn zero_cases_magnitude_scales_as_inverse_square() {
    let pts: Vec<(f64, f64)> = [20u32, 40, 60, 80, 100]
        .iter()
        .map(|&j| (j as f64, cell_record(Formula::Asym45, j, 4, 1000).rms_mag_zero.unwrap()))
        .collect();
    let slope = scaling_fit(&pts).unwrap();
    assert!((slope + 2.0).abs() <= 0.5, "{slope}");
}
