//! Convergence of the two asymptotic 9j formulas as J grows.

use spinnet::bench::{run_campaign, scaling_fit, CampaignConfig, Formula};

fn main() {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let cfg = CampaignConfig {
        j_values: vec![20, 40, 60, 80, 100],
        twice_jm_values: vec![4],
        formulas: vec![Formula::Asym63, Formula::Asym45],
        count,
        seed: 2024,
    };
    let c = run_campaign(&cfg, None).expect("campaign");
    print!("{}", c.csv);
    for f in [Formula::Asym63, Formula::Asym45] {
        let rows: Vec<_> = c.records.iter().filter(|r| r.formula == f).collect();
        let fe: Vec<(f64, f64)> = rows.iter().map(|r| (r.big_j as f64, r.frac_err)).collect();
        let mag: Vec<(f64, f64)> = rows.iter().map(|r| (r.big_j as f64, r.rms_mag)).collect();
        println!(
            "{}: frac_err slope {:.3}, rms_mag slope {:.3}",
            f.name(),
            scaling_fit(&fe).unwrap(),
            scaling_fit(&mag).unwrap()
        );
    }
}
