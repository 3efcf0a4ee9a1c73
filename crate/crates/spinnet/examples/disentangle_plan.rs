//! Product-of-d-functions plans for type I symbols with a large perimeter.

use std::collections::BTreeSet;

use spinnet::asymptotics::disentangle_plan;
use spinnet::recoupling::{three_nj, ThreeNJKind, ThreeNJLabels};

fn main() {
    for n in 3..=6 {
        let big = vec![120; n];
        let labels = ThreeNJLabels::from_twice(ThreeNJKind::TypeI, &big, &big, &vec![2; n]).unwrap();
        let large: BTreeSet<String> = (1..=n).flat_map(|i| [format!("j{i}"), format!("k{i}")]).collect();
        let plan = disentangle_plan(&labels, &large).unwrap();
        println!("n={n}: {} factors", plan.factors.len());
        for f in &plan.factors {
            println!("  d^{}_({} - {}, {} - {})", f.principal, f.proj1[0], f.proj1[1], f.proj2[0], f.proj2[1]);
        }
        if n == 3 {
            let exact = three_nj(&labels).unwrap().to_f64();
            println!("  evaluated {:.6e}, exact {exact:.6e}", plan.evaluate(&labels).unwrap());
        }
    }
}
