//! The (6,3) and (4,5) formulas against the exact 9j at growing J.

use spinnet::asymptotics::{approx_9j_45, approx_9j_63, Asym63Params};
use spinnet::recoupling::{nine_j, NineJLabels};

fn main() {
    for big in [20u32, 50, 100, 200] {
        let b = 2 * big;
        let l = NineJLabels::from_twice([3, b + 3, b + 2, b + 4, 3, b + 1, b + 3, b + 4, 3]);
        if !l.is_admissible() {
            continue;
        }
        let exact = nine_j(&l).to_f64();
        let approx = approx_9j_63(&l).unwrap();
        let p = Asym63Params::new(&l).unwrap();
        println!("(6,3) J={big}: exact {exact:.6e} approx {approx:.6e} cos(theta) = {}", p.cos_theta);

        let l = NineJLabels::from_twice([b + 2, 4, b + 4, 1, 4, 3, b + 3, 2, b + 1]);
        let exact = nine_j(&l).to_f64();
        let approx = approx_9j_45(&l).unwrap();
        println!("(4,5) J={big}: exact {exact:.6e} approx {approx:.6e}");
    }
}
