//! Exact 3j, 6j, 9j and small-d values with their decimal expansions.

use num_rational::BigRational;
use spinnet::exactnum::{rr_to_float, Spin};
use spinnet::recoupling::nine_j_twice;
use spinnet::wigner::contraction::contract_six_j;
use spinnet::wigner::{six_j, three_j, wigner_small_d};

fn main() {
    let v = three_j([2, 2, 0], [2, -2, 0]);
    println!("(1 1 0; 1 -1 0) = {v} = {}", rr_to_float(&v, 25).to_plain_string());

    let v = six_j([3, 3, 2, 1, 1, 2]);
    println!("{{3/2 3/2 1; 1/2 1/2 1}} = {v}");
    assert_eq!(v, contract_six_j([3, 3, 2, 1, 1, 2]));

    let v = nine_j_twice([1, 1, 2, 1, 1, 2, 2, 2, 4]);
    println!("{{1/2 1/2 1; 1/2 1/2 1; 1 1 2}} = {v} = {}", rr_to_float(&v, 20).to_plain_string());

    let cos = BigRational::new((-1).into(), 3.into());
    for m in [-1, 0, 1] {
        let d = wigner_small_d(Spin::from_twice(2), 2 * m, 0, &cos).unwrap();
        println!("d^1_({m}, 0)(cos = -1/3) = {d}");
    }
    println!("{}", serde_json::to_string(&six_j([2; 6])).unwrap());
}
