//! Type I and type II 3nj symbols and their low-n reductions.

use spinnet::recoupling::{cached_six_j, nine_j_twice, three_nj, ThreeNJKind, ThreeNJLabels};

fn main() {
    let (j, k, l) = ([2, 2, 2], [2, 2, 2], [2, 2, 4]);
    let t1 = ThreeNJLabels::from_twice(ThreeNJKind::TypeI, &j, &k, &l).unwrap();
    let v = three_nj(&t1).unwrap();
    println!("type I n=3: {v}");
    println!("as a 9j:    {}", nine_j_twice([l[2], k[0], j[2], j[0], l[0], j[1], k[2], k[1], l[1]]));

    let t2 = ThreeNJLabels::from_twice(ThreeNJKind::TypeII, &j, &k, &l).unwrap();
    let v = three_nj(&t2).unwrap();
    let product =
        &cached_six_j([l[0], l[1], l[2], j[2], j[0], j[1]]) * &cached_six_j([l[0], l[1], l[2], k[2], k[0], k[1]]);
    println!("type II n=3: {v} (two 6j product {product})");

    for n in 3..=6 {
        let ones = vec![2; n];
        let t = ThreeNJLabels::from_twice(ThreeNJKind::TypeI, &ones, &ones, &ones).unwrap();
        println!("type I n={n}, all spins 1: {}", three_nj(&t).unwrap());
    }
}
