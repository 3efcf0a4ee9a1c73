//! Exact residuals of the Biedenharn-Elliott identity, the 9j recursion and
//! the lambda exchange on random inputs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinnet::recoupling::{
    be_residual, lambda_symmetry_residual, nine_j_recursion_residual, random_be_spins, random_lambda_args,
    random_nine_j, RecursionPair,
};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let be = (0..200).filter(|_| be_residual(random_be_spins(&mut rng, 11)).unwrap().is_zero()).count();
    println!("Biedenharn-Elliott: {be}/200 exactly zero");

    let mut rec = 0;
    let mut tried = 0;
    while tried < 100 {
        let l = random_nine_j(&mut rng, 9);
        let t = l.twice();
        if t[0] == 0 || t[4] == 0 || t[8] == 0 {
            continue;
        }
        tried += 1;
        rec += RecursionPair::ALL.iter().all(|&p| nine_j_recursion_residual(&l, p).unwrap().is_zero()) as usize;
    }
    println!("9j recursion: {rec}/100 exactly zero for every pair");

    for lam in [1, 2] {
        let ok = (0..100)
            .filter(|_| lambda_symmetry_residual(&random_lambda_args(&mut rng, lam, 9)).unwrap().residual.is_zero())
            .count();
        println!("lambda = {lam}/2 exchange: {ok}/100 exactly zero");
    }
}
