//! Exact Wigner 3j, 6j and reduced rotation matrix kernels, plus brute-force
//! contractions over magnetic quantum numbers used as cross-checks.

pub mod contraction;
mod sixj;
mod smalld;
mod sum;
mod threej;

pub use sixj::{six_j, six_j_canonical, six_j_symmetries, wigner_6j, SixJArgs};
pub use smalld::{wigner_small_d, SmallDError};
pub use threej::{three_j, wigner_3j, ThreeJArgs};
