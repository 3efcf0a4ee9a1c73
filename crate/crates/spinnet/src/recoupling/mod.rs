//! 9j and 3nj symbols and exact residuals of the identities they satisfy.

mod identities;
mod memo;
mod network;
mod ninej;
mod random;
mod threenj;

pub use identities::{
    be_residual, lambda_symmetry_residual, nine_j_recursion_residual, recursion_coeffs, LambdaArgs, LambdaResidual,
    RecursionCoeffs, RecursionPair, RecursionVariable,
};
pub use memo::{cached_six_j, SixJMemo};
pub use network::{magnetic_contraction, magnetic_network};
pub use ninej::{nine_j, nine_j_twice, nine_j_uncached, NineJLabels};
pub use random::{random_be_spins, random_lambda_args, random_nine_j, random_three_nj};
pub use threenj::{three_nj, RecouplingError, ThreeNJKind, ThreeNJLabels};
