//! Spins in twice-value form and the exact field `Q(sqrt 2, sqrt 3, ...)`.

mod factorial;
mod json;
mod primes;
mod radical;
mod spin;

pub use factorial::{factorial, rising, FactorialCache};
pub use primes::{factor_u64, primes_up_to, PrimePowers};
pub use radical::{rr_add, rr_mul, rr_to_float, Decimal, RadicalRational};
pub use spin::{parse_projection, triad_admissible, Spin, SpinParseError, Triad};

pub(crate) use spin::{admissible_twice, phase_twice};
