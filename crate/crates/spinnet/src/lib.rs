pub mod asymptotics;
pub mod bench;
pub mod cli;
pub mod exactnum;
pub mod recoupling;
pub mod wigner;
pub mod yutsis;
