use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "spinnet", version, about = "Exact Wigner 3nj symbols, Yutsis graphs and asymptotic benchmarks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Random seed.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Number of random cases or samples.
    #[arg(long, global = true)]
    pub count: Option<usize>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Significant digits of decimal output.
    #[arg(long, global = true, default_value_t = 17)]
    pub digits: u32,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a symbol exactly.
    #[command(subcommand)]
    Compute(Compute),
    /// Generate or analyse Yutsis graphs.
    #[command(subcommand)]
    Graph(Graph),
    /// Check identities on random admissible inputs.
    Verify(Verify),
    /// Asymptotic-formula benchmarks.
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// 3j symbol: j1 j2 j3 m1 m2 m3.
    #[command(name = "3j")]
    ThreeJ {
        j1: String,
        j2: String,
        j3: String,
        #[arg(allow_hyphen_values = true)]
        m1: String,
        #[arg(allow_hyphen_values = true)]
        m2: String,
        #[arg(allow_hyphen_values = true)]
        m3: String,
    },
    /// 6j symbol: j1 j2 j3 j4 j5 j6.
    #[command(name = "6j")]
    SixJ {
        #[arg(num_args = 6)]
        spins: Vec<String>,
    },
    /// 9j symbol, row-major.
    #[command(name = "9j")]
    NineJ {
        #[arg(num_args = 9)]
        spins: Vec<String>,
    },
    /// 3nj symbol of type I or II.
    #[command(name = "3nj")]
    ThreeNJ {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Comma-separated j spins.
        #[arg(long, value_delimiter = ',', required = true)]
        j: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<String>,
    },
    /// Wigner small-d element d^j_{m,m'} at a rational cos(beta).
    #[command(name = "d")]
    SmallD {
        j: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
        /// cos(beta) as a fraction like -1/3.
        #[arg(long, allow_hyphen_values = true)]
        cos: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cartwheel,
    Prism,
    Petersen,
    K33,
    Tetrahedron,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    #[arg(value_enum, required_unless_present = "input")]
    pub family: Option<Family>,
    pub n: Option<usize>,
    /// Read a graph in JSON form instead.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Graph {
    /// Emit a generated graph.
    Gen(GraphSource),
    /// Girth, Hamiltonian cycle, Euler characteristic and 3-cuts.
    Analyze(GraphSource),
    /// Graphviz output.
    Dot(GraphSource),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Be,
    Rec5,
    Lambda,
    Oracle,
}

#[derive(Debug, Args)]
pub struct Verify {
    #[arg(value_enum)]
    pub identity: Identity,
    /// Largest twice-value drawn.
    #[arg(long, default_value_t = 9)]
    pub max_twice: u32,
}

#[derive(Debug, Subcommand)]
pub enum Bench {
    /// Sample, score and print CSV.
    Run {
        /// Values of J.
        #[arg(long = "j", value_delimiter = ',', default_value = "20,40,60,80,100")]
        j_values: Vec<u32>,
        /// Values of j_m as spins.
        #[arg(long = "jm", value_delimiter = ',', default_value = "2")]
        jm: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "asym63,asym45")]
        formula: Vec<String>,
        /// Also write a gnuplot script next to the CSV given by --out.
        #[arg(long)]
        gnuplot: bool,
    },
    /// Log-log slopes of frac_err and rms_mag from a campaign CSV.
    Fit {
        #[arg(long)]
        input: PathBuf,
    },
}
