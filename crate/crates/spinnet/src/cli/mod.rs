//! Command-line front end of the `spinnet` binary.

mod args;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

pub use args::{Bench, Cli, Command, Compute, Family, Format, Graph, GraphSource, Identity, KindArg, Verify};

use crate::bench::{gnuplot_script, read_records, run_campaign, scaling_fit, CampaignConfig, Formula};
use crate::exactnum::{parse_projection, rr_to_float, RadicalRational, Spin};
use crate::recoupling::{
    be_residual, lambda_symmetry_residual, nine_j, nine_j_recursion_residual, random_be_spins, random_lambda_args,
    random_nine_j, three_nj, NineJLabels, RecouplingError, RecursionPair, SixJMemo, ThreeNJKind, ThreeNJLabels,
};
use crate::wigner::contraction::{contract_nine_j, contract_six_j};
use crate::wigner::{six_j, three_j, wigner_small_d, ThreeJArgs};
use crate::yutsis::{
    all_cuts3, cartwheel_type1, complete_bipartite_33, euler_characteristic, girth, hamiltonian_cycle, petersen,
    prism_type2, tetrahedron, to_dot, YutsisGraph,
};

pub const CACHE_ENV: &str = "SPINNET_CACHE_DIR";
pub const CACHE_FILE: &str = "sixj.memo";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Arg(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Arg(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) | CliError::Failed(_) => 1,
        }
    }
}

impl From<RecouplingError> for CliError {
    fn from(e: RecouplingError) -> Self {
        match e {
            RecouplingError::LengthMismatch { .. } | RecouplingError::TooSmall(_) => CliError::Arg(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn spin(flag: &str, s: &str) -> Result<Spin, CliError> {
    s.parse().map_err(|e| CliError::Arg(format!("{flag}: {e}")))
}

fn spins(flag: &str, v: &[String]) -> Result<Vec<u32>, CliError> {
    v.iter().map(|s| spin(flag, s).map(|x| x.twice())).collect()
}

fn projection(flag: &str, s: &str, j: u32) -> Result<i32, CliError> {
    let m = parse_projection(s).map_err(|e| CliError::Arg(format!("{flag}: {e}")))?;
    if (m - j as i32) % 2 != 0 {
        return Err(CliError::Arg(format!(
            "{flag}: projection {s} has the wrong parity for spin {}",
            Spin::from_twice(j)
        )));
    }
    Ok(m)
}

fn value_text(v: &RadicalRational, digits: u32) -> String {
    rr_to_float(v, digits).to_plain_string()
}

fn emit_value(cli: &Cli, kind: &str, labels: &[u32], extra: Value, v: &RadicalRational) -> Result<String, CliError> {
    let decimal = value_text(v, cli.digits);
    match cli.format {
        Format::Plain => Ok(format!("{v}\n{decimal}\n")),
        Format::Json => {
            let mut obj = json!({ "type": kind, "labels": labels, "value": v, "decimal": decimal });
            if let (Value::Object(o), Value::Object(e)) = (&mut obj, extra) {
                o.extend(e);
            }
            Ok(format!("{}\n", serde_json::to_string(&obj).unwrap()))
        }
        Format::Csv => {
            let joined: Vec<String> = labels.iter().map(u32::to_string).collect();
            Ok(format!("type,labels,value,decimal\n{kind},{},\"{v}\",{decimal}\n", joined.join(" ")))
        }
        Format::Dot => Err(CliError::Arg("--format dot applies to graph commands only".into())),
    }
}

fn compute(cli: &Cli, c: &Compute) -> Result<String, CliError> {
    match c {
        Compute::ThreeJ { j1, j2, j3, m1, m2, m3 } => {
            let j = spins("J", &[j1.clone(), j2.clone(), j3.clone()])?;
            let m = [projection("M1", m1, j[0])?, projection("M2", m2, j[1])?, projection("M3", m3, j[2])?];
            let a = ThreeJArgs::from_twice([j[0], j[1], j[2]], m);
            let v = if m.iter().zip(&j).any(|(m, &j)| m.unsigned_abs() > j) {
                RadicalRational::zero()
            } else {
                three_j(a.j.map(|s| s.twice()), m)
            };
            emit_value(cli, "3j", &j, json!({ "m": m }), &v)
        }
        Compute::SixJ { spins: s } => {
            let t = spins("SPINS", s)?;
            let v = six_j([t[0], t[1], t[2], t[3], t[4], t[5]]);
            emit_value(cli, "6j", &t, json!({}), &v)
        }
        Compute::NineJ { spins: s } => {
            let t = spins("SPINS", s)?;
            let l = NineJLabels::from_twice(std::array::from_fn(|i| t[i]));
            emit_value(cli, "9j", &t, json!({}), &nine_j(&l))
        }
        Compute::ThreeNJ { kind, j, k, l } => {
            let kind = match kind {
                KindArg::One => ThreeNJKind::TypeI,
                KindArg::Two => ThreeNJKind::TypeII,
            };
            let labels = ThreeNJLabels::from_twice(kind, &spins("--j", j)?, &spins("--k", k)?, &spins("--l", l)?)?;
            let v = three_nj(&labels)?;
            let kind_name = if kind == ThreeNJKind::TypeI { "I" } else { "II" };
            emit_value(cli, "3nj", &labels.twice(), json!({ "kind": kind_name, "n": labels.n() }), &v)
        }
        Compute::SmallD { j, m, mp, cos } => {
            let j = spin("J", j)?;
            let m = projection("M", m, j.twice())?;
            let mp = projection("MP", mp, j.twice())?;
            let c: BigRational = cos.parse().map_err(|_| CliError::Arg(format!("--cos: `{cos}` is not a fraction")))?;
            let v = wigner_small_d(j, m, mp, &c).map_err(|e| match e {
                crate::wigner::SmallDError::CosineOutOfRange(_) => CliError::Domain(e.to_string()),
                _ => CliError::Arg(e.to_string()),
            })?;
            emit_value(cli, "d", &[j.twice()], json!({ "m": m, "mp": mp, "cos": c.to_string() }), &v)
        }
    }
}

fn load_graph(src: &GraphSource) -> Result<YutsisGraph, CliError> {
    if let Some(path) = &src.input {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("--input {}: {e}", path.display())))?;
        let g: YutsisGraph =
            serde_json::from_str(&text).map_err(|e| CliError::Arg(format!("--input {}: {e}", path.display())))?;
        g.validate().map_err(|e| CliError::Arg(format!("--input {}: {e}", path.display())))?;
        return Ok(g);
    }
    let n = src.n.unwrap_or(3);
    let g = match src.family.expect("clap requires family or --input") {
        Family::Cartwheel => cartwheel_type1(n),
        Family::Prism => prism_type2(n),
        Family::Petersen => Ok(petersen()),
        Family::K33 => Ok(complete_bipartite_33()),
        Family::Tetrahedron => Ok(tetrahedron()),
    };
    g.map_err(|e| CliError::Arg(format!("N: {e}")))
}

fn graph(cli: &Cli, g: &Graph) -> Result<String, CliError> {
    match g {
        Graph::Gen(src) => {
            let g = load_graph(src)?;
            Ok(match cli.format {
                Format::Dot => to_dot(&g),
                Format::Json => format!("{}\n", serde_json::to_string(&g).unwrap()),
                Format::Csv => {
                    let mut s = String::from("u,v,label\n");
                    for e in &g.edges {
                        s.push_str(&format!("{},{},{}\n", g.nodes[e.u], g.nodes[e.v], e.label));
                    }
                    s
                }
                Format::Plain => {
                    let mut s = format!("{} nodes, {} edges\n", g.node_count(), g.edge_count());
                    for e in &g.edges {
                        s.push_str(&format!("{} -- {} {}\n", g.nodes[e.u], g.nodes[e.v], e.label));
                    }
                    s
                }
            })
        }
        Graph::Dot(src) => Ok(to_dot(&load_graph(src)?)),
        Graph::Analyze(src) => {
            let g = load_graph(src)?;
            let ham = hamiltonian_cycle(&g);
            let emb = euler_characteristic(&g).ok();
            let cuts: Vec<Vec<String>> =
                all_cuts3(&g).iter().map(|c| c.iter().map(|&e| g.edges[e].label.clone()).collect()).collect();
            let report = json!({
                "nodes": g.node_count(),
                "edges": g.edge_count(),
                "girth": girth(&g),
                "hamiltonian_length": ham.as_ref().map(Vec::len),
                "euler": emb,
                "cuts3": cuts,
            });
            Ok(match cli.format {
                Format::Json => format!("{report}\n"),
                Format::Plain => {
                    let mut s = format!("nodes: {}\nedges: {}\n", g.node_count(), g.edge_count());
                    s.push_str(&format!("girth: {}\n", girth(&g).map_or("none".into(), |x| x.to_string())));
                    s.push_str(&format!(
                        "hamiltonian: {}\n",
                        ham.map_or("none".into(), |c| format!("length {}", c.len()))
                    ));
                    s.push_str(&match emb {
                        Some(e) => format!("euler: V={} E={} F={} chi={}\n", e.v, e.e, e.f, e.chi),
                        None => "euler: no faces\n".into(),
                    });
                    if cuts.is_empty() {
                        s.push_str("nontrivial 3-cuts: none\n");
                    }
                    for c in &cuts {
                        s.push_str(&format!("nontrivial 3-cut: {}\n", c.join(" ")));
                    }
                    s
                }
                _ => return Err(CliError::Arg("--format: analyze supports plain and json".into())),
            })
        }
    }
}

fn verify(cli: &Cli, v: &Verify) -> Result<String, CliError> {
    let count = cli.count.unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let max = v.max_twice;
    let mut zero = 0usize;
    for i in 0..count {
        let ok = match v.identity {
            Identity::Be => be_residual(random_be_spins(&mut rng, max))?.is_zero(),
            Identity::Rec5 => {
                let l = loop {
                    let l = random_nine_j(&mut rng, max.max(1));
                    let t = l.twice();
                    if t[0] > 0 && t[4] > 0 && t[8] > 0 {
                        break l;
                    }
                };
                let mut all = true;
                for p in RecursionPair::ALL {
                    all &= nine_j_recursion_residual(&l, p)?.is_zero();
                }
                all
            }
            Identity::Lambda => {
                let args = random_lambda_args(&mut rng, 1 + (i % 2) as u32, max);
                lambda_symmetry_residual(&args)?.residual.is_zero()
            }
            Identity::Oracle => {
                let six: [u32; 6] = loop {
                    let t: [u32; 6] = std::array::from_fn(|_| rng.gen_range(0..=max.min(6)));
                    if !six_j(t).is_zero() {
                        break t;
                    }
                };
                let nine = random_nine_j(&mut rng, max.min(4)).twice();
                six_j(six) == contract_six_j(six) && nine_j(&NineJLabels::from_twice(nine)) == contract_nine_j(nine)
            }
        };
        zero += ok as usize;
    }
    let name = format!("{:?}", v.identity).to_lowercase();
    let text = match cli.format {
        Format::Json => format!(
            "{}\n",
            json!({ "identity": name, "count": count, "zero": zero, "seed": cli.seed, "max_twice": max })
        ),
        _ => format!("{zero}/{count} residuals exactly zero\n"),
    };
    if zero != count {
        return Err(CliError::Failed(text.trim_end().to_string()));
    }
    Ok(text)
}

fn bench(cli: &Cli, b: &Bench) -> Result<String, CliError> {
    match b {
        Bench::Run { j_values, jm, formula, gnuplot } => {
            let formulas = formula
                .iter()
                .map(|f| f.parse::<Formula>().map_err(|e| CliError::Arg(format!("--formula: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = CampaignConfig {
                j_values: j_values.clone(),
                twice_jm_values: spins("--jm", jm)?,
                formulas,
                count: cli.count.unwrap_or(200),
                seed: cli.seed,
            };
            if cfg.count == 0 {
                return Err(CliError::Arg("--count: must be at least 1".into()));
            }
            let c = run_campaign(&cfg, cli.threads).map_err(|e| CliError::Domain(e.to_string()))?;
            if *gnuplot {
                let out = cli.out.as_ref().ok_or_else(|| CliError::Arg("--gnuplot needs --out".into()))?;
                let script = out.with_extension("gp");
                std::fs::write(&script, gnuplot_script(&out.display().to_string()))
                    .map_err(|e| CliError::Io(format!("{}: {e}", script.display())))?;
            }
            Ok(match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string(&c.records).unwrap()),
                _ => c.csv,
            })
        }
        Bench::Fit { input } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| CliError::Io(format!("--input {}: {e}", input.display())))?;
            let records = read_records(&text).map_err(|e| CliError::Arg(format!("--input: {e}")))?;
            let mut groups: BTreeMap<(Formula, u32), Vec<_>> = BTreeMap::new();
            for r in records {
                groups.entry((r.formula, r.twice_jm)).or_default().push(r);
            }
            let mut rows = Vec::new();
            for ((f, jm), rs) in &groups {
                let fe: Vec<(f64, f64)> = rs.iter().map(|r| (r.big_j as f64, r.frac_err)).collect();
                let mag: Vec<(f64, f64)> = rs.iter().map(|r| (r.big_j as f64, r.rms_mag)).collect();
                let slope =
                    |p: &[(f64, f64)]| scaling_fit(p).map_err(|e| CliError::Domain(format!("{} {jm}: {e}", f.name())));
                rows.push((f.name(), *jm, slope(&fe)?, slope(&mag)?));
            }
            Ok(match cli.format {
                Format::Json => {
                    let v: Vec<Value> = rows
                        .iter()
                        .map(
                            |r| json!({ "formula": r.0, "twice_jm": r.1, "frac_err_slope": r.2, "rms_mag_slope": r.3 }),
                        )
                        .collect();
                    format!("{}\n", Value::Array(v))
                }
                Format::Csv => {
                    let mut s = String::from("formula,twice_jm,frac_err_slope,rms_mag_slope\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{},{}\n", r.0, r.1, r.2, r.3));
                    }
                    s
                }
                _ => rows
                    .iter()
                    .map(|r| format!("{} twice_jm={}: frac_err slope {:.4}, rms_mag slope {:.4}\n", r.0, r.1, r.2, r.3))
                    .collect(),
            })
        }
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| Path::new(&d).join(CACHE_FILE))
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let cache = cache_path();
    if let Some(p) = cache.as_ref().filter(|p| p.exists()) {
        SixJMemo::global().load(p).map_err(|e| CliError::Io(format!("{CACHE_ENV}: {}: {e}", p.display())))?;
    }
    let out = match &cli.command {
        Command::Compute(c) => compute(cli, c),
        Command::Graph(g) => graph(cli, g),
        Command::Verify(v) => verify(cli, v),
        Command::Bench(b) => bench(cli, b),
    }?;
    if let Some(p) = &cache {
        SixJMemo::global().save(p).map_err(|e| CliError::Io(format!("{CACHE_ENV}: {}: {e}", p.display())))?;
    }
    Ok(out)
}

/// Parses `argv`, runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(stderr, "--out {}: {e}", path.display());
                    return 1;
                }
                0
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code)
}
