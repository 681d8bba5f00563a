//! Command-line front end. [`run`] is the whole program minus process I/O so
//! it can be driven from tests.

mod render;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::batch::{analyze_many, random_corpus};
use crate::code::analyze;
use crate::config::Config;
use crate::eigen::spectral_decomposition;
use crate::error::{Error, Result};
use crate::graph::{distance_partition, generate, load_graph, Graph, VertexSet};
use crate::local::{check_extremality, local_spectrum};
use crate::poly::{hoffman_polynomial, predistance_polynomials};

/// Exit code for I/O, parse and numerical errors.
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "localspec",
    version,
    about = "Local spectra and completely pseudo-regular codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distinct eigenvalues, multiplicities, π_l and the Perron vector
    Spectrum(GraphArgs),
    /// Local spectrum, dual degree, covering radius and extremality of a set
    Local(SetArgs),
    /// Decide whether a set is a completely pseudo-regular code
    Check(SetArgs),
    /// Predistance polynomials, recurrence and Hoffman polynomial of a set
    Polys(SetArgs),
    /// Run every test on a seeded random corpus and count disagreements
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Tolerances {
    #[arg(long, default_value_t = Config::default().tol_eig)]
    pub tol_eig: f64,
    #[arg(long, default_value_t = Config::default().tol_proj)]
    pub tol_proj: f64,
    #[arg(long, default_value_t = Config::default().tol_m)]
    pub tol_m: f64,
    #[arg(long, default_value_t = Config::default().tol_poly)]
    pub tol_poly: f64,
    #[arg(long, default_value_t = Config::default().tol_coef)]
    pub tol_coef: f64,
    #[arg(long, default_value_t = Config::default().tol_vec)]
    pub tol_vec: f64,
    #[arg(long, default_value_t = Config::default().tol_int)]
    pub tol_int: f64,
    #[arg(long, default_value_t = Config::default().tol_ex)]
    pub tol_ex: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Tolerances {
    pub fn config(&self) -> Config {
        Config {
            tol_eig: self.tol_eig,
            tol_proj: self.tol_proj,
            tol_m: self.tol_m,
            tol_poly: self.tol_poly,
            tol_coef: self.tol_coef,
            tol_vec: self.tol_vec,
            tol_int: self.tol_int,
            tol_ex: self.tol_ex,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file, or `-` for stdin
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Named family and parameters, e.g. `--generate hypercube 3`
    #[arg(long, num_args = 1..)]
    pub generate: Option<Vec<String>>,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub tol: Tolerances,
}

#[derive(Debug, Clone, Args)]
pub struct SetArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Comma-separated vertices, or `@FILE` with one vertex per line
    #[arg(long)]
    pub set: String,
    #[command(flatten)]
    pub tol: Tolerances,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
    #[command(flatten)]
    pub tol: Tolerances,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command. `stdin`
/// is read only for `--graph -`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                stdout,
                stderr,
                code,
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_ERROR,
        },
    }
}

fn read_graph(source: &GraphSource, stdin: &mut dyn Read) -> Result<(Graph, String)> {
    if let Some(path) = &source.graph {
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        };
        return Ok((load_graph(&text)?, path.display().to_string()));
    }
    let words = source.generate.as_deref().unwrap_or_default();
    let (name, rest) = words
        .split_first()
        .ok_or_else(|| Error::Config("--generate needs a family name".into()))?;
    let params = rest
        .iter()
        .map(|p| {
            p.parse::<usize>().map_err(|_| Error::ParamOutOfRange {
                family: name.clone(),
                reason: format!("`{p}` is not a non-negative integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((generate(name, &params)?, words.join(" ")))
}

fn read_set(text: &str, n: usize) -> Result<VertexSet> {
    match text.strip_prefix('@') {
        Some(path) => {
            let body =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            VertexSet::parse_lines(&body, n)
        }
        None => VertexSet::parse_list(text, n),
    }
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<(String, i32)> {
    match command {
        Command::Spectrum(args) => {
            let cfg = args.tol.config();
            cfg.validate()?;
            let (g, source) = read_graph(&args.source, stdin)?;
            let s = spectral_decomposition(&g, cfg.tol_eig)?;
            let out = match args.tol.format {
                Format::Json => render::spectrum_json(&g, &source, &s, &cfg),
                Format::Text => render::spectrum_text(&g, &source, &s),
            };
            Ok((out, 0))
        }
        Command::Local(args) => {
            let cfg = args.tol.config();
            cfg.validate()?;
            let (g, source) = read_graph(&args.source, stdin)?;
            let c = read_set(&args.set, g.n())?;
            let s = spectral_decomposition(&g, cfg.tol_eig)?;
            let dp = distance_partition(&g, &c)?;
            let ls = local_spectrum(&s, &c, cfg.tol_m)?;
            let ext = check_extremality(dp.eccentricity(), ls.dual_degree())?;
            let out = match args.tol.format {
                Format::Json => render::local_json(&g, &source, &c, &s, &dp, &ls, &ext, &cfg),
                Format::Text => render::local_text(&c, &s, &dp, &ls, &ext),
            };
            Ok((out, 0))
        }
        Command::Polys(args) => {
            let cfg = args.tol.config();
            cfg.validate()?;
            let (g, source) = read_graph(&args.source, stdin)?;
            let c = read_set(&args.set, g.n())?;
            let s = spectral_decomposition(&g, cfg.tol_eig)?;
            let ls = local_spectrum(&s, &c, cfg.tol_m)?;
            let ps = predistance_polynomials(&ls, cfg.tol_poly)?;
            let h = hoffman_polynomial(&ls, ls.nu_norm_sq(), ls.rho_norm_sq());
            let out = match args.tol.format {
                Format::Json => render::polys_json(&g, &source, &c, &ls, &ps, &h, &cfg),
                Format::Text => render::polys_text(&ls, &ps, &h),
            };
            Ok((out, 0))
        }
        Command::Check(args) => {
            let cfg = args.tol.config();
            cfg.validate()?;
            let (g, source) = read_graph(&args.source, stdin)?;
            let c = read_set(&args.set, g.n())?;
            let a = analyze(&g, &c, &cfg)?;
            let out = match args.tol.format {
                Format::Json => render::check_json(&g, &source, &a, &cfg),
                Format::Text => render::check_text(&a),
            };
            Ok((out, a.report.overall.exit_code()))
        }
        Command::Sweep(args) => {
            let cfg = args.tol.config();
            cfg.validate()?;
            let corpus = random_corpus(cfg.seed, args.count, args.max_n);
            let results = analyze_many(&corpus, &cfg);
            let summary = render::SweepSummary::collect(&corpus, &results);
            let code = if summary.clean() { 0 } else { 2 };
            let out = match args.tol.format {
                Format::Json => summary.json(&cfg, args.count, args.max_n),
                Format::Text => summary.text(),
            };
            Ok((out, code))
        }
    }
}
