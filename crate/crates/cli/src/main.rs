mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use griess_lab::fock::{AxisFamily, FockState, LatticeVoa, Parafermion};
use griess_lab::lattice::{coset_decomposition_a26, find_a, sublattice_k, E8Cube, Lattice, ShellStore, CACHE_ENV};
use griess_lab::scenarios::{emit_report, run_suite, Context, Format, Suite};

use config::Config;

#[derive(Parser)]
#[command(name = "griess-lab", version, about = "Exact checks for Griess algebras and lattice vertex algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Flat key = value config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Shell and coset cache directory (falls back to GRIESS_LAB_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Seed for randomized samples.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for independent checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,
    /// Include per-check timings (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print the report.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
        /// Also print the dump of a state (see `inspect state-dump`) to stderr.
        #[arg(long, value_name = "EXPR")]
        dump_state: Option<String>,
    },
    /// Print lattices, shells, axes or states.
    Inspect {
        #[command(subcommand)]
        what: Inspect,
    },
    /// Manage the shell cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum Inspect {
    /// Rank, determinant and parity of a named lattice.
    Lattice { name: String },
    /// Number of vectors of a given norm.
    Shell { name: String, norm: i64 },
    /// State dump of e^{i,j}.
    Axis { i: usize, j: usize },
    /// State dump of omega, omega-mn, sugawara, x0, x1, x2, parafermion or axis:I,J.
    StateDump { expr: String },
}

#[derive(Subcommand)]
enum CacheAction {
    Build,
    Clear,
    Status,
}

enum Failure {
    Usage(String),
    Run(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn run_err(e: impl ToString) -> Failure {
    Failure::Run(e.to_string())
}

fn config(g: &Global) -> Result<Config, Failure> {
    let mut c = match &g.config {
        Some(p) => Config::parse(&std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?).map_err(usage)?,
        None => Config::default(),
    };
    if g.cache_dir.is_some() {
        c.cache_dir = g.cache_dir.clone();
    } else if c.cache_dir.is_none() {
        c.cache_dir = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
    }
    if let Some(s) = g.seed {
        c.seed = s;
    }
    if let Some(j) = g.jobs {
        c.jobs = j.max(1);
    }
    if let Some(f) = g.format {
        c.format = f;
    }
    c.timings |= g.timings;
    Ok(c)
}

fn store(c: &Config) -> ShellStore {
    match &c.cache_dir {
        Some(d) => ShellStore::with_dir(d),
        None => ShellStore::in_memory(),
    }
}

fn named_lattice(name: &str) -> Result<Lattice, Failure> {
    let cube = E8Cube::new();
    Ok(match name {
        "M" => cube.m,
        "N" => cube.n,
        "Ntilde" => cube.nt,
        "M+N" => cube.m_plus_n(),
        "L" => cube.l,
        "K" => {
            let a = find_a(&cube.e8, &ShellStore::in_memory()).map_err(run_err)?;
            sublattice_k(&cube.e8, &a).map_err(run_err)?.with_label("K")
        }
        _ => Lattice::standard(name).map_err(usage)?,
    })
}

fn state(expr: &str, store: &ShellStore) -> Result<FockState, Failure> {
    if expr == "parafermion" {
        return Parafermion::a26().and_then(|p| p.omega()).map_err(run_err);
    }
    if expr == "omega" {
        let cube = E8Cube::new();
        return LatticeVoa::new(&cube.l).and_then(|v| v.conformal_vector()).map_err(run_err);
    }
    let family = || AxisFamily::build(store).map_err(run_err);
    let r = match expr {
        "omega-mn" => family()?.omega_m_plus_n(),
        "sugawara" => family()?.sugawara_closed_form(),
        "x0" | "x1" | "x2" => {
            let k = expr[1..].parse::<usize>().expect("matched digit");
            family()?.real_form_components().map(|xs| xs[k].clone())
        }
        _ => {
            let (i, j) = expr
                .strip_prefix("axis:")
                .and_then(|r| r.split_once(','))
                .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
                .filter(|&(i, j)| i < 3 && j < 3)
                .ok_or_else(|| usage(format!("unknown state expression {expr:?}")))?;
            return Ok(family()?.axis(i, j).clone());
        }
    };
    r.map_err(run_err)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cfg = config(&cli.global)?;
    match cli.command {
        Command::Verify { suite, dump_state } => {
            let mut ctx = Context::new(store(&cfg), cfg.seed);
            ctx.closure_bound = cfg.closure_bound;
            let report = run_suite(suite.unwrap_or(cfg.suite), &ctx, cfg.jobs);
            let report = if cfg.timings { report } else { report.without_timings() };
            print!("{}", emit_report(&report, cfg.format));
            if let Some(expr) = dump_state {
                eprint!("{}", state(&expr, &ctx.store)?.dump());
            }
            if !report.all_pass() {
                eprintln!("failing checks: {}", report.failing_ids().join(", "));
                return Ok(ExitCode::from(1));
            }
        }
        Command::Inspect { what } => match what {
            Inspect::Lattice { name } => {
                let l = named_lattice(&name)?;
                println!("{}: rank {}, ambient dimension {}, det {}", l.label(), l.rank(), l.ambient_dim(), l.det());
                println!("integral {}, even {}", l.is_integral(), l.is_even());
            }
            Inspect::Shell { name, norm } => {
                let l = named_lattice(&name)?;
                let s = store(&cfg).shell(&l, norm).map_err(run_err)?;
                println!("{} norm {norm}: {} vectors", l.label(), s.len());
            }
            Inspect::Axis { i, j } => {
                if i > 2 || j > 2 {
                    return Err(usage("axis indices must be 0, 1 or 2"));
                }
                print!("{}", state(&format!("axis:{i},{j}"), &store(&cfg))?.dump());
            }
            Inspect::StateDump { expr } => print!("{}", state(&expr, &store(&cfg))?.dump()),
        },
        Command::Cache { action } => {
            if cfg.cache_dir.is_none() {
                return Err(usage(format!("no cache directory: pass --cache-dir or set {CACHE_ENV}")));
            }
            let store = store(&cfg);
            match action {
                CacheAction::Build => {
                    let e8 = Lattice::e8();
                    store.shell(&e8, 2).map_err(run_err)?;
                    store.shell(&e8, 4).map_err(run_err)?;
                    store.shell(&named_lattice("A2xE8")?, 4).map_err(run_err)?;
                    let a = find_a(&e8, &store).map_err(run_err)?;
                    store.shell(&sublattice_k(&e8, &a).map_err(run_err)?, 2).map_err(run_err)?;
                    coset_decomposition_a26(&store).map_err(run_err)?;
                    AxisFamily::build(&store).map_err(run_err)?;
                    println!("cache built in {}", store.dir().expect("directory set").display());
                }
                CacheAction::Clear => println!("removed {} files", store.clear().map_err(run_err)?),
                CacheAction::Status => {
                    for (name, header) in store.status().map_err(run_err)? {
                        println!("{name}\t{header}");
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
