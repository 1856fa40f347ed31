//! `delent`: compute statistics, canonical words, fibers and shuffles, build
//! generating functions, and run the exhaustive identity registry.

mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use delent::identities::{info, IdentityReport};
use delent::shuffles::ShuffleSet;
use delent::statistics::Group;
use delent::{
    a_canonical, fiber, generating_function, list_identities, s_canonical, stat_profile_a,
    stat_profile_s, verify, Error, GenFunSpec, Params, Permutation, Statistic,
};

use output::Format;

/// Largest `n` for `stat`, `canon` and `fiber` (`S_n`, or `A_{n+1}`).
const MAX_N: usize = 20;
/// Largest `n` enumerated by `genfun` without `--force`.
const GENFUN_CAP_S: usize = 9;
const GENFUN_CAP_A: usize = 8;
/// Largest number of shuffles listed without `--force`.
const SHUFFLE_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "delent",
    version,
    about = "Permutation statistics on S_n and A_{n+1}"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the enumeration caps.
    #[arg(long, global = true)]
    force: bool,
    /// Include wall-clock times in verification output.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    S,
    A,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::S => Group::S,
            GroupArg::A => Group::A,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QStat {
    Length,
    Maj,
    Rmaj,
}

#[derive(Clone, Copy, ValueEnum)]
enum TStat {
    Del,
    None,
}

#[derive(Subcommand)]
enum Command {
    /// Statistic profile of a permutation in one-line notation.
    Stat {
        #[arg(long, value_enum, ignore_case = true)]
        group: GroupArg,
        perm: String,
    },
    /// Canonical word of a permutation.
    Canon {
        #[arg(long, value_enum, ignore_case = true)]
        group: GroupArg,
        perm: String,
    },
    /// Fiber of the covering map over a permutation of S_n.
    Fiber { perm: String },
    /// Lexicographic list of the B-shuffles in S_n.
    Shuffles {
        #[arg(long)]
        n: usize,
        /// Cut points, comma separated; empty for the trivial set.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        b: Vec<usize>,
    },
    /// Generating function of a statistic pair over a whole group.
    Genfun {
        #[arg(long, value_enum, ignore_case = true)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = QStat::Length)]
        q_stat: QStat,
        #[arg(long, value_enum, default_value_t = TStat::Del)]
        t_stat: TStat,
        /// Refine t^del into t_1^eps_1 ... t_(n-1)^eps_(n-1).
        #[arg(long)]
        multivar: bool,
    },
    /// Check a registry identity, or all of them.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, conflicts_with_all = ["n_max", "all"])]
        n: Option<usize>,
        /// Run every n from the entry minimum up to this bound.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, conflicts_with = "all")]
        i: Option<usize>,
        #[arg(long, conflicts_with = "all")]
        k: Option<usize>,
    },
    /// Catalog of registry identities.
    List,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_perm(text: &str, max_degree: usize) -> Result<Permutation, Failure> {
    let pi: Permutation = text.parse()?;
    if pi.degree() > max_degree {
        return Err(Failure::Usage(format!(
            "degree {} exceeds the limit {max_degree}",
            pi.degree()
        )));
    }
    Ok(pi)
}

fn group_degree(group: Group) -> usize {
    match group {
        Group::S => MAX_N,
        Group::A => MAX_N + 1,
    }
}

fn run_verify(
    cli: &Cli,
    name: Option<&str>,
    n: Option<usize>,
    n_max: Option<usize>,
    i: Option<usize>,
    k: Option<usize>,
) -> Result<Vec<IdentityReport>, Failure> {
    let mut plan: Vec<(String, Params)> = Vec::new();
    let entries = match name {
        Some(name) => vec![info(name)?],
        None => list_identities(),
    };
    for e in &entries {
        let ns: Vec<usize> = match (n, n_max) {
            (Some(n), _) => vec![n],
            (None, Some(m)) if name.is_none() && !cli.force => (e.min_n..=m.min(e.cap)).collect(),
            (None, Some(m)) => (e.min_n..=m).collect(),
            (None, None) => vec![e.default_n],
        };
        for n in ns {
            let mut p = Params::new(n);
            p.i = i;
            p.k = k;
            plan.push((e.name.to_string(), p));
        }
    }
    let mut reports = Vec::with_capacity(plan.len());
    for (name, p) in plan {
        let mut r = verify(&name, &p, cli.force)?;
        if !cli.timings {
            r.elapsed_ms = None;
        }
        reports.push(r);
    }
    Ok(reports)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Stat { group, perm } => {
            let group = Group::from(*group);
            let pi = parse_perm(perm, group_degree(group))?;
            let profile = match group {
                Group::S => stat_profile_s(&pi),
                Group::A => stat_profile_a(&pi)?,
            };
            Ok(output::stat(&profile, fmt))
        }
        Command::Canon { group, perm } => {
            let group = Group::from(*group);
            let pi = parse_perm(perm, group_degree(group))?;
            Ok(match group {
                Group::S => output::canon(group, &pi, &s_canonical(&pi), fmt),
                Group::A => output::canon(group, &pi, &a_canonical(&pi)?, fmt),
            })
        }
        Command::Fiber { perm } => {
            let w = parse_perm(perm, MAX_N)?;
            Ok(output::fiber(&w, &fiber(&w), fmt))
        }
        Command::Shuffles { n, b } => {
            if *n == 0 || *n > MAX_N {
                return Err(Failure::Usage(format!("n must lie in 1..={MAX_N}")));
            }
            let set = ShuffleSet::new(*n, b)?;
            if set.count() > SHUFFLE_CAP && !cli.force {
                return Err(Failure::Usage(format!(
                    "{} shuffles exceed the listing cap {SHUFFLE_CAP} (use --force to override)",
                    set.count()
                )));
            }
            Ok(output::shuffles(&set.enumerate(), fmt))
        }
        Command::Genfun {
            group,
            n,
            q_stat,
            t_stat,
            multivar,
        } => {
            let group = Group::from(*group);
            let cap = match group {
                Group::S => GENFUN_CAP_S,
                Group::A => GENFUN_CAP_A,
            };
            let spec = GenFunSpec {
                group,
                n: *n,
                q_stat: match q_stat {
                    QStat::Length => Statistic::Length,
                    QStat::Maj => Statistic::Maj,
                    QStat::Rmaj => Statistic::Rmaj,
                },
                t_stat: match t_stat {
                    TStat::Del => Some(Statistic::Del),
                    TStat::None => None,
                },
                multivar: *multivar,
            };
            spec.validate()?;
            if *n > cap && !cli.force {
                return Err(Error::CapExceeded {
                    what: "genfun".into(),
                    n: *n,
                    cap,
                }
                .into());
            }
            let poly = generating_function(&spec)?;
            Ok(output::genfun(&spec, &poly, fmt))
        }
        Command::Verify {
            name,
            all: _,
            n,
            n_max,
            i,
            k,
        } => {
            let reports = run_verify(cli, name.as_deref(), *n, *n_max, *i, *k)?;
            let text = output::reports(&reports, fmt);
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                emit(cli, &text)?;
                return Err(Failure::Verification(format!(
                    "{failed} of {} checks failed",
                    reports.len()
                )));
            }
            Ok(text)
        }
        Command::List => Ok(output::catalog(&list_identities(), fmt)),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let written = match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli).and_then(|text| emit(&cli, &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
