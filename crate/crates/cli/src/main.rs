use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use bockstein::generators::GeneratorSpec;
use bockstein::SimplicialComplex;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

#[derive(Parser, Debug)]
#[command(
    name = "bockstein",
    version,
    about = "Torsion, Bocksteins and local cohomology of Stanley–Reisner rings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Worker threads for the face and prime sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Complex file in the JSON format `{"n": .., "facets": [[..], ..]}`; `-` reads stdin.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Built-in complex: rp2, dunce:m[,q], cycle:n, simplex-boundary:n, simplex:n, random:n,d,density,seed.
    #[arg(long, value_name = "SPEC")]
    generate: Option<String>,
}

impl Input {
    fn load(&self) -> anyhow::Result<SimplicialComplex> {
        if let Some(spec) = &self.generate {
            let spec: GeneratorSpec = spec.parse()?;
            return Ok(spec.build()?.complex);
        }
        let path = self.input.as_ref().expect("clap enforces one input");
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        serde_json::from_str(&text)
            .with_context(|| format!("parsing complex file {}", path.display()))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced cohomology in every degree from -1 to dim Δ.
    Cohomology {
        #[command(flatten)]
        input: Input,
        /// Integer coefficients.
        #[arg(long = "int")]
        integral: bool,
        /// Coefficients in Z/L.
        #[arg(long = "mod", value_name = "L")]
        modulus: Option<u64>,
    },
    /// Simplicial Bockstein H̃^k(Δ; Z/L) → H̃^{k+1}(Δ; Z/L).
    Bockstein {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i32,
        #[arg(long = "mod", value_name = "L")]
        modulus: u64,
        /// Exit with status 1 if the map is nonzero.
        #[arg(long)]
        expect_zero: bool,
    },
    /// Bockstein on local cohomology of the Stanley–Reisner ring, H^k → H^{k+1} with Z/L coefficients.
    LocalBockstein {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i32,
        /// Prime power.
        #[arg(long = "mod", value_name = "L")]
        modulus: u64,
        /// Exit with status 1 if the map is nonzero.
        #[arg(long)]
        expect_zero: bool,
    },
    /// Minimal generators of the Stanley–Reisner ideal.
    SrIdeal {
        #[command(flatten)]
        input: Input,
    },
    /// Graded pieces of local cohomology with Z/L coefficients via Hochster's formula.
    Hochster {
        #[command(flatten)]
        input: Input,
        #[arg(long = "mod", value_name = "L")]
        modulus: u64,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i32,
        /// Restrict to one face, e.g. `1,2` (empty string for the empty face).
        #[arg(long, conflicts_with = "u")]
        tau: Option<String>,
        /// Restrict to the degree u ≤ 0, e.g. `-1,0,0,-2`; only its support matters.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
    },
    /// Primes p whose local-cohomology Bockstein is nonzero in degree k.
    PrimeSweep {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i32,
        /// Only report primes up to this bound.
        #[arg(long)]
        prime_bound: Option<u64>,
    },
    /// Emit a built-in complex in the JSON complex format.
    Generate {
        /// Generator spec, as for --generate.
        spec: String,
    },
}

/// What a subcommand produced: rendered text plus whether `--expect-zero` tripped.
pub struct Outcome {
    pub text: String,
    pub nonzero: bool,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    let f = cli.format;
    match cli.command {
        Command::Cohomology {
            input,
            integral,
            modulus,
        } => {
            if !integral && modulus.is_none() {
                bail!("cohomology needs --int, --mod L or both");
            }
            commands::cohomology(&input.load()?, integral, modulus, f)
        }
        Command::Bockstein {
            input,
            k,
            modulus,
            expect_zero,
        } => commands::bockstein(&input.load()?, k, modulus, expect_zero, f),
        Command::LocalBockstein {
            input,
            k,
            modulus,
            expect_zero,
        } => commands::local_bockstein(&input.load()?, k, modulus, expect_zero, f),
        Command::SrIdeal { input } => commands::sr_ideal(&input.load()?, f),
        Command::Hochster {
            input,
            modulus,
            k,
            tau,
            u,
        } => {
            let complex = input.load()?;
            let tau = match (tau, u) {
                (Some(t), _) => Some(commands::parse_face(&t, complex.n())?),
                (None, Some(u)) => Some(commands::support_of_degree(&u, complex.n())?),
                (None, None) => None,
            };
            commands::hochster(&complex, modulus, k, tau, f)
        }
        Command::PrimeSweep {
            input,
            k,
            prime_bound,
        } => commands::prime_sweep(&input.load()?, k, prime_bound, f),
        Command::Generate { spec } => commands::generate(&spec, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut out = io::stdout().lock();
            if out
                .write_all(outcome.text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if outcome.nonzero {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
