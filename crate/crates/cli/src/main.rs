//! `crs`: exact residue-system and roots-of-unity arithmetic for scripts.
//!
//! Every subcommand prints exactly one JSON record on stdout; diagnostics go
//! to stderr. Exit codes: 0 when the operation succeeded (and any predicate
//! it computes is true / a solution exists), 1 when a predicate is false or
//! no solution exists, 2 on usage or domain errors.

mod verify;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crs_core::{
    apply_branches, brute_force_search, rational_power_power_first, rational_power_root_first,
    solve_branch_vector, BranchOutcome, BranchVector, CrsCandidate, Modulus, RootSet,
};

#[derive(Parser)]
#[command(
    name = "crs",
    version,
    about = "Exact arithmetic on complete residue systems and roots of unity",
    after_help = "Candidate-taking subcommands accept either --h plus --elements, or a single \
                  JSON record {\"h\": <int>, \"elements\": [<int>, ...]} on stdin."
)]
struct Cli {
    /// Emit machine-readable JSON (the default and currently only format).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CandidateInput {
    /// Modulus h (>= 2); combine with --elements for inline input.
    #[arg(long)]
    h: Option<i64>,

    /// Comma-separated candidate elements (exactly h of them).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    elements: Option<Vec<i64>>,
}

impl CandidateInput {
    fn resolve(&self) -> Result<CrsCandidate, Failure> {
        match (self.h, &self.elements) {
            (Some(h), Some(elements)) => {
                Ok(CrsCandidate::new(Modulus::new(h)?, elements.clone())?)
            }
            (None, None) => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                Ok(serde_json::from_str(&buf)?)
            }
            _ => Err(Failure::msg(
                "provide both --h and --elements, or neither and pipe a JSON record to stdin",
            )),
        }
    }
}

/// Which composition order a rational power uses.
#[derive(Clone, Copy, Default, ValueEnum)]
enum Route {
    /// Branched p-th root first, q-th power second.
    #[default]
    RootFirst,
    /// q-th power first, branched p-th root second.
    PowerFirst,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a candidate is a complete residue system mod h.
    CheckCrs(CandidateInput),

    /// Print the canonical residue profile of a candidate.
    Residues(CandidateInput),

    /// Multiply every element of a candidate by p.
    Scale {
        #[command(flatten)]
        candidate: CandidateInput,
        /// Scaling factor.
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },

    /// Map every element a to p*a + l.
    Affine {
        #[command(flatten)]
        candidate: CandidateInput,
        /// Multiplier.
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        /// Additive shift.
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },

    /// Add h*l_i to the i-th element, one multiplier per element.
    Shift {
        #[command(flatten)]
        candidate: CandidateInput,
        /// Comma-separated multipliers (exactly h of them).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        l: Vec<i64>,
    },

    /// Print the set of all h-th roots of unity.
    Omega {
        /// Root order (>= 2).
        #[arg(long)]
        h: i64,
    },

    /// Raise a root set elementwise to the p-th power.
    Power {
        /// Use the full set of h-th roots of unity as input; when omitted,
        /// a JSON root-set array is read from stdin.
        #[arg(long)]
        h: Option<i64>,
        /// Exponent.
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },

    /// Find the branch vector under which the branched p-th roots of the
    /// h-th roots of unity are again exactly the h-th roots of unity.
    SolveBranches {
        /// Modulus (>= 2).
        #[arg(long)]
        h: i64,
        /// Root degree (>= 1).
        #[arg(long)]
        p: i64,
    },

    /// Enumerate all p^h branch vectors and report every solution.
    BruteBranches {
        /// Modulus (>= 2).
        #[arg(long)]
        h: i64,
        /// Root degree (>= 1).
        #[arg(long)]
        p: i64,
        /// Enumeration budget: refuse to run when p^h exceeds it.
        #[arg(long, default_value_t = 1u64 << 20)]
        cap: u64,
    },

    /// Apply the rational power q/p to the h-th roots of unity under a
    /// branch vector.
    Rational {
        /// Modulus (>= 2).
        #[arg(long)]
        h: i64,
        /// Root degree (>= 1).
        #[arg(long)]
        p: i64,
        /// Power numerator.
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Comma-separated branch indices; solved from (h, p) when omitted.
        #[arg(long, value_delimiter = ',')]
        l: Option<Vec<i64>>,
        /// Composition order.
        #[arg(long, value_enum, default_value_t)]
        route: Route,
    },

    /// Re-verify the library's preservation laws over a parameter sweep.
    Verify {
        /// Largest modulus to sweep (>= 2).
        #[arg(long, default_value_t = 16)]
        hmax: i64,
        /// Largest root degree / power to sweep (>= 1).
        #[arg(long, default_value_t = 16)]
        pmax: i64,
        /// Budget for the exhaustive branch searches.
        #[arg(long, default_value_t = 1u64 << 20)]
        cap: u64,
    },
}

/// Anything that should terminate the process with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl Failure {
    fn msg(text: &str) -> Self {
        Failure(text.to_string())
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<crs_core::Error> for Failure {
    fn from(e: crs_core::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(format!("malformed input record: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(format!("could not read stdin: {e}"))
    }
}

#[derive(Serialize)]
struct MembershipReport {
    is_crs: bool,
    profile: Vec<i64>,
}

#[derive(Serialize)]
struct ProfileReport {
    h: i64,
    profile: Vec<i64>,
}

#[derive(Serialize)]
struct SolvedReport<'a> {
    h: i64,
    p: i64,
    l: &'a [i64],
    roots: &'a RootSet,
}

#[derive(Serialize)]
struct NoSolutionReport {
    gcd: i64,
    witness_k: i64,
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!(
        "{}",
        serde_json::to_string(value).map_err(|e| Failure(format!("serialization failed: {e}")))?
    );
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::CheckCrs(input) => {
            let candidate = input.resolve()?;
            let is_crs = candidate.is_crs();
            emit(&MembershipReport {
                is_crs,
                profile: candidate.residue_profile().residues().to_vec(),
            })?;
            Ok(if is_crs { 0 } else { 1 })
        }
        Command::Residues(input) => {
            let candidate = input.resolve()?;
            emit(&ProfileReport {
                h: candidate.modulus().get(),
                profile: candidate.residue_profile().residues().to_vec(),
            })?;
            Ok(0)
        }
        Command::Scale { candidate, p } => {
            emit(&candidate.resolve()?.scale(p)?)?;
            Ok(0)
        }
        Command::Affine { candidate, p, l } => {
            emit(&candidate.resolve()?.affine(p, l)?)?;
            Ok(0)
        }
        Command::Shift { candidate, l } => {
            emit(&candidate.resolve()?.shift_multiples(&l)?)?;
            Ok(0)
        }
        Command::Omega { h } => {
            emit(&RootSet::omega(Modulus::new(h)?))?;
            Ok(0)
        }
        Command::Power { h, p } => {
            let set = match h {
                Some(h) => RootSet::omega(Modulus::new(h)?),
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    serde_json::from_str(&buf)?
                }
            };
            emit(&set.pow(p))?;
            Ok(0)
        }
        Command::SolveBranches { h, p } => match solve_branch_vector(Modulus::new(h)?, p)? {
            BranchOutcome::Solved(bv) => {
                let roots = apply_branches(&bv)?;
                emit(&SolvedReport {
                    h,
                    p,
                    l: bv.indices(),
                    roots: &roots,
                })?;
                Ok(0)
            }
            BranchOutcome::NoSolution { gcd, witness_k } => {
                emit(&NoSolutionReport { gcd, witness_k })?;
                Ok(1)
            }
        },
        Command::BruteBranches { h, p, cap } => {
            let report = brute_force_search(Modulus::new(h)?, p, cap)?;
            let found = !report.solutions.is_empty();
            emit(&report)?;
            Ok(if found { 0 } else { 1 })
        }
        Command::Rational { h, p, q, l, route } => {
            let h = Modulus::new(h)?;
            let bv = match l {
                Some(l) => BranchVector::new(h, p, l)?,
                None => match solve_branch_vector(h, p)? {
                    BranchOutcome::Solved(bv) => bv,
                    BranchOutcome::NoSolution { gcd, witness_k } => {
                        emit(&NoSolutionReport { gcd, witness_k })?;
                        return Ok(1);
                    }
                },
            };
            let set = match route {
                Route::RootFirst => rational_power_root_first(&bv, q)?,
                Route::PowerFirst => rational_power_power_first(&bv, q)?,
            };
            emit(&set)?;
            Ok(0)
        }
        Command::Verify { hmax, pmax, cap } => {
            let report = verify::run(hmax, pmax, cap)?;
            let passed = report.passed();
            emit(&report)?;
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(2)
        }
    }
}
