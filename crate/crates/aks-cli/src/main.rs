use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use aks_algebra::aks::{aks_is_prime, Verdict};
use aks_algebra::fastdiv::bench_divide;
use aks_algebra::numtheory::trial_division_is_prime_u64;
use aks_cli::{run_suite, SuiteConfig, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "aks", about = "Deterministic primality with a verifiable trail", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide primality; exit 0 for PRIME, 1 for COMPOSITE.
    Test {
        /// The number to test, decimal or 0x-prefixed hex.
        n: String,
    },
    /// Decide primality and emit the full witness trace as JSON.
    Trace {
        /// The number to test, decimal or 0x-prefixed hex.
        n: String,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run a property suite; exit 0 exactly when no case fails.
    Verify {
        /// Suite name; see the error message for the full list.
        suite: String,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_p: Option<u64>,
        #[arg(long)]
        max_m: Option<u64>,
        #[arg(long)]
        max_r: Option<u64>,
        /// RNG seed for sampled cases; AKS_SEED overrides.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Time reversal-based division against long division.
    Bench {
        /// Comma-separated divisor degrees, ascending.
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 256, 1024, 4096])]
        degrees: Vec<usize>,
        /// Prime coefficient modulus.
        #[arg(long, default_value_t = 65521)]
        modulus: u64,
        /// Timed repetitions per degree.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Also write the report as JSON here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
}

fn parse_natural(s: &str) -> Option<BigUint> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        BigUint::parse_bytes(hex.as_bytes(), 16)
    } else {
        BigUint::parse_bytes(s.as_bytes(), 10)
    }
}

fn env_seed() -> Option<u64> {
    std::env::var("AKS_SEED").ok()?.trim().parse().ok()
}

fn run() -> u8 {
    match Cli::parse().command {
        Command::Test { n } => {
            let Some(n) = parse_natural(&n) else {
                eprintln!("not a natural number: {n}");
                return 2;
            };
            let (verdict, _) = aks_is_prime(&n);
            println!("{verdict}");
            u8::from(verdict == Verdict::Composite)
        }
        Command::Trace { n, out } => {
            let Some(n) = parse_natural(&n) else {
                eprintln!("not a natural number: {n}");
                return 2;
            };
            let (verdict, trace) = aks_is_prime(&n);
            let json = trace.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => println!("{json}"),
            }
            u8::from(verdict == Verdict::Composite)
        }
        Command::Verify {
            suite,
            max_n,
            max_p,
            max_m,
            max_r,
            seed,
            jobs,
        } => {
            let mut cfg = SuiteConfig::default();
            cfg.max_n = max_n;
            cfg.max_p = max_p;
            cfg.max_m = max_m;
            cfg.max_r = max_r;
            if let Some(s) = env_seed().or(seed) {
                cfg.seed = s;
            }
            if let Some(j) = jobs {
                cfg.jobs = j.max(1);
            }
            let Some(report) = run_suite(&suite, &cfg) else {
                eprintln!("unknown suite: {suite}");
                eprintln!("available suites: {}", SUITE_NAMES.join(", "));
                return 2;
            };
            println!("{}", report.render());
            u8::from(!report.passed())
        }
        Command::Bench {
            degrees,
            modulus,
            trials,
            json,
        } => {
            if !trial_division_is_prime_u64(modulus) {
                eprintln!("modulus must be prime, got {modulus}");
                return 2;
            }
            if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
                eprintln!("degrees must be strictly ascending, got {degrees:?}");
                return 2;
            }
            if trials == 0 {
                eprintln!("trials must be positive");
                return 2;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(env_seed().unwrap_or(0xbe_4c));
            let report = match bench_divide(&degrees, modulus, trials, &mut rng) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("bench failed: {e}");
                    return 2;
                }
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(
                stdout,
                "modulus {} | {} trials per degree",
                report.modulus, report.trials
            );
            let _ = writeln!(
                stdout,
                "{:>8} {:>10} {:>14} {:>14} {:>8} {:>8}",
                "deg S", "deg P", "fast mean ns", "long mean ns", "ratio", "matched"
            );
            let mut all_matched = true;
            for row in &report.rows {
                all_matched &= row.all_trials_matched;
                let ratio = row.long_mean_ns as f64 / row.ks_mean_ns.max(1) as f64;
                let _ = writeln!(
                    stdout,
                    "{:>8} {:>10} {:>14} {:>14} {:>8.2} {:>8}",
                    row.divisor_degree,
                    row.dividend_degree,
                    row.ks_mean_ns,
                    row.long_mean_ns,
                    ratio,
                    row.all_trials_matched
                );
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).expect("serializable report");
                if let Err(e) = std::fs::write(&path, text + "\n") {
                    eprintln!("cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            u8::from(!all_matched)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}
