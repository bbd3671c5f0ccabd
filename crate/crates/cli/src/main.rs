//! `riffle`: build, verify and simulate amazing matrices from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use riffle_algebra::amazing::{amazing_matrix, descent_polynomial, foulkes_determinant, verify_spectrum};
use riffle_algebra::eulerian::{foulkes_matrix, idempotent_s_expansion, worpitzky_matrix};
use riffle_algebra::oracle::shuffles::transition_report;
use riffle_algebra::oracle::{
    enumerate_b_shuffles, idempotent_group, oracle_transition_matrix, simulate_carries, simulate_shuffle_chain,
    SimulationConfig,
};
use riffle_algebra::verify::Suite;
use riffle_algebra::Error;
use serde_json::{json, Value};

use output::{document, matrix_csv, matrix_json, meta, print_json, state_labels, strings};

/// Columns per simulated addition in `simulate carries`.
const CARRY_DIGITS: u32 = 8;

#[derive(Parser, Debug)]
#[command(name = "riffle", version, about = "Exact amazing matrices, Eulerian idempotents and shuffle oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn positive() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transition matrix P(b) of the descent / carries chain.
    Amazing {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
        /// Divide by b^n and print exact fractions.
        #[arg(long)]
        normalized: bool,
        /// Label states 0..n-1 instead of 1..n.
        #[arg(long)]
        zero_based: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Add a header row and state labels to CSV output.
        #[arg(long)]
        header: bool,
    },
    /// Foulkes matrix F(i,j).
    Foulkes {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        /// Also compute det F.
        #[arg(long)]
        det: bool,
    },
    /// Worpitzky matrix W(i,j), the inverse of the Foulkes matrix.
    Worpitzky {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
    },
    /// Exact eigenvector checks of P(b).
    Eigen {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
    },
    /// Eulerian idempotents on S-words or in the group algebra.
    Idempotents {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long, value_enum, default_value_t = IdempotentBasis::S)]
        basis: IdempotentBasis,
    },
    /// Descent generating polynomial of a b^r-shuffle.
    DescentPoly {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
        #[arg(long = "r", value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
    },
    /// Brute-force enumeration over the symmetric group.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Seeded Monte-Carlo estimate of a chain.
    Simulate {
        #[arg(value_enum)]
        chain: Chain,
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
        #[arg(long, value_parser = positive())]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Run identity suites.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Descent transition matrix by sweeping all of S_n.
    Transition {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
    },
    /// All b-shuffle outcomes with multiplicity.
    Shuffles {
        #[arg(long = "n", value_parser = positive())]
        n: u64,
        #[arg(long = "b", value_parser = positive())]
        b: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Every exact identity for 1 <= n <= max-n.
    All {
        #[arg(long = "max-n", value_parser = positive())]
        max_n: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdempotentBasis {
    S,
    Group,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Chain {
    Shuffle,
    Carries,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::IdentityFailed { .. } | Error::LumpingViolated { .. } => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Amazing { n, b, normalized, zero_based, format, header } => {
            let m = amazing_matrix(n as usize, b)?;
            let labels = state_labels(m.n(), zero_based);
            match format {
                Format::Csv => {
                    let labels = header.then_some(labels.as_slice());
                    if normalized {
                        print!("{}", matrix_csv(&m.normalized(), labels));
                    } else {
                        print!("{}", matrix_csv(m.entries(), labels));
                    }
                }
                Format::Json => {
                    let meta = meta("amazing", json!({"n": n, "b": b, "normalized": normalized, "zero_based": zero_based}));
                    let matrix = if normalized { matrix_json(&m.normalized()) } else { matrix_json(m.entries()) };
                    print_json(&document(
                        meta,
                        vec![("states", json!(labels)), ("normalizer", json!(m.normalizer().to_string())), ("matrix", matrix)],
                    ));
                }
            }
            Ok(0)
        }
        Command::Foulkes { n, det } => {
            let f = foulkes_matrix(n as usize);
            let mut payload = vec![("matrix", matrix_json(&f.entries))];
            if det {
                payload.push(("determinant", json!(foulkes_determinant(n as usize)?.to_string())));
            }
            print_json(&document(meta("foulkes", json!({"n": n, "det": det})), payload));
            Ok(0)
        }
        Command::Worpitzky { n } => {
            let w = worpitzky_matrix(n as usize);
            print_json(&document(meta("worpitzky", json!({"n": n})), vec![("matrix", matrix_json(&w.entries))]));
            Ok(0)
        }
        Command::Eigen { n, b } => {
            let report = verify_spectrum(n as usize, b)?;
            let ok = report.all_passed();
            print_json(&document(
                meta("eigen", json!({"n": n, "b": b})),
                vec![("all_passed", json!(ok)), ("checks", serde_json::to_value(&report.checks).expect("serializable"))],
            ));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Idempotents { n, basis } => {
            let n = n as usize;
            let mut list = Vec::new();
            for k in 1..=n {
                let terms: Vec<Value> = match basis {
                    IdempotentBasis::S => idempotent_s_expansion(n, k)?
                        .terms()
                        .iter()
                        .map(|(w, c)| json!({"word": w.parts(), "coefficient": c.to_string()}))
                        .collect(),
                    IdempotentBasis::Group => idempotent_group(n, k)?
                        .terms()
                        .iter()
                        .map(|(p, c)| json!({"permutation": p.images(), "coefficient": c.to_string()}))
                        .collect(),
                };
                list.push(json!({"k": k, "terms": terms}));
            }
            let basis = match basis {
                IdempotentBasis::S => "s",
                IdempotentBasis::Group => "group",
            };
            print_json(&document(meta("idempotents", json!({"n": n, "basis": basis})), vec![("idempotents", json!(list))]));
            Ok(0)
        }
        Command::DescentPoly { n, b, r } => {
            let p = descent_polynomial(n as usize, b, r)?;
            print_json(&document(
                meta("descent-poly", json!({"n": n, "b": b, "r": r})),
                vec![("base", json!(p.base.to_string())), ("coefficients", strings(&p.coeffs)), ("mass", json!(p.mass().to_string()))],
            ));
            Ok(0)
        }
        Command::Oracle { command: OracleCommand::Transition { n, b } } => {
            let oracle = oracle_transition_matrix(n as usize, b)?;
            let report = transition_report(&amazing_matrix(n as usize, b)?);
            let ok = report.all_passed();
            print_json(&document(
                meta("oracle transition", json!({"n": n, "b": b})),
                vec![("matrix", matrix_json(&oracle)), ("matches_amazing", json!(ok))],
            ));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Oracle { command: OracleCommand::Shuffles { n, b } } => {
            let shuffles = enumerate_b_shuffles(n as usize, b)?;
            let report = shuffles.structure_report();
            let ok = report.all_passed();
            let list: Vec<Value> = shuffles
                .multiplicity
                .iter()
                .map(|(p, c)| json!({"permutation": p.images(), "multiplicity": c.to_string()}))
                .collect();
            print_json(&document(
                meta("oracle shuffles", json!({"n": n, "b": b})),
                vec![
                    ("total", json!(shuffles.total().to_string())),
                    ("shuffles", json!(list)),
                    ("checks", serde_json::to_value(&report.checks).expect("serializable")),
                ],
            ));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Simulate { chain, n, b, trials, seed } => {
            let cfg = SimulationConfig::new(trials, seed);
            let n = n as usize;
            let (name, sample) = match chain {
                Chain::Shuffle => ("simulate shuffle", simulate_shuffle_chain(n, b, &cfg)?),
                Chain::Carries => ("simulate carries", simulate_carries(n, b, CARRY_DIGITS, &cfg)?),
            };
            let exact = amazing_matrix(n, b)?.normalized();
            let tv = sample.tv_distances(&exact)?;
            let max_tv = tv.iter().cloned().fold(0.0, f64::max);
            let mut params = json!({"n": n, "b": b, "trials": trials, "steps": cfg.steps});
            if let Chain::Carries = chain {
                params["digits"] = json!(CARRY_DIGITS);
            }
            let mut m = meta(name, params);
            m.insert("seed".into(), json!(seed));
            print_json(&document(
                m,
                vec![
                    ("states", json!(state_labels(n, true))),
                    ("counts", json!(sample.counts)),
                    ("frequencies", json!(sample.frequencies())),
                    ("exact", matrix_json(&exact)),
                    ("tv_distances", json!(tv)),
                    ("max_tv", json!(max_tv)),
                ],
            ));
            Ok(0)
        }
        Command::Verify { command: VerifyCommand::All { max_n } } => {
            let report = Suite::new(max_n as usize).run();
            let mut table: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
            let mut order: Vec<&str> = Vec::new();
            for c in &report.checks {
                let entry = table.entry(c.identity.as_str()).or_insert_with(|| {
                    order.push(c.identity.as_str());
                    (0, 0)
                });
                entry.0 += 1;
                entry.1 += usize::from(c.passed);
            }
            let width = order.iter().map(|s| s.len()).max().unwrap_or(8).max(8);
            println!("{:<width$}  {:>6}  {:>6}  result", "identity", "checks", "passed");
            for id in &order {
                let (total, passed) = table[id];
                let result = if total == passed { "PASS" } else { "FAIL" };
                println!("{id:<width$}  {total:>6}  {passed:>6}  {result}");
            }
            for f in report.failures() {
                println!("failed: {} at {}: {}", f.identity, f.params, f.detail.as_deref().unwrap_or(""));
            }
            let ok = report.all_passed();
            println!("{} of {} checks passed (max-n {max_n})", report.passed_count(), report.checks.len());
            Ok(if ok { 0 } else { 1 })
        }
    }
}
