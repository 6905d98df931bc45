use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use qcalc::difcalc::Calculus;
use qcalc::funalg::{FunElement, FunKey};
use qcalc::qlie::{fit_sudbery, structure_constants, DIM};
use qcalc::repcat::{braiding, cg_system, r_matrix};
use qcalc::verifier::dump::{self, default_sudbery_pairs};
use qcalc::verifier::{self, parse_suites, Format, Suite, VerifyConfig, DEFAULT_SEED};
use qcalc::{Error, ScalarMatrix};

#[derive(Parser)]
#[command(name = "qcalc", version, about = "Exact checks for the quantum Lie algebra of sl2 and its differential calculus")]
struct Cli {
    /// Largest irrep label used by the function algebra and the realization.
    #[arg(long, global = true, default_value_t = 4)]
    max_two_j: u32,

    /// Seed for the randomized associativity triples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Output format: text or records.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,

    /// Comma-separated suites to run (default: all).
    #[arg(long, global = true, value_parser = parse_suite_list)]
    suites: Option<BTreeSet<Suite>>,

    /// Overwrite the pinned golden files with freshly computed ones.
    #[arg(long, global = true)]
    regen_golden: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suites and report each check.
    VerifyAll,
    /// Clebsch-Gordan decomposition of V_a ⊗ V_b.
    Cg { a: u32, b: u32 },
    /// Structure constants c[k][j][i] of the bracket.
    StructureConstants,
    /// Braiding and R-matrix on V_a ⊗ V_b.
    Rmatrix { a: u32, b: u32 },
    /// Fitted C and f matrices per irrep on {0,1,2}².
    SudberyFit,
    /// Classical and generalized Leibniz defects on the fundamental pairs.
    Leibniz,
    /// Serialize an artifact: structure-constants, gamma, d-table, antisymmetry, sudbery, cg A B, rmatrix A B.
    Dump {
        #[arg(required = true, num_args = 1..)]
        selector: Vec<String>,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite_list(s: &str) -> Result<BTreeSet<Suite>, String> {
    parse_suites(s).map_err(|e| e.to_string())
}

fn print_json(v: &Value) {
    print!("{}", dump::to_text(v));
}

fn print_matrix(name: &str, m: &ScalarMatrix) {
    println!("{name}:");
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m[(r, c)].to_string()).collect();
        println!("  {}", row.join("\t"));
    }
}

fn run(cli: Cli) -> qcalc::Result<u8> {
    if cli.max_two_j < 2 {
        return Err(Error::Usage(format!("--max-two-j must be at least 2, got {}", cli.max_two_j)));
    }
    let records = cli.format == Format::Records;
    match cli.command {
        Command::VerifyAll => {
            let config = VerifyConfig {
                max_two_j: cli.max_two_j,
                suites: cli.suites.unwrap_or_else(|| Suite::ALL.into_iter().collect()),
                seed: cli.seed,
                format: cli.format,
                regen_golden: cli.regen_golden,
                ..VerifyConfig::default()
            };
            let start = Instant::now();
            let reports = verifier::run(&config)?;
            print!("{}", verifier::render(&reports, config.format));
            eprintln!("elapsed {:.1?}", start.elapsed());
            return Ok(verifier::exit_status(&reports) as u8);
        }
        Command::Cg { a, b } => {
            if records {
                print_json(&dump::cg_json(a, b)?);
            } else {
                let cg = cg_system(a, b)?;
                for c in &cg.components {
                    print_matrix(&format!("twoJ={} embed", c.two_j), &c.embed);
                    print_matrix(&format!("twoJ={} project", c.two_j), &c.project);
                }
            }
        }
        Command::StructureConstants => {
            if records {
                print_json(&dump::structure_constants_json()?);
            } else {
                let c = structure_constants()?;
                for (k, by_j) in c.iter().enumerate() {
                    for (j, by_i) in by_j.iter().enumerate() {
                        for (i, x) in by_i.iter().enumerate() {
                            if !x.is_zero() {
                                println!("c[{k}][{j}][{i}] = {x}");
                            }
                        }
                    }
                }
            }
        }
        Command::Rmatrix { a, b } => {
            if records {
                print_json(&dump::rmatrix_json(a, b)?);
            } else {
                print_matrix("braiding", braiding(a, b)?.as_ref());
                print_matrix("R", &r_matrix(a, b)?);
            }
        }
        Command::SudberyFit => {
            let fit = fit_sudbery(&default_sudbery_pairs())?;
            if records {
                print_json(&dump::sudbery_json(&fit)?);
            } else {
                for (mu, m) in fit.c.iter() {
                    print_matrix(&format!("C on twoJ={mu}"), m);
                }
                for j in 0..DIM {
                    for i in 0..DIM {
                        for (nu, m) in fit.f[j][i].iter() {
                            print_matrix(&format!("f[{j}][{i}] on twoJ={nu}"), m);
                        }
                    }
                }
            }
        }
        Command::Leibniz => {
            let calc = Calculus::new(cli.max_two_j)?;
            let fit = fit_sudbery(&default_sudbery_pairs())?;
            let mut table = Map::new();
            for x in FunKey::all(1) {
                for y in FunKey::all(1) {
                    let r = calc.leibniz_analysis(&FunElement::basis(x), &FunElement::basis(y), &fit)?;
                    if records {
                        table.insert(
                            format!("{x} {y}"),
                            json!({
                                "classical": dump::form_json(&r.classical_defect),
                                "generalized": dump::form_json(&r.generalized_defect),
                            }),
                        );
                    } else {
                        println!("a = {x}, b = {y}");
                        println!("  classical:   {}", r.classical_defect);
                        println!("  generalized: {}", r.generalized_defect);
                    }
                }
            }
            if records {
                print_json(&Value::Object(table));
            }
        }
        Command::Dump { selector } => print_json(&dump::dump(&selector, cli.max_two_j)?),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e @ Error::Usage(_)) => {
            eprintln!("qcalc: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("qcalc: {e}");
            ExitCode::from(1)
        }
    }
}
