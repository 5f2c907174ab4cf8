use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use craftbench::gen;
use craftbench::pipeline::{self, Budgets, Options, Source, Target};
use craftbench::reductions::{Strictness, SubgraphVariant, BASE_WIDTH};
use craftbench::{
    sat_bf, solve_with_stats, validate_decomposition, validate_interval_model, verify_witness,
    x3c_bf, ColoredGraph, CraftingInstance, Decomposition, Graph, IntervalModel, Method, Mode,
    Witness,
};

/// Exit code for unreadable input and rejected preconditions.
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "craftbench", version, about = "String Crafting workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a random instance. The seed comes from --seed, then CRAFTBENCH_SEED, then 0.
    Generate(GenerateArgs),
    /// Decide a crafting, DIMACS or X3C instance and print a witness.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Split)]
        method: MethodArg,
        /// Also print the solver's state count.
        #[arg(long)]
        stats: bool,
    },
    /// Check a certificate; exit 0 when it is valid and 1 when it is not.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Print the instance a source reduces to.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        target: Target,
        #[arg(long, value_enum, default_value_t = VariantArg::Caterpillar)]
        variant: VariantArg,
        /// Decomposition width for the MSPD target.
        #[arg(long, default_value_t = BASE_WIDTH)]
        width: usize,
        /// Accept strings that are not palindromes.
        #[arg(long)]
        permissive: bool,
    },
    /// Reduce, decide both sides and translate witnesses both ways.
    /// Exit code 0 on SUCCESS, 2 on INCONCLUSIVE, 1 on FAIL.
    Roundtrip {
        input: PathBuf,
        #[arg(long)]
        target: Target,
        /// Print the report as one JSON object.
        #[arg(long)]
        json: bool,
        /// Add wall-clock times per stage.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        permissive: bool,
        /// Largest target graph handed to an exact oracle.
        #[arg(long, default_value_t = Budgets::default().vertices)]
        oracle_vertex_budget: usize,
        /// Search steps an exact oracle may take.
        #[arg(long, default_value_t = Budgets::default().states)]
        oracle_state_budget: u64,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    seed: Option<u64>,
    /// Upper bound on |s|.
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 5)]
    max_strings: usize,
    /// Palindromic strings; for sc they also start and end with 1.
    #[arg(long)]
    palindromic: bool,
    #[arg(long, default_value_t = 4)]
    vars: usize,
    #[arg(long, default_value_t = 3)]
    clauses: usize,
    /// X3C universe size, a multiple of 3.
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// X3C set count, more than n/3.
    #[arg(long, default_value_t = 5)]
    m: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sc,
    Ovc,
    Cnf,
    X3c,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    BruteForce,
    HeldKarp,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Caterpillar,
    Connected,
    Induced,
    InducedConnected,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// A permutation (1-based, whitespace separated) for a crafting instance.
    Crafting { instance: PathBuf, witness: PathBuf },
    /// A decomposition (one bag per line) of an edge-list graph.
    Decomposition {
        graph: PathBuf,
        decomposition: PathBuf,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        bags: usize,
    },
    /// An interval model (one `l r` line per vertex) of a coloured graph.
    Intervals { graph: PathBuf, model: PathBuf },
}

fn read(path: &Path) -> Result<String, String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(text)
}

/// Writes to stdout, treating a closed pipe as done.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn parse_source(path: &Path) -> Result<Source, String> {
    Source::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn generate(a: &GenerateArgs) -> Result<String, String> {
    let seed = a.seed.unwrap_or_else(|| gen::seed_from_env(0));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_len = a.max_len.max(1);
    let max_strings = a.max_strings.max(1);
    Ok(match a.kind {
        Kind::Sc | Kind::Ovc => {
            let mode = match a.kind {
                Kind::Sc => Mode::Domination,
                _ => Mode::Orthogonality,
            };
            let inst = if a.palindromic {
                let ends = mode == Mode::Domination;
                gen::random_palindromic(&mut rng, mode, max_len, max_strings, ends)
            } else {
                gen::random_crafting(&mut rng, mode, max_len, max_strings)
            };
            inst.to_string()
        }
        Kind::Cnf => gen::random_cnf(&mut rng, a.vars.max(1), a.clauses.max(1)).to_string(),
        Kind::X3c => {
            if !a.n.is_multiple_of(3) || a.m <= a.n / 3 {
                return Err("x3c needs n divisible by 3 and m > n/3".into());
            }
            gen::random_x3c(&mut rng, a.n, a.m).to_string()
        }
    })
}

fn solve(input: &Path, method: MethodArg, stats: bool) -> Result<String, String> {
    let method = match method {
        MethodArg::BruteForce => Method::BruteForce,
        MethodArg::HeldKarp => Method::HeldKarp,
        MethodArg::Split => Method::Split,
    };
    Ok(match parse_source(input)? {
        Source::Crafting(inst) => {
            let (found, st) = solve_with_stats(&inst, method);
            let mut out = match found {
                Some(w) => format!("yes\n{w}\n"),
                None => "no\n".to_string(),
            };
            if stats {
                out += &format!("states={}\n", st.states);
            }
            out
        }
        Source::Cnf(cnf) => match sat_bf(&cnf) {
            Some(a) => {
                let lits: Vec<String> = a
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| {
                        if b {
                            format!("{}", i + 1)
                        } else {
                            format!("-{}", i + 1)
                        }
                    })
                    .collect();
                format!("yes\n{} 0\n", lits.join(" "))
            }
            None => "no\n".to_string(),
        },
        Source::X3c(x) => match x3c_bf(&x) {
            Some(cover) => {
                let ids: Vec<String> = cover.iter().map(usize::to_string).collect();
                format!("yes\n{}\n", ids.join(" "))
            }
            None => "no\n".to_string(),
        },
    })
}

fn verify(cmd: &VerifyCommand) -> Result<Result<(), String>, String> {
    match cmd {
        VerifyCommand::Crafting { instance, witness } => {
            let inst = CraftingInstance::parse(&read(instance)?).map_err(|e| e.to_string())?;
            let w = Witness::parse(&read(witness)?).map_err(|e| e.to_string())?;
            Ok(match verify_witness(&inst, &w) {
                Ok(true) => Ok(()),
                Ok(false) => Err("the crafted string violates the mode".into()),
                Err(e) => Err(e.to_string()),
            })
        }
        VerifyCommand::Decomposition {
            graph,
            decomposition,
            width,
            bags,
        } => {
            let (g, _) = Graph::parse(&read(graph)?).map_err(|e| e.to_string())?;
            let d = Decomposition::parse(&read(decomposition)?).map_err(|e| e.to_string())?;
            Ok(validate_decomposition(&g, &d, *width, *bags).map_err(|e| e.to_string()))
        }
        VerifyCommand::Intervals { graph, model } => {
            let cg = ColoredGraph::parse(&read(graph)?).map_err(|e| e.to_string())?;
            let m = IntervalModel::parse(&read(model)?).map_err(|e| e.to_string())?;
            Ok(validate_interval_model(&cg, &m).map_err(|e| e.to_string()))
        }
    }
}

fn strictness(permissive: bool) -> Strictness {
    if permissive {
        Strictness::Permissive
    } else {
        Strictness::Strict
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate(a) => emit(&generate(&a)?),
        Command::Solve {
            input,
            method,
            stats,
        } => emit(&solve(&input, method, stats)?),
        Command::Verify(cmd) => {
            return Ok(match verify(&cmd)? {
                Ok(()) => {
                    emit("valid\n");
                    ExitCode::SUCCESS
                }
                Err(why) => {
                    emit(&format!("invalid: {why}\n"));
                    ExitCode::from(1)
                }
            })
        }
        Command::Reduce {
            input,
            target,
            variant,
            width,
            permissive,
        } => {
            let variant = match variant {
                VariantArg::Caterpillar => SubgraphVariant::Caterpillar,
                VariantArg::Connected => SubgraphVariant::Connected,
                VariantArg::Induced => SubgraphVariant::Induced,
                VariantArg::InducedConnected => SubgraphVariant::InducedConnected,
            };
            let source = parse_source(&input)?;
            let out = pipeline::reduce(&source, target, variant, width, strictness(permissive))
                .map_err(|e| e.to_string())?;
            emit(&out.to_string());
        }
        Command::Roundtrip {
            input,
            target,
            json,
            timings,
            permissive,
            oracle_vertex_budget,
            oracle_state_budget,
        } => {
            let source = parse_source(&input)?;
            let opts = Options {
                budgets: Budgets {
                    vertices: oracle_vertex_budget,
                    states: oracle_state_budget,
                },
                strictness: strictness(permissive),
                timings,
            };
            let report = pipeline::roundtrip(&source, target, &opts).map_err(|e| e.to_string())?;
            if json {
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&report.to_string());
            }
            return Ok(ExitCode::from(report.verdict.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
