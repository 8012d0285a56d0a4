mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fistab::characters::{decompose, irreducible_character};
use fistab::charpoly::irreducible_charpoly;
use fistab::fi::{
    character_at, charpoly_of, dim_poly, module_sequence, murnaghan, phi, schur_apply,
    stability_profile, stable_decompose, tensor, CharSequence,
};
use fistab::oracle::{arnold_cohomology, coinvariant_piece, coinvariant_total_dim, DEFAULT_BUDGET};
use fistab::regression::criteria;
use fistab::{Error, FiSharpModule, Partition};
use serde_json::{json, Value};

/// Exact computations with FI#-modules and character polynomials.
#[derive(Parser)]
#[command(name = "fistab", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// A module `M[..] + ...` or a bare partition `[..]`.
#[derive(Clone)]
enum Target {
    Module(FiSharpModule),
    Partition(Partition),
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s.trim_start().starts_with('[') {
        s.parse().map(Target::Partition).map_err(|e: Error| e.to_string())
    } else {
        s.parse().map(Target::Module).map_err(|e: Error| e.to_string())
    }
}

fn parse_module(s: &str) -> Result<FiSharpModule, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone)]
struct Multidegree(Vec<usize>);

fn parse_multidegree(s: &str) -> Result<Multidegree, String> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Multidegree)
}

/// Where `stable-decompose` reads its character sequence from.
#[derive(Clone)]
enum Source {
    Module(FiSharpModule),
    Arnold(usize),
}

fn parse_source(s: &str) -> Result<Source, String> {
    match s.strip_prefix("arnold:") {
        Some(i) => i.trim().parse().map(Source::Arnold).map_err(|e| format!("grade: {e}")),
        None => parse_module(s).map(Source::Module),
    }
}

#[derive(Args)]
struct Budget {
    /// Largest ambient basis the oracle may build.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Character of V_n, or of the irreducible V_λ for a bare partition.
    Char {
        #[arg(value_parser = parse_target)]
        target: Target,
        /// Degree n (ignored for a bare partition).
        n: Option<usize>,
    },
    /// Decomposition of V_n into irreducibles.
    Decompose {
        #[arg(value_parser = parse_module)]
        module: FiSharpModule,
        n: usize,
    },
    /// Degreewise tensor product of two modules.
    Tensor {
        #[arg(value_parser = parse_module)]
        left: FiSharpModule,
        #[arg(value_parser = parse_module)]
        right: FiSharpModule,
    },
    /// Schur functor S_μ applied degreewise.
    Schur {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_module)]
        module: FiSharpModule,
    },
    /// Character polynomial of a module, or P_λ for a bare partition.
    Charpoly {
        #[arg(value_parser = parse_target)]
        target: Target,
    },
    /// dim V_n as a polynomial in n.
    Dimpoly {
        #[arg(value_parser = parse_module)]
        module: FiSharpModule,
    },
    /// Φ_a(V)_n = (V_{n+a})_{S_n} as a representation of S_a.
    Phi {
        #[arg(value_parser = parse_module)]
        module: FiSharpModule,
        a: usize,
        n: usize,
    },
    /// Injectivity and surjectivity onsets of Φ_a(V), a <= a_max.
    Stability {
        #[arg(value_parser = parse_module)]
        module: FiSharpModule,
        #[arg(long, default_value_t = 3)]
        a_max: usize,
        /// Defaults to max(9, generation degree + 1).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Stable decomposition of V(λ)_n ⊗ V(μ)_n.
    Murnaghan {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Multiplicities c_λ(n) of V(λ)_n, |λ| <= d, for a module or `arnold:<i>`.
    StableDecompose {
        #[arg(value_parser = parse_source)]
        source: Source,
        d: usize,
        /// Defaults to 2d + 2.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// One multigraded piece of the diagonal coinvariant algebra.
    Coinvariant {
        /// Number of variable sets.
        r: usize,
        n: usize,
        #[arg(long, value_parser = parse_multidegree)]
        multidegree: Multidegree,
        #[command(flatten)]
        budget: Budget,
    },
    /// Total dimension of the diagonal coinvariant algebra (r = 1 or 2).
    CoinvariantDim {
        r: usize,
        n: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// One grade of the cohomology of the pure braid group P_n.
    Arnold {
        n: usize,
        #[arg(long)]
        grade: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run the regression suite and print a pass/fail table.
    Verify,
}

/// Rendered output: text for humans, a JSON value for `--json`.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: impl serde::Serialize) -> Output {
    Output {
        text: text.into(),
        json: serde_json::to_value(json).expect("serializable output"),
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
    /// `verify` ran but something failed; the report is still printed.
    Verify(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Char { target, n } => {
            let chi = match (target, n) {
                (Target::Partition(l), _) => (*irreducible_character(&l)).clone(),
                (Target::Module(v), Some(n)) => character_at(&v, n),
                (Target::Module(_), None) => {
                    return Err(Failure::Usage("char of a module needs a degree n".into()))
                }
            };
            out(chi.to_string(), &chi)
        }
        Command::Decompose { module, n } => {
            let r = decompose(&character_at(&module, n))?;
            out(r.to_string(), &r)
        }
        Command::Tensor { left, right } => {
            let v = tensor(&left, &right)?;
            out(v.to_string(), &v)
        }
        Command::Schur { mu, module } => {
            let v = schur_apply(&mu, &module)?;
            out(v.to_string(), &v)
        }
        Command::Charpoly { target } => {
            let p = match target {
                Target::Partition(l) => irreducible_charpoly(&l),
                Target::Module(v) => charpoly_of(&v),
            };
            out(p.to_string(), render::charpoly_json(&p))
        }
        Command::Dimpoly { module } => {
            let p = dim_poly(&module);
            out(p.to_string(), render::dimpoly_json(&p))
        }
        Command::Phi { module, a, n } => {
            let r = phi(&module, a, n);
            out(r.to_string(), &r)
        }
        Command::Stability { module, a_max, max_n } => {
            let n_max = max_n.unwrap_or_else(|| 9.max(module.generation_degree() + 1));
            let prof = stability_profile(&module, a_max, n_max)?;
            out(render::stability_text(&prof), &prof)
        }
        Command::Murnaghan { lambda, mu, window } => {
            let r = murnaghan(&lambda, &mu, window)?;
            out(render::murnaghan_text(&r), &r)
        }
        Command::StableDecompose {
            source,
            d,
            max_n,
            window,
            budget,
        } => {
            let max_n = max_n.unwrap_or(2 * d + 2);
            let report = match source {
                Source::Module(v) => {
                    let certified = v.stability_degree_bound() + d;
                    stable_decompose(&module_sequence(&v, max_n), d, window)?
                        .with_certified_bound(certified)
                }
                Source::Arnold(i) => {
                    let seq = CharSequence::new(max_n, move |n| {
                        arnold_cohomology(i, n, budget.budget).map(|r| r.character)
                    });
                    stable_decompose(&seq, d, window)?
                }
            };
            out(render::stable_text(&report), &report)
        }
        Command::Coinvariant {
            r,
            n,
            multidegree: Multidegree(multidegree),
            budget,
        } => {
            if multidegree.len() != r {
                return Err(Failure::Usage(format!(
                    "--multidegree needs exactly r = {r} entries, got {}",
                    multidegree.len()
                )));
            }
            let report = coinvariant_piece(r, &multidegree, n, budget.budget)?;
            out(render::piece_text(&report), &report)
        }
        Command::CoinvariantDim { r, n, budget } => {
            let report = coinvariant_total_dim(r, n, budget.budget)?;
            out(render::total_text(&report), &report)
        }
        Command::Arnold { n, grade, budget } => {
            let report = arnold_cohomology(grade, n, budget.budget)?;
            out(render::piece_text(&report), &report)
        }
        Command::Verify => {
            let results: Vec<_> = criteria()
                .into_iter()
                .map(|c| (c.id, c.name, (c.run)()))
                .collect();
            let passed = results.iter().all(|(_, _, r)| r.is_ok());
            let text = render::verify_text(&results);
            let json = json!({
                "passed": passed,
                "criteria": results.iter().map(|(id, name, r)| json!({
                    "id": id,
                    "name": name,
                    "passed": r.is_ok(),
                    "detail": match r { Ok(d) | Err(d) => d },
                })).collect::<Vec<_>>(),
            });
            let output = Output { text, json };
            if !passed {
                return Err(Failure::Verify(output));
            }
            output
        }
    })
}

fn print(output: &Output, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(&output.json).expect("valid JSON"));
    } else {
        println!("{}", output.text);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print(&output, cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(output)) => {
            print(&output, cli.json);
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            if cli.json {
                let obj = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                println!("{}", serde_json::to_string_pretty(&obj).expect("valid JSON"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
