use std::num::NonZeroUsize;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sieve_core::abacus::{core, skew_quotient, AbacusDisplay};
use sieve_core::analysis::{analyze_shifted_with, analyze_with, Route};
use sieve_core::characters::{enumerate_bst, eval_at_root, perm, skew_char, skew_char_rect};
use sieve_core::qpoly::{bigint_json, csp_decompose, CspDecomposition};
use sieve_core::regression::builtin_checks;
use sieve_core::schur::{principal_specialization, principal_specialization_mod};
use sieve_core::shapes::{Composition, SkewShape};

#[derive(Parser)]
#[command(name = "sieve", version, about = "Skew Schur functions at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArg {
    /// Skew shape `L/M`, parts comma-separated, e.g. `9,9,6/2,1`.
    #[arg(long, value_parser = parse_shape)]
    shape: SkewShape,
}

#[derive(Subcommand)]
enum Command {
    /// Principal specialization s_{L/M}(1, q, ..., q^{k-1}).
    Specialize {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        vars: NonZeroUsize,
        /// Decompose modulo q^m - 1 into the divisor basis.
        #[arg(long = "mod")]
        modulus: Option<NonZeroUsize>,
        /// Compute the full polynomial before reducing.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition report modulo q^m - 1.
    Analyze {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        vars: NonZeroUsize,
        #[arg(long = "mod")]
        modulus: NonZeroUsize,
        /// Multiply by q^i before decomposing.
        #[arg(long)]
        shift: Option<usize>,
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// d-quotient of a skew shape.
    Quotient {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        order: NonZeroUsize,
        #[arg(long)]
        json: bool,
    },
    /// d-core of the outer (and inner) partition.
    Core {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        order: NonZeroUsize,
        #[arg(long)]
        json: bool,
    },
    /// Abacus diagram of the outer partition.
    Abacus {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        order: NonZeroUsize,
        /// Number of beads; defaults to the number of rows.
        #[arg(long)]
        beads: Option<usize>,
    },
    /// Border-strip tableaux with strips of size d.
    Bst {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        order: NonZeroUsize,
        #[arg(long)]
        json: bool,
    },
    /// Skew character value, rectangular type (d^n) or arbitrary cycle type.
    Char {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long = "type", conflicts_with = "nu", required_unless_present = "nu")]
        cycle: Option<NonZeroUsize>,
        #[arg(long, value_parser = parse_composition)]
        nu: Option<Composition>,
        #[arg(long)]
        json: bool,
    },
    /// s_{L/M}(1, w, ..., w^{N-1}) for w a primitive d-th root of unity.
    EvalRoot {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        vars: NonZeroUsize,
        #[arg(long)]
        order: NonZeroUsize,
        #[arg(long)]
        json: bool,
    },
    /// Residue-class matching permutation in one-line form.
    Perm {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        order: NonZeroUsize,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in regression checks.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(|e: sieve_core::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: sieve_core::Error| e.to_string())
}

fn route(full: bool) -> Route {
    if full {
        Route::Full
    } else {
        Route::Residue
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn decomposition_text(dec: &CspDecomposition) -> String {
    let mut out = format!("verdict: {}\n", dec.verdict());
    if let Some(coeffs) = dec.coefficients() {
        for (d, a) in coeffs {
            out.push_str(&format!("a_{d} = {a}\n"));
        }
    }
    out
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("SIEVE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("SIEVE_THREADS={raw:?} is not a thread count"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

/// Returns whether the command succeeded; domain failures are errors.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Specialize {
            shape,
            vars,
            modulus,
            full,
            json,
        } => {
            let (shape, k) = (shape.shape, vars.get());
            match modulus {
                None => {
                    let poly = principal_specialization(&shape, k);
                    if json {
                        let coeffs: Vec<Value> = poly.coeffs().iter().map(bigint_json).collect();
                        print_json(&json!({ "shape": shape.to_string(), "k": k, "coeffs": coeffs }));
                    } else {
                        println!("{poly}");
                    }
                }
                Some(m) => {
                    let m = m.get();
                    let reduced = match route(full) {
                        Route::Full => principal_specialization(&shape, k).reduce_mod(m),
                        Route::Residue => principal_specialization_mod(&shape, k, m),
                    };
                    print_json(&csp_decompose(&reduced, m).to_json());
                }
            }
        }
        Command::Analyze {
            shape,
            vars,
            modulus,
            shift,
            full,
            json,
        } => {
            let (shape, k, m) = (shape.shape, vars.get(), modulus.get());
            match shift {
                Some(i) => {
                    let dec = analyze_shifted_with(&shape, k, m, i, route(full))?;
                    if json {
                        print_json(&dec.to_json());
                    } else {
                        print!("{}", decomposition_text(&dec));
                    }
                }
                None => {
                    let report = analyze_with(&shape, k, m, route(full))?;
                    if json {
                        print_json(&report.to_json());
                    } else {
                        println!("shape: {}", report.shape);
                        println!("k = {k}, m = {m}");
                        println!("cardinality: {}", report.cardinality);
                        print!("{}", decomposition_text(&report.decomposition));
                    }
                }
            }
        }
        Command::Quotient { shape, order, json } => {
            let shape = shape.shape;
            let q = skew_quotient(&shape, order.get())?;
            let Some(components) = q.components() else {
                bail!("the {}-quotient of {shape} does not exist", order);
            };
            let text: Vec<String> = components.iter().map(ToString::to_string).collect();
            if json {
                print_json(&json!({ "shape": shape.to_string(), "d": order.get(), "components": text }));
            } else {
                println!("{}", text.join(" ; "));
            }
        }
        Command::Core { shape, order, json } => {
            let shape = shape.shape;
            let outer = core(shape.lambda(), order.get())?;
            let inner = core(shape.mu(), order.get())?;
            if json {
                print_json(&json!({
                    "shape": shape.to_string(),
                    "d": order.get(),
                    "lambda_core": outer.to_string(),
                    "mu_core": inner.to_string(),
                }));
            } else if shape.mu().is_empty() {
                println!("{outer}");
            } else {
                println!("{outer}/{inner}");
            }
        }
        Command::Abacus { shape, order, beads } => {
            let lambda = shape.shape.lambda().clone();
            let r = beads.unwrap_or(lambda.len());
            print!("{}", AbacusDisplay::new(&lambda, order.get(), r)?.render());
        }
        Command::Bst { shape, order, json } => {
            let shape = shape.shape;
            let tableaux = enumerate_bst(&shape, order.get())?;
            let character: i64 = tableaux.iter().map(|t| i64::from(t.sign())).sum();
            if json {
                let list: Vec<Value> = tableaux
                    .iter()
                    .map(|t| json!({ "heights": t.heights(), "sign": t.sign(), "diagram": t.render(&shape) }))
                    .collect();
                print_json(&json!({
                    "shape": shape.to_string(),
                    "d": order.get(),
                    "count": tableaux.len(),
                    "character": character,
                    "tableaux": list,
                }));
            } else {
                println!("count: {}", tableaux.len());
                println!("character: {character}");
                for t in &tableaux {
                    println!();
                    println!("sign {:+}, heights {:?}", t.sign(), t.heights());
                    print!("{}", t.render(&shape));
                }
            }
        }
        Command::Char { shape, cycle, nu, json } => {
            let shape = shape.shape;
            if let Some(d) = cycle {
                let v = skew_char_rect(&shape, d.get())?;
                print_json(&json!({
                    "value": bigint_json(&v.value),
                    "bst_count": bigint_json(&v.bst_count),
                    "epsilon": v.epsilon,
                }));
            } else {
                let nu = nu.expect("clap enforces --type or --nu");
                let value = skew_char(&shape, &nu)?;
                if json {
                    print_json(&json!({ "value": bigint_json(&value) }));
                } else {
                    println!("{value}");
                }
            }
        }
        Command::EvalRoot {
            shape,
            vars,
            order,
            json,
        } => {
            let value = eval_at_root(&shape.shape, vars.get(), order.get())?;
            if json {
                print_json(&json!({ "value": bigint_json(&value) }));
            } else {
                println!("{value}");
            }
        }
        Command::Perm { shape, order, json } => {
            let w = perm(&shape.shape, order.get())?;
            if json {
                print_json(&json!({ "perm": w.one_line(), "inversions": w.inversions(), "sign": w.sign() }));
            } else {
                println!("{w}");
            }
        }
        Command::Verify { json } => {
            let outcomes = builtin_checks();
            if json {
                let list: Vec<Value> = outcomes
                    .iter()
                    .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }))
                    .collect();
                print_json(&Value::Array(list));
            } else {
                for o in &outcomes {
                    let tag = if o.passed { "PASS" } else { "FAIL" };
                    println!("{tag} {}: {} ({})", o.id, o.name, o.detail);
                }
            }
            return Ok(outcomes.iter().all(|o| o.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
