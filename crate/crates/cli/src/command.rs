//! Argument handling and dispatch for the `mrba` binary.

use std::collections::BTreeSet;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mrba_core::rational;
use mrba_core::{Engine, Expr, FreePrimitiveGenerator, GeneratorBialgebra, Params, Rational, TrivialGenerator};
use serde::Serialize;

use crate::parse::{identifiers, parse, parse_in};
use crate::serialize::{render_degree, render_lincomb, render_rational, render_tensor2, Format};
use crate::suites::{self, Report, Suite};

#[derive(Debug, Parser)]
#[command(name = "mrba", version, about = "Exact arithmetic in free modified Rota-Baxter algebras")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Weight lambda, as p or p/q
    #[arg(long, global = true, default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
    pub lambda: Rational,
    /// Weight kappa of the operator identity (defaults to -lambda^2)
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    pub kappa: Option<Rational>,
    /// Comma-separated generator symbols; inferred from the expression when omitted
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = GeneratorKind::Free)]
    pub generator: GeneratorKind,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    pub cases: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorKind {
    Trivial,
    Free,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct of an expression
    Coprod {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit of an expression
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode of an expression
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Filtration degree of an expression
    Deg {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run seeded property suites
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).ok_or_else(|| format!("`{s}` is not a rational of the form p or p/q"))
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout: stdout + "\n", stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn eval_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

fn needs_hopf(cmd: &Command) -> bool {
    match cmd {
        Command::Eval { .. } | Command::Deg { .. } => false,
        Command::Coprod { .. } | Command::Counit { .. } | Command::Antipode { .. } => true,
        Command::Check { suite } => suite.expand().into_iter().any(Suite::needs_hopf),
    }
}

fn params(opts: &Opts) -> Params {
    match &opts.kappa {
        Some(k) => Params::algebra(opts.lambda.clone(), k.clone()),
        None => Params::hopf(opts.lambda.clone()),
    }
}

fn generator(opts: &Opts, expr: Option<&Expr>) -> Result<Arc<dyn GeneratorBialgebra>, String> {
    if opts.generator == GeneratorKind::Trivial {
        return Ok(Arc::new(TrivialGenerator));
    }
    let symbols: BTreeSet<char> = match &opts.alphabet {
        Some(list) => {
            let mut out = BTreeSet::new();
            for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let mut chars = part.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => {
                        out.insert(c);
                    }
                    _ => return Err(format!("alphabet symbols must be single characters, got `{part}`")),
                }
            }
            out
        }
        None => {
            let mut out = BTreeSet::from(['a']);
            if let Some(e) = expr {
                out.extend(identifiers(e).iter().flat_map(|s| s.chars()));
            }
            out
        }
    };
    let gen = FreePrimitiveGenerator::new(symbols).map_err(|e| e.to_string())?;
    Ok(Arc::new(gen))
}

#[derive(Serialize)]
struct CheckJson<'a> {
    passed: bool,
    seed: u64,
    suites: &'a [Report],
}

pub fn run(cli: &Cli) -> Outcome {
    let opts = &cli.opts;
    let params = params(opts);
    if needs_hopf(&cli.command) && !params.is_hopf() {
        let lambda_sq = -(&opts.lambda * &opts.lambda);
        return Outcome::usage(format!(
            "coalgebra and Hopf commands require kappa = -lambda^2 (lambda = {}, kappa = {}, -lambda^2 = {})",
            opts.lambda, params.kappa, lambda_sq
        ));
    }
    let text = match &cli.command {
        Command::Eval { expr }
        | Command::Coprod { expr }
        | Command::Counit { expr }
        | Command::Antipode { expr }
        | Command::Deg { expr } => expr,
        Command::Check { suite } => return check(opts, params, *suite),
    };
    let syntax = match parse(text) {
        Ok(e) => e,
        Err(e) => return Outcome::usage(e),
    };
    let gen = match generator(opts, Some(&syntax)) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e),
    };
    let expr = match parse_in(text, gen.as_ref()) {
        Ok(e) => e,
        Err(e) => return Outcome::usage(e),
    };
    let engine = Engine::new(params, gen).with_cache(true);
    let result = engine.eval(&expr).and_then(|u| {
        Ok(match &cli.command {
            Command::Eval { .. } => render_lincomb(&u, opts.format),
            Command::Coprod { .. } => render_tensor2(&engine.coproduct(&u)?, opts.format),
            Command::Counit { .. } => render_rational(&engine.counit(&u), opts.format),
            Command::Antipode { .. } => render_lincomb(&engine.antipode(&u)?, opts.format),
            Command::Deg { .. } => render_degree(engine.filtration_degree(&u)?, opts.format),
            Command::Check { .. } => unreachable!("handled above"),
        })
    });
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::usage(e),
    }
}

fn check(opts: &Opts, params: Params, suite: Suite) -> Outcome {
    let gen = match generator(opts, None) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e),
    };
    let engine = Engine::new(params, gen).with_cache(true);
    let reports: Vec<Report> =
        suite.expand().into_iter().map(|s| suites::run(&engine, s, opts.seed, opts.cases)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let stdout = match opts.format {
        Format::Json => {
            serde_json::to_string(&CheckJson { passed, seed: opts.seed, suites: &reports }).expect("serializable")
        }
        Format::Text => {
            let mut lines: Vec<String> = reports
                .iter()
                .map(|r| match &r.counterexample {
                    None => format!("{:<11}pass  {} cases", r.suite.name(), r.cases),
                    Some(c) => format!("{:<11}FAIL  {c}", r.suite.name()),
                })
                .collect();
            let failed = reports.iter().filter(|r| !r.passed).count();
            lines.push(if failed == 0 {
                format!("all {} suites passed (seed {})", reports.len(), opts.seed)
            } else {
                format!("{failed} of {} suites failed (seed {})", reports.len(), opts.seed)
            });
            lines.join("\n")
        }
    };
    let mut out = Outcome::ok(stdout);
    if !passed {
        out.code = 1;
    }
    out
}
