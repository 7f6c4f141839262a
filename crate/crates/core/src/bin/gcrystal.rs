use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use geocrystal::gyt::{SharpElement, SharpJson};
use geocrystal::harness::trop::{cmd_trop, cmd_trop_expr, NamedFormula};
use geocrystal::harness::{
    cmd_act, cmd_graph, run_suite, ActKind, HarnessError, Suite, VerifyConfig, DEFAULT_MAX_RADIUS,
    DEFAULT_SEED,
};

/// Geometric crystals on U^- of SL(n+1), their tropicalization, and the
/// generalized Young tableaux crystal.
#[derive(Parser)]
#[command(name = "gcrystal", version)]
struct Cli {
    /// Rank n of SL(n+1).
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest radius `graph` will explore.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RADIUS)]
    max_radius: usize,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: verma, axioms, umorphism, fi-mi, prop43,
    /// positivity, sharp-axioms, ud-main or all.
    Verify {
        suite: String,
        /// Override the per-suite rank cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Apply a crystal operator to a JSON state (kinds: sharp, geomA, geomAlpha).
    Act {
        kind: String,
        #[arg(long)]
        i: usize,
        /// Integer exponent for sharp, nonzero rational for geometric kinds.
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        #[arg(long)]
        state: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the crystal graph of B♯ around a root as DOT.
    Graph {
        #[arg(long)]
        root: PathBuf,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tropical value of a chart formula (alpha_ik, gammaA, xi, xi_inv) at an
    /// integer point, or of an explicit expression with --expr.
    Trop {
        formula: Option<String>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated coordinates in index order (1,1), (1,2), …
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        point: Vec<i64>,
        /// Crystal exponent for alpha_ik.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<i64>,
        /// Subtraction-free expression, e.g. "(x+y)/z".
        #[arg(long)]
        expr: Option<String>,
        /// Assignments name=value for --expr.
        #[arg(long = "at", value_delimiter = ',')]
        at: Vec<String>,
    },
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), HarnessError> {
    match out {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::Verify { suite, cap } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { seed: cli.seed, cap };
            let reports = run_suite(suite, cli.n, &cfg)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            Ok(reports.iter().all(|r| r.holds))
        }
        Command::Act { kind, i, param, state, out } => {
            let kind: ActKind = kind.parse()?;
            let outcome = cmd_act(kind, i, &param, &fs::read_to_string(&state)?)?;
            write_out(&out, &format!("{}\n", outcome.state))?;
            eprintln!("{}", outcome.summary);
            Ok(true)
        }
        Command::Graph { root, radius, out } => {
            let json: SharpJson = serde_json::from_str(&fs::read_to_string(&root)?)?;
            let slice = cmd_graph(&SharpElement::from_json(&json)?, radius, cli.max_radius)?;
            let text = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&slice.to_json())?)
            } else {
                slice.to_dot()
            };
            write_out(&out, &text)?;
            eprintln!("{} nodes, {} arcs", slice.nodes.len(), slice.arcs.len());
            Ok(true)
        }
        Command::Trop { formula, i, k, point, z, expr, at } => {
            let values = match (formula, expr) {
                (Some(name), None) => {
                    let f = NamedFormula::parse(&name, i, k)?;
                    cmd_trop(&f, cli.n, &point, z)?
                }
                (None, Some(src)) => {
                    let assignment = at
                        .iter()
                        .map(|a| {
                            let (name, v) = a
                                .split_once('=')
                                .ok_or_else(|| HarnessError::BadArgs(format!("expected name=value, got {a:?}")))?;
                            let v = v
                                .trim()
                                .parse()
                                .map_err(|_| HarnessError::BadArgs(format!("bad integer in {a:?}")))?;
                            Ok((name.trim().to_string(), v))
                        })
                        .collect::<Result<Vec<_>, HarnessError>>()?;
                    vec![cmd_trop_expr(&src, &assignment)?]
                }
                _ => return Err(HarnessError::BadArgs("give either a formula name or --expr".into())),
            };
            if cli.json {
                println!("{}", serde_json::to_string(&values)?);
            } else {
                let parts: Vec<String> = values.iter().map(i64::to_string).collect();
                println!("({})", parts.join(", "));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
