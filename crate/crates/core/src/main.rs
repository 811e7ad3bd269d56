use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use yendo::report::{self, document, to_json};
use yendo::{oracle, verify, AlgebraContext, Error, Lambda};

/// Endomorphism algebras of two-part Young permutation modules in
/// characteristic 2: multiplication tables, idempotents, corner algebras
/// and their canonical presentations, plus self-verification.
#[derive(Parser)]
#[command(name = "yendo", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print full per-partition detail in sweeps.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct LambdaArgs {
    /// Partition as "lambda1,lambda2" with lambda1 >= lambda2.
    #[arg(long, value_name = "L1,L2")]
    lambda: Option<String>,

    /// Row-length gap m = lambda1 - lambda2 (with --lambda2).
    #[arg(long, conflicts_with = "lambda", requires = "lambda2")]
    m: Option<u64>,

    /// Second row length (with --m).
    #[arg(long, conflicts_with = "lambda", requires = "m")]
    lambda2: Option<u64>,
}

impl LambdaArgs {
    fn resolve(&self) -> Result<Lambda, String> {
        match (&self.lambda, self.m, self.lambda2) {
            (Some(text), None, None) => {
                let (l1, l2) = parse_pair(text)
                    .ok_or_else(|| format!("cannot parse partition '{text}', expected L1,L2"))?;
                Lambda::from_parts(l1, l2).map_err(|e| e.to_string())
            }
            (None, Some(m), Some(lambda2)) => Ok(Lambda::new(m, lambda2 as usize)),
            _ => Err("specify either --lambda L1,L2 or both --m and --lambda2".to_string()),
        }
    }
}

fn parse_pair(text: &str) -> Option<(u64, u64)> {
    let (a, b) = text.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplication table of S_K(lambda).
    MultTable {
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// List the Young-module summands of M^lambda.
    Decompose {
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// Construct the idempotent family e_{m,g}, g = 0..lambda2.
    Idempotents {
        #[command(flatten)]
        lambda: LambdaArgs,

        /// Also show each idempotent truncated to digit columns u <= T.
        #[arg(long, value_name = "T")]
        truncate: Option<u32>,
    },
    /// Basis, generators and presentation of End(Y^mu).
    Endo {
        #[command(flatten)]
        lambda: LambdaArgs,

        /// Select the summand by g = lambda2 - mu2.
        #[arg(long)]
        g: Option<u64>,

        /// Select the summand by its partition "mu1,mu2".
        #[arg(long, value_name = "M1,M2")]
        mu: Option<String>,
    },
    /// Canonical truncated polynomial quotient of a given dimension.
    Presentation {
        /// Target dimension n >= 1.
        #[arg(long)]
        dim: u64,
    },
    /// Run the verification battery for one partition or a sweep.
    Verify {
        #[command(flatten)]
        lambda: LambdaArgs,

        /// Sweep all two-part partitions with r <= R instead.
        #[arg(long, value_name = "R", conflicts_with_all = ["lambda", "m", "lambda2"])]
        max_r: Option<u64>,
    },
    /// Compare against an independently built subset model of End(M^lambda).
    OracleCheck {
        #[command(flatten)]
        lambda: LambdaArgs,
    },
}

fn context_for(args: &LambdaArgs) -> Result<AlgebraContext, String> {
    let lambda = args.resolve()?;
    AlgebraContext::new(lambda.m(), lambda.lambda2() as u64).map_err(|e| e.to_string())
}

/// Exit 0 on success/pass, 1 on a verification failure, 2 on usage or
/// domain errors (matching clap's own usage-error exit).
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: serde::Serialize>(cli: &Cli, command: &str, result: &T, text: String) {
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => print!("{}", to_json(&document(command, result))),
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::MultTable { lambda } => {
            let ctx = context_for(lambda)?;
            let rep = report::mult_table_report(&ctx);
            emit(cli, "mult-table", &rep, rep.render_text());
            Ok(true)
        }
        Command::Decompose { lambda } => {
            let ctx = context_for(lambda)?;
            let rep = report::decompose_report(&ctx);
            emit(cli, "decompose", &rep, rep.render_text());
            Ok(true)
        }
        Command::Idempotents { lambda, truncate } => {
            let ctx = context_for(lambda)?;
            let rep = report::idempotents_report(&ctx, *truncate);
            emit(cli, "idempotents", &rep, rep.render_text());
            Ok(true)
        }
        Command::Endo { lambda, g, mu } => {
            let ctx = context_for(lambda)?;
            let g = resolve_g(&ctx, *g, mu.as_deref())?;
            let rep = report::endo_report(&ctx, g).map_err(|e| e.to_string())?;
            emit(cli, "endo", &rep, rep.render_text());
            Ok(true)
        }
        Command::Presentation { dim } => {
            let rep = report::presentation_report(*dim).map_err(|e| e.to_string())?;
            emit(cli, "presentation", &rep, rep.render_text());
            Ok(true)
        }
        Command::Verify { lambda, max_r } => match max_r {
            Some(max_r) => {
                let rep = verify::verify_sweep(*max_r).map_err(|e| e.to_string())?;
                emit(cli, "verify-sweep", &rep, rep.render_text(cli.verbose));
                Ok(rep.pass)
            }
            None => {
                let ctx = context_for(lambda)?;
                let rep = verify::verify_lambda(&ctx);
                emit(cli, "verify", &rep, rep.render_text());
                Ok(rep.pass)
            }
        },
        Command::OracleCheck { lambda } => {
            let ctx = context_for(lambda)?;
            let rep = oracle::oracle_check_report(&ctx).map_err(|e| e.to_string())?;
            emit(cli, "oracle-check", &rep, rep.render_text());
            Ok(rep.pass)
        }
    }
}

/// `--g` and `--mu` select the same thing; either works, both must agree.
fn resolve_g(ctx: &AlgebraContext, g: Option<u64>, mu: Option<&str>) -> Result<u64, String> {
    let from_mu = match mu {
        None => None,
        Some(text) => {
            let (m1, m2) = parse_pair(text)
                .ok_or_else(|| format!("cannot parse partition '{text}', expected M1,M2"))?;
            Some(ctx.lambda().g_for_mu(m1, m2).map_err(|e| e.to_string())?)
        }
    };
    match (g, from_mu) {
        (Some(g), None) => Ok(g),
        (None, Some(g)) => Ok(g),
        (Some(a), Some(b)) if a == b => Ok(a),
        (Some(a), Some(b)) => Err(format!(
            "--g {a} and --mu disagree: the given mu corresponds to g = {b}"
        )),
        (None, None) => Err("specify the summand with --g or --mu".to_string()),
    }
    .and_then(|g| {
        if g > ctx.lambda().lambda2() as u64 {
            Err(Error::GOutOfRange {
                g,
                lambda2: ctx.lambda().lambda2(),
            }
            .to_string())
        } else {
            Ok(g)
        }
    })
}
