use clap::{Parser, Subcommand, ValueEnum};
use magfine::report::{self, OutputFormat, SeriesCheck, Suite, TreeKind};
use std::process::ExitCode;

/// Exact-arithmetic checks for the free magmatic algebra on planar binary
/// trees: enumeration, primitive bases, and generating-function identities.
#[derive(Parser)]
#[command(name = "magfine", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Binary,
    Fine,
}

impl From<KindArg> for TreeKind {
    fn from(k: KindArg) -> TreeKind {
        match k {
            KindArg::Binary => TreeKind::Binary,
            KindArg::Fine => TreeKind::Fine,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Codes,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Codes => OutputFormat::Codes,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Coassoc,
    Compat,
    Idempotent,
    Decomposition,
    #[value(name = "mu-primitive")]
    MuPrimitive,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Coassoc => Suite::Coassoc,
            SuiteArg::Compat => Suite::Compat,
            SuiteArg::Idempotent => Suite::Idempotent,
            SuiteArg::Decomposition => Suite::Decomposition,
            SuiteArg::MuPrimitive => Suite::MuPrimitive,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Fine,
    Vallette,
    Compose,
    Prelie,
    Sabinin,
    All,
}

impl From<CheckArg> for SeriesCheck {
    fn from(c: CheckArg) -> SeriesCheck {
        match c {
            CheckArg::Fine => SeriesCheck::Fine,
            CheckArg::Vallette => SeriesCheck::Vallette,
            CheckArg::Compose => SeriesCheck::Compose,
            CheckArg::Prelie => SeriesCheck::Prelie,
            CheckArg::Sabinin => SeriesCheck::Sabinin,
            CheckArg::All => SeriesCheck::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List trees with n leaves (counts only for n > 12)
    Enumerate {
        #[arg(value_enum)]
        kind: KindArg,
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Dimension table: Catalan numbers, coproduct kernels, Fine numbers
    Dims {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
    },
    /// Print the canonical basis of the primitives in degree n
    Prim {
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Run a seeded property suite over the product/coproduct interplay
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Check generating-function identities at a truncation order
    Series {
        #[arg(value_enum)]
        check: CheckArg,
        /// Truncation order (default: MAGFINE_ORDER or 12)
        #[arg(long)]
        order: Option<usize>,
    },
}

fn default_order() -> usize {
    std::env::var("MAGFINE_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(12)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match cli.command {
        Command::Enumerate { kind, n, format } => {
            (report::cmd_enumerate(kind.into(), n), format.into())
        }
        Command::Dims { max_n } => (report::cmd_dims(max_n), OutputFormat::Json),
        Command::Prim { n, format } => (report::cmd_prim(n), format.into()),
        Command::Verify { suite, seed, cases } => (
            Ok(report::cmd_verify(suite.into(), seed, cases)),
            OutputFormat::Json,
        ),
        Command::Series { check, order } => (
            report::cmd_series(check.into(), order.unwrap_or_else(default_order)),
            OutputFormat::Json,
        ),
    };
    match result {
        Ok(rep) => {
            let out = rep.render(format);
            if out.ends_with('\n') {
                print!("{out}");
            } else {
                println!("{out}");
            }
            if rep.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
