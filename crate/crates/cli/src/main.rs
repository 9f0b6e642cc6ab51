mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use knotcomp::gradings::HomflyEulerVariant;
use knotcomp::{close_braid, parse_braid, BraidWord, Diagram, KnotError, SignConvention};

use commands::CompositionKind;
use report::{Format, Report};

/// HOMFLY-PT polynomials, composition products over edge labelings, and
/// graded chain complexes of braid closures.
#[derive(Parser, Debug)]
#[command(name = "knotcomp", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Word {
    /// Braid word as space-separated nonzero integers, e.g. "1 -2 1"; "" is
    /// the unknot.
    #[arg(allow_hyphen_values = true)]
    word: String,
    /// Close on this many strands instead of the fewest the word needs.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// HOMFLY-PT polynomial P_H(a, q), or a specialization.
    Homfly {
        #[command(flatten)]
        word: Word,
        /// Print P_n(q) = P_H(q^n, q).
        #[arg(long, allow_negative_numbers = true, conflicts_with = "prime")]
        n: Option<i32>,
        /// Print the unreduced P'_H = delta a^w P_H.
        #[arg(long)]
        prime: bool,
    },
    /// Cycles of the decorated diagram with their local data.
    Labelings {
        #[command(flatten)]
        word: Word,
        /// Include non-admissible cycles.
        #[arg(long)]
        all: bool,
    },
    /// Composition product and its comparison with the skein value.
    Composition {
        #[command(flatten)]
        word: Word,
        /// Three-variable product against P'_H(a1 a2).
        #[arg(long, conflicts_with = "alexander")]
        jaeger: bool,
        /// Alexander specialization against P_H(1, q).
        #[arg(long)]
        alexander: bool,
        /// Drop the (-1)^{T-} sign.
        #[arg(long)]
        unsigned: bool,
        /// Rotation assigned to each circle in the three-variable product.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_rotation)]
        circle_rotation: i64,
    },
    /// Euler characteristic of the labeling decomposition against the skein value.
    EulerCheck {
        #[command(flatten)]
        word: Word,
        /// Bigraded check against the Alexander polynomial (default).
        #[arg(long, conflicts_with = "homfly")]
        alexander: bool,
        /// Triply graded check against P_H(aq, q, m(D)).
        #[arg(long)]
        homfly: bool,
        /// Use the reflected exponents q^{r2+s2} a^{-r1+s1}.
        #[arg(long, requires = "homfly")]
        reflected: bool,
    },
    /// Graded dimensions of the middle HOMFLY-PT homology over F2.
    Homology {
        #[command(flatten)]
        word: Word,
        /// Largest internal degree computed.
        #[arg(long, default_value_t = 12)]
        cutoff: i64,
        /// Number of reducing factors; defaults to one per component.
        #[arg(long)]
        reduce: Option<usize>,
        /// Homology of the total differential d+ + d_v instead.
        #[arg(long, conflicts_with = "reduce")]
        sl_minus1: bool,
    },
    /// Check the per-cycle complexes of a negative crossing.
    Fixtures,
}

fn parse_rotation(s: &str) -> Result<i64, String> {
    match s.parse::<i64>() {
        Ok(r @ (1 | -1)) => Ok(r),
        _ => Err("circle rotation must be 1 or -1".into()),
    }
}

enum Failure {
    Parse(String),
    Internal(String),
}

impl From<KnotError> for Failure {
    fn from(e: KnotError) -> Self {
        match e {
            KnotError::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn diagram(w: &Word) -> Result<Diagram, Failure> {
    let word = parse_braid(&w.word).map_err(|e| Failure::Parse(e.to_string()))?;
    let word = match w.strands {
        Some(s) => {
            BraidWord::new(s, word.letters().to_vec()).map_err(|e| Failure::Parse(e.to_string()))?
        }
        None => word,
    };
    Ok(close_braid(&word))
}

fn sign(unsigned: bool) -> SignConvention {
    if unsigned {
        SignConvention::Unsigned
    } else {
        SignConvention::Signed
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    Ok(match &cli.command {
        Command::Homfly { word, n, prime } => commands::homfly(&diagram(word)?, *n, *prime)?,
        Command::Labelings { word, all } => commands::labelings(&diagram(word)?, *all)?,
        Command::Composition {
            word,
            jaeger,
            alexander,
            unsigned,
            circle_rotation,
        } => {
            let kind = match (jaeger, alexander) {
                (true, _) => CompositionKind::Jaeger,
                (_, true) => CompositionKind::Alexander,
                _ => CompositionKind::Destabilized,
            };
            commands::composition(&diagram(word)?, kind, sign(*unsigned), *circle_rotation)?
        }
        Command::EulerCheck {
            word,
            homfly,
            reflected,
            ..
        } => {
            let variant = if *reflected {
                HomflyEulerVariant::Reflected
            } else {
                HomflyEulerVariant::FromShifts
            };
            commands::euler_check(&diagram(word)?, *homfly, variant)?
        }
        Command::Homology {
            word,
            cutoff,
            reduce,
            sl_minus1,
        } => {
            if *cutoff < 0 {
                return Err(Failure::Parse("cutoff must be non-negative".into()));
            }
            commands::homology(&diagram(word)?, *cutoff, *reduce, *sl_minus1)?
        }
        Command::Fixtures => commands::fixtures()?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { cli.format };
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(report.render(format).as_bytes());
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
