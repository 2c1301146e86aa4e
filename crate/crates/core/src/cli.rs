//! Command-line front end.
//!
//! Quiver files are TOML documents with exactly three fields:
//!
//! ```toml
//! vertices = 2
//! dims = [2, 1]
//! arrows = [[0, 1, 4], [1, 2, 1]]
//! ```
//!
//! Each arrow entry is `[i, j, multiplicity]` with `i < j`; vertex 0 is the
//! source of rank 1.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::class::{CohClass, QuantumClass};
use crate::classical::ClassicalRing;
use crate::error::Error;
use crate::expr::{parse, render_with, PrintOrder};
use crate::mirror::build_superpotential;
use crate::oracle::{pairing_matrix, Mode, RewriteSystem};
use crate::quantum::QuantumRing;
use crate::quiver::Quiver;

/// Failure of a CLI invocation, carrying its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments, unreadable files, parse errors: exit 1.
    Usage(String),
    /// The input parsed but violates a quiver or ring invariant: exit 2.
    Validation(String),
    /// The oracle rejected at least one product: exit 3. Carries the report.
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::VerifyFailed(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Deg,
}

#[derive(Parser, Debug)]
#[command(name = "qflag", version, about = "Cohomology of quiver flag varieties")]
struct Cli {
    /// Quiver file
    #[arg(short = 'f', long = "file", global = true)]
    file: Option<PathBuf>,

    /// Print order for classes
    #[arg(long, global = true, value_enum, default_value = "deg")]
    order: OrderArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ranks, Fano condition, dimension and basis count
    Info,
    /// List the Schur basis
    Basis,
    /// Classical product
    Mult {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Quantum product
    Qmult {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Reduce an expression to the basis
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        quantum: bool,
    },
    /// Poincare pairing matrix on the basis
    Pair,
    /// Integral of a classical expression
    Integrate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check products against the toric oracle
    Verify {
        #[arg(long)]
        quantum: bool,
        /// Every unordered pair of basis elements
        #[arg(long)]
        all: bool,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Mirror superpotential and relations
    Mirror,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: usize,
    dims: Vec<usize>,
    arrows: Vec<[u64; 3]>,
}

/// Parses and validates quiver file text.
pub fn parse_quiver(text: &str) -> Result<Quiver, CliError> {
    let file: QuiverFile = toml::from_str(text).map_err(|e| {
        let location = e
            .span()
            .map(|span| {
                let (line, column) = line_column(text, span.start);
                format!("line {line}, column {column}: ")
            })
            .unwrap_or_default();
        CliError::Usage(format!("{location}{}", e.message()))
    })?;
    if file.vertices != file.dims.len() {
        return Err(CliError::Validation(format!(
            "vertices = {} but dims has {} entries",
            file.vertices,
            file.dims.len()
        )));
    }
    let mut arrows = Vec::with_capacity(file.arrows.len());
    for [i, j, m] in file.arrows {
        let m = u32::try_from(m)
            .map_err(|_| CliError::Validation(format!("multiplicity {m} too large")))?;
        arrows.push((i as usize, j as usize, m));
    }
    Ok(Quiver::new(&file.dims, &arrows)?)
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn read_quiver(path: &Path) -> Result<Quiver, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_quiver(&text).map_err(|e| match e {
        CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
        CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

struct Context {
    quiver: Quiver,
    order: PrintOrder,
}

impl Context {
    fn show(&self, class: &QuantumClass) -> String {
        render_with(class, self.order, Some(&self.quiver))
    }

    fn classical(&self, ring: &ClassicalRing, src: &str) -> Result<CohClass, CliError> {
        Ok(ring.reduce(&parse(src)?.to_raw(&self.quiver)?)?)
    }

    fn quantum(&self, ring: &QuantumRing, src: &str) -> Result<QuantumClass, CliError> {
        Ok(ring.reduce(&parse(src)?.to_raw(&self.quiver)?)?)
    }
}

/// Runs the CLI on `args` (program name first) and returns standard output.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Ok(e.to_string())
                }
                _ => Err(CliError::Usage(e.to_string())),
            }
        }
    };
    let Some(path) = &cli.file else {
        return Err(CliError::Usage("a quiver file is required (-f FILE)".into()));
    };
    let ctx = Context {
        quiver: read_quiver(path)?,
        order: match cli.order {
            OrderArg::Lex => PrintOrder::Lex,
            OrderArg::Deg => PrintOrder::Degree,
        },
    };
    let quiver = &ctx.quiver;
    let mut out = String::new();
    match cli.command {
        Command::Info => {
            let list = |f: &dyn Fn(usize) -> String| {
                (1..=quiver.rho()).map(f).collect::<Vec<_>>().join(" ")
            };
            let _ = writeln!(out, "vertices: {}", quiver.rho());
            let _ = writeln!(out, "ranks: {}", list(&|i| quiver.rank(i).to_string()));
            let _ = writeln!(out, "s: {}", list(&|i| quiver.incoming(i).to_string()));
            let _ = writeln!(out, "s': {}", list(&|i| quiver.outgoing(i).to_string()));
            let _ = writeln!(out, "deg q: {}", list(&|i| quiver.q_degree(i).to_string()));
            let _ = writeln!(out, "fano: {}", quiver.is_fano());
            let _ = writeln!(out, "dimension: {}", quiver.dimension());
            let _ = writeln!(out, "basis: {}", quiver.basis_count());
        }
        Command::Basis => {
            let ring = ClassicalRing::new(quiver.clone());
            for t in ring.basis() {
                let _ = writeln!(out, "{}", ctx.show(&QuantumClass::basis(t)));
            }
        }
        Command::Mult { a, b } => {
            let ring = ClassicalRing::new(quiver.clone());
            let product = ring.multiply(&ctx.classical(&ring, &a)?, &ctx.classical(&ring, &b)?)?;
            let _ = writeln!(out, "{}", ctx.show(&product.to_quantum()));
        }
        Command::Qmult { a, b } => {
            let ring = QuantumRing::new(quiver.clone())?;
            let product = ring.multiply(&ctx.quantum(&ring, &a)?, &ctx.quantum(&ring, &b)?)?;
            let _ = writeln!(out, "{}", ctx.show(&product));
        }
        Command::Reduce { expr, quantum } => {
            let class = if quantum {
                ctx.quantum(&QuantumRing::new(quiver.clone())?, &expr)?
            } else {
                ctx.classical(&ClassicalRing::new(quiver.clone()), &expr)?.to_quantum()
            };
            let _ = writeln!(out, "{}", ctx.show(&class));
        }
        Command::Pair => {
            let ring = ClassicalRing::new(quiver.clone());
            let system = RewriteSystem::new(quiver, Mode::Classical)?;
            for row in pairing_matrix(&ring, &system)? {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
        }
        Command::Integrate { expr } => {
            let ring = ClassicalRing::new(quiver.clone());
            let system = RewriteSystem::new(quiver, Mode::Classical)?;
            let _ = writeln!(out, "{}", system.martin_integrate(&ctx.classical(&ring, &expr)?)?);
        }
        Command::Verify { quantum, all, a, b } => {
            let report = verify(&ctx, quantum, all, a.as_deref(), b.as_deref())?;
            if report.failed.is_empty() {
                let _ = writeln!(out, "PASS {}/{}", report.total, report.total);
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "FAIL {}/{}", report.total - report.failed.len(), report.total);
                for line in &report.failed {
                    let _ = writeln!(text, "{line}");
                }
                return Err(CliError::VerifyFailed(text));
            }
        }
        Command::Mirror => {
            out.push_str(&build_superpotential(quiver)?.emit());
        }
    }
    Ok(out)
}

struct Report {
    total: usize,
    failed: Vec<String>,
}

fn verify(
    ctx: &Context,
    quantum: bool,
    all: bool,
    a: Option<&str>,
    b: Option<&str>,
) -> Result<Report, CliError> {
    let quiver = &ctx.quiver;
    let mode = if quantum { Mode::Quantum } else { Mode::Classical };
    let system = RewriteSystem::new(quiver, mode)?;
    let product: Box<dyn Fn(&QuantumClass, &QuantumClass) -> crate::Result<QuantumClass> + Sync> =
        if quantum {
            let ring = QuantumRing::new(quiver.clone())?;
            Box::new(move |x, y| ring.multiply(x, y))
        } else {
            let ring = ClassicalRing::new(quiver.clone());
            Box::new(move |x, y| {
                let x = x.classical_part();
                let y = y.classical_part();
                Ok(ring.multiply(&x, &y)?.to_quantum())
            })
        };

    let pairs: Vec<(QuantumClass, QuantumClass)> = match (all, a, b) {
        (true, None, None) => {
            let basis = ClassicalRing::new(quiver.clone()).basis();
            let mut pairs = Vec::new();
            for (k, x) in basis.iter().enumerate() {
                for y in &basis[k..] {
                    pairs.push((QuantumClass::basis(x.clone()), QuantumClass::basis(y.clone())));
                }
            }
            pairs
        }
        (false, Some(a), Some(b)) => {
            let read = |src: &str| -> Result<QuantumClass, CliError> {
                let raw = parse(src)?.to_raw(quiver)?;
                if quantum {
                    Ok(QuantumRing::new(quiver.clone())?.reduce(&raw)?)
                } else {
                    Ok(ClassicalRing::new(quiver.clone()).reduce(&raw)?.to_quantum())
                }
            };
            vec![(read(a)?, read(b)?)]
        }
        _ => {
            return Err(CliError::Usage(
                "verify takes either --all or two class expressions".into(),
            ))
        }
    };

    let check = |(x, y): &(QuantumClass, QuantumClass)| -> Result<Option<String>, CliError> {
        let claimed = product(x, y)?;
        if system.verify_product(x, y, &claimed)? {
            Ok(None)
        } else {
            Ok(Some(format!(
                "{} * {} = {}",
                ctx.show(x),
                ctx.show(y),
                ctx.show(&claimed)
            )))
        }
    };

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(pairs.len().max(1));
    let chunk = pairs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Option<String>, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(check).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    let mut failed = Vec::new();
    for r in results {
        if let Some(line) = r? {
            failed.push(line);
        }
    }
    Ok(Report {
        total: pairs.len(),
        failed,
    })
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Usage(m) | CliError::Validation(m) => eprintln!("qflag: {}", m.trim_end()),
                CliError::VerifyFailed(report) => print!("{report}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
