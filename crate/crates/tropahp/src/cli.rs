use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use tropahp_core::{Tolerance, TropMatrix};

use crate::document::{load_matrices, ProblemDocument};
use crate::error::{Error, Result};
use crate::report::{r12, solve_document, GeometryDocument, SolveSettings};
use crate::session::SessionStore;

/// Tropical pairwise-comparison ranking.
#[derive(Debug, Parser)]
#[command(name = "tropahp", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Most,
    Least,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a problem document and print the report.
    Solve {
        problem: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        /// Also rank with classic principal-eigenvector weights.
        #[arg(long)]
        baseline: bool,
        #[arg(long, value_name = "T")]
        tie_tol: Option<f64>,
        #[arg(long, value_name = "E")]
        rel_eq: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the spectral radius of every matrix in a file.
    Spectral { matrix: PathBuf },
    /// Print the Kleene star of every matrix in a file, scaled by its spectral radius.
    Kleene { matrix: PathBuf },
    /// Section plots for three alternatives (a problem document or one 3x3 matrix).
    Geometry { input: PathBuf },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Data directory; defaults to $TROPAHP_DATA or ./tropahp-data.
        #[arg(long, value_name = "DIR")]
        data: Option<PathBuf>,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
    },
}

/// Parses the arguments, runs the command and returns the exit code:
/// 0 on success, 1 for invalid input, 2 for usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                1
            } else {
                2
            }
        }
    }
}

fn read_document(path: &Path) -> Result<ProblemDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    ProblemDocument::from_json(&text).map_err(|e| e.with_source_name(path))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth an error
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn format_matrix(m: &TropMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|&x| format!("{:>18}", r12(x))).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Solve {
            problem,
            mode,
            baseline,
            tie_tol,
            rel_eq,
            format,
            out,
        } => {
            let settings = SolveSettings {
                mode: Some(format!("{mode:?}").to_lowercase()),
                rel_eq,
                tie_tol,
                baseline,
            };
            let doc = read_document(&problem)?;
            let report = solve_document(&doc, &settings, None)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(&text, out.as_deref())
        }
        Command::Spectral { matrix } => {
            let mats = load_matrices(&matrix)?;
            let single = mats.len() == 1;
            let mut text = String::new();
            for (name, m) in mats {
                let lambda = m.spectral_radius()?;
                if single {
                    text.push_str(&format!("{}\n", r12(lambda)));
                } else {
                    text.push_str(&format!("{name}\t{}\n", r12(lambda)));
                }
            }
            emit(&text, None)
        }
        Command::Kleene { matrix } => {
            let tol = Tolerance::default();
            let mut text = String::new();
            for (name, m) in load_matrices(&matrix)? {
                let lambda = m.spectral_radius()?;
                let star = m.scale(1.0 / lambda).kleene_star(&tol)?;
                text.push_str(&format!(
                    "# {name}: λ = {}\n{}\n",
                    r12(lambda),
                    format_matrix(&star)
                ));
            }
            emit(&text, None)
        }
        Command::Geometry { input } => {
            let text = std::fs::read_to_string(&input).map_err(|source| Error::Io {
                path: input.display().to_string(),
                source,
            })?;
            let geometry = if text.contains("\"schema_version\"") {
                let doc = read_document(&input)?;
                if doc.alternatives.len() != 3 {
                    return Err(Error::invalid(
                        "alternatives",
                        format!("geometry needs 3 alternatives, found {}", doc.alternatives.len()),
                    ));
                }
                GeometryDocument::from_report(&solve_document(&doc, &SolveSettings::default(), None)?)?
            } else {
                let mats = load_matrices(&input)?;
                let [(name, m)] = <[_; 1]>::try_from(mats)
                    .map_err(|_| Error::invalid("matrix", "expected a single matrix"))?;
                GeometryDocument::from_matrix(&name, &m, &Tolerance::default())?
            };
            emit(&geometry.to_json(), None)
        }
        Command::Serve { port, data, host } => {
            let store = match data {
                Some(dir) => SessionStore::open(dir)?,
                None => SessionStore::from_env()?,
            };
            let runtime = tokio::runtime::Runtime::new().map_err(|source| Error::Io {
                path: "tokio runtime".into(),
                source,
            })?;
            runtime
                .block_on(crate::server::serve(SocketAddr::new(host, port), store))
                .map_err(|source| Error::Io {
                    path: format!("{host}:{port}"),
                    source,
                })
        }
    }
}
