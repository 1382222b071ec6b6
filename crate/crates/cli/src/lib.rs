//! Command-line front end: argument parsing, input handling and the text
//! rendering of every command.
//!
//! [`run`] is the whole program minus process plumbing, so tests drive it
//! directly and compare exit codes and output byte for byte.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use semimatroid::activity::{activities, interval_decomposition, tutte_activity};
use semimatroid::bridge::triple;
use semimatroid::format::{
    parse_arrangement, parse_semimatroid_with_limits, serialize_arrangement, serialize_matroid,
    serialize_semimatroid,
};
use semimatroid::semilattice::flats_poset;
use semimatroid::tutte::{characteristic, EngineRegistry};
use semimatroid::{Arrangement, Error, Limits, Semimatroid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "semimatroid", version)]
#[command(about = "Semimatroids, their matroid triples and Tutte polynomials")]
pub struct Cli {
    /// Override the guard on the number of ground-set elements
    #[arg(long, global = true, value_name = "N")]
    pub max_elements: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a semimatroid and summarise it
    Check { input: PathBuf },
    /// Print the Tutte polynomial
    Tutte {
        input: PathBuf,
        /// Engine name, or `all` to run every engine and compare
        #[arg(long, default_value = "sum")]
        method: String,
    },
    /// Print the characteristic polynomial
    Char { input: PathBuf },
    /// Print the flats with their ranks and cover relations
    Flats { input: PathBuf },
    /// Print the bases, one per line
    Bases { input: PathBuf },
    /// Print internal and external activity of every basis
    Activity { input: PathBuf },
    /// Print the Boolean-interval decomposition of the central sets
    Decompose { input: PathBuf },
    /// Print the dual semimatroid
    Dual { input: PathBuf },
    /// Delete an element
    Delete {
        input: PathBuf,
        #[arg(short = 'e', value_name = "INDEX")]
        element: usize,
    },
    /// Contract an element
    Contract {
        input: PathBuf,
        #[arg(short = 'e', value_name = "INDEX")]
        element: usize,
    },
    /// Remove an element whose singleton is not central
    Drop {
        input: PathBuf,
        #[arg(short = 'e', value_name = "INDEX")]
        element: usize,
    },
    /// Cone an arrangement
    Cone { input: PathBuf },
    /// Print the coextension, preimage and base matroids
    Triple { input: PathBuf },
    /// Convert an arrangement into its semimatroid
    FromArrangement { input: PathBuf },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::ZeroNormal(_)
        | Error::DimensionMismatch { .. }
        | Error::SizeLimit(_)
        | Error::NoSuchElement(_) => EXIT_USAGE,
        _ => EXIT_VALIDATION,
    }
}

/// Run with the default engine registry.
pub fn run<I, T>(args: I, stdin: impl Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_registry(args, stdin, &EngineRegistry::default())
}

/// Run against a caller-supplied set of Tutte engines.
pub fn run_with_registry<I, T>(args: I, stdin: impl Read, registry: &EngineRegistry) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    let mut input = Input {
        stdin: Some(stdin),
        limits: Limits {
            max_elements: cli.max_elements.unwrap_or(Limits::default().max_elements),
            ..Limits::default()
        },
    };
    match dispatch(&cli.command, &mut input, registry) {
        Ok(out) => out,
        Err(Failure::Library(e)) => Outcome::fail(exit_code(&e), format!("error: {}\n", e)),
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {}\n", msg)),
    }
}

enum Failure {
    Library(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

struct Input<R> {
    stdin: Option<R>,
    limits: Limits,
}

impl<R: Read> Input<R> {
    fn text(&mut self, path: &PathBuf) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut text = String::new();
            let mut stdin = self
                .stdin
                .take()
                .ok_or_else(|| Failure::Usage("standard input already consumed".into()))?;
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("reading standard input: {}", e)))?;
            return Ok(text);
        }
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("reading {}: {}", path.display(), e)))
    }

    fn semimatroid(&mut self, path: &PathBuf) -> Result<Semimatroid, Failure> {
        let text = self.text(path)?;
        Ok(parse_semimatroid_with_limits(&text, self.limits)?)
    }

    fn arrangement(&mut self, path: &PathBuf) -> Result<Arrangement, Failure> {
        let text = self.text(path)?;
        let a = parse_arrangement(&text)?;
        self.limits.check_elements(a.len())?;
        Ok(a)
    }
}

fn dispatch<R: Read>(
    command: &Command,
    input: &mut Input<R>,
    registry: &EngineRegistry,
) -> Result<Outcome, Failure> {
    let out = match command {
        Command::Check { input: path } => {
            let s = input.semimatroid(path)?;
            format!(
                "valid semimatroid: {} elements, {} central sets, rank {}\n",
                s.n(),
                s.num_central(),
                s.semimatroid_rank()
            )
        }
        Command::Tutte {
            input: path,
            method,
        } => {
            if method != "all" && registry.get(method).is_none() {
                return Err(Failure::Usage(format!(
                    "unknown method `{}` (expected all, {})",
                    method,
                    registry.names().join(", ")
                )));
            }
            let s = input.semimatroid(path)?;
            if method == "all" {
                return Ok(compare_engines(&s, registry)?);
            }
            let engine = registry.get(method).expect("checked above");
            format!("{}\n", engine.tutte(&s)?)
        }
        Command::Char { input: path } => {
            format!("{}\n", characteristic(&input.semimatroid(path)?))
        }
        Command::Flats { input: path } => render_flats(&input.semimatroid(path)?),
        Command::Bases { input: path } => {
            let s = input.semimatroid(path)?;
            s.bases()
                .into_iter()
                .map(|b| format!("{}\n", s.ground().format_subset(b)))
                .collect()
        }
        Command::Activity { input: path } => {
            let s = input.semimatroid(path)?;
            let g = s.ground();
            let mut out = String::new();
            for rec in activities(&s) {
                let _ = writeln!(
                    out,
                    "B={} I={} E={} interval=[{},{}]",
                    g.format_subset(rec.basis),
                    g.format_subset(rec.internal),
                    g.format_subset(rec.external),
                    g.format_subset(rec.lower()),
                    g.format_subset(rec.upper()),
                );
            }
            out
        }
        Command::Decompose { input: path } => {
            return render_decomposition(&input.semimatroid(path)?)
        }
        Command::Dual { input: path } => serialize_semimatroid(&input.semimatroid(path)?.dual()?),
        Command::Delete {
            input: path,
            element,
        } => {
            let s = input.semimatroid(path)?;
            serialize_semimatroid(&s.delete(*element)?)
        }
        Command::Contract {
            input: path,
            element,
        } => {
            let s = input.semimatroid(path)?;
            serialize_semimatroid(&s.contract(*element)?)
        }
        Command::Drop {
            input: path,
            element,
        } => {
            let s = input.semimatroid(path)?;
            serialize_semimatroid(&s.drop_noncentral(*element)?)
        }
        Command::Cone { input: path } => serialize_arrangement(&input.arrangement(path)?.cone()),
        Command::Triple { input: path } => {
            let t = triple(&input.semimatroid(path)?)?;
            let mut out = String::new();
            let _ = writeln!(out, "# coextension, point {}", t.coextension.point());
            out.push_str(&serialize_matroid(t.coextension.matroid()));
            out.push_str("\n# preimage\n");
            out.push_str(&serialize_matroid(&t.preimage));
            out.push_str("\n# base\n");
            out.push_str(&serialize_matroid(&t.base));
            out
        }
        Command::FromArrangement { input: path } => {
            let a = input.arrangement(path)?;
            serialize_semimatroid(&a.semimatroid_with_limits(input.limits)?)
        }
    };
    Ok(Outcome::ok(out))
}

fn compare_engines(s: &Semimatroid, registry: &EngineRegistry) -> Result<Outcome, Error> {
    let agreement = registry.run_all(s)?;
    let names = agreement.names().join(", ");
    match agreement.results.first() {
        Some((_, t)) if agreement.agree() => {
            Ok(Outcome::ok(format!("{}\nmethods agree: {}\n", t, names)))
        }
        Some(_) => {
            let mut stdout = String::new();
            for (name, t) in &agreement.results {
                let _ = writeln!(stdout, "{}: {}", name, t);
            }
            Ok(Outcome {
                code: EXIT_MISMATCH,
                stdout,
                stderr: format!("error: methods disagree: {}\n", names),
            })
        }
        None => Ok(Outcome::fail(
            EXIT_USAGE,
            "error: no Tutte engines are registered\n".into(),
        )),
    }
}

fn render_flats(s: &Semimatroid) -> String {
    let poset = flats_poset(s);
    let sets = poset.sets().expect("flats carry their sets");
    let g = s.ground();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (s.rank(sets[i]).expect("flats are central"), sets[i]));
    let mut out = String::new();
    for &i in &order {
        let _ = writeln!(
            out,
            "r={} {}",
            s.rank(sets[i]).expect("flats are central"),
            g.format_subset(sets[i])
        );
    }
    for &a in &order {
        for &b in &order {
            if poset.covers(a, b) {
                let _ = writeln!(
                    out,
                    "cover {} < {}",
                    g.format_subset(sets[a]),
                    g.format_subset(sets[b])
                );
            }
        }
    }
    out
}

fn render_decomposition(s: &Semimatroid) -> Result<Outcome, Failure> {
    let dec = interval_decomposition(s);
    let g = s.ground();
    let mut out = String::new();
    for rec in &dec.records {
        let _ = writeln!(
            out,
            "B={} interval=[{},{}] size={}",
            g.format_subset(rec.basis),
            g.format_subset(rec.lower()),
            g.format_subset(rec.upper()),
            rec.interval_size()
        );
    }
    let total: usize = dec.sizes().iter().sum();
    let _ = writeln!(out, "total {} of {} central sets", total, s.num_central());
    let _ = writeln!(
        out,
        "activity polynomial {}",
        tutte_activity(s).display_with("q", "t")
    );
    if !dec.is_partition_of(s) {
        return Ok(Outcome {
            code: EXIT_MISMATCH,
            stdout: out,
            stderr: "error: intervals do not partition the central sets\n".into(),
        });
    }
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::parse(3, "bad")), EXIT_USAGE);
        assert_eq!(exit_code(&Error::ZeroNormal(0)), EXIT_USAGE);
        assert_eq!(exit_code(&Error::SizeLimit("big".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::EmptyDual), EXIT_VALIDATION);
        assert_eq!(exit_code(&Error::CentralSingleton(1)), EXIT_VALIDATION);
    }

    #[test]
    fn standard_input_is_read_once() {
        let mut input = Input {
            stdin: Some(&b"text"[..]),
            limits: Limits::default(),
        };
        let dash = PathBuf::from("-");
        assert_eq!(input.text(&dash).ok().as_deref(), Some("text"));
        assert!(matches!(input.text(&dash), Err(Failure::Usage(_))));
    }
}
