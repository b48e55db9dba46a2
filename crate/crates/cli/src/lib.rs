//! Command-line surface over the core library and the specification DSL.
//!
//! Every command produces one [`Report`]; the human and JSON renderings are
//! both derived from it. Exit codes: 0 pass, 1 check failed (with a
//! witness), 2 usage, parse or capacity error.

pub mod args;
mod commands;
mod refs;
pub mod report;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use fincat_core::Config;
use fincat_dsl::{parse_spec_bytes, SpecDocument};

pub use args::{CheckCmd, Cli, Command, FinsetCmd, GlobalOpts, ToposCmd};
pub use report::{ErrorInfo, Fact, Outcome, Report, Table, Witness, SCHEMA_ID};

/// The report schema shipped with this version.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.v1.json");

#[derive(Debug)]
pub(crate) enum CliError {
    Core(fincat_core::Error),
    Unknown { kind: &'static str, name: String },
    Usage(String),
}

impl From<fincat_core::Error> for CliError {
    fn from(e: fincat_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        use fincat_core::Error as E;
        match self {
            CliError::Core(E::Capacity { .. }) => "capacity",
            CliError::Core(E::Contract(_)) => "contract",
            CliError::Core(E::Structural(_)) => "structural",
            CliError::Core(E::UnknownObject(_) | E::UnknownArrow(_)) => "unknown-name",
            CliError::Core(_) => "composition",
            CliError::Unknown { .. } => "unknown-name",
            CliError::Usage(_) => "usage",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Unknown { kind, name } => format!("unknown {kind} `{name}`"),
            CliError::Usage(m) => m.clone(),
        }
    }
}

/// The configuration the global options describe.
pub fn config_for(opts: &GlobalOpts) -> Config {
    let mut config = match opts.budget {
        Some(n) => Config::default().with_budget(n),
        None => Config::default(),
    };
    config.seed = opts.seed;
    config
}

/// Runs one command against an already parsed document.
pub fn run_command(cmd: &Command, doc: &SpecDocument, config: &Config) -> Report {
    let name = cmd.describe();
    let mut report = match commands::dispatch(cmd, doc, config) {
        Ok(r) => r,
        Err(e) => Report::error(name.clone(), e.code(), e.message()),
    };
    report.command = name;
    report.seed = config.seed;
    report
}

/// A fully processed invocation: the report and how to print it.
#[derive(Debug)]
pub struct Invocation {
    pub report: Report,
    pub json: bool,
}

impl Invocation {
    pub fn render(&self) -> String {
        if self.json {
            let mut s = self.report.to_json();
            s.push('\n');
            s
        } else {
            self.report.to_human()
        }
    }
}

/// Parses arguments, loads the document and runs the command. Help and
/// version requests come back as the clap error that prints them.
pub fn run<I, T>(args: I) -> Result<Invocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => return Err(e),
        Err(e) => {
            let json = args.iter().any(|a| a == "--json");
            let message = e.render().to_string();
            let summary = message
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let summary = summary.trim_start_matches("error: ");
            let summary = if summary.is_empty() { "usage error" } else { summary };
            let report = Report::error("fincat", "usage", summary.to_string());
            return Ok(Invocation { report, json });
        }
    };
    let json = cli.global.json;
    let config = config_for(&cli.global);
    let command = cli.command.describe();
    let doc = match &cli.global.spec {
        None => SpecDocument { decls: vec![] },
        Some(path) => {
            let bytes = match std::fs::read(path) {
                Ok(b) => b,
                Err(e) => {
                    let report = Report::error(command, "io", format!("cannot read {}: {e}", path.display()));
                    return Ok(Invocation { report, json });
                }
            };
            match parse_spec_bytes(&bytes) {
                Ok(doc) => doc,
                Err(e) => {
                    let mut report = Report::error(command, e.code.as_str(), e.to_string());
                    if let Some(info) = report.error.as_mut() {
                        info.line = Some(e.span.line);
                        info.column = Some(e.span.column);
                    }
                    report.seed = config.seed;
                    return Ok(Invocation { report, json });
                }
            }
        }
    };
    let report = run_command(&cli.command, &doc, &config);
    Ok(Invocation { report, json })
}
