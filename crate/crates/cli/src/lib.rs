//! Command-line frontend for `gvdkit-core`: argument parsing, text and
//! JSON rendering, and the acceptance battery.

pub mod args;
pub mod commands;
pub mod input;
pub mod suite;

use clap::Parser;
use serde_json::json;

pub use commands::Output;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gvdkit_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

impl CliError {
    /// Stable tag for JSON error documents.
    pub fn kind(&self) -> &'static str {
        use gvdkit_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Core(e) => match e {
                E::Parse { .. } => "parse",
                E::ResourceCap { .. } => "resource_cap",
                E::MatchFailure { .. } => "match_failure",
                E::Precondition(_) => "precondition",
                E::Invariant(_) => "invariant",
                _ => "input",
            },
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let mut v = json!({ "kind": self.kind(), "message": self.to_string() });
        match self {
            CliError::Core(gvdkit_core::Error::Parse { pos, .. }) => v["position"] = json!(pos),
            CliError::Core(gvdkit_core::Error::ResourceCap { what, cap }) => {
                v["what"] = json!(what);
                v["cap"] = json!(cap);
            }
            CliError::Core(gvdkit_core::Error::MatchFailure { what, expected, found }) => {
                v["what"] = json!(what);
                v["expected"] = json!(expected);
                v["found"] = json!(found);
            }
            _ => {}
        }
        v
    }
}

/// Rendered streams and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Exit codes: 0 success, 2 failed certificate or check, 1 error.
pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Invocation { stdout: String::new(), stderr: rendered, code: 1 }
            } else {
                Invocation { stdout: rendered, stderr: String::new(), code: 0 }
            };
        }
    };
    if let Ok(caps) = std::env::var("GVDKIT_CAPS") {
        match input::parse_caps(&caps) {
            Ok(l) => gvdkit_core::polyalg::set_limits(l),
            Err(e) => return failure(&cli, "", &CliError::Usage(format!("GVDKIT_CAPS: {}", e))),
        }
    }
    match commands::execute(&cli.command) {
        Ok(out) => {
            let code = if out.certified == Some(false) { 2 } else { 0 };
            let stdout = if cli.json { pretty(&out.to_json()) } else { out.text.clone() };
            Invocation { stdout, stderr: String::new(), code }
        }
        Err(e) => failure(&cli, command_name(&cli.command), &e),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn failure(cli: &args::Cli, command: &str, e: &CliError) -> Invocation {
    if cli.json {
        let doc = json!({ "command": command, "error": e.to_json(), "version": env!("CARGO_PKG_VERSION") });
        Invocation { stdout: pretty(&doc), stderr: String::new(), code: 1 }
    } else {
        Invocation { stdout: String::new(), stderr: format!("error: {}\n", e), code: 1 }
    }
}

fn command_name(c: &args::Command) -> &'static str {
    use args::*;
    match c {
        Command::Roots { .. } => "roots",
        Command::Bruhat(BruhatCmd::Leq { .. }) => "bruhat leq",
        Command::Bruhat(BruhatCmd::Words { .. }) => "bruhat words",
        Command::Subword(_) => "subword complex",
        Command::Localize(_) => "localize",
        Command::Ideal(IdealCmd::Gb { .. }) => "ideal gb",
        Command::Ideal(IdealCmd::Dim { .. }) => "ideal dim",
        Command::Ideal(IdealCmd::Kpoly { .. }) => "ideal kpoly",
        Command::Gvd(GvdCmd::Split { .. }) => "gvd split",
        Command::Gvd(GvdCmd::Family { .. }) => "gvd family",
        Command::Gvd(GvdCmd::Rll { .. }) => "gvd rll",
        Command::Gvd(GvdCmd::Probe { .. }) => "gvd probe",
        Command::Gvd(GvdCmd::Glue { .. }) => "gvd glue",
        Command::Patch(PatchCmd::Ideal { .. }) => "patch ideal",
        Command::Patch(PatchCmd::Step { .. }) => "patch step",
        Command::Patch(PatchCmd::Degenerate { .. }) => "patch degenerate",
        Command::Simplicial(_) => "simplicial",
        Command::Suite { .. } => "suite",
    }
}
