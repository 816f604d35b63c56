//! Command-line front end: `hopf16 <command> [KEY] [--D n] [--all] ...`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::report::{render, run_key, verify_all, Command, Entry};
use crate::Cyc;

#[derive(Debug, Parser)]
#[command(name = "hopf16", version, about = "Invariants of sixteen-dimensional semisimple Hopf actions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Target {
    /// Configuration key, e.g. `K5/pi1/r=uv-i.vu`.
    pub key: Option<String>,
    /// Same as the positional key.
    #[arg(long = "key", conflicts_with = "key")]
    pub key_flag: Option<String>,
    /// Degree bound.
    #[arg(long = "D", default_value_t = 12)]
    pub bound: usize,
    /// Every table row.
    #[arg(long)]
    pub all: bool,
    /// Also compare the Hilbert function with the ideal-quotient oracle.
    #[arg(long)]
    pub oracle: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Check that the module extends to a module-algebra action.
    CheckAction(Target),
    /// Tensor-power closure of the module.
    InnerFaithful(Target),
    /// Invariant ring dimensions and minimal generators.
    Invariants(Target),
    /// Compare a table row with the computed invariant ring.
    VerifyTable(Target),
    /// Twisted products and invariant dimensions before and after twisting.
    TwistCheck(Target),
    /// Decompose the module and its tensor square into simples.
    Decompose(Target),
}

impl Cmd {
    fn split(&self) -> (Command, &Target) {
        match self {
            Cmd::CheckAction(t) => (Command::CheckAction, t),
            Cmd::InnerFaithful(t) => (Command::InnerFaithful, t),
            Cmd::Invariants(t) => (Command::Invariants, t),
            Cmd::VerifyTable(t) => (Command::VerifyTable, t),
            Cmd::TwistCheck(t) => (Command::TwistCheck, t),
            Cmd::Decompose(t) => (Command::Decompose, t),
        }
    }
}

/// Run a parsed command line; returns the report text and overall status.
pub fn execute(cli: &Cli) -> std::result::Result<(String, bool), String> {
    let (cmd, t) = cli.command.split();
    let key = t.key.clone().or_else(|| t.key_flag.clone());
    let entries: Vec<Entry> = match (t.all, key) {
        (true, None) if cmd == Command::VerifyTable => verify_all::<Cyc>(t.bound),
        (true, None) => {
            let keys: Vec<String> = crate::tables::table_rows()
                .iter()
                .map(|r| r.primary().key())
                .filter(|k| cmd != Command::TwistCheck || k.contains("/J/"))
                .collect();
            use rayon::prelude::*;
            keys.par_iter()
                .flat_map(|k| run_key::<Cyc>(k, &[Command::CheckAction, cmd], t.bound, t.oracle))
                .collect()
        }
        (false, Some(k)) => {
            let mut cmds = vec![cmd];
            if !cmd.module_only() && cmd != Command::VerifyTable {
                cmds.push(Command::CheckAction);
            }
            run_key::<Cyc>(&k, &cmds, t.bound, t.oracle)
        }
        (true, Some(_)) => return Err("give either a key or --all".into()),
        (false, None) => return Err("a key or --all is required".into()),
    };
    let ok = entries.iter().all(Entry::pass);
    Ok((render(&entries), ok))
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
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
    let (text, ok) = match execute(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("hopf16: {msg}");
            return 2;
        }
    };
    let (_, t) = cli.command.split();
    let written = match &t.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("hopf16: {e}");
        return 2;
    }
    if ok {
        0
    } else {
        1
    }
}
