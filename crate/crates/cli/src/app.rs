//! The `cmreg` command line, callable in-process.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::Parser;

use crate::{parse_session, run_session, RunOptions, EXIT_PARSE};

/// Run a session file of ring, ideal and module declarations and commands.
#[derive(Parser, Debug)]
#[command(name = "cmreg", version)]
struct Cli {
    /// Session file, or `-` for standard input.
    session: PathBuf,

    /// Write JSON-lines records here (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Seed for `fuzz` commands; overrides the session's `seed` statement.
    #[arg(long)]
    seed: Option<u64>,

    /// Run commands concurrently. Output order is unchanged.
    #[arg(long)]
    parallel: bool,

    /// Default resolution cap for commands without `--cap`.
    #[arg(long, value_name = "N")]
    cap: Option<usize>,

    /// Default degree window `a..b` for commands without `--window`.
    #[arg(long, value_name = "A..B", value_parser = parse_window)]
    window: Option<(i64, i64)>,

    /// Hypothesis asserted for every command, as `name=true`.
    #[arg(long = "assert", value_name = "NAME=true")]
    assertions: Vec<String>,

    /// Do not print the summary.
    #[arg(long, short)]
    quiet: bool,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: i64 = b.parse().map_err(|_| format!("bad upper bound `{b}`"))?;
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok((a, b))
}

fn read_session(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn global_assertions(list: &[String]) -> anyhow::Result<Vec<String>> {
    let mut out = Vec::new();
    for a in list {
        let (name, v) = a.split_once('=').unwrap_or((a, "true"));
        if !cmreg::theorems::hyp::ALL.contains(&name) {
            bail!("unknown hypothesis `{name}`");
        }
        match v {
            "true" => out.push(name.to_string()),
            "false" => {}
            _ => bail!("expected `{name}=true`, got `{a}`"),
        }
    }
    Ok(out)
}

/// Run the command line `args` (program name first) and return the exit
/// status: 0 when no verdict is violated, 1 on a violated verdict or a failed
/// command, 2 on a usage or parse error.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return if code == 0 { 0 } else { EXIT_PARSE };
        }
    };
    let text = match read_session(&cli.session) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return EXIT_PARSE;
        }
    };
    let extra = match global_assertions(&cli.assertions) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let mut spec = match parse_session(&text) {
        Ok(s) => s,
        Err(errs) => {
            for e in &errs.0 {
                let _ = writeln!(err, "{}:{}:{}: {}", cli.session.display(), e.at.line, e.at.col, e.message);
            }
            return EXIT_PARSE;
        }
    };
    for c in &mut spec.commands {
        c.flags.cap = c.flags.cap.or(cli.cap);
        c.flags.window = c.flags.window.or(cli.window);
        for a in &extra {
            if !c.flags.assertions.contains(a) {
                c.flags.assertions.push(a.clone());
            }
        }
    }
    let outcome = run_session(
        &spec,
        &RunOptions {
            parallel: cli.parallel,
            seed: cli.seed,
        },
    );
    // Keep standard output clean for JSON when both go there.
    let json_to_out = cli.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if let Some(path) = &cli.json {
        let body = outcome.json_lines();
        let written = if json_to_out {
            out.write_all(body.as_bytes()).map_err(anyhow::Error::from)
        } else {
            std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: {e:#}");
            return 1;
        }
    }
    if !cli.quiet {
        let _ = if json_to_out {
            write!(err, "{}", outcome.summary)
        } else {
            write!(out, "{}", outcome.summary)
        };
    }
    outcome.exit_code
}
