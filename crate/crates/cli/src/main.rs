//! `merit`: construct sequences from difference-set families, measure merit
//! factors, compare with the predicted limits, and run verification suites.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad
//! configuration or construction error (the error name leads the message on
//! stderr).

mod args;
mod commands;
mod family;
mod fmt;
mod verify;

use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use args::{Command, RunConfig};

fn run(cfg: &RunConfig) -> Result<u8> {
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("BadThreads: could not size the thread pool")?;
    }
    if let Some(path) = &cfg.dump_config {
        commands::emit(Some(path), &commands::to_json(cfg)?)?;
    }
    match &cfg.command {
        Command::Construct(a) => commands::construct(a)?,
        Command::Mf(a) => commands::mf(a)?,
        Command::Sweep(a) => commands::sweep(a)?,
        Command::Predict(a) => commands::predict(a)?,
        Command::Diagnose(a) => commands::diagnose(a)?,
        Command::Verify(a) => {
            let report = verify::run(a)?;
            commands::emit(a.out.as_deref(), &commands::to_json(&report)?)?;
            if !report.pass {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e:#}");
            ExitCode::from(2)
        }
    }
}
