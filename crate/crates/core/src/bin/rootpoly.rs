use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use log::{debug, info};
use rayon::prelude::*;
use serde_json::{json, Value};

use rootpoly::report::{
    cmd_arrangement, cmd_diagram, cmd_report, cmd_triangulate, cmd_verify, parse_ideal, DiagramSpec,
};
use rootpoly::verify::{criterion_cases, run_some, Outcome, CRITERIA};
use rootpoly::{Error, Family, RootSystem};

#[derive(Parser, Debug)]
#[command(
    name = "rootpoly",
    version,
    about = "Root polytopes and their border-strip triangulations"
)]
struct Cli {
    /// Root system family: A, B, C or D.
    #[arg(long, global = true, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for triangulation assembly.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also run the acceptance checks for the given system.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summary counts as JSON.
    Report,
    /// Every simplex of the triangulation of P, or of P+ with --positive.
    Triangulate {
        #[arg(long)]
        positive: bool,
    },
    /// The codimension-2 hyperplane arrangement.
    Arrangement,
    /// ASCII diagram of an ideal, or of every member attached to an apex.
    #[command(group(ArgGroup::new("spec").required(true).args(["ideal", "apex"])))]
    Diagram {
        /// Ideal as a hexadecimal root bitset.
        #[arg(long)]
        ideal: Option<String>,
        /// 1-based index of a long simple root.
        #[arg(long)]
        apex: Option<usize>,
    },
    /// Acceptance checks; without --family, the whole desk-scale suite.
    Verify,
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn system(cli: &Cli) -> Result<RootSystem, Failure> {
    match (cli.family, cli.rank) {
        (Some(f), Some(n)) => Ok(RootSystem::new(f, n)?),
        _ => Err(Failure::Usage("--family and --rank are required".into())),
    }
}

fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn full_suite() -> (Value, bool) {
    let mut cases: Vec<((Family, usize), Vec<u8>)> = Vec::new();
    for (k, _) in CRITERIA {
        for case in criterion_cases(k) {
            match cases.iter_mut().find(|c| c.0 == case) {
                Some(c) => c.1.push(k),
                None => cases.push((case, vec![k])),
            }
        }
    }
    cases.sort();
    let checks: Vec<_> = cases
        .into_par_iter()
        .flat_map_iter(|((f, n), ks)| {
            let rs = RootSystem::new(f, n).expect("suite cases are valid");
            run_some(&rs, &ks)
        })
        .collect();
    let ok = checks.iter().all(|c| c.outcome == Outcome::Pass);
    (
        json!({ "command": "verify", "payload": { "checks": checks, "ok": ok } }),
        ok,
    )
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let mut ok = true;
    let out = match &cli.command {
        Command::Verify if cli.family.is_none() => {
            let (v, pass) = full_suite();
            ok &= pass;
            to_text(&v)
        }
        Command::Verify => {
            let (v, pass) = cmd_verify(&system(cli)?);
            ok &= pass;
            to_text(&v)
        }
        Command::Report => to_text(&cmd_report(&system(cli)?)?),
        Command::Triangulate { positive } => to_text(&cmd_triangulate(&system(cli)?, *positive)?),
        Command::Arrangement => to_text(&cmd_arrangement(&system(cli)?)?),
        Command::Diagram { ideal, apex } => {
            let rs = system(cli)?;
            let spec = match (ideal, apex) {
                (Some(tok), _) => DiagramSpec::Ideal(parse_ideal(&rs, tok)?),
                (None, Some(i)) if *i >= 1 => DiagramSpec::Apex(i - 1),
                (None, Some(i)) => return Err(Error::BadSpec(i.to_string()).into()),
                (None, None) => unreachable!("clap requires one of --ideal, --apex"),
            };
            cmd_diagram(&rs, &spec)?
        }
    };
    if cli.verify && !matches!(cli.command, Command::Verify) {
        let (_, pass) = cmd_verify(&system(cli)?);
        info!("acceptance checks {}", if pass { "passed" } else { "failed" });
        ok &= pass;
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ROOTPOLY_LOG")).init();
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("rootpoly: {e}");
            return ExitCode::from(2);
        }
    }
    debug!("{cli:?}");
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("rootpoly: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("rootpoly: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("rootpoly: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("rootpoly: {m}");
            ExitCode::from(1)
        }
    }
}
