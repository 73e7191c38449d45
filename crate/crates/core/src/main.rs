use std::process::ExitCode;

use clap::{Parser, Subcommand};
use latticemaps::cli::{parse_config, run, Command as Verb, RunConfig};
use latticemaps::gallery::GalleryId;
use latticemaps::{Error, Result};

#[derive(Parser)]
#[command(name = "latticemaps", version, about = "Exact integrable maps from open boundary reductions")]
struct Args {
    #[command(subcommand)]
    verb: VerbArg,
    /// JSON configuration document.
    #[arg(long, global = true)]
    config: Option<String>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum VerbArg {
    /// Randomized consistency suite over every quad and boundary equation.
    Verify,
    /// Iterate a strip map.
    Orbit,
    /// Extract monodromy invariants and track them along an orbit.
    Invariants,
    #[command(subcommand)]
    Gallery(GalleryArg),
}

#[derive(Subcommand)]
enum GalleryArg {
    List,
    /// Cross-check a closed-form map.
    Check { id: GalleryId },
}

fn config(args: &Args) -> Result<RunConfig> {
    let (verb, id) = match &args.verb {
        VerbArg::Verify => (Verb::Verify, None),
        VerbArg::Orbit => (Verb::Orbit, None),
        VerbArg::Invariants => (Verb::Invariants, None),
        VerbArg::Gallery(GalleryArg::List) => (Verb::Gallery, None),
        VerbArg::Gallery(GalleryArg::Check { id }) => (Verb::Gallery, Some(*id)),
    };
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            parse_config(&text)?
        }
        None => match id {
            Some(id) => latticemaps::cli::gallery_default(id),
            None => RunConfig::new(verb),
        },
    };
    cfg.command = verb;
    cfg.gallery = id;
    if let Some(s) = args.samples {
        if s == 0 {
            return Err(Error::config("/samples", "must be positive"));
        }
        cfg.samples = s;
    }
    if args.out.is_some() {
        cfg.out = args.out.clone();
    }
    cfg.apply_env()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = config(&args).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, &outcome.body).map_err(|e| Error::Io(format!("{path}: {e}")))?,
            None => print!("{}", outcome.body),
        }
        Ok(outcome)
    });
    match result {
        Ok(o) => {
            eprintln!("{}", o.summary);
            if o.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
