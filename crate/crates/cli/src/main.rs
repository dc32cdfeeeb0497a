use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use octa_cli::{exit, parse_query, records, render_svg, run_batch, run_validation, Mode, ValidateOptions};
use octa_geodesic::oracle::CompareOptions;

#[derive(Parser)]
#[command(name = "octa", version, about = "Geodesic distances on the regular octahedron")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read query records from stdin, write one distance record per line.
    Distance,
    /// Like `distance`, but emit the shortest trail and its edge crossings.
    Path,
    /// Compare the formulas against the oracles on seeded random pairs.
    Validate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Longest dual path the unfolding oracle searches.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=8))]
        max_faces: u64,
        /// Edge subdivisions of the mesh upper bound.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        subdivisions: u64,
    },
    /// Draw the shortest trail for the first query on stdin as SVG.
    Render {
        #[arg(long)]
        out: PathBuf,
        /// SVG units per edge.
        #[arg(long, default_value_t = 100.0)]
        scale: f64,
    },
    /// Print the face and vertex tables as JSON.
    Topology,
}

fn read_stdin() -> anyhow::Result<String> {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input).context("reading stdin")?;
    Ok(input)
}

fn batch(mode: Mode) -> anyhow::Result<i32> {
    let out = run_batch(&read_stdin()?, mode);
    let mut stdout = io::stdout().lock();
    for line in &out.lines {
        writeln!(stdout, "{line}")?;
    }
    stdout.flush()?;
    Ok(if out.errors > 0 { exit::BAD_RECORD } else { exit::OK })
}

fn render(out: PathBuf, scale: f64) -> anyhow::Result<i32> {
    let input = read_stdin()?;
    let Some((line, text)) = input.lines().enumerate().find(|(_, l)| !l.trim().is_empty()) else {
        anyhow::bail!("no query record on stdin");
    };
    let query = match parse_query(text, line + 1) {
        Ok(q) => q,
        Err(e) => {
            println!("{}", serde_json::to_string(&e)?);
            return Ok(exit::BAD_RECORD);
        }
    };
    let svg = render_svg(&records::trail_for(&query), scale);
    std::fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
    Ok(exit::OK)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Distance => batch(Mode::Distance),
        Command::Path => batch(Mode::Path),
        Command::Validate {
            seed,
            count,
            tolerance,
            max_faces,
            subdivisions,
        } => {
            let v = run_validation(&ValidateOptions {
                seed,
                count: count as usize,
                compare: CompareOptions {
                    tolerance,
                    max_faces: max_faces as usize,
                    subdivisions: subdivisions as usize,
                },
            });
            let mut stdout = io::stdout().lock();
            for f in &v.failures {
                writeln!(stdout, "{}", serde_json::to_string(f)?)?;
            }
            writeln!(stdout, "{}", serde_json::to_string(&v.summary)?)?;
            Ok(if v.summary.failed == 0 { exit::OK } else { exit::FAILURE })
        }
        Command::Render { out, scale } => render(out, scale),
        Command::Topology => {
            println!("{}", serde_json::to_string(&octa_geodesic::topology::table())?);
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("octa: {e:#}");
            ExitCode::from(exit::FAILURE as u8)
        }
    }
}
