//! Loads a JSON problem file, solves it and prints the same records the
//! command-line tool emits.
//!
//! Run with `cargo run --example problem_file [path]`; defaults to
//! `examples/data/two_alternatives.json`.

use std::path::PathBuf;

use tropical_rating::cli::{cmd_check, cmd_front, cmd_rate, Overrides, ProblemFile, RateRecord, Selection};
use tropical_rating::Result;

pub fn run_example(path: PathBuf) -> Result<RateRecord> {
    let file = ProblemFile::read(&path)?;
    let check = cmd_check(&file)?;
    println!("valid: {}", check.valid);

    let loaded = file.parse()?.load(&Overrides::default())?;
    let (_, front) = cmd_front(&loaded)?;
    println!("front kind: {}", front.kind);
    for p in &front.samples {
        println!("  alpha {:>14}  beta {:>14}", p.alpha.decimal, p.beta.decimal);
    }

    let rate = cmd_rate(&loaded, Selection::Endpoints, None)?;
    println!("{}", serde_json::to_string_pretty(&rate).expect("serializable"));
    Ok(rate)
}

fn main() -> Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/two_alternatives.json")));
    run_example(path).map(|_| ())
}
