//! Loads a hand-written category from its JSON file and runs the checks the
//! command line runs, showing a rigidity failure.

use std::path::Path;

use polarhull::run::{build_universe, parse_universe, render, run_verification, Format, RunFlags};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/rigidity_idempotent.json");
    let spec = match parse_universe(&path, None) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let run = || -> polarhull::Result<String> {
        let built = build_universe(&spec)?;
        let report = run_verification(&built, RunFlags::default())?;
        render(&report, Format::Text)
    };
    match run() {
        Ok(text) => print!("{text}"),
        Err(e) => eprintln!("error: {e}"),
    }
}
