//! Solves a problem file and prints the text report.
//!
//! ```sh
//! cargo run -p tropahp --example solve_fixture -- crates/tropahp/fixtures/school.json
//! ```

use std::path::PathBuf;

use tropahp::report::{solve_document, SolveSettings};
use tropahp::ProblemDocument;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/vacation.json"));
    let doc = ProblemDocument::from_json(&std::fs::read_to_string(&path)?)?;
    let settings = SolveSettings {
        baseline: true,
        ..SolveSettings::default()
    };
    let report = solve_document(&doc, &settings, None)?;
    print!("{}", report.to_text());
    Ok(())
}
