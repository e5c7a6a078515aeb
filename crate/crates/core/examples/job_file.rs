//! Drive the library from a JSON job file, as the command-line tool does,
//! and write the matrix artifact.
//!
//! `cargo run --example job_file -- crates/core/fixtures/monic.json out.json`

use spectral_forge::algebra::format_rational;
use spectral_forge::io::{matrix_to_json, JobSpec};
use spectral_forge::reconstruction::reconstruct;

fn main() -> spectral_forge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let path = args.first().cloned().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/monic.json").into());
    let job = JobSpec::load(path.as_ref())?;
    let data = job.data(None)?;
    println!("genus {}, preimages {:?}", data.curve.genus(), data.preimages.iter().map(format_rational).collect::<Vec<_>>());
    let l = reconstruct(&data)?;
    println!("polynomial in x: {}", l.verify_pole_locus().polynomial);
    let json = serde_json::to_string_pretty(&serde_json::json!({ "entries": matrix_to_json(&l.entries) })).unwrap();
    match args.get(1) {
        Some(out) => std::fs::write(out, json).map_err(|e| spectral_forge::Error::Validation(e.to_string()))?,
        None => println!("{json}"),
    }
    Ok(())
}
