//! The JSON problem-file layer shared by the `desys` binary and the tests.
//!
//! A single document carries the system matrices as rational strings plus
//! optional boundary data, inputs, horizon and target. The same reports the
//! binary prints are available in-process, which is what makes end-to-end
//! assertions cheap to write.
//!
//! Run with: cargo run --example json_problem_files

use std::path::Path;

use desys::cli::{exit_code_for, run_on, Command};
use desys::io::SystemFile;

fn main() -> desys::Result<()> {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/example_a.json");
    let file = SystemFile::from_path(&fixture)?;
    println!("loaded {}", fixture.display());
    if let Some(note) = &file.note {
        println!("note: {}", note);
    }

    // Each command returns a JSON report plus a one-line human summary.
    for command in [
        Command::Check,
        Command::Decompose,
        Command::Control,
        Command::Synthesize,
    ] {
        let report = run_on(command, &file)?;
        println!("  {:?}: {}", command, report.summary);
    }

    // Reports serialize back to the same exact rational-string shape, so
    // fragments can be copied into new problem files without loss.
    let decomposed = run_on(Command::Decompose, &file)?;
    println!(
        "\nA_p block straight out of the decompose report: {}",
        decomposed.value["A_p"]
    );

    // Documents can also be assembled in code and round-tripped.
    let sys = file.system()?;
    let rebuilt = SystemFile::from_parts(sys.f(), sys.g(), sys.b());
    let text = rebuilt.to_json_string();
    let reparsed = SystemFile::parse_str(&text)?;
    assert_eq!(reparsed.system()?.f(), sys.f());
    println!("round trip through JSON text preserved every entry");

    // Failures map to the binary's stable exit codes.
    let broken = SystemFile::parse_str("{\"F\": [[\"1/0\"]], \"G\": [[\"1\"]], \"B\": [[\"1\"]]}");
    match broken.and_then(|f| f.system().map(|_| ())) {
        Err(e) => println!(
            "bad rational rejected: {} (exit code {})",
            e,
            exit_code_for(&e)
        ),
        Ok(()) => unreachable!(),
    }
    Ok(())
}
