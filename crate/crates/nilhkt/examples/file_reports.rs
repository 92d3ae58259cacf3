//! The file-format side of the crate used as a library: serialize an
//! algebra, parse it back, and build the full machine-readable report.
//!
//! Run with `cargo run --example file_reports`.

use nilhkt::cli::{algebra_to_file, build_report, parse_algebra_file, render_file, render_json};
use nilhkt::constructors::catalog;

fn main() {
    let (alg, h) = catalog("n1").unwrap();

    let rendered = render_file(&algebra_to_file(&alg, Some(&h)));
    println!("--- algebra file (truncated) ---");
    for line in rendered.lines().take(18) {
        println!("{line}");
    }
    println!("...");

    let (parsed, parsed_h) = parse_algebra_file(&rendered).unwrap();
    println!(
        "\nparse roundtrip exact: {}",
        parsed == alg && parsed_h.as_ref() == Some(&h)
    );

    let report = build_report(&parsed, parsed_h.as_ref()).unwrap();
    println!("\n--- machine-readable report (truncated) ---");
    for line in render_json(&report).lines().take(30) {
        println!("{line}");
    }
    println!("...");
}
