//! The certificate pipeline: on a 2-step algebra carrying an HKT structure,
//! the quaternionic closure of the commutator is proper and central, and the
//! structure is forced to be abelian. Each step is verified exactly and
//! reported.
//!
//! Run with `cargo run --example abelianness_certificate`.

use nilhkt::constructors::{catalog, one_parameter_family};
use nilhkt::exactlin::rat;
use nilhkt::hypercx::abelianness_certificate;

fn main() {
    for name in ["n1", "n2", "n3"] {
        let (alg, h) = catalog(name).unwrap();
        let cert = abelianness_certificate(&alg, &h).unwrap();
        println!(
            "{name}: closure dim {}, complement dim {}",
            cert.closure.dim(),
            cert.complement.dim()
        );
        print!("{cert}");
        println!("all steps passed: {}\n", cert.all_passed());
    }

    // family members satisfy the same certificate
    let (alg, h) = one_parameter_family(2, &rat(2, 3)).unwrap();
    let cert = abelianness_certificate(&alg, &h).unwrap();
    println!(
        "one-parameter member (dim {}): all steps passed: {}",
        alg.dim(),
        cert.all_passed()
    );

    // the 12-dimensional example is 3-step, outside the certificate's scope
    let (ex3, h3) = catalog("example3_12dim").unwrap();
    match abelianness_certificate(&ex3, &h3) {
        Err(e) => println!("example3_12dim: {e}"),
        Ok(_) => unreachable!("3-step input must be refused"),
    }
}
