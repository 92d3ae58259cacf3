//! Rational structure-constant witnesses: for every rational family
//! parameter the constructed basis already has rational brackets, which is
//! the criterion for the simply connected group to admit a cocompact
//! discrete subgroup.
//!
//! Run with `cargo run --example lattice_witness`.

use nilhkt::constructors::{catalog, one_parameter_family};
use nilhkt::exactlin::rat;
use nilhkt::invariants::lattice_criterion;

fn main() {
    let (n1, _) = catalog("n1").unwrap();
    println!("{}", lattice_criterion(&n1).unwrap());

    for t in [rat(1, 2), rat(2, 3), rat(7, 5)] {
        let (alg, _) = one_parameter_family(2, &t).unwrap();
        let witness = lattice_criterion(&alg).unwrap();
        println!("\nfamily member t = {t}:");
        println!("{witness}");
    }
}
