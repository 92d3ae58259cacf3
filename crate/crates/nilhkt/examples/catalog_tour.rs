//! Walks the built-in catalog: brackets, validation, nilpotency structure
//! and centers.
//!
//! Run with `cargo run --example catalog_tour`.

use nilhkt::constructors::{catalog, catalog_names};

fn main() {
    for name in catalog_names() {
        let (alg, h) = catalog(name).expect("catalog entry");
        println!("=== {name} (dim {}) ===", alg.dim());
        print!("{alg:?}");

        let report = alg.validate();
        println!("validation: {report}");

        let series = alg.lower_central_series();
        match series.step {
            Some(s) => {
                let dims: Vec<usize> = series.subspaces.iter().map(|v| v.dim()).collect();
                println!("nilpotent, step {s}; series dims {dims:?}");
            }
            None => println!("not nilpotent"),
        }

        let center = alg.center();
        println!(
            "center: dim {}, commutator: dim {}",
            center.dim(),
            alg.commutator_subalgebra().dim()
        );
        println!("hypercomplex triple on {} coordinates", h.dim());
        println!();
    }
}
