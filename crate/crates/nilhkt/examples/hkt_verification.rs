//! The full verification chain — quaternion relations, integrability,
//! compatibility, abelian-ness and the torsion identity — on a catalog
//! algebra, then on a deliberately broken triple to show the witness.
//!
//! Run with `cargo run --example hkt_verification`.

use nilhkt::constructors::catalog;
use nilhkt::exactlin::{int, Matrix};
use nilhkt::hypercx::{check_hkt, HypercomplexStructure};

fn main() {
    let (alg, h) = catalog("n3").unwrap();
    let verdict = check_hkt(&alg, &h);
    println!("catalog n3:");
    println!("  quaternion relations: {}", verdict.quaternion);
    println!("  metric compatible:    {}", verdict.compatible);
    println!("  integrable:           {:?}", verdict.integrable);
    println!("  abelian:              {}", verdict.abelian);
    println!("  HKT:                  {}", verdict.hkt);

    // Conjugating the triple by diag(2, 1, …, 1) preserves the quaternion
    // relations but breaks the torsion identity; the verdict carries a
    // concrete basis witness.
    let mut p = Matrix::identity(8);
    p.set(0, 0, int(2));
    let p_inv = p.inverse().unwrap();
    let conj = |j: &Matrix| &(&p_inv * j) * &p;
    let broken = HypercomplexStructure::new(conj(h.j(1)), conj(h.j(2)), conj(h.j(3))).unwrap();
    let verdict = check_hkt(&alg, &broken);
    println!("\nconjugated triple:");
    println!("  quaternion relations: {}", verdict.quaternion);
    println!("  metric compatible:    {}", verdict.compatible);
    println!("  HKT:                  {}", verdict.hkt);
    if let Some(w) = verdict.witness {
        println!("  witness:              {w}");
    }
}
