//! The correspondence between 2-step metric algebras with abelian
//! hypercomplex structure and tuples of commuting skew maps, in both
//! directions: extract the tuple of a catalog algebra, rebuild an algebra
//! from a single left multiplication, and run a signature-stable roundtrip.
//!
//! Run with `cargo run --example jmap_correspondence`.

use nilhkt::constructors::{
    blockwise_right_reference, catalog, from_jmap, quaternion_mult_matrix, to_jmap, JMap,
    MulSide, QuaternionCoord,
};
use nilhkt::hypercx::check_hkt;
use nilhkt::invariants::isometry_signature;

fn main() {
    // forward: the third catalog algebra encodes three anticommuting
    // complex structures on ℝ⁴
    let (alg, h) = catalog("n3").unwrap();
    let jmap = to_jmap(&alg, &h).unwrap();
    println!(
        "n3 → tuple with {} parameters on a {}-dimensional space",
        jmap.param_dim(),
        jmap.rep_dim()
    );
    for a in 0..jmap.param_dim() {
        println!("j_{}:\n{}", a + 1, jmap.map(a));
    }

    // backward: a single left multiplication by i extends a Heisenberg-type
    // algebra to dimension 8
    let li = quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Left);
    let single = JMap::new(vec![li], blockwise_right_reference(1)).unwrap();
    let (rebuilt, triple, pad) = from_jmap(&single).unwrap();
    println!(
        "\nsingle left multiplication → dim {} algebra (pad {}), brackets:",
        rebuilt.dim(),
        pad
    );
    print!("{rebuilt:?}");
    let verdict = check_hkt(&rebuilt, &triple);
    println!("verification chain: abelian {}, HKT {}", verdict.abelian, verdict.hkt);

    // roundtrip: the signature of the extracted tuple matches the original
    let recovered = to_jmap(&rebuilt, &triple).unwrap();
    println!(
        "\nroundtrip signature stable: {}",
        isometry_signature(&single) == isometry_signature(&recovered)
    );
    println!("signature of the Heisenberg-type tuple:");
    println!("{}", isometry_signature(&single));
}
