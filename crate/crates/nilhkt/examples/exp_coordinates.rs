//! Exponential coordinates on the simply connected group: exact group law,
//! left-invariant coframe, the metric as a matrix-valued function of the
//! point, and an exact left-invariance check.
//!
//! Run with `cargo run --example exp_coordinates`.

use nilhkt::constructors::catalog;
use nilhkt::exactlin::{int, rat, Scalar};
use nilhkt::expcoords::{
    coframe_at, group_mul, metric_at, verify_left_invariance, GroupPoint,
};

fn main() {
    let (alg, _) = catalog("n1").unwrap();

    // group law: multiplying in opposite orders differs in the central block
    let a = GroupPoint::new(vec![int(1), int(0), int(0), int(0)], vec![int(0); 4]);
    let b = GroupPoint::new(vec![int(0), int(1), int(0), int(0)], vec![int(0); 4]);
    let ab = group_mul(&alg, &a, &b).unwrap();
    let ba = group_mul(&alg, &b, &a).unwrap();
    println!("a·b central block: {:?}", strs(&ab.z));
    println!("b·a central block: {:?}", strs(&ba.z));

    // coframe away from the origin picks up x-dependent corrections
    let p = GroupPoint::new(vec![int(1), int(2), int(0), int(0)], vec![int(0); 4]);
    let rows = coframe_at(&alg, &p).unwrap();
    println!("\ncoframe row of the first central coordinate at (1,2,0,0):");
    println!("  {:?}", strs(&rows[4]));

    // pointwise metric
    let g = metric_at(&alg, &p).unwrap();
    println!("\nmetric at (1,2,0,0; 0,0,0,0):\n{g}");

    // exact left invariance at a rational sample
    let mover = GroupPoint::new(
        vec![rat(1, 2), int(-1), int(3), rat(2, 5)],
        vec![int(1), int(0), rat(-1, 3), int(2)],
    );
    let u: Vec<Scalar> = vec![
        int(1), rat(1, 2), int(0), int(-3), int(2), int(0), rat(4, 7), int(1),
    ];
    let w: Vec<Scalar> = vec![
        int(0), int(2), rat(-5, 3), int(1), int(1), int(1), int(0), rat(2, 9),
    ];
    let check = verify_left_invariance(&alg, &mover, &p, &u, &w).unwrap();
    println!(
        "\nleft invariance at a rational sample: {} (both sides = {})",
        check.holds, check.lhs
    );
}

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
