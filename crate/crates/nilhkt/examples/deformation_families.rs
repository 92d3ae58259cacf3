//! The one- and two-parameter deformation families: construction, full
//! verification, spectral signatures and pairwise non-isometry certificates.
//!
//! Run with `cargo run --example deformation_families`.

use nilhkt::constructors::{one_parameter_family, one_parameter_jmap, two_parameter_jmap};
use nilhkt::exactlin::rat;
use nilhkt::hypercx::check_hkt;
use nilhkt::invariants::{compare, isometry_signature};

fn main() {
    // a family member is a full metric algebra with a verified structure
    let t = rat(1, 2);
    let (alg, h) = one_parameter_family(3, &t).unwrap();
    let verdict = check_hkt(&alg, &h);
    println!(
        "one-parameter member t = {t}: dim {}, abelian {}, HKT {}",
        alg.dim(),
        verdict.abelian,
        verdict.hkt
    );

    // spectral signatures separate distinct parameters
    let params = [rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1), rat(3, 2)];
    println!("\npairwise separation of one-parameter members at l = 3:");
    for a in 0..params.len() {
        for b in (a + 1)..params.len() {
            let ja = one_parameter_jmap(3, &params[a]).unwrap();
            let jb = one_parameter_jmap(3, &params[b]).unwrap();
            println!(
                "  t = {:>3} vs t = {:>3}: {}",
                params[a].to_string(),
                params[b].to_string(),
                compare(&ja, &jb)
            );
        }
    }

    println!("\nsignature of the t = 1/2 member:");
    println!("{}", isometry_signature(&one_parameter_jmap(3, &rat(1, 2)).unwrap()));

    println!("\ntwo-parameter members:");
    let pairs = [(rat(1, 4), rat(1, 2)), (rat(1, 3), rat(1, 2)), (rat(1, 3), rat(2, 3))];
    for (i, (t, s)) in pairs.iter().enumerate() {
        for (tt, ss) in pairs.iter().skip(i + 1) {
            let a = two_parameter_jmap(3, t, s).unwrap();
            let b = two_parameter_jmap(3, tt, ss).unwrap();
            println!("  ({t}, {s}) vs ({tt}, {ss}): {}", compare(&a, &b));
        }
    }
}
