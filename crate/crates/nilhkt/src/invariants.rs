//! Spectral non-isometry certificates for skew-map tuples, and the rational
//! structure-constant witness for lattice existence.
//!
//! Every field of the signature is invariant under (a) simultaneous
//! conjugation of the tuple by an orthogonal map of the representation space
//! and (b) orthogonal change of basis of the parameter space. Equality of
//! signatures is therefore necessary for the associated simply connected
//! groups to be isometric, so a signature mismatch is a sound certificate of
//! non-isometry; the comparison never certifies isometry.

use std::fmt;

use thiserror::Error;

use crate::constructors::JMap;
use crate::exactlin::{Matrix, Scalar};
use crate::liealg::MetricLieAlgebra;

#[derive(Debug, Error)]
pub enum InvariantsError {
    #[error("algebra is not nilpotent; no lattice witness")]
    NotNilpotent,
}

/// Conjugation- and reparametrization-invariant spectral data of a skew-map
/// tuple.
///
/// With S = Σ_a j_a², G the Gram matrix tr(j_a j_b) on the parameter space,
/// and Q = Σ_{a,b} (j_a j_b + j_b j_a)², the signature stores the
/// characteristic polynomials of S, G, Q and the power traces of S. Sums
/// over all ordered parameter pairs make every field a full tensor
/// contraction, hence invariant under orthogonal reparametrization — a
/// sorted multiset of per-pair traces would not be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSignature {
    pub rep_dim: usize,
    pub param_dim: usize,
    /// Monic characteristic polynomial of S = Σ_a j_a².
    pub charpoly_s: Vec<Scalar>,
    /// tr(S^p) for p = 1..=rep_dim.
    pub power_traces: Vec<Scalar>,
    /// Characteristic polynomial of the parameter Gram matrix tr(j_a j_b).
    pub pair_gram_charpoly: Vec<Scalar>,
    /// Characteristic polynomial of Q = Σ_{a,b} (j_a j_b + j_b j_a)².
    pub pair_square_charpoly: Vec<Scalar>,
}

impl fmt::Display for InvariantSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = |coeffs: &[Scalar]| {
            coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "rep dim {}, parameters {}", self.rep_dim, self.param_dim)?;
        writeln!(f, "  charpoly(S): [{}]", poly(&self.charpoly_s))?;
        writeln!(f, "  charpoly(Gram): [{}]", poly(&self.pair_gram_charpoly))?;
        write!(f, "  charpoly(Q): [{}]", poly(&self.pair_square_charpoly))
    }
}

/// Computes the spectral signature of a tuple. Deterministic; the empty
/// tuple of an abelian algebra gives the empty signature.
pub fn isometry_signature(j: &JMap) -> InvariantSignature {
    let n = j.rep_dim();
    let m = j.param_dim();
    let mut s = Matrix::zeros(n, n);
    for a in 0..m {
        s = &s + &(j.map(a) * j.map(a));
    }
    let charpoly_s = s.char_poly().expect("square");
    let mut power_traces = Vec::with_capacity(n);
    let mut power = Matrix::identity(n);
    for _ in 0..n {
        power = &power * &s;
        power_traces.push(power.trace());
    }
    let mut gram = Matrix::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            gram.set(a, b, (j.map(a) * j.map(b)).trace());
        }
    }
    let mut q = Matrix::zeros(n, n);
    for a in 0..m {
        for b in 0..m {
            let anti = &(j.map(a) * j.map(b)) + &(j.map(b) * j.map(a));
            q = &q + &(&anti * &anti);
        }
    }
    InvariantSignature {
        rep_dim: n,
        param_dim: m,
        charpoly_s,
        power_traces,
        pair_gram_charpoly: gram.char_poly().expect("square"),
        pair_square_charpoly: q.char_poly().expect("square"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// The signatures differ: the associated simply connected groups are
    /// certifiably non-isometric.
    Distinct,
    /// Signatures agree; nothing is certified either way.
    Inconclusive,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Distinct => write!(f, "distinct"),
            Comparison::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

pub fn compare(a: &JMap, b: &JMap) -> Comparison {
    if isometry_signature(a) == isometry_signature(b) {
        Comparison::Inconclusive
    } else {
        Comparison::Distinct
    }
}

/// Basis with rational structure constants, emitted as the lattice-existence
/// witness for a nilpotent algebra. In exact arithmetic every stored
/// constant is rational, so the content is the emission of the witness
/// itself.
#[derive(Debug, Clone)]
pub struct RationalBasisWitness {
    pub dim: usize,
    pub nilpotency_step: usize,
    /// (i, j, targets) rows of the verified-rational bracket table.
    pub brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
}

impl fmt::Display for RationalBasisWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rational basis witness: dim {}, {}-step nilpotent",
            self.dim, self.nilpotency_step
        )?;
        if self.brackets.is_empty() {
            return write!(f, "  (abelian: empty bracket table)");
        }
        for (i, j, targets) in &self.brackets {
            let rhs: Vec<String> = targets
                .iter()
                .map(|(k, c)| {
                    if num::One::is_one(c) {
                        format!("e{}", k + 1)
                    } else {
                        format!("{c}·e{}", k + 1)
                    }
                })
                .collect();
            writeln!(f, "  [e{}, e{}] = {}", i + 1, j + 1, rhs.join(" + "))?;
        }
        Ok(())
    }
}

/// Confirms the stored basis is a rational-structure-constant witness (true
/// by construction in exact arithmetic) and emits it; errors when the
/// algebra is not nilpotent, where the criterion does not apply.
pub fn lattice_criterion(alg: &MetricLieAlgebra) -> Result<RationalBasisWitness, InvariantsError> {
    let step = alg.nilpotency_step().ok_or(InvariantsError::NotNilpotent)?;
    Ok(RationalBasisWitness {
        dim: alg.dim(),
        nilpotency_step: step,
        brackets: alg.bracket_entries(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        catalog, one_parameter_jmap, quaternion_mult_matrix, to_jmap, two_parameter_jmap,
        MulSide, QuaternionCoord,
    };
    use crate::exactlin::{int, rat};
    use crate::hypercx::HypercomplexStructure;

    #[test]
    fn uniform_family_signature_is_scalar() {
        // t = 1: S = −2I on dimension 12, char poly (λ + 2)^12
        let j = one_parameter_jmap(3, &int(1)).unwrap();
        let sig = isometry_signature(&j);
        let model = Matrix::diagonal(&vec![int(-2); 12]).char_poly().unwrap();
        assert_eq!(sig.charpoly_s, model);
    }

    #[test]
    fn half_parameter_signature_splits() {
        // t = 1/2: char poly (λ+2)^8 (λ+5/4)^4
        let j = one_parameter_jmap(3, &rat(1, 2)).unwrap();
        let sig = isometry_signature(&j);
        let mut diag = vec![int(-2); 8];
        diag.extend(vec![rat(-5, 4); 4]);
        let model = Matrix::diagonal(&diag).char_poly().unwrap();
        assert_eq!(sig.charpoly_s, model);
    }

    #[test]
    fn empty_signature_for_abelian() {
        let alg = MetricLieAlgebra::abelian(4, None);
        let r = |q: QuaternionCoord| quaternion_mult_matrix(&q, MulSide::Right);
        let h = HypercomplexStructure::new(
            r(QuaternionCoord::unit_i()),
            r(QuaternionCoord::unit_j()),
            r(QuaternionCoord::unit_k()).scale(&int(-1)),
        )
        .unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        let sig = isometry_signature(&j);
        assert_eq!(sig.param_dim, 0);
        assert_eq!(sig.rep_dim, 0);
        assert!(sig.power_traces.is_empty());
    }

    #[test]
    fn family_separation() {
        let a = one_parameter_jmap(3, &rat(1, 2)).unwrap();
        let b = one_parameter_jmap(3, &int(1)).unwrap();
        assert_eq!(compare(&a, &b), Comparison::Distinct);

        let c = two_parameter_jmap(3, &rat(1, 3), &rat(1, 2)).unwrap();
        let d = two_parameter_jmap(3, &rat(1, 4), &rat(1, 2)).unwrap();
        assert_eq!(compare(&c, &d), Comparison::Distinct);
    }

    #[test]
    fn monotone_separation_on_one_parameter_family() {
        // tr(S) = −16 − 4(1 + t²) at l = 3 is injective in t² for t > 0, so
        // any two distinct rational parameters in (0, 2] must separate.
        let params = [
            rat(1, 5),
            rat(2, 5),
            rat(3, 7),
            rat(1, 2),
            rat(5, 8),
            rat(7, 9),
            rat(1, 1),
            rat(13, 11),
            rat(3, 2),
            rat(9, 5),
            rat(2, 1),
        ];
        for (i, t) in params.iter().enumerate() {
            for tp in params.iter().skip(i + 1) {
                let a = one_parameter_jmap(3, t).unwrap();
                let b = one_parameter_jmap(3, tp).unwrap();
                assert_eq!(compare(&a, &b), Comparison::Distinct, "t = {t}, t' = {tp}");
                // first power trace alone already separates
                let sa = isometry_signature(&a);
                let sb = isometry_signature(&b);
                assert_ne!(sa.power_traces[0], sb.power_traces[0]);
            }
        }
    }

    #[test]
    fn compare_is_reflexively_inconclusive_and_symmetric() {
        let a = one_parameter_jmap(3, &rat(1, 2)).unwrap();
        let b = one_parameter_jmap(3, &rat(2, 3)).unwrap();
        assert_eq!(compare(&a, &a), Comparison::Inconclusive);
        assert_eq!(compare(&a, &b), compare(&b, &a));
    }

    #[test]
    fn signature_survives_orthogonal_conjugation() {
        // conjugate by a rational unit-quaternion rotation blockwise
        let j = one_parameter_jmap(2, &rat(1, 2)).unwrap();
        let q = QuaternionCoord::new(rat(1, 3), rat(2, 3), rat(2, 3), int(0));
        assert_eq!(q.norm_sq(), int(1));
        let block = quaternion_mult_matrix(&q, MulSide::Left);
        let f = Matrix::block_diag(&[&block, &block]);
        assert_eq!(&(&f.transpose() * &f), &Matrix::identity(8));
        let conj = |m: &Matrix| &(&f.transpose() * m) * &f;
        let maps: Vec<Matrix> = j.maps().iter().map(conj).collect();
        let reference = HypercomplexStructure::new(
            conj(j.reference().j(1)),
            conj(j.reference().j(2)),
            conj(j.reference().j(3)),
        )
        .unwrap();
        let conjugated = JMap::new(maps, reference).unwrap();
        assert_eq!(isometry_signature(&j), isometry_signature(&conjugated));
        assert_eq!(compare(&j, &conjugated), Comparison::Inconclusive);
    }

    #[test]
    fn signature_survives_parameter_rotation() {
        // rotate the two parameter directions by the rational rotation
        // (3/5, 4/5); a sound signature must not move.
        let j = one_parameter_jmap(2, &rat(1, 2)).unwrap();
        let (c, s) = (rat(3, 5), rat(4, 5));
        let m0 = &j.map(0).scale(&c) + &j.map(1).scale(&s);
        let m1 = &j.map(0).scale(&-&s) + &j.map(1).scale(&c);
        let rotated = JMap::new(vec![m0, m1], j.reference().clone()).unwrap();
        assert_eq!(isometry_signature(&j), isometry_signature(&rotated));
    }

    #[test]
    fn lattice_witness_for_catalog_and_family() {
        let (n1, _) = catalog("n1").unwrap();
        let w = lattice_criterion(&n1).unwrap();
        assert_eq!(w.dim, 8);
        assert_eq!(w.nilpotency_step, 2);
        assert_eq!(w.brackets.len(), 2);

        let (alg, _) = crate::constructors::one_parameter_family(2, &rat(1, 2)).unwrap();
        let w = lattice_criterion(&alg).unwrap();
        assert_eq!(w.dim, 12);

        // not nilpotent: no witness
        let so3 = MetricLieAlgebra::new(
            3,
            vec![
                (0, 1, vec![(2, int(1))]),
                (1, 2, vec![(0, int(1))]),
                (0, 2, vec![(1, int(-1))]),
            ],
            None,
            None,
        )
        .unwrap();
        assert!(lattice_criterion(&so3).is_err());
    }
}
