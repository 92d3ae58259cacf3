//! The correspondence between 2-step metric Lie algebras carrying an abelian
//! hypercomplex structure and injective tuples of skew endomorphisms
//! commuting with a fixed quaternionic triple.
//!
//! Forward direction: for each orthonormal direction z in the commutator,
//! the pairing g(j_z X, Y) = g([X, Y], z) defines a skew map j_z on the
//! orthogonal complement of the center, and j_z commutes with the triple.
//! Backward direction: a tuple of such maps rebuilds a 2-step algebra on
//! rep ⊕ pad ⊕ parameters with the canonical inner product.

use num::Zero;
use thiserror::Error;

use super::quaternion::{quaternion_mult_matrix, MulSide, QuaternionCoord};
use crate::exactlin::{self, exact_sqrt, Matrix, Scalar};
use crate::hypercx::{check_abelian, check_quaternion, HypercomplexStructure};
use crate::liealg::MetricLieAlgebra;

#[derive(Debug, Error)]
pub enum JMapError {
    #[error("map {index} is not skew-symmetric")]
    NotSkew { index: usize },
    #[error("map {index} does not commute with J{j}")]
    NotCommuting { index: usize, j: usize },
    #[error("the parameter-to-endomorphism map is not injective (rank {rank} < {m})")]
    NotInjective { rank: usize, m: usize },
    #[error("maps must be square of equal size")]
    DimensionMismatch,
    #[error("reference triple fails the quaternion relations: {0}")]
    BadReference(String),
    #[error("reference triple is not orthogonal")]
    ReferenceNotOrthogonal,
    #[error("algebra is not 2-step nilpotent (step {step:?})")]
    NotTwoStep { step: Option<usize> },
    #[error("hypercomplex structure is not abelian on this algebra")]
    NotAbelian,
    #[error("hypercomplex structure does not preserve the center splitting")]
    CenterNotPreserved,
    #[error("no rational orthonormal basis: a squared norm of {0} appeared")]
    IrrationalNormalization(Scalar),
    #[error("resulting algebra failed validation: {0}")]
    BadAlgebra(String),
}

/// An injective linear map from an m-dimensional parameter space into the
/// skew endomorphisms of the representation space that commute with a fixed
/// quaternionic triple, stored through its images on the standard parameter
/// basis.
#[derive(Clone, Debug)]
pub struct JMap {
    maps: Vec<Matrix>,
    reference: HypercomplexStructure,
}

impl JMap {
    /// Validates the defining properties: each map skew, commuting with the
    /// reference triple; the assignment injective; the reference triple
    /// quaternionic and orthogonal.
    pub fn new(maps: Vec<Matrix>, reference: HypercomplexStructure) -> Result<Self, JMapError> {
        let dim = reference.dim();
        check_quaternion(&reference).map_err(|v| JMapError::BadReference(v.to_string()))?;
        for i in 1..=3 {
            if &(&reference.j(i).transpose() * reference.j(i)) != &Matrix::identity(dim) {
                return Err(JMapError::ReferenceNotOrthogonal);
            }
        }
        for (index, m) in maps.iter().enumerate() {
            if !m.is_square() || m.rows() != dim {
                return Err(JMapError::DimensionMismatch);
            }
            if !m.is_skew_symmetric() {
                return Err(JMapError::NotSkew { index });
            }
            for j in 1..=3 {
                if &(m * reference.j(j)) != &(reference.j(j) * m) {
                    return Err(JMapError::NotCommuting { index, j });
                }
            }
        }
        // injectivity: stack the maps as rows of a (m × dim²) matrix
        let m = maps.len();
        if m > 0 {
            let rows: Vec<Vec<Scalar>> = maps
                .iter()
                .map(|mat| {
                    (0..dim)
                        .flat_map(|r| (0..dim).map(move |c| mat.get(r, c).clone()))
                        .collect()
                })
                .collect();
            let rank = Matrix::from_rows(rows).rank();
            if rank < m {
                return Err(JMapError::NotInjective { rank, m });
            }
        }
        Ok(JMap { maps, reference })
    }

    /// Parameter-space dimension m.
    pub fn param_dim(&self) -> usize {
        self.maps.len()
    }

    /// Representation-space dimension.
    pub fn rep_dim(&self) -> usize {
        self.reference.dim()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn reference(&self) -> &HypercomplexStructure {
        &self.reference
    }

    /// j_z for an arbitrary parameter vector z.
    pub fn at(&self, z: &[Scalar]) -> Matrix {
        assert_eq!(z.len(), self.param_dim());
        let mut acc = Matrix::zeros(self.rep_dim(), self.rep_dim());
        for (c, m) in z.iter().zip(&self.maps) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }
}

/// Exact Gram–Schmidt against the inner product g, normalizing only through
/// rational square roots; errors out if an irrational normalization would be
/// required.
pub fn orthonormalize_exact(
    g: &Matrix,
    vectors: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>, JMapError> {
    let mut ortho: Vec<Vec<Scalar>> = Vec::new();
    for v in vectors {
        let mut u = v.clone();
        for w in &ortho {
            let coeff = g.bilinear(&u, w);
            if !coeff.is_zero() {
                u = exactlin::sub_vec(&u, &exactlin::scale_vec(&coeff, w));
            }
        }
        if exactlin::is_zero_vec(&u) {
            continue; // dependent input vector
        }
        let norm_sq = g.bilinear(&u, &u);
        let norm = exact_sqrt(&norm_sq)
            .ok_or_else(|| JMapError::IrrationalNormalization(norm_sq.clone()))?;
        let inv: Scalar = num::One::one();
        let inv = inv / norm;
        ortho.push(exactlin::scale_vec(&inv, &u));
    }
    Ok(ortho)
}

/// Extracts the skew-map tuple of a 2-step algebra with an abelian
/// hypercomplex structure, in exact orthonormal coordinates adapted to the
/// splitting center ⊕ center-orthocomplement.
pub fn to_jmap(alg: &MetricLieAlgebra, h: &HypercomplexStructure) -> Result<JMap, JMapError> {
    let step = alg.nilpotency_step();
    if !matches!(step, Some(s) if s <= 2) {
        return Err(JMapError::NotTwoStep { step });
    }
    if check_abelian(alg, h).is_err() {
        return Err(JMapError::NotAbelian);
    }
    let g = alg.metric();
    let center = alg.center();
    let rep = center.orthogonal_complement(g);
    let commutator = alg.commutator_subalgebra();

    let rep_basis = orthonormalize_exact(g, rep.basis())?;
    let z_basis = orthonormalize_exact(g, commutator.basis())?;

    // j_z entries: (j_z)_{b,a} = g([X_a, X_b], z)
    let p = rep_basis.len();
    let maps: Vec<Matrix> = z_basis
        .iter()
        .map(|z| {
            let mut m = Matrix::zeros(p, p);
            for a in 0..p {
                for b in 0..p {
                    if a == b {
                        continue;
                    }
                    let v = g.bilinear(&alg.bracket(&rep_basis[a], &rep_basis[b]), z);
                    m.set(b, a, v);
                }
            }
            m
        })
        .collect();

    // reference triple: restriction of h to the rep space in the chosen
    // orthonormal coordinates; verify h actually preserves the splitting
    let mut basis_mat = Matrix::zeros(alg.dim(), p);
    for (c, v) in rep_basis.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            basis_mat.set(r, c, x.clone());
        }
    }
    let restricted: Vec<Matrix> = (1..=3)
        .map(|i| {
            // coordinates of J X_a in the orthonormal frame: XᵀG J X
            &(&basis_mat.transpose() * g) * &(h.j(i) * &basis_mat)
        })
        .collect();
    for i in 1..=3 {
        if &(h.j(i) * &basis_mat) != &(&basis_mat * &restricted[i - 1]) {
            return Err(JMapError::CenterNotPreserved);
        }
    }
    let reference = HypercomplexStructure::new(
        restricted[0].clone(),
        restricted[1].clone(),
        restricted[2].clone(),
    )
    .map_err(|e| JMapError::BadReference(e.to_string()))?;
    JMap::new(maps, reference)
}

/// Rebuilds the 2-step metric algebra of a skew-map tuple: representation
/// space ⊕ pad ⊕ parameter space with the canonical inner product, the pad
/// chosen minimally so the appended center has dimension divisible by four.
/// The triple extends to the appended block by quaternion right
/// multiplications; the result is abelian (asserted) and hence verifies the
/// full HKT chain. Returns the algebra, the extended triple, and the pad
/// size.
pub fn from_jmap(
    j: &JMap,
) -> Result<(MetricLieAlgebra, HypercomplexStructure, usize), JMapError> {
    let rep = j.rep_dim();
    let m = j.param_dim();
    let pad = (4 - m % 4) % 4;
    let n = rep + pad + m;

    let mut brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for a in 0..rep {
        for b in (a + 1)..rep {
            let mut targets = Vec::new();
            for c in 0..m {
                // g([X, Y], z_c) = g(j_{z_c} X, Y)
                let v = j.map(c).get(b, a);
                if !v.is_zero() {
                    targets.push((rep + pad + c, v.clone()));
                }
            }
            if !targets.is_empty() {
                brackets.push((a, b, targets));
            }
        }
    }
    let alg = MetricLieAlgebra::new(n, brackets, None, None)
        .map_err(|e| JMapError::BadAlgebra(e.to_string()))?;

    // extend the triple by right-multiplication blocks on the appended
    // coordinates (pad + parameters, a multiple of four)
    let appended = pad + m;
    debug_assert_eq!(appended % 4, 0);
    let pad_units = [
        quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Right),
        quaternion_mult_matrix(&QuaternionCoord::unit_j(), MulSide::Right),
        quaternion_mult_matrix(&QuaternionCoord::unit_k().neg(), MulSide::Right),
    ];
    let triple: Vec<Matrix> = (0..3)
        .map(|idx| {
            let mut blocks: Vec<&Matrix> = vec![j.reference().j(idx + 1)];
            let reps = appended / 4;
            for _ in 0..reps {
                blocks.push(&pad_units[idx]);
            }
            Matrix::block_diag(&blocks)
        })
        .collect();
    let h = HypercomplexStructure::new(triple[0].clone(), triple[1].clone(), triple[2].clone())
        .map_err(|_| JMapError::DimensionMismatch)?;

    // the construction guarantees an abelian structure; keep that as a
    // standing self-check
    if check_abelian(&alg, &h).is_err() {
        return Err(JMapError::NotAbelian);
    }
    Ok((alg, h, pad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::catalog;
    use crate::exactlin::{int, rat, unit_vec};
    use crate::hypercx::check_hkt;

    #[test]
    fn to_jmap_on_first_catalog_algebra() {
        let (alg, h) = catalog("n1").unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        assert_eq!(j.param_dim(), 1);
        assert_eq!(j.rep_dim(), 4);
        // j_{e5}: e1 ↦ e2, e2 ↦ −e1, e3 ↦ −e4, e4 ↦ e3
        let m = j.map(0);
        assert_eq!(m.col(0), unit_vec(4, 1));
        assert_eq!(m.col(1), exactlin::neg_vec(&unit_vec(4, 0)));
        assert_eq!(m.col(2), exactlin::neg_vec(&unit_vec(4, 3)));
        assert_eq!(m.col(3), unit_vec(4, 2));
    }

    #[test]
    fn to_jmap_on_abelian_algebra_is_empty() {
        let alg = MetricLieAlgebra::abelian(4, None);
        let r = |q: QuaternionCoord| quaternion_mult_matrix(&q, MulSide::Right);
        let h = HypercomplexStructure::new(
            r(QuaternionCoord::unit_i()),
            r(QuaternionCoord::unit_j()),
            r(QuaternionCoord::unit_k()).scale(&int(-1)),
        )
        .unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        assert_eq!(j.param_dim(), 0);
        assert_eq!(j.rep_dim(), 0);
    }

    #[test]
    fn to_jmap_on_third_catalog_algebra() {
        let (alg, h) = catalog("n3").unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        assert_eq!(j.param_dim(), 3);
        assert_eq!(j.rep_dim(), 4);
        // three anticommuting complex structures
        for a in 0..3 {
            assert_eq!(&(j.map(a) * j.map(a)), &-&Matrix::identity(4));
            for b in (a + 1)..3 {
                let anti = &(j.map(a) * j.map(b)) + &(j.map(b) * j.map(a));
                assert!(anti.is_zero());
            }
        }
    }

    #[test]
    fn maps_are_invariant_under_the_reference_triple() {
        // g(j_z J_i X, J_i Y) = g(j_z X, Y) on all basis pairs: the defining
        // membership condition for the commutant-skew space.
        let (alg, h) = catalog("n3").unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        let p = j.rep_dim();
        let g = Matrix::identity(p);
        for c in 0..j.param_dim() {
            for i in 1..=3 {
                let ji = j.reference().j(i);
                for a in 0..p {
                    for b in 0..p {
                        let lhs = g.bilinear(
                            &j.map(c).mul_vec(&ji.col(a)),
                            &ji.col(b),
                        );
                        let rhs = g.bilinear(
                            &j.map(c).mul_vec(&unit_vec(p, a)),
                            &unit_vec(p, b),
                        );
                        assert_eq!(lhs, rhs, "z {c}, J{i}, pair ({a}, {b})");
                    }
                }
            }
        }
    }

    #[test]
    fn left_multiplication_by_i_extends_heisenberg() {
        let li = quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Left);
        let r = |q: QuaternionCoord| quaternion_mult_matrix(&q, MulSide::Right);
        let reference = HypercomplexStructure::new(
            r(QuaternionCoord::unit_i()),
            r(QuaternionCoord::unit_j()),
            r(QuaternionCoord::unit_k()).scale(&int(-1)),
        )
        .unwrap();
        let j = JMap::new(vec![li], reference).unwrap();
        let (alg, h, pad) = from_jmap(&j).unwrap();
        assert_eq!(pad, 3);
        assert_eq!(alg.dim(), 8);
        assert_eq!(alg.commutator_subalgebra().dim(), 1);
        assert_eq!(alg.nilpotency_step(), Some(2));
        // single bracket plane structure: [e1,e2] = [e3,e4] = e8
        // ((L_i)_{2,1} = (L_i)_{4,3} = 1)
        assert_eq!(alg.bracket_basis(0, 1), unit_vec(8, 7));
        assert_eq!(alg.bracket_basis(2, 3), unit_vec(8, 7));
        assert!(check_hkt(&alg, &h).hkt);
    }

    #[test]
    fn roundtrip_on_third_catalog_algebra() {
        let (alg, h) = catalog("n3").unwrap();
        let j = to_jmap(&alg, &h).unwrap();
        let (rebuilt, h2, pad) = from_jmap(&j).unwrap();
        assert_eq!(pad, 1);
        assert_eq!(rebuilt.dim(), 8);
        // signed basis permutation: the original z-block (e5, e6, e7) moves
        // to (e6, e7, e8) and the pad takes e5
        assert_eq!(rebuilt.bracket_basis(0, 1), unit_vec(8, 5));
        assert_eq!(rebuilt.bracket_basis(0, 2), unit_vec(8, 6));
        assert_eq!(rebuilt.bracket_basis(0, 3), unit_vec(8, 7));
        assert!(check_hkt(&rebuilt, &h2).hkt);
    }

    #[test]
    fn skew_violation_is_rejected() {
        let r = |q: QuaternionCoord| quaternion_mult_matrix(&q, MulSide::Right);
        let reference = HypercomplexStructure::new(
            r(QuaternionCoord::unit_i()),
            r(QuaternionCoord::unit_j()),
            r(QuaternionCoord::unit_k()).scale(&int(-1)),
        )
        .unwrap();
        let not_skew = Matrix::identity(4);
        assert!(matches!(
            JMap::new(vec![not_skew], reference.clone()),
            Err(JMapError::NotSkew { .. })
        ));
        // L_i and 2·L_i are dependent: injectivity fails
        let li = quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Left);
        let li2 = li.scale(&int(2));
        assert!(matches!(
            JMap::new(vec![li, li2], reference),
            Err(JMapError::NotInjective { .. })
        ));
    }

    #[test]
    fn orthonormalize_exact_accepts_rational_frames() {
        let g = Matrix::identity(2);
        let frame = orthonormalize_exact(
            &g,
            &[vec![rat(3, 5), rat(4, 5)], vec![int(1), int(0)]],
        )
        .unwrap();
        assert_eq!(frame.len(), 2);
        for a in 0..2 {
            for b in 0..2 {
                let expected = if a == b { int(1) } else { int(0) };
                assert_eq!(g.bilinear(&frame[a], &frame[b]), expected);
            }
        }
        // irrational case: a diagonal entry that is not a perfect square
        let g2 = Matrix::from_i64(&[&[2]]);
        assert!(matches!(
            orthonormalize_exact(&g2, &[vec![int(1)]]),
            Err(JMapError::IrrationalNormalization(_))
        ));
    }
}
