//! The concrete catalog: three 8-dimensional 2-step algebras carrying
//! abelian hypercomplex structures, and a 12-dimensional 3-step example.

use thiserror::Error;

use crate::exactlin::{int, Matrix, Scalar};
use crate::hypercx::{check_quaternion, HypercomplexStructure};
use crate::liealg::MetricLieAlgebra;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?} (expected one of {names:?})", names = catalog_names())]
    UnknownName(String),
    #[error("catalog data is internally inconsistent: {0}")]
    Inconsistent(String),
}

pub fn catalog_names() -> [&'static str; 4] {
    ["n1", "n2", "n3", "example3_12dim"]
}

/// Builds a named catalog algebra with the identity metric and its
/// hypercomplex triple. The triples are only partially pinned down by their
/// generator images; the remaining columns are forced by the quaternion
/// relations, and the completion is validated rather than assumed.
pub fn catalog(name: &str) -> Result<(MetricLieAlgebra, HypercomplexStructure), CatalogError> {
    match name {
        "n1" => build_eight_dim(&n1_brackets()),
        "n2" => build_eight_dim(&n2_brackets()),
        "n3" => {
            let mut brackets = n1_brackets();
            brackets.extend(n2_brackets());
            build_eight_dim(&brackets)
        }
        "example3_12dim" => build_example3(),
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

type BracketTable = Vec<(usize, usize, Vec<(usize, Scalar)>)>;

/// [e1, e2] = −[e3, e4] = e5
fn n1_brackets() -> BracketTable {
    vec![
        (0, 1, vec![(4, int(1))]),
        (2, 3, vec![(4, int(-1))]),
    ]
}

/// [e1, e3] = [e2, e4] = e6, [e1, e4] = −[e2, e3] = e7
fn n2_brackets() -> BracketTable {
    vec![
        (0, 2, vec![(5, int(1))]),
        (1, 3, vec![(5, int(1))]),
        (0, 3, vec![(6, int(1))]),
        (1, 2, vec![(6, int(-1))]),
    ]
}

fn build_eight_dim(
    brackets: &BracketTable,
) -> Result<(MetricLieAlgebra, HypercomplexStructure), CatalogError> {
    let alg = MetricLieAlgebra::new(8, brackets.clone(), None, None)
        .map_err(|e| CatalogError::Inconsistent(e.to_string()))?;
    // J_i e1 = e_{1+i} and J_i e5 = e_{5+i} seed two quaternionic blocks.
    let h = quaternion_block_structure(8, &[[0, 1, 2, 3], [4, 5, 6, 7]]);
    check_quaternion(&h).map_err(|v| CatalogError::Inconsistent(v.to_string()))?;
    Ok((alg, h))
}

/// Completes a hypercomplex triple from disjoint index blocks (v, a, b, c):
/// on each block, J₁ maps v↦a, a↦−v, b↦c, c↦−b, and J₂, J₃ follow the
/// quaternion multiplication table. The completion is the unique one
/// satisfying the quaternion relations with the seeded images J₁v = a,
/// J₂v = b, J₃v = c.
pub(crate) fn quaternion_block_structure(
    dim: usize,
    blocks: &[[usize; 4]],
) -> HypercomplexStructure {
    let mut j1 = Matrix::zeros(dim, dim);
    let mut j2 = Matrix::zeros(dim, dim);
    let mut j3 = Matrix::zeros(dim, dim);
    for &[v, a, b, c] in blocks {
        // J1 = left multiplication by i on (v, a, b, c) ≅ (1, i, j, k)
        set_image(&mut j1, v, a, 1);
        set_image(&mut j1, a, v, -1);
        set_image(&mut j1, b, c, 1);
        set_image(&mut j1, c, b, -1);
        // J2 = left multiplication by j
        set_image(&mut j2, v, b, 1);
        set_image(&mut j2, b, v, -1);
        set_image(&mut j2, a, c, -1);
        set_image(&mut j2, c, a, 1);
        // J3 = left multiplication by k
        set_image(&mut j3, v, c, 1);
        set_image(&mut j3, c, v, -1);
        set_image(&mut j3, a, b, 1);
        set_image(&mut j3, b, a, -1);
    }
    HypercomplexStructure::new(j1, j2, j3).expect("square by construction")
}

fn set_image(m: &mut Matrix, from: usize, to: usize, sign: i64) {
    m.set(to, from, int(sign));
}

/// The 12-dimensional 3-step algebra with its abelian triple. J₁ and J₂ are
/// specified through signed images; J₃ = J₁J₂ and the quaternion relations
/// are then checked for consistency (an inconsistency is reported, never
/// patched).
fn build_example3() -> Result<(MetricLieAlgebra, HypercomplexStructure), CatalogError> {
    let brackets: BracketTable = vec![
        // [e1,e2] = −e10, [e5,e6] = e10
        (0, 1, vec![(9, int(-1))]),
        (4, 5, vec![(9, int(1))]),
        // [e2,e5] = −e11, [e1,e6] = e11
        (1, 4, vec![(10, int(-1))]),
        (0, 5, vec![(10, int(1))]),
        // [e1,e4] = [e2,e10] = [e5,e8] = [e6,e11] = −e12
        (0, 3, vec![(11, int(-1))]),
        (1, 9, vec![(11, int(-1))]),
        (4, 7, vec![(11, int(-1))]),
        (5, 10, vec![(11, int(-1))]),
    ];
    let alg = MetricLieAlgebra::new(12, brackets, None, None)
        .map_err(|e| CatalogError::Inconsistent(e.to_string()))?;

    // signed image pairs (from, to, sign); J e_to = −sign e_from follows
    let j1_pairs: [(usize, usize, i64); 6] = [
        (0, 1, 1),   // J1 e1 = e2
        (2, 11, 1),  // J1 e3 = e12
        (3, 9, 1),   // J1 e4 = e10
        (4, 5, 1),   // J1 e5 = e6
        (6, 8, 1),   // J1 e7 = e9
        (7, 10, 1),  // J1 e8 = e11
    ];
    let j2_pairs: [(usize, usize, i64); 6] = [
        (0, 5, 1),   // J2 e1 = e6
        (1, 4, 1),   // J2 e2 = e5
        (2, 8, 1),   // J2 e3 = e9
        (3, 10, 1),  // J2 e4 = e11
        (7, 9, -1),  // J2 e8 = −e10
        (6, 11, -1), // J2 e7 = −e12
    ];
    let j1 = complex_structure_from_pairs(12, &j1_pairs)?;
    let j2 = complex_structure_from_pairs(12, &j2_pairs)?;
    let j3 = &j1 * &j2;
    let h = HypercomplexStructure::new(j1, j2, j3)
        .map_err(|e| CatalogError::Inconsistent(e.to_string()))?;
    check_quaternion(&h).map_err(|v| {
        CatalogError::Inconsistent(format!("completed triple fails quaternion relations: {v}"))
    })?;
    Ok((alg, h))
}

/// Builds J with J e_from = sign·e_to and J e_to = −sign·e_from for each
/// pair; every index must be covered exactly once.
fn complex_structure_from_pairs(
    dim: usize,
    pairs: &[(usize, usize, i64)],
) -> Result<Matrix, CatalogError> {
    let mut m = Matrix::zeros(dim, dim);
    let mut covered = vec![false; dim];
    for &(from, to, sign) in pairs {
        for idx in [from, to] {
            if covered[idx] {
                return Err(CatalogError::Inconsistent(format!(
                    "basis vector e{} assigned twice",
                    idx + 1
                )));
            }
            covered[idx] = true;
        }
        m.set(to, from, int(sign));
        m.set(from, to, int(-sign));
    }
    if let Some(idx) = covered.iter().position(|&c| !c) {
        return Err(CatalogError::Inconsistent(format!(
            "no image specified for e{}",
            idx + 1
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{unit_vec, Subspace};

    #[test]
    fn unknown_name_is_rejected() {
        assert!(catalog("n4").is_err());
    }

    #[test]
    fn n1_shape() {
        let (alg, h) = catalog("n1").unwrap();
        assert_eq!(alg.dim(), 8);
        assert_eq!(alg.nilpotency_step(), Some(2));
        let commutator = alg.commutator_subalgebra();
        assert_eq!(commutator, Subspace::from_spanning(8, &[unit_vec(8, 4)]));
        // seeded images: J_i e1 = e_{1+i}, J_i e5 = e_{5+i}
        for i in 1..=3 {
            assert_eq!(h.apply(i, &unit_vec(8, 0)), unit_vec(8, i));
            assert_eq!(h.apply(i, &unit_vec(8, 4)), unit_vec(8, 4 + i));
        }
        // forced completions, e.g. J1 e3 = e4 and J1 e8 = −e7
        assert_eq!(h.apply(1, &unit_vec(8, 2)), unit_vec(8, 3));
        let mut minus_e7 = crate::exactlin::zero_vec(8);
        minus_e7[6] = int(-1);
        assert_eq!(h.apply(1, &unit_vec(8, 7)), minus_e7);
    }

    #[test]
    fn n3_shape() {
        let (alg, _) = catalog("n3").unwrap();
        assert_eq!(alg.dim(), 8);
        let c = alg.commutator_subalgebra();
        assert_eq!(
            c,
            Subspace::from_spanning(8, &[unit_vec(8, 4), unit_vec(8, 5), unit_vec(8, 6)])
        );
    }

    #[test]
    fn example3_shape() {
        let (alg, h) = catalog("example3_12dim").unwrap();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.nilpotency_step(), Some(3));
        assert!(check_quaternion(&h).is_ok());
        // spot-check the given images
        assert_eq!(h.apply(1, &unit_vec(12, 0)), unit_vec(12, 1));
        assert_eq!(h.apply(1, &unit_vec(12, 2)), unit_vec(12, 11));
        assert_eq!(h.apply(2, &unit_vec(12, 0)), unit_vec(12, 5));
        let mut minus_e10 = crate::exactlin::zero_vec(12);
        minus_e10[9] = int(-1);
        assert_eq!(h.apply(2, &unit_vec(12, 7)), minus_e10);
    }

    #[test]
    fn inconsistent_pair_table_is_reported() {
        let pairs = [(0, 1, 1), (1, 2, 1)];
        assert!(complex_structure_from_pairs(4, &pairs).is_err());
    }
}
