//! Deformation families: one- and two-parameter tuples of left
//! multiplications on ℍ^l, fed through the skew-map correspondence.

use num::Signed;
use thiserror::Error;

use super::jmap::{from_jmap, JMap, JMapError};
use super::quaternion::{quaternion_mult_matrix, MulSide, QuaternionCoord};
use crate::exactlin::{int, Matrix, Scalar};
use crate::hypercx::HypercomplexStructure;
use crate::liealg::MetricLieAlgebra;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("block count l must be at least {min}, got {got}")]
    BlockCount { min: usize, got: usize },
    #[error("parameter t must be positive, got {0}")]
    NonPositive(Scalar),
    #[error("parameters must satisfy 0 < t < s < 1, got t = {t}, s = {s}")]
    BadOrdering { t: Scalar, s: Scalar },
    #[error(transparent)]
    JMap(#[from] JMapError),
}

/// Reference triple on ℍ^l: blockwise right multiplication by i, j and −k.
pub fn blockwise_right_reference(l: usize) -> HypercomplexStructure {
    let blocks = [
        quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Right),
        quaternion_mult_matrix(&QuaternionCoord::unit_j(), MulSide::Right),
        quaternion_mult_matrix(&QuaternionCoord::unit_k().neg(), MulSide::Right),
    ];
    let triple: Vec<Matrix> = blocks
        .iter()
        .map(|b| Matrix::block_diag(&vec![b; l]))
        .collect();
    HypercomplexStructure::new(triple[0].clone(), triple[1].clone(), triple[2].clone())
        .expect("square blocks")
}

/// Blockwise left multiplication by the listed quaternions (one per block).
fn left_mult_blocks(factors: &[QuaternionCoord]) -> Matrix {
    let blocks: Vec<Matrix> = factors
        .iter()
        .map(|q| quaternion_mult_matrix(q, MulSide::Left))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Matrix::block_diag(&refs)
}

/// The one-parameter tuple on ℍ^l (l ≥ 2, t > 0): left multiplication by
/// (i, …, i) and by (j, …, j, tj).
pub fn one_parameter_jmap(l: usize, t: &Scalar) -> Result<JMap, FamilyError> {
    if l < 2 {
        return Err(FamilyError::BlockCount { min: 2, got: l });
    }
    if !t.is_positive() {
        return Err(FamilyError::NonPositive(t.clone()));
    }
    let all_i = vec![QuaternionCoord::unit_i(); l];
    let mut js = vec![QuaternionCoord::unit_j(); l];
    js[l - 1] = QuaternionCoord::unit_j().scale(t);
    let maps = vec![left_mult_blocks(&all_i), left_mult_blocks(&js)];
    Ok(JMap::new(maps, blockwise_right_reference(l))?)
}

/// One-parameter deformation family member: dimension 4l + 4.
pub fn one_parameter_family(
    l: usize,
    t: &Scalar,
) -> Result<(MetricLieAlgebra, HypercomplexStructure), FamilyError> {
    let j = one_parameter_jmap(l, t)?;
    let (alg, h, _) = from_jmap(&j)?;
    Ok((alg, h))
}

/// The two-parameter tuple on ℍ^l (l ≥ 3, 0 < t < s < 1): left
/// multiplication by (i, …, i), (j, …, tj, j) and (k, …, k, sk) — the t
/// sits on the next-to-last block and the s on the last.
pub fn two_parameter_jmap(l: usize, t: &Scalar, s: &Scalar) -> Result<JMap, FamilyError> {
    if l < 3 {
        return Err(FamilyError::BlockCount { min: 3, got: l });
    }
    let one = int(1);
    if !(t.is_positive() && t < s && *s < one) {
        return Err(FamilyError::BadOrdering {
            t: t.clone(),
            s: s.clone(),
        });
    }
    let all_i = vec![QuaternionCoord::unit_i(); l];
    let mut js = vec![QuaternionCoord::unit_j(); l];
    js[l - 2] = QuaternionCoord::unit_j().scale(t);
    let mut ks = vec![QuaternionCoord::unit_k(); l];
    ks[l - 1] = QuaternionCoord::unit_k().scale(s);
    let maps = vec![
        left_mult_blocks(&all_i),
        left_mult_blocks(&js),
        left_mult_blocks(&ks),
    ];
    Ok(JMap::new(maps, blockwise_right_reference(l))?)
}

/// Two-parameter deformation family member: dimension 4l + 4.
pub fn two_parameter_family(
    l: usize,
    t: &Scalar,
    s: &Scalar,
) -> Result<(MetricLieAlgebra, HypercomplexStructure), FamilyError> {
    let j = two_parameter_jmap(l, t, s)?;
    let (alg, h, _) = from_jmap(&j)?;
    Ok((alg, h))
}
