//! Rational subspaces in canonical (reduced row-echelon) form.

use std::fmt;

use super::{Matrix, Scalar};

/// A linear subspace of ℚⁿ. The stored basis is the reduced row-echelon
/// form of any spanning set, so two equal subspaces compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(
            ambient,
            &(0..ambient)
                .map(|i| super::unit_vec(ambient, i))
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector of wrong dimension");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (red, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = (0..pivots.len()).map(|r| red.row(r)).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical (RREF) basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut spanning: Vec<Vec<Scalar>> = self.basis.clone();
        spanning.push(v.to_vec());
        Subspace::from_spanning(self.ambient, &spanning).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, &all)
    }

    /// Image under a linear map (applied to every basis vector).
    pub fn image(&self, map: &Matrix) -> Subspace {
        let imgs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::from_spanning(map.rows(), &imgs)
    }

    /// Orthogonal complement with respect to the inner product `g`:
    /// all w with g(b, w) = 0 for every stored basis vector b.
    pub fn orthogonal_complement(&self, g: &Matrix) -> Subspace {
        assert_eq!(g.rows(), self.ambient);
        assert_eq!(g.cols(), self.ambient);
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        let rows: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| g.mul_vec(b)) // row bᵀG
            .collect();
        let kernel = Matrix::from_rows(rows).nullspace();
        Subspace::from_spanning(self.ambient, &kernel)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}) ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(self.basis.iter().map(|v| {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat, unit_vec};
    use super::*;

    #[test]
    fn canonical_representation_is_order_independent() {
        let a = Subspace::from_spanning(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(2), int(0)]]);
        let b = Subspace::from_spanning(3, &[vec![int(0), int(1), int(0)], vec![int(3), int(0), int(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn contains_and_sum() {
        let s = Subspace::from_spanning(3, &[vec![int(1), int(2), int(0)]]);
        assert!(s.contains(&[rat(1, 2), int(1), int(0)]));
        assert!(!s.contains(&[int(1), int(0), int(0)]));
        let t = Subspace::from_spanning(3, &[unit_vec(3, 2)]);
        assert_eq!(s.sum(&t).dim(), 2);
    }

    #[test]
    fn orthogonal_complement_identity_metric() {
        let g = Matrix::identity(3);
        let s = Subspace::from_spanning(3, &[unit_vec(3, 0)]);
        let c = s.orthogonal_complement(&g);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&unit_vec(3, 1)));
        assert!(c.contains(&unit_vec(3, 2)));
        assert_eq!(Subspace::zero(3).orthogonal_complement(&g), Subspace::full(3));
    }

    #[test]
    fn orthogonal_complement_weighted_metric() {
        // g = diag(2,1): complement of span{e1 + e2} is spanned by (1, -2).
        let g = Matrix::from_i64(&[&[2, 0], &[0, 1]]);
        let s = Subspace::from_spanning(2, &[vec![int(1), int(1)]]);
        let c = s.orthogonal_complement(&g);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[int(1), int(-2)]));
    }
}
