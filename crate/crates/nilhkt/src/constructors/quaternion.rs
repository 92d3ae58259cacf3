//! Exact quaternion coordinates and their left/right multiplication
//! matrices on ℝ⁴ with basis (1, i, j, k).

use crate::exactlin::{int, Matrix, Scalar};

/// a + b·i + c·j + d·k with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionCoord {
    pub re: Scalar,
    pub im_i: Scalar,
    pub im_j: Scalar,
    pub im_k: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulSide {
    Left,
    Right,
}

impl QuaternionCoord {
    pub fn new(re: Scalar, im_i: Scalar, im_j: Scalar, im_k: Scalar) -> Self {
        QuaternionCoord { re, im_i, im_j, im_k }
    }

    pub fn one() -> Self {
        Self::new(int(1), int(0), int(0), int(0))
    }

    pub fn unit_i() -> Self {
        Self::new(int(0), int(1), int(0), int(0))
    }

    pub fn unit_j() -> Self {
        Self::new(int(0), int(0), int(1), int(0))
    }

    pub fn unit_k() -> Self {
        Self::new(int(0), int(0), int(0), int(1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(
            &self.re * c,
            &self.im_i * c,
            &self.im_j * c,
            &self.im_k * c,
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im_i, -&self.im_j, -&self.im_k)
    }

    /// Quaternion product, with i² = j² = k² = −1 and ij = k.
    pub fn mul(&self, other: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.re, &self.im_i, &self.im_j, &self.im_k);
        let (a2, b2, c2, d2) = (&other.re, &other.im_i, &other.im_j, &other.im_k);
        QuaternionCoord {
            re: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            im_i: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            im_j: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            im_k: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }

    pub fn norm_sq(&self) -> Scalar {
        &(&self.re * &self.re) + &(&self.im_i * &self.im_i)
            + &(&self.im_j * &self.im_j)
            + &(&self.im_k * &self.im_k)
    }

    pub fn as_vec(&self) -> Vec<Scalar> {
        vec![
            self.re.clone(),
            self.im_i.clone(),
            self.im_j.clone(),
            self.im_k.clone(),
        ]
    }
}

/// Matrix of x ↦ qx (left) or x ↦ xq (right) on ℝ⁴ ≅ ℍ with basis
/// (1, i, j, k).
pub fn quaternion_mult_matrix(q: &QuaternionCoord, side: MulSide) -> Matrix {
    let (a, b, c, d) = (&q.re, &q.im_i, &q.im_j, &q.im_k);
    let rows: Vec<Vec<Scalar>> = match side {
        MulSide::Left => vec![
            vec![a.clone(), -b, -c, -d],
            vec![b.clone(), a.clone(), -d, c.clone()],
            vec![c.clone(), d.clone(), a.clone(), -b],
            vec![d.clone(), -c, b.clone(), a.clone()],
        ],
        MulSide::Right => vec![
            vec![a.clone(), -b, -c, -d],
            vec![b.clone(), a.clone(), d.clone(), -c],
            vec![c.clone(), -d, a.clone(), b.clone()],
            vec![d.clone(), c.clone(), -b, a.clone()],
        ],
    };
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn identity_quaternion_gives_identity_matrix() {
        for side in [MulSide::Left, MulSide::Right] {
            assert_eq!(
                quaternion_mult_matrix(&QuaternionCoord::one(), side),
                Matrix::identity(4)
            );
        }
    }

    #[test]
    fn left_i_squares_to_minus_identity() {
        let li = quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Left);
        assert_eq!(&li * &li, -&Matrix::identity(4));
    }

    #[test]
    fn left_and_right_multiplications_commute() {
        let li = quaternion_mult_matrix(&QuaternionCoord::unit_i(), MulSide::Left);
        let rj = quaternion_mult_matrix(&QuaternionCoord::unit_j(), MulSide::Right);
        assert_eq!(&li * &rj, &rj * &li);

        let p = QuaternionCoord::new(int(1), rat(1, 2), int(-3), int(2));
        let q = QuaternionCoord::new(int(0), int(2), rat(2, 3), int(-1));
        let lp = quaternion_mult_matrix(&p, MulSide::Left);
        let rq = quaternion_mult_matrix(&q, MulSide::Right);
        assert_eq!(&lp * &rq, &rq * &lp);
    }

    #[test]
    fn multiplication_matrices_represent_the_product() {
        // L_p L_q = L_{pq} and R_p R_q = R_{qp}
        let p = QuaternionCoord::new(int(2), int(-1), rat(1, 3), int(0));
        let q = QuaternionCoord::new(int(1), int(1), int(1), int(-2));
        let lp = quaternion_mult_matrix(&p, MulSide::Left);
        let lq = quaternion_mult_matrix(&q, MulSide::Left);
        assert_eq!(&lp * &lq, quaternion_mult_matrix(&p.mul(&q), MulSide::Left));
        let rp = quaternion_mult_matrix(&p, MulSide::Right);
        let rq = quaternion_mult_matrix(&q, MulSide::Right);
        assert_eq!(&rp * &rq, quaternion_mult_matrix(&q.mul(&p), MulSide::Right));
    }

    #[test]
    fn matrix_columns_are_products_on_basis() {
        let q = QuaternionCoord::new(int(1), int(2), int(3), int(4));
        let l = quaternion_mult_matrix(&q, MulSide::Left);
        assert_eq!(l.col(0), q.as_vec());
        let qi = q.mul(&QuaternionCoord::unit_i());
        let iq = QuaternionCoord::unit_i().mul(&q);
        assert_eq!(l.col(1), qi.as_vec());
        let r = quaternion_mult_matrix(&q, MulSide::Right);
        assert_eq!(r.col(1), iq.as_vec());
    }
}
