//! Exact rational linear algebra: the arithmetic substrate for everything
//! else in the crate.
//!
//! All computation is over [`Scalar`] (an arbitrary-precision rational kept
//! in lowest terms with positive denominator); floating point appears
//! nowhere. Subspaces are stored in reduced row-echelon form so equality of
//! subspaces is structural equality of the stored data.

mod altform;
mod matrix;
mod subspace;

pub use altform::AltForm;
pub use matrix::{Matrix, SolveOutcome};
pub use subspace::Subspace;

use num::bigint::BigInt;
use num::BigRational;
use thiserror::Error;

/// Exact rational scalar, the ground field for every computation in the
/// crate. Stored in lowest terms with positive denominator; all field
/// operations are exact.
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a scalar. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` into a scalar.
pub fn parse_rational(s: &str) -> Result<Scalar, ExactLinError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ExactLinError::BadRational(s.to_string()));
    }
    t.parse::<Scalar>()
        .map_err(|_| ExactLinError::BadRational(s.to_string()))
}

/// Formats a scalar as `"p/q"` (or `"p"` when the denominator is one).
pub fn format_rational(x: &Scalar) -> String {
    x.to_string()
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![int(0); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = int(1);
    v
}

pub fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale_vec(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| c * a).collect()
}

pub fn neg_vec(x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| -a).collect()
}

pub fn is_zero_vec(x: &[Scalar]) -> bool {
    use num::Zero;
    x.iter().all(|a| a.is_zero())
}

/// Plain dot product (no metric weighting).
pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    use num::Zero;
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Scalar::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += a * b;
        }
    }
    acc
}

/// Exact square root of a non-negative rational, if it exists.
pub fn exact_sqrt(x: &Scalar) -> Option<Scalar> {
    use num::{Signed, Zero};
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let num_root = exact_int_sqrt(x.numer())?;
    let den_root = exact_int_sqrt(x.denom())?;
    Some(Scalar::new(num_root, den_root))
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3/2", "-1", "0", "7", "-5/3"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn lowest_terms_normalization() {
        let x = rat(2, 4);
        assert_eq!(x, rat(1, 2));
        let y = rat(1, -2);
        assert_eq!(format_rational(&y), "-1/2");
    }

    #[test]
    fn exact_sqrt_cases() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&int(0)), Some(int(0)));
        assert_eq!(exact_sqrt(&int(2)), None);
        assert_eq!(exact_sqrt(&int(-1)), None);
    }

    proptest! {
        // x * (1/x) = 1 exactly for every nonzero scalar.
        #[test]
        fn multiplicative_inverse_is_exact(n in -999i64..999, d in 1i64..999) {
            prop_assume!(n != 0);
            let x = rat(n, d);
            let inv = Scalar::one() / &x;
            prop_assert_eq!(x * inv, Scalar::one());
        }

        #[test]
        fn field_ops_never_round(a in -99i64..99, b in 1i64..99, c in -99i64..99, d in 1i64..99) {
            let x = rat(a, b);
            let y = rat(c, d);
            // (x + y) - y == x and (x * y) / y == x when y != 0.
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }
    }
}
