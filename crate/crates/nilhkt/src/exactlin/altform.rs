//! Alternating multilinear forms with sparse rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::{Matrix, Scalar};

/// Degree-k alternating form on ℚⁿ, stored sparsely: only strictly
/// increasing index tuples are kept, absent tuples read as zero, and the
/// zero form is the empty map. Indices are 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct AltForm {
    ambient: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

/// Sorts an index tuple, tracking the permutation sign. `None` on repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut idx = indices.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, sign))
}

impl AltForm {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        AltForm {
            ambient,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a form from (tuple, coefficient) terms; tuples in any order,
    /// signs normalized, repeated indices contribute nothing.
    pub fn from_terms(ambient: usize, degree: usize, terms: &[(Vec<usize>, Scalar)]) -> Self {
        let mut form = AltForm::zero(ambient, degree);
        for (tuple, coeff) in terms {
            form.add_term(tuple, coeff.clone());
        }
        form
    }

    /// The basis form e^{i1} ∧ … ∧ e^{ik}.
    pub fn basis(ambient: usize, indices: &[usize]) -> Self {
        let mut form = AltForm::zero(ambient, indices.len());
        form.add_term(indices, Scalar::from_integer(1.into()));
        form
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored (strictly increasing tuple, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.coeffs.iter().map(|(t, c)| (t.as_slice(), c))
    }

    /// Coefficient on an arbitrary index tuple, with the permutation sign.
    pub fn coeff(&self, indices: &[usize]) -> Scalar {
        assert_eq!(indices.len(), self.degree, "tuple of wrong degree");
        match sort_with_sign(indices) {
            None => Scalar::zero(),
            Some((sorted, sign)) => {
                let c = self.coeffs.get(&sorted).cloned().unwrap_or_else(Scalar::zero);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Adds `coeff` on the (possibly unsorted) tuple.
    pub fn add_term(&mut self, indices: &[usize], coeff: Scalar) {
        assert_eq!(indices.len(), self.degree, "tuple of wrong degree");
        assert!(
            indices.iter().all(|&i| i < self.ambient),
            "index out of range"
        );
        if coeff.is_zero() {
            return;
        }
        let Some((sorted, sign)) = sort_with_sign(indices) else {
            return;
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        let entry = self.coeffs.entry(sorted);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += signed;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(signed);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> AltForm {
        if c.is_zero() {
            return AltForm::zero(self.ambient, self.degree);
        }
        AltForm {
            ambient: self.ambient,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &AltForm) -> AltForm {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AltForm) -> AltForm {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn neg(&self) -> AltForm {
        self.scale(&-Scalar::from_integer(1.into()))
    }

    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &AltForm) -> AltForm {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut out = AltForm::zero(self.ambient, self.degree + other.degree);
        if self.degree + other.degree > self.ambient {
            return out;
        }
        for (ta, ca) in &self.coeffs {
            for (tb, cb) in &other.coeffs {
                if ta.iter().any(|i| tb.contains(i)) {
                    continue;
                }
                let mut merged = ta.clone();
                merged.extend_from_slice(tb);
                out.add_term(&merged, ca * cb);
            }
        }
        out
    }

    /// Evaluates on exactly `degree` vectors: sum over stored tuples of the
    /// coefficient times the determinant of the corresponding minor.
    pub fn eval(&self, vectors: &[Vec<Scalar>]) -> Scalar {
        assert_eq!(
            vectors.len(),
            self.degree,
            "evaluation needs exactly `degree` vectors"
        );
        for v in vectors {
            assert_eq!(v.len(), self.ambient, "vector of wrong dimension");
        }
        if self.degree == 0 {
            // a 0-form is the constant stored on the empty tuple
            return self
                .coeffs
                .get(&Vec::new())
                .cloned()
                .unwrap_or_else(Scalar::zero);
        }
        let mut acc = Scalar::zero();
        for (tuple, coeff) in &self.coeffs {
            let k = self.degree;
            let mut minor = Matrix::zeros(k, k);
            for (r, &i) in tuple.iter().enumerate() {
                for (c, v) in vectors.iter().enumerate() {
                    minor.set(r, c, v[i].clone());
                }
            }
            let d = minor.det();
            if !d.is_zero() {
                acc += coeff * &d;
            }
        }
        acc
    }

    /// Evaluates on basis vectors, by index.
    pub fn eval_basis(&self, indices: &[usize]) -> Scalar {
        self.coeff(indices)
    }
}

impl fmt::Debug for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltForm(deg {} on dim {}): {}", self.degree, self.ambient, self)
    }
}

impl fmt::Display for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num::{One, Signed};
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let one = Scalar::one();
        for (n, (tuple, coeff)) in self.coeffs.iter().enumerate() {
            let mag = coeff.abs();
            if n == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != one || tuple.is_empty() {
                write!(f, "{mag}·")?;
            }
            let labels: Vec<String> = tuple.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, "{}", labels.join("∧"))?;
        }
        Ok(())
    }
}
