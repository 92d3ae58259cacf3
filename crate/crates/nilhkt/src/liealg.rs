//! Metric Lie algebras: validation, nilpotency structure, center, and the
//! differential/codifferential calculus on invariant forms.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num::Zero;
use thiserror::Error;

use crate::exactlin::{self, AltForm, Matrix, Scalar, SolveOutcome, Subspace};

#[derive(Debug, Error)]
pub enum LieAlgError {
    #[error("bracket index ({i}, {j}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("bracket indices must satisfy i < j, got ({i}, {j})")]
    IndicesNotIncreasing { i: usize, j: usize },
    #[error("duplicate bracket entry for ({i}, {j})")]
    DuplicateBracket { i: usize, j: usize },
    #[error("metric must be a {dim}x{dim} matrix")]
    MetricShape { dim: usize },
    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),
    #[error("expected {dim} labels, got {got}")]
    LabelCount { dim: usize, got: usize },
}

/// Metric Lie algebra over the rationals. Brackets are stored for i < j
/// only; antisymmetry is a storage convention, Jacobi and positive
/// definiteness are checked by [`MetricLieAlgebra::new`].
#[derive(Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    dim: usize,
    /// (i, j) with i < j maps to the sparse coefficient vector of [e_i, e_j].
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
    metric: Matrix,
    labels: Vec<String>,
}

/// Diagnostic output of the Jacobi/positivity gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Every basis triple (i, j, k), i < j < k, on which the Jacobi identity
    /// fails.
    pub jacobi_violations: Vec<(usize, usize, usize)>,
    pub metric_symmetric: bool,
    pub metric_positive_definite: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.jacobi_violations.is_empty() && self.metric_symmetric && self.metric_positive_definite
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid: Jacobi holds, metric symmetric positive definite");
        }
        if !self.jacobi_violations.is_empty() {
            writeln!(f, "Jacobi identity violated on basis triples:")?;
            for (i, j, k) in &self.jacobi_violations {
                writeln!(f, "  (e{}, e{}, e{})", i + 1, j + 1, k + 1)?;
            }
        }
        if !self.metric_symmetric {
            writeln!(f, "metric is not symmetric")?;
        }
        if !self.metric_positive_definite {
            writeln!(f, "metric is not positive definite")?;
        }
        Ok(())
    }
}

/// Lower central series together with the nilpotency step.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    /// The descending chain, starting with the whole algebra and ending with
    /// the first repeated or zero term.
    pub subspaces: Vec<Subspace>,
    /// Minimal s with the s-th term zero; `None` when the series stabilizes
    /// at a nonzero subspace (not nilpotent).
    pub step: Option<usize>,
}

impl MetricLieAlgebra {
    /// Validating constructor: checks index sanity, Jacobi on all basis
    /// triples, and exact positive definiteness of the metric.
    pub fn new(
        dim: usize,
        brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
        metric: Option<Matrix>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, LieAlgError> {
        let alg = Self::new_unchecked(dim, brackets, metric, labels)?;
        let report = alg.validate();
        if !report.is_valid() {
            return Err(LieAlgError::Invalid(report));
        }
        Ok(alg)
    }

    /// Structural constructor that skips the Jacobi/positivity gate, so
    /// diagnostic workflows can inspect invalid inputs via [`Self::validate`].
    pub fn new_unchecked(
        dim: usize,
        brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
        metric: Option<Matrix>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, LieAlgError> {
        let metric = metric.unwrap_or_else(|| Matrix::identity(dim));
        if metric.rows() != dim || metric.cols() != dim {
            return Err(LieAlgError::MetricShape { dim });
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(LieAlgError::LabelCount { dim, got: l.len() });
                }
                l
            }
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
        };
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, targets) in brackets {
            if i >= dim || j >= dim || targets.iter().any(|(k, _)| *k >= dim) {
                return Err(LieAlgError::IndexOutOfRange { i, j, dim });
            }
            if i >= j {
                return Err(LieAlgError::IndicesNotIncreasing { i, j });
            }
            if table.contains_key(&(i, j)) {
                return Err(LieAlgError::DuplicateBracket { i, j });
            }
            let mut sparse = BTreeMap::new();
            for (k, c) in targets {
                if !c.is_zero() {
                    *sparse.entry(k).or_insert_with(Scalar::zero) += c;
                }
            }
            sparse.retain(|_, c| !c.is_zero());
            if !sparse.is_empty() {
                table.insert((i, j), sparse);
            }
        }
        Ok(MetricLieAlgebra {
            dim,
            brackets: table,
            metric,
            labels,
        })
    }

    pub fn abelian(dim: usize, metric: Option<Matrix>) -> Self {
        Self::new_unchecked(dim, Vec::new(), metric, None).expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    /// Same brackets with a different inner product (unchecked for p.d.).
    pub fn with_metric(&self, metric: Matrix) -> Result<Self, LieAlgError> {
        let mut alg = self.clone();
        if metric.rows() != self.dim || metric.cols() != self.dim {
            return Err(LieAlgError::MetricShape { dim: self.dim });
        }
        alg.metric = metric;
        Ok(alg)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian_algebra(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Stored bracket entries as (i, j, targets) triples (i < j).
    pub fn bracket_entries(&self) -> Vec<(usize, usize, Vec<(usize, Scalar)>)> {
        self.brackets
            .iter()
            .map(|(&(i, j), t)| (i, j, t.iter().map(|(&k, c)| (k, c.clone())).collect()))
            .collect()
    }

    /// [e_i, e_j] as a sparse coefficient list, any index order.
    pub fn bracket_basis_sparse(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => Vec::new(),
            Some(t) => t
                .iter()
                .map(|(&k, c)| (k, if flip { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// [e_i, e_j] as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = exactlin::zero_vec(self.dim);
        for (k, c) in self.bracket_basis_sparse(i, j) {
            v[k] = c;
        }
        v
    }

    /// [x, y] extended bilinearly.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = exactlin::zero_vec(self.dim);
        for (&(i, j), targets) in &self.brackets {
            // coefficient of [e_i, e_j] in [x, y]: x_i y_j − x_j y_i
            let pos = (!x[i].is_zero() && !y[j].is_zero()).then(|| &x[i] * &y[j]);
            let neg = (!x[j].is_zero() && !y[i].is_zero()).then(|| &x[j] * &y[i]);
            let c = match (pos, neg) {
                (None, None) => continue,
                (Some(p), None) => p,
                (None, Some(n)) => -n,
                (Some(p), Some(n)) => p - n,
            };
            if c.is_zero() {
                continue;
            }
            for (&k, v) in targets {
                out[k] += &c * v;
            }
        }
        out
    }

    /// Inner product g(x, y).
    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.metric.bilinear(x, y)
    }

    /// Matrix of ad_x : y ↦ [x, y].
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.bracket(x, &exactlin::unit_vec(self.dim, j)))
            .collect();
        Matrix::from_cols(cols)
    }

    /// Jacobi check over all basis triples plus the metric gates; the report
    /// lists every violated triple.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, j, k) in (0..self.dim).tuple_combinations() {
            if !exactlin::is_zero_vec(&self.jacobi_defect(i, j, k)) {
                violations.push((i, j, k));
            }
        }
        ValidationReport {
            jacobi_violations: violations,
            metric_symmetric: self.metric.is_symmetric(),
            metric_positive_definite: self.metric.is_positive_definite(),
        }
    }

    /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut acc = exactlin::zero_vec(self.dim);
        for &(a, b, c) in &[(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coeff) in self.bracket_basis_sparse(a, b) {
                for (t, inner) in self.bracket_basis_sparse(m, c) {
                    acc[t] += &coeff * &inner;
                }
            }
        }
        acc
    }

    /// Descending chain of ideals obtained by repeatedly bracketing with the
    /// whole algebra, until it hits zero or stabilizes.
    pub fn lower_central_series(&self) -> CentralSeries {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let current = series.last().unwrap();
            let mut spanning = Vec::new();
            for b in current.basis() {
                for j in 0..self.dim {
                    let img = self.bracket(b, &exactlin::unit_vec(self.dim, j));
                    if !exactlin::is_zero_vec(&img) {
                        spanning.push(img);
                    }
                }
            }
            let next = Subspace::from_spanning(self.dim, &spanning);
            if next.is_zero() {
                let step = series.len();
                series.push(next);
                return CentralSeries {
                    subspaces: series,
                    step: Some(step),
                };
            }
            if &next == current {
                series.push(next);
                return CentralSeries {
                    subspaces: series,
                    step: None,
                };
            }
            series.push(next);
        }
    }

    pub fn nilpotency_step(&self) -> Option<usize> {
        self.lower_central_series().step
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_step().is_some()
    }

    /// Nilpotent of step at most two (abelian counts).
    pub fn is_at_most_two_step(&self) -> bool {
        matches!(self.nilpotency_step(), Some(s) if s <= 2)
    }

    /// The commutator subalgebra [𝔤, 𝔤].
    pub fn commutator_subalgebra(&self) -> Subspace {
        let spanning: Vec<Vec<Scalar>> = self
            .brackets
            .keys()
            .map(|&(i, j)| self.bracket_basis(i, j))
            .collect();
        Subspace::from_spanning(self.dim, &spanning)
    }

    /// Exact kernel of x ↦ ad_x.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        let mut rows = Vec::new();
        for j in 0..self.dim {
            let adj = self.ad(&exactlin::unit_vec(self.dim, j));
            // x central iff [e_j, x] = 0 for all j
            for r in 0..self.dim {
                rows.push(adj.row(r));
            }
        }
        let kernel = Matrix::from_rows(rows).nullspace();
        Subspace::from_spanning(self.dim, &kernel)
    }

    /// Differential on invariant forms, with the convention
    ///
    /// (dα)(X_0,…,X_k) = Σ_{i<j} (−1)^{i+j+1} α([X_i,X_j], X_0,…,î,…,ĵ,…,X_k),
    ///
    /// so that on 1-forms dα(X, Y) = α([X, Y]). The sign is chosen so the
    /// torsion 4-form identities for abelian hyperhermitian structures hold
    /// literally (see the `bismut` module); d∘d = 0 is equivalent to Jacobi
    /// under either orientation.
    pub fn differential(&self, a: &AltForm) -> AltForm {
        assert_eq!(a.ambient_dim(), self.dim, "form on the wrong algebra");
        let k = a.degree();
        let out_degree = k + 1;
        let mut out = AltForm::zero(self.dim, out_degree);
        if out_degree > self.dim {
            return out;
        }
        let mut rest: Vec<usize> = Vec::with_capacity(out_degree);
        let mut args: Vec<usize> = Vec::with_capacity(k);
        for tuple in (0..self.dim).combinations(out_degree) {
            let mut val = Scalar::zero();
            for i in 0..out_degree {
                for j in (i + 1)..out_degree {
                    // brackets are stored for increasing index pairs only
                    let Some(targets) = self.brackets.get(&(tuple[i], tuple[j])) else {
                        continue;
                    };
                    rest.clear();
                    rest.extend(
                        (0..out_degree).filter(|&r| r != i && r != j).map(|r| tuple[r]),
                    );
                    let mut term = Scalar::zero();
                    for (&m, c) in targets {
                        args.clear();
                        args.push(m);
                        args.extend_from_slice(&rest);
                        let coeff = a.coeff(&args);
                        if !coeff.is_zero() {
                            term += c * &coeff;
                        }
                    }
                    if !term.is_zero() {
                        // (−1)^{i+j+1}
                        if (i + j) % 2 == 0 {
                            val -= term;
                        } else {
                            val += term;
                        }
                    }
                }
            }
            if !val.is_zero() {
                out.add_term(&tuple, val);
            }
        }
        out
    }

    /// Codifferential: the adjoint of [`Self::differential`] with respect to
    /// the inner products induced by the metric on the exterior powers,
    /// ⟨δa, b⟩ = ⟨a, db⟩ for every b of degree k−1.
    pub fn codifferential(&self, a: &AltForm) -> AltForm {
        assert_eq!(a.ambient_dim(), self.dim, "form on the wrong algebra");
        let k = a.degree();
        assert!(k >= 1, "codifferential needs degree >= 1");
        let lower: Vec<Vec<usize>> = (0..self.dim).combinations(k - 1).collect();
        let upper: Vec<Vec<usize>> = (0..self.dim).combinations(k).collect();
        let upper_pos: BTreeMap<&[usize], usize> = upper
            .iter()
            .enumerate()
            .map(|(p, t)| (t.as_slice(), p))
            .collect();

        // matrix of d: Λ^{k−1} → Λ^k over the sorted-tuple bases
        let mut d_mat = Matrix::zeros(upper.len(), lower.len());
        for (cidx, t) in lower.iter().enumerate() {
            let image = self.differential(&AltForm::basis(self.dim, t));
            for (tuple, coeff) in image.terms() {
                d_mat.set(upper_pos[tuple], cidx, coeff.clone());
            }
        }
        let a_vec: Vec<Scalar> = {
            let mut v = vec![Scalar::zero(); upper.len()];
            for (tuple, coeff) in a.terms() {
                v[upper_pos[tuple]] = coeff.clone();
            }
            v
        };

        let out_vec = if self.metric == Matrix::identity(self.dim) {
            d_mat.transpose().mul_vec(&a_vec)
        } else {
            // Solve G_{k−1} x = Dᵀ G_k a with the Gram matrices of the
            // induced inner products on the exterior powers.
            let g_inv = self
                .metric
                .inverse()
                .expect("positive definite metric is invertible");
            let gram_upper = gram_matrix(&g_inv, &upper);
            let gram_lower = gram_matrix(&g_inv, &lower);
            let rhs = d_mat.transpose().mul_vec(&gram_upper.mul_vec(&a_vec));
            match gram_lower.solve(&rhs).expect("square system") {
                SolveOutcome::Solution(x) => x,
                SolveOutcome::Inconsistent => unreachable!("Gram matrix is invertible"),
            }
        };

        let mut out = AltForm::zero(self.dim, k - 1);
        for (t, c) in lower.iter().zip(out_vec) {
            if !c.is_zero() {
                out.add_term(t, c);
            }
        }
        out
    }

    /// ⟨a, b⟩ on Λ^k, induced by the metric.
    pub fn form_inner(&self, a: &AltForm, b: &AltForm) -> Scalar {
        assert_eq!(a.degree(), b.degree());
        assert_eq!(a.ambient_dim(), self.dim);
        assert_eq!(b.ambient_dim(), self.dim);
        let g_inv = self.metric.inverse().expect("invertible metric");
        let mut acc = Scalar::zero();
        for (ta, ca) in a.terms() {
            for (tb, cb) in b.terms() {
                let d = tuple_gram_det(&g_inv, ta, tb);
                if !d.is_zero() {
                    acc += ca * cb * d;
                }
            }
        }
        acc
    }
}

fn tuple_gram_det(g_inv: &Matrix, ta: &[usize], tb: &[usize]) -> Scalar {
    if ta.is_empty() {
        return num::One::one();
    }
    let k = ta.len();
    let mut minor = Matrix::zeros(k, k);
    for (r, &i) in ta.iter().enumerate() {
        for (c, &j) in tb.iter().enumerate() {
            minor.set(r, c, g_inv.get(i, j).clone());
        }
    }
    minor.det()
}

fn gram_matrix(g_inv: &Matrix, tuples: &[Vec<usize>]) -> Matrix {
    let n = tuples.len();
    let mut gram = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..=r {
            let d = tuple_gram_det(g_inv, &tuples[r], &tuples[c]);
            gram.set(r, c, d.clone());
            if r != c {
                gram.set(c, r, d);
            }
        }
    }
    gram
}

impl fmt::Debug for MetricLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MetricLieAlgebra(dim {})", self.dim)?;
        for (&(i, j), t) in &self.brackets {
            let terms: Vec<String> = t
                .iter()
                .map(|(&k, c)| {
                    use num::One;
                    if c.is_one() {
                        self.labels[k].clone()
                    } else {
                        format!("{c}·{}", self.labels[k])
                    }
                })
                .collect();
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                terms.join(" + ")
            )?;
        }
        Ok(())
    }
}
