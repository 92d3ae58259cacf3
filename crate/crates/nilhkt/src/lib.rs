//! Exact-arithmetic toolkit for hyperkähler-with-torsion (HKT) structures
//! on metric nilpotent Lie algebras.
//!
//! Everything is computed over the rationals with arbitrary precision, so
//! every identity check in the library is decisive: a tensor either vanishes
//! exactly or it does not. The main capabilities are
//!
//! * [`exactlin`] — rational scalars, dense matrices, canonical subspaces and
//!   alternating forms;
//! * [`liealg`] — metric Lie algebras, nilpotency structure and the
//!   differential/codifferential on invariant forms;
//! * [`hypercx`] — hypercomplex triples: quaternion relations, integrability,
//!   compatibility, abelian-ness and the HKT identity checks;
//! * [`bismut`] — the Bismut connection with its torsion 3-form, curvature,
//!   Ricci form, Lee forms and parallelism diagnostics;
//! * [`constructors`] — the catalog of 8- and 12-dimensional examples, the
//!   correspondence between 2-step algebras and commuting skew maps, and the
//!   one- and two-parameter deformation families;
//! * [`invariants`] — spectral non-isometry certificates and the rational
//!   structure-constant witness;
//! * [`expcoords`] — exponential coordinates on simply connected 2-step
//!   groups: group law, invariant coframe and pointwise metric;
//! * [`cli`] — the JSON algebra file format, report generation and the
//!   command-line driver.
//!
//! See the crate examples (`cargo run --example <name>`) for one runnable
//! walkthrough per capability.

pub mod bismut;
pub mod cli;
pub mod constructors;
pub mod exactlin;
pub mod expcoords;
pub mod hypercx;
pub mod invariants;
pub mod liealg;

pub use exactlin::{int, rat, AltForm, Matrix, Scalar, Subspace};
pub use liealg::MetricLieAlgebra;
