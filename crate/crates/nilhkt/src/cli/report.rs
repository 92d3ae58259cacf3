//! Structured analysis report: every check in the crate, run over one
//! algebra file, with exact rational values serialized as strings. The
//! machine-readable form round-trips: parsing an emitted report reproduces
//! identical values.

use serde::{Deserialize, Serialize};

use crate::bismut::{
    self, bismut_connection, central_dual_forms, classify_torsion, covariant_derivative,
    curvature_checked, first_nonparallel_slot, is_parallel, lee_forms, ricci_checked,
    torsion_form, verify_axioms,
};
use crate::exactlin::format_rational;
use crate::hypercx::{abelianness_certificate, check_hkt, HypercomplexStructure};
use crate::liealg::MetricLieAlgebra;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub dim: usize,
    pub validation: ValidationSection,
    pub nilpotency: NilpotencySection,
    /// Canonical basis of the center, rows of rational strings.
    pub center_basis: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypercomplex: Option<HypercomplexSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSection {
    pub valid: bool,
    /// 1-based basis triples violating the Jacobi identity.
    pub jacobi_violations: Vec<[usize; 3]>,
    pub metric_symmetric: bool,
    pub metric_positive_definite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencySection {
    pub nilpotent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    /// Dimensions along the lower central series.
    pub series_dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypercomplexSection {
    pub quaternion: bool,
    pub compatible: bool,
    pub integrable: [bool; 3],
    pub abelian: bool,
    pub hkt: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometrySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometrySection {
    pub torsion_class: String,
    /// Nonzero Christoffel entries ∇_{e_i} e_j = Σ Γ^k_{ij} e_k, 1-based.
    pub connection: Vec<ConnectionEntry>,
    pub torsion_form: Vec<FormTerm>,
    pub torsion_differential: Vec<FormTerm>,
    pub torsion_coclosed: bool,
    pub ricci: Vec<Vec<String>>,
    pub ricci_charpoly: Vec<String>,
    pub lee_forms: [Vec<String>; 3],
    pub torsion_parallel: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_nonparallel_slot: Option<SlotEntry>,
    pub central_duals_parallel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTerm {
    /// 1-based strictly increasing index tuple.
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotEntry {
    /// 1-based direction of the covariant derivative.
    pub direction: usize,
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("geometry pipeline failed: {0}")]
    Geometry(#[from] bismut::BismutError),
}

fn form_terms(form: &crate::exactlin::AltForm) -> Vec<FormTerm> {
    form.terms()
        .map(|(tuple, coeff)| FormTerm {
            indices: tuple.iter().map(|i| i + 1).collect(),
            coeff: format_rational(coeff),
        })
        .collect()
}

/// Runs every applicable check and assembles the report. Geometry is only
/// attempted when the full HKT verdict passes.
pub fn build_report(
    alg: &MetricLieAlgebra,
    h: Option<&HypercomplexStructure>,
) -> Result<Report, ReportError> {
    let validation = alg.validate();
    let series = alg.lower_central_series();
    let center = alg.center();

    let validation_section = ValidationSection {
        valid: validation.is_valid(),
        jacobi_violations: validation
            .jacobi_violations
            .iter()
            .map(|&(i, j, k)| [i + 1, j + 1, k + 1])
            .collect(),
        metric_symmetric: validation.metric_symmetric,
        metric_positive_definite: validation.metric_positive_definite,
    };
    let nilpotency = NilpotencySection {
        nilpotent: series.step.is_some(),
        step: series.step,
        series_dims: series.subspaces.iter().map(|s| s.dim()).collect(),
    };
    let center_basis = center
        .basis()
        .iter()
        .map(|v| v.iter().map(format_rational).collect())
        .collect();

    let hypercomplex = match h {
        None => None,
        Some(h) => {
            let verdict = check_hkt(alg, h);
            let geometry = if verdict.hkt {
                Some(build_geometry(alg, h)?)
            } else {
                None
            };
            let certificate = if verdict.hkt && alg.is_at_most_two_step() {
                abelianness_certificate(alg, h).ok().map(|cert| {
                    cert.steps
                        .iter()
                        .map(|s| CertificateEntry {
                            name: s.name.to_string(),
                            passed: s.passed,
                        })
                        .collect()
                })
            } else {
                None
            };
            Some(HypercomplexSection {
                quaternion: verdict.quaternion,
                compatible: verdict.compatible,
                integrable: verdict.integrable,
                abelian: verdict.abelian,
                hkt: verdict.hkt,
                witness: verdict.witness.map(|w| w.to_string()),
                geometry,
                certificate,
            })
        }
    };

    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        dim: alg.dim(),
        validation: validation_section,
        nilpotency,
        center_basis,
        hypercomplex,
    })
}

fn build_geometry(
    alg: &MetricLieAlgebra,
    h: &HypercomplexStructure,
) -> Result<GeometrySection, ReportError> {
    let conn = bismut_connection(alg, h)?;
    debug_assert!(verify_axioms(alg, h, &conn).all_pass());
    let c = torsion_form(alg, h, &conn)?;
    let class = classify_torsion(alg, h, &c)?;
    let dc = alg.differential(&c);
    let coclosed = alg.codifferential(&c).is_zero();
    let curv = curvature_checked(alg, h, &conn)?;
    let ricci = ricci_checked(alg, h, &curv)?;
    let thetas = lee_forms(alg, h, &c)?;
    let grads = covariant_derivative(&conn, &c);
    let parallel = is_parallel(&grads);
    let slot = first_nonparallel_slot(&grads).map(|(dir, tuple, value)| SlotEntry {
        direction: dir + 1,
        indices: tuple.iter().map(|i| i + 1).collect(),
        value: format_rational(&value),
    });
    let duals_parallel = central_dual_forms(alg)
        .iter()
        .all(|dual| is_parallel(&covariant_derivative(&conn, dual)));

    let n = alg.dim();
    Ok(GeometrySection {
        torsion_class: class.to_string(),
        connection: conn
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, k, v)| ConnectionEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                value: format_rational(&v),
            })
            .collect(),
        torsion_form: form_terms(&c),
        torsion_differential: form_terms(&dc),
        torsion_coclosed: coclosed,
        ricci: (0..n)
            .map(|r| (0..n).map(|cc| format_rational(ricci.rho.get(r, cc))).collect())
            .collect(),
        ricci_charpoly: ricci
            .rho
            .char_poly()
            .expect("square")
            .iter()
            .map(format_rational)
            .collect(),
        lee_forms: [
            thetas[0].iter().map(format_rational).collect(),
            thetas[1].iter().map(format_rational).collect(),
            thetas[2].iter().map(format_rational).collect(),
        ],
        torsion_parallel: parallel,
        first_nonparallel_slot: slot,
        central_duals_parallel: duals_parallel,
    })
}

/// Deterministic machine-readable rendering.
pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

pub fn parse_report(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

/// Human-readable rendering of the same data.
pub fn render_human(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "dimension: {}", report.dim);
    let _ = writeln!(
        out,
        "validation: {}",
        if report.validation.valid { "valid" } else { "INVALID" }
    );
    for t in &report.validation.jacobi_violations {
        let _ = writeln!(out, "  Jacobi violated on (e{}, e{}, e{})", t[0], t[1], t[2]);
    }
    match report.nilpotency.step {
        Some(s) => {
            let _ = writeln!(
                out,
                "nilpotency: {s}-step (series dims {:?})",
                report.nilpotency.series_dims
            );
        }
        None => {
            let _ = writeln!(out, "nilpotency: not nilpotent");
        }
    }
    let _ = writeln!(out, "center: dimension {}", report.center_basis.len());
    if let Some(hx) = &report.hypercomplex {
        let _ = writeln!(
            out,
            "hypercomplex: quaternion {}, compatible {}, integrable {:?}, abelian {}, HKT {}",
            yes_no(hx.quaternion),
            yes_no(hx.compatible),
            hx.integrable,
            yes_no(hx.abelian),
            yes_no(hx.hkt)
        );
        if let Some(w) = &hx.witness {
            let _ = writeln!(out, "  witness: {w}");
        }
        if let Some(geo) = &hx.geometry {
            let _ = writeln!(out, "torsion class: {}", geo.torsion_class);
            let _ = writeln!(out, "connection (nonzero Γ):");
            for e in &geo.connection {
                let _ = writeln!(out, "  ∇_e{} e{} += {}·e{}", e.i, e.j, e.value, e.k);
            }
            let _ = writeln!(out, "torsion form: {}", render_terms(&geo.torsion_form));
            let _ = writeln!(
                out,
                "d(torsion): {}",
                render_terms(&geo.torsion_differential)
            );
            let _ = writeln!(out, "torsion co-closed: {}", yes_no(geo.torsion_coclosed));
            let _ = writeln!(out, "Ricci char poly: [{}]", geo.ricci_charpoly.join(", "));
            let zero_lee = geo.lee_forms.iter().all(|theta| {
                theta.iter().all(|v| v == "0")
            });
            let _ = writeln!(
                out,
                "Lee forms: {}",
                if zero_lee { "all zero" } else { "nonzero" }
            );
            let _ = writeln!(out, "torsion parallel: {}", yes_no(geo.torsion_parallel));
            if let Some(slot) = &geo.first_nonparallel_slot {
                let idx: Vec<String> = slot.indices.iter().map(|i| format!("e{i}")).collect();
                let _ = writeln!(
                    out,
                    "  first nonzero slot: (∇_e{} c)({}) = {}",
                    slot.direction,
                    idx.join(", "),
                    slot.value
                );
            }
            let _ = writeln!(
                out,
                "central dual 1-forms parallel: {}",
                yes_no(geo.central_duals_parallel)
            );
        }
        if let Some(cert) = &hx.certificate {
            let _ = writeln!(out, "abelianness certificate:");
            for step in cert {
                let _ = writeln!(
                    out,
                    "  [{}] {}",
                    if step.passed { "ok" } else { "FAIL" },
                    step.name
                );
            }
        }
    }
    out
}

fn render_terms(terms: &[FormTerm]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| {
            let labels: Vec<String> = t.indices.iter().map(|i| format!("e{i}")).collect();
            format!("{}·{}", t.coeff, labels.join("∧"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::catalog;

    #[test]
    fn report_roundtrip_is_identical() {
        for name in ["n1", "n3", "example3_12dim"] {
            let (alg, h) = catalog(name).unwrap();
            let report = build_report(&alg, Some(&h)).unwrap();
            let text = render_json(&report);
            let parsed = parse_report(&text).unwrap();
            assert_eq!(parsed, report, "{name}");
            // determinism: re-render byte-identically
            assert_eq!(render_json(&parsed), text, "{name}");
        }
    }

    #[test]
    fn report_contents_for_first_catalog_algebra() {
        let (alg, h) = catalog("n1").unwrap();
        let report = build_report(&alg, Some(&h)).unwrap();
        assert!(report.validation.valid);
        assert_eq!(report.nilpotency.step, Some(2));
        let hx = report.hypercomplex.as_ref().unwrap();
        assert!(hx.hkt && hx.abelian);
        let geo = hx.geometry.as_ref().unwrap();
        assert_eq!(geo.torsion_class, "weak");
        assert!(geo.torsion_parallel);
        assert!(geo.torsion_coclosed);
        assert!(geo.central_duals_parallel);
        assert!(hx.certificate.is_some());
        let human = render_human(&report);
        assert!(human.contains("torsion class: weak"));
    }

    #[test]
    fn report_without_triple_has_no_hypercomplex_section() {
        let (alg, _) = catalog("n2").unwrap();
        let report = build_report(&alg, None).unwrap();
        assert!(report.hypercomplex.is_none());
    }
}
