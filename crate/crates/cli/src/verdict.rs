//! Report structures for the three commands, in both machine (JSON) and
//! human renderings. Machine output is deterministic: plain structs with
//! fixed field order, scalars as canonical strings, no maps, no timestamps.

use serde::Serialize;
use tdsys::diameter2::Diameter2Params;
use tdsys::quotient::{QuotientReport, TdVerdict};
use tdsys::tdcore::{ParameterArray, ShapeReport};
use tdsys::{FieldScalar, Matrix, MtdSystem, Subspace};

use crate::document::{FieldDescriptor, SystemDocument};

/// The checking depth: the mock axioms alone, or the mock axioms plus
/// irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Mtd,
    Td,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Mtd => "mtd",
            Level::Td => "td",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

pub fn render_strings(list: &[FieldScalar]) -> Vec<String> {
    list.iter().map(FieldScalar::to_string).collect()
}

pub fn render_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(FieldScalar::to_string).collect())
        .collect()
}

pub fn render_rows(rows: &[Vec<FieldScalar>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| render_strings(r)).collect()
}

pub fn render_subspace(s: &Subspace) -> Vec<Vec<String>> {
    render_rows(s.basis())
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeViolationDoc {
    /// false: a product E_i A* E_j; true: a product E*_i A E*_j.
    pub starred: bool,
    pub i: usize,
    pub j: usize,
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TdDoc {
    /// None when irreducibility could not be decided.
    pub is_td: Option<bool>,
    /// Why the decision was blocked (non-sharp system).
    pub blocked_by: Option<String>,
    /// Which module obstruction witnessed reducibility.
    pub obstruction: Option<String>,
    /// Basis of the witness subspace, empty unless reducible.
    pub witness_basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckDetails {
    pub field: FieldDescriptor,
    pub dimension: usize,
    pub diameter: usize,
    pub shape_violations: Vec<ShapeViolationDoc>,
    pub corner_0_nonzero: bool,
    pub corner_d_nonzero: bool,
    pub sharp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub td: Option<TdDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub path: String,
    pub level: &'static str,
    pub passed: bool,
    /// Set when the document parsed but the operators failed eigenvalue
    /// verification; no further checks run in that case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assembly_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<CheckDetails>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRunReport {
    pub reports: Vec<CheckReport>,
    pub all_passed: bool,
}

fn shape_docs(report: &ShapeReport) -> Vec<ShapeViolationDoc> {
    report
        .violations
        .iter()
        .map(|v| ShapeViolationDoc {
            starred: v.starred,
            i: v.i,
            j: v.j,
            row: v.witness.0,
            col: v.witness.1,
            value: v.witness.2.to_string(),
        })
        .collect()
}

fn td_doc(sys: &MtdSystem) -> TdDoc {
    match tdsys::quotient::is_td(sys) {
        Ok(TdVerdict::Td) => TdDoc {
            is_td: Some(true),
            blocked_by: None,
            obstruction: None,
            witness_basis: Vec::new(),
        },
        Ok(TdVerdict::NotTd {
            obstruction,
            witness,
        }) => TdDoc {
            is_td: Some(false),
            blocked_by: None,
            obstruction: Some(obstruction.to_string()),
            witness_basis: render_subspace(&witness),
        },
        Err(e) => TdDoc {
            is_td: None,
            blocked_by: Some(e.to_string()),
            obstruction: None,
            witness_basis: Vec::new(),
        },
    }
}

/// Runs the checks for one assembled system at the requested level.
pub fn check_system(path: &str, sys: &MtdSystem, level: Level) -> CheckReport {
    let shape = sys.check_tridiagonal_shape();
    let corner = sys.check_mtd_corner();
    let sharp = sys.is_sharp();
    let td = match level {
        Level::Mtd => None,
        Level::Td => Some(td_doc(sys)),
    };
    let passed = match &td {
        None => shape.passed() && corner.passed(),
        Some(doc) => shape.passed() && doc.is_td == Some(true),
    };
    CheckReport {
        path: path.to_owned(),
        level: level.name(),
        passed,
        assembly_error: None,
        details: Some(CheckDetails {
            field: FieldDescriptor::from_spec(sys.field()),
            dimension: sys.dim(),
            diameter: sys.diameter(),
            shape_violations: shape_docs(&shape),
            corner_0_nonzero: !corner.corner_0.is_zero(),
            corner_d_nonzero: !corner.corner_d.is_zero(),
            sharp,
            td,
        }),
    }
}

pub fn assembly_failure_report(path: &str, level: Level, error: String) -> CheckReport {
    CheckReport {
        path: path.to_owned(),
        level: level.name(),
        passed: false,
        assembly_error: Some(error),
        details: None,
    }
}

pub fn render_check_human(report: &CheckReport) -> String {
    let mut out = String::new();
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    match &report.details {
        None => {
            out.push_str(&format!(
                "{}: {} ({} level): eigenvalue verification failed: {}\n",
                report.path,
                verdict,
                report.level,
                report.assembly_error.as_deref().unwrap_or("unknown error")
            ));
        }
        Some(d) => {
            out.push_str(&format!(
                "{}: {} ({} level), field {}, dimension {}, diameter {}\n",
                report.path, verdict, report.level, d.field, d.dimension, d.diameter
            ));
            out.push_str("  eigenvalue verification: pass\n");
            if d.shape_violations.is_empty() {
                out.push_str("  tridiagonal shape: pass\n");
            } else {
                let v = &d.shape_violations[0];
                let family = if v.starred {
                    "E*_i A E*_j"
                } else {
                    "E_i A* E_j"
                };
                out.push_str(&format!(
                    "  tridiagonal shape: FAIL ({} nonzero products; first {} at i={}, j={}, entry ({}, {}) = {})\n",
                    d.shape_violations.len(),
                    family,
                    v.i,
                    v.j,
                    v.row,
                    v.col,
                    v.value
                ));
            }
            out.push_str(&format!(
                "  corner products nonzero: first {}, last {}\n",
                if d.corner_0_nonzero { "yes" } else { "no" },
                if d.corner_d_nonzero { "yes" } else { "no" }
            ));
            out.push_str(&format!(
                "  sharp: {}\n",
                if d.sharp { "yes" } else { "no" }
            ));
            if let Some(td) = &d.td {
                match (td.is_td, &td.blocked_by, &td.obstruction) {
                    (Some(true), _, _) => out.push_str("  irreducible: yes\n"),
                    (Some(false), _, Some(reason)) => {
                        out.push_str(&format!("  irreducible: no ({reason})\n"));
                        for row in &td.witness_basis {
                            out.push_str(&format!("    witness basis row: [{}]\n", row.join(", ")));
                        }
                    }
                    (_, Some(blocked), _) => {
                        out.push_str(&format!("  irreducible: undecided ({blocked})\n"));
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportDoc {
    pub primal: Vec<usize>,
    pub dual: Vec<usize>,
    pub r: usize,
    pub t: usize,
    pub k: usize,
    pub k_star: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParameterArrayDoc {
    pub thetas: Vec<String>,
    pub theta_stars: Vec<String>,
    pub zetas: Vec<String>,
}

impl ParameterArrayDoc {
    pub fn from_array(pa: &ParameterArray) -> ParameterArrayDoc {
        ParameterArrayDoc {
            thetas: render_strings(pa.thetas()),
            theta_stars: render_strings(pa.theta_stars()),
            zetas: render_strings(pa.zetas()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientDoc {
    pub path: String,
    pub field: FieldDescriptor,
    pub dimension: usize,
    pub diameter: usize,
    pub principal_module_dim: usize,
    pub principal_module_basis: Vec<Vec<String>>,
    pub corner_kernel_dim: usize,
    pub maximal_submodule_dim: usize,
    pub maximal_submodule_basis: Vec<Vec<String>>,
    pub quotient_dim: usize,
    pub transversal: Vec<Vec<String>>,
    pub induced_a: Vec<Vec<String>>,
    pub induced_a_star: Vec<Vec<String>>,
    pub induced_e: Vec<Vec<Vec<String>>>,
    pub induced_e_star: Vec<Vec<Vec<String>>>,
    pub support: SupportDoc,
    pub parameter_array: ParameterArrayDoc,
    /// The induced system as a loadable document of its own.
    pub induced_document: SystemDocument,
}

pub fn quotient_doc(path: &str, sys: &MtdSystem, report: &QuotientReport) -> QuotientDoc {
    QuotientDoc {
        path: path.to_owned(),
        field: FieldDescriptor::from_spec(sys.field()),
        dimension: sys.dim(),
        diameter: sys.diameter(),
        principal_module_dim: report.principal_module.dim(),
        principal_module_basis: render_subspace(&report.principal_module),
        corner_kernel_dim: report.corner_kernel.dim(),
        maximal_submodule_dim: report.maximal_submodule.dim(),
        maximal_submodule_basis: render_subspace(&report.maximal_submodule),
        quotient_dim: report.quotient_dim,
        transversal: render_rows(&report.transversal),
        induced_a: render_matrix(&report.induced_a),
        induced_a_star: render_matrix(&report.induced_a_star),
        induced_e: report.induced_e.iter().map(render_matrix).collect(),
        induced_e_star: report.induced_e_star.iter().map(render_matrix).collect(),
        support: SupportDoc {
            primal: report.support.primal.clone(),
            dual: report.support.dual.clone(),
            r: report.support.r,
            t: report.support.t,
            k: report.support.k,
            k_star: report.support.k_star,
        },
        parameter_array: ParameterArrayDoc::from_array(&report.parameter_array),
        induced_document: SystemDocument::from_system(&report.induced_system),
    }
}

pub fn render_quotient_human(doc: &QuotientDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}: field {}, dimension {}, diameter {}\n",
        doc.path, doc.field, doc.dimension, doc.diameter
    ));
    out.push_str(&format!(
        "  generated module dimension: {}\n",
        doc.principal_module_dim
    ));
    out.push_str(&format!(
        "  maximal submodule dimension: {}\n",
        doc.maximal_submodule_dim
    ));
    for row in &doc.maximal_submodule_basis {
        out.push_str(&format!("    submodule basis row: [{}]\n", row.join(", ")));
    }
    out.push_str(&format!("  quotient dimension: {}\n", doc.quotient_dim));
    for row in &doc.transversal {
        out.push_str(&format!("    transversal row: [{}]\n", row.join(", ")));
    }
    let print_matrix = |out: &mut String, name: &str, m: &[Vec<String>]| {
        out.push_str(&format!("  {name}:\n"));
        for row in m {
            out.push_str(&format!("    [{}]\n", row.join(", ")));
        }
    };
    print_matrix(&mut out, "induced A", &doc.induced_a);
    print_matrix(&mut out, "induced A*", &doc.induced_a_star);
    out.push_str(&format!(
        "  support: primal {:?} (r = {}, span {}), dual {:?} (t = {}, span {})\n",
        doc.support.primal,
        doc.support.r,
        doc.support.k,
        doc.support.dual,
        doc.support.t,
        doc.support.k_star
    ));
    out.push_str(&format!(
        "  parameter array: thetas [{}], theta_stars [{}], zetas [{}]\n",
        doc.parameter_array.thetas.join(", "),
        doc.parameter_array.theta_stars.join(", "),
        doc.parameter_array.zetas.join(", ")
    ));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectationDoc {
    /// Product-formula idempotents equal the closed forms.
    pub idempotents_match: bool,
    /// For degenerate parameters: the quotient equals the closed-form
    /// expectation (submodule, transversal, induced system).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_quotient_matches: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diameter2Doc {
    pub field: FieldDescriptor,
    pub thetas: Vec<String>,
    pub theta_stars: Vec<String>,
    pub zetas: Vec<String>,
    pub zeta1_cross: String,
    pub admissibility_sum: String,
    pub degenerate: bool,
    pub criterion_is_td: bool,
    pub module_is_td: bool,
    pub mtd_axioms_pass: bool,
    pub parameter_array_round_trip: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expectations: Option<ExpectationDoc>,
    pub system: SystemDocument,
}

pub fn diameter2_doc(
    params: &Diameter2Params,
    sys: &MtdSystem,
    module_is_td: bool,
    mtd_axioms_pass: bool,
    parameter_array_round_trip: bool,
    expectations: Option<ExpectationDoc>,
) -> Diameter2Doc {
    Diameter2Doc {
        field: FieldDescriptor::from_spec(params.field()),
        thetas: render_strings(&params.thetas()[..]),
        theta_stars: render_strings(&params.theta_stars()[..]),
        zetas: render_strings(&params.zetas()[..]),
        zeta1_cross: params.zeta1_cross().to_string(),
        admissibility_sum: params.admissibility_value().to_string(),
        degenerate: params.is_degenerate(),
        criterion_is_td: params.criterion_is_td(),
        module_is_td,
        mtd_axioms_pass,
        parameter_array_round_trip,
        expectations,
        system: SystemDocument::from_system(sys),
    }
}

pub fn render_diameter2_human(doc: &Diameter2Doc) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "diameter-2 family member over {}: thetas [{}], theta_stars [{}], zetas [{}]\n",
        doc.field,
        doc.thetas.join(", "),
        doc.theta_stars.join(", "),
        doc.zetas.join(", ")
    ));
    out.push_str(&format!("  zeta_1^x: {}\n", doc.zeta1_cross));
    out.push_str(&format!("  admissibility sum: {}\n", doc.admissibility_sum));
    out.push_str(&format!(
        "  mock tridiagonal axioms: {}\n",
        if doc.mtd_axioms_pass { "pass" } else { "FAIL" }
    ));
    out.push_str(&format!(
        "  parameter array round trip: {}\n",
        if doc.parameter_array_round_trip {
            "pass"
        } else {
            "FAIL"
        }
    ));
    out.push_str(&format!(
        "  irreducible (criterion zeta_1 zeta_1^x != zeta_2): {}\n",
        if doc.criterion_is_td { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "  irreducible (module test): {}\n",
        if doc.module_is_td { "yes" } else { "no" }
    ));
    if let Some(e) = &doc.expectations {
        out.push_str(&format!(
            "  closed-form idempotents match: {}\n",
            if e.idempotents_match { "yes" } else { "NO" }
        ));
        if let Some(q) = e.degenerate_quotient_matches {
            out.push_str(&format!(
                "  degenerate quotient matches closed forms: {}\n",
                if q { "yes" } else { "NO" }
            ));
        }
    }
    out
}
