//! Command implementations. Each command returns its stdout, stderr, and
//! exit code; `main` prints and exits. Exit codes: 0 all checks passed,
//! 1 a well-formed input failed a mathematical check, 2 the input itself
//! was unreadable or malformed.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use serde::Serialize;
use tdsys::diameter2::Diameter2Params;
use tdsys::quotient;
use tdsys::{FieldScalar, MtdSystem};

use crate::document::{FieldDescriptor, SystemDocument};
use crate::verdict::{
    self, CheckReport, CheckRunReport, Diameter2Doc, ExpectationDoc, Format, Level,
};
use crate::{EXIT_BAD_INPUT, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> CmdOutput {
        CmdOutput {
            stdout,
            stderr: String::new(),
            exit_code: EXIT_OK,
        }
    }

    fn failed(stdout: String) -> CmdOutput {
        CmdOutput {
            stdout,
            stderr: String::new(),
            exit_code: EXIT_CHECK_FAILED,
        }
    }

    fn check_failed(stderr: String) -> CmdOutput {
        CmdOutput {
            stdout: String::new(),
            stderr,
            exit_code: EXIT_CHECK_FAILED,
        }
    }

    fn bad_input(stderr: String) -> CmdOutput {
        CmdOutput {
            stdout: String::new(),
            stderr,
            exit_code: EXIT_BAD_INPUT,
        }
    }
}

fn machine_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

/// Reads and assembles one document. Outer Err: the document is malformed
/// (exit 2). Inner Err: well-formed but the operators fail eigenvalue
/// verification (a check failure).
fn load_system(path: &Path) -> Result<Result<MtdSystem, String>, String> {
    let display = path.display();
    let text = std::fs::read_to_string(path).map_err(|e| format!("{display}: {e}"))?;
    let doc = SystemDocument::parse_str(&text).map_err(|e| format!("{display}: {e}"))?;
    let inputs = doc
        .to_system_inputs()
        .map_err(|e| format!("{display}: {e}"))?;
    Ok(inputs.assemble().map_err(|e| e.to_string()))
}

fn check_one(path: &Path, level: Level) -> Result<CheckReport, String> {
    let name = path.display().to_string();
    Ok(match load_system(path)? {
        Ok(sys) => verdict::check_system(&name, &sys, level),
        Err(e) => verdict::assembly_failure_report(&name, level, e),
    })
}

pub fn cmd_check(paths: &[PathBuf], level: Level, format: Format, jobs: usize) -> CmdOutput {
    let workers = jobs.max(1).min(paths.len().max(1));
    let results: Vec<Result<CheckReport, String>> = if workers <= 1 {
        paths.iter().map(|p| check_one(p, level)).collect()
    } else {
        let next = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                let tx = tx.clone();
                let next = &next;
                scope.spawn(move || loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    if i >= paths.len() {
                        break;
                    }
                    if tx.send((i, check_one(&paths[i], level))).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            let mut slots: Vec<Option<Result<CheckReport, String>>> =
                paths.iter().map(|_| None).collect();
            for (i, result) in rx {
                slots[i] = Some(result);
            }
            slots
                .into_iter()
                .map(|slot| slot.expect("every path checked"))
                .collect()
        })
    };

    let mut reports = Vec::with_capacity(results.len());
    let mut errors = Vec::new();
    for result in results {
        match result {
            Ok(report) => reports.push(report),
            Err(message) => errors.push(message),
        }
    }
    if !errors.is_empty() {
        return CmdOutput::bad_input(errors.join("\n") + "\n");
    }

    let all_passed = reports.iter().all(|r| r.passed);
    let stdout = match format {
        Format::Machine => machine_json(&CheckRunReport {
            reports,
            all_passed,
        }),
        Format::Human => {
            let mut out = String::new();
            let failed = reports.iter().filter(|r| !r.passed).count();
            for report in &reports {
                out.push_str(&verdict::render_check_human(report));
            }
            if failed == 0 {
                out.push_str(&format!(
                    "checked {}: all passed\n",
                    count_noun(reports.len())
                ));
            } else {
                out.push_str(&format!(
                    "checked {}: {failed} failed\n",
                    count_noun(reports.len())
                ));
            }
            out
        }
    };
    if all_passed {
        CmdOutput::ok(stdout)
    } else {
        CmdOutput {
            stdout,
            stderr: String::new(),
            exit_code: EXIT_CHECK_FAILED,
        }
    }
}

fn count_noun(n: usize) -> String {
    if n == 1 {
        "1 system".to_owned()
    } else {
        format!("{n} systems")
    }
}

pub fn cmd_quotient(path: &Path, format: Format) -> CmdOutput {
    let name = path.display().to_string();
    let sys = match load_system(path) {
        Err(message) => return CmdOutput::bad_input(message + "\n"),
        Ok(Err(e)) => {
            return CmdOutput::check_failed(format!("{name}: {e}\n"));
        }
        Ok(Ok(sys)) => sys,
    };
    match quotient::quotient_system(&sys) {
        Ok(report) => {
            let doc = verdict::quotient_doc(&name, &sys, &report);
            let stdout = match format {
                Format::Machine => machine_json(&doc),
                Format::Human => verdict::render_quotient_human(&doc),
            };
            CmdOutput::ok(stdout)
        }
        Err(e) => CmdOutput::check_failed(format!("{name}: {e}\n")),
    }
}

fn parse_nine_scalars(
    scalars: &[String],
    spec: tdsys::FieldSpec,
) -> Result<[Vec<FieldScalar>; 3], String> {
    assert_eq!(scalars.len(), 9, "clap enforces nine scalar arguments");
    let names = [
        "theta_0",
        "theta_1",
        "theta_2",
        "theta_star_0",
        "theta_star_1",
        "theta_star_2",
        "zeta_0",
        "zeta_1",
        "zeta_2",
    ];
    let mut parsed = Vec::with_capacity(9);
    for (name, text) in names.iter().zip(scalars) {
        let value = spec
            .parse_scalar(text)
            .map_err(|e| format!("{name}: {e}"))?;
        parsed.push(value);
    }
    let zetas = parsed.split_off(6);
    let theta_stars = parsed.split_off(3);
    Ok([parsed, theta_stars, zetas])
}

fn expectations(params: &Diameter2Params, sys: &MtdSystem) -> ExpectationDoc {
    let closed = params.closed_form_idempotents();
    let mut idempotents_match = true;
    for i in 0..=2 {
        if sys.e(i) != &closed.e[i] || sys.e_star(i) != &closed.e_star[i] {
            idempotents_match = false;
        }
    }
    let degenerate_quotient_matches = if params.is_degenerate() {
        let expected = params
            .degenerate_expected()
            .expect("degenerate parameters have closed-form expectations");
        let matches = match quotient::quotient_system(sys) {
            Err(_) => false,
            Ok(report) => {
                let expected_submodule =
                    tdsys::Subspace::span_of_vector(&expected.submodule_vector);
                report.maximal_submodule == expected_submodule
                    && report.transversal == expected.transversal
                    && report.induced_a == expected.induced_a
                    && report.induced_a_star == expected.induced_a_star
                    && report.induced_e[..] == expected.induced_e[..]
                    && report.induced_e_star[..] == expected.induced_e_star[..]
            }
        };
        Some(matches)
    } else {
        None
    };
    ExpectationDoc {
        idempotents_match,
        degenerate_quotient_matches,
    }
}

pub struct Diameter2Args<'a> {
    pub scalars: &'a [String],
    pub field: &'a str,
    pub out: Option<&'a Path>,
    pub expect: bool,
    pub format: Format,
}

pub fn cmd_diameter2(args: Diameter2Args<'_>) -> CmdOutput {
    let spec = match FieldDescriptor::parse_flag(args.field)
        .map_err(|e| e.to_string())
        .and_then(|f| f.to_spec().map_err(|e| e.to_string()))
    {
        Ok(s) => s,
        Err(e) => return CmdOutput::bad_input(format!("--field: {e}\n")),
    };
    let [thetas, theta_stars, zetas] = match parse_nine_scalars(args.scalars, spec) {
        Ok(triples) => triples,
        Err(message) => return CmdOutput::bad_input(message + "\n"),
    };
    let to_array = |v: Vec<FieldScalar>| -> [FieldScalar; 3] {
        v.try_into().expect("three scalars per triple")
    };
    let params =
        match Diameter2Params::new(to_array(thetas), to_array(theta_stars), to_array(zetas)) {
            Ok(p) => p,
            Err(e) => return CmdOutput::check_failed(format!("{e}\n")),
        };

    let sys = params.build_system();
    let shape = sys.check_tridiagonal_shape();
    let corner = sys.check_mtd_corner();
    let mtd_axioms_pass = shape.passed() && corner.passed();
    let parameter_array_round_trip = match sys.parameter_array() {
        Err(_) => false,
        Ok(pa) => {
            pa.thetas() == &params.thetas()[..]
                && pa.theta_stars() == &params.theta_stars()[..]
                && pa.zetas() == &params.zetas()[..]
        }
    };
    let module_is_td = matches!(quotient::is_td(&sys), Ok(v) if v.is_td());
    let expectation_doc = args.expect.then(|| expectations(&params, &sys));

    let mut passed =
        mtd_axioms_pass && parameter_array_round_trip && module_is_td == params.criterion_is_td();
    if let Some(e) = &expectation_doc {
        passed = passed && e.idempotents_match && e.degenerate_quotient_matches.unwrap_or(true);
    }

    let doc: Diameter2Doc = verdict::diameter2_doc(
        &params,
        &sys,
        module_is_td,
        mtd_axioms_pass,
        parameter_array_round_trip,
        expectation_doc,
    );

    if let Some(out_path) = args.out {
        let json = SystemDocument::from_system(&sys).to_canonical_json();
        if let Err(e) = std::fs::write(out_path, json) {
            return CmdOutput::bad_input(format!("{}: {e}\n", out_path.display()));
        }
    }

    let stdout = match args.format {
        Format::Machine => machine_json(&doc),
        Format::Human => verdict::render_diameter2_human(&doc),
    };
    if passed {
        CmdOutput::ok(stdout)
    } else {
        CmdOutput::failed(stdout)
    }
}
