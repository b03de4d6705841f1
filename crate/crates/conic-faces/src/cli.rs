//! JSON command-line front end. Results go to standard output as a single
//! JSON document; a human-readable summary goes to standard error.
//!
//! Exit codes: `0` for success/member/pass verdicts, `1` for
//! non-member/non-pass verdicts, `2` for malformed input or internal
//! failures. `CONIC_FACES_TOL` overrides the default relative tolerance.

use crate::casebook;
use crate::cop::{self, CertificateOutcome, CopFaceDescriptor, RayFamily};
use crate::cp::{self, CpFaceDescriptor};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, SymMatrix};
use crate::verify::{run_verify, VerifyConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "conic-faces",
    about = "Facial structure of copositive and completely positive cones over second-order cones",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConeChoice {
    Cop,
    Cp,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a symmetric matrix in COP(L^n) or CP(L^n).
    Membership {
        #[arg(long, value_enum)]
        cone: ConeChoice,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Decompose a completely positive matrix into Lorentz-cone atoms.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Build and query face descriptors.
    Face {
        #[command(subcommand)]
        action: FaceAction,
    },
    /// Classify the ray generated by a matrix against the extreme-ray
    /// trichotomy.
    Ray {
        #[command(subcommand)]
        action: RayAction,
    },
    /// Longest chains of faces and distance-to-polyhedrality witnesses.
    Chain {
        #[arg(long, value_enum)]
        cone: ConeChoice,
        #[arg(long)]
        n: usize,
        /// Emit the distance-to-polyhedrality witness chain instead.
        #[arg(long)]
        poly: bool,
        /// Sweep granularity: each non-polyhedral face carries m + 1 extreme
        /// generators.
        #[arg(long, default_value_t = 11)]
        m: usize,
    },
    /// Run the reproduction cases.
    Casebook {
        /// Restrict to the case with this id.
        #[arg(long)]
        case: Option<String>,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Override the per-property sample counts.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FaceAction {
    /// Build a face descriptor and print it.
    Make(MakeArgs),
    /// Compare the sampling-based dimension of a CP face with its closed
    /// form.
    Dim {
        #[arg(long)]
        face: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Report whether a COP face is exposed.
    Exposed {
        #[arg(long)]
        face: PathBuf,
    },
    /// Produce the exposing certificate of a face.
    Certificate {
        #[arg(long, value_enum)]
        cone: ConeChoice,
        #[arg(long)]
        face: PathBuf,
    },
    /// Test whether a matrix belongs to a face.
    Contains {
        #[arg(long, value_enum)]
        cone: ConeChoice,
        #[arg(long)]
        face: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Args)]
struct MakeArgs {
    #[arg(long, value_enum)]
    cone: ConeChoice,
    /// COP face family (ignored for CP faces).
    #[arg(long, value_enum)]
    kind: Option<FaceKindChoice>,
    /// Ambient order n (required when no spanning set fixes it).
    #[arg(long)]
    n: Option<usize>,
    /// Vector file {"x": [...]} with the hyperplane parameter v.
    #[arg(long)]
    v: Option<PathBuf>,
    /// Spanning-set file {"vectors": [[...], ...]}; orthonormalized into the
    /// face subspace X.
    #[arg(long)]
    span: Option<PathBuf>,
    /// Build the boundary ("=") CP face instead of the "≥" face.
    #[arg(long)]
    boundary: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaceKindChoice {
    Full,
    Psd,
    PsdPlusJ,
}

#[derive(Subcommand)]
enum RayAction {
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Deserialize)]
struct VectorFile {
    x: Vec<f64>,
}

#[derive(Deserialize)]
struct SpanFile {
    vectors: Vec<Vec<f64>>,
}

fn tolerance() -> f64 {
    std::env::var("CONIC_FACES_TOL")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|t| t.is_finite() && *t > 0.0)
        .unwrap_or(crate::DEFAULT_TOL)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Domain(format!("cannot parse {}: {e}", path.display())))
}

fn emit(value: &impl serde::Serialize, summary: &str, code: i32) -> i32 {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
    eprintln!("{summary}");
    code
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let mut full = vec!["conic-faces".to_string()];
    full.extend(argv.iter().cloned());
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is
            // malformed input.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            e.print().ok();
            return if benign { 0 } else { 2 };
        }
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        dispatch(cli.command)
    }));
    match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            println!("{}", json!({ "error": err.to_string() }));
            eprintln!("error: {err}");
            2
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal invariant failure".into());
            println!("{}", json!({ "error": msg }));
            eprintln!("internal failure: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    let tol = tolerance();
    match command {
        Command::Membership { cone, matrix } => {
            let a: SymMatrix = read_json(&matrix)?;
            match cone {
                ConeChoice::Cop => {
                    let verdict = cop::cop_membership(&a, tol)?;
                    let member = verdict.is_member();
                    Ok(emit(
                        &verdict,
                        if member {
                            "copositive: member"
                        } else {
                            "copositive: not a member"
                        },
                        if member { 0 } else { 1 },
                    ))
                }
                ConeChoice::Cp => {
                    let verdict = cp::cp_membership(&a, tol)?;
                    let member = verdict.is_member();
                    Ok(emit(
                        &verdict,
                        if member {
                            "completely positive: member"
                        } else {
                            "completely positive: not a member"
                        },
                        if member { 0 } else { 1 },
                    ))
                }
            }
        }
        Command::Decompose { matrix } => {
            let a: SymMatrix = read_json(&matrix)?;
            match cp::cp_atom_decomposition(&a, tol) {
                Ok(dec) => {
                    let summary = format!(
                        "decomposed into {} atoms, residual {:e}",
                        dec.atoms.len(),
                        dec.residual
                    );
                    Ok(emit(&dec, &summary, 0))
                }
                Err(Error::Precondition(msg)) => {
                    println!("{}", json!({ "member": false, "reason": msg }));
                    eprintln!("not completely positive: {msg}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Face { action } => run_face(action, tol),
        Command::Ray {
            action: RayAction::Classify { matrix },
        } => {
            let a: SymMatrix = read_json(&matrix)?;
            let family = cop::ray_classify(&a, tol)?;
            let code = if matches!(family, RayFamily::NotMember) {
                1
            } else {
                0
            };
            let summary = format!("ray family: {}", family.tag());
            Ok(emit(&family, &summary, code))
        }
        Command::Chain { cone, n, poly, m } => match (cone, poly) {
            (ConeChoice::Cop, false) => {
                let report = cop::build_longest_chain_cop(n)?;
                let summary = format!("longest chain length {} dims {:?}", report.length, report.dims);
                Ok(emit(&report, &summary, 0))
            }
            (ConeChoice::Cop, true) => {
                let report = cop::poly_distance_witness_cop(n, m)?;
                let summary = format!("poly witness length {}", report.length);
                Ok(emit(&report, &summary, 0))
            }
            (ConeChoice::Cp, false) => {
                let report = cp::build_longest_chain_cp(n)?;
                let summary = format!("longest chain length {} dims {:?}", report.length, report.dims);
                Ok(emit(&report, &summary, 0))
            }
            (ConeChoice::Cp, true) => {
                let report = cp::poly_distance_witness_cp(n, m)?;
                let summary = format!("poly witness length {}", report.length);
                Ok(emit(&report, &summary, 0))
            }
        },
        Command::Casebook { case } => {
            let mut reports = casebook::run_all()?;
            if let Some(id) = &case {
                reports.retain(|r| &r.case_id == id);
                if reports.is_empty() {
                    return Err(Error::Domain(format!("unknown case id {id}")));
                }
            }
            let all_pass = reports.iter().all(|r| r.overall);
            let summary: Vec<String> = reports
                .iter()
                .map(|r| format!("{}: {}", r.case_id, if r.overall { "pass" } else { "FAIL" }))
                .collect();
            Ok(emit(
                &json!({ "cases": reports, "pass": all_pass }),
                &summary.join("; "),
                if all_pass { 0 } else { 1 },
            ))
        }
        Command::Verify {
            seed,
            n_max,
            n_min,
            samples,
        } => {
            let cfg = VerifyConfig {
                seed,
                n_min,
                n_max,
                samples,
            };
            let report = run_verify(&cfg)?;
            for case in &report.cases {
                eprintln!(
                    "{} {} ({} checks){}",
                    if case.pass { "PASS" } else { "FAIL" },
                    case.id,
                    case.checked,
                    if case.pass {
                        String::new()
                    } else {
                        format!(": {}", case.details)
                    }
                );
            }
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}

fn load_span(args: &MakeArgs) -> Result<Option<(usize, Vec<Vec<f64>>)>> {
    let Some(path) = &args.span else {
        return Ok(None);
    };
    let span: SpanFile = read_json(path)?;
    let n = match (span.vectors.first(), args.n) {
        (Some(v), _) => v.len(),
        (None, Some(n)) => n,
        (None, None) => {
            return Err(Error::Domain(
                "an empty spanning set needs an explicit --n".into(),
            ))
        }
    };
    Ok(Some((n, span.vectors)))
}

fn run_face(action: FaceAction, tol: f64) -> Result<i32> {
    match action {
        FaceAction::Make(args) => match args.cone {
            ConeChoice::Cop => {
                let kind = args.kind.ok_or_else(|| {
                    Error::Domain("COP faces need --kind full|psd|psd-plus-j".into())
                })?;
                let face = match kind {
                    FaceKindChoice::Full => {
                        let n = args
                            .n
                            .ok_or_else(|| Error::Domain("the full face needs --n".into()))?;
                        CopFaceDescriptor::full(n)?
                    }
                    FaceKindChoice::Psd | FaceKindChoice::PsdPlusJ => {
                        let v_path = args
                            .v
                            .as_ref()
                            .ok_or_else(|| Error::Domain("this face family needs --v".into()))?;
                        let v: VectorFile = read_json(v_path)?;
                        let n = v.x.len() + 1;
                        let x = match load_span(&args)? {
                            Some((span_n, vectors)) => {
                                if span_n != n {
                                    return Err(Error::Dimension(
                                        "span and v disagree on the ambient dimension".into(),
                                    ));
                                }
                                Subspace::from_span(n, &vectors, 1e-10)
                            }
                            None => Subspace::zero(n),
                        };
                        match kind {
                            FaceKindChoice::Psd => CopFaceDescriptor::psd(&v.x, x)?,
                            FaceKindChoice::PsdPlusJ => CopFaceDescriptor::psd_plus_j(&v.x, x)?,
                            FaceKindChoice::Full => unreachable!(),
                        }
                    }
                };
                let summary = format!(
                    "built {:?} face: dim {} exposed {}",
                    face.kind(),
                    face.dim(),
                    face.exposed()
                );
                Ok(emit(&face, &summary, 0))
            }
            ConeChoice::Cp => {
                let (n, vectors) = match load_span(&args)? {
                    Some(pair) => pair,
                    None => {
                        let n = args.n.ok_or_else(|| {
                            Error::Domain("CP faces need --span or --n".into())
                        })?;
                        (n, vec![])
                    }
                };
                let x = Subspace::from_span(n, &vectors, 1e-10);
                let face = cp::make_cp_face(x, args.boundary)?;
                let summary = format!(
                    "built CP face: class {} dim {}",
                    face.cls().tag(),
                    face.dim()
                );
                Ok(emit(&face, &summary, 0))
            }
        },
        FaceAction::Dim {
            face,
            samples,
            seed,
        } => {
            let face: CpFaceDescriptor = read_json(&face)?;
            let numeric = cp::numeric_face_dimension(&face, samples, seed);
            let matches = numeric == face.dim();
            let summary = format!(
                "closed form {} vs sampled {} ({})",
                face.dim(),
                numeric,
                if matches { "match" } else { "MISMATCH" }
            );
            Ok(emit(
                &json!({
                    "closed_form": face.dim(),
                    "numeric": numeric,
                    "match": matches,
                }),
                &summary,
                if matches { 0 } else { 1 },
            ))
        }
        FaceAction::Exposed { face } => {
            let face: CopFaceDescriptor = read_json(&face)?;
            let summary = format!(
                "face of dim {} is {}",
                face.dim(),
                if face.exposed() { "exposed" } else { "not exposed" }
            );
            Ok(emit(
                &json!({ "exposed": face.exposed(), "dim": face.dim() }),
                &summary,
                if face.exposed() { 0 } else { 1 },
            ))
        }
        FaceAction::Certificate { cone, face } => match cone {
            ConeChoice::Cop => {
                let face: CopFaceDescriptor = read_json(&face)?;
                let outcome = cop::exposing_certificate(&face)?;
                let (summary, code) = match &outcome {
                    CertificateOutcome::Certificate(c) => {
                        (format!("certificate with {} atoms", c.atoms.len()), 0)
                    }
                    CertificateOutcome::NotExposed => ("face is not exposed".to_string(), 1),
                };
                Ok(emit(&outcome, &summary, code))
            }
            ConeChoice::Cp => {
                let face: CpFaceDescriptor = read_json(&face)?;
                let cert = cp::cp_face_certificate(face.subspace())?;
                let summary = format!("certificate with {} atoms", cert.atoms.len());
                Ok(emit(&cert, &summary, 0))
            }
        },
        FaceAction::Contains { cone, face, matrix } => {
            let a: SymMatrix = read_json(&matrix)?;
            let contains = match cone {
                ConeChoice::Cop => {
                    let face: CopFaceDescriptor = read_json(&face)?;
                    cop::cop_face_contains(&face, &a, tol)?
                }
                ConeChoice::Cp => {
                    let face: CpFaceDescriptor = read_json(&face)?;
                    cp::cp_face_contains(&face, &a, tol)?
                }
            };
            Ok(emit(
                &json!({ "contains": contains }),
                if contains {
                    "the face contains the matrix"
                } else {
                    "the face does not contain the matrix"
                },
                if contains { 0 } else { 1 },
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("conic-faces-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }

    fn args(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn membership_exit_codes() {
        let j2 = write_temp("j2.json", r#"{"n":2,"rows":[[1.0,0.0],[0.0,-1.0]]}"#);
        assert_eq!(
            run(&args(&["membership", "--cone", "cop", "--matrix", j2.to_str().unwrap()])),
            0
        );
        assert_eq!(
            run(&args(&["membership", "--cone", "cp", "--matrix", j2.to_str().unwrap()])),
            1
        );
        let bad = write_temp("bad.json", r#"{"n":2,"rows":[[1.0,2.0],[3.0,1.0]]}"#);
        assert_eq!(
            run(&args(&["membership", "--cone", "cop", "--matrix", bad.to_str().unwrap()])),
            2
        );
    }

    #[test]
    fn chain_exit_codes() {
        assert_eq!(run(&args(&["chain", "--cone", "cop", "--n", "3"])), 0);
        assert_eq!(run(&args(&["chain", "--cone", "cp", "--n", "4", "--poly"])), 0);
        assert_eq!(run(&args(&["chain", "--cone", "cop", "--n", "1"])), 2);
    }

    #[test]
    fn casebook_passes() {
        assert_eq!(run(&args(&["casebook"])), 0);
        assert_eq!(run(&args(&["casebook", "--case", "svec_boundary_nonface"])), 0);
        assert_eq!(run(&args(&["casebook", "--case", "nope"])), 2);
    }

    #[test]
    fn unknown_flags_are_malformed() {
        assert_eq!(run(&args(&["membership", "--cone", "nowhere"])), 2);
    }
}
