//! Command-line interface.
//!
//! Exit codes: 0 success, 1 computation error, 2 audit failure, 64 usage
//! error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::groups::{nu_upper_bound, parse_group_expr};
use crate::matrixcheck::verify_kronecker;
use crate::realforms::{complexification_type, nu_simple, NuResult};
use crate::roots::{build_root_system, RootSystemType};
use crate::sork::{sork_exact, sork_formula, verify_certificate, OrthCertificate};
use crate::tables::{self, AuditReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_AUDIT_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "sorklie",
    version,
    about = "Strong orthogonal rank of root systems and free subgroup rank of Lie groups"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free subgroup rank of a group expression, e.g. "SL(2,R) x SU(2)^3".
    Nu {
        expr: String,
        /// Also emit strongly orthogonal roots for each simple factor.
        #[arg(long)]
        certificate: bool,
    },
    /// Strong orthogonal rank of an irreducible root system, e.g. E8.
    Sork {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Also emit the canonical certificate.
        #[arg(long)]
        certificate: bool,
        /// Also emit the root system.
        #[arg(long)]
        dump_roots: bool,
    },
    /// Check a certificate file of the form {system_type, n, roots}.
    Certify { path: std::path::PathBuf },
    /// Recompute the subalgebra and minimal dimension tables.
    VerifyTables {
        #[arg(long, default_value_t = tables::DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    /// Check the Kronecker sum identities on integer matrices.
    VerifyKronecker {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a root system in doubled coordinates.
    DumpRoots {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Input(String),
}

type CliResult = std::result::Result<i32, CliError>;

fn print_json(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    )
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Nu { expr, certificate } => nu(out, expr, *certificate, cli.json),
        Command::Sork {
            ty,
            certificate,
            dump_roots,
        } => sork(out, ty, *certificate, *dump_roots, cli.json),
        Command::Certify { path } => certify(out, path, cli.json),
        Command::VerifyTables { rank_cap } => verify_tables(out, *rank_cap, cli.json),
        Command::VerifyKronecker {
            max_size,
            samples,
            seed,
        } => {
            let report = verify_kronecker(*max_size, *samples, *seed)?;
            if cli.json {
                print_json(
                    out,
                    &serde_json::to_value(&report).expect("report serializes"),
                )?;
            } else {
                for c in &report.checks {
                    writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name)?;
                }
            }
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_AUDIT_FAILURE
            })
        }
        Command::DumpRoots { ty } => {
            let ty: RootSystemType = ty.parse()?;
            let dump = build_root_system(ty).dump();
            print_json(out, &serde_json::to_value(dump).expect("dump serializes"))?;
            Ok(EXIT_OK)
        }
    }
}

fn factor_json(r: &NuResult, descriptor: String, ty: RootSystemType, with_cert: bool) -> Value {
    let mut v = json!({
        "descriptor": descriptor,
        "complexification": ty.to_string(),
        "nu": r.nu,
        "case": r.case,
        "sork_of_complexification": r.sork_of_complexification,
    });
    if let (true, Some(cert)) = (with_cert, &r.certificate) {
        v["certificate"] = cert.to_json();
    }
    v
}

fn nu(out: &mut dyn Write, expr: &str, with_cert: bool, json: bool) -> CliResult {
    let e = parse_group_expr(expr)?;
    let value = nu_upper_bound(&e)?;
    let mut factors = Vec::new();
    if with_cert || json {
        for d in e.simple_factors() {
            let r = nu_simple(d)?;
            factors.push(factor_json(
                &r,
                d.to_string(),
                complexification_type(d)?,
                with_cert,
            ));
        }
    }
    if json {
        print_json(
            out,
            &json!({"nu": value.value, "exact": value.exact, "factors": factors}),
        )?;
        return Ok(EXIT_OK);
    }
    if value.exact {
        writeln!(out, "nu = {}", value.value)?;
    } else {
        writeln!(out, "nu ≤ {} (upper bound)", value.value)?;
    }
    if with_cert {
        print_json(out, &Value::Array(factors))?;
    }
    Ok(EXIT_OK)
}

fn sork(out: &mut dyn Write, ty: &str, with_cert: bool, dump: bool, json: bool) -> CliResult {
    let ty: RootSystemType = ty.parse()?;
    let phi = build_root_system(ty);
    let (n, cert) = sork_exact(&phi);
    if n != sork_formula(ty) {
        return Err(CliError::Input(format!(
            "search found {n} but the closed form gives {}",
            sork_formula(ty)
        )));
    }
    if json {
        let mut v = json!({"type": ty.to_string(), "sork": n});
        if with_cert {
            v["certificate"] = cert.to_json();
        }
        if dump {
            v["roots"] = serde_json::to_value(phi.dump()).expect("dump serializes");
        }
        print_json(out, &v)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "sork({ty}) = {n}")?;
    if with_cert {
        print_json(out, &cert.to_json())?;
    }
    if dump {
        print_json(
            out,
            &serde_json::to_value(phi.dump()).expect("dump serializes"),
        )?;
    }
    Ok(EXIT_OK)
}

/// Exit 0 when the certificate is valid, 2 when it has a defect.
fn certify(out: &mut dyn Write, path: &std::path::Path, json: bool) -> CliResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let cert = OrthCertificate::from_json(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let verdict = verify_certificate(&cert);
    let maximum = sork_formula(cert.system_type);
    if json {
        print_json(
            out,
            &json!({
                "system_type": cert.system_type.to_string(),
                "n": cert.len(),
                "valid": verdict.is_ok(),
                "defect": verdict.err().map(|d| d.to_string()),
                "maximum": verdict.is_ok() && cert.len() == maximum,
            }),
        )?;
    } else {
        match verdict {
            Ok(()) if cert.len() == maximum => writeln!(
                out,
                "valid: {} strongly orthogonal roots in {} (maximum)",
                cert.len(),
                cert.system_type
            )?,
            Ok(()) => writeln!(
                out,
                "valid: {} strongly orthogonal roots in {} (maximum is {maximum})",
                cert.len(),
                cert.system_type
            )?,
            Err(d) => writeln!(out, "invalid: {d}")?,
        }
    }
    Ok(if verdict.is_ok() {
        EXIT_OK
    } else {
        EXIT_AUDIT_FAILURE
    })
}

fn verify_tables(out: &mut dyn Write, rank_cap: usize, json: bool) -> CliResult {
    if rank_cap < 2 {
        return Err(CliError::Input("rank cap must be at least 2".into()));
    }
    let reports: Vec<AuditReport> = vec![
        tables::table1_audit(),
        tables::table2_audit(rank_cap),
        tables::table3_audit_with_cap(rank_cap),
    ];
    let pass = reports.iter().all(AuditReport::all_pass);
    if json {
        print_json(
            out,
            &json!({"rank_cap": rank_cap, "pass": pass, "reports": reports}),
        )?;
    } else {
        for report in &reports {
            writeln!(out, "== {} ==", report.table)?;
            for entry in &report.entries {
                writeln!(out, "{entry}")?;
            }
            for note in &report.notes {
                writeln!(out, "note: {note}")?;
            }
            let failed = report.failures().count();
            writeln!(
                out,
                "{}: {} checks, {} failed",
                report.table,
                report.entries.len(),
                failed
            )?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_AUDIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sorklie").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn sork_text() {
        let (code, out, _) = run_args(&["sork", "E8"]);
        assert_eq!(code, 0);
        assert_eq!(out, "sork(E8) = 8\n");
    }

    #[test]
    fn nu_text() {
        assert_eq!(
            run_args(&["nu", "so(7,1)"]),
            (0, "nu = 3\n".into(), String::new())
        );
        let (code, out, _) = run_args(&["nu", "ext(R^3, SL(2,R), general)"]);
        assert_eq!((code, out.as_str()), (0, "nu ≤ 1 (upper bound)\n"));
    }

    #[test]
    fn errors_and_usage() {
        let (code, _, err) = run_args(&["nu", "so(3,5"]);
        assert_eq!(code, 1);
        assert!(err.contains("offset 7"), "{err}");
        assert_eq!(run_args(&["sork", "E9"]).0, 1);
        assert_eq!(run_args(&["frobnicate"]).0, 64);
        assert_eq!(run_args(&["sork", "E8", "--bogus"]).0, 64);
        assert_eq!(run_args(&[]).0, 64);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn nu_json() {
        let (code, out, _) = run_args(&["nu", "--json", "--certificate", "so(3,5) x Z"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nu"], 3);
        assert_eq!(v["exact"], true);
        assert_eq!(v["factors"][0]["case"], "SopqException");
        assert_eq!(v["factors"][0]["certificate"]["n"], 3);
    }
}
