use std::fmt::Write as _;

use rayon::prelude::*;

use super::document::{parse, serialize, Document};
use crate::categories::{CategoryError, Violation};
use crate::functors::{
    certify_functoriality, certify_naturality, certify_st_isomorphism, certify_ts_identity,
    s_on_morphism, s_on_object, t_on_morphism, t_on_object, NaturalityCertificate,
};
use crate::genrand::{GenConfig, GenError, Generator};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command wants written and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String) -> Self {
        Outcome {
            code: EXIT_FAILED,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functor {
    S,
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    C,
    A2,
}

fn parse_or_usage(text: &str) -> Result<Document, Outcome> {
    parse(text).map_err(|e| Outcome::usage(format!("error: {e}")))
}

fn violation_lines(vs: &[Violation]) -> String {
    vs.iter().map(|v| format!("violation: {v}\n")).collect()
}

pub fn cmd_validate(text: &str) -> Outcome {
    let doc = match parse_or_usage(text) {
        Ok(doc) => doc,
        Err(out) => return out,
    };
    let violations = match &doc {
        Document::CObject(x) => x.validate(),
        Document::A2Object(e) => e.validate(),
        Document::A1Object(a) => a.validate(),
        Document::CMorphism(f) => f.validate(),
        Document::A2Morphism(f) => f.validate(),
    };
    if violations.is_empty() {
        Outcome::ok(format!("ok: valid {}\n", doc.kind()))
    } else {
        Outcome::failed(violation_lines(&violations))
    }
}

pub fn cmd_map(text: &str, functor: Functor) -> Outcome {
    let doc = match parse_or_usage(text) {
        Ok(doc) => doc,
        Err(out) => return out,
    };
    let result = match (functor, &doc) {
        (Functor::S, Document::CObject(x)) => s_on_object(x).map(Document::A2Object),
        (Functor::S, Document::CMorphism(f)) => s_on_morphism(f).map(Document::A2Morphism),
        (Functor::T, Document::A2Object(e)) => t_on_object(e).map(Document::CObject),
        (Functor::T, Document::A2Morphism(f)) => t_on_morphism(f).map(Document::CMorphism),
        (Functor::S, other) => {
            return Outcome::usage(format!(
                "error: functor s applies to c-object or c-morphism, not {}",
                other.kind()
            ))
        }
        (Functor::T, other) => {
            return Outcome::usage(format!(
                "error: functor t applies to a2-object or a2-morphism, not {}",
                other.kind()
            ))
        }
    };
    match result {
        Ok(mapped) => Outcome::ok(serialize(&mapped)),
        Err(CategoryError::Invalid(vs)) => Outcome::failed(violation_lines(&vs)),
        Err(e) => Outcome::failed(format!("error: {e}\n")),
    }
}

fn certificate_report(cert: &NaturalityCertificate, what: &str) -> Outcome {
    let mut out = String::new();
    for finding in cert.findings() {
        let _ = writeln!(out, "finding: {finding}");
    }
    if cert.is_certified() {
        let _ = writeln!(out, "certified: {what}");
        Outcome::ok(out)
    } else {
        let n = cert.findings().count();
        let _ = writeln!(out, "not certified: {what} ({n} findings)");
        Outcome::failed(out)
    }
}

pub fn cmd_roundtrip(text: &str) -> Outcome {
    let doc = match parse_or_usage(text) {
        Ok(doc) => doc,
        Err(out) => return out,
    };
    match &doc {
        Document::CObject(x) => {
            let id = crate::categories::CMorphism::identity(x);
            let cert = certify_ts_identity(x, &[id]);
            certificate_report(&cert, "T(S(x)) = x")
        }
        Document::CMorphism(f) => {
            let mut cert = certify_ts_identity(f.source(), std::slice::from_ref(f));
            cert.merge(certify_ts_identity(f.target(), &[]));
            certificate_report(&cert, "T(S(f)) = f")
        }
        Document::A2Object(e) => certificate_report(
            &certify_st_isomorphism(e),
            "M: E -> ST(E) is an isomorphism",
        ),
        Document::A2Morphism(f) => {
            let mut cert = certify_st_isomorphism(f.source());
            cert.merge(certify_st_isomorphism(f.target()));
            cert.merge(certify_naturality(f));
            certificate_report(&cert, "ST(f) * M = M * f")
        }
        Document::A1Object(_) => Outcome::usage("error: roundtrip is not defined for a1-object"),
    }
}

pub fn cmd_gen(kind: GenKind, seed: u64, max_dim: Option<usize>) -> Outcome {
    let mut cfg = GenConfig::new(seed);
    if let Some(k) = max_dim {
        cfg.max_ambient_dim = k;
    }
    let mut generator = match Generator::new(cfg) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let doc = match kind {
        GenKind::C => generator.random_c_object().map(Document::CObject),
        GenKind::A2 => generator.random_a2_object().map(Document::A2Object),
    };
    match doc {
        Ok(doc) => Outcome::ok(serialize(&doc)),
        Err(e) => Outcome::failed(format!("error: {e}\n")),
    }
}

/// Checks tallied by [`run_suite`], in report order.
pub const SUITE_CHECKS: [&str; 8] = [
    "s-object",
    "t-object",
    "ts-object",
    "ts-morphism",
    "st-isomorphism",
    "naturality",
    "functor-s",
    "functor-t",
];

/// Per-sample outcome: the failed checks with their messages.
#[derive(Debug, Clone, Default)]
pub struct SampleReport {
    pub failures: Vec<(&'static str, String)>,
}

fn record(report: &mut SampleReport, check: &'static str, cert: NaturalityCertificate) {
    for f in cert.findings() {
        report.failures.push((check, f.to_string()));
    }
}

/// Runs every check on sample `index`.
pub fn run_sample(cfg: &GenConfig, index: u64) -> SampleReport {
    let mut report = SampleReport::default();
    if let Err(e) = run_sample_inner(cfg, index, &mut report) {
        report.failures.push(("generation", e.to_string()));
    }
    report
}

fn run_sample_inner(
    cfg: &GenConfig,
    index: u64,
    report: &mut SampleReport,
) -> Result<(), GenError> {
    let mut g = Generator::for_sample(cfg, index)?;

    let x = g.random_c_object()?;
    match s_on_object(&x) {
        Ok(sx) => {
            for v in sx.validate() {
                report.failures.push(("s-object", v.to_string()));
            }
        }
        Err(e) => report.failures.push(("s-object", e.to_string())),
    }
    record(report, "ts-object", certify_ts_identity(&x, &[]));

    let e = g.random_a2_object()?;
    match t_on_object(&e) {
        Ok(te) => {
            for v in te.validate() {
                report.failures.push(("t-object", v.to_string()));
            }
        }
        Err(err) => report.failures.push(("t-object", err.to_string())),
    }
    record(report, "st-isomorphism", certify_st_isomorphism(&e));

    let f = g.random_c_morphism()?;
    record(
        report,
        "ts-morphism",
        certify_ts_identity(f.source(), std::slice::from_ref(&f)),
    );

    let h = g.random_a2_morphism()?;
    record(report, "naturality", certify_naturality(&h));

    let c_pair = g.random_c_composable_pair()?;
    record(report, "functor-s", certify_functoriality(&[c_pair], &[]));
    let a2_pair = g.random_a2_composable_pair()?;
    record(report, "functor-t", certify_functoriality(&[], &[a2_pair]));
    Ok(())
}

/// Runs `samples` independent samples (in parallel) and returns the reports
/// in sample order.
pub fn run_suite(cfg: &GenConfig, samples: u64) -> Vec<SampleReport> {
    (0..samples)
        .into_par_iter()
        .map(|i| run_sample(cfg, i))
        .collect()
}

pub fn cmd_suite(samples: u64, seed: u64) -> Outcome {
    let cfg = GenConfig::new(seed);
    let reports = run_suite(&cfg, samples);
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        for (check, msg) in &r.failures {
            let _ = writeln!(out, "sample {i}: {check}: {msg}");
        }
    }
    let generation_failures = reports
        .iter()
        .filter(|r| r.failures.iter().any(|(c, _)| *c == "generation"))
        .count();
    for check in SUITE_CHECKS {
        let passed = reports
            .iter()
            .filter(|r| {
                r.failures
                    .iter()
                    .all(|(c, _)| *c != check && *c != "generation")
            })
            .count();
        let _ = writeln!(out, "{check} {passed}/{samples}");
    }
    if generation_failures > 0 {
        let _ = writeln!(out, "generation-errors {generation_failures}");
    }
    let certified = reports.iter().filter(|r| r.failures.is_empty()).count();
    let _ = writeln!(out, "certified {certified}/{samples}");
    if certified as u64 == samples {
        Outcome::ok(out)
    } else {
        Outcome::failed(out)
    }
}
