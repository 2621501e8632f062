//! Rendering of families, moment tables and verification reports.
//!
//! JSON is the machine format: families and moment tables print as pretty
//! JSON documents, verification reports as one compact JSON object per line.
//! CSV is a flat summary (one row per member, moment or report), LaTeX a
//! display-only tabular. All renderings are deterministic.

use serde::Serialize;

use qappell::{PolyFamily, Provenance, QPoly, Rational, VerifyReport};

use crate::config::OutputFormat;

fn term_label(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    }
}

fn member_terms(member: &QPoly) -> String {
    match member.degree() {
        None => "1: 0".to_string(),
        Some(d) => (0..=d)
            .rev()
            .map(|i| format!("{}: {}", term_label(i), member.coeff(i)))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

pub fn render_family(
    family: &PolyFamily,
    symbol: &str,
    format: OutputFormat,
) -> Result<String, String> {
    match format {
        OutputFormat::Json => {
            let body = serde_json::to_string_pretty(family).map_err(|e| e.to_string())?;
            Ok(format!("{body}\n"))
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for (n, member) in family.members().iter().enumerate() {
                out.push_str(&format!("{n}, {}\n", member_terms(member)));
            }
            Ok(out)
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            out.push_str("\\begin{tabular}{rl}\n");
            out.push_str(&format!("$n$ & ${symbol}_n(x)$ \\\\\n\\hline\n"));
            for (n, member) in family.members().iter().enumerate() {
                out.push_str(&format!("${n}$ & ${}$ \\\\\n", member.to_latex()));
            }
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct MomentsDocument<'a> {
    params: &'a Provenance,
    moments: &'a [Rational],
}

pub fn render_moments(
    provenance: &Provenance,
    moments: &[Rational],
    format: OutputFormat,
) -> Result<String, String> {
    match format {
        OutputFormat::Json => {
            let doc = MomentsDocument {
                params: provenance,
                moments,
            };
            let body = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
            Ok(format!("{body}\n"))
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for (k, mu) in moments.iter().enumerate() {
                out.push_str(&format!("{k}, {mu}\n"));
            }
            Ok(out)
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            out.push_str("\\begin{tabular}{rl}\n$k$ & $\\mu_k$ \\\\\n\\hline\n");
            for (k, mu) in moments.iter().enumerate() {
                let cell = if mu.is_integer() {
                    mu.to_string()
                } else {
                    format!("\\frac{{{}}}{{{}}}", mu.numer(), mu.denom())
                };
                out.push_str(&format!("${k}$ & ${cell}$ \\\\\n"));
            }
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}

fn failure_summary(report: &VerifyReport) -> String {
    let Some(failure) = &report.first_failure else {
        return String::new();
    };
    let mut parts = Vec::new();
    if let Some(n) = failure.n {
        parts.push(format!("n={n}"));
    }
    if let Some(m) = failure.m {
        parts.push(format!("m={m}"));
    }
    if let Some(value) = &failure.value {
        parts.push(format!("value={value}"));
    }
    if let Some(residual) = &failure.residual {
        parts.push(format!("residual={residual}"));
    }
    if let Some(detail) = &failure.detail {
        parts.push(detail.clone());
    }
    parts.join("; ")
}

pub fn render_reports(reports: &[VerifyReport], format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&serde_json::to_string(report).map_err(|e| e.to_string())?);
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for report in reports {
                let theorem = report.theorem.as_str();
                if report.pass {
                    out.push_str(&format!("{theorem}, pass\n"));
                } else {
                    out.push_str(&format!(
                        "{theorem}, fail, \"{}\"\n",
                        failure_summary(report)
                    ));
                }
            }
            Ok(out)
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            out.push_str("\\begin{tabular}{lll}\ncheck & result & first failure \\\\\n\\hline\n");
            for report in reports {
                let (verdict, location) = if report.pass {
                    ("pass".to_string(), "--".to_string())
                } else {
                    let failure = report.first_failure.as_ref();
                    let location = failure
                        .and_then(|f| f.n)
                        .map(|n| format!("row {n}"))
                        .unwrap_or_else(|| "--".to_string());
                    ("fail".to_string(), location)
                };
                out.push_str(&format!(
                    "{} & {verdict} & {location} \\\\\n",
                    report.theorem.as_str()
                ));
            }
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}
