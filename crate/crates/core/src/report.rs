//! Per-knot summaries and their text, markdown and JSON renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{
    distinctness_certificate_with, knot_determinant, DistinctnessOptions, DEFAULT_MAX_MODULUS,
};
use crate::constraints::{derive_betweenness, satisfies};
use crate::error::{Error, Result};
use crate::presentation::{catalog, KnotPresentation};
use crate::solver::{analyze, analyze_self_checked, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "markdown" | "md" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Use the diamond glyph instead of `<>` between chain elements.
    pub unicode: bool,
}

impl RenderOptions {
    pub fn separator(&self) -> &'static str {
        if self.unicode {
            "\u{25c6}"
        } else {
            "<>"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessSummary {
    pub certified: bool,
    pub witness_moduli: Vec<u64>,
    #[serde(skip)]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub knot: String,
    pub status: Status,
    /// Canonical compatible chains as label sequences, sorted.
    pub chains: Vec<Vec<String>>,
    /// `None` when the coloring matrix is not square.
    pub determinant: Option<u64>,
    pub distinctness: DistinctnessSummary,
    /// For each chain, the 1-based relation numbers it satisfies.
    #[serde(skip)]
    pub checklist: Vec<Vec<usize>>,
    #[serde(skip)]
    pub relation_count: usize,
}

impl KnotReport {
    pub fn from_verdict(p: &KnotPresentation, verdict: &Verdict) -> Self {
        let cs = derive_betweenness(p);
        let checklist = verdict
            .chains
            .iter()
            .map(|ch| {
                let mut satisfied: Vec<usize> = cs
                    .constraints()
                    .iter()
                    .zip(cs.origins())
                    .filter(|(c, _)| satisfies(ch, c).unwrap_or(false))
                    .flat_map(|(_, origin)| origin.iter().map(|i| i + 1))
                    .chain(cs.tautologies().iter().map(|i| i + 1))
                    .collect();
                satisfied.sort_unstable();
                satisfied
            })
            .collect();
        let distinctness = match &verdict.distinctness {
            Some(cert) => DistinctnessSummary {
                certified: cert.is_certified(),
                witness_moduli: cert.witness_moduli(),
                detail: cert.summary(),
            },
            None => DistinctnessSummary {
                certified: false,
                witness_moduli: Vec::new(),
                detail: "not checked".to_string(),
            },
        };
        KnotReport {
            knot: p.name().to_string(),
            status: verdict.status,
            chains: verdict
                .chains
                .iter()
                .map(|ch| ch.labels(p).into_iter().map(String::from).collect())
                .collect(),
            determinant: knot_determinant(p).ok().and_then(|d| d.to_u64()),
            distinctness,
            checklist,
            relation_count: p.relations().len(),
        }
    }

    pub fn chain_strings(&self, opts: &RenderOptions) -> Vec<String> {
        self.chains
            .iter()
            .map(|c| c.join(opts.separator()))
            .collect()
    }

    fn compatibility(&self, i: usize) -> String {
        let rels = &self.checklist[i];
        if rels.len() == self.relation_count {
            if self.relation_count == 0 {
                "all relations".to_string()
            } else {
                format!("all relations (1-{})", self.relation_count)
            }
        } else {
            let list: Vec<String> = rels.iter().map(usize::to_string).collect();
            format!("relations {}", list.join(","))
        }
    }

    fn determinant_string(&self) -> String {
        self.determinant
            .map_or_else(|| "n/a".to_string(), |d| d.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub max_modulus: u64,
    /// Cross-check the backtracking search against exhaustive enumeration.
    pub self_check: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_modulus: DEFAULT_MAX_MODULUS,
            self_check: false,
        }
    }
}

/// Constraint derivation, distinctness certificate, order search, report.
pub fn analyze_knot(p: &KnotPresentation, opts: &AnalysisOptions) -> Result<KnotReport> {
    let cert = distinctness_certificate_with(
        p,
        &DistinctnessOptions {
            max_modulus: opts.max_modulus,
        },
    );
    let verdict = if opts.self_check {
        analyze_self_checked(p, Some(&cert))?
    } else {
        analyze(p, Some(&cert))
    };
    Ok(KnotReport::from_verdict(p, &verdict))
}

/// Reports for every presentation, in input order. Knots are analyzed in parallel.
pub fn analyze_all(ps: &[KnotPresentation], opts: &AnalysisOptions) -> Result<Vec<KnotReport>> {
    ps.par_iter().map(|p| analyze_knot(p, opts)).collect()
}

pub fn sweep_catalog(opts: &AnalysisOptions) -> Result<Vec<KnotReport>> {
    analyze_all(catalog(), opts)
}

fn text_report(out: &mut String, r: &KnotReport, opts: &RenderOptions) {
    let _ = writeln!(out, "knot {}", r.knot);
    let _ = writeln!(out, "status: {}", r.status);
    let _ = writeln!(out, "determinant: {}", r.determinant_string());
    let _ = writeln!(out, "distinctness: {}", r.distinctness.detail);
    let _ = writeln!(out, "compatible chains: {}", r.chains.len());
    for (i, chain) in r.chain_strings(opts).iter().enumerate() {
        let _ = writeln!(out, "  {chain}  [{}]", r.compatibility(i));
    }
}

fn markdown_report(out: &mut String, r: &KnotReport, opts: &RenderOptions) {
    let _ = writeln!(out, "## {}\n", r.knot);
    let _ = writeln!(out, "- status: `{}`", r.status);
    let _ = writeln!(out, "- determinant: {}", r.determinant_string());
    let _ = writeln!(out, "- distinctness: {}\n", r.distinctness.detail);
    if r.chains.is_empty() {
        let _ = writeln!(out, "No generator order is compatible with all relations.");
        return;
    }
    let _ = writeln!(out, "| # | order | compatible with |");
    let _ = writeln!(out, "|---|---|---|");
    for (i, chain) in r.chain_strings(opts).iter().enumerate() {
        let _ = writeln!(out, "| {} | `{chain}` | {} |", i + 1, r.compatibility(i));
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// One knot as a standalone document.
pub fn render_report(r: &KnotReport, format: Format, opts: &RenderOptions) -> String {
    let mut out = String::new();
    match format {
        Format::Text => text_report(&mut out, r, opts),
        Format::Markdown => markdown_report(&mut out, r, opts),
        Format::Json => out = json(r),
    }
    out
}

/// Several knots under a common header; JSON is an array.
pub fn render_reports(rs: &[KnotReport], format: Format, opts: &RenderOptions) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "biorder report: {} knot(s)", rs.len());
            for r in rs {
                out.push('\n');
                text_report(&mut out, r, opts);
            }
        }
        Format::Markdown => {
            let _ = writeln!(out, "# Biorder report");
            for r in rs {
                out.push('\n');
                markdown_report(&mut out, r, opts);
            }
        }
        Format::Json => out = json(rs),
    }
    out
}

/// One summary row per knot: name, status, chain count, determinant.
pub fn render_sweep(rs: &[KnotReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(
                out,
                "{:<6} {:<21} {:>6} {:>11}  certified",
                "knot", "status", "chains", "determinant"
            );
            for r in rs {
                let _ = writeln!(
                    out,
                    "{:<6} {:<21} {:>6} {:>11}  {}",
                    r.knot,
                    r.status.as_str(),
                    r.chains.len(),
                    r.determinant_string(),
                    if r.distinctness.certified { "yes" } else { "no" }
                );
            }
        }
        Format::Markdown => {
            let _ = writeln!(out, "| knot | status | chains | determinant | certified |");
            let _ = writeln!(out, "|---|---|---|---|---|");
            for r in rs {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.knot,
                    r.status,
                    r.chains.len(),
                    r.determinant_string(),
                    if r.distinctness.certified { "yes" } else { "no" }
                );
            }
        }
        Format::Json => out = json(rs),
    }
    out
}
