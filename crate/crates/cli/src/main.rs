//! `biorder`: command-line front end for knot quandle biorder analysis.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use biorder::coloring::candidate_moduli;
use biorder::presentation::catalog_names;
use biorder::solver::analyze_self_checked;
use biorder::{
    analyze_all, backtracking_orders, catalog, catalog_lookup, derive_betweenness,
    distinctness_certificate_with, knot_determinant, parse_presentations, render_report,
    render_reports, render_sweep, solve_colorings_mod, sweep_catalog, AnalysisOptions,
    DistinctnessOptions, Error, Format, KnotPresentation, RenderOptions,
};

#[derive(Debug, Parser)]
#[command(name = "biorder", version, about = "Generator-level biorderability analysis for knot quandles")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Largest small modulus tried when certifying generator distinctness.
    #[arg(long, global = true, default_value_t = 64)]
    max_modulus: u64,

    /// Cross-check backtracking against exhaustive enumeration; exit 3 on disagreement.
    #[arg(long, global = true)]
    self_check: bool,

    /// Print the diamond glyph between chain elements instead of `<>`.
    #[arg(long, global = true)]
    unicode: bool,

    /// Extra diagnostics on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full analysis: constraints, distinctness certificate, orders, verdict.
    Analyze {
        /// Catalog name (e.g. 6_3), path to a .kq file, or `-` for stdin.
        input: Option<String>,
    },
    /// Summary over all cataloged knots.
    Sweep,
    /// Compatible generator orders.
    Orders { input: Option<String> },
    /// Knot determinant.
    Det { input: Option<String> },
    /// Fox colorings mod N.
    Colorings {
        input: Option<String>,
        #[arg(long = "mod", value_name = "N")]
        modulus: u64,
    },
    /// Pairwise distinctness certificate for the generators.
    Distinct { input: Option<String> },
    /// Write the built-in catalog in the presentation file format.
    ExportCatalog,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Markdown,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Json => Format::Json,
        }
    }
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

/// Catalog name, `-`/absent for stdin, otherwise a file path.
fn resolve_input(input: Option<&str>) -> Result<Vec<KnotPresentation>, Failure> {
    match input {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            parse_nonempty(&text, "stdin")
        }
        Some(name) if catalog_names().contains(&name) => Ok(vec![catalog_lookup(name)?]),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                let hint = if path.contains(['/', '.']) {
                    String::new()
                } else {
                    format!(" (not a catalog name either; known: {})", catalog_names().join(", "))
                };
                Failure::Input(format!("{path}: {e}{hint}"))
            })?;
            parse_nonempty(&text, path)
        }
    }
}

fn parse_nonempty(text: &str, source: &str) -> Result<Vec<KnotPresentation>, Failure> {
    let ps = parse_presentations(text).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
    if ps.is_empty() {
        return Err(Failure::Input(format!("{source}: no `knot` block found")));
    }
    Ok(ps)
}

struct App {
    format: Format,
    render: RenderOptions,
    analysis: AnalysisOptions,
    verbose: u8,
}

impl App {
    fn describe(&self, p: &KnotPresentation) {
        if self.verbose == 0 {
            return;
        }
        let cs = derive_betweenness(p);
        let sep = self.render.separator();
        eprintln!("{}: {} generators, {} relations", p.name(), p.generator_count(), p.relations().len());
        for (c, origin) in cs.constraints().iter().zip(cs.origins()) {
            let rels: Vec<String> = origin.iter().map(|i| p.relation_string(&p.relations()[*i])).collect();
            eprintln!("  {}  from {}", c.render(p, sep), rels.join(", "));
        }
        if self.verbose > 1 {
            let moduli = candidate_moduli(p, &DistinctnessOptions { max_modulus: self.analysis.max_modulus });
            eprintln!("  candidate moduli: {moduli:?}");
        }
    }

    fn analyze(&self, ps: &[KnotPresentation]) -> Result<String, Failure> {
        ps.iter().for_each(|p| self.describe(p));
        let reports = analyze_all(ps, &self.analysis)?;
        Ok(match reports.as_slice() {
            [one] => render_report(one, self.format, &self.render),
            many => render_reports(many, self.format, &self.render),
        })
    }

    fn sweep(&self) -> Result<String, Failure> {
        if self.verbose > 0 {
            catalog().iter().for_each(|p| self.describe(p));
        }
        let reports = sweep_catalog(&self.analysis)?;
        Ok(render_sweep(&reports, self.format))
    }

    fn orders(&self, ps: &[KnotPresentation]) -> Result<String, Failure> {
        let mut out = String::new();
        let mut all = Vec::new();
        for p in ps {
            self.describe(p);
            let chains = if self.analysis.self_check {
                analyze_self_checked(p, None)?.chains
            } else {
                backtracking_orders(&derive_betweenness(p), p.generator_count())
            };
            match self.format {
                Format::Json => all.push(json!({
                    "knot": p.name(),
                    "chains": chains.iter().map(|c| c.labels(p)).collect::<Vec<_>>(),
                })),
                Format::Text | Format::Markdown => {
                    if ps.len() > 1 {
                        out.push_str(&format!("{}:\n", p.name()));
                    }
                    let bullet = if self.format == Format::Markdown { "- " } else { "" };
                    for c in &chains {
                        out.push_str(&format!("{bullet}{}\n", c.render(p, self.render.separator())));
                    }
                }
            }
        }
        if self.format == Format::Json {
            out = json_doc(&all);
        }
        Ok(out)
    }

    fn det(&self, ps: &[KnotPresentation]) -> Result<String, Failure> {
        let mut rows = Vec::new();
        for p in ps {
            rows.push((p.name(), knot_determinant(p)?));
        }
        Ok(match (self.format, rows.as_slice()) {
            (Format::Json, _) => json_doc(
                &rows
                    .iter()
                    .map(|(k, d)| json!({ "knot": k, "determinant": d.to_string().parse::<serde_json::Number>().unwrap() }))
                    .collect::<Vec<_>>(),
            ),
            (_, [(_, d)]) => format!("{d}\n"),
            _ => rows.iter().map(|(k, d)| format!("{k}: {d}\n")).collect(),
        })
    }

    fn colorings(&self, ps: &[KnotPresentation], n: u64) -> Result<String, Failure> {
        let mut out = String::new();
        let mut all = Vec::new();
        for p in ps {
            let space = solve_colorings_mod(p, n)?;
            if self.format == Format::Json {
                all.push(json!({
                    "knot": p.name(),
                    "modulus": n,
                    "count": space.count.to_string(),
                    "complete": space.complete,
                    "basis": space.basis.iter().map(|b| json!({"order": b.order, "values": b.coloring.values})).collect::<Vec<_>>(),
                    "colorings": space.colorings.iter().map(|c| &c.values).collect::<Vec<_>>(),
                }));
                continue;
            }
            out.push_str(&format!(
                "{} mod {n}: {} colorings ({})\n",
                p.name(),
                space.count,
                if space.complete { "complete" } else { "sample" }
            ));
            out.push_str(&format!("generators: {}\n", p.labels().join(" ")));
            for b in &space.basis {
                out.push_str(&format!("basis order {}: {}\n", b.order, b.coloring));
            }
            for c in &space.colorings {
                out.push_str(&format!("{c}\n"));
            }
        }
        if self.format == Format::Json {
            out = json_doc(&all);
        }
        Ok(out)
    }

    fn distinct(&self, ps: &[KnotPresentation]) -> Result<String, Failure> {
        let opts = DistinctnessOptions {
            max_modulus: self.analysis.max_modulus,
        };
        let mut out = String::new();
        let mut all = Vec::new();
        for p in ps {
            let cert = distinctness_certificate_with(p, &opts);
            if self.format == Format::Json {
                all.push(json!({
                    "knot": p.name(),
                    "certified": cert.is_certified(),
                    "witness_moduli": cert.witness_moduli(),
                    "colorings": cert.colorings().iter().map(|c| json!({"modulus": c.modulus, "values": c.values})).collect::<Vec<_>>(),
                    "pairs": cert.pairs().iter().map(|w| json!({
                        "pair": [p.label(w.first), p.label(w.second)],
                        "witness": w.witness,
                    })).collect::<Vec<_>>(),
                }));
                continue;
            }
            out.push_str(&format!("{}: {}\n", p.name(), cert.summary()));
            for (i, c) in cert.colorings().iter().enumerate() {
                out.push_str(&format!("  coloring {} mod {}: {}\n", i + 1, c.modulus, c.render(p)));
            }
            for w in cert.pairs() {
                let what = match w.witness {
                    Some(i) => format!("coloring {}", i + 1),
                    None => "unwitnessed".to_string(),
                };
                out.push_str(&format!("  {} {}: {what}\n", p.label(w.first), p.label(w.second)));
            }
        }
        if self.format == Format::Json {
            out = json_doc(&all);
        }
        Ok(out)
    }
}

fn json_doc(values: &[serde_json::Value]) -> String {
    let doc = match values {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    };
    doc.expect("json serializes") + "\n"
}

fn export_catalog() -> String {
    let blocks: Vec<String> = catalog().iter().map(KnotPresentation::to_kq).collect();
    blocks.join("\n")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let app = App {
        format: cli.format.into(),
        render: RenderOptions {
            unicode: cli.unicode,
        },
        analysis: AnalysisOptions {
            max_modulus: cli.max_modulus,
            self_check: cli.self_check,
        },
        verbose: cli.verbose,
    };
    match cli.command {
        Command::Analyze { input } => app.analyze(&resolve_input(input.as_deref())?),
        Command::Sweep => app.sweep(),
        Command::Orders { input } => app.orders(&resolve_input(input.as_deref())?),
        Command::Det { input } => app.det(&resolve_input(input.as_deref())?),
        Command::Colorings { input, modulus } => {
            app.colorings(&resolve_input(input.as_deref())?, modulus)
        }
        Command::Distinct { input } => app.distinct(&resolve_input(input.as_deref())?),
        Command::ExportCatalog => Ok(export_catalog()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
