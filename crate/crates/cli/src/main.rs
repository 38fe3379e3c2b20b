//! Command-line front end: parsing, reduction, equivalence, the maps
//! between the groups, invariants, block normalization, strand-deletion
//! profiles, Brunnian checks, and diagram conversion.
//!
//! Exit codes: 0 on success (an `unknown` verdict is a success), 1 on
//! computation errors (bad words, wrong contexts, odd dot counts), 2 on
//! usage errors.

mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use freebraid::diagram::{diagram_to_word, parse_diagram, Coloring};
use freebraid::grammar::parse;
use freebraid::invariants::{brunnian_check, deletion_profile, fingerprint};
use freebraid::maps;
use freebraid::normal::{block_form, block_form_witness};
use freebraid::rewrite::{bounded_equiv, bounded_trivial, EquivVerdict, SearchBounds};
use freebraid::word::{GroupContext, GroupKind, Word};
use report::Report;

#[derive(Parser)]
#[command(
    name = "freebraid",
    version,
    about = "Words, maps, and invariants for free braid groups with parity and dots"
)]
struct Cli {
    /// Output format: human-readable text or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Length cap for the equivalence search; defaults to the longer
    /// input plus 6.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// State budget for the equivalence search.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_states: usize,
    /// Seed echoed into reports; reserved for randomized workloads.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Plain,
    Parity,
    Dotted,
    #[value(name = "quotient-forbidden", alias = "quotient")]
    QuotientForbidden,
}

impl From<Kind> for GroupKind {
    fn from(kind: Kind) -> GroupKind {
        match kind {
            Kind::Plain => GroupKind::Plain,
            Kind::Parity => GroupKind::Parity,
            Kind::Dotted => GroupKind::Dotted,
            Kind::QuotientForbidden => GroupKind::QuotientForbidden,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cancel adjacent equal letters until none remain.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Plain)]
        kind: Kind,
        word: String,
    },
    /// Decide whether two words are equal in their group, within bounds.
    Equiv {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Plain)]
        kind: Kind,
        left: String,
        right: String,
    },
    /// Decide whether a word is the identity, within bounds.
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Plain)]
        kind: Kind,
        word: String,
    },
    /// Apply a named map: i, p, phi, chi, psi, psi:<m>, omega, forget.
    Map {
        name: String,
        /// Strand count of the source context.
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Print the invariant fingerprint of a word.
    Invariants {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Plain)]
        kind: Kind,
        word: String,
    },
    /// Block normal form of an even-dot word.
    Normalize {
        #[arg(long)]
        n: usize,
        word: String,
        /// Also derive the form by literal rule applications and emit
        /// the steps.
        #[arg(long)]
        witness: bool,
    },
    /// Strand-deletion profile of a plain word.
    Profile {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Brunnian candidacy plus nontriviality certificate.
    Brunnian {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Convert a diagram ("braid n=<n> <events>") to a plain word.
    DiagramToWord {
        diagram: String,
        /// Component numbers by initial position, e.g. "2 1 3";
        /// defaults to the identity coloring.
        #[arg(long)]
        coloring: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds_json = json!({
        "max_len": cli.max_len,
        "max_states": cli.max_states,
        "seed": cli.seed,
    });
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let timing_ms = start.elapsed().as_secs_f64() * 1e3;
            match cli.format {
                Format::Text => {
                    for line in &report.lines {
                        println!("{line}");
                    }
                }
                Format::Structured => {
                    println!("{}", report.to_json(&bounds_json, timing_ms));
                }
            }
            ExitCode::SUCCESS
        }
        Err(error) => {
            match cli.format {
                Format::Text => eprintln!("error: {error}"),
                Format::Structured => {
                    println!("{}", json!({ "error": error.to_string() }));
                }
            }
            ExitCode::from(1)
        }
    }
}

fn bounds(cli: &Cli) -> SearchBounds {
    SearchBounds {
        max_len: cli.max_len,
        max_states: cli.max_states,
    }
}

fn context_of(n: usize, kind: GroupKind) -> freebraid::Result<GroupContext> {
    if n == 0 {
        return Err(freebraid::Error::Syntax {
            position: 0,
            expected: "strand count >= 1".to_string(),
        });
    }
    Ok(GroupContext::new(n, kind))
}

fn verdict_json(verdict: &EquivVerdict) -> serde_json::Value {
    match verdict {
        EquivVerdict::Equivalent(witness) => json!({
            "witness": report::witness_json(witness),
        }),
        EquivVerdict::Distinct(component) => json!({
            "separating": component,
        }),
        EquivVerdict::Unknown => serde_json::Value::Null,
    }
}

fn run(cli: &Cli) -> freebraid::Result<Report> {
    match &cli.command {
        Command::Reduce { n, kind, word } => {
            let context = context_of(*n, (*kind).into())?;
            let w = parse(word, context)?;
            let reduced = w.involutive_reduce();
            let mut report = Report::new("reduce");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            report.outputs = json!({ "word": reduced.to_string() });
            report.lines = vec![reduced.to_string()];
            Ok(report)
        }
        Command::Equiv {
            n,
            kind,
            left,
            right,
        } => {
            let context = context_of(*n, (*kind).into())?;
            let u = parse(left, context)?;
            let v = parse(right, context)?;
            let verdict = bounded_equiv(&u, &v, &bounds(cli))?;
            let mut report = Report::new("equiv");
            report.context = Some(context);
            report.inputs = vec![left.clone(), right.clone()];
            report.verdict = Some(verdict.name().to_string());
            report.outputs = verdict_json(&verdict);
            report.lines = vec![match &verdict {
                EquivVerdict::Equivalent(witness) => {
                    format!("verdict: equivalent ({} witness steps)", witness.len())
                }
                EquivVerdict::Distinct(component) => {
                    format!("verdict: distinct (separated by {component})")
                }
                EquivVerdict::Unknown => "verdict: unknown (undecided within bounds)".to_string(),
            }];
            Ok(report)
        }
        Command::Trivial { n, kind, word } => {
            let context = context_of(*n, (*kind).into())?;
            let w = parse(word, context)?;
            let verdict = bounded_trivial(&w, &bounds(cli))?;
            let mut report = Report::new("trivial");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            report.verdict = Some(verdict.name().to_string());
            report.outputs = verdict_json(&verdict);
            report.lines = vec![match &verdict {
                EquivVerdict::Equivalent(witness) => {
                    format!("verdict: trivial ({} witness steps)", witness.len())
                }
                EquivVerdict::Distinct(component) => {
                    format!("verdict: nontrivial (separated by {component})")
                }
                EquivVerdict::Unknown => "verdict: unknown (undecided within bounds)".to_string(),
            }];
            Ok(report)
        }
        Command::Map { name, n, word } => {
            let (source, image) = apply_map(name, *n, word)?;
            let mut report = Report::new("map");
            report.context = Some(source);
            report.inputs = vec![name.clone(), word.clone()];
            report.outputs = json!({
                "word": image.to_string(),
                "context": report::context_json(image.context()),
            });
            report.lines = vec![
                format!("target: {}", image.context()),
                image.to_string(),
            ];
            Ok(report)
        }
        Command::Invariants { n, kind, word } => {
            let context = context_of(*n, (*kind).into())?;
            let w = parse(word, context)?;
            let fp = fingerprint(&w);
            let mut report = Report::new("invariants");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            report.outputs = report::fingerprint_json(&fp);
            report.lines = vec![fp.to_string()];
            Ok(report)
        }
        Command::Normalize { n, word, witness } => {
            let context = context_of(*n, GroupKind::Dotted)?;
            let w = parse(word, context)?;
            let mut report = Report::new("normalize");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            if *witness {
                let (blocks, steps) = block_form_witness(&w)?;
                report.outputs = json!({
                    "blocks": report::blocks_json(&blocks),
                    "flattened": blocks.flatten().to_string(),
                    "witness": report::witness_json(&steps),
                });
                report.lines = vec![
                    format!("blocks: {blocks}"),
                    format!("flattened: {}", blocks.flatten()),
                    format!("witness steps: {}", steps.len()),
                ];
            } else {
                let blocks = block_form(&w)?;
                report.outputs = json!({
                    "blocks": report::blocks_json(&blocks),
                    "flattened": blocks.flatten().to_string(),
                });
                report.lines = vec![
                    format!("blocks: {blocks}"),
                    format!("flattened: {}", blocks.flatten()),
                ];
            }
            Ok(report)
        }
        Command::Profile { n, word } => {
            let context = context_of(*n, GroupKind::Plain)?;
            let w = parse(word, context)?;
            let profile = deletion_profile(&w, &bounds(cli))?;
            let mut entries = serde_json::Map::new();
            let mut lines = Vec::new();
            for (m, entry) in profile.entries() {
                entries.insert(
                    m.to_string(),
                    json!({
                        "in_even_subgroup": entry.in_even_subgroup,
                        "parity_image": entry.parity_image.as_ref().map(|w| w.to_string()),
                        "verdict": entry.verdict.name(),
                    }),
                );
                lines.push(match &entry.parity_image {
                    Some(image) => format!(
                        "strand {m}: reading \"{image}\" is {}",
                        entry.verdict.name()
                    ),
                    None => format!("strand {m}: image has odd dot counts"),
                });
            }
            let mut report = Report::new("profile");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            report.outputs = json!({ "deletions": serde_json::Value::Object(entries) });
            report.lines = lines;
            Ok(report)
        }
        Command::Brunnian { n, word } => {
            let context = context_of(*n, GroupKind::Plain)?;
            let w = parse(word, context)?;
            let result = brunnian_check(&w, &bounds(cli))?;
            let mut deletions = serde_json::Map::new();
            let mut lines = Vec::new();
            for (m, verdict) in &result.deletions {
                deletions.insert(m.to_string(), json!(verdict.name()));
                lines.push(format!("strand {m} deletion: {}", verdict.name()));
            }
            lines.push(format!("brunnian: {}", result.candidate.name()));
            match &result.certificate {
                Some(certificate) => lines.push(format!(
                    "nontrivial: certified through strand {} ({})",
                    certificate.strand, certificate.separating
                )),
                None => lines.push("nontrivial: no certificate".to_string()),
            }
            let mut report = Report::new("brunnian");
            report.context = Some(context);
            report.inputs = vec![word.clone()];
            report.verdict = Some(result.candidate.name().to_string());
            report.outputs = json!({
                "deletions": serde_json::Value::Object(deletions),
                "candidate": result.candidate.name(),
                "certificate": result.certificate.as_ref().map(report::certificate_json),
            });
            report.lines = lines;
            Ok(report)
        }
        Command::DiagramToWord { diagram, coloring } => {
            let d = parse_diagram(diagram)?;
            let coloring = match coloring {
                Some(text) => {
                    let colors = parse_coloring(text)?;
                    Coloring::new(colors)?
                }
                None => Coloring::identity(d.n()),
            };
            let w = diagram_to_word(&d, &coloring)?;
            let mut report = Report::new("diagram-to-word");
            report.context = Some(w.context());
            report.inputs = vec![diagram.clone()];
            report.outputs = json!({ "word": w.to_string() });
            report.lines = vec![w.to_string()];
            Ok(report)
        }
    }
}

fn parse_coloring(text: &str) -> freebraid::Result<Vec<usize>> {
    text.split_whitespace()
        .map(|token| {
            token.parse().map_err(|_| freebraid::Error::InvalidColoring(
                format!("bad component number {token:?}")
            ))
        })
        .collect()
}

fn apply_map(name: &str, n: usize, word: &str) -> freebraid::Result<(GroupContext, Word)> {
    let plain = context_of(n, GroupKind::Plain)?;
    let parity = context_of(n, GroupKind::Parity)?;
    let dotted = context_of(n, GroupKind::Dotted)?;
    let (source, image) = match name {
        "i" => (plain, maps::embed_parity(&parse(word, plain)?)?),
        "p" => (parity, maps::project_parity(&parse(word, parity)?)?),
        "phi" => (parity, maps::parity_to_dots(&parse(word, parity)?)?),
        "chi" => (dotted, maps::dots_to_parity(&parse(word, dotted)?)?),
        "psi" => (plain, maps::delete_last_strand(&parse(word, plain)?)?),
        "omega" => (dotted, maps::dots_to_strand(&parse(word, dotted)?)?),
        "forget" => (dotted, maps::forget_dots(&parse(word, dotted)?)?),
        other => match other.strip_prefix("psi:").and_then(|m| m.parse::<usize>().ok()) {
            Some(m) => (plain, maps::delete_strand(&parse(word, plain)?, m)?),
            None => {
                return Err(freebraid::Error::Syntax {
                    position: 0,
                    expected: "map name i, p, phi, chi, psi, psi:<m>, omega or forget"
                        .to_string(),
                })
            }
        },
    };
    Ok((source, image))
}
