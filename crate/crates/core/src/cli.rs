//! The `partalg` command line.
//!
//! Arguments are parsed by clap into a raw form and then validated into a
//! [`Command`], so malformed diagram text or out-of-range sizes are usage
//! errors (exit 2) naming the flag. Library failures exit 1 and failed
//! verifications exit 1; everything else exits 0. With `--json` every result
//! is one JSON document per line.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::centralizer::{orbit_count, verify_schur_weyl, Budget};
use crate::diagram::{check_closure, enumerate_diagrams, AlgebraElement, Diagram, DiagramFilter};
use crate::error::{Error, Result};
use crate::poly::{parse_rational, rational_to_string};
use crate::rep::{entry, matrix};
use crate::seqmodel::{
    act_on_invariants, invariant_dim, monomial_rank, monomial_vector, verify_classification,
    GeometricWeights, NormKind, NormProfile, DEFAULT_TRUNCATIONS,
};
use crate::setpart::{bell_number, count_partitions, SetPartition, Tuple};
use crate::text::{parse_diagram, parse_partition};

/// Largest `k` for diagram enumeration (`B(2k)` diagrams).
const MAX_ENUM_K: usize = 5;
/// Largest `k` for pairwise closure checks.
const MAX_CLOSURE_K: usize = 3;
/// Largest tuple space `N^k` for norm and invariant computations.
const MAX_TUPLES: usize = 1 << 20;
/// Largest ground set for partition counting.
const MAX_COUNT_G: usize = 1000;

#[derive(Parser, Debug)]
#[command(
    name = "partalg",
    version,
    about = "Exact computations in partition algebras"
)]
struct Cli {
    /// Emit one JSON document per result line.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Enumerate, multiply and classify partition diagrams.
    #[command(subcommand)]
    Diagrams(DiagramsCmd),
    /// Matrices of diagrams acting on tensor space.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Machine checks of the centralizer and classification results.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Truncated operator norms.
    #[command(subcommand)]
    Norms(NormsCmd),
    /// Symmetric invariants and the diagram action on them.
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Bell and Stirling counts.
    #[command(subcommand)]
    Count(CountCmd),
}

#[derive(Subcommand, Debug)]
enum DiagramsCmd {
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "all")]
        filter: String,
    },
    Multiply {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Classify one diagram, or every k-diagram when --diagram is absent.
    Classify {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        diagram: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    Matrix {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
    },
    Entry {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        diagram: String,
        /// Output tuple, e.g. `1,2`.
        #[arg(long)]
        top: String,
        /// Input tuple.
        #[arg(long)]
        bottom: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    SchurWeyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Closure {
        #[arg(long)]
        k: usize,
        /// One subalgebra; all three when absent.
        #[arg(long)]
        filter: Option<String>,
    },
    Classification {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        trunc: TruncArgs,
        #[arg(long)]
        ratio: Option<String>,
    },
}

#[derive(Args, Debug)]
struct TruncArgs {
    /// Truncation sizes, comma separated and increasing.
    #[arg(long)]
    trunc: Option<String>,
}

#[derive(Subcommand, Debug)]
enum NormsCmd {
    Lp {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        diagram: String,
        #[command(flatten)]
        trunc: TruncArgs,
        #[arg(long)]
        ratio: Option<String>,
    },
    Linf {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        diagram: String,
        #[command(flatten)]
        trunc: TruncArgs,
    },
}

#[derive(Subcommand, Debug)]
enum InvariantsCmd {
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Vector {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: String,
    },
    Act {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        pi: String,
    },
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    Bell {
        #[arg(long)]
        g: usize,
    },
    Partitions {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        max_blocks: Option<usize>,
    },
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Enumerate {
        k: usize,
        filter: DiagramFilter,
    },
    Multiply {
        lhs: Diagram,
        rhs: Diagram,
    },
    Classify {
        diagrams: Vec<Diagram>,
    },
    RepMatrix {
        diagram: Diagram,
        n: usize,
    },
    RepEntry {
        diagram: Diagram,
        top: Tuple,
        bottom: Tuple,
    },
    SchurWeyl {
        n: usize,
        k: usize,
    },
    Closure {
        k: usize,
        filters: Vec<DiagramFilter>,
    },
    Classification {
        k: usize,
        weights: GeometricWeights,
        small: usize,
        large: usize,
    },
    NormsLp {
        diagram: Diagram,
        weights: GeometricWeights,
        truncations: Vec<usize>,
    },
    NormsLinf {
        diagram: Diagram,
        truncations: Vec<usize>,
    },
    InvariantsDim {
        n: usize,
        k: usize,
    },
    InvariantsVector {
        pi: SetPartition,
        n: usize,
    },
    InvariantsAct {
        diagram: Diagram,
        pi: SetPartition,
        n: usize,
    },
    CountBell {
        g: usize,
    },
    CountPartitions {
        g: usize,
        max_blocks: Option<usize>,
    },
}

/// A parsed command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub command: Command,
    pub json: bool,
}

/// Why a command line was rejected.
#[derive(Debug)]
pub enum UsageError {
    /// clap's own error, which also covers `--help` and `--version`.
    Clap(clap::Error),
    Flag {
        flag: &'static str,
        message: String,
    },
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Clap(e) => write!(f, "{e}"),
            UsageError::Flag { flag, message } => write!(f, "error: invalid --{flag}: {message}"),
        }
    }
}

fn bad(flag: &'static str, message: impl ToString) -> UsageError {
    UsageError::Flag {
        flag,
        message: message.to_string(),
    }
}

fn diagram_arg(
    flag: &'static str,
    text: &str,
    k: Option<usize>,
) -> std::result::Result<Diagram, UsageError> {
    let d = parse_diagram(text, k).map_err(|e| bad(flag, e))?;
    if d.k() == 0 {
        return Err(bad(flag, "empty diagram"));
    }
    Ok(d)
}

fn partition_arg(text: &str, k: Option<usize>) -> std::result::Result<SetPartition, UsageError> {
    parse_partition(text, k).map_err(|e| bad("pi", e))
}

fn tuple_arg(flag: &'static str, text: &str) -> std::result::Result<Tuple, UsageError> {
    let entries = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad(flag, format!("bad entry {t:?}")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Tuple::new(entries).map_err(|e| bad(flag, e))
}

fn filter_arg(text: &str) -> std::result::Result<DiagramFilter, UsageError> {
    text.parse().map_err(|e| bad("filter", e))
}

fn ratio_arg(text: Option<&str>) -> std::result::Result<GeometricWeights, UsageError> {
    match text {
        None => Ok(GeometricWeights::default()),
        Some(t) => {
            let r = parse_rational(t).map_err(|e| bad("ratio", e))?;
            GeometricWeights::new(r).map_err(|e| bad("ratio", e))
        }
    }
}

fn trunc_arg(args: &TruncArgs) -> std::result::Result<Vec<usize>, UsageError> {
    let Some(text) = &args.trunc else {
        return Ok(vec![DEFAULT_TRUNCATIONS.0, DEFAULT_TRUNCATIONS.1]);
    };
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad("trunc", format!("bad size {t:?}")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if values.is_empty() || values.contains(&0) {
        return Err(bad("trunc", "sizes must be at least 1"));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("trunc", "sizes must be strictly increasing"));
    }
    Ok(values)
}

fn tuples_within(flag: &'static str, n: usize, k: usize) -> std::result::Result<(), UsageError> {
    let size = n.checked_pow(k as u32).filter(|&s| s <= MAX_TUPLES);
    if size.is_none() {
        return Err(bad(
            flag,
            format!("{n}^{k} tuples exceeds the limit of {MAX_TUPLES}"),
        ));
    }
    Ok(())
}

fn at_most(flag: &'static str, value: usize, limit: usize) -> std::result::Result<(), UsageError> {
    if value > limit {
        return Err(bad(flag, format!("{value} exceeds the limit of {limit}")));
    }
    Ok(())
}

fn positive(flag: &'static str, value: usize) -> std::result::Result<(), UsageError> {
    if value == 0 {
        return Err(bad(flag, "must be at least 1"));
    }
    Ok(())
}

/// Parses and validates a full argument vector (including the program name).
pub fn parse<I, T>(args: I) -> std::result::Result<Invocation, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(UsageError::Clap)?;
    let command = match cli.group {
        Group::Diagrams(DiagramsCmd::Enumerate { k, filter }) => {
            positive("k", k)?;
            at_most("k", k, MAX_ENUM_K)?;
            Command::Enumerate {
                k,
                filter: filter_arg(&filter)?,
            }
        }
        Group::Diagrams(DiagramsCmd::Multiply { k, lhs, rhs }) => {
            let lhs = diagram_arg("lhs", &lhs, k)?;
            let rhs = diagram_arg("rhs", &rhs, k.or(Some(lhs.k())))?;
            Command::Multiply { lhs, rhs }
        }
        Group::Diagrams(DiagramsCmd::Classify { k, diagram }) => match (diagram, k) {
            (Some(text), k) => Command::Classify {
                diagrams: vec![diagram_arg("diagram", &text, k)?],
            },
            (None, Some(k)) => {
                positive("k", k)?;
                at_most("k", k, 3)?;
                Command::Classify {
                    diagrams: enumerate_diagrams(k, DiagramFilter::All).collect(),
                }
            }
            (None, None) => return Err(bad("diagram", "give --diagram or --k")),
        },
        Group::Rep(RepCmd::Matrix { k, n, diagram }) => {
            let diagram = diagram_arg("diagram", &diagram, k)?;
            positive("n", n)?;
            let dim = n.checked_pow(diagram.k() as u32).unwrap_or(usize::MAX);
            at_most("n", dim, Budget::default().max_span_dim)?;
            Command::RepMatrix { diagram, n }
        }
        Group::Rep(RepCmd::Entry {
            k,
            diagram,
            top,
            bottom,
        }) => {
            let diagram = diagram_arg("diagram", &diagram, k)?;
            let top = tuple_arg("top", &top)?;
            let bottom = tuple_arg("bottom", &bottom)?;
            if top.len() != diagram.k() {
                return Err(bad("top", format!("expected {} entries", diagram.k())));
            }
            if bottom.len() != diagram.k() {
                return Err(bad("bottom", format!("expected {} entries", diagram.k())));
            }
            Command::RepEntry {
                diagram,
                top,
                bottom,
            }
        }
        Group::Verify(VerifyCmd::SchurWeyl { n, k }) => {
            positive("n", n)?;
            positive("k", k)?;
            Command::SchurWeyl { n, k }
        }
        Group::Verify(VerifyCmd::Closure { k, filter }) => {
            positive("k", k)?;
            at_most("k", k, MAX_CLOSURE_K)?;
            let filters = match filter {
                Some(f) => vec![filter_arg(&f)?],
                None => vec![
                    DiagramFilter::Uniform,
                    DiagramFilter::TopPropagating,
                    DiagramFilter::BottomPropagating,
                ],
            };
            Command::Closure { k, filters }
        }
        Group::Verify(VerifyCmd::Classification { k, trunc, ratio }) => {
            positive("k", k)?;
            at_most("k", k, 3)?;
            let t = trunc_arg(&trunc)?;
            let (small, large) = match t.as_slice() {
                [a, b] => (*a, *b),
                _ => return Err(bad("trunc", "give exactly two sizes")),
            };
            tuples_within("trunc", 2 * large, k)?;
            Command::Classification {
                k,
                weights: ratio_arg(ratio.as_deref())?,
                small,
                large,
            }
        }
        Group::Norms(NormsCmd::Lp {
            k,
            diagram,
            trunc,
            ratio,
        }) => {
            let diagram = diagram_arg("diagram", &diagram, k)?;
            let truncations = trunc_arg(&trunc)?;
            let last = *truncations.last().expect("nonempty");
            tuples_within("trunc", 2 * last, diagram.k())?;
            Command::NormsLp {
                diagram,
                weights: ratio_arg(ratio.as_deref())?,
                truncations,
            }
        }
        Group::Norms(NormsCmd::Linf { k, diagram, trunc }) => {
            let diagram = diagram_arg("diagram", &diagram, k)?;
            let truncations = trunc_arg(&trunc)?;
            let last = *truncations.last().expect("nonempty");
            tuples_within("trunc", 2 * last, diagram.k())?;
            Command::NormsLinf {
                diagram,
                truncations,
            }
        }
        Group::Invariants(InvariantsCmd::Dim { n, k }) => {
            positive("n", n)?;
            positive("k", k)?;
            at_most("k", k, MAX_COUNT_G)?;
            Command::InvariantsDim { n, k }
        }
        Group::Invariants(InvariantsCmd::Vector { k, n, pi }) => {
            let pi = partition_arg(&pi, k)?;
            positive("n", n)?;
            tuples_within("n", n, pi.ground_size())?;
            Command::InvariantsVector { pi, n }
        }
        Group::Invariants(InvariantsCmd::Act { k, n, diagram, pi }) => {
            let diagram = diagram_arg("diagram", &diagram, k)?;
            let pi = partition_arg(&pi, Some(diagram.k()))?;
            if n < diagram.k() {
                return Err(bad("n", format!("must be at least k = {}", diagram.k())));
            }
            tuples_within("n", n, 2 * diagram.k())?;
            Command::InvariantsAct { diagram, pi, n }
        }
        Group::Count(CountCmd::Bell { g }) => {
            at_most("g", g, MAX_COUNT_G)?;
            Command::CountBell { g }
        }
        Group::Count(CountCmd::Partitions { g, max_blocks }) => {
            at_most("g", g, MAX_COUNT_G)?;
            Command::CountPartitions { g, max_blocks }
        }
    };
    Ok(Invocation {
        command,
        json: cli.json,
    })
}

/// Result lines of one command plus whether its verifications passed.
struct Output<'a, W: Write> {
    out: &'a mut W,
    json: bool,
    ok: bool,
}

impl<W: Write> Output<'_, W> {
    fn emit<T: Serialize>(&mut self, value: &T, human: impl FnOnce() -> String) -> Result<()> {
        let line = if self.json {
            serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?
        } else {
            human()
        };
        writeln!(self.out, "{line}").map_err(|e| Error::Internal(e.to_string()))
    }
}

fn q(v: &BigRational) -> String {
    rational_to_string(v)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs a validated command. Returns whether all verifications passed.
pub fn execute<W: Write>(inv: &Invocation, out: &mut W) -> Result<bool> {
    let mut o = Output {
        out,
        json: inv.json,
        ok: true,
    };
    match &inv.command {
        Command::Enumerate { k, filter } => {
            for d in enumerate_diagrams(*k, *filter) {
                o.emit(&json!({ "diagram": d.to_string() }), || d.to_string())?;
            }
        }
        Command::Multiply { lhs, rhs } => {
            let product = AlgebraElement::from_diagram(lhs.clone())
                .multiply(&AlgebraElement::from_diagram(rhs.clone()))?;
            for (record, (d, c)) in product.to_records().iter().zip(product.terms()) {
                o.emit(record, || format!("({c}) {d}"))?;
            }
        }
        Command::Classify { diagrams } => {
            if !o.json {
                writeln!(o.out, "diagram\tuniform\ttop\tbottom")
                    .map_err(|e| Error::Internal(e.to_string()))?;
            }
            for d in diagrams {
                let value = json!({
                    "diagram": d.to_string(),
                    "uniform": d.is_uniform(),
                    "top_propagating": d.is_top_propagating(),
                    "bottom_propagating": d.is_bottom_propagating(),
                });
                o.emit(&value, || {
                    format!(
                        "{d}\t{}\t{}\t{}",
                        yes_no(d.is_uniform()),
                        yes_no(d.is_top_propagating()),
                        yes_no(d.is_bottom_propagating())
                    )
                })?;
            }
        }
        Command::RepMatrix { diagram, n } => {
            let m = matrix(diagram, *n);
            o.emit(&m.to_record(), || m.to_string().trim_end().to_string())?;
        }
        Command::RepEntry {
            diagram,
            top,
            bottom,
        } => {
            let e = entry(diagram, top, bottom)?;
            let value = json!({
                "diagram": diagram.to_string(),
                "top": top.entries(),
                "bottom": bottom.entries(),
                "entry": e,
            });
            o.emit(&value, || e.to_string())?;
        }
        Command::SchurWeyl { n, k } => {
            let r = verify_schur_weyl(*n, *k, &Budget::default())?;
            o.ok = r.all_pass();
            o.emit(&r, || {
                let orbit = r
                    .orbit_enumeration_dim
                    .map_or_else(|| "-".to_string(), |c| c.to_string());
                [
                    format!("(n,k) = ({}, {})", r.n, r.k),
                    format!("  centralizer dimension      {}", r.centralizer_dim),
                    format!("  by orbit enumeration       {orbit}"),
                    format!("  diagrams                   {}", r.diagram_count),
                    format!("  diagram span rank          {}", r.diagram_span_rank),
                    format!("  commutant of S_n           {}", r.commutant_of_perms_dim),
                    format!("  permutation span           {}", r.perm_span_dim),
                    format!(
                        "  commutant of diagrams      {}",
                        r.commutant_of_diagrams_dim
                    ),
                    format!(
                        "  diagrams span centralizer  {}",
                        r.verdict_diagrams_generate_centralizer
                    ),
                    format!(
                        "  double commutant holds     {}",
                        r.verdict_perms_generate_centralizer
                    ),
                ]
                .join("\n")
            })?;
        }
        Command::Closure { k, filters } => {
            for &f in filters {
                let r = check_closure(*k, f)?;
                o.ok &= r.passed();
                o.emit(&r, || {
                    format!(
                        "{:<8} k={} pairs={} with_middle={} escaped={} {}",
                        r.filter,
                        r.k,
                        r.pairs,
                        r.with_middle,
                        r.escaped,
                        if r.passed() { "ok" } else { "FAILED" }
                    )
                })?;
            }
        }
        Command::Classification {
            k,
            weights,
            small,
            large,
        } => {
            let r = verify_classification(*k, weights, *small, *large)?;
            o.ok = r.passed();
            o.emit(&r, || {
                format!(
                    "k={} r={} N={},{} diagrams={} lp_mismatches={} linf_mismatches={} column_mismatches={} {}",
                    r.k,
                    r.r,
                    r.truncations.0,
                    r.truncations.1,
                    r.diagrams,
                    r.lp_mismatches.len(),
                    r.linf_mismatches.len(),
                    r.column_mismatches.len(),
                    if r.passed() { "ok" } else { "FAILED" }
                )
            })?;
        }
        Command::NormsLp {
            diagram,
            weights,
            truncations,
        } => {
            let p =
                NormProfile::compute(diagram, NormKind::WeightedL1(weights.clone()), truncations)?;
            emit_profile(&mut o, &p)?;
        }
        Command::NormsLinf {
            diagram,
            truncations,
        } => {
            let p = NormProfile::compute(diagram, NormKind::MatrixLinf, truncations)?;
            emit_profile(&mut o, &p)?;
        }
        Command::InvariantsDim { n, k } => {
            let dim = invariant_dim(*n, *k);
            let budget = Budget::default();
            let orbits = match orbit_count(*n, *k, &budget) {
                Ok(c) => Some(c),
                Err(Error::Budget { .. }) => None,
                Err(e) => return Err(e),
            };
            let rank = if *n >= *k && *k <= 4 && n.pow(*k as u32) <= 4096 {
                Some(monomial_rank(*n, *k)?)
            } else {
                None
            };
            if orbits.is_some_and(|c| c != dim) || rank.is_some_and(|r| r != dim) {
                o.ok = false;
            }
            let value =
                json!({ "n": n, "k": k, "dim": dim, "orbit_count": orbits, "monomial_rank": rank });
            o.emit(&value, || {
                let show = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |c| c.to_string());
                format!(
                    "n={n} k={k} dim={dim} orbit_count={} monomial_rank={}",
                    show(orbits),
                    show(rank)
                )
            })?;
        }
        Command::InvariantsVector { pi, n } => {
            let m = monomial_vector(pi, *n)?;
            let space = m.space();
            let support: Vec<Vec<usize>> = m
                .support()
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(r, _)| space.unrank(r))
                .collect();
            let value =
                json!({ "pi": pi.to_string(), "n": n, "nnz": support.len(), "support": support });
            o.emit(&value, || {
                let tuples: Vec<String> = support
                    .iter()
                    .map(|t| {
                        format!(
                            "({})",
                            t.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                format!(
                    "m[{pi}] over [{n}]^{}: {} tuples\n{}",
                    pi.ground_size(),
                    support.len(),
                    tuples.join(" ")
                )
            })?;
        }
        Command::InvariantsAct { diagram, pi, n } => {
            let terms = act_on_invariants(diagram, pi, *n)?;
            if terms.is_empty() {
                o.emit(&json!({ "tau": null, "coeff": "0/1" }), || "0".to_string())?;
            }
            for t in &terms {
                o.emit(&t.to_record(), || format!("{} m[{}]", q(&t.coeff), t.tau))?;
            }
        }
        Command::CountBell { g } => {
            let b = bell_number(*g);
            o.emit(&json!({ "g": g, "bell": b.to_string() }), || b.to_string())?;
        }
        Command::CountPartitions { g, max_blocks } => {
            let c = count_partitions(*g, *max_blocks);
            let value = json!({ "g": g, "max_blocks": max_blocks, "count": c.to_string() });
            o.emit(&value, || c.to_string())?;
        }
    }
    Ok(o.ok)
}

fn emit_profile<W: Write>(o: &mut Output<'_, W>, p: &NormProfile) -> Result<()> {
    let record = p.to_record();
    o.emit(&record, || {
        let mut lines = vec![format!("diagram {}", p.diagram)];
        for (n, v) in p.truncations.iter().zip(&p.norms) {
            lines.push(format!("  N={n:<4} {}", q(v)));
        }
        lines.push(format!("  divergent {}", p.divergent));
        lines.join("\n")
    })
}

/// Entry point shared by the binary and the tests: parses `args`, runs the
/// command and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let inv = match parse(args) {
        Ok(inv) => inv,
        Err(UsageError::Clap(e)) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return 2;
        }
    };
    match execute(&inv, out) {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(err, "verification failed");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(line: &[&str]) -> Vec<String> {
        std::iter::once("partalg")
            .chain(line.iter().copied())
            .map(String::from)
            .collect()
    }

    #[test]
    fn parses_multiply() {
        let inv = parse(argv(&[
            "diagrams",
            "multiply",
            "--k",
            "4",
            "--lhs",
            "1,2|3|4,3',4'|1',2'",
            "--rhs",
            "1|2|3,1'|4,2',3',4'",
        ]))
        .unwrap();
        assert!(matches!(inv.command, Command::Multiply { .. }));
        assert!(!inv.json);
    }

    #[test]
    fn parses_verify_json() {
        let inv = parse(argv(&[
            "verify",
            "schur-weyl",
            "--n",
            "4",
            "--k",
            "2",
            "--json",
        ]))
        .unwrap();
        assert_eq!(inv.command, Command::SchurWeyl { n: 4, k: 2 });
        assert!(inv.json);
    }

    #[test]
    fn short_rgs_is_a_usage_error() {
        let e = parse(argv(&[
            "diagrams",
            "multiply",
            "--k",
            "2",
            "--lhs",
            "rgs:0,0,1",
            "--rhs",
            "1,1'|2,2'",
        ]))
        .unwrap_err();
        assert!(e.to_string().contains("--lhs"), "{e}");
    }

    #[test]
    fn rejects_bad_flags() {
        assert!(parse(argv(&["diagrams", "enumerate", "--k", "2", "--bogus"])).is_err());
        assert!(parse(argv(&[
            "diagrams",
            "enumerate",
            "--k",
            "2",
            "--filter",
            "sideways"
        ]))
        .is_err());
        assert!(parse(argv(&[
            "norms",
            "lp",
            "--diagram",
            "1,1'",
            "--ratio",
            "3/2"
        ]))
        .is_err());
        assert!(parse(argv(&[
            "norms",
            "lp",
            "--diagram",
            "1,1'",
            "--trunc",
            "8,4"
        ]))
        .is_err());
        assert!(parse(argv(&["diagrams", "enumerate", "--k", "9"])).is_err());
    }
}
