//! Command-line front end for `mirrorgraph`.
//!
//! Documents go to the output stream and warnings to the diagnostic stream.
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or a positive verdict (`check`, `detect`) |
//! | 1 | negative verdict, or no realization exists for the input |
//! | 2 | usage error or malformed input |
//! | 3 | the enumeration work budget was exhausted |
//! | 4 | internal error (a construction failed its own postcondition) |

pub mod document;
pub mod dot;
pub mod parse;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use mirrorgraph::lab::DEFAULT_BUDGET;
use mirrorgraph::{
    BipartiteGraph, ClassWitness, DegreeSequence, EnumerationOptions, Error, LGraph, MirrorPairing,
    MirrorRealization,
};
use serde::Serialize;

pub use document::GraphDocument;
pub use parse::{parse_sequence, parse_set, ParseError, ParsedSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Environment variable that overrides the default `--budget`.
pub const BUDGET_ENV: &str = "MIRRORGRAPH_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "mirrorgraph",
    version,
    about = "Mirror bipartite graphs and bigraphic sequences"
)]
pub struct Cli {
    /// Output format for graph documents.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Treat graphs that differ by swapping the two sides as isomorphic
    /// when enumerating realizations of (P, P).
    #[arg(long, global = true, value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    pub side_swap: bool,

    /// Node limit for the enumeration search tree.
    #[arg(long, global = true, value_name = "N", env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// Shuffles the enumeration branch order. Results do not change.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether (P, Q) is bigraphic. Q defaults to P.
    Check { p: String, q: Option<String> },
    /// Build a bipartite graph with left degrees P and right degrees Q.
    Realize { p: String, q: Option<String> },
    /// Build a mirror graph realizing (P, P), with its pairing.
    Mirror { p: String },
    /// Build an l-graph realizing P.
    Loops { p: String },
    /// Search a bipartite document for a mirror pairing.
    Detect { file: PathBuf },
    /// Fold a bipartite document with a pairing to an l-graph.
    Fold { file: PathBuf },
    /// Product of an l-graph document with K2.
    Kron { file: PathBuf },
    /// Bipartite complement; keeps the pairing when one is given.
    Complement { file: PathBuf },
    /// The unique realization of (n, ..., 1) on both sides.
    Staircase { n: usize },
    /// Simple graph of minimum order with the given degree set.
    Kapoor { set: String },
    /// Mirror graph of minimum order with the given degree set on both sides.
    Degset { set: String },
    /// All realizations of (P, Q) up to isomorphism. Q defaults to P.
    Enumerate { p: String, q: Option<String> },
    /// Count realizations of (P, P) and how many are mirror.
    Report { p: String },
    /// Classify all r-regular bipartite graphs with n vertices per side.
    Survey { n: usize, r: usize },
}

#[derive(Debug)]
enum Failure {
    Negative(String),
    Usage(String),
    Budget(u64),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Negative(_) => EXIT_NEGATIVE,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Negative(m) | Failure::Usage(m) | Failure::Internal(m) => m.clone(),
            Failure::Budget(limit) => {
                format!("search exceeded the budget of {limit} nodes (raise --budget or {BUDGET_ENV})")
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotBigraphic | Error::NotLoopGraphic => Failure::Negative(e.to_string()),
            Error::BudgetExceeded { limit } => Failure::Budget(limit),
            Error::InternalContradiction(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

#[derive(Serialize)]
struct ClassDocument {
    mirror: bool,
    twin_signatures_differ: bool,
    graph: GraphDocument,
}

#[derive(Serialize)]
struct ReportDocument {
    sequence: Vec<usize>,
    bipp: usize,
    mirr: usize,
    classes: Vec<ClassDocument>,
}

struct Context<'a> {
    cli: &'a Cli,
    out: String,
    err: String,
}

impl Context<'_> {
    fn warn(&mut self, message: &str) {
        self.err.push_str("warning: ");
        self.err.push_str(message);
        self.err.push('\n');
    }

    fn sequence(&mut self, text: &str) -> Result<DegreeSequence, Failure> {
        let parsed = parse_sequence(text)?;
        if let Some(w) = &parsed.warning {
            self.warn(w);
        }
        Ok(parsed.sequence)
    }

    fn document(&mut self, path: &PathBuf) -> Result<GraphDocument, Failure> {
        let mut text = String::new();
        let read = if path.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        read.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        GraphDocument::read(&text).map_err(|e| Failure::Usage(format!("{}: {e:#}", path.display())))
    }

    fn options(&self) -> EnumerationOptions {
        EnumerationOptions {
            allow_side_swap: self.cli.side_swap,
            budget: self.cli.budget,
            shuffle_seed: self.cli.seed,
        }
    }

    fn emit_bipartite(&mut self, g: &BipartiteGraph, pairing: Option<&MirrorPairing>) {
        match self.cli.format {
            Format::Json => self
                .out
                .push_str(&GraphDocument::from_bipartite(g, pairing).write()),
            Format::Dot => self.out.push_str(&dot::bipartite_dot("G", g, pairing)),
        }
    }

    fn emit_realization(&mut self, m: &MirrorRealization) {
        self.emit_bipartite(m.graph(), Some(m.pairing()));
    }

    fn emit_lgraph(&mut self, h: &LGraph) {
        match self.cli.format {
            Format::Json => self.out.push_str(&GraphDocument::from_lgraph(h).write()),
            Format::Dot => self.out.push_str(&dot::lgraph_dot("H", h)),
        }
    }

    fn emit_classes(&mut self, witnesses: &[ClassWitness]) {
        match self.cli.format {
            Format::Json => {
                let docs: Vec<ClassDocument> = witnesses.iter().map(class_document).collect();
                self.push_json(&docs);
            }
            Format::Dot => {
                for (k, w) in witnesses.iter().enumerate() {
                    let name = format!("class{k}");
                    self.out
                        .push_str(&dot::bipartite_dot(&name, &w.graph, w.pairing.as_ref()));
                }
            }
        }
    }

    fn push_json<T: Serialize>(&mut self, value: &T) {
        self.out
            .push_str(&serde_json::to_string(value).expect("serializable"));
        self.out.push('\n');
    }
}

fn class_document(w: &ClassWitness) -> ClassDocument {
    let (left, right) = mirrorgraph::twin_signature(&w.graph);
    ClassDocument {
        mirror: w.is_mirror(),
        twin_signatures_differ: left != right,
        graph: GraphDocument::from_bipartite(&w.graph, w.pairing.as_ref()),
    }
}

fn execute(ctx: &mut Context<'_>) -> Result<i32, Failure> {
    match &ctx.cli.command {
        Command::Check { p, q } => {
            let p = ctx.sequence(p)?;
            let q = match q {
                Some(q) => ctx.sequence(q)?,
                None => p.clone(),
            };
            if mirrorgraph::gale_ryser_check(&p, &q) {
                ctx.out.push_str("bigraphic\n");
                Ok(EXIT_OK)
            } else {
                ctx.out.push_str("not bigraphic\n");
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Realize { p, q } => {
            let p = ctx.sequence(p)?;
            let q = match q {
                Some(q) => ctx.sequence(q)?,
                None => p.clone(),
            };
            let g = mirrorgraph::realize_bigraphic(&p, &q)?;
            ctx.emit_bipartite(&g, None);
            Ok(EXIT_OK)
        }
        Command::Mirror { p } => {
            let p = ctx.sequence(p)?;
            let m = mirrorgraph::mirror_realize(&p)?;
            ctx.emit_realization(&m);
            Ok(EXIT_OK)
        }
        Command::Loops { p } => {
            let p = ctx.sequence(p)?;
            let h = mirrorgraph::loop_realize(&p)?;
            ctx.emit_lgraph(&h);
            Ok(EXIT_OK)
        }
        Command::Detect { file } => {
            let (g, given) = ctx.document(file)?.to_bipartite()?;
            if given.is_some() {
                ctx.warn("ignoring the pairing in the input document");
            }
            match mirrorgraph::find_mirror_pairing(&g) {
                Some(p) => {
                    ctx.out.push_str("mirror\n");
                    ctx.emit_bipartite(&g, Some(&p));
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.out.push_str("not mirror\n");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Fold { file } => {
            let (g, pairing) = ctx.document(file)?.to_bipartite()?;
            let pairing =
                pairing.ok_or_else(|| Failure::Usage("fold needs a document with a pairing".into()))?;
            let h = mirrorgraph::fold_with_pairing(&g, &pairing)?;
            ctx.emit_lgraph(&h);
            Ok(EXIT_OK)
        }
        Command::Kron { file } => {
            let h = ctx.document(file)?.to_lgraph()?;
            let m = mirrorgraph::kronecker_k2(&h);
            ctx.emit_realization(&m);
            Ok(EXIT_OK)
        }
        Command::Complement { file } => {
            let (g, pairing) = ctx.document(file)?.to_bipartite()?;
            match pairing {
                Some(p) => {
                    let m = MirrorRealization::new(g, p)?;
                    let c = mirrorgraph::complement_pairing(&m)?;
                    ctx.emit_realization(&c);
                }
                None => {
                    let c = mirrorgraph::bipartite_complement(&g);
                    ctx.emit_bipartite(&c, None);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Staircase { n } => {
            let m = mirrorgraph::staircase(*n);
            ctx.emit_realization(&m);
            Ok(EXIT_OK)
        }
        Command::Kapoor { set } => {
            let s = parse_set(set)?;
            let g = mirrorgraph::kapoor_realize(&s)?;
            ctx.emit_lgraph(g.as_lgraph());
            Ok(EXIT_OK)
        }
        Command::Degset { set } => {
            let s = parse_set(set)?;
            let m = mirrorgraph::degset_mirror_realize(&s)?;
            ctx.emit_realization(&m);
            Ok(EXIT_OK)
        }
        Command::Enumerate { p, q } => {
            let p = ctx.sequence(p)?;
            let q = match q {
                Some(q) => ctx.sequence(q)?,
                None => p.clone(),
            };
            let opts = ctx.options();
            let classes = mirrorgraph::enumerate_realizations_with(&p, &q, &opts)?;
            match ctx.cli.format {
                Format::Json => {
                    let docs: Vec<GraphDocument> = classes
                        .iter()
                        .map(|g| GraphDocument::from_bipartite(g, None))
                        .collect();
                    ctx.push_json(&docs);
                }
                Format::Dot => {
                    for (k, g) in classes.iter().enumerate() {
                        let name = format!("class{k}");
                        ctx.out.push_str(&dot::bipartite_dot(&name, g, None));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Report { p } => {
            let p = ctx.sequence(p)?;
            let opts = ctx.options();
            let report = mirrorgraph::bipp_mirr_report(&p, &opts)?;
            match ctx.cli.format {
                Format::Json => {
                    let doc = ReportDocument {
                        sequence: report.sequence.as_slice().to_vec(),
                        bipp: report.bipp_count,
                        mirr: report.mirr_count,
                        classes: report.witnesses.iter().map(class_document).collect(),
                    };
                    ctx.push_json(&doc);
                }
                Format::Dot => {
                    ctx.out.push_str(&format!(
                        "// {}: {} classes, {} mirror\n",
                        report.sequence, report.bipp_count, report.mirr_count
                    ));
                    ctx.emit_classes(&report.witnesses);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Survey { n, r } => {
            if r > n {
                return Err(Failure::Usage(format!("degree {r} exceeds side size {n}")));
            }
            let opts = ctx.options();
            let witnesses = mirrorgraph::regular_survey(*n, *r, &opts)?;
            ctx.emit_classes(&witnesses);
            Ok(EXIT_OK)
        }
    }
}

/// Result of one invocation: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line (including the program name) without touching the
/// process streams, except stdin for a `-` file argument.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut ctx = Context {
        cli: &cli,
        out: String::new(),
        err: String::new(),
    };
    let code = match execute(&mut ctx) {
        Ok(code) => code,
        Err(f) => {
            ctx.err.push_str(&format!("error: {}\n", f.message()));
            f.code()
        }
    };
    Outcome {
        code,
        stdout: ctx.out,
        stderr: ctx.err,
    }
}

/// Runs a command line and writes its streams.
pub fn run_to<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = run(args);
    // a closed pipe is not worth a second error
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(line: &str) -> Outcome {
        run(std::iter::once("mirrorgraph").chain(line.split_whitespace()))
    }

    #[test]
    fn check_verdicts() {
        let o = sh("check 3,1");
        assert_eq!((o.code, o.stdout.as_str()), (1, "not bigraphic\n"));
        let o = sh("check 2,1 2,1");
        assert_eq!((o.code, o.stdout.as_str()), (0, "bigraphic\n"));
        let o = sh("check 1,2");
        assert_eq!(o.code, 0);
        assert!(o.stderr.starts_with("warning: "));
        assert_eq!(sh("check 3,a").code, 2);
        assert_eq!(sh("check").code, 2);
    }

    #[test]
    fn mirror_base_case() {
        let o = sh("mirror 1");
        assert_eq!(o.code, 0);
        assert_eq!(
            o.stdout,
            "{\"kind\":\"bipartite\",\"n1\":1,\"n2\":1,\"edges\":[[0,0]],\"pairing\":[0]}\n"
        );
        assert_eq!(sh("mirror 3,1").code, 1);
        assert_eq!(sh("loops 3,1").code, 1);
    }

    #[test]
    fn sets_and_flags() {
        assert_eq!(sh("degset 3,3").code, 2);
        assert_eq!(sh("kapoor 0").code, 2);
        assert_eq!(sh("degset 3,1").code, 0);
        assert_eq!(sh("survey 3 4").code, 2);
        assert_eq!(sh("mirror 1 --format svg").code, 2);
        assert_eq!(sh("enumerate 2,2,1,1 --side-swap maybe").code, 2);
        assert_eq!(sh("enumerate 3,3,3,3,3,3 --budget 10").code, 3);
        assert_eq!(sh("--help").code, 0);
    }

    #[test]
    fn seed_does_not_change_output() {
        let plain = sh("report 2,2,1,1");
        let seeded = sh("report 2,2,1,1 --seed 7");
        assert_eq!(plain.code, 0);
        assert_eq!(plain, seeded);
    }
}
