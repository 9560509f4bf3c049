//! The `mediangle` command line: recognition, hyperplanes, periagroup words
//! and Cayley balls, rotation systems and example generation.
//!
//! Exit codes: 0 when the command succeeds or the property holds, 1 when the
//! property fails (the report on stdout carries the witness), 2 for usage
//! or input errors, 3 when a budget or cap ran out before an answer.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use mediangle_core::{
    classify, io, verify_bighyp, CheckOptions, Graph, GraphError, HyperplaneSystem, Label,
};
use mediangle_families::{FamilyError, FamilySpec};
use mediangle_periagroup::{
    cayley_ball_with, coset_min_rep_with, parabolic_intersection, verify_semidirect, PeriagroupError,
    Presentation, Rewriter, Syllable, Word, DEFAULT_BUDGET, DEFAULT_VERTEX_CAP,
};
use mediangle_rotation::{
    action_from_json, extract_periagroup, rotation_subgroup, verify_rotation_system, RotationError,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "mediangle", version, about = "Mediangle graphs, hyperplanes, periagroups and rotation systems")]
#[command(after_help = "Exit codes: 0 holds, 1 fails (witness on stdout), 2 usage or input error, 3 budget or cap exceeded.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file: JSON `{"vertices", "edges", "ball"?}` or an edge list; `-` reads stdin.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,
    /// Longest convex even cycle searched (default: twice the diameter).
    #[arg(long)]
    pub max_cycle_len: Option<usize>,
    /// Ball-mode margin (default: the ball's own margin, else half the cycle cap).
    #[arg(long)]
    pub margin: Option<usize>,
}

impl GraphInput {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            max_len: self.max_cycle_len,
            margin: self.margin,
        }
    }
}

#[derive(Debug, Args)]
pub struct PresentationInput {
    /// Presentation file `{"vertices": [{"id", "group"}], "edges": [{"u", "v", "lambda"}]}`.
    #[arg(long, value_name = "FILE")]
    pub presentation: String,
    /// Flip-closure budget for word rewriting.
    #[arg(long, env = "MEDIANGLE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct ActionInput {
    /// Action file `{"graph", "generators", "subgroups", "element_cap"?}`.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a graph, or test one class with --class (exit 1 with a witness when it fails).
    Recognize {
        #[command(flatten)]
        graph: GraphInput,
        /// median, quasi-median, mediangle or bipartite-mediangle.
        #[arg(long)]
        class: Option<Label>,
    },
    /// List hyperplanes with their sectors and carriers.
    Hyperplanes {
        #[command(flatten)]
        graph: GraphInput,
        /// json, or dot with edges coloured by hyperplane.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact angles between transverse hyperplanes (exit 1 if some angle depends on the cycle).
    Angles {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Check sector convexity, clique separation and geodesic crossings.
    VerifyBighyp {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Reduce a word and print its canonical form.
    NormalForm {
        #[command(flatten)]
        presentation: PresentationInput,
        /// Word: a file or inline JSON, either `[{"vertex", "element"}]`, `[[v, e]]` or `[v]`.
        #[arg(long)]
        word: String,
    },
    /// Decide whether two words represent the same element (exit 1 if not).
    WordEqual {
        #[command(flatten)]
        presentation: PresentationInput,
        #[arg(long)]
        word: String,
        #[arg(long)]
        word2: String,
    },
    /// Enumerate the Cayley graph, or a ball of it with --radius.
    CayleyBall {
        #[command(flatten)]
        presentation: PresentationInput,
        #[arg(long)]
        radius: Option<usize>,
        /// Largest number of vertices enumerated (exit 3 beyond it).
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Shortest representative of the coset w<T> in a Coxeter presentation.
    CosetRep {
        #[command(flatten)]
        presentation: PresentationInput,
        #[arg(long)]
        word: String,
        /// Comma-separated vertices spanning T.
        #[arg(long, value_name = "LIST")]
        subset: String,
    },
    /// Verify the semidirect splitting over the order-two vertices.
    Semidirect {
        #[command(flatten)]
        presentation: PresentationInput,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Intersect g<phi>g^-1 with h<psi>h^-1 and return (k, xi).
    ParabolicIntersect {
        #[command(flatten)]
        presentation: PresentationInput,
        /// The conjugator g.
        #[arg(long)]
        word: String,
        /// The conjugator h.
        #[arg(long)]
        word2: String,
        /// Comma-separated vertices of phi.
        #[arg(long, value_name = "LIST")]
        phi: String,
        /// Comma-separated vertices of psi.
        #[arg(long, value_name = "LIST")]
        psi: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Check the rotation-system axioms for a group action.
    RotationVerify {
        #[command(flatten)]
        action: ActionInput,
    },
    /// Read off the periagroup of a rotation system.
    RotationExtract {
        #[command(flatten)]
        action: ActionInput,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Decompose the group along the subgroup generated by rotative stabilizers of seed hyperplanes.
    RotationSubgroup {
        #[command(flatten)]
        action: ActionInput,
        /// Comma-separated hyperplane ids.
        #[arg(long, value_name = "LIST")]
        seeds: String,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Generate a family member, e.g. `generate hypercube 3` or `generate even-cycle:6*path:2`.
    Generate {
        /// hypercube, hamming, even-cycle, path, complete, complete-bipartite, k4-minus, tree,
        /// random-tree, coxeter-dihedral, coxeter-a, cube-minus-vertex, hexagonal-tiling-ball,
        /// cayley, graph-product-ball; products join factors with `*`.
        family: String,
        /// Comma-separated parameters, when not given after a colon.
        params: Option<String>,
        /// Presentation file for cayley and graph-product-ball.
        #[arg(long, value_name = "FILE")]
        presentation: Option<String>,
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Why a command stopped without a report.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(String),
    /// The property failed; the value is the witness.
    Fails(Value),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<PeriagroupError> for Failure {
    fn from(e: PeriagroupError) -> Self {
        match e {
            PeriagroupError::BudgetExceeded(_) | PeriagroupError::VertexCapExceeded(_) => Failure::Budget(e.to_string()),
            PeriagroupError::Verification(_) => Failure::Fails(json!({ "error": e.to_string() })),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<RotationError> for Failure {
    fn from(e: RotationError) -> Self {
        match e {
            RotationError::Periagroup(inner) => inner.into(),
            RotationError::CapExceeded(_) => Failure::Budget(e.to_string()),
            RotationError::Verification(_) | RotationError::NotRotationSystem(_) => {
                Failure::Fails(json!({ "error": e.to_string() }))
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Periagroup(inner) => inner.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// A finished command: what to print and the exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn json(value: &impl Serialize, holds: bool) -> Self {
        let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
        text.push('\n');
        Output {
            text,
            code: if holds { EXIT_OK } else { EXIT_FAILS },
        }
    }

    fn text(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

type CmdResult = Result<Output, Failure>;

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            o.code
        }
        Err(Failure::Fails(witness)) => {
            let _ = write!(out, "{}", Output::json(&witness, false).text);
            EXIT_FAILS
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Budget(msg)) => {
            let _ = write!(out, "{}", Output::json(&json!({ "inconclusive": true, "reason": msg }), true).text);
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

pub fn execute(command: &Command) -> CmdResult {
    match command {
        Command::Recognize { graph, class } => recognize(graph, *class),
        Command::Hyperplanes { graph, format } => hyperplanes(graph, *format),
        Command::Angles { graph } => angles(graph),
        Command::VerifyBighyp { graph } => {
            let g = read_graph(&graph.input)?;
            let report = verify_bighyp(&g, graph.max_cycle_len)?;
            Ok(Output::json(&report, report.passed))
        }
        Command::NormalForm { presentation, word } => normal_form(presentation, word),
        Command::WordEqual {
            presentation,
            word,
            word2,
        } => word_equal(presentation, word, word2),
        Command::CayleyBall {
            presentation,
            radius,
            vertex_cap,
            format,
        } => cayley(presentation, *radius, *vertex_cap, *format),
        Command::CosetRep {
            presentation,
            word,
            subset,
        } => coset_rep(presentation, word, subset),
        Command::Semidirect {
            presentation,
            vertex_cap,
        } => {
            let p = read_presentation(&presentation.presentation)?;
            let r = Rewriter::with_budget(&p, presentation.budget);
            let ball = cayley_ball_with(&r, None, *vertex_cap)?;
            let report = verify_semidirect(&p, &ball)?;
            Ok(Output::json(&report, report.passed))
        }
        Command::ParabolicIntersect {
            presentation,
            word,
            word2,
            phi,
            psi,
            vertex_cap,
        } => parabolic(presentation, word, word2, phi, psi, *vertex_cap),
        Command::RotationVerify { action } => {
            let (a, r) = action_from_json(&read_input(&action.input)?)?;
            let report = verify_rotation_system(&a, &r)?;
            Ok(Output::json(&report, report.passed))
        }
        Command::RotationExtract { action, basepoint } => {
            let (a, r) = action_from_json(&read_input(&action.input)?)?;
            let report = verify_rotation_system(&a, &r)?;
            if !report.passed {
                return Ok(Output::json(&report, false));
            }
            let p = extract_periagroup(&a, &r, *basepoint)?;
            Ok(Output::json(&p, true))
        }
        Command::RotationSubgroup {
            action,
            seeds,
            basepoint,
        } => {
            let (a, _) = action_from_json(&read_input(&action.input)?)?;
            let seeds = parse_list(seeds)?;
            let d = rotation_subgroup(&a, &seeds, *basepoint)?;
            Ok(Output::json(&d, d.passed))
        }
        Command::Generate {
            family,
            params,
            presentation,
            radius,
            format,
        } => generate(family, params.as_deref(), presentation.as_deref(), *radius, *format),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    Ok(io::parse_graph(&read_input(path)?)?)
}

fn read_presentation(path: &str) -> Result<Presentation, Failure> {
    Ok(Presentation::from_json(&read_input(path)?)?)
}

/// Inline JSON when the argument starts like JSON, a file otherwise.
fn read_word(arg: &str) -> Result<Word, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('[') {
        arg.to_string()
    } else {
        read_input(arg)?
    };
    parse_word(&text)
}

/// Accepts `[{"vertex": v, "element": e}]`, `[[v, e]]` or `[v]` (element 1),
/// mixed freely.
pub fn parse_word(text: &str) -> Result<Word, Failure> {
    let bad = |msg: String| Failure::Input(format!("malformed word: {msg}"));
    let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let Value::Array(items) = value else {
        return Err(bad("expected a JSON array".into()));
    };
    items
        .into_iter()
        .map(|item| match &item {
            Value::Number(n) => n
                .as_u64()
                .map(|v| Syllable::new(v as usize, 1))
                .ok_or_else(|| bad(format!("{item} is not a vertex id"))),
            Value::Array(pair) => match pair.as_slice() {
                [v, e] => match (v.as_u64(), e.as_i64()) {
                    (Some(v), Some(e)) => Ok(Syllable::new(v as usize, e)),
                    _ => Err(bad(format!("{item} is not [vertex, element]"))),
                },
                _ => Err(bad(format!("{item} is not [vertex, element]"))),
            },
            Value::Object(_) => serde_json::from_value(item.clone()).map_err(|e| bad(e.to_string())),
            _ => Err(bad(format!("unexpected {item}"))),
        })
        .collect()
}

fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Input(format!("expected a comma-separated list of integers, got {text:?}")))
        })
        .collect()
}

fn graph_output(g: &Graph, format: Format) -> Output {
    match format {
        Format::Json => Output::json(g, true),
        Format::Dot => Output::text(io::to_dot(g, None)),
        Format::Edgelist => Output::text(io::to_edge_list(g)),
    }
}

fn recognize(input: &GraphInput, class: Option<Label>) -> CmdResult {
    let g = read_graph(&input.input)?;
    let c = classify(&g, input.options())?;
    match class {
        None => Ok(Output::json(&c, true)),
        Some(label) => {
            let verdict = &c.verdicts[&label];
            let report = json!({
                "class": label,
                "holds": verdict.holds,
                "verdict": verdict,
            });
            Ok(Output::json(&report, verdict.holds))
        }
    }
}

fn hyperplanes(input: &GraphInput, format: Format) -> CmdResult {
    let g = read_graph(&input.input)?;
    let hs = HyperplaneSystem::new(&g, input.max_cycle_len)?;
    match format {
        Format::Json => {
            let list = (0..hs.len())
                .map(|j| {
                    Ok(json!({
                        "id": j,
                        "edges": hs.hyperplanes()[j].edges,
                        "sectors": hs.sectors(j)?.sectors,
                        "carrier": hs.carrier(j)?,
                    }))
                })
                .collect::<Result<Vec<Value>, GraphError>>()?;
            let report = json!({ "cap_used": hs.max_len(), "hyperplanes": list });
            Ok(Output::json(&report, true))
        }
        Format::Dot => {
            let classes = g
                .edges()
                .iter()
                .map(|&(u, v)| hs.hyperplane_of(u, v))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Output::text(io::to_dot(&g, Some(&classes))))
        }
        Format::Edgelist => Err(Failure::Input("hyperplanes supports json and dot".into())),
    }
}

fn angles(input: &GraphInput) -> CmdResult {
    let g = read_graph(&input.input)?;
    let hs = HyperplaneSystem::new(&g, input.max_cycle_len)?;
    let mut list = Vec::new();
    let mut disagreements = Vec::new();
    for (j1, j2, res) in hs.angles() {
        match res {
            Ok(a) => list.push(json!({
                "first": j1,
                "second": j2,
                "angle": a,
                "display": a.to_string(),
                "lambda": a.lambda().ok(),
            })),
            Err(e) => disagreements.push(json!({ "first": j1, "second": j2, "error": e.to_string() })),
        }
    }
    let holds = disagreements.is_empty();
    let report = json!({
        "cap_used": hs.max_len(),
        "angles": list,
        "disagreements": disagreements,
    });
    Ok(Output::json(&report, holds))
}

fn normal_form(input: &PresentationInput, word: &str) -> CmdResult {
    let p = read_presentation(&input.presentation)?;
    let w = read_word(word)?;
    let r = Rewriter::with_budget(&p, input.budget);
    let reduced = r.reduce(&w)?;
    let canonical = r.canonical_form(&w)?;
    let report = json!({
        "input": w,
        "reduced": reduced,
        "canonical": canonical,
        "length": canonical.len(),
    });
    Ok(Output::json(&report, true))
}

fn word_equal(input: &PresentationInput, word: &str, word2: &str) -> CmdResult {
    let p = read_presentation(&input.presentation)?;
    let (a, b) = (read_word(word)?, read_word(word2)?);
    let r = Rewriter::with_budget(&p, input.budget);
    let (ca, cb) = (r.canonical_form(&a)?, r.canonical_form(&b)?);
    let equal = ca == cb;
    let report = json!({ "equal": equal, "canonical": [ca, cb] });
    Ok(Output::json(&report, equal))
}

fn cayley(input: &PresentationInput, radius: Option<usize>, cap: usize, format: Format) -> CmdResult {
    let p = read_presentation(&input.presentation)?;
    let r = Rewriter::with_budget(&p, input.budget);
    let ball = cayley_ball_with(&r, radius, cap)?;
    match format {
        Format::Json => {
            let report = json!({
                "order": ball.complete.then(|| ball.graph.vertex_count()),
                "complete": ball.complete,
                "graph": ball.graph,
                "labels": ball.labels,
                "reps": ball.reps,
            });
            Ok(Output::json(&report, true))
        }
        Format::Dot => {
            let dot = io::to_dot_labelled(&ball.graph, None, |e| {
                let s = ball.labels[e];
                Some(format!("{}:{}", s.vertex, s.element))
            });
            Ok(Output::text(dot))
        }
        Format::Edgelist => Ok(Output::text(io::to_edge_list(&ball.graph))),
    }
}

fn coset_rep(input: &PresentationInput, word: &str, subset: &str) -> CmdResult {
    let p = read_presentation(&input.presentation)?;
    let w = read_word(word)?;
    let t = parse_list(subset)?;
    let r = Rewriter::with_budget(&p, input.budget);
    let rep = coset_min_rep_with(&r, &w, &t)?;
    let report = json!({ "word": w, "subset": t, "representative": rep, "length": rep.len() });
    Ok(Output::json(&report, true))
}

fn parabolic(input: &PresentationInput, g: &str, h: &str, phi: &str, psi: &str, cap: usize) -> CmdResult {
    let p = read_presentation(&input.presentation)?;
    let (g, h) = (read_word(g)?, read_word(h)?);
    let (phi, psi) = (parse_list(phi)?, parse_list(psi)?);
    let r = Rewriter::with_budget(&p, input.budget);
    let ball = cayley_ball_with(&r, None, cap)?;
    let (k, xi) = parabolic_intersection(&p, &ball, (&g, &phi), (&h, &psi))?;
    let report = json!({ "k": k, "xi": xi, "verified": true });
    Ok(Output::json(&report, true))
}

fn generate(
    family: &str,
    params: Option<&str>,
    presentation: Option<&str>,
    radius: Option<usize>,
    format: Format,
) -> CmdResult {
    let spec = match family {
        "cayley" | "coxeter-cayley" | "graph-product-ball" => {
            let path = presentation
                .ok_or_else(|| Failure::Input(format!("{family} needs --presentation")))?;
            let presentation = read_presentation(path)?;
            if family == "graph-product-ball" {
                let radius = radius.ok_or_else(|| Failure::Input("graph-product-ball needs --radius".into()))?;
                FamilySpec::GraphProductBall { presentation, radius }
            } else {
                FamilySpec::Cayley { presentation }
            }
        }
        _ => {
            let text = match params {
                Some(p) => format!("{family}:{p}"),
                None => family.to_string(),
            };
            text.parse::<FamilySpec>()?
        }
    };
    let g = spec.generate()?;
    Ok(graph_output(&g, format))
}
