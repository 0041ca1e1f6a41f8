//! Command-line front end for `logicrel`.
//!
//! [`run`] is the whole program minus process I/O, so tests drive it
//! in-process. Exit codes: 0 the query holds (or a report has no failures),
//! 1 it fails, 2 input or usage error, 3 a size limit was exceeded.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use logicrel::parser::corpus_lines;
use logicrel::relation::{hasse_dot, lattice_universe, ParadoxReport, ReplacementReport};
use logicrel::{
    audit_paradoxes, audit_replacement, classify, classify_relation, criteria_report, entails,
    equivalent, parse_with_max_letters, truth_table, verify_lattice, Formula, Interpretation,
    LogicError, Mode, Status, Universe, Verdict, DEFAULT_MAX_LETTERS,
};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable overriding the letter limit.
pub const MAX_LETTERS_ENV: &str = "LOGICREL_MAX_LETTERS";

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "logicrel",
    version,
    about = "Decide propositional formulas under material or relational implication"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Reading of `->`
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Relational)]
    mode: ModeArg,

    /// Emit a JSON envelope instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Comma-separated letter universe, e.g. `p,q,r`
    #[arg(long, global = true, value_delimiter = ',')]
    universe: Option<Vec<String>>,

    /// Read operands from FILE (`-` for stdin), one formula or `a ; b` pair per line
    #[arg(long, global = true, value_name = "FILE")]
    corpus: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Material,
    Relational,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Material => Mode::Material,
            ModeArg::Relational => Mode::Relational,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tautology, contradiction, or contingent
    Classify { formula: Option<String> },
    /// Whether A -> B holds as a relation, by all three criteria
    Implies {
        left: Option<String>,
        right: Option<String>,
    },
    /// Logical equivalence of A and B
    Equiv {
        left: Option<String>,
        right: Option<String>,
    },
    /// Whether A entails B
    Entails {
        left: Option<String>,
        right: Option<String>,
    },
    /// Full truth table
    Table { formula: Option<String> },
    /// Disjoint / joint / inclusion / equivalent classification of A and B
    Relate {
        left: Option<String>,
        right: Option<String>,
    },
    /// Evaluate the material-implication paradoxes instantiated with A, B (default p, q)
    Audit {
        left: Option<String>,
        right: Option<String>,
    },
    /// Verify the bounded-lattice laws over N letters (1..=4)
    Lattice {
        letters: usize,
        /// Print the Hasse diagram as Graphviz DOT instead (N <= 2)
        #[arg(long)]
        dot: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Implies { .. } => "implies",
            Command::Equiv { .. } => "equiv",
            Command::Entails { .. } => "entails",
            Command::Table { .. } => "table",
            Command::Relate { .. } => "relate",
            Command::Audit { .. } => "audit",
            Command::Lattice { .. } => "lattice",
        }
    }

    fn arity(&self) -> usize {
        match self {
            Command::Classify { .. } | Command::Table { .. } => 1,
            Command::Lattice { .. } => 0,
            _ => 2,
        }
    }

    fn operands(&self) -> Vec<Option<&str>> {
        match self {
            Command::Classify { formula } | Command::Table { formula } => vec![formula.as_deref()],
            Command::Implies { left, right }
            | Command::Equiv { left, right }
            | Command::Entails { left, right }
            | Command::Relate { left, right }
            | Command::Audit { left, right } => vec![left.as_deref(), right.as_deref()],
            Command::Lattice { .. } => vec![],
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Logic(LogicError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Logic(LogicError::Limit { .. }) => EXIT_LIMIT,
            _ => EXIT_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Logic(e) => e.to_string(),
        }
    }
}

impl From<LogicError> for CliError {
    fn from(e: LogicError) -> Self {
        CliError::Logic(e)
    }
}

/// Result of one query, before formatting.
struct Answer {
    mode: &'static str,
    universe: Vec<String>,
    result: Value,
    witness: Value,
    text: String,
    code: i32,
    /// Raw stdout replacing the text rendering (used by `lattice --dot`).
    raw: Option<String>,
}

struct Context {
    mode: Mode,
    universe: Option<Vec<String>>,
    max_letters: usize,
}

/// Runs the CLI with `argv` (including the program name), reading the
/// letter limit from [`MAX_LETTERS_ENV`].
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(MAX_LETTERS_ENV).ok();
    run_with_env(argv, stdin, env.as_deref())
}

/// As [`run`], with the value of [`MAX_LETTERS_ENV`] passed explicitly.
pub fn run_with_env<I, T>(argv: I, stdin: &mut dyn Read, max_letters_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_HOLDS,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli, stdin, max_letters_env) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        },
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, env: Option<&str>) -> Result<Outcome, CliError> {
    let max_letters = match env {
        None => DEFAULT_MAX_LETTERS,
        Some(v) => v.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_LETTERS_ENV} must be a non-negative integer, got `{v}`"
            ))
        })?,
    };
    let ctx = Context {
        mode: cli.opts.mode.into(),
        universe: cli.opts.universe.clone(),
        max_letters,
    };

    if let Some(path) = &cli.opts.corpus {
        return run_corpus(cli, &ctx, path, stdin);
    }

    let operands = cli.command.operands();
    let mut texts: Vec<&str> = Vec::new();
    for (i, op) in operands.iter().enumerate() {
        match (op, &cli.command) {
            (Some(t), _) => texts.push(t),
            (None, Command::Audit { .. }) => texts.push(if i == 0 { "p" } else { "q" }),
            (None, cmd) => {
                return Err(CliError::Usage(format!(
                    "`{}` needs {} operand(s) or --corpus",
                    cmd.name(),
                    cmd.arity()
                )))
            }
        }
    }
    let answer = answer(&cli.command, &ctx, &texts)?;
    let stdout = if let Some(raw) = &answer.raw {
        if cli.opts.json {
            format_json(&envelope(cli.command.name(), &answer))
        } else {
            raw.clone()
        }
    } else if cli.opts.json {
        format_json(&envelope(cli.command.name(), &answer))
    } else {
        answer.text.clone()
    };
    Ok(Outcome {
        code: answer.code,
        stdout,
        stderr: String::new(),
    })
}

fn envelope(command: &str, a: &Answer) -> Value {
    json!({
        "command": command,
        "mode": a.mode,
        "universe": a.universe,
        "result": a.result,
        "witness": a.witness,
        "version": VERSION,
    })
}

fn format_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn run_corpus(
    cli: &Cli,
    ctx: &Context,
    path: &str,
    stdin: &mut dyn Read,
) -> Result<Outcome, CliError> {
    if matches!(cli.command, Command::Lattice { .. }) {
        return Err(CliError::Usage("`lattice` does not take --corpus".into()));
    }
    if cli.command.operands().iter().any(Option::is_some) {
        return Err(CliError::Usage(
            "operands and --corpus are mutually exclusive".into(),
        ));
    }
    let mut source = String::new();
    let read = if path == "-" {
        stdin.read_to_string(&mut source).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| source = s)
    };
    read.map_err(|e| CliError::Usage(format!("cannot read corpus `{path}`: {e}")))?;

    let arity = cli.command.arity();
    let mut records = Vec::new();
    let mut text = String::new();
    let mut code = EXIT_HOLDS;
    for line in corpus_lines(&source) {
        let outcome = if line.operands.len() != arity {
            Err(CliError::Usage(format!(
                "expected {arity} operand(s), found {}",
                line.operands.len()
            )))
        } else {
            answer(&cli.command, ctx, &line.operands)
        };
        let _ = writeln!(text, "# line {}: {}", line.number, line.text);
        let record = match outcome {
            Ok(a) => {
                code = code.max(a.code);
                for l in a.text.lines() {
                    let _ = writeln!(text, "  {l}");
                }
                json!({
                    "line": line.number,
                    "input": line.text,
                    "exit": a.code,
                    "mode": a.mode,
                    "universe": a.universe,
                    "result": a.result,
                    "witness": a.witness,
                })
            }
            Err(e) => {
                code = code.max(e.code());
                let _ = writeln!(text, "  error: {}", e.message());
                json!({
                    "line": line.number,
                    "input": line.text,
                    "exit": e.code(),
                    "error": e.message(),
                })
            }
        };
        records.push(record);
    }
    let stdout = if cli.opts.json {
        format_json(&json!({
            "command": cli.command.name(),
            "mode": ctx.mode.as_str(),
            "universe": Value::Null,
            "result": records,
            "witness": Value::Null,
            "version": VERSION,
        }))
    } else {
        text
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn universe_for(ctx: &Context, formulas: &[&Formula]) -> Result<Universe, CliError> {
    let u = match &ctx.universe {
        Some(letters) => {
            let u = Universe::with_max_letters(letters.iter().cloned(), ctx.max_letters)?;
            for f in formulas {
                u.check_covers(f)?;
            }
            u
        }
        None => Universe::of_formulas(formulas.iter().copied(), ctx.max_letters)?,
    };
    Ok(u)
}

fn letters(u: &Universe) -> Vec<String> {
    u.letters().to_vec()
}

fn show_universe(u: &Universe) -> String {
    if u.is_empty() {
        "(none)".into()
    } else {
        u.letters().join(" ")
    }
}

fn assignment(i: &Option<Interpretation>) -> Value {
    match i {
        Some(i) => serde_json::to_value(i).expect("interpretations serialize"),
        None => Value::Null,
    }
}

fn show(i: &Option<Interpretation>) -> String {
    match i {
        Some(i) if i.universe().is_empty() => "(empty assignment)".into(),
        Some(i) => i.to_string(),
        None => "none".into(),
    }
}

fn holds_code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn answer(cmd: &Command, ctx: &Context, texts: &[&str]) -> Result<Answer, CliError> {
    let formulas: Vec<Formula> = texts
        .iter()
        .map(|t| parse_with_max_letters(t, ctx.max_letters))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&Formula> = formulas.iter().collect();
    match cmd {
        Command::Classify { .. } => cmd_classify(ctx, refs[0]),
        Command::Implies { .. } => cmd_implies(ctx, refs[0], refs[1]),
        Command::Equiv { .. } => cmd_verdict(ctx, "equiv", refs[0], refs[1]),
        Command::Entails { .. } => cmd_verdict(ctx, "entails", refs[0], refs[1]),
        Command::Table { .. } => cmd_table(ctx, refs[0]),
        Command::Relate { .. } => cmd_relate(ctx, refs[0], refs[1]),
        Command::Audit { .. } => cmd_audit(ctx, refs[0], refs[1]),
        Command::Lattice { letters, dot } => cmd_lattice(*letters, *dot),
    }
}

fn cmd_classify(ctx: &Context, f: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[f])?;
    let c = classify(f, ctx.mode, &u)?;
    let witness = if c.status == Status::Contingent {
        &c.lowest_false
    } else {
        &None
    };
    let text = format!(
        "formula: {f}\nmode: {}\nuniverse: {}\nresult: {}\nlowest true: {}\nlowest false: {}\n",
        ctx.mode,
        show_universe(&u),
        c.status.as_str(),
        show(&c.lowest_true),
        show(&c.lowest_false),
    );
    Ok(Answer {
        mode: ctx.mode.as_str(),
        universe: letters(&u),
        result: json!({
            "formula": f.to_string(),
            "classification": c.status.as_str(),
            "lowest_true": assignment(&c.lowest_true),
            "lowest_false": assignment(&c.lowest_false),
        }),
        witness: assignment(witness),
        text,
        code: holds_code(c.status == Status::Tautology),
        raw: None,
    })
}

fn cmd_implies(ctx: &Context, a: &Formula, b: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[a, b])?;
    let report = criteria_report(a, b, &u)?;
    // The relation is global; its refutation is any row where the reduced
    // antecedent holds and the reduced consequent does not.
    let a0 = logicrel::eliminate_implications(a, &u)?;
    let b0 = logicrel::eliminate_implications(b, &u)?;
    let witness = entails(&a0, &b0, Mode::Material, &u)?.witness;
    let holds = report.holds();
    let text = format!(
        "left: {a}\nright: {b}\nuniverse: {}\nand_absorb: {}\nconj_bottom: {}\ndisj_top: {}\n\
         agree: {}\nresult: {}\nwitness: {}\n",
        show_universe(&u),
        report.and_absorb,
        report.conj_bottom,
        report.disj_top,
        report.agree,
        if holds { "holds" } else { "fails" },
        show(&witness),
    );
    Ok(Answer {
        mode: Mode::Relational.as_str(),
        universe: letters(&u),
        result: json!({
            "left": a.to_string(),
            "right": b.to_string(),
            "and_absorb": report.and_absorb,
            "conj_bottom": report.conj_bottom,
            "disj_top": report.disj_top,
            "agree": report.agree,
            "holds": holds,
        }),
        witness: assignment(&witness),
        text,
        code: holds_code(holds),
        raw: None,
    })
}

fn cmd_verdict(ctx: &Context, which: &str, a: &Formula, b: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[a, b])?;
    let Verdict { holds, witness } = match which {
        "equiv" => equivalent(a, b, ctx.mode, &u)?,
        _ => entails(a, b, ctx.mode, &u)?,
    };
    let text = format!(
        "left: {a}\nright: {b}\nmode: {}\nuniverse: {}\nresult: {}\nwitness: {}\n",
        ctx.mode,
        show_universe(&u),
        if holds { "holds" } else { "fails" },
        show(&witness),
    );
    Ok(Answer {
        mode: ctx.mode.as_str(),
        universe: letters(&u),
        result: json!({
            "left": a.to_string(),
            "right": b.to_string(),
            "holds": holds,
        }),
        witness: assignment(&witness),
        text,
        code: holds_code(holds),
        raw: None,
    })
}

fn cmd_table(ctx: &Context, f: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[f])?;
    let t = truth_table(f, &u, ctx.mode)?;
    let text = format!(
        "formula: {f}\nmode: {}\n{}rows: {}\nbits_hex: {}\n",
        ctx.mode,
        t.to_text(),
        t.rows(),
        t.to_hex()
    );
    Ok(Answer {
        mode: ctx.mode.as_str(),
        universe: letters(&u),
        result: json!({
            "formula": f.to_string(),
            "rows": t.rows(),
            "bits_hex": t.to_hex(),
        }),
        witness: Value::Null,
        text,
        code: EXIT_HOLDS,
        raw: None,
    })
}

fn cmd_relate(ctx: &Context, a: &Formula, b: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[a, b])?;
    let class = classify_relation(a, b, &u)?;
    let flags: Vec<&str> = class.degenerate.iter().map(|f| f.as_str()).collect();
    let text = format!(
        "left: {a}\nright: {b}\nuniverse: {}\nresult: {}\ndegenerate: {}\n",
        show_universe(&u),
        class.kind.as_str(),
        if flags.is_empty() {
            "none".to_string()
        } else {
            flags.join(", ")
        },
    );
    Ok(Answer {
        mode: Mode::Relational.as_str(),
        universe: letters(&u),
        result: json!({
            "left": a.to_string(),
            "right": b.to_string(),
            "kind": class.kind.as_str(),
            "degenerate": flags,
        }),
        witness: Value::Null,
        text,
        code: EXIT_HOLDS,
        raw: None,
    })
}

fn paradox_json(r: &ParadoxReport) -> Value {
    json!({
        "schema": r.schema.to_string(),
        "formula": r.formula.to_string(),
        "material_tautology": r.material_tautology,
        "material_witness": assignment(&r.material_witness),
        "relational_tautology": r.relational_tautology,
        "relational_status": r.relational_status.as_str(),
        "relational_witness": assignment(&r.relational_witness),
    })
}

fn replacement_json(r: &ReplacementReport) -> Value {
    json!({
        "inference": r.inference,
        "reverse_inference": r.reverse_inference,
        "reverse_witness": assignment(&r.reverse_witness),
        "replacement": r.replacement,
        "disjunction_is_top": r.disjunction_is_top,
        "relation_holds": r.relation_holds,
        "vacuous_reverse": r.vacuous_reverse,
    })
}

fn cmd_audit(ctx: &Context, a: &Formula, b: &Formula) -> Result<Answer, CliError> {
    let u = universe_for(ctx, &[a, b])?;
    let reports = audit_paradoxes(a, b, &u)?;
    let replacement = audit_replacement(a, b, &u)?;
    let refuted = reports.iter().all(ParadoxReport::paradox_refuted);

    let mut text = format!("left: {a}\nright: {b}\nuniverse: {}\n", show_universe(&u));
    for r in &reports {
        let material = if r.material_tautology {
            "tautology".to_string()
        } else {
            format!("not a tautology (witness {})", show(&r.material_witness))
        };
        let relational = match r.relational_status {
            Status::Tautology => "tautology".to_string(),
            s => format!("{} (witness {})", s.as_str(), show(&r.relational_witness)),
        };
        let _ = writeln!(
            text,
            "{} {}: material {material}; relational {relational}",
            r.schema, r.formula
        );
    }
    let _ = write!(
        text,
        "inference (a -> b entails ~a | b): {}\n\
         reverse inference (~a | b entails a -> b): {}{}\n\
         replacement (a -> b equivalent to ~a | b): {}\n\
         ~a | b is a tautology: {}\n\
         relation a -> b holds: {}\n\
         reverse inference vacuous: {}\n\
         result: {}\n",
        replacement.inference,
        replacement.reverse_inference,
        match &replacement.reverse_witness {
            Some(_) => format!(" (witness {})", show(&replacement.reverse_witness)),
            None => String::new(),
        },
        replacement.replacement,
        replacement.disjunction_is_top,
        replacement.relation_holds,
        replacement.vacuous_reverse,
        if refuted {
            "all paradoxes refuted"
        } else {
            "some paradoxes not refuted"
        },
    );
    Ok(Answer {
        mode: "both",
        universe: letters(&u),
        result: json!({
            "left": a.to_string(),
            "right": b.to_string(),
            "paradoxes": reports.iter().map(paradox_json).collect::<Vec<_>>(),
            "replacement": replacement_json(&replacement),
            "all_refuted": refuted,
        }),
        witness: Value::Null,
        text,
        code: holds_code(refuted),
        raw: None,
    })
}

fn cmd_lattice(n: usize, dot: bool) -> Result<Answer, CliError> {
    let u = lattice_universe(n)?;
    if dot {
        let graph = hasse_dot(n)?;
        return Ok(Answer {
            mode: Mode::Relational.as_str(),
            universe: letters(&u),
            result: json!({ "dot": graph }),
            witness: Value::Null,
            text: String::new(),
            code: EXIT_HOLDS,
            raw: Some(graph),
        });
    }
    let report = verify_lattice(n)?;
    let mut text = format!(
        "universe: {}\nclasses: {}\n",
        show_universe(&u),
        report.class_count
    );
    for c in &report.checks {
        let failed = report
            .failures
            .iter()
            .filter(|f| f.property == c.property)
            .count();
        let _ = writeln!(
            text,
            "{}: {} cases, {}, {}",
            c.property,
            c.cases,
            if c.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            },
            if failed == 0 {
                "ok".to_string()
            } else {
                format!("{failed} failures")
            },
        );
    }
    for f in &report.failures {
        let _ = writeln!(text, "failure: {} {}", f.property, f.classes.join(" "));
    }
    let _ = writeln!(
        text,
        "result: {}",
        if report.passed() { "passed" } else { "failed" }
    );
    Ok(Answer {
        mode: Mode::Relational.as_str(),
        universe: letters(&u),
        result: serde_json::to_value(&report).expect("reports serialize"),
        witness: Value::Null,
        text,
        code: holds_code(report.passed()),
        raw: None,
    })
}
