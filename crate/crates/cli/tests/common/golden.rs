//! Golden-file cases for the `logicrel` binary.
#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: Option<(&'static str, &'static str)>,
    pub stdin: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        env: None,
        stdin: None,
    }
}

pub const CASES: &[Case] = &[
    case(
        "classify_material",
        &["classify", "(p -> q) | (q -> p)", "--mode", "material"],
    ),
    case(
        "classify_material_json",
        &[
            "classify",
            "(p -> q) | (q -> p)",
            "--mode",
            "material",
            "--json",
        ],
    ),
    case("classify_relational", &["classify", "(p -> q) | (q -> p)"]),
    case(
        "classify_relational_json",
        &[
            "classify",
            "(p -> q) | (q -> p)",
            "--mode",
            "relational",
            "--json",
        ],
    ),
    case("classify_contingent", &["classify", "p & q | r"]),
    case(
        "classify_contingent_json",
        &["classify", "p & q | r", "--json"],
    ),
    case("classify_parse_error", &["classify", "p -> -> q"]),
    case(
        "classify_parse_error_json",
        &["classify", "p -> -> q", "--json"],
    ),
    case("implies_meet", &["implies", "p & q", "p"]),
    case("implies_meet_json", &["implies", "p & q", "p", "--json"]),
    case("implies_fails", &["implies", "p", "q"]),
    case("implies_fails_json", &["implies", "p", "q", "--json"]),
    case("equiv_relational", &["equiv", "p -> q", "~p | q"]),
    case(
        "equiv_relational_json",
        &["equiv", "p -> q", "~p | q", "--json"],
    ),
    case(
        "equiv_material",
        &["equiv", "p -> q", "~p | q", "--mode", "material"],
    ),
    case(
        "equiv_material_json",
        &["equiv", "p -> q", "~p | q", "--mode", "material", "--json"],
    ),
    case("entails_reverse", &["entails", "~p | q", "p -> q"]),
    case(
        "entails_reverse_json",
        &["entails", "~p | q", "p -> q", "--json"],
    ),
    case("entails_forward", &["entails", "p -> q", "~p | q"]),
    case("table_material", &["table", "p -> q", "--mode", "material"]),
    case(
        "table_material_json",
        &["table", "p -> q", "--mode", "material", "--json"],
    ),
    case("table_universe", &["table", "p & q", "--universe", "r,q,p"]),
    case(
        "table_universe_json",
        &["table", "p & q", "--universe", "r,q,p", "--json"],
    ),
    case("relate", &["relate", "F", "p"]),
    case("relate_json", &["relate", "p & q", "p | q", "--json"]),
    case("audit", &["audit"]),
    case("audit_json", &["audit", "--json"]),
    case("audit_constants", &["audit", "T", "F"]),
    case("lattice_2", &["lattice", "2"]),
    case("lattice_2_json", &["lattice", "2", "--json"]),
    case("lattice_1_dot", &["lattice", "1", "--dot"]),
    case("lattice_5", &["lattice", "5"]),
    case("lattice_3_dot", &["lattice", "3", "--dot"]),
    Case {
        name: "limit_env",
        args: &["classify", "p & q"],
        env: Some(("LOGICREL_MAX_LETTERS", "1")),
        stdin: None,
    },
    Case {
        name: "limit_env_bad",
        args: &["classify", "p"],
        env: Some(("LOGICREL_MAX_LETTERS", "many")),
        stdin: None,
    },
    case(
        "universe_mismatch",
        &["classify", "p & q", "--universe", "p"],
    ),
    case("universe_invalid", &["classify", "p", "--universe", "p,p"]),
    case("missing_operand", &["implies", "p"]),
    case("unknown_subcommand", &["prove", "p"]),
    case("bad_mode", &["classify", "p", "--mode", "strict"]),
    case("version", &["--version"]),
    case(
        "corpus_pairs",
        &["implies", "--corpus", "tests/data/pairs.txt"],
    ),
    case(
        "corpus_pairs_json",
        &["implies", "--corpus", "tests/data/pairs.txt", "--json"],
    ),
    case(
        "corpus_formulas",
        &[
            "classify",
            "--corpus",
            "tests/data/formulas.txt",
            "--mode",
            "material",
        ],
    ),
    Case {
        name: "corpus_stdin_json",
        args: &["classify", "--corpus", "-", "--json"],
        env: None,
        stdin: Some("p | ~p\n# skipped\np -> q\n"),
    },
    case(
        "corpus_missing_file",
        &["classify", "--corpus", "tests/data/absent.txt"],
    ),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

fn quote(arg: &str) -> String {
    if !arg.is_empty()
        && arg
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_./,".contains(c))
    {
        arg.to_string()
    } else {
        format!("'{arg}'")
    }
}

/// Runs the binary and renders everything observable as one document.
pub fn transcript(bin: &Path, case: &Case) -> String {
    let mut cmd = Command::new(bin);
    cmd.args(case.args)
        .current_dir(manifest_dir())
        .env_remove("LOGICREL_MAX_LETTERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some((k, v)) = case.env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn logicrel");
    let input = case.stdin.unwrap_or("");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().expect("wait for logicrel");

    let mut doc = String::from("$");
    if let Some((k, v)) = case.env {
        doc.push_str(&format!(" {k}={v}"));
    }
    doc.push_str(" logicrel");
    for a in case.args {
        doc.push(' ');
        doc.push_str(&quote(a));
    }
    doc.push('\n');
    if let Some(s) = case.stdin {
        doc.push_str("--- stdin\n");
        doc.push_str(s);
    }
    doc.push_str(&format!("--- exit {}\n", out.status.code().unwrap_or(-1)));
    doc.push_str("--- stdout\n");
    doc.push_str(&String::from_utf8_lossy(&out.stdout));
    doc.push_str("--- stderr\n");
    doc.push_str(&String::from_utf8_lossy(&out.stderr));
    doc
}

/// Compares every case with its golden file. With `UPDATE_GOLDEN` set the
/// files are rewritten instead. Returns the names of mismatching cases.
pub fn check_all(bin: &Path) -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for case in CASES {
        let actual = transcript(bin, case);
        let path = golden_path(case.name);
        if update {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            Ok(expected) => {
                eprintln!(
                    "golden mismatch: {}\n--- expected\n{expected}--- actual\n{actual}",
                    case.name
                );
                bad.push(case.name.to_string());
            }
            Err(e) => {
                eprintln!("golden missing: {} ({e})", case.name);
                bad.push(case.name.to_string());
            }
        }
    }
    bad
}

/// Exit code recorded in a transcript.
pub fn exit_of(doc: &str) -> Option<i32> {
    doc.lines()
        .find_map(|l| l.strip_prefix("--- exit "))
        .and_then(|c| c.parse().ok())
}
