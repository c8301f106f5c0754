//! Regression corpus: `cases/*.json` files of the form
//! `{"name": .., "args": [..], "exit": 0, "expect": {"/json/pointer": value}}`.
//! Arguments naming files under the corpus directory are resolved there.

use std::path::{Path, PathBuf};

use clap::Parser;
use reg_obstruct::io::{self, Render};
use reg_obstruct::{Error, RingKind};
use serde::{Deserialize, Serialize};

use crate::commands::{self, Failure};
use crate::{Cli, Command, Outcome};

#[derive(Debug, Deserialize)]
struct Case {
    name: String,
    args: Vec<String>,
    exit: u8,
    #[serde(default)]
    expect: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub exit: u8,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CorpusReport {
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl Render for CorpusReport {
    fn render(&self, _: RingKind) -> String {
        let mut s = String::new();
        for c in &self.cases {
            s.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
            for p in &c.problems {
                s.push_str(&format!("     {p}\n"));
            }
        }
        s.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        s
    }
}

fn bundled() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn run_case(dir: &Path, case: &Case) -> CaseResult {
    let mut argv = vec!["reg-obstruct".to_string()];
    for a in &case.args {
        let p = dir.join(a);
        argv.push(if !a.starts_with('-') && p.is_file() { p.display().to_string() } else { a.clone() });
    }
    let mut problems = Vec::new();
    let (exit, json) = match Cli::try_parse_from(&argv) {
        Err(e) => {
            problems.push(format!("arguments rejected: {}", e.kind()));
            (2, None)
        }
        Ok(Cli { command: Command::Corpus { .. }, .. }) => {
            problems.push("nested corpus runs are not allowed".into());
            (2, None)
        }
        Ok(cli) => match commands::run(&cli.command) {
            Ok(Outcome { code, json, .. }) => (code, serde_json::from_str::<serde_json::Value>(&json).ok()),
            Err(Failure { code, message, .. }) => {
                if code != case.exit {
                    problems.push(message);
                }
                (code, None)
            }
        },
    };
    if exit != case.exit {
        problems.push(format!("exit {exit}, expected {}", case.exit));
    }
    for (ptr, want) in &case.expect {
        let got = json.as_ref().and_then(|j| j.pointer(ptr));
        if got != Some(want) {
            problems.push(format!("{ptr}: got {}, expected {want}", got.map_or("nothing".into(), |g| g.to_string())));
        }
    }
    CaseResult { name: case.name.clone(), passed: problems.is_empty(), exit, problems }
}

pub fn run(dir: Option<&Path>, filter: Option<&str>) -> Result<Outcome, Failure> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(bundled);
    let cases_dir = dir.join("cases");
    let entries = std::fs::read_dir(&cases_dir)
        .map_err(|e| Failure::from(Error::Invalid(format!("{}: {e}", cases_dir.display()))))?;
    let mut files: Vec<PathBuf> =
        entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
    files.sort();
    let mut results = Vec::new();
    for f in files {
        let case: Case = io::read_json(&f)?;
        if filter.is_some_and(|n| !case.name.contains(n)) {
            continue;
        }
        results.push(run_case(&dir, &case));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let report = CorpusReport { passed: results.len() - failed, failed, cases: results };
    Ok(Outcome { code: u8::from(failed > 0), json: io::to_json(&report)?, text: report.render(RingKind::Integers) })
}
