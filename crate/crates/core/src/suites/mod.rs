//! Verification suites with deterministic reports.

mod algebra;
mod lie;

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::dsl::{parse, Env, Tables, Value};
use crate::error::{Error, Result};
use crate::ring::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Residue,
    TableIncomplete,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Residue => "residue",
            Status::TableIncomplete => "table-incomplete",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub inputs: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<Record>,
}

impl SuiteReport {
    pub fn count(&self, s: Status) -> usize {
        self.items.iter().filter(|r| r.status == s).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Status::Pass) == self.items.len()
    }

    /// 0 all pass, 1 residues or errors, 2 only table gaps.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Residue) + self.count(Status::Error) > 0 {
            1
        } else if self.count(Status::TableIncomplete) > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.items {
            let _ = write!(s, "{:<16} {:<28} {}", r.status.label(), r.id, r.inputs);
            if let Some(ms) = r.elapsed_ms {
                let _ = write!(s, " ({ms:.1} ms)");
            }
            s.push('\n');
            if let Some(res) = &r.residue {
                for line in res.lines() {
                    let _ = writeln!(s, "    {line}");
                }
            }
        }
        let _ = writeln!(
            s,
            "suite {}: {} items, {} pass, {} residue, {} table-incomplete, {} error",
            self.suite,
            self.items.len(),
            self.count(Status::Pass),
            self.count(Status::Residue),
            self.count(Status::TableIncomplete),
            self.count(Status::Error)
        );
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Result of a single check.
pub enum Outcome {
    Pass,
    Residue(String),
}

type Check = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Item {
    pub id: String,
    pub inputs: String,
    check: Check,
}

impl Item {
    pub fn new(
        id: impl Into<String>,
        inputs: impl Into<String>,
        check: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Item {
        Item {
            id: id.into(),
            inputs: inputs.into(),
            check: Box::new(check),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub timings: bool,
}

pub const SUITES: [&str; 10] = [
    "transcripts",
    "identities",
    "jordan-oracle",
    "peirce",
    "linearization",
    "roots",
    "l00",
    "exp-anchors",
    "commutators",
    "weyl",
];

pub fn items(name: &str, tables: &Arc<Tables>) -> Result<Vec<Item>> {
    Ok(match name {
        "transcripts" => algebra::transcripts(tables),
        "identities" => algebra::identities(),
        "jordan-oracle" => algebra::jordan_oracle(),
        "peirce" => algebra::peirce(),
        "linearization" => algebra::linearization(),
        "roots" => algebra::roots(),
        "l00" => lie::l00(tables),
        "exp-anchors" => lie::exp_anchors(tables),
        "commutators" => lie::commutators(tables),
        "weyl" => lie::weyl(tables),
        other => return Err(Error::Config(format!("unknown suite '{other}'"))),
    })
}

pub fn run(name: &str, tables: &Arc<Tables>, opts: &Options) -> Result<SuiteReport> {
    let items = items(name, tables)?;
    let records = items
        .par_iter()
        .map(|it| {
            let start = Instant::now();
            let r = (it.check)();
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let (status, residue) = match r {
                Ok(Outcome::Pass) => (Status::Pass, None),
                Ok(Outcome::Residue(s)) => (Status::Residue, Some(s)),
                Err(e) => match e.root() {
                    Error::MissingTableEntry { .. } => {
                        (Status::TableIncomplete, Some(e.root().to_string()))
                    }
                    _ => (Status::Error, Some(e.to_string())),
                },
            };
            Record {
                id: it.id.clone(),
                inputs: it.inputs.clone(),
                status,
                residue,
                elapsed_ms: opts.timings.then_some(ms),
            }
        })
        .collect();
    Ok(SuiteReport {
        suite: name.to_string(),
        items: records,
    })
}

/// Evaluate source text in a context.
pub fn eval_src(src: &str, ctx: &Context, tables: &Tables) -> Result<Value> {
    Env::new(ctx, tables).run(&parse(src)?)
}

/// Pass iff `value` renders as `want`.
pub fn expect_render(value: impl std::fmt::Display, want: &str) -> Outcome {
    let got = value.to_string();
    if got == want {
        Outcome::Pass
    } else {
        Outcome::Residue(format!("expected {want}\n     got {got}"))
    }
}

pub fn expect_zero(v: &Value) -> Outcome {
    if v.is_zero() {
        Outcome::Pass
    } else {
        Outcome::Residue(v.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        let t = Arc::new(Tables::shipped());
        assert!(run("nope", &t, &Options::default()).is_err());
    }

    #[test]
    fn exit_code_precedence() {
        let rec = |status| Record {
            id: "a".into(),
            inputs: String::new(),
            status,
            residue: None,
            elapsed_ms: None,
        };
        let mut r = SuiteReport {
            suite: "s".into(),
            items: vec![rec(Status::Pass)],
        };
        assert_eq!(r.exit_code(), 0);
        r.items.push(rec(Status::TableIncomplete));
        assert_eq!(r.exit_code(), 2);
        r.items.push(rec(Status::Residue));
        assert_eq!(r.exit_code(), 1);
    }
}
