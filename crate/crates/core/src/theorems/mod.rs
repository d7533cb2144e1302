//! Checkable statements relating the invariants of a pair `(S, E)`, the
//! universes they are checked over, and the suite runner.

mod context;
pub mod enumerate;
pub mod fixtures;
mod statements;
pub mod suite;
pub mod witnesses;

use serde::{Deserialize, Serialize};

use crate::blowup::{analyze, BlowupReport};
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::invariants::RingInvariants;
use crate::report::{PairDoc, SetDoc};

pub use context::PairContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Held,
    Vacuous,
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    Le,
    Subset,
    Iff,
    Implies,
    Holds,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "≤",
            Relation::Subset => "⊆",
            Relation::Iff => "⟺",
            Relation::Implies => "⟹",
            Relation::Holds => "is",
        }
    }
}

/// A value appearing on one side of a check.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Bool(bool),
    Int(i64),
    Set(SetDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub relation: Relation,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub statement_id: String,
    pub hypotheses_met: bool,
    pub status: Status,
    /// False only for a failed check; vacuous verdicts count as holding.
    pub holds: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Full data of the pair, attached to failures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Box<PairDoc>>,
}

impl TheoremVerdict {
    pub fn failed(&self) -> bool {
        self.status == Status::Failed
    }
}

type StatementFn = fn(&PairContext, &mut context::Ev) -> bool;

/// One catalog entry.
pub struct Statement {
    pub id: &'static str,
    pub summary: &'static str,
    check: StatementFn,
}

/// The full statement catalog in a fixed order.
pub fn catalog() -> &'static [Statement] {
    statements::CATALOG
}

fn matches_filter(id: &str, filter: &str) -> bool {
    id == filter || (id.starts_with(filter) && id[filter.len()..].starts_with('.'))
}

/// Catalog entries selected by a list of ids or id prefixes (`Thm4.7`
/// selects `Thm4.7.1` and `Thm4.7.2`). `None` selects everything.
pub fn select(filter: Option<&[String]>) -> Result<Vec<&'static Statement>> {
    let Some(filter) = filter else {
        return Ok(catalog().iter().collect());
    };
    for f in filter {
        if !catalog().iter().any(|s| matches_filter(s.id, f)) {
            return Err(Error::UnknownStatement(f.clone()));
        }
    }
    Ok(catalog()
        .iter()
        .filter(|s| filter.iter().any(|f| matches_filter(s.id, f)))
        .collect())
}

/// Runs one statement against a prepared context.
pub fn run_statement(st: &Statement, cx: &PairContext) -> TheoremVerdict {
    let mut ev = context::Ev::default();
    let met = (st.check)(cx, &mut ev);
    let status = if !met {
        Status::Vacuous
    } else if ev.checks.iter().all(|c| c.ok) {
        Status::Held
    } else {
        Status::Failed
    };
    let witness = (status == Status::Failed).then(|| Box::new(PairDoc::new(cx.ri, &cx.rep)));
    TheoremVerdict {
        statement_id: st.id.to_string(),
        hypotheses_met: met,
        status,
        holds: status != Status::Failed,
        checks: if met { ev.checks } else { Vec::new() },
        notes: ev.notes,
        witness,
    }
}

/// Verifies the statement `id` for the pair `(S, E)`.
pub fn verify_statement(id: &str, ri: &RingInvariants, e: &ValueIdeal) -> Result<TheoremVerdict> {
    let st = catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownStatement(id.to_string()))?;
    let rep = analyze(ri, e)?;
    Ok(run_statement(st, &PairContext::new(ri, rep)))
}

/// Verdicts of every selected statement for one analyzed pair.
pub fn verify_all(ri: &RingInvariants, rep: BlowupReport, selected: &[&Statement]) -> Vec<TheoremVerdict> {
    let cx = PairContext::new(ri, rep);
    selected.iter().map(|st| run_statement(st, &cx)).collect()
}
