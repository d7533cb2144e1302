//! Converses that fail, each shown on one of the worked examples: the weaker
//! condition holds there while the stronger one does not.

use serde::{Deserialize, Serialize};

use crate::blowup::analyze;
use crate::error::Result;

use super::context::PairContext;
use super::fixtures::{fixture, load_case};

type Condition = fn(&PairContext) -> bool;

pub struct NonImplication {
    pub id: &'static str,
    pub fixture: &'static str,
    /// Index into the fixture's cases.
    pub case: usize,
    pub weaker: &'static str,
    pub stronger: &'static str,
    weaker_test: Condition,
    stronger_test: Condition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutcome {
    pub id: String,
    pub fixture: String,
    pub ideal: String,
    pub weaker: String,
    pub stronger: String,
    pub weaker_holds: bool,
    pub stronger_holds: bool,
    pub confirmed: bool,
}

fn conductor_conditions(cx: &PairContext) -> bool {
    cx.conductor_conditions()
}

pub fn non_implications() -> Vec<NonImplication> {
    vec![
        NonImplication {
            id: "dual-of-power-in-naturals",
            fixture: "ex2",
            case: 0,
            weaker: "S − νE ⊆ ℕ",
            stronger: "c − c_Λ = eν",
            weaker_test: |cx| cx.incl(&cx.quo(&cx.ri.whole, cx.p()), &cx.naturals),
            stronger_test: conductor_conditions,
        },
        NonImplication {
            id: "conductor-transitivity",
            fixture: "ex3",
            case: 0,
            weaker: "c+ℕ = (S−Λ) + (c_Λ+ℕ)",
            stronger: "c − c_Λ = eν",
            weaker_test: |cx| cx.sum(cx.rl(), &cx.conductor_lambda) == cx.conductor,
            stronger_test: conductor_conditions,
        },
        NonImplication {
            id: "conductor-conditions-vs-colon",
            fixture: "ex4",
            case: 0,
            weaker: "c − c_Λ = eν",
            stronger: "S − Λ = νE",
            weaker_test: conductor_conditions,
            stronger_test: |cx| cx.rl() == cx.p(),
        },
        NonImplication {
            id: "colon-is-power-vs-d",
            fixture: "ex5",
            case: 0,
            weaker: "S − Λ = νE",
            stronger: "d = 0",
            weaker_test: |cx| cx.rl() == cx.p(),
            stronger_test: |cx| cx.d() == 0,
        },
        NonImplication {
            id: "colength-vs-symmetry-gorenstein",
            fixture: "ex6",
            case: 0,
            weaker: "Gorenstein ∧ 2ρ = eν ∧ l(S−Λ/νE) = r − 1",
            stronger: "h symmetric",
            weaker_test: |cx| cx.gor && 2 * cx.rho == cx.e * cx.nu && cx.l_rl_p == cx.r - 1,
            stronger_test: |cx| cx.rep.h_symmetric,
        },
        NonImplication {
            id: "colength-vs-symmetry-almost-gorenstein",
            fixture: "ex7",
            case: 0,
            weaker: "almost Gorenstein, r > 1, l(S−Λ/νE) = r − 1",
            stronger: "h symmetric",
            weaker_test: |cx| cx.ag && cx.r > 1 && cx.l_rl_p == cx.r - 1,
            stronger_test: |cx| cx.rep.h_symmetric,
        },
        NonImplication {
            id: "multiplicity-excess-vs-nu",
            fixture: "ex3",
            case: 0,
            weaker: "almost Gorenstein ∧ 2(e − μ − 1) = r − 1",
            stronger: "ν = 2",
            weaker_test: |cx| cx.ag && 2 * (cx.e - cx.mu - 1) == cx.r - 1,
            stronger_test: |cx| cx.nu == 2,
        },
    ]
}

/// Evaluates one non-implication on its example.
pub fn confirm(w: &NonImplication) -> Result<WitnessOutcome> {
    let f = fixture(w.fixture).expect("witness names a built-in fixture");
    let case = &f.cases[w.case];
    let (ri, e) = load_case(&f, case)?;
    let cx = PairContext::new(&ri, analyze(&ri, &e)?);
    let weaker_holds = (w.weaker_test)(&cx);
    let stronger_holds = (w.stronger_test)(&cx);
    Ok(WitnessOutcome {
        id: w.id.to_string(),
        fixture: w.fixture.to_string(),
        ideal: case.ideal.to_string(),
        weaker: w.weaker.to_string(),
        stronger: w.stronger.to_string(),
        weaker_holds,
        stronger_holds,
        confirmed: weaker_holds && !stronger_holds,
    })
}

pub fn confirm_all() -> Result<Vec<WitnessOutcome>> {
    non_implications().iter().map(confirm).collect()
}
