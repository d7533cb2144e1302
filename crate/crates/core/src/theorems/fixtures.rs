//! Ten worked examples with their published values, replayed against the
//! full pipeline.

use serde::{Deserialize, Serialize};

use crate::blowup::{analyze, power};
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::invariants::{is_reflexive, RingInvariants};
use crate::notation::{parse_ideal, parse_semigroup};
use crate::semigroup::NumericalSemigroup;

use super::context::PairContext;

/// What a claim expects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Int(i64),
    Bool(bool),
    /// Compared literally with the measured text.
    Text(&'static str),
    /// A set in `<g1,...>` or `{a,b-c,x->}` notation.
    Set(&'static str),
}

/// A measured value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Measured {
    Int(i64),
    Bool(bool),
    Text(String),
    Set(ValueIdeal),
}

type Measure = Box<dyn Fn(&PairContext) -> Measured + Send + Sync>;

pub struct Claim {
    pub label: &'static str,
    pub expect: Expect,
    measure: Measure,
}

pub struct FixtureCase {
    pub ideal: &'static str,
    pub claims: Vec<Claim>,
}

pub struct Fixture {
    pub id: &'static str,
    pub semigroup: &'static str,
    pub cases: Vec<FixtureCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub ideal: String,
    pub claims: Vec<ClaimOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseOutcome {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.claims.iter().all(|c| c.ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub id: String,
    pub semigroup: String,
    pub cases: Vec<CaseOutcome>,
    pub pass: bool,
}

fn int(label: &'static str, v: i64, f: impl Fn(&PairContext) -> i64 + Send + Sync + 'static) -> Claim {
    Claim { label, expect: Expect::Int(v), measure: Box::new(move |cx| Measured::Int(f(cx))) }
}

fn flag(label: &'static str, v: bool, f: impl Fn(&PairContext) -> bool + Send + Sync + 'static) -> Claim {
    Claim { label, expect: Expect::Bool(v), measure: Box::new(move |cx| Measured::Bool(f(cx))) }
}

fn text(label: &'static str, v: &'static str, f: impl Fn(&PairContext) -> String + Send + Sync + 'static) -> Claim {
    Claim { label, expect: Expect::Text(v), measure: Box::new(move |cx| Measured::Text(f(cx))) }
}

fn set(label: &'static str, v: &'static str, f: impl Fn(&PairContext) -> ValueIdeal + Send + Sync + 'static) -> Claim {
    Claim { label, expect: Expect::Set(v), measure: Box::new(move |cx| Measured::Set(f(cx))) }
}

/// Parses `<g1,...>` or `{a,b-c,x->}` into a set over `s`. Unlike
/// semigroup notation the explicit form need not contain `0`.
pub fn parse_set(s: &NumericalSemigroup, text: &str) -> Result<ValueIdeal> {
    let t = text.trim();
    if t.starts_with('<') {
        let g = parse_semigroup(t)?;
        return Ok(ValueIdeal::from_predicate(s, 0, g.conductor(), |z| g.contains(z)));
    }
    let bad = |msg: &str| Error::Syntax { pos: 0, msg: msg.to_string() };
    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(|| bad("expected '{...}'"))?;
    let mut members = Vec::new();
    let mut tail = None;
    for item in inner.split(',').map(str::trim) {
        let num = |x: &str| x.trim().parse::<i64>().map_err(|_| bad("expected an integer"));
        let sign = usize::from(item.starts_with('-'));
        if let Some(a) = item.strip_suffix("->") {
            tail = Some(num(a)?);
        } else if let Some(k) = item[sign..].find('-') {
            let (a, b) = item.split_at(sign + k);
            members.extend(num(a)?..=num(&b[1..])?);
        } else {
            members.push(num(item)?);
        }
    }
    let tail = tail.ok_or_else(|| bad("missing 'x->' item"))?;
    let lo = members.iter().copied().min().unwrap_or(tail).min(tail);
    let e = ValueIdeal::from_predicate(s, lo, tail, |z| z >= tail || members.contains(&z));
    if !e.is_closed_under_carrier() {
        return Err(bad("set is not closed under the semigroup"));
    }
    Ok(e)
}

fn render_list<T: ToString>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

fn quotient_of_power(cx: &PairContext, k: u32) -> ValueIdeal {
    let p = power(&cx.rep.ideal, k);
    cx.quo(&p, &p)
}

/// The ten examples.
pub fn builtin_fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            id: "ex1",
            semigroup: "{0,10,12,20->}",
            cases: vec![
                FixtureCase {
                    ideal: "ideal(10,12)",
                    claims: vec![
                        set("blow-up Λ", "<2,21>", |cx| cx.lambda().clone()),
                        int("conductor c", 20, |cx| cx.c),
                        int("conductor c_Λ", 20, |cx| cx.rep.c_lambda),
                        flag("(c−δ) − (c_Λ−δ_Λ) = −ρ", true, |cx| cx.conductor_colength_gap() == -cx.rho),
                    ],
                },
                FixtureCase {
                    ideal: "m",
                    claims: vec![
                        set("blow-up Λ", "<2,11>", |cx| cx.lambda().clone()),
                        int("c − c_Λ", 10, |cx| cx.c - cx.rep.c_lambda),
                        int("multiplicity e", 10, |cx| cx.e),
                        flag("(c−δ) − (c_Λ−δ_Λ) = e − ρ", true, |cx| cx.conductor_colength_gap() == cx.e - cx.rho),
                        int("(c−δ) − (c_Λ−δ_Λ)", -2, |cx| cx.conductor_colength_gap()),
                    ],
                },
            ],
        },
        Fixture {
            id: "ex2",
            semigroup: "{0,5,10,11,12,15,16,17,19->}",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    text("generators", "<5,11,12,19>", |cx| cx.s().generator_notation()),
                    int("reduction exponent ν", 2, |cx| cx.nu),
                    set("blow-up Λ", "{0,5,6,7,10->}", |cx| cx.lambda().clone()),
                    set("S − 2M", "{0,5,6,7,9->}", |cx| cx.quo(&cx.ri.whole, cx.power(2))),
                    flag("S − 2M ⊆ ℕ", true, |cx| cx.incl(&cx.quo(&cx.ri.whole, cx.power(2)), &cx.naturals)),
                    int("c − c_Λ", 9, |cx| cx.c - cx.rep.c_lambda),
                    int("eν", 10, |cx| cx.e * cx.nu),
                ],
            }],
        },
        Fixture {
            id: "ex3",
            semigroup: "<7,8,12,13,18>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    text("explicit form", "{0,7,8,12-16,18->}", |cx| cx.s().explicit_notation()),
                    flag("almost Gorenstein", true, |cx| cx.ag),
                    text("h-polynomial", "1+4z+z^2+z^4", |cx| cx.rep.h.render()),
                    set("4M", "{28->}", |cx| cx.power(4).clone()),
                    set("blow-up Λ", "{0->}", |cx| cx.lambda().clone()),
                    set("S − Λ", "{18->}", |cx| cx.rl().clone()),
                    flag("S − Λ = c+ℕ", true, |cx| *cx.rl() == cx.conductor),
                    flag("c+ℕ = (S−Λ) + (c_Λ+ℕ)", true, |cx| cx.sum(cx.rl(), &cx.conductor_lambda) == cx.conductor),
                    int("c − c_Λ", 18, |cx| cx.c - cx.rep.c_lambda),
                    int("eν", 28, |cx| cx.e * cx.nu),
                    int("multiplicity e", 7, |cx| cx.e),
                    int("embedding dimension μ", 5, |cx| cx.mu),
                    int("type r", 3, |cx| cx.r),
                    int("reduction exponent ν", 4, |cx| cx.nu),
                    flag("2(e − μ − 1) = r − 1", true, |cx| 2 * (cx.e - cx.mu - 1) == cx.r - 1),
                ],
            }],
        },
        Fixture {
            id: "ex4",
            semigroup: "<5,21,32,48>",
            cases: vec![
                FixtureCase {
                    ideal: "m",
                    claims: vec![
                        text(
                            "explicit form",
                            "{0,5,10,15,20,21,25,26,30-32,35-37,40-42,45-48,50-53,55-58,60->}",
                            |cx| cx.s().explicit_notation(),
                        ),
                        flag("almost Gorenstein", true, |cx| cx.ag),
                        int("type r", 3, |cx| cx.r),
                        flag("e = μ + 1", true, |cx| cx.e == cx.mu + 1),
                        set(
                            "blow-up Λ",
                            "{0,5,10,15,16,20,21,25-27,30-32,35-37,40-43,45-48,50->}",
                            |cx| cx.lambda().clone(),
                        ),
                        int("reduction exponent ν", 2, |cx| cx.nu),
                        int("c − c_Λ", 10, |cx| cx.c - cx.rep.c_lambda),
                        int("eν", 10, |cx| cx.e * cx.nu),
                        flag("Λ reflexive", true, |cx| is_reflexive(cx.lambda())),
                        flag("2M ⊊ S − Λ", true, |cx| cx.incl(cx.power(2), cx.rl()) && cx.power(2) != cx.rl()),
                    ],
                },
                FixtureCase {
                    ideal: "ideal(31,32,40)",
                    claims: vec![
                        flag("E reflexive", false, |cx| is_reflexive(&cx.rep.ideal)),
                        flag("Λ = 4E − 4E", true, |cx| quotient_of_power(cx, 4) == *cx.lambda()),
                        set("blow-up Λ", "{0->}", |cx| cx.lambda().clone()),
                        flag("Λ reflexive", true, |cx| is_reflexive(cx.lambda())),
                    ],
                },
            ],
        },
        Fixture {
            id: "ex5",
            semigroup: "{0,10,20,21,25,26,30-36,40-47,50->}",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    text("generators", "<10,21,25,26,32,33,34>", |cx| cx.s().generator_notation()),
                    set("blow-up Λ", "{0,10,11,15,16,20-27,30->}", |cx| cx.lambda().clone()),
                    flag("Λ = Λ**", true, |cx| *cx.lambda() == cx.rep.lambda_bidual),
                    flag("Λ = 2M − 2M", true, |cx| quotient_of_power(cx, 2) == *cx.lambda()),
                    flag("S − Λ = 2M", true, |cx| cx.rl() == cx.power(2)),
                    text("type sequence", "[3,2,1,2,1,3,1,1,1,1,1,1,2,1,1,1,1,1,1,1,2]", |cx| {
                        render_list(&(1..=cx.n).map(|i| cx.ri.r_i(i)).collect::<Vec<_>>())
                    }),
                    set("S − Λ", "{20,30,31,35,36,40-47,50->}", |cx| cx.rl().clone()),
                    text("Γ", "[3,7,8,12,13,14,15,16,17,18,19,20,21]", |cx| render_list(&cx.rep.gamma_set)),
                    int("Σ_Γ r_i", 15, |cx| cx.rep.gamma_sum),
                    int("l(ℕ/Λ)", 17, |cx| cx.rep.delta_lambda),
                    int("d", 2, |cx| cx.d()),
                ],
            }],
        },
        Fixture {
            id: "ex6",
            semigroup: "<11,12,15,25,29>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    text("explicit form", "{0,11,12,15,22-27,29,30,33-42,44->}", |cx| cx.s().explicit_notation()),
                    flag("Gorenstein", true, |cx| cx.gor),
                    text("h-polynomial", "1+4z+2z^2+2z^3+2z^4", |cx| cx.rep.h.render()),
                    flag("h symmetric", false, |cx| cx.rep.h_symmetric),
                    int("reduction exponent ν", 4, |cx| cx.nu),
                    int("genus ρ", 22, |cx| cx.rho),
                    flag("2ρ = eν", true, |cx| 2 * cx.rho == cx.e * cx.nu),
                    int("eν", 44, |cx| cx.e * cx.nu),
                ],
            }],
        },
        Fixture {
            id: "ex7",
            semigroup: "<10,23,55,58,82>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    flag("almost Gorenstein", true, |cx| cx.ag),
                    int("type r", 3, |cx| cx.r),
                    text("h-polynomial", "1+4z+z^2+2z^3+2z^4", |cx| cx.rep.h.render()),
                    flag("h symmetric", false, |cx| cx.rep.h_symmetric),
                    int("genus ρ", 20, |cx| cx.rho),
                    int("reduction exponent ν", 4, |cx| cx.nu),
                    flag("2ρ = eν", true, |cx| 2 * cx.rho == cx.e * cx.nu),
                ],
            }],
        },
        Fixture {
            id: "ex8",
            semigroup: "<10,16,79,85>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    flag("almost Gorenstein", true, |cx| cx.ag),
                    int("type r", 3, |cx| cx.r),
                    text("h-polynomial", "1+3z+2z^2+2z^3+2z^4", |cx| cx.rep.h.render()),
                    int("conductor c", 124, |cx| cx.c),
                    int("genus ρ", 21, |cx| cx.rho),
                    int("reduction exponent ν", 4, |cx| cx.nu),
                    flag("2ρ = eν + r − 1", true, |cx| 2 * cx.rho == cx.e * cx.nu + cx.r - 1),
                    flag("Λ = Λ**", true, |cx| *cx.lambda() == cx.rep.lambda_bidual),
                    flag("Λ Gorenstein", true, |cx| cx.rep.lambda_is_gorenstein()),
                    int("conductor c_Λ", 84, |cx| cx.rep.c_lambda),
                    flag("c_Λ = c − eν", true, |cx| cx.rep.c_lambda == cx.c - cx.e * cx.nu),
                ],
            }],
        },
        Fixture {
            id: "ex9",
            semigroup: "<6,11,16,20,25>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    flag("Λ = 2M − 2M", true, |cx| quotient_of_power(cx, 2) == *cx.lambda()),
                    flag("Λ reflexive", false, |cx| is_reflexive(cx.lambda())),
                ],
            }],
        },
        Fixture {
            id: "ex10",
            semigroup: "<8,10,13,15>",
            cases: vec![FixtureCase {
                ideal: "m",
                claims: vec![
                    text("explicit form", "{0,8,10,13,15,16,18,20,21,23-26,28->}", |cx| cx.s().explicit_notation()),
                    flag("almost Gorenstein", true, |cx| cx.ag),
                    int("type r", 3, |cx| cx.r),
                    flag("e = 2μ", true, |cx| cx.e == 2 * cx.mu),
                    text("h-polynomial", "1+3z+2z^2+2z^3", |cx| cx.rep.h.render()),
                    int("genus ρ", 13, |cx| cx.rho),
                    flag("2ρ = 2νμ + r − 1", true, |cx| 2 * cx.rho == 2 * cx.nu * cx.mu + cx.r - 1),
                    flag("S − Λ = 3M", true, |cx| cx.rl() == cx.power(3)),
                    int("conductor c_Λ", 4, |cx| cx.rep.c_lambda),
                    flag("c_Λ = c − eν", true, |cx| cx.rep.c_lambda == cx.c - cx.e * cx.nu),
                ],
            }],
        },
    ]
}

/// Finds a fixture by id.
pub fn fixture(id: &str) -> Option<Fixture> {
    builtin_fixtures().into_iter().find(|f| f.id == id)
}

/// Parses a fixture case into its semigroup invariants and ideal.
pub fn load_case(f: &Fixture, case: &FixtureCase) -> Result<(RingInvariants, ValueIdeal)> {
    let s = parse_semigroup(f.semigroup)?;
    let ri = RingInvariants::new(&s)?;
    let e = parse_ideal(&s, case.ideal)?;
    Ok((ri, e))
}

fn render_measured(m: &Measured) -> String {
    match m {
        Measured::Int(v) => v.to_string(),
        Measured::Bool(v) => v.to_string(),
        Measured::Text(t) => t.clone(),
        Measured::Set(e) => e.explicit_notation(),
    }
}

fn check_claim(cx: &PairContext, c: &Claim) -> ClaimOutcome {
    let actual = (c.measure)(cx);
    let (expected, ok) = match (&c.expect, &actual) {
        (Expect::Int(v), Measured::Int(a)) => (v.to_string(), v == a),
        (Expect::Bool(v), Measured::Bool(a)) => (v.to_string(), v == a),
        (Expect::Text(v), Measured::Text(a)) => (v.to_string(), v == a),
        (Expect::Set(v), Measured::Set(a)) => match parse_set(cx.s(), v) {
            Ok(e) => (e.explicit_notation(), e == *a),
            Err(err) => (format!("unparsable {v}: {err}"), false),
        },
        (e, _) => (format!("{e:?}"), false),
    };
    ClaimOutcome { label: c.label.to_string(), expected, actual: render_measured(&actual), ok }
}

fn replay_case(f: &Fixture, case: &FixtureCase) -> CaseOutcome {
    let run = || -> Result<Vec<ClaimOutcome>> {
        let (ri, e) = load_case(f, case)?;
        let rep = analyze(&ri, &e)?;
        let cx = PairContext::new(&ri, rep);
        Ok(case.claims.iter().map(|c| check_claim(&cx, c)).collect())
    };
    match run() {
        Ok(claims) => CaseOutcome { ideal: case.ideal.to_string(), claims, error: None },
        Err(err) => CaseOutcome { ideal: case.ideal.to_string(), claims: Vec::new(), error: Some(err.to_string()) },
    }
}

/// Replays one fixture.
pub fn replay_fixture(f: &Fixture) -> FixtureOutcome {
    let cases: Vec<CaseOutcome> = f.cases.iter().map(|c| replay_case(f, c)).collect();
    let pass = cases.iter().all(CaseOutcome::pass);
    FixtureOutcome { id: f.id.to_string(), semigroup: f.semigroup.to_string(), cases, pass }
}

/// Replays every fixture in order.
pub fn replay_fixtures() -> Vec<FixtureOutcome> {
    builtin_fixtures().iter().map(replay_fixture).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_sets_parse() {
        let s = parse_semigroup("{0,10,20,21,25,26,30-36,40-47,50->}").unwrap();
        let e = parse_set(&s, "{20,30,31,35,36,40-47,50->}").unwrap();
        assert_eq!(e.min(), 20);
        assert_eq!(e.frontier(), 50);
        assert!(parse_set(&s, "{20,50->}").is_err());
        assert_eq!(parse_set(&s, "{-10,0,10,-5->}").unwrap().min(), -10);
        assert_eq!(parse_set(&s, "{-12--10,-5->}").unwrap().explicit_notation(), "{-12--10,-5->}");
        let t = parse_semigroup("{0,10,12,20->}").unwrap();
        let l = parse_set(&t, "<2,21>").unwrap();
        assert_eq!(l.explicit_notation(), "{0,2,4,6,8,10,12,14,16,18,20->}");
    }

    #[test]
    fn every_fixture_passes() {
        for out in replay_fixtures() {
            for case in &out.cases {
                assert_eq!(case.error, None, "{} {}", out.id, case.ideal);
                for c in &case.claims {
                    assert!(c.ok, "{} {} {}: expected {} got {}", out.id, case.ideal, c.label, c.expected, c.actual);
                }
            }
            assert!(out.pass);
        }
    }
}
