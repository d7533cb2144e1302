//! Serializable documents. Sets are written as their finite part plus the
//! point from which every integer is a member.

use serde::{Deserialize, Serialize};

use crate::blowup::{BlowupReport, ConditionsAB};
use crate::ideal::ValueIdeal;
use crate::invariants::{is_reflexive, RingClass, RingInvariants};
use crate::notation::{render_ideal, render_semigroup};
use crate::semigroup::{render_runs, NumericalSemigroup};
use crate::theorems::TheoremVerdict;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetDoc {
    pub elements: Vec<i64>,
    pub cofinite_from: i64,
}

impl SetDoc {
    /// Explicit notation such as `{0,5-7,10->}`.
    pub fn render(&self) -> String {
        let mut parts = render_runs(&self.elements);
        parts.push(format!("{}->", self.cofinite_from));
        format!("{{{}}}", parts.join(","))
    }
}

impl From<&ValueIdeal> for SetDoc {
    fn from(e: &ValueIdeal) -> Self {
        SetDoc { elements: e.members_below_frontier(), cofinite_from: e.frontier() }
    }
}

impl From<&NumericalSemigroup> for SetDoc {
    fn from(s: &NumericalSemigroup) -> Self {
        SetDoc { elements: s.small_elements()[..s.n()].to_vec(), cofinite_from: s.conductor() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub notation: String,
    pub generators: Vec<i64>,
    pub small_elements: Vec<i64>,
    pub c: i64,
    pub delta: i64,
    pub n: usize,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub type_sequence: Vec<i64>,
    pub class: RingClass,
    pub canonical: SetDoc,
}

impl SemigroupDoc {
    pub fn new(ri: &RingInvariants) -> Self {
        let s = &ri.semigroup;
        SemigroupDoc {
            notation: render_semigroup(s),
            generators: s.min_generators().to_vec(),
            small_elements: s.small_elements().to_vec(),
            c: s.conductor(),
            delta: s.genus(),
            n: s.n(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            type_sequence: ri.type_sequence.as_ref().map(|t| t.entries.clone()).unwrap_or_default(),
            class: ri.class,
            canonical: (&ri.canonical).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub notation: String,
    pub generators: Vec<i64>,
    pub set: SetDoc,
    pub reflexive: bool,
}

impl IdealDoc {
    pub fn new(e: &ValueIdeal) -> Self {
        IdealDoc {
            notation: render_ideal(e),
            generators: e.minimal_generators(),
            set: e.into(),
            reflexive: is_reflexive(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDoc {
    /// `H(0..=ν+1)`.
    #[serde(rename = "H")]
    pub hilbert: Vec<i64>,
    pub h: Vec<i64>,
    pub h_text: String,
    pub e: i64,
    pub nu: usize,
    pub rho: i64,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupDoc {
    pub lambda: SetDoc,
    pub lambda_small_elements: Vec<i64>,
    pub lambda_bidual: SetDoc,
    pub omega_lambda: SetDoc,
    pub r_colon_lambda: SetDoc,
    pub power_nu: SetDoc,
    pub c_lambda: i64,
    pub delta_lambda: i64,
    pub gamma_set: Vec<usize>,
    pub gamma_sum: i64,
    pub d: i64,
    pub i0: usize,
    pub lambda_gorenstein: bool,
    pub lambda_reflexive: bool,
    pub colon_is_power_nu: bool,
    pub conductor_in_power_nu: bool,
    pub conditions: ConditionsAB,
}

/// Everything known about one pair `(S, E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub semigroup: SemigroupDoc,
    pub ideal: IdealDoc,
    pub hilbert: HilbertDoc,
    pub blowup: BlowupDoc,
}

impl PairDoc {
    pub fn new(ri: &RingInvariants, rep: &BlowupReport) -> Self {
        let l = &rep.lambda;
        let lambda_small_elements = (0..=rep.c_lambda).filter(|&z| l.contains(z)).collect();
        PairDoc {
            semigroup: SemigroupDoc::new(ri),
            ideal: IdealDoc::new(&rep.ideal),
            hilbert: HilbertDoc {
                hilbert: rep.hilbert.clone(),
                h: rep.h.coeffs.clone(),
                h_text: rep.h.render(),
                e: rep.h.e,
                nu: rep.h.nu,
                rho: rep.h.rho,
                symmetric: rep.h_symmetric,
            },
            blowup: BlowupDoc {
                lambda: l.into(),
                lambda_small_elements,
                lambda_bidual: (&rep.lambda_bidual).into(),
                omega_lambda: (&rep.omega_lambda).into(),
                r_colon_lambda: (&rep.r_colon_lambda).into(),
                power_nu: rep.power_nu().into(),
                c_lambda: rep.c_lambda,
                delta_lambda: rep.delta_lambda,
                gamma_set: rep.gamma_set.clone(),
                gamma_sum: rep.gamma_sum,
                d: rep.d_invariant,
                i0: rep.i0,
                lambda_gorenstein: rep.lambda_is_gorenstein(),
                lambda_reflexive: rep.lambda_bidual == rep.lambda,
                colon_is_power_nu: rep.colon_is_power_nu,
                conductor_in_power_nu: rep.conductor_in_power_nu,
                conditions: rep.conditions,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDoc {
    pub semigroup: String,
    pub ideal: String,
}

/// Output of a single analysis: the pair and every statement verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeDoc {
    pub input: InputDoc,
    #[serde(flatten)]
    pub pair: PairDoc,
    pub verdicts: Vec<TheoremVerdict>,
}
