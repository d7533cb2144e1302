//! Canonical ideal, duals, closures, type sequence and Gorenstein-type
//! classification of a semigroup ring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

/// `[r_1, ..., r_n]`; `r_1` is the Cohen–Macaulay type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeSequence {
    pub entries: Vec<i64>,
}

impl TypeSequence {
    pub fn r(&self) -> i64 {
        self.entries[0]
    }

    /// `r_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingClass {
    pub is_gorenstein: bool,
    pub is_almost_gorenstein: bool,
    pub is_kunz: bool,
    pub cm_type: i64,
}

/// `K = { j : c - 1 - j ∉ S }`, the canonical ideal with `S ⊆ K ⊆ ℕ`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> ValueIdeal {
    let c = s.conductor();
    ValueIdeal::from_predicate(s, 0, c, |j| !s.contains(c - 1 - j))
}

/// `R_i = { s ∈ S : s >= s_i }` for `0 <= i <= n`.
pub fn tail_ideal(s: &NumericalSemigroup, i: usize) -> ValueIdeal {
    let si = s.small_elements()[i];
    ValueIdeal::from_predicate(s, si, s.conductor().max(si), |z| s.contains(z))
}

/// `S − E`.
pub fn dual(e: &ValueIdeal) -> ValueIdeal {
    ValueIdeal::whole(e.carrier()).quotient(e).expect("same carrier")
}

/// `S − (S − E)`.
pub fn bidual(e: &ValueIdeal) -> ValueIdeal {
    dual(&dual(e))
}

pub fn is_reflexive(e: &ValueIdeal) -> bool {
    bidual(e) == *e
}

/// `E + K`.
pub fn omega_product(e: &ValueIdeal) -> ValueIdeal {
    e.sum(&canonical_ideal(e.carrier())).expect("same carrier")
}

fn require_integral(e: &ValueIdeal) -> Result<()> {
    let s = ValueIdeal::whole(e.carrier());
    match (e.min()..e.frontier().max(e.min() + 1)).find(|&z| e.contains(z) && !s.contains(z)) {
        Some(witness) => Err(Error::NotIntegral { witness }),
        None => Ok(()),
    }
}

/// `(E + K) ∩ S`.
pub fn canonical_closure(e: &ValueIdeal) -> Result<ValueIdeal> {
    require_integral(e)?;
    omega_product(e).intersect(&ValueIdeal::whole(e.carrier()))
}

/// `(min E + ℕ) ∩ S`.
pub fn integral_closure(e: &ValueIdeal) -> Result<ValueIdeal> {
    require_integral(e)?;
    ValueIdeal::cofinite_from(e.carrier(), e.min()).intersect(&ValueIdeal::whole(e.carrier()))
}

fn check_nonregular(s: &NumericalSemigroup) -> Result<()> {
    if s.is_naturals() {
        Err(Error::RegularRing)
    } else {
        Ok(())
    }
}

/// `r_i = #((S − R_i) \ (S − R_{i-1}))`.
pub fn type_sequence_via_duals(s: &NumericalSemigroup) -> Result<TypeSequence> {
    check_nonregular(s)?;
    let duals: Vec<ValueIdeal> = (0..=s.n()).map(|i| dual(&tail_ideal(s, i))).collect();
    let entries = duals
        .windows(2)
        .map(|w| w[1].length_over(&w[0]))
        .collect::<Result<_>>()?;
    Ok(TypeSequence { entries })
}

/// `r_i = #((K + R_{i-1}) \ (K + R_i))`.
pub fn type_sequence_via_canonical(s: &NumericalSemigroup) -> Result<TypeSequence> {
    check_nonregular(s)?;
    let k = canonical_ideal(s);
    let prods: Vec<ValueIdeal> = (0..=s.n())
        .map(|i| k.sum(&tail_ideal(s, i)))
        .collect::<Result<_>>()?;
    let entries = prods
        .windows(2)
        .map(|w| w[0].length_over(&w[1]))
        .collect::<Result<_>>()?;
    Ok(TypeSequence { entries })
}

/// The type sequence, computed both ways; disagreement is reported as an
/// internal invariant violation.
pub fn type_sequence(s: &NumericalSemigroup) -> Result<TypeSequence> {
    let a = type_sequence_via_duals(s)?;
    let b = type_sequence_via_canonical(s)?;
    if a != b {
        return Err(Error::Invariant(format!(
            "type sequences disagree on {s}: duals {:?}, canonical {:?}",
            a.entries, b.entries
        )));
    }
    Ok(a)
}

/// The four almost-Gorenstein tests, in order: `M + K = M`,
/// `r - 1 = 2δ - c`, type sequence `[r, 1, ..., 1]`, `S − K ⊇ M`.
pub fn almost_gorenstein_tests(s: &NumericalSemigroup) -> [bool; 4] {
    let k = canonical_ideal(s);
    let m = ValueIdeal::maximal(s);
    let r = cm_type(s);
    let by_product = m.sum(&k).expect("same carrier") == m;
    let by_count = r - 1 == 2 * s.genus() - s.conductor();
    let by_sequence = match type_sequence_via_duals(s) {
        Ok(ts) => ts.entries[1..].iter().all(|&x| x == 1),
        Err(_) => true,
    };
    let by_colon = dual(&k).contains_ideal(&m).expect("same carrier");
    [by_product, by_count, by_sequence, by_colon]
}

/// `l((S − M)/S)`.
pub fn cm_type(s: &NumericalSemigroup) -> i64 {
    let whole = ValueIdeal::whole(s);
    dual(&ValueIdeal::maximal(s))
        .length_over(&whole)
        .expect("S − M contains S")
}

pub fn classify(s: &NumericalSemigroup) -> Result<RingClass> {
    let tests = almost_gorenstein_tests(s);
    if tests.iter().any(|&t| t != tests[0]) {
        return Err(Error::EquivalenceViolation {
            group: "almost Gorenstein".into(),
            detail: format!("{s}: {tests:?}"),
        });
    }
    let cm_type = cm_type(s);
    let is_gorenstein = canonical_ideal(s) == ValueIdeal::whole(s);
    let is_almost_gorenstein = tests[0];
    if is_gorenstein != (is_almost_gorenstein && cm_type == 1) {
        return Err(Error::EquivalenceViolation {
            group: "Gorenstein".into(),
            detail: format!("{s}: K = S is {is_gorenstein}, type {cm_type}"),
        });
    }
    Ok(RingClass {
        is_gorenstein,
        is_almost_gorenstein,
        is_kunz: is_almost_gorenstein && cm_type == 2,
        cm_type,
    })
}

/// Ring-level data shared by every ideal of one semigroup.
#[derive(Clone, Debug)]
pub struct RingInvariants {
    pub semigroup: NumericalSemigroup,
    pub whole: ValueIdeal,
    pub maximal: ValueIdeal,
    pub canonical: ValueIdeal,
    /// `S − K`.
    pub anticanonical: ValueIdeal,
    /// `S − M`.
    pub dual_maximal: ValueIdeal,
    /// Absent for `S = ℕ`.
    pub type_sequence: Option<TypeSequence>,
    pub class: RingClass,
}

impl RingInvariants {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        let canonical = canonical_ideal(s);
        let type_sequence = match type_sequence(s) {
            Ok(ts) => Some(ts),
            Err(Error::RegularRing) => None,
            Err(e) => return Err(e),
        };
        Ok(RingInvariants {
            semigroup: s.clone(),
            whole: ValueIdeal::whole(s),
            maximal: ValueIdeal::maximal(s),
            anticanonical: dual(&canonical),
            dual_maximal: dual(&ValueIdeal::maximal(s)),
            canonical,
            type_sequence,
            class: classify(s)?,
        })
    }

    pub fn r(&self) -> i64 {
        self.class.cm_type
    }

    /// `r_i` with 1-based `i`.
    pub fn r_i(&self, i: usize) -> i64 {
        self.type_sequence.as_ref().map_or(0, |ts| ts.get(i))
    }
}
