use crate::blowup::BlowupReport;
use crate::ideal::ValueIdeal;
use crate::invariants::RingInvariants;
use crate::semigroup::NumericalSemigroup;

use super::{Check, Quantity, Relation};

/// Quantities shared by many statements, computed once per pair.
pub struct PairContext<'a> {
    pub ri: &'a RingInvariants,
    pub rep: BlowupReport,
    pub c: i64,
    pub delta: i64,
    pub n: usize,
    /// `e = min E`.
    pub e: i64,
    pub nu: i64,
    pub rho: i64,
    pub r: i64,
    /// Embedding dimension of `S`.
    pub mu: i64,
    pub is_maximal: bool,
    pub ag: bool,
    pub gor: bool,
    pub kunz: bool,
    /// `ℕ`.
    pub naturals: ValueIdeal,
    /// `c + ℕ`.
    pub conductor: ValueIdeal,
    /// `c_Λ + ℕ`.
    pub conductor_lambda: ValueIdeal,
    /// `l(S/νE)`.
    pub l_s_p: i64,
    /// `l(S − Λ / νE)`.
    pub l_rl_p: i64,
    /// `l(Λ**/Λ)`.
    pub l_lb_l: i64,
    /// `l(K + Λ / Λ)`.
    pub l_ol_l: i64,
    /// `l(S / S − Λ)`.
    pub l_s_rl: i64,
    pub sum_gamma_minus_one: i64,
    pub sum_not_gamma: i64,
    pub sum_not_gamma_minus_one: i64,
}

fn len(big: &ValueIdeal, small: &ValueIdeal) -> i64 {
    big.length_over(small).expect("nested by construction")
}

impl<'a> PairContext<'a> {
    pub fn new(ri: &'a RingInvariants, rep: BlowupReport) -> Self {
        let s = &ri.semigroup;
        let p = rep.power_nu().clone();
        let in_gamma = |i: usize| rep.gamma_set.binary_search(&i).is_ok();
        let n = s.n();
        let sum_gamma_minus_one = rep.gamma_set.iter().map(|&i| ri.r_i(i) - 1).sum();
        let sum_not_gamma = (1..=n).filter(|&i| !in_gamma(i)).map(|i| ri.r_i(i)).sum();
        let sum_not_gamma_minus_one = (1..=n).filter(|&i| !in_gamma(i)).map(|i| ri.r_i(i) - 1).sum();
        PairContext {
            c: s.conductor(),
            delta: s.genus(),
            n,
            e: rep.e(),
            nu: rep.nu() as i64,
            rho: rep.rho(),
            r: ri.r(),
            mu: s.embedding_dimension() as i64,
            is_maximal: rep.ideal == ri.maximal,
            ag: ri.class.is_almost_gorenstein,
            gor: ri.class.is_gorenstein,
            kunz: ri.class.is_kunz,
            naturals: ValueIdeal::cofinite_from(s, 0),
            conductor: ValueIdeal::cofinite_from(s, s.conductor()),
            conductor_lambda: ValueIdeal::cofinite_from(s, rep.c_lambda),
            l_s_p: len(&ri.whole, &p),
            l_rl_p: len(&rep.r_colon_lambda, &p),
            l_lb_l: len(&rep.lambda_bidual, &rep.lambda),
            l_ol_l: len(&rep.omega_lambda, &rep.lambda),
            l_s_rl: len(&ri.whole, &rep.r_colon_lambda),
            sum_gamma_minus_one,
            sum_not_gamma,
            sum_not_gamma_minus_one,
            ri,
            rep,
        }
    }

    pub fn s(&self) -> &NumericalSemigroup {
        &self.ri.semigroup
    }

    /// `νE`.
    pub fn p(&self) -> &ValueIdeal {
        self.rep.power_nu()
    }

    /// `kE` for `k <= max(ν + 1, 3)`.
    pub fn power(&self, k: usize) -> &ValueIdeal {
        &self.rep.powers[k]
    }

    pub fn lambda(&self) -> &ValueIdeal {
        &self.rep.lambda
    }

    pub fn rl(&self) -> &ValueIdeal {
        &self.rep.r_colon_lambda
    }

    pub fn k(&self) -> &ValueIdeal {
        &self.ri.canonical
    }

    pub fn d(&self) -> i64 {
        self.rep.d_invariant
    }

    /// `2δ − c`.
    pub fn excess(&self) -> i64 {
        2 * self.delta - self.c
    }

    /// `(c − δ) − (c_Λ − δ_Λ)`.
    pub fn conductor_colength_gap(&self) -> i64 {
        (self.c - self.delta) - (self.rep.c_lambda - self.rep.delta_lambda)
    }

    /// The three equivalent conductor conditions hold (`c − c_Λ = eν`).
    pub fn conductor_conditions(&self) -> bool {
        self.c - self.rep.c_lambda == self.e * self.nu
    }

    pub fn len(&self, big: &ValueIdeal, small: &ValueIdeal) -> i64 {
        len(big, small)
    }

    pub fn sum(&self, a: &ValueIdeal, b: &ValueIdeal) -> ValueIdeal {
        a.sum(b).expect("same carrier")
    }

    pub fn quo(&self, a: &ValueIdeal, b: &ValueIdeal) -> ValueIdeal {
        a.quotient(b).expect("same carrier")
    }

    pub fn incl(&self, small: &ValueIdeal, big: &ValueIdeal) -> bool {
        big.contains_ideal(small).expect("same carrier")
    }

    /// A fixed family of ideals derived from the pair, used by statements
    /// quantified over all fractional ideals.
    pub fn probe_ideals(&self) -> Vec<(&'static str, ValueIdeal)> {
        vec![
            ("E", self.rep.ideal.clone()),
            ("M", self.ri.maximal.clone()),
            ("2E", self.power(2).clone()),
            ("νE", self.p().clone()),
            ("Λ", self.lambda().clone()),
            ("Λ**", self.rep.lambda_bidual.clone()),
            ("K+Λ", self.rep.omega_lambda.clone()),
            ("S−Λ", self.rl().clone()),
            ("S−M", self.ri.dual_maximal.clone()),
            ("K", self.ri.canonical.clone()),
        ]
    }
}

/// Collects checks for one statement.
#[derive(Default)]
pub struct Ev {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Ev {
    fn push(&mut self, label: &str, relation: Relation, lhs: Quantity, rhs: Quantity, ok: bool) {
        self.checks.push(Check { label: label.to_string(), relation, lhs, rhs, ok });
    }

    pub fn eq(&mut self, label: &str, lhs: i64, rhs: i64) {
        self.push(label, Relation::Eq, Quantity::Int(lhs), Quantity::Int(rhs), lhs == rhs);
    }

    pub fn le(&mut self, label: &str, lhs: i64, rhs: i64) {
        self.push(label, Relation::Le, Quantity::Int(lhs), Quantity::Int(rhs), lhs <= rhs);
    }

    pub fn holds(&mut self, label: &str, v: bool) {
        self.push(label, Relation::Holds, Quantity::Bool(v), Quantity::Bool(true), v);
    }

    pub fn iff(&mut self, label: &str, a: bool, b: bool) {
        self.push(label, Relation::Iff, Quantity::Bool(a), Quantity::Bool(b), a == b);
    }

    pub fn implies(&mut self, label: &str, a: bool, b: bool) {
        self.push(label, Relation::Implies, Quantity::Bool(a), Quantity::Bool(b), !a || b);
    }

    /// Pairwise `iff` of every flag against the first.
    pub fn all_equivalent(&mut self, names: &[&str], flags: &[bool]) {
        for k in 1..flags.len() {
            self.iff(&format!("{} ⟺ {}", names[0], names[k]), flags[0], flags[k]);
        }
    }

    pub fn set_eq(&mut self, label: &str, a: &ValueIdeal, b: &ValueIdeal) {
        self.push(label, Relation::Eq, Quantity::Set(a.into()), Quantity::Set(b.into()), a == b);
    }

    /// `a ⊆ b`.
    pub fn subset(&mut self, label: &str, a: &ValueIdeal, b: &ValueIdeal) {
        let ok = b.contains_ideal(a).expect("same carrier");
        self.push(label, Relation::Subset, Quantity::Set(a.into()), Quantity::Set(b.into()), ok);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}
