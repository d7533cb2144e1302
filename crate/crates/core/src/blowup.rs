//! Powers of a monomial ideal, its Hilbert function and h-polynomial, and
//! the blow-up `Λ = ⋃ (nE − nE)` together with the objects built from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::invariants::{bidual, dual, RingInvariants};

/// `h_0 + h_1 z + ... + h_ν z^ν` with `e = h(1)` and `ρ = h'(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HPolynomial {
    pub coeffs: Vec<i64>,
    pub e: i64,
    pub rho: i64,
    pub nu: usize,
}

impl HPolynomial {
    pub fn is_symmetric(&self) -> bool {
        let c = &self.coeffs;
        c.iter().eq(c.iter().rev())
    }

    /// Renders as `1+4z+z^2+z^4`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, &h) in self.coeffs.iter().enumerate() {
            if h == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push(if h < 0 { '-' } else { '+' });
            } else if h < 0 {
                out.push('-');
            }
            let a = h.abs();
            match i {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&a.to_string());
                    }
                    out.push('z');
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `kE`, by repeated doubling; `power(E, 0) = S`.
pub fn power(e: &ValueIdeal, k: u32) -> ValueIdeal {
    let mut acc = ValueIdeal::whole(e.carrier());
    let mut base = e.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.sum(&base).expect("same carrier");
        }
        k >>= 1;
        if k > 0 {
            base = base.sum(&base).expect("same carrier");
        }
    }
    acc
}

/// `[0E, 1E, ..., kE]`.
pub fn powers_up_to(e: &ValueIdeal, k: usize) -> Vec<ValueIdeal> {
    let mut out = vec![ValueIdeal::whole(e.carrier())];
    for _ in 0..k {
        let next = out.last().unwrap().sum(e).expect("same carrier");
        out.push(next);
    }
    out
}

/// `H(n) = #(nE \ (n+1)E)` for `0 <= n <= n_max`.
pub fn hilbert_function(e: &ValueIdeal, n_max: usize) -> Vec<i64> {
    let p = powers_up_to(e, n_max + 1);
    p.windows(2)
        .map(|w| w[0].length_over(&w[1]).expect("powers descend"))
        .collect()
}

/// Rejects ideals that are not proper or are principal.
pub fn check_analysis_input(e: &ValueIdeal) -> Result<()> {
    let m = ValueIdeal::maximal(e.carrier());
    if let Err(Error::NotNested { witness }) = m.length_over(e) {
        return Err(Error::NotProper { witness });
    }
    if e.is_principal() {
        return Err(Error::PrincipalIdeal);
    }
    Ok(())
}

fn h_from_hilbert(hilbert: &[i64], e: i64) -> Result<HPolynomial> {
    let nu = hilbert
        .iter()
        .position(|&h| h == e)
        .ok_or_else(|| Error::Invariant(format!("Hilbert function {hilbert:?} never reaches {e}")))?;
    let mut coeffs = vec![hilbert[0]];
    coeffs.extend((1..=nu).map(|i| hilbert[i] - hilbert[i - 1]));
    let rho = hilbert[..nu].iter().map(|h| e - h).sum();
    let hp = HPolynomial { coeffs, e, rho, nu };
    let h1: i64 = hp.coeffs.iter().sum();
    let dh1: i64 = hp.coeffs.iter().enumerate().map(|(i, h)| i as i64 * h).sum();
    if h1 != e || dh1 != rho {
        return Err(Error::Invariant(format!("h(1) = {h1}, h'(1) = {dh1} for e = {e}, ρ = {rho}")));
    }
    Ok(hp)
}

/// The h-polynomial, with `e = min E` and `ν` the first `n` where `H(n) = e`.
pub fn h_polynomial(e: &ValueIdeal) -> Result<HPolynomial> {
    check_analysis_input(e)?;
    let a = e.min();
    let hilbert = hilbert_function(e, a as usize);
    h_from_hilbert(&hilbert, a)
}

/// `nE − nE` for increasing `n` until it stops growing at or after `ν`.
pub fn blowup_lambda_by_quotients(e: &ValueIdeal, nu: usize) -> Result<ValueIdeal> {
    let cap = (e.min() as usize).max(nu) + 1;
    let mut p = e.clone();
    let mut prev = p.quotient(&p)?;
    for n in 1..=cap {
        p = p.sum(e)?;
        let next = p.quotient(&p)?;
        if !next.contains_ideal(&prev)? {
            return Err(Error::Invariant(format!("quotient chain not ascending at n = {n}")));
        }
        if n >= nu && next == prev {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Invariant(format!("quotient chain not stable by n = {cap}")))
}

/// The semigroup generated by `S ∪ (E − min E)`.
pub fn blowup_lambda_by_generation(e: &ValueIdeal) -> ValueIdeal {
    let t = e.shift(-e.min());
    let mut g = t.clone();
    loop {
        let next = g.sum(&t).expect("same carrier");
        if next == g {
            return g;
        }
        g = next;
    }
}

/// `Λ`, computed both ways and cross-checked.
pub fn blowup_lambda(e: &ValueIdeal) -> Result<ValueIdeal> {
    let h = h_polynomial(e)?;
    let q = blowup_lambda_by_quotients(e, h.nu)?;
    let g = blowup_lambda_by_generation(e);
    if q != g {
        return Err(Error::Invariant(format!("blow-up by quotients {q} differs from generated {g}")));
    }
    Ok(q)
}

/// Every condition of groups A and B, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConditionsAB {
    /// `K ⊆ Λ`.
    pub a1: bool,
    /// `K + Λ = Λ`.
    pub a2: bool,
    /// `K − Λ = S − Λ`.
    pub a3: bool,
    /// `nE = (nE + K) ∩ S` for all `n >= ν`.
    pub a4: bool,
    /// `K + nE = nE` for all `n >= ν`.
    pub a5: bool,
    /// `K + nE = nE` for some `n > 0`.
    pub a6: bool,
    /// `Λ = Λ**`.
    pub b1: bool,
    /// `K − Λ = K + (S − Λ)`.
    pub b2: bool,
    /// `S − Λ ⊆ S − K`.
    pub colon_in_anticanonical: bool,
}

impl ConditionsAB {
    pub fn group_a(&self) -> [bool; 6] {
        [self.a1, self.a2, self.a3, self.a4, self.a5, self.a6]
    }

    pub fn group_b(&self) -> [bool; 2] {
        [self.b1, self.b2]
    }

    pub fn a(&self) -> bool {
        self.a1
    }

    pub fn b(&self) -> bool {
        self.b1
    }

    /// Internal agreement of each group and the rule `A ⟺ (B ∧ S − Λ ⊆ S − K)`.
    pub fn consistent(&self) -> Result<()> {
        let a = self.group_a();
        if a.iter().any(|&x| x != a[0]) {
            return Err(Error::EquivalenceViolation { group: "A".into(), detail: format!("{a:?}") });
        }
        let b = self.group_b();
        if b[0] != b[1] {
            return Err(Error::EquivalenceViolation { group: "B".into(), detail: format!("{b:?}") });
        }
        if a[0] != (b[0] && self.colon_in_anticanonical) {
            return Err(Error::EquivalenceViolation {
                group: "A/B".into(),
                detail: format!("A = {}, B = {}, colon inclusion = {}", a[0], b[0], self.colon_in_anticanonical),
            });
        }
        Ok(())
    }
}

/// Last exponent that has to be inspected for statements quantified over all
/// `n >= ν`: past it, `nE` lies inside the conductor and each such condition
/// is invariant under `n ↦ n + 1`.
pub fn stable_exponent_bound(e: &ValueIdeal, nu: usize) -> usize {
    let c = e.carrier().conductor();
    let a = e.min();
    nu.max(((c + a - 1) / a) as usize) + 1
}

/// Evaluates groups A and B for `E` with blow-up `Λ` and exponent `ν`.
pub fn conditions_a_b(ri: &RingInvariants, e: &ValueIdeal, lambda: &ValueIdeal, nu: usize) -> ConditionsAB {
    let k = &ri.canonical;
    let s = &ri.whole;
    let sum = |x: &ValueIdeal, y: &ValueIdeal| x.sum(y).expect("same carrier");
    let quo = |x: &ValueIdeal, y: &ValueIdeal| x.quotient(y).expect("same carrier");
    let top = stable_exponent_bound(e, nu);
    let powers = powers_up_to(e, top);
    let rl = quo(s, lambda);
    let k_colon_l = quo(k, lambda);
    let absorbs = |p: &ValueIdeal| sum(k, p) == *p;
    ConditionsAB {
        a1: lambda.contains_ideal(k).expect("same carrier"),
        a2: sum(k, lambda) == *lambda,
        a3: k_colon_l == rl,
        a4: powers[nu..=top]
            .iter()
            .all(|p| sum(p, k).intersect(s).expect("same carrier") == *p),
        a5: powers[nu..=top].iter().all(absorbs),
        a6: powers[1..=nu].iter().any(absorbs),
        b1: bidual(lambda) == *lambda,
        b2: k_colon_l == sum(k, &rl),
        colon_in_anticanonical: ri.anticanonical.contains_ideal(&rl).expect("same carrier"),
    }
}

/// Groups A and B for `E`, failing if any prescribed equivalence breaks.
pub fn check_conditions_a_b(ri: &RingInvariants, e: &ValueIdeal) -> Result<ConditionsAB> {
    let h = h_polynomial(e)?;
    let lambda = blowup_lambda(e)?;
    let cond = conditions_a_b(ri, e, &lambda, h.nu);
    cond.consistent()?;
    Ok(cond)
}

/// Everything computed for one pair `(S, E)`.
#[derive(Clone, Debug)]
pub struct BlowupReport {
    pub ideal: ValueIdeal,
    /// `H(0..=ν+1)`.
    pub hilbert: Vec<i64>,
    pub h: HPolynomial,
    /// `0E, 1E, ..., kE` with `k = max(ν + 1, 3)`.
    pub powers: Vec<ValueIdeal>,
    pub lambda: ValueIdeal,
    pub lambda_bidual: ValueIdeal,
    /// `K + Λ`.
    pub omega_lambda: ValueIdeal,
    /// `S − Λ`.
    pub r_colon_lambda: ValueIdeal,
    pub c_lambda: i64,
    pub delta_lambda: i64,
    /// Indices `i ∈ 1..=n` with `s_{i-1} ∈ S − Λ`.
    pub gamma_set: Vec<usize>,
    pub gamma_sum: i64,
    pub d_invariant: i64,
    /// `s_{i0} = min(S − Λ)`.
    pub i0: usize,
    pub h_symmetric: bool,
    pub conditions: ConditionsAB,
    /// `S − Λ = νE`.
    pub colon_is_power_nu: bool,
    /// `c + ℕ ⊆ νE`.
    pub conductor_in_power_nu: bool,
}

impl BlowupReport {
    pub fn e(&self) -> i64 {
        self.h.e
    }

    pub fn nu(&self) -> usize {
        self.h.nu
    }

    pub fn rho(&self) -> i64 {
        self.h.rho
    }

    /// `νE`.
    pub fn power_nu(&self) -> &ValueIdeal {
        &self.powers[self.h.nu]
    }

    pub fn lambda_is_gorenstein(&self) -> bool {
        self.c_lambda == 2 * self.delta_lambda
    }
}

/// Full analysis of a proper, non-principal ideal.
pub fn analyze(ri: &RingInvariants, e: &ValueIdeal) -> Result<BlowupReport> {
    check_analysis_input(e)?;
    if !e.carrier().same_as(&ri.semigroup) {
        return Err(Error::CarrierMismatch);
    }
    let s = &ri.semigroup;
    let a = e.min();
    let all_powers = powers_up_to(e, a as usize + 1);
    let full_hilbert: Vec<i64> = all_powers
        .windows(2)
        .map(|w| w[0].length_over(&w[1]))
        .collect::<Result<_>>()?;
    let h = h_from_hilbert(&full_hilbert, a)?;
    let nu = h.nu;
    if full_hilbert[..nu].iter().any(|&x| x > a) || full_hilbert[nu..].iter().any(|&x| x != a) {
        return Err(Error::Invariant(format!("Hilbert function {full_hilbert:?} is not bounded by e = {a}")));
    }
    let lambda = blowup_lambda_by_quotients(e, nu)?;
    let generated = blowup_lambda_by_generation(e);
    if lambda != generated {
        return Err(Error::Invariant(format!("blow-up by quotients {lambda} differs from generated {generated}")));
    }
    if lambda == ri.whole {
        return Err(Error::DegenerateBlowup);
    }
    // ν by its three characterizations.
    let by_quotient = all_powers.iter().position(|p| p.quotient(p).ok().as_ref() == Some(&lambda));
    let by_absorption = all_powers.iter().position(|p| p.sum(&lambda).ok().as_ref() == Some(p));
    if by_quotient != Some(nu) || by_absorption != Some(nu) {
        return Err(Error::Invariant(format!(
            "reduction exponent disagrees: Hilbert {nu}, quotient {by_quotient:?}, absorption {by_absorption:?}"
        )));
    }
    let keep = (nu + 1).max(3);
    let powers: Vec<ValueIdeal> = if keep < all_powers.len() {
        all_powers[..=keep].to_vec()
    } else {
        let mut p = all_powers;
        while p.len() <= keep {
            let next = p.last().unwrap().sum(e)?;
            p.push(next);
        }
        p
    };
    let hilbert = full_hilbert[..=nu + 1].to_vec();
    let lambda_bidual = bidual(&lambda);
    let omega_lambda = ri.canonical.sum(&lambda)?;
    let r_colon_lambda = dual(&lambda);
    let naturals = ValueIdeal::cofinite_from(s, 0);
    let c_lambda = lambda.frontier();
    let delta_lambda = naturals.length_over(&lambda)?;
    let small = s.small_elements();
    let gamma_set: Vec<usize> = (1..=s.n()).filter(|&i| r_colon_lambda.contains(small[i - 1])).collect();
    let gamma_sum = gamma_set.iter().map(|&i| ri.r_i(i)).sum::<i64>();
    let d_invariant = naturals.length_over(&lambda_bidual)? - gamma_sum;
    let i0 = small
        .iter()
        .position(|&x| x == r_colon_lambda.min())
        .ok_or_else(|| Error::Invariant(format!("min(S − Λ) = {} is not a small element", r_colon_lambda.min())))?;
    let conditions = conditions_a_b(ri, e, &lambda, nu);
    let p_nu = &powers[nu];
    Ok(BlowupReport {
        ideal: e.clone(),
        colon_is_power_nu: r_colon_lambda == *p_nu,
        conductor_in_power_nu: p_nu.contains_ideal(&ValueIdeal::cofinite_from(s, s.conductor()))?,
        h_symmetric: h.is_symmetric(),
        hilbert,
        h,
        powers,
        lambda,
        lambda_bidual,
        omega_lambda,
        r_colon_lambda,
        c_lambda,
        delta_lambda,
        gamma_set,
        gamma_sum,
        d_invariant,
        i0,
        conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn powers_by_doubling_match_iteration() {
        let g = s(&[7, 8, 12, 13, 18]);
        let m = ValueIdeal::maximal(&g);
        let it = powers_up_to(&m, 6);
        for (k, p) in it.iter().enumerate() {
            assert_eq!(power(&m, k as u32), *p);
        }
        assert_eq!(power(&m, 4), ValueIdeal::cofinite_from(&g, 28));
        assert_eq!(power(&m, 1), m);
    }

    #[test]
    fn h_polynomial_of_three_four() {
        let g = s(&[3, 4]);
        let h = h_polynomial(&ValueIdeal::maximal(&g)).unwrap();
        assert_eq!(h.coeffs, vec![1, 1, 1]);
        assert_eq!((h.e, h.nu, h.rho), (3, 2, 3));
        assert!(h.is_symmetric());
        assert_eq!(h.render(), "1+z+z^2");
    }

    #[test]
    fn h_polynomial_of_seven_eight() {
        let g = s(&[7, 8, 12, 13, 18]);
        let h = h_polynomial(&ValueIdeal::maximal(&g)).unwrap();
        assert_eq!(h.coeffs, vec![1, 4, 1, 0, 1]);
        assert_eq!(h.render(), "1+4z+z^2+z^4");
        assert_eq!((h.e, h.nu, h.rho), (7, 4, 10));
    }

    #[test]
    fn input_checks() {
        let g = s(&[3, 4]);
        assert_eq!(h_polynomial(&ValueIdeal::principal(&g, 3)), Err(Error::PrincipalIdeal));
        assert_eq!(
            h_polynomial(&ValueIdeal::whole(&g)),
            Err(Error::NotProper { witness: 0 })
        );
        let n = NumericalSemigroup::naturals();
        assert_eq!(h_polynomial(&ValueIdeal::maximal(&n)), Err(Error::PrincipalIdeal));
    }

    #[test]
    fn blowups_of_ten_twelve() {
        let g = NumericalSemigroup::from_explicit(&[0, 10, 12], 20).unwrap();
        let i = ValueIdeal::from_generators(&g, &[10, 12]).unwrap();
        let l = blowup_lambda(&i).unwrap();
        assert_eq!(l.as_semigroup().unwrap(), s(&[2, 21]));
        let l = blowup_lambda(&ValueIdeal::maximal(&g)).unwrap();
        assert_eq!(l.as_semigroup().unwrap(), s(&[2, 11]));
    }

    #[test]
    fn analysis_of_three_four() {
        let g = s(&[3, 4]);
        let ri = RingInvariants::new(&g).unwrap();
        let rep = analyze(&ri, &ri.maximal).unwrap();
        assert_eq!(rep.lambda, ValueIdeal::cofinite_from(&g, 0));
        assert_eq!(rep.r_colon_lambda, ValueIdeal::cofinite_from(&g, 6));
        assert!(rep.colon_is_power_nu);
        assert_eq!(rep.d_invariant, 0);
        assert!(rep.conditions.a() && rep.conditions.b());
        rep.conditions.consistent().unwrap();
    }
}
