use crate::blowup::{power, stable_exponent_bound};
use crate::ideal::ValueIdeal;
use crate::invariants::{almost_gorenstein_tests, bidual, canonical_closure, integral_closure, is_reflexive, tail_ideal};

use super::context::{Ev, PairContext};
use super::Statement;

macro_rules! st {
    ($id:literal, $summary:literal, $f:ident) => {
        Statement { id: $id, summary: $summary, check: $f }
    };
}

pub(super) static CATALOG: &[Statement] = &[
    st!("Prelim2.2.1", "na + Λ = nE + Λ for every n", prelim_2_2_1),
    st!("Prelim2.2.2", "H(n) ≤ e with equality from ν on", prelim_2_2_2),
    st!("Prelim2.2.3", "ν ≤ e−1 and the characterizations of ν", prelim_2_2_3),
    st!("Prelim2.2.4", "ρ = l(Λ/S) and l(S/nE) = en − ρ for n ≥ ν", prelim_2_2_4),
    st!("Prelim2.2.5", "symmetric h gives l(S/νE) = eν/2", prelim_2_2_5),
    st!("Prelim2.2.6", "νE ⊆ S−Λ, and S−Λ = nE forces n = ν", prelim_2_2_6),
    st!("Prelim2.4.1", "K−K = S and K−(K−J) = J", prelim_2_4_1),
    st!("Prelim2.4.2", "l(A/B) = l((K−B)/(K−A)) for B ⊆ A", prelim_2_4_2),
    st!("Prelim2.4.3", "c−1 ∉ K and c+ℕ ⊆ K", prelim_2_4_3),
    st!("Prelim2.4.4", "Gorenstein iff K = S iff S−K = S, else c+ℕ ⊆ S−K ⊆ M", prelim_2_4_4),
    st!("Prelim2.4.5", "s ∈ J+K iff c−1−s ∉ S−J", prelim_2_4_5),
    st!("Prelim2.5", "bounds and sums of the type sequence", prelim_2_5),
    st!("Prelim2.6", "the almost Gorenstein tests agree", prelim_2_6),
    st!("Prelim2.7", "J ⊆ J** ⊆ J+K", prelim_2_7),
    st!("Prelim2.8", "J ⊆ J** ⊆ canonical closure ⊆ integral closure", prelim_2_8),
    st!("Prop2.9", "groups A and B and the cross rule", prop_2_9),
    st!("Rmk2.10.1", "almost Gorenstein: A iff B", rmk_2_10_1),
    st!("Rmk2.10.2", "E a translate of K: A and B hold", rmk_2_10_2),
    st!("Diag3.1", "inclusions between conductors and S−Λ", diag_3_1),
    st!("Prop3.2.1", "c − c_Λ ≤ eν", prop_3_2_1),
    st!("Prop3.2.2", "conductor colength identity and bound", prop_3_2_2),
    st!("Prop3.2.3", "four equivalent conductor conditions", prop_3_2_3),
    st!("Rmk3.3.1", "lower bounds for the conductor colength gap", rmk_3_3_1),
    st!("Rmk3.3.2", "conductor conditions give S−νE ⊆ ℕ", rmk_3_3_2),
    st!("Rmk3.3.3", "conductor conditions give c+ℕ = (S−Λ)+(c_Λ+ℕ)", rmk_3_3_3),
    st!("Lemma3.4", "S−Λ = νE gives the conductor conditions and Λ = Λ**", lemma_3_4),
    st!("Prop3.5.1", "2ρ = eν + (2δ−c) − l(S−Λ/νE) − l(K+Λ/Λ)", prop_3_5_1),
    st!("Prop3.5.2", "four conditions for 2ρ = eν + 2δ − c", prop_3_5_2),
    st!("Def4.1", "#Γ identities and d ≥ 0", def_4_1),
    st!("Prop4.2", "l(ℕ/K+Λ) ≤ Σ_Γ r_i ≤ l(ℕ/Λ**)", prop_4_2),
    st!("Prop4.3.1", "d = l(K+Λ/Λ**) − Σ_Γ (r_i−1)", prop_4_3_1),
    st!("Prop4.3.2", "K ⊆ Λ** forces d = 0", prop_4_3_2),
    st!("Prop4.3.3", "d through the index i0", prop_4_3_3),
    st!("Prop4.3.4", "integrally closed S−Λ forces d = 0", prop_4_3_4),
    st!("Thm4.4.1", "ρ through the type sequence, and ρ ≤ r·l(S/S−Λ)", thm_4_4_1),
    st!("Thm4.4.2", "ρ through the index i0", thm_4_4_2),
    st!("Rmk4.5", "when ρ = r·l(S/S−Λ)", rmk_4_5),
    st!("Cor4.6.1", "eν + r·l(S−Λ/νE) ≤ (r+1)·l(S/νE)", cor_4_6_1),
    st!("Cor4.6.2", "symmetric h: 2r·l(S−Λ/νE) ≤ (r−1)eν", cor_4_6_2),
    st!("Thm4.7.1", "2ρ = eν + Σ_{i∉Γ}(r_i−1) − d − l(Λ**/Λ) − l(S−Λ/νE)", thm_4_7_1),
    st!("Thm4.7.2", "equality in the bound iff S−Λ = νE and d = 0", thm_4_7_2),
    st!("Prop5.1", "almost Gorenstein iff J+K = J** for non-principal J", prop_5_1),
    st!("Cor5.2", "almost Gorenstein: Λ** = K+Λ, d = 0, ρ formula", cor_5_2),
    st!("Thm5.3.1", "almost Gorenstein: 2ρ = eν + r − 1 − corrections", thm_5_3_1),
    st!("Thm5.3.2", "almost Gorenstein: four conditions for 2ρ = eν + r − 1", thm_5_3_2),
    st!("Cor5.4", "almost Gorenstein, symmetric h: l(S−Λ/νE) ≤ r−1", cor_5_4),
    st!("Cor5.5", "Gorenstein, symmetric h: S−Λ = νE", cor_5_5),
    st!("Cor5.6", "almost Gorenstein: c+ℕ = νE iff Λ = ℕ and 2δ = eν + r − 1", cor_5_6),
    st!("Refl5.8", "almost Gorenstein: J reflexive iff J−J ⊇ S−M", refl_5_8),
    st!("Thm5.9", "almost Gorenstein: group C and reflexive E", thm_5_9),
    st!("Rmk6.1", "E = M: S−Λ ⊆ e+(S−M) and its colength", rmk_6_1),
    st!("Stable6.2", "E = M: stability conditions agree", stable_6_2),
    st!("Prop6.3", "E = M, e = μ: almost Gorenstein iff Λ Gorenstein", prop_6_3),
    st!("Case6.4", "E = M, e = μ+1: shape of h", case_6_4),
    st!("Lemma6.4.3", "E = M, r = e−2: 3M ⊆ e+M", lemma_6_4_3),
    st!("Prop6.5.1", "E = M, r = e−2: e = μ+1", prop_6_5_1),
    st!("Prop6.5.2", "E = M, e = μ+1: l(e+(S−M) / S−Λ) = 1", prop_6_5_2),
    st!("Thm6.6", "E = M, e = μ+1: l(S−Λ/νM) = r−1+(e−1)(ν−2)", thm_6_6),
    st!("Cor6.7.1", "E = M, e = μ+1: S−Λ = νM iff Gorenstein and ν = 2", cor_6_7_1),
    st!("Cor6.7.2", "E = M, e = μ+1: type sequence identity", cor_6_7_2),
    st!("Cor6.7.3", "E = M, e = μ+1: almost Gorenstein iff ν = 2 and K+Λ = Λ", cor_6_7_3),
    st!("Cor6.7.4", "E = M: r = e−2 and S−Λ = νM iff Gorenstein with e = 3", cor_6_7_4),
    st!("Case6.8", "E = M, ν = 2: ρ = 2e−μ−1", case_6_8),
    st!("Prop6.9.1", "E = M, ν = 2: 2e + r·l(S−Λ/2M) ≤ (r+1)(μ+1)", prop_6_9_1),
    st!("Prop6.9.2", "E = M, ν = 2, almost Gorenstein: 2(e−μ−1) = r−1−l(S−Λ/2M)", prop_6_9_2),
    st!("Prop6.9.3", "E = M, almost Gorenstein: S−Λ = 2M iff 2(e−μ−1) = r−1 and ν = 2", prop_6_9_3),
    st!("Cor6.10", "E = M, Gorenstein: e = μ+1 iff ν = 2 iff S−Λ = 2M", cor_6_10),
    st!("Prop6.11", "E = M: c+ℕ = 2M iff Λ = ℕ, 2(e−μ−1) = 2δ−c and ν = 2", prop_6_11),
    st!("Prop6.13.1", "E = M, ν = 3, r = 2: colength bound", prop_6_13_1),
    st!("Prop6.13.2", "E = M, ν = 3, symmetric h: e = 2μ and ρ = 3μ", prop_6_13_2),
    st!("Prop6.13.3", "E = M, ν = 3, almost Gorenstein: symmetric h criterion", prop_6_13_3),
    st!("Cor6.14", "E = M, almost Gorenstein, e = 2μ: S−Λ = νM iff 2ρ = 2νμ + r − 1", cor_6_14),
];

fn in_gamma(cx: &PairContext, i: usize) -> bool {
    cx.rep.gamma_set.binary_search(&i).is_ok()
}

fn sum_r(cx: &PairContext, pick: impl Fn(usize) -> bool) -> i64 {
    (1..=cx.n).filter(|&i| pick(i)).map(|i| cx.ri.r_i(i)).sum()
}

fn nth_power(cx: &PairContext, n: usize) -> ValueIdeal {
    match cx.rep.powers.get(n) {
        Some(p) => p.clone(),
        None => power(&cx.rep.ideal, n as u32),
    }
}

fn stable_range(cx: &PairContext) -> std::ops::RangeInclusive<usize> {
    let nu = cx.nu as usize;
    nu..=stable_exponent_bound(&cx.rep.ideal, nu)
}

fn non_principal_probes(cx: &PairContext) -> Vec<(&'static str, ValueIdeal)> {
    cx.probe_ideals().into_iter().filter(|(_, j)| !j.is_principal()).collect()
}

fn prelim_2_2_1(cx: &PairContext, ev: &mut Ev) -> bool {
    for n in 0..=cx.nu as usize + 1 {
        let lhs = cx.lambda().shift(n as i64 * cx.e);
        let rhs = cx.sum(cx.power(n), cx.lambda());
        ev.set_eq(&format!("{n}a+Λ = {n}E+Λ"), &lhs, &rhs);
    }
    true
}

fn prelim_2_2_2(cx: &PairContext, ev: &mut Ev) -> bool {
    for (n, &h) in cx.rep.hilbert.iter().enumerate() {
        ev.le(&format!("H({n}) ≤ e"), h, cx.e);
        if n as i64 >= cx.nu {
            ev.eq(&format!("H({n}) = e"), h, cx.e);
        }
    }
    let first = cx.rep.hilbert.iter().position(|&h| h == cx.e).map_or(-1, |p| p as i64);
    ev.eq("min{n : H(n) = e} = ν", first, cx.nu);
    true
}

fn prelim_2_2_3(cx: &PairContext, ev: &mut Ev) -> bool {
    let nu = cx.nu as usize;
    ev.le("ν ≤ e−1", cx.nu, cx.e - 1);
    ev.eq("deg h = ν", cx.rep.h.coeffs.len() as i64 - 1, cx.nu);
    ev.set_eq("(ν+1)E = a+νE", cx.power(nu + 1), &cx.p().shift(cx.e));
    ev.set_eq("νE − νE = Λ", &cx.quo(cx.p(), cx.p()), cx.lambda());
    ev.set_eq("νE + Λ = νE", &cx.sum(cx.p(), cx.lambda()), cx.p());
    if nu > 0 {
        let prev = cx.power(nu - 1);
        ev.holds("νE ≠ a+(ν−1)E", *cx.p() != prev.shift(cx.e));
        ev.holds("(ν−1)E − (ν−1)E ≠ Λ", cx.quo(prev, prev) != *cx.lambda());
        ev.holds("(ν−1)E + Λ ≠ (ν−1)E", cx.sum(prev, cx.lambda()) != *prev);
    }
    true
}

fn prelim_2_2_4(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.eq("ρ = l(Λ/S)", cx.rho, cx.len(cx.lambda(), &cx.ri.whole));
    for n in cx.nu as usize..=cx.nu as usize + 5 {
        let pn = nth_power(cx, n);
        ev.eq(&format!("l(S/{n}E) = {n}e − ρ"), cx.len(&cx.ri.whole, &pn), cx.e * n as i64 - cx.rho);
    }
    true
}

fn prelim_2_2_5(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.rep.h_symmetric {
        return false;
    }
    ev.eq("2·l(S/νE) = eν", 2 * cx.l_s_p, cx.e * cx.nu);
    ev.eq("2ρ = eν", 2 * cx.rho, cx.e * cx.nu);
    true
}

fn prelim_2_2_6(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.subset("νE ⊆ S−Λ", cx.p(), cx.rl());
    for (n, pn) in cx.rep.powers.iter().enumerate() {
        ev.implies(&format!("S−Λ = {n}E ⟹ {n} = ν"), cx.rl() == pn, n as i64 == cx.nu);
    }
    true
}

fn prelim_2_4_1(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.set_eq("K−K = S", &cx.quo(cx.k(), cx.k()), &cx.ri.whole);
    for (name, j) in cx.probe_ideals() {
        let back = cx.quo(cx.k(), &cx.quo(cx.k(), &j));
        ev.set_eq(&format!("K−(K−J) = J for J = {name}"), &back, &j);
    }
    true
}

fn prelim_2_4_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let probes = cx.probe_ideals();
    for (na, a) in &probes {
        for (nb, b) in &probes {
            if na == nb || !cx.incl(b, a) {
                continue;
            }
            let (ka, kb) = (cx.quo(cx.k(), a), cx.quo(cx.k(), b));
            ev.eq(&format!("l({na}/{nb}) = l((K−{nb})/(K−{na}))"), cx.len(a, b), cx.len(&kb, &ka));
        }
    }
    true
}

fn prelim_2_4_3(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.holds("c−1 ∉ K", !cx.k().contains(cx.c - 1));
    ev.subset("c+ℕ ⊆ K", &cx.conductor, cx.k());
    ev.subset("K ⊆ ℕ", cx.k(), &cx.naturals);
    ev.eq("min K = 0", cx.k().min(), 0);
    true
}

fn prelim_2_4_4(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.iff("Gorenstein ⟺ K = S", cx.gor, *cx.k() == cx.ri.whole);
    ev.iff("Gorenstein ⟺ S−K = S", cx.gor, cx.ri.anticanonical == cx.ri.whole);
    if !cx.gor {
        ev.subset("c+ℕ ⊆ S−K", &cx.conductor, &cx.ri.anticanonical);
        ev.subset("S−K ⊆ M", &cx.ri.anticanonical, &cx.ri.maximal);
    }
    true
}

fn prelim_2_4_5(cx: &PairContext, ev: &mut Ev) -> bool {
    for (name, j) in cx.probe_ideals() {
        let jk = cx.sum(&j, cx.k());
        let sj = cx.quo(&cx.ri.whole, &j);
        let lo = jk.min().min(cx.c - 1 - sj.frontier()) - 1;
        let hi = jk.frontier().max(cx.c - 1 - sj.min()) + 1;
        let bad = (lo..=hi).filter(|&s| jk.contains(s) == sj.contains(cx.c - 1 - s)).count();
        ev.eq(&format!("#{{s : s ∈ J+K ⟺ c−1−s ∈ S−J}} = 0 for J = {name}"), bad as i64, 0);
    }
    true
}

fn prelim_2_5(cx: &PairContext, ev: &mut Ev) -> bool {
    let r: Vec<i64> = (1..=cx.n).map(|i| cx.ri.r_i(i)).collect();
    ev.holds("1 ≤ r_i ≤ r_1", r.iter().all(|&x| 1 <= x && x <= cx.r));
    ev.eq("Σ r_i = δ", r.iter().sum(), cx.delta);
    ev.eq("Σ (r_i−1) = 2δ−c", r.iter().map(|x| x - 1).sum(), cx.excess());
    ev.eq("l(K/S) = 2δ−c", cx.len(cx.k(), &cx.ri.whole), cx.excess());
    let small = cx.s().small_elements();
    let ok = (0..cx.n).all(|i| !cx.ri.anticanonical.contains(small[i]) || r[i] == 1);
    ev.holds("s_i ∈ S−K ⟹ r_{i+1} = 1", ok);
    true
}

fn prelim_2_6(cx: &PairContext, ev: &mut Ev) -> bool {
    let t = almost_gorenstein_tests(cx.s());
    ev.all_equivalent(&["M+K = M", "r−1 = 2δ−c", "t.s. = [r,1,…,1]", "S−K ⊇ M"], &t);
    ev.iff("almost Gorenstein ⟺ M+K = M", cx.ag, t[0]);
    ev.iff("Gorenstein ⟺ almost Gorenstein with r = 1", cx.gor, cx.ag && cx.r == 1);
    ev.iff("Kunz ⟺ almost Gorenstein with r = 2", cx.kunz, cx.ag && cx.r == 2);
    true
}

fn prelim_2_7(cx: &PairContext, ev: &mut Ev) -> bool {
    for (name, j) in cx.probe_ideals() {
        let bd = bidual(&j);
        ev.subset(&format!("J ⊆ J** for J = {name}"), &j, &bd);
        ev.subset(&format!("J** ⊆ J+K for J = {name}"), &bd, &cx.sum(&j, cx.k()));
    }
    true
}

fn prelim_2_8(cx: &PairContext, ev: &mut Ev) -> bool {
    for (name, j) in cx.probe_ideals() {
        if !cx.incl(&j, &cx.ri.whole) {
            continue;
        }
        let bd = bidual(&j);
        let (Ok(cc), Ok(ic)) = (canonical_closure(&j), integral_closure(&j)) else {
            continue;
        };
        ev.subset(&format!("J ⊆ J** for J = {name}"), &j, &bd);
        ev.subset(&format!("J** ⊆ J~ for J = {name}"), &bd, &cc);
        ev.subset(&format!("J~ ⊆ J̄ for J = {name}"), &cc, &ic);
        ev.implies(&format!("J = J̄ ⟹ J = J** = J~ for J = {name}"), j == ic, j == bd && j == cc);
    }
    let closed = stable_range(cx).all(|n| {
        let pn = nth_power(cx, n);
        integral_closure(&pn).is_ok_and(|ic| ic == pn)
    });
    ev.iff("Λ = ℕ ⟺ nE integrally closed for all n ≥ ν", *cx.lambda() == cx.naturals, closed);
    true
}

fn prop_2_9(cx: &PairContext, ev: &mut Ev) -> bool {
    let cd = &cx.rep.conditions;
    ev.all_equivalent(&["A1", "A2", "A3", "A4", "A5", "A6"], &cd.group_a());
    ev.all_equivalent(&["B1", "B2"], &cd.group_b());
    let colon_in = cx.incl(cx.rl(), &cx.ri.anticanonical);
    ev.iff("A ⟺ (B ∧ S−Λ ⊆ S−K)", cd.a(), cd.b() && colon_in);
    true
}

fn rmk_2_10_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    ev.subset("S−Λ ⊆ S−K", cx.rl(), &cx.ri.anticanonical);
    ev.iff("A ⟺ B", cx.rep.conditions.a(), cx.rep.conditions.b());
    true
}

fn rmk_2_10_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if cx.rep.ideal.shift(-cx.e) != *cx.k() {
        return false;
    }
    ev.holds("A", cx.rep.conditions.a());
    ev.holds("B", cx.rep.conditions.b());
    ev.holds("Λ = Λ**", *cx.lambda() == cx.rep.lambda_bidual);
    true
}

fn shifted_conductor_lambda(cx: &PairContext) -> ValueIdeal {
    cx.conductor_lambda.shift(cx.nu * cx.e)
}

fn diag_3_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let xg = shifted_conductor_lambda(cx);
    let rl_g = cx.sum(cx.rl(), &cx.conductor_lambda);
    ev.subset("c+ℕ ⊆ c_Λ+ℕ", &cx.conductor, &cx.conductor_lambda);
    ev.subset("c+ℕ ⊆ S−Λ", &cx.conductor, cx.rl());
    ev.subset("(S−Λ)+(c_Λ+ℕ) ⊆ c+ℕ", &rl_g, &cx.conductor);
    ev.subset("νE ⊆ S−Λ", cx.p(), cx.rl());
    ev.subset("νa+c_Λ+ℕ ⊆ (S−Λ)+(c_Λ+ℕ)", &xg, &rl_g);
    ev.subset("νa+c_Λ+ℕ ⊆ νE", &xg, cx.p());
    ev.set_eq("νa+c_Λ+ℕ = νE − ℕ", &xg, &cx.quo(cx.p(), &cx.naturals));
    true
}

fn prop_3_2_1(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.le("c − c_Λ ≤ eν", cx.c - cx.rep.c_lambda, cx.e * cx.nu);
    true
}

fn prop_3_2_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let gap = cx.conductor_colength_gap();
    let diff = cx.c - cx.rep.c_lambda - cx.rho;
    let tail = cx.len(&cx.conductor, &shifted_conductor_lambda(cx));
    ev.eq("(c−δ) − (c_Λ−δ_Λ) = c − c_Λ − ρ", gap, diff);
    ev.eq("c − c_Λ − ρ = eν − ρ − l(c+ℕ / νa+c_Λ+ℕ)", diff, cx.e * cx.nu - cx.rho - tail);
    ev.le("eν − ρ − l(c+ℕ / νa+c_Λ+ℕ) ≤ l(S/νE)", cx.e * cx.nu - cx.rho - tail, cx.l_s_p);
    true
}

fn prop_3_2_3(cx: &PairContext, ev: &mut Ev) -> bool {
    let flags = [
        cx.conductor_conditions(),
        cx.conductor == shifted_conductor_lambda(cx),
        cx.incl(&cx.conductor, cx.p()),
        cx.conductor_colength_gap() == cx.l_s_p,
    ];
    ev.all_equivalent(
        &["c − c_Λ = eν", "c+ℕ = νa+c_Λ+ℕ", "c+ℕ ⊆ νE", "(c−δ) − (c_Λ−δ_Λ) = l(S/νE)"],
        &flags,
    );
    true
}

fn rmk_3_3_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let gap = cx.conductor_colength_gap();
    ev.le("−ρ ≤ (c−δ) − (c_Λ−δ_Λ)", -cx.rho, gap);
    if cx.is_maximal {
        ev.le("e − ρ ≤ (c−δ) − (c_Λ−δ_Λ)", cx.e - cx.rho, gap);
    }
    true
}

fn rmk_3_3_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let dual_p = cx.quo(&cx.ri.whole, cx.p());
    ev.implies("c − c_Λ = eν ⟹ S−νE ⊆ ℕ", cx.conductor_conditions(), cx.incl(&dual_p, &cx.naturals));
    true
}

fn rmk_3_3_3(cx: &PairContext, ev: &mut Ev) -> bool {
    let rl_g = cx.sum(cx.rl(), &cx.conductor_lambda);
    ev.implies("c − c_Λ = eν ⟹ c+ℕ = (S−Λ)+(c_Λ+ℕ)", cx.conductor_conditions(), rl_g == cx.conductor);
    true
}

fn lemma_3_4(cx: &PairContext, ev: &mut Ev) -> bool {
    if cx.rl() != cx.p() {
        return false;
    }
    ev.eq("c − c_Λ = eν", cx.c - cx.rep.c_lambda, cx.e * cx.nu);
    ev.set_eq("Λ** = Λ", &cx.rep.lambda_bidual, cx.lambda());
    true
}

fn prop_3_5_1(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.eq(
        "2ρ = eν + (2δ−c) − l(S−Λ/νE) − l(K+Λ/Λ)",
        2 * cx.rho,
        cx.e * cx.nu + cx.excess() - cx.l_rl_p - cx.l_ol_l,
    );
    true
}

fn prop_3_5_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let colon_is_p = cx.rl() == cx.p();
    let flags = [
        2 * cx.rho == cx.e * cx.nu + cx.excess(),
        cx.rep.lambda_is_gorenstein() && cx.conductor_conditions(),
        colon_is_p && cx.rep.omega_lambda == *cx.lambda(),
        colon_is_p && cx.incl(cx.p(), &cx.ri.anticanonical),
    ];
    ev.all_equivalent(
        &["2ρ = eν + 2δ − c", "Λ Gorenstein ∧ c − c_Λ = eν", "S−Λ = νE ∧ K+Λ = Λ", "S−Λ = νE ⊆ S−K"],
        &flags,
    );
    true
}

fn def_4_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let small = cx.s().small_elements();
    let gamma: Vec<usize> = (1..=cx.n).filter(|&i| cx.rl().contains(small[i - 1])).collect();
    ev.holds("Γ = {i : s_{i−1} ∈ S−Λ}", gamma == cx.rep.gamma_set);
    let count = gamma.len() as i64;
    ev.eq("#Γ = l(S−Λ / c+ℕ)", count, cx.len(cx.rl(), &cx.conductor));
    ev.eq("#Γ = l(ℕ / K+Λ)", count, cx.len(&cx.naturals, &cx.rep.omega_lambda));
    let sum: i64 = gamma.iter().map(|&i| cx.ri.r_i(i)).sum();
    ev.eq("d = l(ℕ/Λ**) − Σ_Γ r_i", cx.d(), cx.len(&cx.naturals, &cx.rep.lambda_bidual) - sum);
    ev.le("0 ≤ d", 0, cx.d());
    true
}

fn prop_4_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let sum = sum_r(cx, |i| in_gamma(cx, i));
    ev.le("l(ℕ/K+Λ) ≤ Σ_Γ r_i", cx.len(&cx.naturals, &cx.rep.omega_lambda), sum);
    ev.le("Σ_Γ r_i ≤ l(ℕ/Λ**)", sum, cx.len(&cx.naturals, &cx.rep.lambda_bidual));
    true
}

fn prop_4_3_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let l = cx.len(&cx.rep.omega_lambda, &cx.rep.lambda_bidual);
    ev.eq("d = l(K+Λ/Λ**) − Σ_Γ (r_i−1)", cx.d(), l - cx.sum_gamma_minus_one);
    true
}

fn prop_4_3_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let k_in = cx.incl(cx.k(), &cx.rep.lambda_bidual);
    ev.iff("K ⊆ Λ** ⟺ S−Λ ⊆ S−K", k_in, cx.incl(cx.rl(), &cx.ri.anticanonical));
    ev.implies("K ⊆ Λ** ⟹ d = 0", k_in, cx.d() == 0);
    true
}

fn i0_dual(cx: &PairContext) -> ValueIdeal {
    cx.quo(&cx.ri.whole, &tail_ideal(cx.s(), cx.rep.i0))
}

fn prop_4_3_3(cx: &PairContext, ev: &mut Ev) -> bool {
    let i0 = cx.rep.i0;
    ev.eq("s_{i0} = min(S−Λ)", cx.s().small_elements()[i0], cx.rl().min());
    let tail = sum_r(cx, |i| i > i0 && !in_gamma(cx, i));
    let l = cx.len(&cx.rep.lambda_bidual, &i0_dual(cx));
    ev.eq("d = Σ_{i>i0, i∉Γ} r_i − l(Λ**/(S−R_{i0}))", cx.d(), tail - l);
    true
}

fn prop_4_3_4(cx: &PairContext, ev: &mut Ev) -> bool {
    let closed = integral_closure(cx.rl()).is_ok_and(|ic| ic == *cx.rl());
    ev.iff("S−Λ integrally closed ⟺ S−Λ = R_{i0}", closed, *cx.rl() == tail_ideal(cx.s(), cx.rep.i0));
    ev.implies("S−Λ integrally closed ⟹ d = 0", closed, cx.d() == 0);
    true
}

fn thm_4_4_1(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.eq("ρ = Σ_{i∉Γ} r_i − l(Λ**/Λ) − d", cx.rho, cx.sum_not_gamma - cx.l_lb_l - cx.d());
    ev.le("ρ ≤ r·l(S/S−Λ)", cx.rho, cx.r * cx.l_s_rl);
    ev.eq("l(S/S−Λ) = n − #Γ", cx.l_s_rl, (cx.n - cx.rep.gamma_set.len()) as i64);
    true
}

fn thm_4_4_2(cx: &PairContext, ev: &mut Ev) -> bool {
    let head = sum_r(cx, |i| i <= cx.rep.i0);
    let l = cx.len(&cx.rep.lambda_bidual, &i0_dual(cx));
    ev.eq("ρ = Σ_{i≤i0} r_i − l(Λ**/Λ) + l(Λ**/(S−R_{i0}))", cx.rho, head - cx.l_lb_l + l);
    true
}

fn rmk_4_5(cx: &PairContext, ev: &mut Ev) -> bool {
    if *cx.lambda() == cx.naturals {
        ev.le("δ ≤ r(c−δ)", cx.delta, cx.r * (cx.c - cx.delta));
    }
    let maximal = cx.rho == cx.r * cx.l_s_rl;
    let full = (1..=cx.n).all(|i| in_gamma(cx, i) || cx.ri.r_i(i) == cx.r);
    let reflexive = *cx.lambda() == cx.rep.lambda_bidual;
    ev.iff("ρ = r·l(S/S−Λ) ⟺ (r_i = r for i ∉ Γ, Λ = Λ**, d = 0)", maximal, full && reflexive && cx.d() == 0);
    ev.implies("E = M ∧ e = μ ⟹ ρ = r·l(S/S−Λ)", cx.is_maximal && cx.e == cx.mu, maximal);
    ev.implies("Gorenstein ⟹ ρ = r·l(S/S−Λ)", cx.gor, maximal);
    true
}

fn cor_4_6_1(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.le("eν + r·l(S−Λ/νE) ≤ (r+1)·l(S/νE)", cx.e * cx.nu + cx.r * cx.l_rl_p, (cx.r + 1) * cx.l_s_p);
    true
}

fn cor_4_6_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.rep.h_symmetric {
        return false;
    }
    ev.le("2r·l(S−Λ/νE) ≤ (r−1)eν", 2 * cx.r * cx.l_rl_p, (cx.r - 1) * cx.e * cx.nu);
    true
}

fn thm_4_7_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let bound = cx.e * cx.nu + cx.sum_not_gamma_minus_one;
    ev.eq(
        "2ρ = eν + Σ_{i∉Γ}(r_i−1) − d − l(Λ**/Λ) − l(S−Λ/νE)",
        2 * cx.rho,
        bound - cx.d() - cx.l_lb_l - cx.l_rl_p,
    );
    ev.le("2ρ ≤ eν + Σ_{i∉Γ}(r_i−1)", 2 * cx.rho, bound);
    ev.le("eν + Σ_{i∉Γ}(r_i−1) ≤ eν + 2δ − c", bound, cx.e * cx.nu + cx.excess());
    true
}

fn thm_4_7_2(cx: &PairContext, ev: &mut Ev) -> bool {
    ev.iff(
        "2ρ = eν + Σ_{i∉Γ}(r_i−1) ⟺ (S−Λ = νE ∧ d = 0)",
        2 * cx.rho == cx.e * cx.nu + cx.sum_not_gamma_minus_one,
        cx.rl() == cx.p() && cx.d() == 0,
    );
    true
}

fn prop_5_1(cx: &PairContext, ev: &mut Ev) -> bool {
    let all = non_principal_probes(cx).iter().all(|(_, j)| cx.sum(j, cx.k()) == bidual(j));
    ev.iff("almost Gorenstein ⟺ J+K = J** for the non-principal probes", cx.ag, all);
    true
}

fn cor_5_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    ev.set_eq("Λ** = K+Λ", &cx.rep.lambda_bidual, &cx.rep.omega_lambda);
    ev.eq("d = 0", cx.d(), 0);
    ev.eq("ρ = r − 1 + l(S/S−Λ) − l(Λ**/Λ)", cx.rho, cx.r - 1 + cx.l_s_rl - cx.l_lb_l);
    ev.eq("Σ_{i∉Γ} r_i = r − 1 + l(S/S−Λ)", cx.sum_not_gamma, cx.r - 1 + cx.l_s_rl);
    true
}

fn thm_5_3_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    ev.eq(
        "2ρ = eν + r − 1 − l(S−Λ/νE) − l(Λ**/Λ)",
        2 * cx.rho,
        cx.e * cx.nu + cx.r - 1 - cx.l_rl_p - cx.l_lb_l,
    );
    true
}

fn thm_5_3_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    let a = 2 * cx.rho == cx.e * cx.nu + cx.r - 1;
    let flags = [
        a,
        cx.rep.lambda_is_gorenstein() && cx.conductor_conditions(),
        cx.rl() == cx.p(),
        cx.quo(cx.k(), cx.lambda()) == *cx.p(),
    ];
    ev.all_equivalent(&["2ρ = eν + r − 1", "Λ Gorenstein ∧ c − c_Λ = eν", "S−Λ = νE", "K−Λ = νE"], &flags);
    ev.implies("2ρ = eν + r − 1 ⟹ A", a, cx.rep.conditions.a());
    true
}

fn cor_5_4(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.ag && cx.rep.h_symmetric) {
        return false;
    }
    ev.le("l(S−Λ/νE) ≤ r − 1", cx.l_rl_p, cx.r - 1);
    ev.iff("l(S−Λ/νE) = r − 1 ⟺ Λ = Λ**", cx.l_rl_p == cx.r - 1, *cx.lambda() == cx.rep.lambda_bidual);
    true
}

fn cor_5_5(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.gor && cx.rep.h_symmetric) {
        return false;
    }
    ev.set_eq("S−Λ = νE", cx.rl(), cx.p());
    true
}

fn cor_5_6(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    ev.iff(
        "c+ℕ = νE ⟺ (Λ = ℕ ∧ 2δ = eν + r − 1)",
        cx.conductor == *cx.p(),
        *cx.lambda() == cx.naturals && 2 * cx.delta == cx.e * cx.nu + cx.r - 1,
    );
    ev.note("γ is read as the conductor ideal c+ℕ of S");
    true
}

fn refl_5_8(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    for (name, j) in non_principal_probes(cx) {
        let stab = cx.quo(&j, &j);
        ev.iff(
            &format!("J reflexive ⟺ J−J ⊇ S−M for J = {name}"),
            is_reflexive(&j),
            cx.incl(&cx.ri.dual_maximal, &stab),
        );
    }
    true
}

fn thm_5_9(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.ag {
        return false;
    }
    let cd = &cx.rep.conditions;
    let c1 = cx.incl(&cx.ri.dual_maximal, cx.lambda());
    let refl: Vec<bool> = stable_range(cx).map(|n| is_reflexive(&nth_power(cx, n))).collect();
    let flags = [cd.a(), c1, is_reflexive(cx.p()), refl.iter().all(|&b| b), refl.iter().any(|&b| b)];
    ev.all_equivalent(
        &["A", "Λ ⊇ S−M", "νE reflexive", "nE reflexive for all n ≥ ν", "nE reflexive for some n ≥ ν"],
        &flags,
    );
    if is_reflexive(&cx.rep.ideal) {
        ev.holds("E reflexive ⟹ A", cd.a());
        ev.holds("E reflexive ⟹ B", cd.b());
        ev.holds("E reflexive ⟹ Λ ⊇ S−M", c1);
        ev.holds("E reflexive ⟹ Λ reflexive", *cx.lambda() == cx.rep.lambda_bidual);
    }
    true
}

fn shifted_dual_maximal(cx: &PairContext) -> ValueIdeal {
    cx.ri.dual_maximal.shift(cx.e)
}

fn rmk_6_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.is_maximal {
        return false;
    }
    let xs = shifted_dual_maximal(cx);
    ev.subset("S−Λ ⊆ e+(S−M)", cx.rl(), &xs);
    ev.eq("l(S/S−Λ) = l(e+(S−M) / S−Λ) + (e − r)", cx.l_s_rl, cx.len(&xs, cx.rl()) + cx.e - cx.r);
    if cx.ag {
        ev.set_eq("Λ = Λ**", cx.lambda(), &cx.rep.lambda_bidual);
    }
    true
}

fn stable_6_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.is_maximal {
        return false;
    }
    let m = &cx.ri.maximal;
    let flags = [*cx.lambda() == cx.quo(m, m), cx.e == cx.mu, cx.rho == cx.e - 1, cx.r == cx.e - 1];
    ev.all_equivalent(&["Λ = M−M", "e = μ", "ρ = e − 1", "r = e − 1"], &flags);
    true
}

fn prop_6_3(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu) {
        return false;
    }
    ev.iff("almost Gorenstein ⟺ Λ Gorenstein", cx.ag, cx.rep.lambda_is_gorenstein());
    true
}

fn case_6_4(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    let nu = cx.nu as usize;
    let mut expected = vec![0; nu + 1];
    expected[0] = 1;
    expected[1] += cx.mu - 1;
    expected[nu] += 1;
    ev.holds("h = 1 + (μ−1)z + z^ν", cx.rep.h.coeffs == expected);
    ev.eq("ρ = μ − 1 + ν", cx.rho, cx.mu - 1 + cx.nu);
    ev.implies("r < e − 2 ⟹ ν = 2", cx.r < cx.e - 2, cx.nu == 2);
    true
}

fn lemma_6_4_3(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.r == cx.e - 2) {
        return false;
    }
    ev.subset("3M ⊆ e+M", cx.power(3), &cx.ri.maximal.shift(cx.e));
    true
}

fn prop_6_5_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.r == cx.e - 2) {
        return false;
    }
    ev.eq("e = μ + 1", cx.e, cx.mu + 1);
    true
}

fn prop_6_5_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    ev.eq("l(e+(S−M) / S−Λ) = 1", cx.len(&shifted_dual_maximal(cx), cx.rl()), 1);
    true
}

fn thm_6_6(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    ev.eq("l(S−Λ/νM) = r − 1 + (e−1)(ν−2)", cx.l_rl_p, cx.r - 1 + (cx.e - 1) * (cx.nu - 2));
    true
}

fn cor_6_7_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    ev.iff("S−Λ = νM ⟺ Gorenstein ∧ ν = 2", cx.rl() == cx.p(), cx.gor && cx.nu == 2);
    true
}

fn cor_6_7_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    let lhs: i64 = (2..=cx.n).filter(|&i| !in_gamma(cx, i)).map(|i| cx.ri.r_i(i) - 1).sum();
    ev.eq("Σ_{i∉Γ, i≠1}(r_i−1) = d + l(Λ**/Λ) + ν − 2", lhs, cx.d() + cx.l_lb_l + cx.nu - 2);
    true
}

fn cor_6_7_3(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.e == cx.mu + 1) {
        return false;
    }
    ev.iff("almost Gorenstein ⟺ ν = 2 ∧ K+Λ = Λ", cx.ag, cx.nu == 2 && cx.rep.omega_lambda == *cx.lambda());
    ev.eq("(2δ−c) − (r−1) = l(K+Λ/Λ) + ν − 2", cx.excess() - (cx.r - 1), cx.l_ol_l + cx.nu - 2);
    true
}

fn cor_6_7_4(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.is_maximal {
        return false;
    }
    ev.iff(
        "(r = e − 2 ∧ S−Λ = νM) ⟺ Gorenstein with e = 3",
        cx.r == cx.e - 2 && cx.rl() == cx.p(),
        cx.gor && cx.e == 3,
    );
    true
}

fn case_6_8(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 2) {
        return false;
    }
    ev.eq("ρ = 2e − μ − 1", cx.rho, 2 * cx.e - cx.mu - 1);
    true
}

fn l_rl_m2(cx: &PairContext) -> Option<i64> {
    cx.rl().length_over(cx.power(2)).ok()
}

fn prop_6_9_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 2) {
        return false;
    }
    ev.le("2e + r·l(S−Λ/2M) ≤ (r+1)(μ+1)", 2 * cx.e + cx.r * cx.l_rl_p, (cx.r + 1) * (cx.mu + 1));
    true
}

fn prop_6_9_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 2 && cx.ag) {
        return false;
    }
    let l = cx.l_rl_p;
    ev.eq("2(e − μ − 1) = r − 1 − l(S−Λ/2M)", 2 * (cx.e - cx.mu - 1), cx.r - 1 - l);
    ev.implies("Gorenstein ⟹ e = μ + 1 ∧ S−Λ = 2M", cx.gor, cx.e == cx.mu + 1 && l == 0);
    ev.implies("Kunz ⟹ e = μ + 1 ∧ l(S−Λ/2M) = 1", cx.kunz, cx.e == cx.mu + 1 && l == 1);
    true
}

fn prop_6_9_3(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.ag) {
        return false;
    }
    ev.iff(
        "S−Λ = 2M ⟺ (2(e − μ − 1) = r − 1 ∧ ν = 2)",
        l_rl_m2(cx) == Some(0),
        2 * (cx.e - cx.mu - 1) == cx.r - 1 && cx.nu == 2,
    );
    true
}

fn cor_6_10(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.gor) {
        return false;
    }
    let m2 = cx.power(2);
    ev.all_equivalent(&["e = μ + 1", "ν = 2", "S−Λ = 2M"], &[cx.e == cx.mu + 1, cx.nu == 2, cx.rl() == m2]);
    ev.iff(
        "c+ℕ = 2M ⟺ (Λ = ℕ ∧ e = μ + 1)",
        cx.conductor == *m2,
        *cx.lambda() == cx.naturals && cx.e == cx.mu + 1,
    );
    true
}

fn prop_6_11(cx: &PairContext, ev: &mut Ev) -> bool {
    if !cx.is_maximal {
        return false;
    }
    ev.iff(
        "c+ℕ = 2M ⟺ (Λ = ℕ ∧ 2(e − μ − 1) = 2δ − c ∧ ν = 2)",
        cx.conductor == *cx.power(2),
        *cx.lambda() == cx.naturals && 2 * (cx.e - cx.mu - 1) == cx.excess() && cx.nu == 2,
    );
    true
}

fn prop_6_13_1(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 3 && cx.r == 2) {
        return false;
    }
    ev.le(
        "3(e − μ − 1) + 2·l(S−Λ/3M) ≤ 3·H(2)",
        3 * (cx.e - cx.mu - 1) + 2 * cx.l_rl_p,
        3 * cx.rep.hilbert[2],
    );
    true
}

fn prop_6_13_2(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 3 && cx.rep.h_symmetric) {
        return false;
    }
    ev.eq("e = 2μ", cx.e, 2 * cx.mu);
    ev.eq("ρ = 3μ", cx.rho, 3 * cx.mu);
    ev.le("r·l(S−Λ/3M) ≤ 3μ(r−1)", cx.r * cx.l_rl_p, 3 * cx.mu * (cx.r - 1));
    true
}

fn prop_6_13_3(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.nu == 3 && cx.ag) {
        return false;
    }
    ev.iff(
        "h symmetric ⟺ (l(S−Λ/3M) = r − 1 ∧ e = 2μ)",
        cx.rep.h_symmetric,
        cx.l_rl_p == cx.r - 1 && cx.e == 2 * cx.mu,
    );
    true
}

fn cor_6_14(cx: &PairContext, ev: &mut Ev) -> bool {
    if !(cx.is_maximal && cx.ag && cx.e == 2 * cx.mu) {
        return false;
    }
    ev.iff("S−Λ = νM ⟺ 2ρ = 2νμ + r − 1", cx.rl() == cx.p(), 2 * cx.rho == 2 * cx.nu * cx.mu + cx.r - 1);
    true
}
