//! Acceptance criteria 1–7. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod oracle;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use typeseq_cli::analyze_doc;
use typeseq_core::blowup::{analyze, blowup_lambda_by_generation, blowup_lambda_by_quotients};
use typeseq_core::ideal::ValueIdeal;
use typeseq_core::invariants::{type_sequence_via_canonical, type_sequence_via_duals, RingInvariants};
use typeseq_core::report::SetDoc;
use typeseq_core::semigroup::NumericalSemigroup;
use typeseq_core::theorems::enumerate::{default_ideal_bound, enumerate_ideals, enumerate_semigroups, semigroups_by_genus};
use typeseq_core::theorems::fixtures::replay_fixtures;
use typeseq_core::theorems::witnesses::confirm_all;
use typeseq_core::{run_suite, AnalyzeDoc, IdealStrategy, PairDoc, SuiteConfig};

use oracle::Set;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// The pairs of criterion 2: `E = M` up to genus 10, then every
/// non-principal ideal with generators `<= c + 2e` up to genus 6.
fn headline_universe() -> Vec<(NumericalSemigroup, ValueIdeal)> {
    let mut out = Vec::new();
    for s in enumerate_semigroups(10).filter(|s| !s.is_naturals()) {
        out.push((s.clone(), ValueIdeal::maximal(&s)));
    }
    for s in enumerate_semigroups(6).filter(|s| !s.is_naturals()) {
        for e in enumerate_ideals(&s, default_ideal_bound(&s)) {
            out.push((s.clone(), e));
        }
    }
    out
}

fn headline_configs(statements: Option<Vec<String>>) -> [SuiteConfig; 2] {
    [
        SuiteConfig { max_genus: 10, ideal_strategy: IdealStrategy::MaximalOnly, statements: statements.clone(), ..Default::default() },
        SuiteConfig { max_genus: 6, ideal_strategy: IdealStrategy::AllUpToBound { k: 2 }, statements, ..Default::default() },
    ]
}

fn same_set(doc: &SetDoc, o: &Set) -> bool {
    doc.elements == o.members_below_hi() && doc.cofinite_from == o.hi
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let outcomes = replay_fixtures();
    let claims: usize = outcomes.iter().flat_map(|f| &f.cases).map(|c| c.claims.len()).sum();
    let failed: Vec<String> = outcomes
        .iter()
        .flat_map(|f| f.cases.iter().map(move |c| (f, c)))
        .filter(|(_, c)| !c.pass())
        .map(|(f, c)| format!("{} {}", f.id, c.ideal))
        .collect();
    let bin = Command::new(env!("CARGO_BIN_EXE_typeseq")).arg("examples").output().expect("run typeseq");
    let stdout = String::from_utf8_lossy(&bin.stdout);
    let cli_ok = bin.status.success() && stdout.contains("10/10 fixtures pass");
    let elapsed = start.elapsed();
    outcome(
        failed.is_empty() && outcomes.len() == 10 && cli_ok && elapsed < Duration::from_secs(10),
        format!("{} fixtures, {claims} claims, failing {failed:?}, cli ok {cli_ok}, {elapsed:.2?}", outcomes.len()),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    let mut failed = 0;
    for cfg in headline_configs(Some(vec!["Thm4.7".into()])) {
        let r = run_suite(&cfg).expect("suite runs");
        pairs += r.pairs;
        failed += r.total_failed + r.errors.len();
        if r.tally("Thm4.7.1").map(|t| t.checked) != Some(r.pairs) {
            return outcome(false, "the identity was not checked on every pair");
        }
    }
    let universe = headline_universe();
    if universe.len() != pairs {
        return outcome(false, format!("suite saw {pairs} pairs, universe has {}", universe.len()));
    }
    for s in enumerate_semigroups(6).filter(|s| !s.is_naturals()) {
        let want = oracle::ideal_count(&Set::generated(s.min_generators()), default_ideal_bound(&s));
        let got = enumerate_ideals(&s, default_ideal_bound(&s)).len();
        if want != got {
            return outcome(false, format!("{}: {got} ideals enumerated, oracle finds {want}", s.generator_notation()));
        }
    }
    let mut mismatches = Vec::new();
    for (s, e) in &universe {
        let os = Set::generated(s.min_generators());
        let id = oracle::identity(&os, &e.minimal_generators());
        let ri = RingInvariants::new(s).expect("invariants");
        let doc = PairDoc::new(&ri, &analyze(&ri, e).expect("analysis"));
        let agree = id.lhs == id.rhs
            && id.e == doc.hilbert.e
            && id.nu == doc.hilbert.nu as i64
            && id.rho == doc.hilbert.rho
            && id.d == doc.blowup.d
            && id.gamma == doc.blowup.gamma_set
            && id.type_sequence == doc.semigroup.type_sequence
            && same_set(&doc.blowup.lambda, &id.lambda)
            && same_set(&doc.blowup.r_colon_lambda, &id.rl)
            && same_set(&doc.blowup.lambda_bidual, &id.lambda_bidual)
            && same_set(&doc.blowup.power_nu, &id.power_nu);
        if !agree {
            mismatches.push(format!("{} {}", s.generator_notation(), e.generator_notation()));
        }
    }
    outcome(
        failed == 0 && mismatches.is_empty(),
        format!(
            "{pairs} pairs, {failed} violations, {} oracle mismatches {:?}, {:.2?}",
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>(),
            start.elapsed()
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut pass = true;
    for cfg in headline_configs(None) {
        let r = run_suite(&cfg).expect("suite runs");
        pass &= r.ok();
        let held: usize = r.tallies.iter().map(|t| t.held).sum();
        let vacuous: usize = r.tallies.iter().map(|t| t.vacuous).sum();
        detail.push(format!(
            "genus<={} {:?}: {} statements x {} pairs, {held} held, {vacuous} vacuous, {} failed, {} errors",
            cfg.max_genus,
            cfg.ideal_strategy,
            r.tallies.len(),
            r.pairs,
            r.total_failed,
            r.errors.len()
        ));
        for f in r.failures.iter().take(3) {
            detail.push(format!("first failure: {}", f.statement_id));
        }
    }
    detail.push(format!("{:.2?}", start.elapsed()));
    outcome(pass, detail.join("; "))
}

fn criterion_4() -> Outcome {
    let want = oracle::genus_counts(8);
    let got: Vec<usize> = semigroups_by_genus(8).iter().map(Vec::len).collect();
    let mut distinct = std::collections::HashSet::new();
    let unique = enumerate_semigroups(8).all(|s| distinct.insert(s.explicit_notation()));
    outcome(want == got && unique, format!("enumerated {got:?}, oracle {want:?}, duplicates {}", !unique))
}

fn criterion_5() -> Outcome {
    let mut semigroups = 0;
    let mut bad = Vec::new();
    for s in enumerate_semigroups(10).filter(|s| !s.is_naturals()) {
        semigroups += 1;
        let a = type_sequence_via_duals(&s).expect("duals");
        let b = type_sequence_via_canonical(&s).expect("canonical");
        if a != b {
            bad.push(s.generator_notation());
        }
    }
    let universe = headline_universe();
    for (s, e) in &universe {
        let ri = RingInvariants::new(s).expect("invariants");
        let nu = analyze(&ri, e).expect("analysis").h.nu;
        let q = blowup_lambda_by_quotients(e, nu).expect("quotients");
        if q != blowup_lambda_by_generation(e) {
            bad.push(format!("{} {}", s.generator_notation(), e.generator_notation()));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{semigroups} type sequences, {} blow-ups, disagreements {bad:?}", universe.len()),
    )
}

fn criterion_6() -> Outcome {
    let outcomes = confirm_all().expect("witness fixtures load");
    let unconfirmed: Vec<&str> = outcomes.iter().filter(|w| !w.confirmed).map(|w| w.id.as_str()).collect();
    outcome(
        unconfirmed.is_empty() && !outcomes.is_empty(),
        format!("{} non-implications, unconfirmed {unconfirmed:?}", outcomes.len()),
    )
}

fn random_input(rng: &mut ChaCha8Rng) -> (String, String) {
    loop {
        let k = rng.random_range(2..=4);
        let mut gens: Vec<i64> = (0..k).map(|_| rng.random_range(2..=20)).collect();
        gens.sort_unstable();
        gens.dedup();
        let Ok(s) = NumericalSemigroup::from_generators(&gens) else { continue };
        let sg = format!("<{}>", gens.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
        let members: Vec<i64> = (s.multiplicity()..=s.conductor() + s.multiplicity()).filter(|&z| s.contains(z)).collect();
        let k = rng.random_range(2..=3);
        let picks: Vec<i64> = members.choose_multiple(rng, k).copied().collect();
        let e = ValueIdeal::from_generators(&s, &picks).expect("non-empty");
        let ideal = if e.is_principal() || rng.random_bool(0.2) { "m".to_string() } else { e.generator_notation() };
        return (sg, ideal);
    }
}

fn criterion_7() -> Outcome {
    let args = ["verify", "--max-genus", "6", "--ideals", "sample", "--seed", "11", "--count", "6", "--format", "json"];
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_typeseq"))
            .args(args)
            .env("TYPESEQ_THREADS", threads)
            .output()
            .expect("run typeseq");
        (out.status.success(), out.stdout)
    };
    let (a_ok, a) = run("0");
    let (b_ok, b) = run("0");
    let (c_ok, c) = run("1");
    let identical = a_ok && b_ok && c_ok && !a.is_empty() && a == b && a == c;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut trips = 0;
    let mut broken = Vec::new();
    while trips < 100 {
        let (sg, ideal) = random_input(&mut rng);
        let Ok(doc) = analyze_doc(&sg, &ideal, None) else { continue };
        trips += 1;
        let text = serde_json::to_string(&doc).expect("serialize");
        let back: AnalyzeDoc = serde_json::from_str(&text).expect("deserialize");
        if back != doc || serde_json::to_string(&back).expect("serialize") != text {
            broken.push(format!("{sg} {ideal}"));
        }
    }
    outcome(
        identical && broken.is_empty(),
        format!("verify output identical across runs and thread counts: {identical}; {trips} round trips, broken {broken:?}"),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("fixture fidelity", criterion_1),
        ("headline identity", criterion_2),
        ("full statement suite", criterion_3),
        ("enumerator soundness", criterion_4),
        ("dual-algorithm agreement", criterion_5),
        ("non-implication regression", criterion_6),
        ("determinism and round trip", criterion_7),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
