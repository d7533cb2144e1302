//! Command handling for the `typeseq` binary. Every command writes its report
//! to a caller-supplied sink and returns the process exit status.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use typeseq_core::blowup::analyze;
use typeseq_core::error::Error;
use typeseq_core::invariants::RingInvariants;
use typeseq_core::notation::{parse_ideal, parse_semigroup};
use typeseq_core::report::{InputDoc, SetDoc};
use typeseq_core::theorems::enumerate::enumerate_semigroups;
use typeseq_core::theorems::fixtures::replay_fixtures;
use typeseq_core::theorems::witnesses::confirm_all;
use typeseq_core::theorems::{select, verify_all, Check, Quantity, Status};
use typeseq_core::{AnalyzeDoc, IdealStrategy, PairDoc, Parallelism, SuiteConfig, SuiteReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_VERDICT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "typeseq", version, about = "Type sequences and blow-ups of numerical semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one semigroup and ideal.
    Analyze(AnalyzeArgs),
    /// Run the statement suite over a universe of pairs.
    Verify(VerifyArgs),
    /// List semigroups up to a genus with their invariants.
    Enumerate(EnumerateArgs),
    /// Replay the built-in worked examples.
    Examples(OutputArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// `<g1,...,gk>` or `{e1,a-b,...,x->}`.
    pub semigroup: String,
    /// `m`, `m^k`, `ideal(v1,...)` or `ideal(v1,...)^k`.
    #[arg(default_value = "m")]
    pub ideal: String,
    /// Statement ids or prefixes to evaluate; all by default.
    #[arg(long, value_delimiter = ',')]
    pub statements: Option<Vec<String>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealsArg {
    Maximal,
    All,
    Sample,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_genus: usize,
    #[arg(long, value_enum, default_value_t = IdealsArg::Maximal)]
    pub ideals: IdealsArg,
    /// With `--ideals all`, generators range up to `c + k·e`.
    #[arg(long, default_value_t = 2)]
    pub bound_k: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// With `--ideals sample`, ideals drawn per semigroup.
    #[arg(long, default_value_t = 16)]
    pub count: usize,
    #[arg(long, value_delimiter = ',')]
    pub statements: Option<Vec<String>>,
    /// Use the worked examples as the universe.
    #[arg(long)]
    pub fixtures: bool,
    /// Worker threads; 0 picks the machine size, 1 runs sequentially.
    #[arg(long, env = "TYPESEQ_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, default_value_t = 6)]
    pub max_genus: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A command failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_DOMAIN, message: format!("i/o: {e}") }
    }
}

fn parse_failure(e: Error) -> Failure {
    Failure { code: exit_code(&e), message: e.to_string() }
}

/// Exit status for a core error: text that fails to describe a valid object
/// is a parse error, a valid object outside the domain is a domain error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PrincipalIdeal
        | Error::RegularRing
        | Error::DegenerateBlowup
        | Error::NotProper { .. }
        | Error::NotIntegral { .. }
        | Error::CarrierMismatch
        | Error::NotNested { .. }
        | Error::EquivalenceViolation { .. }
        | Error::Invariant(_) => EXIT_DOMAIN,
        _ => EXIT_PARSE,
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Analyze(a) => &a.output,
            Command::Verify(a) => &a.output,
            Command::Enumerate(a) => &a.output,
            Command::Examples(a) => a,
        }
    }
}

/// Runs `cmd`, writing its report to `out`.
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match cmd {
        Command::Analyze(a) => analyze_command(a, out),
        Command::Verify(a) => verify_command(a, out),
        Command::Enumerate(a) => enumerate_command(a, out),
        Command::Examples(a) => examples_command(a, out),
    }
}

/// Builds the document printed by `analyze`.
pub fn analyze_doc(semigroup: &str, ideal: &str, statements: Option<&[String]>) -> Result<AnalyzeDoc, Failure> {
    let s = parse_semigroup(semigroup).map_err(|e| Failure { code: EXIT_PARSE, message: e.to_string() })?;
    let e = parse_ideal(&s, ideal).map_err(parse_failure)?;
    let selected = select(statements).map_err(parse_failure)?;
    let ri = RingInvariants::new(&s).map_err(parse_failure)?;
    let rep = analyze(&ri, &e).map_err(|err| Failure {
        code: EXIT_DOMAIN,
        message: match err {
            Error::PrincipalIdeal => format!("{ideal} is principal; the blow-up of a principal ideal is the ring itself"),
            Error::RegularRing => format!("{semigroup} is all of N; there is no proper blow-up"),
            other => other.to_string(),
        },
    })?;
    let pair = PairDoc::new(&ri, &rep);
    let verdicts = verify_all(&ri, rep, &selected);
    Ok(AnalyzeDoc {
        input: InputDoc { semigroup: semigroup.to_string(), ideal: ideal.to_string() },
        pair,
        verdicts,
    })
}

fn analyze_command(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let doc = analyze_doc(&a.semigroup, &a.ideal, a.statements.as_deref())?;
    match a.output.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?,
        Format::Text => out.write_all(render_analyze(&doc).as_bytes())?,
    }
    Ok(if doc.verdicts.iter().any(|v| v.failed()) { EXIT_VERDICT } else { EXIT_OK })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn quantity(q: &Quantity) -> String {
    match q {
        Quantity::Bool(b) => b.to_string(),
        Quantity::Int(i) => i.to_string(),
        Quantity::Set(s) => s.render(),
    }
}

fn render_check(c: &Check) -> String {
    format!(
        "{} {}: {} {} {}",
        if c.ok { "ok  " } else { "FAIL" },
        c.label,
        quantity(&c.lhs),
        c.relation.symbol(),
        quantity(&c.rhs)
    )
}

fn set(s: &SetDoc) -> String {
    s.render()
}

/// Human-readable rendering of an analysis; carries the same numbers as the
/// JSON document.
pub fn render_analyze(doc: &AnalyzeDoc) -> String {
    let p = &doc.pair;
    let (sg, id, h, b) = (&p.semigroup, &p.ideal, &p.hilbert, &p.blowup);
    let mut o = String::new();
    let _ = writeln!(o, "input: {} {}", doc.input.semigroup, doc.input.ideal);
    let _ = writeln!(o, "semigroup {}", sg.notation);
    let _ = writeln!(o, "  generators       {}", join(&sg.generators));
    let _ = writeln!(o, "  small elements   {}", join(&sg.small_elements));
    let _ = writeln!(o, "  c={} delta={} n={} e={} mu={}", sg.c, sg.delta, sg.n, sg.multiplicity, sg.embedding_dimension);
    let _ = writeln!(o, "  type sequence    {}", join(&sg.type_sequence));
    let _ = writeln!(
        o,
        "  class            type={} gorenstein={} almost_gorenstein={} kunz={}",
        sg.class.cm_type, sg.class.is_gorenstein, sg.class.is_almost_gorenstein, sg.class.is_kunz
    );
    let _ = writeln!(o, "  canonical        {}", set(&sg.canonical));
    let _ = writeln!(o, "ideal {}", id.notation);
    let _ = writeln!(o, "  generators       {}", join(&id.generators));
    let _ = writeln!(o, "  set              {}", set(&id.set));
    let _ = writeln!(o, "  reflexive        {}", id.reflexive);
    let _ = writeln!(o, "hilbert");
    let _ = writeln!(o, "  H                {}", join(&h.hilbert));
    let _ = writeln!(o, "  h                {} [{}]", h.h_text, join(&h.h));
    let _ = writeln!(o, "  e={} nu={} rho={} symmetric={}", h.e, h.nu, h.rho, h.symmetric);
    let _ = writeln!(o, "blowup");
    let _ = writeln!(o, "  lambda           {}", set(&b.lambda));
    let _ = writeln!(o, "  lambda small     {}", join(&b.lambda_small_elements));
    let _ = writeln!(o, "  lambda**         {}", set(&b.lambda_bidual));
    let _ = writeln!(o, "  K+lambda         {}", set(&b.omega_lambda));
    let _ = writeln!(o, "  S-lambda         {}", set(&b.r_colon_lambda));
    let _ = writeln!(o, "  E^nu             {}", set(&b.power_nu));
    let _ = writeln!(o, "  c_lambda={} delta_lambda={}", b.c_lambda, b.delta_lambda);
    let _ = writeln!(o, "  gamma            {{{}}} sum={}", join(&b.gamma_set), b.gamma_sum);
    let _ = writeln!(o, "  d={} i0={}", b.d, b.i0);
    let _ = writeln!(
        o,
        "  lambda_gorenstein={} lambda_reflexive={} colon_is_power_nu={} conductor_in_power_nu={}",
        b.lambda_gorenstein, b.lambda_reflexive, b.colon_is_power_nu, b.conductor_in_power_nu
    );
    let c = &b.conditions;
    let _ = writeln!(
        o,
        "  A1={} A2={} A3={} A4={} A5={} A6={} B1={} B2={}",
        c.a1, c.a2, c.a3, c.a4, c.a5, c.a6, c.b1, c.b2
    );
    let _ = writeln!(o, "verdicts");
    for v in &doc.verdicts {
        let tag = match v.status {
            Status::Held => "held",
            Status::Vacuous => "vacuous",
            Status::Failed => "FAILED",
        };
        let _ = writeln!(o, "  {:<12} {}", v.statement_id, tag);
        for c in &v.checks {
            let _ = writeln!(o, "      {}", render_check(c));
        }
        for n in &v.notes {
            let _ = writeln!(o, "      note: {n}");
        }
    }
    o
}

/// Suite configuration described by the `verify` flags.
pub fn suite_config(a: &VerifyArgs) -> SuiteConfig {
    let ideal_strategy = match a.ideals {
        IdealsArg::Maximal => IdealStrategy::MaximalOnly,
        IdealsArg::All => IdealStrategy::AllUpToBound { k: a.bound_k },
        IdealsArg::Sample => IdealStrategy::RandomSample { seed: a.seed, count: a.count },
    };
    SuiteConfig {
        max_genus: a.max_genus,
        ideal_strategy,
        statements: a.statements.clone(),
        parallelism: Parallelism::from_threads(a.threads),
        fixtures_only: a.fixtures,
    }
}

fn verify_command(a: &VerifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let report = typeseq_core::run_suite(&suite_config(a)).map_err(parse_failure)?;
    match a.output.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?,
        Format::Text => out.write_all(render_suite(&report).as_bytes())?,
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_VERDICT })
}

pub fn render_suite(r: &SuiteReport) -> String {
    let mut o = String::new();
    let universe = if r.config.fixtures_only {
        "worked examples".to_string()
    } else {
        format!("genus <= {}", r.config.max_genus)
    };
    let _ = writeln!(o, "universe: {universe}, ideals {:?}", r.config.ideal_strategy);
    let _ = writeln!(o, "semigroups: {}  pairs: {}", r.semigroups, r.pairs);
    let _ = writeln!(o, "{:<14}{:>9}{:>9}{:>9}{:>8}", "statement", "checked", "vacuous", "held", "failed");
    for t in &r.tallies {
        let _ = writeln!(o, "{:<14}{:>9}{:>9}{:>9}{:>8}", t.statement_id, t.checked, t.vacuous, t.held, t.failed);
    }
    let _ = writeln!(o, "total failed: {}", r.total_failed);
    for f in &r.failures {
        let w = f.witness.as_deref();
        let _ = writeln!(
            o,
            "FAILED {} on {} {}",
            f.statement_id,
            w.map(|w| w.semigroup.notation.as_str()).unwrap_or("?"),
            w.map(|w| w.ideal.notation.as_str()).unwrap_or("?")
        );
        for c in f.checks.iter().filter(|c| !c.ok) {
            let _ = writeln!(o, "    {}", render_check(c));
        }
    }
    for e in &r.errors {
        let _ = writeln!(o, "ERROR {} {}: {}", e.semigroup, e.ideal, e.error);
    }
    o
}

fn enumerate_command(a: &EnumerateArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    if a.output.format == Format::Text {
        writeln!(out, "genus\tc\te\tmu\ttype\tclass\ttype_sequence\tsemigroup")?;
    }
    for s in enumerate_semigroups(a.max_genus) {
        let ri = RingInvariants::new(&s).map_err(parse_failure)?;
        let ts = ri.type_sequence.as_ref().map(|t| t.entries.clone()).unwrap_or_default();
        let k = ri.class;
        match a.output.format {
            Format::Json => {
                let row = json!({
                    "genus": s.genus(),
                    "semigroup": s.explicit_notation(),
                    "generators": s.min_generators(),
                    "c": s.conductor(),
                    "multiplicity": s.multiplicity(),
                    "embedding_dimension": s.embedding_dimension(),
                    "type_sequence": ts,
                    "class": k,
                });
                writeln!(out, "{row}")?;
            }
            Format::Text => {
                let class = if k.is_gorenstein {
                    "gorenstein"
                } else if k.is_kunz {
                    "kunz"
                } else if k.is_almost_gorenstein {
                    "almost-gorenstein"
                } else {
                    "-"
                };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t<{}>",
                    s.genus(),
                    s.conductor(),
                    s.multiplicity(),
                    s.embedding_dimension(),
                    k.cm_type,
                    class,
                    join(&ts),
                    join(s.min_generators())
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn examples_command(a: &OutputArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let fixtures = replay_fixtures();
    let witnesses = confirm_all().map_err(parse_failure)?;
    let passed = fixtures.iter().filter(|f| f.pass).count();
    let confirmed = witnesses.iter().filter(|w| w.confirmed).count();
    let ok = passed == fixtures.len() && confirmed == witnesses.len();
    match a.format {
        Format::Json => {
            let doc = json!({
                "fixtures": fixtures,
                "fixtures_passed": passed,
                "non_implications": witnesses,
                "non_implications_confirmed": confirmed,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Text => {
            for f in &fixtures {
                for case in &f.cases {
                    let status = if case.pass() { "pass" } else { "FAIL" };
                    writeln!(out, "{} {} {}: {} ({} claims)", f.id, f.semigroup, case.ideal, status, case.claims.len())?;
                    if let Some(e) = &case.error {
                        writeln!(out, "    error: {e}")?;
                    }
                    for c in case.claims.iter().filter(|c| !c.ok) {
                        writeln!(out, "    {}: expected {} got {}", c.label, c.expected, c.actual)?;
                    }
                }
            }
            for w in &witnesses {
                let status = if w.confirmed { "confirmed" } else { "NOT CONFIRMED" };
                writeln!(out, "{} on {} {}: {} ({} does not give {})", w.id, w.fixture, w.ideal, status, w.weaker, w.stronger)?;
            }
            writeln!(out, "{passed}/{} fixtures pass", fixtures.len())?;
            writeln!(out, "{confirmed}/{} non-implications confirmed", witnesses.len())?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERDICT })
}
