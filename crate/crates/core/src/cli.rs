//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::enumerate::{
    are_isomorphic, find_counterexample_bounded, verify_theorems_with, Invariant, Predicate,
    VerifyOptions, DEFAULT_BOUND, HARD_LIMIT,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finspace::PropertyProfile;
use crate::gallery::{entries, gallery};
use crate::hochster::{
    cut::{chain_internal_cuts, sample_rational_cuts},
    cut_evaluation, monoid_property_witnesses, zero_divisor_product, Cut, HochsterRing,
    OrderedIndex, StalkClass,
};
use crate::prodfields::{IdempotentReport, ProductRing};
use crate::trace;

#[derive(Debug, Parser)]
#[command(name = "irrlab", version, about = "Irreducibility, local and pointwise irreducibility, and integrity checks")]
pub struct Cli {
    /// Write the JSON report to FILE, or to stdout when FILE is omitted or `-`.
    #[arg(long, global = true, num_args = 0..=1, value_name = "FILE")]
    pub json: Option<Option<PathBuf>>,
    /// Seed for every randomized demo.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the finite-space invariants on every space up to a size.
    Enumerate(EnumerateArgs),
    /// Find the first space satisfying a predicate.
    Search(SearchArgs),
    /// Show and re-validate the named example spaces.
    Gallery(GalleryArgs),
    /// Identities in a finite product of fields.
    Prodfields(ProdfieldsArgs),
    /// Reducedness, zero divisors, cuts and monoid properties of K[M].
    Hochster(HochsterArgs),
    /// List which check covers which statement.
    Trace,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub max_points: usize,
    /// Check one representative per isomorphism class.
    #[arg(long)]
    pub iso: bool,
    /// Invariant ids (comma separated or repeated), or `all`.
    #[arg(long, value_delimiter = ',')]
    pub check: Vec<String>,
    /// Raise the size limit from 5 to 7.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub predicate: String,
    #[arg(long)]
    pub max_points: usize,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    /// Entry name; all entries when omitted.
    pub name: Option<String>,
    /// Print Graphviz DOT instead of the profile.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProdDemo {
    Idempotent,
    Spectrum,
}

#[derive(Debug, Args)]
pub struct ProdfieldsArgs {
    #[arg(long)]
    pub field: Field,
    #[arg(long)]
    pub size: usize,
    /// Both demos run when omitted.
    #[arg(long, value_enum)]
    pub demo: Option<ProdDemo>,
    #[arg(long, default_value_t = 8)]
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HochsterDemo {
    Reduced,
    ZeroDivisor,
    Cut(Cut),
    MonoidProps,
}

impl FromStr for HochsterDemo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reduced" => Ok(HochsterDemo::Reduced),
            "zerodivisor" => Ok(HochsterDemo::ZeroDivisor),
            "monoid-props" => Ok(HochsterDemo::MonoidProps),
            _ => match s.strip_prefix("cut:") {
                Some(spec) => Ok(HochsterDemo::Cut(spec.parse()?)),
                None => Err(Error::Parse(format!(
                    "unknown demo {s:?}; expected reduced, zerodivisor, cut:<spec> or monoid-props"
                ))),
            },
        }
    }
}

#[derive(Debug, Args)]
pub struct HochsterArgs {
    /// `chain:N` or `rationals`.
    #[arg(long)]
    pub index: OrderedIndex,
    #[arg(long)]
    pub field: Field,
    /// All demos (with a standard set of cuts) run when omitted.
    #[arg(long)]
    pub demo: Option<HochsterDemo>,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

/// Result of one subcommand.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, cli.workers),
        Command::Search(a) => search(a),
        Command::Gallery(a) => show_gallery(a),
        Command::Prodfields(a) => prodfields(a, cli.seed),
        Command::Hochster(a) => hochster(a, cli.seed),
        Command::Trace => Ok(Outcome {
            text: trace::render(),
            json: serde_json::to_value(trace::trace())?,
            ok: true,
        }),
    }
}

/// Parses `args`, runs the command and returns the process exit code:
/// 0 when every check passed, 1 when some check failed, 2 on errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|out| emit(&cli, &out).map(|()| out.ok)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(cli: &Cli, out: &Outcome) -> Result<()> {
    let pretty = serde_json::to_string_pretty(&out.json)?;
    match &cli.json {
        Some(Some(path)) if path.as_os_str() != "-" => {
            std::fs::write(path, pretty + "\n")
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            print!("{}", out.text);
        }
        Some(_) => println!("{pretty}"),
        None => print!("{}", out.text),
    }
    Ok(())
}

fn size_bound(allow_large: bool) -> usize {
    if allow_large {
        HARD_LIMIT
    } else {
        DEFAULT_BOUND
    }
}

fn parse_checks(ids: &[String]) -> Result<Vec<Invariant>> {
    if ids.is_empty() || ids.iter().any(|s| s == "all") {
        return Ok(Invariant::ALL.to_vec());
    }
    let mut out: Vec<Invariant> = ids.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn enumerate(a: &EnumerateArgs, workers: usize) -> Result<Outcome> {
    let opts = VerifyOptions {
        bound: size_bound(a.allow_large),
        workers,
        checks: parse_checks(&a.check)?,
        predicates: Vec::new(),
        iso: a.iso,
    };
    let report = verify_theorems_with(a.max_points, &opts)?;
    let mut text = String::new();
    let kind = if a.iso { "isomorphism classes" } else { "labeled spaces" };
    let _ = writeln!(text, "{} {kind} on at most {} points", report.total, report.n);
    let _ = writeln!(text, "per size: {:?}", report.per_size);
    for (inv, passed) in &report.passes {
        let _ = writeln!(text, "  {:<11} {passed}/{}", inv.id(), report.total);
    }
    for v in &report.violations {
        let _ = writeln!(text, "VIOLATION {} on {:?}: {}", v.invariant, v.space, v.witness);
    }
    let _ = writeln!(
        text,
        "{}",
        if report.is_clean() {
            "all invariants hold".to_string()
        } else {
            format!("{} violations", report.violations.len())
        }
    );
    Ok(Outcome {
        ok: report.is_clean(),
        json: serde_json::to_value(&report)?,
        text,
    })
}

fn search(a: &SearchArgs) -> Result<Outcome> {
    let pred = Predicate::parse(&a.predicate)?;
    let hit = find_counterexample_bounded(&pred, a.max_points, size_bound(a.allow_large))?;
    let mut text = String::new();
    let json = match &hit {
        Some(space) => {
            let profile = space.profile();
            let known = entries()
                .into_iter()
                .find(|e| are_isomorphic(&e.space, space))
                .map(|e| e.name);
            let _ = writeln!(text, "first hit on {} points: {space:?}", space.len());
            let _ = writeln!(text, "  {}", profile_summary(&profile));
            if let Some(name) = &known {
                let _ = writeln!(text, "  isomorphic to gallery entry {name}");
            }
            json!({
                "predicate": pred.id(),
                "maxPoints": a.max_points,
                "found": space,
                "profile": profile,
                "galleryMatch": known,
            })
        }
        None => {
            let _ = writeln!(text, "no space on at most {} points satisfies {}", a.max_points, pred);
            json!({ "predicate": pred.id(), "maxPoints": a.max_points, "found": null })
        }
    };
    Ok(Outcome { text, json, ok: true })
}

fn show_gallery(a: &GalleryArgs) -> Result<Outcome> {
    let list = match &a.name {
        Some(name) => vec![gallery(name)?],
        None => entries(),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for e in list {
        let valid = e.validate();
        ok &= valid;
        if a.dot {
            let _ = writeln!(text, "// {}", e.name);
            text.push_str(&e.space.to_dot());
        } else {
            let status = if valid { "ok" } else { "MISMATCH" };
            let _ = writeln!(text, "{} [{status}] {:?}", e.name, e.space);
            let _ = writeln!(text, "  {}", profile_summary(&e.expected));
            let _ = writeln!(text, "  {}", e.provenance);
        }
        let mut v = serde_json::to_value(&e)?;
        v["valid"] = json!(valid);
        if a.dot {
            v["dot"] = json!(e.space.to_dot());
        }
        items.push(v);
    }
    Ok(Outcome {
        text,
        json: Value::Array(items),
        ok,
    })
}

fn profile_summary(p: &PropertyProfile) -> String {
    let flags: String = [p.p1, p.p2, p.p3, p.p4, p.p5, p.p6]
        .iter()
        .map(|&b| if b { 'T' } else { 'F' })
        .collect();
    let dim = p
        .dimension
        .map_or_else(|| "undefined".to_string(), |d| d.to_string());
    format!(
        "p1..p6={flags} irreducible={} connected={} nonempty={} discrete={} dim={dim} pointwise={:?}",
        p.irreducible, p.connected, p.nonempty, p.discrete, p.pointwise_irreducible
    )
}

fn prodfields(a: &ProdfieldsArgs, seed: u64) -> Result<Outcome> {
    let ring = ProductRing::uniform(a.field, a.size)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut text = String::new();
    let mut json = json!({ "field": a.field.to_string(), "size": a.size });
    let mut ok = true;

    if a.demo != Some(ProdDemo::Spectrum) {
        let reports: Vec<IdempotentReport> = (0..a.samples)
            .map(|_| IdempotentReport::of(&ring.random(&mut rng)))
            .collect();
        let passed = reports.iter().filter(|r| r.all_hold()).count();
        ok &= passed == reports.len();
        for r in &reports {
            let _ = writeln!(
                text,
                "x = {}  x̄ = {}  e = {}  [{}]",
                r.element,
                r.pseudo_inverse,
                r.idempotent,
                if r.all_hold() { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            text,
            "x = x²x̄, e² = e, xe = x, D(x) = D(e), V(e) = D(1-e): {passed}/{} samples",
            reports.len()
        );
        json["idempotent"] = json!({ "passed": passed, "samples": reports });
    }

    if a.demo != Some(ProdDemo::Idempotent) {
        let points = ring.spectrum();
        let space = ring.spectrum_space();
        let profile = space.profile();
        let incomparable = points.iter().all(|&p| {
            points
                .iter()
                .all(|&q| p == q || !ring.prime_contained_in(p, q))
        });
        let good = points.len() == a.size
            && incomparable
            && space.is_discrete()
            && profile.dimension == Some(0);
        ok &= good;
        let names: Vec<String> = points.iter().map(|p| format!("ker π{}", p.j)).collect();
        let _ = writeln!(text, "spectrum: {}", names.join(", "));
        let _ = writeln!(
            text,
            "pairwise incomparable={incomparable} discrete={} dim={} connected={}  [{}]",
            space.is_discrete(),
            profile.dimension.map_or_else(|| "undefined".to_string(), |d| d.to_string()),
            profile.connected,
            if good { "ok" } else { "FAIL" }
        );
        json["spectrum"] = json!({
            "points": names,
            "space": space,
            "profile": profile,
            "pairwiseIncomparable": incomparable,
            "ok": good,
        });
    }
    Ok(Outcome { text, json, ok })
}

const MAX_TERMS: usize = 6;
const MAX_LEVEL: u32 = 4;

fn hochster(a: &HochsterArgs, seed: u64) -> Result<Outcome> {
    let ring = HochsterRing::new(a.index.clone(), a.field);
    let mut rng = StdRng::seed_from_u64(seed);
    let demos = match &a.demo {
        Some(d) => vec![d.clone()],
        None => {
            let mut all = vec![HochsterDemo::Reduced, HochsterDemo::ZeroDivisor, HochsterDemo::MonoidProps];
            all.extend(standard_cuts(&a.index).into_iter().map(HochsterDemo::Cut));
            all
        }
    };
    let mut text = String::new();
    let mut sections = Vec::new();
    let mut ok = true;
    for demo in demos {
        let (good, section) = match demo {
            HochsterDemo::Reduced => reduced_demo(&ring, a.samples, &mut rng, &mut text)?,
            HochsterDemo::ZeroDivisor => zero_divisor_demo(&ring, a.samples, &mut rng, &mut text)?,
            HochsterDemo::MonoidProps => monoid_demo(&ring, &mut text)?,
            HochsterDemo::Cut(cut) => cut_demo(&ring, &cut, a.samples, &mut rng, &mut text)?,
        };
        ok &= good;
        sections.push(section);
    }
    Ok(Outcome {
        text,
        json: json!({
            "index": a.index.to_string(),
            "field": a.field.to_string(),
            "seed": seed,
            "demos": sections,
        }),
        ok,
    })
}

fn standard_cuts(index: &OrderedIndex) -> Vec<Cut> {
    match index {
        OrderedIndex::FiniteChain(n) => {
            let mut cuts = vec![Cut::LowerEmpty, Cut::UpperEmpty];
            cuts.extend(chain_internal_cuts(*n));
            cuts
        }
        OrderedIndex::RationalLine => sample_rational_cuts(),
    }
}

fn mark(good: bool) -> &'static str {
    if good {
        "ok"
    } else {
        "FAIL"
    }
}

fn reduced_demo(ring: &HochsterRing, samples: usize, rng: &mut StdRng, text: &mut String) -> Result<(bool, Value)> {
    let mut passed = 0;
    let mut examples = Vec::new();
    for i in 0..samples {
        let r = ring.random_non_scalar(rng, MAX_TERMS, MAX_LEVEL);
        let cert = r.reducedness_witness()?;
        let sq = r.square();
        let good = cert.is_valid() && sq != r && !sq.is_zero() && !r.is_idempotent();
        passed += usize::from(good);
        if i < 3 {
            let _ = writeln!(text, "r = {r}");
            let _ = writeln!(
                text,
                "  leading level {} at {}; r² has {}·e{} where r has none  [{}]",
                cert.leading.level,
                crate::hochster::format_value(&cert.leading.pivot),
                cert.square_coefficient,
                cert.square_term,
                mark(good)
            );
            examples.push(json!({ "element": r, "certificate": cert }));
        }
    }
    let trivial = ring.zero().is_idempotent() && ring.one().is_idempotent();
    let good = passed == samples && trivial;
    let _ = writeln!(
        text,
        "reduced: {passed}/{samples} non-scalar samples with r² ≠ 0, r² ≠ r and a valid certificate; 0 and 1 idempotent={trivial}  [{}]",
        mark(good)
    );
    Ok((good, json!({ "demo": "reduced", "samples": samples, "passed": passed, "ok": good, "examples": examples })))
}

fn zero_divisor_demo(ring: &HochsterRing, samples: usize, rng: &mut StdRng, text: &mut String) -> Result<(bool, Value)> {
    let index = ring.index();
    if index.window(2).len() < 2 {
        return Err(Error::IndexTooSmall(2));
    }
    let mut passed = 0;
    let mut examples = Vec::new();
    for i in 0..samples {
        let (x, y) = loop {
            let (x, y) = (index.random(rng), index.random(rng));
            if x < y {
                break (x, y);
            }
        };
        let left = ring.basis(x.clone(), 1)?;
        let right = &ring.one() - &ring.basis(y.clone(), 1)?;
        let product = zero_divisor_product(ring, &x, &y)?;
        let good = product.is_zero() && !left.is_zero() && !right.is_zero();
        passed += usize::from(good);
        if i < 3 {
            let _ = writeln!(text, "({left})·({right}) = {product}  [{}]", mark(good));
            examples.push(json!({ "left": left, "right": right, "product": product }));
        }
    }
    let good = passed == samples;
    let _ = writeln!(text, "zero divisors: {passed}/{samples} pairs x < y with e_(x,1)(1 - e_(y,1)) = 0  [{}]", mark(good));
    Ok((good, json!({ "demo": "zerodivisor", "samples": samples, "passed": passed, "ok": good, "examples": examples })))
}

fn monoid_demo(ring: &HochsterRing, text: &mut String) -> Result<(bool, Value)> {
    let report = monoid_property_witnesses(ring.index())?;
    let good = report.torsionfree && report.aperiodic && !report.cancellable && report.one_cancellable;
    let _ = writeln!(
        text,
        "monoid on window {:?}: torsionfree={} aperiodic={} cancellable={} one cancellable={}  [{}]",
        report.window,
        report.torsionfree,
        report.aperiodic,
        report.cancellable,
        report.one_cancellable,
        mark(good)
    );
    if let Some(w) = &report.non_cancellable_witness {
        let _ = writeln!(text, "  {}·{} = {} = {}·{}", w.a, w.c, w.product, w.b, w.c);
    }
    let mut v = serde_json::to_value(&report)?;
    v["demo"] = json!("monoid-props");
    v["ok"] = json!(good);
    Ok((good, v))
}

fn cut_demo(ring: &HochsterRing, cut: &Cut, samples: usize, rng: &mut StdRng, text: &mut String) -> Result<(bool, Value)> {
    let eval = cut_evaluation(ring.index(), ring.field(), cut)?;
    let class = eval.class().clone();
    let mut passed = 0;
    for _ in 0..samples {
        let r = ring.random_element(rng, MAX_TERMS, MAX_LEVEL);
        let s = ring.random_element(rng, MAX_TERMS, MAX_LEVEL);
        passed += usize::from(eval.respects(&r, &s));
    }
    let mut good = passed == samples && eval.apply(&ring.one()) == eval.one();
    let mut relation = Value::Null;
    if let StalkClass::DoublePivot { lower, upper } = &class {
        let (x, y) = eval
            .codomain()
            .zero_divisor_pair(ring.field())
            .expect("quotient codomain has zero divisors");
        let vanishes = x.mul(&y).is_zero() && !x.is_zero() && !y.is_zero();
        let source = zero_divisor_product(ring, lower, upper)?;
        let maps = eval.apply(&ring.basis(lower.clone(), 1)?) == x
            && eval.apply(&(&ring.one() - &ring.basis(upper.clone(), 1)?)) == y.scale(&ring.field().from_i64(-1));
        good &= vanishes && maps && source.is_zero();
        relation = json!({ "a": x.to_string(), "bMinusOne": y.to_string(), "vanishes": vanishes, "imagesMatch": maps });
    }
    let _ = writeln!(
        text,
        "cut {cut}: {} -> {} ({}); homomorphism on {passed}/{samples} pairs  [{}]",
        class,
        codomain_name(eval.codomain()),
        class.note(),
        mark(good)
    );
    Ok((
        good,
        json!({
            "demo": format!("cut:{cut}"),
            "class": class,
            "integral": eval.codomain().is_integral(),
            "samples": samples,
            "passed": passed,
            "relation": relation,
            "ok": good,
        }),
    ))
}

fn codomain_name(c: crate::hochster::Codomain) -> &'static str {
    use crate::hochster::Codomain::*;
    match c {
        Field => "K",
        Polynomial => "K[t]",
        NodeQuotient => "K[a,b]/(a(b-1))",
    }
}
