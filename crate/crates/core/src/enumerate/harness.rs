use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{all_spaces_bounded, check_bound, isomorphism_classes, spaces_of_size, Predicate, BRUTE_FORCE_LIMIT, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::finspace::{brute, FiniteSpace, PropertyProfile, SubsetMask};

/// A statement checked on every enumerated space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Invariant {
    /// (1) ⇔ (2) ⇔ (3) ⇒ (4) ⇔ (5) ⇒ (6), and (6) ⇒ (1) since `irr(X)` is
    /// finite.
    #[serde(rename = "prop1.20")]
    Prop120,
    /// Locally irreducible ⇒ each minimal open neighbourhood lies in a
    /// single component, so `irr(X)` is locally finite.
    #[serde(rename = "cor1.30")]
    Cor130,
    /// Irreducible ⇔ nonempty, connected and locally irreducible.
    #[serde(rename = "cor1.35")]
    Cor135,
    /// (6) ⇔ pointwise irreducible; locally irreducible ⇒ pointwise.
    #[serde(rename = "cor2.45")]
    Cor245,
    /// Locally irreducible ⇔ pointwise irreducible; irreducible ⇔ nonempty,
    /// connected and pointwise irreducible.
    #[serde(rename = "cor2.70")]
    Cor270,
    /// A point has an irreducible neighbourhood ⇔ it lies in one component.
    #[serde(rename = "prop2.60")]
    Prop260,
    /// T0 spaces: totally disconnected ⇔ dimension ≤ 0.
    #[serde(rename = "prop1.41")]
    Prop141,
    /// Irreducible components are closed and connected; each connected
    /// component contains one.
    #[serde(rename = "components")]
    Components,
    /// The Kolmogorov quotient has the same profile.
    #[serde(rename = "kolmogorov")]
    Kolmogorov,
    /// Fast and brute-force predicates agree (small spaces only).
    #[serde(rename = "crosscheck")]
    CrossCheck,
}

impl Invariant {
    pub const ALL: [Invariant; 10] = [
        Invariant::Prop120,
        Invariant::Cor130,
        Invariant::Cor135,
        Invariant::Cor245,
        Invariant::Cor270,
        Invariant::Prop260,
        Invariant::Prop141,
        Invariant::Components,
        Invariant::Kolmogorov,
        Invariant::CrossCheck,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Invariant::Prop120 => "prop1.20",
            Invariant::Cor130 => "cor1.30",
            Invariant::Cor135 => "cor1.35",
            Invariant::Cor245 => "cor2.45",
            Invariant::Cor270 => "cor2.70",
            Invariant::Prop260 => "prop2.60",
            Invariant::Prop141 => "prop1.41",
            Invariant::Components => "components",
            Invariant::Kolmogorov => "kolmogorov",
            Invariant::CrossCheck => "crosscheck",
        }
    }

    /// `Ok(())` if the statement holds on `space`, else a witness message.
    pub fn check(self, space: &FiniteSpace, p: &PropertyProfile) -> std::result::Result<(), String> {
        let fail = |msg: String| Err(msg);
        match self {
            Invariant::Prop120 => {
                let v = [p.p1, p.p2, p.p3, p.p4, p.p5, p.p6];
                if !(p.p1 == p.p2 && p.p2 == p.p3) {
                    return fail(format!("p1,p2,p3 = {:?}", &v[..3]));
                }
                if p.p4 != p.p5 {
                    return fail(format!("p4 = {}, p5 = {}", p.p4, p.p5));
                }
                if p.p3 && !p.p4 {
                    return fail("p3 holds but p4 fails".into());
                }
                if p.p5 && !p.p6 {
                    return fail("p5 holds but p6 fails".into());
                }
                if p.p6 && !p.p1 {
                    return fail("p6 holds but p1 fails on a finite space".into());
                }
                Ok(())
            }
            Invariant::Cor130 => {
                if !p.p1 {
                    return Ok(());
                }
                let comps = space.irreducible_components();
                for x in 0..space.len() {
                    let nb = SubsetMask::from_bits(space.up_sets()[x]);
                    let meeting = comps.iter().filter(|c| !c.is_disjoint(nb)).count();
                    let inside = comps.iter().filter(|c| nb.is_subset(**c)).count();
                    if meeting != 1 || inside != 1 {
                        return fail(format!(
                            "point {x}: neighbourhood {nb} meets {meeting} components"
                        ));
                    }
                }
                Ok(())
            }
            Invariant::Cor135 => {
                let rhs = p.nonempty && p.connected && p.p1;
                if p.irreducible == rhs {
                    Ok(())
                } else {
                    fail(format!(
                        "irreducible = {}, nonempty ∧ connected ∧ p1 = {rhs}",
                        p.irreducible
                    ))
                }
            }
            Invariant::Cor245 => {
                let pw = p.pointwise_irreducible_everywhere();
                if p.p6 != pw {
                    return fail(format!("p6 = {}, pointwise = {pw}", p.p6));
                }
                if p.p1 && !pw {
                    return fail("locally irreducible but not pointwise irreducible".into());
                }
                Ok(())
            }
            Invariant::Cor270 => {
                let pw = p.pointwise_irreducible_everywhere();
                if p.p1 != pw {
                    return fail(format!("p1 = {}, pointwise = {pw}", p.p1));
                }
                let rhs = p.nonempty && p.connected && pw;
                if p.irreducible != rhs {
                    return fail(format!(
                        "irreducible = {}, nonempty ∧ connected ∧ pointwise = {rhs}",
                        p.irreducible
                    ));
                }
                Ok(())
            }
            Invariant::Prop260 => {
                for x in 0..space.len() {
                    let nb = space.has_irreducible_neighbourhood(x);
                    if nb != p.pointwise_irreducible[x] {
                        return fail(format!(
                            "point {x}: irreducible neighbourhood = {nb}, pointwise = {}",
                            p.pointwise_irreducible[x]
                        ));
                    }
                }
                Ok(())
            }
            Invariant::Prop141 => {
                if !space.is_t0() {
                    return Ok(());
                }
                let dim_le_zero = p.dimension.is_none_or(|d| d == 0);
                if p.totally_disconnected == dim_le_zero {
                    Ok(())
                } else {
                    fail(format!(
                        "totally disconnected = {}, dimension = {:?}",
                        p.totally_disconnected, p.dimension
                    ))
                }
            }
            Invariant::Components => {
                let irr = space.irreducible_components();
                let conn = space.connected_components();
                for &c in &irr {
                    if !space.is_closed(c) {
                        return fail(format!("component {c} is not closed"));
                    }
                    if !conn.iter().any(|k| c.is_subset(*k)) {
                        return fail(format!("component {c} is not connected"));
                    }
                }
                for &k in &conn {
                    if k.is_empty() || !irr.iter().any(|c| c.is_subset(k)) {
                        return fail(format!("connected component {k} contains no irreducible one"));
                    }
                }
                let cover = irr.iter().fold(SubsetMask::EMPTY, |a, &c| a.union(c));
                if cover != space.points() {
                    return fail(format!("irreducible components cover only {cover}"));
                }
                Ok(())
            }
            Invariant::Kolmogorov => {
                let q = space.kolmogorov_quotient();
                if !q.is_t0() {
                    return fail("quotient is not T0".into());
                }
                let qp = q.profile();
                let flags = |p: &PropertyProfile| {
                    (
                        [p.p1, p.p2, p.p3, p.p4, p.p5, p.p6],
                        [p.irreducible, p.connected, p.nonempty],
                        p.dimension,
                    )
                };
                if flags(p) != flags(&qp) {
                    return fail(format!("space {:?} vs quotient {:?}", flags(p), flags(&qp)));
                }
                let class = space.kolmogorov_classes();
                for (x, &c) in class.iter().enumerate() {
                    if p.pointwise_irreducible[x] != qp.pointwise_irreducible[c] {
                        return fail(format!("pointwise flag of {x} not preserved"));
                    }
                }
                Ok(())
            }
            Invariant::CrossCheck => cross_check(space),
        }
    }
}

fn cross_check(space: &FiniteSpace) -> std::result::Result<(), String> {
    if space.len() > BRUTE_FORCE_LIMIT {
        return Ok(());
    }
    for s in space.points().submasks() {
        let fast = space.is_irreducible_subset(s);
        if fast != brute::is_irreducible_subset(space, s) {
            return Err(format!("is_irreducible_subset({s}): fast = {fast}"));
        }
    }
    if space.irreducible_components() != brute::irreducible_components(space) {
        return Err(format!(
            "irreducible_components: fast {:?}, brute {:?}",
            space.irreducible_components(),
            brute::irreducible_components(space)
        ));
    }
    if space.is_locally_irreducible() != brute::is_locally_irreducible(space) {
        return Err("is_locally_irreducible disagrees".into());
    }
    if space.connected_components() != brute::connected_components(space) {
        return Err("connected_components disagrees".into());
    }
    if space.is_connected() != brute::is_connected(space) {
        return Err("is_connected disagrees".into());
    }
    if space.dimension() != brute::dimension(space) {
        return Err(format!(
            "dimension: fast {:?}, brute {:?}",
            space.dimension(),
            brute::dimension(space)
        ));
    }
    Ok(())
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown invariant {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub space: FiniteSpace,
    pub invariant: Invariant,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CounterexampleHit {
    pub predicate_id: String,
    pub space: FiniteSpace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationReport {
    pub n: usize,
    pub total: usize,
    /// Number of spaces on exactly `k` points, for `k = 0..=n`.
    pub per_size: Vec<usize>,
    /// Number of spaces on which each checked invariant held.
    pub passes: BTreeMap<Invariant, usize>,
    pub violations: Vec<Violation>,
    pub counterexample_hits: Vec<CounterexampleHit>,
}

impl EnumerationReport {
    fn empty(n: usize, checks: &[Invariant]) -> Self {
        EnumerationReport {
            n,
            total: 0,
            per_size: vec![0; n + 1],
            passes: checks.iter().map(|&c| (c, 0)).collect(),
            violations: Vec::new(),
            counterexample_hits: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Combines two partial reports. Associative and commutative up to the
    /// canonical ordering applied by [`EnumerationReport::normalize`].
    pub fn merge(mut self, other: EnumerationReport) -> Self {
        self.n = self.n.max(other.n);
        self.total += other.total;
        if self.per_size.len() < other.per_size.len() {
            self.per_size.resize(other.per_size.len(), 0);
        }
        for (k, c) in other.per_size.into_iter().enumerate() {
            self.per_size[k] += c;
        }
        for (inv, c) in other.passes {
            *self.passes.entry(inv).or_default() += c;
        }
        self.violations.extend(other.violations);
        for hit in other.counterexample_hits {
            match self
                .counterexample_hits
                .iter_mut()
                .find(|h| h.predicate_id == hit.predicate_id)
            {
                Some(h) => {
                    if key(&hit.space) < key(&h.space) {
                        h.space = hit.space;
                    }
                }
                None => self.counterexample_hits.push(hit),
            }
        }
        self.normalize()
    }

    fn normalize(mut self) -> Self {
        self.violations
            .sort_by(|a, b| (key(&a.space), a.invariant).cmp(&(key(&b.space), b.invariant)));
        self.counterexample_hits
            .sort_by(|a, b| a.predicate_id.cmp(&b.predicate_id));
        self
    }
}

fn key(space: &FiniteSpace) -> (usize, &FiniteSpace) {
    (space.len(), space)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub bound: usize,
    /// Worker threads; `0` uses rayon's default.
    pub workers: usize,
    pub checks: Vec<Invariant>,
    /// For each predicate, the report records the least space satisfying it.
    pub predicates: Vec<Predicate>,
    /// Check one canonical representative per isomorphism class instead of
    /// every labeled space.
    pub iso: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bound: DEFAULT_BOUND,
            workers: 0,
            checks: Invariant::ALL.to_vec(),
            predicates: Vec::new(),
            iso: false,
        }
    }
}

/// Runs every invariant on every space with at most `n` points.
pub fn verify_theorems(n: usize) -> Result<EnumerationReport> {
    verify_theorems_with(n, &VerifyOptions::default())
}

pub fn verify_theorems_with(n: usize, opts: &VerifyOptions) -> Result<EnumerationReport> {
    check_bound(n, opts.bound)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let mut report = EnumerationReport::empty(n, &opts.checks);
    for k in 0..=n {
        let spaces = if opts.iso {
            isomorphism_classes(k, opts.bound)?
        } else {
            spaces_of_size(k)
        };
        let partial = pool.install(|| {
            spaces
                .par_chunks(64)
                .map(|chunk| {
                    let mut r = EnumerationReport::empty(n, &opts.checks);
                    for space in chunk {
                        check_space(space, opts, &mut r);
                    }
                    r.per_size[k] = chunk.len();
                    r
                })
                .reduce(
                    || EnumerationReport::empty(n, &opts.checks),
                    EnumerationReport::merge,
                )
        });
        report = report.merge(partial);
    }
    Ok(report)
}

fn check_space(space: &FiniteSpace, opts: &VerifyOptions, report: &mut EnumerationReport) {
    let profile = space.profile();
    report.total += 1;
    for &inv in &opts.checks {
        match inv.check(space, &profile) {
            Ok(()) => *report.passes.entry(inv).or_default() += 1,
            Err(witness) => report.violations.push(Violation {
                space: space.clone(),
                invariant: inv,
                witness,
            }),
        }
    }
    for pred in &opts.predicates {
        if !pred.eval(&profile, space) {
            continue;
        }
        match report
            .counterexample_hits
            .iter_mut()
            .find(|h| h.predicate_id == pred.id())
        {
            Some(h) => {
                if key(space) < key(&h.space) {
                    h.space = space.clone();
                }
            }
            None => report.counterexample_hits.push(CounterexampleHit {
                predicate_id: pred.id().to_string(),
                space: space.clone(),
            }),
        }
    }
}

/// First space, in enumeration order with increasing `n`, satisfying the
/// predicate. `max_n` is subject to [`DEFAULT_BOUND`].
pub fn find_counterexample(predicate: &Predicate, max_n: usize) -> Result<Option<FiniteSpace>> {
    find_counterexample_bounded(predicate, max_n, DEFAULT_BOUND)
}

pub fn find_counterexample_bounded(
    predicate: &Predicate,
    max_n: usize,
    bound: usize,
) -> Result<Option<FiniteSpace>> {
    check_bound(max_n, bound)?;
    for k in 0..=max_n {
        if let Some(s) = all_spaces_bounded(k, bound)?.find(|s| predicate.holds(s)) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
