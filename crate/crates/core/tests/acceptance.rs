//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. Set
//! `IRRLAB_ACCEPT_N5=1` to extend criterion 1 to all 6942 spaces on five
//! points.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use irrlab::enumerate::{
    are_isomorphic, find_counterexample, spaces_of_size, verify_theorems, Invariant, Predicate,
};
use irrlab::finspace::brute;
use irrlab::gallery::{entries, gallery, GalleryEntry};
use irrlab::hochster::{
    cut::{chain_internal_cuts, sample_rational_cuts},
    cut_evaluation, zero_divisor_product, Codomain, Cut, HochsterRing, OrderedIndex, Side,
    StalkClass,
};
use irrlab::prodfields::{IdempotentReport, ProductRing};
use irrlab::{Field, FiniteSpace, PropertyProfile, SubsetMask};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x1_2026;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exhaustive theorem suite", exhaustive_suite),
        ("counterexample search", counterexample_search),
        ("brute-force/fast agreement", brute_fast_agreement),
        ("monoid algebra reducedness", hochster_reducedness),
        ("monoid algebra zero divisors and cuts", hochster_cuts),
        ("product of fields", product_of_fields),
        ("gallery self-validation and JSON", gallery_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!(
            "[{tag}] {}. {name}: {} ({:.2?})",
            i + 1,
            o.detail,
            started.elapsed()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Reflexive-transitive relations on `n` points, by filtering all relations.
fn preorders_by_filtering(n: usize) -> BTreeSet<FiniteSpace> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = BTreeSet::new();
    for bits in 0u64..(1 << off.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for (k, &(x, y)) in off.iter().enumerate() {
            leq[x][y] = bits >> k & 1 == 1;
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z]))
        });
        if transitive {
            out.insert(FiniteSpace::from_matrix(&leq).expect("preorder"));
        }
    }
    out
}

fn exhaustive_suite() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in 0..=4 {
        let oracle = preorders_by_filtering(n);
        let generated: BTreeSet<FiniteSpace> = spaces_of_size(n).into_iter().collect();
        if oracle != generated || spaces_of_size(n).len() != oracle.len() {
            pass = false;
            notes.push(format!("n={n}: generated set differs from filtered relations"));
        }
    }
    let started = Instant::now();
    let report = verify_theorems(4).expect("n = 4 is within bounds");
    let elapsed = started.elapsed();
    let at_four = report.per_size[4];
    let all_passed = report.passes.len() == Invariant::ALL.len()
        && report.passes.values().all(|&c| c == report.total);
    pass &= report.is_clean() && at_four == 355 && all_passed && elapsed < Duration::from_secs(30);
    notes.push(format!(
        "{} spaces ({at_four} on 4 points, matches filtered relations), {} violations, {:.2?}",
        report.total,
        report.violations.len(),
        elapsed
    ));
    if std::env::var("IRRLAB_ACCEPT_N5").is_ok_and(|v| v == "1") {
        let started = Instant::now();
        let r5 = verify_theorems(5).expect("n = 5 is within bounds");
        let elapsed = started.elapsed();
        pass &= r5.is_clean() && r5.per_size[5] == 6942 && elapsed < Duration::from_secs(600);
        notes.push(format!(
            "n=5: {} on 5 points, {} violations, {:.2?}",
            r5.per_size[5],
            r5.violations.len(),
            elapsed
        ));
    } else {
        notes.push("n=5 skipped (IRRLAB_ACCEPT_N5=1 to run)".into());
    }
    outcome(pass, notes.join("; "))
}

fn counterexample_search() -> Outcome {
    let not_li = Predicate::parse("!locallyIrreducible").unwrap();
    let hit = find_counterexample(&not_li, 5).unwrap();
    let reference = gallery("threePoint140C").unwrap().space;
    let first_ok = hit
        .as_ref()
        .is_some_and(|s| s.len() == 3 && are_isomorphic(s, &reference));
    let mut pass = first_ok;
    let mut notes = vec![format!(
        "!locallyIrreducible first at n={}{}",
        hit.as_ref().map_or(0, FiniteSpace::len),
        if first_ok { ", isomorphic to threePoint140C" } else { "" }
    )];
    for expr in ["p4 & !p3", "p6 & !p5"] {
        let none = find_counterexample(&Predicate::parse(expr).unwrap(), 5)
            .unwrap()
            .is_none();
        pass &= none;
        notes.push(format!("'{expr}' up to n=5: {}", if none { "none" } else { "FOUND" }));
    }
    outcome(pass, notes.join("; "))
}

fn brute_fast_agreement() -> Outcome {
    let mut spaces = 0usize;
    let mut agree = 0usize;
    let mut subsets = 0usize;
    for n in 0..=4 {
        for space in spaces_of_size(n) {
            spaces += 1;
            let full = space.points();
            let subsets_agree = full.submasks().all(|s: SubsetMask| {
                subsets += 1;
                space.is_irreducible_subset(s) == brute::is_irreducible_subset(&space, s)
            });
            let mut fast_comps = space.irreducible_components();
            let mut slow_comps = brute::irreducible_components(&space);
            fast_comps.sort_by_key(|m| m.bits());
            slow_comps.sort_by_key(|m| m.bits());
            let ok = subsets_agree
                && fast_comps == slow_comps
                && space.is_locally_irreducible() == brute::is_locally_irreducible(&space);
            agree += usize::from(ok);
        }
    }
    outcome(
        agree == spaces,
        format!(
            "{agree}/{spaces} spaces agree ({:.1}%), {subsets} subsets compared",
            100.0 * agree as f64 / spaces as f64
        ),
    )
}

fn fields() -> [Field; 2] {
    [Field::Rational, Field::prime(2).unwrap()]
}

fn indices() -> [OrderedIndex; 2] {
    [OrderedIndex::chain(5).unwrap(), OrderedIndex::RationalLine]
}

fn hochster_reducedness() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for field in fields() {
        for index in indices() {
            let ring = HochsterRing::new(index.clone(), field);
            let mut rng = StdRng::seed_from_u64(SEED);
            let mut good = 0;
            for _ in 0..1000 {
                let r = ring.random_non_scalar(&mut rng, 6, 4);
                let sq = r.square();
                let cert = r.reducedness_witness().expect("non-scalar");
                good += usize::from(cert.is_valid() && sq != r && !sq.is_zero());
            }
            // idempotent check on the same distribution plus scalars
            let mut rng = StdRng::seed_from_u64(SEED);
            let mut idem_ok = ring.zero().is_idempotent() && ring.one().is_idempotent();
            for _ in 0..1000 {
                let r = ring.random_element(&mut rng, 6, 4);
                let trivial = r == ring.zero() || r == ring.one();
                idem_ok &= r.is_idempotent() == trivial;
            }
            pass &= good == 1000 && idem_ok;
            notes.push(format!("{field}/{index}: {good}/1000 certified, idempotents {}", if idem_ok { "{0,1}" } else { "WRONG" }));
        }
    }
    outcome(pass, notes.join("; "))
}

fn random_pair_below(index: &OrderedIndex, rng: &mut StdRng) -> (irrlab::hochster::IndexValue, irrlab::hochster::IndexValue) {
    loop {
        let (x, y) = (index.random(rng), index.random(rng));
        if x < y {
            return (x, y);
        }
    }
}

fn hochster_cuts() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut rng = StdRng::seed_from_u64(SEED);

    // zero divisors
    let mut zero_pairs = 0;
    for field in fields() {
        for index in indices() {
            let ring = HochsterRing::new(index.clone(), field);
            for _ in 0..50 {
                let (x, y) = random_pair_below(&index, &mut rng);
                let left = ring.basis(x.clone(), 1).unwrap();
                let right = &ring.one() - &ring.basis(y.clone(), 1).unwrap();
                let p = zero_divisor_product(&ring, &x, &y).unwrap();
                let ok = p.is_zero() && !left.is_zero() && !right.is_zero() && p == &left * &right;
                pass &= ok;
                zero_pairs += usize::from(ok);
            }
        }
    }
    notes.push(format!("{zero_pairs}/200 zero-divisor pairs"));

    // homomorphism identities, 500 pairs per cut class
    let half = irrlab::hochster::parse_value("1/2").unwrap();
    let classes: [(&str, OrderedIndex, Cut); 3] = [
        ("TrivialField", OrderedIndex::RationalLine, Cut::sqrt2()),
        (
            "LocalizedPolynomial",
            OrderedIndex::RationalLine,
            Cut::At { z: half, side: Side::Lower },
        ),
        ("DoublePivot", OrderedIndex::chain(5).unwrap(), Cut::between(1)),
    ];
    for (label, index, cut) in &classes {
        for field in fields() {
            let ring = HochsterRing::new(index.clone(), field);
            let eval = cut_evaluation(index, field, cut).unwrap();
            let class_ok = match eval.class() {
                StalkClass::TrivialField => *label == "TrivialField",
                StalkClass::LocalizedPolynomial { .. } => *label == "LocalizedPolynomial",
                StalkClass::DoublePivot { .. } => *label == "DoublePivot",
            };
            let mut good = 0;
            for _ in 0..500 {
                let r = ring.random_element(&mut rng, 6, 4);
                let s = ring.random_element(&mut rng, 6, 4);
                good += usize::from(eval.respects(&r, &s));
            }
            let unital = eval.apply(&ring.one()) == eval.one();
            pass &= class_ok && unital && good == 500;
            notes.push(format!("{label} over {field}: {good}/500"));
        }
    }

    // rationals never double-pivot
    let mut rational_cuts = sample_rational_cuts();
    for _ in 0..200 {
        let z = OrderedIndex::RationalLine.random(&mut rng);
        let side = if rng.random_bool(0.5) { Side::Lower } else { Side::Upper };
        rational_cuts.push(Cut::At { z, side });
    }
    let no_double = rational_cuts.iter().all(|c| {
        !matches!(
            cut_evaluation(&OrderedIndex::RationalLine, Field::Rational, c).unwrap().class(),
            StalkClass::DoublePivot { .. }
        )
    });
    pass &= no_double;
    notes.push(format!("{} rational cuts, DoublePivot {}", rational_cuts.len(), if no_double { "never" } else { "SEEN" }));

    // chains of size >= 2 have a double pivot with a(b-1) = 0
    let mut chains_ok = true;
    for n in 2..=8 {
        let index = OrderedIndex::chain(n).unwrap();
        let field = Field::Rational;
        let ring = HochsterRing::new(index.clone(), field);
        let mut found = false;
        for cut in chain_internal_cuts(n) {
            let eval = cut_evaluation(&index, field, &cut).unwrap();
            if let StalkClass::DoublePivot { lower, upper } = eval.class() {
                let (a, b1) = Codomain::NodeQuotient.zero_divisor_pair(field).unwrap();
                let relation = a.mul(&b1).is_zero() && !a.is_zero() && !b1.is_zero();
                let images = eval.apply(&ring.basis(lower.clone(), 1).unwrap()) == a
                    && eval.apply(&ring.basis(upper.clone(), 1).unwrap()).sub(&eval.one()) == b1;
                found |= relation && images;
            }
        }
        chains_ok &= found;
    }
    pass &= chains_ok;
    notes.push(format!("chains 2..=8 DoublePivot with a(b-1)=0: {chains_ok}"));
    outcome(pass, notes.join("; "))
}

fn product_of_fields() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for field in [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::Rational] {
        let mut rng = StdRng::seed_from_u64(SEED);
        let mut good = 0;
        for _ in 0..500 {
            let size = rng.random_range(1..=6);
            let ring = ProductRing::uniform(field, size).unwrap();
            good += usize::from(IdempotentReport::of(&ring.random(&mut rng)).all_hold());
        }
        pass &= good == 500;
        notes.push(format!("{field}: {good}/500"));
    }
    let mut spectra_ok = true;
    for size in 1..=6 {
        let ring = ProductRing::uniform(Field::Rational, size).unwrap();
        let points = ring.spectrum();
        let incomparable = points
            .iter()
            .all(|&p| points.iter().all(|&q| p == q || !ring.prime_contained_in(p, q)));
        let space = ring.spectrum_space();
        spectra_ok &= points.len() == size
            && incomparable
            && space.is_discrete()
            && space.dimension() == Some(0);
    }
    pass &= spectra_ok;
    notes.push(format!("spectra |I|=1..6 discrete of dimension 0: {spectra_ok}"));
    outcome(pass, notes.join("; "))
}

fn gallery_round_trip() -> Outcome {
    let all = entries();
    let mut valid = 0;
    let mut round_trips = 0;
    for e in &all {
        valid += usize::from(e.validate());
        let entry_back: GalleryEntry = serde_json::from_str(&serde_json::to_string(e).unwrap()).unwrap();
        let space_back: FiniteSpace = serde_json::from_str(&serde_json::to_string(&e.space).unwrap()).unwrap();
        let profile_back: PropertyProfile = serde_json::from_str(&serde_json::to_string(&e.expected).unwrap()).unwrap();
        round_trips += usize::from(entry_back == *e && space_back == e.space && profile_back == e.expected);
    }
    outcome(
        valid == all.len() && round_trips == all.len(),
        format!("{valid}/{} self-validate, {round_trips}/{} round-trip", all.len(), all.len()),
    )
}
