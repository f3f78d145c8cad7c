//! Which statement is checked where.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Status {
    Verified,
    /// Only the finite or finitely representable part is checked.
    Partial,
    OutOfScope,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceEntry {
    pub statement: &'static str,
    pub checked_by: &'static str,
    pub status: Status,
}

const fn entry(statement: &'static str, checked_by: &'static str, status: Status) -> TraceEntry {
    TraceEntry {
        statement,
        checked_by,
        status,
    }
}

pub fn trace() -> Vec<TraceEntry> {
    use Status::*;
    vec![
        entry("1.10 A-C (irreducible, components, locally irreducible)", "finspace::{is_irreducible_subset, irreducible_components, is_locally_irreducible} + finspace::brute cross-check [crosscheck]", Verified),
        entry("Prop 1.20", "enumerate.verify_theorems [prop1.20]", Verified),
        entry("Cor 1.30", "enumerate.verify_theorems [cor1.30]", Verified),
        entry("Cor 1.35", "enumerate.verify_theorems [cor1.35]; gallery empty, discrete2, xySkeleton", Verified),
        entry("1.36 A/B/C", "gallery empty, discrete2, xySkeleton; prodfields spectrum |I| = 2", Verified),
        entry("1.40 A (Q fulfils (4) but not (3))", "out of scope as a literal space; search 'p4 & !p3' finds nothing on finite spaces", OutOfScope),
        entry("1.40 B (R fulfils (6) but not (5))", "out of scope as a literal space; search 'p6 & !p5' finds nothing on finite spaces", OutOfScope),
        entry("1.40 C", "gallery threePoint140C; search '!p1' rediscovers it at n = 3", Verified),
        entry("Prop 1.41", "enumerate.verify_theorems [prop1.41] (finite T0 case); prodfields ProductElement::idempotent", Partial),
        entry("Cor 1.42", "finite spaces are quasicompact; infinite case not representable", Partial),
        entry("1.43 A (products of fields)", "prodfields pseudo_inverse, idempotent, principal_open, spectrum (finite index sets)", Partial),
        entry("1.43 B (Cantor set)", "out of scope", OutOfScope),
        entry("1.45 B (magma L, monoid M, R = K[M])", "hochster MonoidElement::mul, RingElement add and mul", Verified),
        entry("1.45 C (reduced, Idem(R) = {0,1}, not integral; monoid predicates)", "hochster reducedness_witness, is_idempotent, zero_divisor_product, monoid_property_witnesses", Verified),
        entry("1.45 D (cuts, stalks)", "hochster cut_evaluation, stalk_classify", Verified),
        entry("1.45 E (stalks are discrete valuation rings)", "hochster StalkClass tag and note", Partial),
        entry("Prop 2.40", "finspace.pointwise_irreducible_at (taken as the definition)", Verified),
        entry("Cor 2.45", "enumerate.verify_theorems [cor2.45]", Verified),
        entry("Cor 2.70", "enumerate.verify_theorems [cor2.70]", Verified),
        entry("Prop 2.60", "enumerate.verify_theorems [prop2.60]", Verified),
        entry("2.75 A/B", "gallery xySkeleton; hochster cuts over the rationals", Verified),
        entry("3.10 / Prop 3.30", "hochster and prodfields rings verified reduced, so irreducibility notions are integrity notions", Partial),
        entry("Prop 3.20 (X_red functor)", "out of scope", OutOfScope),
        entry("Hochster's spectral-space theorem (1.10 D)", "out of scope; finite T0 spaces assumed spectral", OutOfScope),
    ]
}

pub fn render() -> String {
    let mut out = String::new();
    for e in trace() {
        let tag = match e.status {
            Status::Verified => "verified",
            Status::Partial => "partial",
            Status::OutOfScope => "OUT OF SCOPE",
        };
        out.push_str(&format!("{} → {}  [{tag}]\n", e.statement, e.checked_by));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_contents() {
        let text = render();
        assert!(text.contains("Prop 1.20 → enumerate.verify_theorems"));
        assert!(text.contains("Prop 3.20 (X_red functor) → out of scope  [OUT OF SCOPE]"));
        assert!(text.contains("1.43 B (Cantor set) → out of scope  [OUT OF SCOPE]"));
        for s in ["Cor 1.30", "Cor 1.35", "Cor 2.45", "Cor 2.70", "Prop 2.40", "Prop 2.60", "Prop 1.41", "1.45", "Prop 3.30"] {
            assert!(text.contains(s), "{s}");
        }
    }
}
