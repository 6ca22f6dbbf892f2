//! Registered claims checked exhaustively over enumerated corpora.
//!
//! Each claim names a base corpus, a hypothesis selecting the algebras it
//! speaks about, and a check returning a witness description on failure.

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::axioms;
use crate::catalog;
use crate::congruence;
use crate::constructions;
use crate::enumerate::{self, EnumerationSpec};
use crate::error::EnumerationError;
use crate::terms::{self, theory};

/// Claim names with a one-line description.
pub const CLAIMS: &[(&str, &str)] = [
    ("collassone", "paraorthomodular BZ*-lattices have S◊ = S_B = S_K"),
    ("paradia", "on BZ*-lattices, paraorthomodular ⇔ ◊-orthomodular"),
    ("aol-basis", "antiortholattices satisfy AOL1, AOL2, AOL3"),
    ("j", "antiortholattices satisfy J"),
    ("katanga", "PBZ* chains are antiortholattices satisfying DIST and SDM, isomorphic to Dn"),
    ("merluzzo", "s.i. antiortholattices with DIST and SDM are D2..D5"),
    ("freccia", "PBZ* + AOL1-3 + SK + SDM implies the five freccia clauses"),
    ("freccetta", "PBZ* + AOL1-3 + SK implies DIST, SDM and no zero divisors"),
    ("gustoso", "s.i. PBZ* + AOL1-3 is an antiortholattice with P ∪ N = L"),
    ("scucca", "commutation conditions hold iff the algebra is the sum of its blocks"),
    ("basics", "the elementary BZ-lattice laws"),
    ("twist-roundtrip", "antiortholattices with P ∪ N = L are twists of their positive cone"),
    ("tomtom", "D(p), E(p) and ∼ on s.i. DIST + SDM antiortholattices"),
    ("ammarolla", "C(p) on s.i. DIST + SDM antiortholattices"),
    ("sharp-inclusions", "S_K ⊆ S◊ ⊆ S_B on BZ-lattices"),
    ("aol-characterisation", "on PBZ*-lattices, S_K = {0,1} ⇔ ∼ is the antiortho complement"),
]
.as_slice();

#[derive(Clone, Debug)]
pub struct ClaimFailure {
    pub algebra: FiniteAlgebra,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub claim: String,
    pub max_size: usize,
    /// Algebras in the base corpus.
    pub total: usize,
    /// Algebras satisfying the hypothesis, i.e. actually checked.
    pub checked: usize,
    pub failures: Vec<ClaimFailure>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let head = format!(
            "{}: {} of {} algebras (n ≤ {}) checked, {} failures",
            self.claim,
            self.checked,
            self.total,
            self.max_size,
            self.failures.len()
        );
        match self.failures.first() {
            Some(f) => format!("{head}; first: {} ({})", f.algebra.name(), f.detail),
            None => head,
        }
    }
}

/// `None`: hypothesis not met. `Some(Err(_))`: claim fails with a witness.
type Check = fn(&FiniteAlgebra) -> Option<Result<(), String>>;

fn law(a: &FiniteAlgebra, name: &str) -> Result<(), String> {
    let st = theory::get(name).expect("registered identity");
    terms::holds_statement(a, &st).map_err(|c| format!("{name} fails at {}", c.describe(a)))
}

fn laws(a: &FiniteAlgebra, names: &[&str]) -> Result<(), String> {
    names.iter().try_for_each(|n| law(a, n))
}

fn satisfies(a: &FiniteAlgebra, names: &[&str]) -> bool {
    laws(a, names).is_ok()
}

fn si(a: &FiniteAlgebra) -> bool {
    a.size() >= 2 && congruence::is_subdirectly_irreducible(a).is_ok_and(|r| r.irreducible)
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn zero_divisor(a: &FiniteAlgebra) -> Result<(), String> {
    let z = a.zero();
    match a.elements().flat_map(|x| a.elements().map(move |y| (x, y))).find(|&(x, y)| {
        x != z && y != z && a.meet(x, y) == z
    }) {
        Some((x, y)) => Err(format!("{} ∧ {} = 0", a.label(x), a.label(y))),
        None => Ok(()),
    }
}

fn check_collassone(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !axioms::is_paraorthomodular(a).holds() {
        return None;
    }
    let s = axioms::sharp_sets(a).ok()?;
    Some(ensure(s.collapsed(), || format!("sharp sets differ: {s:?}")))
}

fn check_paradia(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    let p = axioms::is_paraorthomodular(a).holds();
    let d = axioms::is_diamond_orthomodular(a).holds();
    Some(ensure(p == d, || format!("paraorthomodular = {p}, ◊-orthomodular = {d}")))
}

fn check_aol_basis(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    Some(laws(a, &["AOL1", "AOL2", "AOL3"]))
}

fn check_j(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    Some(law(a, "J"))
}

fn check_katanga(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !axioms::is_pbz_star(a).holds() {
        return None;
    }
    Some(
        ensure(axioms::is_antiortholattice(a), || "not an antiortholattice".into())
            .and_then(|_| laws(a, &["DIST", "SDM"]))
            .and_then(|_| {
                let d = catalog::kleene_chain(a.size());
                ensure(crate::is_isomorphic(a, &d).is_some(), || format!("not isomorphic to {}", d.name()))
            }),
    )
}

fn check_merluzzo(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["DIST", "SDM"]) || !si(a) {
        return None;
    }
    let hit = (2..=5).any(|n| crate::is_isomorphic(a, &catalog::kleene_chain(n)).is_some());
    Some(ensure(hit, || "not isomorphic to any of D2..D5".into()))
}

fn check_freccia(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["AOL1", "AOL2", "AOL3", "SK", "SDM"]) {
        return None;
    }
    Some(theory::FRECCIA.iter().try_for_each(|(name, _)| law(a, name)))
}

fn check_freccetta(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["AOL1", "AOL2", "AOL3", "SK"]) {
        return None;
    }
    Some(laws(a, &["DIST", "SDM"]).and_then(|_| zero_divisor(a)))
}

fn check_gustoso(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["AOL1", "AOL2", "AOL3"]) || !si(a) {
        return None;
    }
    Some(
        ensure(axioms::is_antiortholattice(a), || "not an antiortholattice".into()).and_then(|_| {
            ensure(constructions::cones(a).covers_universe(a.size()), || "P ∪ N is not the universe".into())
        }),
    )
}

fn check_scucca(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    let r = constructions::is_horizontal_sum_of_blocks(a).ok()?;
    Some(ensure(r.agree(), || {
        format!("conditions hold = {}, sum of blocks = {}; {:?}", r.conditions_hold(), r.sum_of_blocks, r.failures(a))
    }))
}

fn check_basics(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    let failing = axioms::check_basics(a).ok()?;
    Some(ensure(failing.is_empty(), || format!("failing clauses {failing:?}")))
}

fn check_twist(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if a.size() < 2 || !constructions::cones(a).covers_universe(a.size()) {
        return None;
    }
    Some(constructions::twist_represent(a).map(|_| ()).map_err(|e| e.to_string()))
}

fn check_tomtom(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["DIST", "SDM"]) || !si(a) {
        return None;
    }
    Some(match congruence::tomtom_check(a) {
        Ok(r) => ensure(r.passed(), || format!("{r:?}")),
        Err(e) => Err(e.to_string()),
    })
}

fn check_ammarolla(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    if !satisfies(a, &["DIST", "SDM"]) || !si(a) {
        return None;
    }
    let r = congruence::ammarolla_check(a);
    Some(ensure(r.passed(), || format!("{r:?}")))
}

fn check_sharp_inclusions(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    let s = axioms::sharp_sets(a).ok()?;
    Some(ensure(s.nested(), || format!("{s:?}")))
}

fn check_aol_characterisation(a: &FiniteAlgebra) -> Option<Result<(), String>> {
    let k = axioms::is_kleene_antiortho(a);
    let b = axioms::has_antiortho_brouwer(a);
    Some(ensure(a.size() < 2 || k == b, || format!("S_K = {{0,1}}: {k}, antiortho ∼: {b}")))
}

/// Base corpus spec and check for a claim.
fn registry(claim: &str, max: usize) -> Option<(EnumerationSpec, Check)> {
    let bz = EnumerationSpec::new(max);
    let aol = EnumerationSpec::new(max).antiortholattices();
    let pbz = EnumerationSpec::pbz(max);
    Some(match claim {
        "collassone" => (bz.class("bz-star"), check_collassone as Check),
        "paradia" => (bz.class("bz-star"), check_paradia),
        "aol-basis" => (aol, check_aol_basis),
        "j" => (aol, check_j),
        "katanga" => (EnumerationSpec::new(max).chains(), check_katanga),
        "merluzzo" => (aol, check_merluzzo),
        "freccia" => (pbz, check_freccia),
        "freccetta" => (pbz, check_freccetta),
        "gustoso" => (pbz, check_gustoso),
        "scucca" => (pbz, check_scucca),
        "basics" => (bz, check_basics),
        "twist-roundtrip" => (aol, check_twist),
        "tomtom" => (aol, check_tomtom),
        "ammarolla" => (aol, check_ammarolla),
        "sharp-inclusions" => (bz, check_sharp_inclusions),
        "aol-characterisation" => (pbz, check_aol_characterisation),
        _ => return None,
    })
}

/// The base corpus a claim is evaluated over.
pub fn claim_spec(claim: &str, max_size: usize) -> Result<EnumerationSpec, EnumerationError> {
    registry(&claim.to_ascii_lowercase(), max_size)
        .map(|(s, _)| s)
        .ok_or_else(|| EnumerationError::UnknownClaim(claim.to_string()))
}

/// Evaluates `claim` on every algebra of its corpus with `n ≤ max_size`.
pub fn verify_over_corpus(claim: &str, max_size: usize) -> Result<ClaimReport, EnumerationError> {
    let name = claim.to_ascii_lowercase();
    let (spec, check) = registry(&name, max_size).ok_or_else(|| EnumerationError::UnknownClaim(claim.to_string()))?;
    let corpus = enumerate::enumerate(&spec)?;
    let outcomes: Vec<Option<Result<(), String>>> = corpus.par_iter().map(check).collect();
    let mut report = ClaimReport { claim: name, max_size, total: corpus.len(), checked: 0, failures: Vec::new() };
    for (a, outcome) in corpus.iter().zip(outcomes) {
        match outcome {
            None => {}
            Some(Ok(())) => report.checked += 1,
            Some(Err(detail)) => {
                report.checked += 1;
                report.failures.push(ClaimFailure { algebra: a.clone(), detail });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_claim_resolves() {
        for (name, _) in CLAIMS {
            assert!(claim_spec(name, 4).is_ok(), "{name}");
        }
        assert!(matches!(verify_over_corpus("nope", 4), Err(EnumerationError::UnknownClaim(_))));
    }

    #[test]
    fn small_claims_pass() {
        for claim in ["collassone", "paradia", "katanga", "aol-basis", "scucca"] {
            let r = verify_over_corpus(claim, 5).unwrap();
            assert!(r.passed(), "{}", r.summary());
            assert!(r.checked > 0);
        }
    }
}
