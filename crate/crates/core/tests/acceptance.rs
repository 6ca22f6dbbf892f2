//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are reported but do not fail the run; any
//! other failing criterion makes the process exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use pbzlab_core::axioms::{self, class_report};
use pbzlab_core::claims::{verify_over_corpus, ClaimReport};
use pbzlab_core::congruence::{all_congruences, is_subdirectly_irreducible};
use pbzlab_core::constructions::horizontal_sum;
use pbzlab_core::enumerate::{enumerate, EnumerationSpec};
use pbzlab_core::format::{export_dot, parse_algebra, print_algebra};
use pbzlab_core::search::search_counterexample;
use pbzlab_core::terms::{holds, holds_statement, theory};
use pbzlab_core::{catalog, validate, FiniteAlgebra};

/// Zero-divisor clause fails on `B4 = D2 × D2`, which satisfies AOL1–3 and SK.
const KNOWN_RED: &[usize] = &[10];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn claim(name: &str, max: usize) -> ClaimReport {
    verify_over_corpus(name, max).expect("registered claim")
}

fn catalog_soundness() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    for n in 2..=8 {
        let d = catalog::get(&format!("D{n}")).unwrap();
        let r = class_report(&d);
        if !validate(&d.to_raw()).unwrap().ok || !r.pbz_star || !r.antiortholattice || !d.is_chain() {
            problems.push(format!("D{n} flags"));
        }
    }
    let mo2 = catalog::get("MO2").unwrap();
    let r = class_report(&mo2);
    if !validate(&mo2.to_raw()).unwrap().ok || !r.orthomodular || r.distributive {
        problems.push("MO2 flags".into());
    }
    let o6 = catalog::get("O6").unwrap();
    let r = class_report(&o6);
    if !validate(&o6.to_raw()).unwrap().ok || !r.ortholattice || r.orthomodular || r.paraorthomodular {
        problems.push("O6 flags".into());
    }
    let d4 = catalog::get("D4").unwrap();
    let witness = match holds(&d4, &theory::identity("SK").unwrap()) {
        Ok(()) => {
            problems.push("D4 satisfies SK".into());
            String::new()
        }
        Err(c) => c.describe(&d4),
    };
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        problems.push(format!("took {elapsed:?}"));
    }
    outcome(problems.is_empty(), format!("D4 fails SK at {witness}; {elapsed:.2?}; {problems:?}"))
}

fn from_claim(r: ClaimReport) -> Outcome {
    outcome(r.passed() && r.checked > 0, r.summary())
}

fn separating_identity() -> Outcome {
    let j = claim("j", 8);
    let jst = theory::get("J").unwrap();
    let om_fail: Vec<&str> = catalog::entries()
        .iter()
        .filter(|e| e.algebra.size() <= 8 && axioms::is_orthomodular(&e.algebra).holds())
        .filter(|e| holds_statement(&e.algebra, &jst).is_err())
        .map(|e| e.name)
        .collect();
    let search = search_counterexample(&jst, &EnumerationSpec::pbz(8)).unwrap();
    outcome(j.passed() && om_fail.is_empty(), format!("{}; OM failures {om_fail:?}; search: {}", j.summary(), search.summary()))
}

fn v2_v1_separation() -> Outcome {
    let sdm = theory::get("SDM").unwrap();
    let dist = theory::get("DIST").unwrap();
    let a = search_counterexample(&dist, &EnumerationSpec::new(8).antiortholattices().satisfying("SDM").unwrap()).unwrap();
    let b = search_counterexample(&sdm, &EnumerationSpec::new(8).antiortholattices().distributive()).unwrap();
    outcome(
        a.found.is_some() && b.found.is_some(),
        format!("(a) non-distributive with SDM: {}; (b) distributive without SDM: {}", a.summary(), b.summary()),
    )
}

fn chains() -> Outcome {
    let r = claim("katanga", 12);
    let per_size: Vec<usize> = (1..=12)
        .map(|n| enumerate(&EnumerationSpec::pbz(12).chains().sizes(n, n)).unwrap().len())
        .collect();
    outcome(r.passed() && per_size.iter().all(|&c| c == 1), format!("{}; PBZ* chains per size {per_size:?}", r.summary()))
}

fn merluzzo() -> Outcome {
    let r = claim("merluzzo", 7);
    let d6 = catalog::get("D6").unwrap();
    let d6_si = is_subdirectly_irreducible(&d6).unwrap().irreducible;
    let d6_laws = ["DIST", "SDM"].iter().all(|l| holds_statement(&d6, &theory::get(l).unwrap()).is_ok());
    outcome(r.passed() && !d6_si && d6_laws, format!("{}; D6 satisfies DIST+SDM: {d6_laws}, s.i.: {d6_si}", r.summary()))
}

fn hsum_si() -> Outcome {
    let b4 = catalog::get("B4").unwrap();
    let si = |a: &FiniteAlgebra| is_subdirectly_irreducible(a).unwrap().irreducible;
    let mut got = Vec::new();
    for j in 3..=6 {
        let sum = horizontal_sum(&[b4.clone(), catalog::kleene_chain(j)]).unwrap();
        got.push((format!("B4⊞D{j}"), si(&sum), j <= 5));
    }
    got.push(("MO2⊞D3".into(), si(&catalog::get("MO2⊞D3").unwrap()), true));
    let pass = got.iter().all(|(_, s, e)| s == e);
    let shown: Vec<String> = got.iter().map(|(n, s, _)| format!("{n} s.i. = {s}")).collect();
    outcome(pass, shown.join(", "))
}

/// Congruences by filtering every set partition.
fn brute_congruences(a: &FiniteAlgebra) -> Vec<Vec<usize>> {
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    let next = p.iter().max().map_or(0, |m| m + 1);
                    (0..=next).map(move |b| {
                        let mut q = p.clone();
                        q.push(b);
                        q
                    })
                })
                .collect();
        }
        out
    }
    let els: Vec<_> = a.elements().collect();
    let mut out: Vec<Vec<usize>> = partitions(a.size())
        .into_iter()
        .filter(|p| {
            let same = |x: pbzlab_core::Element, y: pbzlab_core::Element| p[x.index()] == p[y.index()];
            els.iter().all(|&x| {
                els.iter().all(|&y| {
                    !same(x, y)
                        || (same(a.kleene(x), a.kleene(y))
                            && same(a.brouwer(x), a.brouwer(y))
                            && els.iter().all(|&z| same(a.meet(x, z), a.meet(y, z)) && same(a.join(x, z), a.join(y, z))))
                })
            })
        })
        .collect();
    out.sort();
    out
}

fn congruence_oracle() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in catalog::entries().into_iter().filter(|e| e.algebra.size() <= 6) {
        let mut lib: Vec<Vec<usize>> = all_congruences(&e.algebra).unwrap().iter().map(|c| c.block_ids().to_vec()).collect();
        lib.sort();
        checked += 1;
        if lib != brute_congruences(&e.algebra) {
            bad.push(e.name);
        }
    }
    outcome(bad.is_empty(), format!("{checked} catalog algebras with n ≤ 6 compared, mismatches {bad:?}"))
}

fn ammarolla_tomtom() -> Outcome {
    let t = claim("tomtom", 7);
    let a = claim("ammarolla", 7);
    outcome(t.passed() && a.passed() && t.checked > 0, format!("{}; {}", t.summary(), a.summary()))
}

fn format_round_trip() -> Outcome {
    let mut algebras: Vec<FiniteAlgebra> = catalog::entries().into_iter().map(|e| e.algebra).collect();
    algebras.extend(enumerate(&EnumerationSpec::new(8)).unwrap());
    algebras.extend(enumerate(&EnumerationSpec::new(10).antiortholattices()).unwrap());
    algebras.extend(enumerate(&EnumerationSpec::new(12).chains()).unwrap());
    let mut bad = Vec::new();
    for a in &algebras {
        let back = parse_algebra(&print_algebra(a));
        let dot_stable = export_dot(a) == export_dot(a) && back.as_ref().is_ok_and(|b| export_dot(b) == export_dot(a));
        if back.as_ref() != Ok(a) || !dot_stable {
            bad.push(a.name().to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} algebras round-tripped, failures {bad:?}", algebras.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("catalog soundness", catalog_soundness),
        ("collapse of sharp sets, BZ* n ≤ 6", || from_claim(claim("collassone", 6))),
        ("paraorthomodular iff ◊-orthomodular, BZ* n ≤ 6", || from_claim(claim("paradia", 6))),
        ("AOL1-3 on antiortholattices n ≤ 8", || from_claim(claim("aol-basis", 8))),
        ("separating identity J", separating_identity),
        ("SDM/DIST separation n ≤ 8", v2_v1_separation),
        ("twist round-trip n ≤ 10", || from_claim(claim("twist-roundtrip", 10))),
        ("PBZ* chains n ≤ 12", chains),
        ("s.i. DIST+SDM antiortholattices n ≤ 7", merluzzo),
        ("basis reduction, PBZ* + AOL1-3 + SK n ≤ 8", || from_claim(claim("freccetta", 8))),
        ("horizontal sums with B4", hsum_si),
        ("blocks criterion, PBZ* n ≤ 7", || from_claim(claim("scucca", 7))),
        ("congruence oracle", congruence_oracle),
        ("C(p), D(p), E(p) on s.i. DIST+SDM antiortholattices n ≤ 7", ammarolla_tomtom),
        ("format round-trip and DOT stability", format_round_trip),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && KNOWN_RED.contains(&id) { " (known red)" } else { "" };
        println!("{tag} {id:>2} {name}{note}: {} [{:.2?}]", o.detail, start.elapsed());
        if !o.pass && !KNOWN_RED.contains(&id) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
