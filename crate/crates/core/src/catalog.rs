//! Named algebras used as ground truth by the test suite.
//!
//! Entries are explicit tables (chains and Boolean algebras from closed-form
//! rules, the rest as literal algebra documents); none is produced by the
//! construction code, so the constructions can be checked against them.

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, RawAlgebra};
use crate::format;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog entry `{0}`")]
pub struct UnknownEntry(pub String);

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: FiniteAlgebra,
    pub note: &'static str,
}

/// Catalog names in display order.
pub const NAMES: [&str; 19] = [
    "D2", "D3", "D4", "D5", "D6", "D7", "D8", "B4", "B8", "B16", "MO2", "O6-benzene", "MO2⊞D3", "B4⊞D3", "B4⊞D4",
    "B4⊞D5", "T1(2x2)", "T2(2x2)", "T1(N5⊕1)",
];

const ALIASES: [(&str, &str); 9] = [
    ("O6", "O6-benzene"),
    ("benzene", "O6-benzene"),
    ("MO2+D3", "MO2⊞D3"),
    ("B4+D3", "B4⊞D3"),
    ("B4+D4", "B4⊞D4"),
    ("B4+D5", "B4⊞D5"),
    ("T1(N5+1)", "T1(N5⊕1)"),
    ("T1(2×2)", "T1(2x2)"),
    ("T2(2×2)", "T2(2x2)"),
];

/// Resolves ASCII aliases to the canonical catalog name.
pub fn canonical_name(name: &str) -> Option<&'static str> {
    NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .or_else(|| ALIASES.iter().find(|(a, _)| *a == name).map(|(_, n)| *n))
}

pub fn get(name: &str) -> Result<FiniteAlgebra, UnknownEntry> {
    let canonical = canonical_name(name).ok_or_else(|| UnknownEntry(name.to_string()))?;
    Ok(build(canonical))
}

pub fn entries() -> Vec<CatalogEntry> {
    NAMES.iter().map(|&name| CatalogEntry { name, algebra: build(name), note: note(name) }).collect()
}

fn note(name: &str) -> &'static str {
    match name {
        n if n.starts_with('D') => "Kleene chain antiortholattice: a∼ = 0 iff a > 0",
        n if n.starts_with('B') && !n.contains('⊞') => "Boolean algebra with ∼ = ′",
        "MO2" => "simple modular ortholattice with 4 atoms, ∼ = ′",
        "O6-benzene" => "benzene ring: ortholattice that is not orthomodular, ∼ = ′",
        n if n.contains('⊞') => "horizontal sum of an orthomodular lattice and a Kleene chain",
        _ => "twist construction over a bounded lattice",
    }
}

fn build(name: &str) -> FiniteAlgebra {
    match name {
        "D2" | "D3" | "D4" | "D5" | "D6" | "D7" | "D8" => kleene_chain(name[1..].parse().unwrap()),
        "B4" => boolean(2),
        "B8" => boolean(3),
        "B16" => boolean(4),
        "MO2" => mo2(),
        "O6-benzene" => benzene(),
        other => {
            let doc = DOCUMENTS.iter().find(|(n, _)| *n == other).expect("catalog document").1;
            format::parse_algebra(doc).expect("catalog documents are valid")
        }
    }
}

fn chain_labels(n: usize) -> Vec<String> {
    const LOWER: &[&str] = &["a", "b", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"];
    if n == 1 {
        return vec!["0".into()];
    }
    let half = (n - 2) / 2;
    let fix = if half == 0 { "a" } else { "c" };
    let mut labels = vec!["0".to_string()];
    let lower: Vec<String> = (0..half)
        .map(|i| LOWER.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("x{i}")))
        .collect();
    labels.extend(lower.iter().cloned());
    if n % 2 == 1 {
        labels.push(fix.to_string());
    }
    labels.extend(lower.iter().rev().map(|l| format!("{l}'")));
    labels.push("1".into());
    labels
}

/// The `n`-element Kleene chain `Dₙ`: `a′` is the order dual and `a∼ = 0`
/// iff `a > 0`.
pub fn kleene_chain(n: usize) -> FiniteAlgebra {
    assert!(n >= 1, "D_n needs n >= 1");
    let leq = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
    let kleene = (0..n).map(|a| n - 1 - a).collect();
    let brouwer = (0..n).map(|a| if a == 0 { n - 1 } else { 0 }).collect();
    FiniteAlgebra::new(RawAlgebra {
        name: format!("D{n}"),
        labels: chain_labels(n),
        leq,
        kleene,
        brouwer,
        zero: 0,
        one: n - 1,
    })
    .expect("Kleene chains are valid")
}

/// The Boolean algebra with `2^k` elements, `∼ = ′`.
pub fn boolean(k: usize) -> FiniteAlgebra {
    let n = 1usize << k;
    let top = n - 1;
    let labels = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == top => "1".to_string(),
            i => format!("b{i:0k$b}"),
        })
        .collect();
    let leq = (0..n).map(|a| (0..n).map(|b| a & b == a).collect()).collect();
    let comp: Vec<usize> = (0..n).map(|a| top ^ a).collect();
    FiniteAlgebra::new(RawAlgebra {
        name: format!("B{n}"),
        labels,
        leq,
        kleene: comp.clone(),
        brouwer: comp,
        zero: 0,
        one: top,
    })
    .expect("Boolean algebras are valid")
}

pub fn mo2() -> FiniteAlgebra {
    format::parse_algebra(MO2).unwrap()
}

pub fn benzene() -> FiniteAlgebra {
    format::parse_algebra(O6).unwrap()
}

const MO2: &str = "algebra MO2
elements 0 a a' b b' 1
covers 0 < a < 1 ; 0 < a' < 1 ; 0 < b < 1 ; 0 < b' < 1
kleene 0:1 a:a' a':a b:b' b':b 1:0
brouwer 0:1 a:a' a':a b:b' b':b 1:0
bounds 0 1
";

const O6: &str = "algebra O6-benzene
elements 0 a b a' b' 1
covers 0 < a < b' < 1 ; 0 < b < a' < 1
kleene 0:1 a:a' b:b' a':a b':b 1:0
brouwer 0:1 a:a' b:b' a':a b':b 1:0
bounds 0 1
";

const DOCUMENTS: [(&str, &str); 7] = [
    (
        "MO2⊞D3",
        "algebra MO2⊞D3
elements 0 p p' q q' a 1
covers 0 < p < 1 ; 0 < p' < 1 ; 0 < q < 1 ; 0 < q' < 1 ; 0 < a < 1
kleene 0:1 p:p' p':p q:q' q':q a:a 1:0
brouwer 0:1 p:p' p':p q:q' q':q a:0 1:0
bounds 0 1
",
    ),
    (
        "B4⊞D3",
        "algebra B4⊞D3
elements 0 p p' a 1
covers 0 < p < 1 ; 0 < p' < 1 ; 0 < a < 1
kleene 0:1 p:p' p':p a:a 1:0
brouwer 0:1 p:p' p':p a:0 1:0
bounds 0 1
",
    ),
    (
        "B4⊞D4",
        "algebra B4⊞D4
elements 0 p p' a a' 1
covers 0 < p < 1 ; 0 < p' < 1 ; 0 < a < a' < 1
kleene 0:1 p:p' p':p a:a' a':a 1:0
brouwer 0:1 p:p' p':p a:0 a':0 1:0
bounds 0 1
",
    ),
    (
        "B4⊞D5",
        "algebra B4⊞D5
elements 0 p p' a c a' 1
covers 0 < p < 1 ; 0 < p' < 1 ; 0 < a < c < a' < 1
kleene 0:1 p:p' p':p a:a' c:c a':a 1:0
brouwer 0:1 p:p' p':p a:0 c:0 a':0 1:0
bounds 0 1
",
    ),
    (
        // L = 2×2 = {0, p, q, 1}; f-copies of L∖{0} sit dually below 0.
        "T1(2x2)",
        "algebra T1(2x2)
elements f1 fp fq 0 p q 1
covers f1 < fp < 0 ; f1 < fq < 0 ; 0 < p < 1 ; 0 < q < 1
kleene f1:1 fp:p fq:q 0:0 p:fp q:fq 1:f1
brouwer f1:1 fp:f1 fq:f1 0:f1 p:f1 q:f1 1:f1
bounds f1 1
",
    ),
    (
        "T2(2x2)",
        "algebra T2(2x2)
elements f1 fp fq f0 0 p q 1
covers f1 < fp < f0 ; f1 < fq < f0 ; f0 < 0 ; 0 < p < 1 ; 0 < q < 1
kleene f1:1 fp:p fq:q f0:0 0:f0 p:fp q:fq 1:f1
brouwer f1:1 fp:f1 fq:f1 f0:f1 0:f1 p:f1 q:f1 1:f1
bounds f1 1
",
    ),
    (
        // L = N5 ⊕ 1: 0 < a < b < 1, 0 < c < 1, 1 < t.
        "T1(N5⊕1)",
        "algebra T1(N5⊕1)
elements ft f1 fb fa fc 0 a b c 1 t
covers ft < f1 < fb < fa < 0 ; f1 < fc < 0 ; 0 < a < b < 1 < t ; 0 < c < 1
kleene ft:t f1:1 fb:b fa:a fc:c 0:0 a:fa b:fb c:fc 1:f1 t:ft
brouwer ft:t f1:ft fb:ft fa:ft fc:ft 0:ft a:ft b:ft c:ft 1:ft t:ft
bounds ft t
",
    ),
];
