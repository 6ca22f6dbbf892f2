//! Class membership and sharp-element sets.
//!
//! Every check is an exhaustive scan; failures carry the lexicographically
//! least witness in element-index order.

use serde::Serialize;

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::PreconditionError;

/// Outcome of a universally quantified check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails(Failure),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub clause: &'static str,
    pub witness: Vec<Element>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(f) => Some(f),
        }
    }

    fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            fail => fail,
        }
    }
}

fn fails(clause: &'static str, witness: &[Element]) -> Verdict {
    Verdict::Fails(Failure { clause, witness: witness.to_vec() })
}

fn forall1(a: &FiniteAlgebra, clause: &'static str, p: impl Fn(Element) -> bool) -> Verdict {
    match a.elements().find(|&x| !p(x)) {
        None => Verdict::Holds,
        Some(x) => fails(clause, &[x]),
    }
}

fn forall2(a: &FiniteAlgebra, clause: &'static str, p: impl Fn(Element, Element) -> bool) -> Verdict {
    for x in a.elements() {
        for y in a.elements() {
            if !p(x, y) {
                return fails(clause, &[x, y]);
            }
        }
    }
    Verdict::Holds
}

/// `a ∧ a′ ≤ b ∨ b′` for all `a, b`.
pub fn is_pseudo_kleene(a: &FiniteAlgebra) -> Verdict {
    forall2(a, "pseudo-kleene", |x, y| a.leq(a.meet(x, a.kleene(x)), a.join(y, a.kleene(y))))
}

/// Elements with `a ∧ a′ = 0`.
pub fn kleene_sharp(a: &FiniteAlgebra) -> Vec<Element> {
    a.elements().filter(|&x| a.meet(x, a.kleene(x)) == a.zero()).collect()
}

pub fn is_ortholattice(a: &FiniteAlgebra) -> Verdict {
    forall1(a, "ortholattice", |x| a.meet(x, a.kleene(x)) == a.zero())
}

/// Ortholattice with `a ≤ b ⇒ b = (b ∧ a′) ∨ a`.
pub fn is_orthomodular(a: &FiniteAlgebra) -> Verdict {
    is_ortholattice(a).and_then(|| {
        forall2(a, "orthomodular", |x, y| !a.leq(x, y) || y == a.join(a.meet(y, a.kleene(x)), x))
    })
}

/// No pair `a < b` with `a′ ∧ b = 0`.
pub fn is_paraorthomodular(a: &FiniteAlgebra) -> Verdict {
    forall2(a, "paraorthomodular", |x, y| !(a.lt(x, y) && a.meet(a.kleene(x), y) == a.zero()))
}

/// Pseudo-Kleene plus the four Brouwer clauses.
pub fn is_bz(a: &FiniteAlgebra) -> Verdict {
    let b = |x| a.brouwer(x);
    is_pseudo_kleene(a)
        .and_then(|| forall1(a, "bz(i)", |x| a.meet(x, b(x)) == a.zero()))
        .and_then(|| forall1(a, "bz(ii)", |x| a.leq(x, b(b(x)))))
        .and_then(|| forall2(a, "bz(iii)", |x, y| !a.leq(x, y) || a.leq(b(y), b(x))))
        .and_then(|| forall1(a, "bz(iv)", |x| a.kleene(b(x)) == b(b(x))))
}

/// `(a ∧ a′)∼ ≤ a∼ ∨ a′∼` for all `a`, without checking the BZ axioms.
pub fn star_condition(a: &FiniteAlgebra) -> Verdict {
    forall1(a, "star", |x| {
        let k = a.kleene(x);
        a.leq(a.brouwer(a.meet(x, k)), a.join(a.brouwer(x), a.brouwer(k)))
    })
}

/// `(a∼ ∨ (◊a ∧ ◊b)) ∧ ◊a ≤ ◊b` for all `a, b`, without checking BZ.
pub fn diamond_orthomodular_condition(a: &FiniteAlgebra) -> Verdict {
    forall2(a, "diamond-orthomodular", |x, y| {
        let dx = a.possibility(x);
        let dy = a.possibility(y);
        a.leq(a.meet(a.join(a.brouwer(x), a.meet(dx, dy)), dx), dy)
    })
}

pub fn is_bz_star(a: &FiniteAlgebra) -> Verdict {
    is_bz(a).and_then(|| star_condition(a))
}

pub fn is_diamond_orthomodular(a: &FiniteAlgebra) -> Verdict {
    is_bz(a).and_then(|| diamond_orthomodular_condition(a))
}

/// BZ ∧ (∗) ∧ ◊-orthomodularity.
pub fn is_pbz_star(a: &FiniteAlgebra) -> Verdict {
    is_bz_star(a).and_then(|| diamond_orthomodular_condition(a))
}

/// `S_K = {0, 1}`, read on the bare algebra.
pub fn is_kleene_antiortho(a: &FiniteAlgebra) -> bool {
    a.elements().all(|x| a.is_bound(x) || a.meet(x, a.kleene(x)) != a.zero())
}

/// Antiortholattice in the class sense: a PBZ*-lattice with `S_K = {0, 1}`.
pub fn is_antiortholattice(a: &FiniteAlgebra) -> bool {
    is_kleene_antiortho(a) && is_pbz_star(a).holds()
}

/// `a∼ = 0` for `a > 0` and `0∼ = 1`.
pub fn has_antiortho_brouwer(a: &FiniteAlgebra) -> bool {
    a.elements().all(|x| a.brouwer(x) == if x == a.zero() { a.one() } else { a.zero() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpSets {
    pub kleene: Vec<Element>,
    pub diamond: Vec<Element>,
    pub brouwer: Vec<Element>,
}

impl SharpSets {
    pub fn collapsed(&self) -> bool {
        self.kleene == self.diamond && self.diamond == self.brouwer
    }

    /// `S◊ ⊆ S_B ⊆ S_K`.
    pub fn nested(&self) -> bool {
        self.diamond.iter().all(|x| self.brouwer.contains(x)) && self.brouwer.iter().all(|x| self.kleene.contains(x))
    }
}

fn require_bz(a: &FiniteAlgebra) -> Result<(), PreconditionError> {
    if is_bz(a).holds() {
        Ok(())
    } else {
        Err(PreconditionError::NotBz { algebra: a.name().to_string() })
    }
}

/// Kleene-sharp, ◊-sharp (`a = ◊a`) and Brouwer-sharp (`a ∨ a∼ = 1`) elements.
pub fn sharp_sets(a: &FiniteAlgebra) -> Result<SharpSets, PreconditionError> {
    require_bz(a)?;
    Ok(SharpSets {
        kleene: kleene_sharp(a),
        diamond: a.elements().filter(|&x| a.possibility(x) == x).collect(),
        brouwer: a.elements().filter(|&x| a.join(x, a.brouwer(x)) == a.one()).collect(),
    })
}

/// Whether `a = ◊a ⇔ a′ = a∼` holds element-wise.
pub fn diamond_sharp_characterisations_agree(a: &FiniteAlgebra) -> bool {
    a.elements().all(|x| (a.possibility(x) == x) == (a.kleene(x) == a.brouwer(x)))
}

/// Clauses (i)–(ix) of the basic BZ arithmetic; returns the names of the
/// failing ones.
pub fn check_basics(a: &FiniteAlgebra) -> Result<Vec<&'static str>, PreconditionError> {
    require_bz(a)?;
    let b = |x| a.brouwer(x);
    let k = |x| a.kleene(x);
    let bx = |x| a.necessity(x);
    let dx = |x| a.possibility(x);
    let clauses: [(&'static str, Verdict); 9] = [
        ("(i)", forall1(a, "(i)", |x| b(b(b(x))) == b(x))),
        ("(ii)", forall1(a, "(ii)", |x| a.leq(b(x), k(x)))),
        ("(iii)", forall2(a, "(iii)", |x, y| b(a.join(x, y)) == a.meet(b(x), b(y)))),
        ("(iv)", forall2(a, "(iv)", |x, y| a.leq(a.join(b(x), b(y)), b(a.meet(x, y))))),
        ("(v)", forall1(a, "(v)", |x| k(bx(k(x))) == dx(x))),
        ("(vi)", forall2(a, "(vi)", |x, y| bx(a.meet(x, y)) == a.meet(bx(x), bx(y)))),
        ("(vii)", forall2(a, "(vii)", |x, y| dx(a.join(x, y)) == a.join(dx(x), dx(y)))),
        ("(viii)", forall2(a, "(viii)", |x, y| a.leq(dx(a.meet(x, y)), a.meet(dx(x), dx(y))))),
        ("(ix)", forall1(a, "(ix)", |x| !a.leq(k(x), x) || b(x) == a.zero())),
    ];
    Ok(clauses.into_iter().filter(|(_, v)| !v.holds()).map(|(n, _)| n).collect())
}

/// Per-class membership with the failing witness of each class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraClassReport {
    pub bounded_involution_lattice: bool,
    pub pseudo_kleene: bool,
    pub ortholattice: bool,
    pub orthomodular: bool,
    pub paraorthomodular: bool,
    pub distributive: bool,
    pub bz: bool,
    pub bz_star: bool,
    pub diamond_orthomodular: bool,
    pub pbz_star: bool,
    /// `S_K = {0, 1}` on the bare algebra.
    pub kleene_antiortho: bool,
    /// PBZ* with `S_K = {0, 1}`.
    pub antiortholattice: bool,
    pub failures: Vec<(String, Failure)>,
}

/// Class names accepted by [`AlgebraClassReport::get`].
pub const CLASS_NAMES: [&str; 12] = [
    "bil",
    "pseudo-kleene",
    "ortholattice",
    "orthomodular",
    "paraorthomodular",
    "distributive",
    "bz",
    "bz-star",
    "diamond-orthomodular",
    "pbz-star",
    "kleene-antiortho",
    "antiortholattice",
];

impl AlgebraClassReport {
    pub fn get(&self, class: &str) -> Option<bool> {
        Some(match class {
            "bil" => self.bounded_involution_lattice,
            "pseudo-kleene" => self.pseudo_kleene,
            "ortholattice" => self.ortholattice,
            "orthomodular" => self.orthomodular,
            "paraorthomodular" => self.paraorthomodular,
            "distributive" => self.distributive,
            "bz" => self.bz,
            "bz-star" => self.bz_star,
            "diamond-orthomodular" => self.diamond_orthomodular,
            "pbz-star" => self.pbz_star,
            "kleene-antiortho" => self.kleene_antiortho,
            "antiortholattice" => self.antiortholattice,
            _ => return None,
        })
    }

    pub fn failure(&self, class: &str) -> Option<&Failure> {
        self.failures.iter().find(|(c, _)| c == class).map(|(_, f)| f)
    }
}

/// Membership in a single class named as in [`CLASS_NAMES`], computed
/// without building the full report.
pub fn has_class(a: &FiniteAlgebra, class: &str) -> Option<bool> {
    Some(match class {
        "bil" => true,
        "pseudo-kleene" => is_pseudo_kleene(a).holds(),
        "ortholattice" => is_ortholattice(a).holds(),
        "orthomodular" => is_orthomodular(a).holds(),
        "paraorthomodular" => is_paraorthomodular(a).holds(),
        "distributive" => a.is_distributive(),
        "bz" => is_bz(a).holds(),
        "bz-star" => is_bz_star(a).holds(),
        "diamond-orthomodular" => is_diamond_orthomodular(a).holds(),
        "pbz-star" => is_pbz_star(a).holds(),
        "kleene-antiortho" => is_kleene_antiortho(a),
        "antiortholattice" => is_antiortholattice(a),
        _ => return None,
    })
}

pub fn class_report(a: &FiniteAlgebra) -> AlgebraClassReport {
    let mut failures = Vec::new();
    let mut record = |name: &str, v: Verdict| -> bool {
        match v {
            Verdict::Holds => true,
            Verdict::Fails(f) => {
                failures.push((name.to_string(), f));
                false
            }
        }
    };
    let pseudo_kleene = record("pseudo-kleene", is_pseudo_kleene(a));
    let ortholattice = record("ortholattice", is_ortholattice(a));
    let orthomodular = record("orthomodular", is_orthomodular(a));
    let paraorthomodular = record("paraorthomodular", is_paraorthomodular(a));
    let bz = record("bz", is_bz(a));
    let bz_star = record("bz-star", is_bz_star(a));
    let diamond_orthomodular = record("diamond-orthomodular", is_diamond_orthomodular(a));
    let pbz_star = bz_star && diamond_orthomodular;
    if !pbz_star {
        let v = is_pbz_star(a);
        record("pbz-star", v);
    }
    let kleene_antiortho = is_kleene_antiortho(a);
    AlgebraClassReport {
        bounded_involution_lattice: true,
        pseudo_kleene,
        ortholattice,
        orthomodular,
        paraorthomodular,
        distributive: a.is_distributive(),
        bz,
        bz_star,
        diamond_orthomodular,
        pbz_star,
        kleene_antiortho,
        antiortholattice: kleene_antiortho && pbz_star,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn chains_are_pbz_antiortholattices() {
        for n in 2..=8 {
            let d = catalog::kleene_chain(n);
            let r = class_report(&d);
            assert!(r.pbz_star && r.antiortholattice && r.pseudo_kleene, "D{n}: {r:?}");
            assert!(is_paraorthomodular(&d).holds());
            assert!(check_basics(&d).unwrap().is_empty());
        }
    }

    #[test]
    fn d4_and_d5_sharp_sets() {
        let d4 = catalog::kleene_chain(4);
        let s = sharp_sets(&d4).unwrap();
        assert_eq!(s.kleene, vec![d4.zero(), d4.one()]);
        let d5 = catalog::kleene_chain(5);
        let s = sharp_sets(&d5).unwrap();
        assert_eq!(s.kleene, vec![d5.zero(), d5.one()]);
        assert!(s.collapsed());
    }

    #[test]
    fn mo2_is_orthomodular_and_everything_is_sharp() {
        let m = catalog::mo2();
        assert!(is_orthomodular(&m).holds());
        assert!(is_bz(&m).holds());
        assert!(is_diamond_orthomodular(&m).holds());
        let s = sharp_sets(&m).unwrap();
        assert_eq!(s.kleene.len(), 6);
        assert!(s.collapsed());
        assert!(!is_kleene_antiortho(&m));
    }

    #[test]
    fn benzene_is_ortho_but_not_orthomodular() {
        let o6 = catalog::benzene();
        assert!(is_ortholattice(&o6).holds());
        let f = is_orthomodular(&o6);
        assert_eq!(f.failure().unwrap().clause, "orthomodular");
        assert!(!is_paraorthomodular(&o6).holds());
        assert!(is_bz(&o6).holds());
        assert!(!is_diamond_orthomodular(&o6).holds());
        assert!(is_bz_star(&o6).holds());
    }

    #[test]
    fn d3_not_ortholattice() {
        let d3 = catalog::kleene_chain(3);
        let a = d3.element("a").unwrap();
        assert_eq!(is_ortholattice(&d3).failure().unwrap().witness, vec![a]);
    }

    #[test]
    fn d3_with_identity_brouwer_fails_bz_i() {
        let d3 = catalog::kleene_chain(3);
        let bad = d3.with_brouwer(vec![0, 1, 2]).unwrap();
        let v = is_bz(&bad);
        // 0 ∧ 0 = 0 passes; a ∧ a = a is the least failure
        assert_eq!(v.failure().unwrap().clause, "bz(i)");
        assert_eq!(v.failure().unwrap().witness, vec![Element::new(1)]);
    }

    #[test]
    fn sharp_sets_need_bz() {
        let d3 = catalog::kleene_chain(3);
        let bad = d3.with_brouwer(vec![0, 1, 2]).unwrap();
        assert!(sharp_sets(&bad).is_err());
        assert!(check_basics(&bad).is_err());
        assert_eq!(kleene_sharp(&bad).len(), 2);
    }

    #[test]
    fn b4_plus_d3_is_not_an_antiortholattice() {
        let a = catalog::get("B4⊞D3").unwrap();
        assert!(!is_antiortholattice(&a));
        assert!(is_pbz_star(&a).holds());
    }
}
