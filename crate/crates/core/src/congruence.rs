//! Congruences of finite algebras and the relations `C(p)`, `D(p)`, `E(p)`.
//!
//! Partitions are stored as a block id per element, normalised so that block
//! ids appear in order of first occurrence. Two partitions are equal iff
//! their id vectors are equal.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::algebra::{Element, FiniteAlgebra};
use crate::axioms;
use crate::error::{CongruenceError, PreconditionError};
use crate::terms::{self, theory};

/// Default size bound for [`all_congruences`].
pub const DEFAULT_BOUND: usize = 12;

/// A partition of `0..n`. Produced as a congruence by the functions of this
/// module; [`relation_c`] and friends may return partitions that are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block: Vec<usize>,
}

/// A partition compatible with every operation of its algebra.
pub type Congruence = Partition;

impl Partition {
    /// Normalises arbitrary block labels.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut block = vec![0; labels.len()];
        let mut firsts: Vec<usize> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            block[i] = match firsts.iter().position(|&f| labels[f] == *l) {
                Some(b) => b,
                None => {
                    firsts.push(i);
                    firsts.len() - 1
                }
            };
        }
        Partition { block }
    }

    pub fn identity(n: usize) -> Self {
        Partition { block: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Partition { block: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    pub fn block_of(&self, a: Element) -> usize {
        self.block[a.index()]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block
    }

    pub fn related(&self, a: Element, b: Element) -> bool {
        self.block[a.index()] == self.block[b.index()]
    }

    pub fn num_classes(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (i, &b) in self.block.iter().enumerate() {
            out[b].push(Element::new(i));
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_classes() <= 1
    }

    /// Refinement order: every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.num_classes()];
        for (i, &b) in self.block.iter().enumerate() {
            if image[b] == usize::MAX {
                image[b] = other.block[i];
            } else if image[b] != other.block[i] {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = self.block.iter().copied().zip(other.block.iter().copied()).collect();
        Partition::from_labels(&pairs)
    }

    /// Join in the partition lattice. For two congruences this is again a
    /// congruence, so no operation closure is needed.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.size());
        for p in [self, other] {
            let mut first = vec![usize::MAX; p.num_classes()];
            for (i, &b) in p.block.iter().enumerate() {
                if first[b] == usize::MAX {
                    first[b] = i;
                } else {
                    uf.union(first[b], i);
                }
            }
        }
        uf.partition()
    }

    /// Related pairs `(a, b)` with `a < b` by index, sorted.
    pub fn pairs(&self) -> Vec<(Element, Element)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.block[a] == self.block[b] {
                    out.push((Element::new(a), Element::new(b)));
                }
            }
        }
        out
    }

    /// First pair `(a, b)` whose images under some operation are unrelated,
    /// or `None` when the partition is a congruence of `alg`.
    pub fn compatibility_failure(&self, alg: &FiniteAlgebra) -> Option<(Element, Element)> {
        let rep = self.representatives();
        for a in alg.elements() {
            let r = rep[self.block_of(a)];
            if r == a {
                continue;
            }
            let bad = !self.related(alg.kleene(a), alg.kleene(r))
                || !self.related(alg.brouwer(a), alg.brouwer(r))
                || alg.elements().any(|c| {
                    !self.related(alg.meet(a, c), alg.meet(r, c)) || !self.related(alg.join(a, c), alg.join(r, c))
                });
            if bad {
                return Some((r, a));
            }
        }
        None
    }

    pub fn is_congruence_of(&self, alg: &FiniteAlgebra) -> bool {
        self.size() == alg.size() && self.compatibility_failure(alg).is_none()
    }

    /// Least element index of each class.
    pub fn representatives(&self) -> Vec<Element> {
        let mut rep = vec![Element::new(usize::MAX); self.num_classes()];
        for (i, &b) in self.block.iter().enumerate().rev() {
            rep[b] = Element::new(i);
        }
        rep
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|i| self.find(i)).collect();
        Partition::from_labels(&roots)
    }
}

/// Least congruence containing all the given pairs.
pub fn generated_congruence(alg: &FiniteAlgebra, pairs: &[(Element, Element)]) -> Congruence {
    let mut uf = UnionFind::new(alg.size());
    let mut queue: VecDeque<(Element, Element)> = pairs.iter().copied().collect();
    while let Some((x, y)) = queue.pop_front() {
        if !uf.union(x.index(), y.index()) {
            continue;
        }
        // images of the merged pair under every basic translation
        queue.push_back((alg.kleene(x), alg.kleene(y)));
        queue.push_back((alg.brouwer(x), alg.brouwer(y)));
        for c in alg.elements() {
            queue.push_back((alg.meet(x, c), alg.meet(y, c)));
            queue.push_back((alg.join(x, c), alg.join(y, c)));
        }
    }
    uf.partition()
}

/// `Cg(a, b)`.
pub fn principal_congruence(alg: &FiniteAlgebra, a: Element, b: Element) -> Congruence {
    generated_congruence(alg, &[(a, b)])
}

/// All congruences, ordered by decreasing number of classes (so `Δ` comes
/// first and `∇` last), ties broken by the block vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceLattice {
    congruences: Vec<Congruence>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Congruence> {
        self.congruences.iter()
    }

    pub fn as_slice(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn bottom(&self) -> &Congruence {
        &self.congruences[0]
    }

    pub fn top(&self) -> &Congruence {
        self.congruences.last().unwrap()
    }

    pub fn contains(&self, c: &Congruence) -> bool {
        self.congruences.contains(c)
    }

    /// Meet of all congruences other than `Δ`; `None` when there are none.
    pub fn monolith(&self) -> Option<Congruence> {
        self.congruences.iter().filter(|c| !c.is_identity()).cloned().reduce(|a, b| a.meet(&b))
    }

    /// Congruences covering `Δ`.
    pub fn atoms(&self) -> Vec<&Congruence> {
        let nonzero: Vec<&Congruence> = self.congruences.iter().filter(|c| !c.is_identity()).collect();
        nonzero
            .iter()
            .filter(|c| !nonzero.iter().any(|d| d != *c && d.refines(c)))
            .copied()
            .collect()
    }
}

pub fn all_congruences(alg: &FiniteAlgebra) -> Result<CongruenceLattice, CongruenceError> {
    all_congruences_bounded(alg, DEFAULT_BOUND)
}

/// Join-closure of the principal congruences.
pub fn all_congruences_bounded(alg: &FiniteAlgebra, bound: usize) -> Result<CongruenceLattice, CongruenceError> {
    let n = alg.size();
    if n > bound {
        return Err(CongruenceError::TooLarge { size: n, bound });
    }
    let mut principal: Vec<Congruence> = Vec::new();
    let mut seen_principal = HashSet::new();
    for a in alg.elements() {
        for b in alg.elements().filter(|b| b.index() > a.index()) {
            let c = principal_congruence(alg, a, b);
            if seen_principal.insert(c.clone()) {
                principal.push(c);
            }
        }
    }
    let mut seen: HashSet<Congruence> = HashSet::new();
    let delta = Partition::identity(n);
    seen.insert(delta.clone());
    let mut frontier = vec![delta];
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let j = c.join(p);
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut congruences: Vec<Congruence> = seen.into_iter().collect();
    congruences.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
    Ok(CongruenceLattice { congruences })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdirectReport {
    pub irreducible: bool,
    /// Sorted related pairs of the monolith, when irreducible.
    pub monolith: Option<Vec<(Element, Element)>>,
}

/// Subdirectly irreducible iff the nonzero congruences have a nonzero meet.
/// The trivial algebra is not subdirectly irreducible.
pub fn is_subdirectly_irreducible(alg: &FiniteAlgebra) -> Result<SubdirectReport, CongruenceError> {
    let lat = all_congruences(alg)?;
    Ok(subdirect_report(&lat))
}

pub fn subdirect_report(lat: &CongruenceLattice) -> SubdirectReport {
    match lat.monolith() {
        Some(m) if !m.is_identity() => SubdirectReport { irreducible: true, monolith: Some(m.pairs()) },
        _ => SubdirectReport { irreducible: false, monolith: None },
    }
}

/// A pair of complementary permuting congruences, both proper and nonzero.
pub fn factor_pair(lat: &CongruenceLattice) -> Option<(Congruence, Congruence)> {
    let proper: Vec<&Congruence> = lat.iter().filter(|c| !c.is_identity() && !c.is_total()).collect();
    for (i, t) in proper.iter().enumerate() {
        for f in &proper[i + 1..] {
            // θ ∩ φ = Δ makes a ↦ (θ-class, φ-class) injective; θ∘φ = ∇ iff it
            // is also onto, which in turn gives θ∨φ = ∇ and θ∘φ = φ∘θ.
            if t.meet(f).is_identity() && t.num_classes() * f.num_classes() == t.size() {
                return Some(((*t).clone(), (*f).clone()));
            }
        }
    }
    None
}

/// The trivial algebra is not directly indecomposable.
pub fn is_directly_indecomposable(alg: &FiniteAlgebra) -> Result<bool, CongruenceError> {
    if alg.size() < 2 {
        return Ok(false);
    }
    let lat = all_congruences(alg)?;
    Ok(factor_pair(&lat).is_none())
}

/// A partition together with whether it is a congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub partition: Partition,
    pub is_congruence: bool,
}

fn relation_by_key<K: PartialEq>(alg: &FiniteAlgebra, key: impl Fn(Element) -> K) -> RelationReport {
    let keys: Vec<K> = alg.elements().map(key).collect();
    let partition = Partition::from_labels(&keys);
    let is_congruence = partition.is_congruence_of(alg);
    RelationReport { partition, is_congruence }
}

/// `C(p)`: `x ≡ y` iff `x∧p`, `x′∧p`, `x∼∧p`, `□x∧p`, `◊x∧p`, `◊x′∧p`
/// agree with the same terms in `y`.
pub fn relation_c(alg: &FiniteAlgebra, p: Element) -> RelationReport {
    relation_by_key(alg, |x| {
        let k = alg.kleene(x);
        [x, k, alg.brouwer(x), alg.necessity(x), alg.possibility(x), alg.possibility(k)].map(|t| alg.meet(t, p))
    })
}

/// Block of each element under `~`: `{0}`, `{1}`, strictly negative elements
/// other than `0`, strictly positive elements other than `1`, and singletons
/// for everything else (the fixpoint of `′`, and any element incomparable
/// with its complement).
pub fn tilde_partition(alg: &FiniteAlgebra) -> Partition {
    let keys: Vec<(u8, usize)> = alg
        .elements()
        .map(|x| {
            let k = alg.kleene(x);
            if x == alg.zero() {
                (0, 0)
            } else if x == alg.one() {
                (1, 0)
            } else if alg.lt(x, k) {
                (2, 0)
            } else if alg.lt(k, x) {
                (3, 0)
            } else {
                (4, x.index())
            }
        })
        .collect();
    Partition::from_labels(&keys)
}

pub fn relation_tilde(alg: &FiniteAlgebra) -> RelationReport {
    let partition = tilde_partition(alg);
    let is_congruence = partition.is_congruence_of(alg);
    RelationReport { partition, is_congruence }
}

/// `D(p)`: `x ~ y` and `(x∨x′)∧p = (y∨y′)∧p`.
pub fn relation_d(alg: &FiniteAlgebra, p: Element) -> RelationReport {
    let tilde = tilde_partition(alg);
    relation_by_key(alg, |x| (tilde.block_of(x), alg.meet(alg.join(x, alg.kleene(x)), p)))
}

/// `E(p)`: `x ~ y` and `(x∨x′)∨p = (y∨y′)∨p`.
pub fn relation_e(alg: &FiniteAlgebra, p: Element) -> RelationReport {
    let tilde = tilde_partition(alg);
    relation_by_key(alg, |x| (tilde.block_of(x), alg.join(alg.join(x, alg.kleene(x)), p)))
}

/// Outcome of the four clauses about `~`, `D(p)` and `E(p)`. Each list holds
/// the elements `p` at which the clause fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TomtomReport {
    pub tilde_is_congruence: bool,
    pub d_not_congruence: Vec<Element>,
    pub e_not_congruence: Vec<Element>,
    pub neither_identity: Vec<Element>,
}

impl TomtomReport {
    pub fn passed(&self) -> bool {
        self.tilde_is_congruence
            && self.d_not_congruence.is_empty()
            && self.e_not_congruence.is_empty()
            && self.neither_identity.is_empty()
    }
}

/// Requires a subdirectly irreducible antiortholattice satisfying DIST and
/// SDM; a violated precondition is an error, not a vacuous pass.
pub fn tomtom_check(alg: &FiniteAlgebra) -> Result<TomtomReport, PreconditionError> {
    let fail = |what: &str| PreconditionError::Other { algebra: alg.name().to_string(), what: what.to_string() };
    if !axioms::is_antiortholattice(alg) {
        return Err(PreconditionError::NotAntiortholattice { algebra: alg.name().to_string() });
    }
    for law in ["DIST", "SDM"] {
        if terms::holds(alg, &theory::identity(law).unwrap()).is_err() {
            return Err(fail(&format!("fails {law}")));
        }
    }
    match is_subdirectly_irreducible(alg) {
        Ok(r) if r.irreducible => {}
        Ok(_) => return Err(fail("not subdirectly irreducible")),
        Err(e) => return Err(fail(&e.to_string())),
    }
    Ok(tomtom_clauses(alg))
}

/// The four clauses without checking the precondition.
pub fn tomtom_clauses(alg: &FiniteAlgebra) -> TomtomReport {
    let mut report = TomtomReport {
        tilde_is_congruence: relation_tilde(alg).is_congruence,
        d_not_congruence: Vec::new(),
        e_not_congruence: Vec::new(),
        neither_identity: Vec::new(),
    };
    for p in alg.elements() {
        let d = relation_d(alg, p);
        let e = relation_e(alg, p);
        if !d.is_congruence {
            report.d_not_congruence.push(p);
        }
        if !e.is_congruence {
            report.e_not_congruence.push(p);
        }
        if !d.partition.is_identity() && !e.partition.is_identity() {
            report.neither_identity.push(p);
        }
    }
    report
}

/// Failures of the four clauses about `C(p)`; each entry is a witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AmmarollaReport {
    /// `C(p)` is not a congruence.
    pub not_congruence: Vec<Element>,
    /// `C(p) ∩ C(q) ≠ C(p∨q)`.
    pub meet_not_join: Vec<(Element, Element)>,
    /// `C(p) ∩ C(p′) ≠ Δ`.
    pub complement_not_identity: Vec<Element>,
    /// `C(p) = Δ` disagrees with `p′ ≤ p`.
    pub identity_not_positive: Vec<Element>,
}

impl AmmarollaReport {
    pub fn passed(&self) -> bool {
        self.not_congruence.is_empty()
            && self.meet_not_join.is_empty()
            && self.complement_not_identity.is_empty()
            && self.identity_not_positive.is_empty()
    }
}

pub fn ammarolla_check(alg: &FiniteAlgebra) -> AmmarollaReport {
    let c: Vec<RelationReport> = alg.elements().map(|p| relation_c(alg, p)).collect();
    let mut r = AmmarollaReport::default();
    for p in alg.elements() {
        let cp = &c[p.index()];
        if !cp.is_congruence {
            r.not_congruence.push(p);
        }
        if !cp.partition.meet(&c[alg.kleene(p).index()].partition).is_identity() {
            r.complement_not_identity.push(p);
        }
        if cp.partition.is_identity() != alg.leq(alg.kleene(p), p) {
            r.identity_not_positive.push(p);
        }
        for q in alg.elements() {
            if cp.partition.meet(&c[q.index()].partition) != c[alg.join(p, q).index()].partition {
                r.meet_not_join.push((p, q));
            }
        }
    }
    r
}

/// Classes as sorted element sets, handy for assertions.
pub fn class_sets(p: &Partition) -> BTreeSet<BTreeSet<Element>> {
    p.classes().into_iter().map(|c| c.into_iter().collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn el(a: &FiniteAlgebra, l: &str) -> Element {
        a.element(l).unwrap()
    }

    #[test]
    fn principal_examples() {
        let d3 = catalog::get("D3").unwrap();
        assert!(principal_congruence(&d3, el(&d3, "a"), d3.zero()).is_total());
        assert!(principal_congruence(&d3, el(&d3, "a"), el(&d3, "a")).is_identity());
    }

    #[test]
    fn congruence_counts() {
        let count = |n| all_congruences(&catalog::get(n).unwrap()).unwrap().len();
        assert_eq!(count("D3"), 2);
        assert_eq!(count("B4"), 4);
    }

    #[test]
    fn d5_has_a_chain_of_congruences_with_one_atom() {
        let d5 = catalog::get("D5").unwrap();
        let lat = all_congruences(&d5).unwrap();
        assert_eq!(lat.atoms().len(), 1);
        for a in lat.iter() {
            for b in lat.iter() {
                assert!(a.refines(b) || b.refines(a));
            }
        }
        // the monolith collapses exactly a, c, a′
        let r = is_subdirectly_irreducible(&d5).unwrap();
        let m: Vec<(&str, &str)> = r.monolith.unwrap().iter().map(|&(x, y)| (d5.label(x), d5.label(y))).collect();
        assert_eq!(m, [("a", "c"), ("a", "a'"), ("c", "a'")]);
    }

    #[test]
    fn irreducibility_and_indecomposability() {
        let si = |n| is_subdirectly_irreducible(&catalog::get(n).unwrap()).unwrap().irreducible;
        assert!(si("D2") && si("D3") && si("D4") && si("D5"));
        assert!(!si("D6"));
        assert!(!si("B4"));
        let di = |n| is_directly_indecomposable(&catalog::get(n).unwrap()).unwrap();
        assert!(!di("B4"));
        assert!(di("MO2") && di("D4") && di("D6"));
    }

    #[test]
    fn too_large() {
        let b16 = catalog::get("B16").unwrap();
        assert_eq!(all_congruences(&b16).unwrap_err(), CongruenceError::TooLarge { size: 16, bound: 12 });
        // one congruence per ideal
        assert_eq!(all_congruences_bounded(&b16, 16).unwrap().len(), 16);
    }

    #[test]
    fn tomtom_on_small_chains() {
        for name in ["D4", "D5"] {
            assert!(tomtom_check(&catalog::get(name).unwrap()).unwrap().passed(), "{name}");
        }
        assert!(tomtom_check(&catalog::get("D6").unwrap()).is_err());
        assert!(tomtom_check(&catalog::get("MO2").unwrap()).is_err());
    }

    #[test]
    fn tilde_classes_of_d6() {
        let d6 = catalog::get("D6").unwrap();
        let classes: Vec<Vec<&str>> =
            tilde_partition(&d6).classes().iter().map(|c| c.iter().map(|&x| d6.label(x)).collect()).collect();
        assert_eq!(classes, [vec!["0"], vec!["a", "b"], vec!["b'", "a'"], vec!["1"]]);
    }

    #[test]
    fn partition_lattice_operations() {
        let a = Partition::from_labels(&[0, 0, 1, 1]);
        let b = Partition::from_labels(&[0, 1, 1, 2]);
        assert!(a.join(&b).is_total());
        assert!(a.meet(&b).is_identity());
        assert!(a.meet(&b).refines(&a) && a.refines(&a.join(&b)));
        assert_eq!(Partition::from_labels(&["x", "y", "x"]).block_ids(), [0, 1, 0]);
    }
}
