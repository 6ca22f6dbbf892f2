//! Algebra-building procedures: twist structures, ordinal and horizontal
//! sums, products, subalgebras and quotients, plus the cone decomposition and
//! the inverse of the twist construction.

mod blocks;
pub mod recipe;

use std::collections::HashSet;

use crate::algebra::{Element, FiniteAlgebra, RawAlgebra};
use crate::axioms;
use crate::canon;
use crate::congruence::Congruence;
use crate::error::{ConstructionError, PreconditionError};
use crate::lattice::BoundedLattice;

pub use blocks::{
    blocks, commutes, gamma, horizontal_sum_of_blocks_direct, is_horizontal_sum_of_blocks, u_set, ScuccaReport,
};
pub use recipe::{build, parse_recipe, Built, Recipe};

/// Falls back to positional labels when the proposed ones collide.
fn distinct_labels(labels: Vec<String>) -> Vec<String> {
    let unique: HashSet<&String> = labels.iter().collect();
    if unique.len() == labels.len() {
        labels
    } else {
        (0..labels.len()).map(|i| format!("e{i}")).collect()
    }
}

fn rows(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect()
}

/// Negative and positive cones with respect to `′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cones {
    /// `a ≤ a′`
    pub negative: Vec<Element>,
    /// `a′ ≤ a`
    pub positive: Vec<Element>,
    /// `a < a′`
    pub strictly_negative: Vec<Element>,
    /// `a′ < a`
    pub strictly_positive: Vec<Element>,
}

impl Cones {
    pub fn covers_universe(&self, size: usize) -> bool {
        let mut seen = vec![false; size];
        for a in self.negative.iter().chain(&self.positive) {
            seen[a.index()] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn cones(a: &FiniteAlgebra) -> Cones {
    let pick = |f: &dyn Fn(Element) -> bool| a.elements().filter(|&x| f(x)).collect::<Vec<_>>();
    Cones {
        negative: pick(&|x| a.leq(x, a.kleene(x))),
        positive: pick(&|x| a.leq(a.kleene(x), x)),
        strictly_negative: pick(&|x| a.lt(x, a.kleene(x))),
        strictly_positive: pick(&|x| a.lt(a.kleene(x), x)),
    }
}

/// Layout of a twist structure: the `f`-copies come first in reverse index
/// order (they carry the dual order), followed by `L` itself.
struct Twist {
    algebra: FiniteAlgebra,
    /// Index of `f(x)`, or `None` for `x = 0` in `T₁`.
    f: Vec<Option<usize>>,
    offset: usize,
}

fn twist(l: &BoundedLattice, keep_zero: bool) -> Twist {
    let m = l.size();
    let copied: Vec<usize> = (0..m).rev().filter(|&x| keep_zero || x != l.zero()).collect();
    let k = copied.len();
    let n = k + m;
    let mut f = vec![None; m];
    for (i, &x) in copied.iter().enumerate() {
        f[x] = Some(i);
    }
    // element i < k is f(copied[i]); element k + x is x
    let leq = rows(n, |u, v| match (u < k, v < k) {
        (true, true) => l.leq(copied[v], copied[u]),
        (true, false) => true,
        (false, true) => false,
        (false, false) => l.leq(u - k, v - k),
    });
    let mut kleene = vec![0; n];
    for (i, &x) in copied.iter().enumerate() {
        kleene[i] = k + x;
        kleene[k + x] = i;
    }
    if !keep_zero {
        kleene[k + l.zero()] = k + l.zero();
    }
    let bottom = f[l.one()].expect("f(1) exists");
    let top = k + l.one();
    let brouwer = (0..n).map(|u| if u == bottom { top } else { bottom }).collect();
    let mut labels: Vec<String> = copied.iter().map(|&x| format!("f{}", l.labels()[x])).collect();
    labels.extend(l.labels().iter().cloned());
    let raw = RawAlgebra {
        name: format!("T{}({})", if keep_zero { 2 } else { 1 }, l.name()),
        labels: distinct_labels(labels),
        leq,
        kleene,
        brouwer,
        zero: bottom,
        one: top,
    };
    let algebra = FiniteAlgebra::new(raw).expect("twist structures are bounded involution lattices");
    Twist { algebra, f, offset: k }
}

/// `T₁(L)`: a dual copy of `L∖{0}` placed below `L`; `0` is the fixpoint of `′`.
pub fn twist1(l: &BoundedLattice) -> Result<FiniteAlgebra, ConstructionError> {
    if l.size() < 2 {
        return Err(ConstructionError::TooSmall);
    }
    Ok(twist(l, false).algebra)
}

/// `T₂(L)`: a dual copy of all of `L` placed below `L`; `′` has no fixpoint.
/// For finite `L` the lower-bounded case always applies: `P` has bottom `0`
/// and `N` has top `f(0)`.
pub fn twist2(l: &BoundedLattice) -> FiniteAlgebra {
    twist(l, true).algebra
}

/// Result of inverting the twist construction.
#[derive(Clone, Debug)]
pub struct TwistRepresentation {
    /// 1 when `′` has a fixpoint, else 2.
    pub kind: u8,
    /// The positive cone with its induced order.
    pub base: BoundedLattice,
    pub twist: FiniteAlgebra,
    /// `φ(a) = a` on the positive cone, `f(a′)` elsewhere; verified.
    pub isomorphism: Vec<Element>,
}

pub fn twist_represent(a: &FiniteAlgebra) -> Result<TwistRepresentation, ConstructionError> {
    if a.size() < 2 || !axioms::is_antiortholattice(a) {
        return Err(PreconditionError::NotAntiortholattice { algebra: a.name().to_string() }.into());
    }
    let c = cones(a);
    if let Some(x) = a.elements().find(|x| !c.negative.contains(x) && !c.positive.contains(x)) {
        return Err(ConstructionError::NotCovered(a.label(x).to_string()));
    }
    let kind = if a.elements().any(|x| a.kleene(x) == x) { 1 } else { 2 };
    let subset: Vec<usize> = c.positive.iter().map(|x| x.index()).collect();
    let base = a.lattice().induced(format!("P({})", a.name()), &subset)?;
    let t = twist(&base, kind == 2);
    let pos = |x: Element| subset.iter().position(|&p| p == x.index());
    let mut isomorphism = Vec::with_capacity(a.size());
    for x in a.elements() {
        let image = match pos(x) {
            Some(i) => t.offset + i,
            None => {
                let i = pos(a.kleene(x)).expect("a′ is positive when a is not");
                t.f[i].ok_or(ConstructionError::TwistMismatch(kind))?
            }
        };
        isomorphism.push(Element::new(image));
    }
    if !canon::is_isomorphism(a, &t.algebra, &isomorphism) {
        return Err(ConstructionError::TwistMismatch(kind));
    }
    Ok(TwistRepresentation { kind, base, twist: t.algebra, isomorphism })
}

/// `M ⊕ L`: all of `M` below all of `L`, with no elements identified.
pub fn ordinal_sum(m: &BoundedLattice, l: &BoundedLattice) -> BoundedLattice {
    let (p, q) = (m.size(), l.size());
    let n = p + q;
    let mut labels: Vec<String> = m.labels().to_vec();
    labels.extend(l.labels().iter().cloned());
    let leq = rows(n, |u, v| match (u < p, v < p) {
        (true, true) => m.leq(u, v),
        (true, false) => true,
        (false, true) => false,
        (false, false) => l.leq(u - p, v - p),
    });
    BoundedLattice::new(format!("{}⊕{}", m.name(), l.name()), distinct_labels(labels), leq)
        .expect("ordinal sums of lattices are lattices")
}

/// `L₁ ⊞ … ⊞ Lₖ`: bounds shared, elements of different summands are
/// incomparable with meet `0` and join `1`. Element order: `0`, the inner
/// elements of each summand in turn, `1`.
pub fn horizontal_sum(summands: &[FiniteAlgebra]) -> Result<FiniteAlgebra, ConstructionError> {
    if summands.is_empty() {
        return Err(ConstructionError::TooSmall);
    }
    for s in summands {
        if s.size() < 2 {
            return Err(ConstructionError::TrivialSummand(s.name().to_string()));
        }
        if !axioms::is_pbz_star(s).holds() {
            return Err(ConstructionError::SummandNotPbz(s.name().to_string()));
        }
    }
    let non_om = summands.iter().filter(|s| !axioms::is_orthomodular(s).holds()).count();
    if non_om > 1 {
        return Err(ConstructionError::TooManyNonOrthomodular(non_om));
    }
    // (summand, element) for each new index
    let mut origin: Vec<Option<(usize, Element)>> = vec![None];
    let mut index: Vec<Vec<usize>> = Vec::new();
    for (si, s) in summands.iter().enumerate() {
        let mut map = vec![0; s.size()];
        for x in s.elements() {
            if !s.is_bound(x) {
                map[x.index()] = origin.len();
                origin.push(Some((si, x)));
            }
        }
        index.push(map);
    }
    let n = origin.len() + 1;
    let top = n - 1;
    origin.push(None);
    for (si, s) in summands.iter().enumerate() {
        index[si][s.zero().index()] = 0;
        index[si][s.one().index()] = top;
    }
    let leq = rows(n, |u, v| {
        u == 0 || v == top || matches!((origin[u], origin[v]), (Some((i, x)), Some((j, y))) if i == j && summands[i].leq(x, y))
    });
    let lift = |f: &dyn Fn(&FiniteAlgebra, Element) -> Element| -> Vec<usize> {
        (0..n)
            .map(|u| match origin[u] {
                Some((i, x)) => index[i][f(&summands[i], x).index()],
                None => index[0][f(&summands[0], if u == 0 { summands[0].zero() } else { summands[0].one() }).index()],
            })
            .collect()
    };
    let kleene = lift(&|s, x| s.kleene(x));
    let brouwer = lift(&|s, x| s.brouwer(x));
    let first = &summands[0];
    let mut labels = vec![first.label(first.zero()).to_string()];
    labels.extend(origin[1..top].iter().map(|o| {
        let (i, x) = o.unwrap();
        summands[i].label(x).to_string()
    }));
    labels.push(first.label(first.one()).to_string());
    let name = summands.iter().map(|s| s.name()).collect::<Vec<_>>().join("⊞");
    let raw = RawAlgebra { name, labels: distinct_labels(labels), leq, kleene, brouwer, zero: 0, one: top };
    Ok(FiniteAlgebra::new(raw)?)
}

/// Direct product; element `(x, y)` has index `x·|B| + y`.
pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> FiniteAlgebra {
    let m = b.size();
    let n = a.size() * m;
    let split = |u: usize| (Element::new(u / m), Element::new(u % m));
    let join = |x: Element, y: Element| x.index() * m + y.index();
    let leq = rows(n, |u, v| {
        let ((x1, y1), (x2, y2)) = (split(u), split(v));
        a.leq(x1, x2) && b.leq(y1, y2)
    });
    let kleene = (0..n).map(|u| {
        let (x, y) = split(u);
        join(a.kleene(x), b.kleene(y))
    });
    let brouwer = (0..n).map(|u| {
        let (x, y) = split(u);
        join(a.brouwer(x), b.brouwer(y))
    });
    let labels = (0..n)
        .map(|u| {
            let (x, y) = split(u);
            format!("({},{})", a.label(x), b.label(y))
        })
        .collect();
    FiniteAlgebra::new(RawAlgebra {
        name: format!("{}×{}", a.name(), b.name()),
        labels,
        leq,
        kleene: kleene.collect(),
        brouwer: brouwer.collect(),
        zero: join(a.zero(), b.zero()),
        one: join(a.one(), b.one()),
    })
    .expect("products of valid algebras are valid")
}

/// Closure of `seeds ∪ {0, 1}` under all operations, sorted by index.
pub fn subuniverse_generated(a: &FiniteAlgebra, seeds: &[Element]) -> Vec<Element> {
    let mut inside = vec![false; a.size()];
    let mut members: Vec<Element> = Vec::new();
    let add = |x: Element, inside: &mut Vec<bool>, members: &mut Vec<Element>| {
        if !inside[x.index()] {
            inside[x.index()] = true;
            members.push(x);
        }
    };
    for &x in seeds.iter().chain(&[a.zero(), a.one()]) {
        add(x, &mut inside, &mut members);
    }
    let mut done = 0;
    while done < members.len() {
        let x = members[done];
        done += 1;
        add(a.kleene(x), &mut inside, &mut members);
        add(a.brouwer(x), &mut inside, &mut members);
        for i in 0..done {
            let y = members[i];
            add(a.meet(x, y), &mut inside, &mut members);
            add(a.join(x, y), &mut inside, &mut members);
        }
    }
    members.sort();
    members
}

/// The subalgebra on `subset`, which must contain the bounds and be closed.
/// Elements keep their relative order and labels.
pub fn subalgebra(a: &FiniteAlgebra, subset: &[Element], name: &str) -> Result<FiniteAlgebra, ConstructionError> {
    let mut sorted = subset.to_vec();
    sorted.sort();
    sorted.dedup();
    let pos = |x: Element| sorted.binary_search(&x).ok();
    let not_closed = |x: Element| ConstructionError::NotASubuniverse(a.label(x).to_string());
    for &b in &[a.zero(), a.one()] {
        pos(b).ok_or_else(|| not_closed(b))?;
    }
    for &x in &sorted {
        for y in [a.kleene(x), a.brouwer(x)] {
            pos(y).ok_or_else(|| not_closed(y))?;
        }
        for &y in &sorted {
            for z in [a.meet(x, y), a.join(x, y)] {
                pos(z).ok_or_else(|| not_closed(z))?;
            }
        }
    }
    let m = sorted.len();
    let raw = RawAlgebra {
        name: name.to_string(),
        labels: sorted.iter().map(|&x| a.label(x).to_string()).collect(),
        leq: rows(m, |i, j| a.leq(sorted[i], sorted[j])),
        kleene: sorted.iter().map(|&x| pos(a.kleene(x)).unwrap()).collect(),
        brouwer: sorted.iter().map(|&x| pos(a.brouwer(x)).unwrap()).collect(),
        zero: pos(a.zero()).unwrap(),
        one: pos(a.one()).unwrap(),
    };
    Ok(FiniteAlgebra::new(raw)?)
}

pub fn subalgebra_generated(a: &FiniteAlgebra, seeds: &[Element]) -> FiniteAlgebra {
    let labels: Vec<&str> = seeds.iter().map(|&x| a.label(x)).collect();
    let name = format!("Sg({}; {})", a.name(), labels.join(","));
    subalgebra(a, &subuniverse_generated(a, seeds), &name).expect("generated subuniverses are closed")
}

/// `A/θ`. Classes are labelled `[r]` after their least element `r`.
pub fn quotient(a: &FiniteAlgebra, theta: &Congruence) -> Result<FiniteAlgebra, ConstructionError> {
    if !theta.is_congruence_of(a) {
        return Err(ConstructionError::NotACongruence(a.name().to_string()));
    }
    let reps = theta.representatives();
    let k = reps.len();
    let class = |x: Element| theta.block_of(x);
    let raw = RawAlgebra {
        name: format!("{}/θ", a.name()),
        labels: reps.iter().map(|&r| format!("[{}]", a.label(r))).collect(),
        leq: rows(k, |i, j| class(a.join(reps[i], reps[j])) == j),
        kleene: reps.iter().map(|&r| class(a.kleene(r))).collect(),
        brouwer: reps.iter().map(|&r| class(a.brouwer(r))).collect(),
        zero: class(a.zero()),
        one: class(a.one()),
    };
    Ok(FiniteAlgebra::new(raw)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::congruence;

    fn iso(a: &FiniteAlgebra, name: &str) -> bool {
        canon::is_isomorphic(a, &catalog::get(name).unwrap()).is_some()
    }

    #[test]
    fn twists_of_chains_are_kleene_chains() {
        assert!(iso(&twist1(&BoundedLattice::chain(2)).unwrap(), "D3"));
        assert!(iso(&twist1(&BoundedLattice::chain(3)).unwrap(), "D5"));
        assert!(iso(&twist2(&BoundedLattice::chain(2)), "D4"));
        assert!(iso(&twist2(&BoundedLattice::chain(1)), "D2"));
        assert_eq!(twist1(&BoundedLattice::chain(1)).unwrap_err(), ConstructionError::TooSmall);
    }

    #[test]
    fn twists_of_the_square_match_the_catalog() {
        let sq = BoundedLattice::boolean(2);
        let t1 = twist1(&sq).unwrap();
        let t2 = twist2(&sq);
        assert!(iso(&t1, "T1(2x2)"));
        assert!(iso(&t2, "T2(2x2)"));
        assert_eq!(t1.labels(), ["fb11", "fb10", "fb01", "b00", "b01", "b10", "b11"]);
        let c = cones(&t2);
        assert_eq!(c.strictly_negative.len() + c.strictly_positive.len(), 8);
    }

    #[test]
    fn cones_of_d5() {
        let d5 = catalog::get("D5").unwrap();
        let c = cones(&d5);
        let labels = |v: &[Element]| v.iter().map(|&x| d5.label(x).to_string()).collect::<Vec<_>>();
        assert_eq!(labels(&c.negative), ["0", "a", "c"]);
        assert_eq!(labels(&c.positive), ["c", "a'", "1"]);
    }

    #[test]
    fn twist_represent_on_chains() {
        let d4 = twist_represent(&catalog::get("D4").unwrap()).unwrap();
        assert_eq!(d4.kind, 2);
        assert_eq!(d4.base.size(), 2);
        let d5 = twist_represent(&catalog::get("D5").unwrap()).unwrap();
        assert_eq!(d5.kind, 1);
        assert!(d5.base.is_chain() && d5.base.size() == 3);
        assert!(twist_represent(&catalog::get("MO2").unwrap()).is_err());
    }

    #[test]
    fn ordinal_sums() {
        let c = ordinal_sum(&BoundedLattice::chain(2), &BoundedLattice::chain(2));
        assert!(c.is_chain() && c.size() == 4);
        let m = ordinal_sum(&BoundedLattice::diamond(), &BoundedLattice::chain(2));
        assert_eq!(m.size(), 7);
        assert!(!m.is_distributive());
    }

    #[test]
    fn horizontal_sums() {
        let b4 = catalog::get("B4").unwrap();
        let d3 = catalog::get("D3").unwrap();
        let s = horizontal_sum(&[b4.clone(), d3.clone()]).unwrap();
        assert!(iso(&s, "B4⊞D3"));
        assert!(axioms::is_pbz_star(&s).holds());
        assert!(canon::is_isomorphic(&horizontal_sum(&[catalog::get("D2").unwrap(), d3.clone()]).unwrap(), &d3).is_some());
        assert_eq!(
            horizontal_sum(&[d3.clone(), d3.clone()]).unwrap_err(),
            ConstructionError::TooManyNonOrthomodular(2)
        );
    }

    #[test]
    fn product_of_two_element_chains_is_b4() {
        let d2 = catalog::get("D2").unwrap();
        assert!(iso(&product(&d2, &d2), "B4"));
    }

    #[test]
    fn subalgebras() {
        let d5 = catalog::get("D5").unwrap();
        let a = d5.element("a").unwrap();
        let sub = subuniverse_generated(&d5, &[a]);
        let labels: Vec<&str> = sub.iter().map(|&x| d5.label(x)).collect();
        assert_eq!(labels, ["0", "a", "a'", "1"]);
        assert!(iso(&subalgebra_generated(&d5, &[a]), "D4"));
        assert!(subalgebra(&d5, &[d5.zero(), a, d5.one()], "x").is_err());
    }

    #[test]
    fn quotient_by_the_monolith_of_d5() {
        let d5 = catalog::get("D5").unwrap();
        let lat = congruence::all_congruences(&d5).unwrap();
        let q = quotient(&d5, &lat.monolith().unwrap()).unwrap();
        assert!(iso(&q, "D3"));
        assert!(quotient(&d5, &congruence::Partition::from_labels(&[0, 0, 1, 1, 1])).is_err());
    }
}
