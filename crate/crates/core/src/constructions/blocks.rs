//! Blocks of a PBZ*-lattice and the criterion for being the horizontal sum
//! of them.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::subuniverse_generated;
use crate::algebra::{Element, FiniteAlgebra};
use crate::axioms;
use crate::error::PreconditionError;

/// `γ(a,b) = (a∨b) ∧ (a∨b∼) ∧ (a∼∨b) ∧ (a∼∨b∼)`.
pub fn gamma(alg: &FiniteAlgebra, a: Element, b: Element) -> Element {
    let (an, bn) = (alg.brouwer(a), alg.brouwer(b));
    let m1 = alg.meet(alg.join(a, b), alg.join(a, bn));
    let m2 = alg.meet(alg.join(an, b), alg.join(an, bn));
    alg.meet(m1, m2)
}

/// `aCb` iff `γ(a,b) = 0`.
pub fn commutes(alg: &FiniteAlgebra, a: Element, b: Element) -> bool {
    gamma(alg, a, b) == alg.zero()
}

/// `U(L) = {0} ∪ {a : a∼ = 0}`.
pub fn u_set(alg: &FiniteAlgebra) -> Vec<Element> {
    alg.elements().filter(|&a| a == alg.zero() || alg.brouwer(a) == alg.zero()).collect()
}

fn members(mask: u64) -> Vec<Element> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(Element::new).collect()
}

fn mask_of(xs: &[Element]) -> u64 {
    xs.iter().fold(0, |m, x| m | 1 << x.index())
}

/// A subuniverse that is a Boolean algebra (distributive, every element
/// Kleene-sharp) or a chain whose only Kleene-sharp elements are the bounds.
fn is_block_shaped(alg: &FiniteAlgebra, xs: &[Element]) -> bool {
    let sharp = |x: Element| alg.meet(x, alg.kleene(x)) == alg.zero();
    let chain = xs.iter().all(|&x| xs.iter().all(|&y| alg.leq(x, y) || alg.leq(y, x)));
    if chain && xs.iter().all(|&x| alg.is_bound(x) || !sharp(x)) {
        return true;
    }
    xs.iter().all(|&x| sharp(x))
        && xs.iter().all(|&x| {
            xs.iter().all(|&y| {
                xs.iter().all(|&z| alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z)))
            })
        })
}

/// Maximal subalgebras that are Boolean algebras or antiortholattice chains,
/// sorted by their element lists.
///
/// Block-shaped subuniverses are closed under taking subalgebras, so every
/// one of them is reached from `{0,1}` by adding one element at a time and
/// closing; a breadth-first search over such extensions finds them all.
pub fn blocks(alg: &FiniteAlgebra) -> Vec<Vec<Element>> {
    assert!(alg.size() <= 64, "blocks() supports at most 64 elements");
    let start = mask_of(&subuniverse_generated(alg, &[]));
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut maximal = BTreeSet::new();
    if !is_block_shaped(alg, &members(start)) {
        return Vec::new();
    }
    while let Some(mask) = queue.pop_front() {
        let current = members(mask);
        let mut extended = false;
        for x in alg.elements().filter(|x| mask >> x.index() & 1 == 0) {
            let mut seeds = current.clone();
            seeds.push(x);
            let next = subuniverse_generated(alg, &seeds);
            if !is_block_shaped(alg, &next) {
                continue;
            }
            extended = true;
            let m = mask_of(&next);
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
        if !extended {
            maximal.insert(current);
        }
    }
    maximal.into_iter().collect()
}

/// Whether `alg` literally is the horizontal sum of the given blocks: they
/// cover the universe, pairwise share only the bounds, elements of distinct
/// blocks meet to `0` and join to `1`, and at most one block is not Boolean.
pub fn horizontal_sum_of_blocks_direct(alg: &FiniteAlgebra, blocks: &[Vec<Element>]) -> bool {
    let mut covered = vec![false; alg.size()];
    for b in blocks {
        for x in b {
            covered[x.index()] = true;
        }
    }
    if covered.contains(&false) {
        return false;
    }
    let inner = |b: &Vec<Element>| b.iter().copied().filter(|&x| !alg.is_bound(x)).collect::<Vec<_>>();
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[i + 1..] {
            for x in inner(bi) {
                for y in inner(bj) {
                    if x == y || alg.meet(x, y) != alg.zero() || alg.join(x, y) != alg.one() {
                        return false;
                    }
                }
            }
        }
    }
    let non_boolean = blocks
        .iter()
        .filter(|b| b.iter().any(|&x| alg.meet(x, alg.kleene(x)) != alg.zero()))
        .count();
    non_boolean <= 1
}

/// The four conditions on commutation and sharpness, each with its first
/// failing witness, against the direct comparison with the block sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScuccaReport {
    /// `a C̄ b` but `a∨b ≠ 1`.
    pub a: Option<(Element, Element)>,
    /// `a, b ∉ {0,1}`, `a∼ = 0`, `◊b = b`, `a∨b ≠ 1`.
    pub b: Option<(Element, Element)>,
    /// `a∼ = b∼ = 0` with `a`, `b` incomparable.
    pub c: Option<(Element, Element)>,
    /// `a ∉ {0,1}` with `a∼ ≠ 0` and `◊a ≠ a`.
    pub d: Option<Element>,
    pub blocks: Vec<Vec<Element>>,
    pub sum_of_blocks: bool,
}

impl ScuccaReport {
    pub fn conditions_hold(&self) -> bool {
        self.a.is_none() && self.b.is_none() && self.c.is_none() && self.d.is_none()
    }

    /// The two independent answers coincide.
    pub fn agree(&self) -> bool {
        self.conditions_hold() == self.sum_of_blocks
    }

    /// `(condition, witness labels)` for each failing condition.
    pub fn failures(&self, alg: &FiniteAlgebra) -> Vec<(&'static str, Vec<String>)> {
        let l = |x: Element| alg.label(x).to_string();
        let mut out = Vec::new();
        if let Some((x, y)) = self.a {
            out.push(("(a)", vec![l(x), l(y)]));
        }
        if let Some((x, y)) = self.b {
            out.push(("(b)", vec![l(x), l(y)]));
        }
        if let Some((x, y)) = self.c {
            out.push(("(c)", vec![l(x), l(y)]));
        }
        if let Some(x) = self.d {
            out.push(("(d)", vec![l(x)]));
        }
        out
    }
}

fn first_pair(alg: &FiniteAlgebra, bad: impl Fn(Element, Element) -> bool) -> Option<(Element, Element)> {
    alg.elements().flat_map(|x| alg.elements().map(move |y| (x, y))).find(|&(x, y)| bad(x, y))
}

pub fn is_horizontal_sum_of_blocks(alg: &FiniteAlgebra) -> Result<ScuccaReport, PreconditionError> {
    if !axioms::is_pbz_star(alg).holds() {
        return Err(PreconditionError::NotPbz { algebra: alg.name().to_string() });
    }
    let zero = alg.zero();
    let one = alg.one();
    let a = first_pair(alg, |x, y| !commutes(alg, x, y) && alg.join(x, y) != one);
    let b = first_pair(alg, |x, y| {
        !alg.is_bound(x)
            && !alg.is_bound(y)
            && alg.brouwer(x) == zero
            && alg.possibility(y) == y
            && alg.join(x, y) != one
    });
    let c = first_pair(alg, |x, y| {
        alg.brouwer(x) == zero && alg.brouwer(y) == zero && !alg.leq(x, y) && !alg.leq(y, x)
    });
    let d = alg.elements().find(|&x| !alg.is_bound(x) && alg.brouwer(x) != zero && alg.possibility(x) != x);
    let blocks = blocks(alg);
    let sum_of_blocks = horizontal_sum_of_blocks_direct(alg, &blocks);
    Ok(ScuccaReport { a, b, c, d, blocks, sum_of_blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn block_labels(name: &str) -> Vec<Vec<String>> {
        let a = catalog::get(name).unwrap();
        blocks(&a).iter().map(|b| b.iter().map(|&x| a.label(x).to_string()).collect()).collect()
    }

    #[test]
    fn blocks_of_catalog_algebras() {
        assert_eq!(block_labels("B4⊞D3"), [vec!["0", "p", "p'", "1"], vec!["0", "a", "1"]]);
        assert_eq!(block_labels("B8").len(), 1);
        assert_eq!(block_labels("B8")[0].len(), 8);
        assert_eq!(block_labels("D5"), [vec!["0", "a", "c", "a'", "1"]]);
        assert_eq!(block_labels("MO2").len(), 2);
    }

    #[test]
    fn scucca_on_sums() {
        for name in ["B4⊞D4", "D5", "MO2⊞D3", "B8"] {
            let a = catalog::get(name).unwrap();
            let r = is_horizontal_sum_of_blocks(&a).unwrap();
            assert!(r.conditions_hold() && r.sum_of_blocks, "{name}: {r:?}");
        }
        assert!(is_horizontal_sum_of_blocks(&catalog::get("O6").unwrap()).is_err());
    }

    #[test]
    fn gamma_facts() {
        let a = catalog::get("B4⊞D3").unwrap();
        for x in a.elements() {
            assert!(commutes(&a, a.zero(), x));
            if a.brouwer(x) == a.zero() {
                assert!(a.elements().all(|y| commutes(&a, x, y)));
            }
        }
        let u: Vec<&str> = u_set(&a).iter().map(|&x| a.label(x)).collect();
        assert_eq!(u, ["0", "a", "1"]);
    }
}
