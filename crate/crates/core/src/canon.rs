//! Canonical labelling of finite ordered structures with unary maps.
//!
//! Elements are first coloured by isomorphism invariants (down-set and
//! up-set sizes, cover counts, images under the unary maps) and the colouring
//! is refined to a fixpoint. A branch-and-bound search then picks, among all
//! colour-respecting orderings, the one with the lexicographically least
//! encoding. The colour sequence followed by that encoding is the canonical
//! form, so two structures get equal forms iff they are isomorphic.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::algebra::{Element, FiniteAlgebra};
use crate::lattice::BoundedLattice;

/// Borrowed view of an order relation plus unary maps on `0..n`.
pub(crate) struct Structure<'a> {
    pub n: usize,
    pub leq: &'a [bool],
    pub maps: Vec<&'a [usize]>,
}

/// Result of canonical labelling: `position[e]` is the canonical position of
/// element `e`.
#[derive(Clone, Debug)]
pub(crate) struct Labelling {
    pub code: Vec<u8>,
    pub position: Vec<usize>,
}

impl<'a> Structure<'a> {
    fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    fn initial_colours(&self) -> Vec<u64> {
        let n = self.n;
        let down: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| self.le(b, a)).count()).collect();
        let up: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| self.le(a, b)).count()).collect();
        (0..n)
            .map(|a| {
                let mut key = vec![down[a] as u64, up[a] as u64];
                for m in &self.maps {
                    key.push((m[a] == a) as u64);
                    key.push(down[m[a]] as u64);
                }
                hash_key(&key)
            })
            .collect()
    }

    /// Refines colours by the multisets of colours strictly below / above
    /// and the colours of map images until the partition stops splitting.
    fn refine(&self, mut colour: Vec<u64>) -> Vec<usize> {
        let n = self.n;
        let mut classes = count_classes(&colour);
        loop {
            let next: Vec<u64> = (0..n)
                .map(|a| {
                    let mut below: Vec<u64> = (0..n).filter(|&b| b != a && self.le(b, a)).map(|b| colour[b]).collect();
                    let mut above: Vec<u64> = (0..n).filter(|&b| b != a && self.le(a, b)).map(|b| colour[b]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    let mut key = vec![colour[a], below.len() as u64];
                    key.extend(below);
                    key.push(u64::MAX);
                    key.extend(above);
                    for m in &self.maps {
                        key.push(colour[m[a]]);
                    }
                    hash_key(&key)
                })
                .collect();
            let c = count_classes(&next);
            colour = next;
            if c == classes {
                break;
            }
            classes = c;
        }
        // Replace hashes by dense ranks so the colour sequence is comparable
        // across structures.
        let mut distinct: Vec<u64> = colour.clone();
        distinct.sort_unstable();
        distinct.dedup();
        colour.iter().map(|c| distinct.binary_search(c).unwrap()).collect()
    }

    /// Encoding chunk contributed by placing `elem` at position `k`, given the
    /// elements at positions `0..k`.
    fn chunk(&self, placed: &[usize], elem: usize, out: &mut Vec<u8>) {
        out.clear();
        for &p in placed.iter().chain(std::iter::once(&elem)) {
            let mut byte = (self.le(elem, p) as u8) | ((self.le(p, elem) as u8) << 1);
            for (i, m) in self.maps.iter().enumerate() {
                byte |= ((m[elem] == p) as u8) << (2 + 2 * i);
                byte |= ((m[p] == elem) as u8) << (3 + 2 * i);
            }
            out.push(byte);
        }
    }

    pub fn canonical(&self) -> Labelling {
        let n = self.n;
        let colour = self.refine(self.initial_colours());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| colour[a]);
        let cell_of_position: Vec<usize> = order.iter().map(|&a| colour[a]).collect();

        let mut search = Search {
            s: self,
            colour: &colour,
            cell_of_position: &cell_of_position,
            placed: Vec::with_capacity(n),
            used: vec![false; n],
            current: Vec::new(),
            best: None,
            best_perm: Vec::new(),
            scratch: Vec::new(),
        };
        search.run(false);

        let mut code: Vec<u8> = Vec::with_capacity(n * (n + 3) / 2 + n + 1);
        code.push(n as u8);
        code.extend(cell_of_position.iter().map(|&c| c as u8));
        code.extend(search.best.unwrap_or_default());
        let mut position = vec![0; n];
        for (pos, &e) in search.best_perm.iter().enumerate() {
            position[e] = pos;
        }
        Labelling { code, position }
    }
}

struct Search<'s, 'a> {
    s: &'s Structure<'a>,
    colour: &'s [usize],
    cell_of_position: &'s [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    scratch: Vec<u8>,
}

impl Search<'_, '_> {
    /// `ahead` is true once the current prefix is already strictly smaller
    /// than the best prefix, so no further comparison is needed.
    fn run(&mut self, ahead: bool) {
        let k = self.placed.len();
        if k == self.s.n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
                self.best_perm = self.placed.clone();
            }
            return;
        }
        let cell = self.cell_of_position[k];
        for e in 0..self.s.n {
            if self.used[e] || self.colour[e] != cell {
                continue;
            }
            let mut chunk = std::mem::take(&mut self.scratch);
            self.s.chunk(&self.placed, e, &mut chunk);
            let start = self.current.len();
            let next_ahead = match self.best.as_ref().filter(|_| !ahead) {
                None => ahead,
                Some(best) => match chunk.as_slice().cmp(&best[start..start + chunk.len()]) {
                    Ordering::Greater => {
                        self.scratch = chunk;
                        continue;
                    }
                    Ordering::Less => true,
                    Ordering::Equal => false,
                }
            };
            self.current.extend_from_slice(&chunk);
            self.scratch = chunk;
            self.placed.push(e);
            self.used[e] = true;
            self.run(next_ahead);
            self.used[e] = false;
            self.placed.pop();
            self.current.truncate(start);
        }
    }
}

fn hash_key(key: &[u64]) -> u64 {
    // FNV-1a over the words; collisions only cost pruning power, since the
    // final comparison is on the full encoding.
    let mut h: u64 = 0xcbf29ce484222325;
    for &w in key {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

fn count_classes(c: &[u64]) -> usize {
    let mut m: HashMap<u64, ()> = HashMap::new();
    for &x in c {
        m.insert(x, ());
    }
    m.len()
}

fn algebra_structure(a: &FiniteAlgebra) -> Structure<'_> {
    Structure { n: a.size(), leq: a.leq_flat(), maps: vec![a.kleene_map(), a.brouwer_map()] }
}

/// Canonical byte sequence of an algebra: equal iff isomorphic.
pub fn canonical_form(a: &FiniteAlgebra) -> Vec<u8> {
    algebra_structure(a).canonical().code
}

/// Canonical byte sequence of a bounded lattice.
pub fn lattice_canonical_form(l: &BoundedLattice) -> Vec<u8> {
    Structure { n: l.size(), leq: l.leq_flat(), maps: vec![] }.canonical().code
}

/// Canonical labelling of an algebra: position of each element.
pub fn canonical_positions(a: &FiniteAlgebra) -> (Vec<u8>, Vec<usize>) {
    let l = algebra_structure(a).canonical();
    (l.code, l.position)
}

/// An isomorphism `A → B` as `map[a] = b`, preserving `≤`, `′`, `∼` and bounds.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Element>> {
    if a.size() != b.size() {
        return None;
    }
    let la = algebra_structure(a).canonical();
    let lb = algebra_structure(b).canonical();
    if la.code != lb.code {
        return None;
    }
    let mut at_position = vec![0; b.size()];
    for (e, &p) in lb.position.iter().enumerate() {
        at_position[p] = e;
    }
    let map: Vec<Element> = la.position.iter().map(|&p| Element::new(at_position[p])).collect();
    debug_assert!(is_isomorphism(a, b, &map));
    Some(map)
}

/// Checks that `map` is a bijection preserving order, both unary maps and bounds.
pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Element]) -> bool {
    if a.size() != b.size() || map.len() != a.size() {
        return false;
    }
    let mut seen = vec![false; b.size()];
    for m in map {
        if m.index() >= b.size() || std::mem::replace(&mut seen[m.index()], true) {
            return false;
        }
    }
    let f = |x: Element| map[x.index()];
    f(a.zero()) == b.zero()
        && f(a.one()) == b.one()
        && a.elements().all(|x| {
            f(a.kleene(x)) == b.kleene(f(x))
                && f(a.brouwer(x)) == b.brouwer(f(x))
                && a.elements().all(|y| a.leq(x, y) == b.leq(f(x), f(y)))
        })
}

/// All automorphisms of a bounded lattice, as permutations.
pub fn lattice_automorphisms(l: &BoundedLattice) -> Vec<Vec<usize>> {
    let n = l.size();
    let down: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| l.leq(b, a)).count()).collect();
    let up: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| l.leq(a, b)).count()).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        l: &BoundedLattice,
        k: usize,
        down: &[usize],
        up: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = l.size();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for t in 0..n {
            if used[t] || down[t] != down[k] || up[t] != up[k] {
                continue;
            }
            if (0..k).all(|j| l.leq(j, k) == l.leq(perm[j], t) && l.leq(k, j) == l.leq(t, perm[j])) {
                perm[k] = t;
                used[t] = true;
                go(l, k + 1, down, up, perm, used, out);
                used[t] = false;
            }
        }
        perm[k] = usize::MAX;
    }
    go(l, 0, &down, &up, &mut perm, &mut used, &mut out);
    out
}
