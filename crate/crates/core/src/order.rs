//! Order-table helpers shared by [`FiniteAlgebra`](crate::FiniteAlgebra) and
//! [`BoundedLattice`](crate::BoundedLattice).
//!
//! Tables are flat `n * n` vectors indexed `a * n + b`.

use crate::algebra::{Element, Rule, Violation};

pub(crate) fn flatten(leq: &[Vec<bool>]) -> Vec<bool> {
    leq.iter().flat_map(|row| row.iter().copied()).collect()
}

/// Appends one violation per failed order rule, each with its lexicographically
/// least witness.
pub(crate) fn order_violations(n: usize, leq: &[bool], out: &mut Vec<Violation>) {
    let le = |a: usize, b: usize| leq[a * n + b];

    if let Some(a) = (0..n).find(|&a| !le(a, a)) {
        out.push(Violation::new(Rule::Reflexive, &[a]));
    }
    'anti: for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                out.push(Violation::new(Rule::Antisymmetric, &[a, b]));
                break 'anti;
            }
        }
    }
    'trans: for a in 0..n {
        for b in 0..n {
            if !le(a, b) {
                continue;
            }
            for c in 0..n {
                if le(b, c) && !le(a, c) {
                    out.push(Violation::new(Rule::Transitive, &[a, b, c]));
                    break 'trans;
                }
            }
        }
    }
}

/// Greatest lower bound of `a` and `b` by a scan of all common lower bounds.
pub(crate) fn glb(n: usize, leq: &[bool], a: usize, b: usize) -> Option<usize> {
    let le = |x: usize, y: usize| leq[x * n + y];
    (0..n).find(|&c| le(c, a) && le(c, b) && (0..n).all(|d| !(le(d, a) && le(d, b)) || le(d, c)))
}

pub(crate) fn lub(n: usize, leq: &[bool], a: usize, b: usize) -> Option<usize> {
    let le = |x: usize, y: usize| leq[x * n + y];
    (0..n).find(|&c| le(a, c) && le(b, c) && (0..n).all(|d| !(le(a, d) && le(b, d)) || le(c, d)))
}

/// Meet and join tables; records a violation for the first pair lacking a
/// glb (resp. lub). Missing entries are filled with `usize::MAX`.
pub(crate) fn lattice_tables(
    n: usize,
    leq: &[bool],
    out: &mut Vec<Violation>,
) -> (Vec<usize>, Vec<usize>) {
    let mut meet = vec![usize::MAX; n * n];
    let mut join = vec![usize::MAX; n * n];
    let mut meet_bad = None;
    let mut join_bad = None;
    for a in 0..n {
        for b in 0..n {
            match glb(n, leq, a, b) {
                Some(c) => meet[a * n + b] = c,
                None => {
                    meet_bad.get_or_insert((a, b));
                }
            }
            match lub(n, leq, a, b) {
                Some(c) => join[a * n + b] = c,
                None => {
                    join_bad.get_or_insert((a, b));
                }
            }
        }
    }
    if let Some((a, b)) = meet_bad {
        out.push(Violation::new(Rule::MeetExists, &[a, b]));
    }
    if let Some((a, b)) = join_bad {
        out.push(Violation::new(Rule::JoinExists, &[a, b]));
    }
    (meet, join)
}

pub(crate) fn bound_violations(n: usize, leq: &[bool], zero: usize, one: usize, out: &mut Vec<Violation>) {
    if let Some(a) = (0..n).find(|&a| !leq[zero * n + a] || !leq[a * n + one]) {
        out.push(Violation::new(Rule::Bounds, &[a]));
    }
}

/// Hasse covers `(a, b)` with `a < b` and nothing strictly between, sorted.
pub(crate) fn covers(n: usize, leq: &[bool]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && leq[a * n + b];
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Reflexive-transitive closure of a relation given as pairs.
pub(crate) fn closure(n: usize, pairs: &[(usize, usize)]) -> Vec<bool> {
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
    }
    for &(a, b) in pairs {
        leq[a * n + b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    leq
}

pub(crate) fn to_elements(xs: &[usize]) -> Vec<Element> {
    xs.iter().map(|&x| Element::new(x)).collect()
}
