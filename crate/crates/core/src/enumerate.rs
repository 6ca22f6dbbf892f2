//! Exhaustive generation of finite lattices and BZ-lattices up to
//! isomorphism.
//!
//! Lattices of size `n+1` are obtained from lattices of size `n` by adding a
//! new coatom: removing any coatom from a finite lattice leaves a lattice, so
//! every lattice arises this way. Candidates are deduplicated by canonical
//! form. Each lattice is then decorated with every pseudo-Kleene involution
//! `′` and every Brouwer complement `∼` compatible with it, and decorations
//! are deduplicated under the lattice's automorphism group.
//!
//! Results are cached per size and mode for the lifetime of the process.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::axioms;
use crate::canon::{lattice_automorphisms, lattice_canonical_form};
use crate::error::EnumerationError;
use crate::lattice::BoundedLattice;
use crate::terms::{self, theory, Statement};

/// Largest lattice size [`enumerate_lattices`] accepts.
pub const LATTICE_CAP: usize = 10;

/// Size caps per enumeration mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub general: usize,
    pub antiortholattice: usize,
    pub chains: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { general: 8, antiortholattice: 10, chains: 12 }
    }
}

/// Which base corpus an enumeration draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Every BZ-lattice.
    General,
    /// Antiortholattices only; `∼` is forced.
    Antiortholattice,
    /// BZ-lattices whose lattice reduct is a chain.
    Chain,
}

/// What to enumerate: a size range, the classes every output must belong to,
/// structural restrictions and identities every output must satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationSpec {
    pub min_size: usize,
    pub max_size: usize,
    /// Class names from [`axioms::CLASS_NAMES`]; all must hold.
    pub classes: Vec<String>,
    pub chains_only: bool,
    pub distributive_only: bool,
    pub antiortholattice_only: bool,
    /// Labelled statements that must hold.
    pub identities: Vec<(String, Statement)>,
    pub caps: Caps,
}

impl EnumerationSpec {
    /// All BZ-lattices with `1 ≤ n ≤ max_size`.
    pub fn new(max_size: usize) -> Self {
        EnumerationSpec {
            min_size: 1,
            max_size,
            classes: Vec::new(),
            chains_only: false,
            distributive_only: false,
            antiortholattice_only: false,
            identities: Vec::new(),
            caps: Caps::default(),
        }
    }

    /// All PBZ*-lattices with `1 ≤ n ≤ max_size`.
    pub fn pbz(max_size: usize) -> Self {
        Self::new(max_size).class("pbz-star")
    }

    pub fn sizes(mut self, min: usize, max: usize) -> Self {
        self.min_size = min;
        self.max_size = max;
        self
    }

    pub fn class(mut self, name: &str) -> Self {
        self.classes.push(name.to_string());
        self
    }

    pub fn chains(mut self) -> Self {
        self.chains_only = true;
        self
    }

    pub fn distributive(mut self) -> Self {
        self.distributive_only = true;
        self
    }

    pub fn antiortholattices(mut self) -> Self {
        self.antiortholattice_only = true;
        self
    }

    /// Requires a named identity from [`theory`].
    pub fn satisfying(self, name: &str) -> Result<Self, EnumerationError> {
        let st = theory::get(name).ok_or_else(|| EnumerationError::UnknownIdentity(name.to_string()))?;
        Ok(self.satisfying_statement(name, st))
    }

    pub fn satisfying_statement(mut self, label: &str, st: Statement) -> Self {
        self.identities.push((label.to_string(), st));
        self
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn mode(&self) -> Mode {
        if self.chains_only {
            Mode::Chain
        } else if self.antiortholattice_only {
            Mode::Antiortholattice
        } else {
            Mode::General
        }
    }

    pub fn cap(&self) -> usize {
        match self.mode() {
            Mode::General => self.caps.general,
            Mode::Antiortholattice => self.caps.antiortholattice,
            Mode::Chain => self.caps.chains,
        }
    }

    /// Checks the size against the cap and that every class name is known.
    pub fn validate(&self) -> Result<(), EnumerationError> {
        if self.max_size > self.cap() {
            return Err(EnumerationError::CapExceeded { requested: self.max_size, cap: self.cap() });
        }
        if self.mode() == Mode::Antiortholattice && self.max_size > LATTICE_CAP {
            return Err(EnumerationError::CapExceeded { requested: self.max_size, cap: LATTICE_CAP });
        }
        match self.classes.iter().find(|c| !axioms::CLASS_NAMES.contains(&c.as_str())) {
            Some(c) => Err(EnumerationError::UnknownClass(c.clone())),
            None => Ok(()),
        }
    }

    /// Whether `a` passes every filter of this spec (the base corpus is
    /// assumed to match the mode).
    pub fn accepts(&self, a: &FiniteAlgebra) -> bool {
        (!self.chains_only || a.is_chain())
            && (!self.distributive_only || a.is_distributive())
            && (!self.antiortholattice_only || axioms::is_antiortholattice(a))
            && self.classes.iter().all(|c| axioms::has_class(a, c).unwrap_or(false))
            && self.identities.iter().all(|(_, st)| terms::holds_statement(a, st).is_ok())
    }
}

fn letters(k: usize) -> String {
    const ALPHABET: &[u8] = b"abcdefghijklmnopqrstuwxyz";
    let mut s = String::new();
    let mut k = k;
    loop {
        s.insert(0, ALPHABET[k % ALPHABET.len()] as char);
        if k < ALPHABET.len() {
            break;
        }
        k = k / ALPHABET.len() - 1;
    }
    s
}

/// Rebuilds `l` with its elements listed in `order` and labelled `0`, `a`,
/// `b`, …, `1`.
fn relabel(l: &BoundedLattice, order: &[usize], name: String) -> BoundedLattice {
    let n = order.len();
    let mut leq = vec![false; n * n];
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            leq[i * n + j] = l.leq(a, b);
        }
    }
    let mut next = 0;
    let labels = order
        .iter()
        .map(|&a| {
            if a == l.zero() {
                "0".to_string()
            } else if a == l.one() {
                "1".to_string()
            } else {
                next += 1;
                letters(next - 1)
            }
        })
        .collect();
    BoundedLattice::from_flat(name, labels, leq).expect("reordering preserves lattices")
}

/// Lattices obtained from `l` by adding a coatom whose strict down-set is a
/// nonempty down-set of `l ∖ {1}` closed under joins other than `1`.
fn coatom_extensions(l: &BoundedLattice) -> Vec<BoundedLattice> {
    let n = l.size();
    let top = l.one();
    let rest: Vec<usize> = (0..n).filter(|&x| x != top).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << rest.len() {
        let inside = |x: usize| x != top && mask >> rest.iter().position(|&r| r == x).unwrap() & 1 == 1;
        let members: Vec<usize> = rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        let down_closed = members.iter().all(|&x| (0..n).all(|y| !l.leq(y, x) || inside(y)));
        let join_closed = members.iter().all(|&x| {
            members.iter().all(|&y| {
                let j = l.join(x, y);
                j == top || inside(j)
            })
        });
        if !down_closed || !join_closed {
            continue;
        }
        let m = n + 1;
        let mut leq = vec![false; m * m];
        for a in 0..n {
            for b in 0..n {
                leq[a * m + b] = l.leq(a, b);
            }
        }
        for &d in &members {
            leq[d * m + n] = true;
        }
        leq[n * m + n] = true;
        leq[n * m + top] = true;
        let labels = (0..m).map(|i| i.to_string()).collect();
        out.push(BoundedLattice::from_flat(String::new(), labels, leq).expect("coatom extension is a lattice"));
    }
    out
}

fn lattice_levels() -> &'static [OnceLock<Vec<BoundedLattice>>] {
    static LEVELS: OnceLock<Vec<OnceLock<Vec<BoundedLattice>>>> = OnceLock::new();
    LEVELS.get_or_init(|| (0..=LATTICE_CAP).map(|_| OnceLock::new()).collect())
}

fn lattices_of(n: usize) -> &'static [BoundedLattice] {
    lattice_levels()[n].get_or_init(|| {
        if n <= 2 {
            return vec![BoundedLattice::chain(n).renamed(format!("L{n}.1"))];
        }
        let parents = lattices_of(n - 1);
        let candidates: Vec<Vec<(Vec<u8>, BoundedLattice)>> = parents
            .par_iter()
            .map(|p| coatom_extensions(p).into_iter().map(|l| (lattice_canonical_form(&l), l)).collect())
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (form, l) in candidates.into_iter().flatten() {
            if seen.insert(form) {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&a| (0..n).filter(|&b| l.leq(b, a)).count());
                out.push(relabel(&l, &order, format!("L{n}.{}", out.len() + 1)));
            }
        }
        out
    })
}

/// Every bounded lattice with `n` elements, once up to isomorphism, with
/// elements listed along a linear extension.
pub fn enumerate_lattices(n: usize) -> Result<Vec<BoundedLattice>, EnumerationError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > LATTICE_CAP {
        return Err(EnumerationError::CapExceeded { requested: n, cap: LATTICE_CAP });
    }
    Ok(lattices_of(n).to_vec())
}

/// Order-reversing involutions of `l` satisfying `a∧a′ ≤ b∨b′`.
pub(crate) fn kleene_involutions(l: &BoundedLattice) -> Vec<Vec<usize>> {
    let n = l.size();
    let down: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| l.leq(b, a)).count()).collect();
    let up: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| l.leq(a, b)).count()).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    go(l, 0, &down, &up, &mut perm, &mut out);
    out.retain(|k| {
        (0..n).all(|a| {
            let s = l.meet(a, k[a]);
            (0..n).all(|b| l.leq(s, l.join(b, k[b])))
        })
    });
    return out;

    fn go(l: &BoundedLattice, k: usize, down: &[usize], up: &[usize], perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = l.size();
        if k == n {
            out.push(perm.clone());
            return;
        }
        // an earlier j with j′ = k forces k′ = j
        let forced = (0..k).find(|&j| perm[j] == k);
        for t in 0..n {
            let allowed = match forced {
                Some(j) => t == j,
                None => t >= k && !perm[..k].contains(&t),
            };
            if !allowed || down[t] != up[k] {
                continue;
            }
            if (0..k).all(|j| l.leq(j, k) == l.leq(t, perm[j]) && l.leq(k, j) == l.leq(perm[j], t)) {
                perm[k] = t;
                go(l, k + 1, down, up, perm, out);
                perm[k] = usize::MAX;
            }
        }
    }
}

/// Every Brouwer complement making `(l, kleene)` a BZ-lattice.
pub(crate) fn brouwer_maps(l: &BoundedLattice, kleene: &[usize]) -> Vec<Vec<usize>> {
    let n = l.size();
    let (zero, one) = (l.zero(), l.one());
    let mut order: Vec<usize> = (0..n).filter(|&a| a != zero && a != one).collect();
    order.sort_by_key(|&a| std::cmp::Reverse((0..n).filter(|&b| l.leq(b, a)).count()));
    let mut br = vec![usize::MAX; n];
    br[one] = zero;
    br[zero] = one;
    let mut images = vec![0u32; n];
    images[zero] += 1;
    images[one] += 1;
    let mut out = Vec::new();
    go(l, kleene, &order, 0, &mut br, &mut images, &mut out);
    return out;

    fn go(
        l: &BoundedLattice,
        k: &[usize],
        order: &[usize],
        i: usize,
        br: &mut Vec<usize>,
        images: &mut Vec<u32>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = l.size();
        if i == order.len() {
            out.push(br.clone());
            return;
        }
        let a = order[i];
        for x in 0..n {
            // a∧a∼ = 0 and a∼ ≤ a′
            if l.meet(a, x) != l.zero() || !l.leq(x, k[a]) {
                continue;
            }
            // images of ∼ satisfy x∼ = x′
            if images[a] > 0 && x != k[a] {
                continue;
            }
            if br[x] != usize::MAX && br[x] != k[x] {
                continue;
            }
            let antitone = (0..n).all(|b| {
                br[b] == usize::MAX || (!l.leq(a, b) || l.leq(br[b], x)) && (!l.leq(b, a) || l.leq(x, br[b]))
            });
            if !antitone {
                continue;
            }
            br[a] = x;
            images[x] += 1;
            go(l, k, order, i + 1, br, images, out);
            images[x] -= 1;
            br[a] = usize::MAX;
        }
    }
}

/// Least conjugate of `(kleene, brouwer)` under the automorphisms.
fn orbit_key(auts: &[Vec<usize>], kleene: &[usize], brouwer: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = kleene.len();
    auts.iter()
        .map(|s| {
            let mut k = vec![0; n];
            let mut b = vec![0; n];
            for x in 0..n {
                k[s[x]] = s[kleene[x]];
                b[s[x]] = s[brouwer[x]];
            }
            (k, b)
        })
        .min()
        .expect("identity automorphism")
}

/// Labels `0`, `1`, then a fresh letter for each remaining element in index
/// order with its `′`-image getting the primed letter.
fn algebra_labels(l: &BoundedLattice, kleene: &[usize]) -> Vec<String> {
    let n = l.size();
    let mut labels = vec![String::new(); n];
    labels[l.zero()] = "0".into();
    labels[l.one()] = "1".into();
    let mut next = 0;
    for x in 0..n {
        if !labels[x].is_empty() {
            continue;
        }
        let name = letters(next);
        next += 1;
        if kleene[x] != x {
            labels[kleene[x]] = format!("{name}'");
        }
        labels[x] = name;
    }
    labels
}

fn decorate(l: &BoundedLattice, mode: Mode) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = l.size();
    let auts = lattice_automorphisms(l);
    let mut keys = BTreeSet::new();
    for k in kleene_involutions(l) {
        if mode == Mode::Antiortholattice {
            if (0..n).any(|a| a != l.zero() && a != l.one() && l.meet(a, k[a]) == l.zero()) {
                continue;
            }
            let b: Vec<usize> = (0..n).map(|a| if a == l.zero() { l.one() } else { l.zero() }).collect();
            keys.insert(orbit_key(&auts, &k, &b));
        } else {
            for b in brouwer_maps(l, &k) {
                keys.insert(orbit_key(&auts, &k, &b));
            }
        }
    }
    keys.into_iter().collect()
}

fn base_corpus(n: usize, mode: Mode) -> Arc<Vec<FiniteAlgebra>> {
    type Cache = Mutex<HashMap<(usize, Mode), Arc<OnceLock<Arc<Vec<FiniteAlgebra>>>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
        map.entry((n, mode)).or_default().clone()
    };
    slot.get_or_init(|| {
        let lattices: Vec<BoundedLattice> = match mode {
            Mode::Chain => vec![BoundedLattice::chain(n)],
            _ => lattices_of(n).to_vec(),
        };
        let prefix = match mode {
            Mode::General => "E",
            Mode::Antiortholattice => "A",
            Mode::Chain => "C",
        };
        let decorated: Vec<Vec<FiniteAlgebra>> = lattices
            .par_iter()
            .map(|l| {
                decorate(l, mode)
                    .into_iter()
                    .map(|(k, b)| {
                        let labels = algebra_labels(l, &k);
                        let lab = BoundedLattice::from_parts(
                            String::new(),
                            labels,
                            l.leq_flat().to_vec(),
                            (0..n * n).map(|i| l.meet(i / n, i % n)).collect(),
                            (0..n * n).map(|i| l.join(i / n, i % n)).collect(),
                            l.zero(),
                            l.one(),
                        );
                        FiniteAlgebra::from_lattice_unchecked("", &lab, k, b)
                    })
                    .filter(|a| mode != Mode::Antiortholattice || axioms::is_pbz_star(a).holds())
                    .collect()
            })
            .collect();
        Arc::new(
            decorated
                .into_iter()
                .flatten()
                .enumerate()
                .map(|(i, a)| a.renamed(format!("{prefix}{n}.{}", i + 1)))
                .collect(),
        )
    })
    .clone()
}

/// The algebras of exactly `n` elements matching `spec`, once up to
/// isomorphism, in a fixed order.
pub fn enumerate_pbz(n: usize, spec: &EnumerationSpec) -> Result<Vec<FiniteAlgebra>, EnumerationError> {
    spec.validate()?;
    if n > spec.cap() {
        return Err(EnumerationError::CapExceeded { requested: n, cap: spec.cap() });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let base = base_corpus(n, spec.mode());
    Ok(base.par_iter().filter(|a| spec.accepts(a)).cloned().collect())
}

/// Every algebra of size `spec.min_size..=spec.max_size` matching `spec`,
/// smallest first.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<FiniteAlgebra>, EnumerationError> {
    spec.validate()?;
    let mut out = Vec::new();
    for n in spec.min_size.max(1)..=spec.max_size {
        out.extend(enumerate_pbz(n, spec)?);
    }
    Ok(out)
}

/// Size of the unfiltered corpus for `n` in the spec's mode.
pub(crate) fn base_count(n: usize, spec: &EnumerationSpec) -> usize {
    if n == 0 {
        0
    } else {
        base_corpus(n, spec.mode()).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::catalog;

    #[test]
    fn small_lattice_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15, 53]);
        assert!(enumerate_lattices(LATTICE_CAP + 1).is_err());
    }

    #[test]
    fn lattices_are_listed_along_a_linear_extension() {
        for l in enumerate_lattices(6).unwrap() {
            assert_eq!((l.zero(), l.one()), (0, 5));
            for a in 0..6 {
                for b in 0..a {
                    assert!(!l.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn tiny_pbz_corpora() {
        let two = enumerate_pbz(2, &EnumerationSpec::pbz(2)).unwrap();
        assert_eq!(two.len(), 1);
        assert!(crate::is_isomorphic(&two[0], &catalog::get("D2").unwrap()).is_some());
        let three = enumerate_pbz(3, &EnumerationSpec::pbz(3)).unwrap();
        assert_eq!(three.len(), 1);
        assert!(crate::is_isomorphic(&three[0], &catalog::get("D3").unwrap()).is_some());
    }

    #[test]
    fn outputs_are_pairwise_non_isomorphic() {
        for n in 1..=5 {
            let all = enumerate_pbz(n, &EnumerationSpec::new(5)).unwrap();
            let forms: HashSet<Vec<u8>> = all.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), all.len());
            assert!(all.iter().all(|a| axioms::is_bz(a).holds()));
        }
    }

    #[test]
    fn antiortholattice_mode_forces_brouwer() {
        let spec = EnumerationSpec::new(6).antiortholattices();
        for a in enumerate(&spec).unwrap() {
            assert!(axioms::has_antiortho_brouwer(&a) && axioms::is_antiortholattice(&a));
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(enumerate_pbz(9, &EnumerationSpec::new(9)).is_err());
        assert!(EnumerationSpec::new(10).antiortholattices().validate().is_ok());
        assert!(EnumerationSpec::new(12).chains().validate().is_ok());
        assert!(EnumerationSpec::new(4).class("nope").validate().is_err());
    }
}
