//! Bounded lattices without unary operations: the input of the twist and
//! ordinal-sum constructions and the output of lattice enumeration.

use crate::error::AlgebraError;
use crate::order;
use crate::algebra::{Rule, ValidationReport, Violation, RawAlgebra};
use crate::error::MalformedError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedLattice {
    name: String,
    labels: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    zero: usize,
    one: usize,
}

impl BoundedLattice {
    /// Validates a `≤` table; bounds are located rather than declared.
    pub fn new(name: impl Into<String>, labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, AlgebraError> {
        let name = name.into();
        let n = labels.len();
        if n == 0 {
            return Err(MalformedError::Empty.into());
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(MalformedError::SizeMismatch { what: "leq", expected: n }.into());
        }
        let flat = order::flatten(&leq);
        Self::from_flat(name, labels, flat)
    }

    pub(crate) fn from_flat(name: String, labels: Vec<String>, leq: Vec<bool>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut violations = Vec::new();
        order::order_violations(n, &leq, &mut violations);
        let (meet, join) = order::lattice_tables(n, &leq, &mut violations);
        let zero = (0..n).find(|&z| (0..n).all(|a| leq[z * n + a]));
        let one = (0..n).find(|&t| (0..n).all(|a| leq[a * n + t]));
        let (zero, one) = match (zero, one) {
            (Some(z), Some(o)) if violations.is_empty() => (z, o),
            _ => {
                if violations.is_empty() {
                    violations.push(Violation::new(Rule::Bounds, &[0]));
                }
                return Err(AlgebraError::Invalid {
                    name,
                    report: ValidationReport { ok: false, violations },
                });
            }
        };
        Ok(BoundedLattice { name, labels, n, leq, meet, join, zero, one })
    }

    pub(crate) fn from_parts(
        name: String,
        labels: Vec<String>,
        leq: Vec<bool>,
        meet: Vec<usize>,
        join: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Self {
        let n = labels.len();
        BoundedLattice { name, labels, n, leq, meet, join, zero, one }
    }

    /// From Hasse covers over elements `0..n` with generated labels.
    pub fn from_covers(name: impl Into<String>, labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, AlgebraError> {
        let leq = order::closure(labels.len(), covers);
        Self::from_flat(name.into(), labels, leq)
    }

    /// The `n`-element chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(format!("chain{n}"), labels, &covers).expect("chains are lattices")
    }

    /// The Boolean lattice `2^k` with elements labelled by bit strings.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let labels = (0..n).map(|i| format!("b{i:0k$b}", k = k.max(1))).collect();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a & b == a;
            }
        }
        Self::from_flat(format!("bool{n}"), labels, leq).expect("Boolean lattices are lattices")
    }

    /// The pentagon `N₅`: `0 < a < b < 1`, `0 < c < 1`.
    pub fn pentagon() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_covers("N5", labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    /// The diamond `M₃`.
    pub fn diamond() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_covers("M3", labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub(crate) fn leq_flat(&self) -> &[bool] {
        &self.leq
    }

    pub(crate) fn tables(&self) -> (&[bool], &[usize], &[usize]) {
        (&self.leq, &self.meet, &self.join)
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        order::covers(self.n, &self.leq)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))))
        })
    }

    /// The order dual, with the same labels.
    pub fn dual(&self) -> Self {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(b, a);
            }
        }
        Self::from_flat(format!("dual({})", self.name), self.labels.clone(), leq).expect("dual of a lattice")
    }

    /// Treats this lattice as raw algebra data with the given unary maps.
    pub fn to_raw(&self, kleene: Vec<usize>, brouwer: Vec<usize>) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            leq: self.leq_rows(),
            kleene,
            brouwer,
            zero: self.zero,
            one: self.one,
        }
    }

    /// Sublattice on `subset` (which must be closed under meet and join),
    /// keeping the induced order and the order of `subset`.
    pub fn induced(&self, name: impl Into<String>, subset: &[usize]) -> Result<Self, AlgebraError> {
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let m = subset.len();
        let mut leq = vec![false; m * m];
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                leq[i * m + j] = self.leq(a, b);
            }
        }
        Self::from_flat(name.into(), labels, leq)
    }
}
