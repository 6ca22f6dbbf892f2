//! Finite bounded involution lattices carrying a Brouwer complement.
//!
//! A [`FiniteAlgebra`] is the carrier of every check in the crate. Its source
//! of truth is the full `≤` table; meet and join tables are derived once at
//! validation time so order queries stay O(1).

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, MalformedError};
use crate::lattice::BoundedLattice;
use crate::order;

/// Position of an element in its algebra. Labels carry no semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Element(usize);

impl Element {
    pub const fn new(index: usize) -> Self {
        Element(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Structural rule checked by [`validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Reflexive,
    Antisymmetric,
    Transitive,
    MeetExists,
    JoinExists,
    Bounds,
    KleeneInvolution,
    KleeneAntitone,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Reflexive => "reflexivity",
            Rule::Antisymmetric => "antisymmetry",
            Rule::Transitive => "transitivity",
            Rule::MeetExists => "meet-exists",
            Rule::JoinExists => "join-exists",
            Rule::Bounds => "bounds",
            Rule::KleeneInvolution => "kleene-involution",
            Rule::KleeneAntitone => "kleene-antitone",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub witness: Vec<Element>,
}

impl Violation {
    pub(crate) fn new(rule: Rule, witness: &[usize]) -> Self {
        Violation { rule, witness: order::to_elements(witness) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn violated(&self, rule: Rule) -> Option<&Violation> {
        self.violations.iter().find(|v| v.rule == rule)
    }
}

/// Unvalidated algebra data, e.g. straight from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub kleene: Vec<usize>,
    pub brouwer: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

impl RawAlgebra {
    fn check_shape(&self) -> Result<usize, MalformedError> {
        let n = self.labels.len();
        if n == 0 {
            return Err(MalformedError::Empty);
        }
        for (i, l) in self.labels.iter().enumerate() {
            if self.labels[..i].contains(l) {
                return Err(MalformedError::DuplicateLabel(l.clone()));
            }
        }
        if self.leq.len() != n || self.leq.iter().any(|row| row.len() != n) {
            return Err(MalformedError::SizeMismatch { what: "leq", expected: n });
        }
        if self.kleene.len() != n {
            return Err(MalformedError::SizeMismatch { what: "kleene", expected: n });
        }
        if self.brouwer.len() != n {
            return Err(MalformedError::SizeMismatch { what: "brouwer", expected: n });
        }
        let bad = self
            .kleene
            .iter()
            .chain(&self.brouwer)
            .chain([&self.zero, &self.one])
            .find(|&&i| i >= n);
        if let Some(&i) = bad {
            return Err(MalformedError::IndexOutOfRange { index: i, size: n });
        }
        Ok(n)
    }
}

/// Checks every structural invariant of a bounded involution lattice with a
/// total Brouwer map. Malformed input is an error; semantic failures land in
/// the report, one entry per violated rule.
pub fn validate(raw: &RawAlgebra) -> Result<ValidationReport, MalformedError> {
    Ok(analyse(raw)?.0)
}

/// Report plus the flattened order, meet and join tables.
type Analysis = (ValidationReport, Vec<bool>, Vec<usize>, Vec<usize>);

fn analyse(raw: &RawAlgebra) -> Result<Analysis, MalformedError> {
    let n = raw.check_shape()?;
    let leq = order::flatten(&raw.leq);
    let mut violations = Vec::new();
    order::order_violations(n, &leq, &mut violations);
    let (meet, join) = order::lattice_tables(n, &leq, &mut violations);
    order::bound_violations(n, &leq, raw.zero, raw.one, &mut violations);

    let k = &raw.kleene;
    if let Some(a) = (0..n).find(|&a| k[k[a]] != a) {
        violations.push(Violation::new(Rule::KleeneInvolution, &[a]));
    }
    'anti: for a in 0..n {
        for b in 0..n {
            if leq[a * n + b] && !leq[k[b] * n + k[a]] {
                violations.push(Violation::new(Rule::KleeneAntitone, &[a, b]));
                break 'anti;
            }
        }
    }
    let report = ValidationReport { ok: violations.is_empty(), violations };
    Ok((report, leq, meet, join))
}

/// A validated finite bounded involution lattice with Brouwer map.
///
/// Immutable once built; all accessors are O(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    labels: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    kleene: Vec<usize>,
    brouwer: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FiniteAlgebra {
    pub fn new(raw: RawAlgebra) -> Result<Self, AlgebraError> {
        let (report, leq, meet, join) = analyse(&raw)?;
        let n = raw.labels.len();
        if !report.ok {
            return Err(AlgebraError::Invalid { name: raw.name, report });
        }
        Ok(FiniteAlgebra {
            name: raw.name,
            labels: raw.labels,
            n,
            leq,
            meet,
            join,
            kleene: raw.kleene,
            brouwer: raw.brouwer,
            zero: raw.zero,
            one: raw.one,
        })
    }

    /// Builds from a lattice reduct and the two unary maps.
    pub fn from_lattice(
        name: impl Into<String>,
        lattice: &BoundedLattice,
        kleene: Vec<usize>,
        brouwer: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        FiniteAlgebra::new(RawAlgebra {
            name: name.into(),
            labels: lattice.labels().to_vec(),
            leq: lattice.leq_rows(),
            kleene,
            brouwer,
            zero: lattice.zero(),
            one: lattice.one(),
        })
    }

    /// Reuses the tables of an already validated lattice. The caller
    /// guarantees that `kleene` is an order-reversing involution.
    pub(crate) fn from_lattice_unchecked(
        name: impl Into<String>,
        lattice: &BoundedLattice,
        kleene: Vec<usize>,
        brouwer: Vec<usize>,
    ) -> Self {
        let (leq, meet, join) = lattice.tables();
        debug_assert!((0..lattice.size()).all(|a| kleene[kleene[a]] == a));
        FiniteAlgebra {
            name: name.into(),
            labels: lattice.labels().to_vec(),
            n: lattice.size(),
            leq: leq.to_vec(),
            meet: meet.to_vec(),
            join: join.to_vec(),
            kleene,
            brouwer,
            zero: lattice.zero(),
            one: lattice.one(),
        }
    }

    /// Same lattice and involution, different Brouwer map.
    pub fn with_brouwer(&self, brouwer: Vec<usize>) -> Result<Self, AlgebraError> {
        let mut raw = self.to_raw();
        raw.brouwer = brouwer;
        FiniteAlgebra::new(raw)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn relabeled(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        let mut raw = self.to_raw();
        raw.labels = labels;
        let check = FiniteAlgebra::new(raw)?;
        self.labels = check.labels;
        Ok(self)
    }

    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            leq: self.leq.chunks(self.n).map(<[bool]>::to_vec).collect(),
            kleene: self.kleene.clone(),
            brouwer: self.brouwer.clone(),
            zero: self.zero,
            one: self.one,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.n).map(Element)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a.0]
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label).map(Element)
    }

    pub fn zero(&self) -> Element {
        Element(self.zero)
    }

    pub fn one(&self) -> Element {
        Element(self.one)
    }

    pub fn is_bound(&self, a: Element) -> bool {
        a.0 == self.zero || a.0 == self.one
    }

    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a.0 * self.n + b.0]
    }

    #[inline]
    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Element, b: Element) -> Element {
        Element(self.meet[a.0 * self.n + b.0])
    }

    #[inline]
    pub fn join(&self, a: Element, b: Element) -> Element {
        Element(self.join[a.0 * self.n + b.0])
    }

    /// Kleene complement `a′`.
    #[inline]
    pub fn kleene(&self, a: Element) -> Element {
        Element(self.kleene[a.0])
    }

    /// Brouwer complement `a∼`.
    #[inline]
    pub fn brouwer(&self, a: Element) -> Element {
        Element(self.brouwer[a.0])
    }

    /// `□a = a′∼`.
    #[inline]
    pub fn necessity(&self, a: Element) -> Element {
        self.brouwer(self.kleene(a))
    }

    /// `◊a = a∼∼`.
    #[inline]
    pub fn possibility(&self, a: Element) -> Element {
        self.brouwer(self.brouwer(a))
    }

    pub fn kleene_map(&self) -> &[usize] {
        &self.kleene
    }

    pub fn brouwer_map(&self) -> &[usize] {
        &self.brouwer
    }

    pub(crate) fn leq_flat(&self) -> &[bool] {
        &self.leq
    }

    /// Hasse covers, sorted by (lower, upper).
    pub fn covers(&self) -> Vec<(Element, Element)> {
        order::covers(self.n, &self.leq).into_iter().map(|(a, b)| (Element(a), Element(b))).collect()
    }

    pub fn lattice(&self) -> BoundedLattice {
        BoundedLattice::from_parts(
            self.name.clone(),
            self.labels.clone(),
            self.leq.clone(),
            self.meet.clone(),
            self.join.clone(),
            self.zero,
            self.one,
        )
    }

    pub fn is_chain(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    pub fn is_distributive(&self) -> bool {
        self.lattice().is_distributive()
    }

    /// Elements sorted so that every element comes after all elements below it.
    pub fn linear_extension(&self) -> Vec<Element> {
        let mut v: Vec<Element> = self.elements().collect();
        v.sort_by_key(|&a| (self.elements().filter(|&b| self.leq(b, a)).count(), a));
        v
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} elements)", self.name, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d3_raw() -> RawAlgebra {
        RawAlgebra {
            name: "D3".into(),
            labels: vec!["0".into(), "a".into(), "1".into()],
            leq: vec![vec![true, true, true], vec![false, true, true], vec![false, false, true]],
            kleene: vec![2, 1, 0],
            brouwer: vec![2, 0, 0],
            zero: 0,
            one: 2,
        }
    }

    #[test]
    fn d3_validates() {
        let report = validate(&d3_raw()).unwrap();
        assert!(report.ok, "{report:?}");
        let d3 = FiniteAlgebra::new(d3_raw()).unwrap();
        let a = d3.element("a").unwrap();
        assert_eq!(d3.meet(a, d3.one()), a);
        assert_eq!(d3.possibility(a), d3.one());
        assert_eq!(d3.necessity(a), d3.zero());
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let mut raw = d3_raw();
        raw.leq[1][0] = true;
        let report = validate(&raw).unwrap();
        assert!(!report.ok);
        let v = report.violated(Rule::Antisymmetric).unwrap();
        assert_eq!(v.witness, vec![Element(0), Element(1)]);
    }

    #[test]
    fn boolean_square_with_identity_involution_is_rejected() {
        let raw = RawAlgebra {
            name: "bad".into(),
            labels: ["0", "a", "b", "1"].map(String::from).to_vec(),
            leq: vec![
                vec![true, true, true, true],
                vec![false, true, false, true],
                vec![false, false, true, true],
                vec![false, false, false, true],
            ],
            kleene: vec![0, 1, 2, 3],
            brouwer: vec![3, 2, 1, 0],
            zero: 0,
            one: 3,
        };
        let report = validate(&raw).unwrap();
        let v = report.violated(Rule::KleeneAntitone).unwrap();
        // least comparable pair 0 < a already breaks order reversal
        assert_eq!(v.witness, vec![Element(0), Element(1)]);
        assert!(report.violated(Rule::KleeneInvolution).is_none());
    }

    #[test]
    fn malformed_input_is_distinct_from_violations() {
        let mut raw = d3_raw();
        raw.kleene.pop();
        assert!(matches!(validate(&raw), Err(MalformedError::SizeMismatch { what: "kleene", .. })));
        let mut raw = d3_raw();
        raw.brouwer[0] = 7;
        assert!(matches!(validate(&raw), Err(MalformedError::IndexOutOfRange { index: 7, .. })));
    }

    #[test]
    fn all_violations_are_listed() {
        let mut raw = d3_raw();
        raw.leq[1][0] = true;
        raw.kleene = vec![0, 1, 2];
        let report = validate(&raw).unwrap();
        let rules: Vec<Rule> = report.violations.iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::Antisymmetric));
        assert!(rules.contains(&Rule::KleeneAntitone));
    }
}
