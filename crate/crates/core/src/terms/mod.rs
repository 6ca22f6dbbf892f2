//! Terms over the signature `{∧, ∨, ′, ∼, 0, 1}` with the derived modalities
//! `□x = x′∼` and `◊x = x∼∼`, identities, quasi-identities, and exhaustive
//! checking over finite algebras.
//!
//! Concrete syntax: `^` meet, `v` join, postfix `'` and `~`, prefix `[]` and
//! `<>`, `=` and `<=` between terms, `&` and `=>` for quasi-identities.
//! Postfix operators bind tightest, then prefix modalities, then `^`, then `v`.

mod eval;
mod parser;
pub mod theory;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::{eval, holds, holds_quasi, holds_statement, Assignment, CompiledTerm, Counterexample, UnboundVariable};
pub use parser::{parse_identity, parse_statement, parse_term, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Kleene(Box<Term>),
    Brouwer(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn kleene(a: Term) -> Term {
        Term::Kleene(Box::new(a))
    }

    pub fn brouwer(a: Term) -> Term {
        Term::Brouwer(Box::new(a))
    }

    /// `□t = t′∼`.
    pub fn necessity(a: Term) -> Term {
        Term::brouwer(Term::kleene(a))
    }

    /// `◊t = t∼∼`.
    pub fn possibility(a: Term) -> Term {
        Term::brouwer(Term::brouwer(a))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Meet(a, b) | Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Kleene(a) | Term::Brouwer(a) => a.collect_vars(out),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // 0: join position, 1: meet position, 2: operand of a postfix
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Join(a, b) => {
                if prec > 0 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 0)?;
                f.write_str(" v ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Term::Meet(a, b) => {
                if prec > 1 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 1)?;
                f.write_str(" ^ ")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Term::Kleene(a) => {
                a.fmt_postfix_operand(f)?;
                f.write_str("'")
            }
            Term::Brouwer(a) => {
                a.fmt_postfix_operand(f)?;
                f.write_str("~")
            }
        }
    }

    fn fmt_postfix_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Meet(..) | Term::Join(..) => {
                f.write_str("(")?;
                self.fmt_prec(f, 0)?;
                f.write_str(")")
            }
            _ => self.fmt_prec(f, 2),
        }
    }
}

/// Right operands of `v` and `^` are printed at the next precedence level so
/// that left-nested chains print without parentheses and right-nested ones
/// keep theirs.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Equation,
    Inequality,
}

/// `lhs ≈ rhs` or `lhs ≤ rhs`; an inequality also carries its equational
/// encoding `lhs ∧ rhs ≈ lhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub kind: IdentityKind,
    encoded: (Term, Term),
}

impl Identity {
    pub fn equation(lhs: Term, rhs: Term) -> Self {
        let encoded = (lhs.clone(), rhs.clone());
        Identity { lhs, rhs, kind: IdentityKind::Equation, encoded }
    }

    pub fn inequality(lhs: Term, rhs: Term) -> Self {
        let encoded = (Term::meet(lhs.clone(), rhs.clone()), lhs.clone());
        Identity { lhs, rhs, kind: IdentityKind::Inequality, encoded }
    }

    /// The pair of terms whose equality is checked.
    pub fn encoding(&self) -> (&Term, &Term) {
        (&self.encoded.0, &self.encoded.1)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.kind {
            IdentityKind::Equation => "=",
            IdentityKind::Inequality => "<=",
        };
        write!(f, "{} {} {}", self.lhs, rel, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiIdentity {
    pub premises: Vec<Identity>,
    pub conclusion: Identity,
}

impl QuasiIdentity {
    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.conclusion.vars();
        for p in &self.premises {
            v.extend(p.vars());
        }
        v
    }
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{p}")?;
        }
        if self.premises.is_empty() {
            write!(f, "{}", self.conclusion)
        } else {
            write!(f, " => {}", self.conclusion)
        }
    }
}

/// Either kind of checkable statement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Identity(Identity),
    Quasi(QuasiIdentity),
}

impl Statement {
    pub fn vars(&self) -> BTreeSet<String> {
        match self {
            Statement::Identity(i) => i.vars(),
            Statement::Quasi(q) => q.vars(),
        }
    }

    pub fn as_identity(&self) -> Option<&Identity> {
        match self {
            Statement::Identity(i) => Some(i),
            Statement::Quasi(_) => None,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Identity(i) => write!(f, "{i}"),
            Statement::Quasi(q) => write!(f, "{q}"),
        }
    }
}
