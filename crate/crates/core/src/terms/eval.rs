use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{Identity, QuasiIdentity, Statement, Term};
use crate::algebra::{Element, FiniteAlgebra};

pub type Assignment = BTreeMap<String, Element>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("variable `{0}` is not assigned")]
pub struct UnboundVariable(pub String);

pub fn eval(a: &FiniteAlgebra, t: &Term, env: &Assignment) -> Result<Element, UnboundVariable> {
    Ok(match t {
        Term::Var(v) => *env.get(v).ok_or_else(|| UnboundVariable(v.clone()))?,
        Term::Zero => a.zero(),
        Term::One => a.one(),
        Term::Meet(x, y) => a.meet(eval(a, x, env)?, eval(a, y, env)?),
        Term::Join(x, y) => a.join(eval(a, x, env)?, eval(a, y, env)?),
        Term::Kleene(x) => a.kleene(eval(a, x, env)?),
        Term::Brouwer(x) => a.brouwer(eval(a, x, env)?),
    })
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Var(usize),
    Zero,
    One,
    Meet,
    Join,
    Kleene,
    Brouwer,
}

/// A term flattened to a postfix program over numbered variable slots.
#[derive(Clone, Debug)]
pub struct CompiledTerm {
    ops: Vec<Op>,
    depth: usize,
}

impl CompiledTerm {
    /// `vars` fixes the slot of each variable; every variable of `t` must be listed.
    pub fn new(t: &Term, vars: &[String]) -> Result<Self, UnboundVariable> {
        let mut ops = Vec::new();
        let depth = compile(t, vars, &mut ops)?;
        Ok(CompiledTerm { ops, depth })
    }

    pub fn eval(&self, a: &FiniteAlgebra, values: &[Element], stack: &mut Vec<Element>) -> Element {
        stack.clear();
        stack.reserve(self.depth);
        for op in &self.ops {
            let v = match *op {
                Op::Var(i) => values[i],
                Op::Zero => a.zero(),
                Op::One => a.one(),
                Op::Kleene => {
                    let x = stack.pop().unwrap();
                    a.kleene(x)
                }
                Op::Brouwer => {
                    let x = stack.pop().unwrap();
                    a.brouwer(x)
                }
                Op::Meet | Op::Join => {
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    if matches!(op, Op::Meet) {
                        a.meet(x, y)
                    } else {
                        a.join(x, y)
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().unwrap()
    }
}

fn compile(t: &Term, vars: &[String], ops: &mut Vec<Op>) -> Result<usize, UnboundVariable> {
    Ok(match t {
        Term::Var(v) => {
            let i = vars.iter().position(|w| w == v).ok_or_else(|| UnboundVariable(v.clone()))?;
            ops.push(Op::Var(i));
            1
        }
        Term::Zero => {
            ops.push(Op::Zero);
            1
        }
        Term::One => {
            ops.push(Op::One);
            1
        }
        Term::Meet(x, y) | Term::Join(x, y) => {
            let dx = compile(x, vars, ops)?;
            let dy = compile(y, vars, ops)?;
            ops.push(if matches!(t, Term::Meet(..)) { Op::Meet } else { Op::Join });
            dx.max(dy + 1)
        }
        Term::Kleene(x) | Term::Brouwer(x) => {
            let d = compile(x, vars, ops)?;
            ops.push(if matches!(t, Term::Kleene(..)) { Op::Kleene } else { Op::Brouwer });
            d
        }
    })
}

/// A failing assignment together with the two values of the violated
/// conclusion (for an inequality, the raw sides `lhs` and `rhs`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Vec<(String, Element)>,
    pub lhs: Element,
    pub rhs: Element,
}

impl Counterexample {
    pub fn get(&self, var: &str) -> Option<Element> {
        self.assignment.iter().find(|(v, _)| v == var).map(|&(_, e)| e)
    }

    /// `x=a, y=b` with element labels.
    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        let mut s = String::new();
        for (i, (v, e)) in self.assignment.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            write!(s, "{v}={}", a.label(*e)).unwrap();
        }
        s
    }
}

struct CompiledIdentity {
    lhs: CompiledTerm,
    rhs: CompiledTerm,
    raw: Option<(CompiledTerm, CompiledTerm)>,
}

impl CompiledIdentity {
    fn new(i: &Identity, vars: &[String]) -> Self {
        let (l, r) = i.encoding();
        let compile = |t: &Term| CompiledTerm::new(t, vars).expect("variable set covers the identity");
        let raw = (l != &i.lhs || r != &i.rhs).then(|| (compile(&i.lhs), compile(&i.rhs)));
        CompiledIdentity { lhs: compile(l), rhs: compile(r), raw }
    }

    fn check(&self, a: &FiniteAlgebra, values: &[Element], stack: &mut Vec<Element>) -> Option<(Element, Element)> {
        let l = self.lhs.eval(a, values, stack);
        let r = self.rhs.eval(a, values, stack);
        if l == r {
            return None;
        }
        Some(match &self.raw {
            Some((rl, rr)) => (rl.eval(a, values, stack), rr.eval(a, values, stack)),
            None => (l, r),
        })
    }
}

/// Visits all `n^k` assignments; the first variable is the most significant
/// digit, so the first hit is lexicographically least.
fn first_failure(
    a: &FiniteAlgebra,
    vars: &[String],
    mut fails: impl FnMut(&[Element]) -> Option<(Element, Element)>,
) -> Option<Counterexample> {
    let n = a.size();
    let k = vars.len();
    let mut digits = vec![0usize; k];
    let mut values = vec![Element::new(0); k];
    loop {
        for (v, &d) in values.iter_mut().zip(&digits) {
            *v = Element::new(d);
        }
        if let Some((lhs, rhs)) = fails(&values) {
            let assignment = vars.iter().cloned().zip(values).collect();
            return Some(Counterexample { assignment, lhs, rhs });
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Exhaustive check; `Err` carries the lexicographically first failure.
pub fn holds(a: &FiniteAlgebra, i: &Identity) -> Result<(), Counterexample> {
    let vars: Vec<String> = i.vars().into_iter().collect();
    let c = CompiledIdentity::new(i, &vars);
    let mut stack = Vec::new();
    match first_failure(a, &vars, |v| c.check(a, v, &mut stack)) {
        None => Ok(()),
        Some(cx) => Err(cx),
    }
}

/// As [`holds`], over the assignments that satisfy every premise.
pub fn holds_quasi(a: &FiniteAlgebra, q: &QuasiIdentity) -> Result<(), Counterexample> {
    let vars: Vec<String> = q.vars().into_iter().collect();
    let premises: Vec<CompiledIdentity> = q.premises.iter().map(|p| CompiledIdentity::new(p, &vars)).collect();
    let conclusion = CompiledIdentity::new(&q.conclusion, &vars);
    let mut stack = Vec::new();
    let found = first_failure(a, &vars, |v| {
        if premises.iter().any(|p| p.check(a, v, &mut stack).is_some()) {
            return None;
        }
        conclusion.check(a, v, &mut stack)
    });
    match found {
        None => Ok(()),
        Some(cx) => Err(cx),
    }
}

pub fn holds_statement(a: &FiniteAlgebra, s: &Statement) -> Result<(), Counterexample> {
    match s {
        Statement::Identity(i) => holds(a, i),
        Statement::Quasi(q) => holds_quasi(a, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::terms::{parse_identity, parse_statement, parse_term};

    fn at(a: &FiniteAlgebra, pairs: &[(&str, &str)]) -> Assignment {
        pairs.iter().map(|(v, l)| (v.to_string(), a.element(l).unwrap())).collect()
    }

    #[test]
    fn eval_examples() {
        let d3 = catalog::get("D3").unwrap();
        let t = parse_term("x v x'").unwrap();
        assert_eq!(a_label(&d3, &t, &[("x", "a")]), "a");
        assert_eq!(eval(&d3, &parse_term("0~").unwrap(), &Assignment::new()).unwrap(), d3.one());

        let d4 = catalog::get("D4").unwrap();
        assert_eq!(a_label(&d4, &parse_term("[]x' v x").unwrap(), &[("x", "a")]), "a");
        assert_eq!(a_label(&d4, &parse_term("x' ^ <>x").unwrap(), &[("x", "a")]), "a'");
    }

    fn a_label(a: &FiniteAlgebra, t: &Term, pairs: &[(&str, &str)]) -> String {
        a.label(eval(a, t, &at(a, pairs)).unwrap()).to_string()
    }

    #[test]
    fn unbound_variable() {
        let d3 = catalog::get("D3").unwrap();
        let err = eval(&d3, &parse_term("x ^ y").unwrap(), &at(&d3, &[("x", "a")])).unwrap_err();
        assert_eq!(err, UnboundVariable("y".into()));
    }

    #[test]
    fn sk_on_d3_and_d4() {
        let sk = parse_identity("x ^ <>y <= []x v y").unwrap();
        assert!(holds(&catalog::get("D3").unwrap(), &sk).is_ok());
        let d4 = catalog::get("D4").unwrap();
        let cx = holds(&d4, &sk).unwrap_err();
        assert_eq!(cx.describe(&d4), "x=a', y=a");
        // raw sides of the inequality: a′ ∧ ◊a = a′, □a′ ∨ a = a
        assert_eq!(d4.label(cx.lhs), "a'");
        assert_eq!(d4.label(cx.rhs), "a");
    }

    #[test]
    fn quasi_identities() {
        let pom = parse_statement("x <= y & x' ^ y = 0 => x = y").unwrap();
        assert!(holds_statement(&catalog::get("D5").unwrap(), &pom).is_ok());
        let o6 = catalog::get("O6").unwrap();
        assert!(holds_statement(&o6, &pom).is_err());
        let trivial = parse_statement("x = x => x = x").unwrap();
        assert!(holds_statement(&o6, &trivial).is_ok());
    }

    #[test]
    fn closed_identities_have_one_assignment() {
        let d2 = catalog::get("D2").unwrap();
        assert!(holds(&d2, &parse_identity("0~ = 1").unwrap()).is_ok());
        let cx = holds(&d2, &parse_identity("0 = 1").unwrap()).unwrap_err();
        assert!(cx.assignment.is_empty());
    }
}
