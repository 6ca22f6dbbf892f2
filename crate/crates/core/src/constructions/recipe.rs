//! One-line construction recipes.
//!
//! ```text
//! recipe := op "(" recipe ("," recipe)* ")" | atom
//! op     := twist1 | twist2 | osum | hsum | prod | sub | quot
//! atom   := chainN | boolN | N5 | M3 | <catalog name>
//! ```
//!
//! `sub(X, a, b, ...)` is the subalgebra generated by the listed elements and
//! `quot(X, a, b)` the quotient by `Cg(a, b)`. `boolN` has `N` elements.
//! Lattice values are coerced to algebras where one is needed: chains become
//! Kleene chains and Boolean lattices Boolean algebras with `∼ = ′`.

use std::fmt;

use super::{horizontal_sum, ordinal_sum, product, quotient, subalgebra_generated, twist1, twist2};
use crate::algebra::FiniteAlgebra;
use crate::canon;
use crate::catalog;
use crate::congruence;
use crate::error::ConstructionError;
use crate::lattice::BoundedLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Atom(String),
    Twist1(Box<Recipe>),
    Twist2(Box<Recipe>),
    OrdinalSum(Box<Recipe>, Box<Recipe>),
    HorizontalSum(Vec<Recipe>),
    Product(Box<Recipe>, Box<Recipe>),
    Sub(Box<Recipe>, Vec<String>),
    Quotient(Box<Recipe>, String, String),
}

#[derive(Clone, Debug)]
pub enum Built {
    Lattice(BoundedLattice),
    Algebra(FiniteAlgebra),
}

impl Built {
    pub fn lattice(&self) -> BoundedLattice {
        match self {
            Built::Lattice(l) => l.clone(),
            Built::Algebra(a) => a.lattice(),
        }
    }

    pub fn into_algebra(self) -> Result<FiniteAlgebra, ConstructionError> {
        let l = match self {
            Built::Algebra(a) => return Ok(a),
            Built::Lattice(l) => l,
        };
        let wrong = || ConstructionError::WrongOperand {
            op: l.name().to_string(),
            expected: "a chain or Boolean lattice to act as an algebra",
        };
        if l.is_chain() {
            return Ok(catalog::kleene_chain(l.size()).renamed(format!("D{}", l.size())));
        }
        let k = l.size().trailing_zeros() as usize;
        if l.size().is_power_of_two()
            && canon::lattice_canonical_form(&l) == canon::lattice_canonical_form(&BoundedLattice::boolean(k))
        {
            return Ok(catalog::boolean(k));
        }
        Err(wrong())
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Atom(a) => f.write_str(a),
            Recipe::Twist1(x) => write!(f, "twist1({x})"),
            Recipe::Twist2(x) => write!(f, "twist2({x})"),
            Recipe::OrdinalSum(x, y) => write!(f, "osum({x}, {y})"),
            Recipe::Product(x, y) => write!(f, "prod({x}, {y})"),
            Recipe::HorizontalSum(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                write!(f, "hsum({})", parts.join(", "))
            }
            Recipe::Sub(x, labels) => write!(f, "sub({x}, {})", labels.join(", ")),
            Recipe::Quotient(x, a, b) => write!(f, "quot({x}, {a}, {b})"),
        }
    }
}

const OPS: [&str; 7] = ["twist1", "twist2", "osum", "hsum", "prod", "sub", "quot"];

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ConstructionError {
        ConstructionError::RecipeSyntax { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ConstructionError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    /// A run of characters other than whitespace, `(`, `)` and `,`, plus any
    /// balanced parenthesised tail when `with_parens` is set.
    fn word(&mut self, with_parens: bool) -> Result<String, ConstructionError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '(' if with_parens => depth += 1,
                ')' if depth > 0 => depth -= 1,
                '(' | ')' | ',' => break,
                c if c.is_whitespace() && depth == 0 => break,
                _ => {}
            }
            self.pos += c.len_utf8();
        }
        if depth > 0 {
            return Err(self.error("unbalanced `(`"));
        }
        if self.pos == start {
            return Err(self.error("expected a recipe"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn recipe(&mut self) -> Result<Recipe, ConstructionError> {
        self.skip_ws();
        let save = self.pos;
        let head = self.word(false)?;
        self.skip_ws();
        if self.peek() != Some('(') {
            return Ok(Recipe::Atom(head));
        }
        if !OPS.contains(&head.as_str()) {
            self.pos = save;
            return Ok(Recipe::Atom(self.word(true)?));
        }
        self.expect('(')?;
        let first = self.recipe()?;
        let mut rest_recipes = Vec::new();
        let mut rest_words = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    if matches!(head.as_str(), "sub" | "quot") {
                        rest_words.push(self.word(false)?);
                    } else {
                        rest_recipes.push(self.recipe()?);
                    }
                }
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected `,` or `)`")),
            }
        }
        let arity = |n: usize| -> Result<(), ConstructionError> {
            if rest_recipes.len() + rest_words.len() + 1 == n {
                Ok(())
            } else {
                Err(ConstructionError::WrongOperand {
                    op: head.clone(),
                    expected: ["", "one operand", "two operands", "three operands"][n],
                })
            }
        };
        let b = Box::new;
        Ok(match head.as_str() {
            "twist1" => {
                arity(1)?;
                Recipe::Twist1(b(first))
            }
            "twist2" => {
                arity(1)?;
                Recipe::Twist2(b(first))
            }
            "osum" | "prod" => {
                arity(2)?;
                let second = b(rest_recipes.pop().unwrap());
                if head == "osum" {
                    Recipe::OrdinalSum(b(first), second)
                } else {
                    Recipe::Product(b(first), second)
                }
            }
            "hsum" => {
                let mut all = vec![first];
                all.extend(rest_recipes);
                Recipe::HorizontalSum(all)
            }
            "sub" => Recipe::Sub(b(first), rest_words),
            _ => {
                arity(3)?;
                let second = rest_words.pop().unwrap();
                Recipe::Quotient(b(first), rest_words.pop().unwrap(), second)
            }
        })
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe, ConstructionError> {
    let mut p = Parser { text, pos: 0 };
    let r = p.recipe()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(r)
}

fn atom(name: &str) -> Result<Built, ConstructionError> {
    let number = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = number("chain").filter(|&n| n >= 1) {
        return Ok(Built::Lattice(BoundedLattice::chain(n)));
    }
    if let Some(n) = number("bool").filter(|n| n.is_power_of_two()) {
        return Ok(Built::Lattice(BoundedLattice::boolean(n.trailing_zeros() as usize)));
    }
    match name {
        "N5" => Ok(Built::Lattice(BoundedLattice::pentagon())),
        "M3" => Ok(Built::Lattice(BoundedLattice::diamond())),
        _ => catalog::get(name).map(Built::Algebra).map_err(|_| ConstructionError::UnknownAtom(name.to_string())),
    }
}

impl Recipe {
    pub fn build(&self) -> Result<Built, ConstructionError> {
        Ok(match self {
            Recipe::Atom(name) => atom(name)?,
            Recipe::Twist1(x) => Built::Algebra(twist1(&x.build()?.lattice())?),
            Recipe::Twist2(x) => Built::Algebra(twist2(&x.build()?.lattice())),
            Recipe::OrdinalSum(x, y) => Built::Lattice(ordinal_sum(&x.build()?.lattice(), &y.build()?.lattice())),
            Recipe::HorizontalSum(xs) => {
                let parts = xs.iter().map(|x| x.build()?.into_algebra()).collect::<Result<Vec<_>, _>>()?;
                Built::Algebra(horizontal_sum(&parts)?)
            }
            Recipe::Product(x, y) => {
                Built::Algebra(product(&x.build()?.into_algebra()?, &y.build()?.into_algebra()?))
            }
            Recipe::Sub(x, labels) => {
                let a = x.build()?.into_algebra()?;
                let seeds = labels
                    .iter()
                    .map(|l| a.element(l).ok_or_else(|| ConstructionError::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Built::Algebra(subalgebra_generated(&a, &seeds))
            }
            Recipe::Quotient(x, p, q) => {
                let a = x.build()?.into_algebra()?;
                let el = |l: &String| a.element(l).ok_or_else(|| ConstructionError::UnknownLabel(l.clone()));
                let theta = congruence::principal_congruence(&a, el(p)?, el(q)?);
                Built::Algebra(quotient(&a, &theta)?)
            }
        })
    }
}

/// Parses and builds, coercing the result to an algebra.
pub fn build(text: &str) -> Result<FiniteAlgebra, ConstructionError> {
    parse_recipe(text)?.build()?.into_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(a: &FiniteAlgebra, name: &str) -> bool {
        canon::is_isomorphic(a, &catalog::get(name).unwrap()).is_some()
    }

    #[test]
    fn parses_nested_recipes() {
        let r = parse_recipe("hsum(bool4, twist1(chain2))").unwrap();
        assert_eq!(r.to_string(), "hsum(bool4, twist1(chain2))");
        assert_eq!(parse_recipe(&r.to_string()).unwrap(), r);
        assert_eq!(parse_recipe("T1(2x2)").unwrap(), Recipe::Atom("T1(2x2)".into()));
        assert_eq!(
            parse_recipe("hsum(MO2, T1(2x2))").unwrap(),
            Recipe::HorizontalSum(vec![Recipe::Atom("MO2".into()), Recipe::Atom("T1(2x2)".into())])
        );
    }

    #[test]
    fn builds() {
        assert!(iso(&build("twist1(chain3)").unwrap(), "D5"));
        assert!(iso(&build("twist2(bool4)").unwrap(), "T2(2x2)"));
        assert!(iso(&build("hsum(bool4, chain3)").unwrap(), "B4⊞D3"));
        assert!(iso(&build("prod(chain2, chain2)").unwrap(), "B4"));
        assert!(iso(&build("twist1(osum(N5, chain1))").unwrap(), "T1(N5⊕1)"));
        assert!(iso(&build("sub(D5, a)").unwrap(), "D4"));
        assert!(iso(&build("quot(D5, a, c)").unwrap(), "D3"));
        assert!(iso(&build("B4+D3").unwrap(), "B4⊞D3"));
    }

    #[test]
    fn errors() {
        assert!(matches!(build("twist1(chain3"), Err(ConstructionError::RecipeSyntax { .. })));
        assert!(matches!(build("frob"), Err(ConstructionError::UnknownAtom(_))));
        assert!(matches!(build("osum(chain2)"), Err(ConstructionError::WrongOperand { .. })));
        assert!(matches!(build("N5"), Err(ConstructionError::WrongOperand { .. })));
        assert!(matches!(build("sub(D5, z)"), Err(ConstructionError::UnknownLabel(_))));
    }
}
