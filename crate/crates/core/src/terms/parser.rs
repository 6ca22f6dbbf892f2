use thiserror::Error;

use super::{Identity, QuasiIdentity, Statement, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol `{symbol}` at {position}")]
    UnknownSymbol { position: usize, symbol: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Meet,
    Join,
    Prime,
    Tilde,
    Necessity,
    Possibility,
    LParen,
    RParen,
    Eq,
    Le,
    Amp,
    Implies,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Meet => "`^`".into(),
            Tok::Join => "`v`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Necessity => "`[]`".into(),
            Tok::Possibility => "`<>`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Implies => "`=>`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let mut step = 1;
        let tok = match c {
            c if c.is_whitespace() => None,
            '^' | '∧' => Some(Tok::Meet),
            '∨' => Some(Tok::Join),
            '\'' | '′' => Some(Tok::Prime),
            '~' | '∼' => Some(Tok::Tilde),
            '□' => Some(Tok::Necessity),
            '◊' | '◇' => Some(Tok::Possibility),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '&' => Some(Tok::Amp),
            '≈' => Some(Tok::Eq),
            '≤' => Some(Tok::Le),
            '⇒' => Some(Tok::Implies),
            '[' if next == Some(']') => {
                step = 2;
                Some(Tok::Necessity)
            }
            '<' if next == Some('>') => {
                step = 2;
                Some(Tok::Possibility)
            }
            '<' if next == Some('=') => {
                step = 2;
                Some(Tok::Le)
            }
            '=' if next == Some('>') => {
                step = 2;
                Some(Tok::Implies)
            }
            '=' => Some(Tok::Eq),
            '0' | '1' if !next.is_some_and(|n| n.is_ascii_alphanumeric() || n == '_') => {
                Some(if c == '0' { Tok::Zero } else { Tok::One })
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                    j += 1;
                }
                step = j - i;
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                Some(if word == "v" { Tok::Join } else { Tok::Ident(word) })
            }
            _ => {
                let end = chars[i..]
                    .iter()
                    .position(|&(_, c)| c.is_whitespace())
                    .map_or(chars.len(), |k| i + k);
                let symbol: String = chars[i..end].iter().map(|&(_, c)| c).collect();
                return Err(ParseError::UnknownSymbol { position: pos, symbol });
            }
        };
        if let Some(t) = tok {
            out.push((pos, t));
        }
        i += step;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = self.peek().map_or("end of input".to_string(), Tok::describe);
        ParseError::Syntax { position: self.offset(), message: format!("expected {expected}, found {found}") }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.factor()?;
        while self.eat(&Tok::Join) {
            t = Term::join(t, self.factor()?);
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        while self.eat(&Tok::Meet) {
            t = Term::meet(t, self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        let mut prefixes = Vec::new();
        loop {
            if self.eat(&Tok::Necessity) {
                prefixes.push(Tok::Necessity);
            } else if self.eat(&Tok::Possibility) {
                prefixes.push(Tok::Possibility);
            } else {
                break;
            }
        }
        let mut t = self.atom()?;
        loop {
            if self.eat(&Tok::Prime) {
                t = Term::kleene(t);
            } else if self.eat(&Tok::Tilde) {
                t = Term::brouwer(t);
            } else {
                break;
            }
        }
        for p in prefixes.into_iter().rev() {
            t = match p {
                Tok::Necessity => Term::necessity(t),
                _ => Term::possibility(t),
            };
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let t = match self.peek().cloned() {
            Some(Tok::Zero) => Term::Zero,
            Some(Tok::One) => Term::One,
            Some(Tok::Ident(v)) => Term::Var(v),
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                return Ok(t);
            }
            _ => return Err(self.error("a term")),
        };
        self.pos += 1;
        Ok(t)
    }

    fn identity(&mut self) -> Result<Identity, ParseError> {
        let lhs = self.term()?;
        if self.eat(&Tok::Eq) {
            Ok(Identity::equation(lhs, self.term()?))
        } else if self.eat(&Tok::Le) {
            Ok(Identity::inequality(lhs, self.term()?))
        } else {
            Err(self.error("`=` or `<=`"))
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let first = self.identity()?;
        let mut premises = vec![first];
        while self.eat(&Tok::Amp) {
            premises.push(self.identity()?);
        }
        if self.eat(&Tok::Implies) {
            let conclusion = self.identity()?;
            return Ok(Statement::Quasi(QuasiIdentity { premises, conclusion }));
        }
        if premises.len() > 1 {
            return Err(self.error("`=>`"));
        }
        Ok(Statement::Identity(premises.pop().unwrap()))
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser::new(text)?;
    let i = p.identity()?;
    p.finish()?;
    Ok(i)
}

/// Identity or quasi-identity.
pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.statement()?;
    p.finish()?;
    Ok(s)
}
