//! Parser and printer for the ASCII term grammar: variables `x y z w` or
//! `x1..x9`, constants `0 1`, meet `&`, join `|`, postfix `'` and `~`, prefix
//! `box(...)` and `dia(...)`, grouping parentheses, `=`, `<=`, and
//! quasiequations `p1 , p2 , ... => c`. Precedence: postfix > `&` > `|`.
//!
//! Sugar is expanded while parsing: `s <= t` becomes `s & t = s`; over a BZ
//! signature `dia(t)` becomes `t~~` and `box(t)` becomes `t'~`, while over a
//! modal signature `box(t)` becomes `dia(t')'` and `~` is rejected.

use crate::algebra::Signature;
use crate::error::{Error, Result};
use crate::term::{Equation, Quasiequation, Term};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Var(String),
    Zero,
    One,
    Amp,
    Pipe,
    Prime,
    Tilde,
    BoxOp,
    DiaOp,
    LParen,
    RParen,
    Equals,
    LessEq,
    Comma,
    Implies,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '&' => {
                out.push((pos, Token::Amp));
                i += 1;
            }
            '|' => {
                out.push((pos, Token::Pipe));
                i += 1;
            }
            '\'' => {
                out.push((pos, Token::Prime));
                i += 1;
            }
            '~' => {
                out.push((pos, Token::Tilde));
                i += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                i += 1;
            }
            '0' => {
                out.push((pos, Token::Zero));
                i += 1;
            }
            '1' => {
                out.push((pos, Token::One));
                i += 1;
            }
            ',' => {
                out.push((pos, Token::Comma));
                i += 1;
            }
            '=' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push((pos, Token::Implies));
                    i += 2;
                } else {
                    out.push((pos, Token::Equals));
                    i += 1;
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push((pos, Token::LessEq));
                    i += 2;
                } else {
                    return Err(Error::ParseError {
                        position: pos,
                        message: "expected <=".into(),
                    });
                }
            }
            'a'..='z' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                match word.as_str() {
                    "box" => out.push((pos, Token::BoxOp)),
                    "dia" => out.push((pos, Token::DiaOp)),
                    _ => out.push((pos, Token::Var(word))),
                }
                i = j;
            }
            other => {
                return Err(Error::ParseError {
                    position: pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    signature: Signature,
    names: Vec<String>,
    text_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.at)
            .map(|(p, _)| *p)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(Error::ParseError {
                position: self.pos(),
                message: format!("expected {what}"),
            })
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::ParseError {
            position: self.pos(),
            message: message.into(),
        }
    }

    fn variable(&mut self, word: &str, pos: usize) -> Result<Term> {
        let valid = matches!(word, "x" | "y" | "z" | "w")
            || (word.len() == 2
                && word.starts_with('x')
                && word.as_bytes()[1].is_ascii_digit()
                && word.as_bytes()[1] != b'0');
        if !valid {
            return Err(Error::ParseError {
                position: pos,
                message: format!("unknown identifier {word:?} (variables are x y z w or x1..x9)"),
            });
        }
        let idx = match self.names.iter().position(|n| n == word) {
            Some(i) => i,
            None => {
                self.names.push(word.to_string());
                self.names.len() - 1
            }
        };
        Ok(Term::Var(idx))
    }

    fn atom(&mut self) -> Result<Term> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Zero) => {
                if !self.signature.has_bounds() {
                    return Err(Error::SignatureError(
                        "constant 0 is not available in signature I".into(),
                    ));
                }
                Ok(Term::Zero)
            }
            Some(Token::One) => {
                if !self.signature.has_bounds() {
                    return Err(Error::SignatureError(
                        "constant 1 is not available in signature I".into(),
                    ));
                }
                Ok(Term::One)
            }
            Some(Token::Var(w)) => self.variable(&w, pos),
            Some(Token::LParen) => {
                let t = self.join_level()?;
                self.expect(Token::RParen, ")")?;
                Ok(t)
            }
            Some(Token::BoxOp) => {
                self.expect(Token::LParen, "( after box")?;
                let t = self.join_level()?;
                self.expect(Token::RParen, ")")?;
                match self.signature {
                    Signature::Bz => Ok(t.kleene().brouwer()),
                    Signature::Modal => Ok(Term::Diamond(Box::new(t.kleene())).kleene()),
                    _ => Err(Error::SignatureError(format!(
                        "box needs signature BZ or MODAL, not {}",
                        self.signature.tag()
                    ))),
                }
            }
            Some(Token::DiaOp) => {
                self.expect(Token::LParen, "( after dia")?;
                let t = self.join_level()?;
                self.expect(Token::RParen, ")")?;
                match self.signature {
                    Signature::Bz => Ok(t.brouwer().brouwer()),
                    Signature::Modal => Ok(Term::Diamond(Box::new(t))),
                    _ => Err(Error::SignatureError(format!(
                        "dia needs signature BZ or MODAL, not {}",
                        self.signature.tag()
                    ))),
                }
            }
            _ => Err(Error::ParseError {
                position: pos,
                message: "expected a term".into(),
            }),
        }
    }

    fn postfix_level(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::Prime) => {
                    if !self.signature.has_kleene() {
                        return Err(Error::SignatureError(
                            "' is not available in a bare lattice signature".into(),
                        ));
                    }
                    self.at += 1;
                    t = t.kleene();
                }
                Some(Token::Tilde) => {
                    if self.signature != Signature::Bz {
                        return Err(Error::SignatureError(format!(
                            "~ needs signature BZ, not {}",
                            self.signature.tag()
                        )));
                    }
                    self.at += 1;
                    t = t.brouwer();
                }
                _ => return Ok(t),
            }
        }
    }

    fn meet_level(&mut self) -> Result<Term> {
        let mut t = self.postfix_level()?;
        while self.peek() == Some(&Token::Amp) {
            self.at += 1;
            t = t.meet(self.postfix_level()?);
        }
        Ok(t)
    }

    fn join_level(&mut self) -> Result<Term> {
        let mut t = self.meet_level()?;
        while self.peek() == Some(&Token::Pipe) {
            self.at += 1;
            t = t.join(self.meet_level()?);
        }
        Ok(t)
    }

    /// term, `lhs = rhs`, or `lhs <= rhs` (normalized to `lhs & rhs = lhs`).
    fn statement(&mut self) -> Result<StatementBody> {
        let lhs = self.join_level()?;
        match self.peek() {
            Some(Token::Equals) => {
                self.at += 1;
                let rhs = self.join_level()?;
                Ok(StatementBody::Eq(lhs, rhs))
            }
            Some(Token::LessEq) => {
                self.at += 1;
                let rhs = self.join_level()?;
                Ok(StatementBody::Eq(lhs.clone().meet(rhs), lhs))
            }
            _ => Ok(StatementBody::Term(lhs)),
        }
    }
}

enum StatementBody {
    Term(Term),
    Eq(Term, Term),
}

/// Result of [`parse`]: a bare term, an equation, or a quasiequation.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Term(Term, Vec<String>),
    Equation(Equation),
    Quasiequation(Quasiequation),
}

/// Parse `text` under `signature`.
pub fn parse(text: &str, signature: Signature) -> Result<Parsed> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        signature,
        names: Vec::new(),
        text_len: text.chars().count(),
    };
    let first = p.statement()?;
    let mut premises: Vec<StatementBody> = vec![first];
    while p.peek() == Some(&Token::Comma) {
        p.at += 1;
        premises.push(p.statement()?);
    }
    let conclusion = if p.peek() == Some(&Token::Implies) {
        p.at += 1;
        Some(p.statement()?)
    } else {
        None
    };
    if p.at != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    let names = p.names;
    let to_eq = |body: StatementBody, names: &[String]| -> Result<Equation> {
        match body {
            StatementBody::Eq(lhs, rhs) => Ok(Equation {
                lhs,
                rhs,
                var_names: names.to_vec(),
            }),
            StatementBody::Term(_) => Err(Error::ParseError {
                position: 0,
                message: "expected an equation, found a bare term".into(),
            }),
        }
    };
    match (premises.len(), conclusion) {
        (1, None) => match premises.into_iter().next().unwrap() {
            StatementBody::Term(t) => Ok(Parsed::Term(t, names)),
            body => Ok(Parsed::Equation(to_eq(body, &names)?)),
        },
        (_, None) => Err(Error::ParseError {
            position: text.chars().count(),
            message: "premise list without => conclusion".into(),
        }),
        (_, Some(c)) => {
            let conclusion = to_eq(c, &names)?;
            let premises = premises
                .into_iter()
                .map(|b| to_eq(b, &names))
                .collect::<Result<Vec<_>>>()?;
            Ok(Parsed::Quasiequation(Quasiequation {
                premises,
                conclusion,
                var_names: names,
            }))
        }
    }
}

/// Parse when an equation or quasiequation is required.
pub fn parse_claim(text: &str, signature: Signature) -> Result<Parsed> {
    match parse(text, signature)? {
        Parsed::Term(..) => Err(Error::ParseError {
            position: 0,
            message: "expected an equation or quasiequation".into(),
        }),
        other => Ok(other),
    }
}

fn needs_parens_under_postfix(t: &Term) -> bool {
    matches!(t, Term::Meet(..) | Term::Join(..))
}

fn print_prec(t: &Term, names: &[String], out: &mut String, parent: u8) {
    // precedence levels: 0 join, 1 meet, 2 postfix/atom
    match t {
        Term::Var(i) => out.push_str(names.get(*i).map(String::as_str).unwrap_or("?")),
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Meet(l, r) => {
            let wrap = parent > 1;
            if wrap {
                out.push('(');
            }
            print_prec(l, names, out, 1);
            out.push_str(" & ");
            print_prec(r, names, out, 2);
            if wrap {
                out.push(')');
            }
        }
        Term::Join(l, r) => {
            let wrap = parent > 0;
            if wrap {
                out.push('(');
            }
            print_prec(l, names, out, 0);
            out.push_str(" | ");
            print_prec(r, names, out, 1);
            if wrap {
                out.push(')');
            }
        }
        Term::Kleene(inner) => {
            if needs_parens_under_postfix(inner) {
                out.push('(');
                print_prec(inner, names, out, 0);
                out.push(')');
            } else {
                print_prec(inner, names, out, 2);
            }
            out.push('\'');
        }
        Term::Brouwer(inner) => {
            if needs_parens_under_postfix(inner) {
                out.push('(');
                print_prec(inner, names, out, 0);
                out.push(')');
            } else {
                print_prec(inner, names, out, 2);
            }
            out.push('~');
        }
        Term::Diamond(inner) => {
            out.push_str("dia(");
            print_prec(inner, names, out, 0);
            out.push(')');
        }
    }
}

/// Canonical rendering with minimal parentheses.
pub fn print_term(t: &Term, names: &[String]) -> String {
    let mut out = String::new();
    print_prec(t, names, &mut out, 0);
    out
}

pub fn print_equation(eq: &Equation) -> String {
    format!(
        "{} = {}",
        print_term(&eq.lhs, &eq.var_names),
        print_term(&eq.rhs, &eq.var_names)
    )
}

pub fn print_quasiequation(q: &Quasiequation) -> String {
    let ps: Vec<String> = q
        .premises
        .iter()
        .map(|p| {
            format!(
                "{} = {}",
                print_term(&p.lhs, &q.var_names),
                print_term(&p.rhs, &q.var_names)
            )
        })
        .collect();
    format!("{} => {}", ps.join(" , "), print_equation(&q.conclusion))
}

impl std::fmt::Display for Equation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_equation(self))
    }
}

impl std::fmt::Display for Quasiequation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_quasiequation(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_equation_parses() {
        let p = parse("(x & x') ~ = x~ | x'~", Signature::Bz).unwrap();
        let expected = Equation {
            lhs: Term::Var(0).meet(Term::Var(0).kleene()).brouwer(),
            rhs: Term::Var(0).brouwer().join(Term::Var(0).kleene().brouwer()),
            var_names: vec!["x".into()],
        };
        assert_eq!(p, Parsed::Equation(expected));
    }

    #[test]
    fn leq_normalizes_to_meet_absorption() {
        let p = parse("x <= y", Signature::Bi).unwrap();
        match p {
            Parsed::Equation(eq) => {
                assert_eq!(eq.lhs, Term::Var(0).meet(Term::Var(1)));
                assert_eq!(eq.rhs, Term::Var(0));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quasiequation_with_shared_variables() {
        let p = parse("x <= y' , x' & y' <= x & y => x = y'", Signature::I).unwrap();
        match p {
            Parsed::Quasiequation(q) => {
                assert_eq!(q.premises.len(), 2);
                assert_eq!(q.var_names, vec!["x".to_string(), "y".to_string()]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dia_rewrites_per_signature() {
        match parse("dia(x)", Signature::Bz).unwrap() {
            Parsed::Term(t, _) => assert_eq!(t, Term::Var(0).brouwer().brouwer()),
            other => panic!("{other:?}"),
        }
        match parse("dia(x)", Signature::Modal).unwrap() {
            Parsed::Term(t, _) => assert_eq!(t, Term::Diamond(Box::new(Term::Var(0)))),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("dia(x)", Signature::Bi),
            Err(Error::SignatureError(_))
        ));
    }

    #[test]
    fn box_rewrites_per_signature() {
        match parse("box(x)", Signature::Bz).unwrap() {
            Parsed::Term(t, _) => assert_eq!(t, Term::Var(0).kleene().brouwer()),
            other => panic!("{other:?}"),
        }
        match parse("box(x)", Signature::Modal).unwrap() {
            Parsed::Term(t, _) => {
                assert_eq!(t, Term::Diamond(Box::new(Term::Var(0).kleene())).kleene())
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tilde_rejected_in_modal() {
        assert!(matches!(
            parse("x~", Signature::Modal),
            Err(Error::SignatureError(_))
        ));
    }

    #[test]
    fn parse_error_carries_position() {
        match parse("x & ", Signature::Bi) {
            Err(Error::ParseError { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn variables_intern_in_first_occurrence_order() {
        match parse("x3 | x1", Signature::Bi).unwrap() {
            Parsed::Term(t, names) => {
                assert_eq!(t, Term::Var(0).join(Term::Var(1)));
                assert_eq!(names, vec!["x3".to_string(), "x1".to_string()]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let samples = [
            "(x & x')~ | (y & y')~ | x | x'",
            "x & (y | z)",
            "x~~~",
            "dia(x & y)",
            "(x | y)' & 0",
        ];
        for s in samples {
            let sig = if s.contains("dia") {
                Signature::Modal
            } else {
                Signature::Bz
            };
            let t1 = match parse(s, sig).unwrap() {
                Parsed::Term(t, n) => (t, n),
                other => panic!("{other:?}"),
            };
            let printed = print_term(&t1.0, &t1.1);
            match parse(&printed, sig).unwrap() {
                Parsed::Term(t2, _) => assert_eq!(t1.0, t2, "round trip through {printed:?}"),
                other => panic!("{other:?}"),
            }
        }
    }
}
