//! Expression parser and elaborator for the CLI input language.
//!
//! Grammar (whitespace-insensitive, juxtaposition multiplies):
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor (('*' | '/' | juxtaposition) factor)*
//!   factor := atom ['^' int]
//!   atom   := 'A'|'B'|'C'|'alpha'|'beta'|'gamma'|'Omega'|'q'
//!           | integer | '[' int ']_q' | '(' expr ')'
//!
//! Division and negative exponents are only valid when the divisor (resp. the
//! base) elaborates to a scalar, i.e. a coefficient with no generator or
//! central factor; `A^-1` is rejected since the generators are not invertible.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;
use uaw::algebra::{AlgebraElement, Generator};
use uaw::qfield::{bracket, RatFuncQ};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("bad exponent at byte {offset}: {message}")]
    BadExponent { offset: usize, message: String },
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Gen(Generator),
    Alpha,
    Beta,
    Gamma,
    Omega,
    Q,
    Int(BigInt),
    /// `[n]_q` bracket literal.
    Bracket(i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division; the divisor must elaborate to a nonzero scalar.
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// Full `[n]_q` literal, lexed as one token.
    Bracket(i64),
    Int(BigInt),
    Ident(String),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '[' => {
                let start = i;
                i += 1;
                let mut j = i;
                if j < bytes.len() && bytes[j] == b'-' {
                    j += 1;
                }
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i || (j == i + 1 && bytes[i] == b'-') {
                    return Err(syntax(i, "expected integer inside `[...]_q`"));
                }
                let n: i64 = src[i..j]
                    .parse()
                    .map_err(|_| syntax(i, "bracket index out of range"))?;
                if !src[j..].starts_with("]_q") {
                    return Err(syntax(j, "expected `]_q` closing a bracket literal"));
                }
                out.push((start, Tok::Bracket(n)));
                i = j + 3;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits parse");
                out.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => return Err(syntax(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn offset(&self) -> usize {
        self.peek().map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some((_, Tok::Minus)) => {
                    self.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some((_, Tok::Star)) => {
                    self.next();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some((off, Tok::Slash)) => {
                    let off = *off;
                    self.next();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?), off);
                }
                // Juxtaposition: any token that can start an atom.
                Some((_, Tok::Ident(_)))
                | Some((_, Tok::Int(_)))
                | Some((_, Tok::Bracket(_)))
                | Some((_, Tok::LParen)) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.next();
            let exp_off = self.offset();
            let negative = if matches!(self.peek(), Some((_, Tok::Minus))) {
                self.next();
                true
            } else {
                false
            };
            let Some((off, Tok::Int(n))) = self.next() else {
                return Err(syntax(exp_off, "expected integer exponent after `^`"));
            };
            let mag: i64 = n
                .try_into()
                .map_err(|_| ParseError::BadExponent {
                    offset: off,
                    message: "exponent out of range".into(),
                })?;
            let exp = if negative { -mag } else { mag };
            return Ok(Expr::Pow(Box::new(base), exp, exp_off));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.next() {
            Some((_, Tok::Ident(name))) => match name.as_str() {
                "A" => Ok(Expr::Gen(Generator::A)),
                "B" => Ok(Expr::Gen(Generator::B)),
                "C" => Ok(Expr::Gen(Generator::C)),
                "alpha" => Ok(Expr::Alpha),
                "beta" => Ok(Expr::Beta),
                "gamma" => Ok(Expr::Gamma),
                "Omega" => Ok(Expr::Omega),
                "q" => Ok(Expr::Q),
                _ => Err(ParseError::UnknownIdentifier { offset: off, name }),
            },
            Some((_, Tok::Int(n))) => Ok(Expr::Int(n)),
            Some((_, Tok::Bracket(n))) => Ok(Expr::Bracket(n)),
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    other => Err(syntax(
                        other.map(|(o, _)| o).unwrap_or(self.end),
                        "expected `)`",
                    )),
                }
            }
            Some((o, t)) => Err(syntax(o, format!("unexpected token {t:?}"))),
            None => Err(syntax(self.end, "unexpected end of input")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    if src.trim().is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if let Some((o, t)) = p.peek() {
        return Err(syntax(*o, format!("trailing input {t:?}")));
    }
    Ok(e)
}

/// A scalar is a single term on the empty word with no central factor.
fn as_scalar(el: &AlgebraElement) -> Option<RatFuncQ> {
    if el.is_structurally_zero() {
        return Some(RatFuncQ::zero());
    }
    if el.num_terms() != 1 {
        return None;
    }
    let ((w, cm), c) = el.terms().next().expect("one term");
    if w.is_empty() && cm.is_one() {
        Some(c.clone())
    } else {
        None
    }
}

pub fn elaborate(e: &Expr) -> Result<AlgebraElement, ParseError> {
    match e {
        Expr::Gen(g) => Ok(AlgebraElement::generator(*g)),
        Expr::Alpha => Ok(AlgebraElement::alpha()),
        Expr::Beta => Ok(AlgebraElement::beta()),
        Expr::Gamma => Ok(AlgebraElement::gamma()),
        Expr::Omega => Ok(AlgebraElement::omega()),
        Expr::Q => Ok(AlgebraElement::scalar(RatFuncQ::q_pow(1))),
        Expr::Int(n) => Ok(AlgebraElement::scalar(RatFuncQ::from_rat(
            BigRational::from_integer(n.clone()),
        ))),
        Expr::Bracket(n) => Ok(AlgebraElement::scalar(bracket(*n))),
        Expr::Add(a, b) => Ok(elaborate(a)?.add(&elaborate(b)?)),
        Expr::Sub(a, b) => Ok(elaborate(a)?.sub(&elaborate(b)?)),
        Expr::Mul(a, b) => Ok(elaborate(a)?.mul(&elaborate(b)?)),
        Expr::Neg(a) => Ok(elaborate(a)?.neg()),
        Expr::Div(a, b, off) => {
            let num = elaborate(a)?;
            let den = elaborate(b)?;
            let Some(s) = as_scalar(&den) else {
                return Err(syntax(*off, "divisor must be a scalar"));
            };
            let inv = s
                .inv()
                .map_err(|_| syntax(*off, "division by zero"))?;
            Ok(num.scale(&inv))
        }
        Expr::Pow(base, k, off) => {
            let b = elaborate(base)?;
            if *k < 0 {
                let Some(s) = as_scalar(&b) else {
                    return Err(ParseError::BadExponent {
                        offset: *off,
                        message: "negative power of a non-scalar".into(),
                    });
                };
                let inv = s.inv().map_err(|_| ParseError::BadExponent {
                    offset: *off,
                    message: "negative power of zero".into(),
                })?;
                let mut acc = RatFuncQ::one();
                for _ in 0..k.unsigned_abs() {
                    acc = acc.mul(&inv);
                }
                return Ok(AlgebraElement::scalar(acc));
            }
            let mut acc = AlgebraElement::one();
            for _ in 0..*k {
                acc = acc.mul(&b);
            }
            Ok(acc)
        }
    }
}

pub fn parse_element(src: &str) -> Result<AlgebraElement, ParseError> {
    elaborate(&parse(src)?)
}

/// Parse a rational of the form `p/r` or `p` (used for `--q0`).
pub fn parse_rational(src: &str) -> Result<BigRational, String> {
    let s = src.trim();
    let (p, r) = match s.split_once('/') {
        Some((p, r)) => (p.trim(), r.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("bad numerator in `{src}`"))?;
    let r: BigInt = r.parse().map_err(|_| format!("bad denominator in `{src}`"))?;
    if r == BigInt::from(0) {
        return Err(format!("zero denominator in `{src}`"));
    }
    Ok(BigRational::new(p, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use uaw::normalform::{is_zero, normalize_pre};
    use uaw::qfield::scalars;
    use uaw::{CentralMono, Word};

    #[test]
    fn parses_commutator_expression() {
        let e = parse("q^-2*B*A - A*B").unwrap();
        let el = elaborate(&e).unwrap();
        // q^-2 BA - AB normalizes to the mixed-commutator element
        // q^-1(q^2-q^-2) C - q^-1(q-q^-1) gamma.
        let got = normalize_pre(&el).unwrap();
        let want = AlgebraElement::term(
            Word(vec![Generator::C]),
            CentralMono::one(),
            RatFuncQ::q_pow(-1).mul(&scalars::q2_minus_q2inv()),
        )
        .sub(&AlgebraElement::term(
            Word::empty(),
            CentralMono {
                gamma: 1,
                ..CentralMono::one()
            },
            RatFuncQ::q_pow(-1).mul(&scalars::q_minus_qinv()),
        ));
        assert!(is_zero(&got.sub(&want)));
    }

    #[test]
    fn bracket_literal_elaborates() {
        let el = parse_element("[3]_q").unwrap();
        let want = AlgebraElement::scalar(
            RatFuncQ::q_pow(2)
                .add(&RatFuncQ::one())
                .add(&RatFuncQ::q_pow(-2)),
        );
        assert_eq!(el, want);
    }

    #[test]
    fn negative_generator_power_rejected() {
        let err = parse_element("A^-1").unwrap_err();
        assert!(matches!(err, ParseError::BadExponent { .. }));
    }

    #[test]
    fn zero_and_omega() {
        assert!(parse_element("0").unwrap().is_structurally_zero());
        assert_eq!(parse_element("Omega").unwrap(), AlgebraElement::omega());
    }

    #[test]
    fn juxtaposition_multiplies() {
        assert_eq!(
            parse_element("2A B").unwrap(),
            parse_element("2*A*B").unwrap()
        );
    }

    #[test]
    fn unknown_identifier_reports_offset() {
        let err = parse("A + Delta").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownIdentifier {
                offset: 4,
                name: "Delta".into()
            }
        );
    }

    #[test]
    fn syntax_error_has_offset() {
        let err = parse("A + ").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 4, .. }));
    }

    #[test]
    fn division_by_scalar() {
        let el = parse_element("(q^3 - q^-3)/(q - q^-1)").unwrap();
        let want = AlgebraElement::scalar(uaw::bracket(3));
        assert_eq!(el, want);
    }

    #[test]
    fn division_by_element_rejected() {
        assert!(parse_element("A/B").is_err());
    }
}
