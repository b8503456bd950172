//! Reader for the ASP dialect printed by [`AspDocument`](super::AspDocument).

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{
    AggElement, Aggregate, ArithOp, AspDocument, AspHead, AspLiteral, AspTerm, AtomPat, BodyElem,
    CmpOp, Schema, Statement,
};
use crate::error::Result;
use crate::lex::{tokenize, Cursor, Tok};

/// Parses ASP text. Statements are tagged [`Schema::Parsed`]; comment lines
/// are dropped.
pub fn parse_asp(text: &str) -> Result<AspDocument> {
    let tokens = tokenize(text)?;
    let mut c = Cursor::new(&tokens, text.len());
    let mut doc = AspDocument::new();
    while !c.at_end() {
        match c.peek() {
            Some(Tok::Directive(d)) if d == "const" => {
                c.next();
                let name = c.ident()?;
                c.expect(&Tok::Eq)?;
                let value = match term(&mut c)? {
                    AspTerm::Int(v) => v,
                    _ => return c.error("#const value must be an integer"),
                };
                c.expect(&Tok::Dot)?;
                doc.set_constant(&name, value);
            }
            Some(Tok::Directive(d)) => {
                let d = d.clone();
                return c.error(alloc::format!("unsupported directive #{d}"));
            }
            Some(Tok::WeakIf) => {
                c.next();
                let body = body(&mut c)?;
                c.expect(&Tok::Dot)?;
                c.expect(&Tok::LBracket)?;
                let weight = term(&mut c)?;
                let mut terms = Vec::new();
                while c.eat(&Tok::Comma) {
                    terms.push(term(&mut c)?);
                }
                c.expect(&Tok::RBracket)?;
                doc.push(
                    Schema::Parsed,
                    Statement::Weak {
                        body,
                        weight,
                        terms,
                    },
                );
            }
            _ => {
                let s = rule(&mut c)?;
                doc.push(Schema::Parsed, s);
            }
        }
    }
    Ok(doc)
}

fn rule(c: &mut Cursor) -> Result<Statement> {
    let head = if c.peek() == Some(&Tok::If) {
        AspHead::Falsum
    } else if starts_braced(c) {
        let lower = if c.peek() == Some(&Tok::LBrace) {
            None
        } else {
            Some(term(c)?)
        };
        AspHead::Choice(braced(c, lower)?)
    } else {
        let t = term(c)?;
        AspHead::Atom(atom_of(c, t)?)
    };
    let body = if c.eat(&Tok::If) { body(c)? } else { Vec::new() };
    c.expect(&Tok::Dot)?;
    Ok(Statement::Rule { head, body })
}

/// `{` or a bound term directly followed by `{`.
fn starts_braced(c: &Cursor) -> bool {
    match c.peek() {
        Some(Tok::LBrace) => true,
        Some(Tok::Int(_) | Tok::Var(_) | Tok::Ident(_)) => c.peek_at(1) == Some(&Tok::LBrace),
        _ => false,
    }
}

fn body(c: &mut Cursor) -> Result<Vec<BodyElem>> {
    let mut out = Vec::new();
    if c.peek() == Some(&Tok::Dot) {
        return Ok(out);
    }
    loop {
        out.push(body_elem(c)?);
        if !c.eat(&Tok::Comma) {
            return Ok(out);
        }
    }
}

fn body_elem(c: &mut Cursor) -> Result<BodyElem> {
    if let (Some(Tok::Var(v)), Some(Tok::Eq), Some(Tok::LBrace)) =
        (c.peek(), c.peek_at(1), c.peek_at(2))
    {
        let var = v.clone();
        c.next();
        c.next();
        let agg = braced(c, None)?;
        if agg.upper.is_some() {
            return c.error("bound on a counted assignment");
        }
        return Ok(BodyElem::Count {
            var,
            elements: agg.elements,
        });
    }
    if starts_braced(c) {
        let lower = if c.peek() == Some(&Tok::LBrace) {
            None
        } else {
            Some(term(c)?)
        };
        return Ok(BodyElem::Agg(braced(c, lower)?));
    }
    Ok(BodyElem::Lit(literal(c)?))
}

fn braced(c: &mut Cursor, lower: Option<AspTerm>) -> Result<Aggregate> {
    c.expect(&Tok::LBrace)?;
    let mut elements = Vec::new();
    if !c.eat(&Tok::RBrace) {
        loop {
            let lit = literal(c)?;
            let mut cond = Vec::new();
            if c.eat(&Tok::Colon) {
                loop {
                    cond.push(literal(c)?);
                    if !c.eat(&Tok::Comma) {
                        break;
                    }
                }
            }
            elements.push(AggElement { lit, cond });
            if !c.eat(&Tok::Semi) {
                break;
            }
        }
        c.expect(&Tok::RBrace)?;
    }
    let upper = match c.peek() {
        Some(Tok::Int(_) | Tok::Var(_) | Tok::Minus) => Some(term(c)?),
        Some(Tok::Ident(s)) if s != "not" => Some(term(c)?),
        _ => None,
    };
    Ok(Aggregate {
        lower,
        upper,
        elements,
    })
}

fn literal(c: &mut Cursor) -> Result<AspLiteral> {
    if c.peek() == Some(&Tok::Ident("not".to_string())) {
        c.next();
        let t = term(c)?;
        return Ok(AspLiteral::neg(atom_of(c, t)?));
    }
    let left = term(c)?;
    let op = match c.peek() {
        Some(Tok::Eq) => CmpOp::Eq,
        Some(Tok::Neq) => CmpOp::Neq,
        Some(Tok::Lt) => CmpOp::Lt,
        Some(Tok::Le) => CmpOp::Le,
        Some(Tok::Gt) => CmpOp::Gt,
        Some(Tok::Ge) => CmpOp::Ge,
        _ => {
            let a = atom_of(c, left)?;
            return Ok(AspLiteral::pos(a));
        }
    };
    c.next();
    let right = term(c)?;
    Ok(AspLiteral::cmp(left, op, right))
}

fn atom_of(c: &Cursor, t: AspTerm) -> Result<AtomPat> {
    match t {
        AspTerm::Const(p) => Ok(AtomPat::new(p, Vec::new())),
        AspTerm::Func(p, args) => Ok(AtomPat::new(p, args)),
        _ => c.error("expected an atom"),
    }
}

fn term(c: &mut Cursor) -> Result<AspTerm> {
    let lo = additive(c)?;
    if c.eat(&Tok::DotDot) {
        let hi = additive(c)?;
        return Ok(AspTerm::Range(Box::new(lo), Box::new(hi)));
    }
    Ok(lo)
}

fn additive(c: &mut Cursor) -> Result<AspTerm> {
    let mut t = multiplicative(c)?;
    loop {
        let op = match c.peek() {
            Some(Tok::Plus) => ArithOp::Add,
            Some(Tok::Minus) => ArithOp::Sub,
            _ => return Ok(t),
        };
        c.next();
        t = AspTerm::op(op, t, multiplicative(c)?);
    }
}

fn multiplicative(c: &mut Cursor) -> Result<AspTerm> {
    let mut t = unary(c)?;
    while c.eat(&Tok::Star) {
        t = AspTerm::op(ArithOp::Mul, t, unary(c)?);
    }
    Ok(t)
}

fn unary(c: &mut Cursor) -> Result<AspTerm> {
    if c.eat(&Tok::Minus) {
        return Ok(match unary(c)? {
            AspTerm::Int(v) => AspTerm::Int(-v),
            t => AspTerm::op(ArithOp::Sub, AspTerm::Int(0), t),
        });
    }
    match c.next().map(|t| &t.tok) {
        Some(Tok::Int(v)) => Ok(AspTerm::Int(*v)),
        Some(Tok::Var(v)) => Ok(AspTerm::Var(v.clone())),
        Some(Tok::Ident(name)) => {
            let name = name.clone();
            if c.eat(&Tok::LParen) {
                let mut args = Vec::new();
                loop {
                    let mut pool = alloc::vec![term(c)?];
                    while c.eat(&Tok::Semi) {
                        pool.push(term(c)?);
                    }
                    args.push(if pool.len() == 1 {
                        pool.pop().expect("one element")
                    } else {
                        AspTerm::Pool(pool)
                    });
                    if !c.eat(&Tok::Comma) {
                        break;
                    }
                }
                c.expect(&Tok::RParen)?;
                Ok(AspTerm::Func(name, args))
            } else {
                Ok(AspTerm::Const(name))
            }
        }
        Some(Tok::LParen) => {
            let t = term(c)?;
            c.expect(&Tok::RParen)?;
            Ok(t)
        }
        _ => c.error("expected a term"),
    }
}

/// Token texts of `text`, ignoring whitespace and comments.
pub fn token_texts(text: &str) -> Result<Vec<String>> {
    Ok(tokenize(text)?
        .into_iter()
        .map(|t| t.tok.to_string())
        .collect())
}

/// Whether two ASP texts have the same token sequence.
pub fn same_tokens(a: &str, b: &str) -> Result<bool> {
    Ok(token_texts(a)? == token_texts(b)?)
}
