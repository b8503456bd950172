//! Surface syntax for `.lpod` and `.crp` files.
//!
//! ```text
//! a * b :- not c.          % ordered rule
//! r1: t :+.                % labelled cr-rule
//! r2: q * s :+ p.          % ordered cr-rule
//! 1 {h(1); h(2)} 1.        % choice rule
//! :- p, r.                 % constraint
//! prefer(r2, r1).          % CR-Prolog2 only
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::lex::{tokenize, Cursor, Tok};
use crate::model::{canonicalize, Atom, Dialect, Head, Literal, Program, Rule, RuleKind, Term};

/// Parses `text` and canonicalizes the result.
pub fn parse(text: &str, dialect: Dialect) -> Result<Program> {
    let tokens = tokenize(text)?;
    let mut cur = Cursor::new(&tokens, text.len());
    let mut program = Program::new(dialect);
    // prefer facts may name rules by index; resolved after canonicalization
    let mut prefer_refs = Vec::new();
    while !cur.at_end() {
        if is_prefer_fact(&cur) {
            let span = cur.span();
            if dialect == Dialect::Lpod {
                return Err(Error::Dialect {
                    message: "prefer facts are only allowed in CR-Prolog2 programs".to_string(),
                    span,
                });
            }
            cur.next();
            cur.expect(&Tok::LParen)?;
            let a = rule_ref(&mut cur)?;
            cur.expect(&Tok::Comma)?;
            let b = rule_ref(&mut cur)?;
            cur.expect(&Tok::RParen)?;
            cur.expect(&Tok::Dot)?;
            prefer_refs.push((a, b));
        } else {
            program.rules.push(statement(&mut cur, dialect)?);
        }
    }
    let mut program = canonicalize(&program);
    let resolve = |r: RuleRef, p: &Program| match r {
        RuleRef::Label(l) => l,
        RuleRef::Index(i) => p
            .rules
            .iter()
            .find(|r| r.index == Some(i))
            .and_then(|r| r.label.clone())
            .unwrap_or_else(|| i.to_string()),
    };
    program.prefer = prefer_refs
        .into_iter()
        .map(|(a, b)| (resolve(a, &program), resolve(b, &program)))
        .collect();
    Ok(program)
}

enum RuleRef {
    Label(String),
    Index(usize),
}

fn is_prefer_fact(cur: &Cursor<'_>) -> bool {
    matches!(cur.peek(), Some(Tok::Ident(p)) if p == "prefer")
        && cur.peek_at(1) == Some(&Tok::LParen)
        && matches!(cur.peek_at(2), Some(Tok::Ident(_) | Tok::Int(_)))
        && cur.peek_at(3) == Some(&Tok::Comma)
        && matches!(cur.peek_at(4), Some(Tok::Ident(_) | Tok::Int(_)))
        && cur.peek_at(5) == Some(&Tok::RParen)
        && cur.peek_at(6) == Some(&Tok::Dot)
}

fn rule_ref(cur: &mut Cursor<'_>) -> Result<RuleRef> {
    match cur.peek() {
        Some(Tok::Ident(l)) => {
            cur.next();
            Ok(RuleRef::Label(l.clone()))
        }
        Some(Tok::Int(i)) if *i > 0 => {
            cur.next();
            Ok(RuleRef::Index(*i as usize))
        }
        _ => cur.error("expected a rule label or index"),
    }
}

fn statement(cur: &mut Cursor<'_>, dialect: Dialect) -> Result<Rule> {
    let start = cur.span();
    let label = match (cur.peek(), cur.peek_at(1)) {
        (Some(Tok::Ident(l)), Some(Tok::Colon)) => {
            cur.next();
            cur.next();
            Some(l.clone())
        }
        _ => None,
    };

    let head = head(cur)?;
    let arrow_span = cur.span();
    let arrow = match cur.peek() {
        Some(Tok::If) => Some(Tok::If),
        Some(Tok::CrIf) => Some(Tok::CrIf),
        _ => None,
    };
    if arrow.is_some() {
        cur.next();
    }
    let mut body = Vec::new();
    if arrow.is_some() && cur.peek() != Some(&Tok::Dot) {
        loop {
            body.push(literal(cur)?);
            if !cur.eat(&Tok::Comma) {
                break;
            }
        }
    }
    cur.expect(&Tok::Dot)?;

    let cr = arrow == Some(Tok::CrIf);
    if cr && dialect == Dialect::Lpod {
        return Err(Error::Dialect {
            message: "cr-rules (':+') are only allowed in CR-Prolog2 programs".to_string(),
            span: arrow_span,
        });
    }
    if arrow.is_none() && matches!(head, Head::Falsum) {
        return Err(Error::Syntax {
            message: "expected a head or ':-'".to_string(),
            span: start,
        });
    }
    let kind = match (&head, cr) {
        (Head::Ordered(_), false) => RuleKind::Ordered,
        (Head::Ordered(_), true) => RuleKind::OrderedCr,
        (Head::Atom(_), true) => RuleKind::Cr,
        (_, true) => {
            return Err(Error::Syntax {
                message: "a cr-rule needs a single atom or an ordered disjunction as head"
                    .to_string(),
                span: start,
            })
        }
        _ => RuleKind::Regular,
    };
    if label.is_some() && kind == RuleKind::Regular {
        return Err(Error::Syntax {
            message: "labels are only allowed on cr-rules and ordered rules".to_string(),
            span: start,
        });
    }
    Ok(Rule {
        kind,
        head,
        body,
        label,
        index: None,
    })
}

fn head(cur: &mut Cursor<'_>) -> Result<Head> {
    match cur.peek() {
        Some(Tok::If | Tok::CrIf) => Ok(Head::Falsum),
        Some(Tok::Int(_) | Tok::LBrace) => {
            let lower = bound(cur)?;
            cur.expect(&Tok::LBrace)?;
            let mut atoms = Vec::new();
            if cur.peek() != Some(&Tok::RBrace) {
                loop {
                    atoms.push(atom(cur)?);
                    if !cur.eat(&Tok::Semi) {
                        break;
                    }
                }
            }
            cur.expect(&Tok::RBrace)?;
            let upper = bound(cur)?;
            Ok(Head::Choice {
                lower,
                upper,
                atoms,
            })
        }
        _ => {
            let mut atoms = alloc::vec![atom(cur)?];
            while cur.eat(&Tok::Star) {
                atoms.push(atom(cur)?);
            }
            if atoms.len() == 1 {
                Ok(Head::Atom(atoms.pop().expect("one atom")))
            } else {
                Ok(Head::Ordered(atoms))
            }
        }
    }
}

fn bound(cur: &mut Cursor<'_>) -> Result<Option<u32>> {
    match cur.peek() {
        Some(Tok::Int(v)) => {
            let v = u32::try_from(*v).or_else(|_| cur.error("choice bound out of range"))?;
            cur.next();
            Ok(Some(v))
        }
        _ => Ok(None),
    }
}

fn literal(cur: &mut Cursor<'_>) -> Result<Literal> {
    let negated = matches!(cur.peek(), Some(Tok::Ident(n)) if n == "not")
        && matches!(cur.peek_at(1), Some(Tok::Ident(_) | Tok::Var(_)));
    if negated {
        cur.next();
    }
    Ok(Literal {
        atom: atom(cur)?,
        negated,
    })
}

fn atom(cur: &mut Cursor<'_>) -> Result<Atom> {
    if let Some(Tok::Var(v)) = cur.peek() {
        return cur.error(format!(
            "variable {v} in input program; only ground atoms are supported"
        ));
    }
    let predicate = cur.ident()?;
    if predicate == "not" {
        return cur.error("'not' cannot be used as a predicate name");
    }
    let mut args = Vec::new();
    if cur.eat(&Tok::LParen) {
        loop {
            args.push(term(cur)?);
            if !cur.eat(&Tok::Comma) {
                break;
            }
        }
        cur.expect(&Tok::RParen)?;
    }
    Ok(Atom { predicate, args })
}

fn term(cur: &mut Cursor<'_>) -> Result<Term> {
    match cur.peek() {
        Some(Tok::Int(v)) => {
            let v = *v;
            cur.next();
            Ok(Term::Int(v))
        }
        Some(Tok::Minus) => {
            cur.next();
            match cur.peek() {
                Some(Tok::Int(v)) => {
                    let v = -*v;
                    cur.next();
                    Ok(Term::Int(v))
                }
                _ => cur.error("expected an integer after '-'"),
            }
        }
        Some(Tok::Ident(s)) => {
            let s = s.clone();
            cur.next();
            Ok(Term::Sym(s))
        }
        Some(Tok::Var(v)) => cur.error(format!(
            "variable {v} in input program; only ground atoms are supported"
        )),
        _ => cur.error("expected a constant"),
    }
}

/// Prints `p` in the surface syntax, one statement per line.
pub fn render(p: &Program) -> String {
    let mut out = String::new();
    for r in &p.rules {
        render_rule(&mut out, r);
        out.push('\n');
    }
    for (a, b) in &p.prefer {
        let _ = writeln!(out, "prefer({a}, {b}).");
    }
    out
}

pub fn render_rule(out: &mut String, r: &Rule) {
    if let Some(l) = &r.label {
        let _ = write!(out, "{l}: ");
    }
    match &r.head {
        Head::Atom(a) => {
            let _ = write!(out, "{a}");
        }
        Head::Falsum => {}
        Head::Choice {
            lower,
            upper,
            atoms,
        } => {
            if let Some(l) = lower {
                let _ = write!(out, "{l} ");
            }
            out.push('{');
            for (i, a) in atoms.iter().enumerate() {
                if i > 0 {
                    out.push_str("; ");
                }
                let _ = write!(out, "{a}");
            }
            out.push('}');
            if let Some(u) = upper {
                let _ = write!(out, " {u}");
            }
        }
        Head::Ordered(atoms) => {
            for (i, a) in atoms.iter().enumerate() {
                if i > 0 {
                    out.push_str(" * ");
                }
                let _ = write!(out, "{a}");
            }
        }
    }
    let arrow = if r.kind.is_cr() {
        Some(":+")
    } else if r.body.is_empty() && r.head != Head::Falsum {
        None
    } else {
        Some(":-")
    };
    if let Some(arrow) = arrow {
        if r.head != Head::Falsum {
            out.push(' ');
        }
        out.push_str(arrow);
        for (i, l) in r.body.iter().enumerate() {
            out.push_str(if i == 0 { " " } else { ", " });
            let _ = write!(out, "{l}");
        }
    }
    out.push('.');
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const PI1: &str = "a * b :- not c.  b * c :- not d.";
    const PI3: &str =
        "r1: t :+.  r2: q * s :+.  q :- t.  s :- t.  p :- not q.  r :- not s.  :- p, r.";

    fn a(name: &str) -> Atom {
        Atom::prop(name)
    }

    #[test]
    fn parses_pi1() {
        let p = parse(PI1, Dialect::Lpod).unwrap();
        assert_eq!(p.rules.len(), 2);
        assert!(p.rules.iter().all(|r| r.kind == RuleKind::Ordered));
        assert_eq!(p.rules[0].head, Head::Ordered(vec![a("a"), a("b")]));
        assert_eq!(p.rules[0].body, vec![Literal::neg(a("c"))]);
    }

    #[test]
    fn parses_pi3() {
        let p = parse(PI3, Dialect::Crp2).unwrap();
        assert_eq!(p.rules.len(), 7);
        assert_eq!(p.rules[0].kind, RuleKind::Cr);
        assert_eq!(p.rules[0].label.as_deref(), Some("r1"));
        assert_eq!(p.rules[1].kind, RuleKind::OrderedCr);
        assert_eq!(p.rules[6].head, Head::Falsum);
        assert_eq!(p.rules[6].body.len(), 2);
        assert!(p.rules[0].body.is_empty());
    }

    #[test]
    fn empty_input() {
        let p = parse("", Dialect::Lpod).unwrap();
        assert!(p.rules.is_empty());
        assert_eq!(render(&p), "");
        assert!(parse("  % only a comment\n", Dialect::Crp2)
            .unwrap()
            .rules
            .is_empty());
    }

    #[test]
    fn cr_arrow_rejected_in_lpod() {
        match parse("a :- b.\nt :+.", Dialect::Lpod) {
            Err(Error::Dialect { span, .. }) => {
                assert_eq!(span.line, 2);
                assert_eq!(span.column, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn prefer_facts() {
        let p = parse(&format!("{PI3} prefer(r2, r1)."), Dialect::Crp2).unwrap();
        assert_eq!(p.prefer, vec![("r2".to_string(), "r1".to_string())]);
        assert_eq!(p.prefer_indices(), vec![(2, 1)]);
        // numeric references resolve through the canonical indices
        let q = parse("t :+. q * s :+. prefer(2,1).", Dialect::Crp2).unwrap();
        assert_eq!(q.prefer_indices(), vec![(2, 1)]);
        assert!(matches!(
            parse("prefer(a, b).", Dialect::Lpod),
            Err(Error::Dialect { .. })
        ));
    }

    #[test]
    fn choice_heads_and_arguments() {
        let p = parse(
            "1 {hotel(1); hotel(2); hotel(3)} 1.  {x}.  :- hotel(1), not close.",
            Dialect::Lpod,
        )
        .unwrap();
        assert_eq!(
            p.rules[0].head,
            Head::Choice {
                lower: Some(1),
                upper: Some(1),
                atoms: vec![
                    Atom::new("hotel", vec![Term::Int(1)]),
                    Atom::new("hotel", vec![Term::Int(2)]),
                    Atom::new("hotel", vec![Term::Int(3)]),
                ]
            }
        );
        assert_eq!(
            p.rules[1].head,
            Head::Choice {
                lower: None,
                upper: None,
                atoms: vec![a("x")]
            }
        );
    }

    #[test]
    fn variables_are_rejected() {
        let err = parse("p(X) :- q(X).", Dialect::Lpod).unwrap_err();
        match err {
            Error::Syntax { span, message } => {
                assert_eq!(span.start, 2);
                assert!(message.contains("variable X"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_spans_inside_input() {
        for text in ["a :- .b", "a * :- c.", "1 {a; b 1.", "a :- not.", "a b."] {
            match parse(text, Dialect::Lpod) {
                Err(Error::Syntax { span, .. }) => assert!(span.end <= text.len(), "{text}"),
                other => panic!("{text}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn missing_dot_is_an_error() {
        assert!(parse("a :- b", Dialect::Lpod).is_err());
    }

    #[test]
    fn round_trip_examples() {
        for (text, d) in [(PI1, Dialect::Lpod), (PI3, Dialect::Crp2)] {
            let p = parse(text, d).unwrap();
            let back = parse(&render(&p), d).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn render_pi3_has_two_cr_arrows() {
        let p = parse(PI3, Dialect::Crp2).unwrap();
        let text = render(&p);
        assert_eq!(text.matches(":+").count(), 2);
        assert!(text.contains("r1: t :+."));
        assert!(text.contains(":- p, r."));
    }

    #[test]
    fn render_negative_constants() {
        let p = parse("a(-1, b) :- c(0).", Dialect::Lpod).unwrap();
        assert_eq!(render(&p), "a(-1,b) :- c(0).\n");
    }

    #[test]
    fn labels_on_regular_rules_are_rejected() {
        assert!(parse("x: a :- b.", Dialect::Lpod).is_err());
    }
}
