//! lpod2asp and crp2asp: programs to ASP documents with weak constraints.
//!
//! Every atom `a(v)` of the source becomes `a(v, X1, ..., Xm)`, where the
//! `Xi` range over the assumption degrees of the `m` indexed rules.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::asp::{
    AggElement, Aggregate, AspDocument, AspHead, AspLiteral, AspTerm, AtomPat, BodyElem, CmpOp, Schema,
    Statement,
};
use crate::error::{Error, Result, SourceSpan};
use crate::lpod::PreferenceCriterion;
use crate::model::{validate_program, Atom, Dialect, Head, Literal, Program, Rule, RuleKind};

fn var(name: String) -> AspTerm {
    AspTerm::Var(name)
}

fn int(v: usize) -> AspTerm {
    AspTerm::Int(v as i64)
}

fn vars(prefix: &str, m: usize) -> Vec<AspTerm> {
    (1..=m).map(|i| var(format!("{prefix}{i}"))).collect()
}

fn xs(m: usize) -> Vec<AspTerm> {
    vars("X", m)
}

fn ap(args: Vec<AspTerm>) -> AtomPat {
    AtomPat::new("ap", args)
}

fn ap_term(args: Vec<AspTerm>) -> AspTerm {
    AspTerm::Func("ap".into(), args)
}

fn pos(a: AtomPat) -> BodyElem {
    BodyElem::Lit(AspLiteral::pos(a))
}

fn neg(a: AtomPat) -> BodyElem {
    BodyElem::Lit(AspLiteral::neg(a))
}

fn cmp(l: AspTerm, op: CmpOp, r: AspTerm) -> BodyElem {
    BodyElem::Lit(AspLiteral::cmp(l, op, r))
}

fn x(i: usize) -> AspTerm {
    var(format!("X{i}"))
}

fn ext(a: &Atom, m: usize) -> AtomPat {
    AtomPat::extend(a, &xs(m))
}

fn ext_lit(l: &Literal, m: usize) -> BodyElem {
    if l.negated {
        neg(ext(&l.atom, m))
    } else {
        pos(ext(&l.atom, m))
    }
}

fn require(p: &Program, dialect: Dialect) -> Result<()> {
    if p.dialect != dialect {
        return Err(Error::Dialect {
            message: format!("expected a {dialect:?} program"),
            span: SourceSpan::default(),
        });
    }
    let report = validate_program(p);
    if let Some(v) = report.violations.first() {
        return Err(Error::Dialect {
            message: format!("{v}"),
            span: SourceSpan::default(),
        });
    }
    Ok(())
}

/// `{ap(X1,...,Xm): X1=lo1..hi1, ...}.` and its weak constraint.
fn ap_generator(doc: &mut AspDocument, domains: &[(usize, usize)]) {
    let m = domains.len();
    let cond = domains
        .iter()
        .enumerate()
        .map(|(i, &(lo, hi))| AspLiteral::cmp(x(i + 1), CmpOp::Eq, AspTerm::range(int(lo), int(hi))))
        .collect();
    doc.push(
        Schema::ApChoice,
        Statement::Rule {
            head: AspHead::Choice(Aggregate {
                lower: None,
                upper: None,
                elements: vec![AggElement {
                    lit: AspLiteral::pos(ap(xs(m))),
                    cond,
                }],
            }),
            body: Vec::new(),
        },
    );
    doc.push(
        Schema::ApWeak,
        Statement::Weak {
            body: vec![pos(ap(xs(m)))],
            weight: AspTerm::Int(-1),
            terms: xs(m),
        },
    );
}

/// Choice elements, folding `p(..,lo,..); ...; p(..,hi,..)` into
/// `p(..,V,..): V=lo..hi` when the atoms differ in one integer position.
fn choice_elements(atoms: &[Atom], m: usize) -> Vec<AggElement> {
    if let Some((at, lo, hi)) = consecutive_position(atoms) {
        let first = &atoms[0];
        let v: String = first
            .predicate
            .chars()
            .next()
            .map(|c| c.to_ascii_uppercase())
            .into_iter()
            .collect();
        let mut pattern = ext(first, m);
        pattern.args[at] = var(v.clone());
        return vec![AggElement {
            lit: AspLiteral::pos(pattern),
            cond: vec![AspLiteral::cmp(
                var(v),
                CmpOp::Eq,
                AspTerm::range(AspTerm::Int(lo), AspTerm::Int(hi)),
            )],
        }];
    }
    atoms
        .iter()
        .map(|a| AggElement::plain(AspLiteral::pos(ext(a, m))))
        .collect()
}

fn consecutive_position(atoms: &[Atom]) -> Option<(usize, i64, i64)> {
    let first = atoms.first()?;
    if atoms.len() < 2 || first.args.is_empty() {
        return None;
    }
    if atoms
        .iter()
        .any(|a| a.predicate != first.predicate || a.args.len() != first.args.len())
    {
        return None;
    }
    let differing: Vec<usize> = (0..first.args.len())
        .filter(|&k| atoms.iter().any(|a| a.args[k] != first.args[k]))
        .collect();
    let [at] = differing[..] else { return None };
    let values: Vec<i64> = atoms.iter().map(|a| a.args[at].as_int()).collect::<Option<_>>()?;
    let lo = values[0];
    if values.iter().enumerate().any(|(j, &v)| v != lo + j as i64) {
        return None;
    }
    Some((at, lo, lo + values.len() as i64 - 1))
}

/// `Head(X) :- ap(X), Body(X).` for a regular rule.
fn regular_rule(r: &Rule, m: usize) -> Statement {
    let mut body = vec![pos(ap(xs(m)))];
    body.extend(r.body.iter().map(|l| ext_lit(l, m)));
    let head = match &r.head {
        Head::Atom(a) => AspHead::Atom(ext(a, m)),
        Head::Falsum => AspHead::Falsum,
        Head::Choice {
            lower,
            upper,
            atoms,
        } => AspHead::Choice(Aggregate {
            lower: lower.map(|v| AspTerm::Int(v.into())),
            upper: upper.map(|v| AspTerm::Int(v.into())),
            elements: choice_elements(atoms, m),
        }),
        Head::Ordered(_) => unreachable!("ordered head on a regular rule"),
    };
    Statement::Rule { head, body }
}

fn ordered_head(r: &Rule) -> &[Atom] {
    match &r.head {
        Head::Ordered(atoms) => atoms,
        _ => &[],
    }
}

/// The base part of lpod2asp, without `#const`.
pub fn lpod2asp_base(p: &Program) -> Result<AspDocument> {
    require(p, Dialect::Lpod)?;
    let rules = p.indexed_rules();
    let m = rules.len();
    if m == 0 {
        return Err(Error::DegenerateProgram);
    }
    let sizes = p.head_sizes();
    let mut doc = AspDocument::new();
    ap_generator(&mut doc, &sizes.iter().map(|&n| (0, n)).collect::<Vec<_>>());

    for r in p.regular_rules() {
        doc.push(Schema::Regular, regular_rule(r, m));
    }

    for (i0, r) in rules.iter().enumerate() {
        let i = i0 + 1;
        let body_i = AtomPat::new(format!("body_{i}"), xs(m));
        let mut def = vec![pos(ap(xs(m)))];
        def.extend(r.body.iter().map(|l| ext_lit(l, m)));
        doc.push(Schema::BodyDef, Statement::rule(body_i.clone(), def));
        doc.push(
            Schema::BodyFalse,
            Statement::constraint(vec![
                pos(ap(xs(m))),
                cmp(x(i), CmpOp::Eq, int(0)),
                pos(body_i.clone()),
            ]),
        );
        doc.push(
            Schema::BodyTrue,
            Statement::constraint(vec![
                pos(ap(xs(m))),
                cmp(x(i), CmpOp::Gt, int(0)),
                neg(body_i.clone()),
            ]),
        );
        let head = ordered_head(r);
        for (j0, c) in head.iter().enumerate() {
            doc.push(
                Schema::OptionHead,
                Statement::rule(ext(c, m), vec![pos(body_i.clone()), cmp(x(i), CmpOp::Eq, int(j0 + 1))]),
            );
        }
        for (j0, c) in head.iter().enumerate() {
            let mut body = vec![pos(body_i.clone()), cmp(x(i), CmpOp::Neq, int(j0 + 1))];
            body.extend(head[..j0].iter().map(|a| neg(ext(a, m))));
            body.push(pos(ext(c, m)));
            doc.push(Schema::FirstTrue, Statement::constraint(body));
        }
    }

    let ds = vars("D", m);
    let degree = || {
        let mut args = vec![ap_term(xs(m))];
        args.extend(ds.iter().cloned());
        AtomPat::new("degree", args)
    };
    doc.push(
        Schema::DegreeChoice,
        Statement::Rule {
            head: AspHead::Choice(Aggregate {
                lower: Some(AspTerm::Int(1)),
                upper: Some(AspTerm::Int(1)),
                elements: vec![AggElement {
                    lit: AspLiteral::pos(degree()),
                    cond: ds
                        .iter()
                        .zip(&sizes)
                        .map(|(d, &n)| AspLiteral::cmp(d.clone(), CmpOp::Eq, AspTerm::range(int(1), int(n))))
                        .collect(),
                }],
            }),
            body: vec![pos(ap(xs(m)))],
        },
    );
    for i in 1..=m {
        let d = var(format!("D{i}"));
        doc.push(
            Schema::DegreeDefault,
            Statement::constraint(vec![
                pos(degree()),
                cmp(x(i), CmpOp::Eq, int(0)),
                cmp(d.clone(), CmpOp::Neq, int(1)),
            ]),
        );
        doc.push(
            Schema::DegreeMatch,
            Statement::constraint(vec![pos(degree()), cmp(x(i), CmpOp::Gt, int(0)), cmp(d, CmpOp::Neq, x(i))]),
        );
    }
    debug_assert_eq!(
        doc.statements.len(),
        2 + p.regular_rules().count() + sizes.iter().map(|n| 3 + 2 * n).sum::<usize>() + 1 + 2 * m
    );
    Ok(doc)
}

fn p_var(i: usize) -> AspTerm {
    var(format!("P{i}"))
}

fn degree_of(p: AspTerm, ds: Vec<AspTerm>) -> AtomPat {
    let mut args = vec![p];
    args.extend(ds);
    AtomPat::new("degree", args)
}

fn atom(pred: &str, args: Vec<AspTerm>) -> AtomPat {
    AtomPat::new(pred, args)
}

fn maxdegree() -> AspTerm {
    AspTerm::konst("maxdegree")
}

/// `prf(P1,P2) :- X=0..maxdegree-1, prf2degree(P1,P2,X+1), X{equ2degree(P1,P2,Y): Y=1..X}.`
fn lexicographic_prf() -> Statement {
    let xv = || var("X".into());
    Statement::rule(
        atom("prf", vec![p_var(1), p_var(2)]),
        vec![
            cmp(
                xv(),
                CmpOp::Eq,
                AspTerm::range(
                    AspTerm::Int(0),
                    AspTerm::op(crate::asp::ArithOp::Sub, maxdegree(), AspTerm::Int(1)),
                ),
            ),
            pos(atom(
                "prf2degree",
                vec![
                    p_var(1),
                    p_var(2),
                    AspTerm::op(crate::asp::ArithOp::Add, xv(), AspTerm::Int(1)),
                ],
            )),
            BodyElem::Agg(Aggregate {
                lower: Some(xv()),
                upper: None,
                elements: vec![AggElement {
                    lit: AspLiteral::pos(atom("equ2degree", vec![p_var(1), p_var(2), var("Y".into())])),
                    cond: vec![AspLiteral::cmp(
                        var("Y".into()),
                        CmpOp::Eq,
                        AspTerm::range(AspTerm::Int(1), xv()),
                    )],
                }],
            }),
        ],
    )
}

/// `pAS(X) :- ap(X), {prf(P, ap(X))}0.`
fn pas_rule(m: usize) -> Statement {
    Statement::rule(
        atom("pAS", xs(m)),
        vec![
            pos(ap(xs(m))),
            BodyElem::Agg(Aggregate {
                lower: None,
                upper: Some(AspTerm::Int(0)),
                elements: vec![AggElement::plain(AspLiteral::pos(atom(
                    "prf",
                    vec![var("P".into()), ap_term(xs(m))],
                )))],
            }),
        ],
    )
}

/// The preference block of one criterion, without the base rules.
pub fn preference_block(p: &Program, c: PreferenceCriterion) -> Result<AspDocument> {
    require(p, Dialect::Lpod)?;
    let m = p.indexed_count();
    if m == 0 {
        return Err(Error::DegenerateProgram);
    }
    let mut doc = AspDocument::new();
    let maxd = p.head_sizes().into_iter().max().unwrap_or(0);
    doc.set_constant("maxdegree", maxd as i64);
    let xv = || var("X".into());
    let d1 = vars("D1", m);
    let d2 = vars("D2", m);
    let push = |doc: &mut AspDocument, s: Statement| doc.push(Schema::Preference, s);
    let eq_x = |d: &AspTerm| AspLiteral::cmp(d.clone(), CmpOp::Eq, var("X".into()));
    let x_range = || cmp(xv(), CmpOp::Eq, AspTerm::range(AspTerm::Int(1), maxdegree()));
    match c {
        PreferenceCriterion::Cardinality => {
            let ds = vars("D", m);
            let (n, n1, n2) = (var("N".into()), var("N1".into()), var("N2".into()));
            push(
                &mut doc,
                Statement::rule(
                    atom("card", vec![var("P".into()), xv(), n.clone()]),
                    vec![
                        pos(degree_of(var("P".into()), ds.clone())),
                        x_range(),
                        BodyElem::Count {
                            var: "N".into(),
                            elements: ds.iter().map(|d| AggElement::plain(eq_x(d))).collect(),
                        },
                    ],
                ),
            );
            push(
                &mut doc,
                Statement::rule(
                    atom("equ2degree", vec![p_var(1), p_var(2), xv()]),
                    vec![
                        pos(atom("card", vec![p_var(1), xv(), n.clone()])),
                        pos(atom("card", vec![p_var(2), xv(), n])),
                        cmp(p_var(1), CmpOp::Neq, p_var(2)),
                    ],
                ),
            );
            push(
                &mut doc,
                Statement::rule(
                    atom("prf2degree", vec![p_var(1), p_var(2), xv()]),
                    vec![
                        pos(atom("card", vec![p_var(1), xv(), n1.clone()])),
                        pos(atom("card", vec![p_var(2), xv(), n2.clone()])),
                        cmp(n1, CmpOp::Gt, n2),
                    ],
                ),
            );
            push(&mut doc, lexicographic_prf());
        }
        PreferenceCriterion::Inclusion => {
            push(
                &mut doc,
                Statement::rule(
                    atom("even", vec![AspTerm::Pool(vec![AspTerm::Int(0), AspTerm::Int(2)])]),
                    Vec::new(),
                ),
            );
            let mut equ = vec![
                cmp(p_var(1), CmpOp::Neq, p_var(2)),
                x_range(),
                pos(degree_of(p_var(1), d1.clone())),
                pos(degree_of(p_var(2), d2.clone())),
            ];
            for i in 0..m {
                equ.push(BodyElem::Count {
                    var: format!("C{}", i + 1),
                    elements: vec![AggElement::plain(eq_x(&d1[i])), AggElement::plain(eq_x(&d2[i]))],
                });
            }
            for i in 0..m {
                equ.push(pos(atom("even", vec![var(format!("C{}", i + 1))])));
            }
            push(
                &mut doc,
                Statement::rule(atom("equ2degree", vec![p_var(1), p_var(2), xv()]), equ),
            );
            let mut prf2 = vec![
                cmp(p_var(1), CmpOp::Neq, p_var(2)),
                x_range(),
                neg(atom("equ2degree", vec![p_var(1), p_var(2), xv()])),
                pos(degree_of(p_var(1), d1.clone())),
                pos(degree_of(p_var(2), d2.clone())),
            ];
            for i in 0..m {
                prf2.push(BodyElem::Agg(Aggregate {
                    lower: None,
                    upper: Some(AspTerm::Int(1)),
                    elements: vec![
                        AggElement::plain(AspLiteral::cmp(d1[i].clone(), CmpOp::Neq, xv())),
                        AggElement::plain(eq_x(&d2[i])),
                    ],
                }));
            }
            push(
                &mut doc,
                Statement::rule(atom("prf2degree", vec![p_var(1), p_var(2), xv()]), prf2),
            );
            push(&mut doc, lexicographic_prf());
        }
        PreferenceCriterion::Pareto => {
            let ds = vars("D", m);
            push(
                &mut doc,
                Statement::rule(
                    atom("equ", vec![p_var(1), p_var(2)]),
                    vec![pos(degree_of(p_var(1), ds.clone())), pos(degree_of(p_var(2), ds))],
                ),
            );
            let mut body = vec![
                pos(degree_of(p_var(1), d1.clone())),
                pos(degree_of(p_var(2), d2.clone())),
                neg(atom("equ", vec![p_var(1), p_var(2)])),
            ];
            body.extend(d1.iter().zip(&d2).map(|(a, b)| cmp(a.clone(), CmpOp::Le, b.clone())));
            push(&mut doc, Statement::rule(atom("prf", vec![p_var(1), p_var(2)]), body));
        }
        PreferenceCriterion::PenaltySum => {
            let ds = vars("D", m);
            let sum = ds[1..].iter().fold(ds[0].clone(), |acc, d| {
                AspTerm::op(crate::asp::ArithOp::Add, acc, d.clone())
            });
            push(
                &mut doc,
                Statement::rule(
                    atom("sum", vec![var("P".into()), var("N".into())]),
                    vec![
                        pos(degree_of(var("P".into()), ds)),
                        cmp(var("N".into()), CmpOp::Eq, sum),
                    ],
                ),
            );
            push(
                &mut doc,
                Statement::rule(
                    atom("prf", vec![p_var(1), p_var(2)]),
                    vec![
                        pos(atom("sum", vec![p_var(1), var("N1".into())])),
                        pos(atom("sum", vec![p_var(2), var("N2".into())])),
                        cmp(var("N1".into()), CmpOp::Lt, var("N2".into())),
                    ],
                ),
            );
        }
    }
    push(&mut doc, pas_rule(m));
    Ok(doc)
}

/// Base document followed by the preference block of `c`. The block is
/// appended to the base; `#const maxdegree` heads the document.
pub fn lpod2asp_pref(p: &Program, c: PreferenceCriterion) -> Result<AspDocument> {
    let mut doc = lpod2asp_base(p)?;
    doc.extend(preference_block(p, c)?);
    Ok(doc)
}

/// The complete lpod2asp translation under `c`.
pub fn lpod2asp(p: &Program, c: PreferenceCriterion) -> Result<AspDocument> {
    lpod2asp_pref(p, c)
}

/// Pairs `(r1, r2)` with `isPreferred(r1, r2)` derivable from the prefer
/// facts, `r1 != r2`. Other pairs never make the rule-wise rules fire.
fn preferred_pairs(p: &Program) -> Vec<(usize, usize)> {
    let mut closure: BTreeSet<(usize, usize)> = p.prefer_indices().into_iter().collect();
    loop {
        let mut next = closure.clone();
        for &(a, b) in &closure {
            for &(c, d) in &closure {
                if b == c {
                    next.insert((a, d));
                }
            }
        }
        if next == closure {
            break;
        }
        closure = next;
    }
    // keep the order in which prefer facts were written, then the derived ones
    let mut out: Vec<(usize, usize)> = Vec::new();
    for pair in p.prefer_indices().into_iter().chain(closure) {
        if pair.0 != pair.1 && !out.contains(&pair) {
            out.push(pair);
        }
    }
    out
}

/// The crp2asp translation.
pub fn crp2asp(p: &Program) -> Result<AspDocument> {
    require(p, Dialect::Crp2)?;
    let rules = p.indexed_rules();
    let m = rules.len();
    let domains: Vec<(usize, usize)> = rules
        .iter()
        .map(|r| match r.kind {
            RuleKind::Cr => (0, 1),
            RuleKind::OrderedCr => (0, r.head_len()),
            _ => (1, r.head_len()),
        })
        .collect();
    let mut doc = AspDocument::new();
    ap_generator(&mut doc, &domains);

    for r in p.regular_rules() {
        doc.push(Schema::Regular, regular_rule(r, m));
    }
    let with_body = |r: &Rule, i: usize, j: usize| -> Vec<BodyElem> {
        let mut body = vec![pos(ap(xs(m)))];
        body.extend(r.body.iter().map(|l| ext_lit(l, m)));
        body.push(cmp(x(i), CmpOp::Eq, int(j)));
        body
    };
    for (i0, r) in rules.iter().enumerate() {
        if r.kind == RuleKind::Cr {
            let Head::Atom(h) = &r.head else {
                return Err(Error::Unsupported("cr-rule without an atom head".into()));
            };
            doc.push(Schema::CrHead, Statement::rule(ext(h, m), with_body(r, i0 + 1, 1)));
        }
    }
    for (i0, r) in rules.iter().enumerate() {
        if r.kind.is_ordered() {
            for (j0, c) in ordered_head(r).iter().enumerate() {
                doc.push(Schema::ChoiceHead, Statement::rule(ext(c, m), with_body(r, i0 + 1, j0 + 1)));
            }
        }
    }

    let ys = vars("Y", m);
    let dominate = || atom("dominate", vec![ap_term(xs(m)), ap_term(ys.clone())]);
    // once any rule is ordered, every index gets a rule; for a cr-rule the
    // domain is 0..1 and its rule never fires
    let dominance = if rules.iter().any(|r| r.kind.is_ordered()) { m } else { 0 };
    for i in 1..=dominance {
        let yi = var(format!("Y{i}"));
        doc.push(
            Schema::AtomDominance,
            Statement::rule(
                dominate(),
                vec![
                    pos(ap(xs(m))),
                    pos(ap(ys.clone())),
                    cmp(AspTerm::Int(0), CmpOp::Lt, x(i)),
                    cmp(x(i), CmpOp::Lt, yi),
                ],
            ),
        );
    }

    if !p.prefer.is_empty() {
        let with_x = |head: Vec<AspTerm>| {
            let mut a = head;
            a.extend(xs(m));
            a
        };
        for (a, b) in p.prefer_indices() {
            doc.push(
                Schema::PreferFact,
                Statement::rule(atom("prefer", with_x(vec![int(a), int(b)])), vec![pos(ap(xs(m)))]),
            );
        }
        let r = |n: &str| var(n.into());
        doc.push(
            Schema::Closure,
            Statement::rule(
                atom("isPreferred", with_x(vec![r("R1"), r("R2")])),
                vec![pos(atom("prefer", with_x(vec![r("R1"), r("R2")])))],
            ),
        );
        doc.push(
            Schema::Closure,
            Statement::rule(
                atom("isPreferred", with_x(vec![r("R1"), r("R3")])),
                vec![
                    pos(atom("prefer", with_x(vec![r("R1"), r("R2")]))),
                    pos(atom("isPreferred", with_x(vec![r("R2"), r("R3")]))),
                ],
            ),
        );
        doc.push(
            Schema::Irreflexive,
            Statement::constraint(vec![pos(atom("isPreferred", with_x(vec![r("R"), r("R")])))]),
        );
        let pairs = preferred_pairs(p);
        for &(r1, r2) in &pairs {
            doc.push(
                Schema::PreferConflict,
                Statement::constraint(vec![
                    pos(atom("isPreferred", with_x(vec![int(r1), int(r2)]))),
                    cmp(x(r1), CmpOp::Gt, AspTerm::Int(0)),
                    cmp(x(r2), CmpOp::Gt, AspTerm::Int(0)),
                ]),
            );
        }
        for &(r1, r2) in &pairs {
            let mut with_y = vec![int(r1), int(r2)];
            with_y.extend(ys.iter().cloned());
            doc.push(
                Schema::RuleDominance,
                Statement::rule(
                    dominate(),
                    vec![
                        pos(ap(xs(m))),
                        pos(ap(ys.clone())),
                        pos(atom("isPreferred", with_x(vec![int(r1), int(r2)]))),
                        pos(atom("isPreferred", with_y)),
                        cmp(x(r1), CmpOp::Gt, AspTerm::Int(0)),
                        cmp(var(format!("Y{r2}")), CmpOp::Gt, AspTerm::Int(0)),
                    ],
                ),
            );
        }
    }

    doc.push(
        Schema::Candidate,
        Statement::rule(
            atom("candidate", xs(m)),
            vec![
                pos(ap(xs(m))),
                BodyElem::Agg(Aggregate {
                    lower: None,
                    upper: Some(AspTerm::Int(0)),
                    elements: vec![AggElement::plain(AspLiteral::pos(atom(
                        "dominate",
                        vec![var("P".into()), ap_term(xs(m))],
                    )))],
                }),
            ],
        ),
    );
    let mut less = vec![
        pos(atom("candidate", xs(m))),
        pos(atom("candidate", ys.clone())),
        BodyElem::Agg(Aggregate {
            lower: Some(AspTerm::Int(1)),
            upper: None,
            elements: (1..=m)
                .map(|i| AggElement::plain(AspLiteral::cmp(x(i), CmpOp::Neq, var(format!("Y{i}")))))
                .collect(),
        }),
    ];
    less.extend((1..=m).map(|i| cmp(x(i), CmpOp::Le, var(format!("Y{i}")))));
    doc.push(
        Schema::LessApplied,
        Statement::rule(atom("lessCrRulesApplied", vec![ap_term(xs(m)), ap_term(ys.clone())]), less),
    );
    doc.push(
        Schema::Preferred,
        Statement::rule(
            atom("pAS", xs(m)),
            vec![
                pos(atom("candidate", xs(m))),
                BodyElem::Agg(Aggregate {
                    lower: None,
                    upper: Some(AspTerm::Int(0)),
                    elements: vec![AggElement::plain(AspLiteral::pos(atom(
                        "lessCrRulesApplied",
                        vec![var("P".into()), ap_term(xs(m))],
                    )))],
                }),
            ],
        ),
    );
    Ok(doc)
}
