//! Bottom-up instantiation of ASP documents.
//!
//! Grounding runs in two passes. The first computes the set of atoms that
//! may become true, treating negation and atom aggregates as satisfiable.
//! The second instantiates every statement against that set: positive body
//! atoms must be in it, negative literals on atoms outside it are dropped,
//! and aggregates over comparisons are decided on the spot.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{AggElement, Aggregate, ArithOp, AspHead, AspLiteral, AspTerm, AtomPat, BodyElem, Statement};
use crate::engine::{self, AggElem, GroundBody, GroundHead, GroundProgram, GroundRule, WeakConstraint};
use crate::error::{Error, Result};
use crate::model::{Atom, Term};

pub type Binding = BTreeMap<String, Term>;

#[derive(Clone, Debug, Default)]
pub struct GroundOptions {
    /// `#const` values.
    pub constants: Vec<(String, i64)>,
    /// Atoms added as facts.
    pub facts: Vec<Atom>,
    /// Variables fixed in every statement before grounding.
    pub binding: Binding,
}

/// Evaluates a term with every variable bound.
pub fn eval_term(t: &AspTerm, b: &Binding) -> Result<Term> {
    match t {
        AspTerm::Int(v) => Ok(Term::Int(*v)),
        AspTerm::Const(s) => Ok(Term::Sym(s.clone())),
        AspTerm::Var(v) => b
            .get(v)
            .cloned()
            .ok_or_else(|| Error::Grounding(format!("unbound variable {v}"))),
        AspTerm::Func(f, args) => Ok(Term::Func(
            f.clone(),
            args.iter().map(|a| eval_term(a, b)).collect::<Result<_>>()?,
        )),
        AspTerm::BinOp(op, l, r) => {
            let (l, r) = (eval_int(l, b)?, eval_int(r, b)?);
            let v = match op {
                ArithOp::Add => l.checked_add(r),
                ArithOp::Sub => l.checked_sub(r),
                ArithOp::Mul => l.checked_mul(r),
            };
            v.map(Term::Int)
                .ok_or_else(|| Error::Grounding("arithmetic overflow".to_string()))
        }
        AspTerm::Range(..) | AspTerm::Pool(_) => Err(Error::Grounding(format!(
            "interval or pool {t} in an unsupported position"
        ))),
    }
}

fn eval_int(t: &AspTerm, b: &Binding) -> Result<i64> {
    match eval_term(t, b)? {
        Term::Int(v) => Ok(v),
        other => Err(Error::Grounding(format!("{other} is not an integer"))),
    }
}

/// Values of a term that may be an interval or a pool.
fn eval_many(t: &AspTerm, b: &Binding) -> Result<Vec<Term>> {
    match t {
        AspTerm::Range(lo, hi) => Ok((eval_int(lo, b)?..=eval_int(hi, b)?).map(Term::Int).collect()),
        AspTerm::Pool(items) => {
            let mut out = Vec::new();
            for i in items {
                out.extend(eval_many(i, b)?);
            }
            Ok(out)
        }
        _ => Ok(vec![eval_term(t, b)?]),
    }
}

fn bound(t: &AspTerm, b: &Binding) -> bool {
    let mut vs = Vec::new();
    t.vars(&mut vs);
    vs.iter().all(|v| b.contains_key(*v))
}

fn lit_bound(l: &AspLiteral, b: &Binding) -> bool {
    let mut vs = Vec::new();
    l.vars(&mut vs);
    vs.iter().all(|v| b.contains_key(*v))
}

/// Whether every arithmetic subterm of `t` can be evaluated.
fn matchable(t: &AspTerm, b: &Binding) -> bool {
    match t {
        AspTerm::Var(_) | AspTerm::Int(_) | AspTerm::Const(_) => true,
        AspTerm::Func(_, args) => args.iter().all(|a| matchable(a, b)),
        AspTerm::BinOp(..) => bound(t, b),
        AspTerm::Range(..) | AspTerm::Pool(_) => false,
    }
}

fn match_term(pat: &AspTerm, t: &Term, b: &mut Binding) -> Result<bool> {
    Ok(match (pat, t) {
        (AspTerm::Var(v), _) => match b.get(v) {
            Some(old) => old == t,
            None => {
                b.insert(v.clone(), t.clone());
                true
            }
        },
        (AspTerm::Int(p), Term::Int(v)) => p == v,
        (AspTerm::Const(p), Term::Sym(s)) => p == s,
        (AspTerm::Func(f, pargs), Term::Func(g, args)) => {
            if f != g || pargs.len() != args.len() {
                return Ok(false);
            }
            for (p, a) in pargs.iter().zip(args) {
                if !match_term(p, a, b)? {
                    return Ok(false);
                }
            }
            true
        }
        (AspTerm::BinOp(..), _) => eval_term(pat, b)? == *t,
        _ => false,
    })
}

fn ground_atom(a: &AtomPat, b: &Binding) -> Result<Atom> {
    Ok(Atom {
        predicate: a.predicate.clone(),
        args: a.args.iter().map(|t| eval_term(t, b)).collect::<Result<_>>()?,
    })
}

/// Instances of an atom whose arguments may hold pools or intervals.
fn ground_atoms(a: &AtomPat, b: &Binding) -> Result<Vec<Atom>> {
    let mut out: Vec<Vec<Term>> = vec![Vec::new()];
    for t in &a.args {
        let values = eval_many(t, b)?;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|args| Atom {
            predicate: a.predicate.clone(),
            args,
        })
        .collect())
}

#[derive(Default)]
struct Domain {
    set: BTreeSet<Atom>,
    by_pred: BTreeMap<(String, usize), Vec<Atom>>,
}

impl Domain {
    fn insert(&mut self, a: Atom) -> bool {
        if self.set.contains(&a) {
            return false;
        }
        self.by_pred
            .entry((a.predicate.clone(), a.args.len()))
            .or_default()
            .push(a.clone());
        self.set.insert(a);
        true
    }

    fn candidates(&self, a: &AtomPat) -> &[Atom] {
        self.by_pred
            .get(&(a.predicate.clone(), a.args.len()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// Enumerates bindings extending `b` that satisfy `lits`, matching positive
/// atoms against the domain.
fn enum_lits(lits: &[&AspLiteral], b: &Binding, dom: &Domain, out: &mut Vec<Binding>) -> Result<()> {
    if lits.is_empty() {
        out.push(b.clone());
        return Ok(());
    }
    for (i, l) in lits.iter().enumerate() {
        let rest: Vec<&AspLiteral> = lits
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, l)| *l)
            .collect();
        match step_literal(l, b, dom)? {
            None => continue,
            Some(next) => {
                for nb in next {
                    enum_lits(&rest, &nb, dom, out)?;
                }
                return Ok(());
            }
        }
    }
    Err(Error::Grounding(format!(
        "unsafe condition {}",
        lits.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
    )))
}

/// One literal under `b`: `None` if it cannot be evaluated yet, otherwise
/// the extended bindings that satisfy it.
fn step_literal(l: &AspLiteral, b: &Binding, dom: &Domain) -> Result<Option<Vec<Binding>>> {
    match l {
        AspLiteral::Atom {
            atom,
            negated: false,
        } => {
            if !atom.args.iter().all(|t| matchable(t, b)) {
                return Ok(None);
            }
            let mut out = Vec::new();
            if lit_bound(l, b) {
                if dom.set.contains(&ground_atom(atom, b)?) {
                    out.push(b.clone());
                }
                return Ok(Some(out));
            }
            for cand in dom.candidates(atom) {
                let mut nb = b.clone();
                let mut ok = true;
                for (p, t) in atom.args.iter().zip(&cand.args) {
                    if !match_term(p, t, &mut nb)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.push(nb);
                }
            }
            Ok(Some(out))
        }
        AspLiteral::Atom {
            atom,
            negated: true,
        } => {
            if !lit_bound(l, b) {
                return Ok(None);
            }
            let holds = !dom.set.contains(&ground_atom(atom, b)?);
            Ok(Some(if holds { vec![b.clone()] } else { Vec::new() }))
        }
        AspLiteral::Cmp { left, op, right } => {
            let (lb, rb) = (bound(left, b), bound(right, b));
            if lb && rb {
                let holds = match (op, right) {
                    (super::CmpOp::Eq, AspTerm::Range(..) | AspTerm::Pool(_)) => {
                        eval_many(right, b)?.contains(&eval_term(left, b)?)
                    }
                    _ => op.test(&eval_term(left, b)?, &eval_term(right, b)?),
                };
                return Ok(Some(if holds { vec![b.clone()] } else { Vec::new() }));
            }
            if *op != super::CmpOp::Eq {
                return Ok(None);
            }
            let (var, value) = match (left, right) {
                (AspTerm::Var(v), r) if rb => (v, r),
                (l, AspTerm::Var(v)) if lb => (v, l),
                _ => return Ok(None),
            };
            Ok(Some(
                eval_many(value, b)?
                    .into_iter()
                    .map(|t| {
                        let mut nb = b.clone();
                        nb.insert(var.clone(), t);
                        nb
                    })
                    .collect(),
            ))
        }
    }
}

/// A ground aggregate element before interning.
enum Elem {
    True,
    Lit(Atom, bool),
}

/// Instantiates aggregate elements under `b`; unbound variables are local.
fn ground_elements(
    elements: &[AggElement],
    b: &Binding,
    dom: &Domain,
    final_pass: bool,
) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for e in elements {
        let cond: Vec<&AspLiteral> = e.cond.iter().collect();
        let mut bindings = Vec::new();
        enum_lits(&cond, b, dom, &mut bindings)?;
        for cb in bindings {
            match &e.lit {
                AspLiteral::Cmp { .. } => {
                    if let Some(r) = step_literal(&e.lit, &cb, dom)? {
                        if !r.is_empty() {
                            out.push(Elem::True);
                        }
                    } else {
                        return Err(Error::Grounding(format!("unsafe aggregate element {e}")));
                    }
                }
                AspLiteral::Atom {
                    atom,
                    negated: false,
                } => {
                    let Some(r) = step_literal(&e.lit, &cb, dom)? else {
                        return Err(Error::Grounding(format!("unsafe aggregate element {e}")));
                    };
                    for nb in r {
                        out.push(Elem::Lit(ground_atom(atom, &nb)?, false));
                    }
                }
                AspLiteral::Atom {
                    atom,
                    negated: true,
                } => {
                    if !lit_bound(&e.lit, &cb) {
                        return Err(Error::Grounding(format!("unsafe aggregate element {e}")));
                    }
                    let a = ground_atom(atom, &cb)?;
                    if final_pass && !dom.set.contains(&a) {
                        out.push(Elem::True);
                    } else {
                        out.push(Elem::Lit(a, true));
                    }
                }
            }
        }
    }
    Ok(out)
}

enum Instance {
    Constraint(Parts),
    Atom(Atom, Parts),
    Choice(Option<i64>, Option<i64>, Vec<Atom>, Parts),
    Weak(i64, Vec<Term>, Parts),
}

#[derive(Clone, Default)]
struct Parts {
    pos: Vec<Atom>,
    neg: Vec<Atom>,
    aggs: Vec<(Option<i64>, Option<i64>, Vec<(Atom, bool)>, i64)>,
}

struct Ctx<'a> {
    dom: &'a Domain,
    final_pass: bool,
}

impl Ctx<'_> {
    /// Solves the body elements in `remaining`, calling `k` for each
    /// complete binding.
    fn body(
        &self,
        body: &[BodyElem],
        globals: &[BTreeSet<String>],
        remaining: &[usize],
        b: &Binding,
        parts: &Parts,
        k: &mut dyn FnMut(&Binding, &Parts) -> Result<()>,
    ) -> Result<()> {
        if remaining.is_empty() {
            return k(b, parts);
        }
        for (pos, &i) in remaining.iter().enumerate() {
            let Some(next) = self.step(&body[i], &globals[i], b, parts)? else {
                continue;
            };
            let rest: Vec<usize> = remaining
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != pos)
                .map(|(_, &x)| x)
                .collect();
            for (nb, np) in next {
                self.body(body, globals, &rest, &nb, &np, k)?;
            }
            return Ok(());
        }
        Err(Error::Grounding(format!(
            "unsafe body {}",
            remaining
                .iter()
                .map(|&i| body[i].to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )))
    }

    fn step(
        &self,
        e: &BodyElem,
        globals: &BTreeSet<String>,
        b: &Binding,
        parts: &Parts,
    ) -> Result<Option<Vec<(Binding, Parts)>>> {
        match e {
            BodyElem::Lit(l) => {
                if let AspLiteral::Atom {
                    atom,
                    negated: true,
                } = l
                {
                    if !lit_bound(l, b) {
                        return Ok(None);
                    }
                    let a = ground_atom(atom, b)?;
                    let mut np = parts.clone();
                    if self.final_pass {
                        if self.dom.set.contains(&a) {
                            np.neg.push(a);
                        }
                    }
                    return Ok(Some(vec![(b.clone(), np)]));
                }
                let Some(next) = step_literal(l, b, self.dom)? else {
                    return Ok(None);
                };
                let mut out = Vec::with_capacity(next.len());
                for nb in next {
                    let mut np = parts.clone();
                    if let AspLiteral::Atom { atom, .. } = l {
                        np.pos.push(ground_atom(atom, &nb)?);
                    }
                    out.push((nb, np));
                }
                Ok(Some(out))
            }
            BodyElem::Agg(Aggregate {
                lower,
                upper,
                elements,
            }) => {
                let bounds_ready = lower.iter().chain(upper.iter()).all(|t| bound(t, b));
                if !bounds_ready || !globals.iter().all(|v| b.contains_key(v)) {
                    return Ok(None);
                }
                let lower = lower.as_ref().map(|t| eval_int(t, b)).transpose()?;
                let upper = upper.as_ref().map(|t| eval_int(t, b)).transpose()?;
                let elems = ground_elements(elements, b, self.dom, self.final_pass)?;
                let fixed = elems.iter().filter(|e| matches!(e, Elem::True)).count() as i64;
                let lits: Vec<(Atom, bool)> = elems
                    .into_iter()
                    .filter_map(|e| match e {
                        Elem::Lit(a, n) => Some((a, n)),
                        Elem::True => None,
                    })
                    .collect();
                if lits.is_empty() {
                    let ok = lower.is_none_or(|l| fixed >= l) && upper.is_none_or(|u| fixed <= u);
                    return Ok(Some(if ok { vec![(b.clone(), parts.clone())] } else { Vec::new() }));
                }
                let mut np = parts.clone();
                if self.final_pass {
                    np.aggs.push((lower, upper, lits, fixed));
                }
                Ok(Some(vec![(b.clone(), np)]))
            }
            BodyElem::Count { var, elements } => {
                if !globals.iter().all(|v| v == var || b.contains_key(v)) {
                    return Ok(None);
                }
                let elems = ground_elements(elements, b, self.dom, self.final_pass)?;
                if elems.iter().any(|e| matches!(e, Elem::Lit(..))) {
                    return Err(Error::Unsupported(format!(
                        "counted assignment over atoms: {e}"
                    )));
                }
                let n = Term::Int(elems.len() as i64);
                let mut nb = b.clone();
                match nb.get(var) {
                    Some(old) if *old != n => return Ok(Some(Vec::new())),
                    Some(_) => {}
                    None => {
                        nb.insert(var.clone(), n);
                    }
                }
                Ok(Some(vec![(nb, parts.clone())]))
            }
        }
    }
}

/// For each body element, its variables shared with the rest of the rule.
/// Variables of aggregate elements that occur nowhere else are local.
fn outside_vars(s: &Statement) -> Vec<BTreeSet<String>> {
    let body = s.body();
    let mut head_vars: Vec<&str> = Vec::new();
    match s {
        Statement::Rule { head, .. } => match head {
            AspHead::Atom(a) => a.args.iter().for_each(|t| t.vars(&mut head_vars)),
            AspHead::Falsum => {}
            AspHead::Choice(c) => c
                .lower
                .iter()
                .chain(c.upper.iter())
                .for_each(|t| t.vars(&mut head_vars)),
        },
        Statement::Weak { weight, terms, .. } => {
            weight.vars(&mut head_vars);
            terms.iter().for_each(|t| t.vars(&mut head_vars));
        }
    }
    let to_set = |vs: Vec<&str>| -> BTreeSet<String> { vs.into_iter().map(String::from).collect() };
    // variables an element exposes to the others
    let visible: Vec<BTreeSet<String>> = body
        .iter()
        .map(|e| {
            let mut vs = Vec::new();
            match e {
                BodyElem::Agg(a) => a.lower.iter().chain(a.upper.iter()).for_each(|t| t.vars(&mut vs)),
                BodyElem::Count { var, .. } => vs.push(var.as_str()),
                BodyElem::Lit(l) => l.vars(&mut vs),
            }
            to_set(vs)
        })
        .collect();
    (0..body.len())
        .map(|i| {
            let mut outside = to_set(head_vars.clone());
            for (j, v) in visible.iter().enumerate() {
                if j != i {
                    outside.extend(v.iter().cloned());
                }
            }
            let mut mine = Vec::new();
            body[i].vars(&mut mine);
            to_set(mine).intersection(&outside).cloned().collect()
        })
        .collect()
}

fn substitute(t: &AspTerm, consts: &BTreeMap<&str, i64>, b: &Binding) -> AspTerm {
    match t {
        AspTerm::Const(c) => consts.get(c.as_str()).map_or_else(|| t.clone(), |&v| AspTerm::Int(v)),
        AspTerm::Var(v) => b.get(v).map_or_else(|| t.clone(), AspTerm::from_ground),
        AspTerm::Int(_) => t.clone(),
        AspTerm::Func(f, args) => AspTerm::Func(f.clone(), args.iter().map(|a| substitute(a, consts, b)).collect()),
        AspTerm::BinOp(op, l, r) => AspTerm::op(*op, substitute(l, consts, b), substitute(r, consts, b)),
        AspTerm::Range(l, r) => AspTerm::range(substitute(l, consts, b), substitute(r, consts, b)),
        AspTerm::Pool(items) => AspTerm::Pool(items.iter().map(|a| substitute(a, consts, b)).collect()),
    }
}

fn subst_atom(a: &AtomPat, c: &BTreeMap<&str, i64>, b: &Binding) -> AtomPat {
    AtomPat::new(a.predicate.clone(), a.args.iter().map(|t| substitute(t, c, b)).collect())
}

fn subst_lit(l: &AspLiteral, c: &BTreeMap<&str, i64>, b: &Binding) -> AspLiteral {
    match l {
        AspLiteral::Atom { atom, negated } => AspLiteral::Atom {
            atom: subst_atom(atom, c, b),
            negated: *negated,
        },
        AspLiteral::Cmp { left, op, right } => AspLiteral::cmp(substitute(left, c, b), *op, substitute(right, c, b)),
    }
}

fn subst_elems(es: &[AggElement], c: &BTreeMap<&str, i64>, b: &Binding) -> Vec<AggElement> {
    es.iter()
        .map(|e| AggElement {
            lit: subst_lit(&e.lit, c, b),
            cond: e.cond.iter().map(|l| subst_lit(l, c, b)).collect(),
        })
        .collect()
}

fn subst_agg(a: &Aggregate, c: &BTreeMap<&str, i64>, b: &Binding) -> Aggregate {
    Aggregate {
        lower: a.lower.as_ref().map(|t| substitute(t, c, b)),
        upper: a.upper.as_ref().map(|t| substitute(t, c, b)),
        elements: subst_elems(&a.elements, c, b),
    }
}

fn subst_statement(s: &Statement, c: &BTreeMap<&str, i64>, b: &Binding) -> Statement {
    let body = |body: &[BodyElem]| -> Vec<BodyElem> {
        body.iter()
            .map(|e| match e {
                BodyElem::Lit(l) => BodyElem::Lit(subst_lit(l, c, b)),
                BodyElem::Agg(a) => BodyElem::Agg(subst_agg(a, c, b)),
                BodyElem::Count { var, elements } => BodyElem::Count {
                    var: var.clone(),
                    elements: subst_elems(elements, c, b),
                },
            })
            .collect()
    };
    match s {
        Statement::Rule { head, body: bd } => Statement::Rule {
            head: match head {
                AspHead::Atom(a) => AspHead::Atom(subst_atom(a, c, b)),
                AspHead::Falsum => AspHead::Falsum,
                AspHead::Choice(a) => AspHead::Choice(subst_agg(a, c, b)),
            },
            body: body(bd),
        },
        Statement::Weak {
            body: bd,
            weight,
            terms,
        } => Statement::Weak {
            body: body(bd),
            weight: substitute(weight, c, b),
            terms: terms.iter().map(|t| substitute(t, c, b)).collect(),
        },
    }
}

/// Head atoms of a rule instance.
fn head_atoms(head: &AspHead, b: &Binding, dom: &Domain) -> Result<Vec<Atom>> {
    match head {
        AspHead::Atom(a) => ground_atoms(a, b),
        AspHead::Falsum => Ok(Vec::new()),
        AspHead::Choice(c) => {
            let mut out = Vec::new();
            for e in &c.elements {
                let AspLiteral::Atom {
                    atom,
                    negated: false,
                } = &e.lit
                else {
                    return Err(Error::Grounding(format!("choice element {e} is not an atom")));
                };
                let cond: Vec<&AspLiteral> = e.cond.iter().collect();
                let mut bindings = Vec::new();
                enum_lits(&cond, b, dom, &mut bindings)?;
                for cb in bindings {
                    out.extend(ground_atoms(atom, &cb)?);
                }
            }
            Ok(out)
        }
    }
}

fn instances(
    s: &Statement,
    globals: &[BTreeSet<String>],
    ctx: &Ctx,
    k: &mut dyn FnMut(&Binding, &Parts) -> Result<()>,
) -> Result<()> {
    let body = s.body();
    let all: Vec<usize> = (0..body.len()).collect();
    ctx.body(body, globals, &all, &Binding::new(), &Parts::default(), k)
}

/// Grounds `statements` into a program for the engine.
pub fn ground(statements: &[Statement], opts: &GroundOptions) -> Result<GroundProgram> {
    let consts: BTreeMap<&str, i64> = opts.constants.iter().map(|(n, v)| (n.as_str(), *v)).collect();
    let stmts: Vec<Statement> = statements
        .iter()
        .map(|s| subst_statement(s, &consts, &opts.binding))
        .collect();
    let globals: Vec<Vec<BTreeSet<String>>> = stmts.iter().map(outside_vars).collect();

    let mut dom = Domain::default();
    for f in &opts.facts {
        dom.insert(f.clone());
    }
    loop {
        let mut changed = false;
        for (s, g) in stmts.iter().zip(&globals) {
            let Statement::Rule { head, .. } = s else { continue };
            if matches!(head, AspHead::Falsum) {
                continue;
            }
            let mut new_atoms = Vec::new();
            {
                let ctx = Ctx {
                    dom: &dom,
                    final_pass: false,
                };
                instances(s, g, &ctx, &mut |b, _| {
                    new_atoms.extend(head_atoms(head, b, &dom)?);
                    Ok(())
                })?;
            }
            for a in new_atoms {
                changed |= dom.insert(a);
            }
        }
        if !changed {
            break;
        }
    }

    let mut gp = GroundProgram::new();
    for f in &opts.facts {
        gp.add_fact(f);
    }
    let ctx = Ctx {
        dom: &dom,
        final_pass: true,
    };
    for (s, g) in stmts.iter().zip(&globals) {
        let mut emitted: Vec<Instance> = Vec::new();
        instances(s, g, &ctx, &mut |b, parts| {
            let parts = parts.clone();
            match s {
                Statement::Rule { head, .. } => match head {
                    AspHead::Falsum => emitted.push(Instance::Constraint(parts)),
                    AspHead::Atom(_) => {
                        for a in head_atoms(head, b, &dom)? {
                            emitted.push(Instance::Atom(a, parts.clone()));
                        }
                    }
                    AspHead::Choice(c) => {
                        let lower = c.lower.as_ref().map(|t| eval_int(t, b)).transpose()?;
                        let upper = c.upper.as_ref().map(|t| eval_int(t, b)).transpose()?;
                        emitted.push(Instance::Choice(lower, upper, head_atoms(head, b, &dom)?, parts));
                    }
                },
                Statement::Weak { weight, terms, .. } => {
                    let w = eval_int(weight, b)?;
                    let ts = terms.iter().map(|t| eval_term(t, b)).collect::<Result<Vec<_>>>()?;
                    emitted.push(Instance::Weak(w, ts, parts));
                }
            }
            Ok(())
        })?;
        for inst in emitted {
            let rule = match inst {
                Instance::Weak(weight, terms, parts) => {
                    let body = intern_body(&mut gp, &parts);
                    gp.weak.push(WeakConstraint { body, weight, terms });
                    continue;
                }
                Instance::Constraint(parts) => GroundRule {
                    head: GroundHead::None,
                    body: intern_body(&mut gp, &parts),
                },
                Instance::Atom(a, parts) => GroundRule {
                    head: GroundHead::Atom(gp.atom_id(&a)),
                    body: intern_body(&mut gp, &parts),
                },
                Instance::Choice(lower, upper, atoms, parts) => GroundRule {
                    head: GroundHead::Choice {
                        lower,
                        upper,
                        atoms: atoms.iter().map(|a| gp.atom_id(a)).collect(),
                    },
                    body: intern_body(&mut gp, &parts),
                },
            };
            gp.rules.push(rule);
        }
    }
    Ok(gp)
}

fn intern_body(gp: &mut GroundProgram, parts: &Parts) -> GroundBody {
    let mut body = gp.body(&parts.pos, &parts.neg);
    for (lower, upper, lits, fixed) in &parts.aggs {
        let mut elements: Vec<AggElem> = (0..*fixed).map(|_| AggElem::True).collect();
        elements.extend(lits.iter().map(|(a, negated)| AggElem::Lit {
            atom: gp.atom_id(a),
            negated: *negated,
        }));
        body.aggregates.push(engine::Aggregate {
            lower: *lower,
            upper: *upper,
            elements,
        });
    }
    body
}
