//! Non-ground ASP documents: the output language of the translations.
//!
//! A document is a list of statements over schematic variables. It prints
//! in the clingo input dialect, reads back through [`parse_asp`], and is
//! instantiated by [`ground`] for the built-in engine.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

mod ground;
mod read;

pub use ground::{eval_term, ground, Binding, GroundOptions};
pub use read::{parse_asp, same_tokens, token_texts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl ArithOp {
    fn symbol(self) -> &'static str {
        match self {
            ArithOp::Add => "+",
            ArithOp::Sub => "-",
            ArithOp::Mul => "*",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AspTerm {
    Int(i64),
    /// Lowercase constant; `#const` names are substituted when grounding.
    Const(String),
    Var(String),
    Func(String, Vec<AspTerm>),
    BinOp(ArithOp, Box<AspTerm>, Box<AspTerm>),
    /// `lo..hi`, only on the right of `=` or as an atom argument.
    Range(Box<AspTerm>, Box<AspTerm>),
    /// `a;b`, only as an atom argument.
    Pool(Vec<AspTerm>),
}

impl AspTerm {
    pub fn var(name: impl Into<String>) -> Self {
        AspTerm::Var(name.into())
    }

    pub fn konst(name: impl Into<String>) -> Self {
        AspTerm::Const(name.into())
    }

    pub fn range(lo: AspTerm, hi: AspTerm) -> Self {
        AspTerm::Range(Box::new(lo), Box::new(hi))
    }

    pub fn op(op: ArithOp, l: AspTerm, r: AspTerm) -> Self {
        AspTerm::BinOp(op, Box::new(l), Box::new(r))
    }

    /// Lifts a ground source term.
    pub fn from_ground(t: &crate::model::Term) -> Self {
        use crate::model::Term;
        match t {
            Term::Int(v) => AspTerm::Int(*v),
            Term::Sym(s) => AspTerm::Const(s.clone()),
            Term::Func(f, args) => AspTerm::Func(f.clone(), args.iter().map(Self::from_ground).collect()),
        }
    }

    pub fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            AspTerm::Var(v) => out.push(v),
            AspTerm::Int(_) | AspTerm::Const(_) => {}
            AspTerm::Func(_, args) | AspTerm::Pool(args) => args.iter().for_each(|a| a.vars(out)),
            AspTerm::BinOp(_, l, r) | AspTerm::Range(l, r) => {
                l.vars(out);
                r.vars(out);
            }
        }
    }
}

impl fmt::Display for AspTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AspTerm::Int(v) => write!(f, "{v}"),
            AspTerm::Const(s) | AspTerm::Var(s) => f.write_str(s),
            AspTerm::Func(name, args) => {
                f.write_str(name)?;
                write_args(f, args)
            }
            AspTerm::BinOp(op, l, r) => write!(f, "{l}{}{r}", op.symbol()),
            AspTerm::Range(l, r) => write!(f, "{l}..{r}"),
            AspTerm::Pool(items) => {
                for (i, t) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[AspTerm]) -> fmt::Result {
    if args.is_empty() {
        return Ok(());
    }
    let sep = if args.iter().any(|a| matches!(a, AspTerm::Func(..))) {
        ", "
    } else {
        ","
    };
    f.write_str("(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomPat {
    pub predicate: String,
    pub args: Vec<AspTerm>,
}

impl AtomPat {
    pub fn new(predicate: impl Into<String>, args: Vec<AspTerm>) -> Self {
        AtomPat {
            predicate: predicate.into(),
            args,
        }
    }

    /// `a(v)` with the schematic variables appended.
    pub fn extend(a: &crate::model::Atom, vars: &[AspTerm]) -> Self {
        let mut args: Vec<AspTerm> = a.args.iter().map(AspTerm::from_ground).collect();
        args.extend(vars.iter().cloned());
        AtomPat::new(a.predicate.clone(), args)
    }
}

impl fmt::Display for AtomPat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        write_args(f, &self.args)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmpOp {
    Eq,
    Neq,
    Lt,
    Le,
    Gt,
    Ge,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Eq => "=",
            CmpOp::Neq => "!=",
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }

    pub fn test<T: Ord>(self, l: &T, r: &T) -> bool {
        match self {
            CmpOp::Eq => l == r,
            CmpOp::Neq => l != r,
            CmpOp::Lt => l < r,
            CmpOp::Le => l <= r,
            CmpOp::Gt => l > r,
            CmpOp::Ge => l >= r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AspLiteral {
    Atom { atom: AtomPat, negated: bool },
    Cmp { left: AspTerm, op: CmpOp, right: AspTerm },
}

impl AspLiteral {
    pub fn pos(atom: AtomPat) -> Self {
        AspLiteral::Atom {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: AtomPat) -> Self {
        AspLiteral::Atom {
            atom,
            negated: true,
        }
    }

    pub fn cmp(left: AspTerm, op: CmpOp, right: AspTerm) -> Self {
        AspLiteral::Cmp { left, op, right }
    }

    pub fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            AspLiteral::Atom { atom, .. } => atom.args.iter().for_each(|a| a.vars(out)),
            AspLiteral::Cmp { left, right, .. } => {
                left.vars(out);
                right.vars(out);
            }
        }
    }
}

impl fmt::Display for AspLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AspLiteral::Atom { atom, negated } => {
                if *negated {
                    f.write_str("not ")?;
                }
                write!(f, "{atom}")
            }
            AspLiteral::Cmp { left, op, right } => write!(f, "{left}{}{right}", op.symbol()),
        }
    }
}

/// `lit : cond1, ..., condk` inside braces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AggElement {
    pub lit: AspLiteral,
    pub cond: Vec<AspLiteral>,
}

impl AggElement {
    pub fn plain(lit: AspLiteral) -> Self {
        AggElement {
            lit,
            cond: Vec::new(),
        }
    }

    pub fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        self.lit.vars(out);
        self.cond.iter().for_each(|c| c.vars(out));
    }
}

impl fmt::Display for AggElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lit)?;
        for (i, c) in self.cond.iter().enumerate() {
            f.write_str(if i == 0 { ": " } else { ", " })?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Counting aggregate `lower{elements}upper`; elements count positionally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Aggregate {
    pub lower: Option<AspTerm>,
    pub upper: Option<AspTerm>,
    pub elements: Vec<AggElement>,
}

impl Aggregate {
    pub fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        if let Some(l) = &self.lower {
            l.vars(out);
        }
        if let Some(u) = &self.upper {
            u.vars(out);
        }
        self.elements.iter().for_each(|e| e.vars(out));
    }
}

fn write_braced(
    f: &mut fmt::Formatter<'_>,
    lower: Option<&AspTerm>,
    upper: Option<&AspTerm>,
    elements: &[AggElement],
) -> fmt::Result {
    if let Some(l) = lower {
        write!(f, "{l}")?;
    }
    f.write_str("{")?;
    for (i, e) in elements.iter().enumerate() {
        if i > 0 {
            f.write_str("; ")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("}")?;
    if let Some(u) = upper {
        write!(f, "{u}")?;
    }
    Ok(())
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.lower.as_ref(), self.upper.as_ref(), &self.elements)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BodyElem {
    Lit(AspLiteral),
    Agg(Aggregate),
    /// `V = {elements}`: binds `V` to the count.
    Count { var: String, elements: Vec<AggElement> },
}

impl BodyElem {
    pub fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            BodyElem::Lit(l) => l.vars(out),
            BodyElem::Agg(a) => a.vars(out),
            BodyElem::Count { var, elements } => {
                out.push(var);
                elements.iter().for_each(|e| e.vars(out));
            }
        }
    }
}

impl From<AspLiteral> for BodyElem {
    fn from(l: AspLiteral) -> Self {
        BodyElem::Lit(l)
    }
}

impl fmt::Display for BodyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BodyElem::Lit(l) => write!(f, "{l}"),
            BodyElem::Agg(a) => write!(f, "{a}"),
            BodyElem::Count { var, elements } => {
                write!(f, "{var}=")?;
                write_braced(f, None, None, elements)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AspHead {
    Atom(AtomPat),
    Falsum,
    /// Choice over atom elements, with optional bounds.
    Choice(Aggregate),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    Rule { head: AspHead, body: Vec<BodyElem> },
    Weak { body: Vec<BodyElem>, weight: AspTerm, terms: Vec<AspTerm> },
}

impl Statement {
    pub fn rule(head: AtomPat, body: Vec<BodyElem>) -> Self {
        Statement::Rule {
            head: AspHead::Atom(head),
            body,
        }
    }

    pub fn constraint(body: Vec<BodyElem>) -> Self {
        Statement::Rule {
            head: AspHead::Falsum,
            body,
        }
    }

    pub fn body(&self) -> &[BodyElem] {
        match self {
            Statement::Rule { body, .. } | Statement::Weak { body, .. } => body,
        }
    }

    /// Predicate of an atom head.
    pub fn head_predicate(&self) -> Option<&str> {
        match self {
            Statement::Rule {
                head: AspHead::Atom(a),
                ..
            } => Some(&a.predicate),
            Statement::Rule {
                head: AspHead::Choice(c),
                ..
            } => c.elements.first().and_then(|e| match &e.lit {
                AspLiteral::Atom { atom, .. } => Some(atom.predicate.as_str()),
                _ => None,
            }),
            _ => None,
        }
    }
}

fn write_body(f: &mut fmt::Formatter<'_>, body: &[BodyElem]) -> fmt::Result {
    for (i, b) in body.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{b}")?;
    }
    Ok(())
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Rule { head, body } => {
                match head {
                    AspHead::Atom(a) => write!(f, "{a}")?,
                    AspHead::Falsum => {}
                    AspHead::Choice(c) => write!(f, "{c}")?,
                }
                if !body.is_empty() {
                    f.write_str(if matches!(head, AspHead::Falsum) { ":- " } else { " :- " })?;
                    write_body(f, body)?;
                } else if matches!(head, AspHead::Falsum) {
                    f.write_str(":-")?;
                }
                f.write_str(".")
            }
            Statement::Weak {
                body,
                weight,
                terms,
            } => {
                f.write_str(":~ ")?;
                write_body(f, body)?;
                write!(f, ". [{weight}")?;
                for t in terms {
                    write!(f, ", {t}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// The rule schema a statement was generated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Schema {
    ApChoice,
    ApWeak,
    Regular,
    BodyDef,
    BodyFalse,
    BodyTrue,
    OptionHead,
    FirstTrue,
    DegreeChoice,
    DegreeDefault,
    DegreeMatch,
    CrHead,
    ChoiceHead,
    Preference,
    AtomDominance,
    PreferFact,
    Closure,
    Irreflexive,
    PreferConflict,
    RuleDominance,
    Candidate,
    LessApplied,
    Preferred,
    /// Read back from text.
    Parsed,
}

/// Evaluation layer of a statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    /// The `ap` choice and its weak constraint.
    Generator,
    /// Rules instantiated once per assumption tuple.
    Tuple,
    /// Rules relating tuples to each other.
    Preference,
}

/// Predicates defined by the preference layers of both translations.
pub const PREFERENCE_PREDICATES: &[&str] = &[
    "card",
    "equ2degree",
    "prf2degree",
    "prf",
    "pAS",
    "even",
    "equ",
    "sum",
    "dominate",
    "candidate",
    "lessCrRulesApplied",
];

impl Layer {
    /// Classifies by the head predicate, so parsed documents evaluate the
    /// same way as generated ones.
    pub fn of(s: &Statement) -> Layer {
        match s {
            Statement::Weak { .. } => Layer::Generator,
            Statement::Rule { .. } => match s.head_predicate() {
                Some("ap") => Layer::Generator,
                Some(p) if PREFERENCE_PREDICATES.contains(&p) => Layer::Preference,
                _ => Layer::Tuple,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagged {
    pub schema: Schema,
    pub statement: Statement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AspDocument {
    /// Comment lines printed before everything else, without the `%`.
    pub header: Vec<String>,
    pub constants: Vec<(String, i64)>,
    pub statements: Vec<Tagged>,
}

impl AspDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, schema: Schema, statement: Statement) {
        self.statements.push(Tagged { schema, statement });
    }

    pub fn constant(&self, name: &str) -> Option<i64> {
        self.constants.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn set_constant(&mut self, name: &str, value: i64) {
        match self.constants.iter_mut().find(|(n, _)| n == name) {
            Some(c) => c.1 = value,
            None => self.constants.push((name.to_string(), value)),
        }
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> {
        self.statements.iter().map(|t| &t.statement)
    }

    pub fn layer(&self, layer: Layer) -> Vec<Statement> {
        self.statements()
            .filter(|s| Layer::of(s) == layer)
            .cloned()
            .collect()
    }

    pub fn count(&self, schema: Schema) -> usize {
        self.statements.iter().filter(|t| t.schema == schema).count()
    }

    pub fn extend(&mut self, other: AspDocument) {
        for (n, v) in other.constants {
            self.set_constant(&n, v);
        }
        self.statements.extend(other.statements);
    }

    /// The text of the document.
    pub fn emit(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for AspDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.header {
            writeln!(f, "% {h}")?;
        }
        for (n, v) in &self.constants {
            writeln!(f, "#const {n} = {v}.")?;
        }
        let mut previous: Option<Schema> = None;
        for (i, t) in self.statements.iter().enumerate() {
            let group_change = previous.is_some_and(|p| group(p) != group(t.schema));
            if (i == 0 && (!self.header.is_empty() || !self.constants.is_empty())) || group_change {
                writeln!(f)?;
            }
            writeln!(f, "{}", t.statement)?;
            previous = Some(t.schema);
        }
        Ok(())
    }
}

/// Blank lines separate groups when printing.
fn group(s: Schema) -> u8 {
    match s {
        Schema::ApChoice | Schema::ApWeak => 0,
        Schema::Regular => 1,
        Schema::BodyDef | Schema::BodyFalse | Schema::BodyTrue => 2,
        Schema::OptionHead => 3,
        Schema::FirstTrue => 4,
        Schema::DegreeChoice => 5,
        Schema::DegreeDefault | Schema::DegreeMatch => 6,
        Schema::CrHead => 7,
        Schema::ChoiceHead => 8,
        Schema::Preference => 9,
        Schema::AtomDominance => 10,
        Schema::PreferFact => 11,
        Schema::Closure | Schema::Irreflexive | Schema::PreferConflict => 12,
        Schema::RuleDominance => 13,
        Schema::Candidate => 14,
        Schema::LessApplied | Schema::Preferred => 15,
        Schema::Parsed => 16,
    }
}

#[cfg(test)]
mod tests;
