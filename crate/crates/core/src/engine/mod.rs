//! Stable-model semantics for ground programs with choice rules, count
//! aggregates, constraints and weak constraints.
//!
//! [`is_answer_set`] is the definitional check (model of the program whose
//! reduct has it as least model). [`Engine::answer_sets`] enumerates by
//! walking the strongly connected components of the dependency graph
//! bottom-up; every result is re-verified with [`is_answer_set`].
//! [`stratified_model`] is an alternating-fixpoint evaluator for programs
//! without choice whose well-founded model is total.

mod search;
mod wfs;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::model::{AnswerSet, Atom, Head, Rule, RuleKind, Term};

pub use wfs::stratified_model;

pub type AtomId = usize;

/// Default size bound on a single search unit.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AggElem {
    Lit { atom: AtomId, negated: bool },
    /// An element whose condition grounded to true.
    True,
}

/// `lower <= #count{elements} <= upper`. Elements are counted positionally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Aggregate {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub elements: Vec<AggElem>,
}

impl Aggregate {
    pub fn count(&self, interp: &[bool]) -> i64 {
        self.elements
            .iter()
            .filter(|e| match e {
                AggElem::True => true,
                AggElem::Lit { atom, negated } => interp[*atom] != *negated,
            })
            .count() as i64
    }

    pub fn holds(&self, interp: &[bool]) -> bool {
        let n = self.count(interp);
        self.lower.is_none_or(|l| n >= l) && self.upper.is_none_or(|u| n <= u)
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.elements.iter().filter_map(|e| match e {
            AggElem::Lit { atom, .. } => Some(*atom),
            AggElem::True => None,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundBody {
    pub pos: Vec<AtomId>,
    pub neg: Vec<AtomId>,
    pub aggregates: Vec<Aggregate>,
}

impl GroundBody {
    pub fn holds(&self, interp: &[bool]) -> bool {
        self.pos.iter().all(|&a| interp[a])
            && self.neg.iter().all(|&a| !interp[a])
            && self.aggregates.iter().all(|g| g.holds(interp))
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.pos
            .iter()
            .chain(self.neg.iter())
            .copied()
            .chain(self.aggregates.iter().flat_map(|g| g.atoms()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroundHead {
    Atom(AtomId),
    None,
    Choice {
        lower: Option<i64>,
        upper: Option<i64>,
        atoms: Vec<AtomId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundRule {
    pub head: GroundHead,
    pub body: GroundBody,
}

impl GroundRule {
    pub fn head_atoms(&self) -> &[AtomId] {
        match &self.head {
            GroundHead::Atom(a) => core::slice::from_ref(a),
            GroundHead::None => &[],
            GroundHead::Choice { atoms, .. } => atoms,
        }
    }

    /// Is the rule satisfied by `interp`?
    pub fn satisfied(&self, interp: &[bool]) -> bool {
        if !self.body.holds(interp) {
            return true;
        }
        match &self.head {
            GroundHead::Atom(a) => interp[*a],
            GroundHead::None => false,
            GroundHead::Choice {
                lower,
                upper,
                atoms,
            } => {
                let n = atoms.iter().filter(|&&a| interp[a]).count() as i64;
                lower.is_none_or(|l| n >= l) && upper.is_none_or(|u| n <= u)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakConstraint {
    pub body: GroundBody,
    pub weight: i64,
    pub terms: Vec<Term>,
}

/// A ground program over an interned signature.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroundProgram {
    atoms: Vec<Atom>,
    index: BTreeMap<Atom, AtomId>,
    pub rules: Vec<GroundRule>,
    pub weak: Vec<WeakConstraint>,
}

impl GroundProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `a`, extending the signature if needed.
    pub fn atom_id(&mut self, a: &Atom) -> AtomId {
        if let Some(&id) = self.index.get(a) {
            return id;
        }
        let id = self.atoms.len();
        self.atoms.push(a.clone());
        self.index.insert(a.clone(), id);
        id
    }

    pub fn lookup(&self, a: &Atom) -> Option<AtomId> {
        self.index.get(a).copied()
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        &self.atoms[id]
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn body(&mut self, pos: &[Atom], neg: &[Atom]) -> GroundBody {
        GroundBody {
            pos: pos.iter().map(|a| self.atom_id(a)).collect(),
            neg: neg.iter().map(|a| self.atom_id(a)).collect(),
            aggregates: Vec::new(),
        }
    }

    /// `head :- pos, not neg.`; `None` makes a constraint.
    pub fn add_normal(&mut self, head: Option<&Atom>, pos: &[Atom], neg: &[Atom]) {
        let head = match head {
            Some(h) => GroundHead::Atom(self.atom_id(h)),
            None => GroundHead::None,
        };
        let body = self.body(pos, neg);
        self.rules.push(GroundRule { head, body });
    }

    pub fn add_fact(&mut self, a: &Atom) {
        self.add_normal(Some(a), &[], &[]);
    }

    pub fn add_choice(
        &mut self,
        lower: Option<i64>,
        upper: Option<i64>,
        heads: &[Atom],
        pos: &[Atom],
        neg: &[Atom],
    ) {
        let atoms = heads.iter().map(|a| self.atom_id(a)).collect();
        let body = self.body(pos, neg);
        self.rules.push(GroundRule {
            head: GroundHead::Choice {
                lower,
                upper,
                atoms,
            },
            body,
        });
    }

    /// Ground program of regular source rules. Atoms of `sigma` are interned
    /// first so that answer sets are reported over the whole signature.
    pub fn from_rules<'r>(
        sigma: impl IntoIterator<Item = &'r Atom>,
        rules: impl IntoIterator<Item = &'r Rule>,
    ) -> Result<Self> {
        let mut p = GroundProgram::new();
        for a in sigma {
            p.atom_id(a);
        }
        for r in rules {
            p.add_rule(r)?;
        }
        Ok(p)
    }

    /// Adds a regular source rule.
    pub fn add_rule(&mut self, r: &Rule) -> Result<()> {
        if r.kind != RuleKind::Regular {
            return Err(Error::Unsupported(alloc::format!(
                "{:?} rule in a ground program",
                r.kind
            )));
        }
        let pos: Vec<Atom> = r.positive_body().cloned().collect();
        let neg: Vec<Atom> = r.negative_body().cloned().collect();
        match &r.head {
            Head::Atom(h) => self.add_normal(Some(h), &pos, &neg),
            Head::Falsum => self.add_normal(None, &pos, &neg),
            Head::Choice {
                lower,
                upper,
                atoms,
            } => self.add_choice(
                lower.map(i64::from),
                upper.map(i64::from),
                atoms,
                &pos,
                &neg,
            ),
            Head::Ordered(_) => {
                return Err(Error::Unsupported(
                    "ordered head in a regular rule".into(),
                ))
            }
        }
        Ok(())
    }

    /// Appends every rule and weak constraint of `other`, re-interning atoms.
    pub fn extend(&mut self, other: &GroundProgram) {
        let map: Vec<AtomId> = other.atoms.iter().map(|a| self.atom_id(a)).collect();
        let m = |b: &GroundBody| GroundBody {
            pos: b.pos.iter().map(|&a| map[a]).collect(),
            neg: b.neg.iter().map(|&a| map[a]).collect(),
            aggregates: b
                .aggregates
                .iter()
                .map(|g| Aggregate {
                    lower: g.lower,
                    upper: g.upper,
                    elements: g
                        .elements
                        .iter()
                        .map(|e| match e {
                            AggElem::Lit { atom, negated } => AggElem::Lit {
                                atom: map[*atom],
                                negated: *negated,
                            },
                            AggElem::True => AggElem::True,
                        })
                        .collect(),
                })
                .collect(),
        };
        for r in &other.rules {
            let head = match &r.head {
                GroundHead::Atom(a) => GroundHead::Atom(map[*a]),
                GroundHead::None => GroundHead::None,
                GroundHead::Choice {
                    lower,
                    upper,
                    atoms,
                } => GroundHead::Choice {
                    lower: *lower,
                    upper: *upper,
                    atoms: atoms.iter().map(|&a| map[a]).collect(),
                },
            };
            self.rules.push(GroundRule {
                head,
                body: m(&r.body),
            });
        }
        for w in &other.weak {
            self.weak.push(WeakConstraint {
                body: m(&w.body),
                weight: w.weight,
                terms: w.terms.clone(),
            });
        }
    }

    pub fn to_set(&self, interp: &[bool]) -> BTreeSet<Atom> {
        interp
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(i, _)| self.atoms[i].clone())
            .collect()
    }

    /// The interpretation of `set`, or `None` if it mentions atoms outside
    /// the signature.
    pub fn interp_of(&self, set: &BTreeSet<Atom>) -> Option<Vec<bool>> {
        let mut interp = alloc::vec![false; self.atoms.len()];
        for a in set {
            interp[self.lookup(a)?] = true;
        }
        Some(interp)
    }

    /// Total weak-constraint penalty: the sum of weights over distinct
    /// violated `(weight, terms)` instances.
    pub fn penalty(&self, interp: &[bool]) -> i64 {
        let violated: BTreeSet<(i64, &[Term])> = self
            .weak
            .iter()
            .filter(|w| w.body.holds(interp))
            .map(|w| (w.weight, w.terms.as_slice()))
            .collect();
        violated.iter().map(|(w, _)| w).sum()
    }
}

/// The Gelfond-Lifschitz reduct, extended to choice heads and aggregates:
/// rules whose negative body meets `interp` or whose aggregates are false in
/// `interp` are dropped; a choice head keeps exactly its atoms in `interp`;
/// constraints are dropped. The result is negation-free.
pub fn reduct(p: &GroundProgram, interp: &[bool]) -> GroundProgram {
    let mut out = GroundProgram {
        atoms: p.atoms.clone(),
        index: p.index.clone(),
        rules: Vec::new(),
        weak: Vec::new(),
    };
    for r in &p.rules {
        if r.body.neg.iter().any(|&a| interp[a]) || !r.body.aggregates.iter().all(|g| g.holds(interp))
        {
            continue;
        }
        let body = GroundBody {
            pos: r.body.pos.clone(),
            neg: Vec::new(),
            aggregates: Vec::new(),
        };
        match &r.head {
            GroundHead::Atom(a) => out.rules.push(GroundRule {
                head: GroundHead::Atom(*a),
                body,
            }),
            GroundHead::None => {}
            GroundHead::Choice { atoms, .. } => {
                for &a in atoms.iter().filter(|&&a| interp[a]) {
                    out.rules.push(GroundRule {
                        head: GroundHead::Atom(a),
                        body: body.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Least model of the definite part of `p` (negative literals, aggregates
/// and non-atom heads are ignored).
pub fn least_model(p: &GroundProgram) -> Vec<bool> {
    closure(
        p.atoms.len(),
        p.rules.iter().filter_map(|r| match r.head {
            GroundHead::Atom(h) => Some((h, r.body.pos.as_slice())),
            _ => None,
        }),
    )
}

/// `least_model(reduct(p, interp))` without materialising the reduct.
pub fn gamma(p: &GroundProgram, interp: &[bool]) -> Vec<bool> {
    let kept = p.rules.iter().filter(|r| {
        !r.body.neg.iter().any(|&a| interp[a]) && r.body.aggregates.iter().all(|g| g.holds(interp))
    });
    let heads = kept.flat_map(|r| {
        let pos = r.body.pos.as_slice();
        let hs: Vec<AtomId> = match &r.head {
            GroundHead::Atom(h) => alloc::vec![*h],
            GroundHead::None => Vec::new(),
            GroundHead::Choice { atoms, .. } => atoms.iter().copied().filter(|&a| interp[a]).collect(),
        };
        hs.into_iter().map(move |h| (h, pos))
    });
    closure(p.atoms.len(), heads)
}

/// Least set closed under the definite rules `(head, positive body)`.
fn closure<'a>(n: usize, rules: impl Iterator<Item = (AtomId, &'a [AtomId])>) -> Vec<bool> {
    let mut model = alloc::vec![false; n];
    let mut watch: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    let mut heads = Vec::new();
    let mut missing = Vec::new();
    let mut queue = Vec::new();
    for (ri, (h, pos)) in rules.enumerate() {
        let mut pos = pos.to_vec();
        pos.sort_unstable();
        pos.dedup();
        heads.push(h);
        missing.push(pos.len());
        for &a in &pos {
            watch[a].push(ri);
        }
        if pos.is_empty() {
            queue.push(h);
        }
    }
    while let Some(a) = queue.pop() {
        if model[a] {
            continue;
        }
        model[a] = true;
        for &ri in &watch[a] {
            missing[ri] -= 1;
            if missing[ri] == 0 {
                queue.push(heads[ri]);
            }
        }
    }
    model
}

/// Definitional stable-model check.
pub fn is_answer_set(p: &GroundProgram, interp: &[bool]) -> bool {
    interp.len() == p.atoms.len()
        && p.rules.iter().all(|r| r.satisfied(interp))
        && least_model(&reduct(p, interp)) == interp
        && gamma(p, interp) == interp
}

/// Answer-set engine parameterised by an executor for callers that fan out
/// over many small programs.
#[derive(Clone, Debug)]
pub struct Engine<E = Sequential> {
    /// Maximum number of atoms guessed together in one search unit.
    pub cap: usize,
    pub executor: E,
}

impl Default for Engine<Sequential> {
    fn default() -> Self {
        Engine {
            cap: DEFAULT_CAP,
            executor: Sequential,
        }
    }
}

impl Engine<Sequential> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        Engine {
            cap,
            executor: Sequential,
        }
    }
}

impl<E: Executor> Engine<E> {
    pub fn with_executor(cap: usize, executor: E) -> Self {
        Engine { cap, executor }
    }

    /// All answer sets, sorted, penalties unset.
    pub fn answer_sets(&self, p: &GroundProgram) -> Result<Vec<AnswerSet>> {
        let models = self.models(p)?;
        let mut out: Vec<AnswerSet> = models
            .iter()
            .map(|m| AnswerSet::new(p.to_set(m)))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Raw interpretations of all answer sets, each verified against the
    /// definition.
    pub fn models(&self, p: &GroundProgram) -> Result<Vec<Vec<bool>>> {
        let models = search::solve(p, self.cap)?;
        if let Some(bad) = models.iter().find(|m| !is_answer_set(p, m)) {
            return Err(Error::Inconsistent(alloc::format!(
                "search produced a non-answer set {:?}",
                p.to_set(bad)
            )));
        }
        Ok(models)
    }

    /// Answer sets of minimum penalty, annotated with that penalty.
    pub fn optimal_answer_sets(&self, p: &GroundProgram) -> Result<Vec<AnswerSet>> {
        let models = self.models(p)?;
        let scored: Vec<(i64, &Vec<bool>)> = models.iter().map(|m| (p.penalty(m), m)).collect();
        let Some(best) = scored.iter().map(|(c, _)| *c).min() else {
            return Ok(Vec::new());
        };
        let mut out: Vec<AnswerSet> = scored
            .iter()
            .filter(|(c, _)| *c == best)
            .map(|(c, m)| AnswerSet {
                atoms: p.to_set(m),
                penalty: Some(*c),
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |f: &mut fmt::Formatter<'_>, b: &GroundBody| -> fmt::Result {
            let mut first = true;
            let mut sep = |f: &mut fmt::Formatter<'_>| {
                let s = if first { "" } else { ", " };
                first = false;
                f.write_str(s)
            };
            for &a in &b.pos {
                sep(f)?;
                write!(f, "{}", self.atoms[a])?;
            }
            for &a in &b.neg {
                sep(f)?;
                write!(f, "not {}", self.atoms[a])?;
            }
            for g in &b.aggregates {
                sep(f)?;
                if let Some(l) = g.lower {
                    write!(f, "{l} ")?;
                }
                f.write_str("{")?;
                for (i, e) in g.elements.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    match e {
                        AggElem::True => f.write_str("#true")?,
                        AggElem::Lit { atom, negated } => {
                            if *negated {
                                f.write_str("not ")?;
                            }
                            write!(f, "{}", self.atoms[*atom])?;
                        }
                    }
                }
                f.write_str("}")?;
                if let Some(u) = g.upper {
                    write!(f, " {u}")?;
                }
            }
            Ok(())
        };
        for r in &self.rules {
            match &r.head {
                GroundHead::Atom(a) => write!(f, "{}", self.atoms[*a])?,
                GroundHead::None => {}
                GroundHead::Choice {
                    lower,
                    upper,
                    atoms,
                } => {
                    if let Some(l) = lower {
                        write!(f, "{l} ")?;
                    }
                    f.write_str("{")?;
                    for (i, a) in atoms.iter().enumerate() {
                        if i > 0 {
                            f.write_str("; ")?;
                        }
                        write!(f, "{}", self.atoms[*a])?;
                    }
                    f.write_str("}")?;
                    if let Some(u) = upper {
                        write!(f, " {u}")?;
                    }
                }
            }
            let empty = r.body.pos.is_empty() && r.body.neg.is_empty() && r.body.aggregates.is_empty();
            if !empty {
                if r.head != GroundHead::None {
                    f.write_str(" ")?;
                }
                f.write_str(":- ")?;
                body(f, &r.body)?;
            } else if r.head == GroundHead::None {
                f.write_str(":-")?;
            }
            f.write_str(".\n")?;
        }
        for w in &self.weak {
            f.write_str(":~ ")?;
            body(f, &w.body)?;
            write!(f, ". [{}", w.weight)?;
            for t in &w.terms {
                write!(f, ", {t}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
