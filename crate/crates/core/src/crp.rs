//! Reference semantics of CR-Prolog2: the program `H_Π`, generalized,
//! candidate and preferred answer sets, and assumption programs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::engine::{Engine, GroundProgram};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::model::{tuples, AnswerSet, AssumptionList, Atom, Dialect, Head, Program, Rule, RuleKind, Term};

pub fn appl(t: Term) -> Atom {
    Atom::new("appl", vec![t])
}

pub fn choice(r: usize, j: usize) -> Term {
    Term::Func("choice".into(), vec![Term::Int(r as i64), Term::Int(j as i64)])
}

fn idx(i: usize) -> Term {
    Term::Int(i as i64)
}

fn prefer(a: Term, b: Term) -> Atom {
    Atom::new("prefer", vec![a, b])
}

fn is_preferred(a: Term, b: Term) -> Atom {
    Atom::new("isPreferred", vec![a, b])
}

/// Which appl atom a term names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ApplAtom {
    RuleAppl(usize),
    ChoiceAppl(usize, usize),
}

impl ApplAtom {
    pub fn atom(self) -> Atom {
        match self {
            ApplAtom::RuleAppl(i) => appl(idx(i)),
            ApplAtom::ChoiceAppl(r, j) => appl(choice(r, j)),
        }
    }

    pub fn from_atom(a: &Atom) -> Option<ApplAtom> {
        if a.predicate != "appl" || a.args.len() != 1 {
            return None;
        }
        match &a.args[0] {
            Term::Int(i) => Some(ApplAtom::RuleAppl(*i as usize)),
            Term::Func(f, args) if f == "choice" && args.len() == 2 => {
                match (&args[0], &args[1]) {
                    (Term::Int(r), Term::Int(j)) => {
                        Some(ApplAtom::ChoiceAppl(*r as usize, *j as usize))
                    }
                    _ => None,
                }
            }
            _ => None,
        }
    }
}

/// An answer set of `H_Π ∪ A`, over the full signature of `H_Π`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedAnswerSet {
    pub atoms: BTreeSet<Atom>,
}

impl GeneralizedAnswerSet {
    pub fn appl(&self) -> BTreeSet<&Atom> {
        self.atoms.iter().filter(|a| a.predicate == "appl").collect()
    }

    pub fn project(&self, sigma: &BTreeSet<Atom>) -> AnswerSet {
        AnswerSet::new(self.atoms.intersection(sigma).cloned().collect())
    }
}

fn require_crp(p: &Program) -> Result<()> {
    if p.dialect != Dialect::Crp2 {
        return Err(Error::Unsupported(
            "CR-Prolog2 semantics on an LPOD program".into(),
        ));
    }
    Ok(())
}

fn check_cap<E>(p: &Program, engine: &Engine<E>) -> Result<BTreeSet<Atom>> {
    let sigma = p.signature();
    if sigma.len() > engine.cap {
        return Err(Error::CapExceeded {
            size: sigma.len(),
            cap: engine.cap,
        });
    }
    Ok(sigma)
}

fn ordered_head(r: &Rule) -> &[Atom] {
    match &r.head {
        Head::Ordered(atoms) => atoms,
        _ => &[],
    }
}

/// Terms the closure variables range over: cr and ordered cr indices, then
/// every `choice(r, j)`.
fn preference_domain(p: &Program) -> Vec<Term> {
    let (_, l, _) = p.crp_bounds();
    let mut d: Vec<Term> = (1..=l).map(idx).collect();
    for r in p.indexed_rules() {
        if r.kind.is_ordered() {
            let i = r.index.expect("canonical");
            d.extend((1..=r.head_len()).map(|j| choice(i, j)));
        }
    }
    d
}

/// The closure rules for `isPreferred` and the irreflexivity constraint,
/// instantiated over `domain`.
fn add_closure(g: &mut GroundProgram, domain: &[Term]) {
    for r1 in domain {
        for r2 in domain {
            g.add_normal(
                Some(&is_preferred(r1.clone(), r2.clone())),
                &[prefer(r1.clone(), r2.clone())],
                &[],
            );
            for r3 in domain {
                g.add_normal(
                    Some(&is_preferred(r1.clone(), r3.clone())),
                    &[prefer(r1.clone(), r2.clone()), is_preferred(r2.clone(), r3.clone())],
                    &[],
                );
            }
        }
        g.add_normal(None, &[is_preferred(r1.clone(), r1.clone())], &[]);
    }
}

/// `H_Π` without any appl facts.
pub fn build_hpi(p: &Program) -> Result<GroundProgram> {
    require_crp(p)?;
    let mut g = GroundProgram::from_rules(&p.signature(), p.regular_rules())?;
    for r in p.indexed_rules() {
        let i = r.index.expect("canonical");
        let mut pos: Vec<Atom> = r.positive_body().cloned().collect();
        let neg: Vec<Atom> = r.negative_body().cloned().collect();
        if r.kind.is_cr() {
            pos.push(appl(idx(i)));
        }
        match r.kind {
            RuleKind::Cr => {
                let Head::Atom(h) = &r.head else {
                    return Err(Error::Unsupported("cr-rule without an atom head".into()));
                };
                g.add_normal(Some(h), &pos, &neg);
            }
            RuleKind::Ordered | RuleKind::OrderedCr => {
                let head = ordered_head(r);
                let fired = Atom::new("fired", vec![idx(i)]);
                for (j0, c) in head.iter().enumerate() {
                    let j = j0 + 1;
                    let a = appl(choice(i, j));
                    let mut body = pos.clone();
                    body.push(a.clone());
                    g.add_normal(Some(c), &body, &neg);
                    g.add_normal(Some(&fired), &[a], &[]);
                    if j < head.len() {
                        g.add_fact(&prefer(choice(i, j), choice(i, j + 1)));
                    }
                }
                let mut neg_fired = neg.clone();
                neg_fired.push(fired);
                g.add_normal(None, &pos, &neg_fired);
            }
            RuleKind::Regular => {}
        }
    }
    for (a, b) in p.prefer_indices() {
        g.add_fact(&prefer(idx(a), idx(b)));
    }
    let domain = preference_domain(p);
    add_closure(&mut g, &domain);
    for r1 in &domain {
        for r2 in &domain {
            g.add_normal(
                None,
                &[
                    appl(r1.clone()),
                    appl(r2.clone()),
                    is_preferred(r1.clone(), r2.clone()),
                ],
                &[],
            );
        }
    }
    Ok(g)
}

/// Sets `A` of appl atoms worth solving: at most one choice per ordered
/// rule, and for ordered cr-rules a choice only together with the rule's
/// own appl atom. Sets with two choices of one rule are inconsistent by the
/// prefer chain; a choice without its rule's appl atom cannot fire the rule.
pub fn appl_subsets(p: &Program) -> Vec<Vec<ApplAtom>> {
    let mut out: Vec<Vec<ApplAtom>> = vec![Vec::new()];
    for r in p.indexed_rules() {
        let i = r.index.expect("canonical");
        let options: Vec<Vec<ApplAtom>> = match r.kind {
            RuleKind::Cr => vec![vec![], vec![ApplAtom::RuleAppl(i)]],
            RuleKind::OrderedCr => {
                let mut o = vec![vec![], vec![ApplAtom::RuleAppl(i)]];
                o.extend(
                    (1..=r.head_len())
                        .map(|j| vec![ApplAtom::RuleAppl(i), ApplAtom::ChoiceAppl(i, j)]),
                );
                o
            }
            RuleKind::Ordered => {
                let mut o = vec![vec![]];
                o.extend((1..=r.head_len()).map(|j| vec![ApplAtom::ChoiceAppl(i, j)]));
                o
            }
            RuleKind::Regular => continue,
        };
        out = out
            .into_iter()
            .flat_map(|base| {
                options.iter().map(move |o| {
                    let mut next = base.clone();
                    next.extend(o.iter().copied());
                    next
                })
            })
            .collect();
    }
    out
}

pub fn generalized_answer_sets<E: Executor>(
    p: &Program,
    engine: &Engine<E>,
) -> Result<Vec<GeneralizedAnswerSet>> {
    require_crp(p)?;
    check_cap(p, engine)?;
    let hpi = build_hpi(p)?;
    let results = engine.executor.run(appl_subsets(p), |a| {
        let mut g = hpi.clone();
        for x in a {
            g.add_fact(&x.atom());
        }
        engine.answer_sets(&g)
    });
    let mut out = BTreeSet::new();
    for r in results {
        out.extend(
            r?.into_iter()
                .map(|s| GeneralizedAnswerSet { atoms: s.atoms }),
        );
    }
    Ok(out.into_iter().collect())
}

/// `appl(r1) ∈ S1`, `appl(r2) ∈ S2` and `isPreferred(r1, r2) ∈ S1 ∩ S2`.
pub fn dominates(s1: &GeneralizedAnswerSet, s2: &GeneralizedAnswerSet) -> bool {
    let a2: Vec<&Term> = s2.appl().into_iter().map(|a| &a.args[0]).collect();
    s1.appl().into_iter().any(|a1| {
        a2.iter().any(|&r2| {
            let ip = is_preferred(a1.args[0].clone(), r2.clone());
            s1.atoms.contains(&ip) && s2.atoms.contains(&ip)
        })
    })
}

pub fn candidates_among(all: &[GeneralizedAnswerSet]) -> Vec<GeneralizedAnswerSet> {
    all.iter()
        .filter(|s| !all.iter().any(|t| t != *s && dominates(t, s)))
        .cloned()
        .collect()
}

/// Candidates whose appl set is minimal under strict inclusion.
pub fn preferred_among(candidates: &[GeneralizedAnswerSet]) -> Vec<GeneralizedAnswerSet> {
    candidates
        .iter()
        .filter(|s| {
            let mine = s.appl();
            !candidates.iter().any(|t| {
                let theirs = t.appl();
                theirs.len() < mine.len() && theirs.is_subset(&mine)
            })
        })
        .cloned()
        .collect()
}

pub fn candidate_answer_sets<E: Executor>(
    p: &Program,
    engine: &Engine<E>,
) -> Result<Vec<GeneralizedAnswerSet>> {
    Ok(candidates_among(&generalized_answer_sets(p, engine)?))
}

/// Preferred answer sets projected onto σ, deduplicated and sorted.
pub fn preferred_answer_sets<E: Executor>(p: &Program, engine: &Engine<E>) -> Result<Vec<AnswerSet>> {
    let sigma = p.signature();
    let pref = preferred_among(&candidate_answer_sets(p, engine)?);
    let set: BTreeSet<AnswerSet> = pref.iter().map(|s| s.project(&sigma)).collect();
    Ok(set.into_iter().collect())
}

/// Domains of the assumption degrees: `{0,1}` for cr-rules, `0..=n` for
/// ordered cr-rules, `1..=n` for ordered rules.
pub fn assumption_domains(p: &Program) -> Vec<(u32, u32)> {
    p.indexed_rules()
        .iter()
        .map(|r| match r.kind {
            RuleKind::Cr => (0, 1),
            RuleKind::OrderedCr => (0, r.head_len() as u32),
            _ => (1, r.head_len() as u32),
        })
        .collect()
}

/// `AP(x)` for one tuple over the domains of [`assumption_domains`].
pub fn crp_assumption_program(p: &Program, x: &AssumptionList) -> Result<GroundProgram> {
    require_crp(p)?;
    let rules = p.indexed_rules();
    if rules.len() != x.0.len() {
        return Err(Error::Unsupported(format!(
            "assumption list of length {} for {} indexed rules",
            x.0.len(),
            rules.len()
        )));
    }
    let mut g = GroundProgram::from_rules(&p.signature(), p.regular_rules())?;
    for (r, &xi) in rules.iter().zip(&x.0) {
        if xi == 0 {
            continue;
        }
        let head = match &r.head {
            Head::Atom(h) => h.clone(),
            Head::Ordered(atoms) => atoms[xi as usize - 1].clone(),
            _ => return Err(Error::Unsupported("unexpected head".into())),
        };
        let pos: Vec<Atom> = r.positive_body().cloned().collect();
        let neg: Vec<Atom> = r.negative_body().cloned().collect();
        g.add_normal(Some(&head), &pos, &neg);
    }
    let (_, l, _) = p.crp_bounds();
    for (a, b) in p.prefer_indices() {
        g.add_fact(&prefer(idx(a), idx(b)));
    }
    let domain: Vec<Term> = (1..=l).map(idx).collect();
    add_closure(&mut g, &domain);
    for r1 in 1..=l {
        for r2 in 1..=l {
            if x.0[r1 - 1] > 0 && x.0[r2 - 1] > 0 {
                g.add_normal(None, &[is_preferred(idx(r1), idx(r2))], &[]);
            }
        }
    }
    Ok(g)
}

/// Every assumption program, keyed by its assumption degree list.
pub fn crp_assumption_programs(p: &Program) -> Result<BTreeMap<AssumptionList, GroundProgram>> {
    tuples(&assumption_domains(p))
        .into_iter()
        .map(|x| crp_assumption_program(p, &x).map(|g| (x, g)))
        .collect()
}

/// σ-projections of the answer sets of every assumption program.
pub fn assumption_answer_sets<E: Executor>(
    p: &Program,
    engine: &Engine<E>,
) -> Result<BTreeMap<AssumptionList, Vec<AnswerSet>>> {
    let sigma = check_cap(p, engine)?;
    let programs: Vec<(AssumptionList, GroundProgram)> =
        crp_assumption_programs(p)?.into_iter().collect();
    let results = engine.executor.run(programs, |(x, g)| {
        engine.answer_sets(&g).map(|sets| {
            let projected: BTreeSet<AnswerSet> = sets
                .into_iter()
                .map(|s| AnswerSet::new(s.project(&sigma)))
                .collect();
            (x, projected.into_iter().collect::<Vec<_>>())
        })
    });
    results.into_iter().collect()
}
