//! Runs translated documents without an external solver.
//!
//! Every statement whose head is an extended atom mentions `ap(X1, ..., Xm)`
//! and only talks about one assumption tuple, so the ground program falls
//! apart into one slice per tuple plus a stratified preference layer on top.
//! Each slice is solved on its own; the layer is then computed as a fixpoint
//! over `ap` facts and the interface atoms (`degree`, `isPreferred`) read off
//! the slices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::asp::{
    ground, AspDocument, AspLiteral, BodyElem, GroundOptions, Layer, Statement,
    PREFERENCE_PREDICATES,
};
use crate::engine::{stratified_model, Engine};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::lpod::PreferenceCriterion;
use crate::model::{AnswerSet, Atom, AssumptionList, Dialect, DegreeList, Program, Term};

#[derive(Clone, Debug, Default)]
pub struct EvalOptions {
    /// Keep the ground text of every tuple slice.
    pub dump_ground: bool,
}

/// Result of evaluating a translated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedTranslation {
    pub m: usize,
    pub criterion: Option<PreferenceCriterion>,
    /// Tuples whose slice has an answer set, sorted.
    pub ap_tuples: Vec<AssumptionList>,
    /// Answer sets of each consistent slice, over the extended signature.
    pub tuple_answer_sets: BTreeMap<AssumptionList, Vec<BTreeSet<Atom>>>,
    /// The same answer sets shrunk onto the program's signature.
    pub answer_sets: BTreeMap<AssumptionList, Vec<AnswerSet>>,
    /// Degree lists read from `degree(ap(x), d1, ..., dm)`; LPOD only.
    pub degrees: BTreeMap<AssumptionList, DegreeList>,
    /// Atoms derived in the preference layer.
    pub preference: BTreeSet<Atom>,
    /// Tuples marked `candidate`; every consistent tuple for LPODs.
    pub candidates: Vec<AssumptionList>,
    /// Tuples marked `pAS`.
    pub preferred: Vec<AssumptionList>,
    /// Ground slices as text, when requested.
    pub ground_dumps: BTreeMap<AssumptionList, String>,
}

impl EvaluatedTranslation {
    fn sets_of(&self, tuples: &[AssumptionList]) -> Vec<AnswerSet> {
        let mut out: Vec<AnswerSet> = tuples
            .iter()
            .filter_map(|x| self.answer_sets.get(x))
            .flatten()
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Shrunk answer sets of all consistent tuples.
    pub fn all_sets(&self) -> Vec<AnswerSet> {
        self.sets_of(&self.ap_tuples)
    }

    pub fn candidate_sets(&self) -> Vec<AnswerSet> {
        self.sets_of(&self.candidates)
    }

    pub fn preferred_sets(&self) -> Vec<AnswerSet> {
        self.sets_of(&self.preferred)
    }
}

/// `{ a(v) | a(v, x) in s, a(v) in sigma }`.
pub fn shrink(s: &BTreeSet<Atom>, x: &AssumptionList, sigma: &BTreeSet<Atom>) -> AnswerSet {
    let m = x.0.len();
    let tail: Vec<Term> = x.0.iter().map(|&v| Term::Int(v as i64)).collect();
    let atoms = s
        .iter()
        .filter(|a| a.args.len() >= m && a.args[a.args.len() - m..] == tail[..])
        .map(|a| Atom::new(&a.predicate, a.args[..a.args.len() - m].to_vec()))
        .filter(|a| sigma.contains(a))
        .collect();
    AnswerSet::new(atoms)
}

fn ap_atom(x: &AssumptionList) -> Atom {
    Atom::new("ap", x.0.iter().map(|&v| Term::Int(v as i64)).collect())
}

fn tuple_of(a: &Atom) -> Result<AssumptionList> {
    a.args
        .iter()
        .map(|t| match t.as_int() {
            Some(v) if v >= 0 => Ok(v as u32),
            _ => Err(Error::Unsupported(format!("non-numeric assumption tuple {a}"))),
        })
        .collect::<Result<Vec<u32>>>()
        .map(AssumptionList)
}

fn lit_preds<'a>(l: &'a AspLiteral, out: &mut BTreeSet<&'a str>) {
    if let AspLiteral::Atom { atom, .. } = l {
        out.insert(&atom.predicate);
    }
}

/// Predicates read by the preference layer but defined below it.
fn interface_predicates(pref: &[Statement]) -> BTreeSet<String> {
    let mut used = BTreeSet::new();
    for s in pref {
        for b in s.body() {
            match b {
                BodyElem::Lit(l) => lit_preds(l, &mut used),
                BodyElem::Agg(a) => a.elements.iter().for_each(|e| {
                    lit_preds(&e.lit, &mut used);
                    e.cond.iter().for_each(|c| lit_preds(c, &mut used));
                }),
                BodyElem::Count { elements, .. } => elements.iter().for_each(|e| {
                    lit_preds(&e.lit, &mut used);
                    e.cond.iter().for_each(|c| lit_preds(c, &mut used));
                }),
            }
        }
    }
    used.into_iter()
        .filter(|p| *p != "ap" && !PREFERENCE_PREDICATES.contains(p))
        .map(String::from)
        .collect()
}

struct Slice {
    x: AssumptionList,
    sets: Vec<BTreeSet<Atom>>,
    dump: Option<String>,
}

fn evaluate<E: Executor>(
    doc: &AspDocument,
    p: &Program,
    engine: &Engine<E>,
    opts: &EvalOptions,
) -> Result<EvaluatedTranslation> {
    let sigma = p.signature();
    if sigma.len() > engine.cap {
        return Err(Error::CapExceeded {
            size: sigma.len(),
            cap: engine.cap,
        });
    }
    let m = p.indexed_count();
    let base = GroundOptions {
        constants: doc.constants.clone(),
        ..Default::default()
    };

    // the generator fixes the tuple domain
    let generator = ground(&doc.layer(Layer::Generator), &base)?;
    let mut tuples: Vec<AssumptionList> = generator
        .atoms()
        .iter()
        .filter(|a| a.predicate == "ap")
        .map(tuple_of)
        .collect::<Result<_>>()?;
    tuples.sort();
    tuples.dedup();

    let tuple_layer = doc.layer(Layer::Tuple);
    let slices = engine.executor.run(tuples, |x| -> Result<Slice> {
        let mut opts_x = base.clone();
        opts_x.facts.push(ap_atom(&x));
        for (i, &v) in x.0.iter().enumerate() {
            opts_x.binding.insert(format!("X{}", i + 1), Term::Int(v as i64));
        }
        let g = ground(&tuple_layer, &opts_x)?;
        let sets = engine
            .answer_sets(&g)?
            .into_iter()
            .map(|s| s.atoms)
            .collect();
        let dump = opts.dump_ground.then(|| g.to_string());
        Ok(Slice { x, sets, dump })
    });

    let pref_layer = doc.layer(Layer::Preference);
    let interface = interface_predicates(&pref_layer);
    let mut out = EvaluatedTranslation {
        m,
        criterion: None,
        ap_tuples: Vec::new(),
        tuple_answer_sets: BTreeMap::new(),
        answer_sets: BTreeMap::new(),
        degrees: BTreeMap::new(),
        preference: BTreeSet::new(),
        candidates: Vec::new(),
        preferred: Vec::new(),
        ground_dumps: BTreeMap::new(),
    };
    let mut facts = Vec::new();
    for slice in slices {
        let Slice { x, sets, dump } = slice?;
        if let Some(d) = dump {
            out.ground_dumps.insert(x.clone(), d);
        }
        if sets.is_empty() {
            continue;
        }
        let shared = |s: &BTreeSet<Atom>| -> BTreeSet<Atom> {
            s.iter()
                .filter(|a| interface.contains(&a.predicate))
                .cloned()
                .collect()
        };
        let iface = shared(&sets[0]);
        if sets.iter().any(|s| shared(s) != iface) {
            // the preference layer would differ between answer sets of one slice
            return Err(Error::Unsupported(format!(
                "interface atoms vary across the answer sets of tuple {x}"
            )));
        }
        if let Some(d) = degree_of(&iface, &x) {
            out.degrees.insert(x.clone(), d);
        }
        facts.push(ap_atom(&x));
        facts.extend(iface);
        let mut shrunk: Vec<AnswerSet> = sets.iter().map(|s| shrink(s, &x, &sigma)).collect();
        shrunk.sort();
        shrunk.dedup();
        out.answer_sets.insert(x.clone(), shrunk);
        out.tuple_answer_sets.insert(x.clone(), sets);
        out.ap_tuples.push(x);
    }

    let g = ground(
        &pref_layer,
        &GroundOptions {
            facts,
            ..base.clone()
        },
    )?;
    let model = stratified_model(&g)?
        .ok_or_else(|| Error::Inconsistent("preference layer violates a constraint".to_string()))?;
    let pick = |pred: &str| -> Result<Vec<AssumptionList>> {
        let mut v: Vec<AssumptionList> = model
            .iter()
            .filter(|a| a.predicate == pred && a.args.len() == m)
            .map(tuple_of)
            .collect::<Result<_>>()?;
        v.sort();
        Ok(v)
    };
    out.preferred = pick("pAS")?;
    out.candidates = if p.dialect == Dialect::Crp2 {
        pick("candidate")?
    } else {
        out.ap_tuples.clone()
    };
    out.preference = model
        .into_iter()
        .filter(|a| PREFERENCE_PREDICATES.contains(&a.predicate.as_str()))
        .collect();
    Ok(out)
}

/// `degree(ap(x), d1, ..., dm)` among `atoms`.
fn degree_of(atoms: &BTreeSet<Atom>, x: &AssumptionList) -> Option<DegreeList> {
    let key = Term::Func("ap".into(), x.0.iter().map(|&v| Term::Int(v as i64)).collect());
    atoms
        .iter()
        .find(|a| a.predicate == "degree" && a.args.first() == Some(&key))
        .and_then(|a| {
            a.args[1..]
                .iter()
                .map(|t| t.as_int().map(|v| v as u32))
                .collect::<Option<Vec<u32>>>()
        })
        .map(DegreeList)
}

/// Evaluates `lpod2asp(p, c)`.
pub fn eval_lpod<E: Executor>(
    doc: &AspDocument,
    p: &Program,
    c: PreferenceCriterion,
    engine: &Engine<E>,
) -> Result<EvaluatedTranslation> {
    eval_lpod_with(doc, p, c, engine, &EvalOptions::default())
}

pub fn eval_lpod_with<E: Executor>(
    doc: &AspDocument,
    p: &Program,
    c: PreferenceCriterion,
    engine: &Engine<E>,
    opts: &EvalOptions,
) -> Result<EvaluatedTranslation> {
    if p.dialect != Dialect::Lpod {
        return Err(Error::Unsupported("eval_lpod on a CR-Prolog2 program".into()));
    }
    let mut out = evaluate(doc, p, engine, opts)?;
    out.criterion = Some(c);
    Ok(out)
}

/// Evaluates `crp2asp(p)`.
pub fn eval_crp<E: Executor>(
    doc: &AspDocument,
    p: &Program,
    engine: &Engine<E>,
) -> Result<EvaluatedTranslation> {
    eval_crp_with(doc, p, engine, &EvalOptions::default())
}

pub fn eval_crp_with<E: Executor>(
    doc: &AspDocument,
    p: &Program,
    engine: &Engine<E>,
    opts: &EvalOptions,
) -> Result<EvaluatedTranslation> {
    if p.dialect != Dialect::Crp2 {
        return Err(Error::Unsupported("eval_crp on an LPOD program".into()));
    }
    evaluate(doc, p, engine, opts)
}

/// Optimal answer sets of the whole document ground at once. Only viable for
/// tiny programs; used to cross-check the sliced evaluation.
pub fn monolithic<E: Executor>(doc: &AspDocument, engine: &Engine<E>) -> Result<Vec<AnswerSet>> {
    let stmts: Vec<Statement> = doc.statements().cloned().collect();
    let g = ground(
        &stmts,
        &GroundOptions {
            constants: doc.constants.clone(),
            ..Default::default()
        },
    )?;
    engine.optimal_answer_sets(&g)
}

/// The atoms a monolithic optimal answer set should hold according to the
/// sliced evaluation: one answer set per consistent tuple plus the
/// preference layer.
pub fn combined_answer_sets(e: &EvaluatedTranslation) -> Vec<BTreeSet<Atom>> {
    let mut out: Vec<BTreeSet<Atom>> = alloc::vec![e.preference.clone()];
    for x in &e.ap_tuples {
        let sets = &e.tuple_answer_sets[x];
        out = out
            .into_iter()
            .flat_map(|acc| {
                sets.iter().map(move |s| {
                    let mut a = acc.clone();
                    a.extend(s.iter().cloned());
                    a
                })
            })
            .collect();
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests;
