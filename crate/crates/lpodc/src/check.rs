//! Oracle-versus-translation comparisons.

use lpodc_core::eval::{eval_crp, eval_lpod, monolithic, combined_answer_sets};
use lpodc_core::model::{canonicalize, validate_program};
use lpodc_core::translate::{crp2asp, lpod2asp};
use lpodc_core::{crp, lpod, AnswerSet, Dialect, Engine, Error, Executor, PreferenceCriterion, Program};
use serde::Serialize;

/// One compared quantity.
#[derive(Clone, Debug, Serialize)]
pub struct Agreement {
    pub aspect: String,
    pub oracle: Vec<Vec<String>>,
    pub translation: Vec<Vec<String>>,
}

impl Agreement {
    fn new(aspect: impl Into<String>, oracle: Vec<AnswerSet>, translation: Vec<AnswerSet>) -> Self {
        Agreement {
            aspect: aspect.into(),
            oracle: render(oracle),
            translation: render(translation),
        }
    }

    pub fn ok(&self) -> bool {
        self.oracle == self.translation
    }
}

pub fn render(mut sets: Vec<AnswerSet>) -> Vec<Vec<String>> {
    sets.sort();
    sets.dedup();
    sets.iter()
        .map(|s| s.atoms.iter().map(|a| a.to_string()).collect())
        .collect()
}

fn uniq(mut v: Vec<AnswerSet>) -> Vec<AnswerSet> {
    v.sort();
    v.dedup();
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub agreements: Vec<Agreement>,
    pub candidates: usize,
    pub preferred: usize,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.agreements.iter().all(Agreement::ok)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Agreement> {
        self.agreements.iter().filter(|a| !a.ok())
    }
}

/// Split programs against assumption programs.
pub fn split_vs_assumption<E: Executor>(p: &Program, engine: &Engine<E>) -> Result<Agreement, Error> {
    let split = lpod::split_answer_sets(p, engine)?;
    let assumed = lpod::assumption_candidates(p, engine)?
        .into_iter()
        .map(|c| c.atoms)
        .collect();
    Ok(Agreement::new("candidates: split programs vs assumption programs", split, assumed))
}

/// Every check on an LPOD for the given criteria.
pub fn check_lpod<E: Executor>(
    p: &Program,
    criteria: &[PreferenceCriterion],
    engine: &Engine<E>,
) -> Result<CheckReport, Error> {
    let mut agreements = vec![split_vs_assumption(p, engine)?];
    let cands = lpod::assumption_candidates(p, engine)?;
    let cand_sets: Vec<AnswerSet> = uniq(cands.iter().map(|c| c.atoms.clone()).collect());
    let mut preferred = 0;
    if p.indexed_count() == 0 {
        // nothing to translate; every answer set is preferred
        return Ok(CheckReport {
            agreements,
            candidates: cand_sets.len(),
            preferred: cand_sets.len(),
        });
    }
    for (i, &c) in criteria.iter().enumerate() {
        let doc = lpod2asp(p, c)?;
        let e = eval_lpod(&doc, p, c, engine)?;
        if i == 0 {
            agreements.push(Agreement::new(
                "candidates: oracle vs translation",
                cand_sets.clone(),
                e.candidate_sets(),
            ));
        }
        let oracle = uniq(
            lpod::preferred_among(&cands, c)
                .into_iter()
                .map(|s| s.atoms)
                .collect(),
        );
        preferred = preferred.max(oracle.len());
        agreements.push(Agreement::new(
            format!("preferred ({}): oracle vs translation", c.name()),
            oracle,
            e.preferred_sets(),
        ));
    }
    Ok(CheckReport {
        agreements,
        candidates: cand_sets.len(),
        preferred,
    })
}

/// Generalized, candidate and preferred answer sets of a CR-Prolog2 program.
pub fn check_crp<E: Executor>(p: &Program, engine: &Engine<E>) -> Result<CheckReport, Error> {
    let sigma = p.signature();
    let gas = crp::generalized_answer_sets(p, engine)?;
    let project = |v: &[crp::GeneralizedAnswerSet]| -> Vec<AnswerSet> {
        uniq(v.iter().map(|s| s.project(&sigma)).collect())
    };
    let by_assumption: Vec<AnswerSet> = uniq(
        crp::assumption_answer_sets(p, engine)?
            .into_values()
            .flatten()
            .collect(),
    );
    let cands = crp::candidates_among(&gas);
    let pref = crp::preferred_among(&cands);
    let e = eval_crp(&crp2asp(p)?, p, engine)?;
    let agreements = vec![
        Agreement::new(
            "generalized: H_Pi vs assumption programs",
            project(&gas),
            by_assumption,
        ),
        Agreement::new("generalized: oracle vs translation", project(&gas), e.all_sets()),
        Agreement::new("candidates: oracle vs translation", project(&cands), e.candidate_sets()),
        Agreement::new("preferred: oracle vs translation", project(&pref), e.preferred_sets()),
    ];
    Ok(CheckReport {
        agreements,
        candidates: project(&cands).len(),
        preferred: project(&pref).len(),
    })
}

pub fn check<E: Executor>(
    p: &Program,
    criteria: &[PreferenceCriterion],
    engine: &Engine<E>,
) -> Result<CheckReport, Error> {
    match p.dialect {
        Dialect::Lpod => check_lpod(p, criteria, engine),
        Dialect::Crp2 => check_crp(p, engine),
    }
}

/// Whether the optimal answer sets of the whole ground document are exactly
/// the combinations of per-tuple answer sets and the preference layer.
pub fn monolithic_agrees<E: Executor>(
    p: &Program,
    c: PreferenceCriterion,
    engine: &Engine<E>,
) -> Result<bool, Error> {
    let doc = lpod2asp(p, c)?;
    let e = eval_lpod(&doc, p, c, engine)?;
    let whole: Vec<_> = monolithic(&doc, engine)?.into_iter().map(|s| s.atoms).collect();
    Ok(whole == combined_answer_sets(&e))
}

/// Smallest program found by greedily dropping prefer facts, rules, body
/// literals and trailing head atoms while the program still fails a check.
pub fn minimize<E: Executor>(
    p: &Program,
    criteria: &[PreferenceCriterion],
    engine: &Engine<E>,
) -> Program {
    minimize_by(p, |q| matches!(check(q, criteria, engine), Ok(r) if !r.ok()))
}

pub fn minimize_by(p: &Program, fails: impl Fn(&Program) -> bool) -> Program {
    let mut best = p.clone();
    loop {
        let next = shrink_once(&best)
            .into_iter()
            .map(|q| canonicalize(&q))
            .filter(|q| validate_program(q).is_valid() && q.indexed_count() > 0)
            .find(|q| fails(q));
        match next {
            Some(q) => best = q,
            None => return best,
        }
    }
}

fn shrink_once(p: &Program) -> Vec<Program> {
    let mut out = Vec::new();
    for i in 0..p.prefer.len() {
        let mut q = p.clone();
        q.prefer.remove(i);
        out.push(q);
    }
    for i in 0..p.rules.len() {
        let mut q = p.clone();
        q.rules.remove(i);
        out.push(q);
    }
    for i in 0..p.rules.len() {
        for j in 0..p.rules[i].body.len() {
            let mut q = p.clone();
            q.rules[i].body.remove(j);
            out.push(q);
        }
        if let lpodc_core::Head::Ordered(atoms) = &p.rules[i].head {
            if atoms.len() > 2 {
                let mut q = p.clone();
                q.rules[i].head = lpodc_core::Head::Ordered(atoms[..atoms.len() - 1].to_vec());
                out.push(q);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpodc_core::parser::parse;

    #[test]
    fn examples_agree() {
        let engine = Engine::new();
        let p = parse("a * b :- not c.\nb * c :- not d.", Dialect::Lpod).unwrap();
        let r = check(&p, &PreferenceCriterion::ALL, &engine).unwrap();
        assert!(r.ok());
        assert_eq!((r.candidates, r.preferred), (3, 1));
        let p = parse("r1: t :+.\nr2: q * s :+.\nq :- t.\ns :- t.\np :- not q.\nr :- not s.\n:- p, r.\nprefer(r2, r1).", Dialect::Crp2).unwrap();
        let r = check(&p, &[], &engine).unwrap();
        assert!(r.ok());
        assert_eq!(r.preferred, 1);
    }

    #[test]
    fn shrinking_candidates_are_smaller() {
        let p = parse("a * b * c :- not d.\nd :- not a.\nprefer(1, 1).", Dialect::Lpod);
        assert!(p.is_err());
        let p = parse("a * b * c :- not d.\nd :- not a.", Dialect::Lpod).unwrap();
        let smaller = shrink_once(&p);
        assert_eq!(smaller.len(), 2 + 2 + 1);
        // nothing fails, so nothing is dropped
        assert_eq!(minimize(&p, &PreferenceCriterion::ALL, &Engine::new()), p);
    }

    #[test]
    fn minimizer_keeps_the_failure() {
        let p = parse("a * b * c :- not d, b.\nd :- not a.\nc :- a.\nb * a.", Dialect::Lpod).unwrap();
        let mentions_d = |q: &Program| q.rules.iter().any(|r| r.body.iter().any(|l| l.atom.predicate == "d"));
        let small = minimize_by(&p, mentions_d);
        assert!(mentions_d(&small));
        assert_eq!(small.rules.len(), 1);
        assert_eq!(small.rules[0].body.len(), 1);
        assert_eq!(small.rules[0].head.atoms().len(), 2);
    }
}
