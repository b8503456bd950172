//! Solve results in text and JSON form.

use std::collections::BTreeMap;
use std::fmt::Write;

use lpodc_core::crp::{self, ApplAtom, GeneralizedAnswerSet};
use lpodc_core::lpod::{self, CandidateAnswerSet};
use lpodc_core::{AnswerSet, Engine, Error, Executor, PreferenceCriterion, Program, RuleKind};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub atoms: Vec<String>,
    pub degrees: Vec<u32>,
    pub assumption: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub dialect: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generalized: Option<Vec<Entry>>,
    pub candidates: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preferred: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preferred_by_criterion: Option<BTreeMap<String, Vec<Entry>>>,
}

fn names(s: &AnswerSet) -> Vec<String> {
    s.atoms.iter().map(|a| a.to_string()).collect()
}

fn lpod_entry(c: &CandidateAnswerSet) -> Entry {
    Entry {
        atoms: names(&c.atoms),
        degrees: c.degrees.0.clone(),
        assumption: c.assumption.0.clone(),
    }
}

fn sorted(mut v: Vec<Entry>) -> Vec<Entry> {
    v.sort();
    v.dedup();
    v
}

/// LPOD results from the reference semantics. Without a criterion the
/// preferred sets of all four are reported.
pub fn solve_lpod<E: Executor>(
    p: &Program,
    criterion: Option<PreferenceCriterion>,
    engine: &Engine<E>,
) -> Result<SolveReport, Error> {
    let cands = lpod::assumption_candidates(p, engine)?;
    let pick = |c| sorted(lpod::preferred_among(&cands, c).iter().map(lpod_entry).collect());
    let (preferred, by_criterion) = match criterion {
        Some(c) => (Some(pick(c)), None),
        None => (
            None,
            Some(
                PreferenceCriterion::ALL
                    .into_iter()
                    .map(|c| (c.name().to_string(), pick(c)))
                    .collect(),
            ),
        ),
    };
    Ok(SolveReport {
        dialect: "lpod".into(),
        criterion: criterion.map(|c| c.name().to_string()),
        generalized: None,
        candidates: sorted(cands.iter().map(lpod_entry).collect()),
        preferred,
        preferred_by_criterion: by_criterion,
    })
}

/// Assumption tuple of a generalized answer set: 0/1 for a cr-rule, the
/// applied choice (or 0) for ordered ones.
pub fn crp_assumption(p: &Program, s: &GeneralizedAnswerSet) -> Vec<u32> {
    let applied: Vec<ApplAtom> = s.appl().into_iter().filter_map(ApplAtom::from_atom).collect();
    p.indexed_rules()
        .iter()
        .map(|r| {
            let i = r.index.unwrap_or(0);
            applied
                .iter()
                .find_map(|a| match *a {
                    ApplAtom::RuleAppl(k) if k == i && r.kind == RuleKind::Cr => Some(1),
                    ApplAtom::ChoiceAppl(k, j) if k == i => Some(j as u32),
                    _ => None,
                })
                .unwrap_or(0)
        })
        .collect()
}

/// CR-Prolog2 results from the reference semantics.
pub fn solve_crp<E: Executor>(p: &Program, engine: &Engine<E>) -> Result<SolveReport, Error> {
    let sigma = p.signature();
    let entry = |s: &GeneralizedAnswerSet| Entry {
        atoms: names(&s.project(&sigma)),
        degrees: Vec::new(),
        assumption: crp_assumption(p, s),
    };
    let gas = crp::generalized_answer_sets(p, engine)?;
    let cands = crp::candidates_among(&gas);
    let pref = crp::preferred_among(&cands);
    Ok(SolveReport {
        dialect: "crp2".into(),
        criterion: None,
        generalized: Some(sorted(gas.iter().map(entry).collect())),
        candidates: sorted(cands.iter().map(entry).collect()),
        preferred: Some(sorted(pref.iter().map(entry).collect())),
        preferred_by_criterion: None,
    })
}

fn tuple(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn section(out: &mut String, title: &str, entries: &[Entry]) {
    let _ = writeln!(out, "{title} ({}):", entries.len());
    for e in entries {
        let _ = write!(out, "  {{{}}}", e.atoms.join(", "));
        if !e.degrees.is_empty() {
            let _ = write!(out, "  degrees {}", tuple(&e.degrees));
        }
        if !e.assumption.is_empty() {
            let _ = write!(out, "  assumption {}", tuple(&e.assumption));
        }
        out.push('\n');
    }
}

impl SolveReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.generalized {
            section(&mut out, "generalized answer sets", g);
        }
        section(&mut out, "candidates", &self.candidates);
        if let Some(p) = &self.preferred {
            let title = match &self.criterion {
                Some(c) => format!("preferred [{c}]"),
                None => "preferred".to_string(),
            };
            section(&mut out, &title, p);
        }
        if let Some(by) = &self.preferred_by_criterion {
            for c in PreferenceCriterion::ALL {
                section(&mut out, &format!("preferred [{}]", c.name()), &by[c.name()]);
            }
        }
        out
    }
}
