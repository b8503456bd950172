//! Reference semantics of logic programs with ordered disjunction.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::engine::{Engine, GroundProgram};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::model::{
    tuples, AnswerSet, AssumptionList, Atom, DegreeList, Dialect, Head, Literal, Program, Rule,
    RuleKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PreferenceCriterion {
    Cardinality,
    Inclusion,
    Pareto,
    PenaltySum,
}

impl PreferenceCriterion {
    pub const ALL: [PreferenceCriterion; 4] = [
        PreferenceCriterion::Cardinality,
        PreferenceCriterion::Inclusion,
        PreferenceCriterion::Pareto,
        PreferenceCriterion::PenaltySum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PreferenceCriterion::Cardinality => "cardinality",
            PreferenceCriterion::Inclusion => "inclusion",
            PreferenceCriterion::Pareto => "pareto",
            PreferenceCriterion::PenaltySum => "penalty-sum",
        }
    }
}

impl fmt::Display for PreferenceCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PreferenceCriterion {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        PreferenceCriterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown criterion {s}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateAnswerSet {
    pub atoms: AnswerSet,
    pub degrees: DegreeList,
    pub assumption: AssumptionList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    FirstPreferred,
    SecondPreferred,
    Neither,
}

fn require_ordered(r: &Rule) -> Result<&[Atom]> {
    match (&r.kind, &r.head) {
        (RuleKind::Ordered | RuleKind::OrderedCr, Head::Ordered(atoms)) => Ok(atoms),
        _ => Err(Error::Unsupported(format!(
            "expected an ordered rule, found {:?}",
            r.kind
        ))),
    }
}

/// The `i`-th option `C^i <- Body, not C^1, ..., not C^(i-1)` (1-based).
pub fn option(r: &Rule, i: usize) -> Result<Rule> {
    let head = require_ordered(r)?;
    if i == 0 || i > head.len() {
        return Err(Error::Unsupported(format!(
            "option {i} of a rule with {} head atoms",
            head.len()
        )));
    }
    let mut body = r.body.clone();
    body.extend(head[..i - 1].iter().cloned().map(Literal::neg));
    Ok(Rule::regular(Head::Atom(head[i - 1].clone()), body))
}

fn head_domains(p: &Program, lo: u32) -> Vec<(u32, u32)> {
    p.head_sizes().into_iter().map(|n| (lo, n as u32)).collect()
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

fn require_lpod(p: &Program) -> Result<()> {
    if p.dialect != Dialect::Lpod {
        return Err(Error::Unsupported("LPOD semantics on a CR-Prolog2 program".into()));
    }
    Ok(())
}

/// Every split program, paired with the chosen option per ordered rule, in
/// lexicographic order of the choices.
pub fn split_programs(p: &Program) -> Result<Vec<(Vec<usize>, GroundProgram)>> {
    require_lpod(p)?;
    let sigma = p.signature();
    let ordered = p.indexed_rules();
    let mut out = Vec::new();
    for choice in tuples(&head_domains(p, 1)) {
        let mut rules: Vec<Rule> = p.regular_rules().cloned().collect();
        for (r, &k) in ordered.iter().zip(&choice.0) {
            rules.push(option(r, k as usize)?);
        }
        let g = GroundProgram::from_rules(&sigma, &rules)?;
        out.push((choice.0.iter().map(|&k| k as usize).collect(), g));
    }
    Ok(out)
}

/// Answer sets of all split programs (each over σ), deduplicated.
pub fn split_answer_sets<E: Executor>(p: &Program, engine: &Engine<E>) -> Result<Vec<AnswerSet>> {
    check_cap(p, engine)?;
    let programs = split_programs(p)?;
    let results = engine
        .executor
        .run(programs, |(_, g)| engine.answer_sets(&g));
    let mut out = BTreeSet::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out.into_iter().collect())
}

fn body_atom(i: usize) -> Atom {
    Atom::prop(&format!("body_{i}"))
}

/// The rules of the assumption `O_i(x)` for ordered rule `r` at index `i`:
/// `body_i` is true exactly when the body is, and `C^x` is the first true
/// head atom (`x = 0`: the body is false).
pub fn assumption(r: &Rule, i: usize, x: usize) -> Result<Vec<Rule>> {
    let head = require_ordered(r)?;
    if x > head.len() {
        return Err(Error::Unsupported(format!(
            "assumption {x} of a rule with {} head atoms",
            head.len()
        )));
    }
    let b = body_atom(i);
    let bpos = || Literal::pos(b.clone());
    let mut rules = alloc::vec![Rule::regular(Head::Atom(b.clone()), r.body.clone())];
    if x == 0 {
        rules.push(Rule::regular(Head::Falsum, alloc::vec![bpos()]));
    } else {
        rules.push(Rule::regular(Head::Falsum, alloc::vec![Literal::neg(b.clone())]));
        rules.push(Rule::regular(Head::Atom(head[x - 1].clone()), alloc::vec![bpos()]));
    }
    for j in 1..=head.len() {
        if j == x {
            continue;
        }
        let mut body = alloc::vec![bpos()];
        body.extend(head[..j - 1].iter().cloned().map(Literal::neg));
        body.push(Literal::pos(head[j - 1].clone()));
        rules.push(Rule::regular(Head::Falsum, body));
    }
    Ok(rules)
}

/// `AP(x_1, ..., x_m)`: the regular rules plus one assumption per ordered
/// rule.
pub fn assumption_program(p: &Program, x: &AssumptionList) -> Result<GroundProgram> {
    let ordered = p.indexed_rules();
    if ordered.len() != x.0.len() {
        return Err(Error::Unsupported(format!(
            "assumption list of length {} for {} ordered rules",
            x.0.len(),
            ordered.len()
        )));
    }
    let mut g = GroundProgram::from_rules(&p.signature(), p.regular_rules())?;
    for (i, (r, &xi)) in ordered.iter().zip(&x.0).enumerate() {
        for rule in assumption(r, i + 1, xi as usize)? {
            g.add_rule(&rule)?;
        }
    }
    Ok(g)
}

/// Satisfaction degrees of `atoms`: 1 when the body is false, otherwise the
/// position of the first true head atom. `None` if some rule has a true body
/// and no true head atom.
pub fn degrees_of(p: &Program, atoms: &BTreeSet<Atom>) -> Option<DegreeList> {
    p.indexed_rules()
        .iter()
        .map(|r| {
            if !r.body_holds(atoms) {
                return Some(1);
            }
            r.head
                .atoms()
                .iter()
                .position(|c| atoms.contains(c))
                .map(|k| k as u32 + 1)
        })
        .collect::<Option<Vec<u32>>>()
        .map(DegreeList)
}

/// Candidate answer sets via assumption programs, sorted by assumption list.
pub fn assumption_candidates<E: Executor>(
    p: &Program,
    engine: &Engine<E>,
) -> Result<Vec<CandidateAnswerSet>> {
    require_lpod(p)?;
    let sigma = check_cap(p, engine)?;
    let all = tuples(&head_domains(p, 0));
    let results = engine.executor.run(all, |x| -> Result<Vec<CandidateAnswerSet>> {
        let g = assumption_program(p, &x)?;
        let degrees = x.degrees();
        let mut out = Vec::new();
        for s in engine.answer_sets(&g)? {
            let atoms = AnswerSet::new(s.project(&sigma));
            if degrees_of(p, &atoms.atoms).as_ref() != Some(&degrees) {
                return Err(Error::Inconsistent(format!(
                    "degrees of {atoms} disagree with assumption {x}"
                )));
            }
            out.push(CandidateAnswerSet {
                atoms,
                degrees: degrees.clone(),
                assumption: x.clone(),
            });
        }
        Ok(out)
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    out.sort_by(|a, b| (&a.assumption, &a.atoms).cmp(&(&b.assumption, &b.atoms)));
    out.dedup();
    Ok(out)
}

/// Rules satisfied to degree `k` (1-based rule positions).
fn at_degree(d: &DegreeList, k: u32) -> BTreeSet<usize> {
    d.0.iter()
        .enumerate()
        .filter(|(_, &v)| v == k)
        .map(|(i, _)| i)
        .collect()
}

/// Is `d1` strictly better than `d2` under `c`?
pub fn beats(d1: &DegreeList, d2: &DegreeList, c: PreferenceCriterion) -> bool {
    let max = d1.0.iter().chain(&d2.0).copied().max().unwrap_or(0);
    match c {
        PreferenceCriterion::Cardinality => {
            for k in 1..=max {
                let (a, b) = (at_degree(d1, k).len(), at_degree(d2, k).len());
                if a != b {
                    return a > b;
                }
            }
            false
        }
        PreferenceCriterion::Inclusion => {
            for k in 1..=max {
                let (a, b) = (at_degree(d1, k), at_degree(d2, k));
                if a != b {
                    return b.is_subset(&a);
                }
            }
            false
        }
        PreferenceCriterion::Pareto => {
            let better = d1.0.iter().zip(&d2.0).any(|(a, b)| a < b);
            let worse = d1.0.iter().zip(&d2.0).any(|(a, b)| a > b);
            better && !worse
        }
        PreferenceCriterion::PenaltySum => {
            d1.0.iter().map(|&v| u64::from(v)).sum::<u64>()
                < d2.0.iter().map(|&v| u64::from(v)).sum::<u64>()
        }
    }
}

pub fn compare(
    s1: &CandidateAnswerSet,
    s2: &CandidateAnswerSet,
    c: PreferenceCriterion,
) -> Comparison {
    if beats(&s1.degrees, &s2.degrees, c) {
        Comparison::FirstPreferred
    } else if beats(&s2.degrees, &s1.degrees, c) {
        Comparison::SecondPreferred
    } else {
        Comparison::Neither
    }
}

/// Candidates not beaten by any other candidate under `c`.
pub fn preferred_among(
    candidates: &[CandidateAnswerSet],
    c: PreferenceCriterion,
) -> Vec<CandidateAnswerSet> {
    candidates
        .iter()
        .filter(|s| {
            !candidates
                .iter()
                .any(|t| compare(t, s, c) == Comparison::FirstPreferred)
        })
        .cloned()
        .collect()
}

pub fn preferred<E: Executor>(
    p: &Program,
    c: PreferenceCriterion,
    engine: &Engine<E>,
) -> Result<Vec<CandidateAnswerSet>> {
    Ok(preferred_among(&assumption_candidates(p, engine)?, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, render_rule};
    use alloc::string::{String, ToString};
    use alloc::vec;

    const PI1: &str = "a * b :- not c.  b * c :- not d.";
    const PI2: &str = "
        1 {hotel(1); hotel(2); hotel(3)} 1.
        :- hotel(1), not close.   :- hotel(1), not star2.
        :- hotel(2), not med.     :- hotel(2), not star3.
        :- hotel(3), not tooFar.  :- hotel(3), not star4.
        close * med * far * tooFar.
        star4 * star3 * star2.";

    fn pi1() -> Program {
        parse(PI1, Dialect::Lpod).unwrap()
    }

    fn pi2() -> Program {
        parse(PI2, Dialect::Lpod).unwrap()
    }

    fn text(r: &Rule) -> String {
        let mut s = String::new();
        render_rule(&mut s, r);
        s
    }

    fn names(s: &AnswerSet) -> Vec<String> {
        s.atoms.iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn options_of_pi1() {
        let p = pi1();
        assert_eq!(text(&option(&p.rules[0], 1).unwrap()), "a :- not c.");
        assert_eq!(text(&option(&p.rules[0], 2).unwrap()), "b :- not c, not a.");
        assert_eq!(text(&option(&p.rules[1], 2).unwrap()), "c :- not d, not b.");
        assert!(option(&p.rules[0], 3).is_err());
        assert!(option(&p.rules[0], 0).is_err());
    }

    #[test]
    fn split_program_counts() {
        assert_eq!(split_programs(&pi1()).unwrap().len(), 4);
        assert_eq!(split_programs(&pi2()).unwrap().len(), 12);
        let regular = parse("a. b :- a.", Dialect::Lpod).unwrap();
        assert_eq!(split_programs(&regular).unwrap().len(), 1);
    }

    #[test]
    fn split_answer_sets_of_pi1() {
        let got: Vec<Vec<String>> = split_answer_sets(&pi1(), &Engine::new())
            .unwrap()
            .iter()
            .map(names)
            .collect();
        assert_eq!(got, vec![vec!["a", "b"], vec!["b"], vec!["c"]]);
    }

    #[test]
    fn assumption_rules_of_pi1() {
        let p = pi1();
        let o = |r: usize, i: usize, x: usize| -> Vec<String> {
            assumption(&p.rules[r], i, x).unwrap().iter().map(text).collect()
        };
        assert_eq!(
            o(0, 1, 1),
            vec!["body_1 :- not c.", ":- not body_1.", "a :- body_1.", ":- body_1, not a, b."]
        );
        assert_eq!(
            o(0, 1, 0),
            vec!["body_1 :- not c.", ":- body_1.", ":- body_1, a.", ":- body_1, not a, b."]
        );
        let o22 = o(1, 2, 2);
        assert!(o22.contains(&"c :- body_2.".to_string()));
        assert!(o22.contains(&":- body_2, b.".to_string()));
    }

    #[test]
    fn candidates_of_pi1() {
        let c = assumption_candidates(&pi1(), &Engine::new()).unwrap();
        let got: Vec<(Vec<String>, Vec<u32>, Vec<u32>)> = c
            .iter()
            .map(|c| (names(&c.atoms), c.degrees.0.clone(), c.assumption.0.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec!["c".to_string()], vec![1, 2], vec![0, 2]),
                (vec!["a".to_string(), "b".to_string()], vec![1, 1], vec![1, 1]),
                (vec!["b".to_string()], vec![2, 1], vec![2, 1]),
            ]
        );
    }

    #[test]
    fn pi1_preferred_under_every_criterion() {
        for c in PreferenceCriterion::ALL {
            let p = preferred(&pi1(), c, &Engine::new()).unwrap();
            assert_eq!(p.len(), 1, "{c}");
            assert_eq!(names(&p[0].atoms), vec!["a", "b"]);
        }
    }

    fn pi2_candidates() -> Vec<CandidateAnswerSet> {
        assumption_candidates(&pi2(), &Engine::new()).unwrap()
    }

    fn pi2_by_degrees(d: &[u32]) -> CandidateAnswerSet {
        pi2_candidates()
            .into_iter()
            .find(|c| c.degrees.0 == d)
            .unwrap()
    }

    #[test]
    fn candidates_of_pi2() {
        let c = pi2_candidates();
        let degrees: BTreeSet<Vec<u32>> = c.iter().map(|c| c.degrees.0.clone()).collect();
        assert_eq!(
            degrees,
            [vec![1, 3], vec![2, 2], vec![4, 1]].into_iter().collect()
        );
        assert_eq!(
            names(&pi2_by_degrees(&[1, 3]).atoms),
            vec!["close", "hotel(1)", "star2"]
        );
    }

    #[test]
    fn pi2_comparisons() {
        let s1 = pi2_by_degrees(&[1, 3]);
        let s2 = pi2_by_degrees(&[2, 2]);
        let s3 = pi2_by_degrees(&[4, 1]);
        use PreferenceCriterion::*;
        assert_eq!(compare(&s1, &s2, Cardinality), Comparison::FirstPreferred);
        assert_eq!(compare(&s1, &s3, Pareto), Comparison::Neither);
        for c in PreferenceCriterion::ALL {
            assert_eq!(compare(&s1, &s1, c), Comparison::Neither);
        }
    }

    #[test]
    fn pi2_preferred_per_criterion() {
        let sets = |c| -> BTreeSet<Vec<u32>> {
            preferred(&pi2(), c, &Engine::new())
                .unwrap()
                .into_iter()
                .map(|c| c.degrees.0)
                .collect()
        };
        use PreferenceCriterion::*;
        let s = |v: &[&[u32]]| v.iter().map(|d| d.to_vec()).collect::<BTreeSet<_>>();
        assert_eq!(sets(Cardinality), s(&[&[1, 3]]));
        assert_eq!(sets(Inclusion), s(&[&[1, 3], &[4, 1]]));
        assert_eq!(sets(Pareto), s(&[&[1, 3], &[2, 2], &[4, 1]]));
        assert_eq!(sets(PenaltySum), s(&[&[1, 3], &[2, 2]]));
    }

    #[test]
    fn inconsistent_program_has_no_candidates() {
        let p = parse(&format!("{PI1} :- ."), Dialect::Lpod).unwrap();
        assert!(assumption_candidates(&p, &Engine::new()).unwrap().is_empty());
    }

    #[test]
    fn regular_only_program_candidates() {
        let p = parse("{a}. b :- not a.", Dialect::Lpod).unwrap();
        let c = assumption_candidates(&p, &Engine::new()).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|c| c.degrees.0.is_empty()));
        for crit in PreferenceCriterion::ALL {
            assert_eq!(preferred_among(&c, crit).len(), 2);
        }
    }

    #[test]
    fn cap_is_enforced_on_the_signature() {
        assert!(matches!(
            assumption_candidates(&pi2(), &Engine::with_cap(4)),
            Err(Error::CapExceeded { size: 10, cap: 4 })
        ));
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in PreferenceCriterion::ALL {
            assert_eq!(c.name().parse::<PreferenceCriterion>().unwrap(), c);
        }
        assert!("best".parse::<PreferenceCriterion>().is_err());
    }

    #[test]
    fn relations_are_irreflexive_and_asymmetric() {
        let lists: Vec<DegreeList> = tuples(&[(1, 3), (1, 3), (1, 2)])
            .into_iter()
            .map(|t| DegreeList(t.0))
            .collect();
        for c in PreferenceCriterion::ALL {
            for a in &lists {
                assert!(!beats(a, a, c));
                for b in &lists {
                    assert!(!(beats(a, b, c) && beats(b, a, c)), "{c} {a} {b}");
                }
            }
        }
    }
}
