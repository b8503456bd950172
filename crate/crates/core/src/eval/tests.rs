use super::*;
use crate::asp::parse_asp;
use crate::lpod::{beats, PreferenceCriterion as C};
use crate::parser::parse;
use crate::translate::{crp2asp, lpod2asp};
use crate::{crp, lpod};
use alloc::vec;

const PI1: &str = include_str!("../../tests/programs/pi1.lpod");
const PI2: &str = include_str!("../../tests/programs/pi2.lpod");
const PI3: &str = include_str!("../../tests/programs/pi3.crp");
const PI3P: &str = include_str!("../../tests/programs/pi3p.crp");

fn t(v: &[u32]) -> AssumptionList {
    AssumptionList(v.to_vec())
}

fn ts(v: &[&[u32]]) -> Vec<AssumptionList> {
    v.iter().map(|x| t(x)).collect()
}

fn atoms(text: &str) -> BTreeSet<Atom> {
    parse(text, Dialect::Lpod)
        .unwrap()
        .rules
        .iter()
        .flat_map(|r| r.head.atoms().to_vec())
        .collect()
}

fn names(s: &AnswerSet) -> Vec<String> {
    s.atoms.iter().map(|a| a.to_string()).collect()
}

fn run_lpod(text: &str, c: C) -> EvaluatedTranslation {
    let p = parse(text, Dialect::Lpod).unwrap();
    eval_lpod(&lpod2asp(&p, c).unwrap(), &p, c, &Engine::new()).unwrap()
}

fn run_crp(text: &str) -> EvaluatedTranslation {
    let p = parse(text, Dialect::Crp2).unwrap();
    eval_crp(&crp2asp(&p).unwrap(), &p, &Engine::new()).unwrap()
}

#[test]
fn shrink_listing_set() {
    let s = atoms("ap(1,1). a(1,1). b(1,1). ap(2,1). b(2,1). ap(0,2). c(0,2). body_1(1,1).");
    let sigma = atoms("a. b. c. d.");
    assert_eq!(names(&shrink(&s, &t(&[1, 1]), &sigma)), vec!["a", "b"]);
    assert_eq!(names(&shrink(&s, &t(&[0, 2]), &sigma)), vec!["c"]);
    assert_eq!(names(&shrink(&s, &t(&[2, 1]), &sigma)), vec!["b"]);
    assert!(shrink(&BTreeSet::new(), &t(&[1, 1]), &sigma).atoms.is_empty());
}

#[test]
fn pi1_penalty_sum() {
    let e = run_lpod(PI1, C::PenaltySum);
    assert_eq!(e.ap_tuples, ts(&[&[0, 2], &[1, 1], &[2, 1]]));
    assert_eq!(e.preferred, ts(&[&[1, 1]]));
    let sets = e.preferred_sets();
    assert_eq!(sets.len(), 1);
    assert_eq!(names(&sets[0]), vec!["a", "b"]);
    let pref: Vec<String> = e.preference.iter().map(|a| a.to_string()).collect();
    for want in [
        "sum(ap(0,2),3)",
        "sum(ap(1,1),2)",
        "sum(ap(2,1),3)",
        "prf(ap(1,1),ap(0,2))",
        "prf(ap(1,1),ap(2,1))",
        "pAS(1,1)",
    ] {
        assert!(pref.iter().any(|a| a == want), "{want} missing from {pref:?}");
    }
    assert_eq!(pref.len(), 6, "{pref:?}");
}

#[test]
fn pi1_degrees_from_degree_atoms() {
    let e = run_lpod(PI1, C::Pareto);
    let d: Vec<Vec<u32>> = e.degrees.values().map(|d| d.0.clone()).collect();
    assert_eq!(d, vec![vec![1, 2], vec![1, 1], vec![2, 1]]);
    for c in C::ALL {
        assert_eq!(run_lpod(PI1, c).preferred, ts(&[&[1, 1]]), "{c:?}");
    }
}

#[test]
fn pi2_per_criterion() {
    let cases: [(C, &[&[u32]]); 4] = [
        (C::Cardinality, &[&[1, 3]]),
        (C::Inclusion, &[&[1, 3], &[4, 1]]),
        (C::Pareto, &[&[1, 3], &[2, 2], &[4, 1]]),
        (C::PenaltySum, &[&[1, 3], &[2, 2]]),
    ];
    for (c, want) in cases {
        let e = run_lpod(PI2, c);
        assert_eq!(e.ap_tuples, ts(&[&[1, 3], &[2, 2], &[4, 1]]));
        assert_eq!(e.preferred, ts(want), "{c:?}");
    }
    let e = run_lpod(PI2, C::Cardinality);
    assert_eq!(
        names(&e.preferred_sets()[0]),
        vec!["close", "hotel(1)", "star2"]
    );
}

#[test]
fn pi3_candidates_and_preferred() {
    let e = run_crp(PI3);
    assert_eq!(e.ap_tuples, ts(&[&[0, 1], &[0, 2], &[1, 0], &[1, 1], &[1, 2]]));
    assert_eq!(e.candidates, ts(&[&[0, 1], &[1, 0], &[1, 1]]));
    assert_eq!(e.preferred, ts(&[&[0, 1], &[1, 0]]));
    let sets: Vec<Vec<String>> = e.preferred_sets().iter().map(names).collect();
    assert_eq!(sets, vec![vec!["q", "r"], vec!["q", "s", "t"]]);
    let all: Vec<Vec<String>> = e.all_sets().iter().map(names).collect();
    assert_eq!(all.len(), 3);
    assert!(all.contains(&vec!["p".into(), "s".into()]));
}

#[test]
fn pi3_prime_prefers_r2() {
    let e = run_crp(PI3P);
    assert_eq!(e.preferred, ts(&[&[0, 1]]));
    assert_eq!(names(&e.preferred_sets()[0]), vec!["q", "r"]);
}

#[test]
fn regular_only_crp() {
    let e = run_crp("{a}. b :- not a.");
    assert_eq!(e.ap_tuples, ts(&[&[]]));
    assert_eq!(e.preferred, ts(&[&[]]));
    assert_eq!(e.preferred_sets().len(), 2);
}

#[test]
fn inconsistent_lpod() {
    let e = run_lpod("a * b. :- a. :- b.", C::Pareto);
    assert!(e.ap_tuples.is_empty() && e.preferred.is_empty());
}

#[test]
fn agrees_with_the_oracles_on_the_examples() {
    let engine = Engine::new();
    for text in [PI1, PI2] {
        let p = parse(text, Dialect::Lpod).unwrap();
        for c in C::ALL {
            let e = eval_lpod(&lpod2asp(&p, c).unwrap(), &p, c, &engine).unwrap();
            let mut oracle: Vec<AnswerSet> = lpod::preferred(&p, c, &engine)
                .unwrap()
                .into_iter()
                .map(|s| s.atoms)
                .collect();
            oracle.sort();
            oracle.dedup();
            assert_eq!(e.preferred_sets(), oracle, "{c:?}");
        }
    }
    for text in [PI3, PI3P] {
        let p = parse(text, Dialect::Crp2).unwrap();
        let e = eval_crp(&crp2asp(&p).unwrap(), &p, &engine).unwrap();
        assert_eq!(e.preferred_sets(), crp::preferred_answer_sets(&p, &engine).unwrap());
    }
}

/// prf as derived by the document against the criteria read directly off
/// the degree lists.
#[test]
fn preference_layer_matches_the_degree_comparison() {
    for text in [PI1, PI2, "a * b * c. b * a :- not c. {c}."] {
        for c in C::ALL {
            let e = run_lpod(text, c);
            for (x, dx) in &e.degrees {
                for (y, dy) in &e.degrees {
                    let key = |v: &AssumptionList| {
                        Term::Func("ap".into(), v.0.iter().map(|&i| Term::Int(i as i64)).collect())
                    };
                    let prf = Atom::new("prf", vec![key(x), key(y)]);
                    assert_eq!(
                        e.preference.contains(&prf),
                        beats(dx, dy, c),
                        "{c:?} {x} vs {y}"
                    );
                }
            }
        }
    }
}

#[test]
fn parsed_documents_evaluate_the_same() {
    let p = parse(PI2, Dialect::Lpod).unwrap();
    let doc = lpod2asp(&p, C::Inclusion).unwrap();
    let back = parse_asp(&doc.emit()).unwrap();
    let engine = Engine::new();
    assert_eq!(
        eval_lpod(&back, &p, C::Inclusion, &engine).unwrap(),
        eval_lpod(&doc, &p, C::Inclusion, &engine).unwrap()
    );
}

#[test]
fn monolithic_matches_slices_for_pi1() {
    let p = parse(PI1, Dialect::Lpod).unwrap();
    let doc = lpod2asp(&p, C::PenaltySum).unwrap();
    let engine = Engine::new();
    let e = eval_lpod(&doc, &p, C::PenaltySum, &engine).unwrap();
    let whole = monolithic(&doc, &engine).unwrap();
    let got: Vec<BTreeSet<Atom>> = whole.into_iter().map(|s| s.atoms).collect();
    assert_eq!(got, combined_answer_sets(&e));
}

#[test]
fn dumps_are_optional() {
    let p = parse(PI1, Dialect::Lpod).unwrap();
    let doc = lpod2asp(&p, C::Pareto).unwrap();
    let e = eval_lpod(&doc, &p, C::Pareto, &Engine::new()).unwrap();
    assert!(e.ground_dumps.is_empty());
    let opts = EvalOptions { dump_ground: true };
    let e = eval_lpod_with(&doc, &p, C::Pareto, &Engine::new(), &opts).unwrap();
    assert_eq!(e.ground_dumps.len(), 9);
    assert!(e.ground_dumps[&t(&[1, 1])].contains("a(1,1)"));
}

#[test]
fn cap_is_enforced() {
    let p = parse(PI2, Dialect::Lpod).unwrap();
    let doc = lpod2asp(&p, C::Pareto).unwrap();
    assert!(matches!(
        eval_lpod(&doc, &p, C::Pareto, &Engine::with_cap(3)),
        Err(Error::CapExceeded { .. })
    ));
}
