use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use lpodc_core::asp::same_tokens;
use lpodc_core::eval::{eval_crp, eval_lpod, shrink};
use lpodc_core::parser::parse;
use lpodc_core::translate::{crp2asp, lpod2asp, lpod2asp_base, preference_block};
use lpodc_core::{crp, lpod};
use lpodc_core::{AnswerSet, AssumptionList, Dialect, Engine, PreferenceCriterion as C, Program};

fn read(rel: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", rel].iter().collect();
    fs::read_to_string(path).unwrap()
}

fn program(name: &str) -> Program {
    let dialect = if name.ends_with(".crp") { Dialect::Crp2 } else { Dialect::Lpod };
    parse(&read(&format!("programs/{name}")), dialect).unwrap()
}

fn names(s: &AnswerSet) -> Vec<String> {
    s.atoms.iter().map(|a| a.to_string()).collect()
}

#[test]
fn pi1_candidates_and_preferred() {
    let p = program("pi1.lpod");
    let engine = Engine::new();
    let cands = lpod::assumption_candidates(&p, &engine).unwrap();
    let mut seen: Vec<(Vec<String>, Vec<u32>)> = cands
        .iter()
        .map(|c| (names(&c.atoms), c.degrees.0.clone()))
        .collect();
    seen.sort();
    assert_eq!(
        seen,
        vec![
            (vec!["a".into(), "b".into()], vec![1, 1]),
            (vec!["b".into()], vec![2, 1]),
            (vec!["c".into()], vec![1, 2]),
        ]
    );
    for c in C::ALL {
        let pref = lpod::preferred(&p, c, &engine).unwrap();
        assert_eq!(pref.len(), 1);
        assert_eq!(names(&pref[0].atoms), vec!["a", "b"]);
        let e = eval_lpod(&lpod2asp(&p, c).unwrap(), &p, c, &engine).unwrap();
        assert_eq!(e.preferred_sets(), vec![pref[0].atoms.clone()]);
    }
}

#[test]
fn pi2_preferred_per_criterion() {
    let p = program("pi2.lpod");
    let engine = Engine::new();
    let s1 = vec!["close", "hotel(1)", "star2"];
    let s2 = vec!["hotel(2)", "med", "star3"];
    let s3 = vec!["hotel(3)", "star4", "tooFar"];
    let cases = [
        (C::Cardinality, vec![s1.clone()]),
        (C::Inclusion, vec![s1.clone(), s3.clone()]),
        (C::Pareto, vec![s1.clone(), s2.clone(), s3.clone()]),
        (C::PenaltySum, vec![s1.clone(), s2.clone()]),
    ];
    for (c, want) in cases {
        let mut got: Vec<Vec<String>> = lpod::preferred(&p, c, &engine)
            .unwrap()
            .iter()
            .map(|s| names(&s.atoms))
            .collect();
        got.sort();
        let mut want: Vec<Vec<String>> = want
            .into_iter()
            .map(|v| v.into_iter().map(String::from).collect())
            .collect();
        want.sort();
        assert_eq!(got, want, "{c:?}");
        let e = eval_lpod(&lpod2asp(&p, c).unwrap(), &p, c, &engine).unwrap();
        let mut tr: Vec<Vec<String>> = e.preferred_sets().iter().map(names).collect();
        tr.sort();
        assert_eq!(tr, want, "{c:?}");
    }
    let degrees: BTreeSet<Vec<u32>> = lpod::assumption_candidates(&p, &engine)
        .unwrap()
        .into_iter()
        .map(|c| c.degrees.0)
        .collect();
    assert_eq!(degrees, BTreeSet::from([vec![1, 3], vec![2, 2], vec![4, 1]]));
}

#[test]
fn pi3_generalized_candidate_preferred() {
    let p = program("pi3.crp");
    let engine = Engine::new();
    let gas = crp::generalized_answer_sets(&p, &engine).unwrap();
    assert_eq!(gas.len(), 5);
    let cands = crp::candidates_among(&gas);
    assert_eq!(cands.len(), 3);
    let pref: Vec<Vec<String>> = crp::preferred_answer_sets(&p, &engine)
        .unwrap()
        .iter()
        .map(names)
        .collect();
    assert_eq!(pref, vec![vec!["q", "r"], vec!["q", "s", "t"]]);

    let p3 = program("pi3p.crp");
    let pref: Vec<Vec<String>> = crp::preferred_answer_sets(&p3, &engine)
        .unwrap()
        .iter()
        .map(names)
        .collect();
    assert_eq!(pref, vec![vec!["q", "r"]]);
    let e = eval_crp(&crp2asp(&p3).unwrap(), &p3, &engine).unwrap();
    assert_eq!(e.preferred, vec![AssumptionList(vec![0, 1])]);
}

#[test]
fn golden_texts() {
    let pi1 = lpod2asp_base(&program("pi1.lpod")).unwrap().emit();
    assert!(same_tokens(&pi1, &read("golden/pi1_base.lp")).unwrap());

    let p2 = program("pi2.lpod");
    let base = read("golden/pi2_base.lp");
    for (c, file) in [
        (C::Cardinality, "pi2_cardinality.lp"),
        (C::Inclusion, "pi2_inclusion.lp"),
        (C::Pareto, "pi2_pareto.lp"),
        (C::PenaltySum, "pi2_penalty_sum.lp"),
    ] {
        let block = read(&format!("golden/{file}"));
        let full = lpod2asp(&p2, c).unwrap().emit();
        assert!(same_tokens(&full, &format!("{base}\n{block}")).unwrap(), "{c:?}");
        let only = preference_block(&p2, c).unwrap().emit();
        assert!(same_tokens(&only, &format!("#const maxdegree = 4.\n{block}")).unwrap());
    }

    let pi3 = crp2asp(&program("pi3.crp")).unwrap().emit();
    assert!(same_tokens(&pi3, &read("golden/pi3.lp")).unwrap());
    let pi3p = crp2asp(&program("pi3p.crp")).unwrap().emit();
    let golden = read("golden/pi3.lp");
    let split = golden.find("candidate(").unwrap();
    let want = format!(
        "{}\n{}\n{}",
        &golden[..split],
        read("golden/pi3p_extension.lp"),
        &golden[split..]
    );
    assert!(same_tokens(&pi3p, &want).unwrap());
}

#[test]
fn shrink_is_the_projection() {
    let p = program("pi1.lpod");
    let e = eval_lpod(&lpod2asp(&p, C::Pareto).unwrap(), &p, C::Pareto, &Engine::new()).unwrap();
    let x = AssumptionList(vec![0, 2]);
    let s = &e.tuple_answer_sets[&x][0];
    assert_eq!(names(&shrink(s, &x, &p.signature())), vec!["c"]);
}
