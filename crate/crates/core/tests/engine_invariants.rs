//! Rule addition and removal invariants of the engine, checked on random
//! ground normal programs over at most ten atoms.

use std::collections::BTreeSet;

use lpodc_core::engine::is_answer_set;
use lpodc_core::{Atom, Engine, GroundProgram};
use proptest::prelude::*;

const ATOMS: usize = 10;

#[derive(Clone, Debug)]
struct R {
    head: Option<usize>,
    pos: Vec<usize>,
    neg: Vec<usize>,
}

fn atom(i: usize) -> Atom {
    Atom::prop(&format!("p{i}"))
}

fn fresh(i: usize) -> Atom {
    Atom::prop(&format!("q{i}"))
}

fn rule_strategy(n: usize) -> impl Strategy<Value = R> {
    (
        prop::option::weighted(0.85, 0..n),
        prop::collection::vec(0..n, 0..3),
        prop::collection::vec(0..n, 0..3),
    )
        .prop_map(|(head, pos, neg)| R { head, pos, neg })
}

fn program_strategy() -> impl Strategy<Value = Vec<R>> {
    (1..=ATOMS).prop_flat_map(|n| prop::collection::vec(rule_strategy(n), 1..12))
}

fn build(rules: &[R]) -> GroundProgram {
    let mut g = GroundProgram::new();
    for i in 0..ATOMS {
        g.atom_id(&atom(i));
    }
    for r in rules {
        push(&mut g, r);
    }
    g
}

fn push(g: &mut GroundProgram, r: &R) {
    let pos: Vec<Atom> = r.pos.iter().map(|&i| atom(i)).collect();
    let neg: Vec<Atom> = r.neg.iter().map(|&i| atom(i)).collect();
    g.add_normal(r.head.map(atom).as_ref(), &pos, &neg);
}

fn holds(r: &R, s: &BTreeSet<Atom>) -> bool {
    r.pos.iter().all(|&i| s.contains(&atom(i))) && r.neg.iter().all(|&i| !s.contains(&atom(i)))
}

fn answer_sets(g: &GroundProgram) -> Vec<BTreeSet<Atom>> {
    Engine::with_cap(64)
        .answer_sets(g)
        .unwrap()
        .into_iter()
        .map(|s| s.atoms)
        .collect()
}

fn stable_in(g: &GroundProgram, s: &BTreeSet<Atom>) -> bool {
    g.interp_of(s).is_some_and(|i| is_answer_set(g, &i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// (a) adding `A <- body` for some A in S, (b) adding a rule whose body
    /// S falsifies, (d) adding a constraint S satisfies.
    #[test]
    fn additions_keep_answer_sets(rules in program_strategy(), extra in rule_strategy(ATOMS)) {
        let g = build(&rules);
        for s in answer_sets(&g) {
            if let Some(a) = s.iter().next() {
                let mut g2 = g.clone();
                let i: usize = a.predicate[1..].parse().unwrap();
                push(&mut g2, &R { head: Some(i), ..extra.clone() });
                prop_assert!(stable_in(&g2, &s), "(a) {:?}", s);
            }
            if !holds(&extra, &s) {
                let mut g2 = g.clone();
                push(&mut g2, &extra);
                prop_assert!(stable_in(&g2, &s), "(b) {:?}", s);
            }
            let constraint = R { head: None, ..extra.clone() };
            if !holds(&constraint, &s) {
                let mut g2 = g.clone();
                push(&mut g2, &constraint);
                prop_assert!(stable_in(&g2, &s), "(d) {:?}", s);
            }
        }
    }

    /// (c) removing a rule whose body S falsifies, (e) removing a constraint
    /// S satisfies.
    #[test]
    fn removals_keep_answer_sets(rules in program_strategy(), pick in any::<prop::sample::Index>()) {
        let g = build(&rules);
        let k = pick.index(rules.len());
        let mut rest = rules.clone();
        let removed = rest.remove(k);
        let g2 = build(&rest);
        for s in answer_sets(&g) {
            if !holds(&removed, &s) {
                prop_assert!(stable_in(&g2, &s), "(c) {:?}", s);
            }
            if removed.head.is_none() {
                prop_assert!(stable_in(&g2, &s), "(e) {:?}", s);
            }
        }
    }

    /// Dropping negated atoms that S leaves false does not change whether S
    /// is an answer set.
    #[test]
    fn false_negative_literals_can_be_dropped(rules in program_strategy(), extra in rule_strategy(ATOMS)) {
        let extra = R { head: extra.head.or(Some(0)), ..extra };
        let mut with = build(&rules);
        push(&mut with, &extra);
        let mut without = build(&rules);
        push(&mut without, &R { neg: Vec::new(), ..extra.clone() });
        for s in answer_sets(&with).into_iter().chain(answer_sets(&without)) {
            if extra.neg.iter().all(|&i| !s.contains(&atom(i))) {
                prop_assert_eq!(stable_in(&with, &s), stable_in(&without, &s));
            }
        }
    }

    /// Fresh atoms defined over the old signature put answer sets in 1-1
    /// correspondence with the old ones.
    #[test]
    fn fresh_definitions_are_conservative(
        rules in program_strategy(),
        defs in prop::collection::vec((0..3usize, rule_strategy(ATOMS)), 0..6),
    ) {
        let g = build(&rules);
        let mut g2 = g.clone();
        for (q, r) in &defs {
            let pos: Vec<Atom> = r.pos.iter().map(|&i| atom(i)).collect();
            let neg: Vec<Atom> = r.neg.iter().map(|&i| atom(i)).collect();
            g2.add_normal(Some(&fresh(*q)), &pos, &neg);
        }
        let before = answer_sets(&g);
        let after = answer_sets(&g2);
        let q: BTreeSet<Atom> = (0..3).map(fresh).collect();
        let mut mapped: Vec<BTreeSet<Atom>> = after
            .iter()
            .map(|s| s.difference(&q).cloned().collect())
            .collect();
        prop_assert_eq!(mapped.len(), after.len());
        mapped.sort();
        mapped.dedup();
        prop_assert_eq!(mapped.len(), after.len(), "not injective");
        prop_assert_eq!(mapped, before);
    }
}
