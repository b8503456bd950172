//! Seeded random programs for the cross-checks.

use lpodc_core::parser::parse;
use lpodc_core::{Dialect, Program};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ATOMS: [&str; 4] = ["a", "b", "c", "d"];

/// Shape limits for generated programs.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub atoms: usize,
    pub ordered: usize,
    pub max_head: usize,
    pub regular: usize,
    pub cr: usize,
    pub ordered_cr: usize,
}

impl Limits {
    pub const LPOD: Limits = Limits {
        atoms: 4,
        ordered: 3,
        max_head: 3,
        regular: 3,
        cr: 0,
        ordered_cr: 0,
    };

    pub const CRP: Limits = Limits {
        atoms: 4,
        ordered: 1,
        max_head: 3,
        regular: 3,
        cr: 2,
        ordered_cr: 1,
    };
}

fn body(rng: &mut ChaCha8Rng, atoms: &[&str], max: usize) -> String {
    let n = rng.gen_range(0..=max);
    let lits: Vec<String> = (0..n)
        .map(|_| {
            let a = atoms.choose(rng).expect("atoms");
            if rng.gen_bool(0.5) {
                format!("not {a}")
            } else {
                a.to_string()
            }
        })
        .collect();
    lits.join(", ")
}

fn rule(head: &str, arrow: &str, body: &str) -> String {
    match (head.is_empty(), body.is_empty()) {
        (_, true) if arrow == ":+" => format!("{head} :+."),
        (false, true) => format!("{head}."),
        _ => format!("{head} {arrow} {body}."),
    }
}

fn ordered_head(rng: &mut ChaCha8Rng, atoms: &[&str], max_head: usize) -> String {
    let n = rng.gen_range(2..=max_head.min(atoms.len()));
    let mut pick = atoms.to_vec();
    pick.shuffle(rng);
    pick[..n].join(" * ")
}

fn regular(rng: &mut ChaCha8Rng, atoms: &[&str], out: &mut Vec<String>, limit: usize) {
    for _ in 0..rng.gen_range(0..=limit) {
        let b = body(rng, atoms, 2);
        if rng.gen_bool(0.2) && !b.is_empty() {
            out.push(format!(":- {b}."));
        } else {
            let h = atoms.choose(rng).expect("atoms");
            out.push(rule(h, ":-", &b));
        }
    }
}

/// Source text of a random LPOD with at least one ordered rule.
pub fn lpod_text(rng: &mut ChaCha8Rng, lim: Limits) -> String {
    let atoms = &ATOMS[..rng.gen_range(2..=lim.atoms.min(ATOMS.len()))];
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=lim.ordered) {
        let h = ordered_head(rng, atoms, lim.max_head);
        out.push(rule(&h, ":-", &body(rng, atoms, 2)));
    }
    regular(rng, atoms, &mut out, lim.regular);
    out.shuffle(rng);
    out.join("\n") + "\n"
}

/// Source text of a random CR-Prolog2 program, possibly with one prefer fact.
pub fn crp_text(rng: &mut ChaCha8Rng, lim: Limits) -> String {
    let atoms = &ATOMS[..rng.gen_range(2..=lim.atoms.min(ATOMS.len()))];
    let mut out = Vec::new();
    let mut labels = Vec::new();
    let mut next = 1;
    let mut label = |labels: &mut Vec<String>| {
        let l = format!("r{next}");
        next += 1;
        labels.push(l.clone());
        l
    };
    for _ in 0..rng.gen_range(0..=lim.cr) {
        let h = atoms.choose(rng).expect("atoms").to_string();
        let l = label(&mut labels);
        out.push(format!("{l}: {}", rule(&h, ":+", &body(rng, atoms, 2))));
    }
    for _ in 0..rng.gen_range(0..=lim.ordered_cr) {
        let h = ordered_head(rng, atoms, lim.max_head);
        let l = label(&mut labels);
        out.push(format!("{l}: {}", rule(&h, ":+", &body(rng, atoms, 2))));
    }
    for _ in 0..rng.gen_range(0..=lim.ordered) {
        let h = ordered_head(rng, atoms, lim.max_head);
        let l = label(&mut labels);
        out.push(format!("{l}: {}", rule(&h, ":-", &body(rng, atoms, 2))));
    }
    regular(rng, atoms, &mut out, lim.regular);
    out.shuffle(rng);
    if labels.len() >= 2 && rng.gen_bool(0.5) {
        let mut two = labels.clone();
        two.shuffle(rng);
        out.push(format!("prefer({}, {}).", two[0], two[1]));
    }
    out.join("\n") + "\n"
}

/// `count` programs from `seed`, each with its source text.
pub fn corpus(dialect: Dialect, count: usize, seed: u64) -> Vec<(String, Program)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let text = match dialect {
            Dialect::Lpod => lpod_text(&mut rng, Limits::LPOD),
            Dialect::Crp2 => crp_text(&mut rng, Limits::CRP),
        };
        // the generator only emits well-formed text; skip anything else
        if let Ok(p) = parse(&text, dialect) {
            if lpodc_core::model::validate_program(&p).is_valid() {
                out.push((text, p));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_reproducible() {
        let a = corpus(Dialect::Lpod, 20, 7);
        let b = corpus(Dialect::Lpod, 20, 7);
        assert_eq!(
            a.iter().map(|x| &x.0).collect::<Vec<_>>(),
            b.iter().map(|x| &x.0).collect::<Vec<_>>()
        );
        assert_ne!(a[0].0, corpus(Dialect::Lpod, 1, 8)[0].0);
    }

    #[test]
    fn programs_respect_the_limits() {
        for (_, p) in corpus(Dialect::Lpod, 100, 1) {
            assert!(p.signature().len() <= 4);
            let sizes = p.head_sizes();
            assert!((1..=3).contains(&sizes.len()));
            assert!(sizes.iter().all(|&n| (2..=3).contains(&n)));
        }
        for (_, p) in corpus(Dialect::Crp2, 100, 1) {
            let (k, l, m) = p.crp_bounds();
            assert!(p.signature().len() <= 4);
            assert!(k <= 2 && l - k <= 1 && m - l <= 1);
            assert!(p.prefer.len() <= 1);
        }
    }
}
