//! Answer-set enumeration along a splitting sequence.
//!
//! Components of the dependency graph are visited bottom-up. A component
//! whose atoms are defined without choice and without internal negation is
//! computed as a least fixpoint; a singleton atom with a choice rule is
//! branched on; any other component is enumerated over its supported atoms
//! and filtered by a local least-model check. Constraints and choice bounds
//! are checked as soon as all of their atoms are decided.

use alloc::vec;
use alloc::vec::Vec;

use super::{AtomId, GroundHead, GroundProgram, GroundRule};
use crate::error::{Error, Result};

/// Strongly connected components in dependency order (a component comes
/// after every component it depends on).
pub(crate) fn components(n: usize, edges: &[Vec<AtomId>]) -> Vec<Vec<AtomId>> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut work: Vec<(AtomId, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = work.last_mut() {
            if let Some(&w) = edges[v].get(*next) {
                *next += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out
}

#[derive(Debug)]
enum Unit {
    /// Single atom, not self-dependent.
    Single(AtomId),
    /// No choice, no negation or aggregate inside: least fixpoint.
    Positive(Vec<AtomId>),
    /// Guess-and-check over supported atoms.
    General(Vec<AtomId>),
}

struct Plan<'p> {
    p: &'p GroundProgram,
    units: Vec<Unit>,
    unit_of: Vec<usize>,
    /// Rules (by index) with a given atom in the head.
    defining: Vec<Vec<usize>>,
    /// Constraint and bound checks to run once unit `k` is decided.
    checks: Vec<Vec<usize>>,
    /// Checks with no atoms at all.
    initial_checks: Vec<usize>,
    cap: usize,
}

pub(crate) fn solve(p: &GroundProgram, cap: usize) -> Result<Vec<Vec<bool>>> {
    let plan = Plan::new(p, cap)?;
    let mut interp = vec![false; p.atom_count()];
    let mut out = Vec::new();
    if plan.initial_checks.iter().all(|&r| p.rules[r].satisfied(&interp)) {
        plan.search(0, &mut interp, &mut out)?;
    }
    Ok(out)
}

impl<'p> Plan<'p> {
    fn new(p: &'p GroundProgram, cap: usize) -> Result<Self> {
        let n = p.atom_count();
        let mut edges: Vec<Vec<AtomId>> = vec![Vec::new(); n];
        let mut defining: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (ri, r) in p.rules.iter().enumerate() {
            for &h in r.head_atoms() {
                defining[h].push(ri);
                edges[h].extend(r.body.atoms());
            }
        }
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        let comps = components(n, &edges);
        let mut unit_of = vec![0; n];
        for (k, c) in comps.iter().enumerate() {
            for &a in c {
                unit_of[a] = k;
            }
        }
        let mut units = Vec::with_capacity(comps.len());
        for (k, comp) in comps.into_iter().enumerate() {
            let inside = |a: &AtomId| unit_of[*a] == k;
            let rules = || comp.iter().flat_map(|&a| defining[a].iter().map(|&ri| &p.rules[ri]));
            if rules().any(|r| r.body.aggregates.iter().any(|g| g.atoms().any(|a| inside(&a)))) {
                return Err(Error::Unsupported(alloc::format!(
                    "recursion through an aggregate involving {}",
                    p.atom(comp[0])
                )));
            }
            let self_loop = comp.len() == 1 && edges[comp[0]].binary_search(&comp[0]).is_ok();
            let unit = if comp.len() == 1 && !self_loop {
                Unit::Single(comp[0])
            } else if rules().all(|r| {
                matches!(r.head, GroundHead::Atom(_)) && !r.body.neg.iter().any(inside)
            }) {
                Unit::Positive(comp)
            } else {
                Unit::General(comp)
            };
            units.push(unit);
        }

        let mut checks = vec![Vec::new(); units.len()];
        let mut initial_checks = Vec::new();
        for (ri, r) in p.rules.iter().enumerate() {
            let bounded = matches!(
                &r.head,
                GroundHead::Choice { lower, upper, .. } if lower.is_some() || upper.is_some()
            );
            if r.head != GroundHead::None && !bounded {
                continue;
            }
            let last = r
                .body
                .atoms()
                .chain(r.head_atoms().iter().copied())
                .map(|a| unit_of[a])
                .max();
            match last {
                Some(k) => checks[k].push(ri),
                None => initial_checks.push(ri),
            }
        }
        Ok(Plan {
            p,
            units,
            unit_of,
            defining,
            checks,
            initial_checks,
            cap,
        })
    }

    fn rule(&self, ri: usize) -> &GroundRule {
        &self.p.rules[ri]
    }

    fn checks_pass(&self, k: usize, interp: &[bool]) -> bool {
        self.checks[k]
            .iter()
            .all(|&ri| self.rule(ri).satisfied(interp))
    }

    fn search(&self, start: usize, interp: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) -> Result<()> {
        let mut touched: Vec<AtomId> = Vec::new();
        let mut k = start;
        let result = loop {
            if k == self.units.len() {
                out.push(interp.clone());
                break Ok(());
            }
            match &self.units[k] {
                Unit::Single(a) => {
                    let a = *a;
                    let mut derived = false;
                    let mut choosable = false;
                    for &ri in &self.defining[a] {
                        let r = self.rule(ri);
                        if r.body.holds(interp) {
                            match r.head {
                                GroundHead::Atom(_) => derived = true,
                                _ => choosable = true,
                            }
                        }
                    }
                    if derived {
                        interp[a] = true;
                        touched.push(a);
                    } else if choosable {
                        // false branch first, then true
                        if self.checks_pass(k, interp) {
                            if let Err(e) = self.search(k + 1, interp, out) {
                                break Err(e);
                            }
                        }
                        interp[a] = true;
                        touched.push(a);
                    }
                }
                Unit::Positive(atoms) => {
                    self.least_fixpoint(atoms, None, interp);
                    touched.extend(atoms.iter().copied().filter(|&a| interp[a]));
                }
                Unit::General(atoms) => {
                    if let Err(e) = self.enumerate(k, atoms, interp, out) {
                        break Err(e);
                    }
                    break Ok(());
                }
            }
            if !self.checks_pass(k, interp) {
                break Ok(());
            }
            k += 1;
        };
        for a in touched {
            interp[a] = false;
        }
        result
    }

    /// Least fixpoint of the rules defining `atoms`, with atoms of other
    /// units read from `interp`. Negation and aggregates are evaluated
    /// against `reference` when given (reduct semantics), else `interp`.
    /// Choice heads contribute only atoms true in `reference`.
    fn least_fixpoint(
        &self,
        atoms: &[AtomId],
        reference: Option<&[bool]>,
        interp: &mut [bool],
    ) {
        let mut changed = true;
        while changed {
            changed = false;
            for &a in atoms {
                if interp[a] {
                    continue;
                }
                let fires = self.defining[a].iter().any(|&ri| {
                    let r = self.rule(ri);
                    let neg_ok = |x: &AtomId| match reference {
                        Some(rf) => !rf[*x],
                        None => !interp[*x],
                    };
                    let agg_ok = r.body.aggregates.iter().all(|g| match reference {
                        Some(rf) => g.holds(rf),
                        None => g.holds(interp),
                    });
                    let head_ok = match r.head {
                        GroundHead::Atom(_) => true,
                        _ => reference.is_some_and(|rf| rf[a]),
                    };
                    head_ok
                        && r.body.pos.iter().all(|&x| interp[x])
                        && r.body.neg.iter().all(neg_ok)
                        && agg_ok
                });
                if fires {
                    interp[a] = true;
                    changed = true;
                }
            }
        }
    }

    fn enumerate(
        &self,
        k: usize,
        atoms: &[AtomId],
        interp: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) -> Result<()> {
        // atoms with some rule whose external part can hold
        let external_ok = |r: &GroundRule| {
            r.body
                .pos
                .iter()
                .all(|&x| self.unit_of[x] == k || interp[x])
                && r.body
                    .neg
                    .iter()
                    .all(|&x| self.unit_of[x] == k || !interp[x])
                && r.body.aggregates.iter().all(|g| g.holds(interp))
        };
        let supported: Vec<AtomId> = atoms
            .iter()
            .copied()
            .filter(|&a| self.defining[a].iter().any(|&ri| external_ok(self.rule(ri))))
            .collect();
        if supported.len() > self.cap || supported.len() >= 63 {
            return Err(Error::CapExceeded {
                size: supported.len(),
                cap: self.cap,
            });
        }
        let mut guess = vec![false; interp.len()];
        for mask in 0u64..(1u64 << supported.len()) {
            for (bit, &a) in supported.iter().enumerate() {
                interp[a] = mask & (1 << bit) != 0;
            }
            guess.clone_from(interp);
            for &a in atoms {
                interp[a] = false;
            }
            self.least_fixpoint(atoms, Some(&guess), interp);
            let stable = atoms.iter().all(|&a| interp[a] == guess[a]);
            if stable && self.checks_pass(k, interp) {
                self.search(k + 1, interp, out)?;
            }
            for &a in atoms {
                interp[a] = false;
            }
        }
        Ok(())
    }
}
