use alloc::collections::BTreeSet;
use alloc::string::ToString;

use super::{gamma, is_answer_set, GroundHead, GroundProgram};
use crate::error::{Error, Result};
use crate::model::Atom;

/// The unique answer set of a choice-free program whose well-founded model
/// is total, computed by the alternating fixpoint. `Ok(None)` means a
/// constraint is violated. Programs whose well-founded model leaves atoms
/// undefined are rejected.
pub fn stratified_model(p: &GroundProgram) -> Result<Option<BTreeSet<Atom>>> {
    if p.rules
        .iter()
        .any(|r| matches!(r.head, GroundHead::Choice { .. }))
    {
        return Err(Error::Unsupported(
            "choice rule in a program evaluated as a fixpoint".to_string(),
        ));
    }
    let mut under = alloc::vec![false; p.atom_count()];
    let over = loop {
        let over = gamma(p, &under);
        let next = gamma(p, &over);
        if next == under {
            break over;
        }
        under = next;
    };
    if over != under {
        let undefined = over
            .iter()
            .zip(&under)
            .position(|(o, u)| o != u)
            .map(|i| p.atom(i).to_string())
            .unwrap_or_default();
        return Err(Error::Unsupported(alloc::format!(
            "well-founded model is not total ({undefined} is undefined)"
        )));
    }
    if !p.rules.iter().all(|r| r.satisfied(&under)) {
        return Ok(None);
    }
    if !is_answer_set(p, &under) {
        return Err(Error::Inconsistent(
            "fixpoint result is not an answer set".to_string(),
        ));
    }
    Ok(Some(p.to_set(&under)))
}
