use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edit, EditSet, Graph};
use crate::recognition::{find_forbidden_containing, is_l_cluster_graph};

/// Reorders a solution so that every edit, applied in turn, toggles a pair
/// lying inside a forbidden subgraph of the current graph. Such an order
/// exists for every inclusion-minimal solution; failing to find one means
/// `f` has a redundant edit (or is not a solution at all).
///
/// Backtracking over the remaining edits, trying them in their given order;
/// dead states are memoised by the set of edits still pending. Intended for
/// solutions of up to a few dozen edits.
pub fn order_edits_lemma2(g: &Graph, l: usize, f: &EditSet) -> Result<EditSet> {
    let end = g.apply_edits(f)?;
    if !is_l_cluster_graph(&end, l) {
        return Err(Error::Invariant("edit set is not a solution".into()));
    }
    if f.len() > 64 {
        return Err(Error::TooLarge(format!(
            "{} edits, at most 64 supported",
            f.len()
        )));
    }
    let edits = f.as_slice();
    let all: u64 = if edits.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edits.len()) - 1
    };
    let mut current = g.clone();
    let mut order = Vec::with_capacity(edits.len());
    let mut dead = HashSet::new();
    if arrange(&mut current, l, edits, all, &mut order, &mut dead) {
        Ok(EditSet::from_edits(order.into_iter().map(|i| edits[i])).expect("same edits as input"))
    } else {
        Err(Error::Invariant(
            "no order makes every edit destroy a forbidden subgraph; the edit set is not minimal"
                .into(),
        ))
    }
}

fn arrange(
    g: &mut Graph,
    l: usize,
    edits: &[Edit],
    pending: u64,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
) -> bool {
    if pending == 0 {
        return true;
    }
    if dead.contains(&pending) {
        return false;
    }
    for (i, e) in edits.iter().enumerate() {
        if pending >> i & 1 == 0 || find_forbidden_containing(g, l, e.u, e.v).is_none() {
            continue;
        }
        g.toggle(e.u, e.v);
        order.push(i);
        if arrange(g, l, edits, pending & !(1 << i), order, dead) {
            return true;
        }
        order.pop();
        g.toggle(e.u, e.v);
    }
    dead.insert(pending);
    false
}
