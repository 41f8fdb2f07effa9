//! Enumeration of short cycles in the underlying multigraph.

use super::{CycleWitness, Digraph};

/// Hard cap on enumeration output, guarding combinatorial blowup.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Outcome of [`Digraph::enumerate_short_cycles`].
#[derive(Clone, Debug)]
pub enum CycleEnumeration {
    Complete(Vec<CycleWitness>),
    /// The cap was hit; `found` is the number of cycles reached before
    /// giving up (the enumeration is incomplete).
    Overflow { found: usize },
}

impl CycleEnumeration {
    pub fn unwrap_complete(self) -> Vec<CycleWitness> {
        match self {
            CycleEnumeration::Complete(cycles) => cycles,
            CycleEnumeration::Overflow { found } => {
                panic!("cycle enumeration overflowed after {found} cycles")
            }
        }
    }
}

pub(super) fn enumerate_short_cycles(d: &Digraph, g: usize, cap: usize) -> CycleEnumeration {
    assert!(g >= 3, "cycle length threshold must be at least 3");
    let mut out: Vec<CycleWitness> = Vec::new();

    // Digons are the only length-2 cycles of the underlying multigraph.
    for (u, v) in d.arcs() {
        if u < v && d.has_arc(v, u) {
            if out.len() == cap {
                return CycleEnumeration::Overflow { found: out.len() };
            }
            out.push(CycleWitness {
                vertices: vec![u, v],
                directed: false,
            });
        }
    }

    // Simple cycles of length 3..g-1 in the underlying simple graph, each
    // reported once: the path starts at the cycle's smallest vertex s, uses
    // only vertices > s, and the reflection with path[1] < path.last() is
    // kept. Neighbor lists are sorted, so the output order is deterministic.
    let adj = d.underlying_adj();
    let n = d.n();
    let max_len = g - 1;
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        if !extend(&adj, s, max_len, &mut path, &mut on_path, &mut out, cap) {
            on_path[s] = false;
            return CycleEnumeration::Overflow { found: out.len() };
        }
        on_path[s] = false;
    }
    CycleEnumeration::Complete(out)
}

/// DFS extension; returns false when the cap was exceeded.
fn extend(
    adj: &[Vec<usize>],
    s: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<CycleWitness>,
    cap: usize,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= 3 && path[1] < last && adj[last].binary_search(&s).is_ok() {
        if out.len() == cap {
            return false;
        }
        out.push(CycleWitness {
            vertices: path.clone(),
            directed: false,
        });
    }
    if path.len() == max_len {
        return true;
    }
    for &next in &adj[last] {
        if next <= s || on_path[next] {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        let ok = extend(adj, s, max_len, path, on_path, out, cap);
        on_path[next] = false;
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}
