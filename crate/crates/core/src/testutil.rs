//! Small graph builders shared by unit tests.

use crate::digraph::Digraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn digon() -> Digraph {
    Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()
}

pub fn directed_cycle(n: usize) -> Digraph {
    assert!(n >= 2);
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn directed_path(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

/// Every pair joined by both arcs.
pub fn bidirected_complete(n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// The transitive tournament 0→1, 0→2, 1→2 extended to n vertices.
pub fn acyclic_tournament(n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            arcs.push((u, v));
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

/// General random digraph: each ordered pair independently with probability
/// `arc_prob` (digons allowed). Not the paper's model; test fodder only.
pub fn random_digraph(n: usize, arc_prob: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen::<f64>() < arc_prob {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}
