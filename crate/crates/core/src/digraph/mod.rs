//! Loopless simple digraphs (digons allowed, parallel arcs not) with the
//! structural queries the rest of the crate is built on: degrees, strongly
//! connected components, induced-subdigraph acyclicity, girth (underlying
//! multigraph, so a digon is a 2-cycle), digirth, and short-cycle
//! enumeration.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::VecDeque;
use thiserror::Error;

mod cycles;
pub mod io;

pub use cycles::{CycleEnumeration, DEFAULT_CYCLE_CAP};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// Immutable loopless digraph on vertices `0..n` with at most one arc per
/// ordered pair. Both arcs of a pair (a digon) may be present.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arc_count: usize,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, m={})", self.n(), self.arc_count)
    }
}

/// Induced subdigraph together with the map back to the parent's vertex ids:
/// `parent_ids[new_id] == old_id`.
#[derive(Clone, Debug)]
pub struct InducedSubdigraph {
    pub digraph: Digraph,
    pub parent_ids: Vec<usize>,
}

impl InducedSubdigraph {
    /// Translate a set of local vertex ids back into the parent's ids.
    pub fn to_parent(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.parent_ids[v]).collect()
    }
}

impl Digraph {
    /// Digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Build from an arc list, rejecting loops, duplicates, and out-of-range
    /// endpoints.
    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
            arc_count += 1;
        }
        for u in 0..n {
            out_adj[u].sort_unstable();
            if out_adj[u].windows(2).any(|w| w[0] == w[1]) {
                let v = out_adj[u].windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(GraphError::DuplicateArc(u, v));
            }
            in_adj[u].sort_unstable();
        }
        Ok(Digraph {
            out_adj,
            in_adj,
            arc_count,
        })
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// d⁺(v) + d⁻(v).
    pub fn total_degree(&self, v: usize) -> usize {
        self.out_adj[v].len() + self.in_adj[v].len()
    }

    /// `(d_out, d_in, d_total)` for `v`, rejecting out-of-range ids.
    pub fn degrees(&self, v: usize) -> Result<(usize, usize, usize), GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let d_out = self.out_adj[v].len();
        let d_in = self.in_adj[v].len();
        Ok((d_out, d_in, d_out + d_in))
    }

    /// Maximum total degree Δ(D); 0 for the empty digraph.
    pub fn max_total_degree(&self) -> usize {
        (0..self.n()).map(|v| self.total_degree(v)).max().unwrap_or(0)
    }

    /// True if both `u -> v` and `v -> u` are present for some pair.
    pub fn has_digon(&self) -> bool {
        self.arcs().any(|(u, v)| u < v && self.has_arc(v, u))
    }

    /// Strongly connected components, each sorted ascending, returned in a
    /// topological order of the condensation (sources first).
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        const UNSET: usize = usize::MAX;
        let mut index = vec![UNSET; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut next_index = 0usize;
        // Iterative Tarjan: frames hold (vertex, next out-neighbor slot).
        let mut frames: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != UNSET {
                continue;
            }
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            frames.push((root, 0));
            while let Some(&(v, pos)) = frames.last() {
                if pos < self.out_adj[v].len() {
                    frames.last_mut().unwrap().1 += 1;
                    let w = self.out_adj[v][pos];
                    if index[w] == UNSET {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(parent, _)) = frames.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        // Tarjan emits components in reverse topological order.
        comps.reverse();
        comps
    }

    /// True iff the whole digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let all: Vec<usize> = self.vertices().collect();
        self.is_acyclic_induced(&all)
    }

    /// True iff `D[S]` has no directed cycle (Kahn peeling restricted to `S`).
    /// `S` must contain distinct, in-range ids.
    pub fn is_acyclic_induced(&self, s: &[usize]) -> bool {
        let n = self.n();
        let mut in_set = vec![false; n];
        for &v in s {
            debug_assert!(v < n && !in_set[v]);
            in_set[v] = true;
        }
        let mut indeg = vec![0usize; n];
        for &v in s {
            indeg[v] = self.in_adj[v].iter().filter(|&&u| in_set[u]).count();
        }
        let mut queue: VecDeque<usize> = s.iter().copied().filter(|&v| indeg[v] == 0).collect();
        let mut peeled = 0usize;
        while let Some(v) = queue.pop_front() {
            peeled += 1;
            for &w in &self.out_adj[v] {
                if in_set[w] {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        peeled == s.len()
    }

    /// Length of a shortest cycle in the underlying multigraph: 2 when a
    /// digon is present, otherwise the girth of the underlying simple graph.
    /// `None` when the underlying multigraph is a forest.
    pub fn girth(&self) -> Option<usize> {
        if self.has_digon() {
            return Some(2);
        }
        let adj = self.underlying_adj();
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[start] = 0;
            queue.clear();
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    // No cycle through deeper tree levels can beat `b`.
                    if 2 * dist[x] + 1 > b {
                        break;
                    }
                }
                for &y in &adj[x] {
                    if y == parent[x] {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else {
                        let cand = dist[x] + dist[y] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            if best == Some(3) {
                break;
            }
        }
        best
    }

    /// Length of a shortest directed cycle; `None` iff the digraph is acyclic.
    pub fn digirth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            dist.fill(usize::MAX);
            dist[start] = 0;
            queue.clear();
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    if dist[x] + 1 >= b {
                        break;
                    }
                }
                for &y in &self.out_adj[x] {
                    if y == start {
                        let cand = dist[x] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    } else if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if best == Some(2) {
                break;
            }
        }
        best
    }

    /// Induced subdigraph on `vertices` (distinct, in range), with the id map
    /// back to this digraph.
    pub fn induced(&self, vertices: &[usize]) -> InducedSubdigraph {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        debug_assert!(keep.windows(2).all(|w| w[0] != w[1]));
        let mut local = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            assert!(old < self.n(), "vertex {old} out of range");
            local[old] = new;
        }
        let mut arcs = Vec::new();
        for &old in &keep {
            for &w in &self.out_adj[old] {
                if local[w] != usize::MAX {
                    arcs.push((local[old], local[w]));
                }
            }
        }
        let digraph = Digraph::from_arcs(keep.len(), arcs).expect("induced arcs are valid");
        InducedSubdigraph {
            digraph,
            parent_ids: keep,
        }
    }

    /// Induced subdigraph on the complement of `remove`.
    pub fn remove_vertices(&self, remove: &[usize]) -> InducedSubdigraph {
        let mut gone = vec![false; self.n()];
        for &v in remove {
            assert!(v < self.n(), "vertex {v} out of range");
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Underlying simple undirected adjacency (digons collapse to one edge);
    /// neighbor lists sorted.
    pub fn underlying_adj(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in self.arcs() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// All cycles of the underlying multigraph of length `< g`, each reported
    /// once up to rotation and reflection, in a deterministic order. A digon
    /// is a length-2 cycle. Stops with an overflow result when more than
    /// `cap` cycles are found.
    pub fn enumerate_short_cycles(&self, g: usize, cap: usize) -> CycleEnumeration {
        cycles::enumerate_short_cycles(self, g, cap)
    }
}

/// A cycle reported by enumeration or search. `directed` distinguishes a
/// directed cycle (consecutive pairs, wrapping, are arcs) from a cycle of the
/// underlying multigraph (consecutive pairs are adjacent in either
/// direction; length 2 only as a digon).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub directed: bool,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Check the witness against a digraph: distinct in-range vertices and
    /// every consecutive (wrapping) pair realized by an arc (directed) or by
    /// adjacency, with length 2 requiring a digon.
    pub fn verify(&self, d: &Digraph) -> bool {
        let k = self.vertices.len();
        if k < 2 {
            return false;
        }
        let mut seen = vec![false; d.n()];
        for &v in &self.vertices {
            if v >= d.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if k == 2 {
            // Only a digon realizes a 2-cycle, whether directed or not.
            let (u, v) = (self.vertices[0], self.vertices[1]);
            return d.has_arc(u, v) && d.has_arc(v, u);
        }
        for i in 0..k {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            let ok = if self.directed {
                d.has_arc(u, v)
            } else {
                d.has_arc(u, v) || d.has_arc(v, u)
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DigraphRepr {
            n: self.n(),
            arcs: self.arcs().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DigraphRepr::deserialize(deserializer)?;
        Digraph::from_arcs(repr.n, repr.arcs).map_err(D::Error::custom)
    }
}
