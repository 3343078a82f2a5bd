//! The finite simplicial presentation graph, its clique catalogue, and
//! clique-subgroup support tests.

use crate::error::{Error, Result};
use crate::vertex_group::VertexGroup;
use serde::{Deserialize, Serialize};

pub type VertexId = usize;

/// Hard cap on the number of vertices; vertex sets are stored as `u32`
/// bitmasks and the clique catalogue is exponential in the worst case.
pub const MAX_VERTICES: usize = 24;

/// A set of vertex ids, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(iter: I) -> VertexSet {
        let mut mask = 0u32;
        for v in iter {
            debug_assert!(v < 32);
            mask |= 1 << v;
        }
        VertexSet(mask)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: VertexId) {
        debug_assert!(v < 32);
        self.0 |= 1 << v;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..32).filter(|&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A vertex set every two members of which are adjacent. Only obtainable
/// from a graph, so holding one is proof of cliqueness.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Clique(VertexSet);

impl Clique {
    pub const EMPTY: Clique = Clique(VertexSet::EMPTY);

    pub fn vertex_set(&self) -> VertexSet {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(v)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.0.to_vec()
    }
}

/// Finite simplicial graph with one vertex group per vertex. Immutable
/// after construction; the clique catalogue (including the empty clique)
/// is computed once and cached.
#[derive(Clone, Debug)]
pub struct PresentationGraph {
    groups: Vec<VertexGroup>,
    adj: Vec<u32>,
    cliques: Vec<Clique>,
    cliques_by_size: Vec<std::ops::Range<usize>>,
}

impl PresentationGraph {
    pub fn new(groups: Vec<VertexGroup>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = groups.len();
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertex_count: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex {
                    vertex: u,
                    vertex_count: n,
                });
            }
            if v >= n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    vertex_count: n,
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if adj[u] & (1 << v) != 0 {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge".into(),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut graph = PresentationGraph {
            groups,
            adj,
            cliques: Vec::new(),
            cliques_by_size: Vec::new(),
        };
        graph.enumerate_cliques();
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, v: VertexId) -> &VertexGroup {
        &self.groups[v]
    }

    pub fn groups(&self) -> &[VertexGroup] {
        &self.groups
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// True iff `{u,v}` is an edge; false when `u == v`.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Bitmask of neighbours of `v`.
    pub fn neighbours(&self, v: VertexId) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_infinite_vertex_group(&self) -> bool {
        self.groups.iter().any(|g| !g.is_finite())
    }

    /// All cliques of the graph including the empty one, each listed once,
    /// ordered by (size, vertex set).
    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    /// The cliques of size `m`.
    pub fn cliques_of_size(&self, m: usize) -> &[Clique] {
        match self.cliques_by_size.get(m) {
            Some(range) => &self.cliques[range.clone()],
            None => &[],
        }
    }

    pub fn max_clique_size(&self) -> usize {
        self.cliques_by_size.len().saturating_sub(1)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        let vs = set.to_vec();
        if vs.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Validates `set` as a clique of this graph.
    pub fn clique(&self, set: VertexSet) -> Result<Clique> {
        if self.is_clique(set) {
            Ok(Clique(set))
        } else {
            Err(Error::NotAClique {
                vertices: set.to_vec(),
            })
        }
    }

    pub fn clique_from_vertices<I: IntoIterator<Item = VertexId>>(&self, iter: I) -> Result<Clique> {
        self.clique(VertexSet::from_vertices(iter))
    }

    /// Bron–Kerbosch-style expansion: every clique extends a smaller clique
    /// by its least new vertex, so growing by increasing vertex id within
    /// the common neighbourhood lists each clique exactly once.
    fn enumerate_cliques(&mut self) {
        let n = self.vertex_count();
        let mut found: Vec<VertexSet> = vec![VertexSet::EMPTY];
        let mut stack: Vec<(VertexSet, u32)> = Vec::new();
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        stack.push((VertexSet::EMPTY, full));
        while let Some((current, candidates)) = stack.pop() {
            let mut rest = candidates;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut next = current;
                next.insert(v);
                found.push(next);
                // only vertices above v that neighbour v can extend further
                let mask = rest & self.adj[v];
                if mask != 0 {
                    stack.push((next, mask));
                }
            }
        }
        found.sort_by_key(|s| (s.len(), *s));
        let max_size = found.last().map(|s| s.len()).unwrap_or(0);
        let mut by_size = Vec::with_capacity(max_size + 1);
        let mut start = 0;
        for m in 0..=max_size {
            let end = found.partition_point(|s| s.len() <= m);
            by_size.push(start..end);
            start = end;
        }
        self.cliques = found.into_iter().map(Clique).collect();
        self.cliques_by_size = by_size;
    }
}
