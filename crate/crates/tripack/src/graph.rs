//! Compact value-type graphs on at most 62 vertices.
//!
//! A [`Graph`] stores one `u64` adjacency bit row per vertex, so every
//! predicate the search and packing layers need (triangle enumeration,
//! complement, bipartiteness, independent sets, ...) runs on word operations.
//! The 62-vertex cap keeps every row in one machine word and every graph
//! within the short form of the graph6 encoding; the search itself never
//! goes past 26 vertices.
//!
//! All types are immutable values after construction and all operations are
//! pure functions, so everything here is freely shareable across threads.

use thiserror::Error;

/// Hard cap on vertex count (one `u64` bit row, short-form graph6).
pub const MAX_VERTICES: usize = 62;

/// Largest vertex count accepted by [`Graph::bipartite_edit_distance`].
pub const MAX_EDIT_DISTANCE_VERTICES: usize = 28;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertices {0} and {1} are not adjacent, so the set is not a clique")]
    NotAClique(usize, usize),
    #[error("exact bipartite edit distance is limited to {MAX_EDIT_DISTANCE_VERTICES} vertices, got {0}")]
    EditDistanceTooLarge(usize),
}

// ---------------------------------------------------------------------------
// Vertex sets
// ---------------------------------------------------------------------------

/// A set of vertices as a bit mask; bit `v` set iff vertex `v` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut m = 0u64;
        for v in vs {
            debug_assert!(v < MAX_VERTICES);
            m |= 1u64 << v;
        }
        VertexSet(m)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet::from_iter(vs)
    }
}

// ---------------------------------------------------------------------------
// Triangles and edges
// ---------------------------------------------------------------------------

/// Three vertices `a < b < c`. Produced by triangle enumeration, in which
/// case all three pairs are edges of the host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    a: u8,
    b: u8,
    c: u8,
}

impl Triangle {
    /// Sorts the three vertices. Panics if they are not distinct.
    pub fn new(u: usize, v: usize, w: usize) -> Triangle {
        let mut t = [u, v, w];
        t.sort_unstable();
        assert!(t[0] < t[1] && t[1] < t[2], "triangle vertices must be distinct");
        assert!(t[2] < MAX_VERTICES);
        Triangle {
            a: t[0] as u8,
            b: t[1] as u8,
            c: t[2] as u8,
        }
    }

    #[inline]
    pub fn vertices(self) -> [usize; 3] {
        [self.a as usize, self.b as usize, self.c as usize]
    }

    #[inline]
    pub fn edges(self) -> [Edge; 3] {
        [
            Edge::new(self.a as usize, self.b as usize),
            Edge::new(self.a as usize, self.c as usize),
            Edge::new(self.b as usize, self.c as usize),
        ]
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.a as usize == v || self.b as usize == v || self.c as usize == v
    }

    /// Relabels each vertex through `map` (old index -> new index).
    pub fn relabel(self, map: impl Fn(usize) -> usize) -> Triangle {
        let [a, b, c] = self.vertices();
        Triangle::new(map(a), map(b), map(c))
    }
}

impl std::fmt::Debug for Triangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{},{}}}", self.a, self.b, self.c)
    }
}

/// An unordered vertex pair `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    a: u8,
    b: u8,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Edge {
        assert!(u != v, "loop edge");
        assert!(u < MAX_VERTICES && v < MAX_VERTICES);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Edge { a: a as u8, b: b as u8 }
    }

    #[inline]
    pub fn endpoints(self) -> (usize, usize) {
        (self.a as usize, self.b as usize)
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Simple undirected graph on `n <= 62` vertices, one adjacency bit row per
/// vertex. Value semantics: `Clone`, `Eq` and `Hash` are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with the given edges; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let full = VertexSet::full(n).0;
        let adj = (0..n).map(|i| full & !(1u64 << i)).collect();
        Graph { n, adj }
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Complete bipartite graph `K_{a,b}`; side one is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::new(a + b, &edges).unwrap()
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Graph { n, adj }
    }

    /// Blowup of `base`: vertex `i` of the base becomes an independent class
    /// of `sizes[i]` vertices; classes are fully joined iff their base
    /// vertices are adjacent. Class vertices are numbered consecutively.
    pub fn blowup(base: &Graph, sizes: &[usize]) -> Graph {
        assert_eq!(base.n(), sizes.len());
        let n: usize = sizes.iter().sum();
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let mut edges = Vec::new();
        for i in 0..base.n() {
            for j in (i + 1)..base.n() {
                if base.has_edge(i, j) {
                    for u in offsets[i]..offsets[i] + sizes[i] {
                        for v in offsets[j]..offsets[j] + sizes[j] {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push(Edge::new(u, v));
            }
        }
        out
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|i| (!self.adj[i]) & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabeled in increasing order of original
    /// index.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let verts: Vec<usize> = keep.iter().collect();
        let m = verts.len();
        let mut adj = vec![0u64; m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            }
        }
        Graph { n: m, adj }
    }

    /// Induced subgraph with one vertex removed (indices above `v` shift down).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.n);
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Same vertex set, with all edges at `v` removed. Keeps labels stable,
    /// which is what packing averaging wants.
    pub fn isolate_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.n);
        let mut adj = self.adj.clone();
        let bit = 1u64 << v;
        for row in adj.iter_mut() {
            *row &= !bit;
        }
        adj[v] = 0;
        Graph { n: self.n, adj }
    }

    /// New graph on `n + 1` vertices: the added vertex (index `n`) is adjacent
    /// to exactly `neighborhood`. The extension is triangle-free iff the host
    /// is and `neighborhood` is independent.
    pub fn extend_with_vertex(&self, neighborhood: VertexSet) -> Graph {
        assert!(self.n < MAX_VERTICES);
        debug_assert!(neighborhood.is_subset_of(self.vertices()));
        let v = self.n;
        let mut adj = Vec::with_capacity(self.n + 1);
        for (i, row) in self.adj.iter().enumerate() {
            let bit = if neighborhood.contains(i) { 1u64 << v } else { 0 };
            adj.push(row | bit);
        }
        adj.push(neighborhood.0);
        Graph { n: self.n + 1, adj }
    }

    /// Applies a vertex relabeling: `perm[old] = new`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = self.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if u < v {
                    adj[perm[u]] |= 1u64 << perm[v];
                    adj[perm[v]] |= 1u64 << perm[u];
                }
            }
        }
        Graph { n: self.n, adj }
    }

    /// All triangles, each once, in lexicographic order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let above_a = self.adj[a] >> (a + 1) << (a + 1);
            let mut bs = above_a;
            while bs != 0 {
                let b = bs.trailing_zeros() as usize;
                bs &= bs - 1;
                let mut cs = above_a & self.adj[b] >> (b + 1) << (b + 1);
                while cs != 0 {
                    let c = cs.trailing_zeros() as usize;
                    cs &= cs - 1;
                    out.push(Triangle::new(a, b, c));
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                if self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// 2-coloring by breadth-first layering, if one exists. Each component's
    /// lowest-index vertex goes to the first class, so isolated vertices land
    /// in `U` and the output is deterministic.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color_u = VertexSet::EMPTY;
        let mut color_w = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        let mut queue = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen = seen.with(root);
            color_u = color_u.with(root);
            queue.clear();
            queue.push(root);
            while let Some(u) = queue.pop() {
                let u_in_u = color_u.contains(u);
                for v in self.neighbors(u).iter() {
                    if !seen.contains(v) {
                        seen = seen.with(v);
                        if u_in_u {
                            color_w = color_w.with(v);
                        } else {
                            color_u = color_u.with(v);
                        }
                        queue.push(v);
                    } else if color_u.contains(v) == u_in_u {
                        return None;
                    }
                }
            }
        }
        Some((color_u, color_w))
    }

    /// Complement is bipartite, i.e. the vertex set is spanned by two
    /// disjoint cliques.
    pub fn is_co_bipartite(&self) -> bool {
        self.complement().is_bipartite().is_some()
    }

    /// True iff `within` induces a complete graph.
    pub fn is_clique(&self, within: VertexSet) -> bool {
        for v in within.iter() {
            let others = within.without(v);
            if others.0 & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Lazily yields every independent set (including the empty set) exactly
    /// once, in increasing order of the set read as a bit mask.
    pub fn independent_sets(&self) -> IndependentSets<'_> {
        IndependentSets {
            graph: self,
            stack: vec![(VertexSet::EMPTY, self.vertices())],
        }
    }

    /// Maximum matching of the clique induced by `inside`, restricted to
    /// `inside \ exclude`: consecutive vertices in index order are paired, so
    /// the result is deterministic and leaves at most one vertex uncovered.
    pub fn greedy_clique_matching(
        &self,
        inside: VertexSet,
        exclude: VertexSet,
    ) -> Result<Vec<(usize, usize)>, GraphError> {
        let verts: Vec<usize> = inside.iter().collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return Err(GraphError::NotAClique(u, v));
                }
            }
        }
        let usable: Vec<usize> = inside.difference(exclude).iter().collect();
        Ok(usable.chunks_exact(2).map(|p| (p[0], p[1])).collect())
    }

    /// Exact minimum number of edge deletions to reach a bipartite graph:
    /// `e(G)` minus the maximum cut, by brute force over all bipartitions
    /// with vertex 0 pinned to one side.
    pub fn bipartite_edit_distance(&self) -> Result<usize, GraphError> {
        if self.n > MAX_EDIT_DISTANCE_VERTICES {
            return Err(GraphError::EditDistanceTooLarge(self.n));
        }
        let e = self.edge_count();
        if self.n <= 1 || e == 0 {
            return Ok(0);
        }
        // Gray-code walk over the side containing everything but vertex 0;
        // each step flips one vertex and updates the cut size in O(1).
        let free = self.n - 1;
        let mut side = 0u64; // vertices currently opposite vertex 0, among 1..n
        let mut cut: i64 = 0;
        let mut best: i64 = 0;
        for step in 1u64..(1u64 << free) {
            let v = step.trailing_zeros() as usize + 1;
            let deg = self.degree(v) as i64;
            let to_side = (self.adj[v] & side).count_ones() as i64;
            let bit = 1u64 << v;
            if side & bit == 0 {
                // v moves across: edges to `side` stop crossing, the rest start.
                cut += deg - 2 * to_side;
                side |= bit;
            } else {
                cut -= deg - 2 * (to_side - 1);
                side &= !bit;
            }
            best = best.max(cut);
        }
        Ok(e - best as usize)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator behind [`Graph::independent_sets`]. The split on the highest
/// remaining vertex makes the emission order equal the numeric order of the
/// set masks while keeping memory at O(n) frames.
pub struct IndependentSets<'a> {
    graph: &'a Graph,
    stack: Vec<(VertexSet, VertexSet)>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let (base, allowed) = self.stack.pop()?;
            if allowed.is_empty() {
                return Some(base);
            }
            let v = 63 - allowed.0.leading_zeros() as usize;
            let taken = allowed
                .without(v)
                .difference(self.graph.neighbors(v));
            self.stack.push((base.with(v), taken));
            self.stack.push((base, allowed.without(v)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k4_minus_edge() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn construction_and_edge_counts() {
        let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(), 5);
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);
        // Duplicates collapse.
        let dup = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert_eq!(Graph::new(63, &[]), Err(GraphError::TooManyVertices(63)));
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement(), c5.relabel(&[0, 2, 4, 1, 3]));
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = Graph::complete(5);
        let sub = k5.induced_subgraph(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(sub, Graph::complete(3));

        let c5 = Graph::cycle(5);
        for v in 0..5 {
            let sub = c5.delete_vertex(v);
            assert_eq!(sub.n(), 4);
            assert_eq!(sub.edge_count(), 3);
            assert!(sub.is_bipartite().is_some());
        }
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY), Graph::empty(0));
    }

    #[test]
    fn triangle_enumeration() {
        assert_eq!(Graph::complete(4).triangles().len(), 4);
        assert!(Graph::cycle(5).triangles().is_empty());
        let tris = k4_minus_edge().triangles();
        // Two triangles sharing the surviving common edge {0,1}.
        assert_eq!(tris.len(), 2);
        assert_eq!(tris[0], Triangle::new(0, 1, 2));
        assert_eq!(tris[1], Triangle::new(0, 1, 3));
        assert!(Graph::petersen().is_triangle_free());
        assert!(!Graph::complete(3).is_triangle_free());
    }

    #[test]
    fn bipartite_examples() {
        let (u, w) = Graph::cycle(6).is_bipartite().unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(w.len(), 3);
        assert!(Graph::cycle(5).is_bipartite().is_none());
        let (u, w) = Graph::empty(5).is_bipartite().unwrap();
        assert_eq!(u, VertexSet::full(5));
        assert!(w.is_empty());
    }

    #[test]
    fn co_bipartite_examples() {
        let two_cliques = Graph::complete(13).disjoint_union(&Graph::complete(13));
        assert!(two_cliques.is_co_bipartite());
        assert!(!Graph::cycle(5).complement().is_co_bipartite());
        assert!(Graph::complete(26).is_co_bipartite());
    }

    #[test]
    fn independent_set_streams() {
        let sets: Vec<_> = Graph::complete(3).independent_sets().collect();
        assert_eq!(
            sets,
            vec![
                VertexSet::EMPTY,
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
        assert_eq!(Graph::empty(5).independent_sets().count(), 32);
        assert_eq!(Graph::cycle(5).independent_sets().count(), 11);
    }

    #[test]
    fn independent_sets_sorted_and_correct() {
        for (n, edges) in [(5usize, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
                           (6, vec![(0, 1), (2, 3), (1, 4), (4, 5)])] {
            let g = Graph::new(n, &edges).unwrap();
            let got: Vec<u64> = g.independent_sets().map(|s| s.0).collect();
            let expect: Vec<u64> = (0u64..1 << n)
                .filter(|&m| {
                    let s = VertexSet(m);
                    s.iter().all(|v| (g.neighbors(v).0 & m) == 0)
                })
                .collect();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn clique_matchings() {
        let k6 = Graph::complete(6);
        let all = VertexSet::full(6);
        assert_eq!(
            k6.greedy_clique_matching(all, VertexSet::EMPTY).unwrap(),
            vec![(0, 1), (2, 3), (4, 5)]
        );
        let k5 = Graph::complete(5);
        let m = k5
            .greedy_clique_matching(VertexSet::full(5), VertexSet::EMPTY)
            .unwrap();
        assert_eq!(m, vec![(0, 1), (2, 3)]);
        let m = k5
            .greedy_clique_matching(VertexSet::full(5), VertexSet::singleton(0))
            .unwrap();
        assert_eq!(m, vec![(1, 2), (3, 4)]);
        let c4 = Graph::cycle(4);
        assert_eq!(
            c4.greedy_clique_matching(VertexSet::full(4), VertexSet::EMPTY),
            Err(GraphError::NotAClique(0, 2))
        );
    }

    /// Independent brute-force maximum cut: plain subset loop, no Gray code.
    fn naive_edit_distance(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        let mut best = 0;
        for side in 0u64..(1 << (n - 1)) {
            let side = side << 1; // vertex 0 stays on the other side
            let mut cut = 0;
            for e in g.edges() {
                let (u, v) = e.endpoints();
                if ((side >> u) ^ (side >> v)) & 1 == 1 {
                    cut += 1;
                }
            }
            best = best.max(cut);
        }
        g.edge_count() - best
    }

    #[test]
    fn edit_distance_examples() {
        assert_eq!(Graph::cycle(5).bipartite_edit_distance().unwrap(), 1);
        assert_eq!(Graph::complete(4).bipartite_edit_distance().unwrap(), 2);
        for n in 2..=12 {
            let kn = Graph::complete(n);
            let expect = n * (n - 1) / 2 - (n * n) / 4;
            assert_eq!(kn.bipartite_edit_distance().unwrap(), expect);
        }
        assert_eq!(
            Graph::empty(29).bipartite_edit_distance(),
            Err(GraphError::EditDistanceTooLarge(29))
        );
    }

    #[test]
    fn blowup_shapes() {
        let blowup = Graph::blowup(&Graph::cycle(5), &[5; 5]);
        assert_eq!(blowup.n(), 25);
        assert_eq!(blowup.edge_count(), 125);
        assert!(blowup.is_triangle_free());
        let doubled = Graph::blowup(&Graph::cycle(5), &[2, 1, 1, 1, 1]);
        assert_eq!(doubled.n(), 6);
        assert!(doubled.is_triangle_free());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n)
            .prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .collect();
                let len = pairs.len();
                (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), len))
            })
            .prop_map(|(n, pairs, flags)| {
                let edges: Vec<_> = pairs
                    .into_iter()
                    .zip(flags)
                    .filter_map(|(e, keep)| keep.then_some(e))
                    .collect();
                Graph::new(n, &edges).unwrap()
            })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn triangles_match_naive_loop(g in arb_graph(10)) {
            let mut naive = Vec::new();
            for a in 0..g.n() {
                for b in (a + 1)..g.n() {
                    for c in (b + 1)..g.n() {
                        if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                            naive.push(Triangle::new(a, b, c));
                        }
                    }
                }
            }
            prop_assert_eq!(g.triangles(), naive);
        }

        #[test]
        fn bipartition_has_no_internal_edges(g in arb_graph(12)) {
            if let Some((u, w)) = g.is_bipartite() {
                prop_assert_eq!(u.union(w), g.vertices());
                prop_assert!(u.intersection(w).is_empty());
                for e in g.edges() {
                    let (a, b) = e.endpoints();
                    prop_assert!(u.contains(a) != u.contains(b));
                }
            } else {
                // Non-bipartite graphs contain an odd closed walk, hence an
                // odd cycle; parity of any spanning layering must clash.
                prop_assert!(g.edge_count() >= 3);
            }
        }

        #[test]
        fn edit_distance_matches_naive(g in arb_graph(9)) {
            prop_assert_eq!(g.bipartite_edit_distance().unwrap(), naive_edit_distance(&g));
        }

        #[test]
        fn edit_distance_zero_iff_bipartite(g in arb_graph(10)) {
            prop_assert_eq!(
                g.bipartite_edit_distance().unwrap() == 0,
                g.is_bipartite().is_some()
            );
        }

        #[test]
        fn co_triangle_free_iff_independence_at_most_two(g in arb_graph(8)) {
            let alpha = g.independent_sets().map(|s| s.len()).max().unwrap();
            prop_assert_eq!(alpha <= 2, g.complement().is_triangle_free());
        }

        #[test]
        fn independent_set_count_matches_filter(g in arb_graph(6)) {
            let count = g.independent_sets().count();
            let naive = (0u64..1 << g.n())
                .filter(|&m| {
                    VertexSet(m).iter().all(|v| (g.neighbors(v).0 & m) == 0)
                })
                .count();
            prop_assert_eq!(count, naive);
        }
    }
}
