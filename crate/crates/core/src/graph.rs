//! Small simple undirected graphs on at most 32 vertices.
//!
//! Adjacency is stored as one `u32` neighbour bitmask per vertex, so the
//! structural operations everything else is built from (complement, induced
//! subgraph, deletion, edge contraction, the sum and join constructors) are
//! plain word operations. Values are immutable: every operation returns a new
//! graph, which makes them safe to share across worker threads.

use std::fmt;

use thiserror::Error;

/// Capacity of the adjacency representation.
pub const MAX_VERTICES: usize = 32;

/// Errors from constructing or transforming a [`SmallGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

/// A set of vertex ids, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> VertexSet {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertex ids in ascending order.
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

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected edge, normalized so that `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    /// Normalizing constructor. Panics on a loop; endpoint range against a
    /// concrete graph is checked by the operations that take edges.
    pub fn new(u: usize, v: usize) -> Edge {
        assert!(u != v, "loop edge at vertex {u}");
        assert!(u < MAX_VERTICES && v < MAX_VERTICES);
        Edge {
            u: u.min(v) as u8,
            v: u.max(v) as u8,
        }
    }

    pub fn u(self) -> usize {
        self.u as usize
    }

    pub fn v(self) -> usize {
        self.v as usize
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph on at most 32 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl SmallGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<SmallGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(SmallGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<SmallGraph, GraphError> {
        let mut g = SmallGraph::new(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let mut total = 0u32;
        for v in 0..self.order() {
            total += self.adj[v].count_ones();
        }
        (total / 2) as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.order());
        VertexSet(self.adj[v])
    }

    /// Neighbour bitmask of `v`; the raw form of [`Self::neighbors`].
    pub(crate) fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            let mut rest = self.adj[u] & !VertexSet::full(u + 1).bits();
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(Edge::new(u, v))
                }
            })
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order() * self.order().saturating_sub(1) / 2
    }

    /// Edge-complement on the same vertex set and labels.
    #[must_use]
    pub fn complement(&self) -> SmallGraph {
        let n = self.order();
        let full = VertexSet::full(n).bits();
        let mut out = SmallGraph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..n {
            out.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        out
    }

    /// Subgraph induced on `support`, with the kept vertices relabelled to
    /// `0..|support|-1` in increasing original order.
    pub fn induced_subgraph(&self, support: VertexSet) -> Result<SmallGraph, GraphError> {
        if !support.is_subset_of(self.vertex_set()) {
            let vertex = (support.bits() & !self.vertex_set().bits()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order(),
            });
        }
        let mut out = SmallGraph {
            n: support.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (new_v, old_v) in support.iter().enumerate() {
            out.adj[new_v] = compress_bits(self.adj[old_v], support.bits());
        }
        Ok(out)
    }

    /// Equivalent to `induced_subgraph` on `V - {v}`.
    pub fn delete_vertex(&self, v: usize) -> Result<SmallGraph, GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        self.induced_subgraph(self.vertex_set().without(v))
    }

    /// Contracts the edge `uv` and simplifies. The merged vertex occupies
    /// `min(u,v)`'s slot and every vertex above `max(u,v)` shifts down by one.
    /// Contracting a non-edge is rejected: it is not an induced-minor step.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<SmallGraph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let a = u.min(v);
        let b = u.max(v);
        let n = self.order();
        let mut out = SmallGraph {
            n: (n - 1) as u8,
            adj: [0; MAX_VERTICES],
        };
        let merged = (self.adj[a] | self.adj[b]) & !(1 << a) & !(1 << b);
        let mut new_v = 0;
        for w in 0..n {
            if w == b {
                continue;
            }
            let row = if w == a { merged } else { self.adj[w] };
            // redirect an edge to b into the merged slot a, then drop slot b
            let row = if row & (1 << b) != 0 {
                (row & !(1 << b)) | (1 << a)
            } else {
                row
            };
            out.adj[new_v] = drop_bit(row, b);
            new_v += 1;
        }
        // the merged row may have picked up a self-bit via redirection
        out.adj[a] &= !(1 << a);
        Ok(out)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    #[must_use]
    pub fn permuted(&self, perm: &[usize]) -> SmallGraph {
        let n = self.order();
        debug_assert_eq!(perm.len(), n);
        let mut out = SmallGraph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..n {
            let mut bits = self.adj[v];
            let mut row = 0u32;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << perm[w];
            }
            out.adj[perm[v]] = row;
        }
        out
    }

    /// Returns the graph extended by one fresh vertex (taking id `n`)
    /// adjacent to exactly `neighbors`.
    pub fn with_added_vertex(&self, neighbors: VertexSet) -> Result<SmallGraph, GraphError> {
        if self.order() >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.order() + 1));
        }
        if !neighbors.is_subset_of(self.vertex_set()) {
            let vertex = (neighbors.bits() & !self.vertex_set().bits()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order(),
            });
        }
        Ok(self.with_new_vertex(neighbors.bits()))
    }

    /// Appends a fresh vertex adjacent to exactly the `neighbors` bitmask.
    pub(crate) fn with_new_vertex(&self, neighbors: u32) -> SmallGraph {
        let n = self.order();
        debug_assert!(n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !VertexSet::full(n).bits(), 0);
        let mut out = *self;
        out.n += 1;
        out.adj[n] = neighbors;
        let mut bits = neighbors;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out.adj[w] |= 1 << n;
        }
        out
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "])")
    }
}

/// Keeps the bits of `value` selected by `mask`, packed densely from bit 0.
fn compress_bits(value: u32, mask: u32) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let pos = m.trailing_zeros();
        if value & (1 << pos) != 0 {
            out |= 1 << i;
        }
        m &= m - 1;
        i += 1;
    }
    out
}

/// Removes bit position `b`, shifting all higher bits down by one.
fn drop_bit(value: u32, b: usize) -> u32 {
    let low = value & ((1u32 << b) - 1);
    let high = if b + 1 >= 32 { 0 } else { value >> (b + 1) << b };
    low | high
}

/// Disjoint union; the second operand's labels are shifted by `g.order()`.
pub fn zero_sum(g: &SmallGraph, h: &SmallGraph) -> Result<SmallGraph, GraphError> {
    let ng = g.order();
    let nh = h.order();
    if ng + nh > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(ng + nh));
    }
    let mut out = *g;
    out.n = (ng + nh) as u8;
    for v in 0..nh {
        out.adj[ng + v] = h.adj[v] << ng;
    }
    Ok(out)
}

/// Disjoint union followed by identifying `gv` with `hv`. The merged vertex
/// keeps `gv`'s slot; the remaining vertices of `h` follow `g`'s in order.
pub fn one_sum(
    g: &SmallGraph,
    h: &SmallGraph,
    gv: usize,
    hv: usize,
) -> Result<SmallGraph, GraphError> {
    let ng = g.order();
    let nh = h.order();
    if gv >= ng {
        return Err(GraphError::VertexOutOfRange {
            vertex: gv,
            order: ng,
        });
    }
    if hv >= nh {
        return Err(GraphError::VertexOutOfRange {
            vertex: hv,
            order: nh,
        });
    }
    let n = ng + nh - 1;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    // position of an h-vertex w != hv in the result: ng + rank of w in V(h) - {hv}
    let map_h = |w: usize| ng + w - usize::from(w > hv);
    let mut out = *g;
    out.n = n as u8;
    for w in 0..nh {
        if w == hv {
            continue;
        }
        let mut row = 0u32;
        let mut bits = h.adj[w];
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            row |= 1 << if x == hv { gv } else { map_h(x) };
        }
        out.adj[map_h(w)] = row;
    }
    let mut bits = h.adj[hv];
    while bits != 0 {
        let x = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out.adj[gv] |= 1 << map_h(x);
    }
    Ok(out)
}

/// Disjoint union plus all edges between the two parts.
pub fn join(g: &SmallGraph, h: &SmallGraph) -> Result<SmallGraph, GraphError> {
    let ng = g.order();
    let nh = h.order();
    let mut out = zero_sum(g, h)?;
    let g_bits = VertexSet::full(ng).bits();
    let h_bits = VertexSet::full(ng + nh).bits() & !g_bits;
    for v in 0..ng {
        out.adj[v] |= h_bits;
    }
    for v in ng..ng + nh {
        out.adj[v] |= g_bits;
    }
    Ok(out)
}

/// The 1-join: all edges added between the non-shared parts of the two
/// operands. With no shared vertex this is exactly [`join`]; with
/// `shared = (gv, hv)` the pair is identified first (as in [`one_sum`]) and
/// the merged vertex takes part in no new edges.
pub fn one_join(
    g: &SmallGraph,
    h: &SmallGraph,
    shared: Option<(usize, usize)>,
) -> Result<SmallGraph, GraphError> {
    match shared {
        None => join(g, h),
        Some((gv, hv)) => {
            let ng = g.order();
            let nh = h.order();
            let mut out = one_sum(g, h, gv, hv)?;
            let n = ng + nh - 1;
            let g_bits = VertexSet::full(ng).bits() & !(1 << gv);
            let h_bits = VertexSet::full(n).bits() & !VertexSet::full(ng).bits();
            for v in (0..ng).filter(|&v| v != gv) {
                out.adj[v] |= h_bits;
            }
            for v in ng..n {
                out.adj[v] |= g_bits;
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn edge_list_cycle() {
        let g = families::cycle(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.has_edge(0, 4));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn edge_list_empty_and_dedup() {
        let g = SmallGraph::from_edge_list(3, &[]).unwrap();
        assert_eq!(g.size(), 0);
        let g = SmallGraph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(
            SmallGraph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
        assert_eq!(
            SmallGraph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert!(SmallGraph::new(33).is_err());
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let g = families::complete(4).complement();
        assert_eq!(g.size(), 0);
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn complement_is_involution() {
        let g = families::cycle(5);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = families::cycle(5);
        let p4 = c5
            .induced_subgraph(VertexSet::from_iter([0, 1, 2, 3]))
            .unwrap();
        assert_eq!(p4, families::path(4));

        assert_eq!(c5.induced_subgraph(c5.vertex_set()).unwrap(), c5);

        let k3 = families::complete(5)
            .induced_subgraph(VertexSet::from_iter([1, 3, 4]))
            .unwrap();
        assert_eq!(k3, families::complete(3));

        assert!(c5.induced_subgraph(VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        let c5 = families::cycle(5);
        assert_eq!(c5.delete_vertex(0).unwrap(), families::path(4));
        assert_eq!(
            SmallGraph::new(1).unwrap().delete_vertex(0).unwrap().order(),
            0
        );
        assert_eq!(
            families::path(4).delete_vertex(3).unwrap(),
            families::path(3)
        );
        assert!(c5.delete_vertex(5).is_err());
    }

    #[test]
    fn delete_equals_induced_on_rest() {
        let g = families::c6_plus();
        for v in g.vertices() {
            assert_eq!(
                g.delete_vertex(v).unwrap(),
                g.induced_subgraph(g.vertex_set().without(v)).unwrap()
            );
        }
    }

    #[test]
    fn contraction_examples() {
        let c5 = families::cycle(5);
        for e in c5.edges().collect::<Vec<_>>() {
            let c4 = c5.contract_edge(e.u(), e.v()).unwrap();
            assert_eq!(c4.order(), 4);
            assert_eq!(c4.size(), 4);
            assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        }
        let k3 = families::complete(4).contract_edge(1, 2).unwrap();
        assert_eq!(k3, families::complete(3));

        // path a-b-c-d, contract bc
        let p3 = families::path(4).contract_edge(1, 2).unwrap();
        assert_eq!(p3, families::path(3));

        assert_eq!(
            c5.contract_edge(0, 2),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn contraction_relabelling_is_compact() {
        // hexagon, contract 2-3: vertices 4,5 shift down to 3,4
        let c6 = families::cycle(6);
        let g = c6.contract_edge(2, 3).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g, families::cycle(5));
    }

    #[test]
    fn zero_sum_and_join_examples() {
        let k1 = families::complete(1);
        let g = zero_sum(&k1, &k1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 0);

        let p3 = join(&k1, &SmallGraph::new(2).unwrap()).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.degree(0), 2);
    }

    #[test]
    fn one_sum_identifies_vertices() {
        // two triangles glued at a vertex: 5 vertices, 6 edges, one cut vertex
        let k3 = families::complete(3);
        let g = one_sum(&k3, &k3, 2, 0).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(2), 4);
    }

    #[test]
    fn one_join_matches_complement_identity() {
        let g = families::cycle(5);
        let h = families::path(3);
        let direct = one_join(&g, &h, None).unwrap();
        let via_complement = zero_sum(&g.complement(), &h.complement())
            .unwrap()
            .complement();
        assert_eq!(direct, via_complement);
    }

    #[test]
    fn one_join_shared_matches_complement_identity() {
        let g = families::cycle(5);
        let h = families::path(4);
        for gv in g.vertices() {
            for hv in h.vertices() {
                let direct = one_join(&g, &h, Some((gv, hv))).unwrap();
                let via = one_sum(&g.complement(), &h.complement(), gv, hv)
                    .unwrap()
                    .complement();
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn permuted_relabels() {
        let p3 = families::path(3);
        let g = p3.permuted(&[2, 0, 1]);
        assert!(g.has_edge(2, 0));
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(2, 1));
    }
}
