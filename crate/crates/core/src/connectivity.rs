//! Connectivity predicates: reachability, cut vertices, 2-connectivity and
//! Whitney vertex connectivity.
//!
//! Two deliberately independent routes exist for the central question. The
//! fast path `is_2_connected` does a lowpoint depth-first search for cut
//! vertices; `vertex_connectivity` computes kappa exactly with unit-capacity
//! vertex flows. The test suite checks them against each other exhaustively
//! on small orders.

use crate::graph::{GraphError, SmallGraph, VertexSet};

impl SmallGraph {
    /// True when every vertex is reachable from vertex 0. Graphs on at most
    /// one vertex, including the empty graph, count as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set().bits())
    }

    /// Connectivity of the subgraph induced on `alive` (a bitmask of vertex
    /// ids). An empty or singleton `alive` counts as connected.
    pub(crate) fn is_connected_within(&self, alive: u32) -> bool {
        if alive == 0 {
            return true;
        }
        self.reach_within(alive, alive.trailing_zeros() as usize) == alive
    }

    /// All vertices of `alive` reachable from `start` inside `alive`.
    fn reach_within(&self, alive: u32, start: usize) -> u32 {
        debug_assert!(alive & (1 << start) != 0);
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut grow = 0u32;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grow |= self.row(v);
            }
            frontier = grow & alive & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Vertices of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        debug_assert!(start < self.order());
        VertexSet::from_bits(self.reach_within(self.vertex_set().bits(), start))
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = self.vertex_set().bits();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reach_within(rest, start);
            out.push(VertexSet::from_bits(comp));
            rest &= !comp;
        }
        out
    }

    /// Cut vertices (articulation points) via a lowpoint depth-first search.
    /// Vertices in different components are not separators of each other, so
    /// the search runs per component.
    pub fn cut_vertices(&self) -> VertexSet {
        let n = self.order();
        let mut disc = [u8::MAX; 32];
        let mut low = [0u8; 32];
        let mut cuts = 0u32;
        let mut timer = 0u8;
        for root in 0..n {
            if disc[root] != u8::MAX {
                continue;
            }
            self.cut_dfs(root, usize::MAX, &mut disc, &mut low, &mut timer, &mut cuts);
        }
        VertexSet::from_bits(cuts)
    }

    fn cut_dfs(
        &self,
        v: usize,
        parent: usize,
        disc: &mut [u8; 32],
        low: &mut [u8; 32],
        timer: &mut u8,
        cuts: &mut u32,
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut children = 0;
        let mut bits = self.row(v);
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if disc[w] == u8::MAX {
                children += 1;
                self.cut_dfs(w, v, disc, low, timer, cuts);
                low[v] = low[v].min(low[w]);
                if parent != usize::MAX && low[w] >= disc[v] {
                    *cuts |= 1 << v;
                }
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            *cuts |= 1 << v;
        }
    }

    /// The smallest-id cut vertex, if any.
    pub fn lowest_cut_vertex(&self) -> Option<usize> {
        self.cut_vertices().iter().next()
    }

    /// 2-connectivity with the usual convention: at least three vertices,
    /// connected, and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.order() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Whitney vertex connectivity: the minimum number of vertices whose
    /// removal disconnects the graph or leaves fewer than two vertices.
    /// `kappa(K_n) = n - 1`, `kappa` of a disconnected graph (or of `K_1` or
    /// the empty graph) is 0.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n <= 1 {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        // Menger: for a non-complete graph, kappa is the minimum local
        // connectivity over non-adjacent pairs.
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_connectivity(s, t, best));
                }
            }
        }
        best
    }

    /// True iff `kappa(G) >= k`.
    pub fn connectivity_at_least(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let n = self.order();
        if n <= 1 {
            return false;
        }
        if self.is_complete() {
            return n > k;
        }
        if !self.is_connected() {
            return false;
        }
        if k == 1 {
            return true;
        }
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) && self.local_connectivity(s, t, k) < k {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `kappa(G) = 2`, computed without the full flow sweep: a
    /// 2-connected non-complete graph has connectivity exactly two iff some
    /// vertex pair disconnects it. Agrees with `vertex_connectivity() == 2`
    /// (checked exhaustively in tests).
    pub fn has_connectivity_two(&self) -> bool {
        let n = self.order();
        if !self.is_2_connected() {
            return false;
        }
        if self.is_complete() {
            return n == 3;
        }
        // a degree-2 vertex yields a 2-cut whenever anything else remains
        if n >= 4 && self.vertices().any(|v| self.degree(v) == 2) {
            return true;
        }
        let full = self.vertex_set().bits();
        for u in 0..n {
            for v in u + 1..n {
                let alive = full & !(1 << u) & !(1 << v);
                if !self.is_connected_within(alive) {
                    return true;
                }
            }
        }
        false
    }

    /// Maximum number of internally disjoint `s`-`t` paths, computed as a
    /// unit-capacity flow on the vertex-split digraph, stopping once `cap`
    /// augmenting paths are found. Assumes `s != t` and `st` is not an edge.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        let n = self.order();
        // node v is "in", node v+32 is "out"; arcs are bitmask rows
        let mut res = [0u64; 64];
        for v in 0..n {
            res[v] = 1u64 << (v + 32); // in -> out
            let mut bits = self.row(v);
            let mut row = 0u64;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1u64 << w;
            }
            res[v + 32] = row; // out -> neighbours' in
        }
        let source = s + 32;
        let sink = t;
        let mut flow = 0;
        while flow < cap {
            // BFS for an augmenting path in the residual digraph
            let mut parent = [usize::MAX; 64];
            let mut seen = 1u64 << source;
            let mut queue = [0usize; 64];
            let (mut head, mut tail) = (0, 0);
            queue[tail] = source;
            tail += 1;
            let mut found = false;
            'bfs: while head < tail {
                let v = queue[head];
                head += 1;
                let mut bits = res[v] & !seen;
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    seen |= 1u64 << w;
                    parent[w] = v;
                    if w == sink {
                        found = true;
                        break 'bfs;
                    }
                    queue[tail] = w;
                    tail += 1;
                }
            }
            if !found {
                break;
            }
            let mut w = sink;
            while w != source {
                let v = parent[w];
                res[v] &= !(1u64 << w);
                res[w] |= 1u64 << v;
                w = v;
            }
            flow += 1;
        }
        flow
    }

    /// True iff contracting the edge `uv` of a 2-connected graph leaves a
    /// 2-connected graph.
    pub fn is_contractible_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        Ok(self.contract_edge(u, v)?.is_2_connected())
    }
}
