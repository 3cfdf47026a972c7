//! Constructors for the standard small graphs used throughout the crate.

use crate::graph::SmallGraph;

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> SmallGraph {
    SmallGraph::new(n).expect("n <= 32")
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> SmallGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    SmallGraph::from_edge_list(n, &edges).expect("n <= 32")
}

/// Path `P_n` on `n` vertices, `0-1-..-(n-1)`.
pub fn path(n: usize) -> SmallGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    SmallGraph::from_edge_list(n, &edges).expect("n <= 32")
}

/// Cycle `C_n` on vertices `0..n` in circular order. Requires `n >= 3`.
pub fn cycle(n: usize) -> SmallGraph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    SmallGraph::from_edge_list(n, &edges).expect("n <= 32")
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SmallGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    SmallGraph::from_edge_list(a + b, &edges).expect("a + b <= 32")
}

/// The 6-cycle `012345` plus the chord `0-3` between antipodal vertices,
/// creating two 4-cycles.
pub fn c6_plus() -> SmallGraph {
    SmallGraph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
        .expect("valid edge list")
}
