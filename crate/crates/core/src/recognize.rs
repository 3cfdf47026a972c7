//! Recognizers for cographs, 2-cographs and k-cographs.
//!
//! A graph is a cograph when no four vertices induce a path, and a 2-cograph
//! when no induced subgraph is 2-connected with a 2-connected complement.
//! The 2-cograph recognizer is constructive in both directions: a positive
//! answer comes with a [`BuildTree`] deriving the graph from single vertices
//! by complementation, disjoint union and vertex identification, a negative
//! answer with a [`Witness`] subset inducing the offending subgraph.
//!
//! For k > 2 no decomposition theory is available (the class is not even
//! closed under contraction), so `is_k_cograph` checks the definition
//! directly, as does the deliberately naive `is_2cograph_oracle` used to
//! validate the recursive recognizer.

use crate::graph::{one_sum, zero_sum, GraphError, SmallGraph, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("order {order} exceeds the limit of {max} for this operation")]
    OrderTooLarge { order: usize, max: usize },
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
}

/// Certificate that a graph is a 2-cograph: a derivation from `K1` by
/// complementation, 0-sum (disjoint union) and 1-sum (vertex
/// identification). Evaluation rebuilds a graph isomorphic to the recognized
/// one. The recognizer never nests two complement nodes.
///
/// `Empty` is the degenerate certificate for the graph with no vertices,
/// which cannot be derived from `K1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildTree {
    Empty,
    Leaf,
    Complement(Box<BuildTree>),
    ZeroSum(Box<BuildTree>, Box<BuildTree>),
    OneSum {
        left: Box<BuildTree>,
        right: Box<BuildTree>,
        /// Identified vertex, as an index into the evaluated left operand.
        left_vertex: usize,
        /// Identified vertex, as an index into the evaluated right operand.
        right_vertex: usize,
    },
}

impl BuildTree {
    /// Renders the tree as an s-expression; `@i` marks identified vertices.
    pub fn to_sexpr(&self) -> String {
        match self {
            BuildTree::Empty => "empty".into(),
            BuildTree::Leaf => "K1".into(),
            BuildTree::Complement(t) => format!("(complement {})", t.to_sexpr()),
            BuildTree::ZeroSum(a, b) => format!("(0-sum {} {})", a.to_sexpr(), b.to_sexpr()),
            BuildTree::OneSum {
                left,
                right,
                left_vertex,
                right_vertex,
            } => format!(
                "(1-sum {}@{left_vertex} {}@{right_vertex})",
                left.to_sexpr(),
                right.to_sexpr()
            ),
        }
    }
}

/// Certificate that a graph is not a 2-cograph: a vertex subset (in the
/// input labelling) inducing a 2-connected subgraph whose complement is also
/// 2-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub support: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoCographVerdict {
    TwoCograph(BuildTree),
    NotTwoCograph(Witness),
}

impl TwoCographVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TwoCographVerdict::TwoCograph(_))
    }
}

/// True iff no four vertices induce a path. Agrees with
/// [`is_cograph_recursive`]; the two are checked against each other
/// exhaustively in the test suite.
pub fn is_cograph(g: &SmallGraph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let mask = (1u32 << a) | (1 << b) | (1 << c) | (1 << d);
                    let mut edges = 0;
                    let mut degs = [0u8; 4];
                    for (slot, v) in [a, b, c, d].into_iter().enumerate() {
                        let deg = (g.row(v) & mask).count_ones() as u8;
                        degs[slot] = deg;
                        edges += deg;
                    }
                    degs.sort_unstable();
                    // the only 4-vertex graph with 3 edges and degrees 1,1,2,2
                    // is the path
                    if edges == 6 && degs == [1, 1, 2, 2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Cograph recognition by the complement-reducibility recursion: a graph is
/// a cograph iff it can be generated from `K1` by complementation and
/// disjoint union.
pub fn is_cograph_recursive(g: &SmallGraph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    if !g.is_connected() {
        return g
            .components()
            .into_iter()
            .all(|c| is_cograph_recursive(&g.induced_subgraph(c).expect("component support")));
    }
    let gc = g.complement();
    if !gc.is_connected() {
        return gc
            .components()
            .into_iter()
            .all(|c| is_cograph_recursive(&gc.induced_subgraph(c).expect("component support")));
    }
    false
}

/// Recognizes 2-cographs, returning a derivation or a witness.
pub fn check_2cograph(g: &SmallGraph) -> TwoCographVerdict {
    let support: Vec<usize> = g.vertices().collect();
    match decompose(g, &support) {
        Ok((tree, _map)) => TwoCographVerdict::TwoCograph(tree),
        Err(support) => TwoCographVerdict::NotTwoCograph(Witness { support }),
    }
}

pub fn is_2cograph(g: &SmallGraph) -> bool {
    check_2cograph(g).holds()
}

/// Recursive decomposition. `support[v]` is the original id of the current
/// graph's vertex `v`. On success returns the tree together with the map
/// from evaluated-graph positions to original ids; on failure returns the
/// witness support in original ids.
///
/// The splits are pinned for reproducible trees: a disconnected graph peels
/// the component containing its lowest vertex; a separable graph splits at
/// its lowest cut vertex, peeling the component of the lowest remaining
/// vertex. A complement node is emitted only when the complement itself
/// splits, so complements never nest.
fn decompose(g: &SmallGraph, support: &[usize]) -> Result<(BuildTree, Vec<usize>), VertexSet> {
    let n = g.order();
    debug_assert_eq!(support.len(), n);
    if n == 0 {
        return Ok((BuildTree::Empty, Vec::new()));
    }
    if n == 1 {
        return Ok((BuildTree::Leaf, vec![support[0]]));
    }

    if !g.is_connected() {
        let part = g.component_of(0);
        let rest = VertexSet::from_bits(g.vertex_set().bits() & !part.bits());
        let (left, lmap) = decompose_part(g, support, part)?;
        let (right, rmap) = decompose_part(g, support, rest)?;
        let map = lmap.into_iter().chain(rmap).collect();
        return Ok((BuildTree::ZeroSum(Box::new(left), Box::new(right)), map));
    }

    if let Some(v) = g.lowest_cut_vertex() {
        let deleted = g.delete_vertex(v).expect("cut vertex in range");
        // component of the lowest vertex other than v, in g's labelling
        let lowest_other = (0..n).find(|&w| w != v).expect("n >= 2");
        let comp_in_deleted = deleted.component_of(lowest_other - usize::from(lowest_other > v));
        let mut part = VertexSet::singleton(v);
        for w in comp_in_deleted.iter() {
            part = part.with(w + usize::from(w >= v));
        }
        let rest = VertexSet::from_bits(g.vertex_set().bits() & !part.bits()).with(v);
        let (left, lmap) = decompose_part(g, support, part)?;
        let (right, rmap) = decompose_part(g, support, rest)?;
        let left_vertex = lmap
            .iter()
            .position(|&orig| orig == support[v])
            .expect("cut vertex present in left map");
        let right_vertex = rmap
            .iter()
            .position(|&orig| orig == support[v])
            .expect("cut vertex present in right map");
        // evaluated 1-sum keeps the left operand's labels and appends the
        // right operand's remaining vertices in order
        let map = lmap
            .iter()
            .copied()
            .chain(
                rmap.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != right_vertex)
                    .map(|(_, &orig)| orig),
            )
            .collect();
        return Ok((
            BuildTree::OneSum {
                left: Box::new(left),
                right: Box::new(right),
                left_vertex,
                right_vertex,
            },
            map,
        ));
    }

    let gc = g.complement();
    if !gc.is_connected() || gc.lowest_cut_vertex().is_some() {
        let (inner, map) = decompose(&gc, support)?;
        debug_assert!(!matches!(inner, BuildTree::Complement(_)));
        return Ok((BuildTree::Complement(Box::new(inner)), map));
    }

    // both g and its complement are connected without cut vertices; with
    // n >= 3 that makes both 2-connected, and n == 2 cannot reach here
    // because the complement of K2 is disconnected
    debug_assert!(n >= 3);
    Err(support.iter().copied().collect())
}

fn decompose_part(
    g: &SmallGraph,
    support: &[usize],
    part: VertexSet,
) -> Result<(BuildTree, Vec<usize>), VertexSet> {
    let sub = g.induced_subgraph(part).expect("part within graph");
    let sub_support: Vec<usize> = part.iter().map(|v| support[v]).collect();
    decompose(&sub, &sub_support)
}

/// Rebuilds the graph a [`BuildTree`] derives.
pub fn evaluate_build_tree(tree: &BuildTree) -> Result<SmallGraph, GraphError> {
    match tree {
        BuildTree::Empty => SmallGraph::new(0),
        BuildTree::Leaf => SmallGraph::new(1),
        BuildTree::Complement(t) => Ok(evaluate_build_tree(t)?.complement()),
        BuildTree::ZeroSum(a, b) => zero_sum(&evaluate_build_tree(a)?, &evaluate_build_tree(b)?),
        BuildTree::OneSum {
            left,
            right,
            left_vertex,
            right_vertex,
        } => one_sum(
            &evaluate_build_tree(left)?,
            &evaluate_build_tree(right)?,
            *left_vertex,
            *right_vertex,
        ),
    }
}

const ORACLE_MAX: usize = 20;

/// The 2-cograph definition evaluated literally: scan every vertex subset
/// for one inducing a 2-connected subgraph with 2-connected complement.
/// Ground truth for [`check_2cograph`]; exponential, so capped at 20
/// vertices.
pub fn is_2cograph_oracle(g: &SmallGraph) -> Result<bool, RecognitionError> {
    let n = g.order();
    if n > ORACLE_MAX {
        return Err(RecognitionError::OrderTooLarge {
            order: n,
            max: ORACLE_MAX,
        });
    }
    let full = g.vertex_set().bits();
    let mut mask = full;
    loop {
        if mask.count_ones() >= 3 {
            let h = g
                .induced_subgraph(VertexSet::from_bits(mask))
                .expect("subset of vertex set");
            if h.is_2_connected() && h.complement().is_2_connected() {
                return Ok(false);
            }
        }
        if mask == 0 {
            return Ok(true);
        }
        mask = (mask - 1) & full;
    }
}

/// True iff every induced subgraph or its complement fails to be
/// k-connected. Checked directly from the definition over all vertex
/// subsets.
pub fn is_k_cograph(g: &SmallGraph, k: usize) -> Result<bool, RecognitionError> {
    if k < 2 {
        return Err(RecognitionError::KTooSmall(k));
    }
    let n = g.order();
    if n > ORACLE_MAX {
        return Err(RecognitionError::OrderTooLarge {
            order: n,
            max: ORACLE_MAX,
        });
    }
    let full = g.vertex_set().bits();
    let mut mask = full;
    loop {
        if mask.count_ones() as usize > k {
            let h = g
                .induced_subgraph(VertexSet::from_bits(mask))
                .expect("subset of vertex set");
            if h.connectivity_at_least(k) && h.complement().connectivity_at_least(k) {
                return Ok(false);
            }
        }
        if mask == 0 {
            return Ok(true);
        }
        mask = (mask - 1) & full;
    }
}

/// True iff `g` has a complete bipartite subgraph (not necessarily induced)
/// on at least `n - 1` vertices: disjoint nonempty parts A and B with every
/// A-B pair adjacent and `|A| + |B| >= n - 1`.
///
/// The scan enumerates which vertex (if any) is left out and then every
/// bipartition of the remainder; it makes no use of complement
/// connectivity, so it can serve as one side of the equivalence with it.
pub fn has_large_complete_bipartite_subgraph(g: &SmallGraph) -> Result<bool, RecognitionError> {
    let n = g.order();
    if n > 16 {
        return Err(RecognitionError::OrderTooLarge { order: n, max: 16 });
    }
    let full = g.vertex_set().bits();
    let mut excluded: Vec<u32> = vec![0];
    excluded.extend((0..n).map(|v| 1u32 << v));
    for ex in excluded {
        let rest = full & !ex;
        if rest.count_ones() < 2 {
            continue;
        }
        // fix the lowest remaining vertex in A; enumerate the rest of A
        let pivot = rest.trailing_zeros() as usize;
        let others = rest & !(1 << pivot);
        let mut sub = others;
        loop {
            let a = sub | (1 << pivot);
            let b = rest & !a;
            if b != 0 {
                let mut ok = true;
                let mut bits = a;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if g.row(v) & b != b {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(true);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }
    Ok(false)
}
