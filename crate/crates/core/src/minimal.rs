//! Minimality of non-2-cographs under the induced-minor order, membership in
//! the class of doubly minimal graphs (both the graph and its complement
//! minimal), and a closure oracle over all induced minors.
//!
//! Because 2-cographs are closed under vertex deletion and edge contraction,
//! a non-2-cograph is induced-minor-minimal as soon as every one-step
//! reduction is a 2-cograph; `is_minimal_non_2cograph` relies on that, and
//! the closure oracle exists to verify the equivalence against the literal
//! all-minors definition on small orders.

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Edge, SmallGraph};
use crate::recognize::is_2cograph;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimalityError {
    #[error("order {order} exceeds the limit of {max} for this operation")]
    OrderTooLarge { order: usize, max: usize },
}

/// A one-step induced-minor reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    DeleteVertex(usize),
    ContractEdge(Edge),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityReason {
    /// The graph is a 2-cograph, so minimality does not apply.
    NotANon2Cograph,
    /// Some one-step reduction is still a non-2-cograph.
    Reducible,
    Minimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub is_minimal: bool,
    /// First reduction leaving a non-2-cograph, scanning vertices in
    /// ascending order and then edges lexicographically. Present exactly
    /// when the reason is `Reducible`.
    pub failing_reduction: Option<Reduction>,
    pub reason: MinimalityReason,
}

const MINIMALITY_MAX: usize = 16;

/// Tests whether `g` is a non-2-cograph all of whose proper induced minors
/// are 2-cographs, via the one-step check.
pub fn is_minimal_non_2cograph(g: &SmallGraph) -> Result<MinimalityVerdict, MinimalityError> {
    let n = g.order();
    if n > MINIMALITY_MAX {
        return Err(MinimalityError::OrderTooLarge {
            order: n,
            max: MINIMALITY_MAX,
        });
    }
    if is_2cograph(g) {
        return Ok(MinimalityVerdict {
            is_minimal: false,
            failing_reduction: None,
            reason: MinimalityReason::NotANon2Cograph,
        });
    }
    for v in g.vertices() {
        if !is_2cograph(&g.delete_vertex(v).expect("vertex in range")) {
            return Ok(MinimalityVerdict {
                is_minimal: false,
                failing_reduction: Some(Reduction::DeleteVertex(v)),
                reason: MinimalityReason::Reducible,
            });
        }
    }
    for e in g.edges() {
        if !is_2cograph(&g.contract_edge(e.u(), e.v()).expect("edge of g")) {
            return Ok(MinimalityVerdict {
                is_minimal: false,
                failing_reduction: Some(Reduction::ContractEdge(e)),
                reason: MinimalityReason::Reducible,
            });
        }
    }
    Ok(MinimalityVerdict {
        is_minimal: true,
        failing_reduction: None,
        reason: MinimalityReason::Minimal,
    })
}

/// An induced minor in the closure of a graph, keyed by canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorEntry {
    pub form: CanonicalForm,
    /// False exactly for the source graph itself.
    pub proper: bool,
}

const CLOSURE_MAX: usize = 10;

/// All induced minors of `g` (including `g` itself), one canonical form per
/// isomorphism class, by exhaustive search over single vertex deletions and
/// edge contractions, deduplicated by canonical form. Deleting the very last
/// vertex is not a reduction: minors keep at least one vertex.
pub fn induced_minor_closure(g: &SmallGraph) -> Result<Vec<MinorEntry>, MinimalityError> {
    let n = g.order();
    if n > CLOSURE_MAX {
        return Err(MinimalityError::OrderTooLarge {
            order: n,
            max: CLOSURE_MAX,
        });
    }
    let source = canonical_form(g);
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    seen.insert(source);
    let mut queue = vec![*g];
    while let Some(cur) = queue.pop() {
        if cur.order() > 1 {
            for v in cur.vertices() {
                let next = cur.delete_vertex(v).expect("vertex in range");
                if seen.insert(canonical_form(&next)) {
                    queue.push(next);
                }
            }
        }
        for e in cur.edges() {
            let next = cur.contract_edge(e.u(), e.v()).expect("edge of cur");
            if seen.insert(canonical_form(&next)) {
                queue.push(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|form| MinorEntry {
            form,
            proper: form != source,
        })
        .collect())
}

/// Membership in the class of induced-minor-minimal non-2-cographs whose
/// complements are also induced-minor-minimal non-2-cographs.
pub fn in_class_g(g: &SmallGraph) -> Result<bool, MinimalityError> {
    Ok(is_minimal_non_2cograph(g)?.is_minimal
        && is_minimal_non_2cograph(&g.complement())?.is_minimal)
}

/// True iff `g` is 2-connected but no single-vertex deletion is.
pub fn is_critically_2_connected(g: &SmallGraph) -> bool {
    g.is_2_connected()
        && g.vertices()
            .all(|v| !g.delete_vertex(v).expect("vertex in range").is_2_connected())
}
