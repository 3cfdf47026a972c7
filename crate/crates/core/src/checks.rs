//! End-to-end verification suite.
//!
//! Each function here checks one headline property of the library, from the
//! census counts down to certificate soundness, and reports a pass/fail
//! outcome with a short summary. The `verify` CLI subcommand runs them all;
//! the acceptance test target asserts them. Thresholds and expected counts
//! are pinned in this module, not in the callers.

use crate::canon::{are_isomorphic, brute, canonical_form, CanonicalForm};
use crate::enumerate::{
    count_graphs, enumerate_class_g, generate_graphs, ClassGReport, MAX_GENERATION_ORDER,
};
use crate::families;
use crate::graph::{one_join, one_sum, zero_sum, SmallGraph};
use crate::minimal::{
    in_class_g, induced_minor_closure, is_critically_2_connected, is_minimal_non_2cograph,
    MinimalityReason,
};
use crate::recognize::{
    check_2cograph, evaluate_build_tree, has_large_complete_bipartite_subgraph, is_2cograph,
    is_2cograph_oracle, is_cograph, is_cograph_recursive, is_k_cograph, TwoCographVerdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from(name: &'static str, failures: Vec<String>, detail_on_pass: String) -> CheckOutcome {
        if failures.is_empty() {
            CheckOutcome::pass(name, detail_on_pass)
        } else {
            let mut detail = failures.join("; ");
            if failures.len() > 5 {
                detail = format!("{} failures, first: {}", failures.len(), failures[0]);
            }
            CheckOutcome::fail(name, detail)
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

/// Expected census per order: (members, self-complementary, representatives).
pub const EXPECTED_CENSUS: [(usize, usize, usize, usize); 6] = [
    (5, 1, 1, 1),
    (6, 2, 0, 1),
    (7, 16, 0, 8),
    (8, 87, 5, 46),
    (9, 86, 0, 43),
    (10, 2, 0, 1),
];

/// Isomorphism-class counts of all graphs on 1..=7 vertices.
pub const EXPECTED_CLASS_COUNTS: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];

/// Census reports keyed by order, shared by the checks that need them.
pub struct CensusCache {
    pub reports: BTreeMap<usize, ClassGReport>,
}

/// Runs the census for every order in `5..=max_order`.
pub fn run_censuses(max_order: usize, jobs: Option<usize>) -> CensusCache {
    let mut reports = BTreeMap::new();
    for order in 5..=max_order.min(MAX_GENERATION_ORDER) {
        let report = enumerate_class_g(order, jobs).expect("orders validated");
        reports.insert(order, report);
    }
    CensusCache { reports }
}

fn all_classes_up_to(max: usize) -> impl Iterator<Item = SmallGraph> {
    (1..=max).flat_map(|n| generate_graphs(n).expect("order within range"))
}

/// Criterion 1: the census counts, and the structural invariants of every
/// report (member arithmetic, representative validity and uniqueness).
pub fn check_census_counts(cache: &CensusCache) -> CheckOutcome {
    const NAME: &str = "criterion 1: census counts per order";
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (order, members, selfc, reps) in EXPECTED_CENSUS {
        let Some(report) = cache.reports.get(&order) else {
            continue;
        };
        summary.push(format!("n={order}: {}", report.members_total));
        if report.members_total != members {
            failures.push(format!(
                "n={order}: {} members, expected {members}",
                report.members_total
            ));
        }
        if report.self_complementary != selfc {
            failures.push(format!(
                "n={order}: {} self-complementary, expected {selfc}",
                report.self_complementary
            ));
        }
        if report.representatives.len() != reps {
            failures.push(format!(
                "n={order}: {} representatives, expected {reps}",
                report.representatives.len()
            ));
        }
        if report.members_total
            != report.self_complementary
                + 2 * (report.representatives.len() - report.self_complementary)
        {
            failures.push(format!("n={order}: member arithmetic broken"));
        }
        let mut keys = BTreeSet::new();
        for rep in &report.representatives {
            if rep.order() != order {
                failures.push(format!("n={order}: representative of wrong order"));
            }
            if !in_class_g(rep).expect("census order fits bound") {
                failures.push(format!("n={order}: representative fails membership"));
            }
            // members and their complements have connectivity exactly two,
            // checked here through the flow-based route rather than the
            // filter's own predicate
            for side in [*rep, rep.complement()] {
                if side.vertex_connectivity() != 2 || !side.is_2_connected() {
                    failures.push(format!("n={order}: member without connectivity two"));
                }
            }
            let key = canonical_form(rep).min(canonical_form(&rep.complement()));
            if !keys.insert(key) {
                failures.push(format!(
                    "n={order}: two representatives share a complement pair"
                ));
            }
        }
    }
    if summary.is_empty() {
        return CheckOutcome::pass(NAME, "skipped: no census orders requested");
    }
    CheckOutcome::from(NAME, failures, summary.join(", "))
}

/// Criterion 2: every graph on at most four vertices is a 2-cograph, so the
/// class has no members there.
pub fn check_small_orders_all_2cographs() -> CheckOutcome {
    const NAME: &str = "criterion 2: orders 1-4 contain no non-2-cographs";
    let mut failures = Vec::new();
    let mut scanned = 0usize;
    for g in all_classes_up_to(4) {
        scanned += 1;
        if !is_2cograph(&g) || !is_2cograph_oracle(&g).expect("small order") {
            failures.push(format!("{g:?} is not a 2-cograph"));
        }
    }
    CheckOutcome::from(NAME, failures, format!("{scanned} classes scanned, all 2-cographs"))
}

/// Criterion 3: the recursive recognizer agrees with the definitional
/// subset-scan oracle on every isomorphism class up to `max_order`, and the
/// two cograph recognizers agree with each other.
pub fn check_recognizer_matches_oracle(max_order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 3: recognizer matches definitional oracle";
    let mut failures = Vec::new();
    let mut scanned = 0usize;
    for g in all_classes_up_to(max_order) {
        scanned += 1;
        if is_2cograph(&g) != is_2cograph_oracle(&g).expect("order within oracle bound") {
            failures.push(format!("2-cograph verdicts disagree on {g:?}"));
        }
        if is_cograph(&g) != is_cograph_recursive(&g) {
            failures.push(format!("cograph verdicts disagree on {g:?}"));
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        format!("{scanned} classes on orders 1-{max_order} agree"),
    )
}

/// Criterion 4: over all classes up to `max_order`, the one-step minimality
/// test equals the literal definition evaluated through the induced-minor
/// closure.
pub fn check_one_step_minimality_matches_closure(max_order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 4: one-step minimality matches induced-minor closure";
    let mut failures = Vec::new();
    let mut scanned = 0usize;
    let mut memo: HashMap<CanonicalForm, bool> = HashMap::new();
    for g in all_classes_up_to(max_order) {
        scanned += 1;
        let one_step = is_minimal_non_2cograph(&g)
            .expect("order within bound")
            .is_minimal;
        let literal = !is_2cograph(&g)
            && induced_minor_closure(&g)
                .expect("order within bound")
                .iter()
                .filter(|entry| entry.proper)
                .all(|entry| {
                    *memo
                        .entry(entry.form)
                        .or_insert_with(|| is_2cograph(&entry.form.to_graph()))
                });
        if one_step != literal {
            failures.push(format!(
                "{g:?}: one-step {one_step}, all-minors {literal}"
            ));
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        format!("{scanned} classes on orders 1-{max_order} agree"),
    )
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SmallGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    SmallGraph::from_edge_list(n, &edges).expect("valid order")
}

fn random_2cograph(rng: &mut ChaCha8Rng, max_n: usize) -> SmallGraph {
    loop {
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(rng, n);
        if is_2cograph(&g) {
            return g;
        }
    }
}

/// Criterion 5: closure of the class under vertex deletion, contraction and
/// complementation (exhaustive up to `max_order`), plus `samples` randomized
/// 0-sum / 1-sum / 1-join constructions that must stay 2-cographs.
pub fn check_closure_laws(max_order: usize, samples: usize) -> CheckOutcome {
    const NAME: &str = "criterion 5: closure laws";
    let mut failures = Vec::new();
    let mut two_cographs = 0usize;
    for g in all_classes_up_to(max_order) {
        if !is_2cograph(&g) {
            continue;
        }
        two_cographs += 1;
        if !is_2cograph(&g.complement()) {
            failures.push(format!("complement of {g:?} escaped the class"));
        }
        for v in g.vertices() {
            if !is_2cograph(&g.delete_vertex(v).expect("vertex in range")) {
                failures.push(format!("{g:?} minus {v} escaped the class"));
            }
        }
        for e in g.edges() {
            if !is_2cograph(&g.contract_edge(e.u(), e.v()).expect("edge of g")) {
                failures.push(format!("{g:?} contracted at {e:?} escaped the class"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0266_0531);
    for _ in 0..samples {
        let a = random_2cograph(&mut rng, 6);
        let b = random_2cograph(&mut rng, 6);
        let combined = match rng.gen_range(0..4) {
            0 => zero_sum(&a, &b),
            1 => one_sum(
                &a,
                &b,
                rng.gen_range(0..a.order()),
                rng.gen_range(0..b.order()),
            ),
            2 => one_join(&a, &b, None),
            _ => one_join(
                &a,
                &b,
                Some((rng.gen_range(0..a.order()), rng.gen_range(0..b.order()))),
            ),
        }
        .expect("operands fit capacity");
        if !is_2cograph(&combined) {
            failures.push("randomized construction escaped the class".to_string());
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        format!(
            "{two_cographs} 2-cograph classes closed under reductions; {samples} random sums/joins stayed in the class"
        ),
    )
}

/// Criterion 6: for every 2-connected graph up to `max_order`, the
/// complement is 2-connected exactly when no complete bipartite subgraph
/// spans at least all but one vertex.
pub fn check_complement_biconnectivity(max_order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 6: complement 2-connectivity criterion";
    let mut failures = Vec::new();
    let mut scanned = 0usize;
    for g in all_classes_up_to(max_order) {
        if !g.is_2_connected() {
            continue;
        }
        scanned += 1;
        let complement_ok = g.complement().is_2_connected();
        let bipartite = has_large_complete_bipartite_subgraph(&g).expect("order within bound");
        if complement_ok != !bipartite {
            failures.push(format!("{g:?}: complement {complement_ok}, subgraph {bipartite}"));
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        format!("{scanned} 2-connected classes on orders 3-{max_order} satisfy the equivalence"),
    )
}

/// Criterion 7: complements of cycles C5..C9 are minimal non-2-cographs,
/// while the cycles C6..C9 themselves are non-2-cographs that reduce.
pub fn check_cycle_complement_family() -> CheckOutcome {
    const NAME: &str = "criterion 7: cycle complement family";
    let mut failures = Vec::new();
    for n in 5..=9 {
        let g = families::cycle(n).complement();
        let verdict = is_minimal_non_2cograph(&g).expect("order within bound");
        if !verdict.is_minimal {
            failures.push(format!("complement of C{n} is not minimal: {verdict:?}"));
        }
    }
    for n in 6..=9 {
        let verdict = is_minimal_non_2cograph(&families::cycle(n)).expect("order within bound");
        if verdict.reason != MinimalityReason::Reducible {
            failures.push(format!("C{n} verdict: {verdict:?}, expected reducible"));
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        "complements of C5..C9 minimal; C6..C9 reducible non-2-cographs".to_string(),
    )
}

/// Criterion 8: among all census members, the critically 2-connected ones
/// are exactly the five-cycle and the six-cycle with an antipodal chord.
pub fn check_critically_two_connected_members(cache: &CensusCache) -> CheckOutcome {
    const NAME: &str = "criterion 8: critically 2-connected members";
    if cache.reports.is_empty() {
        return CheckOutcome::pass(NAME, "skipped: no census orders requested");
    }
    let mut critical = BTreeSet::new();
    for report in cache.reports.values() {
        for rep in &report.representatives {
            for g in [*rep, rep.complement()] {
                if is_critically_2_connected(&g) {
                    critical.insert(canonical_form(&g));
                }
            }
        }
    }
    let mut expected = BTreeSet::new();
    expected.insert(canonical_form(&families::cycle(5)));
    if cache.reports.contains_key(&6) {
        expected.insert(canonical_form(&families::c6_plus()));
    }
    if critical == expected {
        CheckOutcome::pass(
            NAME,
            format!("{} critical classes, exactly as expected", critical.len()),
        )
    } else {
        CheckOutcome::fail(
            NAME,
            format!(
                "found {} critical classes, expected {}",
                critical.len(),
                expected.len()
            ),
        )
    }
}

/// Criterion 9: the 9-vertex example showing 3-cographs are not closed
/// under contraction.
pub fn check_three_cograph_contraction() -> CheckOutcome {
    const NAME: &str = "criterion 9: 3-cographs are not closed under contraction";
    let g = SmallGraph::from_edge_list(
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 8),
            (2, 3),
            (3, 4),
            (4, 8),
            (1, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (4, 7),
            (3, 6),
            (2, 5),
        ],
    )
    .expect("valid edge list");
    let mut failures = Vec::new();
    if !is_k_cograph(&g, 3).expect("order within bound") {
        failures.push("the 9-vertex graph is not recognized as a 3-cograph".to_string());
    }
    let contracted = g.contract_edge(0, 1).expect("e is an edge");
    if !contracted.connectivity_at_least(3) {
        failures.push("contraction is not 3-connected".to_string());
    }
    if !contracted.complement().connectivity_at_least(3) {
        failures.push("complement of the contraction is not 3-connected".to_string());
    }
    if is_k_cograph(&contracted, 3).expect("order within bound") {
        failures.push("contraction still recognized as a 3-cograph".to_string());
    }
    CheckOutcome::from(
        NAME,
        failures,
        "3-cograph before contraction, doubly 3-connected after".to_string(),
    )
}

/// Criterion 10: on a stream of generated graphs, every positive certificate
/// re-evaluates to a graph isomorphic to its input and every witness induces
/// a subgraph of at least five vertices that is 2-connected with 2-connected
/// complement.
pub fn check_certificates(limit: usize, max_order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 10: certificate soundness";
    let mut failures = Vec::new();
    let mut trees = 0usize;
    let mut witnesses = 0usize;
    for g in all_classes_up_to(max_order).take(limit) {
        match check_2cograph(&g) {
            TwoCographVerdict::TwoCograph(tree) => {
                trees += 1;
                match evaluate_build_tree(&tree) {
                    Ok(rebuilt) if are_isomorphic(&g, &rebuilt) => {}
                    other => failures.push(format!("bad tree for {g:?}: {other:?}")),
                }
            }
            TwoCographVerdict::NotTwoCograph(witness) => {
                witnesses += 1;
                let support = witness.support;
                if support.len() < 5 {
                    failures.push(format!("witness below five vertices for {g:?}"));
                    continue;
                }
                let h = g.induced_subgraph(support).expect("support within graph");
                if !h.is_2_connected() || !h.complement().is_2_connected() {
                    failures.push(format!("witness not doubly 2-connected for {g:?}"));
                }
            }
        }
    }
    CheckOutcome::from(
        NAME,
        failures,
        format!("{trees} build trees and {witnesses} witnesses verified"),
    )
}

/// Criterion 11: generator class counts match both the frozen values and an
/// independent brute-force permutation dedup over all labelled graphs.
pub fn check_generator_class_counts(max_order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 11: generator counts match brute-force dedup";
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=max_order.min(7) {
        let generated = count_graphs(n).expect("order within range");
        let brute_count = brute::isomorphism_class_count(n);
        let expected = EXPECTED_CLASS_COUNTS[n - 1];
        counts.push(generated.to_string());
        if generated != expected || brute_count != expected {
            failures.push(format!(
                "n={n}: generator {generated}, brute {brute_count}, expected {expected}"
            ));
        }
    }
    CheckOutcome::from(NAME, failures, format!("class counts {}", counts.join(", ")))
}

/// Criterion 11, parallel half: the census is a pure function of the order,
/// identical for one worker and for several.
pub fn check_census_thread_invariance(order: usize) -> CheckOutcome {
    const NAME: &str = "criterion 11: census is worker-count invariant";
    if order < 5 {
        return CheckOutcome::pass(NAME, "skipped: census needs order >= 5");
    }
    let single = enumerate_class_g(order, Some(1)).expect("order validated");
    let multi = enumerate_class_g(order, Some(4)).expect("order validated");
    let same = single.members_total == multi.members_total
        && single.self_complementary == multi.self_complementary
        && single.candidates_scanned == multi.candidates_scanned
        && single.representatives == multi.representatives;
    if same {
        CheckOutcome::pass(
            NAME,
            format!(
                "order {order}: {} members, {} candidates, identical reports for 1 and 4 workers",
                single.members_total, single.candidates_scanned
            ),
        )
    } else {
        CheckOutcome::fail(NAME, format!("order {order}: reports differ across worker counts"))
    }
}

/// Runs every check, limited to `max_order` where a check scales with order.
pub fn run_all(max_order: usize, jobs: Option<usize>) -> Vec<CheckOutcome> {
    let cache = run_censuses(max_order, jobs);
    vec![
        check_census_counts(&cache),
        check_small_orders_all_2cographs(),
        check_recognizer_matches_oracle(max_order.clamp(1, 7)),
        check_one_step_minimality_matches_closure(max_order.clamp(1, 7)),
        check_closure_laws(max_order.clamp(1, 7), 10_000),
        check_complement_biconnectivity(max_order.clamp(1, 7)),
        check_cycle_complement_family(),
        check_critically_two_connected_members(&cache),
        check_three_cograph_contraction(),
        check_certificates(100_000, max_order.clamp(1, 9)),
        check_generator_class_counts(max_order.clamp(1, 7)),
        check_census_thread_invariance(max_order.min(9)),
    ]
}
