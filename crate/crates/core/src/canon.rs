//! Canonical labelling, isomorphism testing and complement-pair utilities.
//!
//! The canonical form is computed by individualization-refinement: colour
//! classes are refined by neighbour counts until stable, the search branches
//! on the vertices of the first smallest non-singleton class, and the
//! lexicographically least relabelled adjacency bitstring over all explored
//! leaves wins. Automorphisms discovered from equal leaves prune branches
//! whose subtrees are images of already-explored ones, which keeps highly
//! symmetric graphs fast. Equal canonical forms hold exactly for isomorphic
//! graphs; there is no hashing involved.
//!
//! A brute-force factorial fallback lives in [`brute`] for cross-validation
//! on small orders.

use crate::graph::{SmallGraph, MAX_VERTICES};

const WORDS: usize = 8; // 512 bits >= C(32, 2)

/// Isomorphism-class key: the upper-triangle adjacency bitstring of the
/// canonically relabelled graph, row-major over pairs `(i, j)` with `i < j`,
/// packed most-significant-bit first.
///
/// The derived order compares the vertex count first and then the bitstring
/// as an unsigned big-endian integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    words: [u64; WORDS],
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Rebuilds the canonically labelled graph the form describes.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut p = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.words[p >> 6] & (1u64 << (63 - (p & 63))) != 0 {
                    edges.push((i, j));
                }
                p += 1;
            }
        }
        SmallGraph::from_edge_list(n, &edges).expect("canonical form within capacity")
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bits = self.order() * self.order().saturating_sub(1) / 2;
        let bytes = bits.div_ceil(8);
        write!(f, "CanonicalForm(n={}, ", self.n)?;
        for b in 0..bytes.max(1) {
            let byte = (self.words[b / 8] >> (56 - 8 * (b % 8))) & 0xff;
            write!(f, "{byte:02x}")?;
        }
        write!(f, ")")
    }
}

/// The canonical adjacency bitstring of `g` relabelled by `labels`
/// (`labels[v]` = canonical position of vertex `v`).
fn pack_relabelled(g: &SmallGraph, labels: &[u8; MAX_VERTICES]) -> [u64; WORDS] {
    let n = g.order();
    let mut inv = [0u8; MAX_VERTICES];
    for v in 0..n {
        inv[labels[v] as usize] = v as u8;
    }
    let mut words = [0u64; WORDS];
    let mut p = 0usize;
    for i in 0..n {
        let vi = inv[i] as usize;
        let row = g.row(vi);
        for &vj in &inv[i + 1..n] {
            if row & (1 << vj) != 0 {
                words[p >> 6] |= 1u64 << (63 - (p & 63));
            }
            p += 1;
        }
    }
    words
}

/// Canonical labelling plus the automorphisms discovered along the way.
pub(crate) struct Canonicalized {
    pub form: CanonicalForm,
    /// `labels[v]` = canonical position of `v`.
    pub labels: [u8; MAX_VERTICES],
    /// Vertex-to-vertex automorphisms; they generate the automorphism group.
    pub generators: Vec<[u8; MAX_VERTICES]>,
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<([u64; WORDS], [u8; MAX_VERTICES])>,
    best: ([u64; WORDS], [u8; MAX_VERTICES]),
    generators: Vec<[u8; MAX_VERTICES]>,
    prefix: [u8; MAX_VERTICES],
    depth: usize,
}

impl Search<'_> {
    /// Refines the colouring to equitability. Colour ids are cell positions;
    /// refinement splits cells by (old colour, neighbour count per cell) and
    /// never reorders distinct old cells, so it is label-independent.
    /// Returns the number of cells.
    fn refine(&self, colors: &mut [u8; MAX_VERTICES]) -> usize {
        let g = self.g;
        let n = self.n;
        loop {
            let mut ncells = 0usize;
            let mut cell_mask = [0u32; MAX_VERTICES];
            for (v, &color) in colors[..n].iter().enumerate() {
                let c = color as usize;
                cell_mask[c] |= 1 << v;
                ncells = ncells.max(c + 1);
            }
            if ncells == n {
                return n;
            }
            let mut keys = [[0u8; 33]; MAX_VERTICES];
            for v in 0..n {
                keys[v][0] = colors[v];
                let row = g.row(v);
                for (c, mask) in cell_mask[..ncells].iter().enumerate() {
                    keys[v][1 + c] = (row & mask).count_ones() as u8;
                }
            }
            let klen = 1 + ncells;
            let mut order = [0u8; MAX_VERTICES];
            for (v, slot) in order[..n].iter_mut().enumerate() {
                *slot = v as u8;
            }
            order[..n].sort_unstable_by(|&a, &b| {
                keys[a as usize][..klen].cmp(&keys[b as usize][..klen])
            });
            let mut next = [0u8; MAX_VERTICES];
            let mut c = 0u8;
            for t in 0..n {
                if t > 0 && keys[order[t - 1] as usize][..klen] != keys[order[t] as usize][..klen] {
                    c += 1;
                }
                next[order[t] as usize] = c;
            }
            let changed = colors[..n] != next[..n];
            colors[..n].copy_from_slice(&next[..n]);
            if !changed {
                return c as usize + 1;
            }
        }
    }

    /// First smallest cell of size >= 2, returned as its member vertices in
    /// ascending order.
    fn target_cell(&self, colors: &[u8; MAX_VERTICES]) -> (u8, usize) {
        let n = self.n;
        let mut sizes = [0u8; MAX_VERTICES];
        for v in 0..n {
            sizes[colors[v] as usize] += 1;
        }
        let mut best_color = 0u8;
        let mut best_size = u8::MAX;
        for (c, &s) in sizes[..n].iter().enumerate() {
            if s >= 2 && s < best_size {
                best_size = s;
                best_color = c as u8;
            }
        }
        (best_color, best_size as usize)
    }

    /// Orbit representative map for the automorphisms that fix the current
    /// individualization prefix pointwise.
    fn orbits_under_prefix(&self) -> [u8; MAX_VERTICES] {
        let mut root = [0u8; MAX_VERTICES];
        for (v, slot) in root[..self.n].iter_mut().enumerate() {
            *slot = v as u8;
        }
        fn find(root: &mut [u8; MAX_VERTICES], v: u8) -> u8 {
            let mut v = v;
            while root[v as usize] != v {
                root[v as usize] = root[root[v as usize] as usize];
                v = root[v as usize];
            }
            v
        }
        for gen in &self.generators {
            if self.prefix[..self.depth]
                .iter()
                .any(|&p| gen[p as usize] != p)
            {
                continue;
            }
            for v in 0..self.n as u8 {
                let a = find(&mut root, v);
                let b = find(&mut root, gen[v as usize]);
                if a != b {
                    root[a.max(b) as usize] = a.min(b);
                }
            }
        }
        for v in 0..self.n as u8 {
            find(&mut root, v);
        }
        root
    }

    fn record_automorphism(&mut self, a: &[u8; MAX_VERTICES], b: &[u8; MAX_VERTICES]) {
        // a and b label the same packed graph, so inv_b . a is an automorphism
        let mut inv_b = [0u8; MAX_VERTICES];
        for v in 0..self.n {
            inv_b[b[v] as usize] = v as u8;
        }
        let mut auto = [0u8; MAX_VERTICES];
        let mut identity = true;
        for v in 0..self.n {
            auto[v] = inv_b[a[v] as usize];
            identity &= auto[v] == v as u8;
        }
        if !identity && !self.generators.contains(&auto) {
            self.generators.push(auto);
        }
    }

    fn run(&mut self, mut colors: [u8; MAX_VERTICES]) {
        let ncells = self.refine(&mut colors);
        if ncells == self.n {
            let words = pack_relabelled(self.g, &colors);
            match self.first {
                None => {
                    self.first = Some((words, colors));
                    self.best = (words, colors);
                }
                Some((first_words, first_labels)) => {
                    if words == first_words {
                        self.record_automorphism(&first_labels, &colors);
                    }
                    if words < self.best.0 {
                        self.best = (words, colors);
                    } else if words == self.best.0 && self.best.1 != colors {
                        let best_labels = self.best.1;
                        self.record_automorphism(&best_labels, &colors);
                    }
                }
            }
            return;
        }
        let (cell_color, _) = self.target_cell(&colors);
        let members: Vec<u8> = (0..self.n as u8)
            .filter(|&v| colors[v as usize] == cell_color)
            .collect();
        let mut explored: Vec<u8> = Vec::with_capacity(members.len());
        for &v in &members {
            if !explored.is_empty() {
                let orbit = self.orbits_under_prefix();
                if explored
                    .iter()
                    .any(|&w| orbit[w as usize] == orbit[v as usize])
                {
                    continue;
                }
            }
            explored.push(v);
            let mut child = colors;
            let pivot = colors[v as usize];
            for (w, slot) in child[..self.n].iter_mut().enumerate() {
                if w as u8 != v && *slot >= pivot {
                    *slot += 1;
                }
            }
            self.prefix[self.depth] = v;
            self.depth += 1;
            self.run(child);
            self.depth -= 1;
        }
    }
}

pub(crate) fn canonicalize(g: &SmallGraph) -> Canonicalized {
    let n = g.order();
    if n == 0 {
        return Canonicalized {
            form: CanonicalForm {
                n: 0,
                words: [0; WORDS],
            },
            labels: [0; MAX_VERTICES],
            generators: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: ([0; WORDS], [0; MAX_VERTICES]),
        generators: Vec::new(),
        prefix: [0; MAX_VERTICES],
        depth: 0,
    };
    search.run([0; MAX_VERTICES]);
    Canonicalized {
        form: CanonicalForm {
            n: n as u8,
            words: search.best.0,
        },
        labels: search.best.1,
        generators: search.generators,
    }
}

/// Canonical form of `g`: equal forms exactly for isomorphic graphs,
/// byte-identical across runs and input labellings.
pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonicalize(g).form
}

/// A copy of `g` relabelled into canonical positions.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    canonical_form(g).to_graph()
}

pub fn are_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

pub fn is_self_complementary(g: &SmallGraph) -> bool {
    are_isomorphic(g, &g.complement())
}

/// The smaller of the canonical forms of `g` and its complement: identical
/// for a graph and its complement, which makes it the dedup key for listing
/// graphs up to complementation.
pub fn complement_pair_key(g: &SmallGraph) -> CanonicalForm {
    canonical_form(g).min(canonical_form(&g.complement()))
}

/// Factorial-time reference implementations used to cross-validate the
/// refinement-based ones on small orders.
pub mod brute {
    use super::{pack_relabelled, CanonicalForm, WORDS};
    use crate::graph::{SmallGraph, MAX_VERTICES};

    /// Calls `f` with every permutation of `0..n` (Heap's algorithm).
    fn for_each_permutation(n: usize, mut f: impl FnMut(&[u8])) {
        let mut perm = [0u8; MAX_VERTICES];
        for (v, slot) in perm[..n].iter_mut().enumerate() {
            *slot = v as u8;
        }
        let mut c = [0usize; MAX_VERTICES];
        f(&perm[..n]);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                f(&perm[..n]);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// Minimum relabelled bitstring over all `n!` permutations. Slow; only
    /// for cross-validation (n <= 8). The value differs from the refinement
    /// form, but induces the same equivalence on graphs.
    pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
        let n = g.order();
        assert!(n <= 8, "brute-force canonical form is limited to n <= 8");
        let mut best = [u64::MAX; WORDS];
        for_each_permutation(n, |perm| {
            let mut labels = [0u8; MAX_VERTICES];
            labels[..n].copy_from_slice(perm);
            best = best.min(pack_relabelled(g, &labels));
        });
        if n == 0 {
            best = [0; WORDS];
        }
        CanonicalForm {
            n: n as u8,
            words: best,
        }
    }

    /// Isomorphism by exhaustive permutation search.
    pub fn are_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
        let n = g.order();
        if h.order() != n || g.size() != h.size() {
            return false;
        }
        assert!(n <= 8, "brute-force isomorphism is limited to n <= 8");
        let mut found = false;
        for_each_permutation(n, |perm| {
            if found {
                return;
            }
            let ok = (0..n).all(|u| {
                (u + 1..n).all(|v| {
                    g.has_edge(u, v) == h.has_edge(perm[u] as usize, perm[v] as usize)
                })
            });
            found |= ok;
        });
        found
    }

    /// Number of isomorphism classes of graphs on `n` vertices, by marking
    /// whole permutation orbits over all labelled graphs. Independent of the
    /// canonical-form machinery.
    pub fn isomorphism_class_count(n: usize) -> u64 {
        assert!(n <= 7, "orbit marking is limited to n <= 7");
        let pairs = n * (n - 1) / 2;
        let pair_index = |i: usize, j: usize| -> usize {
            // row-major over i < j
            debug_assert!(i < j);
            i * n - i * (i + 1) / 2 + (j - i - 1)
        };
        // one pair-permutation table per vertex permutation
        let mut tables: Vec<Vec<u8>> = Vec::new();
        for_each_permutation(n, |perm| {
            let mut t = vec![0u8; pairs];
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (perm[i] as usize, perm[j] as usize);
                    t[pair_index(i, j)] = pair_index(a.min(b), a.max(b)) as u8;
                }
            }
            tables.push(t);
        });
        let mut visited = vec![false; 1usize << pairs];
        let mut count = 0u64;
        for mask in 0..1u32 << pairs {
            if visited[mask as usize] {
                continue;
            }
            count += 1;
            // applying the whole symmetric group covers the orbit in one pass
            for t in &tables {
                let mut image = 0u32;
                let mut bits = mask;
                while bits != 0 {
                    let p = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    image |= 1 << t[p];
                }
                visited[image as usize] = true;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabelling_invariance() {
        let c5 = families::cycle(5);
        let rotated = c5.permuted(&[1, 2, 3, 4, 0]);
        assert_eq!(canonical_form(&c5), canonical_form(&rotated));
    }

    #[test]
    fn distinguishes_path_from_star() {
        let p4 = families::path(4);
        let star = families::complete_bipartite(1, 3);
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let mut forms = std::collections::HashSet::new();
        for mask in 0u32..1 << 6 {
            let mut edges = Vec::new();
            let mut p = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if mask & (1 << p) != 0 {
                        edges.push((i, j));
                    }
                    p += 1;
                }
            }
            let g = SmallGraph::from_edge_list(4, &edges).unwrap();
            forms.insert(canonical_form(&g));
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = families::cycle(5);
        assert!(are_isomorphic(&c5, &c5.complement()));
        assert!(are_isomorphic(&c5, &c5));
        let prism = families::cycle(6).complement();
        assert!(!are_isomorphic(&families::cycle(6), &prism));
    }

    #[test]
    fn self_complementary_examples() {
        assert!(is_self_complementary(&families::cycle(5)));
        assert!(is_self_complementary(&families::path(4)));
        assert!(!is_self_complementary(&families::cycle(6)));
    }

    #[test]
    fn complement_pair_key_examples() {
        for g in [families::cycle(5), families::c6_plus(), families::path(5)] {
            assert_eq!(complement_pair_key(&g), complement_pair_key(&g.complement()));
        }
        let c5 = families::cycle(5);
        assert_eq!(complement_pair_key(&c5), canonical_form(&c5));
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let g = families::c6_plus();
        let cg = canonical_graph(&g);
        assert!(are_isomorphic(&g, &cg));
        assert_eq!(canonical_form(&cg), canonical_form(&g));
    }

    #[test]
    fn form_roundtrips_through_graph() {
        for g in [
            families::empty(0),
            families::empty(3),
            families::complete(6),
            families::cycle(7),
            families::c6_plus(),
        ] {
            let f = canonical_form(&g);
            assert_eq!(canonical_form(&f.to_graph()), f);
        }
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [families::cycle(5), families::complete(4), families::path(4)] {
            let info = canonicalize(&g);
            for gen in &info.generators {
                let perm: Vec<usize> = (0..g.order()).map(|v| gen[v] as usize).collect();
                assert_eq!(g.permuted(&perm), g);
            }
        }
    }

    #[test]
    fn brute_class_counts_small() {
        assert_eq!(brute::isomorphism_class_count(1), 1);
        assert_eq!(brute::isomorphism_class_count(2), 2);
        assert_eq!(brute::isomorphism_class_count(3), 4);
        assert_eq!(brute::isomorphism_class_count(4), 11);
        assert_eq!(brute::isomorphism_class_count(5), 34);
    }

    #[test]
    fn brute_agrees_with_refinement_on_five_vertices() {
        let graphs: Vec<SmallGraph> = (0u32..1 << 10)
            .map(|mask| {
                let mut edges = Vec::new();
                let mut p = 0;
                for i in 0..5 {
                    for j in i + 1..5 {
                        if mask & (1 << p) != 0 {
                            edges.push((i, j));
                        }
                        p += 1;
                    }
                }
                SmallGraph::from_edge_list(5, &edges).unwrap()
            })
            .collect();
        use std::collections::HashMap;
        let mut by_brute: HashMap<CanonicalForm, CanonicalForm> = HashMap::new();
        for g in &graphs {
            let b = brute::canonical_form(g);
            let f = canonical_form(g);
            let prev = by_brute.entry(b).or_insert(f);
            assert_eq!(*prev, f, "brute and refinement forms disagree on classes");
        }
        assert_eq!(by_brute.len(), 34);
        let refined: std::collections::HashSet<_> =
            graphs.iter().map(canonical_form).collect();
        assert_eq!(refined.len(), 34);
    }
}
