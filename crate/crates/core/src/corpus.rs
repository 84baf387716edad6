//! Deterministic test corpora: exhaustive small inputs in a canonical order
//! and seeded random inputs from a fixed, portable generator.
//!
//! The generator is splitmix64, implemented from its published constants so
//! the corpora (and therefore check reports) are bit-reproducible anywhere.
//!
//! Canonical orders, relied on for deterministic first witnesses:
//!
//! * lists: by length ascending, then lexicographically by keys;
//! * node trees: by node count ascending, then by root key, left subtree
//!   size, left subtree, right subtree;
//! * leaf trees: by leaf count ascending, then by left leaf count, left
//!   subtree, right subtree, with payloads ordered empty-first.

use crate::trees::{Key, LeafTree, NodeTree};
use serde::Serialize;

/// splitmix64 output mixer. Also used on its own to derive independent seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// splitmix64: 64 bits of state, one addition and a mix per output.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform-enough value below `bound` via modulo. The tiny modulo bias is
    /// irrelevant for corpus generation and keeps the scheme trivial to
    /// reproduce in other implementations.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }

    pub fn next_key(&mut self) -> Key {
        self.next_u64() as Key
    }
}

/// Knobs for the default check corpora.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusConfig {
    /// Exhaustive lists cover every length up to this.
    pub max_len: usize,
    /// Keys for exhaustive corpora are `0..alphabet_size`.
    pub alphabet_size: u64,
    /// Number of seeded random lists.
    pub random_cases: usize,
    /// Random list lengths are uniform in `0..=max_random_len`.
    pub max_random_len: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_len: 8,
            alphabet_size: 4,
            random_cases: 10_000,
            max_random_len: 256,
            seed: 0,
        }
    }
}

impl CorpusConfig {
    pub fn alphabet(&self) -> Vec<Key> {
        (0..self.alphabet_size as Key).collect()
    }

    /// Σ alphabet^k for k = 0..=max_len.
    pub fn exhaustive_list_count(&self) -> u128 {
        let mut total: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..=self.max_len {
            total += pow;
            pow = pow.saturating_mul(self.alphabet_size as u128);
        }
        total
    }

    /// Guard against configurations whose exhaustive corpus would not fit in
    /// time or memory.
    pub fn validate(&self) -> Result<(), String> {
        if self.alphabet_size == 0 {
            return Err("alphabet size must be at least 1".to_string());
        }
        const MAX_EXHAUSTIVE: u128 = 2_000_000;
        let count = self.exhaustive_list_count();
        if count > MAX_EXHAUSTIVE {
            return Err(format!(
                "exhaustive corpus would hold {count} lists (limit {MAX_EXHAUSTIVE}); \
                 lower max-len or alphabet"
            ));
        }
        Ok(())
    }
}

/// Exhaustive and random inputs shared by the whole law catalog.
pub struct Corpus {
    pub config: CorpusConfig,
    pub alphabet: Vec<Key>,
    /// Every list over the alphabet up to the configured length.
    pub lists: Vec<Vec<Key>>,
    /// Seeded random lists; even-indexed cases draw keys from the full
    /// 64-bit range, odd-indexed ones from a small range so duplicates occur.
    pub random_lists: Vec<Vec<Key>>,
}

impl Corpus {
    pub fn build(config: CorpusConfig) -> Corpus {
        let lists = all_lists(config.max_len, config.alphabet_size);
        debug_assert_eq!(lists.len() as u128, config.exhaustive_list_count());
        let random_lists = random_lists(&config);
        Corpus {
            alphabet: config.alphabet(),
            lists,
            random_lists,
            config,
        }
    }

    /// Exhaustive then random, the order laws scan in.
    pub fn all_lists(&self) -> impl Iterator<Item = &Vec<Key>> {
        self.lists.iter().chain(self.random_lists.iter())
    }
}

/// Every list over `0..alphabet_size` with length `<= max_len`, canonical
/// order.
pub fn all_lists(max_len: usize, alphabet_size: u64) -> Vec<Vec<Key>> {
    let mut out = vec![Vec::new()];
    let mut current: Vec<Vec<Key>> = vec![Vec::new()];
    for _ in 1..=max_len {
        let mut next = Vec::with_capacity(current.len() * alphabet_size as usize);
        for l in &current {
            for k in 0..alphabet_size as Key {
                let mut grown = Vec::with_capacity(l.len() + 1);
                grown.extend_from_slice(l);
                grown.push(k);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        current = next;
    }
    out
}

/// Every node tree with up to `max_nodes` nodes, keys exhaustively drawn from
/// the alphabet.
pub fn all_node_trees(max_nodes: usize, alphabet_size: u64) -> Vec<NodeTree> {
    let mut by_size: Vec<Vec<NodeTree>> = vec![vec![NodeTree::Empty]];
    for n in 1..=max_nodes {
        let mut trees = Vec::new();
        for key in 0..alphabet_size as Key {
            for left_size in 0..n {
                for l in &by_size[left_size] {
                    for r in &by_size[n - 1 - left_size] {
                        trees.push(NodeTree::node(key, l.clone(), r.clone()));
                    }
                }
            }
        }
        by_size.push(trees);
    }
    by_size.into_iter().flatten().collect()
}

/// Every leaf tree with up to `max_leaves` leaves; each leaf payload ranges
/// over empty plus the alphabet.
pub fn all_leaf_trees(max_leaves: usize, alphabet_size: u64) -> Vec<LeafTree> {
    let mut by_leaves: Vec<Vec<LeafTree>> = vec![Vec::new()];
    let mut singles = vec![LeafTree::empty()];
    singles.extend((0..alphabet_size as Key).map(LeafTree::leaf));
    by_leaves.push(singles);
    for n in 2..=max_leaves {
        let mut trees = Vec::new();
        for left_leaves in 1..n {
            for l in &by_leaves[left_leaves] {
                for r in &by_leaves[n - left_leaves] {
                    trees.push(LeafTree::branch(l.clone(), r.clone()));
                }
            }
        }
        by_leaves.push(trees);
    }
    by_leaves.into_iter().flatten().collect()
}

/// One tree per shape with up to `max_nodes` nodes, keys cycling through the
/// alphabet in pre-order. Shape coverage without the exponential key blowup.
pub fn node_tree_shapes(max_nodes: usize, alphabet_size: u64) -> Vec<NodeTree> {
    let shapes = all_node_trees(max_nodes, 1);
    shapes
        .iter()
        .map(|t| {
            let mut counter = 0;
            relabel_node(t, alphabet_size, &mut counter)
        })
        .collect()
}

fn relabel_node(t: &NodeTree, alphabet_size: u64, counter: &mut u64) -> NodeTree {
    match t {
        NodeTree::Empty => NodeTree::Empty,
        NodeTree::Node(_, l, r) => {
            let key = (*counter % alphabet_size) as Key;
            *counter += 1;
            let left = relabel_node(l, alphabet_size, counter);
            let right = relabel_node(r, alphabet_size, counter);
            NodeTree::node(key, left, right)
        }
    }
}

/// One tree per shape with up to `max_leaves` leaves, payloads cycling
/// through the alphabet in pre-order, plus the single empty leaf. A fixed
/// placeholder payload during enumeration keeps the count at the Catalan
/// numbers rather than multiplying in payload choices.
pub fn leaf_tree_shapes(max_leaves: usize, alphabet_size: u64) -> Vec<LeafTree> {
    let mut by_leaves: Vec<Vec<LeafTree>> = vec![Vec::new(), vec![LeafTree::leaf(0)]];
    for n in 2..=max_leaves {
        let mut trees = Vec::new();
        for left_leaves in 1..n {
            for l in &by_leaves[left_leaves] {
                for r in &by_leaves[n - left_leaves] {
                    trees.push(LeafTree::branch(l.clone(), r.clone()));
                }
            }
        }
        by_leaves.push(trees);
    }
    let mut out = vec![LeafTree::empty()];
    out.extend(by_leaves.iter().flatten().map(|t| {
        let mut counter = 0;
        relabel_leaf(t, alphabet_size, &mut counter)
    }));
    out
}

fn relabel_leaf(t: &LeafTree, alphabet_size: u64, counter: &mut u64) -> LeafTree {
    match t {
        LeafTree::Leaf(_) => {
            let key = (*counter % alphabet_size) as Key;
            *counter += 1;
            LeafTree::leaf(key)
        }
        LeafTree::Branch(l, r) => {
            let left = relabel_leaf(l, alphabet_size, counter);
            let right = relabel_leaf(r, alphabet_size, counter);
            LeafTree::branch(left, right)
        }
    }
}

/// Seeded random lists: length uniform in `0..=max_random_len`; keys from the
/// full 64-bit range on even cases and from `0..4*alphabet_size` on odd cases
/// so that ties and duplicates get exercised.
pub fn random_lists(config: &CorpusConfig) -> Vec<Vec<Key>> {
    let mut rng = SplitMix64::new(config.seed);
    let dup_range = (config.alphabet_size * 4).max(2);
    let mut out = Vec::with_capacity(config.random_cases);
    for case in 0..config.random_cases {
        let len = rng.next_below(config.max_random_len as u64 + 1) as usize;
        let mut l = Vec::with_capacity(len);
        for _ in 0..len {
            if case % 2 == 0 {
                l.push(rng.next_key());
            } else {
                l.push(rng.next_below(dup_range) as Key);
            }
        }
        out.push(l);
    }
    out
}

/// Seeded random list with full-range keys, independent of other sizes and
/// repetitions: used by benchmarks.
pub fn bench_list(seed: u64, n: usize, rep: u64) -> Vec<Key> {
    let derived = mix64(seed ^ mix64(n as u64) ^ mix64(rep.wrapping_add(0x517c_c1b7_2722_0a95)));
    let mut rng = SplitMix64::new(derived);
    (0..n).map(|_| rng.next_key()).collect()
}

/// Seeded random node trees of arbitrary shape (no ordering invariant), up to
/// `max_nodes` nodes with keys in `0..key_range`.
pub fn random_node_trees(seed: u64, count: usize, max_nodes: usize, key_range: u64) -> Vec<NodeTree> {
    fn gen(rng: &mut SplitMix64, budget: usize, key_range: u64) -> NodeTree {
        if budget == 0 {
            return NodeTree::Empty;
        }
        let left = rng.next_below(budget as u64) as usize;
        let key = rng.next_below(key_range) as Key;
        NodeTree::node(
            key,
            gen(rng, left, key_range),
            gen(rng, budget - 1 - left, key_range),
        )
    }
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let budget = rng.next_below(max_nodes as u64 + 1) as usize;
            gen(&mut rng, budget, key_range)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn splitmix_matches_reference_streams() {
        // Frozen from an independent implementation of the published
        // constants.
        let cases: [(u64, [u64; 5]); 3] = [
            (
                0,
                [
                    0xe220a8397b1dcdaf,
                    0x6e789e6aa1b965f4,
                    0x06c45d188009454f,
                    0xf88bb8a8724c81ec,
                    0x1b39896a51a8749b,
                ],
            ),
            (
                1,
                [
                    0x910a2dec89025cc1,
                    0xbeeb8da1658eec67,
                    0xf893a2eefb32555e,
                    0x71c18690ee42c90b,
                    0x71bb54d8d101b5b9,
                ],
            ),
            (
                0x0123_4567_89ab_cdef,
                [
                    0x157a3807a48faa9d,
                    0xd573529b34a1d093,
                    0x2f90b72e996dccbe,
                    0xa2d419334c4667ec,
                    0x01404ce914938008,
                ],
            ),
        ];
        for (seed, want) in cases {
            let mut rng = SplitMix64::new(seed);
            for w in want {
                assert_eq!(rng.next_u64(), w, "seed {seed}");
            }
        }
    }

    #[test]
    fn exhaustive_list_count_matches_formula() {
        let config = CorpusConfig::default();
        let corpus = Corpus::build(config.clone());
        assert_eq!(corpus.lists.len(), 87_381);
        assert_eq!(config.exhaustive_list_count(), 87_381);
        // Canonical order: length ascending, lexicographic within.
        assert_eq!(corpus.lists[0], Vec::<Key>::new());
        assert_eq!(corpus.lists[1], vec![0]);
        assert_eq!(corpus.lists[4], vec![3]);
        assert_eq!(corpus.lists[5], vec![0, 0]);
    }

    #[test]
    fn tree_corpora_have_catalan_sizes() {
        // Counts with up to n nodes and 4 keys: Σ catalan(k) * 4^k.
        assert_eq!(all_node_trees(4, 4).len(), 1 + 4 + 32 + 320 + 3584);
        assert_eq!(all_node_trees(5, 4).len(), 1 + 4 + 32 + 320 + 3584 + 43008);
        // Leaf trees with k leaves: catalan(k-1) shapes, 5 payloads per leaf.
        assert_eq!(all_leaf_trees(4, 4).len(), 5 + 25 + 250 + 3125);
        assert_eq!(all_leaf_trees(5, 4).len(), 5 + 25 + 250 + 3125 + 43750);
        // One tree per shape.
        assert_eq!(node_tree_shapes(4, 4).len(), 1 + 1 + 2 + 5 + 14);
        // Leaf shapes: the empty leaf plus catalan(k-1) per leaf count k.
        assert_eq!(leaf_tree_shapes(4, 4).len(), 1 + 1 + 1 + 2 + 5);
        assert_eq!(leaf_tree_shapes(6, 4).len(), 1 + 1 + 1 + 2 + 5 + 14 + 42);
    }

    #[test]
    fn shape_corpora_are_duplicate_free_and_relabeled() {
        let shapes = leaf_tree_shapes(6, 4);
        let rendered: HashSet<String> =
            shapes.iter().map(crate::text::render_leaf_tree).collect();
        assert_eq!(rendered.len(), shapes.len());
        let shapes = node_tree_shapes(5, 4);
        let rendered: HashSet<String> =
            shapes.iter().map(crate::text::render_node_tree).collect();
        assert_eq!(rendered.len(), shapes.len());
        // Pre-order relabeling cycles through the alphabet, so a 5-key path
        // uses key 0 twice and keys 1..3 once.
        assert!(shapes.iter().any(|t| t.size() == 5 && t.height() == 5));
    }

    #[test]
    fn tree_corpora_are_duplicate_free() {
        let trees = all_node_trees(4, 2);
        let rendered: HashSet<String> =
            trees.iter().map(crate::text::render_node_tree).collect();
        assert_eq!(rendered.len(), trees.len());
        let leaves = all_leaf_trees(4, 2);
        let rendered: HashSet<String> =
            leaves.iter().map(crate::text::render_leaf_tree).collect();
        assert_eq!(rendered.len(), leaves.len());
    }

    #[test]
    fn random_corpus_is_seed_deterministic_and_seed_sensitive() {
        let config = CorpusConfig { random_cases: 50, ..CorpusConfig::default() };
        let a = random_lists(&config);
        let b = random_lists(&config);
        assert_eq!(a, b);
        let c = random_lists(&CorpusConfig { seed: 1, ..config });
        assert_ne!(a, c);
        // Odd cases use the small key range.
        assert!(a[1].iter().all(|&k| (0..16).contains(&k)));
    }

    #[test]
    fn bench_lists_differ_across_sizes_and_reps() {
        let a = bench_list(0, 16, 0);
        assert_eq!(a, bench_list(0, 16, 0));
        assert_ne!(a, bench_list(0, 16, 1));
        assert_ne!(&a[..8], &bench_list(0, 8, 0)[..]);
    }

    #[test]
    fn config_validation_rejects_oversized_corpora() {
        assert!(CorpusConfig::default().validate().is_ok());
        let bad = CorpusConfig { max_len: 24, ..CorpusConfig::default() };
        assert!(bad.validate().is_err());
        let bad = CorpusConfig { alphabet_size: 0, ..CorpusConfig::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn random_trees_respect_bounds_and_vary_in_shape() {
        let trees = random_node_trees(7, 200, 16, 4);
        assert_eq!(trees, random_node_trees(7, 200, 16, 4));
        assert!(trees.iter().all(|t| t.size() <= 16));
        let sizes: HashSet<usize> = trees.iter().map(|t| t.size()).collect();
        assert!(sizes.len() > 10, "sizes too uniform: {sizes:?}");
        // Shapes are not all left or right spines.
        assert!(trees.iter().any(|t| match t {
            NodeTree::Node(_, l, r) => !l.is_empty() && !r.is_empty(),
            NodeTree::Empty => false,
        }));
    }
}
