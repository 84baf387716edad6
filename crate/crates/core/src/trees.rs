//! The two tree shapes everything else is built on, plus their recursion
//! operators: fold, unfold, hylomorphism and (for leaf trees) paramorphism.
//!
//! `NodeTree` stores a key at every internal node and has a distinguished
//! empty tree. `LeafTree` stores data only at leaves; a leaf payload is
//! optional so that the empty structure is representable as `Leaf(None)`.
//!
//! All operators here run with explicit work stacks rather than host-language
//! recursion: degenerate trees (for instance search trees built from sorted
//! input) reach heights proportional to input length, and the operators are
//! required to tolerate heights of at least 10^5. `Drop` is implemented
//! iteratively for the same reason.

use std::fmt;
use std::mem;

/// Element type for every sorting pipeline in this crate.
pub type Key = i64;

/// Maximum seed depth an unfold will expand before reporting divergence.
pub const DEFAULT_DEPTH_LIMIT: usize = 1_000_000;

// ---------------------------------------------------------------------------
// Tree values
// ---------------------------------------------------------------------------

/// Binary tree with a key at each internal node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeTree {
    Empty,
    Node(Key, Box<NodeTree>, Box<NodeTree>),
}

/// Binary tree with data at the leaves only. `Leaf(None)` is the empty
/// structure; well-formed builds contain it only as the whole tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafTree {
    Leaf(Option<Key>),
    Branch(Box<LeafTree>, Box<LeafTree>),
}

impl NodeTree {
    pub fn node(key: Key, left: NodeTree, right: NodeTree) -> NodeTree {
        NodeTree::Node(key, Box::new(left), Box::new(right))
    }

    /// Single-node tree.
    pub fn singleton(key: Key) -> NodeTree {
        NodeTree::node(key, NodeTree::Empty, NodeTree::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, NodeTree::Empty)
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        fold_node_tree(|_, l, r| l + r + 1, 0usize, self)
    }

    /// Empty tree has height 0; a node adds one to the taller child.
    pub fn height(&self) -> usize {
        fold_node_tree(|_, l, r| 1 + l.max(r), 0usize, self)
    }
}

impl LeafTree {
    pub fn leaf(key: Key) -> LeafTree {
        LeafTree::Leaf(Some(key))
    }

    pub fn empty() -> LeafTree {
        LeafTree::Leaf(None)
    }

    pub fn branch(left: LeafTree, right: LeafTree) -> LeafTree {
        LeafTree::Branch(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        fold_leaf_tree(|l, r| l + r, |_| 1usize, self)
    }

    /// A leaf has height 0; a branch adds one to the taller child.
    pub fn height(&self) -> usize {
        fold_leaf_tree(|l: usize, r: usize| 1 + l.max(r), |_| 0usize, self)
    }
}

// Derived drop glue recurses over the spine; tear deep trees down with an
// explicit stack instead. Children are only pushed when non-trivial, so the
// re-entrant drop of a scrubbed node never allocates.
impl Drop for NodeTree {
    fn drop(&mut self) {
        let mut stack: Vec<NodeTree> = Vec::new();
        let scrub = |t: &mut NodeTree, stack: &mut Vec<NodeTree>| {
            if let NodeTree::Node(_, l, r) = t {
                if !matches!(&**l, NodeTree::Empty) {
                    stack.push(mem::replace(&mut **l, NodeTree::Empty));
                }
                if !matches!(&**r, NodeTree::Empty) {
                    stack.push(mem::replace(&mut **r, NodeTree::Empty));
                }
            }
        };
        scrub(self, &mut stack);
        while let Some(mut t) = stack.pop() {
            scrub(&mut t, &mut stack);
        }
    }
}

impl Drop for LeafTree {
    fn drop(&mut self) {
        let mut stack: Vec<LeafTree> = Vec::new();
        let scrub = |t: &mut LeafTree, stack: &mut Vec<LeafTree>| {
            if let LeafTree::Branch(l, r) = t {
                if matches!(&**l, LeafTree::Branch(..)) {
                    stack.push(mem::replace(&mut **l, LeafTree::Leaf(None)));
                }
                if matches!(&**r, LeafTree::Branch(..)) {
                    stack.push(mem::replace(&mut **r, LeafTree::Leaf(None)));
                }
            }
        };
        scrub(self, &mut stack);
        while let Some(mut t) = stack.pop() {
            scrub(&mut t, &mut stack);
        }
    }
}

// ---------------------------------------------------------------------------
// Coalgebra step types and the divergence error
// ---------------------------------------------------------------------------

/// One unfolding step for `NodeTree`: stop (empty subtree) or emit a node key
/// and two child seeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeStep<S> {
    Stop,
    Split { key: Key, left: S, right: S },
}

/// One unfolding step for `LeafTree`: finish with a leaf payload or split the
/// seed in two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafStep<S> {
    Done(Option<Key>),
    Split { left: S, right: S },
}

/// Raised when an unfold expands a seed deeper than the configured limit,
/// which signals a coalgebra that is not well-founded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    /// Depth of the offending seed (the root seed has depth 0).
    pub depth: usize,
    pub limit: usize,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unfold diverged: seed at depth {} exceeds the depth limit {}",
            self.depth, self.limit
        )
    }
}

impl std::error::Error for Divergence {}

// ---------------------------------------------------------------------------
// Folds
// ---------------------------------------------------------------------------

/// Bottom-up reduction of a `NodeTree`. `step` combines a node key with the
/// results for both children; `base` is the value of the empty tree.
pub fn fold_node_tree<A, F>(mut step: F, base: A, t: &NodeTree) -> A
where
    A: Clone,
    F: FnMut(Key, A, A) -> A,
{
    enum Frame<'t> {
        Visit(&'t NodeTree),
        Combine(Key),
    }
    let mut tasks = vec![Frame::Visit(t)];
    let mut values: Vec<A> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Frame::Visit(NodeTree::Empty) => values.push(base.clone()),
            Frame::Visit(NodeTree::Node(k, l, r)) => {
                tasks.push(Frame::Combine(*k));
                tasks.push(Frame::Visit(r));
                tasks.push(Frame::Visit(l));
            }
            Frame::Combine(k) => {
                let vr = values.pop().expect("fold stack underflow");
                let vl = values.pop().expect("fold stack underflow");
                values.push(step(k, vl, vr));
            }
        }
    }
    values.pop().expect("fold produced no value")
}

/// Bottom-up reduction of a `LeafTree`. `leaf` interprets payloads, `branch`
/// combines child results.
pub fn fold_leaf_tree<A, B, L>(mut branch: B, mut leaf: L, t: &LeafTree) -> A
where
    B: FnMut(A, A) -> A,
    L: FnMut(Option<Key>) -> A,
{
    enum Frame<'t> {
        Visit(&'t LeafTree),
        Combine,
    }
    let mut tasks = vec![Frame::Visit(t)];
    let mut values: Vec<A> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Frame::Visit(LeafTree::Leaf(p)) => values.push(leaf(*p)),
            Frame::Visit(LeafTree::Branch(l, r)) => {
                tasks.push(Frame::Combine);
                tasks.push(Frame::Visit(r));
                tasks.push(Frame::Visit(l));
            }
            Frame::Combine => {
                let vr = values.pop().expect("fold stack underflow");
                let vl = values.pop().expect("fold stack underflow");
                values.push(branch(vl, vr));
            }
        }
    }
    values.pop().expect("fold produced no value")
}

/// Paramorphism over a `LeafTree`: like the fold, but `branch` also receives
/// the untouched child subtrees alongside their results.
pub fn para_leaf_tree<A, B, L>(mut branch: B, mut leaf: L, t: &LeafTree) -> A
where
    B: FnMut(&LeafTree, A, &LeafTree, A) -> A,
    L: FnMut(Option<Key>) -> A,
{
    enum Frame<'t> {
        Visit(&'t LeafTree),
        Combine(&'t LeafTree, &'t LeafTree),
    }
    let mut tasks = vec![Frame::Visit(t)];
    let mut values: Vec<A> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Frame::Visit(LeafTree::Leaf(p)) => values.push(leaf(*p)),
            Frame::Visit(LeafTree::Branch(l, r)) => {
                tasks.push(Frame::Combine(l, r));
                tasks.push(Frame::Visit(r));
                tasks.push(Frame::Visit(l));
            }
            Frame::Combine(l, r) => {
                let vr = values.pop().expect("para stack underflow");
                let vl = values.pop().expect("para stack underflow");
                values.push(branch(l, vl, r, vr));
            }
        }
    }
    values.pop().expect("para produced no value")
}

// ---------------------------------------------------------------------------
// Unfolds
// ---------------------------------------------------------------------------

const NO_CHILD: usize = usize::MAX;

/// Grow a `NodeTree` from a seed with the default depth limit.
pub fn unfold_node_tree<S, G>(coalg: G, seed: S) -> Result<NodeTree, Divergence>
where
    G: FnMut(S) -> NodeStep<S>,
{
    unfold_node_tree_with_limit(coalg, seed, DEFAULT_DEPTH_LIMIT)
}

/// Grow a `NodeTree` from a seed, erroring out if any seed sits deeper than
/// `limit` splits below the root.
pub fn unfold_node_tree_with_limit<S, G>(
    mut coalg: G,
    seed: S,
    limit: usize,
) -> Result<NodeTree, Divergence>
where
    G: FnMut(S) -> NodeStep<S>,
{
    struct Entry {
        key: Key,
        left: usize,
        right: usize,
    }
    // Depth-first expansion into an arena; children always land at higher
    // indices than their parent, so assembly can run back to front.
    let mut arena: Vec<Entry> = Vec::new();
    let mut pending: Vec<(S, usize, bool, usize)> = vec![(seed, NO_CHILD, false, 0)];
    while let Some((s, parent, is_right, depth)) = pending.pop() {
        if depth > limit {
            return Err(Divergence { depth, limit });
        }
        match coalg(s) {
            NodeStep::Stop => {}
            NodeStep::Split { key, left, right } => {
                let idx = arena.len();
                arena.push(Entry { key, left: NO_CHILD, right: NO_CHILD });
                if parent != NO_CHILD {
                    if is_right {
                        arena[parent].right = idx;
                    } else {
                        arena[parent].left = idx;
                    }
                }
                pending.push((right, idx, true, depth + 1));
                pending.push((left, idx, false, depth + 1));
            }
        }
    }
    let mut built: Vec<Option<NodeTree>> = Vec::with_capacity(arena.len());
    built.resize_with(arena.len(), || None);
    for i in (0..arena.len()).rev() {
        let l = take_child(&mut built, arena[i].left, NodeTree::Empty);
        let r = take_child(&mut built, arena[i].right, NodeTree::Empty);
        built[i] = Some(NodeTree::node(arena[i].key, l, r));
    }
    Ok(match built.into_iter().next() {
        Some(root) => root.expect("unfold root not assembled"),
        None => NodeTree::Empty,
    })
}

fn take_child<T>(built: &mut [Option<T>], idx: usize, empty: T) -> T {
    if idx == NO_CHILD {
        empty
    } else {
        built[idx].take().expect("unfold child consumed twice")
    }
}

/// Grow a `LeafTree` from a seed with the default depth limit.
pub fn unfold_leaf_tree<S, G>(coalg: G, seed: S) -> Result<LeafTree, Divergence>
where
    G: FnMut(S) -> LeafStep<S>,
{
    unfold_leaf_tree_with_limit(coalg, seed, DEFAULT_DEPTH_LIMIT)
}

/// Grow a `LeafTree` from a seed with an explicit depth limit.
pub fn unfold_leaf_tree_with_limit<S, G>(
    mut coalg: G,
    seed: S,
    limit: usize,
) -> Result<LeafTree, Divergence>
where
    G: FnMut(S) -> LeafStep<S>,
{
    enum Entry {
        Leaf(Option<Key>),
        Branch { left: usize, right: usize },
    }
    let mut arena: Vec<Entry> = Vec::new();
    let mut pending: Vec<(S, usize, bool, usize)> = vec![(seed, NO_CHILD, false, 0)];
    while let Some((s, parent, is_right, depth)) = pending.pop() {
        if depth > limit {
            return Err(Divergence { depth, limit });
        }
        let idx = arena.len();
        let link = |arena: &mut Vec<Entry>| {
            if parent != NO_CHILD {
                if let Entry::Branch { left, right } = &mut arena[parent] {
                    if is_right {
                        *right = idx;
                    } else {
                        *left = idx;
                    }
                }
            }
        };
        match coalg(s) {
            LeafStep::Done(p) => {
                arena.push(Entry::Leaf(p));
                link(&mut arena);
            }
            LeafStep::Split { left, right } => {
                arena.push(Entry::Branch { left: NO_CHILD, right: NO_CHILD });
                link(&mut arena);
                pending.push((right, idx, true, depth + 1));
                pending.push((left, idx, false, depth + 1));
            }
        }
    }
    let mut built: Vec<Option<LeafTree>> = Vec::with_capacity(arena.len());
    built.resize_with(arena.len(), || None);
    for i in (0..arena.len()).rev() {
        let t = match &arena[i] {
            Entry::Leaf(p) => LeafTree::Leaf(*p),
            Entry::Branch { left, right } => {
                let l = built[*left].take().expect("unfold child consumed twice");
                let r = built[*right].take().expect("unfold child consumed twice");
                LeafTree::branch(l, r)
            }
        };
        built[i] = Some(t);
    }
    Ok(built
        .into_iter()
        .next()
        .expect("leaf tree unfold produced nothing")
        .expect("unfold root not assembled"))
}

// ---------------------------------------------------------------------------
// Hylomorphisms
// ---------------------------------------------------------------------------

/// Unfold-then-fold over `NodeTree` in one pass. Extensionally equal to
/// `fold_node_tree(step, base, &unfold_node_tree(coalg, seed)?)` but never
/// materializes the intermediate tree.
pub fn hylo_node_tree<S, A, F, G>(step: F, base: A, coalg: G, seed: S) -> Result<A, Divergence>
where
    A: Clone,
    F: FnMut(Key, A, A) -> A,
    G: FnMut(S) -> NodeStep<S>,
{
    hylo_node_tree_with_limit(step, base, coalg, seed, DEFAULT_DEPTH_LIMIT)
}

pub fn hylo_node_tree_with_limit<S, A, F, G>(
    mut step: F,
    base: A,
    mut coalg: G,
    seed: S,
    limit: usize,
) -> Result<A, Divergence>
where
    A: Clone,
    F: FnMut(Key, A, A) -> A,
    G: FnMut(S) -> NodeStep<S>,
{
    enum Frame<S> {
        Expand(S, usize),
        Combine(Key),
    }
    let mut tasks = vec![Frame::Expand(seed, 0)];
    let mut values: Vec<A> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Frame::Expand(s, depth) => {
                if depth > limit {
                    return Err(Divergence { depth, limit });
                }
                match coalg(s) {
                    NodeStep::Stop => values.push(base.clone()),
                    NodeStep::Split { key, left, right } => {
                        tasks.push(Frame::Combine(key));
                        tasks.push(Frame::Expand(right, depth + 1));
                        tasks.push(Frame::Expand(left, depth + 1));
                    }
                }
            }
            Frame::Combine(k) => {
                let vr = values.pop().expect("hylo stack underflow");
                let vl = values.pop().expect("hylo stack underflow");
                values.push(step(k, vl, vr));
            }
        }
    }
    Ok(values.pop().expect("hylo produced no value"))
}

/// Unfold-then-fold over `LeafTree` in one pass, without building the tree.
pub fn hylo_leaf_tree<S, A, B, L, G>(branch: B, leaf: L, coalg: G, seed: S) -> Result<A, Divergence>
where
    B: FnMut(A, A) -> A,
    L: FnMut(Option<Key>) -> A,
    G: FnMut(S) -> LeafStep<S>,
{
    hylo_leaf_tree_with_limit(branch, leaf, coalg, seed, DEFAULT_DEPTH_LIMIT)
}

pub fn hylo_leaf_tree_with_limit<S, A, B, L, G>(
    mut branch: B,
    mut leaf: L,
    mut coalg: G,
    seed: S,
    limit: usize,
) -> Result<A, Divergence>
where
    B: FnMut(A, A) -> A,
    L: FnMut(Option<Key>) -> A,
    G: FnMut(S) -> LeafStep<S>,
{
    enum Frame<S> {
        Expand(S, usize),
        Combine,
    }
    let mut tasks = vec![Frame::Expand(seed, 0)];
    let mut values: Vec<A> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Frame::Expand(s, depth) => {
                if depth > limit {
                    return Err(Divergence { depth, limit });
                }
                match coalg(s) {
                    LeafStep::Done(p) => values.push(leaf(p)),
                    LeafStep::Split { left, right } => {
                        tasks.push(Frame::Combine);
                        tasks.push(Frame::Expand(right, depth + 1));
                        tasks.push(Frame::Expand(left, depth + 1));
                    }
                }
            }
            Frame::Combine => {
                let vr = values.pop().expect("hylo stack underflow");
                let vl = values.pop().expect("hylo stack underflow");
                values.push(branch(vl, vr));
            }
        }
    }
    Ok(values.pop().expect("hylo produced no value"))
}

/// Structural coalgebra of an existing tree: unfolding with it reproduces the
/// tree. Mostly useful for exercising unfold itself.
pub fn node_tree_coalg(t: &NodeTree) -> NodeStep<&NodeTree> {
    match t {
        NodeTree::Empty => NodeStep::Stop,
        NodeTree::Node(k, l, r) => NodeStep::Split { key: *k, left: l, right: r },
    }
}

/// Structural coalgebra of an existing `LeafTree`.
pub fn leaf_tree_coalg(t: &LeafTree) -> LeafStep<&LeafTree> {
    match t {
        LeafTree::Leaf(p) => LeafStep::Done(*p),
        LeafTree::Branch(l, r) => LeafStep::Split { left: l, right: r },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::merge;

    fn n(k: Key, l: NodeTree, r: NodeTree) -> NodeTree {
        NodeTree::node(k, l, r)
    }

    fn s(k: Key) -> NodeTree {
        NodeTree::singleton(k)
    }

    #[test]
    fn fold_node_tree_prepends_key_to_merged_children() {
        // step x l r = x : (l merge r) over Node(1, Node(3), Node(2))
        let t = n(1, s(3), s(2));
        let got = fold_node_tree(
            |x, l: Vec<Key>, r: Vec<Key>| {
                let mut out = vec![x];
                out.extend(merge(&l, &r));
                out
            },
            Vec::new(),
            &t,
        );
        assert_eq!(got, vec![1, 2, 3]);
    }

    #[test]
    fn fold_node_tree_on_empty_returns_base() {
        let got = fold_node_tree(|_, _, _| unreachable!(), 7i64, &NodeTree::Empty);
        assert_eq!(got, 7);
    }

    #[test]
    fn fold_leaf_tree_merges_payloads() {
        // Branch(Branch(Leaf 1, Leaf 3), Leaf 2) flattens sorted under merge.
        let t = LeafTree::branch(
            LeafTree::branch(LeafTree::leaf(1), LeafTree::leaf(3)),
            LeafTree::leaf(2),
        );
        let got = fold_leaf_tree(
            |l: Vec<Key>, r: Vec<Key>| merge(&l, &r),
            |p| p.map_or_else(Vec::new, |k| vec![k]),
            &t,
        );
        assert_eq!(got, vec![1, 2, 3]);
    }

    #[test]
    fn size_and_height() {
        let t = n(1, s(3), NodeTree::Empty);
        assert_eq!(t.size(), 2);
        assert_eq!(t.height(), 2);
        assert_eq!(NodeTree::Empty.height(), 0);
        let lt = LeafTree::branch(LeafTree::leaf(1), LeafTree::leaf(2));
        assert_eq!(lt.leaf_count(), 2);
        assert_eq!(lt.height(), 1);
        assert_eq!(LeafTree::empty().height(), 0);
    }

    #[test]
    fn unfold_node_tree_roundtrips_structural_coalgebra() {
        let t = n(5, n(2, NodeTree::Empty, s(9)), s(7));
        let got = unfold_node_tree(node_tree_coalg, &t).unwrap();
        assert_eq!(got, t);
    }

    #[test]
    fn unfold_leaf_tree_roundtrips_structural_coalgebra() {
        let t = LeafTree::branch(
            LeafTree::leaf(4),
            LeafTree::branch(LeafTree::leaf(1), LeafTree::empty()),
        );
        let got = unfold_leaf_tree(leaf_tree_coalg, &t).unwrap();
        assert_eq!(got, t);
    }

    #[test]
    fn unfold_reports_divergence_with_depth() {
        // Coalgebra that never stops: seeds grow forever.
        let err = unfold_node_tree_with_limit(
            |s: u64| NodeStep::Split { key: 0, left: s + 1, right: s + 1 },
            0u64,
            50,
        )
        .unwrap_err();
        assert_eq!(err, Divergence { depth: 51, limit: 50 });
        assert!(err.to_string().contains("depth 51"));
        assert!(err.to_string().contains("limit 50"));
    }

    #[test]
    fn hylo_reports_divergence_too() {
        let err = hylo_node_tree_with_limit(
            |_, _: (), _: ()| (),
            (),
            |s: u64| NodeStep::Split { key: 0, left: s, right: s },
            0u64,
            10,
        )
        .unwrap_err();
        assert_eq!(err.limit, 10);
        assert_eq!(err.depth, 11);
    }

    #[test]
    fn para_leaf_tree_sees_untouched_subtrees() {
        // branch l l' r r' = leaf_count(l) + l' + r' : counting via both the
        // recursive results and the raw subtree must agree.
        let t = LeafTree::branch(
            LeafTree::branch(LeafTree::leaf(1), LeafTree::leaf(3)),
            LeafTree::leaf(2),
        );
        let got = para_leaf_tree(
            |l, vl: usize, _r, vr: usize| {
                assert_eq!(l.leaf_count(), vl);
                vl + vr
            },
            |_| 1usize,
            &t,
        );
        assert_eq!(got, 3);
    }

    #[test]
    fn operators_tolerate_deep_spines() {
        // Right spine of height 100_000: build iteratively, fold, unfold,
        // and drop without blowing the stack.
        const H: usize = 100_000;
        let mut t = NodeTree::Empty;
        for k in (0..H as Key).rev() {
            t = n(k, NodeTree::Empty, t);
        }
        assert_eq!(t.height(), H);
        assert_eq!(t.size(), H);
        let copy = unfold_node_tree(node_tree_coalg, &t).unwrap();
        assert_eq!(copy.size(), H);
        let total = fold_node_tree(|_, l, r| l + r + 1u64, 0u64, &copy);
        assert_eq!(total, H as u64);
        // `t` and `copy` drop here; Drop must not recurse.
    }

    #[test]
    fn leaf_tree_drop_tolerates_deep_spines() {
        const H: usize = 100_000;
        let mut t = LeafTree::leaf(0);
        for k in 1..=H as Key {
            t = LeafTree::branch(LeafTree::leaf(k), t);
        }
        assert_eq!(t.height(), H);
        assert_eq!(t.leaf_count(), H + 1);
    }

    #[test]
    fn hylo_equals_fold_after_unfold() {
        let seeds: Vec<Vec<Key>> = vec![vec![], vec![5], vec![3, 1, 2], vec![2, 2, 2, 2]];
        // Coalgebra: first element is the node, rest split by parity of index.
        fn split(mut v: Vec<Key>) -> NodeStep<Vec<Key>> {
            if v.is_empty() {
                return NodeStep::Stop;
            }
            let key = v.remove(0);
            let right: Vec<Key> = v.iter().copied().skip(1).step_by(2).collect();
            let left: Vec<Key> = v.into_iter().step_by(2).collect();
            NodeStep::Split { key, left, right }
        }
        for seed in seeds {
            let fused =
                hylo_node_tree(|k, l: Vec<Key>, r| merge(&merge(&[k], &l), &r), vec![], split, seed.clone())
                    .unwrap();
            let tree = unfold_node_tree(split, seed).unwrap();
            let staged = fold_node_tree(|k, l: Vec<Key>, r| merge(&merge(&[k], &l), &r), vec![], &tree);
            assert_eq!(fused, staged);
        }
    }
}
