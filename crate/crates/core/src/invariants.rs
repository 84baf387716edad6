//! Structural predicates over lists and trees, plus the shape-agnostic
//! flattening `bt2list` that refines both tree-to-list conversions on their
//! respective invariants.
//!
//! `is_heap` and `is_bst` are transcribed from their recursive definitions
//! with quantified subtree conditions rather than rewritten as bound-passing
//! traversals; the corpora they run over are small, and the transcription is
//! the point.

use crate::ordered::merge;
use crate::trees::{fold_node_tree, Key, NodeTree};

/// Does `p` hold for every element of the list?
pub fn all_list<P: Fn(Key) -> bool>(p: P, l: &[Key]) -> bool {
    l.iter().all(|&x| p(x))
}

/// Does `p` hold for every key in the tree?
pub fn all_tree<P: Fn(Key) -> bool>(p: &P, t: &NodeTree) -> bool {
    fold_node_tree(|x, l, r| p(x) && l && r, true, t)
}

/// Heap shape: every node's key is a lower bound for both subtrees.
pub fn is_heap(t: &NodeTree) -> bool {
    let mut stack = vec![t];
    while let Some(t) = stack.pop() {
        if let NodeTree::Node(x, l, r) = t {
            let x = *x;
            if !all_tree(&|k| x <= k, l) || !all_tree(&|k| x <= k, r) {
                return false;
            }
            stack.push(l);
            stack.push(r);
        }
    }
    true
}

/// Search-tree shape: strictly smaller keys left, greater-or-equal right.
pub fn is_bst(t: &NodeTree) -> bool {
    let mut stack = vec![t];
    while let Some(t) = stack.pop() {
        if let NodeTree::Node(x, l, r) = t {
            let x = *x;
            if !all_tree(&|k| k < x, l) || !all_tree(&|k| x <= k, r) {
                return false;
            }
            stack.push(l);
            stack.push(r);
        }
    }
    true
}

/// Flatten any node tree to a sorted list by merging the root with both
/// flattened children. Output is sorted for every input tree; on heaps it
/// agrees with the heap flattening, on search trees with the in-order one.
pub fn bt2list(t: &NodeTree) -> Vec<Key> {
    fold_node_tree(
        |x, l: Vec<Key>, r: Vec<Key>| merge(&[x], &merge(&l, &r)),
        Vec::new(),
        t,
    )
}
