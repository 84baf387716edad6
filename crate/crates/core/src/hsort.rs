//! Heap sort through subtree-swapping heaps.
//!
//! `ist_h` sinks the larger of the incoming key and the root into the right
//! subtree and then swaps children, so the shape follows exactly the same
//! recursion as the leaf-tree build and stays balanced regardless of key
//! order. Flattening prepends the root to the merge of the flattened
//! children, which is sorted precisely when the tree is a heap. The top-down
//! route extracts the minimum and splits the rest with `haux`.

use crate::ordered::merge;
use crate::trees::{
    fold_node_tree, hylo_node_tree_with_limit, unfold_node_tree_with_limit, Key, NodeStep,
    NodeTree, DEFAULT_DEPTH_LIMIT,
};
use std::collections::VecDeque;

/// Insert a key into a heap: the smaller of key and root stays on top, the
/// other sinks into the right subtree, and the children swap.
pub fn ist_h(x: Key, mut t: NodeTree) -> NodeTree {
    let mut carry = x;
    let mut cur = &mut t;
    loop {
        match cur {
            NodeTree::Empty => {
                *cur = NodeTree::singleton(carry);
                break;
            }
            NodeTree::Node(y, l, r) => {
                if carry < *y {
                    std::mem::swap(&mut carry, y);
                }
                // Children swap; the displaced key sinks into the old right.
                std::mem::swap(l, r);
                cur = l;
            }
        }
    }
    t
}

/// Flatten by prepending each key to the merge of its flattened children.
/// Sorted output is guaranteed only for heaps; the function itself is total.
pub fn h2list(t: &NodeTree) -> Vec<Key> {
    fold_node_tree(
        |x, l: Vec<Key>, r: Vec<Key>| {
            let mut out = Vec::with_capacity(l.len() + r.len() + 1);
            out.push(x);
            out.extend(merge(&l, &r));
            out
        },
        Vec::new(),
        t,
    )
}

/// Build a heap from a list, inserting right to left.
pub fn build_h(l: &[Key]) -> NodeTree {
    let mut t = NodeTree::Empty;
    for &x in l.iter().rev() {
        t = ist_h(x, t);
    }
    t
}

/// Select the minimum of `x` and the elements of `rest`, distributing the
/// losers alternately over two lists:
///
/// ```text
/// haux x []     = (x, [], [])
/// haux x (y:ys) = if x < m then (x, m:b, a) else (m, x:b, a)
///                 where (m, a, b) = haux y ys
/// ```
///
/// The loser of each comparison lands in front of the previous third
/// component and the components swap, so the two lists stay within one
/// element of each other in length.
pub fn haux(x: Key, rest: &[Key]) -> (Key, Vec<Key>, Vec<Key>) {
    let mut m = match rest.last() {
        None => return (x, Vec::new(), Vec::new()),
        Some(&last) => last,
    };
    let mut a: VecDeque<Key> = VecDeque::new();
    let mut b: VecDeque<Key> = VecDeque::new();
    // Walk the recurrence from its base case at the end of the list back to
    // the front; `x` is just the leftmost element of the combined input.
    for &e in rest[..rest.len() - 1].iter().rev().chain(std::iter::once(&x)) {
        let loser = if e < m {
            std::mem::replace(&mut m, e)
        } else {
            e
        };
        std::mem::swap(&mut a, &mut b);
        a.push_front(loser);
    }
    (m, a.into(), b.into())
}

fn prepend(x: Key, v: Vec<Key>) -> Vec<Key> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(x);
    out.extend(v);
    out
}

/// Let-bound spelling of the selection recurrence, kept verbatim as a
/// cross-check oracle for the iterative `haux`:
///
/// ```text
/// haux x (y:ys) = let (z,l,r) = haux y ys
///                 in if x<z then (x,z:r,l) else (z,x:r,l)
/// ```
pub fn haux_nested_let(x: Key, l: &[Key]) -> (Key, Vec<Key>, Vec<Key>) {
    match l.split_first() {
        None => (x, Vec::new(), Vec::new()),
        Some((&y, ys)) => {
            let (z, l, r) = haux_nested_let(y, ys);
            if x < z {
                (x, prepend(z, r), l)
            } else {
                (z, prepend(x, r), l)
            }
        }
    }
}

/// Guarded spelling of the same recurrence, also kept verbatim:
///
/// ```text
/// haux x (y:ys) | x < m      = (x,m:b,a)
///               | otherwise  = (m,x:b,a)
///               where (m,a,b) = haux y ys
/// ```
///
/// The two spellings differ only in how the tuple components are named; the
/// law `haux-forms-agree` checks both against `haux` anyway.
pub fn haux_guarded(x: Key, l: &[Key]) -> (Key, Vec<Key>, Vec<Key>) {
    match l.split_first() {
        None => (x, Vec::new(), Vec::new()),
        Some((&y, ys)) => {
            let (m, a, b) = haux_guarded(y, ys);
            if x < m {
                (x, prepend(m, b), a)
            } else {
                (m, prepend(x, b), a)
            }
        }
    }
}

/// Balance of the insertion build shape: at every node the left subtree is
/// as tall as the right or exactly one level taller, never shorter.
pub fn is_balanced_node(t: &NodeTree) -> bool {
    fold_node_tree(
        |_, (hl, okl): (usize, bool), (hr, okr): (usize, bool)| {
            (1 + hl.max(hr), okl && okr && (hl == hr || hl == hr + 1))
        },
        (0, true),
        t,
    )
    .1
}

/// Unfolding step: the head seeds the minimum search, the remainder splits
/// into the two child seeds.
pub fn coalg(seed: Vec<Key>) -> NodeStep<Vec<Key>> {
    match seed.split_first() {
        None => NodeStep::Stop,
        Some((&s, rest)) => {
            let (key, left, right) = haux(s, rest);
            NodeStep::Split { key, left, right }
        }
    }
}

/// Build the heap top-down by repeated minimum extraction. Produces the same
/// tree as `build_h`, which the harness checks structurally.
pub fn unfold_hsort(l: &[Key]) -> NodeTree {
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    unfold_node_tree_with_limit(coalg, l.to_vec(), limit)
        .expect("hsort coalgebra is well-founded")
}

/// Heap sort as a single fused pass over the virtual heap.
pub fn hsort_hylo(l: &[Key]) -> Vec<Key> {
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    hylo_node_tree_with_limit(
        |x, a: Vec<Key>, b: Vec<Key>| {
            let mut out = Vec::with_capacity(a.len() + b.len() + 1);
            out.push(x);
            out.extend(merge(&a, &b));
            out
        },
        Vec::new(),
        coalg,
        l.to_vec(),
        limit,
    )
    .expect("hsort coalgebra is well-founded")
}

/// Plain recursive heap sort: emit the minimum, recurse on the two loser
/// lists, merge. Depth is logarithmic because `haux` splits evenly.
pub fn hsort_deforested(l: &[Key]) -> Vec<Key> {
    match l.split_first() {
        None => Vec::new(),
        Some((&s, rest)) => {
            let (m, a, b) = haux(s, rest);
            let mut out = Vec::with_capacity(l.len());
            out.push(m);
            out.extend(merge(&hsort_deforested(&a), &hsort_deforested(&b)));
            out
        }
    }
}
