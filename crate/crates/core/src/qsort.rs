//! Quick sort through binary search trees.
//!
//! The bottom-up route inserts keys left to right with `ist_bst` (no
//! rebalancing, equal keys to the right). The top-down route unfolds with the
//! head as pivot; its partition sends keys equal to the pivot to the right,
//! exactly mirroring `ist_bst`, so the two routes build identical trees even
//! on duplicate-laden input. The classic recursive quick sort uses `qaux`,
//! whose clauses send ties to the left; at the list level both tie rules sort
//! identically (`partition_ties_left_breaks_build_equivalence` below records
//! why the coalgebra must not use `qaux`).
//!
//! No balancing means sorted input degenerates the tree to a spine; all paths
//! here tolerate that (iterative insertion and flattening, and an explicit
//! work stack in the deforested sort).

use crate::trees::{
    fold_node_tree, hylo_node_tree_with_limit, unfold_node_tree_with_limit, Key, NodeStep,
    NodeTree, DEFAULT_DEPTH_LIMIT,
};

/// Insert a key into a search tree without rebalancing; equal keys descend to
/// the right.
pub fn ist_bst(x: Key, mut t: NodeTree) -> NodeTree {
    let mut cur = &mut t;
    loop {
        match cur {
            NodeTree::Empty => {
                *cur = NodeTree::singleton(x);
                break;
            }
            NodeTree::Node(y, l, r) => {
                cur = if x < *y { l } else { r };
            }
        }
    }
    t
}

/// Insert a whole list left to right, threading the tree as an accumulator.
pub fn insert_all(xs: &[Key], mut t: NodeTree) -> NodeTree {
    for &x in xs {
        t = ist_bst(x, t);
    }
    t
}

/// In-order flattening: left list, root, right list. Sorted exactly when the
/// tree is a search tree.
pub fn bst2list(t: &NodeTree) -> Vec<Key> {
    fold_node_tree(
        |x, mut l: Vec<Key>, r: Vec<Key>| {
            l.push(x);
            l.extend(r);
            l
        },
        Vec::new(),
        t,
    )
}

/// Build a search tree from a list by left-to-right insertion.
pub fn build_bst(l: &[Key]) -> NodeTree {
    insert_all(l, NodeTree::Empty)
}

/// Order-preserving partition around `x`: elements `<= x` keep their relative
/// order on the left, the rest on the right.
pub fn qaux(x: Key, l: &[Key]) -> (Vec<Key>, Vec<Key>) {
    let mut le = Vec::new();
    let mut gt = Vec::new();
    for &h in l {
        if h <= x {
            le.push(h);
        } else {
            gt.push(h);
        }
    }
    (le, gt)
}

/// Order-preserving partition with the opposite tie rule: strictly smaller
/// elements go left, elements `>= x` go right. This matches where `ist_bst`
/// sends equal keys, which is what makes the unfold reproduce `build_bst`.
pub fn partition_lt(x: Key, l: &[Key]) -> (Vec<Key>, Vec<Key>) {
    let mut lt = Vec::new();
    let mut ge = Vec::new();
    for &h in l {
        if h < x {
            lt.push(h);
        } else {
            ge.push(h);
        }
    }
    (lt, ge)
}

/// Unfolding step: head becomes the pivot node, the tail splits around it
/// with ties to the right.
pub fn coalg(seed: Vec<Key>) -> NodeStep<Vec<Key>> {
    match seed.split_first() {
        None => NodeStep::Stop,
        Some((&x, rest)) => {
            let (left, right) = partition_lt(x, rest);
            NodeStep::Split { key: x, left, right }
        }
    }
}

/// Build the search tree top-down by pivoting on heads. Produces the same
/// tree as `build_bst`, which the harness checks structurally.
pub fn unfold_qsort(l: &[Key]) -> NodeTree {
    // Each split strictly shrinks the seed, so depth is bounded by the input
    // length and the limit below makes divergence unreachable.
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    unfold_node_tree_with_limit(coalg, l.to_vec(), limit)
        .expect("qsort coalgebra is well-founded")
}

/// Quick sort as a single fused pass over the virtual search tree.
pub fn qsort_hylo(l: &[Key]) -> Vec<Key> {
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    hylo_node_tree_with_limit(
        |x, mut a: Vec<Key>, b: Vec<Key>| {
            a.push(x);
            a.extend(b);
            a
        },
        Vec::new(),
        coalg,
        l.to_vec(),
        limit,
    )
    .expect("qsort coalgebra is well-founded")
}

/// Classic quick sort: pivot on the head with `qaux`, sort both sides, stitch
/// together. Runs on an explicit work stack because recursion depth is linear
/// on sorted input.
pub fn qsort_deforested(l: &[Key]) -> Vec<Key> {
    enum Work {
        Sort(Vec<Key>),
        Emit(Key),
    }
    let mut out = Vec::with_capacity(l.len());
    let mut tasks = vec![Work::Sort(l.to_vec())];
    while let Some(task) = tasks.pop() {
        match task {
            Work::Emit(k) => out.push(k),
            Work::Sort(v) => match v.split_first() {
                None => {}
                Some((&x, rest)) => {
                    let (le, gt) = qaux(x, rest);
                    tasks.push(Work::Sort(gt));
                    tasks.push(Work::Emit(x));
                    tasks.push(Work::Sort(le));
                }
            },
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::isort;
    use proptest::prelude::*;

    fn n(k: Key, l: NodeTree, r: NodeTree) -> NodeTree {
        NodeTree::node(k, l, r)
    }

    fn s(k: Key) -> NodeTree {
        NodeTree::singleton(k)
    }

    #[test]
    fn ist_bst_orders_and_sends_ties_right() {
        assert_eq!(ist_bst(5, NodeTree::Empty), s(5));
        assert_eq!(ist_bst(1, n(2, NodeTree::Empty, s(3))), n(2, s(1), s(3)));
        assert_eq!(ist_bst(2, s(2)), n(2, NodeTree::Empty, s(2)));
    }

    #[test]
    fn build_matches_hand_trace() {
        assert_eq!(build_bst(&[2, 1, 3]), n(2, s(1), s(3)));
        assert_eq!(
            build_bst(&[1, 2, 3]),
            n(1, NodeTree::Empty, n(2, NodeTree::Empty, s(3)))
        );
        assert_eq!(build_bst(&[]), NodeTree::Empty);
    }

    #[test]
    fn bst2list_flattens_in_order() {
        assert_eq!(bst2list(&n(2, s(1), s(3))), vec![1, 2, 3]);
        // Total on trees violating the search invariant, just not sorted.
        assert_eq!(bst2list(&n(1, s(2), NodeTree::Empty)), vec![2, 1]);
    }

    #[test]
    fn qaux_keeps_order_and_sends_ties_left() {
        assert_eq!(qaux(2, &[3, 1, 2]), (vec![1, 2], vec![3]));
        assert_eq!(qaux(2, &[2, 2]), (vec![2, 2], vec![]));
        assert_eq!(qaux(0, &[]), (vec![], vec![]));
    }

    // Literal transcription of the recurrence
    //   qaux x []    = ([], [])
    //   qaux x (h:t) = let (l, r) = qaux x t
    //                  in if h <= x then (h:l, r) else (l, h:r)
    fn qaux_recurrence(x: Key, l: &[Key]) -> (Vec<Key>, Vec<Key>) {
        match l.split_first() {
            None => (Vec::new(), Vec::new()),
            Some((&h, t)) => {
                let (l, r) = qaux_recurrence(x, t);
                if h <= x {
                    let mut le = vec![h];
                    le.extend(l);
                    (le, r)
                } else {
                    let mut gt = vec![h];
                    gt.extend(r);
                    (l, gt)
                }
            }
        }
    }

    #[test]
    fn qaux_matches_recurrence_exhaustively() {
        let mut stack: Vec<Vec<Key>> = vec![Vec::new()];
        while let Some(l) = stack.pop() {
            for x in 0..3 {
                assert_eq!(qaux(x, &l), qaux_recurrence(x, &l), "qaux mismatch on x={x} {l:?}");
            }
            if l.len() < 6 {
                for k in 0..3 {
                    let mut next = l.clone();
                    next.push(k);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn unfold_matches_hand_trace() {
        assert_eq!(unfold_qsort(&[2, 1, 3]), n(2, s(1), s(3)));
        assert_eq!(unfold_qsort(&[]), NodeTree::Empty);
    }

    #[test]
    fn unfold_reproduces_build_on_duplicates() {
        for l in [vec![2, 2], vec![2, 1, 2, 0, 2], vec![3, 3, 3, 3]] {
            assert_eq!(unfold_qsort(&l), build_bst(&l), "mismatch on {l:?}");
        }
    }

    #[test]
    fn partition_ties_left_breaks_build_equivalence() {
        // With ties kept on the left the pivot's duplicates end up below the
        // left child, but insertion sends them right: [2, 2] is the smallest
        // witness. This is why `coalg` uses `partition_lt`, not `qaux`.
        let l = [2, 2];
        let with_qaux = unfold_node_tree_with_limit(
            |seed: Vec<Key>| match seed.split_first() {
                None => NodeStep::Stop,
                Some((&x, rest)) => {
                    let (left, right) = qaux(x, rest);
                    NodeStep::Split { key: x, left, right }
                }
            },
            l.to_vec(),
            DEFAULT_DEPTH_LIMIT,
        )
        .unwrap();
        assert_eq!(with_qaux, n(2, s(2), NodeTree::Empty));
        assert_eq!(build_bst(&l), n(2, NodeTree::Empty, s(2)));
        assert_ne!(with_qaux, build_bst(&l));
        // Both still sort correctly; only the shapes differ.
        assert_eq!(bst2list(&with_qaux), bst2list(&build_bst(&l)));
    }

    #[test]
    fn deforested_handles_sorted_input_without_deep_recursion() {
        let l: Vec<Key> = (0..50_000).collect();
        assert_eq!(qsort_deforested(&l), l);
    }

    proptest! {
        #[test]
        fn all_routes_agree_with_isort(l in proptest::collection::vec(any::<Key>(), 0..120)) {
            let want = isort(&l);
            prop_assert_eq!(bst2list(&build_bst(&l)), want.clone());
            prop_assert_eq!(qsort_hylo(&l), want.clone());
            prop_assert_eq!(qsort_deforested(&l), want);
        }

        #[test]
        fn build_and_unfold_agree_structurally(l in proptest::collection::vec(-4i64..4, 0..60)) {
            prop_assert_eq!(build_bst(&l), unfold_qsort(&l));
        }

        #[test]
        fn partitions_preserve_order_and_multiset(x in -4i64..4, l in proptest::collection::vec(-4i64..4, 0..60)) {
            let (le, gt) = qaux(x, &l);
            prop_assert!(le.iter().all(|&e| e <= x));
            prop_assert!(gt.iter().all(|&e| e > x));
            let (lt, ge) = partition_lt(x, &l);
            prop_assert!(lt.iter().all(|&e| e < x));
            prop_assert!(ge.iter().all(|&e| e >= x));
            let mut a = [le, gt].concat();
            let mut b = [lt, ge].concat();
            let mut want = l.clone();
            a.sort(); b.sort(); want.sort();
            prop_assert_eq!(a, want.clone());
            prop_assert_eq!(b, want);
        }
    }
}
