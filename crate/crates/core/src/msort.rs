//! Merge sort through balanced leaf trees.
//!
//! The intermediate structure is a `LeafTree` built by `ist_lt`, which swaps
//! subtrees on every insertion and thereby keeps the tree balanced by shape
//! alone (no comparisons happen during the build). Flattening with the merge
//! operator at every branch yields the sorted list. The same tree is also
//! reachable by unfolding with the even/odd split `maux`, and fusing that
//! unfold with the flattening fold gives the familiar recursive merge sort.

use crate::ordered::merge;
use crate::trees::{
    fold_leaf_tree, hylo_leaf_tree_with_limit, para_leaf_tree, unfold_leaf_tree_with_limit, Key,
    LeafStep, LeafTree, DEFAULT_DEPTH_LIMIT,
};

/// Insert a key into a leaf tree, swapping subtrees to keep the shape
/// balanced: `Branch l r` becomes `Branch (ist_lt x r) l`.
pub fn ist_lt(x: Key, mut t: LeafTree) -> LeafTree {
    let mut cur = &mut t;
    loop {
        match cur {
            LeafTree::Leaf(None) => {
                *cur = LeafTree::leaf(x);
                break;
            }
            LeafTree::Leaf(Some(y)) => {
                let y = *y;
                *cur = LeafTree::branch(LeafTree::leaf(x), LeafTree::leaf(y));
                break;
            }
            LeafTree::Branch(l, r) => {
                // Swap, then descend into what used to be the right subtree.
                std::mem::swap(l, r);
                cur = l;
            }
        }
    }
    t
}

/// Flatten a leaf tree to a sorted list: merge at branches, payload at leaves.
/// Sorted output needs no shape assumption at all.
pub fn lt2list(t: &LeafTree) -> Vec<Key> {
    fold_leaf_tree(
        |l: Vec<Key>, r: Vec<Key>| merge(&l, &r),
        |p| p.map_or_else(Vec::new, |k| vec![k]),
        t,
    )
}

/// Build the insertion tree for a whole list, inserting right to left.
pub fn build_lt(l: &[Key]) -> LeafTree {
    let mut t = LeafTree::empty();
    for &x in l.iter().rev() {
        t = ist_lt(x, t);
    }
    t
}

/// Split a list into its even-positioned and odd-positioned elements
/// (0-based), each side keeping its original relative order.
pub fn maux(l: &[Key]) -> (Vec<Key>, Vec<Key>) {
    let evens = l.iter().copied().step_by(2).collect();
    let odds = l.iter().copied().skip(1).step_by(2).collect();
    (evens, odds)
}

/// Unfolding step: empty and singleton lists finish as leaves, anything
/// longer splits through `maux`.
pub fn coalg(mut seed: Vec<Key>) -> LeafStep<Vec<Key>> {
    match seed.len() {
        0 => LeafStep::Done(None),
        1 => LeafStep::Done(Some(seed.pop().expect("len checked"))),
        _ => {
            let (left, right) = maux(&seed);
            LeafStep::Split { left, right }
        }
    }
}

/// Build the merge-sort tree top-down by unfolding with `coalg`. Produces the
/// same tree as `build_lt`, which the harness checks structurally.
pub fn unfold_msort(l: &[Key]) -> LeafTree {
    // The seed list shrinks at every split, so depth never exceeds the seed
    // length; the limit below makes divergence unreachable for any input.
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    unfold_leaf_tree_with_limit(coalg, l.to_vec(), limit)
        .expect("msort coalgebra is well-founded")
}

/// Merge sort as a single fused pass: unfold with `coalg`, fold with merge,
/// never materializing the tree.
pub fn msort_hylo(l: &[Key]) -> Vec<Key> {
    let limit = DEFAULT_DEPTH_LIMIT.max(l.len() + 1);
    hylo_leaf_tree_with_limit(
        |a: Vec<Key>, b: Vec<Key>| merge(&a, &b),
        |p| p.map_or_else(Vec::new, |k| vec![k]),
        coalg,
        l.to_vec(),
        limit,
    )
    .expect("msort coalgebra is well-founded")
}

/// Plain recursive merge sort. Recursion depth is logarithmic because `maux`
/// halves the list.
pub fn msort_deforested(l: &[Key]) -> Vec<Key> {
    match l.len() {
        0 => Vec::new(),
        1 => vec![l[0]],
        _ => {
            let (a, b) = maux(l);
            merge(&msort_deforested(&a), &msort_deforested(&b))
        }
    }
}

/// Every branch must have its left subtree exactly as tall as or one taller
/// than its right subtree.
pub fn is_balanced_lt(t: &LeafTree) -> bool {
    // Fold to (height, balanced-so-far) pairs.
    fold_leaf_tree(
        |(hl, bl): (usize, bool), (hr, br): (usize, bool)| {
            (1 + hl.max(hr), bl && br && (hl == hr || hl == hr + 1))
        },
        |_| (0, true),
        t,
    )
    .1
}

/// `ist_lt` restated as a paramorphism: the branch case uses the recursive
/// result on the right and the untouched left subtree.
pub fn ist_lt_para(x: Key, t: &LeafTree) -> LeafTree {
    para_leaf_tree(
        |l, _vl, _r, vr: LeafTree| LeafTree::branch(vr, l.clone()),
        |p| match p {
            None => LeafTree::leaf(x),
            Some(y) => LeafTree::branch(LeafTree::leaf(x), LeafTree::leaf(y)),
        },
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::isort;
    use proptest::prelude::*;

    fn leaf(k: Key) -> LeafTree {
        LeafTree::leaf(k)
    }

    fn br(l: LeafTree, r: LeafTree) -> LeafTree {
        LeafTree::branch(l, r)
    }

    #[test]
    fn ist_lt_base_cases() {
        assert_eq!(ist_lt(5, LeafTree::empty()), leaf(5));
        assert_eq!(ist_lt(1, leaf(2)), br(leaf(1), leaf(2)));
    }

    #[test]
    fn ist_lt_swaps_subtrees() {
        assert_eq!(ist_lt(1, br(leaf(2), leaf(3))), br(br(leaf(1), leaf(3)), leaf(2)));
        assert_eq!(
            ist_lt(5, br(leaf(1), leaf(2))),
            br(br(leaf(5), leaf(2)), leaf(1))
        );
    }

    #[test]
    fn ist_lt_para_matches_direct_form() {
        let trees = [
            LeafTree::empty(),
            leaf(2),
            br(leaf(1), leaf(2)),
            br(br(leaf(0), leaf(3)), leaf(2)),
        ];
        for t in &trees {
            for x in 0..4 {
                assert_eq!(ist_lt_para(x, t), ist_lt(x, t.clone()));
            }
        }
    }

    #[test]
    fn lt2list_flattens_sorted() {
        let t = br(br(leaf(1), leaf(3)), leaf(2));
        assert_eq!(lt2list(&t), vec![1, 2, 3]);
        assert_eq!(lt2list(&LeafTree::empty()), Vec::<Key>::new());
    }

    #[test]
    fn build_matches_hand_trace() {
        // Inserting 3, then 2, then 1 (right to left over [1,2,3]).
        let want = br(br(leaf(1), leaf(3)), leaf(2));
        assert_eq!(build_lt(&[1, 2, 3]), want);
        assert_eq!(build_lt(&[]), LeafTree::empty());
    }

    #[test]
    fn maux_splits_by_position() {
        assert_eq!(maux(&[1, 2, 3]), (vec![1, 3], vec![2]));
        assert_eq!(maux(&[]), (vec![], vec![]));
        assert_eq!(maux(&[7]), (vec![7], vec![]));
    }

    // The positional definition must agree with the recurrence
    //   maux []    = ([], [])
    //   maux (h:t) = (h:b, a)  where (a, b) = maux t
    fn maux_recurrence(l: &[Key]) -> (Vec<Key>, Vec<Key>) {
        match l.split_first() {
            None => (Vec::new(), Vec::new()),
            Some((&h, t)) => {
                let (a, b) = maux_recurrence(t);
                let mut first = vec![h];
                first.extend(b);
                (first, a)
            }
        }
    }

    #[test]
    fn maux_matches_recurrence_exhaustively() {
        let mut stack: Vec<Vec<Key>> = vec![Vec::new()];
        while let Some(l) = stack.pop() {
            assert_eq!(maux(&l), maux_recurrence(&l), "maux mismatch on {l:?}");
            if l.len() < 7 {
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
        let want = br(br(leaf(1), leaf(3)), leaf(2));
        assert_eq!(unfold_msort(&[1, 2, 3]), want);
        assert_eq!(unfold_msort(&[]), LeafTree::empty());
        assert_eq!(unfold_msort(&[4]), leaf(4));
    }

    #[test]
    fn hylo_sorts_like_the_staged_pipeline() {
        assert_eq!(msort_hylo(&[2, 1]), vec![1, 2]);
        assert_eq!(msort_hylo(&[]), Vec::<Key>::new());
        let l = [5, 3, 3, 8, 1];
        assert_eq!(msort_hylo(&l), lt2list(&unfold_msort(&l)));
    }

    #[test]
    fn balance_checker_accepts_builds_and_rejects_right_heavy() {
        assert!(is_balanced_lt(&build_lt(&[3, 1, 4, 1, 5, 9, 2, 6])));
        assert!(is_balanced_lt(&LeafTree::empty()));
        let right_heavy = br(leaf(1), br(leaf(2), leaf(3)));
        assert!(!is_balanced_lt(&right_heavy));
    }

    proptest! {
        #[test]
        fn all_routes_agree_with_isort(l in proptest::collection::vec(any::<Key>(), 0..120)) {
            let want = isort(&l);
            prop_assert_eq!(lt2list(&build_lt(&l)), want.clone());
            prop_assert_eq!(msort_hylo(&l), want.clone());
            prop_assert_eq!(msort_deforested(&l), want);
        }

        #[test]
        fn build_and_unfold_agree_structurally(l in proptest::collection::vec(-4i64..4, 0..60)) {
            prop_assert_eq!(build_lt(&l), unfold_msort(&l));
        }

        #[test]
        fn builds_stay_balanced(l in proptest::collection::vec(any::<Key>(), 0..120)) {
            prop_assert!(is_balanced_lt(&build_lt(&l)));
        }
    }
}
