//! The container-insertion sorting scheme, abstracted over the intermediate
//! structure.
//!
//! A container is anything with an empty value, a single-key insertion, and a
//! conversion to a sorted list. Folding insertion over the input and then
//! converting sorts the input, provided the conversion relates to list
//! insertion the right way. Three correctness conditions calibrate that
//! relationship:
//!
//! * `tl1`: converting the empty container yields the empty list.
//! * `tl2` (universal): conversion commutes with insertion on *every*
//!   container value. This holds for leaf trees but fails for heaps and
//!   search trees on values that violate their shape invariant; the harness
//!   hunts down witnesses.
//! * `tl3` (reachable): conversion commutes with insertion on containers
//!   actually built from lists. This holds for all three containers and is
//!   what the sorting scheme needs.

use crate::hsort;
use crate::msort;
use crate::ordered::insert;
use crate::qsort;
use crate::report::{CheckReport, CheckStatus};
use crate::text::{render_leaf_tree, render_list, render_node_tree};
use crate::trees::{Key, LeafTree, NodeTree};
use std::time::Instant;

/// An intermediate sorting structure: empty value, insertion, conversion.
/// Structural equality comes from `PartialEq`; `render` is the external text
/// form used in witnesses.
pub trait Container {
    type C: Clone + PartialEq;
    const NAME: &'static str;

    fn empty() -> Self::C;
    fn ist(x: Key, c: Self::C) -> Self::C;
    fn to_list(c: &Self::C) -> Vec<Key>;
    fn render(c: &Self::C) -> String;
}

/// Balanced leaf trees flattened through merge.
pub struct LtreeContainer;

impl Container for LtreeContainer {
    type C = LeafTree;
    const NAME: &'static str = "ltree";

    fn empty() -> LeafTree {
        LeafTree::empty()
    }
    fn ist(x: Key, c: LeafTree) -> LeafTree {
        msort::ist_lt(x, c)
    }
    fn to_list(c: &LeafTree) -> Vec<Key> {
        msort::lt2list(c)
    }
    fn render(c: &LeafTree) -> String {
        render_leaf_tree(c)
    }
}

/// Subtree-swapping heaps flattened root-first.
pub struct HeapContainer;

impl Container for HeapContainer {
    type C = NodeTree;
    const NAME: &'static str = "heap";

    fn empty() -> NodeTree {
        NodeTree::Empty
    }
    fn ist(x: Key, c: NodeTree) -> NodeTree {
        hsort::ist_h(x, c)
    }
    fn to_list(c: &NodeTree) -> Vec<Key> {
        hsort::h2list(c)
    }
    fn render(c: &NodeTree) -> String {
        render_node_tree(c)
    }
}

/// Binary search trees flattened in order.
pub struct BstContainer;

impl Container for BstContainer {
    type C = NodeTree;
    const NAME: &'static str = "bst";

    fn empty() -> NodeTree {
        NodeTree::Empty
    }
    fn ist(x: Key, c: NodeTree) -> NodeTree {
        qsort::ist_bst(x, c)
    }
    fn to_list(c: &NodeTree) -> Vec<Key> {
        qsort::bst2list(c)
    }
    fn render(c: &NodeTree) -> String {
        render_node_tree(c)
    }
}

/// Sort by inserting right to left into the empty container, then converting.
pub fn isort_container<K: Container>(l: &[Key]) -> Vec<Key> {
    let mut c = K::empty();
    for &x in l.iter().rev() {
        c = K::ist(x, c);
    }
    K::to_list(&c)
}

/// The accumulator form: insert left to right, then convert. Extensionally
/// equal to `isort_container`; the insertion order differs, the result not.
pub fn isort_container_acc<K: Container>(l: &[Key]) -> Vec<Key> {
    let mut c = K::empty();
    for &x in l {
        c = K::ist(x, c);
    }
    K::to_list(&c)
}

/// Right-to-left build without the final conversion; the intermediate value
/// the scheme rests on.
pub fn build_container<K: Container>(l: &[Key]) -> K::C {
    let mut c = K::empty();
    for &x in l.iter().rev() {
        c = K::ist(x, c);
    }
    c
}

// ---------------------------------------------------------------------------
// Correctness condition checks
// ---------------------------------------------------------------------------

/// `to_list(empty) == []`.
pub fn check_tl1<K: Container>() -> CheckReport {
    let start = Instant::now();
    let got = K::to_list(&K::empty());
    let (status, witness) = if got.is_empty() {
        (CheckStatus::Pass, None)
    } else {
        (
            CheckStatus::Fail,
            Some(format!("to_list(empty) = {}", render_list(&got))),
        )
    };
    CheckReport {
        law_id: format!("tl1:{}", K::NAME),
        status,
        cases_run: 1,
        witness,
        elapsed: start.elapsed(),
    }
}

/// `to_list(ist(x, c)) == insert(x, to_list(c))` for every supplied container
/// value and key. Scanned in the given order, keys outermost, so the first
/// witness is deterministic.
pub fn check_tl2_universal<K: Container>(containers: &[K::C], keys: &[Key]) -> CheckReport {
    let start = Instant::now();
    let mut cases = 0u64;
    for &x in keys {
        for c in containers {
            cases += 1;
            let got = K::to_list(&K::ist(x, c.clone()));
            let want = insert(x, &K::to_list(c));
            if got != want {
                return CheckReport {
                    law_id: format!("tl2-universal:{}", K::NAME),
                    status: CheckStatus::Fail,
                    cases_run: cases,
                    witness: Some(format!("x={} c={}", x, K::render(c))),
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    CheckReport {
        law_id: format!("tl2-universal:{}", K::NAME),
        status: CheckStatus::Pass,
        cases_run: cases,
        witness: None,
        elapsed: start.elapsed(),
    }
}

/// `to_list(ist(x, build(xs))) == insert(x, to_list(build(xs)))` for every
/// supplied list and key: the universal condition restricted to reachable
/// containers.
pub fn check_tl3_reachable<K: Container>(lists: &[Vec<Key>], keys: &[Key]) -> CheckReport {
    let start = Instant::now();
    let mut cases = 0u64;
    for xs in lists {
        let built = build_container::<K>(xs);
        let flat = K::to_list(&built);
        for &x in keys {
            cases += 1;
            let got = K::to_list(&K::ist(x, built.clone()));
            let want = insert(x, &flat);
            if got != want {
                return CheckReport {
                    law_id: format!("tl3-reachable:{}", K::NAME),
                    status: CheckStatus::Fail,
                    cases_run: cases,
                    witness: Some(format!("x={} xs={}", x, render_list(xs))),
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    CheckReport {
        law_id: format!("tl3-reachable:{}", K::NAME),
        status: CheckStatus::Pass,
        cases_run: cases,
        witness: None,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::isort;
    use proptest::prelude::*;

    #[test]
    fn scheme_examples() {
        assert_eq!(isort_container::<LtreeContainer>(&[2, 1]), vec![1, 2]);
        assert_eq!(isort_container::<HeapContainer>(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(isort_container_acc::<BstContainer>(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(isort_container::<LtreeContainer>(&[]), Vec::<Key>::new());
    }

    #[test]
    fn tl1_holds_for_all_three() {
        assert_eq!(check_tl1::<LtreeContainer>().status, CheckStatus::Pass);
        assert_eq!(check_tl1::<HeapContainer>().status, CheckStatus::Pass);
        assert_eq!(check_tl1::<BstContainer>().status, CheckStatus::Pass);
    }

    #[test]
    fn tl2_fails_on_a_shape_violating_heap() {
        // Node(2, Node(1), .) is not a heap; insertion then flattening sorts
        // more than list insertion does.
        let bad = NodeTree::node(2, NodeTree::singleton(1), NodeTree::Empty);
        let report = check_tl2_universal::<HeapContainer>(&[bad], &[0]);
        assert_eq!(report.status, CheckStatus::Fail);
        assert_eq!(report.witness.as_deref(), Some("x=0 c=(2 (1 . .) .)"));
    }

    #[test]
    fn tl2_passes_on_arbitrary_leaf_trees() {
        // Including shape-violating ones with empty payloads inside branches.
        let weird = LeafTree::branch(LeafTree::empty(), LeafTree::leaf(2));
        let report = check_tl2_universal::<LtreeContainer>(&[weird], &[0, 1, 2, 3]);
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.cases_run, 4);
    }

    proptest! {
        #[test]
        fn both_scheme_forms_sort(l in proptest::collection::vec(any::<Key>(), 0..80)) {
            let want = isort(&l);
            prop_assert_eq!(isort_container::<LtreeContainer>(&l), want.clone());
            prop_assert_eq!(isort_container_acc::<LtreeContainer>(&l), want.clone());
            prop_assert_eq!(isort_container::<HeapContainer>(&l), want.clone());
            prop_assert_eq!(isort_container_acc::<HeapContainer>(&l), want.clone());
            prop_assert_eq!(isort_container::<BstContainer>(&l), want.clone());
            prop_assert_eq!(isort_container_acc::<BstContainer>(&l), want);
        }
    }
}
