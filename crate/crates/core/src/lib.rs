//! Sorting algorithms derived from a single insertion-sort specification,
//! together with the machinery that makes the derivations checkable.
//!
//! The idea: insertion sort is `fold insert []`. Swap the list accumulator
//! for an intermediate tree container and the same fold becomes the build
//! phase of a real sorting algorithm; flattening the container finishes the
//! job. Three containers give three classics:
//!
//! * balanced leaf trees flattened by merging: merge sort ([`msort`]),
//! * min-heaps flattened by root extraction: heapsort ([`hsort`]),
//! * binary search trees flattened in order: quicksort ([`qsort`]).
//!
//! Each algorithm exists in several provably equal forms: the container
//! build and flatten ([`generic`]), the same build expressed as an unfold,
//! the fused hylomorphism that never materializes the tree, and a directly
//! recursive version. The [`laws`] catalog checks every claimed equality and
//! invariant over exhaustively enumerated and seeded random corpora
//! ([`corpus`]), reporting replayable witnesses for anything that breaks,
//! including the deliberately recorded failures (flattening does not commute
//! with insertion on arbitrary heap or search trees, only on those
//! satisfying the shape invariants). The [`bench`] module times the
//! variants to validate the growth-rate claims.

#![forbid(unsafe_code)]

pub mod bench;
pub mod corpus;
pub mod generic;
pub mod hsort;
pub mod invariants;
pub mod laws;
pub mod msort;
pub mod ordered;
pub mod qsort;
pub mod report;
pub mod text;
pub mod trees;

pub use report::{CheckReport, CheckStatus};
pub use trees::{Key, LeafTree, NodeTree};
