//! Sorted lists of keys and the merge operator they form a monoid under.
//!
//! `merge` is the workhorse: associative, with the empty list as unit, and
//! commutative up to element values. Every sorting pipeline in this crate is
//! checked against `isort`, the insertion sort defined directly on top of
//! `insert`.
//!
//! `merge` is total on arbitrary inputs (it follows its clauses and produces
//! some interleaving); its sortedness guarantee only holds when both operands
//! are sorted. The harness deliberately feeds it unsorted operands when
//! flattening trees that violate their shape invariant, so no precondition is
//! asserted here; laws that rely on sortedness check it explicitly.

use crate::trees::Key;

/// Non-decreasing order check.
pub fn is_sorted(l: &[Key]) -> bool {
    l.windows(2).all(|w| w[0] <= w[1])
}

/// Merge two sorted lists into one sorted list. On equal heads the element of
/// `a` is taken first, which makes the operator left-biased but value-level
/// commutative.
pub fn merge(a: &[Key], b: &[Key]) -> Vec<Key> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Index where merging the singleton `[x]` into `l` would place `x`: the
/// first position holding an element `>= x`, or the end. A linear scan, so
/// the answer matches the merge clauses on arbitrary (even unsorted) input.
fn insert_position(x: Key, l: &[Key]) -> usize {
    l.iter().position(|&e| e >= x).unwrap_or(l.len())
}

/// Insert `x` into `l` where a singleton merge would put it: before the
/// first element `>= x`. On sorted input the result is sorted with `x`
/// ahead of its equals; on any input it agrees with `merge(&[x], l)`
/// exactly (that equation is a checked law).
pub fn insert(x: Key, l: &[Key]) -> Vec<Key> {
    let at = insert_position(x, l);
    let mut out = Vec::with_capacity(l.len() + 1);
    out.extend_from_slice(&l[..at]);
    out.push(x);
    out.extend_from_slice(&l[at..]);
    out
}

/// Insertion sort: fold `insert` over the list from the right. This is the
/// specification every other sort is compared against. Quadratic on purpose;
/// the accumulator is reused in place but the comparisons are those of
/// repeated `insert`.
pub fn isort(l: &[Key]) -> Vec<Key> {
    let mut acc: Vec<Key> = Vec::with_capacity(l.len());
    for &x in l.iter().rev() {
        let at = insert_position(x, &acc);
        acc.insert(at, x);
    }
    acc
}
