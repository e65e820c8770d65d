//! Slow reference implementations used as oracles. None of them share code
//! with the library beyond the table type.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bck_core::term::{holds, Assignment};
use bck_core::{BckAlgebra, Degree, Equation};
use itertools::Itertools;

/// All five axioms checked literally on a row-major table.
pub fn is_bck(n: usize, t: &[usize]) -> bool {
    let op = |x: usize, y: usize| t[x * n + y];
    for x in 0..n {
        if op(x, x) != 0 || op(0, x) != 0 {
            return false;
        }
        for y in 0..n {
            if op(op(x, op(x, y)), y) != 0 {
                return false;
            }
            if x != y && op(x, y) == 0 && op(y, x) == 0 {
                return false;
            }
            for z in 0..n {
                if op(op(op(x, y), op(x, z)), op(z, y)) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Least relabelled table over every permutation fixing 0.
pub fn canonical(n: usize, t: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for p in (1..n).permutations(n.saturating_sub(1)) {
        let perm: Vec<usize> = std::iter::once(0).chain(p).collect();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let cand: Vec<usize> = (0..n * n).map(|i| perm[t[inv[i / n] * n + inv[i % n]]]).collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap_or_else(|| t.to_vec())
}

/// Every table with row 0 zero and column 0 the identity, filtered by the
/// axioms and reduced by [`canonical`]. Returns (labelled count, classes).
pub fn brute_force(n: usize) -> (usize, BTreeSet<Vec<usize>>) {
    let cells: Vec<usize> = (1..n).flat_map(|x| (1..n).map(move |y| x * n + y)).collect();
    let mut t = vec![0; n * n];
    for x in 0..n {
        t[x * n] = x;
    }
    let mut labelled = 0;
    let mut classes = BTreeSet::new();
    for values in (0..cells.len()).map(|_| 0..n).multi_cartesian_product() {
        for (&c, &v) in cells.iter().zip(&values) {
            t[c] = v;
        }
        if is_bck(n, &t) {
            labelled += 1;
            classes.insert(canonical(n, &t));
        }
    }
    if cells.is_empty() && is_bck(n, &t) {
        labelled = 1;
        classes.insert(t);
    }
    (labelled, classes)
}

/// `ds` by walking the term tree for every assignment.
pub fn ds_naive(a: &BckAlgebra, eq: &Equation) -> Degree {
    let vars = eq.vars();
    let mut count = 0;
    let mut total = 0;
    for values in (0..vars.len()).map(|_| a.elements()).multi_cartesian_product() {
        let assignment: Assignment = vars.iter().cloned().zip(values).collect();
        total += 1;
        if holds(a, eq, &assignment).unwrap() {
            count += 1;
        }
    }
    if vars.is_empty() {
        total = 1;
        count = holds(a, eq, &Assignment::new()).unwrap() as u64;
    }
    Degree::new(count, total)
}

pub fn frac(p: usize, q: usize) -> Degree {
    Degree::new(p as u64, q as u64)
}
