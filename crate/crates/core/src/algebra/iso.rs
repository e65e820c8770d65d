use itertools::Itertools;

use super::{BckAlgebra, Element};
use crate::error::{Error, Result};

impl BckAlgebra {
    /// Renames elements: `perm[old] = new`. `perm[0]` must be `0`.
    pub fn relabel(&self, perm: &[Element]) -> Result<BckAlgebra> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "length {} for an algebra of order {n}",
                perm.len()
            )));
        }
        if perm[0] != 0 {
            return Err(Error::InvalidPermutation("0 must map to 0".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
            }
        }
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        Ok(BckAlgebra::new_unchecked(n, table))
    }

    /// Lexicographically least row-major table over all relabelings that fix 0.
    pub(crate) fn canonical_flat(&self) -> Vec<Element> {
        let n = self.order;
        if n <= 2 {
            return self.table.clone();
        }
        let mut best: Option<Vec<Element>> = None;
        let mut candidate = vec![0; n * n];
        let mut inverse = vec![0; n];
        for tail in (1..n).permutations(n - 1) {
            // relabeled[i][j] = p(t[q(i)][q(j)]) with q = new -> old, p = q^-1
            let q: Vec<Element> = std::iter::once(0).chain(tail).collect();
            for (new, &old) in q.iter().enumerate() {
                inverse[old] = new;
            }
            let mut decided_smaller = best.is_none();
            let mut abandoned = false;
            'fill: for i in 0..n {
                for j in 0..n {
                    let v = inverse[self.op(q[i], q[j])];
                    let k = i * n + j;
                    candidate[k] = v;
                    if !decided_smaller {
                        let b = best.as_ref().map_or(0, |b| b[k]);
                        if v > b {
                            abandoned = true;
                            break 'fill;
                        }
                        if v < b {
                            decided_smaller = true;
                        }
                    }
                }
            }
            if !abandoned && decided_smaller {
                best = Some(candidate.clone());
            }
        }
        best.unwrap_or_else(|| self.table.clone())
    }

    /// Canonical Cayley table: isomorphic algebras get identical tables.
    pub fn canonical_form(&self) -> Vec<Vec<Element>> {
        self.canonical_flat().chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// The algebra relabeled into its canonical form.
    pub fn canonical(&self) -> BckAlgebra {
        BckAlgebra::new_unchecked(self.order, self.canonical_flat())
    }

    /// Decides isomorphism by a backtracking search for an order-preserving
    /// bijection. Agrees with comparing canonical forms, but does not pay the
    /// `(n-1)!` cost on larger algebras.
    pub fn is_isomorphic(&self, other: &BckAlgebra) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// A map `f` with `f[x·y] = f[x]·f[y]`, if one exists.
    pub fn find_isomorphism(&self, other: &BckAlgebra) -> Option<Vec<Element>> {
        let n = self.order;
        if n != other.order {
            return None;
        }
        let sig_a = signatures(self);
        let sig_b = signatures(other);
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return None;
        }
        const UNSET: usize = usize::MAX;
        let mut forward = vec![UNSET; n];
        let mut backward = vec![UNSET; n];
        forward[0] = 0;
        backward[0] = 0;
        if extend(self, other, &sig_a, &sig_b, 1, &mut forward, &mut backward) {
            Some(forward)
        } else {
            None
        }
    }
}

fn signatures(a: &BckAlgebra) -> Vec<(usize, usize, usize)> {
    a.elements()
        .map(|x| {
            let below = a.elements().filter(|&y| a.leq(y, x)).count();
            let above = a.elements().filter(|&y| a.leq(x, y)).count();
            let fixes = a.elements().filter(|&y| a.op(x, y) == x).count();
            (below, above, fixes)
        })
        .collect()
}

fn extend(
    a: &BckAlgebra,
    b: &BckAlgebra,
    sig_a: &[(usize, usize, usize)],
    sig_b: &[(usize, usize, usize)],
    x: Element,
    forward: &mut [Element],
    backward: &mut [Element],
) -> bool {
    const UNSET: usize = usize::MAX;
    let n = a.order();
    if x == n {
        return true;
    }
    for image in 1..n {
        if backward[image] != UNSET || sig_a[x] != sig_b[image] {
            continue;
        }
        forward[x] = image;
        backward[image] = x;
        if consistent(a, b, x, forward, backward) && extend(a, b, sig_a, sig_b, x + 1, forward, backward) {
            return true;
        }
        forward[x] = UNSET;
        backward[image] = UNSET;
    }
    false
}

/// Checks every product involving the newly mapped `x` and earlier elements.
fn consistent(a: &BckAlgebra, b: &BckAlgebra, x: Element, forward: &[Element], backward: &[Element]) -> bool {
    const UNSET: usize = usize::MAX;
    for u in 0..=x {
        for (l, r) in [(x, u), (u, x)] {
            let pa = a.op(l, r);
            let pb = b.op(forward[l], forward[r]);
            if forward[pa] != UNSET {
                if forward[pa] != pb {
                    return false;
                }
            } else if backward[pb] != UNSET {
                return false;
            }
        }
    }
    true
}
