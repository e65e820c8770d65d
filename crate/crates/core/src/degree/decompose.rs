use serde::Serialize;

use crate::algebra::BckAlgebra;
use crate::constructions::{chain, direct_product};
use crate::error::{Error, Result};

/// A factorization of an algebra as a product of chains `C_{l_1} × … × C_{l_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    /// Sorted ascending; empty for the one-element algebra.
    pub chain_lengths: Vec<usize>,
}

impl ChainDecomposition {
    pub fn product(&self) -> BckAlgebra {
        product_of_chains(&self.chain_lengths)
    }
}

fn product_of_chains(lengths: &[usize]) -> BckAlgebra {
    lengths.iter().fold(BckAlgebra::trivial(), |acc, &l| {
        direct_product(&acc, &chain(l).expect("chain lengths are at least 2"))
    })
}

/// Multisets of factors `≥ 2` with product `n`, each non-increasing, in
/// descending lexicographic order (`[n]` first).
fn factorizations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for f in (2..=max.min(rest)).rev() {
            if rest.is_multiple_of(f) {
                prefix.push(f);
                go(rest / f, f, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Finds chain lengths whose product of chains is isomorphic to `a`.
///
/// Fails with [`Error::NotCommutative`] on non-commutative input and with
/// [`Error::NoChainDecomposition`] when no factorization matches. The second
/// case happens exactly for commutative algebras without a greatest
/// element (e.g. `2 ⊔ 2`): every product of chains is bounded.
pub fn decompose_commutative(a: &BckAlgebra) -> Result<ChainDecomposition> {
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    for lengths in factorizations(a.order()) {
        if product_of_chains(&lengths).is_isomorphic(a) {
            let mut chain_lengths = lengths;
            chain_lengths.sort_unstable();
            return Ok(ChainDecomposition { chain_lengths });
        }
    }
    Err(Error::NoChainDecomposition {
        order: a.order(),
        bounded: a.bound().is_some(),
    })
}
