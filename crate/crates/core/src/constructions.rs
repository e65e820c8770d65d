//! Named algebras, the three ways of building new algebras from old ones
//! (BCK-union, Iséki extension, direct product), and the witness families.
//!
//! Every constructor re-validates its output with the full axiom check.
//! Index layouts are fixed so that written tables are byte-stable:
//!
//! * union `A ⊔ B`: elements of `A` keep their indices, non-zero `b ∈ B`
//!   becomes `b + |A| - 1`;
//! * Iséki extension `A ⊕ ⊤`: `⊤` is the new last index `|A|`;
//! * product `A × B`: `(a, b)` is `a·|B| + b`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{BckAlgebra, Element};
use crate::error::{Error, Result};

fn validated(order: usize, table: Vec<Element>) -> BckAlgebra {
    match BckAlgebra::from_flat(order, table) {
        Ok(a) => a,
        Err(e) => panic!("construction produced an invalid table: {e}"),
    }
}

fn from_fn(order: usize, f: impl Fn(Element, Element) -> Element) -> Vec<Element> {
    (0..order)
        .flat_map(|x| (0..order).map(move |y| (x, y)))
        .map(|(x, y)| f(x, y))
        .collect()
}

/// The two-element algebra `2 = C_2`.
pub fn two() -> BckAlgebra {
    validated(2, vec![0, 0, 1, 0])
}

/// The three-element chain that is positive implicative but not commutative.
pub fn pi() -> BckAlgebra {
    validated(3, vec![0, 0, 0, 1, 0, 0, 2, 2, 0])
}

/// The three-element chain that is commutative but not positive implicative (`C_3`).
pub fn tc() -> BckAlgebra {
    validated(3, vec![0, 0, 0, 1, 0, 0, 2, 1, 0])
}

/// `C_n`: carrier `0..n` with `x·y = max(x - y, 0)`.
pub fn chain(n: usize) -> Result<BckAlgebra> {
    check_range("C", n, 2)?;
    Ok(validated(n, from_fn(n, |x, y| x.saturating_sub(y))))
}

/// BCK-union: the carriers are glued at 0 and `x·y = x` across components.
pub fn bck_union(a: &BckAlgebra, b: &BckAlgebra) -> BckAlgebra {
    let na = a.order();
    let order = na + b.order() - 1;
    // component and local index of a union element
    let split = |u: Element| -> (bool, Element) {
        if u < na {
            (false, u)
        } else {
            (true, u - na + 1)
        }
    };
    let embed_b = |v: Element| if v == 0 { 0 } else { v + na - 1 };
    let table = from_fn(order, |x, y| {
        if x == 0 || y == 0 {
            return if y == 0 { x } else { 0 };
        }
        match (split(x), split(y)) {
            ((false, lx), (false, ly)) => a.op(lx, ly),
            ((true, lx), (true, ly)) => embed_b(b.op(lx, ly)),
            _ => x,
        }
    });
    validated(order, table)
}

/// Iséki's extension `A ⊕ ⊤`: a new top with `x·⊤ = 0` and `⊤·x = ⊤` for `x ∈ A`.
pub fn iseki_extension(a: &BckAlgebra) -> BckAlgebra {
    let top = a.order();
    let table = from_fn(top + 1, |x, y| match (x == top, y == top) {
        (false, false) => a.op(x, y),
        (_, true) => 0,
        (true, false) => top,
    });
    validated(top + 1, table)
}

/// Componentwise product, `(a, b) ↦ a·|B| + b`.
pub fn direct_product(a: &BckAlgebra, b: &BckAlgebra) -> BckAlgebra {
    let nb = b.order();
    let order = a.order() * nb;
    let table = from_fn(order, |x, y| a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb));
    validated(order, table)
}

/// `D_n`, the one-element extension of `C_n` by a top `n` (order `n + 1`).
///
/// `n·0 = n`, `n·k = n - k - 1` for `1 ≤ k ≤ n - 2`, `n·(n-1) = 1`, and
/// `k·n = 0` for every `k`.
pub fn d_algebra(n: usize) -> Result<BckAlgebra> {
    check_range("D", n, 3)?;
    let table = from_fn(n + 1, |x, y| {
        if y == n {
            0
        } else if x < n {
            x.saturating_sub(y)
        } else if y == 0 {
            n
        } else if y == n - 1 {
            1
        } else {
            n - y - 1
        }
    });
    Ok(validated(n + 1, table))
}

/// `Q_n`: a unique atom `a` (index 1) below pairwise incomparable
/// `b_1 … b_{n-2}` (indices 2..n).
pub fn q_algebra(n: usize) -> Result<BckAlgebra> {
    check_range("Q", n, 3)?;
    const A: Element = 1;
    let leq = |x: Element, y: Element| x == 0 || x == y || (x == A && y != 0);
    let table = from_fn(n, |x, y| {
        if leq(x, y) {
            0
        } else if y == 0 {
            x
        } else {
            // x is some b_i and y is a or a different b_j
            A
        }
    });
    Ok(validated(n, table))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Chains `C_n`.
    C,
    /// `D_n`, order `n + 1`.
    D,
    /// `Q_n`.
    Q,
    /// `B_3 = PI`, `B_n = B_{n-1} ⊔ 2`.
    B,
    /// `M_3 = PI`, `M_n = M_{n-1} ⊕ ⊤`.
    M,
    /// `P_3 = TC`, `P_n = P_{n-1} ⊔ 2`.
    P,
    /// `P'_3 = TC`, `P'_n = P'_{n-1} ⊕ ⊤`.
    PPrime,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::C,
        Family::D,
        Family::Q,
        Family::B,
        Family::M,
        Family::P,
        Family::PPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::D => "D",
            Family::Q => "Q",
            Family::B => "B",
            Family::M => "M",
            Family::P => "P",
            Family::PPrime => "Pprime",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::C => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "Q" => Ok(Family::Q),
            "B" => Ok(Family::B),
            "M" => Ok(Family::M),
            "P" => Ok(Family::P),
            "Pprime" | "P'" | "PPrime" => Ok(Family::PPrime),
            other => Err(Error::InvalidArgument(format!(
                "unknown family `{other}` (expected one of C, D, Q, B, M, P, Pprime)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub name: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(name: Family, n: usize) -> Self {
        FamilySpec { name, n }
    }
}

fn check_range(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::FamilyRange { family, n, min })
    } else {
        Ok(())
    }
}

/// Builds a member of one of the named families, following the recursive
/// definitions step by step from the base case.
pub fn family(spec: FamilySpec) -> Result<BckAlgebra> {
    let FamilySpec { name, n } = spec;
    check_range(name.name(), n, name.min_n())?;
    let grow = |base: BckAlgebra, step: &dyn Fn(&BckAlgebra) -> BckAlgebra| (3..n).fold(base, |acc, _| step(&acc));
    let two = two();
    let add_two = |a: &BckAlgebra| bck_union(a, &two);
    Ok(match name {
        Family::C => chain(n)?,
        Family::D => d_algebra(n)?,
        Family::Q => q_algebra(n)?,
        Family::B => grow(pi(), &add_two),
        Family::M => grow(pi(), &iseki_extension),
        Family::P => grow(tc(), &add_two),
        Family::PPrime => grow(tc(), &iseki_extension),
    })
}
