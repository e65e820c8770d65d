//! Finite BCK-algebras given by their Cayley tables.
//!
//! Element `0` of every table is the constant `0` of the algebra. Everything
//! else (the order, the bound, the derived meet/negation/join) is computed
//! from the table.

mod axioms;
mod iso;
pub mod text;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use axioms::{check_axioms, Axiom, AxiomReport, Violation};

/// Index of a carrier element. `0` is always the constant `0`.
pub type Element = usize;

/// A validated, immutable finite BCK-algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BckAlgebra {
    order: usize,
    table: Vec<Element>,
    bound: Option<Element>,
}

/// The structural property flags of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub bound: Option<Element>,
    pub linear: bool,
    pub commutative: bool,
    pub positive_implicative: bool,
    pub implicative: bool,
    pub atoms: Vec<Element>,
}

impl BckAlgebra {
    /// Validates `rows` against the axioms and detects the greatest element.
    pub fn from_table(order: usize, rows: &[Vec<Element>]) -> Result<Self> {
        let flat = axioms::flatten(order, rows)?;
        Self::from_flat(order, flat)
    }

    /// Same as [`from_table`](Self::from_table) for a row-major table.
    pub fn from_flat(order: usize, table: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(crate::error::TableError::Empty.into());
        }
        if table.len() != order * order {
            return Err(crate::error::TableError::NotSquare {
                row: 0,
                len: table.len(),
                expected: order * order,
            }
            .into());
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(crate::error::TableError::OutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            }
            .into());
        }
        let report = axioms::check_flat(order, &table);
        if !report.is_valid() {
            return Err(Error::Axioms(report));
        }
        Ok(Self::new_unchecked(order, table))
    }

    /// Builds an algebra from a table already known to satisfy the axioms.
    pub(crate) fn new_unchecked(order: usize, table: Vec<Element>) -> Self {
        let bound = (0..order).find(|&m| (0..order).all(|x| table[x * order + m] == 0));
        BckAlgebra { order, table, bound }
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        Self::new_unchecked(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Row-major table, `table()[x * order + y] = x·y`.
    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn contains(&self, x: Element) -> bool {
        x < self.order
    }

    pub fn check_element(&self, x: Element) -> Result<Element> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    /// `x·y`.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    /// The BCK-order: `x ≤ y` iff `x·y = 0`.
    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.op(x, y) == 0
    }

    /// `x ∧ y := y·(y·x)`.
    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.op(y, self.op(y, x))
    }

    /// The greatest element, if there is one.
    pub fn bound(&self) -> Option<Element> {
        self.bound
    }

    pub fn is_bounded(&self) -> Option<Element> {
        self.bound
    }

    fn one(&self) -> Result<Element> {
        self.bound.ok_or(Error::Unbounded)
    }

    /// `¬x := 1·x`.
    pub fn neg(&self, x: Element) -> Result<Element> {
        Ok(self.op(self.one()?, x))
    }

    /// `x ∨ y := ¬(¬x ∧ ¬y)`, evaluated literally on any bounded algebra.
    ///
    /// Only on commutative algebras is this the lattice join.
    pub fn join(&self, x: Element, y: Element) -> Result<Element> {
        let one = self.one()?;
        let nx = self.op(one, x);
        let ny = self.op(one, y);
        Ok(self.op(one, self.meet(nx, ny)))
    }

    fn all_pairs(&self, mut pred: impl FnMut(Element, Element) -> bool) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| pred(x, y)))
    }

    pub fn is_linear(&self) -> bool {
        self.all_pairs(|x, y| self.leq(x, y) || self.leq(y, x))
    }

    /// `x ∧ y = y ∧ x` for all pairs.
    pub fn is_commutative(&self) -> bool {
        self.all_pairs(|x, y| self.meet(x, y) == self.meet(y, x))
    }

    /// `x·y = (x·y)·y` for all pairs.
    pub fn is_positive_implicative(&self) -> bool {
        self.all_pairs(|x, y| {
            let xy = self.op(x, y);
            xy == self.op(xy, y)
        })
    }

    /// `x·(y·x) = x` for all pairs.
    pub fn is_implicative(&self) -> bool {
        self.all_pairs(|x, y| self.op(x, self.op(y, x)) == x)
    }

    /// Minimal non-zero elements, in index order.
    pub fn atoms(&self) -> Vec<Element> {
        (1..self.order)
            .filter(|&a| (1..self.order).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }

    /// A pair `(x, y)` with `x ∧ y ≠ y ∧ x`, first in lexicographic order.
    pub fn non_commuting_pair(&self) -> Option<(Element, Element)> {
        let n = self.order;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.meet(x, y) != self.meet(y, x))
    }

    pub fn properties(&self) -> Properties {
        Properties {
            bound: self.bound,
            linear: self.is_linear(),
            commutative: self.is_commutative(),
            positive_implicative: self.is_positive_implicative(),
            implicative: self.is_implicative(),
            atoms: self.atoms(),
        }
    }
}

impl fmt::Debug for BckAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BckAlgebra")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .field("bound", &self.bound)
            .finish()
    }
}
