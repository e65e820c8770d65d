use std::fmt;

use serde::Serialize;

use crate::error::TableError;

/// The defining laws that a Cayley table is checked against.
///
/// `X0` is the derived law `x·0 = x`; it follows from BCK1–BCK5 but is
/// reported on its own because it is the first thing a hand-written table
/// usually gets wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    #[serde(rename = "BCK1")]
    Bck1,
    #[serde(rename = "BCK2")]
    Bck2,
    #[serde(rename = "BCK3")]
    Bck3,
    #[serde(rename = "BCK4")]
    Bck4,
    #[serde(rename = "BCK5")]
    Bck5,
    #[serde(rename = "X0")]
    X0,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Bck1,
        Axiom::Bck2,
        Axiom::Bck3,
        Axiom::Bck4,
        Axiom::Bck5,
        Axiom::X0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Bck1 => "BCK1",
            Axiom::Bck2 => "BCK2",
            Axiom::Bck3 => "BCK3",
            Axiom::Bck4 => "BCK4",
            Axiom::Bck5 => "BCK5",
            Axiom::X0 => "X0",
        }
    }

    /// The law in the `.` notation used by the equation language.
    pub fn statement(self) -> &'static str {
        match self {
            Axiom::Bck1 => "((x . y) . (x . z)) . (z . y) = 0",
            Axiom::Bck2 => "(x . (x . y)) . y = 0",
            Axiom::Bck3 => "x . x = 0",
            Axiom::Bck4 => "0 . x = 0",
            Axiom::Bck5 => "x . y = 0 and y . x = 0 imply x = y",
            Axiom::X0 => "x . 0 = x",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Result of an exhaustive axiom check: one entry per violated law, each
/// carrying the lexicographically first failing tuple.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let witness: Vec<String> = v.witness.iter().map(ToString::to_string).collect();
            write!(f, "{} fails at ({})", v.axiom, witness.join(", "))?;
        }
        Ok(())
    }
}

/// Flattens and shape-checks a row-major table.
pub(crate) fn flatten(order: usize, rows: &[Vec<usize>]) -> Result<Vec<usize>, TableError> {
    if order == 0 || rows.is_empty() {
        return Err(TableError::Empty);
    }
    if rows.len() != order {
        return Err(TableError::NotSquare {
            row: rows.len().min(order),
            len: rows.len(),
            expected: order,
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(TableError::NotSquare {
                row: r,
                len: row.len(),
                expected: order,
            });
        }
        for (c, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(TableError::OutOfRange {
                    row: r,
                    col: c,
                    value,
                    order,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

/// Exhaustively checks BCK1–BCK5 and `x·0 = x` on an `order`×`order` table.
///
/// Every violated law is reported once, with the first failing tuple in
/// lexicographic order.
pub fn check_axioms(order: usize, rows: &[Vec<usize>]) -> Result<AxiomReport, TableError> {
    let flat = flatten(order, rows)?;
    Ok(check_flat(order, &flat))
}

pub(crate) fn check_flat(n: usize, t: &[usize]) -> AxiomReport {
    let at = |x: usize, y: usize| t[x * n + y];
    let mut violations = Vec::new();

    'bck1: for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(at(xy, at(x, z)), at(z, y)) != 0 {
                    violations.push(Violation {
                        axiom: Axiom::Bck1,
                        witness: vec![x, y, z],
                    });
                    break 'bck1;
                }
            }
        }
    }

    if let Some((x, y)) = pairs(n).find(|&(x, y)| at(at(x, at(x, y)), y) != 0) {
        violations.push(Violation {
            axiom: Axiom::Bck2,
            witness: vec![x, y],
        });
    }
    if let Some(x) = (0..n).find(|&x| at(x, x) != 0) {
        violations.push(Violation {
            axiom: Axiom::Bck3,
            witness: vec![x],
        });
    }
    if let Some(x) = (0..n).find(|&x| at(0, x) != 0) {
        violations.push(Violation {
            axiom: Axiom::Bck4,
            witness: vec![x],
        });
    }
    if let Some((x, y)) = pairs(n).find(|&(x, y)| x != y && at(x, y) == 0 && at(y, x) == 0) {
        violations.push(Violation {
            axiom: Axiom::Bck5,
            witness: vec![x, y],
        });
    }
    if let Some(x) = (0..n).find(|&x| at(x, 0) != x) {
        violations.push(Violation {
            axiom: Axiom::X0,
            witness: vec![x],
        });
    }

    AxiomReport { violations }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}
