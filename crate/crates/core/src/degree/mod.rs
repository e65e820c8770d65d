//! Exact degrees of satisfiability.
//!
//! `ds(A, φ)` is the number of variable assignments in `A^k` satisfying
//! `φ`, divided by `|A|^k`. Counts are exact integers and a [`Degree`]
//! keeps both the raw count and the raw total.

mod decompose;
mod gap;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::algebra::{BckAlgebra, Element};
use crate::constructions::direct_product;
use crate::error::{Error, Result};
use crate::term::{Builtin, CompiledEquation, Equation};

pub use decompose::{decompose_commutative, ChainDecomposition};
pub use gap::{chain_degrees, gap_evidence, GapEvidence};

/// An exact probability `count / total` with `0 ≤ count ≤ total`.
///
/// Equality and ordering compare values, so `2/4 == 1/2`; the raw
/// `count` and `total` stay available for reporting.
#[derive(Debug, Clone, Copy)]
pub struct Degree {
    count: u64,
    total: u64,
}

impl Degree {
    /// Panics if `total == 0` or `count > total`.
    pub fn new(count: u64, total: u64) -> Degree {
        assert!(total > 0, "degree with zero total");
        assert!(count <= total, "degree {count}/{total} exceeds 1");
        Degree { count, total }
    }

    pub fn one() -> Degree {
        Degree::new(1, 1)
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_one(&self) -> bool {
        self.count == self.total
    }

    /// Numerator and denominator in lowest terms.
    pub fn reduced(&self) -> (u64, u64) {
        let g = self.count.gcd(&self.total);
        (self.count / g, self.total / g)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Degree {
        Degree::new(self.total - self.count, self.total)
    }

    /// Exact product, keeping raw counts; `None` on overflow.
    pub fn checked_mul(&self, other: &Degree) -> Option<Degree> {
        Some(Degree::new(
            self.count.checked_mul(other.count)?,
            self.total.checked_mul(other.total)?,
        ))
    }

    pub fn as_f64(&self) -> f64 {
        self.count as f64 / self.total as f64
    }

    fn cross(&self, other: &Degree) -> (u128, u128) {
        (
            self.count as u128 * other.total as u128,
            other.count as u128 * self.total as u128,
        )
    }
}

impl PartialEq for Degree {
    fn eq(&self, other: &Self) -> bool {
        let (l, r) = self.cross(other);
        l == r
    }
}

impl Eq for Degree {}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        let (l, r) = self.cross(other);
        l.cmp(&r)
    }
}

impl Hash for Degree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.reduced().hash(state);
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.reduced();
        write!(f, "{p}/{q}")
    }
}

impl FromStr for Degree {
    type Err = Error;

    /// Parses `p/q` (or a bare `0`/`1`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("`{s}` is not a fraction in [0, 1]"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        if q == 0 || p > q {
            return Err(bad());
        }
        Ok(Degree::new(p, q))
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Degree", 3)?;
        st.serialize_field("count", &self.count)?;
        st.serialize_field("total", &self.total)?;
        st.serialize_field("reduced", &self.to_string())?;
        st.end()
    }
}

fn tuple_total(order: usize, arity: usize) -> Result<u64> {
    u32::try_from(arity)
        .ok()
        .and_then(|k| (order as u64).checked_pow(k))
        .ok_or(Error::TupleSpaceTooLarge { order, arity })
}

/// Degree of satisfiability of `eq` in `a`, by exhaustive enumeration.
pub fn ds(a: &BckAlgebra, eq: &Equation) -> Result<Degree> {
    ds_with_jobs(a, eq, 1)
}

/// [`ds`] with the assignment space split across `jobs` threads.
///
/// Tuples are numbered row-major (first variable most significant) and each
/// worker counts one contiguous block, so the result does not depend on
/// `jobs`.
pub fn ds_with_jobs(a: &BckAlgebra, eq: &Equation, jobs: usize) -> Result<Degree> {
    let compiled = CompiledEquation::new(eq, a)?;
    let total = tuple_total(a.order(), eq.arity())?;
    let jobs = (jobs.max(1) as u64).min(total) as usize;
    let count = if jobs <= 1 {
        count_range(&compiled, a.order(), 0, total)
    } else {
        let chunk = total.div_ceil(jobs as u64);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|j| {
                    let compiled = &compiled;
                    let start = (j * chunk).min(total);
                    let end = ((j + 1) * chunk).min(total);
                    scope.spawn(move || count_range(compiled, a.order(), start, end))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
        })
    };
    Ok(Degree::new(count, total))
}

fn count_range(eq: &CompiledEquation<'_>, order: usize, start: u64, end: u64) -> u64 {
    if start >= end {
        return 0;
    }
    let k = eq.arity();
    let mut digits = vec![0 as Element; k];
    let mut rest = start;
    for d in digits.iter_mut().rev() {
        *d = (rest % order as u64) as Element;
        rest /= order as u64;
    }
    let mut stack = Vec::with_capacity(16);
    let mut count = 0;
    for _ in start..end {
        if eq.holds_at(&digits, &mut stack) {
            count += 1;
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < order {
                break;
            }
            *d = 0;
        }
    }
    count
}

/// The five named degree functionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeKind {
    Emd,
    Dnd,
    Cd,
    Pid,
    Id,
}

impl DegreeKind {
    pub const ALL: [DegreeKind; 5] = [
        DegreeKind::Emd,
        DegreeKind::Dnd,
        DegreeKind::Cd,
        DegreeKind::Pid,
        DegreeKind::Id,
    ];

    pub fn builtin(self) -> Builtin {
        match self {
            DegreeKind::Emd => Builtin::EM,
            DegreeKind::Dnd => Builtin::DN,
            DegreeKind::Cd => Builtin::T,
            DegreeKind::Pid => Builtin::E1,
            DegreeKind::Id => Builtin::I,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DegreeKind::Emd => "emd",
            DegreeKind::Dnd => "dnd",
            DegreeKind::Cd => "cd",
            DegreeKind::Pid => "pid",
            DegreeKind::Id => "id",
        }
    }

    /// Whether the degree is only defined on bounded algebras.
    pub fn needs_bound(self) -> bool {
        matches!(self, DegreeKind::Emd | DegreeKind::Dnd)
    }
}

impl fmt::Display for DegreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DegreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DegreeKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown degree kind `{s}` (emd, dnd, cd, pid, id)")))
    }
}

/// A named degree together with whether `a` lies outside the class the
/// functional is usually studied on. Only `emd` carries that flag: it is
/// meant for bounded commutative algebras but is computed literally on any
/// bounded one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KindDegree {
    pub kind: DegreeKind,
    pub degree: Degree,
    pub outside_hypothesis: bool,
}

pub fn degree_of(a: &BckAlgebra, kind: DegreeKind) -> Result<KindDegree> {
    let degree = ds(a, &kind.builtin().equation())?;
    Ok(KindDegree {
        kind,
        degree,
        outside_hypothesis: kind == DegreeKind::Emd && !a.is_commutative(),
    })
}

/// Excluded-middle degree; fails on unbounded algebras.
pub fn emd(a: &BckAlgebra) -> Result<KindDegree> {
    degree_of(a, DegreeKind::Emd)
}

/// Double-negation degree; fails on unbounded algebras.
pub fn dnd(a: &BckAlgebra) -> Result<Degree> {
    Ok(degree_of(a, DegreeKind::Dnd)?.degree)
}

fn always_defined(a: &BckAlgebra, kind: DegreeKind) -> Degree {
    degree_of(a, kind)
        .expect("two-variable equations without 1 are defined on every algebra")
        .degree
}

/// Commuting degree.
pub fn cd(a: &BckAlgebra) -> Degree {
    always_defined(a, DegreeKind::Cd)
}

/// Positive implicative degree.
pub fn pid(a: &BckAlgebra) -> Degree {
    always_defined(a, DegreeKind::Pid)
}

/// Implicative degree.
pub fn id(a: &BckAlgebra) -> Degree {
    always_defined(a, DegreeKind::Id)
}

/// All five degrees; `emd` and `dnd` are absent on unbounded algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub emd: Option<Degree>,
    pub emd_outside_hypothesis: bool,
    pub dnd: Option<Degree>,
    pub cd: Degree,
    pub pid: Degree,
    pub id: Degree,
}

impl DegreeProfile {
    pub fn of(a: &BckAlgebra) -> DegreeProfile {
        let emd = emd(a).ok();
        DegreeProfile {
            emd: emd.map(|e| e.degree),
            emd_outside_hypothesis: emd.is_some_and(|e| e.outside_hypothesis),
            dnd: dnd(a).ok(),
            cd: cd(a),
            pid: pid(a),
            id: id(a),
        }
    }

    pub fn get(&self, kind: DegreeKind) -> Option<Degree> {
        match kind {
            DegreeKind::Emd => self.emd,
            DegreeKind::Dnd => self.dnd,
            DegreeKind::Cd => Some(self.cd),
            DegreeKind::Pid => Some(self.pid),
            DegreeKind::Id => Some(self.id),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiplicativeCheck {
    pub left: Degree,
    pub right: Degree,
    pub product: Degree,
    pub holds: bool,
}

/// Compares `ds(A×B, eq)` with `ds(A, eq)·ds(B, eq)`.
pub fn check_multiplicative(a: &BckAlgebra, b: &BckAlgebra, eq: &Equation) -> Result<MultiplicativeCheck> {
    let left = ds(a, eq)?;
    let right = ds(b, eq)?;
    let product = ds(&direct_product(a, b), eq)?;
    let expected = left.checked_mul(&right).ok_or(Error::TupleSpaceTooLarge {
        order: a.order() * b.order(),
        arity: eq.arity(),
    })?;
    Ok(MultiplicativeCheck {
        left,
        right,
        product,
        holds: product == expected,
    })
}
