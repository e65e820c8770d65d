//! Spectra of degree values over a catalog, and the universal-bound audit.

use std::collections::BTreeMap;

use serde::Serialize;

use super::Catalog;
use crate::algebra::{BckAlgebra, Element};
use crate::degree::{decompose_commutative, Degree, DegreeKind};
use crate::error::{Error, Result};

fn deg(count: usize, total: usize) -> Degree {
    Degree::new(count as u64, total as u64)
}

/// Candidate values of `kind` for algebras of order `n`, ascending.
///
/// `dnd` and `emd`: `k/n` for `2 ≤ k < n`. `cd`: `(3n-2)/n²` up to
/// `(n²-2)/n²` in steps of `2/n²`. `pid` and `id`: every `k/n²` from
/// `(4n-4)/n²` below 1. Every set ends with `1`; below order 3 it is `{1}`.
pub fn possible_degrees(n: usize, kind: DegreeKind) -> Vec<Degree> {
    let mut out = Vec::new();
    if n >= 3 {
        let sq = n * n;
        match kind {
            DegreeKind::Dnd => out.extend((2..n).map(|k| deg(k, n))),
            DegreeKind::Cd => out.extend((3 * n - 2..=sq - 2).step_by(2).map(|k| deg(k, sq))),
            DegreeKind::Pid | DegreeKind::Id => out.extend((4 * n - 4..sq).map(|k| deg(k, sq))),
            DegreeKind::Emd => out.extend((2..n).map(|k| deg(k, n))),
        }
    }
    out.push(Degree::one());
    out
}

/// Which catalog entries a spectrum looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumFilter {
    #[default]
    All,
    Commutative,
    NonCommutative,
}

impl SpectrumFilter {
    fn admits(self, a: &BckAlgebra) -> bool {
        match self {
            SpectrumFilter::All => true,
            SpectrumFilter::Commutative => a.is_commutative(),
            SpectrumFilter::NonCommutative => !a.is_commutative(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: Degree,
    pub table: Vec<Vec<Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub order: usize,
    pub kind: DegreeKind,
    pub filter: SpectrumFilter,
    /// Number of catalog entries the degree was computed on.
    pub considered: usize,
    pub possible: Vec<Degree>,
    pub achieved: Vec<Degree>,
    pub missing: Vec<Degree>,
    /// Achieved values outside `possible`.
    pub unexpected: Vec<Degree>,
    /// First catalog entry attaining each achieved value.
    pub witnesses: Vec<Witness>,
}

/// Degree values of `kind` attained in `catalog`. Bounded-only kinds skip
/// unbounded entries.
pub fn spectrum(catalog: &Catalog, kind: DegreeKind, filter: SpectrumFilter) -> SpectrumReport {
    let mut seen: BTreeMap<Degree, &BckAlgebra> = BTreeMap::new();
    let mut considered = 0;
    for entry in &catalog.entries {
        if !filter.admits(&entry.algebra) {
            continue;
        }
        let Some(d) = entry.degrees.get(kind) else {
            continue;
        };
        considered += 1;
        seen.entry(d).or_insert(&entry.algebra);
    }
    let possible = possible_degrees(catalog.order, kind);
    let achieved: Vec<Degree> = seen.keys().copied().collect();
    SpectrumReport {
        order: catalog.order,
        kind,
        filter,
        considered,
        missing: possible.iter().filter(|d| !seen.contains_key(d)).copied().collect(),
        unexpected: achieved.iter().filter(|d| !possible.contains(d)).copied().collect(),
        witnesses: seen
            .iter()
            .map(|(d, a)| Witness {
                degree: *d,
                table: a.rows(),
            })
            .collect(),
        possible,
        achieved,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub order: usize,
    pub dnd: SpectrumReport,
    pub cd: SpectrumReport,
    pub passed: bool,
}

/// Every candidate `dnd` and `cd` value is attained at this order.
pub fn verify_conjectures(catalog: &Catalog) -> Result<ConjectureReport> {
    if catalog.order < 3 {
        return Err(Error::InvalidArgument(format!(
            "conjecture checks need order >= 3, got {}",
            catalog.order
        )));
    }
    let dnd = spectrum(catalog, DegreeKind::Dnd, SpectrumFilter::All);
    let cd = spectrum(catalog, DegreeKind::Cd, SpectrumFilter::All);
    Ok(ConjectureReport {
        order: catalog.order,
        passed: dnd.missing.is_empty() && cd.missing.is_empty(),
        dnd,
        cd,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditCheck {
    pub name: &'static str,
    pub statement: String,
    /// Entries the hypothesis applied to.
    pub applicable: usize,
    pub failures: usize,
}

impl AuditCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: String,
    pub table: Vec<Vec<Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub order: usize,
    pub checked: usize,
    pub checks: Vec<AuditCheck>,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
}

impl AuditReport {
    pub fn check(&self, name: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Auditor {
    checks: Vec<AuditCheck>,
    counterexamples: Vec<Counterexample>,
}

impl Auditor {
    fn record(
        &mut self,
        i: usize,
        a: &BckAlgebra,
        applies: bool,
        ok: impl FnOnce() -> std::result::Result<(), String>,
    ) {
        if !applies {
            return;
        }
        let check = &mut self.checks[i];
        check.applicable += 1;
        if let Err(detail) = ok() {
            check.failures += 1;
            self.counterexamples.push(Counterexample {
                check: check.name,
                detail,
                table: a.rows(),
            });
        }
    }
}

fn within(name: &str, d: Degree, lo: Degree, hi: Degree) -> std::result::Result<(), String> {
    if lo <= d && d <= hi {
        Ok(())
    } else {
        Err(format!("{name} = {d} outside [{lo}, {hi}]"))
    }
}

fn iff(name: &str, d: Degree, flag: bool, property: &str) -> std::result::Result<(), String> {
    if d.is_one() == flag {
        Ok(())
    } else {
        Err(format!("{name} = {d} but {property} = {flag}"))
    }
}

/// Checks the universal bounds, the degree-one characterizations and chain
/// decomposition of commutative entries on every algebra of `catalog`.
pub fn audit_bounds(catalog: &Catalog) -> AuditReport {
    let n = catalog.order;
    let sq = n * n;
    let mut auditor = Auditor {
        checks: [
            ("cd_bounds", "non-commutative => (3n-2)/n^2 <= cd <= (n^2-2)/n^2"),
            ("dnd_bounds", "non-commutative and bounded => 2/n <= dnd <= (n-1)/n"),
            (
                "pid_bounds",
                "not positive implicative => (4n-4)/n^2 <= pid <= (n^2-1)/n^2",
            ),
            ("id_bounds", "not implicative => (4n-4)/n^2 <= id <= (n^2-1)/n^2"),
            (
                "linear_pid_bounds",
                "linear, not positive implicative => (n^2+3n-2)/(2n^2) <= pid <= (n^2-1)/n^2",
            ),
            (
                "linear_id_bounds",
                "linear, not implicative => (n^2+3n-2)/(2n^2) <= id <= (n^2-1)/n^2",
            ),
            ("cd_one_iff_commutative", "cd = 1 <=> commutative"),
            ("pid_one_iff_positive_implicative", "pid = 1 <=> positive implicative"),
            ("id_one_iff_implicative", "id = 1 <=> implicative"),
            (
                "commutative_chain_decomposition",
                "commutative => isomorphic to a product of chains",
            ),
        ]
        .into_iter()
        .map(|(name, statement)| AuditCheck {
            name,
            statement: statement.to_string(),
            applicable: 0,
            failures: 0,
        })
        .collect(),
        counterexamples: Vec::new(),
    };

    for entry in &catalog.entries {
        let a = &entry.algebra;
        let p = &entry.properties;
        let d = &entry.degrees;
        // the bounds are vacuous below order 3 but the formulas need n >= 1
        let (cd_lo, cd_hi) = (deg((3 * n).saturating_sub(2), sq), deg(sq.saturating_sub(2), sq));
        let (q_lo, q_hi) = (deg((4 * n).saturating_sub(4).min(sq), sq), deg(sq - 1, sq));
        let lin_lo = deg(sq + 3 * n - 2, 2 * sq);

        auditor.record(0, a, !p.commutative, || within("cd", d.cd, cd_lo, cd_hi));
        auditor.record(1, a, !p.commutative && p.bound.is_some(), || match d.dnd {
            Some(dnd) => within("dnd", dnd, deg(2, n), deg(n - 1, n)),
            None => Err("dnd undefined on a bounded algebra".into()),
        });
        auditor.record(2, a, !p.positive_implicative, || within("pid", d.pid, q_lo, q_hi));
        auditor.record(3, a, !p.implicative, || within("id", d.id, q_lo, q_hi));
        auditor.record(4, a, p.linear && !p.positive_implicative, || {
            within("pid", d.pid, lin_lo, q_hi)
        });
        auditor.record(5, a, p.linear && !p.implicative, || within("id", d.id, lin_lo, q_hi));
        auditor.record(6, a, true, || iff("cd", d.cd, p.commutative, "commutative"));
        auditor.record(7, a, true, || {
            iff("pid", d.pid, p.positive_implicative, "positive implicative")
        });
        auditor.record(8, a, true, || iff("id", d.id, p.implicative, "implicative"));
        auditor.record(9, a, p.commutative, || match decompose_commutative(a) {
            Ok(dec) if dec.product().is_isomorphic(a) => Ok(()),
            Ok(dec) => Err(format!("product of chains {:?} is not isomorphic", dec.chain_lengths)),
            Err(e) => Err(e.to_string()),
        });
    }

    let passed = auditor.checks.iter().all(AuditCheck::passed);
    AuditReport {
        order: n,
        checked: catalog.len(),
        checks: auditor.checks,
        counterexamples: auditor.counterexamples,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{pi, tc};
    use crate::enumeration::enumerate;

    #[test]
    fn possible_sets() {
        assert_eq!(possible_degrees(3, DegreeKind::Dnd), vec![deg(2, 3), Degree::one()]);
        assert_eq!(possible_degrees(3, DegreeKind::Cd), vec![deg(7, 9), Degree::one()]);
        assert_eq!(
            possible_degrees(4, DegreeKind::Cd),
            vec![deg(10, 16), deg(12, 16), deg(14, 16), Degree::one()]
        );
        assert_eq!(
            possible_degrees(5, DegreeKind::Dnd),
            vec![deg(2, 5), deg(3, 5), deg(4, 5), Degree::one()]
        );
        assert_eq!(possible_degrees(3, DegreeKind::Pid), vec![deg(8, 9), Degree::one()]);
        assert_eq!(possible_degrees(2, DegreeKind::Cd), vec![Degree::one()]);
        assert_eq!(possible_degrees(1, DegreeKind::Emd), vec![Degree::one()]);
    }

    #[test]
    fn order_three_spectra() {
        let c = enumerate(3).unwrap();
        let s = spectrum(&c, DegreeKind::Dnd, SpectrumFilter::All);
        assert_eq!(s.achieved, vec![deg(2, 3), Degree::one()]);
        assert!(s.missing.is_empty());
        assert_eq!(s.considered, 2);
        assert!(pi().is_isomorphic(&BckAlgebra::from_table(3, &s.witnesses[0].table).unwrap()));
        assert!(tc().is_isomorphic(&BckAlgebra::from_table(3, &s.witnesses[1].table).unwrap()));

        let s = spectrum(&c, DegreeKind::Cd, SpectrumFilter::All);
        assert_eq!(s.achieved, vec![deg(7, 9), Degree::one()]);
        let s = spectrum(&c, DegreeKind::Cd, SpectrumFilter::Commutative);
        assert_eq!(s.achieved, vec![Degree::one()]);
        assert_eq!(s.missing, vec![deg(7, 9)]);
    }

    #[test]
    fn conjectures_small() {
        for n in 3..=4 {
            let r = verify_conjectures(&enumerate(n).unwrap()).unwrap();
            assert!(r.passed, "order {n}: {r:?}");
        }
        assert!(verify_conjectures(&enumerate(2).unwrap()).is_err());
    }

    #[test]
    fn audit_order_three() {
        let r = audit_bounds(&enumerate(3).unwrap());
        assert_eq!(r.checked, 3);
        for name in [
            "cd_bounds",
            "dnd_bounds",
            "pid_bounds",
            "id_bounds",
            "cd_one_iff_commutative",
        ] {
            assert!(r.check(name).unwrap().passed(), "{name}");
        }
        // 2 ⊔ 2 is commutative without a top, so no product of chains matches it
        let dec = r.check("commutative_chain_decomposition").unwrap();
        assert_eq!((dec.applicable, dec.failures), (2, 1));
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(
            r.counterexamples[0].table,
            vec![vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 0]]
        );
        assert!(!r.passed);
    }
}
