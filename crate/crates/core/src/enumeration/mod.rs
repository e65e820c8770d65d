//! All BCK-algebras of a small order, up to isomorphism.

mod analysis;
mod search;
mod store;

use serde::Serialize;

use crate::algebra::{BckAlgebra, Element, Properties};
use crate::degree::DegreeProfile;
use crate::error::{Error, Result};

pub use analysis::{
    audit_bounds, possible_degrees, spectrum, verify_conjectures, AuditCheck, AuditReport, ConjectureReport,
    Counterexample, SpectrumFilter, SpectrumReport, Witness,
};
pub use store::{load_catalog, save_catalog, table_hash};

/// Orders above this are allowed but not expected to finish at desk scale.
pub const PRACTICAL_MAX_ORDER: usize = 6;

/// Node budget applied by [`enumerate`] above [`PRACTICAL_MAX_ORDER`].
pub const DEFAULT_NODE_LIMIT: u64 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub jobs: usize,
    pub node_limit: Option<u64>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            jobs: 1,
            node_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub algebra: BckAlgebra,
    pub properties: Properties,
    pub degrees: DegreeProfile,
}

impl CatalogEntry {
    pub fn new(algebra: BckAlgebra) -> Self {
        CatalogEntry {
            properties: algebra.properties(),
            degrees: DegreeProfile::of(&algebra),
            algebra,
        }
    }
}

impl Serialize for BckAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Canonical representatives of every isomorphism class of one order,
/// sorted by their row-major tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub order: usize,
    pub entries: Vec<CatalogEntry>,
    /// Search nodes visited while building the catalog (0 when loaded from disk).
    #[serde(skip)]
    pub nodes: u64,
}

impl Catalog {
    /// Builds a catalog from canonical tables; sorts and deduplicates.
    pub fn from_canonical_tables(order: usize, tables: impl IntoIterator<Item = Vec<Element>>) -> Result<Catalog> {
        let mut tables: Vec<Vec<Element>> = tables.into_iter().collect();
        tables.sort();
        tables.dedup();
        let mut entries = Vec::with_capacity(tables.len());
        for t in tables {
            let a = BckAlgebra::from_flat(order, t)?;
            if a.canonical_flat() != a.table() {
                return Err(Error::Catalog(format!("table {:?} is not in canonical form", a.rows())));
            }
            entries.push(CatalogEntry::new(a));
        }
        Ok(Catalog {
            order,
            entries,
            nodes: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn algebras(&self) -> impl Iterator<Item = &BckAlgebra> {
        self.entries.iter().map(|e| &e.algebra)
    }

    /// The entry isomorphic to `a`, if any.
    pub fn find(&self, a: &BckAlgebra) -> Option<&CatalogEntry> {
        if a.order() != self.order {
            return None;
        }
        let key = a.canonical_flat();
        self.entries
            .binary_search_by(|e| e.algebra.table().cmp(&key[..]))
            .ok()
            .map(|i| &self.entries[i])
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    Ok(())
}

/// Enumerates order-`n` algebras with default options; orders above
/// [`PRACTICAL_MAX_ORDER`] run under [`DEFAULT_NODE_LIMIT`].
pub fn enumerate(n: usize) -> Result<Catalog> {
    let mut options = EnumerateOptions::default();
    if n > PRACTICAL_MAX_ORDER {
        options.node_limit = Some(DEFAULT_NODE_LIMIT);
    }
    enumerate_with(n, options)
}

pub fn enumerate_with(n: usize, options: EnumerateOptions) -> Result<Catalog> {
    check_order(n)?;
    if n > PRACTICAL_MAX_ORDER {
        log::warn!("enumerating order {n}, above the practical ceiling of {PRACTICAL_MAX_ORDER}");
    }
    let outcome = search::search(n, search::Collect::Canonical, options.jobs, options.node_limit)?;
    let mut catalog = Catalog::from_canonical_tables(n, outcome.tables)?;
    catalog.nodes = outcome.nodes;
    Ok(catalog)
}

/// Every valid labelled table of order `n` (element 0 fixed), without
/// isomorphism reduction. Sorted row-major.
pub fn enumerate_labelled(n: usize, options: EnumerateOptions) -> Result<Vec<BckAlgebra>> {
    check_order(n)?;
    let outcome = search::search(n, search::Collect::Labelled, options.jobs, options.node_limit)?;
    outcome
        .tables
        .into_iter()
        .map(|t| BckAlgebra::from_flat(n, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bck_union, pi, tc, two};

    #[test]
    fn smallest_orders() {
        let c1 = enumerate(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1.entries[0].algebra, BckAlgebra::trivial());
        let c2 = enumerate(2).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2.entries[0].algebra, two());
        assert!(enumerate(0).is_err());
    }

    #[test]
    fn order_three_is_tc_pi_and_union() {
        let c = enumerate(3).unwrap();
        assert_eq!(c.len(), 3);
        for a in [tc(), pi(), bck_union(&two(), &two())] {
            assert!(c.find(&a).is_some(), "{a:?} missing");
        }
    }

    #[test]
    fn dedup_matches_reduction_of_labelled_tables() {
        for n in 1..=4 {
            let catalog = enumerate(n).unwrap();
            let labelled = enumerate_labelled(n, EnumerateOptions::default()).unwrap();
            let reduced = Catalog::from_canonical_tables(n, labelled.iter().map(|a| a.canonical_flat())).unwrap();
            assert_eq!(reduced.entries, catalog.entries);
        }
    }

    #[test]
    fn catalog_entries_are_pairwise_non_isomorphic() {
        let c = enumerate(4).unwrap();
        for (i, a) in c.algebras().enumerate() {
            for b in c.algebras().skip(i + 1) {
                assert!(!a.is_isomorphic(b));
            }
        }
    }

    #[test]
    fn rejects_non_canonical_input() {
        let swapped = pi().relabel(&[0, 2, 1]).unwrap();
        let err = Catalog::from_canonical_tables(3, [swapped.table().to_vec()]);
        assert!(matches!(err, Err(Error::Catalog(_))));
    }
}
