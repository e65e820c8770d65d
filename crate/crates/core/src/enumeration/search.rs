//! Backtracking over partially filled Cayley tables.
//!
//! Row 0 (all zeros), column 0 (`x·0 = x`) and the diagonal (`x·x = 0`)
//! are forced. The remaining cells are filled row by row. After every
//! assignment the partial table is checked against every axiom instance
//! whose lookups are all filled already, plus the derived law
//! `(x·y)·x = 0`. Completed tables are re-checked in full.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::algebra::{BckAlgebra, Element};
use crate::error::{Error, Result};

const UNSET: Element = Element::MAX;

/// Which tables a search reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Collect {
    /// Canonical forms only.
    Canonical,
    /// Every valid labelled table.
    Labelled,
}

#[derive(Debug)]
pub(crate) struct SearchOutcome {
    pub tables: BTreeSet<Vec<Element>>,
    pub nodes: u64,
}

struct Shared {
    nodes: AtomicU64,
    limit: Option<u64>,
    stopped: AtomicBool,
}

struct Search<'s> {
    n: usize,
    cells: Vec<(usize, usize)>,
    table: Vec<Element>,
    collect: Collect,
    found: BTreeSet<Vec<Element>>,
    shared: &'s Shared,
}

fn forced_table(n: usize) -> Vec<Element> {
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x] = 0;
        t[x * n] = x;
        t[x * n + x] = 0;
    }
    t
}

fn free_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect()
}

/// Checks every instance whose cells are all known.
fn partial_consistent(n: usize, t: &[Element]) -> bool {
    let at = |x: Element, y: Element| -> Element {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            t[x * n + y]
        }
    };
    for x in 1..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            // BCK5
            if y > x && xy == 0 && t[y * n + x] == 0 {
                return false;
            }
            // x·y ≤ x
            let back = at(xy, x);
            if back != UNSET && back != 0 {
                return false;
            }
            // BCK2
            let r = at(at(x, xy), y);
            if r != UNSET && r != 0 {
                return false;
            }
            // BCK1
            for z in 0..n {
                let v = at(at(xy, at(x, z)), at(z, y));
                if v != UNSET && v != 0 {
                    return false;
                }
            }
        }
    }
    true
}

impl<'s> Search<'s> {
    fn new(n: usize, collect: Collect, shared: &'s Shared) -> Self {
        Search {
            n,
            cells: free_cells(n),
            table: forced_table(n),
            collect,
            found: BTreeSet::new(),
            shared,
        }
    }

    fn candidates(&self, x: usize) -> impl Iterator<Item = Element> + '_ {
        let n = self.n;
        (0..n).filter(move |&v| {
            // x·y ≤ x must stay possible
            v == 0 || v == x || {
                let back = self.table[v * n + x];
                back == UNSET || back == 0
            }
        })
    }

    fn tick(&self) -> bool {
        let visited = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(limit) = self.shared.limit {
            if visited > limit {
                self.shared.stopped.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stopped.load(Ordering::Relaxed)
    }

    fn run(&mut self, depth: usize) {
        if !self.tick() {
            return;
        }
        if depth == self.cells.len() {
            self.leaf();
            return;
        }
        let (x, y) = self.cells[depth];
        let values: Vec<Element> = self.candidates(x).collect();
        for v in values {
            self.table[x * self.n + y] = v;
            if partial_consistent(self.n, &self.table) {
                self.run(depth + 1);
            }
        }
        self.table[x * self.n + y] = UNSET;
    }

    fn leaf(&mut self) {
        let Ok(a) = BckAlgebra::from_flat(self.n, self.table.clone()) else {
            return;
        };
        let key = match self.collect {
            Collect::Canonical => a.canonical_flat(),
            Collect::Labelled => self.table.clone(),
        };
        self.found.insert(key);
    }

    /// All consistent assignments of the first `depth` free cells.
    fn prefixes(&mut self, depth: usize, out: &mut Vec<Vec<Element>>) {
        if depth == 0 || depth > self.cells.len() {
            out.push(self.table.clone());
            return;
        }
        self.prefixes_from(0, depth, out);
    }

    fn prefixes_from(&mut self, at: usize, depth: usize, out: &mut Vec<Vec<Element>>) {
        if at == depth {
            out.push(self.table.clone());
            return;
        }
        let (x, y) = self.cells[at];
        let values: Vec<Element> = self.candidates(x).collect();
        for v in values {
            self.table[x * self.n + y] = v;
            if partial_consistent(self.n, &self.table) {
                self.prefixes_from(at + 1, depth, out);
            }
        }
        self.table[x * self.n + y] = UNSET;
    }
}

pub(crate) fn search(n: usize, collect: Collect, jobs: usize, node_limit: Option<u64>) -> Result<SearchOutcome> {
    assert!(n >= 1);
    let shared = Shared {
        nodes: AtomicU64::new(0),
        limit: node_limit,
        stopped: AtomicBool::new(false),
    };
    let cells = free_cells(n).len();
    // split after the first row of free cells
    let split = (n - 1).saturating_sub(1).min(cells);
    let mut seed = Search::new(n, collect, &shared);
    let mut prefixes = Vec::new();
    seed.prefixes(split, &mut prefixes);

    let jobs = jobs.clamp(1, prefixes.len().max(1));
    let run_share = |worker: usize| -> BTreeSet<Vec<Element>> {
        let mut s = Search::new(n, collect, &shared);
        for prefix in prefixes.iter().skip(worker).step_by(jobs) {
            s.table.clone_from(prefix);
            s.run(split);
        }
        s.found
    };
    let tables = if jobs == 1 {
        run_share(0)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs).map(|w| scope.spawn(move || run_share(w))).collect();
            let mut merged = BTreeSet::new();
            for h in handles {
                merged.extend(h.join().expect("enumeration worker panicked"));
            }
            merged
        })
    };
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.stopped.load(Ordering::Relaxed) {
        return Err(Error::ResourceLimit {
            order: n,
            nodes,
            found: tables.len(),
        });
    }
    Ok(SearchOutcome { tables, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_cells() {
        let t = forced_table(3);
        assert_eq!(t, vec![0, 0, 0, 1, 0, UNSET, 2, UNSET, 0]);
        assert_eq!(free_cells(3), vec![(1, 2), (2, 1)]);
        assert!(free_cells(1).is_empty());
        assert!(free_cells(2).is_empty());
    }

    #[test]
    fn partial_check_rejects_antisymmetry_break() {
        let mut t = forced_table(3);
        t[5] = 0; // 1·2
        assert!(partial_consistent(3, &t));
        t[7] = 0; // 2·1
        assert!(!partial_consistent(3, &t));
    }

    #[test]
    fn labelled_order_three() {
        let out = search(3, Collect::Labelled, 1, None).unwrap();
        // TC and PI each in two labellings, 2 ⊔ 2 in one
        assert_eq!(out.tables.len(), 5);
    }

    #[test]
    fn node_limit_aborts() {
        let err = search(5, Collect::Canonical, 1, Some(10)).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { order: 5, .. }));
    }
}
