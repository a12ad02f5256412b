//! Exhaustive enumeration of small semigroups.
//!
//! [`enumerate_semigroups`] streams every associative Cayley table on
//! `{0..n}` by backtracking over the cells, rejecting a partial table as soon
//! as some fully determined triple fails associativity. With `reduce_iso`,
//! only tables that are lexicographically least among all their relabelings
//! are kept.

use std::io::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::degeneracy::{degeneracy_report, DegeneracyReport};
use crate::hull::multipliers;
use crate::semigroup::FiniteSemigroup;
use crate::sgp::to_sgp;

pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("order {0} is above the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// Which cell is assigned next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellOrder {
    RowMajor,
    ColumnMajor,
}

const NONE: usize = usize::MAX;

pub struct SemigroupIter {
    n: usize,
    cells: Vec<(usize, usize)>,
    table: Vec<usize>,
    cursor: Vec<usize>,
    depth: usize,
    finished: bool,
    perms: Option<Vec<Vec<usize>>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

impl SemigroupIter {
    pub fn new(n: usize, reduce_iso: bool, order: CellOrder) -> Result<Self, CensusError> {
        if n > MAX_ORDER {
            return Err(CensusError::OrderTooLarge(n));
        }
        let cells = match order {
            CellOrder::RowMajor => (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect(),
            CellOrder::ColumnMajor => (0..n).flat_map(|y| (0..n).map(move |x| (x, y))).collect(),
        };
        Ok(SemigroupIter {
            n,
            cells,
            table: vec![NONE; n * n],
            cursor: vec![0; n * n],
            depth: 0,
            finished: false,
            perms: reduce_iso.then(|| permutations(n)),
        })
    }

    fn at(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let (ab, bc) = (self.at(a, b), self.at(b, c));
        if ab == NONE || bc == NONE {
            return true;
        }
        let (l, r) = (self.at(ab, c), self.at(a, bc));
        l == NONE || r == NONE || l == r
    }

    /// Every triple in which cell `(x, y)` plays one of the four roles
    /// `ab`, `(ab)c`, `bc`, `a(bc)`.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        for c in 0..n {
            if !self.triple_ok(x, y, c) || !self.triple_ok(c, x, y) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.at(a, b) == x && !self.triple_ok(a, b, y) {
                    return false;
                }
                if self.at(a, b) == y && !self.triple_ok(x, a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn is_canonical(&self, perms: &[Vec<usize>]) -> bool {
        let n = self.n;
        for sigma in perms {
            let mut inv = vec![0; n];
            for (i, &s) in sigma.iter().enumerate() {
                inv[s] = i;
            }
            // relabeled table: T'[i][j] = σ(T[σ⁻¹i][σ⁻¹j])
            'cmp: for i in 0..n {
                for j in 0..n {
                    let v = sigma[self.at(inv[i], inv[j])];
                    let w = self.at(i, j);
                    if v < w {
                        return false;
                    }
                    if v > w {
                        break 'cmp;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for SemigroupIter {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        loop {
            if self.finished {
                return None;
            }
            if self.depth == self.cells.len() {
                let candidate = self.table.clone();
                let keep = self.perms.as_ref().map_or(true, |p| self.is_canonical(p));
                if self.depth == 0 {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                if keep {
                    return Some(FiniteSemigroup::from_table_unchecked(self.n, candidate));
                }
                continue;
            }
            let d = self.depth;
            let (x, y) = self.cells[d];
            self.table[x * self.n + y] = NONE;
            if self.cursor[d] == self.n {
                self.cursor[d] = 0;
                if d == 0 {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                continue;
            }
            let v = self.cursor[d];
            self.cursor[d] += 1;
            self.table[x * self.n + y] = v;
            if self.consistent(x, y) {
                self.depth += 1;
            }
        }
    }
}

/// All semigroups on `{0..n}` in row-major lexicographic order of tables.
pub fn enumerate_semigroups(n: usize, reduce_iso: bool) -> Result<SemigroupIter, CensusError> {
    SemigroupIter::new(n, reduce_iso, CellOrder::RowMajor)
}

/// Every `every`-th item starting at `seed % every`.
pub fn sample<I: Iterator>(iter: I, every: usize, seed: u64) -> impl Iterator<Item = I::Item> {
    let every = every.max(1);
    let offset = (seed % every as u64) as usize;
    iter.enumerate().filter(move |(i, _)| i % every == offset).map(|(_, x)| x)
}

/// First 16 hex digits of the SHA-256 of the canonical `.sgp` text.
pub fn table_hash(s: &FiniteSemigroup) -> String {
    let digest = Sha256::digest(to_sgp(s).as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub index: usize,
    pub semigroup: FiniteSemigroup,
    pub degeneracy: DegeneracyReport,
    pub hull_size: usize,
    pub inner_count: usize,
    pub outer_count: usize,
    pub is_monoid: bool,
}

impl CensusRecord {
    pub fn new(index: usize, s: FiniteSemigroup) -> Self {
        let ms = multipliers(&s);
        let inner_count = ms.iter().filter(|m| m.is_inner()).count();
        CensusRecord {
            index,
            degeneracy: degeneracy_report(&s),
            hull_size: ms.len(),
            inner_count,
            outer_count: ms.len() - inner_count,
            is_monoid: s.find_identity().is_some(),
            semigroup: s,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub total: usize,
    pub globally_idempotent: usize,
    pub nondegenerate: usize,
    /// Globally idempotent and non-degenerate.
    pub sem_nd: usize,
    pub monoids: usize,
    pub with_outer: usize,
}

pub fn summarize(records: &[CensusRecord]) -> CensusSummary {
    let mut s = CensusSummary::default();
    for r in records {
        s.total += 1;
        s.globally_idempotent += usize::from(r.degeneracy.globally_idempotent);
        s.nondegenerate += usize::from(r.degeneracy.is_nondegenerate());
        s.sem_nd += usize::from(r.degeneracy.all());
        s.monoids += usize::from(r.is_monoid);
        s.with_outer += usize::from(r.outer_count > 0);
    }
    s
}

pub fn run_census(n: usize, reduce_iso: bool) -> Result<(Vec<CensusRecord>, CensusSummary), CensusError> {
    let records: Vec<CensusRecord> =
        enumerate_semigroups(n, reduce_iso)?.enumerate().map(|(i, s)| CensusRecord::new(i, s)).collect();
    let summary = summarize(&records);
    Ok((records, summary))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    hash: &'a str,
    order: usize,
    globally_idempotent: bool,
    left_nondeg: bool,
    right_nondeg: bool,
    is_monoid: bool,
    hull_size: usize,
    inner: usize,
    outer: usize,
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        let hash = table_hash(&r.semigroup);
        w.serialize(CsvRow {
            index: r.index,
            hash: &hash,
            order: r.semigroup.order(),
            globally_idempotent: r.degeneracy.globally_idempotent,
            left_nondeg: r.degeneracy.left_nondeg,
            right_nondeg: r.degeneracy.right_nondeg,
            is_monoid: r.is_monoid,
            hull_size: r.hull_size,
            inner: r.inner_count,
            outer: r.outer_count,
        })?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=3).map(|n| enumerate_semigroups(n, false).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 8, 113]);
        let iso: Vec<usize> = (0..=3).map(|n| enumerate_semigroups(n, true).unwrap().count()).collect();
        assert_eq!(iso, vec![1, 1, 5, 24]);
        assert_eq!(enumerate_semigroups(5, false).err(), Some(CensusError::OrderTooLarge(5)));
    }

    #[test]
    fn output_is_sorted_and_valid() {
        let all: Vec<_> = enumerate_semigroups(3, false).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].table() < w[1].table()));
        assert!(all.iter().all(|s| FiniteSemigroup::from_table(3, s.table().to_vec()).is_ok()));
        let col: Vec<_> = SemigroupIter::new(3, false, CellOrder::ColumnMajor).unwrap().collect();
        assert_eq!(col.len(), 113);
    }

    #[test]
    fn order_two_records() {
        let (records, summary) = run_census(2, false).unwrap();
        assert_eq!(summary.total, 8);
        for r in &records {
            if r.is_monoid {
                assert_eq!(r.hull_size, 2);
            }
        }
        let lz = records.iter().find(|r| r.semigroup == FiniteSemigroup::left_zero(2)).unwrap();
        assert_eq!((lz.hull_size, lz.inner_count, lz.outer_count), (4, 2, 2));
    }

    #[test]
    fn csv_has_one_row_per_record() {
        let (records, _) = run_census(2, false).unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 9);
        assert!(text.starts_with("index,hash,order,"));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a: Vec<usize> = sample(0..100, 25, 0).collect();
        assert_eq!(a, vec![0, 25, 50, 75]);
        let b: Vec<usize> = sample(0..100, 25, 27).collect();
        assert_eq!(b, vec![2, 27, 52, 77]);
    }
}
