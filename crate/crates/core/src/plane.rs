//! Plane partitions, diagonal slicing and the brute-force census.
//!
//! Slice `t` of a plane partition `pi` collects the entries on the diagonal
//! `col - row = t`, read from the top-left corner outward:
//!
//! ```text
//! t >= 0: (pi(0, t), pi(1, t+1), pi(2, t+2), ...)
//! t <  0: (pi(-t, 0), pi(1-t, 1), ...)
//! ```
//!
//! Below-diagonal slices therefore sit at negative `t` and grow toward the
//! main diagonal, and the slices form a chain that rises by interlacing up
//! to `t = 0` and falls by interlacing afterwards.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{interlaces, Partition};

/// A finitely supported matrix of positive integers that weakly decreases
/// along rows and down columns. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlanePartition {
    rows: Vec<Partition>,
}

impl PlanePartition {
    pub fn empty() -> Self {
        PlanePartition { rows: Vec::new() }
    }

    /// Validates a matrix given row by row. Zeros are stripped, so trailing
    /// zero entries and trailing all-zero rows are allowed.
    pub fn new(matrix: &[Vec<i64>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(matrix.len());
        for (r, row) in matrix.iter().enumerate() {
            if let Some((index, &value)) = row.iter().enumerate().find(|(_, v)| **v < 0) {
                return Err(Error::NegativePart { index, value });
            }
            if let Some(c) = row.windows(2).position(|w| w[0] < w[1]) {
                return Err(Error::RowIncreases { row: r, col: c + 1, prev: row[c], next: row[c + 1] });
            }
            rows.push(Partition::new(row)?);
        }
        Self::from_rows(rows)
    }

    pub fn from_rows(mut rows: Vec<Partition>) -> Result<Self> {
        while rows.last().is_some_and(Partition::is_empty) {
            rows.pop();
        }
        for r in 1..rows.len() {
            let (above, below) = (&rows[r - 1], &rows[r]);
            for c in 0..below.len() {
                if below.part(c) > above.part(c) {
                    return Err(Error::ColumnIncreases {
                        row: r,
                        col: c,
                        above: above.part(c),
                        below: below.part(c),
                    });
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.rows.get(row).map_or(0, |r| r.part(col))
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Partition::len)
    }

    pub fn volume(&self) -> u64 {
        self.rows.iter().map(Partition::size).sum()
    }

    pub fn to_matrix(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.parts().to_vec()).collect()
    }

    /// Cuts the plane partition into its diagonal slices.
    pub fn slice(&self) -> SliceSequence {
        let reach = self.num_rows().max(self.num_cols()).saturating_sub(1) as i64;
        let slices = (-reach..=reach)
            .map(|t| {
                let offset = t.unsigned_abs() as usize;
                let parts = (0..)
                    .map(|i| if t >= 0 { self.entry(i, i + offset) } else { self.entry(i + offset, i) })
                    .take_while(|&v| v > 0)
                    .collect();
                Partition::from_sorted(parts)
            })
            .collect();
        let seq = SliceSequence { slices };
        debug_assert!(seq.check_interlacing().is_ok());
        seq
    }

    /// Parses the whitespace text format (one row per line) or, if the input
    /// starts with `[`, a JSON array of arrays.
    pub fn parse(input: &str) -> Result<Self> {
        let matrix = parse_matrix(input)?;
        Self::new(&matrix)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.parts().iter().map(u64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_matrix())
    }
}

/// Reads a matrix of integers from text rows or JSON.
pub(crate) fn parse_matrix(input: &str) -> Result<Vec<Vec<i64>>> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()));
    }
    let mut rows = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad integer {tok:?}", n + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Diagonal slices `t = -T..=T` of a plane partition.
///
/// The sequence is kept in canonical form: `T` is the largest `|t|` with a
/// nonempty slice, so the empty plane partition is the single slice `(∅)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SliceSequence {
    slices: Vec<Partition>,
}

impl SliceSequence {
    /// Builds a sequence centred on the middle element and checks the
    /// rise-then-fall interlacing chain, with `∅` assumed beyond both ends.
    pub fn new(slices: Vec<Partition>) -> Result<Self> {
        if slices.len().is_multiple_of(2) {
            return Err(Error::EvenSliceCount(slices.len()));
        }
        let mut seq = SliceSequence { slices };
        seq.check_interlacing()?;
        seq.trim();
        Ok(seq)
    }

    fn trim(&mut self) {
        while self.slices.len() > 1
            && self.slices.first().is_some_and(Partition::is_empty)
            && self.slices.last().is_some_and(Partition::is_empty)
        {
            self.slices.pop();
            self.slices.remove(0);
        }
    }

    /// `T`, so that slices are indexed `-T..=T`.
    pub fn reach(&self) -> i64 {
        (self.slices.len() / 2) as i64
    }

    pub fn get(&self, t: i64) -> Option<&Partition> {
        let idx = t + self.reach();
        if idx < 0 {
            return None;
        }
        self.slices.get(idx as usize)
    }

    pub fn slices(&self) -> &[Partition] {
        &self.slices
    }

    /// `(t, slice)` pairs from `-T` to `T`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Partition)> {
        let reach = self.reach();
        self.slices.iter().enumerate().map(move |(i, s)| (i as i64 - reach, s))
    }

    pub fn total_size(&self) -> u64 {
        self.slices.iter().map(Partition::size).sum()
    }

    /// Reports the first `t` where the chain breaks. The step from `t` to
    /// `t + 1` must rise for `t < 0` and fall for `t >= 0`; `t = -T - 1`
    /// and `t = T` name the steps in from and out to the empty boundary.
    pub fn check_interlacing(&self) -> Result<()> {
        let reach = self.reach();
        let empty = Partition::empty();
        let at = |t: i64| self.get(t).unwrap_or(&empty);
        for t in -reach - 1..=reach {
            let ok = if t < 0 { interlaces(at(t + 1), at(t)) } else { interlaces(at(t), at(t + 1)) };
            if !ok {
                return Err(Error::NotInterlacing { t });
            }
        }
        Ok(())
    }

    /// Reassembles the plane partition: `pi(i, j)` is part `min(i, j)` of slice `j - i`.
    pub fn unslice(&self) -> Result<PlanePartition> {
        self.check_interlacing()?;
        let reach = self.reach();
        let dim = reach as usize + 1;
        let matrix: Vec<Vec<i64>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let t = j as i64 - i as i64;
                        self.get(t).map_or(0, |s| s.part(i.min(j)) as i64)
                    })
                    .collect()
            })
            .collect();
        PlanePartition::new(&matrix)
    }

    /// Text format: one slice per line from `t = -T` to `T`; `0`, `-` or `∅`
    /// marks an empty slice. Input starting with `[` is read as JSON.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim_start();
        let rows: Vec<Vec<i64>> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?
        } else {
            let mut rows = Vec::new();
            for (n, line) in input.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                if line == "-" || line == "∅" {
                    rows.push(Vec::new());
                    continue;
                }
                let row = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("line {}: bad integer {tok:?}", n + 1)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            rows
        };
        let slices = rows.iter().map(|r| Partition::new(r)).collect::<Result<Vec<_>>>()?;
        Self::new(slices)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.slices {
            if s.is_empty() {
                out.push('-');
            } else {
                let line: Vec<String> = s.parts().iter().map(u64::to_string).collect();
                out.push_str(&line.join(" "));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SliceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Depth-first census of plane partitions of volume exactly `n`: rows are
/// appended one at a time, each bounded entrywise by the row above, and a
/// branch stops as soon as the remaining volume is spent.
struct Census {
    target: u64,
}

impl Census {
    fn run(&self, mut visit: impl FnMut(&[Partition])) {
        let mut rows = Vec::new();
        self.extend(&mut rows, self.target, &mut visit);
    }

    fn extend(&self, rows: &mut Vec<Partition>, remaining: u64, visit: &mut dyn FnMut(&[Partition])) {
        if remaining == 0 {
            visit(rows);
            return;
        }
        let bound: Option<Vec<u64>> = rows.last().map(|r: &Partition| r.parts().to_vec());
        for size in (1..=remaining).rev() {
            for row in rows_under(bound.as_deref(), size) {
                rows.push(row);
                self.extend(rows, remaining - size, visit);
                rows.pop();
            }
        }
    }
}

/// Partitions of exactly `size` that fit entrywise under `bound` (no bound for the first row),
/// in lexicographically decreasing order.
fn rows_under(bound: Option<&[u64]>, size: u64) -> Vec<Partition> {
    fn rec(
        bound: Option<&[u64]>,
        remaining: u64,
        max_part: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        let i = current.len();
        let cap = match bound {
            Some(b) => b.get(i).copied().unwrap_or(0),
            None => u64::MAX,
        };
        let hi = max_part.min(remaining).min(cap);
        for v in (1..=hi).rev() {
            current.push(v);
            rec(bound, remaining - v, v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, size, size, &mut Vec::new(), &mut out);
    out
}

/// Number of plane partitions of volume exactly `n`.
pub fn count_plane_partitions(n: u64) -> u64 {
    let mut count = 0;
    Census { target: n }.run(|_| count += 1);
    count
}

/// Every plane partition of volume exactly `n`, in the census' fixed order
/// (first row largest-then-lexicographically-greatest, recursively).
pub fn enumerate_plane_partitions(n: u64) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    Census { target: n }.run(|rows| out.push(PlanePartition { rows: rows.to_vec() }));
    out
}
