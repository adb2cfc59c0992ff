//! Integer partitions (Young diagrams) and the interlacing relation.
//!
//! A [`Partition`] stores its nonzero parts in weakly decreasing order. Parts
//! past the end are read as zero everywhere in this module, so `(2,1)` and
//! `(2,1,0,0)` are the same diagram.
//!
//! `mu ≻ nu` (`interlaces(mu, nu)`) holds when
//! `mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...`, which is the same as saying `nu`
//! sits inside `mu` and the skew shape `mu/nu` is a horizontal strip.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
    size: u64,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    /// Validates `values`, strips trailing zeros and returns the canonical diagram.
    pub fn new(values: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(values.len());
        for (index, &value) in values.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
            parts.push(value as u64);
        }
        Self::from_parts(parts)
    }

    pub fn from_parts(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing { index: index + 1, prev: w[0], next: w[1] });
            }
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Caller guarantees `parts` is weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, 0-indexed, zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// `self ⊆ outer` as Young diagrams.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Partitions `nu` with `self ≻ nu`. Always a finite set.
    pub fn interlacing_below(&self) -> Vec<Partition> {
        let ranges: Vec<(u64, u64)> =
            (0..self.len()).map(|i| (self.part(i + 1), self.part(i))).collect();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(ranges.len());
        product_of_ranges(&ranges, &mut current, &mut |parts| {
            out.push(Partition::from_sorted(parts.to_vec()))
        });
        out
    }

    /// Partitions `nu` with `nu ≻ self` and `size(nu) <= max_size`.
    pub fn interlacing_above(&self, max_size: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        self.for_each_above(max_size, |nu| out.push(nu));
        out
    }

    /// Visits every `nu ≻ self` with `size(nu) <= max_size`.
    ///
    /// `nu_1 >= self_1` is free, and `nu_{i+1}` ranges over `[self_{i+1}, self_i]`.
    pub fn for_each_above(&self, max_size: u64, mut visit: impl FnMut(Partition)) {
        let size = self.size();
        if size > max_size {
            return;
        }
        let n = self.len();
        let mut current = vec![0u64; n + 1];
        // tail_min[i] = smallest possible sum of nu_{i..}
        let mut tail_min = vec![0u64; n + 2];
        for i in (1..=n).rev() {
            tail_min[i] = tail_min[i + 1] + self.part(i);
        }
        fn rec(
            mu: &Partition,
            i: usize,
            budget: u64,
            tail_min: &[u64],
            current: &mut Vec<u64>,
            visit: &mut dyn FnMut(Partition),
        ) {
            if i == current.len() {
                visit(Partition::from_sorted(current.clone()));
                return;
            }
            let lo = mu.part(i);
            let hi = if i == 0 { u64::MAX } else { mu.part(i - 1) };
            let rest = tail_min[i + 1];
            if budget < rest + lo {
                return;
            }
            let hi = hi.min(budget - rest);
            for v in lo..=hi {
                current[i] = v;
                rec(mu, i + 1, budget - v, tail_min, current, visit);
            }
        }
        rec(self, 0, max_size, &tail_min, &mut current, &mut visit);
    }

    /// Total size of the cheapest descent `self ≻ (self_2, self_3, ..) ≻ .. ≻ ∅`,
    /// not counting `self` itself.
    pub fn descent_cost(&self) -> u64 {
        self.parts.iter().enumerate().map(|(k, &p)| k as u64 * p).sum()
    }
}

fn product_of_ranges(ranges: &[(u64, u64)], current: &mut Vec<u64>, emit: &mut dyn FnMut(&[u64])) {
    if current.len() == ranges.len() {
        emit(current);
        return;
    }
    let (lo, hi) = ranges[current.len()];
    for v in lo..=hi {
        current.push(v);
        product_of_ranges(ranges, current, emit);
        current.pop();
    }
}

/// Size first, then lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `mu ≻ nu`: `mu_i >= nu_i >= mu_{i+1}` for every `i`.
pub fn interlaces(mu: &Partition, nu: &Partition) -> bool {
    let n = mu.len().max(nu.len());
    (0..n).all(|i| mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))
}

/// `nu ⊆ mu` and no column of `mu/nu` holds two cells.
pub fn is_horizontal_strip(mu: &Partition, nu: &Partition) -> bool {
    if !nu.is_contained_in(mu) {
        return false;
    }
    let width = mu.part(0) as usize;
    let mut cells_per_column = vec![0u32; width];
    for r in 0..mu.len() {
        for c in nu.part(r)..mu.part(r) {
            cells_per_column[c as usize] += 1;
        }
    }
    cells_per_column.iter().all(|&n| n <= 1)
}

/// All partitions of exactly `n`, parts in lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        for p in 1..=max_part.min(remaining) {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size`, size-then-lexicographic.
pub fn enumerate_partitions(max_size: u64) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}
