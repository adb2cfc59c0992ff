//! Semistandard fillings of skew shapes, counted with a per-entry weight.
//!
//! Rows weakly increase left to right and columns strictly increase top to
//! bottom. Filling cells one at a time keeps this independent of the
//! interlacing machinery in [`crate::fock`].

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qseries::QSeries;

/// `sum_T q^(sum over cells of weights[T(cell) - 1])` over semistandard
/// tableaux `T` of shape `outer/inner` with entries in `1..=k`.
pub fn count_skew_ssyt_weighted(
    outer: &Partition,
    inner: &Partition,
    k: usize,
    weights: &[u64],
    order: usize,
) -> Result<QSeries> {
    if !inner.is_contained_in(outer) {
        return Err(Error::NotContained { inner: inner.parts().to_vec(), outer: outer.parts().to_vec() });
    }
    if weights.len() != k {
        return Err(Error::WeightLength { expected: k, got: weights.len() });
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let width = outer.part(0) as usize;
    let mut grid = vec![vec![0usize; width]; outer.len()];
    let mut out = QSeries::zero(order);
    fill(&cells, 0, inner, k, weights, &mut grid, 0, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    inner: &Partition,
    k: usize,
    weights: &[u64],
    grid: &mut [Vec<usize>],
    exponent: u64,
    out: &mut QSeries,
) {
    if exponent >= out.order() as u64 {
        // weights are nonnegative, so nothing below can land inside the truncation
        return;
    }
    let Some(&(r, c)) = cells.get(idx) else {
        out.add_shifted(&QSeries::one(1), exponent as usize);
        return;
    };
    let mut lo = 1;
    if c > inner.part(r) as usize {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 && c >= inner.part(r - 1) as usize {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..=k {
        grid[r][c] = v;
        fill(cells, idx + 1, inner, k, weights, grid, exponent + weights[v - 1], out);
    }
    grid[r][c] = 0;
}
