//! Exact check of the commutation relation between the raising and lowering
//! transfer operators, one matrix element at a time.
//!
//! For diagrams `mu`, `mu1` and nonzero rationals `x`, `y` with `|xy| < 1`:
//!
//! ```text
//! lhs = sum_{nu ≻ mu, nu ≻ mu1} x^{|nu| - |mu1|} y^{|nu| - |mu|}     (infinite)
//! rhs = sum_{mu ≻ nu, mu1 ≻ nu} x^{|mu| - |nu|} y^{|mu1| - |nu|}     (finite)
//! ```
//!
//! and the relation says `(1 - xy) * lhs = rhs`.
//!
//! The infinite sum factorises row by row. With `hi_i = max(mu_i, mu1_i)` and
//! `lo_i = min(mu_i, mu1_i)`, the admissible `nu` are exactly
//! `nu_1 >= hi_1` and `hi_{i+1} <= nu_{i+1} <= lo_i`, so `lhs` is
//! `x^{-|mu1|} y^{-|mu|} * (xy)^{hi_1} / (1 - xy) * prod_i sum_{v=hi_{i+1}}^{lo_i} (xy)^v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{interlaces, Partition};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationReport {
    pub lhs: Rational,
    pub rhs: Rational,
    /// `1 - xy`
    pub factor: Rational,
    pub holds: bool,
}

impl fmt::Display for CommutationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lhs = {}, rhs = {}, 1 - xy = {}, holds = {}",
            self.lhs, self.rhs, self.factor, self.holds
        )
    }
}

fn check_convergent(x: &Rational, y: &Rational) -> Result<Rational> {
    let xy = x * y;
    let a = xy.abs();
    if a.is_zero() || a >= Rational::one() {
        return Err(Error::Divergent(a.to_string()));
    }
    Ok(xy)
}

/// Closed form of `lhs` via the row factorisation.
pub fn lhs_closed_form(mu: &Partition, mu1: &Partition, x: &Rational, y: &Rational) -> Result<Rational> {
    let xy = check_convergent(x, y)?;
    let n = mu.len().max(mu1.len());
    let hi = |i: usize| mu.part(i).max(mu1.part(i));
    let lo = |i: usize| mu.part(i).min(mu1.part(i));

    let one_minus = &Rational::one() - &xy;
    let mut value = xy.pow(hi(0) as i64)?.checked_div(&one_minus)?;
    for i in 0..n {
        // an empty range makes the whole element zero
        value = &value * &xy.geometric_sum(hi(i + 1), lo(i));
    }
    let prefactor = &x.pow(-(mu1.size() as i64))? * &y.pow(-(mu.size() as i64))?;
    Ok(&prefactor * &value)
}

/// The finite right-hand side, summed directly over common lower neighbours.
pub fn rhs_sum(mu: &Partition, mu1: &Partition, x: &Rational, y: &Rational) -> Result<Rational> {
    let mut total = Rational::zero();
    for nu in mu.interlacing_below() {
        if interlaces(mu1, &nu) {
            let ex = (mu.size() - nu.size()) as i64;
            let ey = (mu1.size() - nu.size()) as i64;
            total = &total + &(&x.pow(ex)? * &y.pow(ey)?);
        }
    }
    Ok(total)
}

pub fn commutation_check_exact(
    mu: &Partition,
    mu1: &Partition,
    x: &Rational,
    y: &Rational,
) -> Result<CommutationReport> {
    let xy = check_convergent(x, y)?;
    let lhs = lhs_closed_form(mu, mu1, x, y)?;
    let rhs = rhs_sum(mu, mu1, x, y)?;
    let factor = &Rational::one() - &xy;
    let holds = &lhs * &factor == rhs;
    Ok(CommutationReport { lhs, rhs, factor, holds })
}

/// `lhs` summed term by term over `nu` with `size(nu) <= max_size`, plus a
/// bound on the absolute value of everything left out.
///
/// Each size `s` contributes at most `P = prod_i (lo_i - hi_{i+1} + 1)` terms
/// (the lower rows are confined to those ranges and `nu_1` is then fixed by
/// `s`), each of absolute value `|x|^{-|mu1|} |y|^{-|mu|} |xy|^s`.
pub fn lhs_truncated(
    mu: &Partition,
    mu1: &Partition,
    x: &Rational,
    y: &Rational,
    max_size: u64,
) -> Result<(Rational, Rational)> {
    let xy = check_convergent(x, y)?;
    // every term is x^{-|mu1|} y^{-|mu|} (xy)^{|nu|}; count the nu of each size first
    let mut count_by_size = vec![0u64; max_size as usize + 1];
    mu.for_each_above(max_size, |nu| {
        if interlaces(&nu, mu1) {
            count_by_size[nu.size() as usize] += 1;
        }
    });
    let mut power = Rational::one();
    let mut series = Rational::zero();
    for &count in &count_by_size {
        if count > 0 {
            series = &series + &(&power * &Rational::integer(count));
        }
        power = &power * &xy;
    }
    let sum = &(&x.pow(-(mu1.size() as i64))? * &y.pow(-(mu.size() as i64))?) * &series;

    let n = mu.len().max(mu1.len());
    let mut per_size: u64 = 1;
    for i in 0..n {
        let hi = mu.part(i + 1).max(mu1.part(i + 1));
        let lo = mu.part(i).min(mu1.part(i));
        per_size *= (lo + 1).saturating_sub(hi);
    }
    let r = xy.abs();
    let prefactor = &x.abs().pow(-(mu1.size() as i64))? * &y.abs().pow(-(mu.size() as i64))?;
    let tail = r.pow(max_size as i64 + 1)?.checked_div(&(&Rational::one() - &r))?;
    let bound = &(&prefactor * &Rational::integer(per_size)) * &tail;
    Ok((sum, bound))
}
