//! The span of Young diagrams, with the counting operator `q^{L0}` and the
//! interlacing transfer operators `Γ+` (lowering) and `Γ-` (raising).
//!
//! A [`FockState`] is a finite linear combination `sum_mu c_mu |mu⟩` whose
//! coefficients live in `Z[[q]] / (q^L)`. Terms whose coefficient vanishes
//! modulo `q^L` are never stored, and terms are kept in size-then-lexicographic
//! order so every traversal is deterministic.
//!
//! The plane-partition generating function is the vacuum-to-vacuum element of
//! the product that grows the diagonal slices of a plane partition from `∅`
//! up to the main diagonal with `Γ-` and back down to `∅` with `Γ+`, weighting
//! every slice by `q^{size}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partition::Partition;
use crate::qseries::QSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    order: usize,
    terms: BTreeMap<Partition, QSeries>,
}

impl FockState {
    pub fn zero(order: usize) -> Self {
        FockState { order, terms: BTreeMap::new() }
    }

    /// `|∅⟩` with coefficient 1.
    pub fn vacuum(order: usize) -> Self {
        Self::basis(Partition::empty(), order)
    }

    pub fn basis(mu: Partition, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.add_term(mu, &QSeries::one(order), 0);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QSeries)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &Partition) -> QSeries {
        self.terms.get(mu).cloned().unwrap_or_else(|| QSeries::zero(self.order))
    }

    /// Adds `q^shift * coeff` to the coefficient of `|mu⟩`.
    pub fn add_term(&mut self, mu: Partition, coeff: &QSeries, shift: usize) {
        let order = self.order;
        match self.terms.entry(mu) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_shifted(coeff, shift);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                let mut c = QSeries::zero(order);
                c.add_shifted(coeff, shift);
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    /// `q^{L0}`: scales `|mu⟩` by `q^{size(mu)}`.
    pub fn apply_weight(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), c, mu.size() as usize);
        }
        out
    }

    /// `Γ+`: `|mu⟩ ↦ sum_{mu ≻ nu} |nu⟩`.
    pub fn apply_gamma_plus(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (mu, c) in &self.terms {
            for nu in mu.interlacing_below() {
                out.add_term(nu, c, 0);
            }
        }
        out
    }

    /// `Γ-`: `|mu⟩ ↦ sum_{nu ≻ mu} |nu⟩`, keeping only `nu` with `size(nu) < order`.
    ///
    /// Every later weighting multiplies `|nu⟩` by at least `q^{size(nu)}`, so
    /// the dropped diagrams cannot contribute below the truncation.
    pub fn apply_gamma_minus(&self) -> Self {
        let mut out = Self::zero(self.order);
        let Some(max_size) = (self.order as u64).checked_sub(1) else {
            return out;
        };
        for (mu, c) in &self.terms {
            mu.for_each_above(max_size, |nu| out.add_term(nu, c, 0));
        }
        out
    }

    /// `⟨∅|s⟩`.
    pub fn inner_vacuum(&self) -> QSeries {
        self.coefficient(&Partition::empty())
    }
}

/// How aggressively the transfer computation discards diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Prune {
    /// Drop a diagram once its weighted coefficient vanishes modulo `q^L`.
    #[default]
    Plain,
    /// Also charge the cheapest way back down to `∅`
    /// (`sum_k (k-1) nu_k`, 1-indexed parts) before deciding.
    Sharp,
}

impl Prune {
    fn keeps(self, valuation: usize, nu: &Partition, order: usize) -> bool {
        let mut cost = valuation as u64 + nu.size();
        if self == Prune::Sharp {
            cost += nu.descent_cost();
        }
        cost < order as u64
    }
}

/// `Γ-` followed by `q^{L0}`, skipping diagrams that would be dropped anyway.
fn raise_and_weigh(state: &FockState, prune: Prune) -> FockState {
    let order = state.order;
    let mut out = FockState::zero(order);
    for (mu, c) in &state.terms {
        let Some(val) = c.valuation() else { continue };
        let budget = (order - 1 - val) as u64;
        mu.for_each_above(budget, |nu| {
            if prune.keeps(val, &nu, order) {
                let shift = nu.size() as usize;
                out.add_term(nu, c, shift);
            }
        });
    }
    out
}

/// `Γ+` followed by `q^{L0}`.
fn lower_and_weigh(state: &FockState, prune: Prune) -> FockState {
    let order = state.order;
    let mut out = FockState::zero(order);
    for (mu, c) in &state.terms {
        let Some(val) = c.valuation() else { continue };
        for nu in mu.interlacing_below() {
            if prune.keeps(val, &nu, order) {
                let shift = nu.size() as usize;
                out.add_term(nu, c, shift);
            }
        }
    }
    out
}

/// `sum_pi q^{volume(pi)}` modulo `q^order`, by transfer operators.
///
/// `steps` is the number of diagonals grown on each side of the main one and
/// defaults to `order`: a plane partition with a nonempty slice at distance
/// `d` from the main diagonal has volume at least `d + 1`.
///
/// The peak slice is weighted exactly once: the rising phase applies
/// `Γ-` then `q^{L0}` `steps` times, the falling phase applies `Γ+` then
/// `q^{L0}` `steps - 1` times, and one last `Γ+` must land on `∅`.
pub fn transfer_partition_function(order: usize, steps: Option<usize>, prune: Prune) -> QSeries {
    let steps = steps.unwrap_or(order);
    let mut state = FockState::vacuum(order);
    if order == 0 {
        return state.inner_vacuum();
    }
    for _ in 0..steps {
        state = raise_and_weigh(&state, prune);
    }
    for _ in 1..steps {
        state = lower_and_weigh(&state, prune);
    }
    if steps > 0 {
        state = state.apply_gamma_plus();
    }
    state.inner_vacuum()
}

/// `⟨lambda| Γ-(c_k) ... Γ-(c_1) |mu⟩`: the sum over chains
/// `mu = nu_0 ≺ nu_1 ≺ ... ≺ nu_k = lambda` of
/// `q^{sum_i c_i (size(nu_i) - size(nu_{i-1}))}`.
///
/// This is the skew Schur polynomial `s_{lambda/mu}(q^{c_1}, ..., q^{c_k})`.
pub fn gamma_chain_matrix_element(
    lambda: &Partition,
    mu: &Partition,
    weights: &[u64],
    order: usize,
) -> QSeries {
    let mut state = FockState::basis(mu.clone(), order);
    for &w in weights {
        let mut next = FockState::zero(order);
        for (kappa, c) in &state.terms {
            kappa.for_each_above(lambda.size(), |nu| {
                if nu.is_contained_in(lambda) {
                    let shift = w * (nu.size() - kappa.size());
                    if shift < order as u64 {
                        next.add_term(nu, c, shift as usize);
                    }
                }
            });
        }
        state = next;
    }
    state.coefficient(lambda)
}

/// Matrix of `Γ+` (`raising = false`) or `Γ-` (`raising = true`) on the basis
/// `basis`: entry `[row][col]` is the coefficient of `|basis[row]⟩` in
/// `Γ |basis[col]⟩`. Diagrams outside `basis` are ignored.
pub fn operator_matrix(basis: &[Partition], raising: bool) -> Vec<Vec<BigInt>> {
    let max_size = basis.iter().map(Partition::size).max().unwrap_or(0);
    let order = max_size as usize + 1;
    let columns: Vec<FockState> = basis
        .iter()
        .map(|mu| {
            let s = FockState::basis(mu.clone(), order);
            if raising {
                s.apply_gamma_minus()
            } else {
                s.apply_gamma_plus()
            }
        })
        .collect();
    basis
        .iter()
        .map(|row| columns.iter().map(|col| col.coefficient(row).coeff(0)).collect())
        .collect()
}
