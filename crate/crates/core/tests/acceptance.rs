//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::time::{Duration, Instant};

use macmahon::cli::{cmd_count, CountOptions};
use macmahon::commutation::{commutation_check_exact, lhs_closed_form, lhs_truncated};
use macmahon::partition::partitions_of;
use macmahon::{
    count_plane_partitions, count_skew_ssyt_weighted, enumerate_partitions, enumerate_plane_partitions,
    finite_grid_product, gamma_chain_matrix_element, macmahon_product, transfer_partition_function, Partition,
    Prune, QSeries, Rational,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration, outcome: Outcome) -> Outcome {
    if outcome.ok && elapsed >= limit {
        return fail(format!("{} but took {elapsed:?} (limit {limit:?})", outcome.detail));
    }
    outcome
}

/// Coefficients 1, 1, 3, 6 from all three methods in under a second.
fn theorem_reproduction() -> Outcome {
    let start = Instant::now();
    let report = match cmd_count(&CountOptions::new(4)) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let elapsed = start.elapsed();
    let expected = json!(["1", "1", "3", "6"]);
    for m in ["product", "transfer", "bruteforce"] {
        if report.results["coefficients"][m] != expected {
            return fail(format!("{m} gave {}", report.results["coefficients"][m]));
        }
    }
    if report.results["agreement"] != json!("pass") {
        return fail("agreement verdict not pass");
    }
    within(elapsed, Duration::from_secs(1), pass(format!("[1, 1, 3, 6] x3 in {elapsed:?}")))
}

/// Census, transfer and product agree on volumes 0..=12; transfer and product agree mod q^25.
fn three_way_agreement() -> Outcome {
    let start = Instant::now();
    let census: Vec<BigInt> = (0..=12).map(|n| BigInt::from(count_plane_partitions(n))).collect();
    let product13 = macmahon_product(13);
    let transfer13 = transfer_partition_function(13, None, Prune::Plain);
    if product13.coeffs() != census.as_slice() || transfer13.coeffs() != census.as_slice() {
        return fail(format!("census {census:?} product {product13} transfer {transfer13}"));
    }
    let product25 = macmahon_product(25);
    let transfer25 = transfer_partition_function(25, None, Prune::Plain);
    if product25.coeffs() != transfer25.coeffs() {
        return fail(format!("mod q^25: product {product25} transfer {transfer25}"));
    }
    let elapsed = start.elapsed();
    within(
        elapsed,
        Duration::from_secs(60),
        pass(format!("q^0..q^12 three ways, q^0..q^24 two ways, {elapsed:?}")),
    )
}

/// Every plane partition of volume <= 8 survives slice/unslice.
fn slicing_bijection() -> Outcome {
    let mut checked = 0;
    for v in 0..=8 {
        for pi in enumerate_plane_partitions(v) {
            let seq = pi.slice();
            if let Err(e) = seq.check_interlacing() {
                return fail(format!("{pi}: {e}"));
            }
            if seq.total_size() != pi.volume() {
                return fail(format!("{pi}: slice sizes {} != volume {}", seq.total_size(), pi.volume()));
            }
            match seq.unslice() {
                Ok(back) if back == pi => {}
                other => return fail(format!("{pi} -> {seq} -> {other:?}")),
            }
            checked += 1;
        }
    }
    if checked != 342 {
        return fail(format!("census has {checked} plane partitions, expected 342"));
    }
    pass(format!("{checked} plane partitions, zero failures"))
}

/// Largest partition size in the commutation sweep.
const COMMUTATION_MAX_SIZE: u64 = 4;
/// A wider sweep so that more than 625 pairs are covered.
const COMMUTATION_WIDE_SIZE: u64 = 6;

fn commutation_relation() -> Outcome {
    let r = |n: i64, d: i64| Rational::new(n, d).unwrap();
    let points = [(r(1, 2), r(1, 3)), (r(2, 3), r(1, 4)), (r(-1, 2), r(1, 3))];
    let mut pairs = 0;
    for max_size in [COMMUTATION_MAX_SIZE, COMMUTATION_WIDE_SIZE] {
        let all = enumerate_partitions(max_size);
        for (x, y) in &points {
            for mu in &all {
                for mu1 in &all {
                    let rep = match commutation_check_exact(mu, mu1, x, y) {
                        Ok(rep) => rep,
                        Err(e) => return fail(e.to_string()),
                    };
                    if !rep.holds {
                        return fail(format!("mu={mu} mu1={mu1} x={x} y={y}: {rep}"));
                    }
                    if max_size == COMMUTATION_MAX_SIZE {
                        let closed = lhs_closed_form(mu, mu1, x, y).unwrap();
                        let (partial, bound) = lhs_truncated(mu, mu1, x, y, 60).unwrap();
                        if (&closed - &partial).abs() > bound {
                            return fail(format!("mu={mu} mu1={mu1}: closed {closed} partial {partial}"));
                        }
                    }
                }
            }
        }
        pairs += all.len() * all.len();
    }
    let narrow = enumerate_partitions(COMMUTATION_MAX_SIZE).len();
    let wide = enumerate_partitions(COMMUTATION_WIDE_SIZE).len();
    pass(format!(
        "{pairs} pairs x 3 points exact ({narrow}^2 with tail-bounded brute force, {wide}^2 relation only)"
    ))
}

fn finite_truncation() -> Outcome {
    for order in 1..=15 {
        let product = macmahon_product(order);
        for steps in [order, order + 1, order + 2, 2 * order] {
            let z = transfer_partition_function(order, Some(steps), Prune::Plain);
            let grid = finite_grid_product(steps, order);
            if z != product || grid != product {
                return fail(format!("L={order} T={steps}: transfer {z}, grid {grid}, product {product}"));
            }
        }
    }
    pass("L = 1..15, T in {L, L+1, L+2, 2L}")
}

fn skew_schur_elements() -> Outcome {
    let bound = Partition::from_parts(vec![3, 3, 3]).unwrap();
    let shapes: Vec<Partition> = (0..=9).flat_map(partitions_of).filter(|p| p.is_contained_in(&bound)).collect();
    let mut weights: Vec<Vec<u64>> = vec![vec![]];
    let mut frontier: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|s| (0..=3).map(move |e| [s.clone(), vec![e]].concat()))
            .collect();
        weights.extend(frontier.iter().cloned());
    }
    let mut checked = 0;
    for lambda in &shapes {
        for mu in shapes.iter().filter(|m| m.is_contained_in(lambda)) {
            for c in &weights {
                let chain = gamma_chain_matrix_element(lambda, mu, c, 32);
                let tableaux = count_skew_ssyt_weighted(lambda, mu, c.len(), c, 32).unwrap();
                if chain != tableaux {
                    return fail(format!("lambda={lambda} mu={mu} c={c:?}: {chain} vs {tableaux}"));
                }
                checked += 1;
            }
        }
    }
    pass(format!("{checked} (lambda, mu, c) triples, zero discrepancies"))
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> QSeries {
    QSeries::from_coeffs((0..order).map(|_| rng.gen_range(-10_000i64..=10_000)), order)
}

fn series_ring() -> Outcome {
    const ORDER: usize = 32;
    const CASES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61636d);
    let zero = QSeries::zero(ORDER);
    let one = QSeries::one(ORDER);
    for case in 0..CASES {
        let (a, b, c) = (random_series(&mut rng, ORDER), random_series(&mut rng, ORDER), random_series(&mut rng, ORDER));
        let checks = [
            ("add assoc", &(&a + &b) + &c == &a + &(&b + &c)),
            ("add comm", &a + &b == &b + &a),
            ("mul assoc", &(&a * &b) * &c == &a * &(&b * &c)),
            ("mul comm", &a * &b == &b * &a),
            ("distrib", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("zero", &a + &zero == a),
            ("one", &a * &one == a),
            ("neg", (&a + &-&a).is_zero()),
        ];
        if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
            return fail(format!("case {case}: {name}"));
        }
        let mut unit = a.clone();
        let lead = if rng.gen_bool(0.5) { 1 } else { -1 };
        unit = &(&unit - &QSeries::monomial(a.coeff(0), 0, ORDER)) + &QSeries::monomial(lead, 0, ORDER);
        let inv = match unit.inverse() {
            Ok(inv) => inv,
            Err(e) => return fail(format!("case {case}: {e}")),
        };
        if &unit * &inv != one || &inv * &unit != one {
            return fail(format!("case {case}: f * f^-1 != 1"));
        }
    }
    pass(format!("{CASES} ring-axiom cases and {CASES} inversions at L = {ORDER}"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 theorem reproduction", theorem_reproduction),
        ("2 three-way agreement", three_way_agreement),
        ("3 slicing bijection", slicing_bijection),
        ("4 commutation relation", commutation_relation),
        ("5 finite truncation", finite_truncation),
        ("6 skew schur matrix elements", skew_schur_elements),
        ("7 series ring properties", series_ring),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.2?})", outcome.detail, start.elapsed());
        if !outcome.ok {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
