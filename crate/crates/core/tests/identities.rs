use macmahon::{
    count_plane_partitions, finite_grid_product, macmahon_product, transfer_partition_function, PlanePartition,
    Prune, SliceSequence,
};
use proptest::prelude::*;

#[test]
fn census_matches_product_through_ten() {
    let product = macmahon_product(11);
    for n in 0..=10 {
        assert_eq!(product.coeff(n), count_plane_partitions(n as u64).into(), "n = {n}");
    }
}

#[test]
fn census_matches_published_sequence() {
    // OEIS A000219
    let published = [1u64, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479, 2485, 4167];
    let census: Vec<u64> = (0..published.len() as u64).map(count_plane_partitions).collect();
    assert_eq!(census, published);
}

#[test]
fn transfer_matches_product_through_twenty_five() {
    for order in 1..=25 {
        assert_eq!(transfer_partition_function(order, None, Prune::Plain), macmahon_product(order), "L = {order}");
    }
}

#[test]
fn transfer_is_step_independent_past_the_order() {
    for order in [5, 9, 12] {
        let base = transfer_partition_function(order, None, Prune::Sharp);
        for steps in order..=order + 5 {
            assert_eq!(transfer_partition_function(order, Some(steps), Prune::Sharp), base);
        }
    }
}

#[test]
fn grid_product_short_of_the_order_differs() {
    // with side T < L the grid misses exponents, so coefficients fall short
    let z = finite_grid_product(3, 8);
    let full = macmahon_product(8);
    assert_ne!(z, full);
    assert_eq!(z.truncate(4), full.truncate(4));
}

/// A weakly decreasing matrix built from arbitrary entries by sorting rows
/// and then columns.
fn plane_partition() -> impl Strategy<Value = PlanePartition> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(rows, cols)| prop::collection::vec(0i64..6, rows * cols).prop_map(move |v| (rows, cols, v)))
        .prop_map(|(_, cols, v)| {
            let mut m: Vec<Vec<i64>> = v.chunks(cols).map(<[i64]>::to_vec).collect();
            for row in &mut m {
                row.sort_unstable_by(|a, b| b.cmp(a));
            }
            for c in 0..cols {
                let mut col: Vec<i64> = m.iter().map(|row| row[c]).collect();
                col.sort_unstable_by(|a, b| b.cmp(a));
                for (row, v) in m.iter_mut().zip(col) {
                    row[c] = v;
                }
            }
            PlanePartition::new(&m).expect("sorted matrix is a plane partition")
        })
}

proptest! {
    #[test]
    fn slicing_round_trips(pi in plane_partition()) {
        let seq = pi.slice();
        prop_assert!(seq.check_interlacing().is_ok());
        prop_assert_eq!(seq.total_size(), pi.volume());
        prop_assert_eq!(seq.unslice().unwrap(), pi.clone());
        let reparsed = SliceSequence::parse(&seq.to_text()).unwrap();
        prop_assert_eq!(reparsed, seq);
        prop_assert_eq!(PlanePartition::parse(&pi.to_text()).unwrap(), pi);
    }
}

#[test]
fn grid_product_counts_plane_partitions_on_a_square_base() {
    // T diagonals each side confine the support to a T x T base at every T
    for order in [6, 10, 14] {
        for side in 1..=order + 2 {
            assert_eq!(
                finite_grid_product(side, order),
                transfer_partition_function(order, Some(side), Prune::Plain),
                "T = {side}, L = {order}"
            );
        }
    }
}
