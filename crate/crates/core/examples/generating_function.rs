//! The plane-partition generating function three ways.
//!
//! cargo run --example generating_function -- 12

use std::time::Instant;

use macmahon::{count_plane_partitions, macmahon_product, transfer_partition_function, Prune, QSeries};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);

    let start = Instant::now();
    let product = macmahon_product(order);
    println!("product   ({:>9.2?}): {product}", start.elapsed());

    let start = Instant::now();
    let transfer = transfer_partition_function(order, None, Prune::Sharp);
    println!("transfer  ({:>9.2?}): {transfer}", start.elapsed());

    if order <= 15 {
        let start = Instant::now();
        let census = QSeries::from_coeffs((0..order as u64).map(count_plane_partitions), order);
        println!("census    ({:>9.2?}): {census}", start.elapsed());
        assert_eq!(census, product);
    } else {
        println!("census    skipped above q^14");
    }
    assert_eq!(transfer, product);
}
