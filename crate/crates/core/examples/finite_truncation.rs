//! Finite grids of factors converge to the full product modulo q^L.

use macmahon::{finite_grid_product, macmahon_product, transfer_partition_function, Prune};

fn main() {
    let order = 10;
    let target = macmahon_product(order);
    println!("target     : {target}");
    for side in [1, 2, 4, 6, 8, 10, 12] {
        let grid = finite_grid_product(side, order);
        let z = transfer_partition_function(order, Some(side), Prune::Plain);
        println!(
            "T = {side:>2} grid : {grid}{}\n       ops  : {z}",
            if grid == target { "  (stable)" } else { "" }
        );
        assert_eq!(grid, z);
    }
}
