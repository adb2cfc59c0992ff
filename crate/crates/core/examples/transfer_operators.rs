//! The raising and lowering operators on small states, and the
//! partition function assembled from them one step at a time.

use macmahon::fock::operator_matrix;
use macmahon::{enumerate_partitions, macmahon_product, FockState, Partition};

fn show(label: &str, s: &FockState) {
    let terms: Vec<String> = s.terms().map(|(mu, c)| format!("({c})|{mu}>")).collect();
    println!("{label}: {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}

fn main() -> macmahon::Result<()> {
    let order = 5;
    let mu = Partition::new(&[2, 1])?;
    let s = FockState::basis(mu, order);
    show("|(2,1)>", &s);
    show("Γ+ |(2,1)>", &s.apply_gamma_plus());
    show("Γ- |(2,1)>", &s.apply_gamma_minus());
    show("q^L0 |(2,1)>", &s.apply_weight());

    let basis = enumerate_partitions(3);
    let plus = operator_matrix(&basis, false);
    let minus = operator_matrix(&basis, true);
    println!("Γ+ on partitions of size <= 3 (rows are targets):");
    for (row, mu) in plus.iter().zip(&basis) {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("  {mu:>7} {}", cells.join(" "));
    }
    let transposed = (0..basis.len()).all(|i| (0..basis.len()).all(|j| minus[i][j] == plus[j][i]));
    println!("Γ- is the transpose of Γ+: {transposed}");

    // Grow diagonal slices up to the peak, then shrink back to the vacuum.
    let order = 8;
    let mut state = FockState::vacuum(order);
    for _ in 0..order {
        state = state.apply_gamma_minus().apply_weight();
    }
    println!("after the rising phase: {} diagrams", state.len());
    for _ in 1..order {
        state = state.apply_gamma_plus().apply_weight();
    }
    let z = state.apply_gamma_plus().inner_vacuum();
    println!("Z = {z}");
    assert_eq!(z, macmahon_product(order));
    Ok(())
}
