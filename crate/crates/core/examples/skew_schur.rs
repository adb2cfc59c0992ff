//! Products of raising operators have skew Schur polynomials as matrix
//! elements; compare against a direct count of semistandard tableaux.

use macmahon::{count_skew_ssyt_weighted, gamma_chain_matrix_element, Partition};

fn main() -> macmahon::Result<()> {
    let order = 16;
    let cases = [
        (vec![3, 2], vec![], vec![1, 2, 3]),
        (vec![3, 2, 1], vec![1], vec![0, 1, 2]),
        (vec![2, 2], vec![1], vec![1, 1]),
        (vec![1, 1], vec![], vec![5]),
    ];
    for (outer, inner, weights) in cases {
        let lambda = Partition::new(&outer)?;
        let mu = Partition::new(&inner)?;
        let chain = gamma_chain_matrix_element(&lambda, &mu, &weights, order);
        let tableaux = count_skew_ssyt_weighted(&lambda, &mu, weights.len(), &weights, order)?;
        println!("s_{lambda}/{mu} at q^{weights:?}: {chain}");
        assert_eq!(chain, tableaux);
    }
    Ok(())
}
