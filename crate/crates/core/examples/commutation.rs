//! Matrix elements of the commutation relation at exact rational points.
//!
//! cargo run --example commutation -- 2/3 1/4

use macmahon::commutation::lhs_truncated;
use macmahon::{commutation_check_exact, enumerate_partitions, Rational};

fn main() -> macmahon::Result<()> {
    let mut args = std::env::args().skip(1);
    let x: Rational = args.next().as_deref().unwrap_or("1/2").parse()?;
    let y: Rational = args.next().as_deref().unwrap_or("1/3").parse()?;
    println!("x = {x}, y = {y}");

    let all = enumerate_partitions(2);
    for mu in &all {
        for mu1 in &all {
            let rep = commutation_check_exact(mu, mu1, &x, &y)?;
            println!("<{mu1}| . |{mu}>: {rep}");
            assert!(rep.holds);
        }
    }

    let (mu, mu1) = (&all[3], &all[1]);
    let (partial, bound) = lhs_truncated(mu, mu1, &x, &y, 40)?;
    let closed = commutation_check_exact(mu, mu1, &x, &y)?.lhs;
    println!("closed form {closed}");
    println!("|closed - partial sum to size 40| = {} <= {}", (&closed - &partial).abs(), bound);
    Ok(())
}
