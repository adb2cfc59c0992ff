//! Cutting a plane partition into diagonal slices and gluing it back.

use macmahon::{interlaces, PlanePartition};

fn main() -> macmahon::Result<()> {
    let pi = PlanePartition::parse("5 3 2 1\n4 2 1\n2 1 1\n1 1\n")?;
    println!("plane partition {pi}, volume {}", pi.volume());

    let slices = pi.slice();
    for (t, s) in slices.iter() {
        println!("  t = {t:>2}: {s}");
    }

    // rises by interlacing up to the main diagonal, falls after it
    let parts = slices.slices();
    let mid = parts.len() / 2;
    for w in parts[..=mid].windows(2) {
        assert!(interlaces(&w[1], &w[0]));
    }
    for w in parts[mid..].windows(2) {
        assert!(interlaces(&w[0], &w[1]));
    }

    let back = slices.unslice()?;
    println!("reassembled {back}");
    assert_eq!(back, pi);
    Ok(())
}
