//! Counts monoids with zero by order and prints the order-3 ones as
//! NDJSON records.

use waist::corpus::{enumerate_monoids_with_zero, enumerate_to_vec};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for n in 2..=max {
        println!("order {n}: {}", enumerate_monoids_with_zero(n, |_| {}));
    }
    for e in enumerate_to_vec(3) {
        println!("{}", serde_json::to_string(&e.record()).unwrap());
    }
}
