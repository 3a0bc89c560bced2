//! Runs every check on the corpus and on all monoids with zero up to a
//! given order, printing the discrepancies found.

use waist::corpus::corpus;
use waist::verify::{registry, run_suite, run_suite_enumerated, Status};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    println!("{} checks", registry().len());
    for e in corpus() {
        let results = run_suite(&e.semigroup);
        let count = |st| results.iter().filter(|(_, v)| v.status == st).count();
        println!(
            "{:18} holds {:2}  vacuous {:2}  discrepancies {}",
            e.name,
            count(Status::Holds),
            count(Status::Vacuous),
            count(Status::Discrepancy)
        );
        for (id, v) in results.iter().filter(|(_, v)| v.is_discrepancy()) {
            println!("  {id}: {:?}", v.witness);
        }
    }
    let tally = run_suite_enumerated(2..=max);
    println!(
        "orders 2..={max}: {} monoids, holds {}, vacuous {}, discrepancies {}",
        tally.semigroups,
        tally.holds,
        tally.vacuous,
        tally.discrepancies.len()
    );
    for (name, id, v) in &tally.discrepancies {
        println!("  {name} {id}: {:?}", v.witness);
    }
}
