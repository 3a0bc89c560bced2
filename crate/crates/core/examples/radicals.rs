//! Prints every radical of each corpus entry.

use waist::classify::{is_right_chain, radicals};
use waist::corpus::corpus;
use waist::DEFAULT_CAP;

fn main() -> waist::Result<()> {
    for e in corpus() {
        let r = radicals(&e.semigroup, DEFAULT_CAP)?;
        println!("{} (right chain: {})", e.name, is_right_chain(&e.semigroup));
        println!("  beta {:?}  beta_right {:?}", r.beta, r.beta_right);
        println!("  N {:?}  Nil {:?}  A {:?}  T {:?}", r.n, r.nil, r.a, r.t);
        println!("  C {:?}  J {:?}", r.c, r.j);
        if r.flags != Default::default() {
            println!("  flags {:?}", r.flags);
        }
    }
    Ok(())
}
