//! Builds a monoid, round-trips it through the Cayley text format and
//! shows what a broken table reports.

use waist::corpus::build_ef;
use waist::Semigroup;

fn main() -> waist::Result<()> {
    let s = build_ef(3);
    let text = s.to_cayley_text();
    print!("{text}");

    let back = Semigroup::parse_cayley_text(&text)?;
    assert_eq!(back, s);
    println!("canonical hash {}", s.fingerprint());

    let relabelled = s.relabel(&[0, 1, 3, 2, 4, 5, 6, 7])?;
    println!("swapping e and f keeps the hash: {}", relabelled.fingerprint() == s.fingerprint());

    // a·a = b, a·b = 0, b·a = a: (a·a)·a = a but a·(a·a) = 0
    let broken = "4 1 0\n0 0 0 0\n0 1 2 3\n0 2 3 0\n0 3 2 0\n";
    println!("{}", Semigroup::parse_cayley_text(broken).unwrap_err());
    // zero row written with a 2
    let bad = "3 1 0\n0 0 0\n0 1 2\n2 2 1\n";
    println!("{}", Semigroup::parse_cayley_text(bad).unwrap_err());
    let short = "3 1 0\n0 0 0\n0 1\n";
    println!("{}", Semigroup::parse_cayley_text(short).unwrap_err());
    Ok(())
}
