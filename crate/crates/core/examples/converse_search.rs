//! Looks for Archimedean segments over left-cancellative comparable
//! monoids that are not locally invariant.

use waist::verify::search_lemma410_converse;

fn main() {
    let bound: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let found = search_lemma410_converse(bound, |c| {
        print!("{}", c.semigroup.to_cayley_text());
        println!("segment {:?} ⊂ {:?}\n", c.segment.p2, c.segment.p1);
    });
    println!("{} candidates up to order {bound}", found.len());
    assert!(found.iter().all(|c| c.revalidate()));
}
