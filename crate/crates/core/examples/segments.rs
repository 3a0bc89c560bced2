//! Prime segments of the corpus and their classification, plus the
//! power-tail ideal of an idempotent.

use waist::corpus::{build_ef, corpus};
use waist::segments::{classify_segment, prime_segments, tail_report};
use waist::{ElemSet, DEFAULT_CAP};

fn main() -> waist::Result<()> {
    for e in corpus() {
        println!("{}", e.name);
        for seg in prime_segments(&e.semigroup, DEFAULT_CAP)? {
            let r = classify_segment(&e.semigroup, &seg, DEFAULT_CAP)?;
            println!("  {:?} ⊂ {:?}: {}", seg.p2, seg.p1, r.class.name());
        }
    }
    let s = build_ef(4);
    let p: ElemSet = [0, 5, 6, 7, 8].into_iter().collect();
    println!("{:?}", tail_report(&s, 4, Some(p)));
    Ok(())
}
