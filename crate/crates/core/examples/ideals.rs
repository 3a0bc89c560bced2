//! Enumerates the right and two-sided ideals of a small monoid and
//! prints principal ideals, powers and annihilators.

use waist::corpus::build_ef;
use waist::ideals::{enumerate_ideals, intersect_powers, power_chain, principal, right_annihilator};
use waist::{IdealKind, DEFAULT_CAP};

fn main() {
    let s = build_ef(4);
    for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
        let fam = enumerate_ideals(&s, kind, DEFAULT_CAP);
        println!("{} ideals: {}", kind.name(), fam.len());
    }
    for a in s.elements() {
        println!(
            "a = {a}: aS = {:?}, SaS = {:?}",
            principal(&s, a, IdealKind::Right),
            principal(&s, a, IdealKind::TwoSided)
        );
    }
    let p = principal(&s, 5, IdealKind::TwoSided);
    println!("powers of {p:?}: {:?}", power_chain(&s, p));
    println!("intersection of powers: {:?}", intersect_powers(&s, p));
    println!("right annihilator of {p:?}: {:?}", right_annihilator(&s, p));
}
