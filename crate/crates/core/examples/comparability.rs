//! Right comparability with respect to completely prime right ideals:
//! saturations of principal right ideals, the five equivalent forms and
//! the classes of equal translates.

use waist::corpus::{build_delta, build_ef};
use waist::localize::{equivalence_class, is_right_p_comparable, principal_saturations};
use waist::ElemSet;

fn main() -> waist::Result<()> {
    let s = build_ef(4);
    let p: ElemSet = [0, 5, 6, 7, 8].into_iter().collect();
    let r = is_right_p_comparable(&s, p)?;
    println!("ef4, P = {p:?}: comparable {} forms {:?}", r.holds, r.condition_results);
    for (a, sat) in principal_saturations(&s, p).iter().enumerate() {
        println!("  a = {a}: aS = {:?}  (aS)T⁻¹ = {sat:?}  [a] = {:?}", s.right_principal(a), equivalence_class(&s, a, p));
    }

    let d = build_delta(3);
    for i in 2..5 {
        let p = ElemSet::from_iter([1, i]).complement(d.order());
        let r = is_right_p_comparable(&d, p)?;
        println!("delta3, P = {p:?}: comparable {} witness {:?}", r.holds, r.witness);
    }
    Ok(())
}
