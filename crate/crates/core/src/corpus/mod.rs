//! Built-in example semigroups and the small-order enumerator.
//!
//! Every builder puts zero at index 0 and one at index 1.

mod enumerate;
mod facts;

pub use facts::Fact;
pub use enumerate::{
    enumerate_monoids_with_zero, enumerate_to_vec, EnumeratedSemigroup, EnumerationRecord,
    MAX_ENUMERATION_ORDER,
};

use crate::classify::is_right_chain;
use crate::error::{Error, Result};
use crate::kernel::Semigroup;

/// A named corpus semigroup with display names for its elements.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub semigroup: Semigroup,
    pub names: Vec<String>,
    pub expected: Vec<Fact>,
    /// Known differences between a literal evaluation and how the
    /// example is usually displayed.
    pub notes: Vec<&'static str>,
}

/// `{0, 1}` with `1·1 = 1`.
pub fn minimal_monoid() -> Semigroup {
    Semigroup::new(&[vec![0, 0], vec![0, 1]], 1, 0).expect("minimal monoid")
}

fn from_mul(n: usize, mul: impl Fn(usize, usize) -> usize) -> Semigroup {
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(mul(i, j));
        }
    }
    Semigroup::from_flat(n, table, 1, 0).expect("corpus construction is a monoid with zero")
}

/// `{0, 1, x, .., x^N}` with `x^{N+1} = 0`; `x^k` is index `k + 1`.
pub fn build_chain_x(n_pow: usize) -> Semigroup {
    assert!(n_pow >= 1, "chain_x needs N >= 1");
    let deg = |a: usize| a - 1;
    from_mul(n_pow + 2, |a, b| match (a, b) {
        (0, _) | (_, 0) => 0,
        _ => {
            let d = deg(a) + deg(b);
            if d > n_pow {
                0
            } else {
                d + 1
            }
        }
    })
}

/// `{0, 1, e, f, ef, x, .., x^N}`: `e`, `f` commuting idempotents that fix
/// every power of `x` on both sides, and `x^{N+1} = 0`. Index layout:
/// `e = 2`, `f = 3`, `ef = 4`, `x^k = 4 + k`.
pub fn build_ef(n_pow: usize) -> Semigroup {
    assert!(n_pow >= 2, "ef needs N >= 2");
    // idempotent part as bit flags over {e, f}: 1 = 0b00, e = 0b01, f = 0b10, ef = 0b11
    let flags = |a: usize| match a {
        1 => Some(0b00),
        2 => Some(0b01),
        3 => Some(0b10),
        4 => Some(0b11),
        _ => None,
    };
    let from_flags = |m: usize| [1, 2, 3, 4][m];
    from_mul(n_pow + 5, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        match (flags(a), flags(b)) {
            (Some(p), Some(q)) => from_flags(p | q),
            (Some(_), None) => b,
            (None, Some(_)) => a,
            (None, None) => {
                let d = (a - 4) + (b - 4);
                if d > n_pow {
                    0
                } else {
                    d + 4
                }
            }
        }
    })
}

/// `{0, 1, x_1, .., x_n}` with `x_i x_j = x_min(i,j)`; `x_i` is index `i + 1`.
pub fn build_min_chain(n: usize) -> Semigroup {
    assert!(n >= 1, "min_chain needs n >= 1");
    from_mul(n + 2, |a, b| match (a, b) {
        (0, _) | (_, 0) => 0,
        (1, c) | (c, 1) => c,
        _ => a.min(b),
    })
}

/// `{0, 1, x_1, .., x_n}` with `x_i x_j = δ_ij x_j`; `x_i` is index `i + 1`.
pub fn build_delta(n: usize) -> Semigroup {
    assert!(n >= 1, "delta needs n >= 1");
    from_mul(n + 2, |a, b| match (a, b) {
        (0, _) | (_, 0) => 0,
        (1, c) | (c, 1) => c,
        _ if a == b => a,
        _ => 0,
    })
}

/// `H ∪ {e, f, ef}` for a right chain semigroup `H`, where `e`, `f` are
/// commuting idempotents acting as identity on `H - {1}` from both sides.
/// The new elements get indices `|H|`, `|H| + 1`, `|H| + 2`.
pub fn build_adjoined(h: &Semigroup) -> Result<Semigroup> {
    if !is_right_chain(h) {
        return Err(Error::NotRightChain);
    }
    let m = h.order();
    let one = h.one();
    let flags = |a: usize| match a {
        _ if a == one => Some(0b00),
        _ if a == m => Some(0b01),
        _ if a == m + 1 => Some(0b10),
        _ if a == m + 2 => Some(0b11),
        _ => None,
    };
    let from_flags = |f: usize| [one, m, m + 1, m + 2][f];
    let n = m + 3;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(match (flags(a), flags(b)) {
                (Some(p), Some(q)) => from_flags(p | q),
                (Some(_), None) => b,
                (None, Some(_)) => a,
                (None, None) => h.mul(a, b),
            });
        }
    }
    Semigroup::from_flat(n, table, one, h.zero())
}

fn power_name(base: &str, k: usize) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

fn chain_x_names(n_pow: usize) -> Vec<String> {
    let mut v = vec!["0".to_string(), "1".to_string()];
    v.extend((1..=n_pow).map(|k| power_name("x", k)));
    v
}

fn ef_names(n_pow: usize) -> Vec<String> {
    let mut v: Vec<String> = ["0", "1", "e", "f", "ef"].iter().map(|s| s.to_string()).collect();
    v.extend((1..=n_pow).map(|k| power_name("x", k)));
    v
}

fn indexed_names(n: usize) -> Vec<String> {
    let mut v = vec!["0".to_string(), "1".to_string()];
    v.extend((1..=n).map(|i| format!("x{i}")));
    v
}

const EF_SATURATION_NOTE: &str = "with T = S - P, (eS)T⁻¹ = {s : st ∈ eS for some t ∈ T} is all of S \
(f·e = ef ∈ eS and 1·e = e ∈ eS); the set {0, e, ef, x, .., x^4} listed for it is eS itself, \
the saturation by T = {1}";

/// The named corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "minimal",
            description: "two-element monoid {0, 1}",
            semigroup: minimal_monoid(),
            names: vec!["0".into(), "1".into()],
            expected: facts::minimal(),
            notes: vec![],
        },
        CorpusEntry {
            name: "chain_x3",
            description: "power chain {0, 1, x, x^2, x^3}, x^4 = 0",
            semigroup: build_chain_x(3),
            names: chain_x_names(3),
            expected: facts::chain_x(),
            notes: vec![],
        },
        CorpusEntry {
            name: "chain_x4",
            description: "power chain {0, 1, x, .., x^4}, x^5 = 0",
            semigroup: build_chain_x(4),
            names: chain_x_names(4),
            expected: facts::chain_x(),
            notes: vec![],
        },
        CorpusEntry {
            name: "ef4",
            description: "{0, 1, e, f, ef, x, .., x^4}: idempotents e, f fixing powers of x, x^5 = 0",
            semigroup: build_ef(4),
            names: ef_names(4),
            expected: facts::ef(),
            notes: vec![EF_SATURATION_NOTE],
        },
        CorpusEntry {
            name: "adjoined_chain_x3",
            description: "chain_x3 with commuting idempotents e, f, ef adjoined",
            semigroup: build_adjoined(&build_chain_x(3)).expect("chain_x3 is a right chain"),
            names: {
                let mut v = chain_x_names(3);
                v.extend(["e", "f", "ef"].iter().map(|s| s.to_string()));
                v
            },
            expected: facts::adjoined(),
            notes: vec![],
        },
        CorpusEntry {
            name: "min_chain3",
            description: "{0, 1, x1, x2, x3} with x_i x_j = x_min(i,j)",
            semigroup: build_min_chain(3),
            names: indexed_names(3),
            expected: facts::min_chain(),
            notes: vec![],
        },
        CorpusEntry {
            name: "min_chain4",
            description: "{0, 1, x1, .., x4} with x_i x_j = x_min(i,j)",
            semigroup: build_min_chain(4),
            names: indexed_names(4),
            expected: facts::min_chain(),
            notes: vec![],
        },
        CorpusEntry {
            name: "delta2",
            description: "{0, 1, x1, x2} with x_i x_j = δ_ij x_j",
            semigroup: build_delta(2),
            names: indexed_names(2),
            expected: facts::delta(),
            notes: vec![],
        },
        CorpusEntry {
            name: "delta3",
            description: "{0, 1, x1, x2, x3} with x_i x_j = δ_ij x_j",
            semigroup: build_delta(3),
            names: indexed_names(3),
            expected: facts::delta(),
            notes: vec![],
        },
    ]
}

pub fn corpus_entry(name: &str) -> Result<CorpusEntry> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCorpus(name.to_string()))
}

impl CorpusEntry {
    /// Cayley text with the entry name and element names as comments.
    pub fn dump(&self) -> String {
        format!(
            "# {}: {}\n# names: {}\n{}",
            self.name,
            self.description,
            self.names.join(" "),
            self.semigroup.to_cayley_text()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_prime_variant, PrimenessKind};
    use crate::ideals::{principal, IdealKind};

    #[test]
    fn corpus_orders() {
        assert_eq!(build_ef(4).order(), 9);
        assert_eq!(build_chain_x(4).order(), 6);
        assert_eq!(build_min_chain(3).order(), 5);
        assert_eq!(build_delta(3).order(), 5);
        for e in corpus() {
            assert_eq!(e.names.len(), e.semigroup.order(), "{}", e.name);
        }
    }

    #[test]
    fn ef_relations() {
        let s = build_ef(4);
        let (e, f, ef, x) = (2, 3, 4, 5);
        for a in [e, f, ef] {
            assert_eq!(s.mul(a, x), x);
            assert_eq!(s.mul(x, a), x);
            assert!(s.is_idempotent(a));
        }
        assert_eq!(s.mul(e, f), s.mul(f, e));
        assert_eq!(s.mul(6, 7), 0); // x^2 x^3 = x^5 = 0
        let p = [0, 5, 6, 7, 8].into_iter().collect();
        assert!(is_prime_variant(&s, p, PrimenessKind::CompletelyPrime, IdealKind::TwoSided).unwrap());
    }

    #[test]
    fn adjoined_matches_ef() {
        for n in 2..=6 {
            let a = build_adjoined(&build_chain_x(n)).unwrap();
            assert_eq!(a.canonical_form(), build_ef(n).canonical_form(), "N = {n}");
        }
        assert_eq!(build_adjoined(&build_delta(2)), Err(Error::NotRightChain));
    }

    #[test]
    fn min_chain_principal_ideals_are_idempotent() {
        let s = build_min_chain(3);
        for i in 2..5 {
            let p = principal(&s, i, IdealKind::TwoSided);
            assert_eq!(crate::ideals::set_product(&s, p, p), p);
        }
    }

    #[test]
    fn expected_facts_hold() {
        for e in corpus() {
            assert!(!e.expected.is_empty(), "{}", e.name);
            for f in &e.expected {
                assert!(f.holds(&e.semigroup), "{}: {}", e.name, f.name);
            }
        }
    }

    #[test]
    fn dump_parses_back() {
        for e in corpus() {
            let back = Semigroup::parse_cayley_text(&e.dump()).unwrap();
            assert_eq!(back, e.semigroup);
        }
        assert!(matches!(corpus_entry("nope"), Err(Error::UnknownCorpus(_))));
    }
}
