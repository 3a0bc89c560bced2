//! Finite monoids with zero given by a Cayley table.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::elemset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Index of an element in its semigroup's table.
pub type Element = usize;

/// A finite semigroup with identity `one` and zero `zero`, `one != zero`.
///
/// The table is validated on construction and never mutated afterwards.
/// Principal one-sided and two-sided ideals of every element are cached
/// because nearly every query in the crate starts from them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    n: usize,
    table: Vec<usize>,
    one: Element,
    zero: Element,
    right: Vec<ElemSet>,
    left: Vec<ElemSet>,
    two_sided: Vec<ElemSet>,
}

impl std::fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Semigroup")
            .field("n", &self.n)
            .field("one", &self.one)
            .field("zero", &self.zero)
            .field("table", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

impl Semigroup {
    /// Validates a table given as rows, `rows[i][j] = i * j`.
    pub fn new(rows: &[Vec<usize>], one: Element, zero: Element) -> Result<Self> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadShape {
                    expected: n * n,
                    got: (i * n) + row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat, one, zero)
    }

    /// Validates a row-major table of `n * n` entries.
    pub fn from_flat(n: usize, table: Vec<usize>, one: Element, zero: Element) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(Error::BadOrder(n));
        }
        if table.len() != n * n {
            return Err(Error::BadShape {
                expected: n * n,
                got: table.len(),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
            });
        }
        for e in [one, zero] {
            if e >= n {
                return Err(Error::ElementOutOfRange(e));
            }
        }
        if one == zero {
            return Err(Error::OneEqualsZero);
        }
        let at = |i: usize, j: usize| table[i * n + j];
        if let Some(i) = (0..n).find(|&i| at(one, i) != i || at(i, one) != i) {
            return Err(Error::BadIdentity(i));
        }
        if let Some(i) = (0..n).find(|&i| at(zero, i) != zero || at(i, zero) != zero) {
            return Err(Error::BadZero(i));
        }
        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(Self::assemble(n, table, one, zero))
    }

    fn assemble(n: usize, table: Vec<usize>, one: Element, zero: Element) -> Self {
        let right: Vec<ElemSet> = (0..n)
            .map(|a| table[a * n..(a + 1) * n].iter().copied().collect())
            .collect();
        let left: Vec<ElemSet> = (0..n).map(|a| (0..n).map(|s| table[s * n + a]).collect()).collect();
        let two_sided = (0..n)
            .map(|a| {
                left[a]
                    .iter()
                    .fold(ElemSet::EMPTY, |acc, sa| acc | right[sa])
            })
            .collect();
        Semigroup {
            n,
            table,
            one,
            zero,
            right,
            left,
            two_sided,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    /// The whole carrier as a set.
    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn zero_set(&self) -> ElemSet {
        ElemSet::singleton(self.zero)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.n + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.table.chunks(self.n)
    }

    /// `aS`.
    pub fn right_principal(&self, a: Element) -> ElemSet {
        self.right[a]
    }

    /// `Sa`.
    pub fn left_principal(&self, a: Element) -> ElemSet {
        self.left[a]
    }

    /// `SaS`.
    pub fn two_sided_principal(&self, a: Element) -> ElemSet {
        self.two_sided[a]
    }

    /// `aX = {a x : x in X}`.
    pub fn left_translate(&self, a: Element, x: ElemSet) -> ElemSet {
        x.iter().map(|b| self.mul(a, b)).collect()
    }

    /// `Xa = {x a : x in X}`.
    pub fn right_translate(&self, x: ElemSet, a: Element) -> ElemSet {
        x.iter().map(|b| self.mul(b, a)).collect()
    }

    /// `a^k` for `k >= 1`.
    pub fn power(&self, a: Element, k: usize) -> Element {
        assert!(k >= 1, "exponent must be positive");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    /// Whether some power of `a` is zero. The power sequence of `a` enters
    /// its cycle within `n` steps, so exponents up to `n` suffice.
    pub fn is_nilpotent_element(&self, a: Element) -> bool {
        let mut p = a;
        for _ in 0..self.n {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        p == self.zero
    }

    pub fn is_idempotent(&self, a: Element) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_unit(&self, u: Element) -> bool {
        self.elements()
            .any(|v| self.mul(u, v) == self.one && self.mul(v, u) == self.one)
    }

    /// `U(S)`.
    pub fn units(&self) -> ElemSet {
        self.elements().filter(|&u| self.is_unit(u)).collect()
    }

    /// `J(S) = S - U(S)`.
    pub fn nonunits(&self) -> ElemSet {
        self.units().complement(self.n)
    }

    /// A witness `(a, b, c)` with `ab = ac != 0` and `b != c`, if any.
    pub fn left_cancellation_witness(&self) -> Option<(Element, Element, Element)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                if ab == self.zero {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.mul(a, c) == ab {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// A witness `(a, b, c)` with `ba = ca != 0` and `b != c`, if any.
    pub fn right_cancellation_witness(&self) -> Option<(Element, Element, Element)> {
        for a in self.elements() {
            for b in self.elements() {
                let ba = self.mul(b, a);
                if ba == self.zero {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.mul(c, a) == ba {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.left_cancellation_witness().is_none()
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.right_cancellation_witness().is_none()
    }

    pub fn is_cancellative(&self) -> bool {
        self.is_left_cancellative() && self.is_right_cancellative()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .tuple_combinations()
            .all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Semigroup> {
        let n = self.n;
        if perm.len() != n || perm.iter().copied().collect::<ElemSet>() != self.all() {
            return Err(Error::BadShape {
                expected: n,
                got: perm.len(),
            });
        }
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        Ok(Self::assemble(n, table, perm[self.one], perm[self.zero]))
    }

    /// Isomorphism-invariant fingerprint used to split the relabelling
    /// search into classes.
    fn invariant(&self, a: Element) -> [usize; 9] {
        let sq = self.mul(a, a);
        let (index, period) = self.power_shape(a);
        let preimages = self.table.iter().filter(|&&v| v == a).count();
        [
            usize::from(sq == a),
            usize::from(sq == self.zero),
            usize::from(sq == self.one),
            self.right[a].len(),
            self.left[a].len(),
            self.two_sided[a].len(),
            index,
            period,
            preimages,
        ]
    }

    /// Index and period of the monogenic subsemigroup generated by `a`.
    fn power_shape(&self, a: Element) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.n];
        let mut p = a;
        let mut k = 1;
        loop {
            if seen[p] != usize::MAX {
                return (seen[p], k - seen[p]);
            }
            seen[p] = k;
            p = self.mul(p, a);
            k += 1;
        }
    }

    /// Relabelling that realises the canonical form: zero becomes 0, one
    /// becomes 1, and the remaining elements are ordered to minimise the
    /// row-major table encoding.
    pub fn canonical_labelling(&self) -> Vec<usize> {
        let mut rest: Vec<Element> = self
            .elements()
            .filter(|&a| a != self.one && a != self.zero)
            .collect();
        let keys: Vec<[usize; 9]> = self.elements().map(|a| self.invariant(a)).collect();
        rest.sort_by_key(|&a| keys[a]);
        let classes: Vec<Vec<Element>> = rest
            .iter()
            .chunk_by(|&&a| keys[a])
            .into_iter()
            .map(|(_, g)| g.copied().collect())
            .collect();

        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut perm = vec![0usize; self.n];
        let choices = classes
            .iter()
            .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
            .multi_cartesian_product();
        let mut visit = |order: Vec<Vec<Element>>| {
            perm[self.zero] = 0;
            perm[self.one] = 1;
            for (k, &a) in order.iter().flatten().enumerate() {
                perm[a] = k + 2;
            }
            let enc = self.encode_with(&perm);
            if best.as_ref().is_none_or(|(b, _)| enc < *b) {
                best = Some((enc, perm.clone()));
            }
        };
        if classes.is_empty() {
            visit(Vec::new());
        } else {
            for order in choices {
                visit(order);
            }
        }
        best.expect("at least one labelling").1
    }

    fn encode_with(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(perm[self.mul(inv[i], inv[j])]);
            }
        }
        out
    }

    /// Canonical byte encoding: `[n, table...]` of the canonically relabelled
    /// semigroup. Equal iff isomorphic by a map fixing one and zero.
    pub fn canonical_form(&self) -> Vec<u8> {
        let perm = self.canonical_labelling();
        let mut out = Vec::with_capacity(self.n * self.n + 1);
        out.push(self.n as u8);
        out.extend(self.encode_with(&perm).into_iter().map(|v| v as u8));
        out
    }

    /// The canonically relabelled copy (zero = 0, one = 1).
    pub fn canonical(&self) -> Semigroup {
        self.relabel(&self.canonical_labelling())
            .expect("canonical labelling is a permutation")
    }

    /// Inverse of [`Semigroup::canonical_form`].
    pub fn from_canonical_form(bytes: &[u8]) -> Result<Semigroup> {
        let (&n, rest) = bytes.split_first().ok_or(Error::BadOrder(0))?;
        let n = n as usize;
        Self::from_flat(n, rest.iter().map(|&v| v as usize).collect(), 1, 0)
    }

    /// Short stable hash of the canonical form, as lowercase hex.
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(self.canonical_form());
        digest[..8].iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    /// Cayley text: header `n one zero`, then one row per line.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.one, self.zero);
        for row in self.rows() {
            out.push_str(&row.iter().join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses Cayley text. Lines whose first non-blank character is `#`
    /// are comments; blank lines are skipped.
    pub fn parse_cayley_text(text: &str) -> Result<Semigroup> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });
        let parse_row = |line_no: usize, line: &str| -> Result<Vec<usize>> {
            tokens(line)
                .map(|(col, tok)| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        column: col,
                        message: format!("expected a non-negative integer, found {tok:?}"),
                    })
                })
                .collect()
        };
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing header `n one zero`".into(),
        })?;
        let head = parse_row(hline, header)?;
        if head.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("header needs 3 integers `n one zero`, found {}", head.len()),
            });
        }
        let (n, one, zero) = (head[0], head[1], head[2]);
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("order {n} out of range 2..={MAX_ORDER}"),
            });
        }
        let mut rows = Vec::with_capacity(n);
        let mut last_line = hline;
        for (line_no, line) in lines {
            last_line = line_no;
            if rows.len() == n {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("more than {n} table rows"),
                });
            }
            let row = parse_row(line_no, line)?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            if let Some(pos) = row.iter().position(|&v| v >= n) {
                let col = tokens(line).nth(pos).map_or(1, |(c, _)| c);
                return Err(Error::Parse {
                    line: line_no,
                    column: col,
                    message: format!("entry {} out of range 0..{n}", row[pos]),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {n} table rows, found {}", rows.len()),
            });
        }
        Semigroup::new(&rows, one, zero)
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, tok)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_chain_x, build_delta, build_ef, build_min_chain, minimal_monoid};

    const X: usize = 5;
    const E: usize = 2;
    const F: usize = 3;
    const EF: usize = 4;

    #[test]
    fn minimal_monoid_is_valid() {
        let s = Semigroup::new(&[vec![0, 0], vec![0, 1]], 1, 0).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s, minimal_monoid());
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            Semigroup::new(&[vec![0, 0], vec![0, 1]], 0, 0),
            Err(Error::OneEqualsZero)
        );
        assert_eq!(
            Semigroup::new(&[vec![0, 0, 0], vec![0, 1, 1], vec![0, 2, 2]], 1, 0),
            Err(Error::BadIdentity(2))
        );
        assert_eq!(
            Semigroup::new(&[vec![0, 1], vec![0, 1]], 1, 0),
            Err(Error::BadIdentity(0))
        );
        assert!(matches!(
            Semigroup::new(&[vec![0, 0, 0], vec![0, 1, 2], vec![2, 2, 0]], 1, 0),
            Err(Error::BadZero(_))
        ));
    }

    #[test]
    fn detects_non_associativity() {
        // Elements 0, 1, a, b with a*a = b, a*b = 0, b*a = a, b*b = b:
        // (a*a)*a = b*a = a but a*(a*a) = a*b = 0.
        let rows = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 3, 0],
            vec![0, 3, 2, 3],
        ];
        let err = Semigroup::new(&rows, 1, 0).unwrap_err();
        let Error::NotAssociative { i, j, k } = err else {
            panic!("expected associativity failure, got {err:?}");
        };
        let m = |a: usize, b: usize| rows[a][b];
        assert_ne!(m(m(i, j), k), m(i, m(j, k)));
    }

    #[test]
    fn ef_products() {
        let s = build_ef(4);
        assert_eq!(s.mul(E, F), EF);
        assert_eq!(s.mul(E, X), X);
        // x * x^4 = x^5 = 0, oracle: repeated lookup
        let x4 = (1..4).fold(X, |acc, _| s.mul(acc, X));
        assert_eq!(x4, X + 3);
        assert_eq!(s.mul(X, x4), s.zero());
        assert_eq!(s.power(X, 5), s.zero());
        for a in s.elements() {
            assert_eq!(s.mul(s.one(), a), a);
        }
    }

    #[test]
    fn powers_and_nilpotency() {
        let s = build_ef(4);
        assert!(s.is_nilpotent_element(X));
        assert!(!s.is_nilpotent_element(s.one()));
        assert!(!s.is_nilpotent_element(E));
        let m = build_min_chain(3);
        assert_eq!(m.power(3, 2), 3);
        assert_eq!(m.power(m.one(), 7), m.one());
        let d = build_delta(3);
        assert!(!d.is_nilpotent_element(2));
        for a in s.elements() {
            for j in 1..5 {
                for k in 1..5 {
                    assert_eq!(s.power(a, j + k), s.mul(s.power(a, j), s.power(a, k)));
                }
            }
        }
    }

    #[test]
    fn units_and_nonunits() {
        let s = build_ef(4);
        assert_eq!(s.units(), ElemSet::singleton(1));
        assert_eq!(s.nonunits(), ElemSet::singleton(1).complement(9));
        let c = build_chain_x(3);
        assert_eq!(c.nonunits().to_vec(), vec![0, 2, 3, 4]);
        // Z2 with zero adjoined: both 1 and g are units
        let g = Semigroup::new(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]], 1, 0).unwrap();
        assert_eq!(g.units().to_vec(), vec![1, 2]);
    }

    #[test]
    fn cancellation() {
        assert!(build_chain_x(4).is_left_cancellative());
        assert!(build_chain_x(4).is_cancellative());
        // delta(3): x1*1 = x1*x1 = x1
        assert!(!build_delta(3).is_left_cancellative());
        let ef = build_ef(4);
        assert!(!ef.is_left_cancellative());
        assert_eq!(ef.mul(E, F), ef.mul(E, EF));
    }

    #[test]
    fn canonical_form_separates_non_isomorphic() {
        // chain_x(2) and delta(2) both have order 4.
        let a = build_chain_x(2);
        let b = build_delta(2);
        assert_eq!(a.order(), b.order());
        assert_ne!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn canonical_form_round_trip() {
        for s in [build_ef(3), build_delta(3), build_min_chain(4)] {
            let c = s.canonical_form();
            let back = Semigroup::from_canonical_form(&c).unwrap();
            assert_eq!(back.canonical_form(), c);
            assert_eq!(back.one(), 1);
            assert_eq!(back.zero(), 0);
        }
    }

    #[test]
    fn cayley_text_round_trip_and_errors() {
        let s = build_ef(4);
        let text = s.to_cayley_text();
        assert_eq!(Semigroup::parse_cayley_text(&text).unwrap(), s);
        let commented = format!("# ef4\n\n{text}");
        assert_eq!(Semigroup::parse_cayley_text(&commented).unwrap(), s);

        let short = "3 1 0\n0 0 0\n0 1 2\n";
        assert!(matches!(
            Semigroup::parse_cayley_text(short),
            Err(Error::Parse { line: 4, .. })
        ));
        let wide = "2 1 0\n0 0 0\n0 1\n";
        assert!(matches!(
            Semigroup::parse_cayley_text(wide),
            Err(Error::Parse { line: 2, .. })
        ));
        let junk = "2 1 0\n0 z\n0 1\n";
        assert_eq!(
            Semigroup::parse_cayley_text(junk),
            Err(Error::Parse {
                line: 2,
                column: 3,
                message: "expected a non-negative integer, found \"z\"".into()
            })
        );
        let range = "2 1 0\n0 0\n0 7\n";
        assert!(matches!(
            Semigroup::parse_cayley_text(range),
            Err(Error::Parse { line: 3, column: 3, .. })
        ));
    }
}
