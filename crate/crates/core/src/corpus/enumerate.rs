use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::kernel::Semigroup;

const UNSET: usize = usize::MAX;

/// One structure emitted by the enumerator, in canonical labelling.
#[derive(Debug, Clone)]
pub struct EnumeratedSemigroup {
    pub semigroup: Semigroup,
    pub canonical: Vec<u8>,
}

/// Largest order the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// NDJSON record for one enumerated semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub n: usize,
    pub one: usize,
    pub zero: usize,
    pub table: Vec<Vec<usize>>,
    pub canonical: String,
}

impl EnumeratedSemigroup {
    pub fn record(&self) -> EnumerationRecord {
        let s = &self.semigroup;
        EnumerationRecord {
            n: s.order(),
            one: s.one(),
            zero: s.zero(),
            table: s.rows().map(<[usize]>::to_vec).collect(),
            canonical: self.canonical.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

struct Search<'a, F> {
    n: usize,
    table: Vec<usize>,
    cells: Vec<(usize, usize)>,
    seen: HashSet<Vec<u8>>,
    sink: &'a mut F,
    count: usize,
}

impl<F: FnMut(&EnumeratedSemigroup)> Search<'_, F> {
    fn at(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    /// No fully determined triple violates associativity.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 2..n {
            for b in 2..n {
                let ab = self.at(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 2..n {
                    let bc = self.at(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let l = self.at(ab, c);
                    let r = self.at(a, bc);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.cells.len() {
            let s = Semigroup::from_flat(self.n, self.table.clone(), 1, 0)
                .expect("complete consistent table is a monoid with zero");
            let canonical = s.canonical_form();
            if self.seen.insert(canonical.clone()) {
                self.count += 1;
                let semigroup = Semigroup::from_canonical_form(&canonical)
                    .expect("canonical form decodes");
                (self.sink)(&EnumeratedSemigroup {
                    semigroup,
                    canonical,
                });
            }
            return;
        }
        let (i, j) = self.cells[depth];
        for v in 0..self.n {
            self.table[i * self.n + j] = v;
            if self.consistent() {
                self.run(depth + 1);
            }
        }
        self.table[i * self.n + j] = UNSET;
    }
}

/// Streams every monoid with zero of order `n` (zero = 0, one = 1) up to
/// isomorphisms fixing both, in a deterministic order. Returns the count.
///
/// Rows and columns of 0 and 1 are forced; the remaining `(n-2)^2` cells
/// are filled depth-first in row-major order, pruning on any determined
/// associativity violation.
pub fn enumerate_monoids_with_zero<F>(n: usize, mut sink: F) -> usize
where
    F: FnMut(&EnumeratedSemigroup),
{
    assert!(
        (2..=MAX_ENUMERATION_ORDER).contains(&n),
        "enumeration supports orders 2..={MAX_ENUMERATION_ORDER}"
    );
    let mut table = vec![UNSET; n * n];
    for a in 0..n {
        table[a] = 0;
        table[a * n] = 0;
        table[n + a] = a;
        table[a * n + 1] = a;
    }
    table[n] = 0;
    table[1] = 0;
    let cells = (2..n).flat_map(|i| (2..n).map(move |j| (i, j))).collect();
    let mut search = Search {
        n,
        table,
        cells,
        seen: HashSet::new(),
        sink: &mut sink,
        count: 0,
    };
    search.run(0);
    search.count
}

/// All monoids with zero of order `n`, collected.
pub fn enumerate_to_vec(n: usize) -> Vec<EnumeratedSemigroup> {
    let mut out = Vec::new();
    enumerate_monoids_with_zero(n, |s| out.push(s.clone()));
    out
}
