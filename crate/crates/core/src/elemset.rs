//! Bitmask subsets of a semigroup's carrier.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported semigroup order (one bit per element).
pub const MAX_ORDER: usize = 64;

/// A subset of `{0, .., n-1}` stored as a 64-bit mask.
///
/// Ideals, radicals, saturations and translates are all `ElemSet`s. The set
/// does not know its ambient order; complements take `n` explicitly.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(a: usize) -> Self {
        debug_assert!(a < MAX_ORDER);
        ElemSet(1u64 << a)
    }

    pub fn contains(self, a: usize) -> bool {
        a < MAX_ORDER && self.0 >> a & 1 == 1
    }

    pub fn insert(&mut self, a: usize) {
        self.0 |= 1u64 << a;
    }

    pub fn remove(&mut self, a: usize) {
        self.0 &= !(1u64 << a);
    }

    pub fn with(self, a: usize) -> Self {
        ElemSet(self.0 | 1u64 << a)
    }

    pub fn without(self, a: usize) -> Self {
        ElemSet(self.0 & !(1u64 << a))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        ElemSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    /// True when one of the two sets contains the other.
    pub fn comparable(self, other: Self) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        self.union(rhs)
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        self.intersection(rhs)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        self.difference(rhs)
    }
}

// Lexicographic on the sorted member lists, so `{0} < {0, 1} < {1}`.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&a| a >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "element index {bad} out of range"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let a: ElemSet = [0, 2, 5].into_iter().collect();
        let b: ElemSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.complement(6).to_vec(), vec![1, 3, 4]);
        assert!(ElemSet::singleton(2).is_proper_subset(a));
        assert!(!a.is_proper_subset(a));
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(a.to_string(), "{0,2,5}");
    }

    #[test]
    fn ordering_is_lexicographic() {
        let s = |v: &[usize]| v.iter().copied().collect::<ElemSet>();
        assert!(s(&[0]) < s(&[0, 1]));
        assert!(s(&[0, 1]) < s(&[1]));
        assert!(ElemSet::EMPTY < s(&[0]));
    }

    proptest! {
        #[test]
        fn set_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let (a, b, c) = (ElemSet(a), ElemSet(b), ElemSet(c));
            prop_assert_eq!(a | (b & c), (a | b) & (a | c));
            prop_assert_eq!(a & (b | c), (a & b) | (a & c));
            prop_assert!((a & b).is_subset(a));
            prop_assert!(a.is_subset(a | b));
            prop_assert_eq!((a - b) & b, ElemSet::EMPTY);
            prop_assert_eq!((a | b).len() + (a & b).len(), a.len() + b.len());
        }

        #[test]
        fn json_round_trip(bits in any::<u64>()) {
            let s = ElemSet(bits);
            let text = serde_json::to_string(&s).unwrap();
            let back: ElemSet = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(s, back);
        }
    }
}
