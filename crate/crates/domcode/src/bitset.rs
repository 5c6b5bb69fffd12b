//! Fixed-universe vertex sets backed by `u64` words.
//!
//! Every set carries the size `n` of its universe `{0, …, n−1}`; all binary
//! operations require equal universes. Bits above `n` are kept zero so that
//! equality and popcounts can work word-wise.

const WORD_BITS: usize = 64;

/// A set of vertex indices drawn from a fixed universe `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set over the universe `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// Full set `{0, …, n−1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    /// Set over `0..n` containing the given vertices.
    ///
    /// Panics if a vertex is out of range, like [`VertexSet::insert`].
    pub fn with_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the universe (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        s
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in &mut s.words {
            *w = !*w;
        }
        s.clear_tail();
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }

    fn clear_tail(&mut self) {
        let tail = self.n % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << tail) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set whose universe is just large enough for the
    /// largest element. Mostly a test convenience; prefer
    /// [`VertexSet::with_members`] when the universe is known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let members: Vec<usize> = iter.into_iter().collect();
        let n = members.iter().max().map_or(0, |&m| m + 1);
        Self::with_members(n, members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::empty(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert!(!s.contains(0));
        assert!(s.contains(64));
        assert_eq!(s.first(), Some(64));
    }

    #[test]
    fn full_and_complement() {
        for n in [0, 1, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
            assert_eq!(VertexSet::empty(n).complement(), full);
        }
    }

    #[test]
    #[should_panic]
    fn out_of_range_insert_panics() {
        VertexSet::empty(4).insert(4);
    }

    fn arb_set(n: usize) -> impl Strategy<Value = VertexSet> {
        proptest::collection::vec(proptest::bool::ANY, n)
            .prop_map(move |bits| {
                VertexSet::with_members(n, bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
            })
    }

    proptest! {
        #[test]
        fn set_algebra_matches_membership(a in arb_set(97), b in arb_set(97)) {
            let union = a.union(&b);
            let inter = a.intersection(&b);
            let diff = a.difference(&b);
            let sym = a.symmetric_difference(&b);
            for v in 0..97 {
                prop_assert_eq!(union.contains(v), a.contains(v) || b.contains(v));
                prop_assert_eq!(inter.contains(v), a.contains(v) && b.contains(v));
                prop_assert_eq!(diff.contains(v), a.contains(v) && !b.contains(v));
                prop_assert_eq!(sym.contains(v), a.contains(v) ^ b.contains(v));
            }
            prop_assert_eq!(a.is_subset_of(&union), true);
            prop_assert_eq!(inter.is_subset_of(&a), true);
            prop_assert_eq!(a.intersects(&b), !inter.is_empty());
            prop_assert_eq!(union.len() + inter.len(), a.len() + b.len());
        }

        #[test]
        fn iter_is_sorted_and_consistent(a in arb_set(97)) {
            let members: Vec<usize> = a.iter().collect();
            prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(members.len(), a.len());
            prop_assert_eq!(VertexSet::with_members(97, members), a);
        }
    }
}
