use smallvec::SmallVec;

/// A set of world indices, stored as a bit vector.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet {
    words: SmallVec<[u64; 2]>,
}

impl WorldSet {
    pub fn empty() -> WorldSet {
        WorldSet::default()
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> WorldSet {
        let mut s = WorldSet::empty();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(i: usize) -> WorldSet {
        let mut s = WorldSet::empty();
        s.insert(i);
        s
    }

    /// The set whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> WorldSet {
        let mut s = WorldSet::empty();
        if mask != 0 {
            s.words.push(mask);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        let w = i / 64;
        if w < self.words.len() {
            self.words[w] &= !(1 << (i % 64));
            self.trim();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &WorldSet) -> WorldSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(short.words.iter()) {
            *a |= b;
        }
        WorldSet { words }
    }

    pub fn intersection(&self, other: &WorldSet) -> WorldSet {
        let mut s = WorldSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &WorldSet) -> WorldSet {
        let mut words = self.words.clone();
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        let mut s = WorldSet { words };
        s.trim();
        s
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> WorldSet {
        WorldSet::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn intersects(&self, other: &WorldSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl FromIterator<usize> for WorldSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = WorldSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn set_algebra(a in proptest::collection::btree_set(0usize..150, 0..20),
                       b in proptest::collection::btree_set(0usize..150, 0..20)) {
            let sa: WorldSet = a.iter().copied().collect();
            let sb: WorldSet = b.iter().copied().collect();
            let u: Vec<_> = sa.union(&sb).iter().collect();
            prop_assert_eq!(u, a.union(&b).copied().collect::<Vec<_>>());
            let i: Vec<_> = sa.intersection(&sb).iter().collect();
            prop_assert_eq!(i, a.intersection(&b).copied().collect::<Vec<_>>());
            let d: Vec<_> = sa.difference(&sb).iter().collect();
            prop_assert_eq!(d, a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.intersects(&sb), !a.is_disjoint(&b));
            prop_assert_eq!(sa.len(), a.len());
            let c = sa.complement(150);
            prop_assert_eq!(c.len(), 150 - a.len());
            prop_assert_eq!(sa.intersection(&sb) == sb.intersection(&sa), true);
        }
    }
}
