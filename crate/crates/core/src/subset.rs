use std::fmt;

use serde::Serialize;

/// A subset of the carrier `0..n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementSubset {
    bits: u64,
    universe: u8,
}

impl ElementSubset {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        ElementSubset { bits: 0, universe: universe as u8 }
    }

    pub fn full(universe: usize) -> Self {
        let bits = if universe == 64 { u64::MAX } else { (1u64 << universe) - 1 };
        ElementSubset { bits, universe: universe as u8 }
    }

    pub fn singleton(universe: usize, element: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(element);
        s
    }

    /// Builds a subset from raw bits; bits above the universe are dropped.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        ElementSubset { bits: bits & Self::full(universe).bits, universe: universe as u8 }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, elements: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.universe() && self.bits >> element & 1 == 1
    }

    pub fn insert(&mut self, element: usize) {
        assert!(element < self.universe(), "element {element} outside carrier of order {}", self.universe);
        self.bits |= 1 << element;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.universe())
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset { bits: self.bits | other.bits, universe: self.universe }
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset { bits: self.bits & other.bits, universe: self.universe }
    }

    /// Least element, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.universe()).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Renders the subset with element names, e.g. `{e,f}`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayNamed { subset: self, names }
    }
}

struct DisplayNamed<'a> {
    subset: &'a ElementSubset,
    names: &'a [String],
}

impl fmt::Display for DisplayNamed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.subset.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match self.names.get(i) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "{i}")?,
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
