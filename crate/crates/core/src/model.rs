//! The finite ordered semigroup value and its axiom checks.
//!
//! Elements are the indices `0..n`. The multiplication table is stored row
//! major (`mult[i * n + j] = i·j`) and the order as a full boolean matrix
//! (`leq[i * n + j]` is `i ≤ j`). Construction only checks shape; the
//! semigroup and order axioms are checked by [`OrderedSemigroup::validate`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::subset::ElementSubset;

/// Largest carrier a value can hold (subsets are 64-bit masks).
pub const MAX_CARRIER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("order must be between 1 and {MAX_CARRIER}, got {0}")]
    BadOrder(usize),
    #[error("multiplication table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("order relation has {found} entries, expected {expected}")]
    RelationSize { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is outside the carrier of order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    n: usize,
    mult: Vec<u8>,
    leq: Vec<bool>,
    /// `down[h]` = mask of all `t` with `t ≤ h`.
    down: Vec<u64>,
}

impl OrderedSemigroup {
    pub fn new(n: usize, mult: Vec<usize>, leq: Vec<bool>) -> Result<Self, ModelError> {
        if n == 0 || n > MAX_CARRIER {
            return Err(ModelError::BadOrder(n));
        }
        if mult.len() != n * n {
            return Err(ModelError::TableSize { expected: n * n, found: mult.len() });
        }
        if leq.len() != n * n {
            return Err(ModelError::RelationSize { expected: n * n, found: leq.len() });
        }
        if let Some(pos) = mult.iter().position(|&v| v >= n) {
            return Err(ModelError::EntryOutOfRange { row: pos / n, col: pos % n, value: mult[pos], order: n });
        }
        Ok(Self::from_raw(n, mult.into_iter().map(|v| v as u8).collect(), leq))
    }

    /// Structure with the given table and the discrete order.
    pub fn with_discrete_order(n: usize, mult: Vec<usize>) -> Result<Self, ModelError> {
        Self::new(n, mult, discrete_order(n))
    }

    pub(crate) fn from_raw(n: usize, mult: Vec<u8>, leq: Vec<bool>) -> Self {
        let mut down = vec![0u64; n];
        for t in 0..n {
            for h in 0..n {
                if leq[t * n + h] {
                    down[h] |= 1 << t;
                }
            }
        }
        OrderedSemigroup { n, mult, leq, down }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.n + b] as usize
    }

    /// `a·b·c`, bracketed left to right.
    #[inline]
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// Mask of all elements below `h`.
    #[inline]
    pub fn down_mask(&self, h: usize) -> u64 {
        self.down[h]
    }

    pub fn mult_table(&self) -> &[u8] {
        &self.mult
    }

    pub fn leq_matrix(&self) -> &[bool] {
        &self.leq
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn carrier(&self) -> ElementSubset {
        ElementSubset::full(self.n)
    }

    /// Checks associativity, the partial-order axioms and compatibility,
    /// reporting the lexicographically least witness for each failed family.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut failures = Vec::new();

        if let Some(w) = triples(n).find(|&(i, j, k)| self.mul3(i, j, k) != self.mul(i, self.mul(j, k))) {
            failures.push(AxiomFailure { kind: AxiomKind::Associativity, witness: vec![w.0, w.1, w.2] });
        }
        if let Some(i) = (0..n).find(|&i| !self.leq(i, i)) {
            failures.push(AxiomFailure { kind: AxiomKind::Reflexivity, witness: vec![i] });
        }
        if let Some((i, j)) = pairs(n).find(|&(i, j)| i != j && self.leq(i, j) && self.leq(j, i)) {
            failures.push(AxiomFailure { kind: AxiomKind::Antisymmetry, witness: vec![i, j] });
        }
        if let Some(w) = triples(n).find(|&(i, j, k)| self.leq(i, j) && self.leq(j, k) && !self.leq(i, k)) {
            failures.push(AxiomFailure { kind: AxiomKind::Transitivity, witness: vec![w.0, w.1, w.2] });
        }
        if let Some(w) = triples(n).find(|&(a, b, x)| {
            self.leq(a, b) && !(self.leq(self.mul(x, a), self.mul(x, b)) && self.leq(self.mul(a, x), self.mul(b, x)))
        }) {
            failures.push(AxiomFailure { kind: AxiomKind::Compatibility, witness: vec![w.0, w.1, w.2] });
        }
        ValidationReport { failures }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid()
    }

    /// Same carrier and order, multiplication reversed.
    pub fn opposite(&self) -> OrderedSemigroup {
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.mult[j * n + i];
            }
        }
        Self::from_raw(n, mult, self.leq.clone())
    }

    /// Relabels the carrier: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> OrderedSemigroup {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut mult = vec![0u8; n * n];
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
                leq[perm[i] * n + perm[j]] = self.leq(i, j);
            }
        }
        Self::from_raw(n, mult, leq)
    }

    /// The subsemigroup carried by `subset` with the induced order, plus the
    /// map from new indices back to the original ones. `None` when the subset
    /// is empty or not closed under multiplication.
    pub fn restrict(&self, subset: &ElementSubset) -> Option<(OrderedSemigroup, Vec<usize>)> {
        let members = subset.to_vec();
        if members.is_empty() {
            return None;
        }
        let mut index_of = vec![usize::MAX; self.n];
        for (k, &m) in members.iter().enumerate() {
            index_of[m] = k;
        }
        let m = members.len();
        let mut mult = Vec::with_capacity(m * m);
        let mut leq = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                let p = index_of[self.mul(a, b)];
                if p == usize::MAX {
                    return None;
                }
                mult.push(p as u8);
                leq.push(self.leq(a, b));
            }
        }
        Some((Self::from_raw(m, mult, leq), members))
    }
}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leq: Vec<(usize, usize)> = pairs(self.n).filter(|&(i, j)| i != j && self.leq(i, j)).collect();
        f.debug_struct("OrderedSemigroup")
            .field("order", &self.n)
            .field("mult", &self.mult)
            .field("strict_leq", &leq)
            .finish()
    }
}

pub fn discrete_order(n: usize) -> Vec<bool> {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    leq
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomKind {
    Associativity,
    Reflexivity,
    Antisymmetry,
    Transitivity,
    /// Witness `(a, b, x)`: `a ≤ b` but `x·a ≰ x·b` or `a·x ≰ b·x`.
    Compatibility,
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomKind::Associativity => "associativity",
            AxiomKind::Reflexivity => "reflexivity",
            AxiomKind::Antisymmetry => "antisymmetry",
            AxiomKind::Transitivity => "transitivity",
            AxiomKind::Compatibility => "compatibility",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub kind: AxiomKind,
    pub witness: Vec<usize>,
}

impl AxiomFailure {
    /// Re-evaluates the axiom on the witness; true when it indeed fails.
    pub fn reverifies(&self, s: &OrderedSemigroup) -> bool {
        let w = &self.witness;
        match self.kind {
            AxiomKind::Associativity => s.mul3(w[0], w[1], w[2]) != s.mul(w[0], s.mul(w[1], w[2])),
            AxiomKind::Reflexivity => !s.leq(w[0], w[0]),
            AxiomKind::Antisymmetry => w[0] != w[1] && s.leq(w[0], w[1]) && s.leq(w[1], w[0]),
            AxiomKind::Transitivity => s.leq(w[0], w[1]) && s.leq(w[1], w[2]) && !s.leq(w[0], w[2]),
            AxiomKind::Compatibility => {
                let (a, b, x) = (w[0], w[1], w[2]);
                s.leq(a, b) && !(s.leq(s.mul(x, a), s.mul(x, b)) && s.leq(s.mul(a, x), s.mul(b, x)))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, kind: AxiomKind) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.kind == kind)
    }
}
