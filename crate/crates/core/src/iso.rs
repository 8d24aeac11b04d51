//! Isomorphism by canonical form: the least byte encoding over all relabelings.

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::model::OrderedSemigroup;

/// Encoding `[n, mult (row major), leq (row major, 0/1)]` minimised over all
/// `n!` relabelings. Two structures are isomorphic (as ordered semigroups)
/// exactly when their canonical forms are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// `n|mult|leq`, e.g. `2|0111|1011` for the two-element semilattice.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let (mult, leq) = self.0[1..].split_at(n * n);
        write!(f, "{n}|")?;
        if n <= DIGITS.len() {
            for &v in mult {
                write!(f, "{}", DIGITS[v as usize] as char)?;
            }
        } else {
            write!(f, "{}", mult.iter().join("."))?;
        }
        write!(f, "|")?;
        for &b in leq {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn encode_into(s: &OrderedSemigroup, perm: &[usize], inverse: &mut [usize], buf: &mut Vec<u8>) {
    let n = s.order();
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    buf.clear();
    buf.push(n as u8);
    for i in 0..n {
        for j in 0..n {
            buf.push(perm[s.mul(inverse[i], inverse[j])] as u8);
        }
    }
    for i in 0..n {
        for j in 0..n {
            buf.push(s.leq(inverse[i], inverse[j]) as u8);
        }
    }
}

/// Canonical form plus the relabeling (`perm[old] = new`) that attains it.
/// Among several minimising relabelings the first in lexicographic
/// permutation order is returned.
pub fn canonical_labelling(s: &OrderedSemigroup) -> (CanonicalForm, Vec<usize>) {
    let n = s.order();
    let mut inverse = vec![0; n];
    let mut buf = Vec::with_capacity(1 + 2 * n * n);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        encode_into(s, &perm, &mut inverse, &mut buf);
        if best.as_ref().is_none_or(|(b, _)| buf < *b) {
            best = Some((buf.clone(), perm));
        }
    }
    let (bytes, perm) = best.expect("n >= 1 has at least one permutation");
    (CanonicalForm(bytes), perm)
}

pub fn canonical_form(s: &OrderedSemigroup) -> CanonicalForm {
    canonical_labelling(s).0
}

/// The relabeled copy of `s` whose plain encoding is its canonical form.
pub fn canonical_representative(s: &OrderedSemigroup) -> OrderedSemigroup {
    let (_, perm) = canonical_labelling(s);
    s.relabel(&perm)
}

pub fn is_isomorphic(s: &OrderedSemigroup, t: &OrderedSemigroup) -> bool {
    s.order() == t.order() && canonical_form(s) == canonical_form(t)
}

/// Encoding of `s` under the identity labelling, the same layout as
/// [`CanonicalForm`]. Used to order labelled corpora deterministically.
pub fn plain_encoding(s: &OrderedSemigroup) -> Vec<u8> {
    let n = s.order();
    let ident: Vec<usize> = (0..n).collect();
    let mut inverse = vec![0; n];
    let mut buf = Vec::new();
    encode_into(s, &ident, &mut inverse, &mut buf);
    buf
}
