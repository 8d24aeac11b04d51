//! Downward closures, subset products, principal ideals and simplicity.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::check::Check;
use crate::model::OrderedSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two_sided",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown side `{0}` (expected left, right or two_sided)")]
pub struct UnknownSide(pub String);

impl FromStr for Side {
    type Err = UnknownSide;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two_sided" | "two-sided" => Ok(Side::TwoSided),
            other => Err(UnknownSide(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal must be a nonempty subset")]
    EmptySubset,
}

/// `(X] = {t : t ≤ h for some h ∈ X}`.
pub fn downward_closure(s: &OrderedSemigroup, x: &ElementSubset) -> ElementSubset {
    let bits = x.iter().fold(0u64, |acc, h| acc | s.down_mask(h));
    ElementSubset::from_bits(s.order(), bits)
}

/// `XY = {x·y : x ∈ X, y ∈ Y}`.
pub fn subset_product(s: &OrderedSemigroup, x: &ElementSubset, y: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::empty(s.order());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(s.mul(a, b));
        }
    }
    out
}

/// Principal ideal generated by `a`, closed downward:
/// `({a} ∪ Sa]`, `({a} ∪ aS]` or `({a} ∪ Sa ∪ aS ∪ SaS]`.
pub fn principal_ideal(s: &OrderedSemigroup, a: usize, side: Side) -> ElementSubset {
    let all = s.carrier();
    let single = ElementSubset::singleton(s.order(), a);
    let generated = match side {
        Side::Left => single.union(&subset_product(s, &all, &single)),
        Side::Right => single.union(&subset_product(s, &single, &all)),
        Side::TwoSided => {
            let sa = subset_product(s, &all, &single);
            let a_s = subset_product(s, &single, &all);
            let sas = subset_product(s, &sa, &all);
            single.union(&sa).union(&a_s).union(&sas)
        }
    };
    downward_closure(s, &generated)
}

/// Checks absorption (`SI ⊆ I` / `IS ⊆ I`) and then downward closure.
/// Absorption witnesses are `(x, i)` with the offending product outside `I`;
/// closure witnesses are `(t, h)` with `t ≤ h ∈ I`, `t ∉ I`.
pub fn is_ideal(s: &OrderedSemigroup, ideal: &ElementSubset, side: Side) -> Result<Check, IdealError> {
    if ideal.is_empty() {
        return Err(IdealError::EmptySubset);
    }
    let n = s.order();
    let left = matches!(side, Side::Left | Side::TwoSided);
    let right = matches!(side, Side::Right | Side::TwoSided);
    for x in 0..n {
        for i in ideal.iter() {
            if left && !ideal.contains(s.mul(x, i)) {
                return Ok(Check::fail("left_absorption", vec![x, i]));
            }
            if right && !ideal.contains(s.mul(i, x)) {
                return Ok(Check::fail("right_absorption", vec![i, x]));
            }
        }
    }
    for h in ideal.iter() {
        for t in 0..n {
            if s.leq(t, h) && !ideal.contains(t) {
                return Ok(Check::fail("closure", vec![t, h]));
            }
        }
    }
    Ok(Check::pass())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub side: Side,
    pub holds: bool,
    /// A proper ideal of least size (ties broken by bit mask) when not simple.
    pub proper_ideal: Option<ElementSubset>,
}

/// Simple means no proper (nonempty) ideal of the given side.
pub fn is_simple(s: &OrderedSemigroup, side: Side) -> SimplicityReport {
    let n = s.order();
    let full = s.carrier();
    let mut candidates: Vec<ElementSubset> = (1..full.bits()).map(|bits| ElementSubset::from_bits(n, bits)).collect();
    candidates.sort_by_key(|c| (c.len(), c.bits()));
    let proper_ideal = candidates.into_iter().find(|c| is_ideal(s, c, side).expect("nonempty").holds);
    SimplicityReport { side, holds: proper_ideal.is_none(), proper_ideal }
}
