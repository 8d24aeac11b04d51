//! Element- and structure-level predicates: ordered idempotents, inverses,
//! regularity, group-likeness, H-commutativity and the inverse-ordered decider.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::check::Witness;
use crate::ideals::{is_simple, principal_ideal, Side};
use crate::model::OrderedSemigroup;
use crate::relations::{greens_relations, Partition};
use crate::subset::ElementSubset;

/// `E≤(S) = {e : e ≤ e²}`.
pub fn ordered_idempotents(s: &OrderedSemigroup) -> ElementSubset {
    ElementSubset::from_elements(s.order(), s.elements().filter(|&e| s.leq(e, s.mul(e, e))))
}

/// `V≤(a) = {b : a ≤ aba and b ≤ bab}`.
pub fn inverses_of(s: &OrderedSemigroup, a: usize) -> ElementSubset {
    ElementSubset::from_elements(
        s.order(),
        s.elements().filter(|&b| s.leq(a, s.mul3(a, b, a)) && s.leq(b, s.mul3(b, a, b))),
    )
}

/// `a ∈ (Sb]`: some `x` with `a ≤ x·b`.
pub fn below_left_multiple(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    s.elements().any(|x| s.leq(a, s.mul(x, b)))
}

/// `a ∈ (bS]`: some `x` with `a ≤ b·x`.
pub fn below_right_multiple(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    s.elements().any(|x| s.leq(a, s.mul(b, x)))
}

/// Some `x` with `a·b ≤ b·x·a`.
pub fn h_commutes_one_sided(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    let ab = s.mul(a, b);
    s.elements().any(|x| s.leq(ab, s.mul3(b, x, a)))
}

/// Symmetrised H-commutativity: `ab ≤ bxa` and `ba ≤ ayb` for some `x, y`.
pub fn h_commutes(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    h_commutes_one_sided(s, a, b) && h_commutes_one_sided(s, b, a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityKind {
    /// `a ∈ (aSa]`
    Regular,
    /// `a ∈ (a²Sa²]`
    CompletelyRegular,
    /// `a ∈ (a²S]`
    RightRegular,
    /// `a ∈ (Sa²]`
    LeftRegular,
}

impl RegularityKind {
    pub const ALL: [RegularityKind; 4] = [
        RegularityKind::Regular,
        RegularityKind::CompletelyRegular,
        RegularityKind::RightRegular,
        RegularityKind::LeftRegular,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RegularityKind::Regular => "regular",
            RegularityKind::CompletelyRegular => "completely_regular",
            RegularityKind::RightRegular => "right_regular",
            RegularityKind::LeftRegular => "left_regular",
        }
    }
}

pub fn element_is_regular(s: &OrderedSemigroup, a: usize, kind: RegularityKind) -> bool {
    let a2 = s.mul(a, a);
    s.elements().any(|x| {
        let v = match kind {
            RegularityKind::Regular => s.mul3(a, x, a),
            RegularityKind::CompletelyRegular => s.mul3(a2, x, a2),
            RegularityKind::RightRegular => s.mul(a2, x),
            RegularityKind::LeftRegular => s.mul(x, a2),
        };
        s.leq(a, v)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    /// False when a precondition (regularity) is not met; `holds` is then
    /// false and the witness names the offending element.
    pub applicable: bool,
    pub witness: Option<Witness>,
    pub notes: String,
}

impl PropertyReport {
    fn holds(property: impl Into<String>) -> Self {
        PropertyReport { property: property.into(), holds: true, applicable: true, witness: None, notes: String::new() }
    }

    fn fails(property: impl Into<String>, clause: &'static str, elements: Vec<usize>) -> Self {
        PropertyReport {
            property: property.into(),
            holds: false,
            applicable: true,
            witness: Some(Witness { clause, elements }),
            notes: String::new(),
        }
    }

    fn not_applicable(property: impl Into<String>, non_regular: usize) -> Self {
        PropertyReport {
            property: property.into(),
            holds: false,
            applicable: false,
            witness: Some(Witness { clause: "not_regular", elements: vec![non_regular] }),
            notes: "defined only for regular ordered semigroups".to_string(),
        }
    }

    pub fn elements(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.elements.as_slice())
    }
}

/// Least element outside the regularity set of `kind`, if any.
pub fn first_non_regular(s: &OrderedSemigroup, kind: RegularityKind) -> Option<usize> {
    s.elements().find(|&a| !element_is_regular(s, a, kind))
}

pub fn regularity(s: &OrderedSemigroup, kind: RegularityKind) -> PropertyReport {
    match first_non_regular(s, kind) {
        None => PropertyReport::holds(kind.as_str()),
        Some(a) => PropertyReport::fails(kind.as_str(), kind.as_str(), vec![a]),
    }
}

pub fn is_regular(s: &OrderedSemigroup) -> bool {
    first_non_regular(s, RegularityKind::Regular).is_none()
}

/// Group-like: `∀a,b: a ∈ (Sb] and b ∈ (aS]`. The left variant keeps only
/// `a ∈ (Sb]`, the right variant only `b ∈ (aS]`. Witness `(a, b)`.
pub fn is_group_like(s: &OrderedSemigroup, side: Side) -> PropertyReport {
    let id = match side {
        Side::TwoSided => "group_like",
        Side::Left => "left_group_like",
        Side::Right => "right_group_like",
    };
    if let Some(a) = first_non_regular(s, RegularityKind::Regular) {
        return PropertyReport::not_applicable(id, a);
    }
    for (a, b) in crate::model::pairs(s.order()) {
        if side != Side::Right && !below_left_multiple(s, a, b) {
            return PropertyReport::fails(id, "a_in_Sb", vec![a, b]);
        }
        if side != Side::Left && !below_right_multiple(s, b, a) {
            return PropertyReport::fails(id, "b_in_aS", vec![a, b]);
        }
    }
    PropertyReport::holds(id)
}

/// Regular, and for every `a` any two inverses of `a` are H-related.
/// Witness `(a, b, c)` with `b, c ∈ V≤(a)` in different H-classes.
pub fn is_inverse_ordered(s: &OrderedSemigroup) -> PropertyReport {
    let h = greens_relations(s).h;
    is_inverse_ordered_with(s, &h)
}

pub(crate) fn is_inverse_ordered_with(s: &OrderedSemigroup, h: &Partition) -> PropertyReport {
    if let Some(a) = first_non_regular(s, RegularityKind::Regular) {
        return PropertyReport::fails("inverse", "not_regular", vec![a]);
    }
    for a in s.elements() {
        let inv = inverses_of(s, a);
        for b in inv.iter() {
            for c in inv.iter() {
                if !h.related(b, c) {
                    return PropertyReport::fails("inverse", "inverses_not_h_related", vec![a, b, c]);
                }
            }
        }
    }
    PropertyReport::holds("inverse")
}

/// Every principal (left or right) ideal is generated by an ordered
/// idempotent, and idempotents generating the same ideal are H-related.
pub fn generator_uniqueness(s: &OrderedSemigroup, side: Side) -> PropertyReport {
    assert!(side != Side::TwoSided, "generator uniqueness is defined for left and right ideals");
    let id = format!("generator_uniqueness_{side}");
    let h = greens_relations(s).h;
    let ideals: Vec<ElementSubset> = s.elements().map(|a| principal_ideal(s, a, side)).collect();
    let idem = ordered_idempotents(s);
    if let Some(a) = s.elements().find(|&a| !idem.iter().any(|e| ideals[e] == ideals[a])) {
        return PropertyReport::fails(id, "no_idempotent_generator", vec![a]);
    }
    for e in idem.iter() {
        for f in idem.iter() {
            if ideals[e] == ideals[f] && !h.related(e, f) {
                return PropertyReport::fails(id, "generators_not_h_related", vec![e, f]);
            }
        }
    }
    PropertyReport::holds(id)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown predicate `{0}`")]
pub struct UnknownPredicate(pub String);

/// Structure-level predicates addressable by id (filters, decomposition
/// class types).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructurePredicate {
    Regular,
    CompletelyRegular,
    LeftRegular,
    RightRegular,
    GroupLike,
    LeftGroupLike,
    RightGroupLike,
    Inverse,
    LeftSimple,
    RightSimple,
    Simple,
}

impl StructurePredicate {
    pub const ALL: [StructurePredicate; 11] = [
        StructurePredicate::Regular,
        StructurePredicate::CompletelyRegular,
        StructurePredicate::LeftRegular,
        StructurePredicate::RightRegular,
        StructurePredicate::GroupLike,
        StructurePredicate::LeftGroupLike,
        StructurePredicate::RightGroupLike,
        StructurePredicate::Inverse,
        StructurePredicate::LeftSimple,
        StructurePredicate::RightSimple,
        StructurePredicate::Simple,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StructurePredicate::Regular => "regular",
            StructurePredicate::CompletelyRegular => "completely_regular",
            StructurePredicate::LeftRegular => "left_regular",
            StructurePredicate::RightRegular => "right_regular",
            StructurePredicate::GroupLike => "group_like",
            StructurePredicate::LeftGroupLike => "left_group_like",
            StructurePredicate::RightGroupLike => "right_group_like",
            StructurePredicate::Inverse => "inverse",
            StructurePredicate::LeftSimple => "left_simple",
            StructurePredicate::RightSimple => "right_simple",
            StructurePredicate::Simple => "simple",
        }
    }

    pub fn evaluate(&self, s: &OrderedSemigroup) -> PropertyReport {
        let simple = |side| {
            let r = is_simple(s, side);
            match r.proper_ideal {
                None => PropertyReport::holds(self.as_str()),
                Some(i) => PropertyReport::fails(self.as_str(), "proper_ideal", i.to_vec()),
            }
        };
        match self {
            StructurePredicate::Regular => regularity(s, RegularityKind::Regular),
            StructurePredicate::CompletelyRegular => regularity(s, RegularityKind::CompletelyRegular),
            StructurePredicate::LeftRegular => regularity(s, RegularityKind::LeftRegular),
            StructurePredicate::RightRegular => regularity(s, RegularityKind::RightRegular),
            StructurePredicate::GroupLike => is_group_like(s, Side::TwoSided),
            StructurePredicate::LeftGroupLike => is_group_like(s, Side::Left),
            StructurePredicate::RightGroupLike => is_group_like(s, Side::Right),
            StructurePredicate::Inverse => is_inverse_ordered(s),
            StructurePredicate::LeftSimple => simple(Side::Left),
            StructurePredicate::RightSimple => simple(Side::Right),
            StructurePredicate::Simple => simple(Side::TwoSided),
        }
    }
}

impl fmt::Display for StructurePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for StructurePredicate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl FromStr for StructurePredicate {
    type Err = UnknownPredicate;

    /// `t_simple` is accepted as an alias of `group_like`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "t_simple" {
            return Ok(StructurePredicate::GroupLike);
        }
        if s == "is_inverse_ordered" {
            return Ok(StructurePredicate::Inverse);
        }
        StructurePredicate::ALL.into_iter().find(|p| p.as_str() == s).ok_or_else(|| UnknownPredicate(s.to_string()))
    }
}
