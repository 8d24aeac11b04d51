//! Condition catalog and theorem groupings.
//!
//! Each condition is a bounded quantifier scan over the carrier. A theorem
//! grouping is either an equivalence (all its terms must agree) or a set of
//! implications (every consequent whose hypothesis is met must hold). Sweeps
//! evaluate groupings over a corpus and collect every disagreement.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::check::Witness;
use crate::ideals::{downward_closure, principal_ideal, Side};
use crate::iso::{canonical_form, plain_encoding, CanonicalForm};
use crate::model::OrderedSemigroup;
use crate::properties::{
    first_non_regular, h_commutes, inverses_of, is_inverse_ordered_with, ordered_idempotents, PropertyReport,
    RegularityKind, StructurePredicate,
};
use crate::relations::{
    greens_relations, least_complete_semilattice_congruence, semilattice_decomposition_check, DecompositionReport,
    GreensRelations, Partition,
};
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("unknown condition id `{0}`")]
    UnknownCondition(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("structure is not a valid ordered semigroup")]
    InvalidStructure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionId {
    T33L,
    T33R,
    T35_1,
    T35_2,
    T35_3,
    L4_1,
    L4_2,
    L4_3,
    L4_4,
    Tesf,
    C1,
    C2,
    C3,
    C4,
    C5,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    CrW,
    CrJ,
}

/// What a condition presupposes before its verdict counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionHypothesis {
    None,
    Inverse,
    CompletelyRegular,
}

impl ConditionId {
    pub const ALL: [ConditionId; 23] = [
        ConditionId::T33L,
        ConditionId::T33R,
        ConditionId::T35_1,
        ConditionId::T35_2,
        ConditionId::T35_3,
        ConditionId::L4_1,
        ConditionId::L4_2,
        ConditionId::L4_3,
        ConditionId::L4_4,
        ConditionId::Tesf,
        ConditionId::C1,
        ConditionId::C2,
        ConditionId::C3,
        ConditionId::C4,
        ConditionId::C5,
        ConditionId::B1,
        ConditionId::B2,
        ConditionId::B3,
        ConditionId::B4,
        ConditionId::B5,
        ConditionId::B6,
        ConditionId::CrW,
        ConditionId::CrJ,
    ];

    pub fn as_str(&self) -> &'static str {
        use ConditionId::*;
        match self {
            T33L => "T33.L",
            T33R => "T33.R",
            T35_1 => "T35.1",
            T35_2 => "T35.2",
            T35_3 => "T35.3",
            L4_1 => "L4.1",
            L4_2 => "L4.2",
            L4_3 => "L4.3",
            L4_4 => "L4.4",
            Tesf => "TESF",
            C1 => "C.1",
            C2 => "C.2",
            C3 => "C.3",
            C4 => "C.4",
            C5 => "C.5",
            B1 => "B.1",
            B2 => "B.2",
            B3 => "B.3",
            B4 => "B.4",
            B5 => "B.5",
            B6 => "B.6",
            CrW => "CR.W",
            CrJ => "CR.J",
        }
    }

    pub fn hypothesis(&self) -> ConditionHypothesis {
        use ConditionId::*;
        match self {
            L4_1 | L4_2 | L4_3 | L4_4 => ConditionHypothesis::Inverse,
            CrW | CrJ => ConditionHypothesis::CompletelyRegular,
            _ => ConditionHypothesis::None,
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ConditionId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl FromStr for ConditionId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConditionId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| TheoremError::UnknownCondition(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Thm33,
    Thm35,
    ThmEsf,
    Cor,
    ThmBig,
    Lem4,
    Lem21,
}

/// Structures a grouping is meant to be checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    Valid,
    Regular,
}

pub enum Shape {
    /// Every term (a conjunction of conditions) takes the same value.
    Equivalence(&'static [&'static [ConditionId]]),
    /// The antecedent is reported alongside; each consequent must hold
    /// whenever its own hypothesis is met.
    Implication { antecedent: Option<ConditionId>, consequents: &'static [ConditionId] },
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Thm33,
        TheoremId::Thm35,
        TheoremId::ThmEsf,
        TheoremId::Cor,
        TheoremId::ThmBig,
        TheoremId::Lem4,
        TheoremId::Lem21,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Thm33 => "THM_3_3",
            TheoremId::Thm35 => "THM_3_5",
            TheoremId::ThmEsf => "THM_ESF",
            TheoremId::Cor => "COR",
            TheoremId::ThmBig => "THM_BIG",
            TheoremId::Lem4 => "LEM_4",
            TheoremId::Lem21 => "LEM_2_1",
        }
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            TheoremId::Lem21 => Ambient::Valid,
            _ => Ambient::Regular,
        }
    }

    pub fn shape(&self) -> Shape {
        use ConditionId::*;
        match self {
            TheoremId::Thm33 => Shape::Equivalence(&[&[T35_1], &[T33L, T33R]]),
            TheoremId::Thm35 => Shape::Equivalence(&[&[T35_1], &[T35_2], &[T35_3]]),
            TheoremId::ThmEsf => Shape::Equivalence(&[&[T35_1], &[Tesf]]),
            TheoremId::Cor => Shape::Equivalence(&[&[C1], &[C2], &[C3], &[C4], &[C5]]),
            TheoremId::ThmBig => Shape::Equivalence(&[&[B1], &[B2], &[B3], &[B4], &[B5], &[B6]]),
            TheoremId::Lem4 => Shape::Implication { antecedent: Some(T35_1), consequents: &[L4_1, L4_2, L4_3, L4_4] },
            TheoremId::Lem21 => Shape::Implication { antecedent: None, consequents: &[CrW, CrJ] },
        }
    }

    /// Conditions in report order.
    pub fn conditions(&self) -> Vec<ConditionId> {
        match self.shape() {
            Shape::Equivalence(terms) => terms.iter().flat_map(|t| t.iter().copied()).collect(),
            Shape::Implication { antecedent, consequents } => {
                antecedent.into_iter().chain(consequents.iter().copied()).collect()
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| TheoremError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub id: ConditionId,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub hypothesis_met: bool,
}

/// Everything the catalog needs about one structure, computed once.
pub struct Analysis<'a> {
    s: &'a OrderedSemigroup,
    idempotents: ElementSubset,
    inverses: Vec<ElementSubset>,
    greens: GreensRelations,
    non_regular: Option<usize>,
    non_completely_regular: Option<usize>,
    inverse: PropertyReport,
    decomposition: OnceCell<DecompositionReport>,
    least_csc: OnceCell<Partition>,
}

impl<'a> Analysis<'a> {
    pub fn new(s: &'a OrderedSemigroup) -> Self {
        let greens = greens_relations(s);
        let inverse = is_inverse_ordered_with(s, &greens.h);
        Analysis {
            s,
            idempotents: ordered_idempotents(s),
            inverses: s.elements().map(|a| inverses_of(s, a)).collect(),
            non_regular: first_non_regular(s, RegularityKind::Regular),
            non_completely_regular: first_non_regular(s, RegularityKind::CompletelyRegular),
            greens,
            inverse,
            decomposition: OnceCell::new(),
            least_csc: OnceCell::new(),
        }
    }

    pub fn structure(&self) -> &OrderedSemigroup {
        self.s
    }

    pub fn is_regular(&self) -> bool {
        self.non_regular.is_none()
    }

    pub fn is_completely_regular(&self) -> bool {
        self.non_completely_regular.is_none()
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse.holds
    }

    pub fn greens(&self) -> &GreensRelations {
        &self.greens
    }

    pub fn decomposition(&self) -> &DecompositionReport {
        self.decomposition.get_or_init(|| semilattice_decomposition_check(self.s, StructurePredicate::GroupLike))
    }

    pub fn least_complete_semilattice_congruence(&self) -> &Partition {
        self.least_csc.get_or_init(|| least_complete_semilattice_congruence(self.s))
    }

    fn hypothesis_met(&self, h: ConditionHypothesis) -> bool {
        match h {
            ConditionHypothesis::None => true,
            ConditionHypothesis::Inverse => self.is_inverse(),
            ConditionHypothesis::CompletelyRegular => self.is_completely_regular(),
        }
    }

    pub fn evaluate(&self, id: ConditionId) -> ConditionVerdict {
        let outcome = self.scan(id);
        ConditionVerdict {
            id,
            holds: outcome.is_none(),
            witness: outcome.flatten(),
            hypothesis_met: self.hypothesis_met(id.hypothesis()),
        }
    }

    /// `None` when the condition holds, `Some(witness)` otherwise (the
    /// witness itself may be absent for purely existential conditions).
    fn scan(&self, id: ConditionId) -> Option<Option<Witness>> {
        use ConditionId::*;
        let s = self.s;
        let n = s.order();
        let e_set = &self.idempotents;
        let g = &self.greens;
        let is_idem = |x: usize| e_set.contains(x);
        let fail = |clause: &'static str, elements: Vec<usize>| Some(Some(Witness { clause, elements }));
        let not_regular = || self.non_regular.map(|a| Some(Witness { clause: "not_regular", elements: vec![a] }));

        match id {
            T33L | T33R => {
                let side = if id == T33L { Side::Left } else { Side::Right };
                let ideals: Vec<ElementSubset> = s.elements().map(|a| principal_ideal(s, a, side)).collect();
                if let Some(a) = s.elements().find(|&a| !e_set.iter().any(|e| ideals[e] == ideals[a])) {
                    return fail("no_idempotent_generator", vec![a]);
                }
                for e in e_set.iter() {
                    for f in e_set.iter() {
                        if ideals[e] == ideals[f] && !g.h.related(e, f) {
                            return fail("generators_not_h_related", vec![e, f]);
                        }
                    }
                }
                None
            }
            T35_1 | C1 => {
                if self.inverse.holds {
                    None
                } else {
                    Some(self.inverse.witness.clone())
                }
            }
            T35_2 => {
                if let w @ Some(_) = not_regular() {
                    return w;
                }
                for e in e_set.iter() {
                    for f in e_set.iter() {
                        if !h_commutes(s, e, f) {
                            return fail("idempotents_not_h_commutative", vec![e, f]);
                        }
                    }
                }
                None
            }
            T35_3 => {
                for e in e_set.iter() {
                    for f in e_set.iter() {
                        let related = g.l.related(e, f) || g.r.related(e, f);
                        if related && !g.h.related(e, f) {
                            return fail("l_or_r_not_h", vec![e, f]);
                        }
                    }
                }
                None
            }
            L4_1 | L4_2 => {
                for a in 0..n {
                    for b in 0..n {
                        for a1 in self.inverses[a].iter() {
                            for b1 in self.inverses[b].iter() {
                                let (lhs, x, y) = if id == L4_1 {
                                    (g.l.related(a, b), s.mul(a1, a), s.mul(b1, b))
                                } else {
                                    (g.r.related(a, b), s.mul(a, a1), s.mul(b, b1))
                                };
                                if lhs != g.h.related(x, y) {
                                    return fail("equivalence_fails", vec![a, b, a1, b1]);
                                }
                            }
                        }
                    }
                }
                None
            }
            L4_3 => {
                for a in 0..n {
                    for a1 in self.inverses[a].iter() {
                        for e in e_set.iter() {
                            let left = (0..n).any(|x| is_idem(s.mul(s.mul3(a, e, x), a1)));
                            let right = (0..n).any(|y| is_idem(s.mul(s.mul3(a1, e, y), a)));
                            if !(left && right) {
                                return fail("no_idempotent_conjugate", vec![a, a1, e]);
                            }
                        }
                    }
                }
                None
            }
            L4_4 => {
                for a in 0..n {
                    for b in 0..n {
                        let ab = s.mul(a, b);
                        for a1 in self.inverses[a].iter() {
                            for b1 in self.inverses[b].iter() {
                                let b1a1 = s.mul(b1, a1);
                                // ab ≤ (abb')x(a'ab)
                                let abb1 = s.mul(ab, b1);
                                let a1ab = s.mul(a1, ab);
                                let first = (0..n).any(|x| s.leq(ab, s.mul3(abb1, x, a1ab)));
                                // b'a' ≤ (b'a'a)y(bb'a')
                                let b1a1a = s.mul(b1a1, a);
                                let bb1a1 = s.mul(b, b1a1);
                                let second = (0..n).any(|y| s.leq(b1a1, s.mul3(b1a1a, y, bb1a1)));
                                if !(first && second) {
                                    return fail("product_not_bounded", vec![a, b, a1, b1]);
                                }
                            }
                        }
                    }
                }
                None
            }
            Tesf => {
                for e in e_set.iter() {
                    for f in e_set.iter() {
                        let esf = self.sandwich_ideal(e, f);
                        let fse = self.sandwich_ideal(f, e);
                        for x in esf.iter() {
                            for x1 in self.inverses[x].iter() {
                                if !fse.contains(x1) {
                                    return fail("inverse_outside_fSe", vec![e, f, x, x1]);
                                }
                            }
                        }
                    }
                }
                None
            }
            C2 => {
                for a in 0..n {
                    for a1 in self.inverses[a].iter() {
                        if !h_commutes(s, s.mul(a, a1), s.mul(a1, a)) {
                            return fail("aa'_a'a_not_h_commutative", vec![a, a1]);
                        }
                    }
                }
                None
            }
            C3 | C4 => {
                for e in e_set.iter() {
                    let inv = self.inverses[e];
                    for b in inv.iter() {
                        for c in inv.iter() {
                            let ok = if id == C3 { g.h.related(b, c) } else { h_commutes(s, b, c) };
                            if !ok {
                                return fail("inverses_of_idempotent", vec![e, b, c]);
                            }
                        }
                    }
                }
                None
            }
            C5 => {
                for e in e_set.iter() {
                    for e1 in self.inverses[e].iter() {
                        if !h_commutes(s, s.mul(e, e1), s.mul(e1, e)) {
                            return fail("ee'_e'e_not_h_commutative", vec![e, e1]);
                        }
                    }
                }
                None
            }
            B1 => {
                if !self.inverse.holds {
                    return Some(self.inverse.witness.clone());
                }
                self.non_completely_regular
                    .map(|a| Some(Witness { clause: "not_completely_regular", elements: vec![a] }))
            }
            B2 => {
                if self.decomposition().holds {
                    None
                } else {
                    Some(None)
                }
            }
            B3 => {
                for a in 0..n {
                    for b in 0..n {
                        let (ab, ba) = (s.mul(a, b), s.mul(b, a));
                        if is_idem(ab) && is_idem(ba) && !g.h.related(ab, ba) {
                            return fail("ab_ba_not_h", vec![a, b]);
                        }
                    }
                }
                None
            }
            B4 => {
                for e in e_set.iter() {
                    for a in 0..n {
                        if !h_commutes(s, e, a) {
                            return fail("idempotent_not_h_commutative", vec![e, a]);
                        }
                    }
                }
                None
            }
            B5 => {
                for e in e_set.iter() {
                    for f in e_set.iter() {
                        if g.j.related(e, f) && !g.h.related(e, f) {
                            return fail("j_not_h", vec![e, f]);
                        }
                    }
                }
                None
            }
            B6 => {
                for a in 0..n {
                    for b in 0..n {
                        let h = g.h.related(a, b);
                        if g.l.related(a, b) != h || g.r.related(a, b) != h || g.j.related(a, b) != h {
                            return fail("relations_differ", vec![a, b]);
                        }
                    }
                }
                None
            }
            CrW => {
                for a in 0..n {
                    let a2 = s.mul(a, a);
                    let ok = (0..n).any(|x| s.leq(a, s.mul3(a, x, a2)) && s.leq(a, s.mul3(a2, x, a)));
                    if !ok {
                        return fail("no_common_x", vec![a]);
                    }
                }
                None
            }
            CrJ => {
                let least = self.least_complete_semilattice_congruence();
                for a in 0..n {
                    for b in 0..n {
                        if least.related(a, b) != g.j.related(a, b) {
                            return fail("least_congruence_differs_from_j", vec![a, b]);
                        }
                    }
                }
                None
            }
        }
    }

    /// `(uSv]`.
    fn sandwich_ideal(&self, u: usize, v: usize) -> ElementSubset {
        let s = self.s;
        let products = ElementSubset::from_elements(s.order(), s.elements().map(|x| s.mul3(u, x, v)));
        downward_closure(s, &products)
    }
}

pub fn evaluate_condition(s: &OrderedSemigroup, id: ConditionId) -> Result<ConditionVerdict, TheoremError> {
    if !s.is_valid() {
        return Err(TheoremError::InvalidStructure);
    }
    Ok(Analysis::new(s).evaluate(id))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub structure: CanonicalForm,
    /// Whether the structure meets the grouping's ambient hypothesis.
    pub hypothesis_met: bool,
    pub vector: Vec<ConditionVerdict>,
    pub consistent: bool,
}

impl TheoremReport {
    pub fn verdict(&self, id: ConditionId) -> Option<&ConditionVerdict> {
        self.vector.iter().find(|v| v.id == id)
    }
}

fn consistent(theorem: TheoremId, vector: &[ConditionVerdict]) -> bool {
    let get = |id: ConditionId| vector.iter().find(|v| v.id == id).expect("condition evaluated");
    match theorem.shape() {
        Shape::Equivalence(terms) => {
            let values: Vec<bool> = terms
                .iter()
                .filter(|t| t.iter().all(|&c| get(c).hypothesis_met))
                .map(|t| t.iter().all(|&c| get(c).holds))
                .collect();
            values.windows(2).all(|w| w[0] == w[1])
        }
        Shape::Implication { consequents, .. } => consequents.iter().all(|&c| {
            let v = get(c);
            !v.hypothesis_met || v.holds
        }),
    }
}

fn report_for(analysis: &Analysis<'_>, form: &CanonicalForm, theorem: TheoremId) -> TheoremReport {
    let vector: Vec<ConditionVerdict> = theorem.conditions().into_iter().map(|c| analysis.evaluate(c)).collect();
    let hypothesis_met = match theorem.ambient() {
        Ambient::Valid => true,
        Ambient::Regular => analysis.is_regular(),
    };
    TheoremReport { theorem, structure: form.clone(), hypothesis_met, consistent: consistent(theorem, &vector), vector }
}

/// Evaluates one grouping on one structure. Structures outside the ambient
/// hypothesis still get a full vector, flagged with `hypothesis_met: false`.
pub fn check_theorem(s: &OrderedSemigroup, theorem: TheoremId) -> Result<TheoremReport, TheoremError> {
    if !s.is_valid() {
        return Err(TheoremError::InvalidStructure);
    }
    let analysis = Analysis::new(s);
    Ok(report_for(&analysis, &canonical_form(s), theorem))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    /// Position of the structure in the input corpus.
    pub corpus_index: usize,
    pub report: TheoremReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSweep {
    pub theorem: TheoremId,
    pub checked: usize,
    pub hypothesis_met: usize,
    pub inconsistent: Vec<Finding>,
    /// Structures outside the ambient hypothesis.
    pub outside_hypothesis: usize,
    /// Outside-hypothesis structures whose vectors disagree; logged, not
    /// counted as failures.
    pub outside_disagreements: Vec<Finding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedStructure {
    pub corpus_index: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub structures: usize,
    pub skipped: Vec<SkippedStructure>,
    pub theorems: Vec<TheoremSweep>,
}

impl SweepReport {
    pub fn inconsistent_total(&self) -> usize {
        self.theorems.iter().map(|t| t.inconsistent.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.inconsistent_total() == 0
    }

    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremSweep> {
        self.theorems.iter().find(|t| t.theorem == id)
    }
}

type Evaluated = Result<(CanonicalForm, Vec<TheoremReport>), String>;

fn evaluate_member(s: &OrderedSemigroup, theorems: &[TheoremId]) -> Evaluated {
    let validation = s.validate();
    if !validation.valid() {
        let kinds: Vec<String> = validation.failures.iter().map(|f| f.kind.to_string()).collect();
        return Err(format!("invalid ordered semigroup ({})", kinds.join(", ")));
    }
    let analysis = Analysis::new(s);
    let form = canonical_form(s);
    let reports = theorems.iter().map(|&t| report_for(&analysis, &form, t)).collect();
    Ok((form, reports))
}

fn order_corpus(corpus: &[OrderedSemigroup]) -> Vec<usize> {
    let mut keyed: Vec<(CanonicalForm, Vec<u8>, usize)> =
        corpus.iter().enumerate().map(|(i, s)| (canonical_form(s), plain_encoding(s), i)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, i)| i).collect()
}

fn merge(corpus_len: usize, theorems: &[TheoremId], evaluated: Vec<(usize, Evaluated)>) -> SweepReport {
    let mut sweeps: Vec<TheoremSweep> = theorems
        .iter()
        .map(|&theorem| TheoremSweep {
            theorem,
            checked: 0,
            hypothesis_met: 0,
            inconsistent: Vec::new(),
            outside_hypothesis: 0,
            outside_disagreements: Vec::new(),
        })
        .collect();
    let mut skipped = Vec::new();
    for (corpus_index, outcome) in evaluated {
        match outcome {
            Err(note) => skipped.push(SkippedStructure { corpus_index, note }),
            Ok((_, reports)) => {
                for (sweep, report) in sweeps.iter_mut().zip(reports) {
                    sweep.checked += 1;
                    if report.hypothesis_met {
                        sweep.hypothesis_met += 1;
                        if !report.consistent {
                            sweep.inconsistent.push(Finding { corpus_index, report });
                        }
                    } else {
                        sweep.outside_hypothesis += 1;
                        if !report.consistent {
                            sweep.outside_disagreements.push(Finding { corpus_index, report });
                        }
                    }
                }
            }
        }
    }
    SweepReport { structures: corpus_len, skipped, theorems: sweeps }
}

/// Checks every grouping on every corpus member. Members are visited in
/// canonical-form order, so the report does not depend on input order
/// beyond the recorded corpus indices.
pub fn sweep(corpus: &[OrderedSemigroup], theorems: &[TheoremId]) -> SweepReport {
    let evaluated = order_corpus(corpus).into_iter().map(|i| (i, evaluate_member(&corpus[i], theorems))).collect();
    merge(corpus.len(), theorems, evaluated)
}

/// [`sweep`] with per-structure evaluation spread over the rayon pool.
/// Produces the same report.
pub fn sweep_parallel(corpus: &[OrderedSemigroup], theorems: &[TheoremId]) -> SweepReport {
    let evaluated = order_corpus(corpus).into_par_iter().map(|i| (i, evaluate_member(&corpus[i], theorems))).collect();
    merge(corpus.len(), theorems, evaluated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> OrderedSemigroup {
        OrderedSemigroup::new(2, vec![0, 1, 1, 1], vec![true, false, true, true]).unwrap()
    }

    fn lz2() -> OrderedSemigroup {
        OrderedSemigroup::with_discrete_order(2, vec![0, 0, 1, 1]).unwrap()
    }

    fn t1() -> OrderedSemigroup {
        OrderedSemigroup::with_discrete_order(1, vec![0]).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for c in ConditionId::ALL {
            assert_eq!(c.as_str().parse::<ConditionId>().unwrap(), c);
        }
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T99".parse::<ConditionId>().is_err());
        assert!("THM_9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn lz2_b3_witness() {
        let v = evaluate_condition(&lz2(), ConditionId::B3).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().elements, vec![0, 1]);
    }

    #[test]
    fn trivial_structure_satisfies_everything() {
        for c in ConditionId::ALL {
            let v = evaluate_condition(&t1(), c).unwrap();
            assert!(v.holds, "{c}");
            assert!(v.hypothesis_met);
        }
    }

    #[test]
    fn theorem_35_on_fixtures() {
        let r = check_theorem(&sl2(), TheoremId::Thm35).unwrap();
        assert!(r.consistent && r.hypothesis_met);
        assert!(r.vector.iter().all(|v| v.holds));
        let r = check_theorem(&lz2(), TheoremId::Thm35).unwrap();
        assert!(r.consistent);
        assert!(r.vector.iter().all(|v| !v.holds));
    }

    #[test]
    fn invalid_structure_rejected() {
        let bad = OrderedSemigroup::new(2, vec![0, 1, 1, 0], vec![true, true, false, true]).unwrap();
        assert_eq!(check_theorem(&bad, TheoremId::Thm35), Err(TheoremError::InvalidStructure));
        let report = sweep(&[bad, t1()], &[TheoremId::Thm35]);
        assert_eq!(report.skipped.len(), 1);
        assert_eq!(report.skipped[0].corpus_index, 0);
        assert_eq!(report.theorems[0].checked, 1);
    }

    #[test]
    fn empty_sweep() {
        let r = sweep(&[], &TheoremId::ALL);
        assert_eq!(r.structures, 0);
        assert!(r.theorems.iter().all(|t| t.checked == 0));
        assert!(r.is_clean());
    }
}
