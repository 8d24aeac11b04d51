//! Partitions of the carrier, Green's relations and semilattice congruences.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::check::Check;
use crate::ideals::{principal_ideal, Side};
use crate::model::OrderedSemigroup;
use crate::properties::StructurePredicate;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("partition covers {found} elements but the structure has order {expected}")]
    WrongUniverse { expected: usize, found: usize },
    #[error("classes overlap at element {0}")]
    Overlap(usize),
    #[error("element {0} is in no class")]
    Uncovered(usize),
    #[error("empty class")]
    EmptyClass,
    #[error("unknown congruence kind `{0}`")]
    UnknownKind(String),
}

/// An equivalence relation on `0..n`. Class ids are assigned in order of each
/// class's least element, so equal relations compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<ElementSubset>,
}

impl Partition {
    /// Normalises arbitrary labels (`labels[a] == labels[b]` iff related).
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let n = labels.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ElementSubset> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = ElementSubset::empty(n);
            for b in a..n {
                if labels[b] == labels[a] {
                    class_of[b] = id;
                    class.insert(b);
                }
            }
            classes.push(class);
        }
        Partition { class_of, classes }
    }

    pub fn from_classes(n: usize, classes: &[ElementSubset]) -> Result<Self, RelationError> {
        let mut labels = vec![usize::MAX; n];
        for (id, class) in classes.iter().enumerate() {
            if class.universe() != n {
                return Err(RelationError::WrongUniverse { expected: n, found: class.universe() });
            }
            if class.is_empty() {
                return Err(RelationError::EmptyClass);
            }
            for a in class.iter() {
                if labels[a] != usize::MAX {
                    return Err(RelationError::Overlap(a));
                }
                labels[a] = id;
            }
        }
        if let Some(a) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(RelationError::Uncovered(a));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_id(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_containing(&self, a: usize) -> ElementSubset {
        self.classes[self.class_of[a]]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> &[ElementSubset] {
        &self.classes
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes.iter().all(|c| c.iter().all(|a| coarser.related(a, c.first().unwrap())))
    }

    /// Common refinement (intersection of the two relations).
    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> = (0..self.order()).map(|a| (self.class_of[a], other.class_of[a])).collect();
        Self::from_labels(&labels)
    }

    /// Checks the representation invariant: classes are disjoint, nonempty,
    /// cover the carrier and agree with `class_of`.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        let mut seen = 0u64;
        for (id, c) in self.classes.iter().enumerate() {
            if c.is_empty() || c.bits() & seen != 0 || c.iter().any(|a| self.class_of[a] != id) {
                return false;
            }
            seen |= c.bits();
        }
        seen == ElementSubset::full(n).bits()
    }

    /// All partitions of `0..n`, in restricted-growth-string order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(pos: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if pos == rgs.len() {
                out.push(Partition::from_labels(rgs));
                return;
            }
            for v in 0..=max + 1 {
                rgs[pos] = v;
                rec(pos + 1, max.max(v), rgs, out);
            }
        }
        if n == 0 {
            return out;
        }
        rec(1, 0, &mut rgs, &mut out);
        out
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.classes.iter()).finish()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vecs().serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreensRelations {
    pub l: Partition,
    pub r: Partition,
    pub j: Partition,
    pub h: Partition,
}

/// Green's relations from equality of (downward closed) principal ideals.
pub fn greens_relations(s: &OrderedSemigroup) -> GreensRelations {
    let ideals = |side| -> Vec<ElementSubset> { s.elements().map(|a| principal_ideal(s, a, side)).collect() };
    let l = Partition::from_labels(&ideals(Side::Left));
    let r = Partition::from_labels(&ideals(Side::Right));
    let j = Partition::from_labels(&ideals(Side::TwoSided));
    let h = l.meet(&r);
    GreensRelations { l, r, j, h }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceKind {
    Left,
    Right,
    TwoSided,
    Semilattice,
    CompleteSemilattice,
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceKind::Left => "left",
            CongruenceKind::Right => "right",
            CongruenceKind::TwoSided => "two_sided",
            CongruenceKind::Semilattice => "semilattice",
            CongruenceKind::CompleteSemilattice => "complete_semilattice",
        })
    }
}

impl FromStr for CongruenceKind {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(CongruenceKind::Left),
            "right" => Ok(CongruenceKind::Right),
            "two_sided" => Ok(CongruenceKind::TwoSided),
            "semilattice" => Ok(CongruenceKind::Semilattice),
            "complete_semilattice" => Ok(CongruenceKind::CompleteSemilattice),
            other => Err(RelationError::UnknownKind(other.to_string())),
        }
    }
}

/// Checks the congruence conditions of `kind` in the order left, right,
/// idempotent (`a ≡ a²`), commutative (`ab ≡ ba`), order absorption
/// (`a ≤ b ⇒ a ≡ ab`) and returns the first violating tuple.
pub fn is_congruence(s: &OrderedSemigroup, p: &Partition, kind: CongruenceKind) -> Result<Check, RelationError> {
    let n = s.order();
    if p.order() != n {
        return Err(RelationError::WrongUniverse { expected: n, found: p.order() });
    }
    use CongruenceKind::*;
    let left = kind != Right;
    let right = kind != Left;
    let semilattice = matches!(kind, Semilattice | CompleteSemilattice);

    if left {
        for (a, b, c) in crate::model::triples(n) {
            if p.related(a, b) && !p.related(s.mul(c, a), s.mul(c, b)) {
                return Ok(Check::fail("left_compatible", vec![a, b, c]));
            }
        }
    }
    if right {
        for (a, b, c) in crate::model::triples(n) {
            if p.related(a, b) && !p.related(s.mul(a, c), s.mul(b, c)) {
                return Ok(Check::fail("right_compatible", vec![a, b, c]));
            }
        }
    }
    if semilattice {
        if let Some(a) = (0..n).find(|&a| !p.related(a, s.mul(a, a))) {
            return Ok(Check::fail("idempotent", vec![a]));
        }
        if let Some((a, b)) = crate::model::pairs(n).find(|&(a, b)| !p.related(s.mul(a, b), s.mul(b, a))) {
            return Ok(Check::fail("commutative", vec![a, b]));
        }
    }
    if kind == CompleteSemilattice {
        if let Some((a, b)) = crate::model::pairs(n).find(|&(a, b)| s.leq(a, b) && !p.related(a, s.mul(a, b))) {
            return Ok(Check::fail("order_absorbing", vec![a, b]));
        }
    }
    Ok(Check::pass())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            self.parent[i] = self.find(self.parent[i]);
        }
        self.parent[i]
    }

    /// Returns true when two distinct classes were merged.
    fn union(&mut self, i: usize, j: usize) -> bool {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        // keep the smaller index as root so results do not depend on merge order
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.parent[hi] = lo;
        true
    }
}

/// The congruence generated by `a ~ a²`, `ab ~ ba` and `a ~ ab` for `a ≤ b`:
/// seeds are merged with union-find, then classes are re-saturated under left
/// and right translations until nothing changes.
pub fn least_complete_semilattice_congruence(s: &OrderedSemigroup) -> Partition {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        uf.union(a, s.mul(a, a));
        for b in 0..n {
            uf.union(s.mul(a, b), s.mul(b, a));
            if s.leq(a, b) {
                uf.union(a, s.mul(a, b));
            }
        }
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            let r = uf.find(a);
            if r == a {
                continue;
            }
            for c in 0..n {
                changed |= uf.union(s.mul(c, a), s.mul(c, r));
                changed |= uf.union(s.mul(a, c), s.mul(r, c));
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
    Partition::from_labels(&labels)
}

/// All complete semilattice congruences, found by filtering every partition.
pub fn complete_semilattice_congruences(s: &OrderedSemigroup) -> Vec<Partition> {
    Partition::all(s.order())
        .into_iter()
        .filter(|p| is_congruence(s, p, CongruenceKind::CompleteSemilattice).unwrap().holds)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub predicate: StructurePredicate,
    pub holds: bool,
    /// First qualifying congruence in restricted-growth order.
    pub congruence: Option<Partition>,
    pub congruences_checked: usize,
    /// Whether `J` itself is a complete semilattice congruence with
    /// qualifying classes.
    pub via_j: bool,
}

/// Does some complete semilattice congruence have every class (as an ordered
/// subsemigroup with the induced order) satisfying `predicate`?
pub fn semilattice_decomposition_check(s: &OrderedSemigroup, predicate: StructurePredicate) -> DecompositionReport {
    let congruences = complete_semilattice_congruences(s);
    let congruence = congruences.iter().find(|p| classes_satisfy(s, p, predicate)).cloned();
    let j = greens_relations(s).j;
    let via_j = congruences.contains(&j) && classes_satisfy(s, &j, predicate);
    DecompositionReport {
        predicate,
        holds: congruence.is_some(),
        congruence,
        congruences_checked: congruences.len(),
        via_j,
    }
}

fn classes_satisfy(s: &OrderedSemigroup, p: &Partition, predicate: StructurePredicate) -> bool {
    p.classes().iter().all(|c| match s.restrict(c) {
        Some((sub, _)) => predicate.evaluate(&sub).holds,
        None => false,
    })
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
    fn partition_basics() {
        let p = Partition::from_labels(&['x', 'y', 'x']);
        assert_eq!(p.to_vecs(), vec![vec![0, 2], vec![1]]);
        assert!(p.is_well_formed());
        assert!(Partition::identity(3).refines(&p));
        assert!(p.refines(&Partition::universal(3)));
        assert!(!p.refines(&Partition::identity(3)));
        assert_eq!(p.meet(&Partition::universal(3)), p);
        let bell: Vec<usize> = (1..=5).map(|n| Partition::all(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn from_classes_rejects_bad_input() {
        let c = |e: &[usize]| ElementSubset::from_elements(3, e.iter().copied());
        assert!(Partition::from_classes(3, &[c(&[0, 1]), c(&[2])]).is_ok());
        assert_eq!(Partition::from_classes(3, &[c(&[0, 1]), c(&[1, 2])]), Err(RelationError::Overlap(1)));
        assert_eq!(Partition::from_classes(3, &[c(&[0, 1])]), Err(RelationError::Uncovered(2)));
    }

    #[test]
    fn greens_on_fixtures() {
        let g = greens_relations(&sl2());
        for p in [&g.l, &g.r, &g.j, &g.h] {
            assert_eq!(*p, Partition::identity(2));
        }
        let g = greens_relations(&lz2());
        assert_eq!(g.l, Partition::universal(2));
        assert_eq!(g.r, Partition::identity(2));
        assert_eq!(g.h, Partition::identity(2));
        assert_eq!(g.j, Partition::universal(2));
        let g = greens_relations(&t1());
        assert_eq!(g.h, Partition::universal(1));
    }

    #[test]
    fn congruence_checks() {
        let id = Partition::identity(2);
        assert!(is_congruence(&sl2(), &id, CongruenceKind::CompleteSemilattice).unwrap().holds);
        assert!(is_congruence(&lz2(), &Partition::universal(2), CongruenceKind::TwoSided).unwrap().holds);
        let c = is_congruence(&lz2(), &id, CongruenceKind::Semilattice).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness.as_ref().unwrap().clause, "commutative");
        assert_eq!(c.elements(), Some(&[0, 1][..]));
        assert!(is_congruence(&lz2(), &Partition::identity(3), CongruenceKind::Left).is_err());
    }

    #[test]
    fn least_complete_congruence() {
        assert_eq!(least_complete_semilattice_congruence(&sl2()), Partition::identity(2));
        assert_eq!(least_complete_semilattice_congruence(&lz2()), Partition::universal(2));
        assert_eq!(least_complete_semilattice_congruence(&t1()), Partition::universal(1));
    }

    #[test]
    fn decompositions() {
        let r = semilattice_decomposition_check(&sl2(), StructurePredicate::GroupLike);
        assert!(r.holds);
        assert_eq!(r.congruence, Some(Partition::identity(2)));
        assert!(r.via_j);
        let r = semilattice_decomposition_check(&lz2(), StructurePredicate::GroupLike);
        assert!(!r.holds);
        assert_eq!(r.congruences_checked, 1);
        assert!(semilattice_decomposition_check(&t1(), StructurePredicate::GroupLike).holds);
    }
}
