//! Exhaustive generation of semigroups, partial orders and ordered semigroups.
//!
//! Tables are filled cell by cell in row-major order. After each assignment
//! every associativity triple and every compatibility constraint whose cells
//! are all known is checked, so dead branches are cut as soon as possible.
//! Ordered semigroups are generated order-first: the partial order is fixed,
//! then the table is searched under compatibility pruning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::iso::{canonical_labelling, plain_encoding, CanonicalForm};
use crate::model::{discrete_order, OrderedSemigroup};
use crate::properties::StructurePredicate;
use crate::theorems::{Analysis, ConditionId};

pub const DEFAULT_MAX_ORDER: usize = 4;
/// Reachable only with [`EnumerationOptions::allow_order_five`].
pub const EXTENDED_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {order} exceeds the maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("shard index {index} must be below shard count {count}")]
    BadShard { index: usize, count: usize },
    #[error("order {0} must be split into shards (i/k with k > 1)")]
    ShardingRequired(usize),
    #[error("unknown filter `{0}`")]
    UnknownFilter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Labelled,
    UpToIso,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    fn owns(&self, unit: usize) -> bool {
        unit % self.count == self.index
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = String;

    /// `i/k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (i, k) = s.split_once('/').ok_or_else(|| format!("shard `{s}` is not of the form i/k"))?;
        let index = i.trim().parse().map_err(|_| format!("bad shard index `{i}`"))?;
        let count: usize = k.trim().parse().map_err(|_| format!("bad shard count `{k}`"))?;
        if count == 0 || index >= count {
            return Err(format!("shard index {index} must be below shard count {count}"));
        }
        Ok(Shard { index, count })
    }
}

/// Post-filter on generated structures: a structure predicate or a catalog
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Predicate(StructurePredicate),
    Condition(ConditionId),
}

impl Filter {
    pub fn accepts(&self, s: &OrderedSemigroup) -> bool {
        match self {
            Filter::Predicate(p) => p.evaluate(s).holds,
            Filter::Condition(c) => Analysis::new(s).evaluate(*c).holds,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Predicate(p) => write!(f, "{p}"),
            Filter::Condition(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for Filter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Filter {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(p) = s.parse::<StructurePredicate>() {
            return Ok(Filter::Predicate(p));
        }
        s.parse::<ConditionId>().map(Filter::Condition).map_err(|_| EnumerationError::UnknownFilter(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationOptions {
    pub order: usize,
    pub mode: Mode,
    pub filters: Vec<Filter>,
    pub shard: Shard,
    pub allow_order_five: bool,
}

impl EnumerationOptions {
    pub fn new(order: usize, mode: Mode) -> Self {
        EnumerationOptions { order, mode, filters: Vec::new(), shard: Shard::WHOLE, allow_order_five: false }
    }

    pub fn labelled(order: usize) -> Self {
        Self::new(order, Mode::Labelled)
    }

    pub fn up_to_iso(order: usize) -> Self {
        Self::new(order, Mode::UpToIso)
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filters.push(filter);
        self
    }

    pub fn with_shard(mut self, shard: Shard) -> Self {
        self.shard = shard;
        self
    }

    pub fn max_order(&self) -> usize {
        if self.allow_order_five {
            EXTENDED_MAX_ORDER
        } else {
            DEFAULT_MAX_ORDER
        }
    }

    pub fn check(&self) -> Result<(), EnumerationError> {
        check_order(self.order, self.max_order())?;
        if self.shard.count == 0 || self.shard.index >= self.shard.count {
            return Err(EnumerationError::BadShard { index: self.shard.index, count: self.shard.count });
        }
        if self.order > DEFAULT_MAX_ORDER && self.shard.count == 1 {
            return Err(EnumerationError::ShardingRequired(self.order));
        }
        Ok(())
    }
}

fn check_order(order: usize, max: usize) -> Result<(), EnumerationError> {
    if order == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    if order > max {
        return Err(EnumerationError::OrderTooLarge { order, max });
    }
    Ok(())
}

const UNSET: u8 = u8::MAX;

/// Cell-wise table backtracking under associativity and, for a non-discrete
/// order, compatibility.
struct TableSearch<'a> {
    n: usize,
    leq: &'a [bool],
    strict: Vec<(usize, usize)>,
    table: Vec<u8>,
}

impl<'a> TableSearch<'a> {
    fn new(n: usize, leq: &'a [bool]) -> Self {
        let strict = (0..n).cartesian_product(0..n).filter(|&(a, b)| a != b && leq[a * n + b]).collect();
        TableSearch { n, leq, strict, table: vec![UNSET; n * n] }
    }

    #[inline]
    fn at(&self, a: usize, b: usize) -> u8 {
        self.table[a * self.n + b]
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.at(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.at(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let lhs = self.at(ab as usize, c);
                    let rhs = self.at(a, bc as usize);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        for &(a, b) in &self.strict {
            for x in 0..n {
                let (xa, xb) = (self.at(x, a), self.at(x, b));
                if xa != UNSET && xb != UNSET && !self.leq[xa as usize * n + xb as usize] {
                    return false;
                }
                let (ax, bx) = (self.at(a, x), self.at(b, x));
                if ax != UNSET && bx != UNSET && !self.leq[ax as usize * n + bx as usize] {
                    return false;
                }
            }
        }
        true
    }

    /// Visits every complete table; `first_cell` restricts the value of
    /// cell (0, 0) when given.
    fn run(&mut self, first_cell: Option<u8>, visit: &mut dyn FnMut(&[u8])) {
        self.table.fill(UNSET);
        self.fill(0, first_cell, visit);
    }

    fn fill(&mut self, cell: usize, first_cell: Option<u8>, visit: &mut dyn FnMut(&[u8])) {
        if cell == self.table.len() {
            visit(&self.table);
            return;
        }
        let values: Vec<u8> = match (cell, first_cell) {
            (0, Some(v)) => vec![v],
            _ => (0..self.n as u8).collect(),
        };
        for v in values {
            self.table[cell] = v;
            if self.consistent() {
                self.fill(cell + 1, first_cell, visit);
            }
        }
        self.table[cell] = UNSET;
    }
}

/// All partial orders on `n` labelled points, as row-major `leq` matrices.
/// Each unordered pair is independently unrelated, `i ≤ j` or `j ≤ i`;
/// transitivity is checked on the completed relation.
pub fn enumerate_partial_orders(n: usize) -> Result<Vec<Vec<bool>>, EnumerationError> {
    check_order(n, EXTENDED_MAX_ORDER)?;
    Ok(partial_orders(n))
}

fn partial_orders(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut leq = discrete_order(n);
    fn rec(k: usize, n: usize, pairs: &[(usize, usize)], leq: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == pairs.len() {
            let transitive =
                (0..n).all(|i| (0..n).all(|j| !leq[i * n + j] || (0..n).all(|m| !leq[j * n + m] || leq[i * n + m])));
            if transitive {
                out.push(leq.clone());
            }
            return;
        }
        let (i, j) = pairs[k];
        for choice in 0..3 {
            leq[i * n + j] = choice == 1;
            leq[j * n + i] = choice == 2;
            rec(k + 1, n, pairs, leq, out);
        }
        leq[i * n + j] = false;
        leq[j * n + i] = false;
    }
    rec(0, n, &pairs, &mut leq, &mut out);
    out
}

/// One representative per isomorphism class of partial orders.
fn partial_orders_up_to_iso(n: usize) -> Vec<Vec<bool>> {
    let mut seen: BTreeMap<Vec<bool>, Vec<bool>> = BTreeMap::new();
    for leq in partial_orders(n) {
        let key = (0..n)
            .permutations(n)
            .map(|p| {
                let mut m = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        m[p[i] * n + p[j]] = leq[i * n + j];
                    }
                }
                m
            })
            .max()
            .unwrap();
        seen.entry(key).or_insert(leq);
    }
    seen.into_values().collect()
}

/// Associative tables of order `n`. Labelled mode returns every table;
/// up-to-iso mode returns the canonical representative of each class
/// (structures compared with the discrete order).
pub fn enumerate_semigroups(opts: &EnumerationOptions) -> Result<Vec<Vec<usize>>, EnumerationError> {
    opts.check()?;
    let n = opts.order;
    let discrete = discrete_order(n);
    let mut search = TableSearch::new(n, &discrete);
    let mut found: Vec<OrderedSemigroup> = Vec::new();
    for v in 0..n as u8 {
        if !opts.shard.owns(v as usize) {
            continue;
        }
        search.run(Some(v), &mut |t| found.push(OrderedSemigroup::from_raw(n, t.to_vec(), discrete.clone())));
    }
    let found = finish(found, opts);
    Ok(found.into_iter().map(|s| s.mult_table().iter().map(|&v| v as usize).collect()).collect())
}

/// Ordered semigroups of order `n`, order-first. In up-to-iso mode shards are
/// assigned per partial-order class, so isomorphic structures never straddle
/// shards; in labelled mode per (partial order, value of `0·0`).
pub fn enumerate_ordered_semigroups(opts: &EnumerationOptions) -> Result<Vec<OrderedSemigroup>, EnumerationError> {
    opts.check()?;
    let n = opts.order;
    let mut found = Vec::new();
    match opts.mode {
        Mode::Labelled => {
            for (k, leq) in partial_orders(n).iter().enumerate() {
                let mut search = TableSearch::new(n, leq);
                for v in 0..n {
                    if opts.shard.owns(k * n + v) {
                        search.run(Some(v as u8), &mut |t| {
                            found.push(OrderedSemigroup::from_raw(n, t.to_vec(), leq.clone()))
                        });
                    }
                }
            }
        }
        Mode::UpToIso => {
            for (k, leq) in partial_orders_up_to_iso(n).iter().enumerate() {
                if opts.shard.owns(k) {
                    let mut search = TableSearch::new(n, leq);
                    search.run(None, &mut |t| found.push(OrderedSemigroup::from_raw(n, t.to_vec(), leq.clone())));
                }
            }
        }
    }
    Ok(finish(found, opts))
}

/// Table-first generation (all semigroups, then every order checked for
/// compatibility). Slower; kept to cross-check the order-first search.
pub fn enumerate_ordered_semigroups_table_first(
    opts: &EnumerationOptions,
) -> Result<Vec<OrderedSemigroup>, EnumerationError> {
    opts.check()?;
    // table shards would split isomorphism classes
    if opts.mode == Mode::UpToIso && opts.shard.count > 1 {
        return Err(EnumerationError::BadShard { index: opts.shard.index, count: opts.shard.count });
    }
    let n = opts.order;
    let tables = enumerate_semigroups(&EnumerationOptions::labelled(n))?;
    let orders = partial_orders(n);
    let mut found = Vec::new();
    for (k, table) in tables.iter().enumerate() {
        if !opts.shard.owns(k) {
            continue;
        }
        for leq in &orders {
            let s = OrderedSemigroup::from_raw(n, table.iter().map(|&v| v as u8).collect(), leq.clone());
            if s.is_valid() {
                found.push(s);
            }
        }
    }
    Ok(finish(found, opts))
}

/// Applies filters, deduplicates in up-to-iso mode and sorts by canonical
/// form (then by plain encoding for labelled runs).
fn finish(found: Vec<OrderedSemigroup>, opts: &EnumerationOptions) -> Vec<OrderedSemigroup> {
    match opts.mode {
        Mode::Labelled => {
            let mut keyed: Vec<(CanonicalForm, Vec<u8>, OrderedSemigroup)> = found
                .into_iter()
                .filter(|s| opts.filters.iter().all(|f| f.accepts(s)))
                .map(|s| (canonical_labelling(&s).0, plain_encoding(&s), s))
                .collect();
            keyed.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
            keyed.into_iter().map(|(_, _, s)| s).collect()
        }
        Mode::UpToIso => {
            let mut classes: BTreeMap<CanonicalForm, OrderedSemigroup> = BTreeMap::new();
            for s in found {
                let (form, perm) = canonical_labelling(&s);
                classes.entry(form).or_insert_with(|| s.relabel(&perm));
            }
            classes.into_values().filter(|s| opts.filters.iter().all(|f| f.accepts(s))).collect()
        }
    }
}

/// Number of (table, order) candidate pairs of order `n`: labelled
/// semigroups times labelled partial orders.
pub fn labelled_candidate_count(n: usize) -> Result<usize, EnumerationError> {
    let mut tables = 0;
    for index in 0..2 {
        let opts = EnumerationOptions { allow_order_five: true, ..EnumerationOptions::labelled(n) }
            .with_shard(Shard { index, count: 2 });
        tables += enumerate_semigroups(&opts)?.len();
    }
    Ok(tables * enumerate_partial_orders(n)?.len())
}
