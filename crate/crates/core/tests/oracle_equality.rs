//! Library results against the brute-force reference computations.

use osg_core::enumerate::{
    enumerate_ordered_semigroups, enumerate_ordered_semigroups_table_first, enumerate_partial_orders,
    enumerate_semigroups, labelled_candidate_count, EnumerationOptions,
};
use osg_core::relations::greens_relations;
use osg_core::{canonical_form, is_isomorphic, oracle, OrderedSemigroup};

fn table(s: &OrderedSemigroup) -> Vec<usize> {
    s.mult_table().iter().map(|&v| v as usize).collect()
}

fn pair(s: &OrderedSemigroup) -> (Vec<usize>, Vec<bool>) {
    (table(s), s.leq_matrix().to_vec())
}

#[test]
fn semigroup_tables_match_naive_filter() {
    for n in 1..=3 {
        let mut naive = oracle::semigroup_tables(n);
        let mut lib = enumerate_semigroups(&EnumerationOptions::labelled(n)).unwrap();
        naive.sort();
        lib.sort();
        assert_eq!(naive, lib, "order {n}");
    }
    assert_eq!(enumerate_semigroups(&EnumerationOptions::labelled(2)).unwrap().len(), 8);
}

#[test]
fn semigroup_classes_match_pairwise_search() {
    for n in 1..=3 {
        let discrete: Vec<bool> = (0..n * n).map(|c| c / n == c % n).collect();
        let tables: Vec<_> = oracle::semigroup_tables(n).into_iter().map(|t| (t, discrete.clone())).collect();
        let lib = enumerate_semigroups(&EnumerationOptions::up_to_iso(n)).unwrap();
        assert_eq!(oracle::count_classes(n, &tables), lib.len(), "order {n}");
    }
    assert_eq!(enumerate_semigroups(&EnumerationOptions::up_to_iso(2)).unwrap().len(), 5);
}

#[test]
fn partial_orders_match_naive_filter() {
    for n in 1..=4 {
        let mut naive = oracle::partial_orders(n);
        let mut lib = enumerate_partial_orders(n).unwrap();
        naive.sort();
        lib.sort();
        assert_eq!(naive, lib, "order {n}");
    }
}

#[test]
fn ordered_semigroups_match_naive_pairs() {
    for n in 1..=3 {
        let (naive, candidates) = oracle::ordered_semigroups(n);
        let mut naive: Vec<_> = naive;
        let mut lib: Vec<_> =
            enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).unwrap().iter().map(pair).collect();
        naive.sort();
        lib.sort();
        assert_eq!(naive, lib, "order {n}");
        assert_eq!(candidates, labelled_candidate_count(n).unwrap());
    }
    assert_eq!(labelled_candidate_count(2).unwrap(), 24);
    assert_eq!(enumerate_ordered_semigroups(&EnumerationOptions::labelled(2)).unwrap().len(), 20);
}

#[test]
fn table_first_and_order_first_agree() {
    for n in 1..=3 {
        for opts in [EnumerationOptions::labelled(n), EnumerationOptions::up_to_iso(n)] {
            let a: Vec<_> = enumerate_ordered_semigroups(&opts).unwrap().iter().map(pair).collect();
            let b: Vec<_> = enumerate_ordered_semigroups_table_first(&opts).unwrap().iter().map(pair).collect();
            assert_eq!(a, b, "order {n}");
        }
    }
}

#[test]
fn up_to_iso_classes_match_pairwise_search() {
    for n in 1..=3 {
        let (naive, _) = oracle::ordered_semigroups(n);
        let iso = enumerate_ordered_semigroups(&EnumerationOptions::up_to_iso(n)).unwrap();
        assert_eq!(oracle::count_classes(n, &naive), iso.len(), "order {n}");
    }
}

#[test]
fn up_to_iso_covers_labelled_without_duplicates() {
    for n in 1..=3 {
        let labelled = enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).unwrap();
        let iso = enumerate_ordered_semigroups(&EnumerationOptions::up_to_iso(n)).unwrap();
        for (i, a) in iso.iter().enumerate() {
            for b in &iso[i + 1..] {
                let (ta, la) = pair(a);
                let (tb, lb) = pair(b);
                assert!(!oracle::isomorphic(n, &ta, &la, &tb, &lb), "duplicate class at order {n}");
            }
        }
        for s in &labelled {
            let hits = iso.iter().filter(|r| is_isomorphic(s, r)).count();
            assert_eq!(hits, 1, "order {n}");
            let (ts, ls) = pair(s);
            assert!(iso.iter().any(|r| {
                let (tr, lr) = pair(r);
                oracle::isomorphic(n, &ts, &ls, &tr, &lr)
            }));
        }
    }
}

#[test]
fn canonical_form_decides_isomorphism_like_the_oracle() {
    let labelled = enumerate_ordered_semigroups(&EnumerationOptions::labelled(2)).unwrap();
    for a in &labelled {
        for b in &labelled {
            let (ta, la) = pair(a);
            let (tb, lb) = pair(b);
            assert_eq!(canonical_form(a) == canonical_form(b), oracle::isomorphic(2, &ta, &la, &tb, &lb));
        }
    }
}

#[test]
fn validate_agrees_with_naive_axioms() {
    // Every table of order 2 paired with every reflexive relation.
    let n = 2;
    for t in 0..16usize {
        let mult: Vec<usize> = (0..4).map(|c| t >> c & 1).collect();
        for r in 0..4usize {
            let leq = vec![true, r & 1 == 1, r & 2 == 2, true];
            let s = OrderedSemigroup::new(n, mult.clone(), leq.clone()).unwrap();
            let naive = oracle::is_associative(n, &mult)
                && oracle::is_partial_order(n, &leq)
                && oracle::is_compatible(n, &mult, &leq);
            assert_eq!(s.is_valid(), naive, "{mult:?} {leq:?}");
            for f in &s.validate().failures {
                assert!(f.reverifies(&s));
            }
        }
    }
}

#[test]
fn greens_match_elementwise_oracle() {
    for n in 1..=3 {
        for s in enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).unwrap() {
            let [l, r, j, h] = oracle::greens_matrices(n, &table(&s), s.leq_matrix());
            let g = greens_relations(&s);
            for (naive, lib) in [(&l, &g.l), (&r, &g.r), (&j, &g.j), (&h, &g.h)] {
                let lib: Vec<bool> = (0..n * n).map(|c| lib.related(c / n, c % n)).collect();
                assert_eq!(naive, &lib);
            }
        }
    }
}
