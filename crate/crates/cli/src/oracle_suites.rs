//! Brute-force suites comparing the naive reference computations with the
//! library. Each suite emits one finding per comparison.

use osg_core::enumerate::{
    enumerate_ordered_semigroups, enumerate_partial_orders, enumerate_semigroups, labelled_candidate_count,
    EnumerationOptions,
};
use osg_core::ideals::principal_ideal;
use osg_core::relations::greens_relations;
use osg_core::{fixtures, oracle, AxiomKind, OrderedSemigroup, Side};

use crate::commands::{CliError, Outcome};
use crate::report::{Finding, Report};

pub const SUITES: [&str; 6] = ["px3", "enumeration", "posets", "ordered", "fixtures", "greens"];

struct Suite {
    report: Report,
    mismatches: usize,
}

impl Suite {
    fn compare(&mut self, what: String, oracle: impl Into<serde_json::Value>, library: impl Into<serde_json::Value>) {
        let (o, l) = (oracle.into(), library.into());
        let agree = o == l;
        if !agree {
            self.mismatches += 1;
        }
        self.report.push(
            Finding::new("comparison", None)
                .with("check", what)
                .with("oracle", o)
                .with("library", l)
                .with("agree", agree),
        );
    }
}

pub fn run(name: &str) -> Outcome {
    let mut suite = Suite { report: Report::new("oracle"), mismatches: 0 };
    suite.report.option("suite", name);
    match name {
        "px3" => px3(&mut suite),
        "enumeration" => enumeration(&mut suite)?,
        "posets" => posets(&mut suite)?,
        "ordered" => ordered(&mut suite)?,
        "fixtures" => fixture_checks(&mut suite),
        "greens" => greens(&mut suite),
        "all" => {
            px3(&mut suite);
            enumeration(&mut suite)?;
            posets(&mut suite)?;
            ordered(&mut suite)?;
            fixture_checks(&mut suite);
            greens(&mut suite);
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown oracle suite `{other}` (expected one of {}, all)",
                SUITES.join(", ")
            )))
        }
    }
    let message = if suite.mismatches == 0 {
        "oracle and library agree".to_string()
    } else {
        format!("{} mismatches between oracle and library", suite.mismatches)
    };
    let status = u8::from(suite.mismatches > 0);
    suite.report.push(Finding::new("summary", None).with("mismatches", suite.mismatches).with("message", message));
    Ok((suite.report, status))
}

fn table(s: &OrderedSemigroup) -> Vec<usize> {
    s.mult_table().iter().map(|&c| c as usize).collect()
}

fn px3(suite: &mut Suite) {
    let doc = fixtures::load("px3").expect("px3 fixture parses");
    let s = &doc.structure;
    let n = s.order();
    let mult = table(s);
    for (label, t) in [("table", mult.clone()), ("transpose", oracle::transpose(n, &mult))] {
        let failures = oracle::associativity_failures(n, &t);
        let first: Option<Vec<usize>> = failures.first().map(|&(i, j, k)| vec![i, j, k]);
        let candidate = OrderedSemigroup::with_discrete_order(n, t).expect("well-sized table");
        let report = candidate.validate();
        let library = report.failure(AxiomKind::Associativity).map(|f| f.witness.clone());
        suite.compare(format!("{label}: first associativity failure"), first, library);
        suite.compare(format!("{label}: valid"), failures.is_empty(), report.valid());
    }
}

fn enumeration(suite: &mut Suite) -> Result<(), CliError> {
    for n in 1..=3 {
        let naive = oracle::semigroup_tables(n);
        let library = enumerate_semigroups(&EnumerationOptions::labelled(n))?;
        suite.compare(format!("semigroup tables of order {n}"), naive.len(), library.len());
    }
    for n in 1..=3 {
        let discrete: Vec<bool> = (0..n * n).map(|c| c / n == c % n).collect();
        let tables: Vec<(Vec<usize>, Vec<bool>)> =
            oracle::semigroup_tables(n).into_iter().map(|t| (t, discrete.clone())).collect();
        let library = enumerate_semigroups(&EnumerationOptions::up_to_iso(n))?;
        suite.compare(format!("semigroup classes of order {n}"), oracle::count_classes(n, &tables), library.len());
    }
    Ok(())
}

fn posets(suite: &mut Suite) -> Result<(), CliError> {
    for n in 1..=4 {
        let naive = oracle::partial_orders(n);
        let library = enumerate_partial_orders(n)?;
        let mut a = naive.clone();
        let mut b = library.clone();
        a.sort();
        b.sort();
        suite.compare(format!("partial orders on {n} points"), naive.len(), library.len());
        suite.compare(format!("partial orders on {n} points: same set"), true, a == b);
    }
    Ok(())
}

fn ordered(suite: &mut Suite) -> Result<(), CliError> {
    for n in 1..=3 {
        let (pairs, candidates) = oracle::ordered_semigroups(n);
        let library = enumerate_ordered_semigroups(&EnumerationOptions::labelled(n))?;
        suite.compare(format!("labelled ordered semigroups of order {n}"), pairs.len(), library.len());
        suite.compare(format!("candidate pairs of order {n}"), candidates, labelled_candidate_count(n)?);
        if n <= 2 {
            let classes = oracle::count_classes(n, &pairs);
            let iso = enumerate_ordered_semigroups(&EnumerationOptions::up_to_iso(n))?;
            suite.compare(format!("isomorphism classes of order {n}"), classes, iso.len());
        }
    }
    Ok(())
}

fn fixture_checks(suite: &mut Suite) {
    for (name, _) in fixtures::ALL {
        let doc = fixtures::load(name).expect("fixture parses");
        let s = &doc.structure;
        let n = s.order();
        let mult = table(s);
        let leq = s.leq_matrix();
        let naive = oracle::is_associative(n, &mult)
            && oracle::is_partial_order(n, leq)
            && oracle::is_compatible(n, &mult, leq);
        suite.compare(format!("{name}: valid"), naive, s.is_valid());
    }
}

fn greens(suite: &mut Suite) {
    for (name, _) in fixtures::ALL {
        let doc = fixtures::load(name).expect("fixture parses");
        let s = &doc.structure;
        if !s.is_valid() {
            continue;
        }
        let n = s.order();
        let mult = table(s);
        let [l, r, j, h] = oracle::greens_matrices(n, &mult, s.leq_matrix());
        let g = greens_relations(s);
        for (label, naive, lib) in [("L", &l, &g.l), ("R", &r, &g.r), ("J", &j, &g.j), ("H", &h, &g.h)] {
            let library: Vec<bool> = (0..n * n).map(|c| lib.related(c / n, c % n)).collect();
            suite.compare(format!("{name}: Green's {label}"), naive.clone(), library);
        }
        // The literal (unclosed) ideals are always contained in the closed ones.
        for a in 0..n {
            for (side, literal) in [
                (Side::Left, oracle::literal_left_ideal(n, &mult, a)),
                (Side::Right, oracle::literal_right_ideal(n, &mult, a)),
            ] {
                let closed = principal_ideal(s, a, side);
                let contained = literal.iter().all(|&x| closed.contains(x));
                suite.compare(
                    format!("{name}: literal {side} ideal of {} inside closed", doc.names[a]),
                    true,
                    contained,
                );
            }
        }
    }
}
