//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints its PASS/FAIL line; exits nonzero if any fails.

use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use osg_core::enumerate::{enumerate_ordered_semigroups, enumerate_semigroups, EnumerationOptions, Shard};
use osg_core::format::{default_names, write_structure};
use osg_core::ideals::{downward_closure, is_simple, subset_product};
use osg_core::properties::{
    inverses_of, is_inverse_ordered, ordered_idempotents, regularity, RegularityKind, StructurePredicate,
};
use osg_core::relations::{complete_semilattice_congruences, greens_relations, least_complete_semilattice_congruence};
use osg_core::theorems::{sweep, SweepReport};
use osg_core::{canonical_form, fixtures, oracle, AxiomKind, ElementSubset, OrderedSemigroup, Side, TheoremId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {took:.2?}, limit {limit:?}"))
    } else {
        Ok(took)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(s: &OrderedSemigroup) -> Vec<usize> {
    s.mult_table().iter().map(|&v| v as usize).collect()
}

fn fixture_adjudication() -> Outcome {
    let start = Instant::now();
    let doc = fixtures::load("px3").unwrap();
    let s = &doc.structure;
    let report = s.validate();
    let failure = report.failure(AxiomKind::Associativity).ok_or("px3 reported associative")?;
    let named: Vec<&str> = failure.witness.iter().map(|&i| doc.names[i].as_str()).collect();
    ensure(named == ["e", "a", "a"], || format!("witness {named:?}, expected (e,a,a)"))?;
    ensure(failure.reverifies(s), || "witness does not re-verify".into())?;
    let n = s.order();
    let naive = oracle::associativity_failures(n, &table(s));
    ensure(naive.first() == Some(&(1, 0, 0)), || format!("oracle first failure {:?}", naive.first()))?;
    let transposed = oracle::transpose(n, &table(s));
    let opposite = OrderedSemigroup::with_discrete_order(n, transposed.clone()).unwrap();
    ensure(!opposite.is_valid(), || "opposite reading is associative".into())?;
    ensure(!oracle::associativity_failures(n, &transposed).is_empty(), || "oracle finds transpose associative".into())?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!(
        "px3 fails associativity at (e,a,a); opposite reading fails too ({} and {} failing triples) in {took:.2?}",
        naive.len(),
        oracle::associativity_failures(n, &transposed).len()
    ))
}

fn enumeration_oracle() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=3 {
        let mut naive = oracle::semigroup_tables(n);
        let mut lib = enumerate_semigroups(&EnumerationOptions::labelled(n)).map_err(|e| e.to_string())?;
        naive.sort();
        lib.sort();
        ensure(naive == lib, || format!("order {n}: oracle {} vs library {}", naive.len(), lib.len()))?;
        counts.push(lib.len());
    }
    ensure(counts[1] == 8, || format!("order 2 labelled = {}", counts[1]))?;
    let discrete = vec![true, false, false, true];
    let tables: Vec<_> = oracle::semigroup_tables(2).into_iter().map(|t| (t, discrete.clone())).collect();
    let naive_classes = oracle::count_classes(2, &tables);
    let classes = enumerate_semigroups(&EnumerationOptions::up_to_iso(2)).map_err(|e| e.to_string())?.len();
    ensure(naive_classes == 5 && classes == 5, || {
        format!("order 2 classes: oracle {naive_classes}, library {classes}")
    })?;
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("labelled counts {counts:?} match the naive filter; order 2 has 5 classes; {took:.2?}"))
}

fn describe_inconsistencies(corpus: &[OrderedSemigroup], report: &SweepReport) -> String {
    let mut out = String::new();
    for t in &report.theorems {
        for f in &t.inconsistent {
            let s = &corpus[f.corpus_index];
            out.push_str(&format!("\n{} inconsistent on:\n", t.theorem));
            out.push_str(&write_structure(s, &default_names(s.order())));
        }
    }
    out
}

fn sweep_summary(report: &SweepReport) -> String {
    report
        .theorems
        .iter()
        .map(|t| format!("{} {}/{}", t.theorem, t.hypothesis_met, t.checked))
        .collect::<Vec<_>>()
        .join(", ")
}

fn small_sweep() -> Outcome {
    let start = Instant::now();
    let mut corpus = Vec::new();
    for n in 1..=3 {
        corpus.extend(enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).map_err(|e| e.to_string())?);
    }
    let report = sweep(&corpus, &TheoremId::ALL);
    ensure(report.skipped.is_empty(), || format!("{} structures skipped", report.skipped.len()))?;
    ensure(report.is_clean(), || describe_inconsistencies(&corpus, &report))?;
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("{} labelled structures, no inconsistencies ({}); {took:.2?}", corpus.len(), sweep_summary(&report)))
}

fn order_four_sweep() -> Outcome {
    let start = Instant::now();
    let shards: Vec<Result<(Vec<OrderedSemigroup>, SweepReport), String>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|index| {
                scope.spawn(move || {
                    let opts = EnumerationOptions::up_to_iso(4).with_shard(Shard { index, count: 4 });
                    let corpus = enumerate_ordered_semigroups(&opts).map_err(|e| e.to_string())?;
                    let report = sweep(&corpus, &TheoremId::ALL);
                    Ok((corpus, report))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("shard thread")).collect()
    });
    let mut total = 0;
    let mut failures = String::new();
    for shard in shards {
        let (corpus, report) = shard?;
        total += corpus.len();
        if !report.is_clean() {
            failures.push_str(&describe_inconsistencies(&corpus, &report));
        }
    }
    ensure(failures.is_empty(), || failures)?;
    ensure(total == 4753, || format!("order 4 corpus has {total} classes"))?;
    let took = within(Duration::from_secs(600), start)?;
    Ok(format!("{total} classes over 4 shards, no inconsistencies; {took:.2?}"))
}

fn fixture_verdicts() -> Outcome {
    let sl2 = fixtures::load("sl2").unwrap().structure;
    ensure(is_inverse_ordered(&sl2).holds, || "sl2 not inverse".into())?;
    let g = greens_relations(&sl2);
    for (name, p) in [("L", &g.l), ("R", &g.r), ("J", &g.j), ("H", &g.h)] {
        ensure(p.classes().iter().all(|c| c.len() == 1), || format!("sl2 {name} not singletons"))?;
    }
    ensure(least_complete_semilattice_congruence(&sl2) == g.j, || "sl2 least congruence differs from J".into())?;

    let lz2 = fixtures::load("lz2").unwrap();
    let inv = is_inverse_ordered(&lz2.structure);
    ensure(!inv.holds, || "lz2 inverse".into())?;
    let w: Vec<&str> = inv.elements().unwrap_or(&[]).iter().map(|&i| lz2.names[i].as_str()).collect();
    ensure(w == ["a", "a", "b"], || format!("lz2 inverse witness {w:?}"))?;
    ensure(is_simple(&lz2.structure, Side::Left).holds, || "lz2 not left simple".into())?;
    ensure(!is_simple(&lz2.structure, Side::Right).holds, || "lz2 right simple".into())?;

    let n2 = fixtures::load("n2").unwrap();
    let reg = regularity(&n2.structure, RegularityKind::Regular);
    ensure(!reg.holds, || "n2 regular".into())?;
    let w: Vec<&str> = reg.elements().unwrap_or(&[]).iter().map(|&i| n2.names[i].as_str()).collect();
    ensure(w == ["a"], || format!("n2 regularity witness {w:?}"))?;
    Ok("sl2, lz2 and n2 verdicts and witnesses as expected".into())
}

fn predicate_signature(s: &OrderedSemigroup) -> Vec<bool> {
    StructurePredicate::ALL.iter().map(|p| p.evaluate(s).holds).collect()
}

fn invariant_suites() -> Outcome {
    let mut corpus = Vec::new();
    for n in 1..=3 {
        corpus.extend(enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).map_err(|e| e.to_string())?);
    }
    for s in &corpus {
        let n = s.order();
        for bits in 0..1u64 << n {
            let x = ElementSubset::from_bits(n, bits);
            let c = downward_closure(s, &x);
            ensure(x.is_subset(&c) && downward_closure(s, &c) == c, || "closure law".into())?;
            for extra in s.elements() {
                let mut y = x;
                y.insert(extra);
                ensure(c.is_subset(&downward_closure(s, &y)), || "closure monotonicity".into())?;
                let full = s.carrier();
                ensure(subset_product(s, &x, &full).is_subset(&subset_product(s, &y, &full)), || {
                    "product monotonicity".into()
                })?;
            }
        }
        let g = greens_relations(s);
        ensure(g.h == g.l.meet(&g.r), || "H differs from L meet R".into())?;
        let e = ordered_idempotents(s);
        for a in s.elements() {
            for b in inverses_of(s, a).iter() {
                ensure(inverses_of(s, b).contains(a), || "inverse symmetry".into())?;
                ensure(e.contains(s.mul(a, b)) && e.contains(s.mul(b, a)), || "aa' or a'a not idempotent".into())?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x05e6);
    for (name, _) in fixtures::ALL {
        let s = fixtures::load(name).unwrap().structure;
        if !s.is_valid() {
            continue;
        }
        let sig = predicate_signature(&s);
        let mut perm: Vec<usize> = s.elements().collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let t = s.relabel(&perm);
            ensure(predicate_signature(&t) == sig && canonical_form(&t) == canonical_form(&s), || {
                format!("{name} changed under relabelling {perm:?}")
            })?;
        }
    }
    for opts in [EnumerationOptions::labelled(3), EnumerationOptions::up_to_iso(3)] {
        let whole = enumerate_ordered_semigroups(&opts).map_err(|e| e.to_string())?;
        let mut union = Vec::new();
        for index in 0..3 {
            union.extend(
                enumerate_ordered_semigroups(&opts.clone().with_shard(Shard { index, count: 3 }))
                    .map_err(|e| e.to_string())?,
            );
        }
        let key = |s: &OrderedSemigroup| (canonical_form(s), osg_core::iso::plain_encoding(s));
        let mut a: Vec<_> = whole.iter().map(key).collect();
        let mut b: Vec<_> = union.iter().map(key).collect();
        a.sort();
        b.sort();
        ensure(a == b, || "shard union differs from whole run".into())?;
    }
    Ok(format!("{} structures, 100 relabellings per fixture, shard union exact", corpus.len()))
}

fn completely_regular_congruence() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for s in enumerate_ordered_semigroups(&EnumerationOptions::labelled(n)).map_err(|e| e.to_string())? {
            if !regularity(&s, RegularityKind::CompletelyRegular).holds {
                continue;
            }
            checked += 1;
            let least = least_complete_semilattice_congruence(&s);
            let j = greens_relations(&s).j;
            ensure(least == j, || {
                format!("least congruence differs from J on\n{}", write_structure(&s, &default_names(n)))
            })?;
            for c in complete_semilattice_congruences(&s) {
                ensure(least.refines(&c), || {
                    format!(
                        "least congruence not below {:?} on\n{}",
                        c.to_vecs(),
                        write_structure(&s, &default_names(n))
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{checked} completely regular structures: least congruence = J, below every complete semilattice congruence"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("fixture adjudication", fixture_adjudication),
        ("enumeration oracle equality", enumeration_oracle),
        ("theorem sweep, labelled order <= 3", small_sweep),
        ("theorem sweep, order 4 up to isomorphism", order_four_sweep),
        ("fixture verdicts", fixture_verdicts),
        ("invariant suites", invariant_suites),
        ("completely regular congruence check", completely_regular_congruence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
