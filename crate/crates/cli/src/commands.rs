use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use osg_core::enumerate::{
    enumerate_ordered_semigroups, labelled_candidate_count, EnumerationError, EnumerationOptions, Filter, Mode, Shard,
};
use osg_core::format::{default_names, write_corpus, StructureDocument};
use osg_core::ideals::is_simple;
use osg_core::properties::{
    generator_uniqueness, inverses_of, is_group_like, ordered_idempotents, regularity, PropertyReport, RegularityKind,
};
use osg_core::theorems::{sweep_parallel, Analysis, ConditionVerdict, Finding as SweepFinding};
use osg_core::{canonical_form, parse_corpus, parse_document, ConditionId, OrderedSemigroup, Side, TheoremId};

use crate::report::{Finding, Names, Report};
use crate::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Input(String),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Input(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type Outcome = Result<(Report, u8), CliError>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Analyze { file } => analyze(file),
        Command::Inverses { file, element } => inverses(file, element),
        Command::Enumerate { order, up_to_iso, filters, out, shard, allow_order_five } => {
            let opts = enumeration_options(*order, *up_to_iso, filters, shard.as_deref(), *allow_order_five)?;
            enumerate(opts, out.as_deref())
        }
        Command::CheckTheorems { order, labelled, corpus, theorems, shard, show_outside, allow_order_five } => {
            let theorems = parse_theorems(theorems)?;
            let shard = parse_shard(shard.as_deref())?;
            match (order, corpus) {
                (Some(n), None) => {
                    let mode = if *labelled { Mode::Labelled } else { Mode::UpToIso };
                    let opts = EnumerationOptions {
                        order: *n,
                        mode,
                        filters: Vec::new(),
                        shard,
                        allow_order_five: *allow_order_five,
                    };
                    check_enumerated(opts, &theorems, *show_outside)
                }
                (None, Some(path)) => check_corpus(path, shard, &theorems, *show_outside),
                _ => Err(CliError::Usage("give exactly one of --order or --corpus".into())),
            }
        }
        Command::Oracle { suite } => crate::oracle_suites::run(suite),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn load(path: &Path) -> Result<StructureDocument, CliError> {
    parse_document(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_shard(spec: Option<&str>) -> Result<Shard, CliError> {
    spec.map_or(Ok(Shard::WHOLE), |s| s.parse().map_err(CliError::Usage))
}

fn parse_theorems(ids: &[String]) -> Result<Vec<TheoremId>, CliError> {
    if ids.is_empty() {
        return Ok(TheoremId::ALL.to_vec());
    }
    ids.iter()
        .map(|t| t.parse().map_err(|e: osg_core::theorems::TheoremError| CliError::Usage(e.to_string())))
        .collect()
}

fn enumeration_options(
    order: usize,
    up_to_iso: bool,
    filters: &[String],
    shard: Option<&str>,
    allow_order_five: bool,
) -> Result<EnumerationOptions, CliError> {
    let filters = filters.iter().map(|f| f.parse::<Filter>().map_err(CliError::from)).collect::<Result<Vec<_>, _>>()?;
    let opts = EnumerationOptions {
        order,
        mode: if up_to_iso { Mode::UpToIso } else { Mode::Labelled },
        filters,
        shard: parse_shard(shard)?,
        allow_order_five,
    };
    opts.check()?;
    Ok(opts)
}

fn validation_finding(doc: &StructureDocument, s: &OrderedSemigroup, kind: &'static str) -> (Finding, bool) {
    let names = Names(&doc.names);
    let report = s.validate();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({ "axiom": f.kind.to_string(), "witness": names.tuple(&f.witness) }))
        .collect();
    let finding = Finding::new(kind, Some(canonical_form(s).to_string()))
        .with("valid", report.valid())
        .with("failures", failures);
    (finding, report.valid())
}

fn validate(path: &Path) -> Outcome {
    let doc = load(path)?;
    let mut report = Report::new("validate");
    report.option("file", path.display().to_string());
    let (finding, valid) = validation_finding(&doc, &doc.structure, "validation");
    report.push(finding);
    Ok((report, if valid { 0 } else { 1 }))
}

fn property_value(names: &Names<'_>, p: &PropertyReport) -> Value {
    json!({ "holds": p.holds, "applicable": p.applicable, "witness": names.witness(&p.witness) })
}

fn verdict_value(names: &Names<'_>, v: &ConditionVerdict) -> Value {
    json!({
        "id": v.id.as_str(),
        "holds": v.holds,
        "hypothesis_met": v.hypothesis_met,
        "witness": names.witness(&v.witness),
    })
}

fn analyze(path: &Path) -> Outcome {
    let doc = load(path)?;
    let s = &doc.structure;
    let mut report = Report::new("analyze");
    report.option("file", path.display().to_string());
    let (finding, valid) = validation_finding(&doc, s, "validation");
    report.push(finding);
    if !valid {
        return Ok((report, 1));
    }
    let names = Names(&doc.names);
    let form = Some(canonical_form(s).to_string());
    let analysis = Analysis::new(s);
    let g = analysis.greens();

    report.push(Finding::new("idempotents", form.clone()).with("E", names.subset(&ordered_idempotents(s))));
    report.push(
        Finding::new("greens", form.clone())
            .with("L", names.partition(&g.l))
            .with("R", names.partition(&g.r))
            .with("J", names.partition(&g.j))
            .with("H", names.partition(&g.h)),
    );
    let mut inv = Finding::new("inverse_sets", form.clone());
    for a in s.elements() {
        inv = inv.with(&doc.names[a], names.subset(&inverses_of(s, a)));
    }
    report.push(inv);

    let mut reg = Finding::new("regularity", form.clone());
    for kind in RegularityKind::ALL {
        reg = reg.with(kind.as_str(), property_value(&names, &regularity(s, kind)));
    }
    report.push(reg);

    let mut gl = Finding::new("group_like", form.clone());
    let mut simple = Finding::new("simple", form.clone());
    for side in Side::ALL {
        gl = gl.with(&side.to_string(), property_value(&names, &is_group_like(s, side)));
        let r = is_simple(s, side);
        simple = simple.with(
            &side.to_string(),
            json!({ "holds": r.holds, "proper_ideal": r.proper_ideal.map(|i| names.subset(&i)) }),
        );
    }
    report.push(gl);
    report.push(simple);

    let inverse = osg_core::properties::is_inverse_ordered(s);
    report.push(Finding::new("inverse", form.clone()).with("inverse", property_value(&names, &inverse)));

    let mut gen = Finding::new("generator_uniqueness", form.clone());
    for side in [Side::Left, Side::Right] {
        gen = gen.with(&side.to_string(), property_value(&names, &generator_uniqueness(s, side)));
    }
    report.push(gen);

    let least = analysis.least_complete_semilattice_congruence();
    let decomposition = analysis.decomposition();
    report.push(
        Finding::new("congruences", form.clone())
            .with("least_complete_semilattice", names.partition(least))
            .with("least_equals_J", *least == g.j)
            .with("group_like_decomposition", decomposition.holds)
            .with("decomposition_congruence", decomposition.congruence.as_ref().map(|p| names.partition(p)))
            .with("decomposition_via_J", decomposition.via_j),
    );

    let verdicts: Vec<Value> = ConditionId::ALL.iter().map(|&c| verdict_value(&names, &analysis.evaluate(c))).collect();
    report.push(Finding::new("conditions", form).with("verdicts", verdicts));
    Ok((report, 0))
}

fn inverses(path: &Path, element: &str) -> Outcome {
    let doc = load(path)?;
    let s = &doc.structure;
    let a = doc
        .names
        .iter()
        .position(|n| n == element)
        .or_else(|| element.parse::<usize>().ok().filter(|&i| i < s.order()))
        .ok_or_else(|| CliError::Input(format!("unknown element `{element}`")))?;
    let mut report = Report::new("inverses");
    report.option("file", path.display().to_string());
    report.option("element", doc.names[a].clone());
    let (finding, valid) = validation_finding(&doc, s, "validation");
    if !valid {
        report.push(finding);
        return Ok((report, 1));
    }
    let names = Names(&doc.names);
    report.push(
        Finding::new("inverses", Some(canonical_form(s).to_string()))
            .with("element", doc.names[a].clone())
            .with("V", names.subset(&inverses_of(s, a))),
    );
    Ok((report, 0))
}

fn options_json(report: &mut Report, opts: &EnumerationOptions) {
    report.option("order", opts.order);
    report.option("mode", if opts.mode == Mode::Labelled { "labelled" } else { "up_to_iso" });
    report.option("filters", opts.filters.iter().map(|f| f.to_string()).collect::<Vec<_>>());
    report.option("shard", opts.shard.to_string());
}

fn enumerate(opts: EnumerationOptions, out: Option<&Path>) -> Outcome {
    let structures = enumerate_ordered_semigroups(&opts)?;
    let mut report = Report::new("enumerate");
    options_json(&mut report, &opts);
    if let Some(path) = out {
        report.option("out", path.display().to_string());
        let names = default_names(opts.order);
        let docs: Vec<StructureDocument> =
            structures.iter().map(|s| StructureDocument { names: names.clone(), structure: s.clone() }).collect();
        let header = vec![
            format!(
                "corpus order={} mode={} filters={} shard={}",
                opts.order,
                if opts.mode == Mode::Labelled { "labelled" } else { "up_to_iso" },
                opts.filters.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(","),
                opts.shard
            ),
            format!("count={}", docs.len()),
        ];
        fs::write(path, write_corpus(&header, &docs)).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    } else {
        for s in &structures {
            report.push(Finding::new("structure", Some(canonical_form(s).to_string())));
        }
    }
    report.push(
        Finding::new("summary", None)
            .with("count", structures.len())
            .with("message", format!("{} ordered semigroups of order {}", structures.len(), opts.order)),
    );
    Ok((report, 0))
}

fn check_enumerated(opts: EnumerationOptions, theorems: &[TheoremId], show_outside: bool) -> Outcome {
    opts.check()?;
    let corpus = enumerate_ordered_semigroups(&opts)?;
    let mut report = Report::new("check-theorems");
    options_json(&mut report, &opts);
    report.option("theorems", theorems.iter().map(|t| t.as_str()).collect::<Vec<_>>());
    let candidates = if opts.mode == Mode::Labelled && opts.shard == Shard::WHOLE {
        Some(labelled_candidate_count(opts.order)?)
    } else {
        None
    };
    let names = default_names(opts.order);
    let docs: Vec<(&[String], &OrderedSemigroup)> = corpus.iter().map(|s| (names.as_slice(), s)).collect();
    let status = sweep_into(&mut report, &docs, theorems, show_outside, candidates);
    Ok((report, status))
}

fn check_corpus(path: &Path, shard: Shard, theorems: &[TheoremId], show_outside: bool) -> Outcome {
    let docs = parse_corpus(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut report = Report::new("check-theorems");
    report.option("corpus", path.display().to_string());
    report.option("shard", shard.to_string());
    report.option("theorems", theorems.iter().map(|t| t.as_str()).collect::<Vec<_>>());
    let selected: Vec<(&[String], &OrderedSemigroup)> = docs
        .iter()
        .enumerate()
        .filter(|(i, _)| i % shard.count == shard.index)
        .map(|(_, d)| (d.names.as_slice(), &d.structure))
        .collect();
    let status = sweep_into(&mut report, &selected, theorems, show_outside, None);
    Ok((report, status))
}

fn sweep_into(
    report: &mut Report,
    docs: &[(&[String], &OrderedSemigroup)],
    theorems: &[TheoremId],
    show_outside: bool,
    candidates: Option<usize>,
) -> u8 {
    let corpus: Vec<OrderedSemigroup> = docs.iter().map(|(_, s)| (*s).clone()).collect();
    let sweep = sweep_parallel(&corpus, theorems);
    for skipped in &sweep.skipped {
        report.push(
            Finding::new("skipped", Some(canonical_form(&corpus[skipped.corpus_index]).to_string()))
                .with("corpus_index", skipped.corpus_index)
                .with("note", skipped.note.clone()),
        );
    }
    let finding_for = |kind: &'static str, f: &SweepFinding| {
        let names = Names(docs[f.corpus_index].0);
        let verdicts: Vec<Value> = f.report.vector.iter().map(|v| verdict_value(&names, v)).collect();
        Finding::new(kind, Some(f.report.structure.to_string()))
            .with("theorem", f.report.theorem.as_str())
            .with("corpus_index", f.corpus_index)
            .with("verdicts", verdicts)
    };
    for t in &sweep.theorems {
        report.push(
            Finding::new("theorem_sweep", None)
                .with("theorem", t.theorem.as_str())
                .with("checked", t.checked)
                .with("hypothesis_met", t.hypothesis_met)
                .with("inconsistent", t.inconsistent.len())
                .with("outside_hypothesis", t.outside_hypothesis)
                .with("outside_disagreements", t.outside_disagreements.len()),
        );
        for f in &t.inconsistent {
            report.push(finding_for("inconsistency", f));
        }
        if show_outside {
            for f in &t.outside_disagreements {
                report.push(finding_for("outside_hypothesis_disagreement", f));
            }
        }
    }
    let valid = corpus.len() - sweep.skipped.len();
    let verdict = if sweep.is_clean() {
        "all groupings consistent".to_string()
    } else {
        format!("{} inconsistencies", sweep.inconsistent_total())
    };
    let message = match candidates {
        Some(c) => format!("{c} candidate pairs, {verdict} over {valid} ordered semigroups"),
        None => format!("{valid} ordered semigroups, {verdict}"),
    };
    let mut summary = Finding::new("summary", None)
        .with("structures", valid)
        .with("inconsistencies", sweep.inconsistent_total())
        .with("message", message);
    if let Some(c) = candidates {
        summary = summary.with("candidate_pairs", c);
    }
    report.push(summary);
    if sweep.is_clean() {
        0
    } else {
        1
    }
}
