use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use ordchain::chains::{decompose, decide_membership_up, longest_chain_patience, Sequence, UpSequence};
use ordchain::dense::{
    build_scheme, depth_trend, extract_p, extract_y, spot_check_density, CantorEndpoints, ClosedSetOracle,
    CountableSetStream, DyadicGrid, GapMidpoints, ListStream, MiddleThirds, PhiRationalImage,
};
use ordchain::encodings::Encoder;
use ordchain::orders::check_axioms_with;
use ordchain::reductions::{check_tree, fuzz_reduction, ReductionPipeline, Target, TreeGenSpec, Verdict};
use ordchain::trees::TreeMode;
use ordchain::{Element, OrderKind, OrderOracle, Tag};

use crate::input::Source;
use crate::{CliError, Command, Extractor, Fixture, EXIT_OK, EXIT_VIOLATION};

pub fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Analyze { file, order } => analyze(&file, &order.oracle()?, out),
        Command::Reduce {
            file,
            target,
            horizon,
            closure,
            output,
        } => reduce(&file, target, horizon, closure, output.as_deref(), out),
        Command::Encode { map, expansion, values } => encode(map, expansion, &values, out),
        Command::Fuzz {
            pipeline,
            trials,
            seed,
            horizon,
            csv,
            node_cap,
            depth_cap,
            mean_offspring,
            labels,
        } => {
            let spec = TreeGenSpec {
                seed,
                mean_offspring,
                label_range: labels,
                depth_cap,
                node_cap,
            };
            fuzz(&pipeline, &spec, trials, horizon, csv.as_deref(), out, err)
        }
        Command::Classify { file } => classify(&file, out),
        Command::Cantor {
            set: _,
            stages,
            depth,
            stream,
            fixture,
            extract,
            n,
            pairs,
            budget,
            seed,
        } => {
            let opts = CantorOpts {
                stages,
                depth,
                stream,
                fixture,
                extract,
                n,
                pairs,
                budget: budget.unwrap_or(8 * n),
                seed,
            };
            cantor(&opts, out)
        }
        Command::DecideUp { sequence, order } => decide_up(&sequence, &order.oracle()?, out),
        Command::CheckAxioms { file, order, total } => check(&file, &order.oracle()?, total, out),
    }
}

fn sequence_of(src: &Source, items: Vec<Element>) -> Result<Sequence, CliError> {
    if items.is_empty() {
        return Err(CliError::Invalid(format!("{}: no elements", src.name)));
    }
    Ok(Sequence::new(items)?)
}

fn analyze(path: &Path, o: &OrderOracle, out: &mut dyn Write) -> Result<i32, CliError> {
    let src = Source::read(path)?;
    let y = sequence_of(&src, src.elements(o)?)?;
    let d = decompose(&y, o)?;
    let (len, witness) = if o.is_strict() { &d.strict } else { &d.non_strict };
    let distinct: BTreeSet<String> = y.items().iter().map(Element::to_string).collect();
    writeln!(out, "sequence: {} ({} elements, {} distinct)", src.name, y.len(), distinct.len())?;
    writeln!(out, "order: {o}")?;
    writeln!(out, "longest chain: {len}")?;
    writeln!(out, "witness: {witness}")?;
    if o.is_linear() {
        let (patience, _) = longest_chain_patience(&y, o)?;
        writeln!(out, "patience: {patience}")?;
    }
    writeln!(out, "strict chain: {}", d.strict.0)?;
    writeln!(out, "non-strict chain: {}", d.non_strict.0)?;
    let (value, count) = &d.constant;
    writeln!(out, "constant subsequence: {value} x{count}")?;
    Ok(EXIT_OK)
}

fn reduce(
    path: &Path,
    target: Target,
    horizon: usize,
    closure: bool,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let src = Source::read(path)?;
    let t = src.tree(if closure { TreeMode::Closure } else { TreeMode::Strict })?;
    let p = target.pipeline();
    let (l_tree, l_img, verdict) = check_tree(&p, &t, horizon)?;
    if let Some(dest) = output {
        let seq = p.run(&t, horizon)?;
        let file = File::create(dest).map_err(|source| CliError::Io {
            path: dest.display().to_string(),
            source,
        })?;
        let mut w = BufWriter::new(file);
        for e in seq.items() {
            writeln!(w, "{e}")?;
        }
        w.flush()?;
    }
    writeln!(out, "pipeline: {p}")?;
    writeln!(out, "tree: {} ({} nodes, depth {})", src.name, t.len(), t.max_branch_depth())?;
    writeln!(out, "horizon: {horizon}")?;
    writeln!(out, "L_tree: {l_tree}")?;
    writeln!(out, "L_img: {l_img}")?;
    writeln!(out, "verdict: {verdict}")?;
    if let Some(dest) = output {
        writeln!(out, "image: {}", dest.display())?;
    }
    Ok(if verdict == Verdict::Ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn encode(map: Encoder, expansion: bool, values: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    for (i, v) in values.iter().enumerate() {
        let src = Source::inline(&format!("argument {}", i + 1), v);
        let e = Element::parse(map.domain(), v).map_err(|e| src.error(1, e))?;
        let image = map.apply(&e)?;
        match (&image, expansion) {
            (Element::Rational(r), true) => {
                let bits = r.binary_expansion().expect("encoder images are dyadic");
                writeln!(out, "{image} {bits}")?;
            }
            _ => writeln!(out, "{image}")?,
        }
    }
    Ok(EXIT_OK)
}

/// A target name or `STAGES@ORDER` with comma-separated encoders.
fn parse_pipeline(s: &str) -> Result<ReductionPipeline, CliError> {
    let bad = |reason: &str| CliError::Parse {
        path: "--pipeline".into(),
        line: 1,
        token: s.into(),
        reason: reason.into(),
    };
    let Some((stages, order)) = s.split_once('@') else {
        return s
            .parse::<Target>()
            .map(Target::pipeline)
            .map_err(|_| bad("expected subset, rl, rational, binary or STAGES@ORDER"));
    };
    let stages = stages
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Encoder>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| bad(&e.to_string()))?;
    let kind: OrderKind = order.parse().map_err(|e: ordchain::ParseError| bad(&e.to_string()))?;
    let target = if kind == OrderKind::Delta {
        let tag = stages.last().map_or(Tag::WordNat, |e| e.codomain());
        OrderOracle::delta(tag, ordchain::Strictness::NonStrict)
    } else {
        OrderOracle::non_strict(kind)
    };
    ReductionPipeline::compose(stages, target).map_err(|e| bad(&e.to_string()))
}

fn fuzz(
    pipeline: &str,
    spec: &TreeGenSpec,
    trials: u64,
    horizon: usize,
    csv_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let p = parse_pipeline(pipeline)?;
    let report = fuzz_reduction(&p, spec, trials, horizon)?;
    let sink: Box<dyn Write + '_> = match csv_path {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?)),
        None => Box::new(&mut *out),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["trial", "seed", "L_tree", "L_img", "verdict"])?;
    for r in &report.rows {
        w.write_record([
            r.trial.to_string(),
            r.seed.to_string(),
            r.l_tree.to_string(),
            r.l_img.to_string(),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    drop(w);
    let summary: &mut dyn Write = if csv_path.is_some() { out } else { err };
    writeln!(summary, "{}", report.summary())?;
    for r in report.violations() {
        writeln!(summary, "violation: trial {} seed {} L_tree {} L_img {}", r.trial, r.seed, r.l_tree, r.l_img)?;
    }
    Ok(if report.violation_count() == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn classify(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let src = Source::read(path)?;
    let elems = src.rationals()?;
    writeln!(out, "# {}: {} elements", src.name, elems.len())?;
    writeln!(out, "n\tdepth")?;
    for (n, d) in depth_trend(&elems) {
        writeln!(out, "{n}\t{d}")?;
    }
    Ok(EXIT_OK)
}

struct CantorOpts {
    stages: Option<PathBuf>,
    depth: usize,
    stream: Option<PathBuf>,
    fixture: Option<Fixture>,
    extract: Option<Extractor>,
    n: usize,
    pairs: usize,
    budget: usize,
    seed: u64,
}

fn cantor(opts: &CantorOpts, out: &mut dyn Write) -> Result<i32, CliError> {
    let set: Box<dyn ClosedSetOracle> = match &opts.stages {
        Some(path) => Box::new(Source::read(path)?.stages()?),
        None => Box::new(MiddleThirds),
    };
    let scheme = build_scheme(set.as_ref(), opts.depth)?;
    writeln!(out, "# scheme: {}, depth {}, stage {}", set.name(), scheme.depth(), scheme.stage())?;
    write!(out, "{}", scheme.dump())?;

    let stream: Option<Box<dyn CountableSetStream>> = match (&opts.stream, opts.fixture) {
        (Some(path), _) => Some(Box::new(ListStream(Source::read(path)?.rationals()?))),
        (None, Some(Fixture::Endpoints)) => Some(Box::new(CantorEndpoints)),
        (None, Some(Fixture::Midpoints)) => Some(Box::new(GapMidpoints)),
        (None, Some(Fixture::Dyadic)) => Some(Box::new(DyadicGrid)),
        (None, Some(Fixture::Phi)) => Some(Box::new(PhiRationalImage)),
        (None, None) => None,
    };
    let Some(extractor) = opts.extract else {
        return Ok(EXIT_OK);
    };
    let Some(x) = stream else {
        return Err(CliError::Invalid("--extract needs --stream or --fixture".into()));
    };
    let run = |n| match extractor {
        Extractor::P => extract_p(x.as_ref(), &scheme, n),
        Extractor::Y => extract_y(x.as_ref(), &scheme, n),
    };
    let name = match extractor {
        Extractor::P => "P",
        Extractor::Y => "Y",
    };
    let extracted = run(opts.n);
    writeln!(out, "# {name}: {} elements from the first {} of {}", extracted.len(), opts.n, x.name())?;
    for v in &extracted {
        writeln!(out, "{v}")?;
    }
    if opts.pairs == 0 {
        return Ok(EXIT_OK);
    }
    let pool = run(opts.budget.max(opts.n));
    let report = spot_check_density(&extracted, &pool, opts.pairs, opts.seed);
    writeln!(
        out,
        "# density: {} pairs sampled, {} without a witness among {} elements of the budget",
        report.sampled,
        report.failures.len(),
        pool.len()
    )?;
    for (a, b) in report.failures.iter().collect::<BTreeSet<_>>() {
        writeln!(out, "# no witness between {a} and {b}")?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

fn decide_up(line: &str, o: &OrderOracle, out: &mut dyn Write) -> Result<i32, CliError> {
    let src = Source::inline("<sequence>", line);
    let Some((prefix, cycle)) = line.split_once('|') else {
        return Err(src.error(1, ordchain::ParseError::new(line, "expected `prefix | cycle`")));
    };
    let parse = |part: &str| -> Result<Sequence, CliError> {
        let items = part
            .split_whitespace()
            .map(|t| o.parse_element(t).map_err(|e| src.error(1, e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Sequence::new(items)?)
    };
    let up = UpSequence::new(parse(prefix)?, parse(cycle)?)?;
    let verdict = decide_membership_up(&up, o)?;
    writeln!(out, "sequence: {up}")?;
    writeln!(out, "order: {o}")?;
    writeln!(out, "member: {}", verdict.member)?;
    if verdict.cycle.is_empty() {
        writeln!(out, "cycle: none")?;
    } else {
        let mut path: Vec<String> = verdict.cycle.iter().map(Element::to_string).collect();
        path.push(path[0].clone());
        writeln!(out, "cycle: {}", path.join(" -> "))?;
    }
    Ok(EXIT_OK)
}

fn check(path: &Path, o: &OrderOracle, total: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let src = Source::read(path)?;
    let mut support = src.elements(o)?;
    let mut seen = std::collections::HashSet::new();
    support.retain(|e| seen.insert(e.clone()));
    let report = check_axioms_with(o, &support, total || o.is_linear())?;
    writeln!(out, "order: {o}")?;
    writeln!(out, "support: {} elements", support.len())?;
    for v in &report.violations {
        writeln!(out, "{v}")?;
    }
    writeln!(out, "violations: {}", report.violations.len())?;
    Ok(if report.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}
