use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use zqu_codes::code::count_cyclic_codes;
use zqu_codes::metrics::min_distance;
use zqu_codes::poly::factor_xn_minus_1;
use zqu_codes::report::{Analysis, CodeDescriptor, DistanceJson, FactorListing};
use zqu_codes::verify::{verify_paper, Check};
use zqu_codes::{CodeSpace, CyclicCode, Error, Metric, RingParams, SearchOptions};

use crate::{CodeArgs, Command, Format, RingArgs};

pub struct Output {
    pub text: String,
    pub status: u8,
}

pub struct Failure {
    pub message: String,
    pub status: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => 1,
            Error::BudgetExceeded { .. } | Error::GuardExceeded { .. } => 3,
            _ => 2,
        };
        Failure { message: e.to_string(), status }
    }
}

fn usage(message: &str) -> Failure {
    Failure { message: message.to_string(), status: 1 }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure { message: e.to_string(), status: 2 }
}

type CmdResult = Result<Output, Failure>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeCount {
    pub n: usize,
    pub p: u64,
    pub s: u32,
    pub count: u128,
}

/// Reported instead of a distance when the code has no nonzero word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceUndefined {
    pub metric: String,
    pub distance: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Factor { ring, out } => factor(ring, out.format),
        Command::Codes { ring, count, enumerate, limit, budget, out } => {
            if enumerate && !count {
                codes_enumerate(ring, limit, budget, out.format)
            } else {
                codes_count(ring, out.format)
            }
        }
        Command::Analyze { code, out } => analyze(&code, out.format),
        Command::Distance { code, metric, budget, threads, out } => {
            distance(&code, metric, options(budget, threads), out.format)
        }
        Command::VerifyPaper { budget, threads, out } => verify(options(budget, threads), out.format),
    }
}

fn options(budget: Option<u64>, threads: Option<usize>) -> SearchOptions {
    let mut opts = SearchOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    if let Some(t) = threads {
        opts.threads = t.max(1);
    }
    opts
}

fn ring_params(args: RingArgs) -> Result<RingParams, Failure> {
    Ok(RingParams::new(args.p, args.s)?)
}

fn build_code(args: &CodeArgs) -> Result<CyclicCode, Failure> {
    let ring = ring_params(args.ring)?;
    let space = CodeSpace::new(args.ring.n, ring)?;
    Ok(space.parse_code(&args.gens, args.closure)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io_failure)?;
    for row in rows {
        w.write_record(&row).map_err(io_failure)?;
    }
    let bytes = w.into_inner().map_err(io_failure)?;
    String::from_utf8(bytes).map_err(io_failure)
}

fn ok(text: String) -> CmdResult {
    Ok(Output { text, status: 0 })
}

fn factor(args: RingArgs, format: Format) -> CmdResult {
    let ring = ring_params(args)?;
    let listing = FactorListing::new(&factor_xn_minus_1(args.n, ring)?);
    match format {
        Format::Json => ok(json(&listing)),
        Format::Csv => ok(csv_table(
            &["index", "poly", "degree", "basic_primitive"],
            listing.factors.iter().enumerate().map(|(i, f)| {
                vec![i.to_string(), f.poly.clone(), f.degree.to_string(), f.basic_primitive.to_string()]
            }),
        )?),
        Format::Text => {
            let mut s = String::new();
            for f in &listing.factors {
                let tag = if f.basic_primitive { "  (basic primitive)" } else { "" };
                let _ = writeln!(s, "{}  degree {}{tag}", f.poly, f.degree);
            }
            ok(s)
        }
    }
}

fn codes_count(args: RingArgs, format: Format) -> CmdResult {
    let ring = ring_params(args)?;
    let report = CodeCount {
        n: args.n,
        p: args.p,
        s: args.s,
        count: count_cyclic_codes(args.n, ring)?,
    };
    match format {
        Format::Json => ok(json(&report)),
        Format::Csv => ok(csv_table(
            &["n", "p", "s", "count"],
            [vec![report.n.to_string(), report.p.to_string(), report.s.to_string(), report.count.to_string()]],
        )?),
        Format::Text => ok(format!("{}\n", report.count)),
    }
}

fn codes_enumerate(args: RingArgs, limit: Option<usize>, budget: Option<u64>, format: Format) -> CmdResult {
    let ring = ring_params(args)?;
    let space = CodeSpace::new(args.n, ring)?;
    let budget = budget.unwrap_or_else(|| SearchOptions::default().budget);
    let codes = space.enumerate(budget)?.take(limit.unwrap_or(usize::MAX));
    let descriptors = codes
        .map(|c| CodeDescriptor::new(&c))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        // one descriptor per line
        Format::Json => ok(descriptors
            .iter()
            .map(|d| serde_json::to_string(d).expect("descriptor serializes") + "\n")
            .collect()),
        Format::Csv => ok(csv_table(
            &["index", "closure_mode", "components", "cardinality", "free", "bch_delta"],
            descriptors.iter().enumerate().map(|(i, d)| {
                vec![
                    i.to_string(),
                    d.closure_mode.to_string(),
                    component_summary(d),
                    d.cardinality.to_string(),
                    d.free.to_string(),
                    d.bch.map_or(String::new(), |b| b.delta.to_string()),
                ]
            }),
        )?),
        Format::Text => {
            let mut s = String::new();
            for (i, d) in descriptors.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{i:>4}  [{}]  |C| = {}{}",
                    component_summary(d),
                    d.cardinality,
                    if d.free { "  free" } else { "" }
                );
            }
            ok(s)
        }
    }
}

fn component_summary(d: &CodeDescriptor) -> String {
    d.components.as_ref().map_or_else(String::new, |list| {
        list.iter()
            .map(|c| match &c.alpha {
                Some(alpha) => format!("{}({},{:?})", c.family, c.i_or_j_or_k, alpha),
                None => format!("{}({})", c.family, c.i_or_j_or_k),
            })
            .collect::<Vec<_>>()
            .join(" ")
    })
}

fn analyze(args: &CodeArgs, format: Format) -> CmdResult {
    let analysis = Analysis::new(&build_code(args)?)?;
    match format {
        Format::Json => ok(json(&analysis)),
        Format::Csv => Err(usage("analyze reports are nested; use --format json or text")),
        Format::Text => ok(analysis_text(&analysis)),
    }
}

fn analysis_text(a: &Analysis) -> String {
    let mut s = String::new();
    let d = &a.code;
    let _ = writeln!(s, "length {} over Z{q}+uZ{q} ({} closure)", d.n, d.closure_mode, q = d.p.pow(d.s));
    let _ = writeln!(s, "generators: {}", a.generators_text.join(", "));
    let _ = writeln!(s, "|C| = {}", d.cardinality);
    if let Some(c) = &a.canonical_text {
        let _ = writeln!(s, "f0 = {}", c.f0);
        let _ = writeln!(s, "f1 = {}", c.f1);
        let _ = writeln!(s, "g1 = {}", c.g1);
    }
    if let Some(list) = &a.minimum_generating_set {
        let _ = writeln!(s, "minimum generating set: {}", list.join(", "));
    }
    match &a.free_generator {
        Some(g) => {
            let _ = writeln!(s, "free, generated by {g}");
        }
        None => {
            let _ = writeln!(s, "not free");
        }
    }
    if let Some(b) = &a.bch_certificate {
        let _ = writeln!(s, "BCH bound: delta = {} (b = {}, roots at exponents {:?})", b.delta, b.b, b.roots);
    }
    if let Some(c) = &a.ideal_closure_cardinality {
        let _ = writeln!(s, "ideal closure: |C| = {c}");
    }
    for w in &a.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn distance(args: &CodeArgs, metric: Metric, opts: SearchOptions, format: Format) -> CmdResult {
    let code = build_code(args)?;
    let report = match min_distance(&code, metric, &opts) {
        Ok(r) => DistanceJson::new(&r, code.ring()),
        Err(Error::ZeroCode) => return undefined_distance(metric, format),
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Json => ok(json(&report)),
        Format::Csv => ok(csv_table(
            &["metric", "value", "exhaustive", "words_scanned", "witness"],
            [vec![
                report.metric.clone(),
                report.value.to_string(),
                report.exhaustive.to_string(),
                report.words_scanned.to_string(),
                report.witness.clone(),
            ]],
        )?),
        Format::Text => ok(format!(
            "{} distance {} {} (witness {}, {} words scanned)\n",
            report.metric,
            if report.exhaustive { "=" } else { "<=" },
            report.value,
            report.witness,
            report.words_scanned
        )),
    }
}

fn undefined_distance(metric: Metric, format: Format) -> CmdResult {
    let report = DistanceUndefined {
        metric: metric.name().to_string(),
        distance: "undefined".into(),
        reason: "the code has no nonzero codeword".into(),
    };
    match format {
        Format::Json => ok(json(&report)),
        Format::Csv => ok(csv_table(
            &["metric", "distance", "reason"],
            [vec![report.metric, report.distance, report.reason]],
        )?),
        Format::Text => ok(format!("{} distance undefined: {}\n", report.metric, report.reason)),
    }
}

fn verify(opts: SearchOptions, format: Format) -> CmdResult {
    let checks = verify_paper(&opts)?;
    let all_pass = checks.iter().all(|c| c.pass);
    let text = match format {
        Format::Json => json(&VerifyReport { checks, all_pass }),
        Format::Csv => csv_table(
            &["name", "expected", "actual", "pass"],
            checks
                .into_iter()
                .map(|c| vec![c.name, c.expected, c.actual, c.pass.to_string()]),
        )?,
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{status}  {}: {}", c.name, c.actual);
                if !c.pass {
                    let _ = writeln!(s, "      expected {}", c.expected);
                }
            }
            s
        }
    };
    Ok(Output { text, status: if all_pass { 0 } else { 4 } })
}
