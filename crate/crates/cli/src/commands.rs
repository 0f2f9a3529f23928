use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lenpres_core::algebra::{
    closure_with_workers, find_witness, is_regular_semigroup_with_workers, is_witness, Carrier,
    RegularityReport, SearchStats,
};
use lenpres_core::io::{load_or_enumerate, read_elements_file, write_elements};
use lenpres_core::length::{decompose, first_violation, LengthViolation};
use lenpres_core::verify::{all_passed, render_table, verify_all, VerifyOptions};
use lenpres_core::witnesses::{
    counterexample_t1, counterexample_tl, regime_witness, strictness_witness, WitnessSource,
};
use lenpres_core::{
    Decomposition, Derivation, ElementSet, Error, Result, SemigroupSpec, Transformation, Variant,
};
use serde::Serialize;

use crate::{Cli, Command, CounterKind, Format, SpecArgs, VariantArg};

pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            success: true,
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn render<T: Serialize + ?Sized>(format: Format, text: String, data: &T) -> String {
    match format {
        Format::Text => text,
        Format::Json => to_json(data),
    }
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn spec_of(args: &SpecArgs) -> Result<SemigroupSpec> {
    let variant = match args.variant {
        VariantArg::Plain => Variant::Preserving,
        VariantArg::Star => Variant::Reflecting,
        VariantArg::Full => Variant::Full,
    };
    let l = match (args.l, variant) {
        (Some(l), _) => l,
        (None, Variant::Full) => 1,
        (None, _) => {
            return Err(Error::Precondition(format!(
                "--l is required for --variant {variant}"
            )))
        }
    };
    SemigroupSpec::new(args.n, l, variant)
}

fn element_of(text: &str, n: usize) -> Result<Transformation> {
    Transformation::parse_with_degree(text, n)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cache = cli.cache.as_deref();
    let load = |spec: &SemigroupSpec| load_or_enumerate(spec, cache, cli.workers);
    match &cli.command {
        Command::Enumerate { spec, out } => {
            let spec = spec_of(spec)?;
            let set = load(&spec)?;
            listing(cli.format, &spec.label(), Some(&spec), &set, out.as_deref()).map(Outcome::ok)
        }
        Command::Member { spec, element } => {
            let spec = spec_of(spec)?;
            let a = element_of(element, spec.n)?;
            Ok(Outcome::ok(member(cli.format, &spec, &a)?))
        }
        Command::Regular {
            spec,
            element,
            report,
        } => {
            let spec = spec_of(spec)?;
            let set = load(&spec)?;
            match element {
                Some(text) => {
                    let a = element_of(text, spec.n)?;
                    Ok(Outcome::ok(regular_element(cli.format, &spec, &set, &a)))
                }
                None => {
                    let r =
                        is_regular_semigroup_with_workers(&set, Carrier::Spec(spec), cli.workers)?;
                    if let Some(path) = report {
                        write_file(path, to_json(&r).as_bytes())?;
                    }
                    Ok(Outcome::ok(render(cli.format, report_text(&r), &r)))
                }
            }
        }
        Command::Witness { spec, element } => {
            let spec = spec_of(spec)?;
            let a = element_of(element, spec.n)?;
            if !spec.contains(&a) {
                return Err(Error::Precondition(format!(
                    "{a} is not an element of {spec}"
                )));
            }
            witness(cli.format, &spec, &a, || load(&spec)).map(Outcome::ok)
        }
        Command::Counterexample { n, l, kind } => {
            counterexample(cli.format, *n, *l, *kind).map(Outcome::ok)
        }
        Command::Closure { n, gens, out } => {
            let generators = read_elements_file(gens, *n)?;
            let set = closure_with_workers(&generators, cli.workers)?;
            let label = format!("closure of {} generators", generators.len());
            listing(cli.format, &label, None, &set, out.as_deref()).map(Outcome::ok)
        }
        Command::Decompose { n, l } => Ok(Outcome::ok(decomposition(cli.format, *n, *l)?)),
        Command::Verify {
            max_n,
            allow_large,
            timings,
            report,
        } => {
            let opts = VerifyOptions {
                workers: cli.workers,
                allow_large: *allow_large,
                timings: *timings,
                cache_dir: cli.cache.clone(),
            };
            let results = verify_all(*max_n, &opts)?;
            let json = to_json(&results);
            if let Some(path) = report {
                write_file(path, json.as_bytes())?;
            }
            let stdout = match cli.format {
                Format::Text => render_table(&results),
                Format::Json => json,
            };
            Ok(Outcome {
                stdout,
                success: all_passed(&results),
            })
        }
    }
}

#[derive(Serialize)]
struct Listing<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<&'a SemigroupSpec>,
    label: &'a str,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

fn listing(
    format: Format,
    label: &str,
    spec: Option<&SemigroupSpec>,
    set: &ElementSet,
    out: Option<&Path>,
) -> Result<String> {
    let mut file = Vec::new();
    write_elements(&mut file, Some(label), set)?;
    let mut data = Listing {
        spec,
        label,
        size: set.len(),
        elements: None,
        out: None,
    };
    let text = match out {
        Some(path) => {
            write_file(path, &file)?;
            data.out = Some(path.display().to_string());
            format!(
                "{label}: {} elements written to {}\n",
                set.len(),
                path.display()
            )
        }
        None => {
            data.elements = Some(set.iter().map(|t| t.to_string()).collect());
            String::from_utf8(file).expect("element text is ASCII")
        }
    };
    Ok(render(format, text, &data))
}

#[derive(Serialize)]
struct Membership<'a> {
    spec: &'a SemigroupSpec,
    element: String,
    member: bool,
    violation: Option<LengthViolation>,
}

fn member(format: Format, spec: &SemigroupSpec, a: &Transformation) -> Result<String> {
    let violation = first_violation(a, spec)?;
    let data = Membership {
        spec,
        element: a.to_string(),
        member: violation.is_none(),
        violation,
    };
    let mut text = format!("{}\n", data.member);
    if let Some(v) = &data.violation {
        let _ = writeln!(text, "violated pair: {v}");
    }
    Ok(render(format, text, &data))
}

#[derive(Serialize)]
struct ElementRegularity<'a> {
    spec: &'a SemigroupSpec,
    element: String,
    member: bool,
    regular: bool,
    witness: Option<String>,
    carrier_size: usize,
    stats: SearchStats,
}

fn regular_element(
    format: Format,
    spec: &SemigroupSpec,
    set: &ElementSet,
    a: &Transformation,
) -> String {
    let search = find_witness(a, set);
    let data = ElementRegularity {
        spec,
        element: a.to_string(),
        member: set.contains(a),
        regular: search.witness.is_some(),
        witness: search.witness.map(|w| w.to_string()),
        carrier_size: set.len(),
        stats: search.stats,
    };
    let mut text = format!(
        "element: {}\nmember of {spec}: {}\nregular: {}\n",
        data.element, data.member, data.regular
    );
    if let Some(w) = &data.witness {
        let _ = writeln!(text, "witness: {w}");
    }
    let _ = writeln!(
        text,
        "scanned {} of {} elements, {} compositions",
        search.stats.elements_scanned,
        set.len(),
        search.stats.compositions
    );
    render(format, text, &data)
}

fn report_text(r: &RegularityReport) -> String {
    let mut text = String::new();
    let label = match &r.carrier {
        Carrier::Spec(spec) => spec.label(),
        Carrier::Described { description } => description.clone(),
    };
    let _ = writeln!(
        text,
        "spec: {label}\nsize: {}\nregular: {}",
        r.size, r.regular
    );
    let irregular: Vec<&Transformation> = r.irregular_elements().collect();
    let _ = writeln!(text, "irregular elements: {}", irregular.len());
    for a in irregular {
        let _ = writeln!(text, "  {a}");
    }
    let _ = writeln!(text, "witnesses:");
    for v in &r.verdicts {
        if let Some(w) = &v.witness {
            let _ = writeln!(text, "  {} -> {w}", v.element);
        }
    }
    let s = &r.stats;
    let _ = writeln!(
        text,
        "stats: elements_scanned {}, compositions {}, closure_generators {}, closure_products {}",
        s.elements_scanned, s.compositions, s.closure_generators, s.closure_products
    );
    text
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    spec: &'a SemigroupSpec,
    element: String,
    witness: Option<String>,
    source: Option<WitnessSource>,
    verified: bool,
    trace: Vec<String>,
}

fn witness<F>(format: Format, spec: &SemigroupSpec, a: &Transformation, load: F) -> Result<String>
where
    F: FnOnce() -> Result<ElementSet>,
{
    let (witness, source, trace) = match regime_witness(a, spec)? {
        Some(Derivation { result, trace }) => {
            (Some(result), Some(WitnessSource::Constructed), trace)
        }
        None => {
            let set = load()?;
            let search = find_witness(a, &set);
            let note = format!(
                "no construction applies to {spec}; exhaustive search scanned {} of {} elements",
                search.stats.elements_scanned,
                set.len()
            );
            let source = search.witness.map(|_| WitnessSource::OracleFound);
            (search.witness, source, vec![note])
        }
    };
    let verified = witness.is_some_and(|b| is_witness(a, &b) && spec.contains(&b));
    let data = WitnessOutput {
        spec,
        element: a.to_string(),
        witness: witness.map(|b| b.to_string()),
        source,
        verified,
        trace,
    };
    let mut text = match (&data.witness, source) {
        (Some(b), Some(WitnessSource::Constructed)) => format!("witness: {b} (constructed)\n"),
        (Some(b), _) => format!("witness: {b} (oracle-found)\n"),
        (None, _) => "no witness: the element is not regular\n".to_string(),
    };
    if data.witness.is_some() {
        let _ = writeln!(text, "verified: {verified}");
    }
    for line in &data.trace {
        let _ = writeln!(text, "  {line}");
    }
    Ok(render(format, text, &data))
}

#[derive(Serialize)]
struct CounterOutput<'a> {
    spec: SemigroupSpec,
    kind: &'a str,
    result: String,
    trace: &'a [String],
}

fn counterexample(format: Format, n: usize, l: Option<usize>, kind: CounterKind) -> Result<String> {
    let (spec, d, kind) = match kind {
        CounterKind::Regularity => match l {
            None | Some(1) => (
                SemigroupSpec::preserving(n, 1),
                counterexample_t1(n)?,
                "regularity",
            ),
            Some(l) => (
                SemigroupSpec::preserving(n, l),
                counterexample_tl(n, l)?,
                "regularity",
            ),
        },
        CounterKind::Strictness => {
            let l = l.ok_or_else(|| {
                Error::Precondition("--l is required for --kind strictness".into())
            })?;
            (
                SemigroupSpec::preserving(n, l),
                strictness_witness(n, l)?,
                "strictness",
            )
        }
    };
    let spec = spec?;
    let data = CounterOutput {
        spec,
        kind,
        result: d.result.to_string(),
        trace: &d.trace,
    };
    let what = if kind == "regularity" {
        format!("non-regular element of {spec}")
    } else {
        format!(
            "element of {spec} outside {}",
            SemigroupSpec::reflecting(n, spec.l)?.label()
        )
    };
    let mut text = format!("{what}: {}\n", data.result);
    for line in &d.trace {
        let _ = writeln!(text, "  {line}");
    }
    Ok(render(format, text, &data))
}

#[derive(Serialize)]
struct DecomposeOutput<'a> {
    n: usize,
    l: usize,
    decomposition: &'a Decomposition,
}

fn join(points: impl Iterator<Item = usize>) -> String {
    points.map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn decomposition(format: Format, n: usize, l: usize) -> Result<String> {
    let d = decompose(n, l)?;
    let mut text = String::new();
    match &d {
        Decomposition::PairMiddle { pairs, middle } => {
            let pairs: Vec<String> = pairs.iter().map(|(x, y)| format!("({x}, {y})")).collect();
            let _ = writeln!(text, "pairs: {}", pairs.join(" "));
            let _ = writeln!(text, "middle: {{{}}}", join(middle.iter().copied()));
        }
        Decomposition::Classes(c) => {
            for i in 1..=c.count() {
                let _ = writeln!(
                    text,
                    "A_{i} = {{{}}}  m = {}",
                    join(c.members(i)),
                    c.multiplicity(i)
                );
            }
        }
    }
    Ok(render(
        format,
        text,
        &DecomposeOutput {
            n,
            l,
            decomposition: &d,
        },
    ))
}
