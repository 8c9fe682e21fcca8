use clap::{Args, Parser, Subcommand, ValueEnum};
use qconnect::coeffs::{
    closed_form_connection, closed_form_connection_printed, closed_form_inversion, closed_form_inversion_printed,
    ledger, CorrectionEntry,
};
use qconnect::families::{registry_lookup, FamilyInstance};
use qconnect::oracle::{oracle_connection, oracle_inversion, Status, VerificationReport};
use qconnect::verify::{run_suite, SuiteConfig, SUITES};
use qconnect::{parse_scalar, CoefficientVector, Error, GaussScalar, QContext};
use serde::Serialize;
use std::collections::BTreeMap;
use std::ffi::OsString;

pub const SCHEMA_VERSION: &str = "1";

/// exit codes
pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED_CHECKS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "qconnect", version, about = "Exact inversion and connection coefficients for q-polynomial families")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// I_m(n) expanding the basis element of degree n in the family
    Invert(Single),
    /// C_m(n) expanding the source polynomial in the target family
    Connect(Pair),
    /// Coefficient grid for 0 <= n <= n_max; give --family or --from/--to
    Table(Grid),
    /// Run a verification suite
    Verify(Suite),
    /// Print the corrections ledger
    Ledger(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Single {
    #[arg(long)]
    pub family: String,
    /// name=value, repeatable
    #[arg(long = "param")]
    pub params: Vec<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub as_printed: bool,
    /// brute-force triangular solve instead of the closed form
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Pair {
    /// id:name=value,name=value
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub as_printed: bool,
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Grid {
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub family: Option<String>,
    #[arg(long = "param", requires = "family")]
    pub params: Vec<String>,
    #[arg(long, requires = "to")]
    pub from: Option<String>,
    #[arg(long, requires = "from")]
    pub to: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub as_printed: bool,
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Suite {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    /// overrides the suite's default bases
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub sets: usize,
    /// restricts table suites to one family
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub as_printed: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Serialize)]
pub struct Row {
    pub n: usize,
    pub m: usize,
    pub value: GaussScalar,
    pub provenance: String,
}

#[derive(Serialize, Default)]
pub struct Summary {
    pub matched: usize,
    pub mismatched: usize,
    pub errors: usize,
}

#[derive(Serialize)]
pub struct Document {
    pub schema_version: &'static str,
    pub request: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Row>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<VerificationReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<&'static [CorrectionEntry]>,
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    schema_version: &'static str,
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn error_output(kind: &str, message: String, code: u8) -> Output {
    let body = ErrorObject { schema_version: SCHEMA_VERSION, error: ErrorBody { kind, message } };
    let mut stderr = serde_json::to_string(&body).expect("error object serializes");
    stderr.push('\n');
    Output { code, stdout: String::new(), stderr }
}

pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                Output { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
            }
            _ => error_output("Usage", e.to_string().trim_end().to_string(), EXIT_USAGE),
        },
    }
}

pub fn run(cli: &Cli) -> Output {
    let format = match &cli.verb {
        Verb::Invert(a) => a.common.format,
        Verb::Connect(a) => a.common.format,
        Verb::Table(a) => a.common.format,
        Verb::Verify(a) => a.common.format,
        Verb::Ledger(a) => a.format,
    };
    match build(&cli.verb) {
        Ok(doc) => {
            let failed = doc.summary.as_ref().is_some_and(|s| s.mismatched + s.errors > 0);
            match render(&doc, format) {
                Ok(stdout) => Output {
                    code: if failed { EXIT_FAILED_CHECKS } else { EXIT_OK },
                    stdout,
                    stderr: String::new(),
                },
                Err(e) => error_output("Output", e, EXIT_ERROR),
            }
        }
        Err(e) => error_output(e.kind(), e.to_string(), EXIT_ERROR),
    }
}

fn context(q: Option<&str>, families: &[&str]) -> Result<QContext, Error> {
    let q = match q {
        Some(t) => parse_scalar(t)?,
        // classical families never look at q
        None if families.iter().all(|f| registry_lookup(f).is_ok_and(|s| s.is_hypergeometric())) => {
            GaussScalar::frac(1, 2)
        }
        None => return Err(Error::Binding("--q is required for basic families".into())),
    };
    QContext::with_env_degree(q)
}

fn parse_binding(text: &str) -> Result<(String, GaussScalar), Error> {
    let (k, v) = text.split_once('=').ok_or_else(|| Error::Binding(format!("expected name=value, got `{text}`")))?;
    Ok((k.trim().to_string(), parse_scalar(v.trim())?))
}

fn bindings<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<BTreeMap<String, GaussScalar>, Error> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = parse_binding(item)?;
        if map.insert(k.clone(), v).is_some() {
            return Err(Error::Binding(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

/// `id:name=value,name=value`; the part after the colon may be empty.
pub fn split_spec(text: &str) -> (&str, Vec<&str>) {
    match text.split_once(':') {
        Some((id, rest)) => (id.trim(), rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()),
        None => (text.trim(), Vec::new()),
    }
}

fn instance_from_spec(text: &str, ctx: &QContext) -> Result<FamilyInstance, Error> {
    let (id, items) = split_spec(text);
    FamilyInstance::new(id, bindings(items)?, ctx)
}

fn echo_instance(inst: &FamilyInstance) -> String {
    let b: Vec<String> = inst.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}:{}", inst.id(), b.join(","))
}

fn rows(n: usize, v: CoefficientVector) -> Vec<Row> {
    let prov = v.provenance;
    v.values.into_iter().enumerate().map(|(m, value)| Row { n, m, value, provenance: prov.clone() }).collect()
}

fn invert(inst: &FamilyInstance, n: usize, printed: bool, oracle: bool) -> Result<CoefficientVector, Error> {
    if oracle {
        oracle_inversion(inst, n)
    } else if printed {
        closed_form_inversion_printed(inst, n)
    } else {
        closed_form_inversion(inst, n)
    }
}

fn connect(s: &FamilyInstance, t: &FamilyInstance, n: usize, printed: bool, oracle: bool) -> Result<CoefficientVector, Error> {
    if oracle {
        oracle_connection(s, t, n)
    } else if printed {
        closed_form_connection_printed(s, t, n)
    } else {
        closed_form_connection(s, t, n)
    }
}

fn document(request: BTreeMap<&'static str, String>) -> Document {
    Document { schema_version: SCHEMA_VERSION, request, rows: None, reports: None, summary: None, ledger: None }
}

fn flags(req: &mut BTreeMap<&'static str, String>, q: &QContext, printed: bool, oracle: bool) {
    req.insert("q", q.q().to_string());
    req.insert("as_printed", printed.to_string());
    req.insert("oracle", oracle.to_string());
}

pub fn build(verb: &Verb) -> Result<Document, Error> {
    match verb {
        Verb::Invert(a) => {
            let ctx = context(a.q.as_deref(), &[&a.family])?;
            let inst = FamilyInstance::new(&a.family, bindings(a.params.iter().map(String::as_str))?, &ctx)?;
            let mut req = BTreeMap::from([("verb", "invert".into()), ("family", echo_instance(&inst)), ("n", a.n.to_string())]);
            flags(&mut req, &ctx, a.as_printed, a.oracle);
            let mut doc = document(req);
            doc.rows = Some(rows(a.n, invert(&inst, a.n, a.as_printed, a.oracle)?));
            Ok(doc)
        }
        Verb::Connect(a) => {
            let ids = [split_spec(&a.from).0, split_spec(&a.to).0];
            let ctx = context(a.q.as_deref(), &ids)?;
            let (s, t) = (instance_from_spec(&a.from, &ctx)?, instance_from_spec(&a.to, &ctx)?);
            let mut req = BTreeMap::from([
                ("verb", "connect".into()),
                ("from", echo_instance(&s)),
                ("to", echo_instance(&t)),
                ("n", a.n.to_string()),
            ]);
            flags(&mut req, &ctx, a.as_printed, a.oracle);
            let mut doc = document(req);
            doc.rows = Some(rows(a.n, connect(&s, &t, a.n, a.as_printed, a.oracle)?));
            Ok(doc)
        }
        Verb::Table(a) => {
            let mut req = BTreeMap::from([("verb", "table".into()), ("n_max", a.n_max.to_string())]);
            let mut out = Vec::new();
            let ctx;
            match (&a.family, &a.from, &a.to) {
                (Some(f), _, _) => {
                    ctx = context(a.q.as_deref(), &[f])?;
                    let inst = FamilyInstance::new(f, bindings(a.params.iter().map(String::as_str))?, &ctx)?;
                    req.insert("family", echo_instance(&inst));
                    for n in 0..=a.n_max {
                        out.extend(rows(n, invert(&inst, n, a.as_printed, a.oracle)?));
                    }
                }
                (None, Some(from), Some(to)) => {
                    ctx = context(a.q.as_deref(), &[split_spec(from).0, split_spec(to).0])?;
                    let (s, t) = (instance_from_spec(from, &ctx)?, instance_from_spec(to, &ctx)?);
                    req.insert("from", echo_instance(&s));
                    req.insert("to", echo_instance(&t));
                    for n in 0..=a.n_max {
                        out.extend(rows(n, connect(&s, &t, n, a.as_printed, a.oracle)?));
                    }
                }
                _ => return Err(Error::Binding("table needs --family or both --from and --to".into())),
            }
            flags(&mut req, &ctx, a.as_printed, a.oracle);
            let mut doc = document(req);
            doc.rows = Some(out);
            Ok(doc)
        }
        Verb::Verify(a) => {
            let q = a.q.as_deref().map(parse_scalar).transpose()?;
            let cfg = SuiteConfig {
                n_max: a.n_max,
                q: q.clone(),
                seed: a.seed,
                sets: a.sets,
                as_printed: a.as_printed,
                family: a.family.clone(),
            };
            let mut reports = run_suite(&a.suite, &cfg)?;
            reports.sort_by(|x, y| x.identity_id.cmp(&y.identity_id));
            let mut summary = Summary::default();
            for r in &reports {
                match r.status {
                    Status::Match => summary.matched += 1,
                    Status::Mismatch => summary.mismatched += 1,
                    Status::Error => summary.errors += 1,
                }
            }
            let mut req = BTreeMap::from([
                ("verb", "verify".into()),
                ("suite", a.suite.clone()),
                ("n_max", a.n_max.to_string()),
                ("seed", a.seed.to_string()),
                ("sets", a.sets.to_string()),
                ("as_printed", a.as_printed.to_string()),
            ]);
            if let Some(q) = q {
                req.insert("q", q.to_string());
            }
            if let Some(f) = &a.family {
                req.insert("family", f.clone());
            }
            let mut doc = document(req);
            doc.reports = Some(reports);
            doc.summary = Some(summary);
            Ok(doc)
        }
        Verb::Ledger(_) => {
            let mut doc = document(BTreeMap::from([("verb", "ledger".into())]));
            doc.ledger = Some(ledger());
            Ok(doc)
        }
    }
}

pub fn render(doc: &Document, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(Vec::new());
            let r = if let Some(rows) = &doc.rows {
                w.write_record(["n", "m", "value", "provenance"]).and_then(|_| {
                    rows.iter().try_for_each(|r| {
                        w.write_record([r.n.to_string(), r.m.to_string(), r.value.to_string(), r.provenance.clone()])
                    })
                })
            } else if let Some(reports) = &doc.reports {
                w.write_record(["identity_id", "status", "defect", "witness"]).and_then(|_| {
                    reports.iter().try_for_each(|r| {
                        let status = format!("{:?}", r.status);
                        w.write_record([&r.identity_id, &status, &r.max_defect.to_string(), &r.witness])
                    })
                })
            } else if let Some(entries) = doc.ledger {
                w.write_record(["location", "printed_form", "corrected_form", "evidence"]).and_then(|_| {
                    entries.iter().try_for_each(|e| w.write_record([e.location, e.printed_form, e.corrected_form, e.evidence]))
                })
            } else {
                Ok(())
            };
            r.map_err(|e| e.to_string())?;
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(split_spec("q-racah:alpha=1/3, beta=2"), ("q-racah", vec!["alpha=1/3", "beta=2"]));
        assert_eq!(split_spec("stieltjes-wigert"), ("stieltjes-wigert", vec![]));
        assert_eq!(split_spec("generic-q:"), ("generic-q", vec![]));
    }

    #[test]
    fn binding_errors() {
        assert!(matches!(parse_binding("a"), Err(Error::Binding(_))));
        assert!(matches!(parse_binding("a=1/0"), Err(Error::ZeroDenominator)));
        assert!(matches!(bindings(["a=1", "a=2"]), Err(Error::Binding(_))));
        assert_eq!(parse_binding(" a = -1/3+2/7i ").unwrap().1, GaussScalar::gauss((-1, 3), (2, 7)));
    }

    #[test]
    fn q_defaults_only_for_classical() {
        assert!(context(None, &["generic-hyp", "generic-hyp-lambda"]).is_ok());
        assert!(matches!(context(None, &["generic-hyp", "q-charlier"]), Err(Error::Binding(_))));
    }
}
