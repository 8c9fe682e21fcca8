use qconnect::coeffs::closed_form_connection;
use qconnect::families::FamilyInstance;
use qconnect::oracle::VerificationReport;
use qconnect::verify::{self, SuiteConfig};
use qconnect::{Error, GaussScalar, QContext};
use std::process::ExitCode;
use std::time::{Duration, Instant};

fn cfg(n_max: usize) -> SuiteConfig {
    SuiteConfig { n_max, ..Default::default() }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn judge(reports: &[VerificationReport], limit: Option<Duration>, took: Duration) -> Outcome {
    if reports.is_empty() {
        return Outcome { ok: false, detail: "no checks ran".into() };
    }
    if let Some(bad) = reports.iter().find(|r| !r.is_match()) {
        return Outcome { ok: false, detail: format!("{} {:?}: {}", bad.identity_id, bad.status, bad.witness) };
    }
    if let Some(l) = limit {
        if took > l {
            return Outcome { ok: false, detail: format!("took {took:?}, limit {l:?}") };
        }
    }
    Outcome { ok: true, detail: format!("{} checks in {:.1?}", reports.len(), took) }
}

fn timed(limit: Option<u64>, f: impl FnOnce() -> Vec<VerificationReport>) -> Outcome {
    let t = Instant::now();
    let r = f();
    judge(&r, limit.map(Duration::from_secs), t.elapsed())
}

fn only(ids: &[&str], reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    reports.into_iter().filter(|r| ids.iter().any(|i| r.identity_id.starts_with(i))).collect()
}

fn racah_rejects_mismatched_product() -> Vec<VerificationReport> {
    let c = QContext::new(GaussScalar::frac(2, 5), 16).unwrap();
    let inst = |vals: [(i64, i64); 4]| {
        let names = ["alpha", "beta", "gamma", "delta"];
        let map = names.iter().zip(vals).map(|(k, (n, d))| (k.to_string(), GaussScalar::frac(n, d))).collect();
        FamilyInstance::new("q-racah", map, &c).unwrap()
    };
    let s = inst([(1, 3), (2, 7), (3, 5), (5, 11)]);
    let t = inst([(4, 9), (1, 6), (3, 5), (7, 11)]);
    let id = "Eq4.6:precondition";
    vec![match closed_form_connection(&s, &t, 3) {
        Err(Error::PreconditionViolated(m)) => VerificationReport::matched(id, m),
        Err(e) => VerificationReport::error(id, &e, "wrong error".into()),
        Ok(_) => VerificationReport::error(id, &Error::PreconditionViolated("accepted".into()), "gamma*delta differs".into()),
    }]
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 generic basic inversion and reconstruction", Box::new(|| timed(Some(30), || verify::basic_inversion(&cfg(6))))),
        ("2 generic basic connection", Box::new(|| timed(Some(60), || verify::basic_connection(&cfg(5))))),
        ("3 basic classes without a", Box::new(|| timed(None, || verify::basic_without_a(&cfg(6))))),
        ("4 hypergeometric classes", Box::new(|| timed(None, || verify::classical(&cfg(6))))),
        ("5 monic recursion, n <= 10", Box::new(|| timed(None, || verify::monic_recursion(&cfg(10))))),
        ("6 composition", Box::new(|| timed(None, || verify::composition(&cfg(5))))),
        (
            "7 table rows and corrections",
            Box::new(|| {
                timed(Some(300), || {
                    let c = cfg(6);
                    let t2 = verify::table2(&c).into_iter().filter(|r| !r.identity_id.starts_with("delta:"));
                    verify::table1(&c).into_iter().chain(t2).collect()
                })
            }),
        ),
        ("8 delta property", Box::new(|| timed(None, || verify::deltas(&cfg(6))))),
        ("9 self-inverse matrix", Box::new(|| timed(None, || verify::selfinverse(&SuiteConfig { n_max: 8, sets: 5, ..cfg(8) })))),
        (
            "10 q -> 1 limit",
            Box::new(|| {
                timed(None, || {
                    verify::LIMIT_PAIRS
                        .iter()
                        .flat_map(|(a, b, c, d)| verify::limit_reports("limit", a, b, c, d, 4, false))
                        .collect()
                })
            }),
        ),
        (
            "11 continuous q-Hermite pointwise",
            Box::new(|| {
                let c = SuiteConfig { family: Some("continuous-q-hermite".into()), ..cfg(5) };
                timed(None, || only(&["Table1:continuous-q-hermite", "ledger:"], verify::table1(&c)))
            }),
        ),
        (
            "12 Askey-Wilson and q-Racah",
            Box::new(|| {
                timed(None, || {
                    let mut out = Vec::new();
                    for fam in ["askey-wilson", "q-racah"] {
                        let c = SuiteConfig { family: Some(fam.into()), ..cfg(5) };
                        out.extend(only(&["Eq4."], verify::table1(&c)));
                        out.extend(only(&["Eq4."], verify::table2(&c)));
                    }
                    out.extend(racah_rejects_mismatched_product());
                    out
                })
            }),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
