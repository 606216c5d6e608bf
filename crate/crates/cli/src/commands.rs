use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use staircase::asep::{verify_correspondence_with, AsepRates};
use staircase::diagonal::{self, DiagonalMode, Pmf, Stat};
use staircase::enumerate::{self, limits};
use staircase::measure::{self, MeasureParams};
use staircase::poisson::tv_to_poisson;
use staircase::rational::{to_pq, Rational};
use staircase::tableau::TypeConvention;
use staircase::text::write_blocks;
use staircase::verify::{run_suites, Suite};

use crate::{Command, Convention, Format, MeasureArgs, Outcome, SampleArgs};

/// Draws used by `explore-diagonal` when n is past the enumeration cap.
const DEFAULT_SAMPLES: usize = 100_000;

fn q(r: &Rational) -> Value {
    Value::String(to_pq(r))
}

fn params(m: &MeasureArgs) -> Result<MeasureParams> {
    MeasureParams::with_limits(m.a.clone(), m.b.clone()).context("--a/--b")
}

fn pmf_json(p: &Pmf) -> Value {
    Value::Array(p.masses().iter().enumerate().map(|(k, m)| json!({"k": k, "p": q(m)})).collect())
}

fn pmf_csv(p: &Pmf) -> String {
    let mut s = String::from("k,p\n");
    for (k, m) in p.masses().iter().enumerate() {
        s.push_str(&format!("{k},{}\n", to_pq(m)));
    }
    s
}

fn stdout(text: String) -> Outcome {
    Outcome { text, out: None, ok: true }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Enumerate { n, full, out } => {
            let tabs = if full { enumerate::enumerate_full(n)? } else { enumerate::enumerate_ab(n)? };
            Ok(Outcome { text: write_blocks(&tabs), out, ok: true })
        }
        Command::Count { n, full } => {
            let count = if full {
                enumerate::full_weight_classes(n)?.values().sum()
            } else {
                enumerate::count_ab(n)?
            };
            Ok(stdout(format!("{count}\n")))
        }
        Command::Sample(args) => sample(args),
        Command::BoxDist { measure, i, j, format } => box_dist(&measure, i.zip(j), format),
        Command::Diag { measure, stat, r, format } => diag(&measure, stat, r, format),
        Command::Moments { measure, stat, r } => moments(&measure, stat, r),
        Command::Tv { stat, a, b, n_range, format } => tv(stat, a, b, n_range, format),
        Command::Verify { suite, max_n } => verify(&suite, max_n),
        Command::AsepVerify { n, rates, convention } => {
            let rates = AsepRates::parse(&rates).context("--rates")?;
            let convention = match convention {
                Convention::AlphaDelta => TypeConvention::AlphaDelta,
                Convention::AlphaGamma => TypeConvention::AlphaGamma,
            };
            let report = verify_correspondence_with(n, &rates, convention)?;
            Ok(Outcome { text: format!("{}\n", report.to_json()), out: None, ok: report.equal() })
        }
        Command::ExploreDiagonal { measure, d, samples, seed, format } => explore(&measure, d, samples, seed, format),
    }
}

fn sample(args: SampleArgs) -> Result<Outcome> {
    let m = &args.measure;
    let batch = if args.gamma.is_some() || args.delta.is_some() {
        if m.a == Rational::default() || m.b == Rational::default() {
            bail!("--a and --b must be positive in four-symbol mode (alpha = 1/a, beta = 1/b)");
        }
        let zero = Rational::default();
        let gamma = args.gamma.unwrap_or_else(|| zero.clone());
        let delta = args.delta.unwrap_or(zero);
        measure::sample_four(m.n, &m.a.recip(), &m.b.recip(), &gamma, &delta, args.seed, args.count)?
    } else {
        measure::sample(m.n, &params(m)?, args.seed, args.count)?
    };
    Ok(Outcome { text: batch.to_text(), out: args.out, ok: true })
}

fn box_dist(m: &MeasureArgs, only: Option<(usize, usize)>, format: Format) -> Result<Outcome> {
    let p = params(m)?;
    let boxes: Vec<(usize, usize)> = match only {
        Some(b) => vec![b],
        None => (1..=m.n).flat_map(|i| (1..=m.n + 1 - i).map(move |j| (i, j))).collect(),
    };
    let mut rows = Vec::new();
    for (i, j) in boxes {
        rows.push(((i, j), diagonal::p_box(m.n, &p, i, j)?));
    }
    let text = match format {
        Format::Csv => {
            let mut s = String::from("i,j,alpha,beta,empty\n");
            for ((i, j), l) in &rows {
                s.push_str(&format!("{i},{j},{},{},{}\n", to_pq(&l.alpha), to_pq(&l.beta), to_pq(&l.empty)));
            }
            s
        }
        Format::Json => pretty(&json!({
            "n": m.n,
            "a": q(&m.a),
            "b": q(&m.b),
            "boxes": rows.iter().map(|((i, j), l)| json!({
                "i": i, "j": j, "alpha": q(&l.alpha), "beta": q(&l.beta), "empty": q(&l.empty),
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(stdout(text))
}

fn diag(m: &MeasureArgs, stat: Stat, r: Option<usize>, format: Format) -> Result<Outcome> {
    let p = params(m)?;
    let top = r.unwrap_or_else(|| diagonal::vanishing_order(m.n));
    let moments = (0..=top).map(|r| diagonal::factorial_moment(m.n, &p, stat, r)).collect::<Result<Vec<_>, _>>()?;
    let pmf = diagonal::pmf_from_formulas(m.n, &p, stat)?;
    let text = match format {
        Format::Csv => {
            let mut s = String::from("kind,index,value\n");
            for (r, v) in moments.iter().enumerate() {
                s.push_str(&format!("moment,{r},{}\n", to_pq(v)));
            }
            for (k, v) in pmf.masses().iter().enumerate() {
                s.push_str(&format!("pmf,{k},{}\n", to_pq(v)));
            }
            s
        }
        Format::Json => pretty(&json!({
            "n": m.n,
            "a": q(&m.a),
            "b": q(&m.b),
            "stat": stat.name(),
            "factorial_moments": moments.iter().enumerate().map(|(r, v)| json!({"r": r, "value": q(v)})).collect::<Vec<_>>(),
            "pmf": pmf_json(&pmf),
        })),
    };
    Ok(stdout(text))
}

fn moments(m: &MeasureArgs, stat: Stat, r: Option<usize>) -> Result<Outcome> {
    let p = params(m)?;
    let top = r.unwrap_or_else(|| diagonal::vanishing_order(m.n) + 1);
    let oracle = if m.n <= limits().alpha_beta { Some(diagonal::pmf_exact(m.n, &p, stat)?) } else { None };
    let mut agree = true;
    let mut rows = Vec::new();
    for r in 0..=top {
        let f = diagonal::factorial_moment(m.n, &p, stat, r)?;
        let mut row = json!({"r": r, "formula": q(&f)});
        if let Some(pmf) = &oracle {
            let o = pmf.factorial_moment(r);
            agree &= o == f;
            row["enumeration"] = q(&o);
            row["equal"] = Value::Bool(o == f);
        }
        rows.push(row);
    }
    let v = json!({
        "n": m.n,
        "a": q(&m.a),
        "b": q(&m.b),
        "stat": stat.name(),
        "checked": oracle.is_some(),
        "moments": rows,
    });
    Ok(Outcome { text: pretty(&v), out: None, ok: agree })
}

fn tv(stat: Stat, a: Rational, b: Rational, (lo, hi): (usize, usize), format: Format) -> Result<Outcome> {
    if lo == 0 {
        bail!("--n-range must start at 1 or more");
    }
    let p = MeasureParams::with_limits(a.clone(), b.clone()).context("--a/--b")?;
    let lambda = stat.poisson_limit();
    let mut rows = Vec::new();
    for n in lo..=hi {
        let pmf = diagonal::pmf_from_formulas(n, &p, stat)?;
        let d = tv_to_poisson(&pmf, &lambda)?;
        rows.push((n, pmf, d));
    }
    let text = match format {
        Format::Csv => {
            let mut s = String::from("n,tv\n");
            for (n, _, d) in &rows {
                s.push_str(&format!("{n},{}\n", d.to_decimal(30)));
            }
            s
        }
        Format::Json => pretty(&json!({
            "stat": stat.name(),
            "a": q(&a),
            "b": q(&b),
            "lambda": q(&lambda),
            "rows": rows.iter().map(|(n, pmf, d)| json!({
                "n": n,
                "tv": d.to_decimal(30),
                "pmf": pmf_json(pmf),
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(stdout(text))
}

fn verify(selection: &str, max_n: usize) -> Result<Outcome> {
    let Some(suites) = Suite::parse_selection(selection) else {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        bail!("--suite {selection:?}: expected one of {}, diagonals, all", names.join(", "));
    };
    let reports = run_suites(&suites, max_n)?;
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.summary_line());
        text.push('\n');
        for f in &r.failures {
            text.push_str(&format!("  {f}\n"));
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    text.push_str(if ok { "overall        PASS\n" } else { "overall        FAIL\n" });
    Ok(Outcome { text, out: None, ok })
}

fn explore(m: &MeasureArgs, d: usize, samples: Option<usize>, seed: u64, format: Format) -> Result<Outcome> {
    let p = params(m)?;
    let mode = match samples {
        None if m.n <= limits().alpha_beta => DiagonalMode::Exact,
        None => DiagonalMode::Empirical { samples: DEFAULT_SAMPLES, seed },
        Some(samples) => DiagonalMode::Empirical { samples, seed },
    };
    let pmf = diagonal::diagonal_pmf(m.n, &p, d, mode)?;
    let text = match format {
        Format::Csv => pmf_csv(&pmf),
        Format::Json => {
            let mut v = json!({"n": m.n, "a": q(&m.a), "b": q(&m.b), "d": d});
            match mode {
                DiagonalMode::Exact => v["mode"] = json!("exact"),
                DiagonalMode::Empirical { samples, seed } => {
                    v["mode"] = json!("empirical");
                    v["samples"] = json!(samples);
                    v["seed"] = json!(seed);
                }
            }
            v["pmf"] = pmf_json(&pmf);
            pretty(&v)
        }
    };
    Ok(stdout(text))
}
