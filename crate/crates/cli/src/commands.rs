use std::fmt::Display;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use setfam_bounds::{crossover_compare, render_numeric, spec, Direction, Params, TheoremId};
use setfam_constructions::{build, ConstructionParams, ConstructionTag};
use setfam_family::{write_family, Family};
use setfam_sets::{BigCount, Error, Result};
use setfam_verifier::{
    check_certificate, default_instances, run_search, verify_lemma, Budget, CertVerdict, LemmaId,
    LemmaReport, LemmaRun, Method, Mode, SearchProblem, SearchReport, Verdict, EXHAUSTIVE_LIMIT,
};

use crate::table::Table;
use crate::{Cli, Command, Failure, FamilyFormat, Format, ModeArg, Part, RunFlags, Status, Suite};

type Outcome = std::result::Result<(String, Status), Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let f = &cli.run;
    match &cli.command {
        Command::Bound {
            theorem,
            n,
            k,
            t,
            r,
            l,
            x1,
            x2,
        } => {
            let mut p = Params::new(*n, *k, *t);
            p.r = *r;
            p.l = *l;
            p.pair = x1.zip(*x2);
            bound(f, theorem.parse()?, p)
        }
        Command::Construct {
            family,
            n,
            k,
            t,
            i,
            x,
            core,
            x1,
            x2,
            part,
            as_format,
            out,
        } => {
            let p = ConstructionParams {
                n: *n,
                k: *k,
                t: *t,
                i: *i,
                x: *x,
                core: *core,
                pair: x1.zip(*x2),
            };
            construct(family.parse()?, &p, *part, *as_format, out.as_deref())
        }
        Command::Search {
            theorem,
            n,
            k,
            t,
            min_f,
            mode,
            enumerate,
        } => {
            let mode = match mode {
                ModeArg::Shifted => Mode::ShiftedOnly,
                ModeArg::Full => Mode::Full,
            };
            search(f, theorem.parse()?, (*n, *k, *t), *min_f, mode, *enumerate)
        }
        Command::Lemmas {
            only,
            max_n,
            samples,
        } => lemmas(f, only, *max_n, *samples),
        Command::Certify { file } => certify(f, file),
        Command::Table {
            suite: Suite::Crossover,
            k_min,
            k_max,
        } => crossover(f, k_min.unwrap_or(4), k_max.unwrap_or(10)),
        Command::Table {
            suite: Suite::Stability,
            k_min,
            k_max,
        } => stability(f, k_min.unwrap_or(2), k_max.unwrap_or(6)),
    }
}

fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn count(v: &BigCount) -> Value {
    big(&BigInt::from(v.clone()))
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn opt<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn render(
    format: Format,
    value: Value,
    table: &Table,
    preface: Option<&str>,
    extra: Option<&Table>,
) -> Result<String> {
    Ok(match format {
        Format::Json => pretty(&value),
        Format::Csv => table.csv()?,
        Format::Markdown => {
            let mut s = String::new();
            if let Some(p) = preface {
                s.push_str(p);
                s.push_str("\n\n");
            }
            s.push_str(&table.markdown());
            if let Some(x) = extra {
                s.push('\n');
                s.push_str(&x.markdown());
            }
            s
        }
    })
}

fn bound(f: &RunFlags, id: TheoremId, p: Params) -> Outcome {
    let s = spec(id);
    let p = s.normalize(p);
    let value = s.bound(&p)?;
    let terms = s.formula.expand(&p);
    let numeric = render_numeric(&terms, s.formula.constant);
    let mut table = Table::new(["term", "coef", "binomial", "value", "contribution"]);
    for t in &terms {
        table.push([
            t.symbolic.clone(),
            t.coef.to_string(),
            format!("C({},{})", t.top, t.bot),
            t.value.to_string(),
            (&t.value * t.coef).to_string(),
        ]);
    }
    if s.formula.constant != 0 {
        let c = s.formula.constant.to_string();
        table.push(["constant".to_string(), "1".into(), "-".into(), c.clone(), c]);
    }
    table.push([
        "total".to_string(),
        "-".into(),
        "-".into(),
        "-".into(),
        value.to_string(),
    ]);
    let relation = match s.direction {
        Direction::Upper => "<=",
        Direction::Lower => ">=",
    };
    let value_json = json!({
        "theorem": id.name(),
        "n": p.n,
        "k": p.k,
        "t": p.t,
        "r": p.r,
        "l": p.l,
        "pair": p.pair.map(|(a, b)| vec![a, b]),
        "direction": match s.direction { Direction::Upper => "UPPER", Direction::Lower => "LOWER" },
        "formula": s.formula.to_string(),
        "expansion": numeric,
        "terms": terms.iter().map(|t| json!({
            "term": t.symbolic,
            "coef": t.coef,
            "top": t.top,
            "bot": t.bot,
            "value": big(&t.value),
        })).collect::<Vec<_>>(),
        "constant": s.formula.constant,
        "value": count(&value),
    });
    let head = format!(
        "{id} at n={}, k={}, t={}: objective {relation} {} = {numeric} = {value}",
        p.n, p.k, p.t, s.formula
    );
    Ok((
        render(f.format, value_json, &table, Some(&head), None)?,
        Status::Ok,
    ))
}

fn family_json(f: &Family) -> Value {
    json!({ "n": f.ground_n(), "sets": f.to_label_lists() })
}

fn construct(
    tag: ConstructionTag,
    p: &ConstructionParams,
    part: Part,
    as_format: FamilyFormat,
    out: Option<&Path>,
) -> Outcome {
    let c = build(tag, p)?;
    let text =
        match as_format {
            FamilyFormat::Json => {
                let mut v = json!({ "construction": tag.to_string(), "f": family_json(&c.f) });
                if let Some(g) = &c.g {
                    v["g"] = family_json(g);
                }
                pretty(&v)
            }
            FamilyFormat::Text => match part {
                Part::F => write_family(&c.f),
                Part::G => write_family(c.g.as_ref().ok_or_else(|| {
                    Error::param(format!("{tag} is a single family; there is no G"))
                })?),
            },
        };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::io(path, e))?;
            Ok((String::new(), Status::Ok))
        }
        None => Ok((text, Status::Ok)),
    }
}

fn search(
    f: &RunFlags,
    id: TheoremId,
    (n, k, t): (usize, usize, usize),
    min_f: Option<usize>,
    mode: Mode,
    enumerate: bool,
) -> Outcome {
    let mut p = SearchProblem::for_theorem(id, n, k, t)?
        .with_mode(mode)
        .with_enumerate(enumerate)
        .with_threads(f.threads as usize)
        .with_budget(Budget::from_env()?);
    if let Some(m) = min_f {
        p = p.with_min_f(m);
    }
    p.seed = f.seed;
    p.record_time = f.timing;
    let r = run_search(&p)?;
    let status = match r.verdict {
        Verdict::Match | Verdict::Below => Status::Ok,
        Verdict::Violation => Status::Violation,
        Verdict::Incomplete => Status::Incomplete,
    };
    let (summary, classes) = search_tables(&r, f.timing);
    let value = serde_json::to_value(&r).expect("report serializes");
    Ok((
        render(f.format, value, &summary, None, classes.as_ref())?,
        status,
    ))
}

fn json_name(v: impl serde::Serialize) -> String {
    match serde_json::to_value(v).expect("unit variant") {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

fn sets(s: &[Vec<usize>]) -> String {
    s.iter()
        .map(|m| {
            format!(
                "{{{}}}",
                m.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn search_tables(r: &SearchReport, timing: bool) -> (Table, Option<Table>) {
    let mut head = vec![
        "theorem",
        "kind",
        "mode",
        "n",
        "k",
        "t",
        "min_f",
        "exclusions",
        "optimum",
        "bound",
        "verdict",
        "classes",
        "nodes",
        "pruned",
        "subproblems",
    ];
    if timing {
        head.push("runtime_ms");
    }
    let mut t = Table::new(head);
    let mut row = vec![
        r.theorem.name().to_string(),
        json_name(r.kind),
        json_name(r.mode),
        r.n.to_string(),
        r.k.to_string(),
        r.t.to_string(),
        r.min_f.to_string(),
        r.exclusions
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";"),
        opt(r.optimum.as_ref()),
        r.paper_bound.to_string(),
        json_name(r.verdict),
        opt(r.extremal.as_ref().map(|e| e.classes.len())),
        r.stats.nodes_explored.to_string(),
        r.stats.pruned.to_string(),
        r.stats.subproblems.to_string(),
    ];
    if timing {
        row.push(opt(r.stats.runtime_ms));
    }
    t.push(row);
    let classes = r.extremal.as_ref().map(|e| {
        let mut c = Table::new(["class", "catalog", "F", "G"]);
        for (i, x) in e.classes.iter().enumerate() {
            c.push([
                i.to_string(),
                x.catalog
                    .clone()
                    .unwrap_or_else(|| "(not in catalog)".into()),
                sets(&x.f),
                x.g.as_deref().map_or_else(|| "-".to_string(), sets),
            ]);
        }
        for m in &e.missing {
            c.push([
                "-".to_string(),
                format!("{m} (missing)"),
                "-".into(),
                "-".into(),
            ]);
        }
        c
    });
    (t, classes)
}

fn lemmas(f: &RunFlags, only: &[String], max_n: usize, samples: u64) -> Outcome {
    let ids: Vec<LemmaId> = if only.is_empty() {
        LemmaId::ALL.to_vec()
    } else {
        only.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let run = LemmaRun {
        samples,
        seed: f.seed,
        limit: EXHAUSTIVE_LIMIT,
    };
    let mut reports: Vec<LemmaReport> = Vec::new();
    for id in ids {
        let ps: Vec<_> = default_instances(id)
            .into_iter()
            .filter(|p| p.n <= max_n)
            .collect();
        if ps.is_empty() {
            if !only.is_empty() {
                return Err(Error::param(format!(
                    "{id} has no default instance with n <= {max_n}"
                ))
                .into());
            }
            continue;
        }
        reports.push(verify_lemma(id, &ps, &run)?);
    }
    let mut t = Table::new([
        "lemma",
        "n",
        "k",
        "t",
        "l",
        "r",
        "method",
        "checked",
        "counterexamples",
        "max_value",
        "bound",
        "inventory",
        "holds",
    ]);
    let mut examples = Table::new(["lemma", "n", "k", "t", "counterexample"]);
    for rep in &reports {
        for i in &rep.instances {
            let p = i.params;
            t.push([
                rep.lemma.name().to_string(),
                p.n.to_string(),
                p.k.to_string(),
                p.t.to_string(),
                opt(p.l),
                opt(p.r),
                json_name(i.method),
                i.checked.to_string(),
                i.counterexamples.to_string(),
                opt(i.max_value),
                opt(i.bound),
                i.inventory.as_ref().map_or_else(
                    || "-".into(),
                    |v| {
                        if v.matches() {
                            "ok".into()
                        } else {
                            "mismatch".to_string()
                        }
                    },
                ),
                i.holds().to_string(),
            ]);
            for e in &i.examples {
                examples.push([
                    rep.lemma.name().to_string(),
                    p.n.to_string(),
                    p.k.to_string(),
                    p.t.to_string(),
                    e.clone(),
                ]);
            }
        }
    }
    let status = if reports.iter().any(|r| !r.holds) {
        Status::Violation
    } else if reports
        .iter()
        .flat_map(|r| &r.instances)
        .any(|i| i.method == Method::Incomplete)
    {
        Status::Incomplete
    } else {
        Status::Ok
    };
    let value = serde_json::to_value(&reports).expect("reports serialize");
    let extra = (!examples.rows.is_empty()).then_some(&examples);
    Ok((render(f.format, value, &t, None, extra)?, status))
}

fn certify(f: &RunFlags, path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    // everything wrong with a certificate is wrong with its file
    let r = check_certificate(&text).map_err(|e| Failure {
        status: Status::Io,
        reason: e.to_string(),
    })?;
    let mut t = Table::new([
        "theorem", "n", "k", "t", "verdict", "value", "bound", "failed",
    ]);
    t.push([
        r.theorem.name().to_string(),
        r.n.to_string(),
        r.k.to_string(),
        r.t.to_string(),
        json_name(r.verdict),
        r.value.to_string(),
        r.bound.to_string(),
        r.failed.join(";"),
    ]);
    let status = if r.verdict == CertVerdict::Violates {
        Status::Violation
    } else {
        Status::Ok
    };
    let value = serde_json::to_value(&r).expect("report serializes");
    Ok((render(f.format, value, &t, None, None)?, status))
}

fn ordering_name(o: std::cmp::Ordering) -> &'static str {
    match o {
        std::cmp::Ordering::Less => "LESS",
        std::cmp::Ordering::Equal => "EQUAL",
        std::cmp::Ordering::Greater => "GREATER",
    }
}

fn crossover(f: &RunFlags, k_min: usize, k_max: usize) -> Outcome {
    if k_min < 4 || k_min > k_max {
        return Err(Error::param(format!("need 4 <= k-min <= k-max, got {k_min}..{k_max}")).into());
    }
    let mut t = Table::new([
        "k", "n", "K2", "J3", "ordering", "window", "K2 terms", "J3 terms",
    ]);
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        for n in 2 * k + 1..=4 * k {
            let x = crossover_compare(n, k)?;
            let k2_terms = format!(
                "C({},{}) - 2C({},{}) + C({},{}) + 2",
                n - 1,
                k - 1,
                n - k - 1,
                k - 1,
                n - k - 3,
                k - 1
            );
            let j3_terms = format!(
                "C({},{}) - C({},{}) - C({},{}) - C({},{}) + 3",
                n - 1,
                k - 1,
                n - k - 1,
                k - 1,
                n - k - 2,
                k - 2,
                n - k - 3,
                k - 3
            );
            t.push([
                k.to_string(),
                n.to_string(),
                x.k2.to_string(),
                x.j3.to_string(),
                ordering_name(x.ordering).to_string(),
                x.in_window.to_string(),
                k2_terms.clone(),
                j3_terms.clone(),
            ]);
            rows.push(json!({
                "k": k,
                "n": n,
                "k2": big(&x.k2),
                "j3": big(&x.j3),
                "ordering": ordering_name(x.ordering),
                "in_window": x.in_window,
                "reformulation": x.reformulation,
                "k2_terms": k2_terms,
                "j3_terms": j3_terms,
            }));
        }
    }
    let head = "|K2(n,k)| against |J3(n,k)|; the window is 2k+1 <= n <= 3k-3";
    Ok((
        render(f.format, Value::Array(rows), &t, Some(head), None)?,
        Status::Ok,
    ))
}

fn stability(f: &RunFlags, k_min: usize, k_max: usize) -> Outcome {
    if k_min < 1 || k_min > k_max {
        return Err(Error::param(format!("need 1 <= k-min <= k-max, got {k_min}..{k_max}")).into());
    }
    let ids = [TheoremId::F16, TheoremId::W23, TheoremId::Main51];
    let mut head = vec!["n".to_string(), "k".into(), "t".into()];
    for id in ids {
        head.push(id.name().to_string());
        head.push(format!("{} terms", id.name()));
    }
    let mut t = Table::new(head);
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        for tt in 0..=1 {
            for n in 2 * k + tt..=2 * k + tt + 3 {
                let p = Params::new(n, k, tt);
                let mut row = vec![n.to_string(), k.to_string(), tt.to_string()];
                let mut obj = json!({ "n": n, "k": k, "t": tt });
                for id in ids {
                    let s = spec(id);
                    match s.bound(&p) {
                        Ok(v) => {
                            let terms = render_numeric(&s.formula.expand(&p), s.formula.constant);
                            row.push(v.to_string());
                            row.push(terms.clone());
                            obj[id.name()] = json!({ "value": count(&v), "terms": terms });
                        }
                        Err(_) => {
                            row.push("-".into());
                            row.push("-".into());
                            obj[id.name()] = Value::Null;
                        }
                    }
                }
                t.push(row);
                rows.push(obj);
            }
        }
    }
    let head = format!(
        "F16 (|F|>=1): {}; W23 (|F|>=2): {}; MAIN51 (|F|>=3): {}",
        spec(TheoremId::F16).formula,
        spec(TheoremId::W23).formula,
        spec(TheoremId::Main51).formula
    );
    Ok((
        render(f.format, Value::Array(rows), &t, Some(&head), None)?,
        Status::Ok,
    ))
}
