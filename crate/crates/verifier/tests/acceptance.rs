//! Runs every acceptance criterion and prints one PASS/FAIL line each.

mod common;

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use setfam_bounds::{bound_value, crossover_compare, self_check, Params, TheoremId};
use setfam_constructions::{j_family_default, k2_family_default};
use setfam_verifier::{
    default_instances, run_search, verify_instance, LemmaId, LemmaParams, LemmaRun, Method, Mode,
    SearchProblem, SearchReport, Verdict,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn search(
    id: TheoremId,
    n: usize,
    k: usize,
    t: usize,
    mode: Mode,
    enumerate: bool,
    threads: usize,
) -> SearchReport {
    let p = SearchProblem::for_theorem(id, n, k, t)
        .unwrap()
        .with_mode(mode)
        .with_enumerate(enumerate)
        .with_threads(threads);
    run_search(&p).unwrap()
}

fn value(r: &SearchReport) -> u64 {
    r.optimum
        .as_ref()
        .and_then(ToPrimitive::to_u64)
        .unwrap_or(0)
}

fn bound(id: TheoremId, n: usize, k: usize, t: usize) -> u64 {
    bound_value(id, &Params::new(n, k, t))
        .unwrap()
        .to_u64()
        .unwrap()
}

/// Checks a completed search against its bound and, when enumerated,
/// against the catalog.
fn matched(r: &SearchReport) -> Result<(), String> {
    let tag = format!("{} ({},{},{})", r.theorem, r.n, r.k, r.t);
    ensure(r.verdict == Verdict::Match, || {
        format!("{tag}: verdict {:?}, optimum {:?}", r.verdict, r.optimum)
    })?;
    if let Some(e) = &r.extremal {
        ensure(e.missing.is_empty() && e.extra.is_empty(), || {
            format!(
                "{tag}: catalog missing {:?}, extra classes {:?}",
                e.missing, e.extra
            )
        })?;
    }
    Ok(())
}

fn class_names(r: &SearchReport) -> Vec<String> {
    let mut v: Vec<String> = r
        .extremal
        .iter()
        .flat_map(|e| {
            e.classes
                .iter()
                .map(|c| c.catalog.clone().unwrap_or_else(|| "?".into()))
        })
        .collect();
    v.sort();
    v
}

/// The criterion 1-5 runs, reused for the determinism check.
struct Run {
    id: TheoremId,
    n: usize,
    k: usize,
    t: usize,
    mode: Mode,
    enumerate: bool,
}

fn criterion_runs() -> Vec<Run> {
    use TheoremId::*;
    let r = |id, n, k, t, mode, enumerate| Run {
        id,
        n,
        k,
        t,
        mode,
        enumerate,
    };
    vec![
        r(F16, 5, 2, 0, Mode::Full, true),
        r(F16, 6, 2, 0, Mode::Full, true),
        r(F16, 6, 2, 1, Mode::Full, true),
        r(F16, 7, 2, 1, Mode::Full, true),
        r(F16, 7, 3, 0, Mode::Full, true),
        r(F16, 9, 3, 1, Mode::ShiftedOnly, false),
        r(W23, 7, 3, 0, Mode::Full, false),
        r(W23, 8, 3, 0, Mode::Full, true),
        r(W23, 8, 3, 1, Mode::Full, false),
        r(Main51, 8, 4, 0, Mode::Full, false),
        r(Main51, 9, 4, 0, Mode::ShiftedOnly, false),
        r(Main51, 9, 4, 0, Mode::Full, true),
        r(HmStab, 5, 2, 0, Mode::Full, false),
        r(HmStab, 6, 2, 0, Mode::Full, false),
        r(HmStab, 7, 3, 0, Mode::Full, true),
        r(HkStab, 7, 3, 0, Mode::Full, true),
    ]
}

fn report_of(
    reports: &[(Run, SearchReport)],
    id: TheoremId,
    n: usize,
    k: usize,
    t: usize,
    mode: Mode,
) -> &SearchReport {
    &reports
        .iter()
        .find(|(r, _)| r.id == id && (r.n, r.k, r.t) == (n, k, t) && r.mode == mode)
        .expect("run listed")
        .1
}

fn c1(reports: &[(Run, SearchReport)]) -> Outcome {
    let mut notes = Vec::new();
    for (n, k, t) in [(5, 2, 0), (6, 2, 0), (6, 2, 1), (7, 2, 1), (7, 3, 0)] {
        let r = report_of(reports, TheoremId::F16, n, k, t, Mode::Full);
        matched(r)?;
        ensure(value(r) == bound(TheoremId::F16, n, k, t), || {
            format!("F16 ({n},{k},{t}) off bound")
        })?;
        let names = class_names(r);
        if k == 2 {
            ensure(names == ["singleton", "sunflower"], || {
                format!("F16 ({n},{k},{t}) classes {names:?}")
            })?;
        }
        notes.push(format!("({n},{k},{t})={}", value(r)));
    }
    let r = report_of(reports, TheoremId::F16, 9, 3, 1, Mode::ShiftedOnly);
    matched(r)?;
    ensure(value(r) == 75, || {
        format!("F16 (9,3,1) shifted {}", value(r))
    })?;
    notes.push("(9,3,1) shifted=75".into());
    Ok(notes.join(" "))
}

fn c2(reports: &[(Run, SearchReport)]) -> Outcome {
    let mut notes = Vec::new();
    for (n, k, t) in [(7, 3, 0), (8, 3, 0), (8, 3, 1)] {
        let r = report_of(reports, TheoremId::W23, n, k, t, Mode::Full);
        matched(r)?;
        notes.push(format!("({n},{k},{t})={}", value(r)));
    }
    let r = report_of(reports, TheoremId::W23, 8, 3, 0, Mode::Full);
    let names = class_names(r);
    ensure(names == ["sunflower", "thick star", "two sets"], || {
        format!("W23 (8,3,0) classes {names:?}")
    })?;
    notes.push(format!("classes {names:?}"));
    Ok(notes.join(" "))
}

fn c3(reports: &[(Run, SearchReport)]) -> Outcome {
    let base = report_of(reports, TheoremId::Main51, 8, 4, 0, Mode::Full);
    matched(base)?;
    ensure(value(base) == 70, || {
        format!("MAIN51 (8,4,0) = {}", value(base))
    })?;
    let sh = report_of(reports, TheoremId::Main51, 9, 4, 0, Mode::ShiftedOnly);
    matched(sh)?;
    ensure(value(sh) == 117, || {
        format!("MAIN51 (9,4,0) shifted = {}", value(sh))
    })?;
    let full = report_of(reports, TheoremId::Main51, 9, 4, 0, Mode::Full);
    matched(full)?;
    let names = class_names(full);
    ensure(names == ["sunflower", "triple"], || {
        format!("MAIN51 (9,4,0) classes {names:?}")
    })?;
    Ok(format!("(8,4,0)=70 (9,4,0)=117 classes {names:?}"))
}

fn c4(reports: &[(Run, SearchReport)]) -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(5, 2), (6, 2), (7, 3)] {
        let r = report_of(reports, TheoremId::HmStab, n, k, 0, Mode::Full);
        matched(r)?;
        notes.push(format!("({n},{k})={}", value(r)));
    }
    // the bound formula gives 3 at (6,2): a non-star intersecting graph is a triangle
    let oracle = common::non_star_max(6, 2);
    ensure(
        oracle == 3 && bound(TheoremId::HmStab, 6, 2, 0) == 3,
        || format!("(6,2) oracle {oracle}"),
    )?;
    let names = class_names(report_of(reports, TheoremId::HmStab, 7, 3, 0, Mode::Full));
    ensure(names == ["HM", "T3"], || {
        format!("HM_STAB (7,3) classes {names:?}")
    })?;
    notes.push(format!("classes {names:?}"));
    Ok(notes.join(" "))
}

fn c5(reports: &[(Run, SearchReport)]) -> Outcome {
    let r = report_of(reports, TheoremId::HkStab, 7, 3, 0, Mode::Full);
    matched(r)?;
    ensure(value(r) == 12, || format!("HK_STAB (7,3) = {}", value(r)))?;
    let names = class_names(r);
    ensure(names == ["J2"], || {
        format!("HK_STAB (7,3) classes {names:?}")
    })?;
    Ok("(7,3)=12 classes [\"J2\"]".into())
}

fn c6() -> Outcome {
    let mut rows = 0;
    for k in 4..=10 {
        for n in 2 * k + 1..=4 * k {
            let x = crossover_compare(n, k).map_err(|e| e.to_string())?;
            let window = n + 3 <= 3 * k;
            ensure((x.ordering != Ordering::Less) == window, || {
                format!("(n,k)=({n},{k}): {:?}", x.ordering)
            })?;
            ensure(
                (x.ordering == Ordering::Equal) == ((k, n) == (4, 9)),
                || format!("equality at ({n},{k})"),
            )?;
            rows += 1;
        }
    }
    let k2 = k2_family_default(9, 4).map_err(|e| e.to_string())?.len();
    let j3 = j_family_default(9, 4, 3).map_err(|e| e.to_string())?.len();
    ensure(k2 == 50 && j3 == 50, || {
        format!("|K2(9,4)| = {k2}, |J3(9,4)| = {j3}")
    })?;
    let x = crossover_compare(9, 4).unwrap();
    ensure(x.k2 == BigInt::from(50), || "closed form at (9,4)".into())?;
    Ok(format!("{rows} (k,n) rows; |K2(9,4)| = |J3(9,4)| = 50"))
}

/// The smallest default instances: `n <= 7` where any exist.
fn smallest(id: LemmaId) -> Vec<LemmaParams> {
    let all = default_instances(id);
    let small: Vec<LemmaParams> = all.iter().copied().filter(|p| p.n <= 7).collect();
    if small.is_empty() {
        let n = all.iter().map(|p| p.n).min().unwrap();
        all.into_iter().filter(|p| p.n == n).collect()
    } else {
        small
    }
}

fn c7() -> Outcome {
    let run = LemmaRun {
        samples: 10_000,
        seed: 0,
        ..LemmaRun::default()
    };
    let (mut exhaustive, mut sampled) = (0, 0);
    for id in LemmaId::ALL {
        for p in smallest(id) {
            let i = verify_instance(id, &p, &run).map_err(|e| format!("{id} {p:?}: {e}"))?;
            ensure(i.counterexamples == 0, || {
                format!("{id} {p:?}: {:?}", i.examples)
            })?;
            ensure(i.method != Method::Incomplete, || {
                format!("{id} {p:?}: budget exhausted")
            })?;
            if let Some(inv) = &i.inventory {
                ensure(inv.matches(), || format!("{id} {p:?}: inventory {inv:?}"))?;
            }
            match i.method {
                Method::Sampled => sampled += 1,
                _ => exhaustive += 1,
            }
        }
    }
    let fm = verify_instance(
        LemmaId::FM,
        &LemmaParams::new(7, 3, 0).with_l(3).with_r(1),
        &run,
    )
    .unwrap();
    let inv = fm.inventory.ok_or("FM (7,3,3,1) has no inventory")?;
    ensure(
        inv.classes.len() == 1 && inv.classes[0].catalog.as_deref() == Some("R-star"),
        || format!("FM (7,3,3,1) inventory {inv:?}"),
    )?;
    Ok(format!(
        "{exhaustive} exhaustive or pruned, {sampled} sampled, FM (7,3,3,1) inventory = stars only"
    ))
}

fn c8(reports: &[(Run, SearchReport)]) -> Outcome {
    let mut compared = Vec::new();
    let mut skipped = Vec::new();
    // (id, n, k, t, required pairwise intersection, min |F|)
    for (id, n, k, t, need, min_f) in [
        (TheoremId::F16, 5, 2, 0, 1, 1),
        (TheoremId::F16, 6, 2, 0, 1, 1),
        (TheoremId::F16, 6, 2, 1, 2, 1),
        (TheoremId::F16, 7, 2, 1, 2, 1),
        (TheoremId::F16, 7, 3, 0, 1, 1),
        (TheoremId::W23, 7, 3, 0, 1, 2),
        (TheoremId::W23, 8, 3, 0, 1, 2),
        (TheoremId::W23, 8, 3, 1, 2, 2),
    ] {
        match common::cross_max(n, k, t, need, min_f, false, 30_000_000) {
            Some(v) => {
                let got = value(report_of(reports, id, n, k, t, Mode::Full));
                ensure(got == v, || {
                    format!("{id} ({n},{k},{t}): search {got}, exhaustive {v}")
                })?;
                compared.push(format!("{id}({n},{k},{t})"));
            }
            None => skipped.push(format!("{id}({n},{k},{t})")),
        }
    }
    let mut modes = 0;
    for (id, n, k, t) in [
        (TheoremId::F16, 5, 2, 0),
        (TheoremId::F16, 6, 2, 0),
        (TheoremId::F16, 6, 2, 1),
        (TheoremId::F16, 7, 2, 1),
        (TheoremId::F16, 7, 3, 0),
        (TheoremId::W23, 7, 3, 0),
        (TheoremId::W23, 8, 3, 0),
        (TheoremId::W23, 8, 3, 1),
        (TheoremId::Main51, 8, 4, 0),
        (TheoremId::Mainh, 7, 3, 0),
        (TheoremId::W231, 7, 3, 0),
        (TheoremId::W232, 8, 4, 0),
    ] {
        let full = value(&search(id, n, k, t, Mode::Full, false, 1));
        let sh = value(&search(id, n, k, t, Mode::ShiftedOnly, false, 1));
        ensure(full == sh, || {
            format!("{id} ({n},{k},{t}): FULL {full}, SHIFTED_ONLY {sh}")
        })?;
        modes += 1;
    }
    Ok(format!(
        "exhaustive agrees on {}; exhaustive over budget on {}; {modes} mode pairs agree",
        compared.join(","),
        if skipped.is_empty() {
            "none".into()
        } else {
            skipped.join(",")
        }
    ))
}

fn c9() -> Outcome {
    match self_check() {
        Ok(lines) => Ok(format!(
            "{} catalog entries attain their bounds",
            lines.len()
        )),
        Err(bad) => Err(bad.join("; ")),
    }
}

fn c10(reports: &[(Run, SearchReport)]) -> Outcome {
    for (r, first) in reports {
        let base = serde_json::to_string(first).unwrap();
        for threads in [1, 4] {
            for _ in 0..2 {
                let again = serde_json::to_string(&search(
                    r.id,
                    r.n,
                    r.k,
                    r.t,
                    r.mode,
                    r.enumerate,
                    threads,
                ))
                .unwrap();
                let norm = again.replace(&format!("\"threads\":{threads}"), "\"threads\":1");
                ensure(norm == base, || {
                    format!(
                        "{} ({},{},{}) threads={threads} differs",
                        r.id, r.n, r.k, r.t
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{} runs identical at threads 1 and 4",
        reports.len()
    ))
}

fn main() {
    let start = Instant::now();
    let reports: Vec<(Run, SearchReport)> = criterion_runs()
        .into_iter()
        .map(|r| {
            let rep = search(r.id, r.n, r.k, r.t, r.mode, r.enumerate, 1);
            (r, rep)
        })
        .collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("F16 verification", Box::new(|| c1(&reports))),
        ("W23 verification", Box::new(|| c2(&reports))),
        ("MAIN51 verification", Box::new(|| c3(&reports))),
        ("HM stability", Box::new(|| c4(&reports))),
        ("HK stability", Box::new(|| c5(&reports))),
        ("HP crossover", Box::new(c6)),
        ("lemma suites", Box::new(c7)),
        ("oracle and mode agreement", Box::new(|| c8(&reports))),
        ("registry self-check", Box::new(c9)),
        ("determinism", Box::new(|| c10(&reports))),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let ms = t0.elapsed().as_millis();
        match out {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} [{ms} ms]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
