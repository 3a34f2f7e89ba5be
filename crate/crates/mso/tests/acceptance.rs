//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines stay in
//! order and every criterion runs even after a failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mso_core::enumeration::{free_trees, Family};
use mso_core::families::{
    baton_counts, bridge_counts, build, dds_counts, dds_counts_general, path_counts, path_local_counts, FamilySpec,
};
use mso_core::lab::{
    bound_suite, caterpillar_leaf_sequence, check_oracle_tree, check_search_caps, optimal,
    path_minimality, verify_appendix_a, verify_appendix_b, verify_associate, verify_baton_positivity,
    verify_corollary15, verify_oracle, verify_theorem13, verify_theorem14, verify_theorem18, AppendixGrid,
    SearchReport, VerificationReport,
};
use mso_core::poly::{local_totals, subtree_totals, DEFAULT_BRUTE_FORCE_CAP};
use mso_core::structure::is_path;
use mso_core::{ClosedFormCounts, Rational, Tree};
use mso::sample::random_trees;
use mso::suites::random_gluing;
use num_bigint::BigUint;

type Outcome = Result<String, String>;

fn summary(r: &VerificationReport) -> Outcome {
    let line = format!("{} passed, {} skipped", r.passed, r.skipped);
    if r.is_pass() {
        Ok(line)
    } else {
        Err(format!(
            "{} [{}]: {} failed; first: {}",
            r.suite,
            r.grid,
            r.failed,
            r.counterexample.as_deref().unwrap_or("?")
        ))
    }
}

fn all(parts: Vec<VerificationReport>) -> VerificationReport {
    let mut rep = VerificationReport::new("combined", "");
    for p in parts {
        if rep.counterexample.is_none() && !p.is_pass() {
            rep.suite = p.suite.clone();
            rep.grid = p.grid.clone();
        }
        rep.merge(p);
    }
    rep
}

fn c1() -> Outcome {
    let count: usize = (1..=10).map(|n| free_trees(n).unwrap().count()).sum();
    if count != 201 {
        return Err(format!("{count} free trees of order ≤ 10, expected 201"));
    }
    let mut rep = verify_oracle(10, DEFAULT_BRUTE_FORCE_CAP);
    for t in random_trees(1, 500, 1, 16) {
        rep.merge(check_oracle_tree(&t, DEFAULT_BRUTE_FORCE_CAP));
    }
    if rep.skipped > 0 {
        return Err(format!("{} trees exceeded the brute-force cap", rep.skipped));
    }
    summary(&rep).map(|s| format!("201 free trees + 500 random; {s}"))
}

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

fn c2() -> Outcome {
    let mut checks = 0u64;
    for n in 1..=10_000u128 {
        let c = path_counts(n as usize).map_err(|e| e.to_string())?;
        let (count, total) = (n * (n + 1) / 2, (n + 2) * (n + 1) * n / 6);
        if c.count != big(count) || c.total != big(total) || c.mean() != Rational::new((n as i64 + 2).into(), 3.into()) {
            return Err(format!("P_{n}: closed form {}/{}", c.count, c.total));
        }
        for s in 1..=n {
            let l = path_local_counts(n as usize, s as usize).map_err(|e| e.to_string())?;
            let k = s * (n - s + 1);
            if l.count != big(k) || BigUint::from(2u8) * &l.total != big(k * (n + 1)) {
                return Err(format!("P_{n} at s = {s}: local closed form {}/{}", l.count, l.total));
            }
        }
        checks += 1 + n as u64;
    }
    for n in 1..=200 {
        let t = Tree::path(n);
        let dp = subtree_totals(&t);
        let c = path_counts(n).unwrap();
        if (dp.count, dp.total) != (c.count, c.total) {
            return Err(format!("P_{n}: DP disagrees with closed form"));
        }
        for s in 1..=n {
            let dp = local_totals(&t, s - 1).unwrap();
            let c = path_local_counts(n, s).unwrap();
            if (dp.count, dp.total) != (c.count, c.total) {
                return Err(format!("P_{n} at s = {s}: DP disagrees with local closed form"));
            }
        }
        checks += 1 + n as u64;
    }
    Ok(format!("{checks} exact equalities"))
}

fn c3() -> Outcome {
    let mut checked = 0;
    let mut same = |spec: FamilySpec, c: mso_core::Result<ClosedFormCounts>| -> Result<(), String> {
        let c = c.map_err(|e| format!("{spec}: {e}"))?;
        let dp = subtree_totals(&build(&spec).map_err(|e| e.to_string())?);
        checked += 1;
        if (&c.count, &c.total) == (&dp.count, &dp.total) {
            Ok(())
        } else {
            Err(format!("{spec}: closed form {}/{}, DP {}/{}", c.count, c.total, dp.count, dp.total))
        }
    };
    for n in 4..=16 {
        for r in 1..n {
            for s in 1..n {
                if r + s + 2 > n {
                    continue;
                }
                same(FamilySpec::Dds { n, r, s }, dds_counts_general(n, r, s))?;
                if (r + s) % 2 == 0 {
                    same(FamilySpec::Dds { n, r, s }, dds_counts(n, (r + s) / 2, r))?;
                }
            }
        }
        for s in 1..n {
            if 2 * s + 2 <= n {
                same(FamilySpec::Baton { s, t: n - 2 * s - 2 }, baton_counts(n, s))?;
            }
            if 4 * s + 2 <= n {
                same(FamilySpec::Bridge { s, t: n - 4 * s - 2 }, bridge_counts(s, n - 4 * s - 2))?;
            }
        }
    }
    Ok(format!("{checked} parameter tuples"))
}

fn c4(searches: &BTreeMap<usize, SearchReport>, times: &BTreeMap<usize, Duration>) -> Outcome {
    let r16 = &searches[&16];
    if r16.examined != 19_320 {
        return Err(format!("examined {} trees at n = 16, expected 19320", r16.examined));
    }
    if r16.winners.len() != 1 {
        return Err(format!("{} winners at n = 16", r16.winners.len()));
    }
    let seq = caterpillar_leaf_sequence(&r16.winners[0].tree());
    if seq.as_deref() != Some(&[5, 0, 1, 0, 5][..]) {
        return Err(format!("n = 16 winner has spine leaf sequence {seq:?}"));
    }
    let mut shapes = vec![format!("16: {:?}", seq.unwrap())];
    for n in [17, 18] {
        for w in &searches[&n].winners {
            let seq = caterpillar_leaf_sequence(&w.tree()).ok_or_else(|| format!("n = {n} winner is not a caterpillar"))?;
            let (first, last) = (seq[0], seq[seq.len() - 1]);
            let interior = &seq[1..seq.len() - 1];
            if !w.limbs_all_order_one() || interior.iter().any(|&k| k > 1) || first.min(last) < 4 {
                return Err(format!("n = {n} winner {seq:?} departs from the n = 16 shape"));
            }
            shapes.push(format!("{n}: {seq:?}"));
        }
    }
    let (t16, t18) = (times[&16], times[&18]);
    if t16 > Duration::from_secs(5) || t18 > Duration::from_secs(60) {
        return Err(format!("too slow: n = 16 took {t16:.2?}, n = 18 took {t18:.2?}"));
    }
    Ok(format!("{} (n = 16 in {t16:.2?}, n = 18 in {t18:.2?})", shapes.join(", ")))
}

fn c5() -> Outcome {
    let mut rep = VerificationReport::new("theorem11", "n ≤ 12");
    for n in 1..=12 {
        for t in free_trees(n).unwrap() {
            rep.check(path_minimality(&t), || format!("{:?}", t.edges()));
        }
    }
    summary(&rep)
}

fn c6() -> Outcome {
    summary(&random_gluing(6, 200, 8, 12))
}

fn c7() -> Outcome {
    let mut rep = VerificationReport::new("associate", "n ≤ 12");
    for n in 1..=12 {
        for t in free_trees(n).unwrap().filter(|t| !is_path(t)) {
            rep.merge(verify_associate(&t).map_err(|e| e.to_string())?);
        }
    }
    summary(&rep)
}

fn c11() -> Outcome {
    let r = verify_theorem18(10_000);
    let n0 = match r.n0 {
        Some(n0) => format!("N₀ = {n0} for k = 2"),
        None => "no N₀ for k = 2 up to 10⁴".to_string(),
    };
    summary(&r.report).map(|s| format!("{s}; {n0}; r_2 = {}", r.r2))
}

fn c12() -> Outcome {
    let grid = AppendixGrid::default();
    let parts = vec![verify_appendix_a(&grid), verify_appendix_b(&grid), verify_baton_positivity(&grid)];
    summary(&all(parts))
}

fn c13() -> Outcome {
    let mut rep = VerificationReport::new("bounds", "free trees n ≤ 12 + 1000 random n ≤ 40");
    for n in 1..=12 {
        for t in free_trees(n).unwrap() {
            rep.merge(bound_suite(&t));
        }
    }
    for t in random_trees(13, 1000, 1, 40) {
        rep.merge(bound_suite(&t));
    }
    summary(&rep)
}

fn c14(searches: &BTreeMap<usize, SearchReport>, cats: &BTreeMap<usize, SearchReport>) -> Outcome {
    let mut rep = VerificationReport::new("caps", "4 ≤ n ≤ 18");
    for n in 4..=18 {
        rep.merge(check_search_caps(&searches[&n], &cats[&n]));
    }
    summary(&rep)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failures = 0;
    let mut run = |id: usize, limit: Option<u64>, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let out = f();
        let took = t.elapsed();
        let late = limit.is_some_and(|s| took > Duration::from_secs(s));
        let budget = limit.map_or(String::new(), |s| format!(" / {s} s"));
        let (status, detail) = match (&out, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {id:>2}: {status} [{took:.2?}{budget}] {detail}");
    };

    let mut searches = BTreeMap::new();
    let mut cats = BTreeMap::new();
    let mut times = BTreeMap::new();

    run(1, Some(10), &mut c1);
    run(2, None, &mut c2);
    run(3, Some(30), &mut c3);
    run(4, None, &mut || {
        for n in 4..=18 {
            let t = Instant::now();
            let all = optimal(Family::AllTrees, n).map_err(|e| e.to_string())?.expect("nonempty");
            times.insert(n, t.elapsed());
            searches.insert(n, all);
        }
        c4(&searches, &times)
    });
    run(5, None, &mut c5);
    run(6, None, &mut c6);
    run(7, Some(60), &mut c7);
    run(8, Some(60), &mut || summary(&verify_theorem13(200)));
    run(9, Some(300), &mut || summary(&verify_theorem14(120, 100_000)));
    run(10, Some(300), &mut || summary(&verify_corollary15(1_000_000)));
    run(11, Some(300), &mut c11);
    run(12, Some(600), &mut c12);
    run(13, None, &mut c13);
    run(14, None, &mut || {
        for n in 4..=18 {
            cats.insert(n, optimal(Family::Caterpillars, n).map_err(|e| e.to_string())?.expect("nonempty"));
        }
        c14(&searches, &cats)
    });

    println!("acceptance: {} of 14 criteria failed ({:.2?})", failures, start.elapsed());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
