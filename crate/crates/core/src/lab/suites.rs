use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::search::{optimal, optimal_baton_s, optimal_bridge_s, SearchReport};
use super::VerificationReport;
use crate::enumeration::{free_trees, Family};
use crate::exact::{at_least_log2, ceil_two_log2, decide_increasing_in_log2, ratio, Rational};
use crate::families::{
    appendix_a_factored, baton_counts, build, check_inequalities, dds_counts_general,
    dds_difference, star_counts, DifferenceFamily, FamilySpec, InequalityOutcome, APPENDIX_B, BRIDGE_BOUNDS,
};
use crate::poly::{
    brute_force_polynomial, glue_polynomials, local_subtree_polynomial, mean, subtree_polynomial, subtree_totals,
};
use crate::structure::stem;
use crate::tree::Tree;

fn r(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// DP against brute force on one tree.
pub fn check_oracle_tree(t: &Tree, cap: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("oracle", format!("order {}", t.order()));
    match brute_force_polynomial(t, cap) {
        Ok(brute) => {
            let dp = subtree_polynomial(t);
            rep.check(dp == brute, || {
                format!("DP {:?} != brute force {:?} on {:?}", dp.coeffs(), brute.coeffs(), t.edges())
            });
        }
        Err(_) => rep.skip(),
    }
    rep
}

/// DP against brute force on every free tree of order at most `n_max`.
pub fn verify_oracle(n_max: usize, cap: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("oracle", format!("free trees n ≤ {n_max}"));
    for n in 1..=n_max {
        for t in free_trees(n).expect("n ≥ 1") {
            rep.merge(check_oracle_tree(&t, cap));
        }
    }
    rep
}

/// Glues `q` at `v` onto every vertex of `P_n`, checking the composition
/// formula against direct DP and strict growth of the mean towards the
/// middle of the path.
pub fn check_gluing_instance(q: &Tree, v: usize, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("gluing", format!("|Q| = {}, v = {v}, n = {n}", q.order()));
    let path = Tree::path(n);
    let p = subtree_polynomial(&path);
    let qp = subtree_polynomial(q);
    let ql = local_subtree_polynomial(q, v).expect("v in range");
    let mut means = Vec::with_capacity(n);
    for s in 1..=n {
        let spec = FamilySpec::Glued {
            q: q.clone(),
            v,
            path_len: n,
            position: s,
        };
        let t = build(&spec).expect("glued tree");
        let direct = subtree_polynomial(&t);
        let pl = local_subtree_polynomial(&path, s - 1).expect("s in range");
        let composed = glue_polynomials(&p, &pl, &qp, &ql);
        rep.check(composed.as_ref() == Ok(&direct), || {
            format!("composition differs from DP for Q = {:?}, v = {v}, n = {n}, s = {s}", q.edges())
        });
        means.push(direct.mean());
    }
    for s in 1..n.div_ceil(2) {
        rep.check(means[s - 1] < means[s], || {
            format!(
                "M(T_{s}) = {} is not below M(T_{}) = {} for Q = {:?}, v = {v}, n = {n}",
                means[s - 1],
                s + 1,
                means[s],
                q.edges()
            )
        });
    }
    rep
}

/// Every free tree `Q` with `2 ≤ |Q| ≤ q_max`, every vertex of it, and every
/// path order `3 ≤ n ≤ n_max`.
pub fn verify_gluing(q_max: usize, n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("gluing", format!("|Q| ≤ {q_max}, 3 ≤ n ≤ {n_max}"));
    for k in 2..=q_max {
        for q in free_trees(k).expect("k ≥ 1") {
            for v in 0..k {
                for n in 3..=n_max {
                    rep.merge(check_gluing_instance(&q, v, n));
                }
            }
        }
    }
    rep
}

/// Among `P_{n−1}` plus one pendant vertex at an internal position, the
/// central attachment is the strict optimum.
pub fn verify_corollary6(n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("corollary6", format!("4 ≤ n ≤ {n_max}"));
    for n in 4..=n_max {
        let len = n - 1;
        let means: Vec<(usize, Rational)> = (2..=n - 2)
            .map(|s| {
                let spec = FamilySpec::Glued {
                    q: Tree::path(2),
                    v: 0,
                    path_len: len,
                    position: s,
                };
                (s, mean(&build(&spec).expect("pendant on a path")))
            })
            .collect();
        let best = means.iter().map(|(_, m)| m).max().expect("n ≥ 4").clone();
        let argmax: Vec<usize> = means.iter().filter(|(_, m)| *m == best).map(|&(s, _)| s).collect();
        let central: Vec<usize> = if len % 2 == 1 {
            alloc::vec![len.div_ceil(2)]
        } else {
            alloc::vec![len / 2, len / 2 + 1]
        };
        rep.check(argmax == central, || {
            format!("n = {n}: argmax positions {argmax:?}, central {central:?}")
        });
    }
    rep
}

/// `D_n(m, m)` beats every `D_n(s, 2m − s)` whenever `2^m ≥ n`. Tuples below
/// the threshold and odd leaf counts are reported, not asserted.
pub fn verify_theorem13(n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("theorem13", format!("2m + 2 ≤ n ≤ {n_max}, 2^m ≥ n"));
    let mut below: Option<(usize, usize, usize)> = None;
    let mut below_checked = 0u64;
    for n in 4..=n_max {
        for m in 1..=(n - 2) / 2 {
            let gated = at_least_log2(m as u64, n as u64);
            for s in 1..m {
                let h = dds_difference(n, m, s).expect("legal tuple");
                if gated {
                    rep.check(h.is_positive(), || format!("h_{{{n},{m}}}({s}) = {h} is not positive"));
                } else {
                    below_checked += 1;
                    if !h.is_positive() && below.is_none() {
                        below = Some((n, m, s));
                    }
                }
            }
        }
    }
    match below {
        Some((n, m, s)) => rep.note(format!(
            "below threshold: first tuple with h ≤ 0 is n = {n}, m = {m}, s = {s} ({below_checked} tuples scanned)"
        )),
        None => rep.note(format!("below threshold: no tuple with h ≤ 0 among {below_checked}")),
    }

    // odd leaf counts 2m + 1, comparing all splits r + s = 2m + 1
    let mut nearly = 0u64;
    let mut total = 0u64;
    let mut exception = None;
    for n in 5..=n_max {
        for m in 1..=(n - 3) / 2 {
            if !at_least_log2(m as u64, n as u64) {
                continue;
            }
            let leaves = 2 * m + 1;
            let means: Vec<(usize, Rational)> = (1..=m)
                .map(|a| (a, dds_counts_general(n, a, leaves - a).expect("legal").mean()))
                .collect();
            let best = means.iter().map(|(_, x)| x).max().unwrap().clone();
            let argmax: Vec<usize> = means.iter().filter(|(_, x)| *x == best).map(|&(a, _)| a).collect();
            total += 1;
            if argmax == [m] {
                nearly += 1;
            } else if exception.is_none() {
                exception = Some((n, m, argmax));
            }
        }
    }
    rep.note(format!(
        "odd leaves: nearly balanced split is the unique optimum in {nearly} of {total} cases"
    ));
    if let Some((n, m, argmax)) = exception {
        rep.note(format!("odd leaves: first exception n = {n}, leaves = {}, argmax r = {argmax:?}", 2 * m + 1));
    }
    rep
}

/// Optimal baton parameters satisfy `n^2 < 2^{s+2}` and `2^{s−1} < n^2`.
pub fn verify_theorem14(lo: usize, hi: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("theorem14", format!("{lo} ≤ n ≤ {hi}"));
    for n in lo.max(4)..=hi {
        let arg = optimal_baton_s(n).expect("n ≥ 4");
        let sq = (n as u128) * (n as u128);
        for &s in &arg.values {
            let upper = s + 2 >= 128 || sq < 1u128 << (s + 2);
            let lower = (1u128 << (s - 1)) < sq;
            rep.check(upper && lower, || format!("n = {n}: s_n = {s} lies outside the window"));
        }
    }
    rep
}

/// `M(D_n(s, s)) > n − s − 1` at `s = ⌈2 log2 n⌉` when the baton exists,
/// and `M(K_{1,n−1}) > n/2` otherwise.
pub fn verify_corollary15(n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("corollary15", format!("2 ≤ n ≤ {n_max}"));
    for n in 2..=n_max {
        let s = ceil_two_log2(n as u64) as usize;
        if n >= 2 * s + 2 {
            let c = baton_counts(n, s).expect("legal baton");
            let rhs = &c.count * (n - s - 1);
            rep.check(c.total > rhs, || format!("n = {n}, s = {s}: M = {} ≤ n − s − 1", c.mean()));
        } else {
            let c = star_counts(n).expect("n ≥ 1");
            rep.check(&c.total * 2u32 > &c.count * n, || format!("n = {n}: star mean {} ≤ n/2", c.mean()));
        }
    }
    rep
}

/// Structural checks on the winners of an all-trees search and a
/// caterpillar search of the same order.
pub fn check_search_caps(all: &SearchReport, cat: &SearchReport) -> VerificationReport {
    let n = all.n;
    let mut rep = VerificationReport::new("caps", format!("n = {n}"));
    if n < 4 {
        rep.skip();
        return rep;
    }
    let c = ceil_two_log2(n as u64) as usize;
    for w in &all.winners {
        let code = &w.code;
        rep.check(w.is_caterpillar, || format!("n = {n}: winner {code} is not a caterpillar"));
        rep.check(w.limbs_all_order_one(), || format!("n = {n}: winner {code} has a limb of order > 1"));
        rep.check(w.leaves < 2 * c + 2, || format!("n = {n}: winner has {} leaves", w.leaves));
        rep.check(7 * w.twigs < 5 * (c + 1), || format!("n = {n}: winner has {} twigs", w.twigs));

        // leaf floor for a stem of density k
        let t = w.tree();
        let s = stem(&t).expect("winners have a stem");
        let st = subtree_totals(&s.tree);
        let k = st.mean() / r(s.tree.order() as u64 + 2);
        let k = k.max(ratio(1, 3));
        let one_minus_k = Rational::one() - k;
        let scale = Rational::from_integer(BigInt::one() << w.leaves);
        let floor = decide_increasing_in_log2(n as u64, 256, |l| {
            &scale * (ratio(2, 1) * l + ratio(2, 1)) - &one_minus_k * r(n as u64)
        });
        rep.check(floor == Some(true), || format!("n = {n}: winner {code} is at or below the density leaf floor"));
    }
    for w in &cat.winners {
        let code = &w.code;
        rep.check(w.leaves < 2 * c + 2, || format!("n = {n}: caterpillar winner has {} leaves", w.leaves));
        let scale = Rational::from_integer(BigInt::one() << w.leaves);
        let floor = decide_increasing_in_log2(n as u64, 256, |l| {
            &scale * ratio(3, 1) * (l + Rational::one()) - r(n as u64)
        });
        rep.check(floor == Some(true), || {
            format!("n = {n}: caterpillar winner {code} is at or below the caterpillar leaf floor")
        });
    }
    rep.check(cat.mean <= all.mean, || format!("n = {n}: caterpillar optimum exceeds the global optimum"));
    if all.winners.iter().all(|w| w.is_caterpillar) {
        rep.check(cat.mean == all.mean, || format!("n = {n}: optima of the two searches differ"));
    }
    rep
}

/// Runs both exhaustive searches for every `4 ≤ n ≤ n_max`.
pub fn verify_leaf_twig_caps(n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("caps", format!("4 ≤ n ≤ {n_max}"));
    for n in 4..=n_max {
        let all = optimal(Family::AllTrees, n).expect("n ≥ 1").expect("nonempty");
        let cat = optimal(Family::Caterpillars, n).expect("n ≥ 1").expect("nonempty");
        rep.merge(check_search_caps(&all, &cat));
    }
    rep
}

/// `r_k = max(12, ((18 − 4k^3/3) / (2(1 − 1/k^3) k^{3/2}))^2)`, exact for
/// rational `k > 1`.
pub fn theorem18_r(k: &Rational) -> Rational {
    assert!(*k > Rational::one(), "k must exceed 1");
    let k3 = k * k * k;
    let top = ratio(18, 1) - ratio(4, 3) * &k3;
    let gap = Rational::one() - k3.recip();
    let value = &top * &top / (ratio(4, 1) * &gap * &gap * &k3);
    value.max(ratio(12, 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem18Report {
    pub report: VerificationReport,
    /// Smallest `N` such that every `N ≤ n ≤ n_max` has `8 s_n^3 > n^2`.
    pub n0: Option<usize>,
    /// `r_2`.
    pub r2: Rational,
}

/// Bridge argmax bounds: `s_n^3 < n^2` asserted for all `4 ≤ n ≤ n_max`;
/// the lower bound with `k = 2` reported through its threshold.
pub fn verify_theorem18(n_max: usize) -> Theorem18Report {
    let mut rep = VerificationReport::new("theorem18", format!("4 ≤ n ≤ {n_max}"));
    let mut n0 = None;
    for n in 4..=n_max {
        let arg = optimal_bridge_s(n).expect("n ≥ 4");
        let sq = (n as u128) * (n as u128);
        let mut lower = true;
        for &s in &arg.values {
            let s3 = (s as u128).pow(3);
            rep.check(s3 < sq, || format!("n = {n}: s_n = {s} has s^3 ≥ n^2"));
            lower &= 8 * s3 > sq;
        }
        match (lower, n0) {
            (true, None) => n0 = Some(n),
            (false, _) => n0 = None,
            _ => {}
        }
    }
    let r2 = theorem18_r(&ratio(2, 1));
    match n0 {
        Some(n) => rep.note(format!("lower bound with k = 2 holds for all {n} ≤ n ≤ {n_max}")),
        None => rep.note(format!("lower bound with k = 2 fails at n = {n_max}")),
    }
    rep.note(format!("r_2 = {r2}"));
    Theorem18Report { report: rep, n0, r2 }
}

/// Optimal baton means exceed optimal bridge means of the same order.
pub fn verify_baton_bridge_gap(order_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("gap", format!("6 ≤ order ≤ {order_max}"));
    for order in 6..=order_max {
        let baton = optimal_baton_s(order).expect("order ≥ 4");
        let bridge = optimal_bridge_s(order - 2).expect("n ≥ 4");
        // B(1, t) is the baton D(2, 2)
        let same_tree = bridge.values.contains(&1);
        let ok = if same_tree { baton.mean >= bridge.mean } else { baton.mean > bridge.mean };
        rep.check(ok, || format!("order {order}: baton {} vs bridge {}", baton.mean, bridge.mean));
        if same_tree {
            rep.note(format!("order {order}: optimal bridge B(1, {}) is a baton", order - 6));
        }
    }
    rep
}

/// Parameter ranges for the two appendix suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixGrid {
    pub m_max: usize,
    pub n_max: usize,
    pub s_max: u64,
    pub coeff_n_max: usize,
    pub coeff_s_max: usize,
    pub positive_n_min: u64,
    pub positive_n_max: u64,
    pub positive_s_max: u64,
}

impl Default for AppendixGrid {
    fn default() -> Self {
        AppendixGrid {
            m_max: 15,
            n_max: 300,
            s_max: 500,
            coeff_n_max: 500,
            coeff_s_max: 40,
            positive_n_min: 20,
            positive_n_max: 10_000,
            positive_s_max: 6,
        }
    }
}

/// `h_{n,m}(s) > 0` and its factorization, for `2^m ≥ n`.
pub fn verify_appendix_a(grid: &AppendixGrid) -> VerificationReport {
    let mut rep = VerificationReport::new(
        "appendixA",
        format!("m ≤ {}, n ≤ {}, 2^m ≥ n", grid.m_max, grid.n_max),
    );
    for m in 1..=grid.m_max {
        for n in 2 * m + 2..=grid.n_max {
            if !at_least_log2(m as u64, n as u64) {
                continue;
            }
            for s in 1..m {
                let h = dds_difference(n, m, s).expect("legal tuple");
                rep.check(h.is_positive(), || format!("h_{{{n},{m}}}({s}) = {h}"));
                let f = appendix_a_factored(n, m, s).expect("legal tuple");
                rep.check(f == Rational::from_integer(h.clone()), || {
                    format!("factorization at n = {n}, m = {m}, s = {s}: {h} vs {f}")
                });
            }
        }
    }
    rep
}

fn record(rep: &mut VerificationReport, outcomes: Vec<InequalityOutcome>) {
    for o in outcomes {
        if o.checked == 0 {
            rep.skip();
            continue;
        }
        rep.passed += o.checked - 1;
        rep.check(o.first_violation.is_none(), || format!("{} fails at s = {:?}", o.label, o.first_violation));
        if !o.holds_below.is_empty() {
            rep.note(format!("{} also holds below s = {} at {:?}", o.label, o.from_s, o.holds_below));
        }
    }
}

/// Coefficient inequalities, coefficient form against the closed-form
/// difference, and positivity of `f_n(s)` for small `s`.
pub fn verify_appendix_b(grid: &AppendixGrid) -> VerificationReport {
    let mut rep = VerificationReport::new("appendixB", format!("s ≤ {}", grid.s_max));
    record(&mut rep, check_inequalities(&APPENDIX_B, grid.s_max));
    record(&mut rep, check_inequalities(&BRIDGE_BOUNDS, grid.s_max));

    for family in [DifferenceFamily::BatonF, DifferenceFamily::BridgeG, DifferenceFamily::BridgeH] {
        for s in 1..=grid.coeff_s_max {
            let coeffs = family.coefficients(s as u64);
            for n in 1..=grid.coeff_n_max {
                let Ok(exact) = family.definitional(n, s) else {
                    continue;
                };
                let form = family.evaluate_with(&coeffs, n as u64);
                rep.check(form == Rational::from_integer(exact.clone()), || {
                    format!("{family:?} at n = {n}, s = {s}: coefficient form {form}, direct {exact}")
                });
            }
        }
    }
    rep
}

/// Positivity of the baton difference f_n(s) for s ≤ `positive_s_max` over
/// `positive_n_min ≤ n ≤ positive_n_max`.
pub fn verify_baton_positivity(grid: &AppendixGrid) -> VerificationReport {
    let mut rep = VerificationReport::new(
        "batonPositivity",
        format!(
            "s ≤ {}, {} ≤ n ≤ {}",
            grid.positive_s_max, grid.positive_n_min, grid.positive_n_max
        ),
    );
    for s in 1..=grid.positive_s_max {
        let coeffs = DifferenceFamily::BatonF.coefficients(s);
        for n in grid.positive_n_min..=grid.positive_n_max {
            let f = DifferenceFamily::BatonF.evaluate_with(&coeffs, n);
            rep.check(f.is_positive(), || format!("f_{n}({s}) = {f} is not positive"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(verify_oracle(7, 1 << 20).is_pass());
        assert!(verify_gluing(4, 7).is_pass());
        assert!(verify_corollary6(12).is_pass());
        assert!(verify_theorem13(40).is_pass());
        assert!(verify_theorem14(120, 400).is_pass());
        assert!(verify_corollary15(2000).is_pass());
        assert!(verify_leaf_twig_caps(9).is_pass());
        assert!(verify_baton_bridge_gap(200).is_pass());
    }

    #[test]
    fn r2_exact() {
        // (22/3)^2 / (49/2) = 968/441 < 12
        assert_eq!(theorem18_r(&ratio(2, 1)), ratio(12, 1));
        assert!(theorem18_r(&ratio(11, 10)) > ratio(12, 1));
    }

    #[test]
    fn theorem18_small() {
        let r = verify_theorem18(300);
        assert!(r.report.is_pass(), "{:?}", r.report);
    }

    #[test]
    fn appendix_small_grid() {
        let grid = AppendixGrid {
            m_max: 9,
            n_max: 120,
            s_max: 40,
            coeff_n_max: 80,
            coeff_s_max: 6,
            positive_n_min: 20,
            positive_n_max: 200,
            positive_s_max: 6,
        };
        let a = verify_appendix_a(&grid);
        assert!(a.is_pass(), "{a:?}");
        let b = verify_appendix_b(&grid);
        assert!(b.is_pass(), "{b:?}");
        let p = verify_baton_positivity(&grid);
        assert_eq!(p.failed, 2, "{p:?}");
        assert_eq!(p.counterexample.as_deref(), Some("f_20(6) = -14178942 is not positive"));
        let from_22 = AppendixGrid { positive_n_min: 22, ..grid };
        assert!(verify_baton_positivity(&from_22).is_pass());
    }

    #[test]
    fn k13_caps() {
        let all = optimal(Family::AllTrees, 4).unwrap().unwrap();
        let cat = optimal(Family::Caterpillars, 4).unwrap().unwrap();
        assert!(check_search_caps(&all, &cat).is_pass());
    }
}
