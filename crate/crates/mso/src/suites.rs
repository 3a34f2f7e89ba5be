//! Named verification suites with their default grids, including the parts
//! that need random sampling or threads.

use std::thread;

use mso_core::enumeration::{free_trees, Family, Shard};
use mso_core::lab::{
    bound_suite, check_gluing_instance, check_oracle_tree, check_search_caps, path_minimality,
    verify_appendix_a, verify_appendix_b, verify_associate, verify_aster_corollary,
    verify_baton_bridge_gap, verify_baton_positivity, verify_corollary15, verify_corollary6, verify_gluing, verify_oracle,
    verify_theorem13, verify_theorem14, verify_theorem18, verify_theorem8, AppendixGrid,
    VerificationReport,
};
use mso_core::structure::is_path;
use rand::Rng;

use crate::error::{MsoError, Result};
use crate::sample::{random_tree, random_trees, rng};
use crate::search::optimal_parallel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Gluing composition and strict growth towards the middle of the path.
    Gluing,
    /// Every non-path tree has a standard 1-associate of smaller mean.
    Associate,
    /// General bounds on free and random trees.
    Bounds,
    /// Locally balanced trees are optimal for their limb profile.
    Theorem8,
    /// Paths minimize the mean.
    Theorem11,
    /// Balanced double stars beat unbalanced ones once 2^m ≥ n.
    Theorem13,
    /// Window for the optimal baton parameter.
    Theorem14,
    /// Bridge parameter bounds.
    Theorem18,
    /// Central pendant on a path is optimal.
    Corollary6,
    /// Batons of parameter ⌈2 log2 n⌉ are good enough.
    Corollary15,
    /// Leaf, twig and limb structure of exhaustive optima.
    Caps,
    /// Balanced asters are optimal.
    Asters,
    /// Optimal batons beat optimal bridges.
    Gap,
    #[value(name = "appendixA")]
    AppendixA,
    #[value(name = "appendixB")]
    AppendixB,
    /// The baton difference f_n(s) is positive for small s once n ≥ 20.
    #[value(name = "batonPositivity")]
    BatonPositivity,
    /// DP against brute-force enumeration.
    Oracle,
}

/// Grid overrides; `None` means the suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteGrid {
    pub n: Option<usize>,
    pub lo: Option<usize>,
    pub m_max: Option<usize>,
    pub s_max: Option<u64>,
    pub q_max: Option<usize>,
    pub w_max: Option<usize>,
    pub d_max: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
}

pub struct Limits {
    pub threads: usize,
    pub brute_cap: u64,
    pub max_order: usize,
}

fn split(lo: usize, hi: usize, parts: usize) -> Vec<(usize, usize)> {
    if lo > hi {
        return Vec::new();
    }
    let len = hi - lo + 1;
    let parts = parts.clamp(1, len);
    (0..parts)
        .map(|i| (lo + len * i / parts, lo + len * (i + 1) / parts - 1))
        .collect()
}

/// Runs `f` on contiguous pieces of `lo..=hi` in parallel and merges the
/// reports in range order.
pub fn parallel_range(
    lo: usize,
    hi: usize,
    threads: usize,
    f: impl Fn(usize, usize) -> VerificationReport + Sync,
) -> Vec<VerificationReport> {
    let pieces = split(lo, hi, threads);
    thread::scope(|scope| {
        let handles: Vec<_> = pieces
            .iter()
            .map(|&(a, b)| {
                let f = &f;
                scope.spawn(move || f(a, b))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    })
}

fn merged(suite: &str, grid: String, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut rep = VerificationReport::new(suite, grid);
    for p in parts {
        rep.merge(p);
    }
    rep
}

pub fn random_gluing(seed: u64, samples: usize, q_max: usize, n_max: usize) -> VerificationReport {
    let mut r = rng(seed);
    let mut rep = VerificationReport::new(
        "gluing",
        format!("{samples} random instances, |Q| ≤ {q_max}, n ≤ {n_max}"),
    );
    for _ in 0..samples {
        let k = r.gen_range(2..=q_max);
        let q = random_tree(&mut r, k);
        let v = r.gen_range(0..k);
        let n = r.gen_range(3..=n_max);
        rep.merge(check_gluing_instance(&q, v, n));
    }
    rep
}

pub fn random_oracle(seed: u64, samples: usize, n_max: usize, cap: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("oracle", format!("{samples} random trees, n ≤ {n_max}"));
    for t in random_trees(seed, samples, 1, n_max) {
        rep.merge(check_oracle_tree(&t, cap));
    }
    rep
}

pub fn random_bounds(seed: u64, samples: usize, n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("bounds", format!("{samples} random trees, n ≤ {n_max}"));
    for t in random_trees(seed, samples, 1, n_max) {
        rep.merge(bound_suite(&t));
    }
    rep
}

pub fn exhaustive(
    n_max: usize,
    suite: &str,
    check: impl Fn(&mso_core::Tree, &mut VerificationReport),
) -> VerificationReport {
    let mut rep = VerificationReport::new(suite, format!("free trees n ≤ {n_max}"));
    for n in 1..=n_max {
        for t in free_trees(n).expect("n ≥ 1") {
            check(&t, &mut rep);
        }
    }
    rep
}

/// Exhaustive searches over trees and caterpillars for `4 ≤ n ≤ n_max`, checked
/// against the structural corollaries.
pub fn caps(n_max: usize, threads: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("caps", format!("4 ≤ n ≤ {n_max}"));
    for n in 4..=n_max {
        let all = optimal_parallel(&Family::AllTrees, n, Shard::WHOLE, threads)?.expect("nonempty");
        let cat =
            optimal_parallel(&Family::Caterpillars, n, Shard::WHOLE, threads)?.expect("nonempty");
        rep.merge(check_search_caps(&all, &cat));
    }
    Ok(rep)
}

pub fn run(suite: Suite, grid: &SuiteGrid, limits: &Limits) -> Result<VerificationReport> {
    let n = |default: usize| grid.n.unwrap_or(default);
    let samples = |default: usize| grid.samples.unwrap_or(default);
    let threads = limits.threads;
    let within = |n: usize| -> Result<usize> {
        if n > limits.max_order {
            Err(MsoError::Usage(format!(
                "n = {n} exceeds the maximum order {} (set MSO_MAX_ORDER or --max-order)",
                limits.max_order
            )))
        } else {
            Ok(n)
        }
    };
    Ok(match suite {
        Suite::Oracle => {
            let mut rep = verify_oracle(within(n(10))?, limits.brute_cap);
            rep.merge(random_oracle(grid.seed, samples(500), 16, limits.brute_cap));
            rep
        }
        Suite::Gluing => {
            let (q, m) = (grid.q_max.unwrap_or(8), n(12));
            let mut rep = verify_gluing(q, m);
            rep.merge(random_gluing(grid.seed, samples(200), q, m));
            rep
        }
        Suite::Associate => exhaustive(within(n(12))?, "associate", |t, rep| {
            if is_path(t) {
                rep.skip();
            } else {
                rep.merge(verify_associate(t).expect("not a path"));
            }
        }),
        Suite::Bounds => {
            let mut rep = exhaustive(within(n(12))?, "bounds", |t, rep| rep.merge(bound_suite(t)));
            rep.merge(random_bounds(grid.seed, samples(1000), 40));
            rep
        }
        Suite::Theorem8 => verify_theorem8(n(3), grid.w_max.unwrap_or(6), grid.d_max.unwrap_or(3)),
        Suite::Theorem11 => exhaustive(within(n(12))?, "theorem11", |t, rep| {
            let ok = path_minimality(t);
            rep.check(ok, || format!("path minimality fails on {:?}", t.edges()));
        }),
        Suite::Theorem13 => verify_theorem13(n(200)),
        Suite::Theorem14 => {
            let (lo, hi) = (grid.lo.unwrap_or(120), n(100_000));
            merged(
                "theorem14",
                format!("{lo} ≤ n ≤ {hi}"),
                parallel_range(lo, hi, threads, verify_theorem14),
            )
        }
        Suite::Theorem18 => verify_theorem18(n(10_000)).report,
        Suite::Corollary6 => verify_corollary6(n(16)),
        Suite::Corollary15 => verify_corollary15(n(1_000_000)),
        Suite::Caps => caps(within(n(18))?, threads)?,
        Suite::Asters => verify_aster_corollary(within(n(14))?),
        Suite::Gap => verify_baton_bridge_gap(n(1000)),
        Suite::AppendixA => verify_appendix_a(&AppendixGrid {
            m_max: grid.m_max.unwrap_or(15),
            n_max: n(300),
            ..AppendixGrid::default()
        }),
        Suite::AppendixB => verify_appendix_b(&AppendixGrid {
            s_max: grid.s_max.unwrap_or(500),
            ..AppendixGrid::default()
        }),
        Suite::BatonPositivity => verify_baton_positivity(&AppendixGrid {
            positive_n_min: grid.lo.unwrap_or(20) as u64,
            positive_n_max: n(10_000) as u64,
            positive_s_max: grid.s_max.unwrap_or(6),
            ..AppendixGrid::default()
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_covers_range() {
        assert_eq!(split(1, 10, 3), vec![(1, 3), (4, 6), (7, 10)]);
        assert_eq!(split(5, 5, 4), vec![(5, 5)]);
        assert!(split(6, 5, 2).is_empty());
    }

    #[test]
    fn parallel_theorem14_matches_serial() {
        let parts = parallel_range(120, 600, 4, verify_theorem14);
        let whole = verify_theorem14(120, 600);
        let m = merged("theorem14", whole.grid.clone(), parts);
        assert_eq!((m.passed, m.failed), (whole.passed, whole.failed));
    }
}
