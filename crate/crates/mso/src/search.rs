//! Threaded, sharded exhaustive searches.

use std::thread;
use std::time::Instant;

use mso_core::enumeration::{Family, Shard, TreeStream};
use mso_core::families::{build, FamilySpec};
use mso_core::lab::{optimal_baton_s, optimal_bridge_s, SearchAccumulator, SearchReport, Winner};

use crate::error::Result;

/// Exhaustive argmax over the part of the stream selected by `shard`,
/// split further across `threads` workers. Partial results merge in worker
/// order, so the report does not depend on scheduling.
pub fn optimal_parallel(
    family: &Family,
    n: usize,
    shard: Shard,
    threads: usize,
) -> Result<Option<SearchReport>> {
    let threads = threads.max(1);
    TreeStream::new(family.clone(), n)?;
    let start = Instant::now();
    let parts: Vec<SearchAccumulator> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let sub = Shard::new(shard.index + shard.count * i, shard.count * threads)
                    .expect("index < count");
                let family = family.clone();
                scope.spawn(move || {
                    let mut acc = SearchAccumulator::new();
                    for t in TreeStream::new(family, n)
                        .expect("checked above")
                        .with_shard(sub)
                    {
                        acc.push(t);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut acc = SearchAccumulator::new();
    for p in parts {
        acc.merge(p);
    }
    Ok(acc.finish(family.clone(), n).map(|mut r| {
        r.wall_time = Some(start.elapsed());
        r
    }))
}

/// Baton and bridge optima from the closed forms; the winners are built
/// only for reporting.
pub fn optimal_parametric(family: &Family, n: usize) -> Option<(SearchReport, Vec<usize>)> {
    let start = Instant::now();
    let (arg, spec): (_, fn(usize, usize) -> FamilySpec) = match family {
        Family::Batons => (optimal_baton_s(n)?, |n, s| FamilySpec::Baton {
            s,
            t: n - 2 * s - 2,
        }),
        Family::Bridges => (optimal_bridge_s(n)?, |n, s| FamilySpec::Bridge {
            s,
            t: n - 4 * s,
        }),
        _ => return None,
    };
    let winners = arg
        .values
        .iter()
        .map(|&s| Winner::describe(&build(&spec(n, s)).expect("legal parameter")))
        .collect();
    let report = SearchReport {
        family: family.clone(),
        n,
        examined: arg.evaluated as u64,
        winners,
        mean: arg.mean,
        runner_up: None,
        wall_time: Some(start.elapsed()),
    };
    Some((report, arg.values))
}

pub fn default_threads() -> usize {
    thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mso_core::lab::optimal;

    #[test]
    fn threads_and_shards_agree_with_serial() {
        for n in [8, 11] {
            let serial = optimal(Family::AllTrees, n).unwrap().unwrap();
            for threads in [1, 3, 4] {
                let mut r = optimal_parallel(&Family::AllTrees, n, Shard::WHOLE, threads)
                    .unwrap()
                    .unwrap();
                r.wall_time = None;
                assert_eq!(r, serial);
            }
            let mut acc_winners = Vec::new();
            let mut examined = 0;
            for k in 0..3 {
                let r = optimal_parallel(&Family::AllTrees, n, Shard::new(k, 3).unwrap(), 2)
                    .unwrap()
                    .unwrap();
                examined += r.examined;
                if r.mean == serial.mean {
                    acc_winners.extend(r.winners);
                }
            }
            assert_eq!(examined, serial.examined);
            acc_winners.sort_by(|a, b| a.code.cmp(&b.code));
            assert_eq!(acc_winners, serial.winners);
        }
    }

    #[test]
    fn parametric_batons() {
        let (r, s) = optimal_parametric(&Family::Batons, 20).unwrap();
        let trees = optimal(Family::Batons, 20).unwrap().unwrap();
        assert_eq!(r.mean, trees.mean);
        assert_eq!(r.winners, trees.winners);
        assert!(!s.is_empty());
    }
}
