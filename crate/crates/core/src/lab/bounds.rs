use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::search::SearchAccumulator;
use super::VerificationReport;
use crate::canon::canonical_code;
use crate::enumeration::{Family, TreeStream};
use crate::error::Result;
use crate::exact::{ratio, Rational};
use crate::families::balanced_leg_orders;
use crate::poly::{local_totals, mean, mean_containing, subtree_totals};
use crate::structure::{
    assemble, check_profile, is_astral_over, is_path, leaves_by_twig_adjacency, limbs, stem, twigs,
};
use crate::tree::Tree;

fn r(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Evaluates every applicable general bound on a single tree, skipping
/// those whose hypotheses fail.
pub fn bound_suite(t: &Tree) -> VerificationReport {
    let n = t.order();
    let mut rep = VerificationReport::new("bounds", format!("tree of order {n}"));
    let edges = t.edges();
    let ctx = |what: &str| format!("{what} fails on edges {edges:?}");
    let totals = subtree_totals(t);
    let m = totals.mean();
    let nn = r(n);

    // M_T >= (n + 2)/3 with equality exactly for paths
    let floor = r(n + 2) / r(3);
    let path = is_path(t);
    rep.check((m == floor) == path && m >= floor, || {
        ctx(&format!("path minimality (M = {m}, (n+2)/3 = {floor})"))
    });
    rep.check(&m / &nn > ratio(1, 3), || ctx("density > 1/3"));

    // local versus global means
    for v in 0..n {
        let local = local_totals(t, v).expect("vertex in range").mean();
        if n == 1 {
            rep.check(local == m, || ctx("M_{T,v} = M_T on K1"));
        } else {
            rep.check(m < local, || ctx(&format!("M_T < M_{{T,{v}}}")));
        }
        rep.check(local <= ratio(2, 1) * &m, || ctx(&format!("M_{{T,{v}}} <= 2 M_T")));
        if is_astral_over(t, v) && n >= 2 {
            rep.check(local == r(n + 1) / r(2), || {
                ctx(&format!("astral local mean at {v} equals (n+1)/2"))
            });
        }
    }

    // nested subtrees R = {v} inside S = {v, w}, and inside S = T
    for (v, w) in t.edges() {
        let rv = mean_containing(t, &[v]).expect("single vertex");
        let s = mean_containing(t, &[v, w]).expect("edge");
        rep.check(rv < s && s <= &rv + ratio(1, 2), || {
            ctx(&format!("nested bound for R = {{{v}}}, S = {{{v},{w}}}"))
        });
    }
    if n >= 2 {
        let rv = mean_containing(t, &[0]).expect("vertex 0");
        rep.check(rv < nn && nn <= &rv + r(n - 1) / r(2), || {
            ctx("nested bound for R = {0}, S = T")
        });
    }

    let leaves = t.leaf_count();
    // M_T < n − ℓ/2
    if n >= 3 {
        rep.check(m < &nn - r(leaves) / r(2), || ctx("M_T < n − ℓ/2"));
    } else {
        rep.skip();
    }

    // twig bound, when every twig has degree at least three
    let tw = twigs(t);
    if n >= 4 && tw.iter().all(|&v| t.degree(v) >= 3) {
        let (l1, l2) = leaves_by_twig_adjacency(t);
        let bound = &nn - ratio(29, 45) * r(tw.len()) - ratio(17, 45) * r(l1) - r(l2) / r(2);
        rep.check(m < bound, || ctx("M_T < n − 29t/45 − 17ℓ1/45 − ℓ2/2"));
    } else {
        rep.skip();
    }

    // total limb weight
    if n > 3 && !path {
        let w: usize = limbs(t).expect("not a path").iter().map(|l| l.vertices.len()).sum();
        rep.check(m <= &nn - r(w) / r(2), || ctx("M_T <= n − w/2"));
    } else {
        rep.skip();
    }

    // stem bounds
    match stem(t) {
        Some(s) if leaves + 2 <= n => {
            let st = subtree_totals(&s.tree);
            let scaled = &st.count << leaves;
            rep.check(totals.count <= scaled, || ctx("N_T <= N_S · 2^ℓ"));
            let ms = st.mean();
            let bound = &nn - (&nn - ms) / Rational::from_integer(BigInt::one() << leaves);
            rep.check(m <= bound, || ctx("M_T <= n − (n − M_S)/2^ℓ"));
        }
        _ => {
            rep.skip();
            rep.skip();
        }
    }
    rep
}

/// `M_T ≥ (n+2)/3`, with equality exactly when `t` is a path.
pub fn path_minimality(t: &Tree) -> bool {
    let m = mean(t);
    let floor = r(t.order() + 2) / r(3);
    m >= floor && ((m == floor) == is_path(t))
}

/// All standard 1-associates: for a leaf `w` whose limb hangs from `v`, and
/// a neighbor `u` of `v` off that limb, delete `vu` and add `uw`.
pub fn standard_one_associates(t: &Tree) -> Result<Vec<Tree>> {
    let limbs = limbs(t)?;
    let mut out = Vec::new();
    for limb in &limbs {
        let w = limb.vertices[0];
        let v = limb.attachment;
        let inner = *limb.vertices.last().unwrap();
        for &u in t.neighbors(v) {
            if u == inner {
                continue;
            }
            let edges: Vec<(usize, usize)> = t
                .edges()
                .into_iter()
                .filter(|&(a, b)| !((a, b) == (v.min(u), v.max(u))))
                .chain([(u, w)])
                .collect();
            out.push(Tree::from_edges(&edges).expect("associate is a tree"));
        }
    }
    Ok(out)
}

/// Checks that some standard 1-associate of `t` has strictly smaller mean.
pub fn verify_associate(t: &Tree) -> Result<VerificationReport> {
    let associates = standard_one_associates(t)?;
    let m = mean(t);
    let mut rep = VerificationReport::new("associate", format!("order {}", t.order()));
    let best = associates.iter().map(mean).min().expect("non-paths have associates");
    rep.check(best < m, || {
        format!("no associate of {:?} has smaller mean (M = {m}, min associate = {best})", t.edges())
    });
    Ok(rep)
}

/// All multisets of `d` positive parts summing to `w`, each sorted.
fn multiset_partitions(w: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(w: usize, d: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if d == 0 {
            if w == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut k = min;
        while k * d <= w {
            acc.push(k);
            rec(w - k, d - 1, k, acc, out);
            acc.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(w, d, 1, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every limb assignment consistent with `(core, weights,
/// degrees)` and checks that the locally balanced one is the strict argmax.
pub fn verify_locally_balanced(
    core: &Tree,
    weights: &[usize],
    degrees: &[usize],
) -> Result<VerificationReport> {
    check_profile(core, weights, degrees)?;
    let choices: Vec<Vec<Vec<usize>>> = weights
        .iter()
        .zip(degrees)
        .map(|(&w, &d)| multiset_partitions(w, d))
        .collect();
    let balanced: Vec<Vec<usize>> = weights
        .iter()
        .zip(degrees)
        .map(|(&w, &d)| if d == 0 { Vec::new() } else { balanced_leg_orders(w + 1, d) })
        .collect();
    let target = mean(&assemble(core, &balanced));

    let mut rep = VerificationReport::new(
        "theorem8",
        format!("core order {}, weights {weights:?}, degrees {degrees:?}", core.order()),
    );
    let mut index = vec![0usize; choices.len()];
    loop {
        let pick: Vec<Vec<usize>> = index.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        if pick != balanced {
            let m = mean(&assemble(core, &pick));
            rep.check(m < target, || {
                format!("assignment {pick:?} has mean {m}, not below balanced {target}")
            });
        }
        // odometer
        let mut k = 0;
        loop {
            if k == index.len() {
                return Ok(rep);
            }
            index[k] += 1;
            if index[k] < choices[k].len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
    }
}

/// Runs [`verify_locally_balanced`] on every feasible profile over every
/// core of order at most `core_max`, with at most `d_max` limbs and total
/// limb weight at most `w_max` per core vertex.
pub fn verify_theorem8(core_max: usize, w_max: usize, d_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new(
        "theorem8",
        format!("core order ≤ {core_max}, weight ≤ {w_max}, limbs ≤ {d_max}"),
    );
    for c in 1..=core_max {
        for core in crate::enumeration::free_trees(c).expect("c ≥ 1") {
            let options: Vec<Vec<(usize, usize)>> = (0..c)
                .map(|v| {
                    let need = match core.degree(v) {
                        0 => 3,
                        1 => 2,
                        _ => 0,
                    };
                    let mut o = Vec::new();
                    for d in need..=d_max {
                        if d == 0 {
                            o.push((0, 0));
                            continue;
                        }
                        o.extend((d..=w_max).map(|w| (d, w)));
                    }
                    o
                })
                .collect();
            if options.iter().any(Vec::is_empty) {
                continue;
            }
            let mut index = vec![0usize; c];
            'profiles: loop {
                let degrees: Vec<usize> = index.iter().zip(&options).map(|(&i, o)| o[i].0).collect();
                let weights: Vec<usize> = index.iter().zip(&options).map(|(&i, o)| o[i].1).collect();
                match verify_locally_balanced(&core, &weights, &degrees) {
                    Ok(r) => rep.merge(r),
                    Err(_) => rep.skip(),
                }
                let mut k = 0;
                loop {
                    if k == c {
                        break 'profiles;
                    }
                    index[k] += 1;
                    if index[k] < options[k].len() {
                        break;
                    }
                    index[k] = 0;
                    k += 1;
                }
            }
        }
    }
    rep
}

/// Among asters of order `n` with `leaves ≥ 3` leaves, the balanced aster
/// is the unique maximizer.
pub fn verify_aster_corollary(n_max: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("asters", format!("n ≤ {n_max}, ℓ ≥ 3"));
    for n in 4..=n_max {
        for leaves in 3..n {
            let mut acc = SearchAccumulator::new();
            for t in TreeStream::new(Family::Asters { leaves: Some(leaves) }, n).expect("n ≥ 1") {
                acc.push(t);
            }
            let Some(report) = acc.finish(Family::Asters { leaves: Some(leaves) }, n) else {
                rep.skip();
                continue;
            };
            let balanced = assemble(&Tree::trivial(), &[balanced_leg_orders(n, leaves)]);
            let code = canonical_code(&balanced);
            rep.check(report.winners.len() == 1 && report.winners[0].code == code, || {
                format!("n = {n}, ℓ = {leaves}: balanced aster is not the unique optimum")
            });
        }
    }
    rep
}
