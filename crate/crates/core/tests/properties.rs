use mso_core::canon::{canonical_code, decode};
use mso_core::exact::ratio;
use mso_core::families::{build, FamilySpec};
use mso_core::lab::{bound_suite, path_minimality};
use mso_core::poly::{
    brute_force_polynomial, density, glue_polynomials, local_mean, local_subtree_polynomial, mean,
    mean_containing, subtree_polynomial, DEFAULT_BRUTE_FORCE_CAP,
};
use mso_core::structure::is_path;
use mso_core::{Rational, Tree};
use num_bigint::BigUint;
use proptest::prelude::*;

fn tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max).prop_flat_map(|n| {
        if n <= 2 {
            Just(Tree::path(n)).boxed()
        } else {
            proptest::collection::vec(0..n, n - 2)
                .prop_map(|seq| Tree::from_prufer(&seq).unwrap())
                .boxed()
        }
    })
}

/// Grows a connected vertex set from `start`, taking `picks` in turn.
fn grow(t: &Tree, start: usize, picks: &[usize]) -> Vec<usize> {
    let mut set = vec![start];
    for &p in picks {
        let frontier: Vec<usize> = set
            .iter()
            .flat_map(|&v| t.neighbors(v).iter().copied())
            .filter(|w| !set.contains(w))
            .collect();
        if frontier.is_empty() {
            break;
        }
        set.push(frontier[p % frontier.len()]);
    }
    set
}

/// Mean order of the connected sets containing `h`, by subset enumeration.
fn mean_containing_brute(t: &Tree, h: &[usize]) -> Rational {
    let n = t.order();
    let need: u32 = h.iter().map(|&v| 1u32 << v).sum();
    let (mut count, mut total) = (0u64, 0u64);
    for mask in 1u32..(1 << n) {
        if mask & need != need {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if t.induced(&vs).is_ok() {
            count += 1;
            total += vs.len() as u64;
        }
    }
    ratio(total as i64, count as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_equals_brute_force(t in tree(16)) {
        prop_assert_eq!(subtree_polynomial(&t), brute_force_polynomial(&t, DEFAULT_BRUTE_FORCE_CAP).unwrap());
    }

    #[test]
    fn second_coefficient_counts_leaves(t in tree(30)) {
        let p = subtree_polynomial(&t);
        let n = t.order();
        prop_assume!(n >= 3);
        prop_assert_eq!(p.coeff(n - 1), BigUint::from(t.leaf_count()));
        prop_assert_eq!(p.coeff(n), BigUint::from(1u8));
    }

    #[test]
    fn local_mean_bounds(t in tree(40)) {
        let m = mean(&t);
        for v in 0..t.order() {
            let l = local_mean(&t, v).unwrap();
            prop_assert!(l <= ratio(2, 1) * &m);
            prop_assert_eq!(l == m, t.order() == 1);
            prop_assert!(m <= l);
        }
    }

    #[test]
    fn density_exceeds_a_third(t in tree(40)) {
        prop_assert!(density(&t) > ratio(1, 3));
        prop_assert!(path_minimality(&t));
    }

    #[test]
    fn nested_subtrees(t in tree(25), start in 0usize..25, a in proptest::collection::vec(0usize..64, 0..8), b in proptest::collection::vec(0usize..64, 1..8)) {
        let start = start % t.order();
        let r = grow(&t, start, &a);
        let mut picks = a.clone();
        picks.extend(&b);
        let s = grow(&t, start, &picks);
        prop_assume!(s.len() > r.len());
        let mr = mean_containing(&t, &r).unwrap();
        let ms = mean_containing(&t, &s).unwrap();
        prop_assert!(mr < ms);
        prop_assert!(ms <= mr + ratio((s.len() - r.len()) as i64, 2));
    }

    #[test]
    fn mean_containing_matches_subsets(t in tree(14), start in 0usize..14, a in proptest::collection::vec(0usize..64, 0..5)) {
        let h = grow(&t, start % t.order(), &a);
        prop_assert_eq!(mean_containing(&t, &h).unwrap(), mean_containing_brute(&t, &h));
    }

    #[test]
    fn gluing_composition(q in tree(8), v in 0usize..8, n in 1usize..=12, s in 1usize..=12) {
        let v = v % q.order();
        let s = (s - 1) % n + 1;
        let p = Tree::path(n);
        let glued = build(&FamilySpec::Glued { q: q.clone(), v, path_len: n, position: s }).unwrap();
        let composed = glue_polynomials(
            &subtree_polynomial(&p),
            &local_subtree_polynomial(&p, s - 1).unwrap(),
            &subtree_polynomial(&q),
            &local_subtree_polynomial(&q, v).unwrap(),
        ).unwrap();
        prop_assert_eq!(composed, subtree_polynomial(&glued));
    }

    #[test]
    fn canonical_code_is_a_label_invariant(t in tree(30), seed in any::<u64>()) {
        let n = t.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let u = t.relabel(&perm);
        let code = canonical_code(&t);
        prop_assert_eq!(&canonical_code(&u), &code);
        prop_assert_eq!(mean(&u), mean(&t));
        let back = decode(&code).unwrap();
        prop_assert_eq!(canonical_code(&back), code);
    }

    #[test]
    fn random_trees_pass_bound_suite(t in tree(40)) {
        let rep = bound_suite(&t);
        prop_assert!(rep.is_pass(), "{:?}", rep);
        prop_assert_eq!(mean(&t) == ratio(t.order() as i64 + 2, 3), is_path(&t));
    }
}
