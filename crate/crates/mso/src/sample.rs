//! Seeded random trees.

use mso_core::Tree;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled tree of order `n` from a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Tree {
    match n {
        0 | 1 => Tree::trivial(),
        2 => Tree::path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Tree::from_prufer(&seq).expect("valid Prüfer sequence")
        }
    }
}

/// `count` trees with orders drawn uniformly from `lo..=hi`.
pub fn random_trees(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Tree> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(lo..=hi);
            random_tree(&mut r, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_trees(7, 20, 1, 16);
        assert_eq!(a, random_trees(7, 20, 1, 16));
        assert!(a.iter().all(|t| (1..=16).contains(&t.order())));
    }
}
