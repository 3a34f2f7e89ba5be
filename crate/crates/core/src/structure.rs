//! Structural decompositions: center, stem, twigs, limbs and core.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::rooted_code;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Minimum-eccentricity vertices, found by peeling leaves. Always one or
/// two vertices, sorted.
pub fn center(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in t.neighbors(v) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Eccentricity of every vertex.
pub fn eccentricities(t: &Tree) -> Vec<usize> {
    (0..t.order())
        .map(|v| t.distances(v).into_iter().max().unwrap_or(0))
        .collect()
}

/// The tree left after deleting every leaf, with the original id of each
/// of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stem {
    pub tree: Tree,
    pub vertices: Vec<usize>,
}

/// `None` when nothing survives, which happens exactly for `n <= 2`.
pub fn stem(t: &Tree) -> Option<Stem> {
    let vertices: Vec<usize> = (0..t.order()).filter(|&v| !t.is_leaf(v)).collect();
    if vertices.is_empty() {
        return None;
    }
    let tree = t.induced(&vertices).expect("internal vertices of a tree are connected");
    Some(Stem { tree, vertices })
}

/// Vertices of degree at least two with at least `deg - 1` leaf neighbors.
pub fn twigs(t: &Tree) -> Vec<usize> {
    (0..t.order())
        .filter(|&v| {
            let d = t.degree(v);
            d >= 2 && t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count() + 1 >= d
        })
        .collect()
}

pub fn is_path(t: &Tree) -> bool {
    t.max_degree() <= 2
}

pub fn is_caterpillar(t: &Tree) -> bool {
    match stem(t) {
        None => true,
        Some(s) => is_path(&s.tree),
    }
}

pub fn is_aster(t: &Tree) -> bool {
    (0..t.order()).filter(|&v| t.degree(v) > 2).count() <= 1
}

/// An aster is astral over `v` when it is a path or `v` is its branch
/// vertex.
pub fn is_astral_over(t: &Tree, v: usize) -> bool {
    is_aster(t) && (is_path(t) || t.degree(v) > 2)
}

/// Every internal vertex has degree at least three.
pub fn is_series_reduced(t: &Tree) -> bool {
    (0..t.order()).all(|v| t.degree(v) != 2)
}

/// A limb: a maximal path through a leaf that avoids vertices of degree
/// greater than two, together with the core vertex it hangs from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limb {
    /// Core vertex adjacent to the limb's inner end.
    pub attachment: usize,
    /// Limb vertices, starting at the leaf.
    pub vertices: Vec<usize>,
}

/// All limbs of a tree that is not a path, one per leaf.
pub fn limbs(t: &Tree) -> Result<Vec<Limb>> {
    if is_path(t) {
        return Err(Error::IsAPath);
    }
    let mut out = Vec::new();
    for leaf in t.leaves() {
        let mut vertices = vec![leaf];
        let mut prev = leaf;
        let mut cur = t.neighbors(leaf)[0];
        while t.degree(cur) == 2 {
            vertices.push(cur);
            let next = t.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        out.push(Limb {
            attachment: cur,
            vertices,
        });
    }
    Ok(out)
}

/// Core, limb degrees, limb weights and limb orders of a non-path tree.
///
/// Core vertices are listed in BFS order from the core's center, visiting
/// children by the canonical code of the branch they carry in the whole
/// tree. Isomorphic inputs therefore produce equal profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimbProfile {
    /// The core, relabeled so that core vertex `i` is `ordering[i]`.
    pub core: Tree,
    /// Original ids of the core vertices, in order θ.
    pub ordering: Vec<usize>,
    pub limb_degrees: Vec<usize>,
    pub limb_weights: Vec<usize>,
    /// Sorted limb orders at each core vertex.
    pub limb_orders: Vec<Vec<usize>>,
}

pub fn limb_profile(t: &Tree) -> Result<LimbProfile> {
    let limbs = limbs(t)?;
    let n = t.order();
    let mut on_limb = vec![false; n];
    let mut orders_at = vec![Vec::new(); n];
    for limb in &limbs {
        for &v in &limb.vertices {
            on_limb[v] = true;
        }
        orders_at[limb.attachment].push(limb.vertices.len());
    }
    let core_vertices: Vec<usize> = (0..n).filter(|&v| !on_limb[v]).collect();
    let core_raw = t.induced(&core_vertices).expect("core of a tree is connected");

    let core_center: Vec<usize> = center(&core_raw)
        .into_iter()
        .map(|i| core_vertices[i])
        .collect();
    let root = core_center
        .iter()
        .copied()
        .min_by_key(|&v| rooted_code(t, v, None))
        .unwrap();

    let mut ordering = vec![root];
    let mut parent = vec![usize::MAX; n];
    let mut head = 0;
    while head < ordering.len() {
        let v = ordering[head];
        head += 1;
        let mut kids: Vec<(Vec<u8>, usize)> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !on_limb[w] && w != parent[v])
            .map(|w| (rooted_code(t, w, Some(v)), w))
            .collect();
        kids.sort();
        for (_, w) in kids {
            parent[w] = v;
            ordering.push(w);
        }
    }
    let core = t.induced(&ordering).expect("core of a tree is connected");
    let limb_orders: Vec<Vec<usize>> = ordering
        .iter()
        .map(|&v| {
            let mut o = orders_at[v].clone();
            o.sort_unstable();
            o
        })
        .collect();
    Ok(LimbProfile {
        core,
        limb_degrees: limb_orders.iter().map(Vec::len).collect(),
        limb_weights: limb_orders.iter().map(|o| o.iter().sum()).collect(),
        limb_orders,
        ordering,
    })
}

impl LimbProfile {
    pub fn total_weight(&self) -> usize {
        self.limb_weights.iter().sum()
    }

    /// Limb orders at every core vertex differ by at most one.
    pub fn is_locally_balanced(&self) -> bool {
        self.limb_orders
            .iter()
            .all(|o| o.is_empty() || o[o.len() - 1] - o[0] <= 1)
    }

    /// Reattaches the recorded limbs to the core.
    pub fn rebuild(&self) -> Tree {
        assemble(&self.core, &self.limb_orders)
    }
}

/// Hangs paths of the given orders off each core vertex. Core vertex `i`
/// keeps id `i`.
pub fn assemble(core: &Tree, limb_orders: &[Vec<usize>]) -> Tree {
    let mut edges = core.edges();
    let mut next = core.order();
    for (v, orders) in limb_orders.iter().enumerate() {
        for &k in orders {
            let mut prev = v;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    if next == 1 {
        return Tree::trivial();
    }
    Tree::from_edges_unchecked(next, &edges)
}

/// Checks that `(core, limb_weights, limb_degrees)` describes at least one
/// tree whose core is exactly `core`.
pub fn check_profile(core: &Tree, weights: &[usize], degrees: &[usize]) -> Result<()> {
    let c = core.order();
    if weights.len() != c || degrees.len() != c {
        return Err(Error::InfeasibleProfile(alloc::format!(
            "expected {c} weights and degrees"
        )));
    }
    for v in 0..c {
        let (w, d) = (weights[v], degrees[v]);
        if w < d || (d == 0 && w > 0) {
            return Err(Error::InfeasibleProfile(alloc::format!(
                "vertex {v}: weight {w} cannot be split into {d} limbs"
            )));
        }
        let need = match core.degree(v) {
            0 => 3,
            1 => 2,
            _ => 0,
        };
        if d < need {
            return Err(Error::InfeasibleProfile(alloc::format!(
                "vertex {v} has core degree {} and needs limb degree at least {need}",
                core.degree(v)
            )));
        }
    }
    Ok(())
}

/// Flags describing which named classes a tree belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_path: bool,
    pub is_caterpillar: bool,
    pub is_aster: bool,
    pub is_series_reduced: bool,
    /// Paths count as locally balanced.
    pub is_locally_balanced: bool,
}

pub fn classify(t: &Tree) -> Classification {
    let path = is_path(t);
    Classification {
        is_path: path,
        is_caterpillar: is_caterpillar(t),
        is_aster: is_aster(t),
        is_series_reduced: is_series_reduced(t),
        is_locally_balanced: path || limb_profile(t).map(|p| p.is_locally_balanced()).unwrap_or(true),
    }
}

/// Leaf vertices adjacent to some twig, and leaves that are not.
pub fn leaves_by_twig_adjacency(t: &Tree) -> (usize, usize) {
    let twig_set: BTreeSet<usize> = twigs(t).into_iter().collect();
    let mut adjacent = 0;
    let mut other = 0;
    for leaf in t.leaves() {
        if t.neighbors(leaf).iter().any(|w| twig_set.contains(w)) {
            adjacent += 1;
        } else {
            other += 1;
        }
    }
    (adjacent, other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    fn baton(s: usize, t: usize) -> Tree {
        crate::families::build(&crate::families::FamilySpec::Baton { s, t }).unwrap()
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(center(&Tree::path(5)), vec![2]);
        assert_eq!(center(&Tree::path(4)), vec![1, 2]);
        assert_eq!(center(&Tree::star(4)), vec![0]);
        assert_eq!(center(&Tree::trivial()), vec![0]);
        assert_eq!(center(&Tree::path(2)), vec![0, 1]);
    }

    #[test]
    fn center_minimizes_eccentricity() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)]).unwrap();
        let ecc = eccentricities(&t);
        let min = *ecc.iter().min().unwrap();
        let expected: Vec<usize> = (0..t.order()).filter(|&v| ecc[v] == min).collect();
        assert_eq!(center(&t), expected);
    }

    #[test]
    fn stems() {
        assert_eq!(stem(&Tree::star(6)).unwrap().tree, Tree::trivial());
        assert_eq!(stem(&Tree::path(7)).unwrap().tree.order(), 5);
        assert!(is_path(&stem(&Tree::path(7)).unwrap().tree));
        assert!(stem(&Tree::path(2)).is_none());
        assert!(stem(&Tree::trivial()).is_none());
    }

    #[test]
    fn twig_examples() {
        assert_eq!(twigs(&Tree::star(4)), vec![0]);
        assert_eq!(twigs(&Tree::path(5)), vec![1, 3]);
        assert_eq!(twigs(&Tree::path(3)), vec![1]);
    }

    #[test]
    fn baton_profile() {
        // D_8(2,2): hubs 0 and 1 joined through a two-vertex interior path.
        let t = baton(2, 2);
        let p = limb_profile(&t).unwrap();
        assert_eq!(p.core.order(), 4);
        assert!(is_path(&p.core));
        let ends: Vec<usize> = (0..4).filter(|&i| p.core.degree(i) == 1).collect();
        for i in 0..4 {
            let expected = if ends.contains(&i) { 2 } else { 0 };
            assert_eq!(p.limb_degrees[i], expected);
            assert_eq!(p.limb_weights[i], expected);
        }
        assert_eq!(p.total_weight(), 4);
        assert!(p.is_locally_balanced());
    }

    #[test]
    fn figure_two_sequences_are_realizable() {
        // Core P5 with limb degrees (3,2,3,0,3) and weights (6,3,5,0,5).
        let core = Tree::path(5);
        let orders = vec![vec![1, 2, 3], vec![1, 2], vec![1, 1, 3], vec![], vec![1, 2, 2]];
        let t = assemble(&core, &orders);
        let p = limb_profile(&t).unwrap();
        assert_eq!(p.core.order(), 5);
        let mut degrees = p.limb_degrees.clone();
        let mut weights = p.limb_weights.clone();
        degrees.sort_unstable();
        weights.sort_unstable();
        assert_eq!(degrees, vec![0, 2, 3, 3, 3]);
        assert_eq!(weights, vec![0, 3, 5, 5, 6]);
        assert!(!p.is_locally_balanced());
        check_profile(&core, &[6, 3, 5, 0, 5], &[3, 2, 3, 0, 3]).unwrap();
    }

    #[test]
    fn path_has_no_core() {
        assert_eq!(limb_profile(&Tree::path(6)), Err(Error::IsAPath));
    }

    #[test]
    fn profile_round_trip() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (2, 6), (6, 7), (0, 8), (0, 9)]).unwrap();
        let p = limb_profile(&t).unwrap();
        assert_eq!(canonical_code(&p.rebuild()), canonical_code(&t));
        assert_eq!(p.total_weight() + p.core.order(), t.order());
    }

    #[test]
    fn classification_examples() {
        let p7 = classify(&Tree::path(7));
        assert!(p7.is_path && p7.is_caterpillar && p7.is_aster && !p7.is_series_reduced);
        let k14 = classify(&Tree::star(5));
        assert!(k14.is_aster && k14.is_series_reduced && k14.is_caterpillar);
        let bridge =
            crate::families::build(&crate::families::FamilySpec::Bridge { s: 1, t: 1 }).unwrap();
        let b = classify(&bridge);
        assert!(b.is_caterpillar && !b.is_aster);
    }

    #[test]
    fn infeasible_profiles() {
        let core = Tree::path(2);
        assert!(check_profile(&core, &[3, 3], &[2, 2]).is_ok());
        assert!(check_profile(&core, &[3, 3], &[1, 2]).is_err());
        assert!(check_profile(&core, &[1, 3], &[2, 2]).is_err());
        assert!(check_profile(&Tree::trivial(), &[4], &[2]).is_err());
    }
}
