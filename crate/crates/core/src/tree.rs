//! Free trees over dense vertex ids.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default upper bound on the order of a [`Tree`].
///
/// The brute-force oracle packs vertex sets into a `u64`, and no exhaustive
/// search gets anywhere near this order.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// An unrooted, unlabeled-in-spirit tree with vertices `0..n`.
///
/// Adjacency is stored in compressed rows with every neighbor list sorted,
/// so two trees compare equal exactly when they have the same edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl core::fmt::Debug for Tree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Tree")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Tree {
    /// The one-vertex tree K₁.
    pub fn trivial() -> Tree {
        Tree {
            offsets: vec![0, 0],
            neighbors: Vec::new(),
        }
    }

    /// Validates an edge list whose endpoints cover `0..n`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Tree> {
        Self::from_edges_with_cap(edges, DEFAULT_MAX_ORDER)
    }

    pub fn from_edges_with_cap(edges: &[(usize, usize)], cap: usize) -> Result<Tree> {
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        let order = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
        Self::with_order(order, edges, cap)
    }

    /// Like [`Tree::from_edges`] but with an explicit order, so `n = 1` with
    /// no edges is accepted.
    pub fn with_order(order: usize, edges: &[(usize, usize)], cap: usize) -> Result<Tree> {
        if order == 0 {
            return Err(Error::EmptyInput);
        }
        if order > cap {
            return Err(Error::TooLarge { order, cap });
        }
        let mut seen = alloc::collections::BTreeSet::new();
        let mut dsu = DisjointSet::new(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            if !dsu.union(u, v) {
                return Err(Error::CycleDetected(u, v));
            }
        }
        if edges.len() + 1 != order {
            return Err(Error::Disconnected);
        }
        Ok(Self::from_edges_unchecked(order, edges))
    }

    /// Builds the adjacency structure without validation. The caller
    /// guarantees that `edges` is a spanning tree on `0..order`.
    pub(crate) fn from_edges_unchecked(order: usize, edges: &[(usize, usize)]) -> Tree {
        let mut degree = vec![0usize; order];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(order + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..order].to_vec();
        let mut neighbors = vec![0usize; 2 * edges.len()];
        for &(u, v) in edges {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..order {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Tree { offsets, neighbors }
    }

    /// Tree with parent pointers; `parents[0]` is ignored (vertex 0 is the
    /// root) and every other entry must point to a smaller id.
    pub(crate) fn from_parents_unchecked(parents: &[usize]) -> Tree {
        let edges: Vec<(usize, usize)> = (1..parents.len()).map(|v| (parents[v], v)).collect();
        Self::from_edges_unchecked(parents.len(), &edges)
    }

    /// Decodes a Prüfer sequence of length `n - 2` into a labeled tree on
    /// `0..n`.
    pub fn from_prufer(sequence: &[usize]) -> Result<Tree> {
        let n = sequence.len() + 2;
        if n > DEFAULT_MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                cap: DEFAULT_MAX_ORDER,
            });
        }
        let mut degree = vec![1usize; n];
        for &x in sequence {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut leaves: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(core::cmp::Reverse)
            .collect();
        for &x in sequence {
            let core::cmp::Reverse(leaf) = leaves.pop().expect("prufer leaf");
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.push(core::cmp::Reverse(x));
            }
        }
        let core::cmp::Reverse(a) = leaves.pop().expect("prufer tail");
        let core::cmp::Reverse(b) = leaves.pop().expect("prufer tail");
        edges.push((a, b));
        Ok(Self::from_edges_unchecked(n, &edges))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Tree {
        assert!(n >= 1, "a path needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges_unchecked(n, &edges)
    }

    /// The star K₁,ₙ₋₁ with hub 0.
    pub fn star(n: usize) -> Tree {
        assert!(n >= 1, "a star needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges_unchecked(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Vertices of degree at most one. K₁ has a single leaf.
    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) <= 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.is_leaf(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for u in 0..self.order() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges_unchecked(self.order(), &edges)
    }

    /// BFS order from `root` together with the parent of every vertex
    /// (`usize::MAX` for the root).
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Distances from `root` to every vertex.
    pub fn distances(&self, root: usize) -> Vec<usize> {
        let (order, parent) = self.bfs(root);
        let mut dist = vec![0usize; self.order()];
        for &v in &order[1..] {
            dist[v] = dist[parent[v]] + 1;
        }
        dist
    }

    /// Vertices on the unique path from `a` to `b`, inclusive, in order.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let (_, parent) = self.bfs(b);
        let mut out = vec![a];
        let mut v = a;
        while v != b {
            v = parent[v];
            out.push(v);
        }
        out
    }

    pub fn diameter(&self) -> usize {
        let d0 = self.distances(0);
        let far = (0..self.order()).max_by_key(|&v| d0[v]).unwrap_or(0);
        self.distances(far).into_iter().max().unwrap_or(0)
    }

    /// Subtree induced by `vertices` (which must be connected), relabeled
    /// to `0..k` in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<Tree> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for &w in self.neighbors(v) {
                if v < w && index[w] != usize::MAX {
                    edges.push((index[v], index[w]));
                }
            }
        }
        if vertices.is_empty() || edges.len() + 1 != vertices.len() {
            return Err(Error::NotConnected);
        }
        Ok(Self::from_edges_unchecked(vertices.len(), &edges))
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`. Vertices
    /// of `self` keep their ids; the remaining vertices of `other` follow in
    /// increasing id order.
    pub fn glue(&self, u: usize, other: &Tree, v: usize) -> Result<Tree> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let n = self.order() + other.order() - 1;
        let base = self.order();
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                core::cmp::Ordering::Equal => u,
                core::cmp::Ordering::Less => base + w,
                core::cmp::Ordering::Greater => base + w - 1,
            }
        };
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (map(a), map(b))));
        if n > DEFAULT_MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                cap: DEFAULT_MAX_ORDER,
            });
        }
        Ok(Self::from_edges_unchecked(n, &edges))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_p2() {
        let t = Tree::from_edges(&[(0, 1)]).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.edges(), vec![(0, 1)]);
    }

    #[test]
    fn triangle_is_rejected() {
        assert!(matches!(
            Tree::from_edges(&[(0, 1), (1, 2), (2, 0)]),
            Err(Error::CycleDetected(2, 0))
        ));
    }

    #[test]
    fn p4_from_edges() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t, Tree::path(4));
        assert_eq!(t.leaves(), vec![0, 3]);
        assert_eq!(t.diameter(), 3);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Tree::from_edges(&[]), Err(Error::EmptyInput));
        assert_eq!(
            Tree::from_edges(&[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 0))
        );
        assert_eq!(Tree::from_edges(&[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Tree::from_edges(&[(0, 1), (2, 3)]),
            Err(Error::Disconnected)
        );
        assert_eq!(Tree::from_edges(&[(0, 2)]), Err(Error::Disconnected));
        assert!(matches!(
            Tree::from_edges(&[(0, 70)]),
            Err(Error::TooLarge { order: 71, .. })
        ));
    }

    #[test]
    fn prufer_decodes_star_and_path() {
        assert_eq!(Tree::from_prufer(&[0, 0]).unwrap(), Tree::star(4));
        let p = Tree::from_prufer(&[1, 2]).unwrap();
        assert_eq!(p, Tree::path(4));
    }

    #[test]
    fn glue_pendant_to_middle_of_p3() {
        let t = Tree::path(3).glue(1, &Tree::path(2), 0).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.max_degree(), 3);
    }

    #[test]
    fn induced_requires_connectivity() {
        let t = Tree::path(5);
        assert_eq!(t.induced(&[1, 2, 3]).unwrap(), Tree::path(3));
        assert_eq!(t.induced(&[0, 2]), Err(Error::NotConnected));
    }
}
