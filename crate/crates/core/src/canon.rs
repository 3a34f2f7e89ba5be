//! Canonical codes for free trees.
//!
//! A rooted tree is encoded AHU-style as `(` followed by the sorted codes of
//! its children and `)`. A free tree is rooted at its center; when the
//! center has two vertices the central edge is cut and the two half-codes
//! are stored smaller first.

use alloc::vec;
use alloc::vec::Vec;

use crate::structure::center;
use crate::tree::Tree;

/// Isomorphism-invariant byte encoding of a free tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl core::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b as char)?;
        }
        Ok(())
    }
}

/// AHU code of the subtree hanging from `root`, never stepping into
/// `blocked`.
pub fn rooted_code(t: &Tree, root: usize, blocked: Option<usize>) -> Vec<u8> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if w != parent[v] && Some(w) != blocked {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut root_code = Vec::new();
    for &v in order.iter().rev() {
        let mut kids = core::mem::take(&mut children[v]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if v == root {
            root_code = code;
        } else {
            children[parent[v]].push(code);
        }
    }
    root_code
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let c = center(t);
    let mut out = Vec::with_capacity(2 * t.order() + 1);
    if let [a, b] = c[..] {
        let (x, y) = (rooted_code(t, a, Some(b)), rooted_code(t, b, Some(a)));
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        out.push(b'B');
        out.extend_from_slice(&lo);
        out.extend_from_slice(&hi);
    } else {
        out.push(b'C');
        out.extend_from_slice(&rooted_code(t, c[0], None));
    }
    CanonicalCode(out)
}

/// Rebuilds a tree from a code produced by [`canonical_code`]. Returns
/// `None` on malformed input.
pub fn decode(code: &CanonicalCode) -> Option<Tree> {
    let bytes = code.as_bytes();
    let (tag, body) = bytes.split_first()?;
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut parse_rooted = |body: &[u8], edges: &mut Vec<(usize, usize)>| -> Option<usize> {
        let mut stack: Vec<usize> = Vec::new();
        let mut root = None;
        for (i, &b) in body.iter().enumerate() {
            match b {
                b'(' => {
                    let id = next;
                    next += 1;
                    if let Some(&p) = stack.last() {
                        edges.push((p, id));
                    } else if root.is_some() {
                        return None;
                    } else {
                        root = Some(id);
                    }
                    stack.push(id);
                }
                b')' => {
                    stack.pop()?;
                    if stack.is_empty() && i + 1 != body.len() {
                        return None;
                    }
                }
                _ => return None,
            }
        }
        if stack.is_empty() {
            root
        } else {
            None
        }
    };
    match tag {
        b'C' => {
            parse_rooted(body, &mut edges)?;
        }
        b'B' => {
            let split = split_point(body)?;
            let a = parse_rooted(&body[..split], &mut edges)?;
            let b = parse_rooted(&body[split..], &mut edges)?;
            edges.push((a, b));
        }
        _ => return None,
    }
    if edges.is_empty() {
        return Some(Tree::trivial());
    }
    Tree::from_edges(&edges).ok()
}

fn split_point(body: &[u8]) -> Option<usize> {
    let mut depth = 0i64;
    for (i, &b) in body.iter().enumerate() {
        depth += if b == b'(' { 1 } else { -1 };
        if depth == 0 {
            return Some(i + 1);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn p4_reversed_has_same_code() {
        let a = Tree::from_edges(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = a.relabel(&[3, 2, 1, 0]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn all_labelings_of_p3_share_a_code() {
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let codes: BTreeSet<_> = perms
            .iter()
            .map(|p| canonical_code(&Tree::path(3).relabel(p)))
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn three_trees_on_five_vertices() {
        let p5 = Tree::path(5);
        let k14 = Tree::star(5);
        let chair = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let codes: BTreeSet<_> = [p5, k14, chair].iter().map(canonical_code).collect();
        assert_eq!(codes.len(), 3);
    }

    #[test]
    fn decode_round_trips() {
        for t in [Tree::trivial(), Tree::path(2), Tree::path(7), Tree::star(6)] {
            let code = canonical_code(&t);
            let back = decode(&code).unwrap();
            assert_eq!(canonical_code(&back), code);
        }
        assert!(decode(&CanonicalCode(b"C(()".to_vec())).is_none());
    }
}
