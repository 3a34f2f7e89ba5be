//! Isomorphism-free streams of trees.
//!
//! Free trees come from the Wright–Richmond–Odlyzko–McKay successor on
//! level sequences (a free tree is kept in its canonical rooted form at a
//! center, and the successor jumps straight to the next such form).
//! Caterpillars are generated directly from spine leaf counts, deduplicated
//! by spine reversal. The parametric families are listed from their legal
//! parameter ranges.
//!
//! Generation order is deterministic. A [`Shard`] keeps every `count`-th
//! item starting at `index`, and the skipped items are never materialized
//! as trees.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{build, FamilySpec};
use crate::structure::assemble;
use crate::tree::Tree;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    AllTrees,
    Caterpillars,
    /// `D_n(s, s)` for `1 ≤ s ≤ (n − 2)/2`.
    Batons,
    /// `B(s, n − 4s)` for `1 ≤ s ≤ n/4`; these have order `n + 2`.
    Bridges,
    /// `D_n(r, leaves − r)` for `1 ≤ r ≤ leaves − r`.
    Dds { leaves: usize },
    /// Asters of order `n`, optionally with a fixed number of leaves.
    Asters { leaves: Option<usize> },
}

/// Keeps items whose position in the unsharded stream is `index` mod
/// `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::InvalidSpec(alloc::format!(
                "shard {index}/{count} needs 0 ≤ k < K"
            )));
        }
        Ok(Shard { index, count })
    }
}

/// Level-sequence successor state for free trees of one order.
#[derive(Clone, Debug)]
struct FreeTrees {
    layout: Option<Vec<usize>>,
    fresh: bool,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        let layout = match n {
            0 => None,
            1 => Some(vec![0]),
            2 => Some(vec![0, 1]),
            _ => {
                let mut l: Vec<usize> = (0..=n / 2).collect();
                l.extend(1..n.div_ceil(2));
                Some(l)
            }
        };
        FreeTrees { layout, fresh: true }
    }

    fn advance(&mut self) -> bool {
        let Some(layout) = self.layout.take() else {
            return false;
        };
        let next = if self.fresh {
            self.fresh = false;
            Some(layout)
        } else if layout.len() <= 2 {
            None
        } else {
            next_rooted_tree(&layout, None)
        };
        self.layout = next.and_then(next_free_tree);
        self.layout.is_some()
    }

    fn current(&self) -> Tree {
        from_level_sequence(self.layout.as_deref().expect("advanced"))
    }
}

/// Successor of a level sequence in the reverse-lexicographic order of
/// rooted trees, optionally forcing the change at position `p`.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the first subtree of the root, shifted to depth 0.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` to the first level sequence at or after it that is
/// the canonical form of a free tree.
fn next_free_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    if candidate.len() <= 2 {
        return Some(candidate);
    }
    loop {
        let (left, rest) = split_tree(&candidate);
        let lh = left.iter().copied().max().unwrap_or(0);
        let rh = rest.iter().copied().max().unwrap_or(0);
        let valid = rh > lh
            || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (i, d) in (1..=h + 1).enumerate() {
                next[len - (h + 1) + i] = d;
            }
        }
        candidate = next;
    }
}

/// Builds the rooted tree whose vertices, in preorder, sit at the given
/// depths. Vertex `i` of the result is the `i`-th entry.
pub fn from_level_sequence(levels: &[usize]) -> Tree {
    let mut parents = vec![0usize; levels.len()];
    let mut stack: Vec<usize> = Vec::with_capacity(levels.len());
    for (i, &d) in levels.iter().enumerate() {
        stack.truncate(d);
        if let Some(&p) = stack.last() {
            parents[i] = p;
        }
        stack.push(i);
    }
    Tree::from_parents_unchecked(&parents)
}

/// Spine leaf counts for caterpillars of order `n`.
#[derive(Clone, Debug)]
struct Caterpillars {
    n: usize,
    spine: usize,
    /// Leaves beyond the mandatory one at each end of the spine.
    extra: Vec<usize>,
    started: bool,
    current: Vec<usize>,
}

impl Caterpillars {
    fn new(n: usize) -> Self {
        Caterpillars {
            n,
            spine: 0,
            extra: Vec::new(),
            started: false,
            current: Vec::new(),
        }
    }

    fn reset_spine(&mut self, k: usize) {
        self.spine = k;
        let r = self.n - k - 2;
        self.extra = vec![0; k];
        self.extra[k - 1] = r;
    }

    /// Next weak composition of the same sum in lexicographic order.
    fn step_composition(&mut self) -> bool {
        let e = &mut self.extra;
        let Some(last) = e.iter().rposition(|&x| x > 0) else {
            return false;
        };
        if last == 0 {
            return false;
        }
        let tail: usize = e[last..].iter().sum();
        e[last - 1] += 1;
        for x in &mut e[last..] {
            *x = 0;
        }
        let k = e.len();
        e[k - 1] = tail - 1;
        true
    }

    fn raw_next(&mut self) -> bool {
        let n = self.n;
        if !self.started {
            self.started = true;
            if n <= 3 {
                self.current = vec![n.saturating_sub(1)];
                self.spine = usize::MAX;
                return n >= 1;
            }
            self.current = vec![n - 1];
            self.spine = 1;
            return true;
        }
        if self.spine == usize::MAX {
            return false;
        }
        if self.spine == 1 {
            self.reset_spine(2);
        } else if !self.step_composition() {
            if self.spine + 2 >= n {
                self.spine = usize::MAX;
                return false;
            }
            self.reset_spine(self.spine + 1);
        }
        let k = self.spine;
        self.current.clear();
        self.current.extend_from_slice(&self.extra);
        self.current[0] += 1;
        self.current[k - 1] += 1;
        true
    }

    fn advance(&mut self) -> bool {
        while self.raw_next() {
            let a = &self.current;
            if a.iter().le(a.iter().rev()) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> Tree {
        caterpillar(&self.current)
    }
}

fn caterpillar(leaves: &[usize]) -> Tree {
    build(&FamilySpec::Caterpillar {
        leaves: leaves.to_vec(),
    })
    .expect("generated caterpillars are valid")
}

#[derive(Clone, Debug)]
enum Listed {
    Spec(FamilySpec),
    Legs(Vec<usize>),
}

#[derive(Clone, Debug)]
enum Source {
    Free(FreeTrees),
    Caterpillar(Caterpillars),
    Listed { items: Vec<Listed>, pos: usize },
}

impl Source {
    fn advance(&mut self) -> bool {
        match self {
            Source::Free(g) => g.advance(),
            Source::Caterpillar(g) => g.advance(),
            Source::Listed { items, pos } => {
                *pos += 1;
                *pos <= items.len()
            }
        }
    }

    fn current(&self) -> Tree {
        match self {
            Source::Free(g) => g.current(),
            Source::Caterpillar(g) => g.current(),
            Source::Listed { items, pos } => match &items[*pos - 1] {
                Listed::Spec(spec) => build(spec).expect("listed specs are valid"),
                Listed::Legs(legs) => assemble(&Tree::trivial(), core::slice::from_ref(legs)),
            },
        }
    }
}

/// Lazy, single-consumer stream of pairwise non-isomorphic trees.
#[derive(Clone, Debug)]
pub struct TreeStream {
    family: Family,
    n: usize,
    shard: Shard,
    position: usize,
    source: Source,
}

impl TreeStream {
    pub fn new(family: Family, n: usize) -> Result<TreeStream> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let source = match &family {
            Family::AllTrees => Source::Free(FreeTrees::new(n)),
            Family::Caterpillars => Source::Caterpillar(Caterpillars::new(n)),
            Family::Batons => Source::Listed {
                items: (1..=n.saturating_sub(2) / 2)
                    .map(|s| Listed::Spec(FamilySpec::Baton { s, t: n - 2 * s - 2 }))
                    .collect(),
                pos: 0,
            },
            Family::Bridges => Source::Listed {
                items: (1..=n / 4)
                    .map(|s| Listed::Spec(FamilySpec::Bridge { s, t: n - 4 * s }))
                    .collect(),
                pos: 0,
            },
            Family::Dds { leaves } => {
                let items = if n >= leaves + 2 {
                    (1..=leaves / 2)
                        .map(|r| Listed::Spec(FamilySpec::Dds { n, r, s: leaves - r }))
                        .collect()
                } else {
                    Vec::new()
                };
                Source::Listed { items, pos: 0 }
            }
            Family::Asters { leaves } => Source::Listed {
                items: aster_legs(n, *leaves).into_iter().map(Listed::Legs).collect(),
                pos: 0,
            },
        };
        Ok(TreeStream {
            family,
            n,
            shard: Shard::WHOLE,
            position: 0,
            source,
        })
    }

    pub fn with_shard(mut self, shard: Shard) -> TreeStream {
        self.shard = shard;
        self
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// The order parameter the stream was built with.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn shard(&self) -> Shard {
        self.shard
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            if !self.source.advance() {
                return None;
            }
            let i = self.position;
            self.position += 1;
            if i % self.shard.count == self.shard.index {
                return Some(self.source.current());
            }
        }
    }
}

/// Leg orders (nonincreasing) of every aster of order `n`.
fn aster_legs(n: usize, leaves: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n <= 2 {
        if leaves.is_none_or(|l| l == n - 1 + usize::from(n == 2)) {
            out.push(vec![n - 1]);
        }
        return out;
    }
    let range = match leaves {
        Some(l) => l..=l,
        None => 2..=n - 1,
    };
    for legs in range {
        if legs < 2 || legs > n - 1 {
            continue;
        }
        if legs == 2 {
            out.push(vec![n - 1]);
            continue;
        }
        partitions(n - 1, legs, n - 1, &mut Vec::new(), &mut out);
    }
    out
}

fn partitions(total: usize, parts: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if total == 0 {
            out.push(acc.clone());
        }
        return;
    }
    if total < parts {
        return;
    }
    let hi = max.min(total - (parts - 1));
    for first in (1..=hi).rev() {
        if first * parts < total {
            break;
        }
        acc.push(first);
        partitions(total - first, parts - 1, first, acc, out);
        acc.pop();
    }
}

pub fn free_trees(n: usize) -> Result<TreeStream> {
    TreeStream::new(Family::AllTrees, n)
}

pub fn caterpillars(n: usize) -> Result<TreeStream> {
    TreeStream::new(Family::Caterpillars, n)
}

pub fn family_stream(family: Family, n: usize) -> Result<TreeStream> {
    TreeStream::new(family, n)
}

/// Every labeled tree on `0..n` via Prüfer sequences, `n^(n-2)` in all.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        if n == 1 {
            return Tree::trivial();
        }
        let mut seq = vec![0usize; len];
        for x in seq.iter_mut() {
            *x = code % n;
            code /= n;
        }
        Tree::from_prufer(&seq).expect("valid Prüfer sequence")
    })
}
