use alloc::vec::Vec;
use core::cmp::Ordering;
use core::time::Duration;

use num_bigint::BigUint;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumeration::{Family, TreeStream};
use crate::error::Result;
use crate::exact::{quotient, Rational};
use crate::families::{baton_counts, bridge_counts_indexed, bridge_counts_u128, ClosedFormCounts};
use crate::poly::{subtree_totals, subtree_totals_u128};
use crate::structure::{is_caterpillar, limb_profile, stem, twigs};
use crate::tree::Tree;

/// `(total, count)` of a tree, fixed width when it fits.
#[derive(Clone, Debug)]
enum Score {
    Small(u128, u128),
    Big(BigUint, BigUint),
}

impl Score {
    fn of(t: &Tree) -> Score {
        match subtree_totals_u128(t) {
            Some(s) => Score::Small(s.total, s.count),
            None => {
                let s = subtree_totals(t);
                Score::Big(s.total, s.count)
            }
        }
    }

    fn from_counts(c: &ClosedFormCounts) -> Score {
        Score::Big(c.total.clone(), c.count.clone())
    }

    fn big(&self) -> (BigUint, BigUint) {
        match self {
            Score::Small(t, c) => (BigUint::from(*t), BigUint::from(*c)),
            Score::Big(t, c) => (t.clone(), c.clone()),
        }
    }

    fn cmp(&self, other: &Score) -> Ordering {
        if let (Score::Small(ta, ca), Score::Small(tb, cb)) = (self, other) {
            if let (Some(x), Some(y)) = (ta.checked_mul(*cb), tb.checked_mul(*ca)) {
                return x.cmp(&y);
            }
        }
        let ((ta, ca), (tb, cb)) = (self.big(), other.big());
        (ta * cb).cmp(&(tb * ca))
    }

    fn mean(&self) -> Rational {
        let (t, c) = self.big();
        quotient(&t, &c)
    }
}

fn better(a: Option<Score>, b: Option<Score>) -> Option<Score> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if a.cmp(&b) == Ordering::Less { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Running argmax over a stream of trees. Partial accumulators from
/// disjoint shards merge into the same result in any order.
#[derive(Clone, Debug, Default)]
pub struct SearchAccumulator {
    examined: u64,
    best: Option<Score>,
    winners: Vec<Tree>,
    runner_up: Option<Score>,
}

impl SearchAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }

    pub fn push(&mut self, t: Tree) {
        self.examined += 1;
        self.offer(Score::of(&t), alloc::vec![t]);
    }

    fn offer(&mut self, score: Score, trees: Vec<Tree>) {
        match &self.best {
            None => {
                self.best = Some(score);
                self.winners = trees;
            }
            Some(best) => match score.cmp(best) {
                Ordering::Greater => {
                    let old = self.best.replace(score);
                    self.runner_up = better(self.runner_up.take(), old);
                    self.winners = trees;
                }
                Ordering::Equal => self.winners.extend(trees),
                Ordering::Less => self.runner_up = better(self.runner_up.take(), Some(score)),
            },
        }
    }

    pub fn merge(&mut self, other: SearchAccumulator) {
        self.examined += other.examined;
        self.runner_up = better(self.runner_up.take(), other.runner_up);
        if let Some(score) = other.best {
            self.offer(score, other.winners);
        }
    }

    /// `None` if nothing was examined.
    pub fn finish(self, family: Family, n: usize) -> Option<SearchReport> {
        let best = self.best?;
        let mut winners: Vec<Winner> = self.winners.iter().map(Winner::describe).collect();
        winners.sort_by(|a, b| a.code.cmp(&b.code));
        winners.dedup_by(|a, b| a.code == b.code);
        Some(SearchReport {
            family,
            n,
            examined: self.examined,
            winners,
            mean: best.mean(),
            runner_up: self.runner_up.map(|s| s.mean()),
            wall_time: None,
        })
    }
}

/// One maximizer of a search, with the structural data the corollaries
/// talk about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Winner {
    pub code: CanonicalCode,
    pub edges: Vec<(usize, usize)>,
    pub order: usize,
    pub is_caterpillar: bool,
    pub leaves: usize,
    pub twigs: usize,
    /// Sorted limb orders per core vertex; `None` for paths.
    pub limb_orders: Option<Vec<Vec<usize>>>,
}

impl Winner {
    pub fn describe(t: &Tree) -> Winner {
        Winner {
            code: canonical_code(t),
            edges: t.edges(),
            order: t.order(),
            is_caterpillar: is_caterpillar(t),
            leaves: t.leaf_count(),
            twigs: twigs(t).len(),
            limb_orders: limb_profile(t).ok().map(|p| p.limb_orders),
        }
    }

    pub fn tree(&self) -> Tree {
        Tree::with_order(self.order, &self.edges, self.order).expect("winner edges form a tree")
    }

    /// Every limb has order one.
    pub fn limbs_all_order_one(&self) -> bool {
        self.limb_orders
            .as_ref()
            .is_some_and(|o| o.iter().flatten().all(|&k| k == 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub family: Family,
    pub n: usize,
    pub examined: u64,
    /// All maximizers, sorted by canonical code.
    pub winners: Vec<Winner>,
    pub mean: Rational,
    /// Largest mean strictly below `mean`, if any member attains one.
    pub runner_up: Option<Rational>,
    pub wall_time: Option<Duration>,
}

/// Exhaustive argmax of the mean subtree order over `stream`.
pub fn optimal_in(stream: TreeStream) -> Option<SearchReport> {
    let family = stream.family().clone();
    let n = stream.order();
    let mut acc = SearchAccumulator::new();
    for t in stream {
        acc.push(t);
    }
    acc.finish(family, n)
}

pub fn optimal(family: Family, n: usize) -> Result<Option<SearchReport>> {
    Ok(optimal_in(TreeStream::new(family, n)?))
}

/// Leaf counts along the spine of a caterpillar, read in the direction that
/// makes the sequence lexicographically smaller. `None` for non-caterpillars
/// and for trees with fewer than three vertices.
pub fn caterpillar_leaf_sequence(t: &Tree) -> Option<Vec<usize>> {
    let s = stem(t)?;
    if !crate::structure::is_path(&s.tree) {
        return None;
    }
    let k = s.tree.order();
    let start = (0..k).find(|&v| s.tree.degree(v) <= 1)?;
    let mut seq = Vec::with_capacity(k);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        let v = s.vertices[cur];
        seq.push(t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count());
        match s.tree.neighbors(cur).iter().copied().find(|&w| w != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    Some(if rev < seq { rev } else { seq })
}

/// Argmax of a one-parameter closed-form family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamArgmax {
    pub n: usize,
    /// Every maximizing parameter, ascending.
    pub values: Vec<usize>,
    pub mean: Rational,
    /// Parameter values actually evaluated.
    pub evaluated: usize,
}

/// An upper bound on every mean from parameter `s` on; `strict` when the
/// bound itself is never attained.
struct Bound<'a> {
    at: &'a dyn Fn(usize) -> usize,
    strict: bool,
}

/// Scans `s = 1, 2, ..` while `legal(s)`, stopping early once the bound
/// shows that no later parameter can reach the best mean so far.
fn scan(
    n: usize,
    legal: impl Fn(usize) -> bool,
    score: impl Fn(usize) -> Score,
    bound: Option<Bound<'_>>,
) -> Option<ParamArgmax> {
    let mut best: Option<Score> = None;
    let mut values = Vec::new();
    let mut evaluated = 0;
    let mut s = 1;
    while legal(s) {
        if let (Some(b), Some(bound)) = (&best, &bound) {
            let cap = Score::Small((bound.at)(s) as u128, 1);
            match b.cmp(&cap) {
                Ordering::Greater => break,
                Ordering::Equal if bound.strict => break,
                _ => {}
            }
        }
        let sc = score(s);
        evaluated += 1;
        match best.as_ref().map(|b| sc.cmp(b)) {
            None | Some(Ordering::Greater) => {
                best = Some(sc);
                values.clear();
                values.push(s);
            }
            Some(Ordering::Equal) => values.push(s),
            Some(Ordering::Less) => {}
        }
        s += 1;
    }
    best.map(|b| ParamArgmax {
        n,
        values,
        mean: b.mean(),
        evaluated,
    })
}

fn baton_score(n: usize, s: usize) -> Score {
    Score::from_counts(&baton_counts(n, s).expect("legal baton"))
}

fn bridge_score(n: usize, s: usize) -> Score {
    match bridge_counts_u128(s, n - 4 * s) {
        Some((c, t)) => Score::Small(t, c),
        None => Score::from_counts(&bridge_counts_indexed(n, s).expect("legal bridge")),
    }
}

/// Optimal `s` among the batons `D_n(s, s)`. Every baton satisfies
/// `M < n − s` (it has `2s` leaves), which ends the scan early.
pub fn optimal_baton_s(n: usize) -> Option<ParamArgmax> {
    let at = |s: usize| n - s;
    scan(n, |s| 2 * s + 2 <= n, |s| baton_score(n, s), Some(Bound { at: &at, strict: true }))
}

pub fn baton_argmax_unpruned(n: usize) -> Option<ParamArgmax> {
    scan(n, |s| 2 * s + 2 <= n, |s| baton_score(n, s), None)
}

/// Optimal `s` among the bridges `B(s, n − 4s)` of order `n + 2`. Their
/// limb weight `4s` gives `M ≤ n + 2 − 2s`.
pub fn optimal_bridge_s(n: usize) -> Option<ParamArgmax> {
    let at = |s: usize| (n + 2).saturating_sub(2 * s);
    scan(n, |s| 4 * s <= n, |s| bridge_score(n, s), Some(Bound { at: &at, strict: false }))
}

pub fn bridge_argmax_unpruned(n: usize) -> Option<ParamArgmax> {
    scan(n, |s| 4 * s <= n, |s| bridge_score(n, s), None)
}
