//! Named tree families, their closed-form subtree counts, and the exact
//! difference polynomials used to locate optimal parameters.
//!
//! Labelings are fixed so that built trees are reproducible: the two hubs of
//! a double star or bridge come first, joined by the interior path, and
//! pendant structure follows.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{choose2, choose3, int, pow2, ratio, Rational};
use crate::tree::Tree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `P_n`.
    Path(usize),
    /// `K_{1,n-1}`, order `n`.
    Star(usize),
    /// Aster of order `n` whose `legs` paths differ in order by at most one.
    BalancedAster { n: usize, legs: usize },
    /// Two `K_{1,s}` centers joined by a path of order `t`.
    Baton { s: usize, t: usize },
    /// `D_n(r, s)`, interior path of order `n - r - s - 2`.
    Dds { n: usize, r: usize, s: usize },
    /// Centers of two `P_{2s+1}` joined by a path of order `t`.
    Bridge { s: usize, t: usize },
    /// Paths of orders `p` and `q` joined at internal positions (1-based)
    /// by a path of order `interior`.
    Stickman {
        p: usize,
        q: usize,
        attach_p: usize,
        attach_q: usize,
        interior: usize,
    },
    /// `P_n` with its vertex at 1-based `position` identified with `v` of `q`.
    Glued {
        q: Tree,
        v: usize,
        path_len: usize,
        position: usize,
    },
    /// Spine of `leaves.len()` vertices, spine vertex `i` carrying
    /// `leaves[i]` pendant leaves.
    Caterpillar { leaves: Vec<usize> },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

impl FamilySpec {
    /// Order of the tree this spec describes, after validation.
    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Path(n) | FamilySpec::Star(n) => *n,
            FamilySpec::BalancedAster { n, .. } | FamilySpec::Dds { n, .. } => *n,
            FamilySpec::Baton { s, t } => 2 * s + t + 2,
            FamilySpec::Bridge { s, t } => 4 * s + t + 2,
            FamilySpec::Stickman { p, q, interior, .. } => p + q + interior,
            FamilySpec::Glued { q, path_len, .. } => q.order() + path_len - 1,
            FamilySpec::Caterpillar { leaves } => leaves.len() + leaves.iter().sum::<usize>(),
        })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Star(n) if n == 0 => Err(invalid("order must be at least 1")),
            FamilySpec::BalancedAster { n, legs } => {
                if n == 0 {
                    Err(invalid("order must be at least 1"))
                } else if legs >= 3 && n < legs + 1 {
                    Err(invalid("an aster with ℓ ≥ 3 legs needs order at least ℓ + 1"))
                } else if legs == 0 && n > 1 {
                    Err(invalid("a nontrivial aster has at least one leg"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Baton { s: 0, .. } => Err(invalid("baton needs s ≥ 1")),
            FamilySpec::Bridge { s: 0, .. } => Err(invalid("bridge needs s ≥ 1")),
            FamilySpec::Dds { n, r, s } => {
                if r == 0 || s == 0 {
                    Err(invalid("double star needs r ≥ 1 and s ≥ 1"))
                } else if n < r + s + 2 {
                    Err(invalid("double star needs n ≥ r + s + 2"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Stickman { p, q, attach_p, attach_q, .. } => {
                if p < 3 || q < 3 {
                    Err(invalid("stickman paths need order at least 3"))
                } else if !(2..p).contains(&attach_p) || !(2..q).contains(&attach_q) {
                    Err(invalid("stickman attachments must be internal path vertices"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Glued { ref q, v, path_len, position } => {
                q.check_vertex(v)?;
                if position == 0 || position > path_len {
                    Err(invalid("glue position must satisfy 1 ≤ s ≤ path_len"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Caterpillar { ref leaves } => {
                if leaves.is_empty() {
                    Err(invalid("caterpillar needs a nonempty spine"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::BalancedAster { n, legs } => write!(f, "aster:n={n},legs={legs}"),
            FamilySpec::Baton { s, t } => write!(f, "baton:s={s},t={t}"),
            FamilySpec::Dds { n, r, s } => write!(f, "dds:n={n},r={r},s={s}"),
            FamilySpec::Bridge { s, t } => write!(f, "bridge:s={s},t={t}"),
            FamilySpec::Stickman { p, q, attach_p, attach_q, interior } => write!(
                f,
                "stickman:p={p},q={q},ap={attach_p},aq={attach_q},h={interior}"
            ),
            FamilySpec::Glued { q, v, path_len, position } => {
                write!(f, "glued:q=[")?;
                for (i, (a, b)) in q.edges().into_iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                write!(f, "],v={v},n={path_len},s={position}")
            }
            FamilySpec::Caterpillar { leaves } => {
                write!(f, "caterpillar:")?;
                for (i, a) in leaves.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
        }
    }
}

struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    fn new(order_hint: usize) -> Self {
        Builder {
            edges: Vec::with_capacity(order_hint),
            next: 0,
        }
    }

    fn vertex(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Hangs a path of `k` new vertices off `from`; returns its far end.
    fn hang(&mut self, from: usize, k: usize) -> usize {
        let mut prev = from;
        for _ in 0..k {
            let w = self.vertex();
            self.edges.push((prev, w));
            prev = w;
        }
        prev
    }

    fn leaves(&mut self, at: usize, k: usize) {
        for _ in 0..k {
            self.hang(at, 1);
        }
    }

    fn finish(self) -> Tree {
        if self.next == 1 {
            Tree::trivial()
        } else {
            Tree::from_edges_unchecked(self.next, &self.edges)
        }
    }
}

/// Two hubs `0` and `t + 1` joined through interior vertices `1..=t`.
fn two_hubs(b: &mut Builder, t: usize) -> (usize, usize) {
    let a = b.vertex();
    let far = b.hang(a, t + 1);
    (a, far)
}

pub fn build(spec: &FamilySpec) -> Result<Tree> {
    let n = spec.order()?;
    let mut b = Builder::new(n);
    match spec {
        FamilySpec::Path(n) => {
            let root = b.vertex();
            b.hang(root, n - 1);
        }
        FamilySpec::Star(n) => {
            let hub = b.vertex();
            b.leaves(hub, n - 1);
        }
        FamilySpec::BalancedAster { n, legs } => {
            let hub = b.vertex();
            if *legs <= 2 {
                // a path, centered on the hub
                let rest = n - 1;
                if *legs == 2 {
                    b.hang(hub, rest - rest / 2);
                    b.hang(hub, rest / 2);
                } else {
                    b.hang(hub, rest);
                }
            } else {
                let (q, r) = ((n - 1) / legs, (n - 1) % legs);
                for i in 0..*legs {
                    b.hang(hub, q + usize::from(i < r));
                }
            }
        }
        FamilySpec::Baton { s, t } => {
            let (x, y) = two_hubs(&mut b, *t);
            b.leaves(x, *s);
            b.leaves(y, *s);
        }
        FamilySpec::Dds { n, r, s } => {
            let (x, y) = two_hubs(&mut b, n - r - s - 2);
            b.leaves(x, *r);
            b.leaves(y, *s);
        }
        FamilySpec::Bridge { s, t } => {
            let (x, y) = two_hubs(&mut b, *t);
            for hub in [x, y] {
                b.hang(hub, *s);
                b.hang(hub, *s);
            }
        }
        FamilySpec::Stickman { p, q, attach_p, attach_q, interior } => {
            let (x, y) = two_hubs(&mut b, *interior);
            for (hub, len, at) in [(x, p, attach_p), (y, q, attach_q)] {
                b.hang(hub, at - 1);
                b.hang(hub, len - at);
            }
        }
        FamilySpec::Glued { q, v, path_len, position } => {
            return Tree::path(*path_len).glue(position - 1, q, *v);
        }
        FamilySpec::Caterpillar { leaves } => {
            let first = b.vertex();
            b.hang(first, leaves.len() - 1);
            for (i, &k) in leaves.iter().enumerate() {
                b.leaves(i, k);
            }
        }
    }
    Ok(b.finish())
}

/// Census of a double star's subtrees by how many hubs they contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdsCensus {
    /// Count and total order of subtrees containing neither or both hubs.
    pub a: BigInt,
    pub a_bar: BigInt,
    /// Count and total order of subtrees containing exactly one hub.
    pub b: BigInt,
    pub b_bar: BigInt,
}

/// `(Φ(1), Φ'(1))` from a closed form, with an optional census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCounts {
    pub count: BigUint,
    pub total: BigUint,
    pub breakdown: Option<DdsCensus>,
}

impl ClosedFormCounts {
    fn new(count: BigInt, total: BigInt) -> Self {
        ClosedFormCounts {
            count: count.to_biguint().expect("closed-form count is nonnegative"),
            total: total.to_biguint().expect("closed-form total is nonnegative"),
            breakdown: None,
        }
    }

    pub fn mean(&self) -> Rational {
        crate::exact::quotient(&self.total, &self.count)
    }
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn p2(k: usize) -> BigInt {
    pow2(k as u64)
}

pub fn path_counts(n: usize) -> Result<ClosedFormCounts> {
    if n == 0 {
        return Err(invalid("order must be at least 1"));
    }
    Ok(ClosedFormCounts::new(choose2(&big(n + 1)), choose3(&big(n + 2))))
}

/// Subtrees of `P_n` containing its `s`-th vertex.
pub fn path_local_counts(n: usize, s: usize) -> Result<ClosedFormCounts> {
    if s == 0 || s > n {
        return Err(invalid("path position must satisfy 1 ≤ s ≤ n"));
    }
    let c = big(s * (n - s + 1));
    let total = &c * big(n + 1) / 2u32;
    Ok(ClosedFormCounts::new(c, total))
}

/// `K_{1,n-1}`.
pub fn star_counts(n: usize) -> Result<ClosedFormCounts> {
    match n {
        0 => Err(invalid("order must be at least 1")),
        1 => Ok(ClosedFormCounts::new(BigInt::one(), BigInt::one())),
        _ => {
            let k = n - 1;
            let count = big(k) + p2(k);
            let total = big(k) + p2(k) + big(k) * p2(k - 1);
            Ok(ClosedFormCounts::new(count, total))
        }
    }
}

/// `D_n(s, 2m - s)` through the census `A + B(s)`, `Ā + B̄(s)`.
pub fn dds_counts(n: usize, m: usize, s: usize) -> Result<ClosedFormCounts> {
    if m == 0 || s == 0 || s >= 2 * m {
        return Err(invalid("double star census needs 1 ≤ s ≤ 2m − 1"));
    }
    if n < 2 * m + 2 {
        return Err(invalid("double star census needs n ≥ 2m + 2"));
    }
    let (nb, mb, sb) = (big(n), big(m), big(s));
    let k = big(n - 2 * m - 1);
    let a = big(2 * m) + choose2(&k) + p2(2 * m);
    let a_bar = big(2 * m) + choose3(&big(n - 2 * m)) + (&nb - &mb) * p2(2 * m);
    let b = &k * (p2(s) + p2(2 * m - s));
    let b_bar = &k * ((big(n - 2 * m) + &sb) * p2(s) + (&nb - &sb) * p2(2 * m - s)) / 2u32;
    let mut out = ClosedFormCounts::new(&a + &b, &a_bar + &b_bar);
    out.breakdown = Some(DdsCensus { a, a_bar, b, b_bar });
    Ok(out)
}

/// `D_n(r, s)` for any leaf split, including odd totals.
pub fn dds_counts_general(n: usize, r: usize, s: usize) -> Result<ClosedFormCounts> {
    FamilySpec::Dds { n, r, s }.validate()?;
    let t = big(n - r - s - 2);
    let one_hub = |k: usize| -> (BigInt, BigInt) {
        let count = (&t + 1u32) * p2(k);
        // Σ over leaf subsets L and interior extensions j of (1 + |L| + j)
        let total = (&t + 1u32) * (&t + 2u32 + big(k)) * p2(k) / 2u32;
        (count, total)
    };
    let (cr, tr) = one_hub(r);
    let (cs, ts) = one_hub(s);
    let count = big(r + s) + choose2(&(&t + 1u32)) + cr + cs + p2(r + s);
    let total = big(r + s)
        + choose3(&(&t + 2u32))
        + tr
        + ts
        + (big(2 * n) - big(r + s)) * p2(r + s) / 2u32;
    Ok(ClosedFormCounts::new(count, total))
}

/// The baton `D_n(s, s)`.
pub fn baton_counts(n: usize, s: usize) -> Result<ClosedFormCounts> {
    if s == 0 || n < 2 * s + 2 {
        return Err(invalid("baton needs s ≥ 1 and n ≥ 2s + 2"));
    }
    let (nb, sb) = (big(n), big(s));
    let k = big(n - 2 * s - 1);
    let count = big(2 * s) + choose2(&k) + 2u32 * &k * p2(s) + p2(2 * s);
    let total = big(2 * s)
        + choose3(&big(n - 2 * s))
        + &k * (&nb - &sb) * p2(s)
        + (&nb - &sb) * p2(2 * s);
    Ok(ClosedFormCounts::new(count, total))
}

pub fn bridge_counts(s: usize, t: usize) -> Result<ClosedFormCounts> {
    if s == 0 {
        return Err(invalid("bridge needs s ≥ 1"));
    }
    let s1 = big(s + 1);
    let t1 = big(t + 1);
    let sq = &s1 * &s1;
    let count = 4u32 * choose2(&s1) + choose2(&t1) + 2u32 * &sq * &t1 + &sq * &sq;
    let total = 4u32 * choose3(&big(s + 2))
        + choose3(&big(t + 2))
        + big(2 * s + t + 2) * &sq * (&t1 + &sq);
    Ok(ClosedFormCounts::new(count, total))
}

/// [`bridge_counts`] in fixed width, `(count, total)`; `None` on overflow.
pub fn bridge_counts_u128(s: usize, t: usize) -> Option<(u128, u128)> {
    let (s, t) = (s as u128, t as u128);
    let s1 = s.checked_add(1)?;
    let t1 = t.checked_add(1)?;
    let sq = s1.checked_mul(s1)?;
    let c2 = |k: u128| k.checked_mul(k.checked_sub(1)?)?.checked_div(2);
    let c3 = |k: u128| k.checked_mul(k - 1)?.checked_mul(k.checked_sub(2)?)?.checked_div(6);
    let count = (4 * c2(s1)?)
        .checked_add(c2(t1)?)?
        .checked_add(sq.checked_mul(t1)?.checked_mul(2)?)?
        .checked_add(sq.checked_mul(sq)?)?;
    let total = (4 * c3(s + 2)?)
        .checked_add(c3(t + 2)?)?
        .checked_add((2 * s + t + 2).checked_mul(sq)?.checked_mul(t1.checked_add(sq)?)?)?;
    Some((count, total))
}

/// `B_n(s) = B(s, n - 4s)`, a bridge of order `n + 2`.
pub fn bridge_counts_indexed(n: usize, s: usize) -> Result<ClosedFormCounts> {
    if s == 0 || 4 * s > n {
        return Err(invalid("indexed bridge needs 1 ≤ s ≤ n/4"));
    }
    bridge_counts(s, n - 4 * s)
}

/// `Φ'_X Φ_Y − Φ'_Y Φ_X`, positive exactly when `M_X > M_Y`.
pub fn cross_difference(x: &ClosedFormCounts, y: &ClosedFormCounts) -> BigInt {
    BigInt::from(&x.total * &y.count) - BigInt::from(&y.total * &x.count)
}

/// `f_n(s)`, the sign of `M(D_n(s+1, s+1)) − M(D_n(s, s))`.
pub fn baton_difference(n: usize, s: usize) -> Result<BigInt> {
    Ok(cross_difference(&baton_counts(n, s + 1)?, &baton_counts(n, s)?))
}

/// `g_n(s)`, the sign of `M(B_n(s+1)) − M(B_n(s))`.
pub fn bridge_difference_up(n: usize, s: usize) -> Result<BigInt> {
    Ok(cross_difference(
        &bridge_counts_indexed(n, s + 1)?,
        &bridge_counts_indexed(n, s)?,
    ))
}

/// `h_n(s)`, the sign of `M(B_n(s−1)) − M(B_n(s))`.
pub fn bridge_difference_down(n: usize, s: usize) -> Result<BigInt> {
    if s < 2 {
        return Err(invalid("h_n(s) needs s ≥ 2"));
    }
    Ok(cross_difference(
        &bridge_counts_indexed(n, s - 1)?,
        &bridge_counts_indexed(n, s)?,
    ))
}

/// `h_{n,m}(s)`, the sign of `M(D_n(m, m)) − M(D_n(s, 2m − s))`.
pub fn dds_difference(n: usize, m: usize, s: usize) -> Result<BigInt> {
    Ok(cross_difference(&dds_counts(n, m, m)?, &dds_counts(n, m, s)?))
}

/// Difference polynomials that have a printed coefficient list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DifferenceFamily {
    /// `f_n(s) = c4 n^4 + c3 n^3 + c2 n^2 − c1 n − c0`.
    BatonF,
    /// `g_n(s)`, same sign pattern as `f_n`.
    BridgeG,
    /// `h_n(s) = c0 + c1 n − c2 n^2 − c3 n^3 − c4 n^4`.
    BridgeH,
}

/// Integer polynomial in `s`, coefficients from the highest power down,
/// scaled by `1/den`.
fn sp(s: &BigInt, den: i64, coeffs: &[i64]) -> Rational {
    let mut acc = BigInt::zero();
    for &c in coeffs {
        acc = acc * s + c;
    }
    Rational::new(acc, int(den))
}

impl DifferenceFamily {
    /// `[c0, c1, c2, c3, c4]` at `s`.
    pub fn coefficients(self, s: u64) -> [Rational; 5] {
        let sb = BigInt::from(s);
        let s = &sb;
        match self {
            DifferenceFamily::BatonF => baton_coefficients(s),
            DifferenceFamily::BridgeG => [
                sp(s, 1, &[2, -8, -32, -28, 32, 64, 76, 38, 8]),
                sp(s, 3, &[42, 120, 198, 160, 171, 59, 5]),
                sp(s, 6, &[12, 0, 12, -36, 34, 23]),
                sp(s, 3, &[4, 3, 11, 5]),
                sp(s, 6, &[2, 1]),
            ],
            DifferenceFamily::BridgeH => [
                sp(s, 1, &[2, -24, 80, -116, 112, -96, 100, -70, 20]),
                sp(s, 3, &[42, -132, 228, -272, 309, -247, 77]),
                sp(s, 6, &[12, -60, 132, -192, 202, -71]),
                sp(s, 3, &[4, -9, 17, -7]),
                sp(s, 6, &[2, -1]),
            ],
        }
    }

    /// Evaluates the coefficient form at `(n, s)`.
    pub fn evaluate(self, n: u64, s: u64) -> Rational {
        self.evaluate_with(&self.coefficients(s), n)
    }

    /// Evaluates at `n` with coefficients already computed for some `s`.
    pub fn evaluate_with(self, coeffs: &[Rational; 5], n: u64) -> Rational {
        let [c0, c1, c2, c3, c4] = coeffs;
        let n = Rational::from_integer(BigInt::from(n));
        let n2 = &n * &n;
        let n3 = &n2 * &n;
        let n4 = &n3 * &n;
        let lead = c4 * n4 + c3 * n3 + c2 * n2;
        let tail = c1 * n + c0;
        match self {
            DifferenceFamily::BatonF | DifferenceFamily::BridgeG => lead - tail,
            DifferenceFamily::BridgeH => tail - lead,
        }
    }

    /// The same quantity from the closed-form counts.
    pub fn definitional(self, n: usize, s: usize) -> Result<BigInt> {
        match self {
            DifferenceFamily::BatonF => baton_difference(n, s),
            DifferenceFamily::BridgeG => bridge_difference_up(n, s),
            DifferenceFamily::BridgeH => bridge_difference_down(n, s),
        }
    }
}

fn baton_coefficients(s: &BigInt) -> [Rational; 5] {
    let e = u64::try_from(s).expect("s fits in u64");
    let q1 = Rational::from_integer(pow2(e));
    let q2 = Rational::from_integer(pow2(2 * e));
    let q3 = Rational::from_integer(pow2(3 * e));
    let q4 = Rational::from_integer(pow2(4 * e));
    let c4 = ratio(1, 6) * &q1 - ratio(1, 6);
    let c3 = q2.clone() - sp(s, 6, &[5, 14]) * &q1 + sp(s, 3, &[4, 4]);
    let c2 = ratio(2, 1) * &q3 - sp(s, 2, &[9, 16]) * &q2 + sp(s, 6, &[6, 84, 59]) * &q1
        - sp(s, 6, &[24, 60, 23]);
    let c1 = sp(s, 1, &[6, 8]) * &q3
        - sp(s, 2, &[12, 71, 42]) * &q2
        - sp(s, 6, &[4, -156, -347, -106]) * &q1
        - sp(s, 3, &[16, 72, 82, 14]);
    let c0 = ratio(4, 1) * &q4 - sp(s, 1, &[4, 18, 14]) * &q3
        + sp(s, 1, &[2, 33, 60, 18]) * &q2
        + sp(s, 3, &[4, -44, -199, -208, -30]) * &q1
        + sp(s, 3, &[8, 56, 118, 82, 6]);
    [c0, c1, c2, c3, c4]
}

/// The five coefficient functions of `f_n(s)`, `[c0, c1, c2, c3, c4]`.
pub fn appendix_b_coefficients(s: u64) -> [Rational; 5] {
    DifferenceFamily::BatonF.coefficients(s)
}

/// `g_{n,m}(s)` from the factorization
/// `h_{n,m}(s) = 2^{-s} (n − 2m − 1)(2^m − 2^s)^2 g_{n,m}(s)`.
pub fn appendix_a_g(n: usize, m: usize, s: usize) -> Result<Rational> {
    if s == 0 || s >= m {
        return Err(invalid("g_{n,m}(s) needs 1 ≤ s ≤ m − 1"));
    }
    let census = dds_counts(n, m, s)?.breakdown.expect("dds census");
    let a = Rational::from_integer(census.a);
    let a_bar = Rational::from_integer(census.a_bar);
    let q = |k: usize| Rational::from_integer(p2(k));
    let r = |x: usize| Rational::from_integer(big(x));
    let gap = q(m) - q(s);
    let bracket = r(n) + r(2 * (m - s)) * q(s) / &gap - r(s);
    let tail = r(n - 2 * m - 1) * r(m - s) * (q(m) + q(s)) / &gap * q(m);
    Ok(a_bar - ratio(1, 2) * bracket * a - tail)
}

/// Right-hand side of the factorization identity.
pub fn appendix_a_factored(n: usize, m: usize, s: usize) -> Result<Rational> {
    let g = appendix_a_g(n, m, s)?;
    let gap = Rational::from_integer(p2(m) - p2(s));
    let k = Rational::from_integer(big(n - 2 * m - 1));
    Ok(k * &gap * &gap * g / Rational::from_integer(p2(s)))
}

/// One coefficient inequality together with the range of `s` on which it is
/// claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityOutcome {
    pub label: &'static str,
    pub from_s: u64,
    pub checked: u64,
    /// First `s` in the claimed range where the inequality fails.
    pub first_violation: Option<u64>,
    /// Values of `s` below the claimed range where it also holds.
    pub holds_below: Vec<u64>,
}

pub struct CoefficientInequality {
    pub label: &'static str,
    pub from_s: u64,
    pub holds: fn(u64) -> bool,
}

fn lhs(i: usize, s: u64) -> Rational {
    appendix_b_coefficients(s)[i].clone()
}

fn p2r(k: u64) -> Rational {
    Rational::from_integer(pow2(k))
}

/// The ten bounds on `c0..c4` of `f_n(s)`.
pub const APPENDIX_B: [CoefficientInequality; 10] = [
    CoefficientInequality { label: "(i) c4 < 2^s/6", from_s: 1, holds: |s| lhs(4, s) < ratio(1, 6) * p2r(s) },
    CoefficientInequality { label: "(ii) c3 < 2^{2s}", from_s: 1, holds: |s| lhs(3, s) < p2r(2 * s) },
    CoefficientInequality { label: "(iii) c2 < 2·2^{3s}", from_s: 1, holds: |s| lhs(2, s) < ratio(2, 1) * p2r(3 * s) },
    CoefficientInequality {
        label: "(iv) c1 < (6s+8)·2^{3s}",
        from_s: 1,
        holds: |s| lhs(1, s) < Rational::from_integer(BigInt::from(6 * s + 8)) * p2r(3 * s),
    },
    CoefficientInequality { label: "(v) c0 < 4·2^{4s}", from_s: 1, holds: |s| lhs(0, s) < ratio(4, 1) * p2r(4 * s) },
    CoefficientInequality { label: "(vi) c4 > 0", from_s: 1, holds: |s| lhs(4, s).is_positive() },
    CoefficientInequality { label: "(vii) c3 > 0", from_s: 2, holds: |s| lhs(3, s).is_positive() },
    CoefficientInequality { label: "(viii) c2 > (5/3)·2^{3s}", from_s: 7, holds: |s| lhs(2, s) > ratio(5, 3) * p2r(3 * s) },
    CoefficientInequality { label: "(ix) c1 > 0", from_s: 5, holds: |s| lhs(1, s).is_positive() },
    CoefficientInequality { label: "(x) c0 > (19/6)·2^{4s}", from_s: 10, holds: |s| lhs(0, s) > ratio(19, 6) * p2r(4 * s) },
];

fn bridge_coeff(family: DifferenceFamily, i: usize, s: u64) -> Rational {
    family.coefficients(s)[i].clone()
}

fn spow(s: u64, k: u32, num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(s).pow(k) * num, int(den))
}

/// The coefficient bounds used for the two bridge differences.
pub const BRIDGE_BOUNDS: [CoefficientInequality; 9] = [
    CoefficientInequality {
        label: "g: c3 > (4/3)s^3",
        from_s: 1,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeG, 3, s) > spow(s, 3, 4, 3),
    },
    CoefficientInequality {
        label: "g: c2 > 2s^5",
        from_s: 1,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeG, 2, s) > spow(s, 5, 2, 1),
    },
    CoefficientInequality {
        label: "g: c1 < 18s^6",
        from_s: 12,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeG, 1, s) < spow(s, 6, 18, 1),
    },
    CoefficientInequality {
        label: "g: c0 < 2s^8",
        from_s: 2,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeG, 0, s) < spow(s, 8, 2, 1),
    },
    CoefficientInequality {
        label: "h: c0 > 2s^8 − 24s^7",
        from_s: 1,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeH, 0, s) > spow(s, 8, 2, 1) - spow(s, 7, 24, 1),
    },
    CoefficientInequality {
        label: "h: c1 > 8s^6",
        from_s: 6,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeH, 1, s) > spow(s, 6, 8, 1),
    },
    CoefficientInequality {
        label: "h: c2 < 2s^5",
        from_s: 2,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeH, 2, s) < spow(s, 5, 2, 1),
    },
    CoefficientInequality {
        label: "h: c3 < (4/3)s^3",
        from_s: 2,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeH, 3, s) < spow(s, 3, 4, 3),
    },
    CoefficientInequality {
        label: "h: c4 < s/3",
        from_s: 1,
        holds: |s| bridge_coeff(DifferenceFamily::BridgeH, 4, s) < spow(s, 1, 1, 3),
    },
];

/// Evaluates each inequality for every `s` in `[1, s_max]`, asserting only
/// on its claimed range.
pub fn check_inequalities(list: &[CoefficientInequality], s_max: u64) -> Vec<InequalityOutcome> {
    list.iter()
        .map(|ineq| {
            let mut out = InequalityOutcome {
                label: ineq.label,
                from_s: ineq.from_s,
                checked: 0,
                first_violation: None,
                holds_below: Vec::new(),
            };
            for s in 1..=s_max {
                let ok = (ineq.holds)(s);
                if s < ineq.from_s {
                    if ok {
                        out.holds_below.push(s);
                    }
                } else {
                    out.checked += 1;
                    if !ok && out.first_violation.is_none() {
                        out.first_violation = Some(s);
                    }
                }
            }
            out
        })
        .collect()
}

pub fn appendix_b_check(s_max: u64) -> Vec<InequalityOutcome> {
    check_inequalities(&APPENDIX_B, s_max)
}

/// Leaf lengths of a balanced aster with `legs` legs and order `n`.
pub fn balanced_leg_orders(n: usize, legs: usize) -> Vec<usize> {
    let (q, r) = ((n - 1) / legs, (n - 1) % legs);
    let mut v: Vec<usize> = (0..legs).map(|i| q + usize::from(i < r)).collect();
    v.sort_unstable();
    v
}
