//! Subtree polynomials and mean subtree orders.
//!
//! Rooting a tree at any vertex, the subtrees whose highest vertex is `v`
//! are counted by `G_v(x) = x * prod_{c child of v} (1 + G_c(x))`. The global
//! polynomial is the sum of all `G_v`, and the local polynomial at `v` is
//! `G_v` when the tree is rooted at `v`. When only `Φ(1)` and `Φ'(1)` are
//! needed the same recursion runs on the pair `(G_v(1), G_v'(1))`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{quotient, Rational};
use crate::tree::Tree;

/// Default ceiling on the number of subtrees the brute-force oracle will
/// enumerate.
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Global,
    LocalAt(usize),
}

/// Dense coefficient vector `a_0 .. a_n` with `a_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreePolynomial {
    coeffs: Vec<BigUint>,
    kind: PolyKind,
}

impl SubtreePolynomial {
    pub fn from_coeffs(kind: PolyKind, coeffs: Vec<BigUint>) -> Self {
        SubtreePolynomial { coeffs, kind }
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    /// Order of the underlying tree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All coefficients, index `k` holding the coefficient of `x^k`.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `Φ(1)`, the number of subtrees counted.
    pub fn count(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `Φ'(1)`, the total order of the subtrees counted.
    pub fn total(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigUint::from(k))
            .sum()
    }

    pub fn totals(&self) -> SubtreeTotals {
        SubtreeTotals {
            count: self.count(),
            total: self.total(),
        }
    }

    pub fn mean(&self) -> Rational {
        quotient(&self.total(), &self.count())
    }
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `G_v` for every vertex with the tree rooted at `root`.
fn rooted_polynomials(t: &Tree, root: usize) -> Vec<Vec<BigUint>> {
    let (order, parent) = t.bfs(root);
    let mut g: Vec<Vec<BigUint>> = vec![Vec::new(); t.order()];
    for &v in order.iter().rev() {
        // product of (1 + G_c), shifted by one for the factor x
        let mut prod = vec![BigUint::one()];
        for &c in t.neighbors(v) {
            if c == parent[v] {
                continue;
            }
            let mut factor = core::mem::take(&mut g[c]);
            factor[0] += 1u32;
            prod = poly_mul(&prod, &factor);
            g[c] = factor;
            g[c][0] -= 1u32;
        }
        prod.insert(0, BigUint::zero());
        g[v] = prod;
    }
    g
}

fn pad(mut coeffs: Vec<BigUint>, n: usize) -> Vec<BigUint> {
    coeffs.resize(n + 1, BigUint::zero());
    coeffs
}

/// `Φ_T(x)`, counting subtrees of `t` by order.
pub fn subtree_polynomial(t: &Tree) -> SubtreePolynomial {
    let n = t.order();
    let mut sum = vec![BigUint::zero(); n + 1];
    for g in rooted_polynomials(t, 0) {
        for (k, a) in g.into_iter().enumerate() {
            sum[k] += a;
        }
    }
    SubtreePolynomial::from_coeffs(PolyKind::Global, sum)
}

/// `Φ_T(v; x)`, counting subtrees of `t` that contain `v`.
pub fn local_subtree_polynomial(t: &Tree, v: usize) -> Result<SubtreePolynomial> {
    t.check_vertex(v)?;
    let g = rooted_polynomials(t, v).swap_remove(v);
    Ok(SubtreePolynomial::from_coeffs(
        PolyKind::LocalAt(v),
        pad(g, t.order()),
    ))
}

/// `(Φ(1), Φ'(1))`: the number of subtrees and their total order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubtreeTotals<N = BigUint> {
    pub count: N,
    pub total: N,
}

impl SubtreeTotals<BigUint> {
    pub fn mean(&self) -> Rational {
        quotient(&self.total, &self.count)
    }
}

impl SubtreeTotals<u128> {
    pub fn widen(&self) -> SubtreeTotals<BigUint> {
        SubtreeTotals {
            count: BigUint::from(self.count),
            total: BigUint::from(self.total),
        }
    }
}

/// Compares `a.total / a.count` with `b.total / b.count` exactly.
pub fn compare_means(a: &SubtreeTotals<u128>, b: &SubtreeTotals<u128>) -> core::cmp::Ordering {
    match (a.total.checked_mul(b.count), b.total.checked_mul(a.count)) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => {
            let (a, b) = (a.widen(), b.widen());
            (&a.total * &b.count).cmp(&(&b.total * &a.count))
        }
    }
}

/// `(G_v(1), G_v'(1))` for every vertex, rooted at `root`. `None` on
/// overflow of `N`.
fn rooted_totals<N>(t: &Tree, root: usize) -> Option<Vec<(N, N)>>
where
    N: Clone + Zero + One + CheckedAdd + CheckedMul,
{
    let (order, parent) = t.bfs(root);
    let mut out: Vec<(N, N)> = vec![(N::zero(), N::zero()); t.order()];
    for &v in order.iter().rev() {
        let mut prod = N::one();
        let mut deriv = N::zero();
        for &c in t.neighbors(v) {
            if c == parent[v] {
                continue;
            }
            let (cc, dc) = &out[c];
            let factor = cc.checked_add(&N::one())?;
            deriv = deriv.checked_mul(&factor)?.checked_add(&prod.checked_mul(dc)?)?;
            prod = prod.checked_mul(&factor)?;
        }
        let d = prod.checked_add(&deriv)?;
        out[v] = (prod, d);
    }
    Some(out)
}

fn global_totals<N>(t: &Tree) -> Option<SubtreeTotals<N>>
where
    N: Clone + Zero + One + CheckedAdd + CheckedMul,
{
    let mut count = N::zero();
    let mut total = N::zero();
    for (c, d) in rooted_totals::<N>(t, 0)? {
        count = count.checked_add(&c)?;
        total = total.checked_add(&d)?;
    }
    Some(SubtreeTotals { count, total })
}

pub fn subtree_totals(t: &Tree) -> SubtreeTotals {
    global_totals::<BigUint>(t).expect("BigUint arithmetic cannot overflow")
}

/// Fixed-width variant of [`subtree_totals`]; `None` if any intermediate
/// value overflows.
pub fn subtree_totals_u128(t: &Tree) -> Option<SubtreeTotals<u128>> {
    global_totals::<u128>(t)
}

pub fn local_totals(t: &Tree, v: usize) -> Result<SubtreeTotals> {
    t.check_vertex(v)?;
    let (count, total) = rooted_totals::<BigUint>(t, v)
        .expect("BigUint arithmetic cannot overflow")
        .swap_remove(v);
    Ok(SubtreeTotals { count, total })
}

/// `M_T = Φ'(1) / Φ(1)`.
pub fn mean(t: &Tree) -> Rational {
    subtree_totals(t).mean()
}

/// `M_{T,v}`, the mean order of subtrees containing `v`.
pub fn local_mean(t: &Tree, v: usize) -> Result<Rational> {
    Ok(local_totals(t, v)?.mean())
}

/// `den(T) = M_T / n`.
pub fn density(t: &Tree) -> Rational {
    mean(t) / Rational::from_integer(BigInt::from(t.order()))
}

/// Contracts the connected vertex set `h` to a single vertex, which gets id
/// 0 in the result. Other vertices keep their relative order.
pub fn contract(t: &Tree, h: &[usize]) -> Result<Tree> {
    let n = t.order();
    let mut inside = vec![false; n];
    for &v in h {
        t.check_vertex(v)?;
        if inside[v] {
            return Err(Error::NotConnected);
        }
        inside[v] = true;
    }
    t.induced(h)?;
    let mut id = vec![0usize; n];
    let mut next = 1;
    for v in 0..n {
        if !inside[v] {
            id[v] = next;
            next += 1;
        }
    }
    if next == 1 {
        return Ok(Tree::trivial());
    }
    let edges: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| !(inside[a] && inside[b]))
        .map(|(a, b)| (id[a], id[b]))
        .collect();
    Ok(Tree::from_edges_unchecked(next, &edges))
}

/// `M_{T,H}`: mean order of the subtrees containing every vertex of `h`,
/// computed as the local mean of `T/H` at the contracted vertex plus
/// `|H| - 1`.
pub fn mean_containing(t: &Tree, h: &[usize]) -> Result<Rational> {
    let contracted = contract(t, h)?;
    let local = local_mean(&contracted, 0)?;
    Ok(local + Rational::from_integer(BigInt::from(h.len() - 1)))
}

/// Counts subtrees by explicit enumeration of connected vertex sets.
///
/// Each set is generated once, from its smallest vertex `r`: vertices below
/// `r` are banned, and every boundary vertex is branched on (taken or
/// banned). Refuses with [`Error::CapExceeded`] once more than `cap` sets
/// have been produced.
pub fn brute_force_polynomial(t: &Tree, cap: u64) -> Result<SubtreePolynomial> {
    let n = t.order();
    if n > 64 {
        return Err(Error::TooLarge { order: n, cap: 64 });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| t.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    let mut produced = 0u64;
    for r in 0..n {
        let s = 1u64 << r;
        let banned = s - 1;
        grow(&adj, s, adj[r] & !banned, banned, &mut counts, &mut produced, cap)?;
    }
    Ok(SubtreePolynomial::from_coeffs(
        PolyKind::Global,
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

fn grow(
    adj: &[u64],
    set: u64,
    boundary: u64,
    banned: u64,
    counts: &mut [u64],
    produced: &mut u64,
    cap: u64,
) -> Result<()> {
    if boundary == 0 {
        *produced += 1;
        if *produced > cap {
            return Err(Error::CapExceeded(cap));
        }
        counts[set.count_ones() as usize] += 1;
        return Ok(());
    }
    let v = boundary.trailing_zeros() as usize;
    let bit = 1u64 << v;
    let with = set | bit;
    grow(adj, with, (boundary | adj[v]) & !with & !banned, banned, counts, produced, cap)?;
    grow(adj, set, boundary & !bit, banned | bit, counts, produced, cap)
}

/// Subtree polynomial of the tree obtained by identifying `u` (carried by
/// `p_local`) with `v` (carried by `q_local`):
///
/// `Φ_P − Φ_P(u;·) + Φ_Q − Φ_Q(v;·) + Φ_P(u;x) Φ_Q(v;x) / x`.
pub fn glue_polynomials(
    p: &SubtreePolynomial,
    p_local: &SubtreePolynomial,
    q: &SubtreePolynomial,
    q_local: &SubtreePolynomial,
) -> Result<SubtreePolynomial> {
    let kinds_ok = p.kind() == PolyKind::Global
        && q.kind() == PolyKind::Global
        && matches!(p_local.kind(), PolyKind::LocalAt(_))
        && matches!(q_local.kind(), PolyKind::LocalAt(_))
        && p.order() == p_local.order()
        && q.order() == q_local.order();
    if !kinds_ok {
        return Err(Error::InvalidSpec(
            "glue needs (global, local) pairs of matching order".into(),
        ));
    }
    let product = poly_mul(p_local.coeffs(), q_local.coeffs());
    if !product[0].is_zero() {
        return Err(Error::DivisibilityViolated);
    }
    let n = p.order() + q.order() - 1;
    let mut out = vec![BigInt::zero(); n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot += BigInt::from(p.coeff(k)) - BigInt::from(p_local.coeff(k));
        *slot += BigInt::from(q.coeff(k)) - BigInt::from(q_local.coeff(k));
    }
    for (k, a) in product.into_iter().enumerate().skip(1) {
        out[k - 1] += BigInt::from(a);
    }
    if out.iter().any(Signed::is_negative) {
        return Err(Error::InvalidSpec(
            "local polynomial exceeds its global polynomial".into(),
        ));
    }
    Ok(SubtreePolynomial::from_coeffs(
        PolyKind::Global,
        out.into_iter().map(|a| a.to_biguint().unwrap()).collect(),
    ))
}

/// Small helper for tests and reports: coefficients as `u64` when they fit.
pub fn coeffs_u64(p: &SubtreePolynomial) -> Option<Vec<u64>> {
    p.coeffs()[1..].iter().map(ToPrimitive::to_u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn coeffs(t: &Tree) -> Vec<u64> {
        coeffs_u64(&subtree_polynomial(t)).unwrap()
    }

    #[test]
    fn p3_coefficients() {
        assert_eq!(coeffs(&Tree::path(3)), vec![3, 2, 1]);
    }

    #[test]
    fn k13_coefficients() {
        let t = Tree::star(4);
        let p = subtree_polynomial(&t);
        assert_eq!(coeffs_u64(&p).unwrap(), vec![4, 3, 3, 1]);
        assert_eq!(p.count(), BigUint::from(11u32));
        assert_eq!(p.total(), BigUint::from(23u32));
        assert_eq!(mean(&t), ratio(23, 11));
    }

    #[test]
    fn trivial_tree() {
        let t = Tree::trivial();
        assert_eq!(coeffs(&t), vec![1]);
        assert_eq!(mean(&t), ratio(1, 1));
        let local = local_subtree_polynomial(&t, 0).unwrap();
        assert_eq!(coeffs_u64(&local).unwrap(), vec![1]);
    }

    #[test]
    fn star_hub_local_count() {
        for m in 1..=12 {
            let t = Tree::star(m + 1);
            let local = local_subtree_polynomial(&t, 0).unwrap();
            assert_eq!(local.count(), BigUint::from(1u64 << m));
            let brute = brute_force_local_count(&t, 0);
            assert_eq!(local.count(), BigUint::from(brute));
        }
    }

    fn brute_force_local_count(t: &Tree, v: usize) -> u64 {
        // every subset containing v that induces a connected subgraph
        let n = t.order();
        (0u64..(1 << n))
            .filter(|m| m >> v & 1 == 1)
            .filter(|&m| {
                let verts: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                t.induced(&verts).is_ok()
            })
            .count() as u64
    }

    #[test]
    fn path_local_values() {
        for n in 1..=30usize {
            let t = Tree::path(n);
            for s in 1..=n {
                let lt = local_totals(&t, s - 1).unwrap();
                let c = s * (n - s + 1);
                assert_eq!(lt.count, BigUint::from(c));
                // s(n-s+1)(n+1)/2, always an integer
                assert_eq!(lt.total * 2u32, BigUint::from(c * (n + 1)));
            }
        }
    }

    #[test]
    fn totals_match_polynomial() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let p = subtree_polynomial(&t);
        assert_eq!(subtree_totals(&t), p.totals());
        assert_eq!(subtree_totals_u128(&t).unwrap().widen(), p.totals());
        for v in 0..t.order() {
            let lp = local_subtree_polynomial(&t, v).unwrap();
            assert_eq!(local_totals(&t, v).unwrap(), lp.totals());
        }
    }

    #[test]
    fn brute_force_small_cases() {
        let p2 = brute_force_polynomial(&Tree::path(2), DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(coeffs_u64(&p2).unwrap(), vec![2, 1]);
        let k13 = brute_force_polynomial(&Tree::star(4), DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(coeffs_u64(&k13).unwrap(), vec![4, 3, 3, 1]);
    }

    #[test]
    fn brute_force_refuses_past_cap() {
        assert_eq!(
            brute_force_polynomial(&Tree::star(12), 100),
            Err(Error::CapExceeded(100))
        );
    }

    #[test]
    fn glue_examples() {
        let p = Tree::path(3);
        let q = Tree::path(2);
        let pg = subtree_polynomial(&p);
        let qg = subtree_polynomial(&q);
        let ql = local_subtree_polynomial(&q, 0).unwrap();
        let middle = glue_polynomials(&pg, &local_subtree_polynomial(&p, 1).unwrap(), &qg, &ql).unwrap();
        assert_eq!(coeffs_u64(&middle).unwrap(), vec![4, 3, 3, 1]);
        let end = glue_polynomials(&pg, &local_subtree_polynomial(&p, 0).unwrap(), &qg, &ql).unwrap();
        assert_eq!(coeffs_u64(&end).unwrap(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn glue_rejects_mismatched_kinds() {
        let p = subtree_polynomial(&Tree::path(3));
        assert!(glue_polynomials(&p, &p, &p, &p).is_err());
    }

    #[test]
    fn mean_containing_examples() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let all: Vec<usize> = (0..t.order()).collect();
        assert_eq!(mean_containing(&t, &all).unwrap(), ratio(6, 1));
        for v in 0..t.order() {
            assert_eq!(mean_containing(&t, &[v]).unwrap(), local_mean(&t, v).unwrap());
        }
        assert_eq!(mean_containing(&t, &[0, 2]), Err(Error::NotConnected));
    }

    #[test]
    fn density_of_path() {
        assert_eq!(density(&Tree::path(4)), ratio(1, 2));
    }
}
