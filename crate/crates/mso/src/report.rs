//! JSON and CSV views of results. Field order is fixed by declaration
//! order; exact rationals are `{num, den}` decimal strings.

use std::time::{Duration, SystemTime, UNIX_EPOCH};

use mso_core::lab::{caterpillar_leaf_sequence, SearchReport, VerificationReport, Winner};
use mso_core::poly::{PolyKind, SubtreePolynomial};
use mso_core::{ClosedFormCounts, Rational, Tree};
use serde::Serialize;

use crate::decimal::to_decimal;
use crate::graph6;
use crate::specs::family_name;

pub const PLACES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(x: &Rational) -> Self {
        RationalJson {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

/// Exact value with its 12-place display form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exact {
    pub exact: RationalJson,
    pub decimal: String,
}

impl From<&Rational> for Exact {
    fn from(x: &Rational) -> Self {
        Exact {
            exact: x.into(),
            decimal: to_decimal(x, PLACES),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyJson {
    pub n: usize,
    pub kind: String,
    pub coeffs: Vec<String>,
}

impl From<&SubtreePolynomial> for PolyJson {
    fn from(p: &SubtreePolynomial) -> Self {
        PolyJson {
            n: p.order(),
            kind: match p.kind() {
                PolyKind::Global => "global".into(),
                PolyKind::LocalAt(v) => format!("local:{v}"),
            },
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeanJson {
    pub input: String,
    pub n: usize,
    pub count: String,
    pub total: String,
    pub mean: Exact,
    pub density: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local: Option<LocalJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalJson {
    pub vertex: usize,
    pub count: String,
    pub total: String,
    pub mean: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountsJson {
    pub spec: String,
    pub n: usize,
    pub count: String,
    pub total: String,
    pub mean: Exact,
    pub matches_dp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusJson {
    pub a: String,
    pub a_bar: String,
    pub b: String,
    pub b_bar: String,
}

impl CountsJson {
    pub fn new(spec: String, n: usize, c: &ClosedFormCounts, matches_dp: bool) -> Self {
        CountsJson {
            spec,
            n,
            count: c.count.to_string(),
            total: c.total.to_string(),
            mean: (&c.mean()).into(),
            matches_dp,
            census: c.breakdown.as_ref().map(|b| CensusJson {
                a: b.a.to_string(),
                a_bar: b.a_bar.to_string(),
                b: b.b.to_string(),
                b_bar: b.b_bar.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WinnerJson {
    pub code: String,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_caterpillar: bool,
    pub leaves: usize,
    pub twigs: usize,
    pub limb_orders: Option<Vec<Vec<usize>>>,
    pub spine_leaves: Option<Vec<usize>>,
}

impl From<&Winner> for WinnerJson {
    fn from(w: &Winner) -> Self {
        let t = w.tree();
        WinnerJson {
            code: w.code.to_string(),
            graph6: graph6::encode(&t),
            n: w.order,
            edges: w.edges.clone(),
            is_caterpillar: w.is_caterpillar,
            leaves: w.leaves,
            twigs: w.twigs,
            limb_orders: w.limb_orders.clone(),
            spine_leaves: caterpillar_leaf_sequence(&t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchJson {
    pub family: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shard: Option<String>,
    pub examined: u64,
    pub multiplicity: usize,
    pub mean: Exact,
    pub runner_up: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<usize>>,
    pub winners: Vec<WinnerJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

fn timing(wall: Option<Duration>, deterministic: bool) -> (Option<u128>, Option<u64>) {
    if deterministic {
        return (None, None);
    }
    let now = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .ok();
    (wall.map(|d| d.as_millis()), now)
}

impl SearchJson {
    pub fn new(
        r: &SearchReport,
        shard: Option<String>,
        parameters: Option<Vec<usize>>,
        deterministic: bool,
    ) -> Self {
        let (wall_time_ms, timestamp) = timing(r.wall_time, deterministic);
        SearchJson {
            family: family_name(&r.family),
            n: r.n,
            shard,
            examined: r.examined,
            multiplicity: r.winners.len(),
            mean: (&r.mean).into(),
            runner_up: r.runner_up.as_ref().map(Exact::from),
            parameters,
            winners: r.winners.iter().map(WinnerJson::from).collect(),
            wall_time_ms,
            timestamp,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyJson {
    pub suite: String,
    pub grid: String,
    pub pass: bool,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub counterexample: Option<String>,
    pub info: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl VerifyJson {
    pub fn new(r: &VerificationReport, wall: Option<Duration>, deterministic: bool) -> Self {
        let (wall_time_ms, timestamp) = timing(wall, deterministic);
        VerifyJson {
            suite: r.suite.clone(),
            grid: r.grid.clone(),
            pass: r.is_pass(),
            passed: r.passed,
            failed: r.failed,
            skipped: r.skipped,
            counterexample: r.counterexample.clone(),
            info: r.info.clone(),
            wall_time_ms,
            timestamp,
        }
    }
}

/// One CSV row summarizing a search.
#[derive(Serialize)]
struct SearchRow<'a> {
    family: &'a str,
    n: usize,
    examined: u64,
    multiplicity: usize,
    mean_num: &'a str,
    mean_den: &'a str,
    mean_decimal: &'a str,
    winner_graph6: &'a str,
    leaves: usize,
    twigs: usize,
    is_caterpillar: bool,
}

pub fn search_csv(rows: &[SearchJson]) -> crate::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        for win in &r.winners {
            w.serialize(SearchRow {
                family: &r.family,
                n: r.n,
                examined: r.examined,
                multiplicity: r.multiplicity,
                mean_num: &r.mean.exact.num,
                mean_den: &r.mean.exact.den,
                mean_decimal: &r.mean.decimal,
                winner_graph6: &win.graph6,
                leaves: win.leaves,
                twigs: win.twigs,
                is_caterpillar: win.is_caterpillar,
            })?;
        }
    }
    finish(w)
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    suite: &'a str,
    grid: &'a str,
    pass: bool,
    passed: u64,
    failed: u64,
    skipped: u64,
    counterexample: &'a str,
}

pub fn verify_csv(r: &VerifyJson) -> crate::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(VerifyRow {
        suite: &r.suite,
        grid: &r.grid,
        pass: r.pass,
        passed: r.passed,
        failed: r.failed,
        skipped: r.skipped,
        counterexample: r.counterexample.as_deref().unwrap_or(""),
    })?;
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> crate::Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn tree_json(t: &Tree) -> serde_json::Value {
    serde_json::json!({
        "n": t.order(),
        "edges": t.edges(),
        "graph6": graph6::encode(t),
    })
}
