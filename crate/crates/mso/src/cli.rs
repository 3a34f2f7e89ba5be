//! The `mso` command line. Exit codes: 0 success or pass, 1 a verification
//! found a violation, 2 usage, parse or cap errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mso_core::enumeration::{Family, Shard, TreeStream};
use mso_core::families::{
    baton_counts, bridge_counts, build, dds_counts, dds_counts_general, path_counts, star_counts,
};
use mso_core::poly::{
    brute_force_polynomial, density, local_subtree_polynomial, local_totals, subtree_polynomial,
    subtree_totals, DEFAULT_BRUTE_FORCE_CAP,
};
use mso_core::structure::{classify, leaves_by_twig_adjacency, limb_profile, twigs};
use mso_core::{FamilySpec, Tree};

use crate::decimal::to_decimal;
use crate::error::{MsoError, Result};
use crate::input::{load, InputKind};
use crate::report::{
    search_csv, tree_json, verify_csv, CountsJson, LocalJson, MeanJson, PolyJson, SearchJson,
    VerifyJson, PLACES,
};
use crate::search::{default_threads, optimal_parallel, optimal_parametric};
use crate::suites::{Limits, Suite, SuiteGrid};
use crate::{dot, edgelist, graph6, specs};

#[derive(Parser, Debug)]
#[command(
    name = "mso",
    version,
    about = "Exact mean subtree order of trees: polynomials, families, optimal-tree searches and verification suites"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Leave out timestamps and wall times so identical runs produce identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Worker threads for searches and range-split suites.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest order allowed for exhaustive searches and enumeration.
    #[arg(long, global = true, env = "MSO_MAX_ORDER", default_value_t = 24)]
    max_order: usize,

    /// Most subtrees the brute-force oracle may list before refusing.
    #[arg(long, global = true, env = "MSO_BRUTE_CAP", default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    brute_cap: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Graph6,
    Dot,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subtree count, total order, mean and density of a tree.
    Mean {
        /// Family spec (`path:5`), edge-list file, `.g6` file or graph6 string.
        tree: String,
        #[arg(long, value_enum, default_value = "auto")]
        input: InputKind,
        /// Also report the local mean at this vertex.
        #[arg(long)]
        local: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coefficients of the global or local subtree polynomial.
    Poly {
        tree: String,
        #[arg(long, value_enum, default_value = "auto")]
        input: InputKind,
        #[arg(long)]
        local: Option<usize>,
        /// Use the brute-force oracle instead of the DP.
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Structural classification: path, caterpillar, aster, limbs, twigs.
    Classify {
        tree: String,
        #[arg(long, value_enum, default_value = "auto")]
        input: InputKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Builds a named family member.
    Build {
        spec: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Closed-form subtree count and total for a family spec, checked against the DP.
    Counts {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lists a family: trees, caterpillars, batons, bridges, dds:leaves=K, asters[:leaves=K].
    Enumerate {
        family: String,
        n: usize,
        /// Only the k-th of K interleaved shards.
        #[arg(long)]
        shard: Option<String>,
        /// Print only how many trees there are.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Exhaustive argmax of the mean over a family (closed forms for batons and bridges).
    Optimal {
        family: String,
        n: usize,
        #[arg(long)]
        shard: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Runs a verification suite; exit status 1 on any violation.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Main size parameter (largest order, or upper end of the range).
        #[arg(long)]
        n: Option<usize>,
        /// Lower end of the range where the suite has one.
        #[arg(long)]
        lo: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        smax: Option<u64>,
        #[arg(long)]
        q_max: Option<usize>,
        #[arg(long)]
        w_max: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
        /// Random samples for suites that mix in random trees.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Out {
    text: String,
    code: i32,
}

impl Out {
    fn ok(text: String) -> Self {
        Out { text, code: 0 }
    }
}

fn unsupported(format: Format, command: &str) -> MsoError {
    MsoError::Usage(format!("format {format:?} is not available for `{command}`").to_lowercase())
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn exact_line(label: &str, x: &mso_core::Rational) -> String {
    format!("{label}: {x} ({})\n", to_decimal(x, PLACES))
}

fn cmd_mean(tree: &str, input: InputKind, local: Option<usize>, format: Format) -> Result<Out> {
    let (t, label) = load(tree, input)?;
    let totals = subtree_totals(&t);
    let mean = totals.mean();
    let den = density(&t);
    let local = match local {
        Some(v) => {
            let l = local_totals(&t, v)?;
            Some(LocalJson {
                vertex: v,
                count: l.count.to_string(),
                total: l.total.to_string(),
                mean: (&l.mean()).into(),
            })
        }
        None => None,
    };
    let j = MeanJson {
        input: label,
        n: t.order(),
        count: totals.count.to_string(),
        total: totals.total.to_string(),
        mean: (&mean).into(),
        density: (&den).into(),
        local,
    };
    match format {
        Format::Json => Ok(Out::ok(json(&j)?)),
        Format::Text => {
            let mut s = format!(
                "input: {}\nn: {}\nsubtrees: {}\ntotal order: {}\n",
                j.input, j.n, j.count, j.total
            );
            s += &exact_line("mean", &mean);
            s += &exact_line("density", &den);
            if let Some(l) = &j.local {
                s += &format!(
                    "local at {}: subtrees {}, total {}, mean {}/{} ({})\n",
                    l.vertex, l.count, l.total, l.mean.exact.num, l.mean.exact.den, l.mean.decimal
                );
            }
            Ok(Out::ok(s))
        }
        f => Err(unsupported(f, "mean")),
    }
}

fn cmd_poly(
    tree: &str,
    input: InputKind,
    local: Option<usize>,
    brute: bool,
    cap: u64,
    format: Format,
) -> Result<Out> {
    let (t, _) = load(tree, input)?;
    let p = match (local, brute) {
        (Some(_), true) => {
            return Err(MsoError::Usage(
                "the brute-force oracle computes global polynomials only".into(),
            ))
        }
        (Some(v), false) => local_subtree_polynomial(&t, v)?,
        (None, true) => brute_force_polynomial(&t, cap)?,
        (None, false) => subtree_polynomial(&t),
    };
    let j = PolyJson::from(&p);
    match format {
        Format::Json => Ok(Out::ok(json(&j)?)),
        Format::Text => {
            let terms: Vec<String> = j
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, c)| c.as_str() != "0")
                .map(|(k, c)| {
                    if k == 1 {
                        format!("{c}x")
                    } else {
                        format!("{c}x^{k}")
                    }
                })
                .collect();
            Ok(Out::ok(format!("{}\n", terms.join(" + "))))
        }
        f => Err(unsupported(f, "poly")),
    }
}

fn cmd_classify(tree: &str, input: InputKind, format: Format) -> Result<Out> {
    let (t, label) = load(tree, input)?;
    let c = classify(&t);
    let (l1, l2) = leaves_by_twig_adjacency(&t);
    let profile = limb_profile(&t).ok();
    let v = serde_json::json!({
        "input": label,
        "n": t.order(),
        "leaves": t.leaf_count(),
        "twigs": twigs(&t).len(),
        "leaves_at_degree_3_twigs": l1,
        "leaves_at_other_twigs": l2,
        "is_path": c.is_path,
        "is_caterpillar": c.is_caterpillar,
        "is_aster": c.is_aster,
        "is_series_reduced": c.is_series_reduced,
        "is_locally_balanced": c.is_locally_balanced,
        "limb_orders": profile.as_ref().map(|p| p.limb_orders.clone()),
    });
    match format {
        Format::Json => Ok(Out::ok(json(&v)?)),
        Format::Text => {
            let mut s = String::new();
            for (k, val) in v.as_object().expect("object") {
                s += &format!("{k}: {val}\n");
            }
            Ok(Out::ok(s))
        }
        f => Err(unsupported(f, "classify")),
    }
}

fn emit_tree(t: &Tree, name: &str, format: Format) -> Result<String> {
    Ok(match format {
        Format::Edges | Format::Text => edgelist::write(t),
        Format::Graph6 => graph6::encode(t) + "\n",
        Format::Dot => dot::to_dot(t, name),
        Format::Json => serde_json::to_string(&tree_json(t))? + "\n",
        Format::Csv => return Err(unsupported(format, "tree output")),
    })
}

fn closed_form(spec: &FamilySpec) -> Result<mso_core::ClosedFormCounts> {
    let n = spec.order()?;
    Ok(match *spec {
        FamilySpec::Path(n) => path_counts(n)?,
        FamilySpec::Star(n) => star_counts(n)?,
        FamilySpec::Baton { s, .. } => baton_counts(n, s)?,
        FamilySpec::Bridge { s, t } => bridge_counts(s, t)?,
        FamilySpec::Dds { n, r, s } if (r + s) % 2 == 0 => dds_counts(n, (r + s) / 2, r)?,
        FamilySpec::Dds { n, r, s } => dds_counts_general(n, r, s)?,
        _ => return Err(MsoError::Usage(format!("no closed form for `{spec}`"))),
    })
}

fn cmd_counts(spec: &str, format: Format) -> Result<Out> {
    let spec = specs::parse_spec(spec)?;
    let c = closed_form(&spec)?;
    let dp = subtree_totals(&build(&spec)?);
    let matches = dp.count == c.count && dp.total == c.total;
    let j = CountsJson::new(spec.to_string(), spec.order()?, &c, matches);
    let out = match format {
        Format::Json => json(&j)?,
        Format::Text => {
            let mut s = format!(
                "spec: {}\nn: {}\nsubtrees: {}\ntotal order: {}\n",
                j.spec, j.n, j.count, j.total
            );
            s += &exact_line("mean", &c.mean());
            if let Some(b) = &j.census {
                s += &format!(
                    "census: A = {}, Ā = {}, B = {}, B̄ = {}\n",
                    b.a, b.a_bar, b.b, b.b_bar
                );
            }
            s += &format!("matches DP: {matches}\n");
            s
        }
        f => return Err(unsupported(f, "counts")),
    };
    Ok(Out {
        text: out,
        code: if matches { 0 } else { 1 },
    })
}

fn check_order(family: &Family, n: usize, max_order: usize) -> Result<()> {
    let exhaustive = matches!(
        family,
        Family::AllTrees | Family::Caterpillars | Family::Asters { .. }
    );
    if exhaustive && n > max_order {
        return Err(MsoError::Usage(format!(
            "n = {n} exceeds the maximum order {max_order} (set MSO_MAX_ORDER or --max-order)"
        )));
    }
    Ok(())
}

fn cmd_enumerate(
    family: &str,
    n: usize,
    shard: Option<&str>,
    count: bool,
    format: Format,
    max_order: usize,
) -> Result<Out> {
    let family = specs::parse_family(family)?;
    check_order(&family, n, max_order)?;
    let shard = shard
        .map(specs::parse_shard)
        .transpose()?
        .unwrap_or(Shard::WHOLE);
    let stream = TreeStream::new(family, n)?.with_shard(shard);
    if count {
        return Ok(Out::ok(format!("{}\n", stream.count())));
    }
    let mut s = String::new();
    for (i, t) in stream.enumerate() {
        s += &emit_tree(&t, &format!("t{i}"), format)?;
        if format == Format::Edges || format == Format::Text {
            s.push('\n');
        }
    }
    Ok(Out::ok(s))
}

fn cmd_optimal(
    cli: &Cli,
    family: &str,
    n: usize,
    shard: Option<&str>,
    format: Format,
) -> Result<Out> {
    let fam = specs::parse_family(family)?;
    check_order(&fam, n, cli.max_order)?;
    let shard_spec = shard.map(specs::parse_shard).transpose()?;
    let (report, params) = match (&fam, shard_spec) {
        (Family::Batons | Family::Bridges, None) => match optimal_parametric(&fam, n) {
            Some((r, p)) => (Some(r), Some(p)),
            None => (None, None),
        },
        (_, sh) => {
            let threads = cli.threads.unwrap_or_else(default_threads);
            (
                optimal_parallel(&fam, n, sh.unwrap_or(Shard::WHOLE), threads)?,
                None,
            )
        }
    };
    let Some(report) = report else {
        return Err(MsoError::Usage(format!(
            "the family `{family}` has no member of order {n}"
        )));
    };
    let j = SearchJson::new(
        &report,
        shard.map(str::to_string),
        params,
        cli.deterministic,
    );
    let text = match format {
        Format::Json => json(&j)?,
        Format::Csv => search_csv(std::slice::from_ref(&j))?,
        Format::Graph6 => j.winners.iter().map(|w| w.graph6.clone() + "\n").collect(),
        Format::Dot => report
            .winners
            .iter()
            .enumerate()
            .map(|(i, w)| dot::to_dot(&w.tree(), &format!("{}_{n}_{i}", j.family)))
            .collect(),
        Format::Text => {
            let mut s = format!(
                "family: {}\nn: {}\nexamined: {}\nwinners: {}\n",
                j.family, j.n, j.examined, j.multiplicity
            );
            s += &exact_line("mean", &report.mean);
            if let Some(r) = &report.runner_up {
                s += &exact_line("runner-up", r);
            }
            if let Some(p) = &j.parameters {
                s += &format!("optimal s: {p:?}\n");
            }
            for w in &j.winners {
                s += &format!(
                    "winner {}: leaves {}, twigs {}, caterpillar {}",
                    w.graph6, w.leaves, w.twigs, w.is_caterpillar
                );
                if let Some(seq) = &w.spine_leaves {
                    s += &format!(", spine leaves {seq:?}");
                }
                s.push('\n');
            }
            s
        }
        Format::Edges => report
            .winners
            .iter()
            .map(|w| edgelist::write(&w.tree()) + "\n")
            .collect(),
    };
    Ok(Out::ok(text))
}

fn cmd_verify(cli: &Cli, suite: Suite, grid: SuiteGrid, format: Format) -> Result<Out> {
    let limits = Limits {
        threads: cli.threads.unwrap_or_else(default_threads),
        brute_cap: cli.brute_cap,
        max_order: cli.max_order,
    };
    let start = Instant::now();
    let report = crate::suites::run(suite, &grid, &limits)?;
    let j = VerifyJson::new(&report, Some(start.elapsed()), cli.deterministic);
    let text = match format {
        Format::Json => json(&j)?,
        Format::Csv => verify_csv(&j)?,
        Format::Text => {
            let mut s = format!(
                "{} [{}]: {} (passed {}, failed {}, skipped {})\n",
                j.suite,
                j.grid,
                if j.pass { "PASS" } else { "FAIL" },
                j.passed,
                j.failed,
                j.skipped
            );
            if let Some(c) = &j.counterexample {
                s += &format!("first counterexample: {c}\n");
            }
            for line in &j.info {
                s += &format!("note: {line}\n");
            }
            s
        }
        f => return Err(unsupported(f, "verify")),
    };
    Ok(Out {
        text,
        code: if report.is_pass() { 0 } else { 1 },
    })
}

fn dispatch(cli: &Cli) -> Result<Out> {
    match &cli.command {
        Command::Mean {
            tree,
            input,
            local,
            format,
        } => cmd_mean(tree, *input, *local, *format),
        Command::Poly {
            tree,
            input,
            local,
            brute,
            format,
        } => cmd_poly(tree, *input, *local, *brute, cli.brute_cap, *format),
        Command::Classify {
            tree,
            input,
            format,
        } => cmd_classify(tree, *input, *format),
        Command::Build { spec, format } => {
            let spec = specs::parse_spec(spec)?;
            Ok(Out::ok(emit_tree(
                &build(&spec)?,
                &spec.to_string(),
                *format,
            )?))
        }
        Command::Counts { spec, format } => cmd_counts(spec, *format),
        Command::Enumerate {
            family,
            n,
            shard,
            count,
            format,
        } => cmd_enumerate(family, *n, shard.as_deref(), *count, *format, cli.max_order),
        Command::Optimal {
            family,
            n,
            shard,
            format,
        } => cmd_optimal(cli, family, *n, shard.as_deref(), *format),
        Command::Verify {
            suite,
            n,
            lo,
            m_max,
            smax,
            q_max,
            w_max,
            d_max,
            samples,
            seed,
            format,
        } => {
            let grid = SuiteGrid {
                n: *n,
                lo: *lo,
                m_max: *m_max,
                s_max: *smax,
                q_max: *q_max,
                w_max: *w_max,
                d_max: *d_max,
                samples: *samples,
                seed: *seed,
            };
            cmd_verify(cli, *suite, grid, *format)
        }
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, out.text.as_bytes()),
                None => stdout.write_all(out.text.as_bytes()),
            };
            if let Err(e) = written.and_then(|_| stdout.flush()) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return out.code;
                }
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
