//! Command-line surface over `ramanujan-core`. [`run`] executes one command
//! in-process so the binary and the tests share a single code path.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramanujan_core::bijection::{
    color_merge, color_split, from_plane, hoist, isolate_min, isolate_min_inv, lift, lower, rooted_fwd_audited,
    rooted_inv_audited, to_plane, unhoist, unrooted_fwd, unrooted_inv, BijectionError, ColoredTree,
};
use ramanujan_core::format::{format_colored, format_tree, parse_colored_trees, parse_trees};
use ramanujan_core::recurrences::{f, PsiMethod, QMethod};
use ramanujan_core::series::verify_genfun;
use ramanujan_core::verify::{run_suite, VerificationReport};
use ramanujan_core::{enumerate_rooted, ClassFilter, DegreeBound, LambdaBound, NodeRole, PlaneTree, RootedTree};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification ran and found a failing instance.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for bad arguments or malformed input.
pub const EXIT_USAGE: i32 = 2;

/// What a command produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "ramanujan", version, about = "Ramanujan polynomials, improper edges and tree bijections")]
struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one psi or Q polynomial, or one f(n, k).
    Poly(PolyArgs),
    /// Print the psi, Q or lower-critical-node tables.
    Table(TableArgs),
    /// Count or list trees on [n] in a refined class.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to the trees read from stdin.
    Bij(BijArgs),
    /// Run an oracle suite.
    Verify(VerifyArgs),
    /// Check the psi generating function at one point.
    Genfun(GenfunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Psi,
    Q,
    F,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// bew | ramanujan for psi; shor | shor-alt | zeng-a | zeng-b | from-psi for Q.
    #[arg(long)]
    method: Option<String>,
    /// `r` for psi, `n` for Q and f.
    #[arg(long)]
    n: usize,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Psi,
    Q,
    Lambda,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    which: Which,
    /// Largest r (psi) or n (Q, lambda).
    #[arg(long, default_value_t = 5)]
    max: usize,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["count", "list"]))]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Number of improper edges.
    #[arg(long)]
    k: Option<usize>,
    /// Degree of the minimum: `N`, `>N` or `>=N`.
    #[arg(long)]
    deg1: Option<String>,
    /// Degree of the maximum: `N`, `>N` or `>=N`.
    #[arg(long)]
    degmax: Option<String>,
    /// Lower critical node: a label, `min` or `>min`.
    #[arg(long)]
    lambda: Option<String>,
    /// Only trees rooted at 1.
    #[arg(long)]
    unrooted: bool,
    #[arg(long)]
    count: bool,
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    Lower,
    Lift,
    Lemma36,
    Rooted,
    Unrooted,
    Color,
    Cor22,
    Plane,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Fwd,
    Inv,
}

#[derive(Args, Debug)]
struct BijArgs {
    #[arg(long, value_enum)]
    map: MapName,
    #[arg(long, value_enum)]
    dir: Direction,
    /// Report how each tree was dispatched, on stderr.
    #[arg(long)]
    audit: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// tables | recurrences | identities | bijections | conjecture | genfun
    #[arg(long)]
    suite: String,
    /// Size bound; each suite has its own default.
    #[arg(long)]
    nmax: Option<usize>,
}

#[derive(Args, Debug)]
struct GenfunArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, allow_negative_numbers = true)]
    x: i64,
    #[arg(long, default_value_t = 10)]
    order: usize,
}

/// A failure that maps to [`EXIT_USAGE`].
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

fn ok(stdout: String) -> Outcome {
    Outcome { status: EXIT_OK, stdout, stderr: String::new() }
}

/// Runs one command. `args` excludes the program name; `stdin` is the input text.
pub fn run<S: AsRef<str>>(args: &[S], stdin: &str) -> Outcome {
    let argv = std::iter::once("ramanujan").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                ok(text)
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Poly(a) => poly(a, json),
        Command::Table(a) => table(a, json),
        Command::Enumerate(a) => enumerate(a, json),
        Command::Bij(a) => bij(a, stdin),
        Command::Verify(a) => verify(a, json),
        Command::Genfun(a) => genfun(a, json),
    };
    result.unwrap_or_else(|UsageError(msg)| Outcome {
        status: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    })
}

fn poly(a: PolyArgs, json: bool) -> CmdResult {
    let (method, value, coeffs) = match a.family {
        Family::Psi => {
            let m: PsiMethod = a.method.as_deref().unwrap_or("bew").parse()?;
            let p = m.table(a.n).get(a.n as i64, a.k);
            (m.to_string(), p.to_string(), p.coeff_strings())
        }
        Family::Q => {
            if a.n == 0 {
                return Err(UsageError("--n must be at least 1 for Q".into()));
            }
            let m: QMethod = a.method.as_deref().unwrap_or("shor").parse()?;
            let p = m.table(a.n).get(a.n as i64, a.k);
            (m.to_string(), p.to_string(), p.coeff_strings())
        }
        Family::F => {
            if a.method.is_some() {
                return Err(UsageError("--method does not apply to f".into()));
            }
            let v = f(a.n, a.k).to_string();
            ("recurrence".to_string(), v.clone(), vec![v])
        }
    };
    Ok(ok(if json {
        let family = format!("{:?}", a.family).to_lowercase();
        format!(
            "{}\n",
            json!({"family": family, "method": method, "n": a.n, "k": a.k, "value": value, "coeffs": coeffs})
        )
    } else {
        format!("{value}\n")
    }))
}

const TABLE_MAX: usize = 30;
const LAMBDA_TABLE_MAX: usize = 8;

fn table(a: TableArgs, json: bool) -> CmdResult {
    let mut out = String::new();
    match a.which {
        Which::Psi | Which::Q => {
            if a.max > TABLE_MAX {
                return Err(UsageError(format!("--max is limited to {TABLE_MAX}")));
            }
            // (table name, row index name, table, every (row, k) cell in order)
            let (name, index, t, cells) = match a.which {
                Which::Psi => {
                    let cells: Vec<(usize, i64)> =
                        (0..=a.max).flat_map(|r| (1..r as i64 + 2).map(move |k| (r, k))).collect();
                    ("psi", "r", PsiMethod::Bew.table(a.max), cells)
                }
                _ => {
                    let cells: Vec<(usize, i64)> =
                        (1..=a.max).flat_map(|n| (0..n as i64).map(move |k| (n, k))).collect();
                    ("Q", "n", QMethod::Shor.table(a.max), cells)
                }
            };
            for (row, k) in cells {
                let p = t.get(row as i64, k);
                if json {
                    writeln!(out, "{}", json!({"table": name, index: row, "k": k, "value": p.to_string()}))?;
                } else {
                    writeln!(out, "{name} {index}={row} k={k}: {p}")?;
                }
            }
        }
        Which::Lambda => {
            if a.max > LAMBDA_TABLE_MAX {
                return Err(UsageError(format!("--max is limited to {LAMBDA_TABLE_MAX} for lambda tables")));
            }
            lambda_tables(a.max, json, &mut out)?;
        }
    }
    Ok(ok(out))
}

/// `|R_{n,k}[lambda=i]|` for `2 <= n <= max`, one grid per `i`, blank for zero.
fn lambda_tables(max: usize, json: bool, out: &mut String) -> Result<(), UsageError> {
    let mut counts: BTreeMap<(u32, usize, usize), u64> = BTreeMap::new();
    for n in 2..=max {
        for t in enumerate_rooted(n, &ClassFilter::new()) {
            if let Ok(l) = t.lower_critical() {
                *counts.entry((l, n, t.improper_count())).or_default() += 1;
            }
        }
    }
    for i in 1..max.max(2) as u32 {
        if !json {
            writeln!(out, "R_{{n,k}}[lambda={i}]")?;
            let header: String = (2..=max).map(|n| format!("{n:>8}")).collect();
            writeln!(out, "{:>4}{header}", "k\\n")?;
        }
        for k in 1..max {
            let mut line = format!("{k:>4}");
            for n in 2..=max {
                let c = counts.get(&(i, n, k)).copied().unwrap_or(0);
                if json {
                    if k < n && i < n as u32 {
                        writeln!(out, "{}", json!({"table": "lambda", "lambda": i, "n": n, "k": k, "count": c}))?;
                    }
                } else if c == 0 {
                    line.push_str(&format!("{:>8}", ""));
                } else {
                    line.push_str(&format!("{c:>8}"));
                }
            }
            if !json {
                writeln!(out, "{}", line.trim_end())?;
            }
        }
    }
    Ok(())
}

fn degree_bound(text: &str) -> Result<DegreeBound, UsageError> {
    let bad = || UsageError(format!("degree constraint {text:?} must look like 2, >0 or >=1"));
    let text = text.trim();
    if let Some(rest) = text.strip_prefix(">=") {
        Ok(DegreeBound::AtLeast(rest.trim().parse().map_err(|_| bad())?))
    } else if let Some(rest) = text.strip_prefix('>') {
        Ok(DegreeBound::AtLeast(rest.trim().parse::<usize>().map_err(|_| bad())? + 1))
    } else {
        Ok(DegreeBound::Exactly(text.trim_start_matches('=').parse().map_err(|_| bad())?))
    }
}

fn lambda_bound(text: &str) -> Result<LambdaBound, UsageError> {
    match text.trim() {
        "min" => Ok(LambdaBound::IsMin),
        ">min" => Ok(LambdaBound::AboveMin),
        other => other
            .parse()
            .map(LambdaBound::Equals)
            .map_err(|_| UsageError(format!("lambda constraint {text:?} must be a label, min or >min"))),
    }
}

const ENUMERATE_MAX: usize = 9;

fn enumerate(a: EnumerateArgs, json: bool) -> CmdResult {
    if a.n == 0 || a.n > ENUMERATE_MAX {
        return Err(UsageError(format!("--n must be between 1 and {ENUMERATE_MAX}")));
    }
    let mut filter = if a.unrooted { ClassFilter::unrooted() } else { ClassFilter::new() };
    if let Some(k) = a.k {
        filter = filter.improper(k);
    }
    if let Some(d) = &a.deg1 {
        filter = filter.degree(NodeRole::Min, degree_bound(d)?);
    }
    if let Some(d) = &a.degmax {
        filter = filter.degree(NodeRole::Max, degree_bound(d)?);
    }
    if let Some(l) = &a.lambda {
        filter = filter.lambda(lambda_bound(l)?);
    }
    let mut out = String::new();
    if a.count {
        let c = ramanujan_core::count_trees(a.n, &filter);
        if json {
            writeln!(out, "{}", json!({"n": a.n, "count": c}))?;
        } else {
            writeln!(out, "{c}")?;
        }
    } else {
        for t in enumerate_rooted(a.n, &filter) {
            if json {
                writeln!(out, "{}", json!({"parents": t.parent_labels(), "improper": t.improper_count()}))?;
            } else {
                writeln!(out, "{}", format_tree(&t))?;
            }
        }
    }
    Ok(ok(out))
}

type TreeMap = fn(&RootedTree) -> Result<(RootedTree, String), BijectionError>;

fn plain(
    f: fn(&RootedTree) -> Result<RootedTree, BijectionError>,
    t: &RootedTree,
) -> Result<(RootedTree, String), BijectionError> {
    let out = f(t)?;
    let audit = format!("improper {} -> {}", t.improper_count(), out.improper_count());
    Ok((out, audit))
}

fn tree_map(map: MapName, dir: Direction) -> Option<TreeMap> {
    use Direction::{Fwd, Inv};
    Some(match (map, dir) {
        (MapName::Lower, Fwd) | (MapName::Lift, Inv) => |t| plain(lower, t),
        (MapName::Lower, Inv) | (MapName::Lift, Fwd) => |t| plain(lift, t),
        (MapName::Lemma36, Fwd) => |t| isolate_min(t).map(|(o, a)| (o, a.to_string())),
        (MapName::Lemma36, Inv) => |t| isolate_min_inv(t).map(|(o, a)| (o, a.to_string())),
        (MapName::Rooted, Fwd) => |t| rooted_fwd_audited(t).map(|(o, a)| (o, a.to_string())),
        (MapName::Rooted, Inv) => |t| rooted_inv_audited(t).map(|(o, a)| (o, a.to_string())),
        (MapName::Unrooted, Fwd) => |t| plain(unrooted_fwd, t),
        (MapName::Unrooted, Inv) => |t| plain(unrooted_inv, t),
        (MapName::Cor22, Fwd) => |t| plain(hoist, t),
        (MapName::Cor22, Inv) => |t| plain(unhoist, t),
        _ => return None,
    })
}

fn bij(a: BijArgs, stdin: &str) -> CmdResult {
    let mut out = String::new();
    let mut audit = String::new();
    match (a.map, a.dir) {
        (MapName::Color, Direction::Fwd) => {
            for (t, black) in parse_colored_trees(stdin)? {
                let image = color_split(&ColoredTree::new(t, black)?)?;
                writeln!(audit, "audit: improper {}", image.improper_count())?;
                writeln!(out, "{}", format_tree(&image))?;
            }
        }
        (MapName::Color, Direction::Inv) => {
            for t in parse_trees(stdin)? {
                let c = color_merge(&t)?;
                let black: Vec<u32> = c.black().iter().copied().collect();
                writeln!(audit, "audit: black children {}", black.len())?;
                writeln!(out, "{}", format_colored(c.tree(), &black))?;
            }
        }
        (MapName::Plane, Direction::Fwd) => {
            for t in parse_trees(stdin)? {
                let p = to_plane(&t)?;
                writeln!(audit, "audit: root children {}", p.children.len())?;
                writeln!(out, "{p}")?;
            }
        }
        (MapName::Plane, Direction::Inv) => {
            for line in stdin.lines().map(str::trim).filter(|l| !l.is_empty()) {
                let p: PlaneTree = line.parse()?;
                let t = from_plane(&p)?;
                writeln!(audit, "audit: improper {}", t.improper_count())?;
                writeln!(out, "{}", format_tree(&t))?;
            }
        }
        (map, dir) => {
            let f = tree_map(map, dir).expect("every remaining map acts on trees");
            for t in parse_trees(stdin)? {
                let (image, note) = f(&t)?;
                writeln!(audit, "audit: {note}")?;
                writeln!(out, "{}", format_tree(&image))?;
            }
        }
    }
    if out.is_empty() {
        return Err(UsageError("no input trees on stdin".into()));
    }
    Ok(Outcome { status: EXIT_OK, stdout: out, stderr: if a.audit { audit } else { String::new() } })
}

/// Default and largest accepted `--nmax` per suite.
fn suite_bounds(suite: &str) -> Option<(usize, usize)> {
    Some(match suite {
        "tables" => (5, 5),
        "recurrences" => (12, 200),
        "identities" => (6, 8),
        "bijections" => (6, 8),
        "conjecture" => (7, 9),
        "genfun" => (4, 12),
        _ => return None,
    })
}

fn report_outcome(report: &VerificationReport, json: bool) -> Outcome {
    let stdout = if json { report.to_json_lines() } else { format!("{report}\n") };
    let status = if report.all_pass() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Outcome { status, stdout, stderr: String::new() }
}

fn verify(a: VerifyArgs, json: bool) -> CmdResult {
    let (default, max) = suite_bounds(&a.suite).ok_or_else(|| {
        UsageError(format!("unknown suite {:?} (expected {})", a.suite, ramanujan_core::verify::SUITES.join(", ")))
    })?;
    let nmax = a.nmax.unwrap_or(default);
    if nmax > max {
        return Err(UsageError(format!("--nmax for suite {} is limited to {max}", a.suite)));
    }
    if a.suite == "conjecture" && nmax < 3 {
        return Err(UsageError("--nmax for suite conjecture must be at least 3".into()));
    }
    let report = run_suite(&a.suite, nmax).expect("suite name already validated");
    Ok(report_outcome(&report, json))
}

fn genfun(a: GenfunArgs, json: bool) -> CmdResult {
    if a.r > 12 || a.order > 30 {
        return Err(UsageError("--r is limited to 12 and --order to 30".into()));
    }
    let check = verify_genfun(a.r, a.x, a.order);
    let stdout = if json {
        format!(
            "{}\n",
            json!({"r": check.r, "x": check.x, "order": check.order, "pass": check.pass(), "mismatch": check.mismatch})
        )
    } else {
        format!("{check}\n")
    };
    let status = if check.pass() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { status, stdout, stderr: String::new() })
}
