//! Command-line driver for exact character computations and the Saxl-type scans.

mod cache;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use saxllab::alternating::{find_critical_pairs, CriticalPair};
use saxllab::products::decompose;
use saxllab::scans::{
    compare_golden, dk_table, unimodality_report, ConjectureTarget, Limits, SaxlCriteria, ScanReport, GOLDEN_EXCEPTIONS,
};
use saxllab::spin::SpinLabel;
use saxllab::{CharLabel, ClassLabel, Decomposition, Engine, Error, ExactValue, GroupKind, Partition, Sign};
use serde::Serialize;

use cache::Cache;
use output::{Format, Rows};
use verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "saxllab", version, about = "Exact characters of S_n, its double cover, A_n and its double cover")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Stop sweeps after this many seconds and report partial results.
    #[arg(long, global = true)]
    max_seconds: Option<f64>,
    /// Approximate memo-table budget in bytes.
    #[arg(long, global = true)]
    max_memory: Option<u64>,
    /// Persistent memo cache; SAXLLAB_CACHE takes precedence.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One character value.
    Charval(CharvalArgs),
    /// Nonvanishing counts over all partitions of n.
    Scan {
        #[arg(value_enum)]
        kind: ScanWhich,
        #[arg(long)]
        k: usize,
        /// Compare with the published row; exit 1 on mismatch.
        #[arg(long)]
        golden: bool,
        /// Also count partitions comparable to the staircase.
        #[arg(long)]
        dominance: bool,
    },
    /// Coefficients of the product (1+x)(1+x^2)...(1+x^k).
    Dk {
        #[arg(long)]
        k: usize,
        /// Report the plateaus up to the middle and check them against the known list.
        #[arg(long)]
        check_theorem: bool,
    },
    /// Decompose a product of characters.
    Decompose(DecomposeArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest k (paper) or n (orthogonality, oracle) to check.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Full character table.
    Table {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: usize,
    },
    /// Check that the square of the staircase character contains every irreducible.
    Saxl {
        #[arg(long)]
        k: usize,
        /// Use the spin staircase of k^2 instead.
        #[arg(long)]
        spin: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Compare staircase values with values on the Glaisher preimage modulo 2.
    Parity {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        limit: usize,
    },
    /// Spin characters whose square contains all non-faithful irreducibles.
    Conjecture {
        #[arg(long)]
        target: ConjectureTarget,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = saxllab::scans::CONJECTURE_LIMIT)]
        limit: usize,
    },
    /// Pairs of classes separating few irreducibles.
    Pairs {
        #[arg(long)]
        group: GroupKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanWhich {
    Saxl,
    Spin,
}

#[derive(Args, Debug)]
struct CharvalArgs {
    #[arg(long, required_unless_present = "label")]
    lambda: Option<Partition>,
    #[arg(long, required_unless_present = "class")]
    alpha: Option<Partition>,
    /// Spin character of the double cover of S_n.
    #[arg(long)]
    spin: bool,
    /// Associate choice for spin characters.
    #[arg(long, default_value = "+")]
    sign: Sign,
    /// Which half of a split class.
    #[arg(long, default_value = "+")]
    half: Sign,
    /// Any character label, e.g. "{4,1,1}+" (with --group and --class).
    #[arg(long, requires_all = ["group", "class"])]
    label: Option<CharLabel>,
    #[arg(long)]
    group: Option<GroupKind>,
    /// Class label, e.g. "(5,1)a+".
    #[arg(long)]
    class: Option<ClassLabel>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DecomposeArgs {
    /// Square of one character: "[3,2,1]", "<3,1>", "<3,2,1>+".
    #[arg(long)]
    square: Option<CharLabel>,
    /// Product of two ordinary or two spin characters.
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    product: Option<Vec<CharLabel>>,
    /// Ordinary times spin: "[3,3,3]" "<9>".
    #[arg(long, num_args = 2, value_names = ["ORDINARY", "SPIN"])]
    mixed: Option<Vec<CharLabel>>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded(_) => Failure::Limit(e.to_string()),
            Error::NonIntegralMultiplicity { .. } | Error::NegativeMultiplicity { .. } | Error::Precondition(_) => {
                Failure::Mismatch(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Status, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Mismatch,
    Partial,
}

struct Ctx<'a> {
    engine: &'a Engine,
    format: Format,
    limits: Limits,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&self, value: &T, rows: impl FnOnce() -> Rows) {
        match self.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
            f => print!("{}", rows().render(f)),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().expect("thread pool");
    }
    let engine = Engine::new();
    let cache_path = std::env::var_os("SAXLLAB_CACHE").map(PathBuf::from).or(cli.cache.clone());
    let cache = match cache_path.as_deref().map(|p| Cache::load(p, &engine)).transpose() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("warning: cache not loaded: {e}");
            None
        }
    };
    let ctx = Ctx { engine: &engine, format: cli.format, limits: Limits { max_seconds: cli.max_seconds, max_memory: cli.max_memory } };
    let outcome = run(&ctx, cli.command);
    if let Some(c) = &cache {
        if let Err(e) = c.flush(&engine) {
            eprintln!("warning: cache not written: {e}");
        }
    }
    match outcome {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Ok(Status::Partial) => ExitCode::from(3),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Mismatch(m) => (1, m),
                Failure::Limit(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Charval(a) => charval(ctx, a),
        Command::Scan { kind, k, golden, dominance } => scan(ctx, kind, k, golden, dominance),
        Command::Dk { k, check_theorem } => dk(ctx, k, check_theorem),
        Command::Decompose(a) => decompose_cmd(ctx, a),
        Command::Verify { suite, limit } => verify_cmd(ctx, suite, limit.unwrap_or(suite.default_limit())),
        Command::Table { group, n } => table(ctx, group, n),
        Command::Saxl { k, spin, limit } => saxl(ctx, k, spin, limit),
        Command::Parity { k, limit } => parity(ctx, k, limit),
        Command::Conjecture { target, n, limit } => conjecture(ctx, target, n, limit),
        Command::Pairs { group, n, max_size } => pairs(ctx, group, n, max_size),
    }
}

#[derive(Serialize)]
struct CharValue {
    character: String,
    class: String,
    value: String,
}

fn charval(ctx: &Ctx, a: CharvalArgs) -> Outcome {
    let (character, class, value) = if let (Some(label), Some(group), Some(class)) = (a.label, a.group, a.class) {
        let n = label.partition().n();
        if class.cycle_type.n() != n {
            return Err(Failure::Usage(format!("{label} and {class} have different sizes")));
        }
        let t = ctx.engine.cached_table(group, n)?;
        let row = t.row(&label).ok_or_else(|| Failure::Usage(format!("{label} is not an irreducible of {group}{n}")))?;
        let i = t.context().index_of(&class).ok_or_else(|| Failure::Usage(format!("{class} is not a class of {group}{n}")))?;
        (label.to_string(), class.to_string(), row.get(i).to_string())
    } else {
        let (lambda, alpha) = match (a.lambda, a.alpha) {
            (Some(l), Some(al)) => (l, al),
            _ => return Err(Failure::Usage("--lambda and --alpha are required".into())),
        };
        if a.spin {
            let label = SpinLabel::with_choice(lambda, a.sign)?;
            let tsn = saxllab::GroupContext::tilde_symmetric(alpha.n());
            let central = tsn.find(&alpha, None, Some(a.half)).map(|_| a.half);
            let class = ClassLabel { cycle_type: alpha, alt: None, central };
            let v: ExactValue = ctx.engine.spin_value(&label, &class)?;
            (label.to_string(), class.to_string(), v.to_string())
        } else {
            let v: BigInt = ctx.engine.mn_value(&lambda, &alpha)?;
            (CharLabel::Ordinary(lambda).to_string(), format!("({alpha})"), v.to_string())
        }
    };
    match ctx.format {
        Format::Tsv => println!("{value}"),
        _ => {
            let out = CharValue { character, class, value };
            ctx.emit(&out, || {
                let mut r = Rows::new(["character", "class", "value"]);
                r.push([&out.character, &out.class, &out.value]);
                r
            })
        }
    }
    Ok(Status::Ok)
}

fn scan_rows(r: &ScanReport) -> Rows {
    let mut rows = Rows::from_tsv(&r.tsv_header());
    rows.push(r.tsv_row().split('\t'));
    rows
}

fn scan(ctx: &Ctx, kind: ScanWhich, k: usize, golden: bool, dominance: bool) -> Outcome {
    let report = match kind {
        ScanWhich::Saxl => ctx.engine.saxl_scan(k, SaxlCriteria { dominance, ..Default::default() }, &ctx.limits)?,
        ScanWhich::Spin => ctx.engine.spin_scan(k, &ctx.limits)?,
    };
    ctx.emit(&report, || scan_rows(&report));
    eprintln!("scan time: {:.3} s", report.wall_seconds);
    if report.partial {
        eprintln!(
            "partial: {} of {} partitions examined ({})",
            report.examined,
            report.p_n,
            report.limit_reason.as_deref().unwrap_or("limit reached")
        );
        return Ok(Status::Partial);
    }
    if golden {
        let c = compare_golden(&report)?;
        if let Some(note) = &c.caveat {
            eprintln!("note: {note}");
        }
        for m in &c.mismatches {
            eprintln!("mismatch: {m}");
        }
        if !c.matches {
            return Ok(Status::Mismatch);
        }
    }
    Ok(Status::Ok)
}

fn dk(ctx: &Ctx, k: usize, check: bool) -> Outcome {
    let table = dk_table(k)?;
    if !check {
        ctx.emit(&table, || {
            let mut r = Rows::new(["m", "d_k(m)"]);
            for (m, c) in table.coefficients.iter().enumerate() {
                r.push([m.to_string(), c.to_string()]);
            }
            r
        });
        return Ok(Status::Ok);
    }
    let report = unimodality_report(k)?;
    let join = |v: &[usize]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
    ctx.emit(&report, || {
        let mut r = Rows::new(["k", "middle", "equalities", "exceptional"]);
        r.push([k.to_string(), report.middle.to_string(), join(&report.equalities), join(&report.exceptional)]);
        r
    });
    let expected: &[usize] = GOLDEN_EXCEPTIONS.iter().find(|(kk, _)| *kk == k).map_or(&[], |(_, v)| v);
    if report.exceptional != expected || !table.is_symmetric() {
        eprintln!("mismatch: expected exceptional positions {}", join(expected));
        return Ok(Status::Mismatch);
    }
    Ok(Status::Ok)
}

fn spin_label(l: &CharLabel) -> std::result::Result<SpinLabel, Failure> {
    match l {
        CharLabel::Spin(p, None) if p.in_d_minus() => Ok(SpinLabel::with_choice(p.clone(), Sign::Plus)?),
        CharLabel::Spin(..) => Ok(SpinLabel::try_from(l)?),
        other => Err(Failure::Usage(format!("{other} is not a spin character of the double cover of S_n"))),
    }
}

fn product(ctx: &Ctx, a: &CharLabel, b: &CharLabel) -> std::result::Result<Decomposition, Failure> {
    match (a, b) {
        (CharLabel::Ordinary(l), CharLabel::Ordinary(m)) => Ok(ctx.engine.decompose_kronecker(l, m)?),
        (CharLabel::Spin(..), CharLabel::Spin(..)) => Ok(ctx.engine.decompose_spin_product(&spin_label(a)?, &spin_label(b)?)?),
        (CharLabel::Ordinary(m), CharLabel::Spin(..)) | (CharLabel::Spin(..), CharLabel::Ordinary(m)) => {
            let s = if a.is_spin() { a } else { b };
            Ok(ctx.engine.decompose_mixed(m, &spin_label(s)?)?)
        }
        _ => {
            let kind = match a {
                CharLabel::Alternating(..) if matches!(b, CharLabel::Alternating(..)) => GroupKind::An,
                _ => GroupKind::TildeAn,
            };
            let n = a.partition().n();
            let t = ctx.engine.cached_table(kind, n)?;
            let row = |l: &CharLabel| t.row(l).ok_or_else(|| Failure::Usage(format!("{l} is not an irreducible of {kind}{n}")));
            Ok(decompose(&row(a)?.product(row(b)?), &t)?)
        }
    }
}

fn decompose_cmd(ctx: &Ctx, a: DecomposeArgs) -> Outcome {
    let d = if let Some(l) = a.square {
        product(ctx, &l, &l)?
    } else if let Some(v) = a.product {
        product(ctx, &v[0], &v[1])?
    } else if let Some(v) = a.mixed {
        if !matches!(v[0], CharLabel::Ordinary(_)) || !v[1].is_spin() {
            return Err(Failure::Usage("--mixed takes an ordinary label and a spin label".into()));
        }
        product(ctx, &v[0], &v[1])?
    } else {
        return Err(Failure::Usage("nothing to decompose".into()));
    };
    ctx.emit(&d, || Rows::from_tsv(&format!("multiplicity\tcharacter\n{}", d.to_tsv())));
    Ok(Status::Ok)
}

fn verify_cmd(ctx: &Ctx, suite: Suite, limit: usize) -> Outcome {
    let checks = verify::run(ctx.engine, suite, limit, &ctx.limits)?;
    ctx.emit(&checks, || {
        let mut r = Rows::new(["status", "check", "detail"]);
        for c in &checks {
            let detail = if c.passed { String::new() } else { c.detail.clone() };
            r.push([if c.passed { "PASS" } else { "FAIL" }.to_string(), c.name.clone(), detail]);
        }
        r
    });
    Ok(if checks.iter().all(|c| c.passed) { Status::Ok } else { Status::Mismatch })
}

#[derive(Serialize)]
struct TableOut {
    group: GroupKind,
    n: usize,
    classes: Vec<ClassLabel>,
    class_sizes: Vec<String>,
    rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    character: CharLabel,
    values: Vec<ExactValue>,
}

fn table(ctx: &Ctx, group: GroupKind, n: usize) -> Outcome {
    let t = ctx.engine.cached_table(group, n)?;
    let c = t.context();
    let out = TableOut {
        group,
        n,
        classes: c.classes().to_vec(),
        class_sizes: c.sizes().iter().map(|s| s.to_string()).collect(),
        rows: t.iter().map(|(l, r)| TableRow { character: l.clone(), values: r.values().to_vec() }).collect(),
    };
    ctx.emit(&out, || Rows::from_tsv(&t.to_tsv()));
    Ok(Status::Ok)
}

fn saxl(ctx: &Ctx, k: usize, spin: bool, limit: Option<usize>) -> Outcome {
    let v = if spin {
        ctx.engine.verify_spin_saxl(k, limit.unwrap_or(saxllab::scans::SPIN_SAXL_VERIFY_LIMIT))?
    } else {
        ctx.engine.verify_saxl(k, limit.unwrap_or(saxllab::scans::SAXL_VERIFY_LIMIT))?
    };
    ctx.emit(&v, || {
        let mut r = Rows::new(["k", "n", "characters", "missing", "criterion", "hooks", "two_part"]);
        let missing = v.missing.iter().map(|m| format!("[{m}]")).collect::<Vec<_>>().join(" ");
        r.push([
            v.k.to_string(),
            v.n.to_string(),
            v.total.to_string(),
            if missing.is_empty() { "-".into() } else { missing },
            v.criterion_ok.to_string(),
            v.hooks_ok.to_string(),
            v.two_part_ok.to_string(),
        ]);
        r
    });
    Ok(if v.verified() && v.criterion_ok && v.hooks_ok { Status::Ok } else { Status::Mismatch })
}

fn parity(ctx: &Ctx, k: usize, limit: usize) -> Outcome {
    let v = ctx.engine.parity_check(k, limit)?;
    ctx.emit(&v, || {
        let mut r = Rows::new(["k", "alpha", "characters", "failures"]);
        r.push([v.k.to_string(), format!("({})", v.alpha), v.total.to_string(), v.failures.len().to_string()]);
        r
    });
    Ok(if v.failures.is_empty() { Status::Ok } else { Status::Mismatch })
}

fn conjecture(ctx: &Ctx, target: ConjectureTarget, n: usize, limit: usize) -> Outcome {
    let w = ctx.engine.conjecture_sweep(n, target, limit)?;
    if w.is_empty() {
        eprintln!("no witnesses for n = {n}");
    }
    ctx.emit(&w, || {
        let mut r = Rows::new(["witness"]);
        for l in &w {
            r.push([l]);
        }
        r
    });
    Ok(Status::Ok)
}

fn pairs(ctx: &Ctx, group: GroupKind, n: usize, max_size: usize) -> Outcome {
    let t = ctx.engine.cached_table(group, n)?;
    let found: Vec<CriticalPair> = find_critical_pairs(&t, max_size)?;
    ctx.emit(&found, || {
        let mut r = Rows::new(["x", "y", "detecting", "characters"]);
        for p in &found {
            let chars = p.differing.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
            r.push([p.x_label.to_string(), p.y_label.to_string(), p.detecting.to_string(), chars]);
        }
        r
    });
    Ok(Status::Ok)
}
