//! Command-line driver: `verify` runs named verification suites and exits
//! nonzero on any mismatch; `compute` prints operators, Bethe vectors,
//! chamber tables, and twisted convolution operators in fixed canonical
//! text forms.
//!
//! Exit codes: `0` everything passed, `1` at least one verification
//! mismatch, `2` usage error (unknown suite or model, length over the
//! suite's cap, invalid flag combination, unwritable output path).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fivevertex::gkmschubert::schubert_family;
use fivevertex::quantumcoha::{gamma_all, GammaSign};
use fivevertex::suites::{find, registry, suite_names, Suite, SuiteOptions};
use fivevertex::ybops::{bethe_normalized, bethe_vector, triangular_key, yb_generator};
use fivevertex::{
    Model, OpTag, Permutation, Report, SparseOperator, SpinWord, TensorVector, VarSet,
};
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Parser)]
#[command(
    name = "fivevertex",
    version,
    about = "Exact verification and computation for two five-vertex models \
             and the equivariant Schubert calculus they encode"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites; any mismatch makes the exit code 1.
    Verify(VerifyArgs),
    /// Print a canonical object deterministically.
    Compute(ComputeArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name from the registry, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Chain length; omit to run each suite's default ladder.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Restrict to one model (osc or vic) where a suite distinguishes them.
    #[arg(long)]
    model: Option<String>,
    /// Run the suite's seeded spoiler instead; the run must then fail.
    #[arg(long)]
    perturb: bool,
    /// Seed for spoiler choices and sampled inputs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads across independent suites.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output format for the report.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// What to compute.
    #[arg(value_enum)]
    what: What,
    /// Chain length (required).
    #[arg(long = "N")]
    n: Option<usize>,
    /// Model for model-dependent objects (default osc).
    #[arg(long)]
    model: Option<String>,
    /// Operator selector: A, B, C or D for `operator`; a sign and power
    /// such as +1 or -2 for `gamma`.
    #[arg(long, allow_hyphen_values = true)]
    tag: Option<String>,
    /// Basis for `operator`: standard or bethe.
    #[arg(long, default_value = "standard")]
    basis: String,
    /// Comma-separated zero positions of the Bethe word for `bethe`.
    #[arg(long)]
    zeros: Option<String>,
    /// Chamber twist for `schubert`: `e` or a word such as s1 or s2s1.
    #[arg(long, default_value = "e")]
    twist: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum What {
    Operator,
    Bethe,
    Schubert,
    Gamma,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run on explicit arguments (first one is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Compute(a) => cmd_compute(a),
    }
}

fn parse_model(s: Option<&str>) -> Result<Option<Model>, String> {
    match s {
        None => Ok(None),
        Some(s) => Model::parse(s)
            .map(Some)
            .ok_or_else(|| format!("unknown model '{s}' (expected osc or vic)")),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn cmd_verify(a: VerifyArgs) -> i32 {
    let suites: Vec<Box<dyn Suite>> = if a.suite == "all" {
        registry()
    } else {
        match find(&a.suite) {
            Some(s) => vec![s],
            None => {
                return usage(&format!(
                    "unknown suite '{}'; known suites: {}, all",
                    a.suite,
                    suite_names().join(", ")
                ))
            }
        }
    };
    let model = match parse_model(a.model.as_deref()) {
        Ok(m) => m,
        Err(e) => return usage(&e),
    };
    if let Some(n) = a.n {
        if n < 1 {
            return usage("N must be at least 1");
        }
        if a.suite != "all" {
            if let Some(s) = suites.iter().find(|s| n > s.cap()) {
                return usage(&format!(
                    "N={n} exceeds the cap {} of suite {}",
                    s.cap(),
                    s.name()
                ));
            }
        }
    }
    if a.perturb {
        if let Some(s) = suites.iter().find(|s| !s.perturbable()) {
            return usage(&format!(
                "suite {} has no perturbed variant; perturbable suites: {}",
                s.name(),
                registry()
                    .iter()
                    .filter(|s| s.perturbable())
                    .map(|s| s.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    }
    // with `all`, suites whose cap is below the requested length are skipped
    let suites: Vec<Box<dyn Suite>> = match a.n {
        Some(n) => suites
            .into_iter()
            .filter(|s| {
                let keep = n <= s.cap();
                if !keep {
                    eprintln!("note: skipping suite {} (cap {} < N={n})", s.name(), s.cap());
                }
                keep
            })
            .collect(),
        None => suites,
    };
    let opt = SuiteOptions {
        n: a.n,
        model,
        perturb: a.perturb,
        seed: a.seed,
    };
    let reports = run_pool(&suites, &opt, a.jobs.max(1));
    let text = render_reports(&reports, a.format);
    if let Err(e) = write_out(a.out.as_deref(), &text) {
        return usage(&format!("cannot write output: {e}"));
    }
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

/// Dispatch suites to a fixed-size worker pool; reports come back in
/// registry order regardless of scheduling.
fn run_pool(suites: &[Box<dyn Suite>], opt: &SuiteOptions, jobs: usize) -> Vec<Report> {
    let jobs = jobs.min(suites.len()).max(1);
    if jobs == 1 {
        return suites.iter().flat_map(|s| s.run(opt)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Vec<Report>>> = suites.iter().map(|_| Mutex::new(Vec::new())).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= suites.len() {
                    break;
                }
                let reports = suites[i].run(opt);
                *slots[i].lock().expect("worker slot") = reports;
            });
        }
    });
    slots
        .into_iter()
        .flat_map(|m| m.into_inner().expect("worker slot"))
        .collect()
}

fn render_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
            serde_json::to_string_pretty(&v).expect("report serialization") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s += &format!(
                    "{} suite={} model={} N={} mismatches={} elapsed_ms={}\n",
                    if r.passed() { "pass" } else { "FAIL" },
                    r.suite,
                    r.model.as_deref().unwrap_or("-"),
                    r.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                    r.mismatches.len(),
                    r.elapsed_ms
                );
                for m in &r.mismatches {
                    s += &format!(
                        "  {} row={} col={} lhs={} rhs={}\n",
                        m.relation.as_deref().unwrap_or("-"),
                        m.row,
                        m.col,
                        m.lhs,
                        m.rhs
                    );
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            s += &if failed == 0 {
                format!("all {} reports passed\n", reports.len())
            } else {
                format!("{failed} of {} reports FAILED\n", reports.len())
            };
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,model,N,status,relation,row,col,lhs,rhs\n");
            for r in reports {
                let model = r.model.as_deref().unwrap_or("-");
                let n = r.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
                s += &csv_row(&[&r.suite, model, &n, &r.status, "", "", "", "", ""]);
                for m in &r.mismatches {
                    s += &csv_row(&[
                        &r.suite,
                        model,
                        &n,
                        &r.status,
                        m.relation.as_deref().unwrap_or(""),
                        &m.row,
                        &m.col,
                        &m.lhs,
                        &m.rhs,
                    ]);
                }
            }
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[&str]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",") + "\n"
}

/// One record of a computed object: row label, column label (`-` for
/// vectors), and the exact entry text.
type Record = (String, String, String);

fn cmd_compute(a: ComputeArgs) -> i32 {
    let Some(n) = a.n else {
        return usage("--N is required for compute");
    };
    if n < 1 {
        return usage("N must be at least 1");
    }
    let cap = match a.what {
        What::Operator | What::Bethe | What::Schubert => 5,
        What::Gamma => 4,
    };
    if n > cap {
        return usage(&format!("N={n} exceeds the compute cap {cap}"));
    }
    let model = match parse_model(a.model.as_deref()) {
        Ok(m) => m.unwrap_or(Model::Osc),
        Err(e) => return usage(&e),
    };
    let records = match a.what {
        What::Operator => compute_operator(n, model, a.tag.as_deref(), &a.basis),
        What::Bethe => compute_bethe(n, a.zeros.as_deref()),
        What::Schubert => compute_schubert(n, &a.twist),
        What::Gamma => compute_gamma(n, a.tag.as_deref()),
    };
    let records = match records {
        Ok(r) => r,
        Err(e) => return usage(&e),
    };
    let text = render_records(&records, a.format);
    if let Err(e) = write_out(a.out.as_deref(), &text) {
        return usage(&format!("cannot write output: {e}"));
    }
    0
}

fn operator_records(op: &SparseOperator) -> Vec<Record> {
    op.entries()
        .into_iter()
        .map(|(row, col, f)| (row.to_string(), col.to_string(), f.to_string()))
        .collect()
}

fn compute_operator(
    n: usize,
    model: Model,
    tag: Option<&str>,
    basis: &str,
) -> Result<Vec<Record>, String> {
    let tag = tag.ok_or("--tag is required for operator (A, B, C or D)")?;
    let tag = OpTag::parse(tag).ok_or_else(|| format!("unknown tag '{tag}' (A, B, C or D)"))?;
    let vs = VarSet::chain(n);
    let op = match basis {
        "standard" => yb_generator(model, &vs, n, tag),
        "bethe" => operator_in_bethe_basis(model, &vs, n, tag)?,
        other => return Err(format!("unknown basis '{other}' (standard or bethe)")),
    };
    Ok(operator_records(&op))
}

/// Expand a vector over the normalized Bethe family by the triangular solve.
fn bethe_expand(vs: &VarSet, n: usize, v: &TensorVector) -> Result<TensorVector, String> {
    let mut words = SpinWord::all(n);
    words.sort_by_key(triangular_key);
    let mut residual = v.clone();
    let mut coords = TensorVector::zero(vs, n);
    for lam in words {
        let b = bethe_normalized(vs, n, lam);
        let diag = b
            .get(&lam)
            .inv()
            .map_err(|_| "Bethe diagonal must be invertible".to_string())?;
        let c = residual.get(&lam).mul(&diag);
        if !c.is_zero() {
            residual = residual.sub(&b.scale(&c));
            coords.add_to(lam, c);
        }
    }
    if residual.is_zero() {
        Ok(coords)
    } else {
        Err("expansion did not exhaust the vector".to_string())
    }
}

fn operator_in_bethe_basis(
    model: Model,
    vs: &VarSet,
    n: usize,
    tag: OpTag,
) -> Result<SparseOperator, String> {
    let op = yb_generator(model, vs, n, tag);
    let mut out = SparseOperator::zero(vs, n);
    for col in SpinWord::all(n) {
        let image = op.apply(&bethe_normalized(vs, n, col));
        let coords = bethe_expand(vs, n, &image)?;
        for (row, f) in coords.iter() {
            out.set(*row, col, f.clone());
        }
    }
    Ok(out)
}

fn compute_bethe(n: usize, zeros: Option<&str>) -> Result<Vec<Record>, String> {
    let mut positions: Vec<usize> = Vec::new();
    if let Some(s) = zeros {
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let p: usize = part
                .trim()
                .parse()
                .map_err(|_| format!("bad zero position '{part}'"))?;
            if p < 1 || p > n {
                return Err(format!("zero position {p} out of range 1..={n}"));
            }
            if positions.contains(&p) {
                return Err(format!("zero position {p} repeated"));
            }
            positions.push(p);
        }
    }
    let vs = VarSet::chain(n);
    let ones: Vec<usize> = (1..=n).filter(|p| !positions.contains(p)).collect();
    let word = SpinWord::from_ones(n, &ones);
    let v = bethe_vector(&vs, n, word);
    Ok(v.iter()
        .map(|(w, f)| (w.to_string(), "-".to_string(), f.to_string()))
        .collect())
}

fn parse_twist(n: usize, twist: &str) -> Result<Permutation, String> {
    let cleaned = twist.trim();
    if cleaned.is_empty() || cleaned == "e" || cleaned == "id" {
        return Ok(Permutation::identity(n));
    }
    let mut word: Vec<u16> = Vec::new();
    for part in cleaned
        .split(|c: char| c == 's' || c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
    {
        let i: u16 = part
            .parse()
            .map_err(|_| format!("bad twist '{twist}': expected e or a word such as s1 or s2s1"))?;
        if i < 1 || (i as usize) >= n {
            return Err(format!("twist index {i} out of range 1..{n}"));
        }
        word.push(i);
    }
    Ok(Permutation::from_word(n, &word))
}

fn compute_schubert(n: usize, twist: &str) -> Result<Vec<Record>, String> {
    let w = parse_twist(n, twist)?;
    let vs = VarSet::chain(n);
    let mut records = Vec::new();
    for n_ones in 0..=n {
        let fam = schubert_family(&vs, n, n_ones, &w);
        for (lam, cls) in &fam {
            for mu in SpinWord::all_weight(n, n_ones) {
                records.push((lam.to_string(), mu.to_string(), cls.get(&mu).to_string()));
            }
        }
    }
    Ok(records)
}

fn compute_gamma(n: usize, tag: Option<&str>) -> Result<Vec<Record>, String> {
    let tag = tag.ok_or("--tag is required for gamma (a sign and power such as +1 or -2)")?;
    let (sign, rest) = match tag.chars().next() {
        Some('+') => (GammaSign::Plus, &tag[1..]),
        Some('-') => (GammaSign::Minus, &tag[1..]),
        _ => return Err(format!("bad gamma tag '{tag}': expected +j or -j")),
    };
    let j: u32 = rest
        .parse()
        .map_err(|_| format!("bad gamma power '{rest}' in tag '{tag}'"))?;
    let vs = VarSet::chain(n);
    Ok(operator_records(&gamma_all(&vs, n, sign, j)))
}

fn render_records(records: &[Record], format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            for (row, col, entry) in records {
                s += &format!("{row}  {col}  {entry}\n");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("row word,column word,entry text\n");
            for (row, col, entry) in records {
                s += &csv_row(&[row, col, entry]);
            }
            s
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = records
                .iter()
                .map(|(row, col, entry)| {
                    serde_json::json!({"row": row, "col": col, "entry": entry})
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("record serialization") + "\n"
        }
    }
}

fn write_out(path: Option<&std::path::Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_parsing() {
        assert!(parse_twist(3, "e").unwrap().is_identity());
        assert_eq!(
            parse_twist(3, "s1").unwrap(),
            Permutation::adjacent(3, 1)
        );
        assert_eq!(
            parse_twist(3, "s1s2").unwrap(),
            Permutation::adjacent(3, 1).after(&Permutation::adjacent(3, 2))
        );
        assert_eq!(parse_twist(3, "s1,s2").unwrap(), parse_twist(3, "s1 s2").unwrap());
        assert!(parse_twist(3, "s3").is_err());
        assert!(parse_twist(3, "sx").is_err());
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("a\"b"), "\"a\"\"b\"");
    }

    #[test]
    fn bethe_basis_diagonalizes_a() {
        // in the Bethe basis the `A` block must be diagonal
        let vs = VarSet::chain(3);
        let op = operator_in_bethe_basis(Model::Osc, &vs, 3, OpTag::A).unwrap();
        for (row, col, _) in op.entries() {
            assert_eq!(row, col, "off-diagonal entry at ({row}, {col})");
        }
    }
}
